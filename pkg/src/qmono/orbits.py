"""Orbit enumeration of the monodromy group on the integer lattice.

For even parity the orbit of a basis point (1, 0) is claimed to be the
whole set {(u, v) : u - v = +-1}.  The quantity |u - v| is preserved
exactly by every generator matrix, so the claim is certified in two
halves: no reached point ever leaves the line pair (exact invariant),
and a bounded breadth-first search covers every claimed point inside a
finite box.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet

from .errors import OddParityClaim
from .group import ALPHA, BETA, KAPPA
from .representation import LatticePoint, Parity, generator_matrix


@dataclass(frozen=True)
class OrbitReport:
    start: LatticePoint
    parity: Parity
    max_word_len: int
    box_radius: int
    reached: FrozenSet[LatticePoint] = field(repr=False)
    claimed: FrozenSet[LatticePoint] = field(repr=False)
    missing: FrozenSet[LatticePoint]
    extraneous: FrozenSet[LatticePoint]

    def ok(self) -> bool:
        return not self.missing and not self.extraneous


def _step_matrices(parity: Parity):
    mats = []
    for label in (ALPHA, BETA, KAPPA):
        m = generator_matrix(label, parity)
        mats.append(m)
        inv = m.inverse()
        if inv != m:
            mats.append(inv)
    return mats


def orbit_bfs(start: LatticePoint, parity: Parity,
              max_word_len: int) -> FrozenSet[LatticePoint]:
    """Closure of {start} under all generator matrices and inverses,
    applying at most max_word_len steps.  BFS over points, deduplicated.
    """
    if max_word_len < 0:
        raise ValueError("max_word_len must be >= 0")
    mats = _step_matrices(parity)
    seen = {start}
    frontier = [start]
    for _ in range(max_word_len):
        nxt = []
        for point in frontier:
            for m in mats:
                image = m.apply(point)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
        if not nxt:
            break
        frontier = nxt
    return frozenset(seen)


def verify_orbit_claim(box_radius: int, max_word_len: int, parity: Parity,
                       start: LatticePoint = (1, 0)) -> OrbitReport:
    """Compare the BFS orbit of `start` against the set of lattice points
    in the box [-R, R]^2 with the same value of |u - v|.
    """
    if parity is Parity.ODD:
        raise OddParityClaim("the lattice orbit claim concerns even dimension")
    if box_radius < 1:
        raise ValueError("box_radius must be >= 1")
    reached = orbit_bfs(start, parity, max_word_len)
    level = abs(start[0] - start[1])
    claimed = frozenset(
        (u, v)
        for u in range(-box_radius, box_radius + 1)
        for v in range(-box_radius, box_radius + 1)
        if abs(u - v) == level
    )
    missing = claimed - reached
    extraneous = frozenset(p for p in reached if abs(p[0] - p[1]) != level)
    return OrbitReport(start=start, parity=parity, max_word_len=max_word_len,
                       box_radius=box_radius, reached=reached, claimed=claimed,
                       missing=missing, extraneous=extraneous)
