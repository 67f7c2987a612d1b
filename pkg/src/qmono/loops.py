"""Classification of sampled loops of hyperplanes into the group G.

A loop of general-position hyperplanes (c_t, d_t) is reduced to a path
in a model fiber: q_t = sum c_i(t)^2 is tracked through a continuous
square-root branch s_t, and w_t = d_t / s_t maps the two tangency
values of every parallel pencil to the punctures +1 and -1.  The class
of the loop is then

  * a kappa bit: whether the branch s returns to +lambda s_0 or to
    -lambda s_0 (the two punctures swapped after transport), and
  * a free word in a, b: the crossing word of the path w_t in
    C \\ {+1, -1}, with cuts along (1, +inf) and (-inf, -1).

Crossing conventions are fixed so that the model generator loops
(counterclockwise around +1, counterclockwise around -1, and the
rotating pencil (cos t) z1 + (sin t) z2 = 0) classify to a, b and k
respectively; the fixture tests pin them.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from . import group, representation
from .errors import (
    AsymptoticSample,
    BadParameters,
    BranchAmbiguity,
    DimensionTooSmall,
    NotClosed,
    NotGeneralPosition,
    PunctureCollision,
    UndersampledLoop,
)
from .geometry import Hyperplane, default_tol, discriminant_margin, in_general_position, quad_form
from .group import FreeWord, GroupWord
from .representation import MonodromyMatrix, Parity

# Relative tolerance for matching the continued branch against the two
# closure candidates +-lambda s_0, which are 2|s_0| apart.
_BRANCH_MATCH_RTOL = 1e-6


@dataclass(frozen=True)
class HyperplaneLoop:
    """Closed sampled path of hyperplanes with explicit closure scale.

    The last sample must equal closure_lambda times the first (up to
    tolerance); closure_lambda = None means "infer by least squares".
    """

    n: int
    samples: Tuple[Hyperplane, ...]
    closure_lambda: Optional[complex] = None

    def __post_init__(self) -> None:
        if self.n < 3:
            raise DimensionTooSmall(f"loop classification needs n >= 3, got {self.n}")
        if len(self.samples) < 2:
            raise BadParameters("a loop needs at least two samples")
        for i, h in enumerate(self.samples):
            if h.n != self.n:
                raise BadParameters(f"sample {i} has dimension {h.n}, expected {self.n}")


@dataclass(frozen=True)
class LoopDiagnostics:
    min_discriminant_margin: float
    max_relative_step: float
    crossing_count: int
    branch_flip: int


@dataclass(frozen=True)
class ClassificationResult:
    word: GroupWord
    matrix_even: MonodromyMatrix
    matrix_odd: MonodromyMatrix
    diagnostics: LoopDiagnostics


def continue_sqrt_branch(q_samples: Sequence[complex],
                         tol: float | None = None) -> List[complex]:
    """Continuous square-root branch along a path of nonzero values.

    s_0 is the principal root of q_0; each next s is the root of the
    next q nearer to the previous s.  Requires relative steps < 1 so
    the nearer root is unambiguous.
    """
    if tol is None:
        tol = default_tol()
    qs = [complex(q) for q in q_samples]
    if not qs:
        return []
    for i, q in enumerate(qs):
        if abs(q) <= tol:
            raise AsymptoticSample(f"|q| = {abs(q):.3g} at sample {i}")
    branch = [cmath.sqrt(qs[0])]
    for i in range(len(qs) - 1):
        if abs(qs[i + 1] - qs[i]) >= abs(qs[i]):
            raise UndersampledLoop(
                f"relative step {abs(qs[i + 1] - qs[i]) / abs(qs[i]):.3g} >= 1 "
                f"at sample {i}")
        root = cmath.sqrt(qs[i + 1])
        branch.append(root if abs(root - branch[-1]) <= abs(root + branch[-1])
                      else -root)
    return branch


def closure_scale(loop: HyperplaneLoop, tol: float | None = None) -> complex:
    """The scale factor lambda with last sample = lambda * first sample.

    Uses the explicit closure_lambda when present (validated), else the
    least-squares fit; raises NotClosed when the residual exceeds tol.
    """
    if tol is None:
        tol = default_tol()
    v0 = loop.samples[0].coefficient_vector()
    vm = loop.samples[-1].coefficient_vector()
    scale = float(np.linalg.norm(v0))
    if loop.closure_lambda is not None:
        lam = complex(loop.closure_lambda)
        if lam == 0:
            raise NotClosed("closure_lambda must be nonzero")
    else:
        lam = complex(np.vdot(v0, vm) / np.vdot(v0, v0))
    residual = float(np.max(np.abs(vm - lam * v0)))
    if residual > tol * scale:
        raise NotClosed(f"closure residual {residual:.3g} exceeds tolerance")
    return lam


def _normalized_samples(loop: HyperplaneLoop) -> List[Hyperplane]:
    return [h.normalized() for h in loop.samples]


def _normalized_closure(loop: HyperplaneLoop, tol: float | None) -> complex:
    # Per-sample normalization rescales the endpoints by positive reals,
    # so the closure factor picks up the ratio of coefficient norms.
    lam = closure_scale(loop, tol)
    n0 = np.linalg.norm(loop.samples[0].c)
    nm = np.linalg.norm(loop.samples[-1].c)
    return lam * float(n0) / float(nm)


def kappa_bit(loop: HyperplaneLoop, tol: float | None = None) -> int:
    """0 if the sqrt branch closes up to lambda, 1 if it flips sign."""
    samples = _normalized_samples(loop)
    lam = _normalized_closure(loop, tol)
    branch = continue_sqrt_branch([quad_form(h.c) for h in samples], tol)
    target = lam * branch[0]
    same = abs(branch[-1] - target)
    flipped = abs(branch[-1] + target)
    limit = _BRANCH_MATCH_RTOL * max(abs(target), 1e-300)
    if same <= limit and same <= flipped:
        return 0
    if flipped <= limit:
        return 1
    raise BranchAmbiguity(
        f"branch endpoint matches neither +-lambda s_0 "
        f"(residuals {same:.3g}, {flipped:.3g})")


def _sign(im: float) -> int:
    # Points exactly on the real axis count as upper half-plane; the
    # paths we care about touch the axis only between the punctures.
    return 1 if im >= 0.0 else -1


def _crossing_letters(path: Sequence[complex]) -> List[group.Letter]:
    letters: List[group.Letter] = []
    for z1, z2 in zip(path, path[1:]):
        s1, s2 = _sign(z1.imag), _sign(z2.imag)
        if s1 == s2:
            continue
        x = z1.real + (z2.real - z1.real) * (-z1.imag) / (z2.imag - z1.imag)
        upward = s2 == 1
        if x > 1.0:
            letters.append((group.ALPHA, 1 if upward else -1))
        elif x < -1.0:
            letters.append((group.BETA, -1 if upward else 1))
    return letters


def _check_puncture_distance(z1: complex, z2: complex, tol: float) -> None:
    for p in (1.0, -1.0):
        if _point_segment_distance(p, z1, z2) <= tol:
            raise PunctureCollision(f"path segment passes through {p:+.0f}")


def _point_segment_distance(p: complex, z1: complex, z2: complex) -> float:
    seg = z2 - z1
    denom = abs(seg) ** 2
    if denom == 0.0:
        return abs(p - z1)
    t = ((p - z1).real * seg.real + (p - z1).imag * seg.imag) / denom
    t = min(1.0, max(0.0, t))
    return abs(p - (z1 + t * seg))


def fiber_word(loop: HyperplaneLoop, tol: float | None = None) -> FreeWord:
    """Crossing word of the fiber path w_t = d_t / s_t, freely reduced."""
    letters, _ = _fiber_letters(loop, tol)
    return group.free_reduce(letters)


def _fiber_letters(loop: HyperplaneLoop,
                   tol: float | None) -> Tuple[List[group.Letter], List[complex]]:
    if tol is None:
        tol = default_tol()
    samples = _normalized_samples(loop)
    branch = continue_sqrt_branch([quad_form(h.c) for h in samples], tol)
    ws = [h.d / s for h, s in zip(samples, branch)]
    # Basepoint transport: close up through the origin of the model fiber.
    path = [0j] + ws + [0j]
    for z1, z2 in zip(path, path[1:]):
        _check_puncture_distance(z1, z2, tol)
    for i in range(len(ws) - 1):
        step = abs(ws[i + 1] - ws[i])
        if step >= min(abs(ws[i] - 1.0), abs(ws[i] + 1.0)):
            raise UndersampledLoop(
                f"fiber step {step:.3g} at sample {i} reaches the nearest puncture")
    return _crossing_letters(path), ws


def classify(loop: HyperplaneLoop, tol: float | None = None) -> ClassificationResult:
    """Group element of a sampled loop, with matrices and diagnostics."""
    if tol is None:
        tol = default_tol()
    samples = _normalized_samples(loop)
    for i, h in enumerate(samples):
        if not in_general_position(h, tol):
            raise NotGeneralPosition(i)
    bit = kappa_bit(loop, tol)
    letters, _ = _fiber_letters(loop, tol)
    word = group.normalize(letters + ([(group.KAPPA, 1)] if bit else []))

    qs = [quad_form(h.c) for h in samples]
    max_step = max(
        (abs(q2 - q1) / abs(q1) for q1, q2 in zip(qs, qs[1:])), default=0.0)
    diags = LoopDiagnostics(
        min_discriminant_margin=min(discriminant_margin(h) for h in samples),
        max_relative_step=max_step,
        crossing_count=len(letters),
        branch_flip=bit,
    )
    return ClassificationResult(
        word=word,
        matrix_even=representation.matrix_of(word, Parity.EVEN),
        matrix_odd=representation.matrix_of(word, Parity.ODD),
        diagnostics=diags,
    )


# ---------------------------------------------------------------------------
# Fixture loops: the model generator representatives, sampled.

def _base_direction(n: int) -> np.ndarray:
    c = np.zeros(n, dtype=complex)
    c[0] = 1.0
    return c


def _check_fixture_params(eps: float, m: int) -> None:
    if not 0.0 < eps < 1.0:
        raise BadParameters(f"eps must be in (0, 1), got {eps}")
    if m < 64:
        raise BadParameters(f"need at least 64 samples, got {m}")


def _puncture_loop_offsets(center: float, eps: float, m: int) -> List[complex]:
    """d-path 0 -> center -+ eps -> ccw circle around center -> 0."""
    approach = m // 4
    on_circle = m - 2 * approach
    sign = 1.0 if center > 0 else -1.0
    start_angle = math.pi if center > 0 else 0.0
    inner = sign * (abs(center) - eps)
    pts: List[complex] = []
    for j in range(approach):
        pts.append(complex(inner * j / approach))
    for j in range(on_circle + 1):
        angle = start_angle + 2.0 * math.pi * j / on_circle
        pts.append(center + eps * cmath.exp(1j * angle))
    for j in range(1, approach + 1):
        pts.append(complex(inner * (approach - j) / approach))
    return pts


def make_alpha_loop(n: int, eps: float = 0.25, m: int = 256) -> HyperplaneLoop:
    """Counterclockwise loop of {z1 = d} around the tangency value +1."""
    _check_fixture_params(eps, m)
    c = _base_direction(n)
    samples = tuple(Hyperplane(c, d) for d in _puncture_loop_offsets(1.0, eps, m))
    return HyperplaneLoop(n, samples, closure_lambda=1.0)


def make_beta_loop(n: int, eps: float = 0.25, m: int = 256) -> HyperplaneLoop:
    """Counterclockwise loop of {z1 = d} around the tangency value -1."""
    _check_fixture_params(eps, m)
    c = _base_direction(n)
    samples = tuple(Hyperplane(c, d) for d in _puncture_loop_offsets(-1.0, eps, m))
    return HyperplaneLoop(n, samples, closure_lambda=1.0)


def make_kappa_loop(n: int, m: int = 256) -> HyperplaneLoop:
    """Rotating pencil (cos t) z1 + (sin t) z2 = 0, t from 0 to pi."""
    if m < 64:
        raise BadParameters(f"need at least 64 samples, got {m}")
    samples = []
    for j in range(m + 1):
        t = math.pi * j / m
        c = np.zeros(n, dtype=complex)
        c[0] = math.cos(t)
        c[1] = math.sin(t)
        samples.append(Hyperplane(c, 0.0))
    return HyperplaneLoop(n, tuple(samples), closure_lambda=-1.0)


def make_constant_loop(n: int, m: int = 64) -> HyperplaneLoop:
    """Constant loop at the base hyperplane {z1 = 0}."""
    h = Hyperplane(_base_direction(n), 0.0)
    return HyperplaneLoop(n, tuple(h for _ in range(m + 1)), closure_lambda=1.0)


def concat(l1: HyperplaneLoop, l2: HyperplaneLoop,
           tol: float | None = None) -> HyperplaneLoop:
    """Concatenate loops sharing the base hyperplane up to scale."""
    if tol is None:
        tol = default_tol()
    if l1.n != l2.n:
        raise BadParameters("loops have different ambient dimensions")
    v1 = l1.samples[-1].coefficient_vector()
    v2 = l2.samples[0].coefficient_vector()
    mu = complex(np.vdot(v2, v1) / np.vdot(v2, v2))
    if mu == 0 or float(np.max(np.abs(v1 - mu * v2))) > tol * float(np.linalg.norm(v1)):
        raise BadParameters("loops do not share their junction hyperplane")
    lam1 = closure_scale(l1, tol)
    lam2 = closure_scale(l2, tol)
    samples = l1.samples + tuple(h.scaled(mu) for h in l2.samples[1:])
    return HyperplaneLoop(l1.n, samples, closure_lambda=lam1 * lam2)


def reverse(loop: HyperplaneLoop, tol: float | None = None) -> HyperplaneLoop:
    """Orientation reversal; inverts the class and the closure factor."""
    lam = closure_scale(loop, tol)
    return HyperplaneLoop(loop.n, tuple(reversed(loop.samples)),
                          closure_lambda=1.0 / lam)


# ---------------------------------------------------------------------------
# JSON wire format, shared with the CLI.

def loop_to_dict(loop: HyperplaneLoop) -> dict:
    data = {
        "n": loop.n,
        "samples": [h.to_dict() for h in loop.samples],
    }
    if loop.closure_lambda is not None:
        lam = complex(loop.closure_lambda)
        data["closure_lambda"] = [lam.real, lam.imag]
    return data


def loop_from_dict(data: dict) -> HyperplaneLoop:
    samples = tuple(Hyperplane.from_dict(s) for s in data["samples"])
    lam = data.get("closure_lambda")
    if lam is not None:
        lam = complex(lam[0], lam[1])
    return HyperplaneLoop(int(data["n"]), samples, closure_lambda=lam)
