"""Packaged self-checks: relations, invariant vector, orbit claim, fixtures.

These mirror the core acceptance checks so an installed build can be
validated without the test suite (`qmono selftest`).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List

from . import group, loops, orbits, representation
from .group import ALPHA, BETA, KAPPA, GroupWord
from .representation import Parity

_SEED = 20240824


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def random_word(rng: random.Random, max_len: int = 20) -> GroupWord:
    raw = []
    for _ in range(rng.randrange(max_len + 1)):
        gen = rng.choice((ALPHA, BETA, KAPPA))
        exp = 1 if gen == KAPPA else rng.choice((1, -1))
        raw.append((gen, exp))
    return group.normalize(raw)


def check_relations() -> CheckResult:
    ok = (group.normalize([(KAPPA, 1), (ALPHA, 1)])
          == group.normalize([(BETA, 1), (KAPPA, 1)]))
    ok = ok and group.normalize([(KAPPA, 1), (KAPPA, 1)]).is_identity()
    for parity in Parity:
        ma = representation.generator_matrix(ALPHA, parity)
        mb = representation.generator_matrix(BETA, parity)
        mk = representation.generator_matrix(KAPPA, parity)
        ok = ok and (mk @ ma) == (mb @ mk)
        ok = ok and (mk @ mk) == representation.IDENTITY_MATRIX
    return CheckResult("relations", ok)


def check_invariant_vector(count: int = 1000) -> CheckResult:
    rng = random.Random(_SEED)
    for parity in Parity:
        fixed = representation.invariant_line(parity)
        for _ in range(count):
            g = random_word(rng)
            if representation.apply(g, fixed, parity) != fixed:
                return CheckResult("invariant-vector", False,
                                   f"word {group.format_word(g)!r} moves {fixed}")
    return CheckResult("invariant-vector", True)


def check_orbit_claim(box_radius: int = 8, max_word_len: int = 12) -> CheckResult:
    report = orbits.verify_orbit_claim(box_radius, max_word_len, Parity.EVEN)
    ok = report.ok()
    detail = "" if ok else (f"missing {sorted(report.missing)}, "
                            f"extraneous {sorted(report.extraneous)}")
    return CheckResult("orbit-claim", ok, detail)


def check_fixtures(n: int = 4, samples: int = 256) -> CheckResult:
    expected = {
        "alpha": group.parse_word("a"),
        "beta": group.parse_word("b"),
        "kappa": group.parse_word("k"),
        "constant": group.parse_word(""),
        "kappa-squared": group.parse_word(""),
        "alpha-reversed": group.parse_word("a^-1"),
    }
    for m in (samples, 2 * samples):
        built = {
            "alpha": loops.make_alpha_loop(n, m=m),
            "beta": loops.make_beta_loop(n, m=m),
            "kappa": loops.make_kappa_loop(n, m=m),
            "constant": loops.make_constant_loop(n, m=m),
        }
        built["kappa-squared"] = loops.concat(built["kappa"], built["kappa"])
        built["alpha-reversed"] = loops.reverse(built["alpha"])
        for name, loop in built.items():
            word = loops.classify(loop).word
            if word != expected[name]:
                return CheckResult(
                    "classifier-fixtures", False,
                    f"{name} at {m} samples gave {group.format_word(word)!r}")
    return CheckResult("classifier-fixtures", True)


def run_selftest() -> List[CheckResult]:
    return [
        check_relations(),
        check_invariant_vector(),
        check_orbit_claim(),
        check_fixtures(),
    ]
