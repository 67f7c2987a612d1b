"""Hyperplane/quadric incidence predicates.

The quadric is fixed to the standard affine form z1^2 + ... + zn^2 = 1.
A hyperplane {<c, z> = d} (complex bilinear pairing, no conjugation) is
tangent to it iff d^2 = q and asymptotic iff q = 0, where q = sum c_i^2.
Both criteria are evaluated on the scale-normalized representative with
|c| = 1, so all predicates are invariant under (c, d) -> (lambda c,
lambda d).
"""

from __future__ import annotations

import os

import numpy as np

from .errors import ZeroCoefficientVector

DEFAULT_TOL = 1e-9


def default_tol() -> float:
    """Default tolerance, overridable through the QMONO_TOL env var."""
    value = os.environ.get("QMONO_TOL")
    return float(value) if value else DEFAULT_TOL


class Hyperplane:
    """Affine complex hyperplane {z : sum c_i z_i = d}, up to scale."""

    __slots__ = ("c", "d")

    def __init__(self, c, d):
        c = np.asarray(c, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ZeroCoefficientVector("coefficient vector must be a nonempty 1-d array")
        if not np.any(c):
            raise ZeroCoefficientVector("coefficient vector is zero")
        self.c = c
        self.d = complex(d)

    @property
    def n(self) -> int:
        return self.c.size

    def scaled(self, factor: complex) -> "Hyperplane":
        if factor == 0:
            raise ZeroCoefficientVector("scale factor must be nonzero")
        return Hyperplane(self.c * factor, self.d * factor)

    def normalized(self) -> "Hyperplane":
        """Representative with |c| = 1 (Hermitian norm; positive real scale)."""
        return self.scaled(1.0 / np.linalg.norm(self.c))

    def coefficient_vector(self) -> np.ndarray:
        """Coefficients and offset stacked as one vector, for scale fitting."""
        return np.append(self.c, self.d)

    def to_dict(self) -> dict:
        return {
            "c": [[z.real, z.imag] for z in self.c],
            "d": [self.d.real, self.d.imag],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Hyperplane":
        c = [complex(re, im) for re, im in data["c"]]
        re, im = data["d"]
        return cls(c, complex(re, im))

    def __repr__(self) -> str:
        return f"Hyperplane(c={self.c!r}, d={self.d!r})"


def quad_form(c) -> complex:
    """q = sum c_i^2, the dual-quadric evaluation of the direction vector."""
    c = np.asarray(c, dtype=complex)
    if not np.any(c):
        raise ZeroCoefficientVector("coefficient vector is zero")
    return complex(np.sum(c * c))


def is_tangent(h: Hyperplane, tol: float | None = None) -> bool:
    """True iff the hyperplane is tangent to the quadric: d^2 = q."""
    if tol is None:
        tol = default_tol()
    hn = h.normalized()
    q = quad_form(hn.c)
    d2 = hn.d * hn.d
    return abs(d2 - q) <= tol * max(abs(d2), abs(q), 1.0)


def is_asymptotic(h: Hyperplane, tol: float | None = None) -> bool:
    """True iff the hyperplane's direction is isotropic: q = 0."""
    if tol is None:
        tol = default_tol()
    hn = h.normalized()
    return abs(quad_form(hn.c)) <= tol


def in_general_position(h: Hyperplane, tol: float | None = None) -> bool:
    return not is_tangent(h, tol) and not is_asymptotic(h, tol)


def discriminant_margin(h: Hyperplane) -> float:
    """Distance proxy to the discriminant: min(|d^2 - q|, |q|) at |c| = 1."""
    hn = h.normalized()
    q = quad_form(hn.c)
    return min(abs(hn.d * hn.d - q), abs(q))
