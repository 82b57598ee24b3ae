"""Coefficient specialisations.

``eta`` evaluates a :class:`ScalarExt` numerically at q = xi, s = xi^lambda,
t = xi^(lambda^2 / 2).  ``psi`` and ``gamma`` send Laurent polynomials in the
homological variables (x, d) into the working ring; the two conventions are
kept side by side because they disagree on the sign of the exponents.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Mapping

from .scalar import ScalarExt


class DegenerateSpecialization(ZeroDivisionError):
    """A denominator vanishes under the specialisation (lambda not generic)."""


@dataclass(frozen=True)
class SpecializationMap:
    kind: str  # "psi" | "gamma" | "eta"
    lam: complex | None = None

    def __post_init__(self):
        if self.kind not in ("psi", "gamma", "eta"):
            raise ValueError(f"unknown specialisation kind {self.kind!r}")
        if self.kind == "eta" and self.lam is None:
            raise ValueError("eta needs a value of lambda")


def eta_values(level: int, lam: complex) -> tuple[complex, complex]:
    """Images of s and t under eta: (xi^lam, xi^(lam^2/2)), principal branch."""
    s = cmath.exp(1j * cmath.pi * lam / level)
    t = cmath.exp(1j * cmath.pi * lam * lam / (2 * level))
    return s, t


def specialize(x: ScalarExt, smap: SpecializationMap | complex, tol: float = 1e-12) -> complex:
    if not isinstance(smap, SpecializationMap):
        smap = SpecializationMap("eta", complex(smap))
    if smap.kind != "eta":
        raise ValueError("numeric specialisation needs kind 'eta'")
    s, t = eta_values(x.level, complex(smap.lam))
    F = x.field
    from . import poly

    den = poly.evaluate([F.to_complex(c) for c in x.den], s)
    scale = max(1.0, max((abs(F.to_complex(c)) for c in x.den), default=1.0))
    if abs(den) <= tol * scale:
        raise DegenerateSpecialization(f"denominator vanishes at lambda={smap.lam}")
    num = poly.evaluate([F.to_complex(c) for c in x.num], s)
    return num / den * s**x.shift * t**x.t_exp


def specialize_xd(coeffs: Mapping[tuple[int, int], int], kind: str, level: int) -> ScalarExt:
    """Image of sum c_(a,b) x^a d^b under psi or gamma.

    psi:   x -> s^-2 (= q^-2 lambda), d -> -q^2
    gamma: x -> s^2,                  d -> -q^-2
    """
    if kind == "psi":
        xs, dq = -2, 2
    elif kind == "gamma":
        xs, dq = 2, -2
    else:
        raise ValueError(f"unknown coefficient map {kind!r}")
    acc = ScalarExt.zero(level)
    for (a, b), c in coeffs.items():
        if c:
            acc = acc + ScalarExt.monomial(level, q_exp=dq * b, s_exp=xs * a,
                                           coeff=c * (-1) ** (b % 2))
    return acc
