"""Exact arithmetic in the cyclotomic field Q(xi), xi = exp(2*pi*i / 2N).

Elements are stored as coefficient tuples of rationals (gmpy2.mpq) of length
phi(2N), i.e. residues modulo the 2N-th cyclotomic polynomial.  The raw tuple
functions on :class:`CycField` are the hot path used by the polynomial layer;
:class:`CycScalar` is the user-facing immutable wrapper.
"""

from __future__ import annotations

import cmath
from functools import lru_cache

from gmpy2 import mpq

ZERO = mpq(0)
ONE = mpq(1)


class LevelMismatch(ValueError):
    pass


def _poly_divexact_int(num: list[int], den: list[int]) -> list[int]:
    # integer polynomials, low-to-high, den monic
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for j, d in enumerate(den):
                num[k + j] -= c * d
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, low to high."""
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly = _poly_divexact_int(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CycField:
    """The field Q[q]/Phi_{2N}(q) for a fixed level N."""

    def __init__(self, level: int):
        if level < 1:
            raise ValueError("level must be >= 1")
        self.level = level
        self.order = 2 * level
        self.modulus = cyclotomic_polynomial(self.order)
        self.degree = len(self.modulus) - 1
        d = self.degree
        self.zero = (ZERO,) * d
        self.one = (ONE,) + (ZERO,) * (d - 1)
        # q^k mod Phi for 0 <= k < 2N; q has multiplicative order 2N
        powers = []
        cur = [ONE] + [ZERO] * (d - 1)
        for _ in range(self.order):
            powers.append(tuple(cur))
            cur = self._shift(cur)
        self._powers = tuple(powers)
        self._inv_cache: dict[tuple, tuple] = {}

    def __repr__(self) -> str:
        return f"CycField(level={self.level})"

    def _shift(self, a: list) -> list:
        # multiply by q and reduce
        top = a[-1]
        out = [ZERO] + list(a[:-1])
        if top:
            for j in range(self.degree):
                out[j] -= top * self.modulus[j]
        return out

    # -- raw tuple arithmetic -------------------------------------------------

    def q_pow(self, k: int) -> tuple:
        return self._powers[k % self.order]

    def from_int(self, n) -> tuple:
        return (mpq(n),) + (ZERO,) * (self.degree - 1)

    def is_zero(self, a: tuple) -> bool:
        return not any(a)

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: tuple, b: tuple) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple(-x for x in a)

    def scale(self, a: tuple, c) -> tuple:
        return tuple(x * c for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        d = self.degree
        if d == 1:
            return (a[0] * b[0],)
        prod = [ZERO] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        mod = self.modulus
        for k in range(2 * d - 2, d - 1, -1):
            c = prod[k]
            if c:
                base = k - d
                for j in range(d):
                    if mod[j]:
                        prod[base + j] -= c * mod[j]
        return tuple(prod[:d])

    def mul_q_pow(self, a: tuple, k: int) -> tuple:
        k %= self.order
        if k == 0:
            return a
        return self.mul(a, self._powers[k])

    def inv(self, a: tuple) -> tuple:
        hit = self._inv_cache.get(a)
        if hit is not None:
            return hit
        if not any(a):
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        d = self.degree
        # columns of the multiplication-by-a matrix; solve M y = 1
        cols = []
        cur = list(a)
        for _ in range(d):
            cols.append(list(cur))
            cur = self._shift(cur)
        rows = [[cols[j][i] for j in range(d)] + [ONE if i == 0 else ZERO] for i in range(d)]
        for c in range(d):
            p = next(r for r in range(c, d) if rows[r][c])
            rows[c], rows[p] = rows[p], rows[c]
            piv = rows[c][c]
            rows[c] = [x / piv for x in rows[c]]
            for r in range(d):
                if r != c and rows[r][c]:
                    f = rows[r][c]
                    rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
        res = tuple(rows[i][d] for i in range(d))
        if len(self._inv_cache) < 4096:
            self._inv_cache[a] = res
        return res

    def to_complex(self, a: tuple) -> complex:
        xi = cmath.exp(1j * cmath.pi / self.level)
        return complex(sum(float(c) * xi**k for k, c in enumerate(a) if c))

    def element(self, a) -> "CycScalar":
        return CycScalar(self, tuple(mpq(x) for x in a))


@lru_cache(maxsize=None)
def field(level: int) -> CycField:
    return CycField(level)


class CycScalar:
    """An element of Q(xi_{2N}); immutable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, fld: CycField, coeffs: tuple):
        if len(coeffs) != fld.degree:
            raise ValueError(f"expected {fld.degree} coefficients, got {len(coeffs)}")
        self.field = fld
        self.coeffs = coeffs

    @classmethod
    def xi(cls, level: int, power: int = 1) -> "CycScalar":
        f = field(level)
        return cls(f, f.q_pow(power))

    @classmethod
    def from_int(cls, level: int, n) -> "CycScalar":
        f = field(level)
        return cls(f, f.from_int(n))

    @property
    def level(self) -> int:
        return self.field.level

    def _coerce(self, other) -> tuple:
        if isinstance(other, CycScalar):
            if other.field is not self.field:
                raise LevelMismatch(f"levels {self.level} and {other.level} differ")
            return other.coeffs
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return CycScalar(self.field, self.field.add(self.coeffs, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return CycScalar(self.field, self.field.sub(self.coeffs, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return CycScalar(self.field, self.field.sub(b, self.coeffs))

    def __neg__(self):
        return CycScalar(self.field, self.field.neg(self.coeffs))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return CycScalar(self.field, self.field.mul(self.coeffs, b))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        return CycScalar(self.field, self.field.inv(self.coeffs))

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return CycScalar(self.field, self.field.mul(self.coeffs, self.field.inv(b)))

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = self.field.one
        base = self.coeffs
        while k:
            if k & 1:
                acc = self.field.mul(acc, base)
            base = self.field.mul(base, base)
            k >>= 1
        return CycScalar(self.field, acc)

    def __eq__(self, other):
        if isinstance(other, (CycScalar, int)):
            try:
                return self.coeffs == self._coerce(other)
            except LevelMismatch:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field.level, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def __complex__(self):
        return self.field.to_complex(self.coeffs)

    def __repr__(self):
        return f"CycScalar({format_cyc(self.coeffs)}, N={self.level})"


def format_cyc(coeffs: tuple, var: str = "xi") -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            terms.append(str(c))
        elif c == 1:
            terms.append(mono)
        elif c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
