"""Independent checks: Alexander polynomial from Burau, Kashaev invariant of 4_1."""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import sympy

from .verma import BraidWord


@dataclass(frozen=True)
class IntLaurent:
    """sum_k coeffs[k] t^(low + k) with integer coefficients."""

    low: int
    coeffs: tuple

    def __post_init__(self):
        c = list(self.coeffs)
        low = self.low
        while c and c[-1] == 0:
            c.pop()
        while c and c[0] == 0:
            c.pop(0)
            low += 1
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))
        object.__setattr__(self, "low", low if c else 0)

    @classmethod
    def from_dict(cls, d: dict) -> "IntLaurent":
        if not any(d.values()):
            return cls(0, ())
        lo, hi = min(d), max(d)
        return cls(lo, tuple(d.get(k, 0) for k in range(lo, hi + 1)))

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> "IntLaurent":
        return cls(exp, (c,))

    def as_dict(self) -> dict:
        return {self.low + k: c for k, c in enumerate(self.coeffs) if c}

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def __add__(self, other):
        d = self.as_dict()
        for k, c in other.as_dict().items():
            d[k] = d.get(k, 0) + c
        return IntLaurent.from_dict(d)

    def __neg__(self):
        return IntLaurent(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        d: dict = {}
        for a, x in self.as_dict().items():
            for b, y in other.as_dict().items():
                d[a + b] = d.get(a + b, 0) + x * y
        return IntLaurent.from_dict(d)

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, t):
        return sum(c * t ** (self.low + k) for k, c in enumerate(self.coeffs))

    def substitute_power(self, k: int) -> dict:
        """Coefficients after t -> t^k, as {exponent: coefficient}."""
        return {k * e: c for e, c in self.as_dict().items()}

    def to_sympy(self, t):
        return sum(c * t ** e for e, c in self.as_dict().items())

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.as_dict().items()):
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if mono and abs(c) == 1:
                term = mono if c > 0 else f"-{mono}"
            else:
                term = f"{c}*{mono}" if mono else str(c)
            parts.append(term)
        return " + ".join(parts).replace("+ -", "- ")


ZERO, ONE = IntLaurent(0, ()), IntLaurent(0, (1,))
T, TINV = IntLaurent(1, (1,)), IntLaurent(-1, (1,))


def _identity(d):
    return [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]


def burau_generator(i: int, strands: int, inverse: bool = False):
    """Reduced Burau matrix of sigma_i^(+-1), (n-1) x (n-1) over IntLaurent."""
    d = strands - 1
    m = _identity(d)
    r = i - 1
    if not inverse:
        m[r][r] = -T
        if r > 0:
            m[r][r - 1] = T
        if r < d - 1:
            m[r][r + 1] = ONE
    else:
        m[r][r] = -TINV
        if r > 0:
            m[r][r - 1] = ONE
        if r < d - 1:
            m[r][r + 1] = TINV
    return m


def matmul(a, b):
    return [[sum((a[i][k] * b[k][j] for k in range(len(b))), ZERO) for j in range(len(b[0]))]
            for i in range(len(a))]


def burau_matrix(word: BraidWord):
    m = _identity(word.strands - 1)
    for x in word.letters:
        m = matmul(m, burau_generator(abs(x), word.strands, inverse=x < 0))
    return m


def _from_sympy(expr, t) -> IntLaurent:
    num, den = sympy.fraction(sympy.cancel(sympy.together(expr)))
    pd = sympy.Poly(den, t)
    if len(pd.terms()) != 1:
        raise ArithmeticError("not a Laurent polynomial")
    (dexp,), dc = pd.terms()[0]
    d = {}
    for (e,), c in sympy.Poly(num, t).terms():
        q = sympy.Rational(c, dc)
        if q.q != 1:
            raise ArithmeticError("non-integer coefficient")
        d[e - dexp] = int(q)
    return IntLaurent.from_dict(d)


def alexander_burau(word: BraidWord) -> IntLaurent:
    """Symmetric Alexander polynomial of the closure, with value +1 at t = 1."""
    if word.components() != 1:
        raise ValueError("the closure has more than one component")
    n = word.strands
    if n == 1:
        return ONE
    t = sympy.Symbol("t")
    B = burau_matrix(word)
    M = sympy.Matrix(n - 1, n - 1, lambda i, j: (ONE if i == j else ZERO).to_sympy(t) - B[i][j].to_sympy(t))
    quotient = M.det(method="berkowitz") / sum(t ** k for k in range(n))
    delta = _from_sympy(quotient, t)
    span = delta.low + delta.high
    if span % 2:
        raise ArithmeticError("Alexander polynomial cannot be symmetrised")
    delta = delta * IntLaurent.monomial(-span // 2)
    if delta(1) < 0:
        delta = -delta
    return delta


def kashaev_figure_eight(N: int, omega: complex | None = None) -> float:
    """sum_k |(omega)_k|^2 with (omega)_k = prod_{j<=k} (1 - omega^j)."""
    if omega is None:
        omega = cmath.exp(2j * cmath.pi / N)
    total, prod = 0.0, 1.0 + 0j
    for k in range(N):
        total += abs(prod) ** 2
        prod *= 1 - omega ** (k + 1)
    return total
