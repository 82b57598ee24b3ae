"""The working coefficient ring: Frac(Q(xi)[s]) x t^Z.

``s`` stands for q^lambda with lambda generic, and ``t`` for the central unit
q^(lambda^2/2) carried by every crossing.  A value is stored as

    s^shift * num(s) / den(s) * t^t_exp

with ``num(0) != 0``, ``den(0) != 0`` and ``den`` monic.  Full gcd reduction
of num/den is applied lazily once the stored size exceeds ``GCD_THRESHOLD``
terms; :meth:`ScalarExt.reduced` forces it.
"""

from __future__ import annotations

from functools import lru_cache

from . import poly
from .cyclotomic import CycField, CycScalar, LevelMismatch, field, format_cyc

GCD_THRESHOLD = 64


def set_gcd_threshold(n: int) -> None:
    """Set the lazy-reduction size threshold (0 reduces after every operation)."""
    global GCD_THRESHOLD
    GCD_THRESHOLD = n


class TExponentMismatch(ValueError):
    """Raised when adding values carrying different powers of t."""


class ScalarExt:
    __slots__ = ("field", "shift", "num", "den", "t_exp")

    def __init__(self, fld: CycField, shift: int, num: tuple, den: tuple, t_exp: int = 0,
                 *, _normalized: bool = False):
        self.field = fld
        if _normalized:
            self.shift, self.num, self.den, self.t_exp = shift, num, den, t_exp
            return
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.shift, self.num, self.den, self.t_exp = 0, (), (fld.one,), 0
            return
        k = poly.low_zeros(num)
        if k:
            num = num[k:]
            shift += k
        k = poly.low_zeros(den)
        if k:
            den = den[k:]
            shift -= k
        lead = den[-1]
        if lead != fld.one:
            inv = fld.inv(lead)
            num = poly.scale(fld, num, inv)
            den = poly.scale(fld, den, inv)
        if len(den) > 1 and len(num) + len(den) > GCD_THRESHOLD:
            num, den = _cancel(fld, num, den)
        self.shift, self.num, self.den, self.t_exp = shift, num, den, t_exp

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, level: int) -> "ScalarExt":
        f = field(level)
        return cls(f, 0, (), (f.one,), 0, _normalized=True)

    @classmethod
    def one(cls, level: int) -> "ScalarExt":
        f = field(level)
        return cls(f, 0, (f.one,), (f.one,), 0, _normalized=True)

    @classmethod
    def const(cls, level: int, c) -> "ScalarExt":
        f = field(level)
        if isinstance(c, CycScalar):
            if c.field is not f:
                raise LevelMismatch("level mismatch")
            coeffs = c.coeffs
        elif isinstance(c, tuple):
            coeffs = c
        else:
            coeffs = f.from_int(c)
        if not any(coeffs):
            return cls.zero(level)
        return cls(f, 0, (coeffs,), (f.one,), 0, _normalized=True)

    @classmethod
    def monomial(cls, level: int, q_exp: int = 0, s_exp: int = 0, t_exp: int = 0,
                 coeff: int = 1) -> "ScalarExt":
        """coeff * q^q_exp * s^s_exp * t^t_exp."""
        f = field(level)
        c = f.scale(f.q_pow(q_exp), f.from_int(coeff)[0])
        if not any(c):
            return cls.zero(level)
        return cls(f, s_exp, (c,), (f.one,), t_exp, _normalized=True)

    @classmethod
    def from_laurent(cls, level: int, low: int, coeffs, t_exp: int = 0) -> "ScalarExt":
        """Laurent polynomial sum_k coeffs[k] s^(low+k) with cyclotomic coefficients."""
        f = field(level)
        cs = []
        for c in coeffs:
            if isinstance(c, CycScalar):
                cs.append(c.coeffs)
            elif isinstance(c, tuple):
                cs.append(c)
            else:
                cs.append(f.from_int(c))
        return cls(f, low, poly.strip(f, cs), (f.one,), t_exp)

    # -- properties -----------------------------------------------------------

    @property
    def level(self) -> int:
        return self.field.level

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self) -> bool:
        return bool(self.num)

    def is_laurent(self) -> bool:
        """True when, after full reduction, the denominator is 1."""
        return len(self.reduced().den) == 1

    def reduced(self) -> "ScalarExt":
        if len(self.den) == 1 or not self.num:
            return self
        num, den = _cancel(self.field, self.num, self.den)
        return ScalarExt(self.field, self.shift, num, den, self.t_exp, _normalized=True)

    def laurent_coeffs(self) -> tuple[int, list[CycScalar]]:
        """(lowest s-exponent, coefficients) of a Laurent value; raises otherwise."""
        r = self.reduced()
        if len(r.den) != 1:
            raise ValueError("value has a nontrivial s-denominator")
        return r.shift, [CycScalar(self.field, c) for c in r.num]

    def without_t(self) -> "ScalarExt":
        return ScalarExt(self.field, self.shift, self.num, self.den, 0, _normalized=True)

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other) -> "ScalarExt":
        if isinstance(other, ScalarExt):
            if other.field is not self.field:
                raise LevelMismatch(f"levels {self.level} and {other.level} differ")
            return other
        if isinstance(other, (int, CycScalar)):
            return ScalarExt.const(self.level, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.num:
            return self
        if not self.num:
            return o
        if o.t_exp != self.t_exp:
            raise TExponentMismatch(f"t^{self.t_exp} + t^{o.t_exp}")
        F = self.field
        lo = min(self.shift, o.shift)
        a = poly.shift_up(F, self.num, self.shift - lo)
        b = poly.shift_up(F, o.num, o.shift - lo)
        if self.den == o.den:
            return ScalarExt(F, lo, poly.add(F, a, b), self.den, self.t_exp)
        if len(o.den) == 1:
            return ScalarExt(F, lo, poly.add(F, a, poly.mul(F, b, self.den)), self.den, self.t_exp)
        if len(self.den) == 1:
            return ScalarExt(F, lo, poly.add(F, poly.mul(F, a, o.den), b), o.den, self.t_exp)
        num = poly.add(F, poly.mul(F, a, o.den), poly.mul(F, b, self.den))
        return ScalarExt(F, lo, num, poly.mul(F, self.den, o.den), self.t_exp)

    __radd__ = __add__

    def __neg__(self):
        return ScalarExt(self.field, self.shift, poly.neg(self.field, self.num), self.den,
                         self.t_exp, _normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not self.num or not o.num:
            return ScalarExt.zero(self.level)
        F = self.field
        t = self.t_exp + o.t_exp
        sh = self.shift + o.shift
        if len(self.den) == 1 and len(o.den) == 1:
            return ScalarExt(F, sh, poly.mul(F, self.num, o.num), self.den, t, _normalized=True)
        return ScalarExt(F, sh, poly.mul(F, self.num, o.num), poly.mul(F, self.den, o.den), t)

    __rmul__ = __mul__

    def inverse(self) -> "ScalarExt":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return ScalarExt(self.field, -self.shift, self.den, self.num, -self.t_exp)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = ScalarExt.one(self.level)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def mul_monomial(self, q_exp: int = 0, s_exp: int = 0, t_exp: int = 0) -> "ScalarExt":
        """Fast multiplication by q^q_exp s^s_exp t^t_exp."""
        if not self.num:
            return self
        F = self.field
        num = self.num
        if q_exp % F.order:
            c = F.q_pow(q_exp)
            num = tuple(F.mul(x, c) for x in num)
        return ScalarExt(F, self.shift + s_exp, num, self.den, self.t_exp + t_exp,
                         _normalized=True)

    def bar(self) -> "ScalarExt":
        """The involution q -> q^-1, s -> s^-1, t -> t^-1."""
        if not self.num:
            return self
        F = self.field
        conj = _conj_table(F.level)

        def c(x):
            out = F.zero
            for k, a in enumerate(x):
                if a:
                    out = F.add(out, F.scale(conj[k], a))
            return out

        num = tuple(c(x) for x in reversed(self.num))
        den = tuple(c(x) for x in reversed(self.den))
        sh = -self.shift - (len(self.num) - 1) + (len(self.den) - 1)
        return ScalarExt(F, sh, num, den, -self.t_exp)

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, CycScalar)):
            other = ScalarExt.const(self.level, other)
        if not isinstance(other, ScalarExt):
            return NotImplemented
        if other.field is not self.field:
            return False
        if not self.num or not other.num:
            return not self.num and not other.num
        if self.t_exp != other.t_exp:
            return False
        if self.den == other.den:
            return self.shift == other.shift and self.num == other.num
        F = self.field
        lo = min(self.shift, other.shift)
        a = poly.mul(F, poly.shift_up(F, self.num, self.shift - lo), other.den)
        b = poly.mul(F, poly.shift_up(F, other.num, other.shift - lo), self.den)
        return a == b

    def __hash__(self):
        r = self.reduced()
        return hash((self.level, r.shift, r.num, r.den, r.t_exp))

    # -- numerics and display -------------------------------------------------

    def evaluate(self, s: complex, t: complex = 1.0) -> complex:
        F = self.field
        num = poly.evaluate([F.to_complex(c) for c in self.num], s)
        den = poly.evaluate([F.to_complex(c) for c in self.den], s)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes")
        return num / den * s**self.shift * t**self.t_exp

    def __repr__(self):
        return f"ScalarExt({self})"

    def __str__(self):
        r = self.reduced()
        num = _format_laurent(r.num, r.shift)
        tpart = "" if r.t_exp == 0 else f" * t^{r.t_exp}"
        if len(r.den) == 1:
            return num + tpart
        return f"({num}) / ({_format_laurent(r.den, 0)}){tpart}"


def _cancel(F: CycField, num: tuple, den: tuple) -> tuple[tuple, tuple]:
    g = poly.gcd(F, num, den)
    if len(g) <= 1:
        return num, den
    n, r1 = poly.divmod_(F, num, g)
    d, r2 = poly.divmod_(F, den, g)
    assert not r1 and not r2
    lead = d[-1]
    if lead != F.one:
        inv = F.inv(lead)
        n = poly.scale(F, n, inv)
        d = poly.scale(F, d, inv)
    return n, d


@lru_cache(maxsize=None)
def _conj_table(level: int) -> tuple:
    F = field(level)
    return tuple(F.q_pow(-k) for k in range(F.degree))


def _format_laurent(p: tuple, low: int) -> str:
    terms = []
    for k, c in enumerate(p):
        if not any(c):
            continue
        e = low + k
        cs = format_cyc(c)
        mono = "" if e == 0 else ("s" if e == 1 else f"s^{e}")
        if not mono:
            terms.append(cs)
        elif cs == "1":
            terms.append(mono)
        elif cs == "-1":
            terms.append("-" + mono)
        elif " " in cs:
            terms.append(f"({cs})*{mono}")
        else:
            terms.append(f"{cs}*{mono}")
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


# -- quantum integers ----------------------------------------------------------

@lru_cache(maxsize=None)
def quantum_integer(level: int, k: int) -> ScalarExt:
    """[k]_q = (q^k - q^-k) / (q - q^-1) at q = xi_{2N}."""
    F = field(level)
    num = F.sub(F.q_pow(k), F.q_pow(-k))
    den = F.sub(F.q_pow(1), F.q_pow(-1))
    if level == 1:
        # q = -1: [k] = (-1)^(k+1) k
        return ScalarExt.const(level, (-1) ** (k + 1) * k)
    return ScalarExt.const(level, F.mul(num, F.inv(den)))


@lru_cache(maxsize=None)
def quantum_integer_lambda(level: int, offset: int) -> ScalarExt:
    """[lambda + offset]_q = (s q^offset - s^-1 q^-offset) / (q - q^-1)."""
    F = field(level)
    inv_d = F.inv(F.sub(F.q_pow(1), F.q_pow(-1)))
    lo = F.neg(F.mul(F.q_pow(-offset), inv_d))
    hi = F.mul(F.q_pow(offset), inv_d)
    return ScalarExt(F, -1, (lo, F.zero, hi), (F.one,), 0, _normalized=True)


@lru_cache(maxsize=None)
def quantum_factorial(level: int, k: int) -> ScalarExt:
    acc = ScalarExt.one(level)
    for j in range(1, k + 1):
        acc = acc * quantum_integer(level, j)
    return acc
