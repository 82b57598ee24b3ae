"""The module U_N^lambda, its tensor powers and the braid action.

Basis vectors v_0..v_{N-1} with

    K v_i = q^(lambda - 2i) v_i = s q^(-2i) v_i
    E v_i = [lambda + 1 - i] v_{i-1}
    F v_i = [i + 1] v_{i+1}

Tensor products use Delta(E) = E (x) K + 1 (x) E and Delta(K) = K (x) K.
The braiding on adjacent factors is tau o R with the truncated R-matrix

    R = q^(H(x)H/2) sum_n q^(n(n-1)/2) {1}^(2n) / {n}! E^n (x) F^n

whose diagonal part on v_i (x) v_j is t s^-(i+j) q^(2ij), t = q^(lambda^2/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from threading import Lock
from typing import Iterable, Mapping

from . import linalg
from .coeffring import ScalarExt, field, quantum_integer, quantum_integer_lambda
from .partitions import enumerate_partitions


class TensorState:
    """Sparse vector in (U_N^lambda)^(x k): multi-index -> ScalarExt."""

    __slots__ = ("level", "factors", "terms")

    def __init__(self, level: int, factors: int, terms: Mapping[tuple, ScalarExt] | None = None):
        self.level = level
        self.factors = factors
        clean = {}
        for idx, c in (terms or {}).items():
            if len(idx) != factors:
                raise ValueError(f"multi-index {idx} has wrong length for {factors} factors")
            if any(not 0 <= i < level for i in idx):
                raise ValueError(f"multi-index {idx} out of range for N={level}")
            if c:
                clean[tuple(idx)] = c
        self.terms = clean

    @classmethod
    def basis(cls, level: int, idx: Iterable[int]) -> "TensorState":
        idx = tuple(idx)
        return cls(level, len(idx), {idx: ScalarExt.one(level)})

    @classmethod
    def zero(cls, level: int, factors: int) -> "TensorState":
        return cls(level, factors)

    def __add__(self, other: "TensorState") -> "TensorState":
        _check_compatible(self, other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return TensorState(self.level, self.factors, out)

    def __sub__(self, other: "TensorState") -> "TensorState":
        return self + other.scale(ScalarExt.const(self.level, -1))

    def scale(self, c: ScalarExt) -> "TensorState":
        return TensorState(self.level, self.factors, {k: v * c for k, v in self.terms.items()})

    def tensor(self, other: "TensorState") -> "TensorState":
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                out[a + b] = x * y
        return TensorState(self.level, self.factors + other.factors, out)

    def coefficient(self, idx) -> ScalarExt:
        return self.terms.get(tuple(idx), ScalarExt.zero(self.level))

    def is_zero(self) -> bool:
        return not self.terms

    def weights(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def reduced(self) -> "TensorState":
        return TensorState(self.level, self.factors, {k: v.reduced() for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TensorState):
            return NotImplemented
        if (self.level, self.factors) != (other.level, other.factors):
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    def __repr__(self):
        parts = [f"({c})*v{list(k)}" for k, c in sorted(self.terms.items())]
        return f"TensorState(N={self.level}, k={self.factors}: " + (" + ".join(parts) or "0") + ")"


def _check_compatible(a: TensorState, b: TensorState) -> None:
    if (a.level, a.factors) != (b.level, b.factors):
        raise ValueError("tensor states of different shape")


def _accumulate(out: dict, idx: tuple, c: ScalarExt) -> None:
    if idx in out:
        out[idx] = out[idx] + c
    else:
        out[idx] = c


def _check_position(state: TensorState, position: int) -> None:
    if not 1 <= position <= state.factors:
        raise IndexError(f"position {position} out of range 1..{state.factors}")


# -- generator actions -----------------------------------------------------------

def k_eigenvalue(level: int, i: int) -> ScalarExt:
    return ScalarExt.monomial(level, q_exp=-2 * i, s_exp=1)


def act_K(state: TensorState, position: int, power: int = 1) -> TensorState:
    _check_position(state, position)
    p = position - 1
    return TensorState(state.level, state.factors, {
        k: c.mul_monomial(q_exp=-2 * power * k[p], s_exp=power) for k, c in state.terms.items()
    })


def act_E(state: TensorState, position: int) -> TensorState:
    _check_position(state, position)
    p = position - 1
    out: dict = {}
    for k, c in state.terms.items():
        i = k[p]
        if i == 0:
            continue
        _accumulate(out, k[:p] + (i - 1,) + k[p + 1:], c * quantum_integer_lambda(state.level, 1 - i))
    return TensorState(state.level, state.factors, out)


def act_F(state: TensorState, position: int) -> TensorState:
    _check_position(state, position)
    p = position - 1
    out: dict = {}
    for k, c in state.terms.items():
        i = k[p]
        if i + 1 >= state.level:
            continue  # [N] = 0 at the root of unity
        _accumulate(out, k[:p] + (i + 1,) + k[p + 1:], c * quantum_integer(state.level, i + 1))
    return TensorState(state.level, state.factors, out)


def act_K_total(state: TensorState, power: int = 1) -> TensorState:
    """Delta^(k)(K)^power."""
    return TensorState(state.level, state.factors, {
        k: c.mul_monomial(q_exp=-2 * power * sum(k), s_exp=power * state.factors)
        for k, c in state.terms.items()
    })


def act_E_coproduct(state: TensorState) -> TensorState:
    """sum_j Id^(j-1) (x) E (x) K^(k-j)."""
    N = state.level
    out: dict = {}
    for k, c in state.terms.items():
        tail = 0
        for p in range(state.factors - 1, -1, -1):
            i = k[p]
            if i:
                coeff = c * quantum_integer_lambda(N, 1 - i)
                nright = state.factors - 1 - p
                coeff = coeff.mul_monomial(q_exp=-2 * tail, s_exp=nright)
                _accumulate(out, k[:p] + (i - 1,) + k[p + 1:], coeff)
            tail += i
    return TensorState(N, state.factors, out)


def act_F_coproduct(state: TensorState) -> TensorState:
    """sum_j K^-(j-1) (x) F (x) Id^(k-j), the coproduct matching Delta(E) above."""
    N = state.level
    out: dict = {}
    for k, c in state.terms.items():
        head = 0
        for p in range(state.factors):
            i = k[p]
            if i + 1 < N:
                coeff = (c * quantum_integer(N, i + 1)).mul_monomial(q_exp=2 * head, s_exp=-p)
                _accumulate(out, k[:p] + (i + 1,) + k[p + 1:], coeff)
            head += i
    return TensorState(N, state.factors, out)


# -- R-matrix ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _r_coefficient(level: int, n: int) -> ScalarExt:
    # q^(n(n-1)/2) {1}^(2n) / {n}!  =  q^(n(n-1)/2) (q - q^-1)^n / [n]!
    F = field(level)
    qq = ScalarExt.const(level, F.sub(F.q_pow(1), F.q_pow(-1)))
    acc = ScalarExt.monomial(level, q_exp=n * (n - 1) // 2)
    for j in range(1, n + 1):
        acc = acc * qq / quantum_integer(level, j)
    return acc


@lru_cache(maxsize=None)
def r_table(level: int, a: int, b: int) -> tuple[tuple[tuple[int, int], ScalarExt], ...]:
    """Image of v_a (x) v_b under tau o R, as ((i, j), coefficient) pairs."""
    N = level
    out = []
    # E^n (x) F^n, then q^(H(x)H/2), then swap the factors
    for n in range(0, min(a, N - 1 - b) + 1):
        i, j = a - n, b + n
        c = _r_coefficient(N, n)
        for r in range(n):
            c = c * quantum_integer_lambda(N, 1 - (a - r))
            c = c * quantum_integer(N, b + r + 1)
        c = c.mul_monomial(q_exp=2 * i * j, s_exp=-(i + j), t_exp=1)
        if c:
            out.append(((j, i), c.reduced()))
    return tuple(out)


_inverse_lock = Lock()
_inverse_cache: dict[tuple[int, int], dict] = {}


def _pair_block(level: int, w: int) -> list[tuple[int, int]]:
    return [(a, w - a) for a in range(level) if 0 <= w - a < level]


def r_inverse_block(level: int, w: int) -> dict:
    """(tau o R)^-1 on the two-factor weight block a + b = w, by exact inversion."""
    key = (level, w)
    hit = _inverse_cache.get(key)
    if hit is not None:
        return hit
    with _inverse_lock:
        hit = _inverse_cache.get(key)
        if hit is not None:
            return hit
        basis = _pair_block(level, w)
        pos = {p: i for i, p in enumerate(basis)}
        m = len(basis)
        zero = ScalarExt.zero(level)
        mat = [[zero] * m for _ in range(m)]
        for col, (a, b) in enumerate(basis):
            for ij, c in r_table(level, a, b):
                mat[pos[ij]][col] = c
        inv = linalg.inverse(mat)
        table = {}
        for col, pair in enumerate(basis):
            table[pair] = tuple((basis[row], inv[row][col]) for row in range(m) if inv[row][col])
        _inverse_cache[key] = table
        return table


def r_inverse_table(level: int, a: int, b: int):
    return r_inverse_block(level, a + b)[(a, b)]


def r_matrix_apply(state: TensorState, position: int, inverse: bool = False) -> TensorState:
    """Apply (tau o R)^(+-1) to factors (position, position + 1)."""
    if not 1 <= position < state.factors:
        raise IndexError(f"position {position} out of range 1..{state.factors - 1}")
    p = position - 1
    N = state.level
    out: dict = {}
    for k, c in state.terms.items():
        a, b = k[p], k[p + 1]
        table = r_inverse_table(N, a, b) if inverse else r_table(N, a, b)
        for (i, j), rc in table:
            _accumulate(out, k[:p] + (i, j) + k[p + 2:], c * rc)
    return TensorState(N, state.factors, out)


# -- braids ------------------------------------------------------------------------

@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        for x in self.letters:
            if x == 0 or abs(x) >= self.strands:
                raise ValueError(f"generator {x} invalid in B_{self.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-x for x in self.letters))

    def extended(self, strands: int) -> "BraidWord":
        if strands < self.strands:
            raise ValueError("cannot shrink a braid")
        return BraidWord(strands, self.letters)

    def permutation(self) -> tuple[int, ...]:
        perm = list(range(self.strands))
        for x in self.letters:
            i = abs(x) - 1
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
        return tuple(perm)

    def components(self) -> int:
        perm = self.permutation()
        seen, cycles = set(), 0
        for s in range(self.strands):
            if s not in seen:
                cycles += 1
                while s not in seen:
                    seen.add(s)
                    s = perm[s]
        return cycles

    def __str__(self):
        if not self.letters:
            return f"1 in B_{self.strands}"
        return " ".join(f"s{abs(x)}" + ("^-1" if x < 0 else "") for x in self.letters)


def writhe(word: BraidWord) -> int:
    return sum(1 if x > 0 else -1 for x in word.letters)


def apply_braid(word: BraidWord, state: TensorState) -> TensorState:
    """Image of a state under the braid.

    Words act as a left representation, rho(w1 w2) = rho(w1) rho(w2), so the
    rightmost letter is applied first.
    """
    if any(abs(x) >= state.factors for x in word.letters):
        raise ValueError("braid letter exceeds the number of tensor factors")
    for x in reversed(word.letters):
        state = r_matrix_apply(state, abs(x), inverse=x < 0)
    return state


def weight_basis(n: int, m: int, level: int) -> tuple[tuple[int, ...], ...]:
    """Multi-indices of length n, entries <= N-1, summing to m (= E^N_{n+1,m})."""
    return enumerate_partitions(n + 1, m, level)


def braid_matrix(word: BraidWord, total_factors: int, weight: int, level: int):
    """Matrix of the braid on the weight block; column j is the image of basis j."""
    basis = weight_basis(total_factors, weight, level)
    pos = {b: i for i, b in enumerate(basis)}
    zero = ScalarExt.zero(level)
    mat = [[zero] * len(basis) for _ in basis]
    for col, b in enumerate(basis):
        img = apply_braid(word, TensorState.basis(level, b))
        for idx, c in img.terms.items():
            if idx not in pos:
                raise AssertionError("braid action left the weight block")
            mat[pos[idx]][col] = c
    return mat
