"""Highest weight vectors at the root of unity and the identification matrix.

For a partition e of m into n-1 parts (each < N) the generator

    w_e = s^(sum_i c_i e_i) v_{e_1} (x) ... (x) v_{e_{n-1}}

(c_i = i, or i + 1 under the alternative exponent convention) is sent to

    phi(w_e) = sum_k (-1)^k s^(-k(n-1)) q^(2mk - k(k+1)) v_k/[lambda; k] (x) E^k(w_e)

with [lambda; k] = [lambda][lambda - 1]...[lambda - k + 1].  These vectors
span the highest weight space W_{n,m} inside (U_N^lambda)^(x n).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from threading import Lock

from .coeffring import ScalarExt, quantum_integer_lambda
from .partitions import enumerate_partitions
from .verma import TensorState, act_E_coproduct, act_K_total
from .verma import weight_basis as _weight_basis

# "index" uses s^(sum i e_i); "shifted" uses s^(sum (i+1) e_i).
S_EXPONENT = "index"
_EXPONENTS = ("index", "shifted")


class NotInHighestWeightSpace(ValueError):
    """The target vector is not in the span of the highest weight basis."""


def set_s_exponent(convention: str) -> None:
    global S_EXPONENT
    if convention not in _EXPONENTS:
        raise ValueError(f"unknown convention {convention!r}")
    S_EXPONENT = convention
    _theta_cache.clear()


def weight_basis(n: int, m: int, N: int):
    return _weight_basis(n, m, N)


def generator_s_power(e, convention: str | None = None) -> int:
    conv = convention or S_EXPONENT
    off = 1 if conv == "index" else 2
    return sum((i + off) * x for i, x in enumerate(e))


@lru_cache(maxsize=None)
def _lambda_falling(N: int, k: int) -> ScalarExt:
    acc = ScalarExt.one(N)
    for j in range(k):
        acc = acc * quantum_integer_lambda(N, -j)
    return acc


def phi_vector(e, n: int, m: int, N: int, convention: str | None = None) -> TensorState:
    e = tuple(e)
    if len(e) != n - 1 or sum(e) != m or any(not 0 <= x < N for x in e):
        raise ValueError(f"{e} is not in E^{N}_{{{n},{m}}}")
    if n == 1:
        return TensorState.basis(N, (0,))
    w = TensorState(N, n - 1, {e: ScalarExt.monomial(N, s_exp=generator_s_power(e, convention))})
    out: dict = {}
    for k in range(N):
        if k:
            w = act_E_coproduct(w)
        if w.is_zero():
            break
        sign = -1 if k % 2 else 1
        pref = ScalarExt.monomial(N, q_exp=2 * m * k - k * (k + 1), s_exp=-k * (n - 1), coeff=sign)
        pref = pref / _lambda_falling(N, k)
        for idx, c in w.terms.items():
            key = (k,) + idx
            out[key] = out[key] + pref * c if key in out else pref * c
    return TensorState(N, n, out).reduced()


@dataclass(frozen=True)
class ThetaMatrix:
    n: int
    m: int
    N: int
    partitions: tuple
    columns: tuple  # TensorState per partition
    row_basis: tuple

    @property
    def shape(self):
        return len(self.row_basis), len(self.columns)

    def entry(self, row: int, col: int) -> ScalarExt:
        return self.columns[col].coefficient(self.row_basis[row])

    def apply(self, coords) -> TensorState:
        """Theta . coords as a state."""
        if len(coords) != len(self.columns):
            raise ValueError("coordinate vector has the wrong length")
        acc = TensorState.zero(self.N, self.n)
        for c, col in zip(coords, self.columns):
            if c:
                acc = acc + col.scale(c)
        return acc

    def highest_weight_eigenvalue(self) -> ScalarExt:
        return ScalarExt.monomial(self.N, q_exp=-2 * self.m, s_exp=self.n)


def build_theta(n: int, m: int, N: int, convention: str | None = None) -> ThetaMatrix:
    parts = enumerate_partitions(n, m, N)
    cols = tuple(phi_vector(e, n, m, N, convention) for e in parts)
    return ThetaMatrix(n, m, N, parts, cols, weight_basis(n, m, N))


_theta_cache: dict = {}
_theta_lock = Lock()


def theta_matrix(n: int, N: int) -> ThetaMatrix:
    """Theta for W_{2n-1,(n-1)(N-1)}, cached per (n, N)."""
    if n < 1:
        raise ValueError("n must be positive")
    key = (n, N, S_EXPONENT)
    with _theta_lock:
        if key not in _theta_cache:
            _theta_cache[key] = build_theta(2 * n - 1, (n - 1) * (N - 1), N)
        return _theta_cache[key]


def theta_solve(target: TensorState, theta: ThetaMatrix):
    """Coordinates c with theta . c = target.

    The rows v_0 (x) v_e only see the k = 0 term of each column, so that
    square block is diagonal; the remaining rows are checked afterwards.
    """
    if target.factors != theta.n or target.level != theta.N:
        raise ValueError("target lives in a different tensor power")
    coords = []
    for e in theta.partitions:
        c = target.coefficient((0,) + e)
        coords.append((c / theta.columns[len(coords)].coefficient((0,) + e)).reduced() if c else c)
    if not (theta.apply(coords) - target).is_zero():
        raise NotInHighestWeightSpace("target is not a combination of the highest weight basis")
    return coords


def is_highest_weight(state: TensorState, eigenvalue: ScalarExt | None = None) -> bool:
    if not act_E_coproduct(state).is_zero():
        return False
    if eigenvalue is None:
        return True
    return act_K_total(state) == state.scale(eigenvalue)
