"""Truncated Lawrence representation transported through Theta.

Multifork and scan classes are coordinate vectors over the partition basis
E^N_{2n-1,(n-1)(N-1)}.  The braid action on multiforks is the quantum
action conjugated by Theta, and the pairing between the two sides has the
identity matrix in these bases.

The caps are encoded by the vector

    w_coev = sum prod_k c[k][i_k] v_{i_{n-1}} (x) ... (x) v_{i_1} (x) v_{N-1-i_1} (x) ... (x) v_{N-1-i_{n-1}}

whose coefficients satisfy c[k][0] = 1 and

    c[k][i+1] / c[k][i] = -[lambda+2-N+i] / [lambda-i] * s^-(2k-1) q^(2k(N-1) - 2(i+1)).
"""

from __future__ import annotations

import itertools
import json
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .coeffring import ScalarExt, quantum_integer_lambda, scalar_from_json, scalar_to_json
from .hwspace import ThetaMatrix, is_highest_weight, theta_matrix, theta_solve
from .verma import BraidWord, TensorState, apply_braid

# "nested": pair 1 innermost (v_{i_m} .. v_{i_1} v_{N-1-i_1} .. v_{N-1-i_m}).
# "sequential": pair 1 outermost (v_{i_1} .. v_{i_m} v_{N-1-i_m} .. v_{N-1-i_1}).
COEV_ORDER = "nested"
# "bilinear" or "bar" (second slot twisted by the bar involution).
PAIRING = "bilinear"
# ev(v (x) f) = f(K^p v) with p = PIVOT, or p = 1 - N when PIVOT is None
PIVOT = None

MULTIFORK, SCAN = "multifork", "scan"


def configure(*, coev_order: str | None = None, pairing: str | None = None, pivot: int | None = None) -> None:
    global COEV_ORDER, PAIRING, PIVOT
    if coev_order is not None:
        if coev_order not in ("nested", "sequential"):
            raise ValueError(coev_order)
        COEV_ORDER = coev_order
    if pairing is not None:
        if pairing not in ("bilinear", "bar"):
            raise ValueError(pairing)
        PAIRING = pairing
    if pivot is not None:
        PIVOT = None if pivot == "default" else int(pivot)
    _class_cache.clear()


@dataclass(frozen=True)
class CoevCoefficients:
    n: int
    N: int
    table: tuple  # table[k - 1][i] = c[k][i]

    def __call__(self, k: int, i: int) -> ScalarExt:
        return self.table[k - 1][i]


@lru_cache(maxsize=None)
def _coev_row(k: int, N: int) -> tuple:
    row = [ScalarExt.one(N)]
    for i in range(N - 1):
        ratio = -quantum_integer_lambda(N, 2 - N + i) / quantum_integer_lambda(N, -i)
        ratio = ratio.mul_monomial(q_exp=2 * k * (N - 1) - 2 * (i + 1), s_exp=-(2 * k - 1))
        row.append((row[-1] * ratio).reduced())
    return tuple(row)


def coev_coefficients(n: int, N: int) -> CoevCoefficients:
    if n < 2:
        raise ValueError("coevaluation coefficients need n >= 2")
    return CoevCoefficients(n, N, tuple(_coev_row(k, N) for k in range(1, n)))


def pivot_exponent(N: int) -> int:
    return 1 - N if PIVOT is None else PIVOT


def pair_slots(n: int, k: int, order: str | None = None) -> tuple[int, int]:
    """0-based (U slot, dual slot) of cap k inside the (2n-1)-fold product."""
    order = order or COEV_ORDER
    if order == "nested":
        return n - k, n + k - 1
    return k, 2 * n - 1 - k


def w_coev(n: int, N: int, order: str | None = None) -> TensorState:
    order = order or COEV_ORDER
    cc = coev_coefficients(n, N)
    m = n - 1
    out = {}
    for idx in itertools.product(range(N), repeat=m):
        coeff = ScalarExt.one(N)
        for k, i in enumerate(idx, start=1):
            coeff = coeff * cc(k, i)
        slots = [0] * (2 * m)
        for k, i in enumerate(idx, start=1):
            u, d = pair_slots(n, k, order)
            slots[u - 1], slots[d - 1] = i, N - 1 - i
        out[tuple(slots)] = coeff.reduced()
    return TensorState(N, 2 * m, out)


@dataclass(frozen=True)
class HomologyClass:
    side: str
    n: int
    N: int
    coords: tuple

    def __post_init__(self):
        if self.side not in (MULTIFORK, SCAN):
            raise ValueError(f"unknown side {self.side!r}")
        object.__setattr__(self, "coords", tuple(self.coords))

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        if (self.side, self.n, self.N) != (other.side, other.n, other.N):
            raise ValueError("classes live in different modules")
        return HomologyClass(self.side, self.n, self.N, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, c: ScalarExt) -> "HomologyClass":
        return HomologyClass(self.side, self.n, self.N, tuple(c * a for a in self.coords))

    @classmethod
    def unit(cls, side: str, n: int, N: int, index: int) -> "HomologyClass":
        d = len(theta_matrix(n, N).partitions)
        return cls(side, n, N, tuple(ScalarExt.one(N) if j == index else ScalarExt.zero(N) for j in range(d)))

    def to_json(self) -> dict:
        return {"side": self.side, "n": self.n, "N": self.N, "coords": [scalar_to_json(c) for c in self.coords]}

    @classmethod
    def from_json(cls, obj: dict) -> "HomologyClass":
        N = obj["N"]
        return cls(obj["side"], obj["n"], N, tuple(scalar_from_json(c, N) for c in obj["coords"]))


_class_cache: dict = {}


def _cached(kind, n, N, build):
    key = (kind, n, N, COEV_ORDER, PIVOT)
    if key not in _class_cache:
        _class_cache[key] = build()
    return _class_cache[key]


def f_class(n: int, N: int) -> HomologyClass:
    def build():
        theta = theta_matrix(n, N)
        if n == 1:
            return HomologyClass(MULTIFORK, 1, N, (ScalarExt.one(N),))
        target = TensorState.basis(N, (0,)).tensor(w_coev(n, N))
        if not is_highest_weight(target, theta.highest_weight_eigenvalue()):
            from .hwspace import NotInHighestWeightSpace
            raise NotInHighestWeightSpace("v_0 (x) w_coev is not a highest weight vector")
        return HomologyClass(MULTIFORK, n, N, theta_solve(target, theta))
    return _cached("F", n, N, build)


def evaluate_caps(state: TensorState, n: int) -> ScalarExt:
    """pi_{v_0} o (Id (x) ev's) o (Id^n (x) psi^-1) on a state of 2n-1 factors."""
    N = state.level
    acc = ScalarExt.zero(N)
    if n == 1:
        return state.coefficient((0,))
    cc = coev_coefficients(n, N)
    p = pivot_exponent(N)
    slots = [pair_slots(n, k) for k in range(1, n)]
    for idx, c in state.terms.items():
        if idx[0] != 0:
            continue
        factor = c
        for k, (u, d) in enumerate(slots, start=1):
            a = idx[u]
            if a + idx[d] != N - 1:
                factor = None
                break
            # psi^-1(v_{N-1-a}) = v_a^* / c[k][a]; then v_a^*(K^p v_a)
            factor = (factor / cc(k, a)).mul_monomial(q_exp=-2 * p * a, s_exp=p)
        if factor is not None:
            acc = acc + factor
    return acc.reduced()


def ev_functional(n: int, N: int) -> tuple:
    def build():
        theta = theta_matrix(n, N)
        return tuple(evaluate_caps(col, n) for col in theta.columns)
    return _cached("Ev", n, N, build)


def g_class(n: int, N: int) -> HomologyClass:
    """Scan class with coordinates Ev(Theta(F_f)); the pairing matrix is the identity."""
    return _cached("G", n, N, lambda: HomologyClass(SCAN, n, N, ev_functional(n, N)))


def pairing(a: HomologyClass, b: HomologyClass) -> ScalarExt:
    if a.side != MULTIFORK or b.side != SCAN:
        raise ValueError("pairing takes a multifork class and a scan class")
    if (a.n, a.N) != (b.n, b.N):
        raise ValueError("classes have different parameters")
    acc = ScalarExt.zero(a.N)
    for x, y in zip(a.coords, b.coords):
        if x and y:
            acc = acc + x * (y.bar() if PAIRING == "bar" else y)
    return acc.reduced()


def lawrence_action(word: BraidWord, cls: HomologyClass, theta: ThetaMatrix | None = None) -> HomologyClass:
    if cls.side != MULTIFORK:
        raise ValueError("the braid acts on multifork classes")
    theta = theta or theta_matrix(cls.n, cls.N)
    if word.strands > theta.n:
        raise ValueError("braid has more strands than the representation")
    if not word.letters:
        return cls
    img = apply_braid(word.extended(theta.n), theta.apply(cls.coords))
    return HomologyClass(MULTIFORK, cls.n, cls.N, theta_solve(img, theta))


# -- regression fixtures ------------------------------------------------------------

FIXTURE_PARAMS = ((1, 2), (2, 2), (2, 3), (3, 2))


def fixture_dir() -> Path:
    env = os.environ.get("ADO_FIXTURE_DIR")
    return Path(env) if env else Path(__file__).parent / "fixtures"


def fixture_path(n: int, N: int) -> Path:
    return fixture_dir() / f"lawrence_n{n}_N{N}.json"


def write_fixture(n: int, N: int) -> Path:
    path = fixture_path(n, N)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {"F": f_class(n, N).to_json(), "G": g_class(n, N).to_json(),
               "Ev": [scalar_to_json(c) for c in ev_functional(n, N)]}
    path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n")
    return path


def load_fixture(n: int, N: int) -> dict:
    obj = json.loads(fixture_path(n, N).read_text())
    return {"F": HomologyClass.from_json(obj["F"]), "G": HomologyClass.from_json(obj["G"]),
            "Ev": tuple(scalar_from_json(c, N) for c in obj["Ev"])}
