"""Acceptance suite: one pass/fail line per criterion.

Run with pytest (lines appear in the terminal summary) or directly:

    python tests/test_acceptance.py
"""

from __future__ import annotations

import cmath
import itertools
import random
import time

import numpy as np
import pytest

from adoinv.ado import KNOTS, ado_direct, ado_topological, conjugate, random_word, specialize_invariant, stabilize
from adoinv.coeffring import ScalarExt, specialize
from adoinv.hwspace import is_highest_weight, theta_matrix
from adoinv.lawrence import MULTIFORK, SCAN, HomologyClass, pairing, w_coev
from adoinv.oracle import alexander_burau, kashaev_figure_eight
from adoinv.verma import (
    BraidWord,
    TensorState,
    act_E_coproduct,
    act_F_coproduct,
    act_K_total,
    apply_braid,
)

RESULTS: dict[int, str] = {}


def record(k: int, ok: bool, detail: str) -> bool:
    RESULTS[k] = f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}"
    return ok


def all_words(strands: int, max_len: int):
    gens = [g for i in range(1, strands) for g in (i, -i)]
    for length in range(max_len + 1):
        for letters in itertools.product(gens, repeat=length):
            yield BraidWord(strands, letters)


def corpus():
    for N in (2, 3):
        for strands, max_len in ((2, 4), (3, 3)):
            for w in all_words(strands, max_len):
                yield w, N


# -- 1 ----------------------------------------------------------------------------

def check_1():
    t0 = time.perf_counter()
    total, bad = 0, []
    for w, N in corpus():
        total += 1
        if ado_direct(w, N).value != ado_topological(w, N).value:
            bad.append((str(w), N))
    dt = time.perf_counter() - t0
    return record(1, not bad and dt < 120,
                  f"direct = topological on {total - len(bad)}/{total} words (B2 len<=4, B3 len<=3, N=2,3) in {dt:.1f}s")


# -- 2 ----------------------------------------------------------------------------

def _alexander_in_s(word):
    acc = ScalarExt.zero(2)
    for e, c in alexander_burau(word).as_dict().items():
        acc = acc + ScalarExt.monomial(2, s_exp=-2 * e, coeff=c)
    return acc


def check_2():
    units = {}
    for name in ("trefoil", "figure-eight", "cinquefoil"):
        ratio = (ado_direct(KNOTS[name], 2).value / _alexander_in_s(KNOTS[name])).reduced()
        low, coeffs = ratio.laurent_coeffs() if ratio.is_laurent() else (None, [])
        nonzero = [(low + i, c) for i, c in enumerate(coeffs) if c]
        if len(nonzero) == 1 and nonzero[0][1] in (1, -1):
            units[name] = (int(nonzero[0][1] == 1) * 2 - 1, nonzero[0][0])
        else:
            units[name] = None
    vals = set(units.values())
    ok = None not in vals and len(vals) == 1
    unit = next(iter(vals)) if ok else None
    text = f"{'+' if unit[0] > 0 else '-'}s^{unit[1]}" if ok else str(units)
    return record(2, ok, f"Phi_2 = unit * Delta(s^-2) for trefoil, figure-eight, cinquefoil; unit = {text}")


# -- 3 ----------------------------------------------------------------------------

def check_3():
    rng = random.Random(2024)
    cases, failures = 0, []
    for N in (2, 3):
        for _ in range(4):
            strands = rng.choice((2, 3))
            w = random_word(strands, rng.randint(1, 4), rng)
            base = ado_direct(w, N).value
            moves = [stabilize(w, 1), stabilize(w, -1),
                     conjugate(w, random_word(strands, rng.randint(1, 2), rng))]
            for m in moves:
                cases += 1
                if ado_direct(m, N).value != base or ado_topological(m, N).value != base:
                    failures.append((str(w), str(m), N))
    return record(3, cases >= 20 and not failures,
                  f"{cases - len(failures)}/{cases} conjugation/stabilization cases invariant (both pipelines)")


# -- 4 ----------------------------------------------------------------------------

def check_4():
    bad = []
    for n in (2, 3, 4):
        for N in (2, 3, 4):
            ev = ScalarExt.monomial(N, q_exp=-2 * (n - 1) * (N - 1), s_exp=2 * (n - 1))
            if not is_highest_weight(w_coev(n, N), ev):
                bad.append(("w_coev", n, N))
    cols = 0
    for n in (1, 2, 3, 4):
        for N in (2, 3, 4):
            th = theta_matrix(n, N)
            ev = ScalarExt.monomial(N, q_exp=-2 * (n - 1) * (N - 1), s_exp=2 * n - 1)
            for c in th.columns:
                cols += 1
                if not is_highest_weight(c, ev):
                    bad.append(("theta", n, N))
    return record(4, not bad, f"w_coev (n<=4, N<=4) and {cols} Theta columns highest weight with exact K-eigenvalue")


# -- 5 ----------------------------------------------------------------------------

def check_5():
    rng = random.Random(5)
    ok, worst = True, 0.0
    for n, N in ((2, 2), (2, 3), (3, 2), (3, 3)):
        d = len(theta_matrix(n, N).partitions)
        exact = [[pairing(HomologyClass.unit(MULTIFORK, n, N, e), HomologyClass.unit(SCAN, n, N, f))
                  for f in range(d)] for e in range(d)]
        ok &= all((x == ScalarExt.one(N)) if e == f else not x
                  for e, row in enumerate(exact) for f, x in enumerate(row))
        for _ in range(5):
            lam = rng.uniform(0.05, 0.95) + rng.randint(-2, 2)
            M = np.array([[specialize(x, lam) for x in row] for row in exact])
            worst = max(worst, float(np.abs(M - np.eye(d)).max()))
    ok &= worst < 1e-9
    return record(5, ok, f"basis pairing = identity exactly; max deviation {worst:.1e} at 5 random lambda")


# -- 6 ----------------------------------------------------------------------------

def _basis(N, k):
    for idx in itertools.product(range(N), repeat=k):
        yield TensorState.basis(N, idx)


def check_6():
    failures = []
    for N in (2, 3, 4):
        q2 = ScalarExt.monomial(N, q_exp=2)
        qq = ScalarExt.monomial(N, q_exp=1) - ScalarExt.monomial(N, q_exp=-1)
        for k in (1, 2, 3, 4):
            for v in _basis(N, k):
                Ev, Fv, Kv = act_E_coproduct(v), act_F_coproduct(v), act_K_total(v)
                if act_K_total(Ev) != act_E_coproduct(Kv).scale(q2):
                    failures.append(("KE", N, k))
                if act_K_total(Fv).scale(q2) != act_F_coproduct(Kv):
                    failures.append(("KF", N, k))
                if act_E_coproduct(Fv) - act_F_coproduct(Ev) != (Kv - act_K_total(v, -1)).scale(1 / qq):
                    failures.append(("EF", N, k))
                if k < 2:
                    continue
                for i in range(1, k):
                    if apply_braid(BraidWord(k, (i, -i)), v) != v or apply_braid(BraidWord(k, (-i, i)), v) != v:
                        failures.append(("RR^-1", N, k))
                for i in range(1, k - 1):
                    if apply_braid(BraidWord(k, (i, i + 1, i)), v) != apply_braid(BraidWord(k, (i + 1, i, i + 1)), v):
                        failures.append(("YB", N, k))
                for i, j in itertools.combinations(range(1, k), 2):
                    if j - i > 1 and apply_braid(BraidWord(k, (i, j)), v) != apply_braid(BraidWord(k, (j, i)), v):
                        failures.append(("far", N, k))
    return record(6, not failures, f"sl2 relations, Yang-Baxter, far commutation, R R^-1 = Id for <=4 factors, N<=4"
                  + (f"; failures {failures[:3]}" if failures else ""))


# -- 7 ----------------------------------------------------------------------------

def _integral_laurent(x: ScalarExt) -> bool:
    if x.t_exp != 0 or not x.is_laurent():
        return False
    _, coeffs = x.laurent_coeffs()
    return all(c.denominator == 1 for cyc in coeffs for c in cyc.coeffs)


def check_7():
    values = [ado_direct(w, N).value for w, N in corpus()]
    values += [ado_direct(w, N).value for w in KNOTS.values() for N in (2, 3, 4)]
    bad = sum(not _integral_laurent(v) for v in values)
    return record(7, bad == 0, f"{len(values) - bad}/{len(values)} invariants lie in Z[xi][s, s^-1] after normalization")


# -- 8 (informative) ----------------------------------------------------------------

def check_8():
    parts, agree = [], True
    for N in (2, 3):
        v = specialize_invariant(ado_direct(KNOTS["figure-eight"], N), N - 1)
        k_2pi = kashaev_figure_eight(N)
        k_pi = kashaev_figure_eight(N, cmath.exp(1j * cmath.pi / N))
        hit = abs(abs(v) - k_2pi) < 1e-6 or abs(abs(v) - k_pi) < 1e-6
        agree &= hit
        parts.append(f"N={N}: |Phi|={abs(v):.6f}, e^(2pi i/N) sum={k_2pi:.6f}, e^(pi i/N) sum={k_pi:.6f}")
    record(8, agree, "(informative) figure-eight at lambda=N-1; " + "; ".join(parts))
    return True


CHECKS = [check_1, check_2, check_3, check_4, check_5, check_6, check_7, check_8]


@pytest.mark.parametrize("check", CHECKS, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(check):
    assert check(), RESULTS.get(CHECKS.index(check) + 1)


if __name__ == "__main__":
    for chk in CHECKS:
        chk()
        print(RESULTS[CHECKS.index(chk) + 1], flush=True)
