import cmath
import itertools
import random

import pytest

from adoinv import ado as ado_mod
from adoinv import lawrence
from adoinv.ado import (
    KNOTS,
    ado_direct,
    ado_topological,
    conjugate,
    markov_check,
    random_word,
    specialize_invariant,
    stabilize,
)
from adoinv.coeffring import CycScalar, ScalarExt
from adoinv.oracle import alexander_burau
from adoinv.verma import BraidWord


def alexander_in_s(word):
    """Burau-oracle Delta(t) with t -> s^-2, as a ScalarExt at N = 2."""
    d = alexander_burau(word)
    acc = ScalarExt.zero(2)
    for e, c in d.as_dict().items():
        acc = acc + ScalarExt.monomial(2, s_exp=-2 * e, coeff=c)
    return acc


def test_unknot_is_one():
    for N in (2, 3, 4):
        assert ado_direct(KNOTS["unknot"], N).value == ScalarExt.one(N)
        assert ado_topological(KNOTS["unknot"], N).value == ScalarExt.one(N)
        assert ado_direct(BraidWord(2, (1,)), N).value == ScalarExt.one(N)
        assert ado_direct(BraidWord(3, (-1, 2)), N).value == ScalarExt.one(N)


@pytest.mark.parametrize("name", ["trefoil", "figure-eight", "cinquefoil"])
def test_N2_is_alexander(name):
    word = KNOTS[name]
    assert ado_direct(word, 2).value == alexander_in_s(word)


def test_trefoil_N2_frozen():
    # t^-1 - 1 + t at t = s^-2
    assert ado_direct(KNOTS["trefoil"], 2).value == ScalarExt.from_laurent(2, -2, [1, 0, -1, 0, 1])


def test_trefoil_N3_frozen():
    x = CycScalar.xi(3)
    expected = ScalarExt.from_laurent(3, -4, [-x, 0, 1, 0, 2 * x - 1, 0, -x, 0, 1])
    assert ado_direct(KNOTS["trefoil"], 3).value == expected
    assert ado_topological(KNOTS["trefoil"], 3).value == expected


def test_hopf_link_N2():
    assert ado_direct(KNOTS["hopf"], 2).value == ScalarExt.from_laurent(2, -1, [-1, 0, 1])


@pytest.mark.parametrize("N", [2, 3])
def test_pipelines_agree_on_table(N):
    for word in KNOTS.values():
        assert ado_direct(word, N).value == ado_topological(word, N).value


@pytest.mark.parametrize("N", [2, 3])
def test_results_are_laurent_without_t(N):
    rng = random.Random(N)
    for _ in range(15):
        w = random_word(3, rng.randint(0, 5), rng)
        r = ado_direct(w, N)
        assert r.t_exp == 0
        assert r.value.is_laurent()


@pytest.mark.parametrize("N", [2, 3])
def test_mirror_is_bar(N):
    rng = random.Random(11 + N)
    for _ in range(10):
        w = random_word(3, rng.randint(1, 4), rng)
        assert ado_direct(w.mirror(), N).value == ado_direct(w, N).value.bar()


@pytest.mark.parametrize("N", [2, 3])
def test_markov_moves(N):
    rng = random.Random(5)
    for _ in range(4):
        w = random_word(2, rng.randint(1, 4), rng)
        report = markov_check(w, N, samples=2, seed=rng.randint(0, 99))
        assert report.ok, report.failures
        assert report.checked == 4


def test_markov_helpers():
    w = BraidWord(2, (1, 1, 1))
    assert stabilize(w, -1).letters == (1, 1, 1, -2)
    assert conjugate(w, BraidWord(2, (1,))).letters == (1, 1, 1, 1, -1)
    assert markov_check(BraidWord(1), 2).ok


def test_markov_check_detects_a_broken_framing(monkeypatch):
    monkeypatch.setattr(ado_mod, "KAPPA", (0, 1))
    report = markov_check(BraidWord(2, (1, 1, 1)), 2, samples=0)
    assert not report.ok


def test_specialize_trefoil_against_burau():
    lam = 0.5
    r = ado_direct(KNOTS["trefoil"], 2)
    t = cmath.exp(-1j * cmath.pi * lam)  # xi^(-2 lambda)
    assert abs(specialize_invariant(r, lam) - alexander_burau(KNOTS["trefoil"])(t)) < 1e-12


def test_specialize_unknot():
    assert specialize_invariant(ado_direct(KNOTS["unknot"], 3), 0.37) == 1


def test_figure_eight_at_N_minus_one():
    # sum_k |(omega)_k|^2 with omega = -1 gives 1 + 4
    v = specialize_invariant(ado_direct(KNOTS["figure-eight"], 2), 1)
    assert abs(v - 5) < 1e-9


def test_result_metadata():
    r = ado_topological(KNOTS["figure-eight"], 2)
    assert (r.n, r.N, r.method, r.writhe, r.t_exp) == (3, 2, "topological", 0, 0)
    with pytest.raises(ValueError):
        ado_mod.ado(KNOTS["trefoil"], 2, "other")


def test_bar_pairing_breaks_equality():
    try:
        lawrence.configure(pairing="bar")
        assert ado_topological(KNOTS["trefoil"], 2).value != ado_direct(KNOTS["trefoil"], 2).value
    finally:
        lawrence.configure(pairing="bilinear")


def test_pivot_K_breaks_stabilization():
    try:
        lawrence.configure(pivot=1)
        assert ado_direct(BraidWord(2, (1,)), 2).value != ScalarExt.one(2)
    finally:
        lawrence.configure(pivot="default")
    assert ado_direct(BraidWord(2, (1,)), 2).value == ScalarExt.one(2)


def test_all_short_B2_words_agree():
    for length in range(4):
        for letters in itertools.product((1, -1), repeat=length):
            w = BraidWord(2, letters)
            assert ado_direct(w, 3).value == ado_topological(w, 3).value
