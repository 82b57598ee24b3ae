import cmath
import itertools

import numpy as np
import pytest

from adoinv.coeffring import ScalarExt, quantum_integer, specialize
from adoinv.linalg import identity, matmul, matrices_equal
from adoinv.verma import (
    BraidWord,
    TensorState,
    act_E,
    act_E_coproduct,
    act_F,
    act_F_coproduct,
    act_K,
    act_K_total,
    apply_braid,
    braid_matrix,
    r_matrix_apply,
    weight_basis,
    writhe,
)

LAM = 0.3719


def numeric_module(N, lam):
    q = cmath.exp(1j * cmath.pi / N)
    s = q**lam

    def qi(x):
        return (q**x - q**-x) / (q - 1 / q)

    def qil(off):
        return (s * q**off - 1 / (s * q**off)) / (q - 1 / q)

    K = np.diag([s * q ** (-2 * i) for i in range(N)])
    E = np.zeros((N, N), complex)
    F = np.zeros((N, N), complex)
    for i in range(1, N):
        E[i - 1, i] = qil(1 - i)
    for i in range(N - 1):
        F[i + 1, i] = qi(i + 1)
    return q, K, E, F, qi


def numeric_braiding(N, lam):
    """tau o R with R = q^(H(x)H/2) sum_n q^(n(n-1)/2) (q - 1/q)^n / [n]! E^n (x) F^n."""
    q, K, E, F, qi = numeric_module(N, lam)
    S = np.zeros((N * N, N * N), complex)
    for n in range(N):
        fact = np.prod([qi(j) for j in range(1, n + 1)])
        S += q ** (n * (n - 1) / 2) * (q - 1 / q) ** n / fact * np.kron(np.linalg.matrix_power(E, n),
                                                                          np.linalg.matrix_power(F, n))
    H = [lam - 2 * i for i in range(N)]
    D = np.diag([q ** (a * b / 2) for a in H for b in H])
    P = np.zeros((N * N, N * N))
    for a, b in itertools.product(range(N), repeat=2):
        P[b * N + a, a * N + b] = 1
    return P @ D @ S


def state_matrix(N, op):
    M = np.zeros((N * N, N * N), complex)
    for a, b in itertools.product(range(N), repeat=2):
        for (i, j), c in op(TensorState.basis(N, (a, b))).terms.items():
            M[i * N + j, a * N + b] = specialize(c, LAM)
    return M


@pytest.mark.parametrize("N", [2, 3, 4])
def test_braiding_matches_numeric_oracle(N):
    ref = numeric_braiding(N, LAM)
    got = state_matrix(N, lambda v: r_matrix_apply(v, 1))
    assert np.allclose(got, ref, atol=1e-10)
    inv = state_matrix(N, lambda v: r_matrix_apply(v, 1, inverse=True))
    assert np.allclose(inv @ ref, np.eye(N * N), atol=1e-9)


def basis_states(N, k):
    for idx in itertools.product(range(N), repeat=k):
        yield TensorState.basis(N, idx)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_single_factor_relations(N):
    q2 = ScalarExt.monomial(N, q_exp=2)
    denom = quantum_integer(N, 1).mul_monomial(q_exp=1) - quantum_integer(N, 1).mul_monomial(q_exp=-1)
    for v in basis_states(N, 1):
        assert act_K(act_E(v, 1), 1) == act_E(act_K(v, 1), 1).scale(q2)
        assert act_K(act_F(v, 1), 1).scale(q2) == act_F(act_K(v, 1), 1)
        comm = act_E(act_F(v, 1), 1) - act_F(act_E(v, 1), 1)
        rhs = (act_K(v, 1) - act_K(v, 1, -1)).scale(1 / denom)
        assert comm == rhs


@pytest.mark.parametrize("N,k", [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)])
def test_coproduct_relations(N, k):
    q2 = ScalarExt.monomial(N, q_exp=2)
    qq = ScalarExt.monomial(N, q_exp=1) - ScalarExt.monomial(N, q_exp=-1)
    for v in basis_states(N, k):
        assert act_K_total(act_E_coproduct(v)) == act_E_coproduct(act_K_total(v)).scale(q2)
        assert act_K_total(act_F_coproduct(v)).scale(q2) == act_F_coproduct(act_K_total(v))
        comm = act_E_coproduct(act_F_coproduct(v)) - act_F_coproduct(act_E_coproduct(v))
        assert comm == (act_K_total(v) - act_K_total(v, -1)).scale(1 / qq)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_braiding_is_a_module_map(N):
    for v in basis_states(N, 2):
        assert act_E_coproduct(r_matrix_apply(v, 1)) == r_matrix_apply(act_E_coproduct(v), 1)
        assert act_F_coproduct(r_matrix_apply(v, 1)) == r_matrix_apply(act_F_coproduct(v), 1)
        assert act_K_total(r_matrix_apply(v, 1)) == r_matrix_apply(act_K_total(v), 1)


@pytest.mark.parametrize("N", [2, 3])
def test_yang_baxter_and_inverse(N):
    for v in basis_states(N, 3):
        lhs = apply_braid(BraidWord(3, (1, 2, 1)), v)
        rhs = apply_braid(BraidWord(3, (2, 1, 2)), v)
        assert lhs == rhs
        assert apply_braid(BraidWord(3, (2, -2)), v) == v
        assert apply_braid(BraidWord(3, (-1, 1)), v) == v


def test_far_commutation():
    N = 2
    for v in basis_states(N, 4):
        assert apply_braid(BraidWord(4, (1, 3)), v) == apply_braid(BraidWord(4, (3, 1)), v)
        assert apply_braid(BraidWord(4, (1, -3)), v) == apply_braid(BraidWord(4, (-3, 1)), v)


def test_braid_matrix_is_a_representation():
    N, k, m = 3, 3, 2
    w1, w2 = BraidWord(3, (1, -2)), BraidWord(3, (2, 2, -1))
    A = braid_matrix(w1, k, m, N)
    B = braid_matrix(w2, k, m, N)
    assert matrices_equal(braid_matrix(w1 * w2, k, m, N), matmul(A, B))
    assert matrices_equal(braid_matrix(BraidWord(3), k, m, N), identity(len(A), N))
    assert matrices_equal(matmul(A, braid_matrix(w1.inverse(), k, m, N)), identity(len(A), N))


def test_weight_basis_examples():
    assert weight_basis(2, 1, 2) == ((0, 1), (1, 0))
    assert weight_basis(3, 1, 2) == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert len(weight_basis(4, 2, 3)) == 10
    brute = [e for e in itertools.product(range(3), repeat=4) if sum(e) == 2]
    assert sorted(brute) == list(weight_basis(4, 2, 3))


def test_truncation_at_root_of_unity():
    v = TensorState.basis(3, (2,))
    assert act_F(v, 1).is_zero()
    assert act_E(TensorState.basis(3, (0,)), 1).is_zero()


def test_state_validation():
    with pytest.raises(ValueError):
        TensorState.basis(2, (2,))
    with pytest.raises(ValueError):
        TensorState(2, 2, {(0,): ScalarExt.one(2)})
    with pytest.raises(IndexError):
        r_matrix_apply(TensorState.basis(2, (0, 1)), 2)


def test_braid_word_basics():
    w = BraidWord(3, (1, -2, 1, -2))
    assert writhe(w) == 0
    assert w.components() == 1
    assert BraidWord(2, (1, 1)).components() == 2
    assert w.mirror().letters == (-1, 2, -1, 2)
    assert (w * w.inverse()).letters == (1, -2, 1, -2, 2, -1, 2, -1)
    with pytest.raises(ValueError):
        BraidWord(2, (2,))
    with pytest.raises(ValueError):
        BraidWord(3, (0,))
