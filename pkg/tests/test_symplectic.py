import numpy as np
import pytest

from cmtheta.symplectic import (
    SiegelPoint,
    act_siegel,
    blocks,
    identity,
    in_g_group,
    in_gamma,
    in_s_group,
    intmat,
    iota,
    is_symplectic,
    jmat,
    membership,
    special_gamma,
    sympl_multiplier,
)


def test_jmat():
    j = jmat(2)
    assert (j == intmat([[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]])).all()
    assert is_symplectic(j)
    assert (j @ j == -identity(4)).all()


def test_blocks_roundtrip():
    m = intmat(np.arange(16).reshape(4, 4))
    a, b, c, d = blocks(m)
    assert (np.block([[a, b], [c, d]]) == m).all()


def test_multiplier():
    assert sympl_multiplier(identity(4)) == 1
    assert sympl_multiplier(iota(-1, 2)) == -1
    assert sympl_multiplier(intmat(np.diag([1, 1, 2, 2]))) is None  # nu=2 not a unit over Z
    assert sympl_multiplier(intmat(np.diag([1, 1, 2, 2])), modulus=5) == 2
    assert sympl_multiplier(intmat(np.diag([1, 1, 2, 2])), modulus=4) is None
    assert sympl_multiplier(intmat(np.ones((4, 4), dtype=int))) is None


def test_iota():
    m = iota(-1, 2)
    assert (m == intmat(np.diag([1, 1, -1, -1]))).all()
    m = iota(3, 2, modulus=8)
    assert (m == intmat(np.diag([1, 1, 3, 3]))).all()  # 3^{-1} = 3 mod 8
    assert sympl_multiplier(m, modulus=8) == 3
    with pytest.raises(ValueError):
        iota(2, 2, modulus=8)  # not a unit
    with pytest.raises(AssertionError):
        iota(3, 2)  # over Z only +-1


def test_special_gamma_reference_matrix():
    m = special_gamma("upper", 1, 1, 2)
    assert (m == intmat([[1, 0, 2, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])).all()
    lo = special_gamma("lower", 1, 2, 3)
    assert (lo == intmat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 3, 1, 0], [3, 0, 0, 1]])).all()
    mx = special_gamma("mixed", 2, 2, 2)
    assert (mx == intmat([[1, 0, 0, 0], [0, -1, 0, 2], [0, 0, 1, 0], [0, -2, 0, 3]])).all()


def test_special_gamma_membership():
    for n in (2, 3, 4):
        for kind in ("upper", "lower", "mixed"):
            for j, k in ((1, 1), (1, 2), (2, 2)):
                m = special_gamma(kind, j, k, n)
                assert in_gamma(m, n)
    with pytest.raises(ValueError):
        special_gamma("twisted", 1, 1, 2)
    with pytest.raises(AssertionError):
        special_gamma("upper", 0, 1, 2)  # indices are 1-based


def test_group_memberships():
    assert in_s_group(identity(4), 6)
    assert in_g_group(iota(5, 2, modulus=6), 6)
    assert not in_s_group(iota(5, 2, modulus=6), 6)  # nu = 5 != 1
    assert membership(jmat(2), "Sp")
    assert membership(identity(4), "Gamma", 4)
    assert not membership(special_gamma("upper", 1, 1, 2), "Gamma", 4)


def test_multiplier_is_multiplicative_mod_n():
    rng = np.random.default_rng(5)
    n = 8
    mats = [special_gamma(("upper", "lower", "mixed")[rng.integers(0, 3)], 1, 2, 2) for _ in range(6)]
    mats += [iota(a, 2, modulus=n) for a in (1, 3, 5, 7)]
    for a in mats:
        for b in mats:
            va, vb = sympl_multiplier(a, modulus=n), sympl_multiplier(b, modulus=n)
            assert sympl_multiplier(a @ b, modulus=n) == va * vb % n


def test_siegel_point_validation():
    z = SiegelPoint(np.eye(2) * 1j)
    assert z.g == 2 and abs(z.min_im_eig - 1) < 1e-14
    with pytest.raises(ValueError):
        SiegelPoint(np.array([[1j, 1], [0, 1j]]))  # not symmetric
    with pytest.raises(ValueError):
        SiegelPoint(-1j * np.eye(2))  # negative-definite imaginary part
    # small float asymmetry is repaired
    m = np.eye(2) * 1j + np.array([[0, 1e-13], [0, 0]])
    z = SiegelPoint(m)
    assert np.allclose(z.mat, z.mat.T)


def test_act_siegel():
    z = SiegelPoint(np.eye(2) * 1j)
    assert np.allclose(act_siegel(identity(4), z).mat, z.mat)
    # J fixes iI: J(Z) = -Z^{-1}
    assert np.allclose(act_siegel(jmat(2), z).mat, z.mat)
    rng = np.random.default_rng(11)
    x = rng.uniform(-0.3, 0.3, (2, 2))
    w = SiegelPoint((x + x.T) / 2 + 1j * np.eye(2))
    a = special_gamma("upper", 1, 2, 2)
    b = special_gamma("lower", 2, 2, 3)
    lhs = act_siegel(a @ b, w).mat
    rhs = act_siegel(a, act_siegel(b, w)).mat
    assert np.allclose(lhs, rhs, atol=1e-12)


def test_intmat_rejects_non_integers():
    with pytest.raises(Exception):
        intmat([[0.5, 0], [0, 1]])
