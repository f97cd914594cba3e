from fractions import Fraction as F

import numpy as np
import pytest

from cmtheta.action import ActionResult, act_iota_inv, act_phi, act_power_family
from cmtheta.exact import RootOfUnity
from cmtheta.modularity import gamma_multiplier
from cmtheta.symplectic import identity, intmat, iota, jmat, special_gamma
from cmtheta.theta import Characteristic


def test_iota_inv_scales_s():
    chi = Characteristic.from_den((1, 0), (1, 3), 8)
    out = act_iota_inv(3, chi)
    assert out == Characteristic.make(chi.r, [F(3, 8), F(1, 8)])
    assert act_iota_inv(1, chi) == chi
    with pytest.raises(ValueError):
        act_iota_inv(2, chi, modulus=8)  # 2 is not a unit mod 8
    assert act_iota_inv(3, chi, modulus=8) == out


def test_iota_inv_is_multiplicative():
    chi = Characteristic.from_den((2, 1), (3, 5), 12)
    assert act_iota_inv(5, act_iota_inv(7, chi)) == act_iota_inv(35, chi)


def test_power_family_iota():
    chi = Characteristic.from_den((1, 0), (1, 3), 16)
    # iota(3) is diag(1, 1, 11, 11) mod 16, and transposing leaves it diagonal
    out = act_power_family(iota(3, 2, modulus=16), chi, 16)
    assert out == act_iota_inv(11, chi)


def test_power_family_congruence_elements_fix_chi():
    chi = Characteristic.from_den((1, 0), (0, 3), 4)
    for kind in ("upper", "lower", "mixed"):
        gamma = special_gamma(kind, 1, 2, 4)
        assert act_power_family(gamma, chi, 4) == chi


def test_power_family_factor_order():
    # chi -> t(alpha) chi makes composition read left to right:
    # act(f1 f2) = act(f2) o act(f1)
    chi = Characteristic.from_den((1, 2), (3, 0), 4)
    f1 = iota(3, 2, modulus=4)
    f2 = jmat(2)
    lhs = act_power_family(f1 @ f2, chi, 4)
    rhs = act_power_family(f2, act_power_family(f1, chi, 4), 4)
    assert lhs == rhs
    lhs2 = act_power_family(f2 @ f1, chi, 4)
    rhs2 = act_power_family(f1, act_power_family(f2, chi, 4), 4)
    assert lhs2 == rhs2


def test_power_family_validation():
    chi = Characteristic.from_den((1, 0), (0, 3), 4)
    with pytest.raises(ValueError):
        act_power_family(intmat(np.diag([1, 1, 2, 2])), chi, 4)  # nu = 2 is no unit
    with pytest.raises(AssertionError):
        act_power_family(identity(4), chi, 3)  # level must be even
    with pytest.raises(AssertionError):
        act_power_family(identity(4), Characteristic.from_den((1, 0), (0, 1), 3), 4)


def test_act_phi_identity():
    chi = Characteristic.from_den((1, 2), (2, 1), 3)
    res = act_phi(identity(4), chi, 3)
    assert res.multiplier == RootOfUnity.one()
    assert res.chi_out == chi


def test_act_phi_under_j():
    # worked example: t(J) swaps the rows up to sign, a = nu(J) = 1, so the
    # exponent is (<r,s> - <s,-r>)/2 = <r,s> = 4/9
    chi = Characteristic.make([F(1, 3), F(2, 3)], [F(2, 3), F(1, 3)])
    res = act_phi(jmat(2), chi, 3)
    assert res.multiplier == RootOfUnity(F(4, 9))
    assert res.chi_out == Characteristic.make([F(2, 3), F(1, 3)], [F(-1, 3), F(-2, 3)])
    can = res.canonical()
    assert can.multiplier == RootOfUnity(F(4, 9))  # reduction phase e(-1) is trivial
    assert can.chi_out == Characteristic.make([F(2, 3), F(1, 3)], [F(2, 3), F(1, 3)])


def test_act_phi_congruence_overlap():
    # gamma = I mod 2m^2 acts trivially on the characteristic and the
    # multiplier agrees exactly with the modularity-side computation
    m = 3
    level = 2 * m * m
    chi = Characteristic.from_den((1, 2), (2, 0), m)
    for kind in ("upper", "lower", "mixed"):
        gamma = special_gamma(kind, 1, 2, level)
        res = act_phi(gamma, chi, m).canonical()
        assert res.chi_out == chi
        assert res.multiplier == gamma_multiplier(gamma, chi, level)


def test_act_phi_validation():
    chi = Characteristic.from_den((1, 0), (0, 1), 3)
    with pytest.raises(AssertionError):
        act_phi(identity(4), chi, 4)  # even denominator
    with pytest.raises(ValueError):
        act_phi(intmat(np.diag([1, 1, 3, 3])), chi, 3)  # nu = 3 not a unit mod 18
    with pytest.raises(AssertionError):
        act_phi(identity(4), Characteristic.from_den((1, 0), (0, 1), 2), 3)


def test_canonical_folds_translation_phase():
    chi = Characteristic.make([F(1, 4), 0], [F(5, 4), F(1, 2)])
    res = ActionResult(RootOfUnity(F(1, 3)), chi).canonical()
    assert res.chi_out == Characteristic.make([F(1, 4), 0], [F(1, 4), F(1, 2)])
    assert res.multiplier == RootOfUnity(F(1, 3) + F(1, 4))  # e(<(1/4,0),(1,0)>) folded in
