import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings as hsettings, strategies as st

from cmtheta.exact import (
    CycloElem,
    RootOfUnity,
    cyclotomic_coeffs,
    euler_phi,
    is_subgroup,
    orbit_product,
    orbit_sum,
    rel_trace_norm,
    solve_exact,
    unit_residues,
)


def test_euler_phi():
    assert [euler_phi(n) for n in (1, 2, 3, 4, 5, 8, 12, 25)] == [1, 1, 2, 2, 4, 4, 4, 20]


def test_cyclotomic_polynomials():
    assert cyclotomic_coeffs(1) == (-1, 1)
    assert cyclotomic_coeffs(2) == (1, 1)
    assert cyclotomic_coeffs(4) == (1, 0, 1)
    assert cyclotomic_coeffs(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_coeffs(6) == (1, -1, 1)
    assert cyclotomic_coeffs(12) == (1, 0, -1, 0, 1)
    # Phi_25 = x^20 + x^15 + x^10 + x^5 + 1
    expected = tuple(1 if k % 5 == 0 else 0 for k in range(21))
    assert cyclotomic_coeffs(25) == expected


def test_golden_ratio_products():
    z = CycloElem.zeta(5)
    assert (z + z**4) * (z**2 + z**3) == -1
    assert abs((z + z**4).embed() - (5**0.5 - 1) / 2) < 1e-14


def test_power_relations():
    z = CycloElem.zeta(5)
    assert z**5 == 1
    assert z**-1 == z**4
    assert sum((z**k for k in range(1, 5)), CycloElem.from_rational(5, 0)) == -1


def test_inverse_and_division():
    z = CycloElem.zeta(7)
    a = 1 + z + 3 * z**2
    assert a * a.inverse() == 1
    assert (a / a) == 1
    assert a / 2 == a * Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        CycloElem.from_rational(7, 0).inverse()


def test_mixed_order_arithmetic():
    # zeta_2 + zeta_3 lands in Q(zeta_6)
    a = CycloElem.zeta(2) + CycloElem.zeta(3)
    assert a.n == 6
    assert abs(a.embed() - (cmath.exp(1j * cmath.pi) + cmath.exp(2j * cmath.pi / 3))) < 1e-14
    b = CycloElem.zeta(5)
    assert (b.lift(15)) == b  # equality coerces through the compositum


def test_galois_action():
    z = CycloElem.zeta(5)
    a = 1 + 2 * z + 3 * z**2
    assert a.galois(2).galois(3) == a.galois(6 % 5)
    assert a.conj().conj() == a
    assert a.galois(1) == a
    with pytest.raises(AssertionError):
        CycloElem.zeta(10).galois(5)


def test_degree():
    assert CycloElem.zeta(5).degree() == 4
    assert CycloElem.zeta(25).degree() == 20
    z = CycloElem.zeta(5)
    assert (z + z**4).degree() == 2
    assert CycloElem.from_rational(12, 7).degree() == 1


def test_trace_norm_over_subgroup():
    z25 = CycloElem.zeta(25)
    sub = tuple((1 + 5 * k) % 25 for k in range(5))
    assert rel_trace_norm(z25, sub, "trace").is_zero()
    assert rel_trace_norm(3 * z25 + 1, sub, "norm") == 243 * CycloElem.zeta(5) + 1
    with pytest.raises(ValueError):
        rel_trace_norm(z25, (1, 2), "trace")  # not a subgroup
    with pytest.raises(ValueError):
        rel_trace_norm(z25, sub, "resolvent")


def test_full_orbit_is_rational():
    z = CycloElem.zeta(7)
    a = 1 + z
    n = orbit_product(a, unit_residues(7))
    t = orbit_sum(a, unit_residues(7))
    assert n.is_rational() and t.is_rational()
    assert n.rational_value() == 1  # prod (1 + z^t) = Phi_7(-1)
    assert t.rational_value() == 5  # 6 + sum of all primitive roots = 6 - 1
    val = 1.0
    for t_ in unit_residues(7):
        val *= abs(1 + cmath.exp(2j * cmath.pi * t_ / 7))
    assert abs(val - float(n.rational_value())) < 1e-9


def test_is_subgroup():
    assert is_subgroup(8, (1, 3))
    assert is_subgroup(8, (1, 3, 5, 7))
    assert not is_subgroup(8, (3, 5))  # missing identity
    assert not is_subgroup(8, (1, 2))  # 2 is not a unit
    assert not is_subgroup(25, (1, 6, 11))  # not closed


def test_solve_exact():
    rows = [[1, 2], [3, 4]]
    sol = solve_exact(rows, [5, 6])
    assert sol == [Fraction(-4), Fraction(9, 2)]
    assert solve_exact([[1, 2], [2, 4]], [1, 1]) is None


def test_embed_high_precision():
    z = CycloElem.zeta(5)
    fast = (1 + z).embed()
    slow = (1 + z).embed(prec=50)
    assert abs(fast - slow) < 1e-13


def test_root_of_unity():
    i = RootOfUnity(Fraction(1, 4))
    assert i * i == RootOfUnity(Fraction(1, 2))
    assert (i**4) == RootOfUnity.one()
    assert i.conj() == RootOfUnity(Fraction(3, 4))
    assert i.order == 4
    assert abs(i.value() - 1j) < 1e-15
    assert RootOfUnity(Fraction(9, 4)) == i  # reduced mod 1
    assert (i / i) == RootOfUnity.one()


small_elems = st.builds(
    lambda coeffs: CycloElem(5, coeffs),
    st.lists(st.integers(-5, 5), min_size=1, max_size=4),
)


@hsettings(max_examples=60, deadline=None)
@given(small_elems, small_elems, small_elems)
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == 0


@hsettings(max_examples=40, deadline=None)
@given(small_elems, small_elems, st.sampled_from([1, 2, 3, 4]))
def test_galois_is_multiplicative(a, b, t):
    assert (a * b).galois(t) == a.galois(t) * b.galois(t)
    assert (a + b).galois(t) == a.galois(t) + b.galois(t)


@hsettings(max_examples=30, deadline=None)
@given(small_elems, small_elems)
def test_embed_is_homomorphism(a, b):
    assert abs((a * b).embed() - a.embed() * b.embed()) < 1e-9
