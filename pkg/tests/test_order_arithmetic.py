from fractions import Fraction

from ballquot.cyclic_algebra import AlgElt, b_element
from ballquot.cyclotomic import CycElt, lam, lam_bar, zeta7
from ballquot import order_arithmetic as oa


def test_K_coordinates_and_integrality():
    x = lam()
    a, b = oa.K_coords(x)
    # lambda = a + b * lambda with a = 0, b = 1
    assert (a, b) == (Fraction(0), Fraction(1))
    assert oa.is_K_integral(lam())
    assert not oa.is_K_integral(lam() * CycElt.rational(7, Fraction(1, 2)))


def test_lambda_valuation():
    assert oa.lambda_valuation(lam()) == 1
    assert oa.lambda_valuation(CycElt.rational(7, 2)) == 1
    assert oa.lambda_valuation(CycElt.rational(7, 4)) == 2
    assert oa.lambda_valuation(lam_bar()) == 0
    assert oa.lambda_valuation(CycElt.one(7)) == 0


def test_standard_order_contains_its_generators():
    basis = oa.OrderBasis.standard()
    b = b_element()
    coords = basis.coordinates(b)
    assert all(oa.is_K_integral(c) for c in coords)
    # the adjugate of b also lies in the order: b^2 + 3b - 3
    three = AlgElt.from_L(CycElt.rational(7, 3))
    adj = b * b + b * three - three
    assert all(oa.is_K_integral(c) for c in basis.coordinates(adj))


def test_order_is_closed_under_multiplication_on_generators():
    basis = oa.OrderBasis.standard()
    for x in basis.elements:
        for y in basis.elements:
            coords = basis.coordinates(x * y)
            assert all(oa.is_K_integral(c) for c in coords)


def test_discriminant_normalization_report():
    d = oa.discriminant()
    assert d["abs_value"] == 21952
    assert d["factorization"] == {2: 6, 7: 3}
    assert d["is_two_to_six"] is False
    assert d["ramified_part_exponent"] == 3
    assert d["two_to_six_after_ramified_part"] is True


def test_split_matrix_order_discriminant_is_a_unit():
    d = oa.split_matrix_order_discriminant()
    assert d["abs_value"] == 1 and d["is_unit"] is True


def test_twisted_involution_does_not_preserve_the_order():
    assert oa.is_iota_b_invariant() is False
    rep = oa.iota_b_invariance_report()
    assert rep["invariant"] is False
    assert rep["denominator_primes"] == [3]
    assert rep["reduced_norm_of_b"].as_rational() == 3
    assert rep["b_in_order"] is True
    assert rep["adjugate_of_b_in_order"] is True
    assert rep["invariant_away_from"] == [3]


def test_plain_involution_preserves_the_order():
    basis = oa.OrderBasis.standard()
    for x in basis.elements:
        coords = basis.coordinates(x.iota())
        assert all(oa.is_K_integral(c) for c in coords)


def test_congruence_index():
    assert oa.congruence_index(2, 3) == 7
    assert oa.congruence_index(3, 3) == 13
    assert oa.congruence_index(2, 1) == 1


def test_torsion_orders():
    rep = oa.torsion_orders()
    assert rep.allowed_orders == frozenset({1, 7})
    assert 2 in rep.excluded
    assert 14 in rep.excluded


def test_torsion_free_check():
    assert oa.torsion_free_check(2, 7) is True
    assert oa.torsion_free_check(7, 7) is False
