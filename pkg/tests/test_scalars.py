from fractions import Fraction

from orbigm.scalars import Cyclo, cyclotomic_coeffs, root_of_unity


def test_cyclotomic_polynomials():
    assert cyclotomic_coeffs(1) == (-1, 1)
    assert cyclotomic_coeffs(2) == (1, 1)
    assert cyclotomic_coeffs(3) == (1, 1, 1)
    assert cyclotomic_coeffs(4) == (1, 0, 1)
    assert cyclotomic_coeffs(6) == (1, -1, 1)
    assert cyclotomic_coeffs(12) == (1, 0, -1, 0, 1)


def test_zeta_powers_cycle():
    z = Cyclo.zeta(6)
    p = Cyclo.of(6, 1)
    seen = []
    for _ in range(6):
        p = p * z
        seen.append(p)
    assert seen[-1] == 1
    assert seen[2] == -1


def test_zeta3_sum_is_minus_one():
    z = Cyclo.zeta(3)
    assert z + z * z == -1


def test_inverse():
    z = Cyclo.zeta(5)
    for k in range(1, 5):
        w = z ** k
        assert w * w.inverse() == 1
    a = Cyclo.of(7, Fraction(3, 2)) + Cyclo.zeta(7, 2)
    assert a * a.inverse() == 1
    assert a / a == 1


def test_rational_detection():
    assert root_of_unity(1, 0) == 1
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(4, 2) == -1
    z = root_of_unity(4, 1)
    assert isinstance(z, Cyclo)
    assert z * z == -1
    assert (z ** 4).as_rational() == 1


def test_mixed_arithmetic_with_fractions():
    z = Cyclo.zeta(3)
    v = Fraction(1, 2) * z + 1
    assert v - 1 == Fraction(1, 2) * z
    assert 2 * v == z + 2
