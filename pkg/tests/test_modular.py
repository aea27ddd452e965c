import math

import pytest

from coverhom import DivisionByZero, InvalidConfig, binomial_mod, catalan_mod, crt_coefficients, ff_inv


def test_ff_inv_identity():
    assert ff_inv(1, 3) == 1


def test_ff_inv_two_mod_three():
    # brute force oracle: the unique b with 2*b = 1 mod 3
    expected = next(b for b in range(1, 3) if (2 * b) % 3 == 1)
    assert ff_inv(2, 3) == expected == 2


def test_ff_inv_zero_raises():
    with pytest.raises(DivisionByZero):
        ff_inv(0, 5)


def test_ff_inv_brute_force_small_fields():
    for r in (3, 5, 7, 11):
        for a in range(1, r):
            assert a * ff_inv(a, r) % r == 1


def test_crt_coefficients_example():
    qs, e = crt_coefficients((3, 5), 1)
    assert qs == [100, 126]
    assert e == 100 * 3 + 126 * 5 == 930
    # direct modular arithmetic on the stated congruences
    assert qs[0] % 9 == 1 and qs[0] % 25 == 0
    assert qs[1] % 9 == 0 and qs[1] % 25 == 1


def test_crt_single_prime():
    qs, e = crt_coefficients((3,), 1)
    assert qs == [1] and e == 3


def test_crt_repeated_prime_rejected():
    with pytest.raises(InvalidConfig):
        crt_coefficients((3, 3), 1)


@pytest.mark.parametrize("primes,k", [((3, 5), 1), ((3, 5, 7), 2), ((5, 11), 3)])
def test_crt_congruence_families(primes, k):
    qs, e = crt_coefficients(primes, k)
    for i, qi in enumerate(qs):
        for j, rj in enumerate(primes):
            assert qi % rj ** (k + 1) == (1 if i == j else 0)
    assert e == sum(q * r ** k for q, r in zip(qs, primes))


def _pascal_mod(n, r):
    # independent oracle: Pascal's triangle reduced mod r
    row = [1]
    for _ in range(n):
        row = [1] + [(a + b) % r for a, b in zip(row, row[1:])] + [1]
    return row


def test_binomial_examples():
    assert binomial_mod(3, 1, 3) == 0  # C(3,1) = 3
    assert binomial_mod(9, 4, 3) == 0  # 126 = 3 * 42
    assert binomial_mod(9, 9, 3) == 1


def test_binomial_against_pascal():
    for n in (5, 9, 27):
        row = _pascal_mod(n, 3)
        for e in range(n + 1):
            assert binomial_mod(n, e, 3) == row[e]


def test_binomial_out_of_range():
    with pytest.raises(InvalidConfig):
        binomial_mod(5, 6, 3)


def test_prime_power_binomials_vanish():
    # C(r^k, e) = 0 mod r for 0 < e < r^k; exhaustive at r = 3, k <= 3
    for k in (1, 2, 3):
        n = 3 ** k
        for e in range(1, n):
            assert binomial_mod(n, e, 3) == 0
        assert binomial_mod(n, 0, 3) == 1 and binomial_mod(n, n, 3) == 1


def test_catalan_values():
    # 1, 1, 2, 5, 14, 42, 132
    cats = [math.comb(2 * m, m) // (m + 1) for m in range(7)]
    for m, c in enumerate(cats):
        for r in (3, 5, 7):
            assert catalan_mod(m, r) == c % r
