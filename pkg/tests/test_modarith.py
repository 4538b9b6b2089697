import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goebel import (
    NotInvertible,
    QrTable,
    cumulative_product,
    factorial_valuation,
    factorize,
    invmod,
    is_prime,
    legendre,
    powmod,
    primes_up_to,
)
from goebel.errors import DomainError

from .oracles import factorial_factorization, naive_legendre, naive_powmod


def test_factorize_examples():
    assert factorize(1) == []
    assert factorize(12) == [(2, 2), (3, 1)]
    # trial division up to sqrt(2039) finds no divisor
    assert all(2039 % d for d in range(2, math.isqrt(2039) + 1))
    assert factorize(2039) == [(2039, 1)]


def test_factorize_rejects_zero():
    with pytest.raises(DomainError):
        factorize(0)


@given(st.integers(min_value=1, max_value=10 ** 6))
def test_factorize_roundtrip(n):
    f = factorize(n)
    assert math.prod(p ** e for p, e in f) == n
    assert all(e >= 1 for _, e in f)
    assert [p for p, _ in f] == sorted({p for p, _ in f})
    assert all(is_prime(p) for p, _ in f)


def test_primes_up_to():
    assert primes_up_to(1) == []
    assert primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    ps = primes_up_to(10 ** 4)
    assert len(ps) == 1229
    assert ps[-1] == 9973


def test_cumulative_product_examples():
    assert cumulative_product(43) == 43  # nu_43(43!) = 1 for a prime
    assert cumulative_product(4) == 8  # nu_2(4!) = 3
    assert cumulative_product(6) == 144  # 2^4 * 3^2


def test_cumulative_product_against_factorial_factorization():
    fac = factorial_factorization(400)
    for n in range(1, 401):
        expected = 1
        divisors = {p for p, _ in factorize(n)}
        for p, e in fac[n].items():
            if p in divisors:
                expected *= p ** e
        assert cumulative_product(n) == expected, n
        # no prime outside n's support divides the product
        P = cumulative_product(n)
        for p in fac[n]:
            if p not in divisors:
                assert P % p, (n, p)


@pytest.mark.slow
def test_cumulative_product_full_range():
    fac = factorial_factorization(10 ** 4)
    for n in range(1, 10 ** 4 + 1):
        divisors = {p for p, _ in factorize(n)}
        expected = math.prod(p ** e for p, e in fac[n].items() if p in divisors)
        assert cumulative_product(n) == expected, n


def test_factorial_valuation():
    fac = factorial_factorization(200)
    for n in (1, 5, 31, 100, 200):
        for p in (2, 3, 5, 7, 11, 97):
            assert factorial_valuation(n, p) == fac[n].get(p, 0), (n, p)


def test_powmod_examples():
    assert powmod(2, 10, 1000) == 24
    assert powmod(123, 0, 17) == 1
    assert powmod(5, 0, 1) == 0  # everything is 0 mod 1
    assert powmod(7, 2039, 2039) == 7  # Fermat, 2039 prime


def test_powmod_small_exhaustive():
    for m in range(1, 25):
        for x in range(0, 25):
            for y in range(0, 25):
                assert powmod(x, y, m) == naive_powmod(x, y, m), (x, y, m)


@given(
    st.integers(min_value=0, max_value=2 ** 10),
    st.integers(min_value=0, max_value=2 ** 10),
    st.integers(min_value=1, max_value=2 ** 10),
)
@settings(max_examples=300)
def test_powmod_matches_naive(x, y, m):
    assert powmod(x, y, m) == naive_powmod(x, y, m)


def test_powmod_rejects_negative_exponent():
    with pytest.raises(DomainError):
        powmod(2, -1, 7)


def test_invmod_examples():
    assert invmod(1, 97) == 1
    assert invmod(3, 43) == 29
    assert 3 * 29 % 43 == 1
    with pytest.raises(NotInvertible):
        invmod(2, 4)


@given(st.integers(min_value=1, max_value=10 ** 9), st.integers(min_value=2, max_value=10 ** 9))
@settings(max_examples=300)
def test_invmod_property(x, m):
    if math.gcd(x, m) == 1:
        y = invmod(x, m)
        assert 0 <= y < m
        assert x * y % m == 1
    else:
        with pytest.raises(NotInvertible):
            invmod(x, m)


def test_legendre_examples():
    for p in (3, 7, 13, 101):
        assert legendre(1, p) == 1
        assert legendre(0, p) == 0
        assert legendre(p * 3, p) == 0
    assert legendre(2, 13) == -1
    assert legendre(12, 13) == 1  # 5^2 = 25 = 12 (mod 13)


def test_legendre_matches_square_enumeration():
    for p in (3, 5, 7, 11, 13, 31, 97):
        for a in range(0, p):
            assert legendre(a, p) == naive_legendre(a, p), (a, p)


def test_legendre_rejects_even_or_tiny():
    with pytest.raises(DomainError):
        legendre(3, 4)
    with pytest.raises(DomainError):
        legendre(3, 2)


def test_legendre_complete_multiplicativity():
    for p in (3, 5, 7, 13, 31, 97):
        for a in range(1, p):
            for b in range(1, p):
                assert legendre(a, p) * legendre(b, p) == legendre(a * b, p)


def test_legendre_complete_multiplicativity_all_p_below_1000():
    # full (a, b) enumeration for every odd prime <= 997, vectorized
    import numpy as np

    for p in primes_up_to(997):
        if p < 3:
            continue
        chi = np.array([0] + [legendre(a, p) for a in range(1, p)], dtype=np.int8)
        a = np.arange(1, p, dtype=np.int64)
        prod = chi[np.outer(a, a) % p]
        assert (np.outer(chi[a], chi[a]) == prod).all(), p


def test_legendre_supplements():
    # (p-1/p) = +1 iff p = 1 (mod 4); (2/p) = +1 iff p = +-1 (mod 8)
    for p in primes_up_to(997):
        if p < 3:
            continue
        assert (legendre(p - 1, p) == 1) == (p % 4 == 1), p
        assert (legendre(2, p) == 1) == (p % 8 in (1, 7)), p


def test_qr_table_agrees_with_euler_backend():
    for p in primes_up_to(500):
        if p < 3:
            continue
        table = QrTable(p)
        for a in range(0, p):
            assert table.chi(a) == legendre(a, p), (a, p)
    assert QrTable(13).chi(12 + 13) == 1  # reduces its argument


def test_qr_table_rejects_non_odd_prime_sizes():
    with pytest.raises(DomainError):
        QrTable(4)
