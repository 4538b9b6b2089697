"""Modular arithmetic kernel.

Factorization by trial division, p-adic valuations of factorials, modular
exponentiation and inversion, and Legendre symbols with two interchangeable
backends (Euler's criterion for single queries, a quadratic-residue bitmap
for bulk scans).

All functions are pure; the bitmap tables are immutable after construction
and safe to share across worker processes.
"""

import math
from bisect import bisect_right

from .errors import DomainError, NotInvertible

DEFAULT_PRIME_BOUND = 10 ** 6

_prime_table: list[int] = []
_prime_bound = 0


def _sieve(n: int) -> bytearray:
    flags = bytearray([1]) * (n + 1)
    flags[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return flags


def _ensure_primes(bound: int) -> None:
    # Geometric growth so repeated small requests do not re-sieve.
    global _prime_table, _prime_bound
    if bound <= _prime_bound:
        return
    bound = max(bound, 2 * _prime_bound, 10 ** 4)
    flags = _sieve(bound)
    _prime_table = [i for i in range(bound + 1) if flags[i]]
    _prime_bound = bound


def primes_up_to(n: int) -> list[int]:
    """All primes <= n, ascending."""
    if n < 2:
        return []
    _ensure_primes(n)
    return _prime_table[: bisect_right(_prime_table, n)]


def primes_in_range(lo: int, hi: int) -> list[int]:
    """All primes in [lo, hi], ascending."""
    if hi < lo:
        return []
    _ensure_primes(hi)
    i = bisect_right(_prime_table, lo - 1)
    j = bisect_right(_prime_table, hi)
    return _prime_table[i:j]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    _ensure_primes(math.isqrt(n) + 1)
    for p in _prime_table:
        if p * p > n:
            return True
        if n % p == 0:
            return n == p
    return True


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n as ascending (prime, exponent) pairs.

    n = 1 yields the empty list.  Trial division against a cached prime
    table; adequate for sequence indices, not cryptographic sizes.
    """
    if n < 1:
        raise DomainError(f"factorize requires n >= 1, got {n}")
    _ensure_primes(min(math.isqrt(n) + 1, DEFAULT_PRIME_BOUND))
    out = []
    for p in _prime_table:
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        if n > _prime_bound * _prime_bound:
            raise DomainError(f"cofactor {n} exceeds the trial-division range")
        out.append((n, 1))
    return out


def factorial_valuation(n: int, p: int) -> int:
    """p-adic valuation of n!, by Legendre's formula sum_i floor(n / p^i)."""
    v = 0
    q = p
    while q <= n:
        v += n // q
        q *= p
    return v


def cumulative_product(n: int) -> int:
    """The starting modulus for an integrality run of length n.

    Returns prod p^v_p(n!) over the primes p dividing n.  For prime n this
    is just n; for composite n it grows far beyond machine words.
    """
    if n < 1:
        raise DomainError(f"cumulative_product requires n >= 1, got {n}")
    P = 1
    for p, _ in factorize(n):
        P *= p ** factorial_valuation(n, p)
    return P


def powmod(x: int, y: int, m: int) -> int:
    """x**y mod m by binary exponentiation (never via full exponentiation)."""
    if m < 1:
        raise DomainError(f"powmod requires modulus >= 1, got {m}")
    if y < 0:
        raise DomainError("powmod requires a non-negative exponent; use invmod")
    return pow(x, y, m)


def invmod(x: int, m: int) -> int:
    """y with x*y == 1 (mod m), 0 <= y < m.  Raises NotInvertible."""
    if m < 1:
        raise DomainError(f"invmod requires modulus >= 1, got {m}")
    try:
        return pow(x, -1, m)
    except ValueError:
        raise NotInvertible(f"{x} is not invertible modulo {m}") from None


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion.

    0 iff p divides a, +1 iff a is a nonzero quadratic residue mod p,
    -1 otherwise.
    """
    if p < 3 or p % 2 == 0:
        raise DomainError(f"legendre requires an odd prime, got {p}")
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


class QrTable:
    """Quadratic-residue bitmap for one odd prime, built in O(p).

    ``bits[x]`` is 1 exactly when x is a nonzero quadratic residue mod p.
    Used by the bulk-scan code paths; agrees with :func:`legendre` (tested).
    """

    __slots__ = ("p", "bits")

    def __init__(self, p: int):
        if p < 3 or p % 2 == 0:
            raise DomainError(f"QrTable requires an odd prime, got {p}")
        self.p = p
        bits = bytearray(p)
        for x in range(1, (p + 1) // 2):
            bits[x * x % p] = 1
        self.bits = bytes(bits)

    def chi(self, a: int) -> int:
        a %= self.p
        if a == 0:
            return 0
        return 1 if self.bits[a] else -1
