"""Single-prime congruence traces and residue-class sieving over k.

The non-integrality test at an odd prime p depends on k only through
k mod (p-1), so one bad residue class eliminates a whole arithmetic
progression of k values.  Tables of bad classes are built either by a
scalar reference loop or by a vectorized sweep over all exponent classes
at once (discrete logs against a primitive root); both backends agree and
are tested against each other.

Exponent-class convention: table entries are labeled by a in [0, p-2].
For callers with actual k >= 1 the class a = 0 stands for k = p-1,
2(p-1), ..., and is evaluated with exponent p-1.  A literal exponent 0
(the k = 0 recurrence, a different sequence) is available only through
prime_trace_mod_p directly.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError
from .modarith import factorize, primes_up_to

_VECTOR_MIN_P = 64


def _check_odd_prime(p: int) -> None:
    from .modarith import is_prime

    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise DomainError(f"expected an odd prime, got {p}")


def prime_trace_mod_p(k_res: int, l_res: int, p: int) -> int:
    """Residue of p*g(p) mod p for the sequence with exponent k_res, start l_res.

    Maintains u = g(n) mod p for n = 1..p-1 (every divisor below p is
    invertible), then returns (p-1)*u + u^k_res at the final step.  Zero
    means g(p) keeps p out of its denominator.  k_res is used literally;
    see the module docstring for the class-0 convention.
    """
    _check_odd_prime(p)
    if not 0 <= l_res < p:
        raise DomainError(f"l_res must be in [0, {p - 1}], got {l_res}")
    u = l_res
    for n in range(1, p - 1):
        u = (n * u + pow(u, k_res, p)) * pow(n + 1, -1, p) % p
    return ((p - 1) * u + pow(u, k_res, p)) % p


def class_exponent(a: int, p: int) -> int:
    """Exponent representative for residue class a of actual k >= 1."""
    a %= p - 1
    return a if a else p - 1


def primitive_root(p: int) -> int:
    order_factors = [q for q, _ in factorize(p - 1)]
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in order_factors):
            return g
        g += 1


@lru_cache(maxsize=16)
def _prime_ctx(p: int):
    """Per-prime discrete-log tables: (rpow, dlog, inv) with inv[i] = i^-1 mod p."""
    r = primitive_root(p)
    rpow = np.empty(p - 1, dtype=np.int64)
    x = 1
    for j in range(p - 1):
        rpow[j] = x
        x = x * r % p
    dlog = np.zeros(p, dtype=np.int64)
    dlog[rpow] = np.arange(p - 1)
    inv = [0] * p
    inv[1] = 1
    for i in range(2, p):
        inv[i] = (p - p // i) * inv[p % i] % p
    return rpow, dlog, inv


def _final_step(p, n, U, T, inv):
    if n < p - 1:
        return (n * U + T) * inv[n + 1] % p, None
    return U, ((p - 1) * U + T) % p


def _trace_all_classes(p: int, l_res: int) -> np.ndarray:
    """Trace for every exponent class a in [0, p-2] at once (class 0 -> p-1)."""
    rpow, dlog, inv = _prime_ctx(p)
    E = np.arange(p - 1, dtype=np.int64)
    E[0] = p - 1
    U = np.full(p - 1, l_res, dtype=np.int64)
    for n in range(1, p):
        T = np.where(U == 0, 0, rpow[dlog[U] * E % (p - 1)])
        U, out = _final_step(p, n, U, T, inv)
        if out is not None:
            return out
    raise AssertionError("unreachable")


def _trace_all_l(p: int, exponent: int) -> np.ndarray:
    """Trace for every start value l in [0, p-1] at a fixed exponent >= 1."""
    if exponent < 1:
        raise DomainError("vectorized trace requires exponent >= 1")
    rpow, dlog, inv = _prime_ctx(p)
    e = exponent % (p - 1)
    if e == 0:
        e = p - 1
    U = np.arange(p, dtype=np.int64)
    for n in range(1, p):
        T = np.where(U == 0, 0, rpow[dlog[U] * e % (p - 1)])
        U, out = _final_step(p, n, U, T, inv)
        if out is not None:
            return out
    raise AssertionError("unreachable")


@dataclass(frozen=True)
class BadResidueTable:
    """Residue classes a with non-integrality at p for start value l.

    a is in [0, p-2]; class 0 is evaluated at exponent p-1 (k >= 1
    semantics).  Empty for l = 0 and l = 1 mod p.
    """

    p: int
    l: int
    bad: tuple[int, ...]


def bad_residues(p: int, l: int, backend: str = "auto") -> BadResidueTable:
    _check_odd_prime(p)
    l_res = l % p
    if backend == "auto":
        backend = "vector" if p >= _VECTOR_MIN_P else "scalar"
    if backend == "vector":
        traces = _trace_all_classes(p, l_res)
        bad = tuple(int(a) for a in np.nonzero(traces)[0])
    elif backend == "scalar":
        bad = tuple(
            a for a in range(p - 1) if prime_trace_mod_p(class_exponent(a, p), l_res, p) != 0
        )
    else:
        raise DomainError(f"unknown backend {backend!r}")
    return BadResidueTable(p=p, l=l_res, bad=bad)


@dataclass(frozen=True)
class SieveOutcome:
    k_lo: int
    k_hi: int
    bound: int
    survivors: list[int]


def _table_task(args) -> BadResidueTable:
    p, l = args
    return bad_residues(p, l)


def sieve_tables(p_max: int, l: int, tables=None, workers: int = 1) -> dict:
    """Bad-residue tables for all odd primes <= p_max, reusing any given."""
    from .parallel import pmap

    tables = dict(tables) if tables else {}
    todo = [(p, l % p) for p in primes_up_to(p_max) if p >= 3 and (p, l % p) not in tables]
    for t in pmap(_table_task, todo, workers=workers):
        tables[(t.p, t.l)] = t
    return tables


def sieve_range(
    k_lo: int, k_hi: int, p_max: int, l: int, tables=None, workers: int = 1
) -> SieveOutcome:
    """Mark k in [k_lo, k_hi] whose class is bad for some odd prime <= p_max.

    Bitset with per-prime stride marking, primes ascending, so survivor
    lists are reproducible bit for bit.
    """
    if not 2 <= k_lo <= k_hi:
        raise DomainError(f"need 2 <= k_lo <= k_hi, got {(k_lo, k_hi)}")
    if p_max < 3:
        raise DomainError(f"need p_max >= 3, got {p_max}")
    tables = sieve_tables(p_max, l, tables, workers=workers)
    size = k_hi - k_lo + 1
    marks = bytearray(size)
    primes = [p for p in primes_up_to(p_max) if p >= 3]
    for p in primes:
        step = p - 1
        for a in tables[(p, l % p)].bad:
            start = (a - k_lo) % step
            if start < size:
                marks[start::step] = b"\x01" * len(range(start, size, step))
    survivors = [k_lo + i for i in range(size) if not marks[i]]
    return SieveOutcome(k_lo=k_lo, k_hi=k_hi, bound=primes[-1] if primes else 0, survivors=survivors)


def smallest_sieving_prime(k: int, l: int, p_max: int, tables=None) -> int | None:
    """Least odd prime <= p_max whose bad table covers k, or None."""
    tables = sieve_tables(p_max, l, tables)
    for p in primes_up_to(p_max):
        if p < 3:
            continue
        if k % (p - 1) in tables[(p, l % p)].bad:
            return p
    return None


def grid_scan(p: int) -> list[tuple[int, int]]:
    """All (k, l) in [0, p-2] x [0, p-1] with non-integrality at p, sorted.

    Rows are residue classes of actual k (class 0 evaluated at exponent
    p-1), columns are start values mod p.
    """
    _check_odd_prime(p)
    pairs = []
    for a in range(p - 1):
        traces = _trace_all_l(p, class_exponent(a, p))
        pairs.extend((a, int(l)) for l in np.nonzero(traces)[0])
    pairs.sort()
    return pairs


def format_table_line(table: BadResidueTable) -> str:
    return f"{table.p},{table.l}:" + ";".join(str(a) for a in table.bad)


def parse_table_line(line: str) -> BadResidueTable:
    head, _, tail = line.strip().partition(":")
    p_s, _, l_s = head.partition(",")
    bad = tuple(int(a) for a in tail.split(";") if a)
    return BadResidueTable(p=int(p_s), l=int(l_s), bad=bad)


def write_sieve_tables(path, tables: dict) -> None:
    """One LF-terminated ASCII line per (p, l) table, ascending keys."""
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        for key in sorted(tables):
            fh.write(format_table_line(tables[key]) + "\n")


def read_sieve_tables(path) -> dict:
    tables = {}
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            if line.strip():
                t = parse_table_line(line)
                tables[(t.p, t.l)] = t
    return tables
