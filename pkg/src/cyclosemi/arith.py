"""Elementary multiplicative number theory.

All inputs in this package stay far below 10**6, so plain trial division is
enough everywhere.
"""

from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .errors import DomainError

Factorization = list[tuple[int, int]]


def _check_positive(n: int) -> None:
    if n <= 0:
        raise DomainError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=8192)
def _factor_tuple(n: int) -> tuple[tuple[int, int], ...]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def factorize(n: int) -> Factorization:
    """Prime factorization of ``n`` as ascending ``(prime, exponent)`` pairs."""
    _check_positive(n)
    return list(_factor_tuple(n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return _factor_tuple(n) == ((n, 1),)


def is_prime_power(n: int) -> bool:
    return n >= 2 and len(_factor_tuple(n)) == 1


def divisors(n: int) -> list[int]:
    _check_positive(n)
    divs = [1]
    for p, e in _factor_tuple(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def mobius(n: int) -> int:
    _check_positive(n)
    fac = _factor_tuple(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def totient(n: int) -> int:
    _check_positive(n)
    result = n
    for p, _ in _factor_tuple(n):
        result -= result // p
    return result


def divisor_count(n: int) -> int:
    _check_positive(n)
    count = 1
    for _, e in _factor_tuple(n):
        count *= e + 1
    return count


@lru_cache(maxsize=16)
def totient_table(limit: int) -> tuple[int, ...]:
    """``phi(0..limit)`` by sieve; ``phi(0)`` is reported as 0."""
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:
            for m in range(p, limit + 1, p):
                phi[m] -= phi[m] // p
    if limit >= 0:
        phi[0] = 0
    return tuple(phi)


def primes_up_to(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]
