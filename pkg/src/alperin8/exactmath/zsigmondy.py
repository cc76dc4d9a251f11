"""Zsigmondy (primitive) prime divisors of q^n - 1."""

from __future__ import annotations

from functools import lru_cache

from sympy import isprime

from .cyclo import divisors, phi_value

TRIAL_LIMIT = 10**6


class ZsigmondyError(RuntimeError):
    pass


def multiplicative_order(q: int, p: int) -> int:
    q %= p
    if q == 0:
        raise ValueError("q divisible by p")
    for m in divisors(p - 1):
        if pow(q, m, p) == 1:
            return m
    raise AssertionError("unreachable")


def _small_prime_factors(n: int, limit: int = TRIAL_LIMIT) -> tuple[list[int], int]:
    """Distinct prime factors of n below ``limit`` and the remaining cofactor."""
    found = []
    for p in (2, 3):
        if n % p == 0:
            found.append(p)
            while n % p == 0:
                n //= p
    f = 5
    while f < limit and f * f <= n:
        for p in (f, f + 2):
            if n % p == 0:
                found.append(p)
                while n % p == 0:
                    n //= p
        f += 6
    return found, n


@lru_cache(maxsize=None)
def zsigmondy_prime(q: int, n: int) -> int:
    """Smallest prime p dividing q^n - 1 but no q^m - 1 with 0 < m < n.

    Every such prime divides Phi_n(q), so only that factor is searched.
    """
    if n < 1 or q < 2:
        raise ValueError("need q >= 2 and n >= 1")
    target = phi_value(n, q)
    small, rest = _small_prime_factors(target)
    for p in sorted(small):
        if q % p and multiplicative_order(q, p) == n:
            return p
    if rest > 1:
        # rest has no factor below the trial limit
        if not (rest < TRIAL_LIMIT**2 or isprime(rest)):
            raise ZsigmondyError(f"cofactor {rest} of Phi_{n}({q}) could not be factored")
        if multiplicative_order(q, rest) == n:
            return rest
    raise ZsigmondyError(f"no Zsigmondy prime for (q, n) = ({q}, {n})")
