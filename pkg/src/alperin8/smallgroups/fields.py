"""Small finite fields GF(p^k) with precomputed tables.

Elements are the integers 0..q-1, read as base-p digit vectors of a polynomial
in a root of a fixed monic irreducible of degree k.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from sympy import factorint


class UnsupportedField(ValueError):
    pass


def _prime_power(q: int) -> tuple[int, int]:
    f = factorint(q)
    if q < 2 or len(f) != 1:
        raise UnsupportedField(f"{q} is not a prime power")
    (p, k), = f.items()
    return p, k


def _poly_mulmod(a: list[int], b: list[int], modpoly: list[int], p: int) -> list[int]:
    k = len(modpoly) - 1
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for deg in range(len(prod) - 1, k - 1, -1):
        c = prod[deg]
        if c:
            for i in range(k + 1):
                prod[deg - k + i] = (prod[deg - k + i] - c * modpoly[i]) % p
    return prod[:k]


def _has_root(coeffs: list[int], p: int) -> bool:
    return any(sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def _irreducible(p: int, k: int) -> list[int]:
    """Smallest monic irreducible of degree k over GF(p) (k <= 3 via root test)."""
    if k > 3:
        raise UnsupportedField("extension degree above 3 is not supported")
    for tail in product(range(p), repeat=k):
        coeffs = list(reversed(tail)) + [1]
        if coeffs[0] and not _has_root(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible found")


class FiniteField:
    def __init__(self, q: int):
        p, k = _prime_power(q)
        self.q, self.p, self.k = q, p, k
        self.modulus = _irreducible(p, k) if k > 1 else [0, 1]
        digits = [self._digits(x) for x in range(q)]
        self.add = [[self._pack([(a + b) % p for a, b in zip(da, db)]) for db in digits] for da in digits]
        if k == 1:
            self.mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            self.mul = [[self._pack(_poly_mulmod(da, db, self.modulus, p)) for db in digits] for da in digits]
        self.neg = [self.add[x].index(0) for x in range(q)]
        self.inv = [0] + [self.mul[x].index(1) for x in range(1, q)]

    def _digits(self, x: int) -> list[int]:
        return [(x // self.p**i) % self.p for i in range(self.k)]

    def _pack(self, digits: list[int]) -> int:
        return sum(d * self.p**i for i, d in enumerate(digits))

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> FiniteField:
    return FiniteField(q)
