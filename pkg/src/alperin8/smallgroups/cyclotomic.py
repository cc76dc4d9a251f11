"""Exact elements of Z[zeta_e] in the power basis 1, z, ..., z^(phi(e)-1)."""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ..exactmath import cyclotomic_poly


@lru_cache(maxsize=None)
def _reduction_table(e: int) -> tuple[tuple[int, ...], ...]:
    """Row t gives z^t (0 <= t < e) in the power basis modulo Phi_e."""
    phi = cyclotomic_poly(e)
    n = len(phi) - 1
    rows = []
    cur = [0] * n
    cur[0] = 1
    for _ in range(e):
        rows.append(tuple(cur))
        # multiply by z and reduce with the monic Phi_e
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


class CyclotomicInteger:
    __slots__ = ("e", "coeffs")

    def __init__(self, e: int, coeffs):
        n = len(cyclotomic_poly(e)) - 1
        coeffs = tuple(coeffs)
        if len(coeffs) != n:
            raise ValueError(f"conductor {e} needs {n} coefficients")
        self.e = e
        self.coeffs = coeffs

    @classmethod
    def zero(cls, e: int) -> "CyclotomicInteger":
        return cls(e, (0,) * (len(cyclotomic_poly(e)) - 1))

    @classmethod
    def rational(cls, e: int, value) -> "CyclotomicInteger":
        z = [0] * (len(cyclotomic_poly(e)) - 1)
        z[0] = value
        return cls(e, z)

    @classmethod
    def root_power(cls, e: int, t: int) -> "CyclotomicInteger":
        return cls(e, _reduction_table(e)[t % e])

    @classmethod
    def from_exponent_counts(cls, e: int, counts: dict[int, int]) -> "CyclotomicInteger":
        """sum_t counts[t] * z^t."""
        table = _reduction_table(e)
        acc = [0] * (len(cyclotomic_poly(e)) - 1)
        for t, m in counts.items():
            if m:
                for i, c in enumerate(table[t % e]):
                    acc[i] += m * c
        return cls(e, acc)

    def _check(self, other: "CyclotomicInteger") -> None:
        if self.e != other.e:
            raise ValueError("conductors differ")

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicInteger.rational(self.e, other)
        self._check(other)
        return CyclotomicInteger(self.e, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicInteger(self.e, (-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CyclotomicInteger(self.e, (a * other for a in self.coeffs))
        self._check(other)
        table = _reduction_table(self.e)
        acc = [0] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    for t, c in enumerate(table[(i + j) % self.e]):
                        if c:
                            acc[t] += a * b * c
        return CyclotomicInteger(self.e, acc)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.is_rational() and self.coeffs[0] == other
        return isinstance(other, CyclotomicInteger) and self.e == other.e and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.e, self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def galois(self, a: int) -> "CyclotomicInteger":
        """Image under z -> z^a (a coprime to e)."""
        if gcd(a, self.e) != 1:
            raise ValueError("exponent must be a unit mod e")
        return CyclotomicInteger.from_exponent_counts(self.e, {(i * a) % self.e: c for i, c in enumerate(self.coeffs) if c})

    def conjugate(self) -> "CyclotomicInteger":
        return self.galois(self.e - 1 if self.e > 1 else 1)

    def trace(self):
        """Sum of all Galois conjugates (a rational integer)."""
        total = CyclotomicInteger.zero(self.e)
        for a in range(1, self.e + 1):
            if gcd(a, self.e) == 1:
                total = total + self.galois(a)
        return total.rational_value()

    def divisible_by(self, n: int) -> bool:
        """Whether self / n is again an algebraic integer (power basis is integral)."""
        return all(isinstance(c, int) and c % n == 0 for c in self.coeffs)

    def to_complex(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.e)
        return sum(complex(c) * z**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*z{self.e}^{i}")
        return " + ".join(terms) if terms else "0"
