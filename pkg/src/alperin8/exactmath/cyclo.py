"""Cyclotomic polynomials and symbolic cyclotomic products.

A :class:`CycProduct` is a formal product ``scalar * q^a * prod Phi_d(q)^e_d``.
Group orders, character degrees and their quotients are all carried in this
form and only evaluated at a concrete ``q`` on demand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

Poly = tuple[int, ...]  # coefficients, constant term first


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def poly_mul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Division by a monic integer polynomial."""
    if b[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(a)
    db = len(b) - 1
    if len(rem) <= db:
        return (0,), tuple(rem)
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if c:
            quot[k - db] = c
            for j in range(db + 1):
                rem[k - db + j] -= c * b[j]
    rem = rem[:db] or [0]
    return tuple(quot), _trim(rem)


def _trim(p: list[int]) -> Poly:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_eval(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


@lru_cache(maxsize=None)
def cyclotomic_poly(d: int) -> Poly:
    """Return the d-th cyclotomic polynomial as a coefficient tuple (low to high).

    >>> cyclotomic_poly(12)
    (1, 0, -1, 0, 1)
    """
    if d < 1:
        raise ValueError("d must be positive")
    num: Poly = (-1,) + (0,) * (d - 1) + (1,)
    for e in divisors(d)[:-1]:
        num, rem = poly_divmod(num, cyclotomic_poly(e))
        assert rem == (0,), "x^d - 1 not divisible by a cyclotomic factor"
    return num


@lru_cache(maxsize=None)
def phi_value(d: int, q: int) -> int:
    return poly_eval(cyclotomic_poly(d), q)


def binomial_phis(n: int, sign: int) -> dict[int, int]:
    """Phi-exponents of ``q^n - sign`` (sign = +1 gives q^n - 1, -1 gives q^n + 1)."""
    if sign == 1:
        return {d: 1 for d in divisors(n)}
    if sign == -1:
        return {d: 1 for d in divisors(2 * n) if n % d}
    raise ValueError("sign must be +1 or -1")


def power_substitution(d: int, j: int) -> list[int]:
    """The indices m with Phi_d(x^j) = prod Phi_m(x).

    A root of Phi_d(x^j) is a root of unity z whose j-th power has order d,
    i.e. ord(z) = m with m / gcd(m, j) = d.
    """
    return [m for m in divisors(d * j) if m // gcd(m, j) == d]


def negated_index(d: int) -> int:
    """Index d' with Phi_d(-q) = +-Phi_d'(q)."""
    if d % 2:
        return 2 * d
    if d % 4 == 2:
        return d // 2
    return d


def _v2(n: int) -> int:
    n = abs(n)
    return (n & -n).bit_length() - 1


@dataclass(frozen=True)
class CycProduct:
    """Exact product ``scalar * q**q_power * prod(Phi_d(q)**e)``.

    ``phis`` is a sorted tuple of ``(d, e)`` pairs with ``e != 0``.  Use
    :meth:`make` to build one from a mapping.
    """

    scalar: Fraction = Fraction(1)
    q_power: int = 0
    phis: tuple[tuple[int, int], ...] = ()

    @classmethod
    def make(cls, scalar=1, q_power: int = 0, phis: Mapping[int, int] | Iterable = ()) -> "CycProduct":
        items = phis.items() if isinstance(phis, Mapping) else phis
        acc: dict[int, int] = {}
        for d, e in items:
            d, e = int(d), int(e)
            if d < 1:
                raise ValueError(f"bad cyclotomic index {d}")
            acc[d] = acc.get(d, 0) + e
        norm = tuple(sorted((d, e) for d, e in acc.items() if e))
        return cls(Fraction(scalar), int(q_power), norm)

    @classmethod
    def binomial(cls, n: int, sign: int = 1) -> "CycProduct":
        return cls.make(1, 0, binomial_phis(n, sign))

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.phis)

    def exponent(self, d: int) -> int:
        return self.exponents.get(d, 0)

    def __mul__(self, other: "CycProduct | int | Fraction") -> "CycProduct":
        if not isinstance(other, CycProduct):
            return CycProduct(self.scalar * Fraction(other), self.q_power, self.phis)
        return CycProduct.make(
            self.scalar * other.scalar,
            self.q_power + other.q_power,
            list(self.phis) + list(other.phis),
        )

    __rmul__ = __mul__

    def inverse(self) -> "CycProduct":
        if self.scalar == 0:
            raise ZeroDivisionError("zero scalar")
        return CycProduct(1 / self.scalar, -self.q_power, tuple((d, -e) for d, e in self.phis))

    def __truediv__(self, other: "CycProduct | int | Fraction") -> "CycProduct":
        if not isinstance(other, CycProduct):
            return CycProduct(self.scalar / Fraction(other), self.q_power, self.phis)
        return self * other.inverse()

    def __pow__(self, k: int) -> "CycProduct":
        if k < 0:
            return self.inverse() ** (-k)
        return CycProduct.make(self.scalar**k, self.q_power * k, [(d, e * k) for d, e in self.phis])

    def r_prime(self) -> "CycProduct":
        """Drop the q-power (the r'-part when q is a power of r)."""
        return CycProduct(self.scalar, 0, self.phis)

    def without_scalar(self) -> "CycProduct":
        return CycProduct(Fraction(1), self.q_power, self.phis)

    def is_polynomial(self) -> bool:
        """All exponents nonnegative and scalar positive: valid as an order or degree."""
        return self.scalar > 0 and self.q_power >= 0 and all(e > 0 for _, e in self.phis)

    def evaluate(self, q: int, integral: bool = False) -> Fraction:
        val = self.scalar * Fraction(q) ** self.q_power
        for d, e in self.phis:
            val *= Fraction(phi_value(d, q)) ** e
        if integral and val.denominator != 1:
            raise ValueError(f"{self} is not integral at q={q}: {val}")
        return val

    def substitute_power(self, j: int) -> "CycProduct":
        """Replace q by q^j."""
        acc: list[tuple[int, int]] = []
        for d, e in self.phis:
            acc.extend((m, e) for m in power_substitution(d, j))
        return CycProduct.make(self.scalar, self.q_power * j, acc)

    def negate_q(self) -> "CycProduct":
        """Replace q by -q, discarding the overall sign."""
        return CycProduct.make(abs(self.scalar), self.q_power, [(negated_index(d), e) for d, e in self.phis])

    def v2_scalar(self) -> int:
        return _v2(self.scalar.numerator) - _v2(self.scalar.denominator)

    # -- serialization -------------------------------------------------

    def to_text(self) -> str:
        parts = []
        if self.scalar != 1 or (not self.q_power and not self.phis):
            parts.append(str(self.scalar))
        if self.q_power:
            parts.append("q" if self.q_power == 1 else f"q^{self.q_power}")
        if self.phis:
            parts.append(" ".join(f"F{d}" if e == 1 else f"F{d}^{e}" for d, e in self.phis))
        return " * ".join(parts)

    __str__ = to_text

    @classmethod
    def from_text(cls, text: str) -> "CycProduct":
        scalar = Fraction(1)
        q_power = 0
        phis: list[tuple[int, int]] = []
        for tok in re.split(r"[\s*]+", text.strip()):
            if not tok:
                continue
            m = re.fullmatch(r"q(?:\^(-?\d+))?", tok)
            if m:
                q_power += int(m.group(1) or 1)
                continue
            m = re.fullmatch(r"F(\d+)(?:\^(-?\d+))?", tok)
            if m:
                phis.append((int(m.group(1)), int(m.group(2) or 1)))
                continue
            try:
                scalar *= Fraction(tok)
            except ValueError:
                raise ValueError(f"cannot parse token {tok!r} in {text!r}") from None
        return cls.make(scalar, q_power, phis)

    def to_dict(self) -> dict:
        return {
            "scalar": [self.scalar.numerator, self.scalar.denominator],
            "qpow": self.q_power,
            "phis": {str(d): e for d, e in self.phis},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "CycProduct":
        num, den = data.get("scalar", [1, 1])
        return cls.make(Fraction(int(num), int(den)), int(data.get("qpow", 0)),
                        {int(d): int(e) for d, e in data.get("phis", {}).items()})


ONE = CycProduct()
Q = CycProduct(Fraction(1), 1, ())


def phi(d: int, e: int = 1) -> CycProduct:
    return CycProduct.make(1, 0, {d: e})
