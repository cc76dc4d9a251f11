"""Partitions and Lusztig symbols: hooks, cohooks, unipotent degrees, 2-defects.

Type A and 2A unipotent characters are labelled by partitions of l+1; types
B, C, D and 2D by symbols.  Degrees are returned as r'-parts (no q-power),
which is all the 2-defect computations need.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, Sequence

from . import kernels
from .exactmath import CycProduct, de_pair, v2, v2_product
from .liedata import LieSeries, order_rprime


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...]

    def __init__(self, parts: Sequence[int]):
        if any(p < 0 for p in parts):
            raise ValueError("parts must be nonnegative")
        object.__setattr__(self, "parts", tuple(sorted((int(p) for p in parts if p), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Accepts ``(2,1)``, ``2,1`` or ``21``; part order is ignored, so ``(1,2)`` is (2,1)."""
        nums = re.findall(r"\d+", text)
        if len(nums) == 1 and len(nums[0]) > 1 and "," not in text:
            nums = list(nums[0])
        return cls([int(x) for x in nums])

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition([sum(1 for p in self.parts if p > j) for j in range(self.parts[0])])

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, in reverse lexicographic order."""

    def rec(rem: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in rec(rem - first, first):
                yield (first,) + rest

    for parts in rec(n, n if max_part is None else max_part):
        yield Partition(parts)


def hooks(p: Partition) -> list[int]:
    """Multiset of hook lengths of the Young diagram, sorted descending."""
    return sorted(kernels.hook_lengths(p.parts), reverse=True)


def _binomial_product(lengths: Sequence[int], sign_of) -> CycProduct:
    out = CycProduct()
    for h in lengths:
        out = out * CycProduct.binomial(h, sign_of(h))
    return out


def _typeA_order_rprime(n: int, twisted: bool) -> CycProduct:
    """|A_{n-1}(q)|_{r'} (resp. 2A), defined also for n = 1."""
    sign = (lambda i: (-1) ** i) if twisted else (lambda i: 1)
    return _binomial_product(range(2, n + 1), sign)


def _hook_sign(twisted: bool):
    # (-q)^h - 1 = +-(q^h - (-1)^h)
    return (lambda h: (-1) ** h) if twisted else (lambda h: 1)


def degree_typeA(p: Partition, twisted: bool = False) -> CycProduct:
    """r'-part of the unipotent degree of A_{n-1}(q) (or 2A_{n-1}(q)) labelled by p."""
    n = p.size
    if n < 1:
        raise ValueError("empty partition")
    lead = CycProduct.binomial(1, -1 if twisted else 1)
    deg = lead * _typeA_order_rprime(n, twisted) / _binomial_product(hooks(p), _hook_sign(twisted))
    if not deg.is_polynomial() and deg != CycProduct():
        raise ArithmeticError(f"hook quotient for {p} does not cancel: {deg}")
    return deg


def defect_typeA(p: Partition, q: int, twisted: bool = False) -> int:
    """v2(prod_h (q^h -+ 1)) - v2(q -+ 1)."""
    denom = _binomial_product(hooks(p), _hook_sign(twisted))
    return v2_product(denom, q) - v2(q + 1 if twisted else q - 1)


@dataclass(frozen=True)
class Symbol:
    """A pair [X, Y] of finite sets of nonnegative integers (stored decreasing)."""

    X: tuple[int, ...]
    Y: tuple[int, ...]

    def __init__(self, X: Sequence[int], Y: Sequence[int]):
        xs, ys = sorted(set(X), reverse=True), sorted(set(Y), reverse=True)
        if len(xs) != len(X) or len(ys) != len(Y):
            raise ValueError("symbol entries must be distinct")
        if any(v < 0 for v in xs + ys):
            raise ValueError("symbol entries must be nonnegative")
        object.__setattr__(self, "X", tuple(xs))
        object.__setattr__(self, "Y", tuple(ys))

    @classmethod
    def parse(cls, text: str) -> "Symbol":
        """Parse ``[{2,0},{1}]`` style text."""
        groups = re.findall(r"\{([^}]*)\}", text)
        if len(groups) != 2:
            raise ValueError(f"cannot parse symbol {text!r}")
        X, Y = ([int(v) for v in re.findall(r"\d+", g)] for g in groups)
        return cls(X, Y)

    def __str__(self) -> str:
        fmt = lambda s: "{" + ",".join(map(str, s)) + "}"
        return f"[{fmt(self.X)},{fmt(self.Y)}]"

    @property
    def k(self) -> int:
        return len(self.X)

    @property
    def r(self) -> int:
        return len(self.Y)

    @property
    def total(self) -> int:
        return sum(self.X) + sum(self.Y)

    def shift(self, t: int = 1) -> "Symbol":
        """Equivalent symbol [X^{+t}, Y^{+t}] (prepend 0..t-1, add t to all entries)."""
        pre = list(range(t))
        return Symbol([x + t for x in self.X] + pre, [y + t for y in self.Y] + pre)

    def swap(self) -> "Symbol":
        return Symbol(self.Y, self.X)

    def reduced(self) -> "Symbol":
        X, Y = list(self.X), list(self.Y)
        while X and Y and X[-1] == 0 and Y[-1] == 0:
            X = [x - 1 for x in X[:-1]]
            Y = [y - 1 for y in Y[:-1]]
        s = Symbol(X, Y)
        if s.k < s.r or (s.k == s.r and s.X > s.Y):
            s = s.swap()
        return s

    # closed forms -------------------------------------------------------

    @property
    def rank(self) -> int:
        n = self.k + self.r
        return self.total - ((n - 1) ** 2) // 4

    @property
    def common(self) -> int:
        return len(set(self.X) & set(self.Y))

    @property
    def c(self) -> int:
        if self.X == self.Y:
            return 0
        return (self.k + self.r - 1) // 2 - self.common

    @property
    def h_plus(self) -> int:
        return self.total - comb(self.k, 2) - comb(self.r, 2)

    @property
    def h_minus(self) -> int:
        return self.total - self.k * self.r + self.common

    # enumerated lists ---------------------------------------------------

    def hook_list(self) -> list[int]:
        return sorted(kernels.beta_hooks(self.X) + kernels.beta_hooks(self.Y), reverse=True)

    def cohook_list(self) -> list[int]:
        return sorted(kernels.cross_hooks(self.X, self.Y) + kernels.cross_hooks(self.Y, self.X), reverse=True)


def symbol_rank(s: Symbol) -> int:
    return s.rank


def symbol_c(s: Symbol) -> int:
    return s.c


def hook_list(s: Symbol) -> list[int]:
    return s.hook_list()


def cohook_list(s: Symbol) -> list[int]:
    return s.cohook_list()


class IdentityViolation(AssertionError):
    pass


def identity_check(s: Symbol) -> int:
    """c + h+ + h- - 2 rank; must be 0 (k-r odd or X = Y) or -1 (k-r even, X != Y)."""
    val = s.c + s.h_plus + s.h_minus - 2 * s.rank
    expected = 0 if ((s.k - s.r) % 2 or s.X == s.Y) else -1
    if val != expected:
        raise IdentityViolation(f"{s}: c+h+ +h- -2rk = {val}, expected {expected}")
    return val


# families -----------------------------------------------------------------

SYMBOL_FAMILIES = ("B", "C", "D", "2D")
PARTITION_FAMILIES = ("A", "2A")


def _defect_class(family: str) -> tuple[int, int]:
    """(modulus, residue) that |k - r| must satisfy for the family."""
    if family in ("B", "C"):
        return 2, 1
    if family == "D":
        return 4, 0
    if family == "2D":
        return 4, 2
    raise ValueError(f"{family} is not a symbol family")


def family_accepts(family: str, s: Symbol) -> bool:
    mod, res = _defect_class(family)
    return abs(s.k - s.r) % mod == res


class SymbolMismatch(ValueError):
    pass


def degree_BCD(s: Symbol, family: str, rank: int | None = None) -> CycProduct:
    """r'-part of the unipotent degree |G|_{r'} / (2^c prod(q^h - 1) prod(q^h' + 1))."""
    l = s.rank if rank is None else rank
    if s.rank != l:
        raise SymbolMismatch(f"{s} has rank {s.rank}, not {l}")
    if family not in SYMBOL_FAMILIES:
        raise SymbolMismatch(f"unknown symbol family {family!r}")
    if (s.k - s.r) % 2 != (1 if family in ("B", "C") else 0):
        raise SymbolMismatch(f"k-r parity of {s} does not match {family}")
    if not family_accepts(family, s):
        raise SymbolMismatch(f"defect |k-r| = {abs(s.k - s.r)} of {s} does not match {family}")
    order = order_rprime(LieSeries(family, l))
    denom = _binomial_product(s.hook_list(), lambda h: 1) * _binomial_product(s.cohook_list(), lambda h: -1)
    deg = order / denom / (2**s.c)
    if any(e < 0 for _, e in deg.phis):
        raise ArithmeticError(f"degree of {s} in {family}{l} does not cancel: {deg}")
    for q in (3, 5):
        deg.evaluate(q, integral=True)
    return deg


def defect_BCD(s: Symbol, q: int) -> int:
    """c + sum v2(q^h - 1) + sum v2(q^h' + 1)."""
    return (s.c + v2_product(_binomial_product(s.hook_list(), lambda h: 1), q)
            + v2_product(_binomial_product(s.cohook_list(), lambda h: -1), q))


def _distinct_sets(size: int, total: int, below: int | None = None) -> Iterator[tuple[int, ...]]:
    """Decreasing tuples of ``size`` distinct nonnegative ints summing to ``total``."""
    if size == 0:
        if total == 0:
            yield ()
        return
    m = size - 1
    cap = total if below is None else min(total, below - 1)
    for first in range(cap, m - 1, -1):
        rest = total - first
        if rest < comb(m, 2):
            continue
        if rest > m * first - m * (m + 1) // 2:
            break
        for tail in _distinct_sets(m, rest, first):
            yield (first,) + tail


def enumerate_symbols(rank: int, parity: str, max_entries: int | None = None,
                      family: str | None = None) -> Iterator[Symbol]:
    """Reduced canonical symbols of the given rank with k - r odd or even.

    ``max_entries`` bounds k + r; ``family`` further filters by |k - r| mod 4.
    Every equivalence class appears exactly once.
    """
    if parity not in ("odd", "even"):
        raise ValueError("parity must be 'odd' or 'even'")
    want = 1 if parity == "odd" else 0
    nmax = 2 * rank + 2 if max_entries is None else min(max_entries, 2 * rank + 2)
    for n in range(nmax + 1):
        if n % 2 != want:
            continue
        target = rank + ((n - 1) ** 2) // 4
        for k in range((n + 1) // 2, n + 1):
            r = n - k
            for sx in range(target + 1):
                for X in _distinct_sets(k, sx):
                    for Y in _distinct_sets(r, target - sx):
                        if X and Y and X[-1] == 0 and Y[-1] == 0:
                            continue
                        if k == r and X > Y:
                            continue
                        s = Symbol(X, Y)
                        if family is None or family_accepts(family, s):
                            yield s


def unipotent_labels(family: str, rank: int) -> list:
    return list(_labels(family, rank))


@lru_cache(maxsize=None)
def _labels(family: str, rank: int) -> tuple:
    if family in PARTITION_FAMILIES:
        return tuple(partitions(rank + 1))
    parity = "odd" if family in ("B", "C") else "even"
    return tuple(enumerate_symbols(rank, parity, family=family))


@lru_cache(maxsize=None)
def _degree_table(family: str, rank: int) -> tuple:
    return tuple((lab, unipotent_degree(family, rank, lab)) for lab in _labels(family, rank))


def unipotent_degree(family: str, rank: int, label) -> CycProduct:
    if family in PARTITION_FAMILIES:
        return degree_typeA(label, twisted=family == "2A")
    return degree_BCD(label, family, rank)


def unipotent_defect(family: str, rank: int, label, q: int) -> int:
    if family in PARTITION_FAMILIES:
        return defect_typeA(label, q, twisted=family == "2A")
    return defect_BCD(label, q)


@dataclass(frozen=True)
class ScanRecord:
    family: str
    rank: int
    q: int
    label: str
    degree: CycProduct
    defect: int

    def to_dict(self) -> dict:
        return {"family": self.family, "rank": self.rank, "q": self.q, "label": self.label,
                "degree": self.degree.to_dict(), "defect": self.defect}


def defect_scan(family: str, rank: int, q: int, field_power: int = 1) -> list[ScanRecord]:
    """Degree and 2-defect of every unipotent character of family_rank(q^field_power).

    Defects are checked two ways: from the hook data directly and as
    v2(|G|_{r'} / degree).
    """
    if q % 2 == 0:
        raise ValueError("q must be odd")
    ser = LieSeries(family, rank, field_power)
    order = order_rprime(ser)
    out = []
    for lab, deg in _degree_table(family, rank):
        if field_power != 1:
            deg = deg.substitute_power(field_power)
        d = v2_product(order / deg, q)
        if field_power == 1 and d != unipotent_defect(family, rank, lab, q):
            raise ArithmeticError(f"defect mismatch for {family}{rank} {lab} at q={q}")
        out.append(ScanRecord(family, rank, q, str(lab), deg, d))
    return out


def min_defect_scan(family: str, rank: int, q: int) -> tuple[int, str]:
    recs = defect_scan(family, rank, q)
    best = min(recs, key=lambda rec: rec.defect)
    return best.defect, best.label


def is_triangular(n: int) -> bool:
    k = 0
    while k * (k + 1) // 2 < n:
        k += 1
    return k * (k + 1) // 2 == n


def classical_bound(family: str, rank: int, q: int) -> int:
    """Lower bound on unipotent 2-defects asserted for the family."""
    d, e = de_pair(q)
    l = rank
    if family == "A":
        return d * l + (0 if is_triangular(l + 1) else e)
    if family == "2A":
        return e * l
    if family in ("B", "C"):
        return 2 * l
    if family in ("D", "2D"):
        return 2 * l - 1
    raise ValueError(family)
