"""The lattice L0 of generalized characters vanishing on 2-regular classes.

Also: matching explicit basis shapes inside L0, the norm-8 coefficient
census, and the (k, l) table for blocks with defect group (C2)^3.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Iterator, Sequence

from .exactmath import determinant, gram, hermite_kernel, lattice_contains, rank
from .smallgroups import CharacterTable


@dataclass
class GenCharLattice:
    table: CharacterTable
    basis: list[list[int]]  # rows in Irr coordinates, HNF

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def dim(self) -> int:
        return len(self.table.chars)

    def contains(self, v: Sequence[int]) -> bool:
        return lattice_contains(self.basis, v)

    def gram(self) -> list[list[int]]:
        return gram(self.basis)

    def vanishes_on_regular(self, v: Sequence[int]) -> bool:
        values = self.table.class_function(v)
        return all(values[i].is_zero() for i in self.table.regular_classes())

    def same_lattice(self, rows: Sequence[Sequence[int]]) -> bool:
        """Whether ``rows`` span exactly this lattice."""
        rows = [list(r) for r in rows]
        if len(rows) != self.rank or rank(rows) != self.rank:
            return False
        if not all(self.contains(r) for r in rows):
            return False
        return abs(determinant(gram(rows))) == abs(determinant(self.gram()))

    def to_records(self) -> dict:
        return {
            "rank": self.rank,
            "basis": self.basis,
            "values": [[list(x.coeffs) for x in self.table.class_function(b)] for b in self.basis],
        }


def compute_lzero(t: CharacterTable) -> GenCharLattice:
    """Integer kernel of restriction to the 2-regular classes."""
    regular = t.regular_classes()
    rows = [[c for i in regular for c in row[i].coeffs] for row in t.chars]
    basis = hermite_kernel(rows)
    lat = GenCharLattice(t, basis)
    if lat.rank != len(t.chars) - len(regular):
        raise ArithmeticError(f"L0 rank {lat.rank} differs from |Irr| - #regular classes")
    return lat


def inner_product(t: CharacterTable, u: Sequence[int], v: Sequence[int]) -> Fraction:
    """(1/|G|) sum_g u(g) conj(v(g)) for generalized characters given in Irr coordinates."""
    return t.coefficient_inner_product(u, v)


def norm(v: Sequence[int]) -> int:
    return sum(x * x for x in v)


# basis shapes -------------------------------------------------------------

def _vec(n: int, plus: Sequence[int] = (), minus: Sequence[int] = ()) -> tuple[int, ...]:
    v = [0] * n
    for i in plus:
        v[i - 1] += 1
    for i in minus:
        v[i - 1] -= 1
    return tuple(v)


SHAPES: dict[str, list[tuple[int, ...]]] = {
    # four norm-2 vectors with disjoint supports and a norm-4 vector meeting three of them
    "E3": [
        _vec(8, [1], [4]), _vec(8, [2], [5]), _vec(8, [3], [6]), _vec(8, [7], [8]),
        _vec(8, [1, 2, 3], [7]),
    ],
    # one norm-8 vector of full support
    "E7": [_vec(8, [1, 2, 3, 4, 5, 6, 7], [8])],
    # three norm-4 vectors, any two sharing exactly two irreducibles
    "E21": [
        _vec(8, [6], [4, 5, 1]), _vec(8, [7], [4, 5, 2]), _vec(8, [8], [4, 5, 3]),
    ],
}

SHAPE_FOR_ORDER = {3: "E3", 7: "E7", 21: "E21"}


@dataclass(frozen=True)
class SignedPermutation:
    """Coordinate j goes to perm[j] with sign signs[j] (0-based)."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        out = [0] * len(v)
        for j, x in enumerate(v):
            out[self.perm[j]] = self.signs[j] * x
        return tuple(out)

    def one_line(self) -> str:
        return " ".join(f"{'-' if s < 0 else ''}{p + 1}" for p, s in zip(self.perm, self.signs))


@dataclass
class ShapeWitness:
    shape: str
    map: SignedPermutation
    vectors: list[tuple[int, ...]]

    def to_records(self) -> dict:
        return {"shape": self.shape, "permutation": [p + 1 for p in self.map.perm],
                "signs": list(self.map.signs), "vectors": [list(v) for v in self.vectors]}


def short_vectors(dim: int, max_norm: int, min_norm: int = 1) -> list[tuple[int, ...]]:
    """All integer vectors with min_norm <= norm <= max_norm."""
    return [v for v in _ball(dim, max_norm) if norm(v) >= min_norm]


@lru_cache(maxsize=8)
def _ball(dim: int, max_norm: int) -> tuple[tuple[int, ...], ...]:

    def rec(i: int, budget: int) -> Iterator[tuple[int, ...]]:
        if i == dim:
            yield ()
            return
        b = int(budget**0.5)
        for x in range(-b, b + 1):
            for rest in rec(i + 1, budget - x * x):
                yield (x,) + rest

    return tuple(rec(0, max_norm))


def lattice_vectors_by_norm(L: GenCharLattice, norms: set[int]) -> dict[int, list[tuple[int, ...]]]:
    out: dict[int, list[tuple[int, ...]]] = {n: [] for n in norms}
    for v in short_vectors(L.dim, max(norms), min(norms)):
        n = norm(v)
        if n in out and L.contains(v):
            out[n].append(v)
    return out


def extensions(t: Sequence[int], w: Sequence[int], perm: dict, signs: dict, used: set,
               allowed=None):
    """All extensions of the partial signed map (j -> perm[j], sign signs[j]) sending t onto w.

    ``allowed(j, i)`` can veto sending coordinate j to coordinate i.
    """
    supp = [j for j, x in enumerate(t) if x]
    if sorted(abs(x) for x in t if x) != sorted(abs(x) for x in w if x):
        return

    def rec(k: int, perm: dict, signs: dict, used: set):
        if k == len(supp):
            yield perm, signs, used
            return
        j = supp[k]
        if j in perm:
            i = perm[j]
            if w[i] == signs[j] * t[j]:
                yield from rec(k + 1, perm, signs, used)
            return
        for i, y in enumerate(w):
            if y and i not in used and abs(y) == abs(t[j]) and (allowed is None or allowed(j, i)):
                yield from rec(k + 1, {**perm, j: i}, {**signs, j: y // t[j]}, used | {i})

    yield from rec(0, perm, signs, used)


def iter_signed_maps(templates: Sequence[Sequence[int]], candidates: dict[int, list[tuple[int, ...]]],
                     allowed=None) -> Iterator[SignedPermutation]:
    """Signed permutations sending every template vector into the candidate pool.

    Coordinates outside all template supports are filled in order with sign +1.
    """
    n = len(templates[0])

    def rec(k: int, perm: dict, signs: dict, used: set):
        if k == len(templates):
            free_src = [j for j in range(n) if j not in perm]
            free_dst = [i for i in range(n) if i not in used]
            full_p = {**perm, **dict(zip(free_src, free_dst))}
            full_s = {**signs, **{j: 1 for j in free_src}}
            yield SignedPermutation(tuple(full_p[j] for j in range(n)), tuple(full_s[j] for j in range(n)))
            return
        t = templates[k]
        for w in candidates.get(norm(t), []):
            for p2, s2, u2 in extensions(t, w, perm, signs, used, allowed):
                yield from rec(k + 1, p2, s2, u2)

    yield from rec(0, {}, {}, set())


def match_basis_shape(L: GenCharLattice, shape: str) -> ShapeWitness | None:
    """Relabeling and signs carrying the shape's vectors onto a basis of L, or None."""
    templates = SHAPES[shape]
    if len(templates) != L.rank:
        return None
    pool = lattice_vectors_by_norm(L, {norm(t) for t in templates})
    for m in iter_signed_maps(templates, pool):
        vecs = [m.apply(t) for t in templates]
        if L.same_lattice(vecs):
            return ShapeWitness(shape, m, vecs)
    return None


# norm-8 supports ----------------------------------------------------------

def norm8_supports(max_support: int = 8) -> list[tuple[int, ...]]:
    """Absolute-value multisets (decreasing) of nonzero integers with sum of squares 8."""
    out = []

    def rec(rem: int, cap: int, acc: list[int]):
        if rem == 0:
            if len(acc) <= max_support:
                out.append(tuple(acc))
            return
        for c in range(min(cap, int(rem**0.5)), 0, -1):
            rec(rem - c * c, c, acc + [c])

    rec(8, 8, [])
    return sorted(out, key=lambda t: (len(t), t))


def norm8_support_census(dim: int = 8) -> Counter:
    """Brute force over Z^dim: count norm-8 vectors by absolute-value shape."""
    census: Counter = Counter()
    for v in short_vectors(dim, 8, 8):
        census[tuple(sorted((abs(x) for x in v if x), reverse=True))] += 1
    return census


# (k, l) table ---------------------------------------------------------------

@dataclass(frozen=True)
class LandrockCase:
    inertial_order: int
    allowed_pairs: frozenset
    difference: int


_LANDROCK = {
    1: frozenset({(8, 1)}),
    3: frozenset({(8, 3)}),
    7: frozenset({(5, 4), (8, 7)}),
    21: frozenset({(7, 4), (8, 5)}),
}


def landrock_lookup(inertial_order: int) -> LandrockCase:
    if inertial_order not in _LANDROCK:
        raise ValueError(f"inertial quotient order must be one of 1, 3, 7, 21, not {inertial_order}")
    pairs = _LANDROCK[inertial_order]
    diffs = {k - l for k, l in pairs}
    if len(diffs) != 1:
        raise AssertionError("k - l must be constant within a case")
    return LandrockCase(inertial_order, pairs, diffs.pop())


def inertial_from_difference(k_minus_l: int) -> int:
    matches = [e for e in _LANDROCK if landrock_lookup(e).difference == k_minus_l]
    if len(matches) != 1:
        raise ValueError(f"k - l = {k_minus_l} does not determine an inertial quotient")
    return matches[0]
