"""Character tables by the Dixon-Schneider class-algebra method.

Class matrices are reduced modulo a prime p = 1 (mod exp G) with
p > 2 sqrt|G|; their common eigenvectors give the characters mod p, which are
lifted to Z[zeta_e] through eigenvalue multiplicities on cyclic subgroups.
Every table is certified by exact row and column orthogonality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Sequence

from sympy import isprime, primitive_root

from .. import kernels
from .cyclotomic import CyclotomicInteger
from .group import ConjugacyClass, FiniteGroup, class_lookup, conjugacy_classes


class LiftError(ArithmeticError):
    pass


def splitting_prime(order: int, exponent: int) -> int:
    """Smallest prime p = 1 (mod exponent) with p > 2 sqrt(order)."""
    p = exponent + 1
    while p * p <= 4 * order or not isprime(p):
        p += exponent
    return p


def _rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def _left_nullspace(a: list[list[int]], p: int) -> list[list[int]]:
    """Basis of {c : c a = 0} over GF(p)."""
    m = len(a)
    if m == 0:
        return []
    # nullspace of a^T
    at = [[a[i][j] for i in range(m)] for j in range(len(a[0]))]
    red, pivots = _rref(at, p)
    free = [j for j in range(m) if j not in pivots]
    basis = []
    for f in free:
        v = [0] * m
        v[f] = 1
        for row, pc in zip(red, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


def _split(space: list[list[int]], mat: list[list[int]], p: int) -> list[list[list[int]]]:
    """Split a subspace (rows in RREF) into eigenspaces of ``mat`` acting on columns."""
    space, pivots = _rref(space, p)
    m = len(space)
    n = len(mat)
    images = [[sum(mat[j][k] * b[k] for k in range(n)) % p for j in range(n)] for b in space]
    R = [[img[pc] for pc in pivots] for img in images]
    parts, found = [], 0
    for lam in range(p):
        shifted = [[(R[i][j] - (lam if i == j else 0)) % p for j in range(m)] for i in range(m)]
        coords = _left_nullspace(shifted, p)
        if coords:
            parts.append([[sum(c[r] * space[r][k] for r in range(m)) % p for k in range(n)] for c in coords])
            found += len(coords)
            if found == m:
                return parts
    raise LiftError("class matrix does not diagonalize over the splitting prime")


@dataclass
class CharacterTable:
    group: FiniteGroup
    classes: list[ConjugacyClass]
    chars: list[list[CyclotomicInteger]]
    conductor: int
    prime: int

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def sizes(self) -> list[int]:
        return [c.size for c in self.classes]

    def degrees(self) -> list[int]:
        return [row[0].rational_value() for row in self.chars]

    def regular_classes(self) -> list[int]:
        return [i for i, c in enumerate(self.classes) if c.regular]

    def centralizer_order(self, i: int) -> int:
        return self.order // self.classes[i].size

    def zero(self) -> CyclotomicInteger:
        return CyclotomicInteger.zero(self.conductor)

    def class_function(self, coeffs: Sequence[int]) -> list[CyclotomicInteger]:
        """Values of sum_i coeffs[i] chi_i on each class."""
        out = [self.zero() for _ in self.classes]
        for c, row in zip(coeffs, self.chars):
            if c:
                out = [o + v * c for o, v in zip(out, row)]
        return out

    def inner_product(self, u: Sequence[CyclotomicInteger], v: Sequence[CyclotomicInteger]) -> Fraction:
        total = self.zero()
        for size, a, b in zip(self.sizes, u, v):
            total = total + a * b.conjugate() * size
        return Fraction(total.rational_value(), self.order)

    def coefficient_inner_product(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        return self.inner_product(self.class_function(a), self.class_function(b))

    def verify(self) -> None:
        """Exact row and column orthogonality, degree sum, integrality."""
        k = len(self.classes)
        if len(self.chars) != k:
            raise LiftError("number of characters differs from number of classes")
        for i in range(k):
            for j in range(i, k):
                ip = self.inner_product(self.chars[i], self.chars[j])
                if ip != (1 if i == j else 0):
                    raise LiftError(f"<chi_{i + 1}, chi_{j + 1}> = {ip}")
        for a in range(k):
            for b in range(a, k):
                s = self.zero()
                for row in self.chars:
                    s = s + row[a] * row[b].conjugate()
                want = self.centralizer_order(a) if a == b else 0
                if s != want:
                    raise LiftError(f"column orthogonality fails at classes {a}, {b}")
        degs = self.degrees()
        if sum(d * d for d in degs) != self.order or any(d <= 0 or self.order % d for d in degs):
            raise LiftError("degree sum check fails")
        for row in self.chars:
            for v in row:
                if not all(isinstance(c, int) for c in v.coeffs):
                    raise LiftError("non-integral character value")

    def to_records(self) -> dict:
        return {
            "order": self.order,
            "conductor": self.conductor,
            "classes": [{"order": c.order, "size": c.size, "regular": c.regular} for c in self.classes],
            "chars": [[list(v.coeffs) for v in row] for row in self.chars],
        }

    def to_text(self) -> str:
        head = ["", *(f"{c.order}{'r' if c.regular else 's'}/{c.size}" for c in self.classes)]
        rows = [head] + [[f"chi{i + 1}", *map(_short, row)] for i, row in enumerate(self.chars)]
        widths = [max(len(r[j]) for r in rows) for j in range(len(head))]
        return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows)


def _short(v: CyclotomicInteger) -> str:
    if v.is_rational():
        return str(v.rational_value())
    z = v.to_complex()
    return f"{z.real:.3f}{z.imag:+.3f}i"


def _sqrt_small(val: int, p: int, bound: int) -> int:
    for d in range(1, bound + 1):
        if d * d % p == val:
            return d
    raise LiftError("degree square root not found")


def character_table(G: FiniteGroup, classes: list[ConjugacyClass] | None = None,
                    prime: int | None = None) -> CharacterTable:
    if G.order > 10**4:
        raise ValueError("character tables are limited to groups of order at most 10^4")
    classes = classes or conjugacy_classes(G)
    n = len(classes)
    lookup = class_lookup(G, classes)
    exp = lcm(*(c.order for c in classes))
    p = prime or splitting_prime(G.order, exp)
    if (p - 1) % exp or p * p <= 4 * G.order or not isprime(p):
        raise ValueError(f"{p} is not a valid splitting prime")

    class_of = [lookup[x] for x in G.elements]
    reps = [c.rep for c in classes]
    inverses = [G.inv(x) for x in G.elements]
    cols = [[lookup[G.mul(xi, z)] for xi in inverses] for z in reps]
    a = kernels.structure_constants(class_of, cols, n)  # a[k][i][j]

    spaces = [[[int(i == j) for j in range(n)] for i in range(n)]]
    for i in range(1, n):
        if all(len(s) == 1 for s in spaces):
            break
        mat = [[a[k][i][j] % p for k in range(n)] for j in range(n)]
        nxt = []
        for s in spaces:
            nxt.extend(_split(s, mat, p) if len(s) > 1 else [s])
        spaces = nxt
    if any(len(s) != 1 for s in spaces):
        raise LiftError("class algebra did not split into one-dimensional pieces")

    inv_class = [lookup[G.inv(r)] for r in reps]
    bound = isqrt(G.order)
    z = pow(primitive_root(p), (p - 1) // exp, p)
    power_classes = [[lookup[G.power(c.rep, l)] for l in range(c.order)] for c in classes]

    chars = []
    for (w,) in spaces:
        scale = pow(w[0], -1, p)
        w = [x * scale % p for x in w]
        S = sum(w[i] * w[inv_class[i]] * pow(classes[i].size, -1, p) for i in range(n)) % p
        deg = _sqrt_small(G.order * pow(S, -1, p) % p, p, bound)
        vals = [w[i] * deg * pow(classes[i].size, -1, p) % p for i in range(n)]
        row = []
        for i, c in enumerate(classes):
            o = c.order
            zo = pow(z, exp // o, p)
            inv_o = pow(o, -1, p)
            counts = {}
            for k in range(o):
                m = inv_o * sum(vals[power_classes[i][l]] * pow(zo, -k * l % o, p) for l in range(o)) % p
                if m > deg:
                    raise LiftError("eigenvalue multiplicity out of range")
                counts[k * (exp // o)] = m
            if sum(counts.values()) != deg:
                raise LiftError("multiplicities do not sum to the degree")
            row.append(CyclotomicInteger.from_exponent_counts(exp, counts))
        chars.append(row)

    chars.sort(key=lambda row: (row[0].coeffs[0], [tuple(-x for x in v.coeffs) for v in row]))
    table = CharacterTable(G, classes, chars, exp, p)
    table.verify()
    return table
