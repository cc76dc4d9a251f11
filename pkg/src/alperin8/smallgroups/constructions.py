"""Concrete groups: (C2)^r x| E for E <= GL_r(2), and SL2/GL2/PGL2/PSL2 over small fields.

Matrices over GF(2) are tuples of row bitmasks (bit j of row i is entry (i, j)).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .fields import FiniteField, UnsupportedField, field
from .group import FiniteGroup, GroupError

F2Matrix = tuple[int, ...]


# GF(2) linear algebra -----------------------------------------------------

def f2_identity(r: int) -> F2Matrix:
    return tuple(1 << i for i in range(r))


def f2_mul(a: F2Matrix, b: F2Matrix) -> F2Matrix:
    out = []
    for row in a:
        acc, j = 0, 0
        while row:
            if row & 1:
                acc ^= b[j]
            row >>= 1
            j += 1
        out.append(acc)
    return tuple(out)


def f2_apply(a: F2Matrix, v: int) -> int:
    return sum(((bin(row & v).count("1") & 1) << i) for i, row in enumerate(a))


def f2_rank(rows: Sequence[int]) -> int:
    basis: list[int] = []
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def gl_f2(r: int) -> list[F2Matrix]:
    return [m for m in product(range(1 << r), repeat=r) if f2_rank(m) == r]


def f2_matrix_group(gens: Iterable[F2Matrix], r: int) -> FiniteGroup:
    gens = list(gens) or [f2_identity(r)]
    return FiniteGroup(gens, f2_mul, f2_identity(r), name=f"<{len(gens)} gens in GL{r}(2)>")


def build_semidirect(r: int, E: Iterable[F2Matrix], name: str = "") -> FiniteGroup:
    """(C2)^r x| E with (v, e)(w, f) = (v + e.w, ef); E must be closed under products."""
    E = list(E)
    Eset = set(E)
    if not E or any(len(m) != r for m in E):
        raise GroupError("E must be a nonempty set of r x r matrices")
    if any(f2_mul(a, b) not in Eset for a in E for b in E):
        raise GroupError("E is not closed under multiplication")

    def mul(x, y):
        (v, e), (w, f) = x, y
        return (v ^ f2_apply(e, w), f2_mul(e, f))

    ident = f2_identity(r)
    gens = [(1 << i, ident) for i in range(r)] + [(0, m) for m in E if m != ident]
    return FiniteGroup(gens, mul, (0, ident), name=name or f"2^{r}:{len(E)}")


def _subgroup_key(S: frozenset) -> tuple:
    return tuple(sorted(S))


@lru_cache(maxsize=None)
def _odd_subgroups() -> tuple[tuple[F2Matrix, ...], ...]:
    """Odd-order subgroups of GL3(2) up to conjugacy.

    Every odd-order subgroup of a group of order 168 = 2^3.3.7 is cyclic or
    generated by two cyclic subgroups, so closures of pairs of odd cyclic
    subgroups cover them all.
    """
    G = gl_f2(3)
    ident = f2_identity(3)
    grp = f2_matrix_group(G, 3)
    cyclic = {frozenset(f2_matrix_group([g], 3).elements) for g in G if grp.element_order(g) % 2}
    cyclic = sorted(cyclic, key=_subgroup_key)
    subgroups: set[frozenset] = set(cyclic)
    for i, A in enumerate(cyclic):
        for B in cyclic[i + 1:]:
            S = frozenset(f2_matrix_group(list(A | B), 3).elements)
            if len(S) % 2:
                subgroups.add(S)
    reps: dict[frozenset, frozenset] = {}
    for S in subgroups:
        orbit = [frozenset(grp.conj(x, g) for x in S) for g in G]
        canon = min(orbit, key=_subgroup_key)
        reps.setdefault(canon, canon)
    out = sorted(reps, key=lambda S: (len(S), _subgroup_key(S)))
    return tuple(tuple(sorted(S, key=lambda m: (m != ident, m))) for S in out)


def odd_subgroups_gl3f2() -> list[list[F2Matrix]]:
    """Conjugacy class representatives of odd-order subgroups of GL3(2), by order."""
    return [list(S) for S in _odd_subgroups()]


def local_group(e_order: int) -> FiniteGroup:
    """(C2)^3 x| E for the odd-order E <= GL3(2) of the given order (1, 3, 7 or 21)."""
    for S in odd_subgroups_gl3f2():
        if len(S) == e_order:
            return build_semidirect(3, S, name=f"2^3:{e_order}")
    raise ValueError(f"GL3(2) has no odd-order subgroup of order {e_order}")


# 2 x 2 matrices over GF(q) --------------------------------------------------

SUPPORTED_Q = (3, 5, 7, 9, 11, 13)


def _field(q: int) -> FiniteField:
    if q % 2 == 0 or q > 13:
        raise UnsupportedField(f"q = {q} is not an odd prime power <= 13")
    return field(q)


def _mat_mul(F: FiniteField):
    add, mul = F.add, F.mul

    def m(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return (add[mul[a][e]][mul[b][g]], add[mul[a][f]][mul[b][h]],
                add[mul[c][e]][mul[d][g]], add[mul[c][f]][mul[d][h]])

    return m


def _det(F: FiniteField, x) -> int:
    a, b, c, d = x
    return F.sub(F.mul[a][d], F.mul[b][c])


def _sl2_gens(F: FiniteField) -> list[tuple]:
    # unitriangulars over an additive basis of GF(q), plus the Weyl element
    basis = [F.p**i for i in range(F.k)]
    return [(1, x, 0, 1) for x in basis] + [(0, F.neg[1], 1, 0)]


def _primitive(F: FiniteField) -> int:
    for g in range(2, F.q):
        x, n = g, 1
        while x != 1:
            x, n = F.mul[x][g], n + 1
        if n == F.q - 1:
            return g
    return 1


def build_sl2(q: int) -> FiniteGroup:
    F = _field(q)
    return FiniteGroup(_sl2_gens(F), _mat_mul(F), (1, 0, 0, 1), name=f"SL2({q})")


def build_gl2(q: int) -> FiniteGroup:
    F = _field(q)
    gens = _sl2_gens(F) + [(_primitive(F), 0, 0, 1)]
    return FiniteGroup(gens, _mat_mul(F), (1, 0, 0, 1), name=f"GL2({q})")


def _projective(F: FiniteField, x):
    """Scale so the first nonzero entry is 1."""
    lead = next(v for v in x if v)
    inv = F.inv[lead]
    return tuple(F.mul[inv][v] for v in x)


def build_pgl2(q: int) -> FiniteGroup:
    F = _field(q)
    base = _mat_mul(F)
    mul = lambda x, y: _projective(F, base(x, y))
    gens = [_projective(F, g) for g in _sl2_gens(F) + [(_primitive(F), 0, 0, 1)]]
    return FiniteGroup(gens, mul, (1, 0, 0, 1), name=f"PGL2({q})")


def build_psl2(q: int) -> FiniteGroup:
    F = _field(q)
    base = _mat_mul(F)

    def canon(x):
        return min(x, tuple(F.neg[v] for v in x))

    mul = lambda x, y: canon(base(x, y))
    return FiniteGroup([canon(g) for g in _sl2_gens(F)], mul, (1, 0, 0, 1), name=f"PSL2({q})")


def determinant(q: int, x) -> int:
    return _det(_field(q), x)
