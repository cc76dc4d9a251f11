"""Sylow 2-subgroups and recognition of small 2-groups."""

from __future__ import annotations

from enum import Enum

from ..exactmath import v2
from .group import FiniteGroup


class TwoGroupType(str, Enum):
    CYCLIC = "cyclic"
    KLEIN_FOUR = "klein_four"
    ELEM_ABELIAN_8 = "elem_abelian_8"
    DIHEDRAL = "dihedral"
    GENERALIZED_QUATERNION = "generalized_quaternion"
    SEMIDIHEDRAL = "semidihedral"
    OTHER = "other"


def _is_power_of_two(n: int) -> bool:
    return n & (n - 1) == 0


def sylow2(G: FiniteGroup) -> FiniteGroup:
    """A Sylow 2-subgroup, grown one normalizing 2-element at a time.

    A proper 2-subgroup Q of a Sylow subgroup S has N_S(Q) > Q, so some
    2-element outside Q normalizes Q and extends it; the loop therefore only
    stops at a Sylow subgroup.
    """
    target = 1 << v2(G.order)
    two_elements = [x for x in G.elements if _is_power_of_two(G.element_order(x)) and x != G.identity]
    Q = G.subgroup([G.identity])
    members = set(Q.elements)
    while len(members) < target:
        for x in two_elements:
            if x in members:
                continue
            if not all(G.conj(g, x) in members for g in Q.gens):
                continue
            R = G.subgroup(list(Q.gens) + [x])
            if _is_power_of_two(R.order):
                Q, members = R, set(R.elements)
                break
        else:
            raise AssertionError("no normalizing 2-element found below the Sylow order")
    Q.name = f"Syl2({G.name})"
    return Q


def _cyclic_index_two(Q: FiniteGroup) -> list:
    half = Q.order // 2
    return [x for x in Q.elements if Q.element_order(x) == half]


def recognize_2group(Q: FiniteGroup) -> TwoGroupType:
    """Isomorphism type by exponent, involution count and presentation checks."""
    n = Q.order
    if not _is_power_of_two(n):
        raise ValueError("not a 2-group")
    orders = [Q.element_order(x) for x in Q.elements]
    if max(orders) == n:
        return TwoGroupType.CYCLIC
    involutions = orders.count(2)
    if max(orders) == 2:
        if n == 4:
            return TwoGroupType.KLEIN_FOUR
        if n == 8:
            return TwoGroupType.ELEM_ABELIAN_8
        return TwoGroupType.OTHER
    if n < 8:
        return TwoGroupType.OTHER
    found = set()
    for x in _cyclic_index_two(Q):
        cyc = {Q.power(x, i) for i in range(n // 2)}
        xinv = Q.inv(x)
        for y in Q.elements:
            if y in cyc:
                continue
            yy = Q.mul(y, y)
            act = Q.conj(x, y)
            if act == xinv and yy == Q.identity:
                found.add(TwoGroupType.DIHEDRAL)
            elif act == xinv and yy == Q.power(x, n // 4):
                found.add(TwoGroupType.GENERALIZED_QUATERNION)
            elif n >= 16 and act == Q.power(x, n // 4 - 1) and yy == Q.identity:
                found.add(TwoGroupType.SEMIDIHEDRAL)
        if found:
            break
    if len(found) != 1:
        return TwoGroupType.OTHER
    kind = found.pop()
    expected = {
        TwoGroupType.DIHEDRAL: n // 2 + 1,
        TwoGroupType.GENERALIZED_QUATERNION: 1,
        TwoGroupType.SEMIDIHEDRAL: n // 4 + 1,
    }[kind]
    if involutions != expected:
        raise AssertionError(f"{kind.value} of order {n} should have {expected} involutions, found {involutions}")
    return kind
