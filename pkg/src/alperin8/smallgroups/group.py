"""Finite groups given by generators and an element-level multiplication."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence

Element = Hashable


class GroupError(ValueError):
    pass


class FiniteGroup:
    """Closure of ``gens`` under ``mul``; elements are kept in BFS order, identity first."""

    def __init__(self, gens: Sequence[Element], mul: Callable[[Element, Element], Element],
                 identity: Element, name: str = "", limit: int = 10**5):
        self.gens = tuple(gens)
        self._mul = mul
        self.identity = identity
        self.name = name
        elements = [identity]
        index = {identity: 0}
        frontier = [identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in self.gens:
                    b = mul(a, g)
                    if b not in index:
                        index[b] = len(elements)
                        elements.append(b)
                        nxt.append(b)
                        if len(elements) > limit:
                            raise GroupError(f"group exceeds {limit} elements")
            frontier = nxt
        self.elements = elements
        self.index = index
        self._inv: dict[Element, Element] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.name or '?'} of order {self.order}>"

    def mul(self, a: Element, b: Element) -> Element:
        return self._mul(a, b)

    def power(self, a: Element, n: int) -> Element:
        if n < 0:
            a, n = self.inv(a), -n
        out, base = self.identity, a
        while n:
            if n & 1:
                out = self._mul(out, base)
            base = self._mul(base, base)
            n >>= 1
        return out

    def element_order(self, a: Element) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self._mul(x, a)
            n += 1
        return n

    def inv(self, a: Element) -> Element:
        try:
            return self._inv[a]
        except KeyError:
            pass
        prev, x = self.identity, a
        while x != self.identity:
            prev, x = x, self._mul(x, a)
        self._inv[a] = prev
        return prev

    def conj(self, a: Element, g: Element) -> Element:
        """g a g^-1."""
        return self._mul(self._mul(g, a), self.inv(g))

    def subgroup(self, gens: Iterable[Element], name: str = "") -> "FiniteGroup":
        gens = [g for g in gens if g != self.identity] or [self.identity]
        return FiniteGroup(gens, self._mul, self.identity, name=name)

    def exponent(self) -> int:
        from math import lcm

        out = 1
        for a in self.elements:
            out = lcm(out, self.element_order(a))
        return out

    def is_abelian(self) -> bool:
        return all(self._mul(a, b) == self._mul(b, a) for a in self.gens for b in self.gens)

    def center(self) -> list[Element]:
        return [z for z in self.elements if all(self._mul(z, g) == self._mul(g, z) for g in self.gens)]

    def check_axioms(self, samples: int = 200, seed: int = 0) -> None:
        """Closure, inverses, and associativity on random triples."""
        rng = random.Random(seed)
        els = self.elements
        for _ in range(samples):
            a, b, c = rng.choice(els), rng.choice(els), rng.choice(els)
            ab = self._mul(a, b)
            if ab not in self.index:
                raise GroupError("not closed")
            if self._mul(ab, c) != self._mul(a, self._mul(b, c)):
                raise GroupError("not associative")
            if self._mul(a, self.inv(a)) != self.identity or self._mul(self.identity, a) != a:
                raise GroupError("identity or inverse fails")


@dataclass(frozen=True)
class ConjugacyClass:
    rep: Element
    size: int
    order: int
    members: frozenset

    @property
    def regular(self) -> bool:
        """2-regular: the element order is odd."""
        return self.order % 2 == 1


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    """Classes as orbits under conjugation by the generators.

    Sorted by (element order, size, BFS index of representative); the
    identity class comes first.
    """
    seen: set = set()
    classes = []
    for a in G.elements:
        if a in seen:
            continue
        orbit = {a}
        frontier = [a]
        while frontier:
            nxt = []
            for x in frontier:
                for g in G.gens:
                    y = G.conj(x, g)
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        seen |= orbit
        if G.order % len(orbit):
            raise GroupError("class size does not divide the group order")
        classes.append(ConjugacyClass(a, len(orbit), G.element_order(a), frozenset(orbit)))
    classes.sort(key=lambda c: (c.order, c.size, G.index[c.rep]))
    return classes


def class_lookup(G: FiniteGroup, classes: Sequence[ConjugacyClass]) -> dict:
    return {x: i for i, c in enumerate(classes) for x in c.members}
