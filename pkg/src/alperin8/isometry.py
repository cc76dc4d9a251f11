"""Extending an isometry of L0 lattices to a signed bijection of irreducibles.

A candidate chi_i -> delta_i eta_sigma(i) is searched so that its restriction
to L0 is a given map; perfectness is then tested on the bicharacter

    mu(g, h) = sum_i delta_i chi_i(g) conj(eta_sigma(i)(h)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .lzero import GenCharLattice, SignedPermutation, extensions
from .smallgroups import CharacterTable, CyclotomicInteger


class NoExtension(RuntimeError):
    pass


@dataclass(frozen=True)
class IsometryCandidate:
    perm: tuple[int, ...]   # chi_j -> eta_perm[j] (0-based)
    signs: tuple[int, ...]  # delta_j

    @property
    def signed(self) -> SignedPermutation:
        return SignedPermutation(self.perm, self.signs)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.signed.apply(v)

    def one_line(self) -> str:
        return self.signed.one_line()

    def to_records(self) -> dict:
        return {"permutation": [p + 1 for p in self.perm], "signs": list(self.signs)}


def extend_isometry(src: GenCharLattice, tgt: GenCharLattice, images: Sequence[Sequence[int]],
                    match_degrees: bool = True) -> IsometryCandidate:
    """Signed bijection Irr(src) -> Irr(tgt) sending src.basis[k] to images[k].

    ``images`` must be an isometric image of the source basis inside the
    target L0.  With ``match_degrees`` only labelings preserving character
    degrees are considered.
    """
    n = src.dim
    if n != tgt.dim:
        raise NoExtension("character counts differ")
    if len(images) != src.rank:
        raise NoExtension("need one image per basis vector")
    for b, w in zip(src.basis, images):
        if not tgt.contains(w):
            raise NoExtension(f"image {list(w)} is not in the target L0")
    src_gram = src.gram()
    tgt_gram = [[sum(x * y for x, y in zip(u, v)) for v in images] for u in images]
    if src_gram != tgt_gram:
        raise NoExtension("the partial map is not an isometry")
    if not tgt.same_lattice(images):
        raise NoExtension("the partial map is not onto the target L0")

    sdeg, tdeg = src.table.degrees(), tgt.table.degrees()
    allowed = (lambda j, i: sdeg[j] == tdeg[i]) if match_degrees else None

    def rec(k: int, perm: dict, signs: dict, used: set):
        if k == len(images):
            yield perm, signs, used
            return
        for state in extensions(src.basis[k], images[k], perm, signs, used, allowed):
            yield from rec(k + 1, *state)

    for perm, signs, used in rec(0, {}, {}, set()):
        free_src = [j for j in range(n) if j not in perm]
        free_dst = [i for i in range(n) if i not in used]
        # coordinates outside every L0 support: pair them up respecting degrees
        pairing = _pair_free(free_src, free_dst, allowed)
        if pairing is None:
            continue
        full = {**perm, **pairing}
        cand = IsometryCandidate(tuple(full[j] for j in range(n)),
                                 tuple(signs.get(j, 1) for j in range(n)))
        if all(tuple(cand.apply(b)) == tuple(w) for b, w in zip(src.basis, images)):
            return cand
    raise NoExtension("no signed bijection restricts to the given map")


def _pair_free(src: list[int], dst: list[int], allowed) -> dict | None:
    out = {}
    pool = list(dst)
    for j in src:
        i = next((i for i in pool if allowed is None or allowed(j, i)), None)
        if i is None:
            return None
        out[j] = i
        pool.remove(i)
    return out


def bicharacter(c: IsometryCandidate, src: CharacterTable, tgt: CharacterTable) -> list[list[CyclotomicInteger]]:
    """mu(g_a, h_b) over class representatives; both tables must share a conductor."""
    e = src.conductor
    if tgt.conductor != e:
        raise ValueError("tables use different conductors")
    conj_t = [[v.conjugate() for v in row] for row in tgt.chars]
    mu = []
    for a in range(len(src.classes)):
        row = []
        for b in range(len(tgt.classes)):
            s = CyclotomicInteger.zero(e)
            for j, chi in enumerate(src.chars):
                s = s + chi[a] * conj_t[c.perm[j]][b] * c.signs[j]
            row.append(s)
        mu.append(row)
    return mu


@dataclass
class PerfectnessReport:
    integrality_failures: list[tuple[int, int]] = field(default_factory=list)
    separation_failures: list[tuple[int, int]] = field(default_factory=list)

    @property
    def integral(self) -> bool:
        return not self.integrality_failures

    @property
    def separated(self) -> bool:
        return not self.separation_failures

    @property
    def perfect(self) -> bool:
        return self.integral and self.separated

    def to_records(self) -> dict:
        return {
            "integrality": self.integral,
            "separation": self.separated,
            "integrality_failures": [[a + 1, b + 1] for a, b in self.integrality_failures],
            "separation_failures": [[a + 1, b + 1] for a, b in self.separation_failures],
        }


def check_perfect(c: IsometryCandidate, src: CharacterTable, tgt: CharacterTable) -> PerfectnessReport:
    """Integrality of mu/|C_G(g)| and mu/|C_H(h)|; mu = 0 unless g, h are both 2-regular or both 2-singular."""
    mu = bicharacter(c, src, tgt)
    rep = PerfectnessReport()
    for a, ca in enumerate(src.classes):
        for b, cb in enumerate(tgt.classes):
            m = mu[a][b]
            if not (m.divisible_by(src.centralizer_order(a)) and m.divisible_by(tgt.centralizer_order(b))):
                rep.integrality_failures.append((a, b))
            if ca.regular != cb.regular and not m.is_zero():
                rep.separation_failures.append((a, b))
    return rep


def preserves_gram(c: IsometryCandidate, src: CharacterTable, tgt: CharacterTable) -> bool:
    """All pairings <chi_i, chi_j> equal <c(chi_i), c(chi_j)>, computed from class values."""
    n = len(src.chars)
    unit = lambda i: [int(k == i) for k in range(n)]
    images = [tgt.class_function(c.apply(unit(i))) for i in range(n)]
    for i in range(n):
        for j in range(n):
            if tgt.inner_product(images[i], images[j]) != src.inner_product(src.chars[i], src.chars[j]):
                return False
    return True
