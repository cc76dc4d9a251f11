"""2-adic valuations of integers and of cyclotomic products."""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import CycProduct


@dataclass(frozen=True)
class TwoAdicParts:
    two_part: int
    odd_part: int

    def __post_init__(self):
        if self.two_part & (self.two_part - 1) or self.odd_part % 2 == 0:
            raise ValueError("invalid 2-adic decomposition")


def v2(n: int) -> int:
    """Exponent of the largest power of 2 dividing n."""
    if n == 0:
        raise ValueError("v2(0) is undefined")
    n = abs(int(n))
    return (n & -n).bit_length() - 1


def two_odd_parts(n: int) -> TwoAdicParts:
    k = v2(n)
    return TwoAdicParts(1 << k, abs(n) >> k)


def v2_phi(d: int, q: int) -> int:
    """v2(Phi_d(q)) for odd q, without evaluating Phi_d.

    Phi_d(q) = Phi_d(1) mod 2 and Phi_d(1) is even only for d a power of 2;
    for d = 2^k with k >= 2, Phi_d(q) = q^(d/2) + 1 = 2 mod 4.
    """
    if q % 2 == 0:
        raise ValueError("q must be odd")
    if d == 1:
        return v2(q - 1)
    if d == 2:
        return v2(q + 1)
    if d & (d - 1) == 0:
        return 1
    return 0


def v2_product(p: CycProduct, q: int) -> int:
    """v2 of ``p`` evaluated at odd ``q``, computed exponent-wise."""
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be odd and at least 3")
    return p.v2_scalar() + sum(e * v2_phi(d, q) for d, e in p.phis)


def de_pair(q: int) -> tuple[int, int]:
    """(d, e) with (q-1)_+ = 2^d and (q+1)_+ = 2^e."""
    return v2(q - 1), v2(q + 1)
