"""Exact arithmetic: cyclotomic products, 2-adic valuations, lattices, Zsigmondy primes."""

from .cyclo import ONE, Q, CycProduct, cyclotomic_poly, phi, phi_value
from .lattice import (
    IntegerMatrix,
    determinant,
    gram,
    hermite_kernel,
    hermite_normal_form,
    hnf_basis,
    lattice_contains,
    rank,
    smith_normal_form,
)
from .valuation import TwoAdicParts, de_pair, two_odd_parts, v2, v2_phi, v2_product
from .zsigmondy import ZsigmondyError, multiplicative_order, zsigmondy_prime


def eval_product(p: CycProduct, q: int, integral: bool = False):
    """Exact value of ``p`` at ``q``."""
    if q < 2:
        raise ValueError("q must be at least 2")
    return p.evaluate(q, integral=integral)


__all__ = [
    "ONE", "Q", "CycProduct", "cyclotomic_poly", "phi", "phi_value", "eval_product",
    "IntegerMatrix", "determinant", "gram", "hermite_kernel", "hermite_normal_form", "hnf_basis",
    "lattice_contains", "rank", "smith_normal_form",
    "TwoAdicParts", "de_pair", "two_odd_parts", "v2", "v2_phi", "v2_product",
    "ZsigmondyError", "multiplicative_order", "zsigmondy_prime",
]
