from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.matrices.normalforms import hermite_normal_form as sympy_hnf
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from alperin8.exactmath import (
    CycProduct, ZsigmondyError, cyclotomic_poly, de_pair, determinant, gram, hermite_kernel,
    hermite_normal_form, hnf_basis, lattice_contains, multiplicative_order, phi, phi_value, rank,
    smith_normal_form, two_odd_parts, v2, v2_phi, v2_product, zsigmondy_prime,
)

X = sympy.Symbol("x")
ODD_Q = st.integers(min_value=1, max_value=200).map(lambda k: 2 * k + 1)
PRODUCTS = st.builds(
    lambda q_pow, phis: CycProduct.make(1, q_pow, phis),
    st.integers(0, 5),
    st.dictionaries(st.integers(1, 40), st.integers(-3, 4), max_size=6),
)


# cyclotomic polynomials --------------------------------------------------

@pytest.mark.parametrize("d", range(1, 61))
def test_cyclotomic_poly_matches_sympy(d):
    ours = cyclotomic_poly(d)
    ref = sympy.Poly(sympy.cyclotomic_poly(d, X), X).all_coeffs()[::-1]
    assert list(ours) == [int(c) for c in ref]


@pytest.mark.parametrize("q", [2, 3, 5, 9, 17])
def test_phi_value_products_give_q_power_minus_one(q):
    for n in range(1, 25):
        prod = 1
        for d in sympy.divisors(n):
            prod *= phi_value(d, q)
        assert prod == q**n - 1


def test_binomial_matches_evaluation():
    for n in range(1, 13):
        assert CycProduct.binomial(n, 1).evaluate(7) == 7**n - 1
        assert CycProduct.binomial(n, -1).evaluate(7) == 7**n + 1


def test_text_round_trip():
    p = CycProduct.from_text("1/3 * q^7 * F1^6 F2^4 F4^2 F5 F8")
    assert p.scalar == Fraction(1, 3)
    assert p.q_power == 7
    assert p.exponent(1) == 6 and p.exponent(5) == 1 and p.exponent(3) == 0
    assert CycProduct.from_text(p.to_text()) == p
    assert CycProduct.from_dict(p.to_dict()) == p


def test_arithmetic_cancels_exponents():
    a = phi(1, 2) * phi(3)
    b = phi(3) * phi(4)
    assert (a / b).exponents == {1: 2, 4: -1}
    assert not (a / b).is_polynomial()
    assert (a * b / b) == a


@given(PRODUCTS, ODD_Q)
@settings(max_examples=300)
def test_negate_q_matches_evaluation_at_minus_q(p, q):
    lhs = p.without_scalar().evaluate(-q)
    rhs = p.negate_q().evaluate(q)
    assert abs(lhs) == abs(rhs)


@given(PRODUCTS, st.integers(1, 4), st.integers(2, 6))
@settings(max_examples=200)
def test_substitute_power_matches_evaluation(p, j, q):
    assert p.substitute_power(j).evaluate(q) == p.evaluate(q**j)


# 2-adic valuations ---------------------------------------------------------

def test_v2_small():
    assert [v2(n) for n in (1, 2, 3, 4, 12, 96, -8)] == [0, 1, 0, 2, 2, 5, 3]
    with pytest.raises(ValueError):
        v2(0)
    parts = two_odd_parts(96)
    assert (parts.two_part, parts.odd_part) == (32, 3)


def test_de_pair():
    assert de_pair(3) == (1, 2)
    assert de_pair(5) == (2, 1)
    assert de_pair(7) == (1, 3)
    assert de_pair(17) == (4, 1)


@given(st.integers(1, 64), ODD_Q)
def test_v2_phi_matches_value(d, q):
    assert v2_phi(d, q) == v2(phi_value(d, q))


@given(PRODUCTS, ODD_Q)
@settings(max_examples=1000)
def test_v2_product_matches_evaluation(p, q):
    val = p.evaluate(q)
    assert v2_product(p, q) == v2(val.numerator) - v2(val.denominator)


# lattices ------------------------------------------------------------------

MATRICES = st.integers(1, 5).flatmap(
    lambda rows: st.integers(1, 5).flatmap(
        lambda cols: st.lists(st.lists(st.integers(-9, 9), min_size=cols, max_size=cols),
                              min_size=rows, max_size=rows)))


@given(MATRICES)
@settings(max_examples=200)
def test_hnf_is_unimodular_transform(a):
    h, u = hermite_normal_form(a)
    assert abs(determinant(u)) == 1
    assert [[sum(u[i][k] * a[k][j] for k in range(len(a))) for j in range(len(a[0]))]
            for i in range(len(a))] == h


@given(MATRICES)
@settings(max_examples=200)
def test_hnf_basis_agrees_with_sympy(a):
    basis = hnf_basis(a)
    if not basis:
        assert rank(a) == 0
        return
    # sympy reduces columns; transpose to compare row lattices
    ref = sympy_hnf(sympy.Matrix(a).T).T.tolist()
    assert hnf_basis([[int(x) for x in r] for r in ref]) == basis


@given(MATRICES)
@settings(max_examples=200)
def test_kernel_is_saturated_left_kernel(a):
    ker = hermite_kernel(a)
    assert len(ker) == len(a) - rank(a)
    for x in ker:
        assert all(sum(x[i] * a[i][j] for i in range(len(a))) == 0 for j in range(len(a[0])))
    ref = sympy.Matrix(a).T.nullspace()
    for v in ref:
        den = sympy.ilcm(1, *[sympy.fraction(c)[1] for c in v])
        w = [int(c * den) for c in v]
        g = sympy.igcd(0, *w)
        assert lattice_contains(ker, [c // g for c in w])


@given(MATRICES)
@settings(max_examples=200)
def test_snf_invariants_match_sympy(a):
    d, u, v = smith_normal_form(a)
    ours = [abs(d[i][i]) for i in range(min(len(d), len(d[0]))) if d[i][i]]
    ref = sympy_snf(sympy.Matrix(a), domain=sympy.ZZ)
    theirs = [abs(int(ref[i, i])) for i in range(min(ref.shape)) if ref[i, i]]
    assert ours == theirs
    assert abs(determinant(u)) == 1 and abs(determinant(v)) == 1


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                                                      min_size=n, max_size=n)))
def test_determinant_matches_sympy(a):
    assert determinant(a) == sympy.Matrix(a).det()


def test_gram_and_membership():
    basis = hnf_basis([[1, -1, 0], [0, 1, -1]])
    assert lattice_contains(basis, [1, 0, -1])
    assert not lattice_contains(basis, [1, 0, 0])
    assert gram([[1, -1, 0], [0, 1, -1]]) == [[2, -1], [-1, 2]]


# Zsigmondy -------------------------------------------------------------------

def _brute_primitive(q, n):
    return sorted(p for p in sympy.factorint(q**n - 1) if multiplicative_order(q, p) == n)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11])
@pytest.mark.parametrize("n", range(3, 16))
def test_zsigmondy_is_a_primitive_divisor(q, n):
    p = zsigmondy_prime(q, n)
    assert p in _brute_primitive(q, n)
    assert phi_value(n, q) % p == 0


def test_zsigmondy_examples():
    assert zsigmondy_prime(3, 3) == 13
    assert zsigmondy_prime(5, 3) == 31


def test_zsigmondy_exception_n2():
    # q + 1 a power of 2: no primitive prime for n = 2
    with pytest.raises(ZsigmondyError):
        zsigmondy_prime(3, 2)
    with pytest.raises(ZsigmondyError):
        zsigmondy_prime(7, 2)
