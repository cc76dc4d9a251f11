import math
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import partition

from alperin8 import kernels
from alperin8.exactmath import CycProduct, de_pair, v2_product
from alperin8.liedata import order_rprime, series
from alperin8.symbols import (
    IdentityViolation, Partition, Symbol, SymbolMismatch, classical_bound, defect_BCD, defect_scan,
    defect_typeA, degree_BCD, degree_typeA, enumerate_symbols, hooks, identity_check,
    is_triangular, min_defect_scan, partitions, unipotent_labels,
)

SETS = st.sets(st.integers(0, 11), max_size=6).map(lambda s: tuple(sorted(s, reverse=True)))
SYMBOLS = st.builds(Symbol, SETS, SETS)
PARTITIONS = st.lists(st.integers(1, 7), min_size=1, max_size=7).map(Partition)


def _diagram_hooks(p: Partition) -> list[int]:
    cells = {(i, j) for i, row in enumerate(p.parts) for j in range(row)}
    out = []
    for i, j in cells:
        arm = sum(1 for jj in range(j + 1, p.parts[i]))
        leg = sum(1 for ii in range(i + 1, len(p.parts)) if (ii, j) in cells)
        out.append(arm + leg + 1)
    return sorted(out)


# partitions ---------------------------------------------------------------

@pytest.mark.parametrize("n", range(0, 13))
def test_partition_counts(n):
    assert sum(1 for _ in partitions(n)) == partition(n)


def test_partition_parsing_normalizes():
    assert Partition.parse("(1,2)") == Partition((2, 1))
    assert Partition.parse("21") == Partition((2, 1))
    assert Partition((2, 1, 1)).conjugate() == Partition((3, 1))


@given(PARTITIONS)
def test_hooks_match_diagram(p):
    assert sorted(hooks(p)) == _diagram_hooks(p)


@given(PARTITIONS, st.integers(0, 3))
def test_beta_set_hooks_are_partition_hooks(p, extra):
    k = len(p.parts) + extra
    parts = list(p.parts) + [0] * extra
    beta = [parts[i] + k - 1 - i for i in range(k)]
    assert sorted(kernels.beta_hooks(beta)) == sorted(hooks(p))


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_length_formula_sums_to_factorial(n):
    total = sum((math.factorial(n) // math.prod(hooks(p))) ** 2 for p in partitions(n))
    assert total == math.factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("q", [3, 5])
def test_typeA_degrees_decompose_flag_permutation_character(n, q):
    # Ind_B^G 1 = sum over partitions of f^lambda times the unipotent character
    total = 0
    for p in partitions(n):
        f = math.factorial(n) // math.prod(hooks(p))
        q_pow = sum(i * x for i, x in enumerate(p.parts))
        total += f * q**q_pow * degree_typeA(p).evaluate(q)
    assert total == math.prod(q**i - 1 for i in range(1, n + 1)) // (q - 1) ** n


def test_typeA_small_degrees():
    assert degree_typeA(Partition((2, 1))) == CycProduct.from_text("F2")
    assert degree_typeA(Partition((2, 2))) == CycProduct.from_text("F4")
    assert degree_typeA(Partition((3, 1))) == CycProduct.from_text("F3")
    assert degree_typeA(Partition((2, 1)), twisted=True) == CycProduct.from_text("F1")


@given(PARTITIONS)
def test_unitary_degrees_are_ennola_duals(p):
    assert degree_typeA(p, twisted=True) == degree_typeA(p).negate_q()


def test_typeA_defect_example():
    assert defect_typeA(Partition((2, 2)), 3) == 7


# symbols -----------------------------------------------------------------

def test_symbol_examples():
    s = Symbol.parse("[{2},{}]")
    assert (s.rank, s.c, s.hook_list(), s.cohook_list()) == (2, 0, [2, 1], [2, 1])
    s = Symbol.parse("[{2,0},{1}]")
    assert (s.rank, s.c, s.hook_list(), s.cohook_list()) == (2, 1, [1, 1], [2])
    s = Symbol.parse("[{1},{1}]")
    assert (s.rank, s.c) == (2, 0)
    assert str(Symbol.parse("[{0,2},{1}]")) == "[{2,0},{1}]"


@given(SYMBOLS, st.integers(0, 3))
@settings(max_examples=500)
def test_invariants_under_shift_and_swap(s, t):
    for other in (s.shift(t), s.swap(), s.shift(t).swap()):
        assert other.rank == s.rank
        assert other.c == s.c
        assert other.hook_list() == s.hook_list()
        assert other.cohook_list() == s.cohook_list()
        assert other.reduced() == s.reduced()


@given(SYMBOLS)
@settings(max_examples=500)
def test_closed_form_hook_counts(s):
    assert len(s.hook_list()) == s.h_plus
    assert len(s.cohook_list()) == s.h_minus


@given(SYMBOLS)
@settings(max_examples=500)
def test_identity_value(s):
    expected = 0 if (s.k - s.r) % 2 or s.X == s.Y else -1
    assert s.c + s.h_plus + s.h_minus - 2 * s.rank == expected
    assert identity_check(s) == expected


def test_identity_check_reports_violations(monkeypatch):
    s = Symbol.parse("[{2,0},{1}]")
    monkeypatch.setattr(Symbol, "c", property(lambda self: 5))
    with pytest.raises(IdentityViolation):
        identity_check(s)


# unipotent character counts: B_n and C_n 2, 6, 12, 25, 46; D_n counts each degenerate symbol once
@pytest.mark.parametrize("family, counts", [
    ("B", [2, 6, 12, 25, 46]),
    ("C", [2, 6, 12, 25, 46]),
])
def test_symbol_counts_BC(family, counts):
    assert [len(unipotent_labels(family, l)) for l in range(1, 6)] == counts


def test_symbol_counts_D():
    assert [len(unipotent_labels("D", l)) for l in range(2, 7)] == [3, 5, 12, 20, 39]
    assert [len(unipotent_labels("2D", l)) for l in range(2, 7)] == [2, 5, 10, 20, 36]
    degenerate = [s for s in unipotent_labels("D", 4) if s.X == s.Y]
    assert len(degenerate) == 2  # each carries two characters, giving 14 in total


def test_enumeration_is_reduced_and_unique():
    for rank in range(0, 6):
        for parity in ("odd", "even"):
            syms = list(enumerate_symbols(rank, parity))
            assert len(set(syms)) == len(syms)
            assert all(s.reduced() == s and s.rank == rank for s in syms)


def test_B2_degrees():
    degs = Counter(degree_BCD(s, "B", 2) for s in unipotent_labels("B", 2))
    half = lambda t: CycProduct.from_text("1/2 * " + t)
    assert degs == Counter({CycProduct(): 2, half("F1^2"): 1, half("F2^2"): 1, half("F4"): 2})


def test_degree_rejects_mismatched_family():
    s = Symbol.parse("[{2},{}]")
    with pytest.raises(SymbolMismatch):
        degree_BCD(s, "D", 2)
    with pytest.raises(SymbolMismatch):
        degree_BCD(s, "B", 3)


@pytest.mark.parametrize("family", ["A", "2A", "B", "C", "D", "2D"])
@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_scan_minima_respect_bounds(family, q):
    low = 2 if family in ("D", "2D") else 1
    for l in range(low, 6):
        m, _ = min_defect_scan(family, l, q)
        assert m >= classical_bound(family, l, q)


def test_scan_examples():
    assert min_defect_scan("A", 2, 3) == (2, "(2,1)")
    assert min_defect_scan("B", 2, 3)[0] == 4
    assert min_defect_scan("D", 4, 3)[0] == 7
    assert min_defect_scan("2A", 3, 3)[0] == 8


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13, 17])
def test_A1_and_A2_defects(q):
    d, e = de_pair(q)
    assert {r.defect for r in defect_scan("A", 1, q)} == {d + e}
    by_label = {r.label: r.defect for r in defect_scan("A", 2, q)}
    assert by_label["(2,1)"] == 2 * d


def test_scan_rejects_even_q():
    with pytest.raises(ValueError):
        defect_scan("B", 2, 4)


def test_triangular():
    assert [n for n in range(1, 30) if is_triangular(n)] == [1, 3, 6, 10, 15, 21, 28]


def test_defect_BCD_two_routes():
    for s in unipotent_labels("C", 3):
        for q in (3, 5, 7):
            assert defect_BCD(s, q) == v2_product(order_rprime(series("C3")) / degree_BCD(s, "C", 3), q)


def _bipartitions(n):
    return sum(partition(a) * partition(n - a) for a in range(n + 1)) if n >= 0 else 0


def _symbol_count(rank, parity):
    # classes of defect d > 0 are counted by bipartitions of rank - floor(d^2 / 4);
    # defect 0 classes are unordered pairs of partitions
    total = 0
    d = 1 if parity == "odd" else 2
    while d * d // 4 <= rank:
        total += _bipartitions(rank - d * d // 4)
        d += 2
    if parity == "even":
        total += (_bipartitions(rank) + (partition(rank // 2) if rank % 2 == 0 else 0)) // 2
    return total


@pytest.mark.parametrize("rank", range(0, 8))
@pytest.mark.parametrize("parity", ["odd", "even"])
def test_enumeration_is_exhaustive(rank, parity):
    assert sum(1 for _ in enumerate_symbols(rank, parity)) == _symbol_count(rank, parity)
