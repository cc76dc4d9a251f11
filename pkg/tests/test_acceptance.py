"""Exit criteria. Each test prints one PASS/FAIL line; all comparisons are exact."""

from collections import Counter
from fractions import Fraction

import pytest

from alperin8 import defect_tables as dt
from alperin8 import suites
from alperin8.exactmath import de_pair, gram, multiplicative_order, phi_value, zsigmondy_prime
from alperin8.isometry import check_perfect, extend_isometry
from alperin8.liedata import defect, named_degree
from alperin8.lzero import (
    SHAPE_FOR_ORDER, SHAPES, compute_lzero, inertial_from_difference, landrock_lookup,
    match_basis_shape, norm, norm8_support_census, norm8_supports,
)
from alperin8.smallgroups import (
    TwoGroupType, build_pgl2, build_psl2, build_sl2, character_table, local_group,
    recognize_2group, sylow2,
)
from alperin8.symbols import Partition, classical_bound, defect_scan, enumerate_symbols, identity_check

pytestmark = pytest.mark.acceptance

CLASSICAL_QS = (3, 5, 7, 9, 11, 13, 17)


def test_criterion_01_local_character_counts(criterion):
    with criterion(1, "local character counts and exact orthogonality", limit=10):
        for e, expected in suites.EXPECTED_DEGREES.items():
            t = character_table(local_group(e))
            assert len(t.chars) == 8
            assert Counter(t.degrees()) == expected
            for i, u in enumerate(t.chars):
                for j, v in enumerate(t.chars):
                    assert t.inner_product(u, v) == Fraction(int(i == j))


def test_criterion_02_lzero_ranks_and_shapes(criterion):
    with criterion(2, "L0 ranks 7/5/1/3 and basis shape witnesses", limit=30):
        ranks = {}
        for e in (1, 3, 7, 21):
            t = character_table(local_group(e))
            L = compute_lzero(t)
            ranks[e] = L.rank
            if e in SHAPE_FOR_ORDER:
                w = match_basis_shape(L, SHAPE_FOR_ORDER[e])
                assert w is not None
                assert gram(w.vectors) == gram(SHAPES[SHAPE_FOR_ORDER[e]])
                assert L.same_lattice(w.vectors)
        assert ranks == {1: 7, 3: 5, 7: 1, 21: 3}
        assert [norm(v) for v in SHAPES["E7"]] == [8]
        assert [norm(v) for v in SHAPES["E21"]] == [4, 4, 4]


def test_criterion_03_landrock_table(criterion):
    with criterion(3, "Landrock table, inverse and rank = k - l"):
        expected = {1: {(8, 1)}, 3: {(8, 3)}, 7: {(5, 4), (8, 7)}, 21: {(7, 4), (8, 5)}}
        for e, pairs in expected.items():
            case = landrock_lookup(e)
            assert case.allowed_pairs == pairs
            assert inertial_from_difference(case.difference) == e
            assert compute_lzero(character_table(local_group(e))).rank == case.difference


def test_criterion_04_norm8_supports(criterion):
    with criterion(4, "norm-8 supports are {2, 5, 8}"):
        supports = norm8_supports()
        assert {len(s) for s in supports} == {2, 5, 8}
        assert [s for s in supports if len(s) == 5] == [(2, 1, 1, 1, 1)]
        assert set(norm8_support_census()) == set(supports)


def test_criterion_05_symbol_identity(criterion):
    with criterion(5, "symbol identity over rank <= 8, k + r <= 10", limit=60):
        n = 0
        for rank in range(9):
            for parity in ("odd", "even"):
                for s in enumerate_symbols(rank, parity, max_entries=10):
                    expected = 0 if (s.k - s.r) % 2 or s.X == s.Y else -1
                    assert identity_check(s) == expected
                    assert s.c + len(s.hook_list()) + len(s.cohook_list()) - 2 * s.rank == expected
                    assert len(s.hook_list()) == s.h_plus and len(s.cohook_list()) == s.h_minus
                    n += 1
        assert n > 0


def _stated_bound(fam, l, q):
    d, e = de_pair(q)
    return {"A": d * l, "2A": e * l, "B": 2 * l, "C": 2 * l, "D": 2 * l - 1, "2D": 2 * l - 1}[fam]


def test_criterion_06_classical_defect_bounds(criterion):
    with criterion(6, "classical defect bounds, A2 chi(2,1) = 2d, A1 = d + e", limit=180):
        for q in CLASSICAL_QS:
            d, e = de_pair(q)
            for fam, low in (("A", 1), ("2A", 1), ("B", 1), ("C", 1), ("D", 2), ("2D", 2)):
                for l in range(low, 9):
                    m = min(r.defect for r in defect_scan(fam, l, q))
                    assert m >= _stated_bound(fam, l, q), (fam, l, q, m)
                    assert m >= classical_bound(fam, l, q), (fam, l, q, m)
            a2 = {r.label: r.defect for r in defect_scan("A", 2, q)}
            assert a2[str(Partition((2, 1)))] == 2 * d
            assert {r.defect for r in defect_scan("A", 1, q)} == {d + e}


def test_criterion_07_named_exceptional_defects(criterion):
    with criterion(7, "E6[theta], E7 (E6[theta],1), F4[+-i] defects"):
        for q in (3, 5, 7, 9):
            d, e = de_pair(q)
            assert defect(named_degree("E6[theta]"), q) == 0
            e7 = defect(named_degree("E7:(E6[theta],1)"), q)
            assert e7 == d + e and e7 >= 3
            assert defect(named_degree("F4[i]"), q) == 5
            assert defect(named_degree("F4[-i]"), q) == 5


def test_criterion_08_e6_tables(criterion):
    with criterion(8, "36 E6/2E6 rows at two smallest admissible q, q -> -q duality", limit=30):
        total = 0
        for name in ("E6", "2E6"):
            for row in dt.TABLES[name]:
                qs = dt.admissible_qs(row.q_condition, count=2)
                assert len(qs) == 2
                for q in qs:
                    assert dt.verify_row(row, q).passed, (row.key, q)
                total += 1
        assert total == 36
        assert dt.duality_mismatches(corrected=True) == []


def test_criterion_09_f4_isolated(criterion):
    with criterion(9, "F4 isolated centralizers avoid combined defect 2 and 3"):
        for q in (3, 5, 7):
            rep = dt.verify_f4_isolated(q)
            assert rep.passed, rep.rows


def test_criterion_10_e8_contradiction(criterion):
    with criterion(10, "E8: p3 divides 2 Phi1 Phi3^2 but not q Phi2"):
        for q in (3, 5):
            rep = dt.verify_e8_contradiction(q)
            p = rep.p3
            assert (2 * phi_value(1, q) * phi_value(3, q) ** 2) % p == 0
            assert (q * phi_value(2, q)) % p != 0
            assert phi_value(2, q) % p != 0
            assert rep.nonzero


def test_criterion_11_zsigmondy(criterion):
    with criterion(11, "Zsigmondy primes for n in 3..20, p_n | Phi_d implies n | d"):
        for q in (3, 5, 7, 9):
            for n in range(3, 21):
                p = zsigmondy_prime(q, n)
                assert multiplicative_order(q, p) == n
                for d in range(1, 61):
                    if phi_value(d, q) % p == 0:
                        assert d % n == 0


def test_criterion_12_sylow(criterion):
    with criterion(12, "Sylow 2-subgroups of SL2, PGL2, PSL2"):
        for q in (3, 5, 7, 9, 11, 13):
            S = sylow2(build_sl2(q))
            assert recognize_2group(S) == TwoGroupType.GENERALIZED_QUATERNION
            assert (S.order == 8) == (q % 8 in (3, 5))
            P = sylow2(build_pgl2(q))
            assert recognize_2group(P) == TwoGroupType.DIHEDRAL and P.order >= 8
        for q in (3, 5):
            assert recognize_2group(sylow2(build_psl2(q))) == TwoGroupType.KLEIN_FOUR


def test_criterion_13_isometry_extension(criterion):
    with criterion(13, "identity isometry extends to a perfect isometry", limit=120):
        for e in (3, 7, 21):
            t = character_table(local_group(e))
            L = compute_lzero(t)
            rep = check_perfect(extend_isometry(L, L, L.basis), t, t)
            assert rep.integral and rep.separated
