import pytest

from alperin8 import defect_tables as dt
from alperin8.exactmath import phi_value, v2
from alperin8.liedata import CATALOG, order_rprime

ODD_PRIME_POWERS = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31]


def _row(table, rid):
    return next(r for r in dt.TABLES[table] if r.row_id == rid)


def test_table_shapes():
    ids = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x",
           "xi", "xii", "xiii", "xiv", "xv", "xvi", "xvii", "xviii"]
    for rows in dt.TABLES.values():
        assert [r.row_id for r in rows] == ids
        for r in rows:
            r.validate()


@pytest.mark.parametrize("table, rid, q, defect", [
    ("E6", "xiii", 3, 3),
    ("E6", "vi", 5, 0),
    ("2E6", "xi", 5, 2),
])
def test_row_examples(table, rid, q, defect):
    rep = dt.verify_row(_row(table, rid), q)
    assert rep.passed, rep.to_records()
    assert rep.values["v2_order"] - v2_value(dt.corrected_product(_row(table, rid)), q) == defect


def v2_value(p, q):
    val = p.evaluate(q)
    return v2(val.numerator) - v2(val.denominator)


def test_condition_is_enforced():
    with pytest.raises(dt.ConditionError):
        dt.verify_row(_row("E6", "xiii"), 5)
    with pytest.raises(dt.ConditionError):
        dt.verify_row(_row("E6", "iii"), 7)


def test_admissible_sets():
    assert dt.admissible_qs(dt.ANY, count=2) == [3, 5]
    assert dt.admissible_qs(dt.ONE_MOD_4, count=2) == [5, 9]
    assert dt.admissible_qs(dt.THREE_MOD_4, count=2) == [3, 7]
    assert dt.admissible_qs(dt.TWO_PART_8) == [3, 5, 11, 13]
    assert not dt.admissible(dt.ANY, 4)


@pytest.mark.parametrize("table", ["E6", "2E6"])
def test_all_rows_at_two_smallest_q(table):
    reps = dt.verify_table(table)
    assert len(reps) == 36
    assert all(r.passed for r in reps)


@pytest.mark.parametrize("q", ODD_PRIME_POWERS)
def test_rows_hold_for_every_admissible_q(q):
    for rows in dt.TABLES.values():
        for row in rows:
            if dt.admissible(row.q_condition, q):
                assert dt.verify_row(row, q).passed


def test_errata_are_exactly_the_formula_mismatches():
    assert sorted(dt.recomputed_errata()) == sorted(dt.ERRATA)
    assert sorted(dt.ERRATA) == ["2E6(iii)", "2E6(vi)", "2E6(xii)", "2E6(xvii)", "E6(xii)", "E6(xvii)"]
    for key, err in dt.ERRATA.items():
        # corrections only ever touch odd factors, so no defect changes
        assert dt.only_odd_factors(err.printed / err.corrected)


def test_torus_rows_multiply_back_to_the_order():
    for rows in dt.TABLES.values():
        for row in rows[:10]:
            assert row.c_prime is None
            assert dt.corrected_product(row) * row.z_s == order_rprime(row.group)


def test_negation_maps_E6_table_onto_2E6_table():
    assert dt.duality_mismatches(corrected=True) == []
    # the printed tables differ exactly where a single-table erratum was recorded
    assert dt.duality_mismatches(corrected=False) == ["iii", "vi"]


def test_negation_is_an_involution():
    for row in dt.E6_TABLE:
        assert dt.negate_row(dt.negate_row(row)) == row


def test_backsolved_3D4_degrees_match_catalog():
    for label, (from_e6, from_twisted) in dt.backsolve_3d4_degrees().items():
        assert from_e6 == from_twisted == CATALOG[label].degree.r_prime()


def test_row_xvii_is_flagged():
    assert any("zeta_s" in n for n in dt.verify_row(_row("E6", "xvii"), 3).notes)


def test_audit_lists_every_row():
    text = dt.audit_table("E6")
    assert text.count("printed") == 18
    assert text.count("ERRATUM") == 2 and "MISMATCH" not in text


# F4 ----------------------------------------------------------------------

@pytest.mark.parametrize("q", [3, 5, 7, 9, 11])
def test_f4_isolated_centralizers(q):
    rep = dt.verify_f4_isolated(q)
    assert rep.passed
    assert rep.rows["B4"]["min_defect"] >= 8
    assert rep.rows["F4"]["conditional"]
    d = v2(q - 1)
    if d == 1:
        assert rep.rows["A2xA2"]["min_defect"] == 4


def test_spectrum_sums():
    a = dt.Spectrum(frozenset({0, 5}), 7)
    b = dt.Spectrum(frozenset({2}))
    c = a + b
    assert c.exact == {2, 7} and c.bound == 9
    assert c.meets(frozenset({2, 3}))
    assert not dt.Spectrum(frozenset({0, 5}), 7).meets(frozenset({2, 3}))


def test_f4_rejects_even_q():
    with pytest.raises(dt.ConditionError):
        dt.verify_f4_isolated(4)


# E8 ----------------------------------------------------------------------

@pytest.mark.parametrize("q, p3", [(3, 13), (5, 31)])
def test_e8_contradiction(q, p3):
    rep = dt.verify_e8_contradiction(q)
    assert rep.passed
    assert rep.p3 == p3
    rhs = 2 * phi_value(1, q) * phi_value(3, q) ** 2
    assert rhs % p3 == 0 and (q * phi_value(2, q)) % p3
    assert rep.second_identity_recomputed and not rep.second_identity_printed


@pytest.mark.parametrize("q", [7, 9])
def test_e8_rejects_wrong_two_part(q):
    with pytest.raises(dt.ConditionError):
        dt.verify_e8_contradiction(q)


def test_q3_arithmetic():
    # 2 Phi1 Phi3^2 = 2 * 2 * 169 and q Phi2 = 3 * 4
    assert 2 * phi_value(1, 3) * phi_value(3, 3) ** 2 == 676
    assert 3 * phi_value(2, 3) == 12
