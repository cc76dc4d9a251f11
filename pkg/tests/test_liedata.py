import json

import pytest

from alperin8.exactmath import CycProduct, v2
from alperin8.liedata import (
    CATALOG, LieSeries, UnknownLabel, UnsupportedSeries, defect, divides_order, group_order,
    load_catalog, named_degree, order_rprime, raw_order, series,
)

ALL_SERIES = (
    [f"A{l}" for l in range(1, 9)] + [f"2A{l}" for l in range(1, 9)]
    + [f"B{l}" for l in range(1, 9)] + [f"C{l}" for l in range(1, 9)]
    + [f"D{l}" for l in range(2, 9)] + [f"2D{l}" for l in range(2, 9)]
    + ["3D4", "G2", "2G2", "F4", "E6", "2E6", "E7", "E8", "A2(q^3)", "2A2(q^3)"]
)


@pytest.mark.parametrize("name", ALL_SERIES)
@pytest.mark.parametrize("q", [2, 3, 5, 9])
def test_factored_order_matches_raw_product(name, q):
    s = series(name)
    assert group_order(s).evaluate(q) == raw_order(s, q)


@pytest.mark.parametrize("name, q, order", [
    ("A1", 3, 24),                              # SL2(3)
    ("B2", 3, 51840),                           # Sp4(3)
    ("G2", 3, 4245696),
    ("3D4", 2, 211341312),
    ("F4", 2, 3311126603366400),
    ("E6", 2, 214841575522005575270400),
])
def test_known_orders(name, q, order):
    assert raw_order(series(name), q) == order


def test_parse_names():
    assert series("E6") == LieSeries("E6", 6)
    assert series("2A2") == LieSeries("2A", 2)
    assert series("A2(q^3)") == LieSeries("A", 2, 3)
    assert series("3D4").name == "3D4"
    assert series("2A2(q^3)").name == "2A2(q^3)"
    with pytest.raises(UnsupportedSeries):
        series("E5")
    with pytest.raises(UnsupportedSeries):
        series("D1")


def test_order_rprime_drops_q_power():
    assert order_rprime(series("A1")) == CycProduct.from_text("F1 F2")
    assert order_rprime(series("E6")) == CycProduct.from_text("F1^6 F2^4 F3^3 F4^2 F5 F6^2 F8 F9 F12")


@pytest.mark.parametrize("key", sorted(CATALOG))
@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_catalog_degrees_divide_order(key, q):
    assert divides_order(CATALOG[key], q)


@pytest.mark.parametrize("q", [3, 5, 7, 9, 11, 13])
def test_named_defects(q):
    d2 = v2(q * q - 1)
    assert defect(named_degree("E6[theta]"), q) == 0
    assert defect(named_degree("2E6[theta]"), q) == 0
    assert defect(named_degree("E7:(E6[theta],1)"), q) == d2
    assert defect(named_degree("F4[i]"), q) == 5
    assert defect(named_degree("F4[-i]"), q) == 5


def test_aliases_and_unknown_labels():
    assert named_degree("A2:chi^(1,2)") is CATALOG["A2:chi^(2,1)"]
    with pytest.raises(UnknownLabel):
        named_degree("E8[zeta]")


def test_load_catalog_extends_and_validates(tmp_path):
    good = tmp_path / "good.jsonl"
    good.write_text(json.dumps({"series": "A1", "label": "steinberg", "degree": "q"}) + "\n")
    cat = load_catalog(good)
    assert cat["A1:steinberg"].degree == CycProduct.make(1, 1)
    assert "E6[theta]" in cat

    bad = tmp_path / "bad.jsonl"
    bad.write_text(json.dumps({"series": "A1", "label": "x", "degree": "F3"}) + "\n")
    with pytest.raises(ValueError):
        load_catalog(bad)
