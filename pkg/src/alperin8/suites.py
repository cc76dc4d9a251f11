"""Verification suites: each returns a list of Check records."""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from typing import Sequence

from sympy import factorint

from . import defect_tables as dt
from .exactmath import de_pair, gram, multiplicative_order, phi_value, zsigmondy_prime
from .isometry import NoExtension, check_perfect, extend_isometry, preserves_gram
from .liedata import CATALOG, defect, load_catalog, named_degree, order_rprime
from .lzero import (
    SHAPE_FOR_ORDER, SHAPES, compute_lzero, inertial_from_difference,
    landrock_lookup, match_basis_shape, norm8_support_census, norm8_supports,
)
from .report import Check
from .smallgroups import (
    TwoGroupType, build_pgl2, build_psl2, build_sl2, character_table, local_group,
    recognize_2group, sylow2,
)
from .symbols import (
    IdentityViolation, Partition, classical_bound, defect_scan, enumerate_symbols, identity_check,
)

DEFAULT_QS = (3, 5, 7, 9, 11, 13)
INERTIAL_ORDERS = (1, 3, 7, 21)
EXPECTED_DEGREES = {
    1: Counter({1: 8}),
    3: Counter({1: 6, 3: 2}),
    7: Counter({1: 7, 7: 1}),
    21: Counter({1: 3, 3: 2, 7: 3}),
}


class UsageError(ValueError):
    """Invalid parameters for a suite; the CLI maps this to exit status 1."""


def require_odd(qs: Sequence[int]) -> None:
    for q in qs:
        if q < 3 or q % 2 == 0 or len(factorint(q)) != 1:
            raise UsageError(f"q must be an odd prime power >= 3, got {q}")


def catalog_from(path: str | None):
    return CATALOG if path is None else load_catalog(path)


@lru_cache(maxsize=None)
def local_data(e: int):
    G = local_group(e)
    t = character_table(G)
    return G, t, compute_lzero(t)


# local structure -----------------------------------------------------------

def local_groups() -> list[Check]:
    out = []
    for e in INERTIAL_ORDERS:
        G, t, L = local_data(e)
        degs = Counter(t.degrees())
        out.append(Check(f"local-groups/E{e}", len(t.chars) == 8 and degs == EXPECTED_DEGREES[e], {
            "group_order": G.order, "irreducibles": len(t.chars),
            "degrees": sorted(t.degrees()), "orthogonality": "exact"}))
        expected_rank = 8 - len(t.regular_classes())
        ok = L.rank == expected_rank and all(L.vanishes_on_regular(b) for b in L.basis)
        details = {"rank": L.rank, "regular_classes": len(t.regular_classes())}
        if e in SHAPE_FOR_ORDER:
            shape = SHAPE_FOR_ORDER[e]
            w = match_basis_shape(L, shape)
            ok = ok and w is not None and gram(w.vectors) == gram(SHAPES[shape])
            details["shape"] = shape
            details["witness"] = w.map.one_line() if w else None
        out.append(Check(f"lzero/E{e}", ok, details))
    return out


def landrock() -> list[Check]:
    out = []
    for e in INERTIAL_ORDERS:
        case = landrock_lookup(e)
        _, _, L = local_data(e)
        ok = inertial_from_difference(case.difference) == e and L.rank == case.difference
        out.append(Check(f"landrock/E{e}", ok, {
            "pairs": sorted(case.allowed_pairs), "k_minus_l": case.difference, "lzero_rank": L.rank}))
    return out


def norm8() -> list[Check]:
    supports = norm8_supports()
    census = norm8_support_census()
    expected = [(2, 2), (2, 1, 1, 1, 1), (1,) * 8]
    ok = supports == expected and sorted(census, key=lambda t: (len(t), t)) == expected
    sizes = sorted({len(s) for s in supports})
    five = [s for s in supports if len(s) == 5]
    return [Check("norm8/supports", ok and sizes == [2, 5, 8] and five == [(2, 1, 1, 1, 1)], {
        "support_sizes": sizes, "shapes": supports,
        "census": {"/".join(map(str, k)): v for k, v in census.items()}})]


# symbols and classical groups -------------------------------------------------

def symbol_identity(rankmax: int = 8, max_entries: int = 10) -> list[Check]:
    counts: Counter = Counter()
    failures = []
    for rank in range(rankmax + 1):
        for parity in ("odd", "even"):
            for s in enumerate_symbols(rank, parity, max_entries=max_entries):
                try:
                    val = identity_check(s)
                except IdentityViolation as exc:
                    failures.append(str(exc))
                    continue
                counts[val] += 1
                if len(s.hook_list()) != s.h_plus or len(s.cohook_list()) != s.h_minus:
                    failures.append(f"{s}: hook counts")
    return [Check("symbol-identity/exhaustive", not failures, {
        "rankmax": rankmax, "max_entries": max_entries, "symbols": sum(counts.values()),
        "value_0": counts[0], "value_minus_1": counts[-1], "failures": failures[:20]})]


CLASSICAL = ("A", "2A", "B", "C", "D", "2D")
MIN_RANK = {"A": 1, "2A": 1, "B": 1, "C": 1, "D": 2, "2D": 2}


def classical_defects(lmax: int = 8, qset: Sequence[int] = DEFAULT_QS + (17,)) -> list[Check]:
    require_odd(qset)
    out = []
    for fam in CLASSICAL:
        rows = []
        ok = True
        for q in qset:
            for l in range(MIN_RANK[fam], lmax + 1):
                recs = defect_scan(fam, l, q)
                m = min(r.defect for r in recs)
                bound = classical_bound(fam, l, q)
                ok &= m >= bound
                rows.append({"q": q, "rank": l, "min_defect": m, "bound": bound})
        out.append(Check(f"classical-defects/{fam}", ok, {"lmax": lmax, "minima": rows}))
    a2, a1 = [], []
    for q in qset:
        d, e = de_pair(q)
        got = {r.label: r.defect for r in defect_scan("A", 2, q)}[str(Partition((2, 1)))]
        a2.append({"q": q, "defect": got, "expected": 2 * d})
        a1.append({"q": q, "defects": sorted(r.defect for r in defect_scan("A", 1, q)), "expected": d + e})
    out.append(Check("classical-defects/A2-chi21", all(x["defect"] == x["expected"] for x in a2), {"rows": a2}))
    out.append(Check("classical-defects/A1", all(set(x["defects"]) == {x["expected"]} for x in a1), {"rows": a1}))
    return out


def exceptional(qs: Sequence[int] = (3, 5, 7, 9), data: str | None = None) -> list[Check]:
    require_odd(qs)
    cat = catalog_from(data)
    rows = []
    ok = True
    for q in qs:
        d, e = de_pair(q)
        row = {
            "q": q,
            "E6[theta]": defect(named_degree("E6[theta]", cat), q),
            "E7:(E6[theta],1)": defect(named_degree("E7:(E6[theta],1)", cat), q),
            "F4[i]": defect(named_degree("F4[i]", cat), q),
            "F4[-i]": defect(named_degree("F4[-i]", cat), q),
            "v2(q^2-1)": d + e,
        }
        ok &= row["E6[theta]"] == 0 and row["E7:(E6[theta],1)"] == d + e >= 3
        ok &= row["F4[i]"] == row["F4[-i]"] == 5
        rows.append(row)
    return [Check("exceptional/named-defects", ok, {"rows": rows})]


# exceptional tables ---------------------------------------------------------

def tables_e6(qs: Sequence[int] = DEFAULT_QS, data: str | None = None, per_row: int = 2) -> list[Check]:
    require_odd(qs)
    cat = catalog_from(data)
    out = []
    for name in dt.TABLES:
        for row in dt.TABLES[name]:
            row.validate()
            chosen = dt.admissible_qs(row.q_condition, qs, per_row)
            reps = [dt.verify_row(row, q, cat) for q in chosen]
            failed = {r.q: [k for k, v in r.checks.items() if not v] for r in reps if not r.passed}
            details = {"qs": chosen, "defect": row.claimed_defect,
                       "values": {r.q: r.values for r in reps}, "failed": failed}
            if row.key in dt.ERRATA:
                details["erratum"] = dt.ERRATA[row.key].reason
                details["corrected_product"] = dt.ERRATA[row.key].corrected
            if row.key in dt.ROW_NOTES:
                details["note"] = dt.ROW_NOTES[row.key]
            if not chosen:
                details["skipped"] = "no admissible q in the requested set"
            out.append(Check(f"tables-e6/{row.key}", not failed, details))
    errata = dt.recomputed_errata(cat)
    out.append(Check("tables-e6/errata", sorted(errata) == sorted(dt.ERRATA),
                     {"recomputed": errata, "recorded": sorted(dt.ERRATA)}))
    mism = dt.duality_mismatches(corrected=True)
    out.append(Check("tables-e6/q-to-minus-q", not mism, {"mismatched_rows": mism,
                     "printed_rows_differing": dt.duality_mismatches(corrected=False)}))
    back = dt.backsolve_3d4_degrees()
    consistent = {lab: a == b == named_degree(lab, cat).degree.r_prime() for lab, (a, b) in back.items()}
    out.append(Check("tables-e6/3D4-backsolve", all(consistent.values()), {
        "degrees": {lab: a for lab, (a, _) in back.items()}, "consistent": consistent}))
    torus = []
    for name in dt.TABLES:
        for row in dt.TABLES[name]:
            if row.c_prime is None:
                torus.append(dt.corrected_product(row) * row.z_s == order_rprime(row.group))
    out.append(Check("tables-e6/torus-rows", all(torus), {"rows": len(torus)}))
    return out


def f4(qs: Sequence[int] = (3, 5, 7), data: str | None = None) -> list[Check]:
    require_odd(qs)
    cat = catalog_from(data)
    out = []
    for q in qs:
        rep = dt.verify_f4_isolated(q, cat)
        out.append(Check(f"f4/q{q}", rep.passed, {"centralizers": rep.rows}))
    return out


def e8(qs: Sequence[int] = (3, 5), data: str | None = None) -> list[Check]:
    require_odd(qs)
    for q in qs:
        if not dt.admissible(dt.TWO_PART_8, q):
            raise UsageError(f"q = {q}: the E8 check needs (q^2-1)_2 = 8")
    cat = catalog_from(data)
    out = []
    for q in qs:
        r = dt.verify_e8_contradiction(q, cat)
        out.append(Check(f"e8/q{q}", r.passed, {
            "p3": r.p3, "q_phi2": q * phi_value(2, q), "two_phi1_phi3sq": 2 * phi_value(1, q) * phi_value(3, q) ** 2,
            "same_degree": r.same_degree, "first_degree_identity": r.first_identity,
            "second_degree_as_displayed": r.second_identity_printed,
            "second_degree_recomputed": r.second_identity_recomputed, "notes": r.notes}))
    return out


# number theory and small groups -----------------------------------------------

def zsigmondy(qs: Sequence[int] = (3, 5, 7, 9), nmax: int = 20, dmax: int = 60) -> list[Check]:
    require_odd(qs)
    out = []
    for q in qs:
        primes, bad = {}, []
        for n in range(3, nmax + 1):
            p = zsigmondy_prime(q, n)
            primes[n] = p
            if multiplicative_order(q, p) != n:
                bad.append(f"ord_{p}({q}) != {n}")
            for d in range(1, dmax + 1):
                if phi_value(d, q) % p == 0 and d % n:
                    bad.append(f"p_{n}={p} divides Phi_{d}({q})")
        out.append(Check(f"zsigmondy/q{q}", not bad, {"primes": primes, "failures": bad}))
    return out


def sylow(qs: Sequence[int] = DEFAULT_QS) -> list[Check]:
    require_odd(qs)
    out = []
    for q in qs:
        S = sylow2(build_sl2(q))
        kind = recognize_2group(S)
        ok = kind == TwoGroupType.GENERALIZED_QUATERNION and ((S.order == 8) == (q % 8 in (3, 5)))
        out.append(Check(f"sylow/SL2({q})", ok, {"type": kind.value, "order": S.order}))
        S = sylow2(build_pgl2(q))
        kind = recognize_2group(S)
        out.append(Check(f"sylow/PGL2({q})", kind == TwoGroupType.DIHEDRAL and S.order >= 8,
                         {"type": kind.value, "order": S.order}))
        S = sylow2(build_psl2(q))
        kind = recognize_2group(S)
        ok = kind == TwoGroupType.KLEIN_FOUR if q in (3, 5) else kind in (TwoGroupType.KLEIN_FOUR, TwoGroupType.DIHEDRAL)
        out.append(Check(f"sylow/PSL2({q})", ok, {"type": kind.value, "order": S.order}))
    return out


def isometry(case: int) -> list[Check]:
    if case not in (3, 7, 21):
        raise UsageError("case must be 3, 7 or 21")
    _, t, L = local_data(case)
    details: dict = {"p_permutation_equivalence": "not verified"}
    try:
        cand = extend_isometry(L, L, L.basis)
    except NoExtension as exc:
        return [Check(f"isometry/E{case}", False, {**details, "error": str(exc)})]
    rep = check_perfect(cand, t, t)
    details.update({"candidate": cand.one_line(), "gram_preserved": preserves_gram(cand, t, t),
                    **rep.to_records()})
    return [Check(f"isometry/E{case}", rep.perfect and details["gram_preserved"], details)]


SUITES = {
    "local-groups": local_groups,
    "landrock": landrock,
    "norm8": norm8,
    "symbol-identity": symbol_identity,
    "classical-defects": classical_defects,
    "exceptional": exceptional,
    "tables-e6": tables_e6,
    "f4": f4,
    "e8": e8,
    "zsigmondy": zsigmondy,
    "sylow": sylow,
    "isometry": isometry,
}


def run_suite(name: str, kwargs: dict) -> list[Check]:
    return SUITES[name](**kwargs)
