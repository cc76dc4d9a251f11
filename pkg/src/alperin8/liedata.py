"""Order polynomials of finite groups of Lie type and named unipotent degrees.

Orders are isogeny invariant, so one order per (family, rank, twist) is kept.
Each order is stored as ``q^N * prod (q^n - sign)^k`` and expanded into a
:class:`CycProduct`.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .exactmath import CycProduct, v2_product

FAMILIES = ("A", "2A", "B", "C", "D", "2D", "3D4", "G2", "2G2", "F4", "E6", "2E6", "E7", "E8")
_FIXED_RANK = {"3D4": 4, "G2": 2, "2G2": 2, "F4": 4, "E6": 6, "2E6": 6, "E7": 7, "E8": 8}
_MIN_RANK = {"A": 1, "2A": 1, "B": 1, "C": 1, "D": 2, "2D": 2}

_EXCEPTIONAL_DEGREES = {
    "G2": (2, 6),
    "F4": (2, 6, 8, 12),
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
}


class UnsupportedSeries(ValueError):
    pass


@dataclass(frozen=True)
class LieSeries:
    family: str
    rank: int
    field_power: int = 1

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise UnsupportedSeries(f"unknown family {self.family!r}")
        if self.family in _FIXED_RANK and self.rank != _FIXED_RANK[self.family]:
            raise UnsupportedSeries(f"{self.family} has rank {_FIXED_RANK[self.family]}")
        if self.family in _MIN_RANK and self.rank < _MIN_RANK[self.family]:
            raise UnsupportedSeries(f"{self.family}_{self.rank} is not supported")
        if self.field_power < 1:
            raise UnsupportedSeries("field power must be positive")

    @classmethod
    def parse(cls, text: str) -> "LieSeries":
        """Parse names such as ``E6``, ``2A2``, ``3D4``, ``A2(q^3)``."""
        m = re.fullmatch(r"\s*([23]?)([A-G])(\d+)\s*(?:\(\s*q\s*(?:\^\s*(\d+))?\s*\))?\s*", text)
        if not m:
            raise UnsupportedSeries(f"cannot parse series {text!r}")
        twist, letter, rank, power = m.groups()
        rank = int(rank)
        family = twist + letter
        if letter in "EFG" or family == "3D":
            family = f"{family}{rank}"
        return cls(family, rank, int(power or 1))

    @property
    def name(self) -> str:
        base = self.family if self.family in _FIXED_RANK else f"{self.family}{self.rank}"
        return base if self.field_power == 1 else f"{base}(q^{self.field_power})"

    def __str__(self) -> str:
        return self.name

    def binomials(self) -> tuple[int, list[tuple[int, int, int]]]:
        """(N, [(n, sign, multiplicity)]) with |G| = q^N prod (q^n - sign)^mult over base field."""
        f, l = self.family, self.rank
        if f == "A":
            return l * (l + 1) // 2, [(i, 1, 1) for i in range(2, l + 2)]
        if f == "2A":
            return l * (l + 1) // 2, [(i, (-1) ** i, 1) for i in range(2, l + 2)]
        if f in ("B", "C"):
            return l * l, [(2 * i, 1, 1) for i in range(1, l + 1)]
        if f == "D":
            return l * (l - 1), [(2 * i, 1, 1) for i in range(1, l)] + [(l, 1, 1)]
        if f == "2D":
            return l * (l - 1), [(2 * i, 1, 1) for i in range(1, l)] + [(l, -1, 1)]
        if f == "3D4":
            # q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
            return 12, [(2, 1, 1), (6, 1, 1), (12, 1, 1), (4, 1, -1)]
        if f == "2G2":
            return 3, [(3, -1, 1), (1, 1, 1)]
        if f == "2E6":
            return 36, [(d, (-1) ** d, 1) for d in _EXCEPTIONAL_DEGREES["E6"]]
        degs = _EXCEPTIONAL_DEGREES[f]
        return sum(d - 1 for d in degs), [(d, 1, 1) for d in degs]


def group_order(s: LieSeries) -> CycProduct:
    n_pos, factors = s.binomials()
    out = CycProduct.make(1, n_pos)
    for n, sign, mult in factors:
        out = out * CycProduct.binomial(n, sign) ** mult
    if s.field_power != 1:
        out = out.substitute_power(s.field_power)
    assert out.is_polynomial(), s
    return out


def order_rprime(s: LieSeries) -> CycProduct:
    return group_order(s).r_prime()


def raw_order(s: LieSeries, q: int) -> int:
    """|G(q)| from the binomial product, without any cyclotomic factorization."""
    n_pos, factors = s.binomials()
    qq = q**s.field_power
    num, den = qq**n_pos, 1
    for n, sign, mult in factors:
        term = qq**n - sign
        if mult > 0:
            num *= term**mult
        else:
            den *= term ** (-mult)
    assert num % den == 0
    return num // den


def series(text: str) -> LieSeries:
    return LieSeries.parse(text)


@dataclass(frozen=True)
class NamedUnipotent:
    series: LieSeries
    label: str
    degree: CycProduct
    source: str = field(default="", compare=False)


def _cp(text: str) -> CycProduct:
    return CycProduct.from_text(text)


# provenance tags
STATED = "stated"          # degree printed in the source argument
BACKSOLVED = "back-solved"  # r'-part recovered from the E6 defect table
STANDARD = "standard-table"  # standard unipotent degree table, not printed in the source

_BUILTIN: list[tuple[str, str, str, str]] = [
    ("E6", "E6[theta]", "1/3 * q^7 * F1^6 F2^4 F4^2 F5 F8", STATED),
    ("E6", "E6[theta^2]", "1/3 * q^7 * F1^6 F2^4 F4^2 F5 F8", STATED),
    ("2E6", "2E6[theta]", "1/3 * q^7 * F1^4 F2^6 F4^2 F8 F10", STATED),
    ("2E6", "2E6[theta^2]", "1/3 * q^7 * F1^4 F2^6 F4^2 F8 F10", STATED),
    ("E7", "(E6[theta],1)", "1/3 * q^7 * F1^6 F2^6 F4^2 F5 F7 F8 F10 F14", STATED),
    ("E7", "(E6[theta^2],1)", "1/3 * q^7 * F1^6 F2^6 F4^2 F5 F7 F8 F10 F14", STATED),
    ("E7", "(E6[theta],eps)", "1/3 * q^7 * F1^6 F2^6 F4^2 F5 F7 F8 F10 F14", STATED),
    ("E7", "(E6[theta^2],eps)", "1/3 * q^7 * F1^6 F2^6 F4^2 F5 F7 F8 F10 F14", STATED),
    ("A2", "chi^(2,1)", "q * F2", STATED),
    ("2A2", "chi^(2,1)", "q * F1", STATED),
    ("3D4", "phi_{2,2}", "1/2 * q^3 * F2^2 F12", BACKSOLVED),
    ("3D4", "phi_{2,1}", "1/2 * q^3 * F2^2 F6^2", BACKSOLVED),
    ("3D4", "3D4[-1]", "1/2 * q^3 * F1^2 F3^2", BACKSOLVED),
    ("3D4", "3D4[1]", "1/2 * q^3 * F1^2 F12", BACKSOLVED),
    ("F4", "F4[i]", "1/4 * q^4 * F1^4 F2^4 F3^2 F6^2 F12", STANDARD),
    ("F4", "F4[-i]", "1/4 * q^4 * F1^4 F2^4 F3^2 F6^2 F12", STANDARD),
    ("F4", "F4[theta]", "1/3 * q^4 * F1^4 F2^4 F4^2 F8", STANDARD),
    ("F4", "F4[theta^2]", "1/3 * q^4 * F1^4 F2^4 F4^2 F8", STANDARD),
]

ALIASES = {"A2:chi^(1,2)": "A2:chi^(2,1)", "2A2:chi^(1,2)": "2A2:chi^(2,1)"}


class UnknownLabel(KeyError):
    pass


def _key(series_name: str, label: str) -> str:
    return label if label.startswith(series_name + "[") else f"{series_name}:{label}"


def _build_catalog() -> dict[str, NamedUnipotent]:
    cat = {}
    for ser, label, deg, src in _BUILTIN:
        s = series(ser)
        cat[_key(s.name, label)] = NamedUnipotent(s, label, _cp(deg), src)
    return cat


CATALOG: dict[str, NamedUnipotent] = _build_catalog()


def named_degree(label: str, catalog: dict[str, NamedUnipotent] | None = None) -> NamedUnipotent:
    cat = CATALOG if catalog is None else catalog
    label = ALIASES.get(label, label)
    try:
        return cat[label]
    except KeyError:
        raise UnknownLabel(label) from None


def divides_order(u: NamedUnipotent, q: int) -> bool:
    deg = u.degree.evaluate(q)
    if deg.denominator != 1 or deg <= 0:
        return False
    return raw_order(u.series, q) % deg.numerator == 0


def load_catalog(path: str | Path, base: dict[str, NamedUnipotent] | None = None) -> dict[str, NamedUnipotent]:
    """Extend the catalog from a JSON-lines file of {series, label, degree} records.

    Each record's degree must divide the group order at q = 3.
    """
    cat = dict(CATALOG if base is None else base)
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        rec = json.loads(line)
        s = series(rec["series"])
        deg = rec["degree"]
        deg = CycProduct.from_text(deg) if isinstance(deg, str) else CycProduct.from_dict(deg)
        u = NamedUnipotent(s, rec["label"], deg, rec.get("source", f"{path}:{lineno}"))
        if not deg.is_polynomial() or not divides_order(u, 3):
            raise ValueError(f"{path}:{lineno}: degree of {rec['label']} does not divide |{s.name}(3)|")
        cat[_key(s.name, rec["label"])] = u
    return cat


def defect(u: NamedUnipotent, q: int) -> int:
    return v2_product(order_rprime(u.series) / u.degree.r_prime(), q)


__all__ = [
    "FAMILIES", "LieSeries", "NamedUnipotent", "CATALOG", "UnsupportedSeries", "UnknownLabel",
    "group_order", "order_rprime", "raw_order", "series", "named_degree", "load_catalog",
    "divides_order", "defect",
]
