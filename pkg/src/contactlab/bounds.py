"""Closed-form exact values, upper bounds and lower bounds for maximum
contact numbers of congruent-ball packings, plus the 3-space bound table.

Every evaluator returns a BoundReport tagging the value with its
direction (exact / upper / lower) and a short provenance anchor.  Floors
of expressions of the form  a*n - sqrt(m)  or  a*n - b*n^{(d-1)/d} with
integer radicands are taken in exact integer arithmetic so results near
integer boundaries cannot be spoiled by rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

__all__ = [
    "BoundReport", "UnsupportedBoundError", "kissing_number",
    "sphere_packing_density", "exact_formula", "upper_bound",
    "fcc_octahedral_lower", "octahedral_size", "octahedral_k",
    "gap_ratios", "table1", "table1_csv",
    "EXACT_KINDS", "UPPER_KINDS", "GAP_MODES", "KISSING_NUMBERS",
]


class UnsupportedBoundError(ValueError):
    """Requested (kind, n, d) combination has no supported constant."""


# Known kissing numbers; lookups outside this table fail explicitly.
KISSING_NUMBERS = {2: 6, 3: 12, 4: 24, 8: 240, 24: 196560}

# Known optimal sphere packing densities (by dimension).
_PACKING_DENSITY = {3: math.pi / math.sqrt(18.0)}


def kissing_number(d: int) -> int:
    if d not in KISSING_NUMBERS:
        raise UnsupportedBoundError(f"kissing number unknown for d={d}")
    return KISSING_NUMBERS[d]


def sphere_packing_density(d: int) -> float:
    if d not in _PACKING_DENSITY:
        raise UnsupportedBoundError(f"packing density unknown for d={d}")
    return _PACKING_DENSITY[d]


@dataclass(frozen=True)
class BoundReport:
    kind: str
    n: int
    d: int
    value_real: float
    value_int: int
    direction: str            # "exact" | "upper" | "lower"
    anchor: str

    def to_json(self) -> dict:
        return {
            "kind": self.kind, "n": self.n, "d": self.d,
            "value_real": self.value_real, "value_int": self.value_int,
            "direction": self.direction, "anchor": self.anchor,
        }


def _ceil_isqrt(m: int) -> int:
    """Exact ceil(sqrt(m)) for non-negative integer m."""
    s = math.isqrt(m)
    return s if s * s == m else s + 1


def _iroot(x: int, k: int) -> int:
    """Exact floor of the k-th root of a non-negative integer."""
    if x < 0:
        raise ValueError("negative radicand")
    r = int(round(x ** (1.0 / k)))
    while r > 0 and r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def _ceil_root(x: int, k: int) -> int:
    r = _iroot(x, k)
    return r if r ** k == x else r + 1


def _floor_strict(value_real: float, strict: bool) -> int:
    """Floor of an upper bound; a strict bound at an exact integer drops by 1."""
    f = math.floor(value_real)
    if strict and value_real == f:
        return f - 1
    return f


EXACT_KINDS = ("C2", "C2_PARALLELOGRAM", "CZ2", "CSEP2", "CSTAR2")


def exact_formula(kind: str, n: int) -> BoundReport:
    """Evaluate one of the known exact maximum-contact formulas.

    C2                largest contacts of n congruent disks, floor(3n - sqrt(12n-3))
    C2_PARALLELOGRAM  translates of a parallelogram, floor(4n - sqrt(28n-12))
    CZ2               digital (square-lattice) disks, floor(2n - 2*sqrt(n))
    CSEP2             totally separable disks, same value as CZ2
    CSTAR2            non-congruent circles, 3n - 6 (planar maximal graphs)
    """
    if kind not in EXACT_KINDS:
        raise UnsupportedBoundError(f"unknown exact formula kind {kind!r}")
    if kind == "CSTAR2":
        if n < 3:
            raise ValueError(f"{kind} requires n >= 3, got {n}")
        return BoundReport(kind, n, 2, float(3 * n - 6), 3 * n - 6,
                           "exact", "koebe-planar")
    if n < 2:
        raise ValueError(f"{kind} requires n >= 2, got {n}")
    if kind == "C2":
        vi = 3 * n - _ceil_isqrt(12 * n - 3)
        vr = 3 * n - math.sqrt(12 * n - 3)
        return BoundReport(kind, n, 2, vr, vi, "exact", "harborth-planar")
    if kind == "C2_PARALLELOGRAM":
        vi = 4 * n - _ceil_isqrt(28 * n - 12)
        vr = 4 * n - math.sqrt(28 * n - 12)
        return BoundReport(kind, n, 2, vr, vi, "exact", "brass-parallelogram")
    # CZ2 / CSEP2: floor(2n - 2 sqrt(n)) = 2n - ceil(sqrt(4n))
    vi = 2 * n - _ceil_isqrt(4 * n)
    vr = 2 * n - 2.0 * math.sqrt(n)
    anchor = "digital-planar" if kind == "CZ2" else "separable-planar"
    return BoundReport(kind, n, 2, vr, vi, "exact", anchor)


# Coefficient of the fcc upper bound 6n - c * n^(2/3), evaluated in double
# precision from the defining constant rather than its printed decimals.
_FCC_COEFF = 3.0 * (18.0 * math.pi) ** (1.0 / 3.0) / math.pi

UPPER_KINDS = ("C3_GENERAL", "C3_FCC", "CSEP3", "CZD", "CSEPD",
               "UNIVERSAL_TRANSLATES", "KISSING_BASED", "KS_NONCONGRUENT")

_FIXED_D3 = ("C3_GENERAL", "C3_FCC", "CSEP3", "KS_NONCONGRUENT")


def upper_bound(kind: str, n: int, d: int = 3) -> BoundReport:
    """Evaluate one of the supported upper bounds on maximum contacts.

    C3_GENERAL           c(n,3)  < 6n - 0.926 n^(2/3)
    C3_FCC               fcc-restricted packings, 6n - 3.665... n^(2/3)
    CSEP3                totally separable, 3n - 1.346 n^(2/3)
    CZD                  digital in d-space, floor(dn - d n^((d-1)/d)), d >= 2
    CSEPD                totally separable in d-space, d >= 4
    UNIVERSAL_TRANSLATES translates of any convex body, d >= 3
    KISSING_BASED        k(d)/2 * n - (1/2^d) delta_d^{-(d-1)/d} n^((d-1)/d)
    KS_NONCONGRUENT      non-congruent spheres in 3-space, (4 + 2 sqrt(3)) n

    Unsupported (kind, d) combinations raise UnsupportedBoundError; there
    is no silent fallback.
    """
    if kind not in UPPER_KINDS:
        raise UnsupportedBoundError(f"unknown upper bound kind {kind!r}")
    if n < 2:
        raise ValueError(f"{kind} requires n >= 2, got {n}")
    if kind in _FIXED_D3 and d != 3:
        raise UnsupportedBoundError(f"{kind} is only available for d=3, got d={d}")

    if kind == "C3_GENERAL":
        vr = 6.0 * n - 0.926 * n ** (2.0 / 3.0)
        return BoundReport(kind, n, 3, vr, _floor_strict(vr, True),
                           "upper", "general-upper-3d")
    if kind == "C3_FCC":
        vr = 6.0 * n - _FCC_COEFF * n ** (2.0 / 3.0)
        return BoundReport(kind, n, 3, vr, _floor_strict(vr, True),
                           "upper", "fcc-upper-3d")
    if kind == "CSEP3":
        vr = 3.0 * n - 1.346 * n ** (2.0 / 3.0)
        return BoundReport(kind, n, 3, vr, _floor_strict(vr, True),
                           "upper", "separable-upper-3d")
    if kind == "CZD":
        if d < 2:
            raise UnsupportedBoundError(f"CZD requires d >= 2, got d={d}")
        # floor(dn - d n^((d-1)/d)) = dn - ceil((d^d n^(d-1))^(1/d)), exactly.
        vi = d * n - _ceil_root(d ** d * n ** (d - 1), d)
        vr = d * n - d * n ** ((d - 1.0) / d)
        return BoundReport(kind, n, d, vr, vi, "upper", "digital-cubic")
    if kind == "CSEPD":
        if d < 4:
            raise UnsupportedBoundError(f"CSEPD requires d >= 4, got d={d}")
        vr = d * n - n ** ((d - 1.0) / d) / (2.0 * d ** ((d - 1.0) / 2.0))
        return BoundReport(kind, n, d, vr, _floor_strict(vr, False),
                           "upper", "separable-general")
    if kind == "UNIVERSAL_TRANSLATES":
        if d < 3:
            raise UnsupportedBoundError(
                f"UNIVERSAL_TRANSLATES requires d >= 3, got d={d}")
        from .geometry import unit_ball_volume
        omega = unit_ball_volume(d)
        vr = ((3 ** d - 1) / 2.0) * n \
            - omega ** (1.0 / d) / 2 ** (d + 1) * n ** ((d - 1.0) / d)
        return BoundReport(kind, n, d, vr, _floor_strict(vr, False),
                           "upper", "translative-universal")
    if kind == "KISSING_BASED":
        k = kissing_number(d)
        delta = sphere_packing_density(d)
        vr = 0.5 * k * n \
            - delta ** (-(d - 1.0) / d) / 2 ** d * n ** ((d - 1.0) / d)
        return BoundReport(kind, n, d, vr, _floor_strict(vr, True),
                           "upper", "kissing-density")
    # KS_NONCONGRUENT
    vr = (4.0 + 2.0 * math.sqrt(3.0)) * n
    return BoundReport(kind, n, 3, vr, _floor_strict(vr, True),
                       "upper", "noncongruent-3d")


class FccLowerBound(NamedTuple):
    n: int
    contacts: int


def octahedral_size(k: int) -> int:
    """Ball count k(2k^2 + 1)/3 of the k-layer square bipyramid (always integral)."""
    num = k * (2 * k * k + 1)
    assert num % 3 == 0
    return num // 3


def octahedral_k(n: int) -> Optional[int]:
    """Return k with octahedral_size(k) == n for k >= 2, or None."""
    k = 2
    while octahedral_size(k) <= n:
        if octahedral_size(k) == n:
            return k
        k += 1
    return None


def fcc_octahedral_lower(k: int) -> FccLowerBound:
    """Lower bound 2k(2k^2 - 3k + 1) on fcc contact numbers, attained by the
    k-layer square bipyramid of n = k(2k^2+1)/3 balls.  Requires k >= 2."""
    if k < 2:
        raise ValueError(f"octahedral lower bound requires k >= 2, got {k}")
    return FccLowerBound(octahedral_size(k), 2 * k * (2 * k * k - 3 * k + 1))


GAP_MODES = {
    "PLANAR": (3, 0.5),
    "SPATIAL": (6, 2.0 / 3.0),
    "SEP_PLANAR": (2, 0.5),
    "SEP_SPATIAL": (3, 2.0 / 3.0),
}


def gap_ratios(n: int, c: int, mode: str) -> float:
    """Normalized defect (a*n - c) / n^e measuring how far a contact count c
    sits below the leading term; (a, e) is (3, 1/2), (6, 2/3), (2, 1/2) or
    (3, 2/3) for PLANAR, SPATIAL, SEP_PLANAR, SEP_SPATIAL respectively."""
    if mode not in GAP_MODES:
        raise ValueError(f"unknown gap mode {mode!r}")
    if n < 2:
        raise ValueError(f"gap ratio requires n >= 2, got {n}")
    if c < 0:
        raise ValueError(f"contact count must be >= 0, got {c}")
    a, e = GAP_MODES[mode]
    return (a * n - c) / n ** e


class TableRow(NamedTuple):
    n: int
    fcc_lower: Optional[int]
    fcc_upper: int
    general_upper: int


def table1(n_from: int, n_to: int) -> list[TableRow]:
    """Rows (n, fcc_lower?, fcc_upper, general_upper) of 3-space contact
    bounds; the lower bound column is filled only at octahedral sizes."""
    if not 2 <= n_from <= n_to:
        raise ValueError(f"need 2 <= n_from <= n_to, got {n_from}..{n_to}")
    lower_at = {}
    k = 2
    while octahedral_size(k) <= n_to:
        lower_at[octahedral_size(k)] = fcc_octahedral_lower(k).contacts
        k += 1
    rows = []
    for n in range(n_from, n_to + 1):
        rows.append(TableRow(
            n=n,
            fcc_lower=lower_at.get(n),
            fcc_upper=upper_bound("C3_FCC", n).value_int,
            general_upper=upper_bound("C3_GENERAL", n).value_int,
        ))
    return rows


def table1_csv(rows: list[TableRow]) -> str:
    """Byte-stable CSV with header n,fcc_lower,fcc_upper,general_upper and an
    empty field where no lower bound applies."""
    lines = ["n,fcc_lower,fcc_upper,general_upper"]
    for r in rows:
        low = "" if r.fcc_lower is None else str(r.fcc_lower)
        lines.append(f"{r.n},{low},{r.fcc_upper},{r.general_upper}")
    return "\n".join(lines) + "\n"
