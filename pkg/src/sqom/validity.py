"""Rotating-wave validity bookkeeping shared by both second-stage branches.

Each retained interaction term oscillates at some frequency mismatch; the
term is negligible (or safely kept) only if its coupling magnitude is small
against that mismatch. A mismatch below `resonance_floor` is not a validity
ratio at all but a frequency-matching working point, and is flagged as such
instead of producing a huge ratio.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

SMALLNESS_DEFAULT = 0.1
RESONANCE_FLOOR_DEFAULT = 1e-9


@dataclass(frozen=True)
class RwaTerm:
    name: str
    coupling_abs: float
    gap: float           # min over sign choices of the frequency mismatch
    ratio: float         # coupling_abs / gap; +inf on a resonance hit
    small: bool          # ratio below the smallness threshold
    resonance_hit: bool  # gap below the resonance floor


@dataclass(frozen=True)
class ValidityReport:
    terms: tuple[RwaTerm, ...]
    smallness: float
    resonance_floor: float

    @property
    def all_small(self) -> bool:
        return all(t.small for t in self.terms if not t.resonance_hit)

    @property
    def any_resonance(self) -> bool:
        return any(t.resonance_hit for t in self.terms)

    @property
    def max_ratio(self) -> float:
        finite = [t.ratio for t in self.terms if not t.resonance_hit]
        return max(finite, default=0.0)

    def term(self, name: str) -> RwaTerm:
        for t in self.terms:
            if t.name == name:
                return t
        raise KeyError(name)


def make_term(
    name: str,
    coupling_abs: float,
    gaps: list[float],
    smallness: float,
    resonance_floor: float,
) -> RwaTerm:
    gap = min(abs(g) for g in gaps)
    hit = gap < resonance_floor
    ratio = math.inf if hit else coupling_abs / gap
    return RwaTerm(
        name=name,
        coupling_abs=coupling_abs,
        gap=gap,
        ratio=ratio,
        small=(not hit) and ratio <= smallness,
        resonance_hit=hit,
    )


def build_report(
    w1: float,
    w2: float,
    omega_m: float,
    g1: float,
    g2: float,
    g11_abs: float,
    g22_abs: float,
    g12_abs: float,
    gp12_abs: float,
    smallness: float = SMALLNESS_DEFAULT,
    resonance_floor: float = RESONANCE_FLOOR_DEFAULT,
) -> ValidityReport:
    """Ratios for every interaction term of the effective Hamiltonian.

    Radiation-pressure terms G_j A_j^dag A_j (b^dag + b) oscillate only via
    the mechanical sideband, so their scale is omega_m itself. Parametric
    terms G_jk A_j A_k beat at W_j + W_k -/+ omega_m, and the three-mode term
    G_p12 A_1^dag A_2 at W_1 - W_2 -/+ omega_m.
    """
    terms = (
        make_term("g1", g1, [omega_m], smallness, resonance_floor),
        make_term("g2", g2, [omega_m], smallness, resonance_floor),
        make_term("g11", g11_abs, [2 * w1 - omega_m, 2 * w1 + omega_m], smallness, resonance_floor),
        make_term("g22", g22_abs, [2 * w2 - omega_m, 2 * w2 + omega_m], smallness, resonance_floor),
        make_term("g12", g12_abs, [w1 + w2 - omega_m, w1 + w2 + omega_m], smallness, resonance_floor),
        make_term("gp12", gp12_abs, [w1 - w2 - omega_m, w1 - w2 + omega_m], smallness, resonance_floor),
    )
    return ValidityReport(terms=terms, smallness=smallness, resonance_floor=resonance_floor)
