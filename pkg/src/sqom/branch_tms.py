"""Second stage, two-mode-squeezing branch (f1 >> 1).

The retained pair term -(J'/2) a_s1 a_s2 + h.c. (J' = 2 j_hop * lam2) is
absorbed by the two-mode Bogoliubov rotation

    a_sj = cosh(r) A_j + e^{-i Phi} sinh(r) A_k^dag   (j != k),

with Phi = arg(J') and r = (1/4) ln[(S+|J'|)/(S-|J'|)], S = omega_s1+omega_s2.
Note the + sign on the sinh term: with the pair coupling written as
-(J'/2) a_s1 a_s2, the rotation phase that actually cancels the pair term is
arg(-J') = Phi + pi, which we fold into the sign. The exact-conjugation oracle
pins this convention, and the constant c_prime below only comes out right
with it.

The stage exists only for S > |J'|; S <= 0 is rejected rather than
analytically continued (the log form would give r < 0 there, a regime with
no physical anchor in this model).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import TmsUnstable
from .params import ValidatedParams
from .stage1 import Stage1Result
from .validity import (
    RESONANCE_FLOOR_DEFAULT,
    SMALLNESS_DEFAULT,
    ValidityReport,
    build_report,
)


@dataclass(frozen=True)
class TmsCouplings:
    """Effective Hamiltonian coefficients in the doubly-squeezed frame.

    The Hamiltonian reads (with n_j = A_j^dag A_j, x_b = b^dag + b):

        sum_j W_j n_j - sum_j G_j n_j x_b
        + [(g11 A_1^2 + g22 A_2^2 + g12 A_1 A_2) + h.c.] x_b
        - (gp12 A_1^dag A_2 + h.c.) x_b
        - (f_disp + f_prime) x_b + c_const + c_prime.
    """

    r: float
    phi_big: float
    j_prime: complex
    w1: float
    w2: float
    g1: float
    g2: float
    g11: complex
    g22: complex
    g12: complex
    gp12: complex
    f_prime: float
    c_prime: float
    eta: float


def tms_couplings(s: Stage1Result, p: ValidatedParams) -> TmsCouplings:
    """Two-mode-squeezing supermode frequencies and optomechanical couplings.

    Raises
    ------
    TmsUnstable
        when omega_s1 + omega_s2 <= |J'| (which includes every case with
        omega_s1 + omega_s2 <= 0).
    """
    j_prime = 2.0 * p.j_hop * s.lam2
    jp = abs(j_prime)
    s_sum = s.omega_sum
    if not s_sum > jp:
        raise TmsUnstable(s_sum, jp)

    phi = cmath.phase(j_prime)
    r = 0.25 * math.log((s_sum + jp) / (s_sum - jp))
    ch, sh = math.cosh(r), math.sinh(r)
    half_sh2 = sh * ch  # sinh(2r)/2

    w1 = s.omega_s1 * ch * ch + s.omega_s2 * sh * sh - jp * half_sh2
    w2 = s.omega_s2 * ch * ch + s.omega_s1 * sh * sh - jp * half_sh2

    ch2rd2 = math.cosh(2.0 * s.r_d2)
    sh2rd2 = math.sinh(2.0 * s.r_d2)
    g0 = p.g0

    g1 = g0 * ch2rd2 * sh * sh
    g2 = g0 * ch2rd2 * ch * ch
    # The signs of g12 and gp12 carry the arg(-J') fold of the rotation;
    # their magnitudes satisfy |g12|^2 = g1*g2 and |gp12| = |tanh(2 r_d2)|*|g12|.
    g12 = -g0 * ch2rd2 * sh * ch * cmath.exp(1j * phi)
    g11 = g0 * sh2rd2 * sh * sh * 0.5 * cmath.exp(1j * (2.0 * phi - p.phi_d2))
    g22 = g0 * sh2rd2 * ch * ch * 0.5 * cmath.exp(1j * p.phi_d2)
    gp12 = -g0 * sh2rd2 * sh * ch * cmath.exp(1j * (p.phi_d2 - phi))

    f_prime = g0 * ch2rd2 * sh * sh
    c_prime = s_sum * sh * sh - jp * sh * ch
    return TmsCouplings(
        r=r,
        phi_big=phi,
        j_prime=j_prime,
        w1=w1,
        w2=w2,
        g1=g1,
        g2=g2,
        g11=g11,
        g22=g22,
        g12=g12,
        gp12=gp12,
        f_prime=f_prime,
        c_prime=c_prime,
        eta=g1 / g2,
    )


def rwa_validity_tms(
    c: TmsCouplings,
    omega_m: float = 1.0,
    smallness: float = SMALLNESS_DEFAULT,
    resonance_floor: float = RESONANCE_FLOOR_DEFAULT,
) -> ValidityReport:
    """Smallness ratios for every term kept or dropped around this branch."""
    return build_report(
        w1=c.w1,
        w2=c.w2,
        omega_m=omega_m,
        g1=c.g1,
        g2=c.g2,
        g11_abs=abs(c.g11),
        g22_abs=abs(c.g22),
        g12_abs=abs(c.g12),
        gp12_abs=abs(c.gp12),
        smallness=smallness,
        resonance_floor=resonance_floor,
    )


def tms_raw_coefficients(s: Stage1Result, c: TmsCouplings) -> dict[str, complex]:
    """Normal-ordered monomial coefficients of the coupling operator.

    Keys follow the conjugation oracle: n11/n22/n12 multiply
    A_1^dag A_1, A_2^dag A_2, A_1^dag A_2; p11/p22/p12 multiply
    A_1^2, A_2^2, A_1 A_2; 'const' is the scalar part. All are coefficients
    of operators attached to (b^dag + b).
    """
    return {
        "n11": complex(-c.g1),
        "n22": complex(-c.g2),
        "n12": -c.gp12,
        "p11": c.g11,
        "p22": c.g22,
        "p12": c.g12,
        "const": complex(-(s.f_disp + c.f_prime)),
    }


def tms_map_blocks(c: TmsCouplings) -> tuple[np.ndarray, np.ndarray]:
    """(U, V) blocks of the rotation: a_s = U A + V A^dag."""
    ch, sh = math.cosh(c.r), math.sinh(c.r)
    e = cmath.exp(-1j * c.phi_big)
    U = np.eye(2, dtype=complex) * ch
    V = np.array([[0.0, sh * e], [sh * e, 0.0]], dtype=complex)
    return U, V
