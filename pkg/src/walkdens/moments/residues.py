"""Pole data of the moment functions: the sequences s_{4,k}, r_{4,k},
r_{5,k} and the Gamma-quotient constants seeding the five-step residues.

Exact layer: the ratios u_k = W_4(2k)/64^k are rational; r_{4,k} equals
(3/(2 pi^2)) (A_k + B_k log 2) with A_k, B_k rational, and r_{5,k} is a
rational combination of the two seed residues.  These exact sequences
drive both the float tables and the operator-annihilation checks.

Float layer: s_{4,k} = (3/(2 pi^2)) W_4(2k)/64^k; r_{4,k} from the
three-term-plus-source recurrence with r_{4,0} = (9/(2 pi^2)) log 2;
r_{5,k} from the four-term recurrence with the Gamma-quotient seed
r_{5,0} and the (conjectural, flagged) seed r_{5,1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..errors import GuardExceeded
from ..numerics.gammafn import gamma
from .exact import even_moment_table

RESIDUE_GUARD_K = 200


# -- exact sequences -----------------------------------------------------------

@lru_cache(maxsize=8)
def s4_ratio_sequence(K: int) -> tuple:
    """u_k = W_4(2k)/64^k, exact; s_{4,k} = (3/(2 pi^2)) u_k."""
    w4 = even_moment_table(4, K)
    return tuple(Fraction(w4[k], 64**k) for k in range(K + 1))


@lru_cache(maxsize=8)
def r4_ratio_sequence(K: int) -> tuple:
    """rho_k = r_{4,k} * (2 pi^2 / 3) as pairs (A_k, B_k) over (1, log 2).

    128 k^3 rho_k = 4(2k-1)(5k^2-5k+2) rho_{k-1} - 2(k-1)^3 rho_{k-2}
                    + 3 (64 k^2 u_k - (20k^2-20k+6) u_{k-1} + (k-1)^2 u_{k-2})
    with rho_{-1} = 0 and rho_0 = 3 log 2 (i.e. (0, 3))."""
    u = s4_ratio_sequence(K)
    rho = [(Fraction(0), Fraction(3))]
    prev2 = (Fraction(0), Fraction(0))  # rho_{-1}
    for k in range(1, K + 1):
        c1 = Fraction(4 * (2 * k - 1) * (5 * k * k - 5 * k + 2))
        c2 = Fraction(-2 * (k - 1) ** 3)
        src = 3 * (64 * k * k * u[k]
                   - (20 * k * k - 20 * k + 6) * u[k - 1]
                   + (k - 1) ** 2 * (u[k - 2] if k >= 2 else Fraction(0)))
        prev1 = rho[k - 1]
        a = (c1 * prev1[0] + c2 * prev2[0] + src) / (128 * k**3)
        b = (c1 * prev1[1] + c2 * prev2[1]) / (128 * k**3)
        rho.append((a, b))
        prev2 = prev1
    return tuple(rho)


@lru_cache(maxsize=8)
def r5_ratio_sequence(K: int) -> tuple:
    """r_{5,k} as exact pairs (c0_k, c1_k) over the seeds (r_{5,0}, r_{5,1}).

    (15 (2k+2)(2k+4))^2 r_{k+2} = (259 (2k+2)^4 + 104 (2k+2)^2) r_{k+1}
        - (35 (2k+1)^4 + 42 (2k+1)^2 + 3) r_k + (2k)^4 r_{k-1}."""
    seq = [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))]
    while len(seq) < K + 1:
        k = len(seq) - 2
        lead = Fraction((15 * (2 * k + 2) * (2 * k + 4)) ** 2)
        c1 = Fraction(259 * (2 * k + 2) ** 4 + 104 * (2 * k + 2) ** 2)
        c0 = Fraction(-(35 * (2 * k + 1) ** 4 + 42 * (2 * k + 1) ** 2 + 3))
        cm = Fraction((2 * k) ** 4)
        prev_m1 = seq[k - 1] if k >= 1 else (Fraction(0), Fraction(0))
        nxt = tuple((c1 * seq[k + 1][i] + c0 * seq[k][i] + cm * prev_m1[i]) / lead
                    for i in range(2))
        seq.append(nxt)
    return tuple(seq[:K + 1])


# -- Gamma-quotient constants ---------------------------------------------------

def _gamma_quad_1248() -> float:
    return (gamma(1.0 / 15.0) * gamma(2.0 / 15.0)
            * gamma(4.0 / 15.0) * gamma(8.0 / 15.0))


def _gamma_quad_7111314() -> float:
    return (gamma(7.0 / 15.0) * gamma(11.0 / 15.0)
            * gamma(13.0 / 15.0) * gamma(14.0 / 15.0))


def r50_gamma() -> float:
    """r_{5,0} = sqrt(5)/40 * Gamma(1/15)Gamma(2/15)Gamma(4/15)Gamma(8/15)/pi^4."""
    return math.sqrt(5.0) / 40.0 * _gamma_quad_1248() / math.pi**4


def r50_chowla_selberg() -> float:
    """r_{5,0} = (2 pi^2)^{-1} sqrt(G(1,2,4,8) / (5 G(7,11,13,14)))."""
    return 0.5 / math.pi**2 * math.sqrt(_gamma_quad_1248()
                                        / (5.0 * _gamma_quad_7111314()))


def r51_gamma() -> float:
    """Conjectural: r_{5,1} = 13/(1800 sqrt5) G(1,2,4,8)/pi^4
                              - (1/sqrt5) G(7,11,13,14)/pi^4."""
    s5 = math.sqrt(5.0)
    return (13.0 / (1800.0 * s5) * _gamma_quad_1248() / math.pi**4
            - _gamma_quad_7111314() / (s5 * math.pi**4))


def r51_from_r50() -> float:
    """Conjectural restatement: r_{5,1} = (13/225) r_{5,0} - 2/(5 pi^4 r_{5,0})."""
    r = r50_gamma()
    return 13.0 / 225.0 * r - 2.0 / (5.0 * math.pi**4 * r)


def k15_constant() -> float:
    """K at the 15th singular value, from
    r_{5,0} = (3 sqrt5 / pi^3) ((sqrt5-1)/2) K_15^2."""
    s5 = math.sqrt(5.0)
    return math.sqrt(r50_gamma() * math.pi**3 / (3.0 * s5 * (s5 - 1.0) / 2.0))


def k5_3_constant() -> float:
    """K at the 5/3rd singular value, from
    r_{5,0} = (sqrt15 / pi^3) K_{5/3} K_15."""
    return r50_gamma() * math.pi**3 / (math.sqrt(15.0) * k15_constant())


# -- float tables ----------------------------------------------------------------

S40 = 3.0 / (2.0 * math.pi**2)


@dataclass(frozen=True)
class ResidueTable:
    n: int
    s4: tuple
    r4: tuple
    r5: tuple
    length: int
    r5_seed_conjectural: bool = True


def residues(n: int, K: int) -> ResidueTable:
    """Float residue tables for the four- or five-step walk, K+1 entries."""
    if K > RESIDUE_GUARD_K or K < 0:
        raise GuardExceeded(f"residues guard: 0 <= K <= {RESIDUE_GUARD_K}")
    if n == 4:
        u = s4_ratio_sequence(K)
        rho = r4_ratio_sequence(K)
        log2 = math.log(2.0)
        s4 = tuple(S40 * float(x) for x in u)
        r4 = tuple(S40 * (float(a) + float(b) * log2) for a, b in rho)
        return ResidueTable(4, s4, r4, (), K, False)
    if n == 5:
        seeds = (r50_gamma(), r51_gamma())
        combo = r5_ratio_sequence(K)
        r5 = tuple(float(c0) * seeds[0] + float(c1) * seeds[1] for c0, c1 in combo)
        return ResidueTable(5, (), (), r5, K, True)
    raise GuardExceeded("residues supports n in {4, 5}")
