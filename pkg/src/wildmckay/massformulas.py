"""Symbolic mass formulas for local fields.

Serre's mass formula: totally ramified degree-n extensions of a local field
with residue cardinality q have total mass q^(1-n) (mass = q^(-d) / #Aut).
Bhargava's mass formula: degree-n etale algebras have total mass
sum_{i=0}^{n-1} P(n, n-i) q^(-i).

The two are linked by an exponential identity.  Writing N(K_f, m) for the
totally ramified mass over the unramified extension K_f (with q replaced by
q^f) and M(K, n) for the etale-algebra mass,

    sum_n M(K, n) x^n = exp( sum_n x^n sum_{f|n} N(K_f, n/f) / f ).

Note the inner sum enters with weight 1: an etale algebra is a multiset of
fields, each field of degree n = e*f contributes x^n q^(-d) / #Aut, and
collecting fields by residue degree gives exactly N(K_f, n/f)/f.  A variant
with an extra 1/n factor on x^n is seen in print, but it is inconsistent:
it would give 3/4 + q^(-1)/2 as the degree-2 coefficient instead of the
quadratic mass 1 + q^(-1).  Tests pin the corrected form against the
independently enumerated algebra masses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .numutil import divisors
from .partitions import partition_count
from .qexpr import QExpr, QFrac
from .series import DEFAULT_TRUNCATION, TruncatedSeries

__all__ = [
    "serre_mass",
    "bhargava_mass",
    "mass_series_via_exp",
    "recover_N_from_M",
    "recover_N_assuming_serre_tail",
    "MassTable",
]


def serre_mass(n: int, f: int = 1) -> QExpr:
    """Totally ramified mass q_f^(1-n) over the unramified extension of
    degree f, i.e. q^(f(1-n))."""
    if n < 1 or f < 1:
        raise ValueError("need n >= 1 and f >= 1")
    return QExpr.q(f * (1 - n))


def bhargava_mass(n: int) -> QExpr:
    """Etale-algebra mass sum_{i=0}^{n-1} P(n, n-i) q^(-i)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return QExpr({-i: partition_count(n, n - i) for i in range(n)})


def _inner_exponent_series(n_max: int, N: Callable[[int, int], object]) -> TruncatedSeries:
    """sum_{n>=1} x^n sum_{f|n} N(f, n/f) / f, truncated at n_max."""
    coeffs: list[QFrac] = [QFrac(0)]
    for n in range(1, n_max + 1):
        total = QFrac(0)
        for f in divisors(n):
            total = total + QFrac(N(f, n // f)) * Fraction(1, f)
        coeffs.append(total)
    return TruncatedSeries(coeffs)


def mass_series_via_exp(n_max: int = DEFAULT_TRUNCATION, N: Callable[[int, int], object] | None = None) -> TruncatedSeries:
    """Generating series sum_n M(K, n) x^n via the exponential identity.

    N(f, m) defaults to Serre's totally ramified mass over K_f; passing a
    different mapping rebuilds the series from recovered or external masses.
    """
    if n_max < 1:
        raise ValueError("need n_max >= 1")
    if N is None:
        N = serre_mass_over_unramified
    return _inner_exponent_series(n_max, N).exp()


def serre_mass_over_unramified(f: int, m: int) -> QExpr:
    return serre_mass(m, f)


def recover_N_from_M(M_series: TruncatedSeries) -> dict[tuple[int, int], QFrac]:
    """Solve the exponential identity for the totally ramified masses.

    The mass series over K_f is the input series with q replaced by q^f.
    Taking logarithms, S(f)_m = sum_{j|m} N(f*j, m/j) / j, which is
    triangular in m: N(f, m) = S(f)_m - sum_{j|m, j>1} N(f*j, m/j) / j.
    Returns N on all pairs with f * m <= truncation degree.
    """
    n_max = M_series.truncation
    logs: dict[int, TruncatedSeries] = {}
    for f in range(1, n_max + 1):
        substituted = TruncatedSeries(
            [c.scale_exponents(f) for c in M_series.coefficients[: n_max // f + 1]]
        )
        logs[f] = substituted.log()
    N: dict[tuple[int, int], QFrac] = {}
    for m in range(1, n_max + 1):
        for f in range(1, n_max // m + 1):
            value = logs[f].coefficient(m)
            for j in divisors(m):
                if j > 1:
                    value = value - N[(f * j, m // j)] * Fraction(1, j)
            N[(f, m)] = value
    return N


def recover_N_assuming_serre_tail(M_series: TruncatedSeries) -> dict[int, QFrac]:
    """Consistency mode: plug Serre's values for every f > 1 and solve only
    for the base-field masses N(K, n) = S_n - sum_{f|n, f>1} q^(f-n) / f."""
    S = M_series.log()
    out: dict[int, QFrac] = {}
    for n in range(1, M_series.truncation + 1):
        value = S.coefficient(n)
        for f in divisors(n):
            if f > 1:
                value = value - QFrac(serre_mass(n // f, f)) * Fraction(1, f)
        out[n] = value
    return out


@dataclass(frozen=True)
class MassTable:
    """Bundled masses up to degree n_max: M(K, n) and N(K_f, m)."""

    n_max: int
    M: tuple[QFrac, ...]
    N: dict[tuple[int, int], QFrac]

    @staticmethod
    def build(n_max: int = DEFAULT_TRUNCATION) -> "MassTable":
        series = mass_series_via_exp(n_max)
        return MassTable(n_max=n_max, M=series.coefficients, N=recover_N_from_M(series))
