"""Exact path-length distributions and their Gaussian-limit diagnostics.

The length K of a uniformly random unrestricted path from (p, q) has
probability mass u((p,q),k) / S((p,q)), which this module keeps as exact
rationals.  K splits as an independent sum A + B with

    P(A = k) proportional to C(p, k),
    P(B = k) proportional to C(q, k) C(p+k, k),

so the binomial part A is classical and all the work sits in B.  Along a
ray q = c*p the distribution centers at a(c)*n with curvature chi(c) in
standardized units t = (k - a*n)/sqrt(n):

    a(c)   = (c - 1 + sqrt(c^2+6c+1)) / 4
    chi(c) = (2c^2 + 10c^3 - 10c^4 - 2c^5
              + (2c^2 + 4c^3 + 2c^4) sqrt(1 + c(6+c))) / (8 c^4)

and the limit law is Gaussian with mean (p+q+sqrt(p^2+6pq+q^2))/4 and
variance (p+q)/8 + (p+q)^2/(8 sqrt(p^2+6pq+q^2)).  Moments are computed as
exact rationals before any float conversion; floats only appear in the
asymptotic formulas, the normal CDF, and final reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import GuardError
from .exactmath import binom
from .genfunc import path_length_poly

#: Exact-mode sweep guard; beyond this the polynomials get silly.
PAIR_SUM_LIMIT = 2000


@dataclass(frozen=True)
class AsympParams:
    """Ray parameters: slope c, center coefficient a, curvature chi."""

    c: float
    a: float
    chi: float


@dataclass
class DistSummary:
    """One start point's exact length law plus derived diagnostics.

    ``probs[k]`` is the exact probability of a k-jump path.  The asymptotic
    fields are None at the origin, where the formulas degenerate; KS and
    tail mass are filled by the sweep driver.
    """

    p: int
    q: int
    probs: list[Fraction]
    mean_exact: Fraction
    var_exact: Fraction
    mean_asymp: float | None = None
    var_asymp: float | None = None
    ks_distance: float | None = None
    tail_mass: float | None = None


def asymp_mean(p: int, q: int) -> float:
    """(q + p + sqrt(p^2 + 6pq + q^2)) / 4."""
    if (p, q) == (0, 0):
        raise ValueError("asymptotic formulas degenerate at the origin")
    return (q + p + math.sqrt(p * p + 6 * p * q + q * q)) / 4


def asymp_var(p: int, q: int) -> float:
    """(p+q)/8 + (p+q)^2 / (8 sqrt(p^2 + 6pq + q^2))."""
    if (p, q) == (0, 0):
        raise ValueError("asymptotic formulas degenerate at the origin")
    root = math.sqrt(p * p + 6 * p * q + q * q)
    return (p + q) / 8 + (p + q) ** 2 / (8 * root)


def a_param(c: float) -> float:
    """Center coefficient a(c) for the ray q = c*p."""
    if c < 1:
        raise ValueError("ray slope must satisfy c >= 1")
    return (c - 1 + math.sqrt(c * c + 6 * c + 1)) / 4


def chi_param(c: float) -> float:
    """Curvature chi(c) of the standardized log-mass."""
    if c < 1:
        raise ValueError("ray slope must satisfy c >= 1")
    s = math.sqrt(1 + c * (6 + c))
    num = (
        2 * c**2 + 10 * c**3 - 10 * c**4 - 2 * c**5
        + (2 * c**2 + 4 * c**3 + 2 * c**4) * s
    )
    return num / (8 * c**4)


def asymp_params(c: float) -> AsympParams:
    return AsympParams(c=c, a=a_param(c), chi=chi_param(c))


def _check_pair(p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise ValueError("p and q must be non-negative")
    if p + q > PAIR_SUM_LIMIT:
        raise GuardError(
            f"distribution guard: p+q = {p + q} exceeds {PAIR_SUM_LIMIT}"
        )


def exact_distribution(p: int, q: int) -> DistSummary:
    """Exact length law of a uniform unrestricted path from (p, q).

    Mean and variance come from the factorial moments F'(1)/F(1) and
    F''(1)/F(1) of the length polynomial, evaluated over the integers.
    """
    _check_pair(p, q)
    poly = path_length_poly(p, q).poly
    total = poly.evaluate(1)
    probs = [Fraction(c, total) for c in poly.coefficients]
    mean = Fraction(poly.derivative().evaluate(1), total)
    m2fact = Fraction(poly.derivative().derivative().evaluate(1), total)
    var = m2fact + mean - mean * mean
    summary = DistSummary(p=p, q=q, probs=probs, mean_exact=mean, var_exact=var)
    if (p, q) != (0, 0):
        summary.mean_asymp = asymp_mean(p, q)
        summary.var_asymp = asymp_var(p, q)
    return summary


def _b_weights(p: int, q: int) -> list[int]:
    return [binom(q, k) * binom(p + k, k) for k in range(q + 1)]


def component_distributions(p: int, q: int) -> tuple[list[Fraction], list[Fraction]]:
    """Normalized laws of the binomial part A and the remainder B.

    Their convolution reproduces exact_distribution(p, q).probs exactly.
    """
    _check_pair(p, q)
    a_weights = [binom(p, k) for k in range(p + 1)]
    b_weights = _b_weights(p, q)
    a_total = sum(a_weights)
    b_total = sum(b_weights)
    law_a = [Fraction(w, a_total) for w in a_weights]
    law_b = [Fraction(w, b_total) for w in b_weights]
    return law_a, law_b


def convolve(law_a: list[Fraction], law_b: list[Fraction]) -> list[Fraction]:
    """Exact convolution of two finite laws."""
    out = [Fraction(0)] * (len(law_a) + len(law_b) - 1)
    for i, a in enumerate(law_a):
        if a:
            for j, b in enumerate(law_b):
                out[i + j] += a * b
    return out


def ratio_expansion_check(p: int, q: int, k: int) -> tuple[float, float]:
    """Successive-mass ratio of the B law against its first-order expansion.

    Returns (P(B=k+1)/P(B=k), 1 - c'*t/sqrt(n)) with t = (k - a*n)/sqrt(n),
    n = p, and c' the linear coefficient of the expansion on the ray
    c = q/p.  The exact ratio is strictly decreasing in k over the support.
    """
    if p < 1:
        raise ValueError("need p >= 1")
    if k < 1 or k > q:
        raise ValueError(f"k = {k} outside the ratio support 1..{q}")
    w_k = binom(q, k) * binom(p + k, k)
    w_k1 = binom(q, k + 1) * binom(p + k + 1, k + 1)
    exact = float(Fraction(w_k1, w_k))
    c = q / p
    n = p
    s = math.sqrt(c * c + 6 * c + 1)
    c_prime = 8 * s / ((1 + c) ** 2 + (c - 1) * s)
    t = (k - a_param(c) * n) / math.sqrt(n)
    first_order = 1 - c_prime * t / math.sqrt(n)
    return exact, first_order


def tail_mass(p: int, q: int, exponent: float) -> float:
    """P(|K - a*n| > n^(0.5+exponent)) for K distributed as the B law.

    The band boundary is located in floating point; the masses summed are
    exact rationals converted only at the end.
    """
    if p < 1 or q < p:
        raise ValueError("tail mass is defined on rays q = c*p with c >= 1")
    _check_pair(p, q)
    n = p
    c = q / p
    center = a_param(c) * n
    threshold = n ** (0.5 + exponent)
    weights = _b_weights(p, q)
    total = sum(weights)
    outside = sum(w for k, w in enumerate(weights) if abs(k - center) > threshold)
    return float(Fraction(outside, total))


def _log_ratio(num: int, den: int) -> float:
    # Fraction -> float survives magnitudes where float(int) overflows.
    return math.log(float(Fraction(num, den)))


def curvature_check(n: int, c: float) -> tuple[float, float]:
    """Measured versus predicted curvature of the log-weights at the center.

    numeric  = -(n/2) * second central difference of log w at k0,
    predicted = chi(c),
    where w(k) = C(q,k) C(p+k,k), p = n, q = c*n, k0 = round(a*n).
    """
    if n < 20:
        raise ValueError("curvature check needs n >= 20")
    if c < 1:
        raise ValueError("ray slope must satisfy c >= 1")
    q = _integral_q(n, c)
    k0 = round(a_param(c) * n)
    if k0 - 1 < 0 or k0 + 1 > q:
        raise ValueError(f"k0 = {k0} too close to the support boundary 0..{q}")
    w = lambda k: binom(q, k) * binom(n + k, k)
    second = _log_ratio(w(k0 + 1) * w(k0 - 1), w(k0) ** 2)
    return -(n / 2) * second, chi_param(c)


def log_weight_first_difference(n: int, c: float, offset: float = 1.0) -> float:
    """Central first difference of log w at k = round(a*n + offset*sqrt(n)).

    At a fixed standardized offset this decays like 1/sqrt(n); a surviving
    constant term would mean the log-mass carries a linear t*sqrt(n) piece,
    which it does not.  (At offset 0 the difference is dominated by the
    rounding of a*n and decays faster but noisily.)
    """
    if n < 20:
        raise ValueError("difference check needs n >= 20")
    q = _integral_q(n, c)
    k = round(a_param(c) * n + offset * math.sqrt(n))
    if k - 1 < 0 or k + 1 > q:
        raise ValueError(f"k = {k} too close to the support boundary 0..{q}")
    w = lambda kk: binom(q, kk) * binom(n + kk, kk)
    return 0.5 * _log_ratio(w(k + 1), w(k - 1))


def ks_distance(p: int, q: int) -> float:
    """Sup gap between the exact length CDF and the fitted normal CDF.

    The comparison runs at half-integer breakpoints k + 1/2 (continuity
    correction) and standardizes by the exact moments, so it isolates
    shape error from moment error.
    """
    summary = exact_distribution(p, q)
    if summary.var_exact == 0:
        raise ValueError("KS distance undefined for a degenerate distribution")
    mu = float(summary.mean_exact)
    sigma = math.sqrt(float(summary.var_exact))
    worst = 0.0
    cum = Fraction(0)
    for k, mass in enumerate(summary.probs):
        cum += mass
        z = (k + 0.5 - mu) / sigma
        gauss = 0.5 * (1.0 + math.erf(z / math.sqrt(2.0)))
        worst = max(worst, abs(float(cum) - gauss))
    return worst


def _integral_q(n: int, c: float) -> int:
    q = c * n
    q_int = round(q)
    if abs(q - q_int) > 1e-9:
        raise ValueError(f"c*n = {q} is not an integer (c = {c}, n = {n})")
    return q_int


def convergence_report(
    c: float, n_list: list[int], tail_exponent: float = 0.1
) -> list[DistSummary]:
    """One fully filled DistSummary per n along the ray q = c*n.

    Rows come back ordered by n regardless of input order.
    """
    rows: list[DistSummary] = []
    for n in sorted(n_list):
        if n < 1:
            raise ValueError("sweep sizes must be positive")
        q = _integral_q(n, c)
        summary = exact_distribution(n, q)
        summary.ks_distance = ks_distance(n, q)
        summary.tail_mass = tail_mass(n, q, tail_exponent)
        rows.append(summary)
    return rows
