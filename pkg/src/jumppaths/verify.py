"""Cross-module self-verification suite.

Every identity the package relies on, checked at a configurable desk
scale.  Each check appends one human-readable line per discrepancy; an
empty result means the suite passed.  The CLI `verify` subcommand drives
this and turns a non-empty result into exit code 1.
"""

from __future__ import annotations

import math
from fractions import Fraction

from . import bruteforce, cltlab, genfunc, pathcount, zeckseq
from .exactmath import Polynomial, binom, binomial_row


def check_count_identities(limit: int) -> list[str]:
    """Shift identity, recurrence route, symmetry, and the two restricted
    forms, for all p, q <= limit and every relevant length."""
    bad = []
    for p in range(limit + 1):
        for q in range(limit + 1):
            top = p + q + 1
            g = [pathcount.restricted_count((p, q), n) for n in range(top + 2)]
            g2 = [pathcount.restricted_count_2d(p, q, n) for n in range(top + 2)]
            if g != g2:
                bad.append(f"restricted closed forms disagree at ({p},{q})")
            for n in range(top + 1):
                u = pathcount.unrestricted_count(p, q, n)
                if u != g[n] + g[n + 1]:
                    bad.append(f"shift identity fails at ({p},{q}), n={n}")
                if u != pathcount.unrestricted_count_by_recurrence(p, q, n):
                    bad.append(f"recurrence route fails at ({p},{q}), n={n}")
                if u != pathcount.unrestricted_count(q, p, n):
                    bad.append(f"u symmetry fails at ({p},{q}), n={n}")
                if u < 0 or (n > p + q and u != 0):
                    bad.append(f"u support violated at ({p},{q}), n={n}")
    return bad


def check_stationary_resummation(limit: int) -> list[str]:
    """Inclusion-exclusion over stationary counts re-summed directly,
    in dimensions 1..3 (skipping the all-zero origin, where the relaxed
    count degenerates)."""
    bad = []
    points = [(m,) for m in range(1, limit + 1)]
    points += [(a, b) for a in range(limit + 1) for b in range(limit + 1)]
    points += [(a, b, c) for a in range(3) for b in range(3) for c in range(3)]
    for pt in points:
        if max(pt) == 0:
            continue
        for n in range(1, sum(pt) + 2):
            direct = sum(
                (-1) ** k * binom(n, k) * pathcount.relaxed_count(pt, n - k)
                for k in range(n)
            )
            if direct != pathcount.restricted_count(pt, n):
                bad.append(f"stationary resummation fails at {pt}, n={n}")
    return bad


def check_totals(limit: int) -> list[str]:
    bad = []
    for p in range(limit + 1):
        for q in range(limit + 1):
            total = pathcount.total_paths((p, q))
            by_sum = sum(
                pathcount.unrestricted_count(p, q, n) for n in range(p + q + 1)
            )
            if total != by_sum:
                bad.append(f"total != sum of lengths at ({p},{q})")
            gf = genfunc.path_length_poly(p, q).poly.evaluate(1)
            if total != gf:
                bad.append(f"total != F(1) at ({p},{q})")
    return bad


def check_alternating_identity(limit: int) -> list[str]:
    bad = []
    for m in range(limit + 1):
        for n in range(limit + 1):
            for k in range(limit + 1):
                lhs, rhs = pathcount.alternating_binomial_identity(m, n, k)
                if lhs != rhs:
                    bad.append(f"alternating identity fails at m={m}, n={n}, k={k}")
    return bad


def check_genfunc(limit: int) -> list[str]:
    """Product form vs direct form, diagonal Legendre identity, and the
    two coefficient recurrences."""
    bad = []
    for p in range(limit + 1):
        for q in range(limit + 1):
            if genfunc.path_length_poly(p, q).poly != genfunc.path_length_poly_direct(p, q).poly:
                bad.append(f"genfunc product vs direct mismatch at ({p},{q})")
    one_z = Polynomial([1, 1])
    pow_one_z = Polynomial([1])
    for i in range(limit + 1):
        a_i = genfunc.legendre_coeff_poly(i)
        closed = Polynomial([binom(i, k) * binom(i + k, k) for k in range(i + 1)])
        if a_i != closed:
            bad.append(f"diagonal coefficient recurrence vs closed sum at i={i}")
        if genfunc.b_poly(i) != pow_one_z * a_i:
            bad.append(f"b_i != (1+z)^i a_i at i={i}")
        if genfunc.path_length_poly(i, i).poly != binomial_row(i) * a_i:
            bad.append(f"diagonal factorization fails at n={i}")
        pow_one_z = pow_one_z * one_z
    return bad


def check_trivariate(total_limit: int) -> list[str]:
    bad = []
    for p in range(total_limit + 1):
        for q in range(total_limit + 1 - p):
            for n in range(p + q + 2):
                if genfunc.trivariate_coeff(p, q, n) != pathcount.unrestricted_count(p, q, n):
                    bad.append(f"trivariate coefficient mismatch at ({p},{q}), n={n}")
    return bad


def check_enumeration(limit: int) -> list[str]:
    """Brute-force enumeration against every closed form, plus structural
    validity and the first-jump partition."""
    bad = []
    cap = min(limit, 5)
    for p in range(cap + 1):
        for q in range(cap + 1):
            hist = bruteforce.length_histogram((p, q))
            poly = genfunc.path_length_poly(p, q).poly
            restricted = bruteforce.enumerate_restricted((p, q))
            by_len: dict[int, int] = {}
            for path in restricted:
                by_len[len(path) - 1] = by_len.get(len(path) - 1, 0) + 1
            for n in range(p + q + 2):
                u = pathcount.unrestricted_count(p, q, n)
                if hist.get(n, 0) != u:
                    bad.append(f"enumeration vs u at ({p},{q}), n={n}")
                if hist.get(n, 0) != poly.coefficient(n):
                    bad.append(f"enumeration vs genfunc at ({p},{q}), n={n}")
                if by_len.get(n, 0) != pathcount.restricted_count_2d(p, q, n):
                    bad.append(f"enumeration vs g at ({p},{q}), n={n}")
            for path in bruteforce.enumerate_unrestricted((p, q)):
                if not bruteforce.is_valid_jump_path(path):
                    bad.append(f"invalid enumerated path {path}")
    for a in range(3):
        for b in range(3):
            for c in range(3):
                count = len(bruteforce.enumerate_restricted((a, b, c)))
                expected = sum(
                    pathcount.restricted_count((a, b, c), n)
                    for n in range(a + b + c + 1)
                )
                if count != expected:
                    bad.append(f"3-d enumeration vs g at ({a},{b},{c})")
    for p in range(1, min(limit, 4) + 1):
        for q in range(1, min(limit, 4) + 1):
            for n in range(1, p + q + 1):
                tally = bruteforce.directional_counts(p, q, n)
                if tally.total() != pathcount.unrestricted_count(p, q, n):
                    bad.append(f"first-jump partition fails at ({p},{q}), n={n}")
    return bad


def check_sequence(diagonals: int) -> list[str]:
    bad = []
    grid = zeckseq.build_sequence(diagonals)
    if grid.values != zeckseq.build_sequence(diagonals).values:
        bad.append("sequence construction is not deterministic")
    vals = [grid.values[pt] for pt in grid.placement_order]
    if any(b <= a for a, b in zip(vals, vals[1:])):
        bad.append("sequence values not strictly increasing along placement")
    top = grid.max_value()
    reachable = zeckseq.representable_set(grid, top)
    missing = [t for t in range(1, top + 1) if t not in reachable]
    if missing:
        bad.append(f"mex construction left gaps below {top}: {missing[:5]}")
    if diagonals >= 9:
        two = zeckseq.decompositions(25, grid)
        if len(two) < 2:
            bad.append("expected the known non-unique total to have >= 2 chains")
        for dec in two:
            chain = list(dec.points)
            for a, b in zip(chain, chain[1:]):
                if not (b[0] < a[0] and b[1] < a[1]):
                    bad.append(f"chain not strictly dominance-decreasing: {chain}")
            if sum(grid.values[pt] for pt in chain) != dec.total:
                bad.append(f"chain total mismatch: {chain}")
    return bad


def check_distributions(limit: int) -> list[str]:
    bad = []
    for p in range(limit + 1):
        for q in range(limit + 1):
            summary = cltlab.exact_distribution(p, q)
            if sum(summary.probs, Fraction(0)) != 1:
                bad.append(f"probabilities do not sum to 1 at ({p},{q})")
            if summary.var_exact < 0:
                bad.append(f"negative variance at ({p},{q})")
            law_a, law_b = cltlab.component_distributions(p, q)
            if cltlab.convolve(law_a, law_b) != summary.probs:
                bad.append(f"component convolution mismatch at ({p},{q})")
            mean_a = sum((k * w for k, w in enumerate(law_a)), Fraction(0))
            mean_b = sum((k * w for k, w in enumerate(law_b)), Fraction(0))
            if mean_a + mean_b != summary.mean_exact:
                bad.append(f"component mean additivity fails at ({p},{q})")
            var_a = sum((k * k * w for k, w in enumerate(law_a)), Fraction(0)) - mean_a**2
            var_b = sum((k * k * w for k, w in enumerate(law_b)), Fraction(0)) - mean_b**2
            if var_a + var_b != summary.var_exact:
                bad.append(f"component variance additivity fails at ({p},{q})")
    for c in (1, 1.25, 1.5, 2, 3, 5, 10):
        s = math.sqrt(c * c + 6 * c + 1)
        residual = 2 * cltlab.chi_param(c) * ((c - 1) / 8 + (c + 1) ** 2 / (8 * s)) - 1
        if abs(residual) >= 1e-12:
            bad.append(f"curvature/variance consistency off at c={c}: {residual}")
    return bad


def run_all(max_pq: int = 12) -> list[str]:
    """Run the whole suite at scale ``max_pq``; returns failure lines."""
    if max_pq < 1:
        raise ValueError("max_pq must be positive")
    failures: list[str] = []
    failures += check_count_identities(max_pq)
    failures += check_stationary_resummation(min(max_pq, 6))
    failures += check_totals(max_pq)
    failures += check_alternating_identity(min(max_pq, 12))
    failures += check_genfunc(max_pq)
    failures += check_trivariate(min(max_pq, 12))
    failures += check_enumeration(max_pq)
    failures += check_sequence(min(max_pq, 12))
    failures += check_distributions(min(max_pq, 10))
    return failures
