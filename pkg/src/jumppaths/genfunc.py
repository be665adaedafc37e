"""Path-length generating functions for two-dimensional jump paths.

For a start point (p, q) the polynomial F(x) = sum_k u((p,q),k) x^k packs
the whole length profile: coefficient k is the number of unrestricted
k-jump paths, F(1) is the total path count, and F'(1)/F(1) is the exact
mean length.  Three independent routes to the same coefficients live here:

  * the product form (1+x)^p * sum_k C(q,k) C(p+k,k) x^k,
  * the direct per-coefficient sum,
  * a truncated trivariate series built by iterating its functional
    equation, with the length variable kept symbolic.

The diagonal coefficient polynomials also satisfy Legendre-style
three-term recurrences, implemented over exact integers with a checked
division (the division by the index is always exact when the recurrence
is transcribed correctly).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import GuardError
from .exactmath import ONE_PLUS_X, Polynomial, binom, binomial_row

#: Triangular truncation bound for the trivariate series extraction.
TRIVARIATE_TOTAL_LIMIT = 60


@dataclass(frozen=True)
class GenFunResult:
    """A start point together with its path-length polynomial."""

    p: int
    q: int
    poly: Polynomial


def _check_pq(p: int, q: int) -> None:
    if not isinstance(p, int) or not isinstance(q, int) or p < 0 or q < 0:
        raise ValueError(f"p and q must be non-negative integers: {(p, q)!r}")


def path_length_poly(p: int, q: int) -> GenFunResult:
    """Product form of the length polynomial.

    Stated for p <= q; arguments are swapped otherwise, which is sound
    because the coefficients are symmetric in (p, q) (pinned by tests
    against the direct form and the enumeration oracle).
    """
    _check_pq(p, q)
    lo, hi = (p, q) if p <= q else (q, p)
    core = Polynomial([binom(hi, k) * binom(lo + k, k) for k in range(hi + 1)])
    return GenFunResult(p=p, q=q, poly=binomial_row(lo) * core)


def path_length_poly_direct(p: int, q: int) -> GenFunResult:
    """Length polynomial assembled coefficient by coefficient from the
    unrestricted-count sum (no product shortcut)."""
    from .pathcount import unrestricted_count

    _check_pq(p, q)
    coeffs = [unrestricted_count(p, q, n) for n in range(p + q + 1)]
    return GenFunResult(p=p, q=q, poly=Polynomial(coeffs))


def legendre_coeff_poly(i: int) -> Polynomial:
    """i-th diagonal coefficient polynomial a_i(z) by its three-term
    recurrence

        a_i = ((2i-1)(1+2z) a_{i-1} - (i-1) a_{i-2}) / i,

    a_0 = 1, a_1 = 1+2z.  These are Legendre polynomials evaluated at
    2z+1, hence integer coefficients; the exact division enforces that.
    """
    if i < 0:
        raise ValueError("index must be non-negative")
    one_two_z = Polynomial([1, 2])
    prev2, prev1 = Polynomial([1]), one_two_z
    if i == 0:
        return prev2
    if i == 1:
        return prev1
    for m in range(2, i + 1):
        num = (2 * m - 1) * (one_two_z * prev1) - (m - 1) * prev2
        prev2, prev1 = prev1, num.exact_div(m)
    return prev1


def b_poly(i: int) -> Polynomial:
    """Series coefficient polynomial b_i(z) = (1+z)^i a_i(z), computed by
    its own recurrence

        b_i = ((2i-1)(1+2z)(1+z) b_{i-1} - (1+z)^2 (i-1) b_{i-2}) / i,

    b_0 = 1, b_1 = 1+3z+2z^2."""
    if i < 0:
        raise ValueError("index must be non-negative")
    one_z = ONE_PLUS_X          # 1 + z
    one_two_z = Polynomial([1, 2])
    one_z_sq = one_z * one_z
    prev2, prev1 = Polynomial([1]), Polynomial([1, 3, 2])
    if i == 0:
        return prev2
    if i == 1:
        return prev1
    for m in range(2, i + 1):
        num = (2 * m - 1) * (one_two_z * one_z * prev1) - (m - 1) * (one_z_sq * prev2)
        prev2, prev1 = prev1, num.exact_div(m)
    return prev1


def _series_step(
    series: dict[tuple[int, int], tuple[int, ...]], total_cap: int
) -> dict[tuple[int, int], tuple[int, ...]]:
    """One application of  B -> 1 + (1+z)(x+y-xy)B  under triangular
    truncation of total (x, y)-degree."""
    out: dict[tuple[int, int], list[int]] = {(0, 0): [1]}

    def add(i: int, j: int, zc: tuple[int, ...], sign: int) -> None:
        if i + j > total_cap:
            return
        # multiply by sign*(1+z) while accumulating
        slot = out.setdefault((i, j), [])
        if len(slot) < len(zc) + 1:
            slot.extend([0] * (len(zc) + 1 - len(slot)))
        for k, c in enumerate(zc):
            slot[k] += sign * c
            slot[k + 1] += sign * c
    for (i, j), zc in series.items():
        add(i + 1, j, zc, 1)       # x * B
        add(i, j + 1, zc, 1)       # y * B
        add(i + 1, j + 1, zc, -1)  # -xy * B
    trimmed: dict[tuple[int, int], tuple[int, ...]] = {}
    for key, coeffs in out.items():
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if coeffs:
            trimmed[key] = tuple(coeffs)
    return trimmed


@lru_cache(maxsize=None)
def _trivariate_series(total_cap: int) -> dict[tuple[int, int], tuple[int, ...]]:
    """Fixed point of the truncated functional-equation iteration.

    Each pass settles one more layer of total (x, y)-degree, so the
    iteration stabilizes after at most total_cap + 2 passes.
    """
    series: dict[tuple[int, int], tuple[int, ...]] = {}
    for _ in range(total_cap + 2):
        nxt = _series_step(series, total_cap)
        if nxt == series:
            return series
        series = nxt
    raise AssertionError("trivariate iteration failed to stabilize")


def trivariate_coeff(p: int, q: int, n: int) -> int:
    """Coefficient of x^p y^q z^n in the trivariate path series."""
    _check_pq(p, q)
    if n < 0:
        raise ValueError("n must be non-negative")
    if p + q > TRIVARIATE_TOTAL_LIMIT:
        raise GuardError(
            f"trivariate guard: p+q = {p + q} exceeds {TRIVARIATE_TOTAL_LIMIT}"
        )
    zc = _trivariate_series(p + q).get((p, q), ())
    return zc[n] if n < len(zc) else 0
