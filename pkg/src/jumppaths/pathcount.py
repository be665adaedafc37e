"""Exact jump-path counts on lattices of any dimension.

A jump step moves from one lattice point to another that is weakly smaller
in every coordinate and differs in at least one.  Paths that must end at
the origin are "restricted"; paths with a free endpoint are "unrestricted".
The relaxed count additionally allows stationary repeats, which is what
makes the stars-and-bars product work; inclusion-exclusion then removes
the repeats.

All functions return exact non-negative ints (the alternating-identity
helper may return a signed intermediate on its left side).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import product

from .errors import GuardError
from .exactmath import binom

Point = tuple[int, ...]

#: totalPaths builds a memo over the whole dominated box; refuse absurd ones.
BOX_CELL_LIMIT = 10**8


def _as_point(p) -> Point:
    pt = tuple(p)
    if not pt:
        raise ValueError("lattice point needs at least one coordinate")
    if any(not isinstance(x, int) or x < 0 for x in pt):
        raise ValueError(f"coordinates must be non-negative integers: {pt!r}")
    return pt


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"path length must be a non-negative integer: {n!r}")


def relaxed_count(p, n: int) -> int:
    """Weakly decreasing length-n point sequences from p to the origin,
    stationary repeats allowed: prod_i C(p_i + n - 1, p_i)."""
    pt = _as_point(p)
    _check_n(n)
    out = 1
    for x in pt:
        out *= binom(x + n - 1, x)
    return out


def at_least_k_stationary(p, n: int, k: int) -> int:
    """Relaxed paths carrying at least k stationary repeats:
    C(n, k) * relaxed_count(p, n - k)."""
    _check_n(n)
    if not isinstance(k, int) or k < 0 or k > n:
        raise ValueError(f"need 0 <= k <= n, got k={k!r}, n={n}")
    return binom(n, k) * relaxed_count(p, n - k)


def restricted_count(p, n: int) -> int:
    """Exactly-n-jump paths from p ending at the origin, any dimension.

    Inclusion-exclusion over stationary repeats:
        sum_i (-1)^i C(n, i) prod_k C((p_k - 1) + n - i, (n - 1) - i).
    The empty path at the origin counts once (base case n = 0).
    """
    pt = _as_point(p)
    _check_n(n)
    if all(x == 0 for x in pt):
        # no jump leaves the origin; the inclusion-exclusion sum degenerates here
        return 1 if n == 0 else 0
    if n == 0:
        return 0
    total = 0
    for i in range(n + 1):
        term = binom(n, i)
        if not term:
            continue
        for x in pt:
            term *= binom(x - 1 + n - i, n - 1 - i)
            if not term:
                break
        total += -term if i & 1 else term
    return total


def restricted_count_2d(p: int, q: int, n: int) -> int:
    """Two-dimensional closed form for restricted_count((p, q), n):
        sum_{i=0}^{n-1} C(p-1, i) C(p-1+n-i, p) C(q, n-i-1).

    An axis point (p or q zero) collapses to the one-dimensional chain
    count C(m-1, n-1); the sum as written needs signed upper-index
    binomials there, so the reduction is applied instead.
    """
    pt = _as_point((p, q))
    _check_n(n)
    if n == 0:
        return 1 if pt == (0, 0) else 0
    if p == 0 or q == 0:
        m = p + q  # at most one coordinate is nonzero
        return binom(m - 1, n - 1)
    return sum(
        binom(p - 1, i) * binom(p - 1 + n - i, p) * binom(q, n - i - 1)
        for i in range(n)
    )


def unrestricted_count(p: int, q: int, n: int) -> int:
    """n-jump weakly decreasing, never-stationary paths from (p, q), free
    endpoint: sum_i C(p, i) C(p+n-i, p) C(q, n-i)."""
    _as_point((p, q))
    _check_n(n)
    return sum(
        binom(p, i) * binom(p + n - i, p) * binom(q, n - i)
        for i in range(n + 1)
    )


@cache
def _u_rec(p: int, q: int, n: int) -> int:
    if n == 0:
        return 1
    if p == 0:
        return binom(q, n)
    if q == 0:
        return binom(p, n)
    return (
        _u_rec(p, q - 1, n)
        + _u_rec(p, q - 1, n - 1)
        + _u_rec(p - 1, q, n)
        + _u_rec(p - 1, q, n - 1)
        - _u_rec(p - 1, q - 1, n)
        - _u_rec(p - 1, q - 1, n - 1)
    )


def unrestricted_count_by_recurrence(p: int, q: int, n: int) -> int:
    """Same count as unrestricted_count, via the six-term two-dimensional
    recurrence with base cases u((0,q),n)=C(q,n), u((p,0),n)=C(p,n) and
    u(.,0)=1.  Values are memoized across calls."""
    _as_point((p, q))
    _check_n(n)
    return _u_rec(p, q, n)


def total_paths(p) -> int:
    """Total unrestricted paths of all lengths from p, any dimension.

    Satisfies S(p) = 1 + sum of S(a) over all a != p in the dominated box;
    computed by a prefix-sum sweep over that box, so memory is one big-int
    per box cell.
    """
    pt = _as_point(p)
    d = len(pt)
    cells = 1
    for x in pt:
        cells *= x + 1
    if cells > BOX_CELL_LIMIT:
        raise GuardError(
            f"totalPaths box guard: {cells} cells exceeds limit {BOX_CELL_LIMIT}"
        )
    # axis subsets for the inclusion-exclusion prefix lookup
    subsets = []
    for mask in range(1, 1 << d):
        axes = [j for j in range(d) if mask >> j & 1]
        subsets.append((axes, -1 if len(axes) % 2 == 0 else 1))
    prefix: dict[Point, int] = {}
    s_here = 1
    for a in product(*(range(x + 1) for x in pt)):
        below = 0
        for axes, sign in subsets:
            b = list(a)
            for j in axes:
                b[j] -= 1
            if min(b) >= 0:
                below += sign * prefix[tuple(b)]
        s_here = 1 + below
        prefix[a] = s_here + below
    return s_here


def alternating_binomial_identity(m: int, n: int, k: int) -> tuple[int, int]:
    """Both sides of  sum_i (-1)^i C(n,i) C(m+n-i, k-i)  =  C(m, k).

    Returns (alternating sum, closed form); equality is the point.
    """
    if m < 0 or n < 0:
        raise ValueError("m and n must be non-negative")
    lhs = 0
    for i in range(n + 1):
        term = binom(n, i) * binom(m + n - i, k - i)
        lhs += -term if i & 1 else term
    return lhs, binom(m, k)


@dataclass(frozen=True)
class CountTable:
    """Counts by path length for one starting point.

    Lengths above the coordinate sum are omitted: each jump drops the
    coordinate sum by at least one, so those counts are zero.
    """

    origin: Point
    counts: dict[int, int]

    def total(self) -> int:
        return sum(self.counts.values())


def count_table(p, restricted: bool = True) -> CountTable:
    """Tabulate restricted or unrestricted counts for n = 0 .. sum(p).

    Unrestricted counts in any dimension come from the shift identity
    u(v, n) = g(v, n) + g(v, n + 1).
    """
    pt = _as_point(p)
    top = sum(pt)
    if restricted:
        counts = {n: restricted_count(pt, n) for n in range(top + 1)}
    else:
        g = [restricted_count(pt, n) for n in range(top + 2)]
        counts = {n: g[n] + g[n + 1] for n in range(top + 1)}
    return CountTable(origin=pt, counts=counts)
