"""The two-dimensional mex-built decomposition sequence.

Anti-diagonals x + y = 0, 1, 2, ... are filled in order; inside a diagonal
the points run from the x-axis up-left (decreasing x).  Each point receives
the smallest positive integer that cannot yet be written as the total of a
legal decomposition, where a legal decomposition is a chain of already
placed points that strictly decreases in both coordinates step by step,
summed over its values.  Single points count as chains of length one.

Chain totals are tracked as bitmasks (bit t set means total t is
reachable), so the union over points and the mex scan stay cheap at desk
scale.  Values grow roughly geometrically along the diagonals, which is
why the construction is capped.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardError

Point2 = tuple[int, int]

#: Value growth makes deeper grids explode; 9 diagonals is the printed
#: reference table, ~20 stays comfortable, 40 is the hard cap.
DIAGONAL_LIMIT = 40


class InsufficientGridError(ValueError):
    """The requested total exceeds what the grid can possibly represent."""


@dataclass(frozen=True)
class SeqGrid:
    """A filled triangular grid of sequence values.

    ``values`` maps each lattice point to its placed value and
    ``placement_order`` records the fill order (one diagonal at a time,
    decreasing x inside each diagonal).
    """

    diagonals: int
    values: dict[Point2, int]
    placement_order: tuple[Point2, ...]

    def value_at(self, x: int, y: int) -> int:
        return self.values[(x, y)]

    def max_value(self) -> int:
        return max(self.values.values(), default=0)


@dataclass(frozen=True)
class Decomposition:
    """A legal decomposition: a strictly dominance-decreasing chain of grid
    points whose values sum to ``total``."""

    points: tuple[Point2, ...]
    total: int


def build_sequence(diagonals: int) -> SeqGrid:
    """Fill the first ``diagonals`` anti-diagonals by the mex rule.

    Deterministic: rebuilding gives a bit-identical grid.
    """
    if not isinstance(diagonals, int) or diagonals < 0:
        raise ValueError(f"diagonals must be a non-negative integer: {diagonals!r}")
    if diagonals > DIAGONAL_LIMIT:
        raise GuardError(
            f"sequence guard: {diagonals} diagonals exceeds {DIAGONAL_LIMIT}"
        )
    values: dict[Point2, int] = {}
    order: list[Point2] = []
    masks: dict[Point2, int] = {}
    reachable = 0  # union of all chain-total masks
    prev = 0
    for s in range(diagonals):
        for x in range(s, -1, -1):
            y = s - x
            # placed values increase strictly, so the scan resumes at prev+1
            v = prev + 1
            while reachable >> v & 1:
                v += 1
            dom = 0
            for (qx, qy), m in masks.items():
                if qx < x and qy < y:
                    dom |= m
            mask = (dom | 1) << v
            masks[(x, y)] = mask
            reachable |= mask
            values[(x, y)] = v
            order.append((x, y))
            prev = v
    return SeqGrid(diagonals=diagonals, values=values, placement_order=tuple(order))


def _chain_masks(grid: SeqGrid) -> dict[Point2, int]:
    """Bitmask of chain totals starting at each point, over the whole grid.

    Points on earlier diagonals never strictly dominate later ones, so the
    placement order is a valid evaluation order.
    """
    masks: dict[Point2, int] = {}
    for (x, y) in grid.placement_order:
        dom = 0
        for (qx, qy), m in masks.items():
            if qx < x and qy < y:
                dom |= m
        masks[(x, y)] = (dom | 1) << grid.values[(x, y)]
    return masks


def representable_set(grid: SeqGrid, bound: int) -> set[int]:
    """All totals in [1, bound] reachable by legal decompositions."""
    union = 0
    for m in _chain_masks(grid).values():
        union |= m
    return {t for t in range(1, bound + 1) if union >> t & 1}


def decompositions(target: int, grid: SeqGrid) -> list[Decomposition]:
    """All legal decompositions of ``target`` over ``grid``.

    Returned in lexicographic order of the point sequence.  A target
    beyond the sum of every grid value cannot be fixed by searching
    harder, only by building more diagonals, hence the distinct error.
    """
    if not isinstance(target, int) or target < 1:
        raise ValueError(f"target must be a positive integer: {target!r}")
    ceiling = sum(grid.values.values())
    if target > ceiling:
        raise InsufficientGridError(
            f"target {target} exceeds grid ceiling {ceiling}; build more diagonals"
        )
    masks = _chain_masks(grid)
    points = sorted(grid.values)
    found: list[Decomposition] = []

    def extend(chain: list[Point2], remaining: int) -> None:
        if remaining == 0:
            found.append(Decomposition(points=tuple(chain), total=target))
            return
        cx, cy = chain[-1]
        for nxt in points:
            if nxt[0] < cx and nxt[1] < cy and masks[nxt] >> remaining & 1:
                chain.append(nxt)
                extend(chain, remaining - grid.values[nxt])
                chain.pop()

    for start in points:
        if masks[start] >> target & 1:
            extend([start], target - grid.values[start])
    return found
