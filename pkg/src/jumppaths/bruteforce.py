"""Exhaustive path enumeration on small boxes.

This is the ground-truth oracle for every closed form in the package, so
it is written for obviousness, not speed: plain depth-first search with
successors generated in ascending lexicographic order, which makes the
output order deterministic and the lists directly comparable in tests.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product

from .errors import GuardError

Point = tuple[int, ...]
Path = tuple[Point, ...]

#: Above this coordinate sum the path count runs into the millions.
COORD_SUM_LIMIT = 14


def _guarded_point(p) -> Point:
    pt = tuple(p)
    if not pt or any(not isinstance(x, int) or x < 0 for x in pt):
        raise ValueError(f"bad lattice point: {p!r}")
    if sum(pt) > COORD_SUM_LIMIT:
        raise GuardError(
            f"enumeration guard: coordinate sum {sum(pt)} exceeds {COORD_SUM_LIMIT}"
        )
    return pt


def _successors(a: Point) -> list[Point]:
    """All points weakly below a, except a itself, ascending."""
    return [b for b in product(*(range(x + 1) for x in a)) if b != a]


def _strict_successors(a: Point) -> list[Point]:
    """All points strictly below a in every coordinate, ascending."""
    if min(a) == 0:
        return []
    return list(product(*(range(x) for x in a)))


def enumerate_unrestricted(p, max_len: int | None = None) -> list[Path]:
    """Every unrestricted jump path starting at p, in lexicographic order.

    The zero-jump path [p] is included.  ``max_len`` caps the number of
    jumps when given.
    """
    start = _guarded_point(p)
    paths: list[Path] = []

    def walk(path: list[Point]) -> None:
        paths.append(tuple(path))
        if max_len is not None and len(path) - 1 >= max_len:
            return
        for b in _successors(path[-1]):
            path.append(b)
            walk(path)
            path.pop()

    walk([start])
    return paths


def enumerate_restricted(p) -> list[Path]:
    """Every jump path from p whose final point is the origin."""
    origin = tuple([0] * len(tuple(p)))
    return [path for path in enumerate_unrestricted(p) if path[-1] == origin]


def enumerate_simple(p) -> list[Path]:
    """Every chain from p that strictly decreases in all coordinates each
    step (free endpoint, single-point chain included)."""
    start = _guarded_point(p)
    chains: list[Path] = []

    def walk(path: list[Point]) -> None:
        chains.append(tuple(path))
        for b in _strict_successors(path[-1]):
            path.append(b)
            walk(path)
            path.pop()

    walk([start])
    return chains


def length_histogram(p) -> dict[int, int]:
    """Unrestricted path counts keyed by number of jumps."""
    tally = Counter(len(path) - 1 for path in enumerate_unrestricted(p))
    return dict(sorted(tally.items()))


@dataclass(frozen=True)
class DirectionalTally:
    """Length-n unrestricted paths split by the type of the first jump."""

    left: int   # first jump decreases x only
    down: int   # first jump decreases y only
    both: int   # first jump decreases x and y

    def total(self) -> int:
        return self.left + self.down + self.both


def directional_counts(p: int, q: int, n: int) -> DirectionalTally:
    """Partition the length-n unrestricted paths from (p, q) by first jump."""
    if n < 1:
        raise ValueError("directional split needs n >= 1")
    left = down = both = 0
    for path in enumerate_unrestricted((p, q), max_len=n):
        if len(path) - 1 != n:
            continue
        (x0, y0), (x1, y1) = path[0], path[1]
        if y1 == y0:
            left += 1
        elif x1 == x0:
            down += 1
        else:
            both += 1
    return DirectionalTally(left=left, down=down, both=both)


def is_valid_jump_path(path, simple: bool = False) -> bool:
    """Structural check of the path invariants.

    Consecutive points must be weakly decreasing in every coordinate and
    distinct; with ``simple=True`` every coordinate must strictly decrease.
    """
    pts = [tuple(pt) for pt in path]
    if not pts:
        return False
    d = len(pts[0])
    if any(len(pt) != d or min(pt) < 0 for pt in pts):
        return False
    for a, b in zip(pts, pts[1:]):
        if simple:
            if not all(y < x for x, y in zip(a, b)):
                return False
        else:
            if a == b or not all(y <= x for x, y in zip(a, b)):
                return False
    return True
