"""Exact integer helpers: binomial coefficients and dense integer polynomials.

Everything here is exact.  Counts are plain Python ints (arbitrary
precision), probabilities are ``fractions.Fraction``, and polynomials keep
integer coefficients with no rounding at any point.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Scalar = Union[int, Fraction]


class InexactDivisionError(ArithmeticError):
    """Scalar division of a polynomial left a nonzero remainder.

    The recurrences that divide by an index are integral when implemented
    correctly, so this firing indicates a bug rather than bad input.
    """


def binom(n: int, k: int) -> int:
    """C(n, k), with the value 0 whenever k < 0 or k > n.

    The out-of-range convention lets alternating sums be written over their
    natural index ranges without edge-case bookkeeping.
    """
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class Polynomial:
    """Dense univariate polynomial with exact integer coefficients.

    ``coefficients[k]`` is the coefficient of x**k.  The stored tuple never
    ends in a zero; the zero polynomial is the empty tuple.
    """

    __slots__ = ("coefficients",)

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int] = ()) -> None:
        coeffs = list(coefficients)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Polynomial is immutable")

    # -- basics ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, k: int) -> int:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else 0

    def is_zero(self) -> bool:
        return not self.coefficients

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coefficients == other.coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coefficients)!r})"

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        out = list(self.coefficients)
        for i, c in enumerate(other.coefficients):
            if i < len(out):
                out[i] -= c
            else:
                out.append(-c)
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coefficients])

    def __mul__(self, other: Union["Polynomial", int]) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial([c * other for c in self.coefficients])
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Polynomial(out)

    def __rmul__(self, other: int) -> "Polynomial":
        return self.__mul__(other)

    def evaluate(self, at: Scalar) -> Scalar:
        """Evaluate by Horner's rule; exact for int or Fraction arguments."""
        acc = at * 0  # zero of the argument's type
        for c in reversed(self.coefficients):
            acc = acc * at + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial([k * c for k, c in enumerate(self.coefficients)][1:])

    def exact_div(self, divisor: int) -> "Polynomial":
        """Divide every coefficient by ``divisor``; the division must be exact."""
        if divisor == 0:
            raise ZeroDivisionError("polynomial division by zero")
        out = []
        for c in self.coefficients:
            q, r = divmod(c, divisor)
            if r:
                raise InexactDivisionError(
                    f"coefficient {c} not divisible by {divisor}"
                )
            out.append(q)
        return Polynomial(out)


#: The polynomial 1 + x, used as a building block all over.
ONE_PLUS_X = Polynomial([1, 1])


def binomial_row(n: int) -> Polynomial:
    """(1 + x)**n as an explicit coefficient row."""
    if n < 0:
        raise ValueError("negative exponent")
    return Polynomial([binom(n, k) for k in range(n + 1)])
