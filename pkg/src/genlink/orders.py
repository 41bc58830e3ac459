"""Term-order comparators for grid monomials.

Two orders are provided.

``GradedRevLex`` is the graded reverse-lexicographic order whose variable
ranking reads the grids bottom-up and right-to-left: every Y variable ranks
above every x variable, and within a family ``row`` descending then ``col``
descending, so that x[m,n] > x[m,n-1] > ... > x[m,1] > x[m-1,n] > ... > x[1,1].
Under this order the lead term of an m-minor of the x grid is its
antidiagonal.

``DiagLexOrder`` compares the Y parts of two monomials lexicographically with
the ranking Y[1,1] > Y[2,2] > ... (diagonal first, by row) followed by the
remaining Y variables row-major, and breaks ties with ``GradedRevLex`` on the
x parts. The remaining-Y tie ranking is configurable so experiments can vary
it.

Both orders are total, multiplicative, and have the unit monomial as unique
minimum. Comparators are rule-based on (family, row, col), so monomials need
not belong to a declared universe.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Callable

from .monomial import Monomial, Variable, X_FAMILY, Y_FAMILY

LESS, EQUAL, GREATER = -1, 0, 1


def _ascending_rank(v: Variable) -> tuple:
    # Ascending = smallest variable first: x[1,1] is the global minimum.
    return (0 if v.family == X_FAMILY else 1, v.row, v.col)


def _compare_revlex(u: Monomial, v: Monomial) -> int:
    du, dv = u.degree(), v.degree()
    if du != dv:
        return GREATER if du > dv else LESS
    for w in sorted(u.support() | v.support(), key=_ascending_rank):
        eu, ev = u.exponent(w), v.exponent(w)
        if eu != ev:
            # larger exponent at the smaller-ranked variable loses
            return LESS if eu > ev else GREATER
    return EQUAL


@dataclass(frozen=True)
class GradedRevLex:
    def compare(self, u: Monomial, v: Monomial) -> int:
        return _compare_revlex(u, v)

    def sort_key(self) -> Callable:
        return cmp_to_key(self.compare)

    def max(self, monomials) -> Monomial:
        return max(monomials, key=self.sort_key())


@dataclass(frozen=True)
class DiagLexOrder:
    """Lex on Y parts (diagonal Y first), ties broken by revlex on x parts.

    ``remaining_y`` optionally fixes an explicit descending ranking of the
    off-diagonal Y variables; by default they rank row-major below every
    diagonal Y.
    """

    remaining_y: tuple[Variable, ...] | None = None

    def _y_descending_rank(self, v: Variable) -> tuple:
        if v.row == v.col:
            return (0, v.row, 0)
        if self.remaining_y is not None:
            try:
                return (1, self.remaining_y.index(v), 0)
            except ValueError:
                raise ValueError(f"{v} missing from the configured remaining-Y ranking")
        return (1, v.row, v.col)

    def compare(self, u: Monomial, v: Monomial) -> int:
        y_support = [w for w in u.support() | v.support() if w.family == Y_FAMILY]
        for w in sorted(y_support, key=self._y_descending_rank):
            eu, ev = u.exponent(w), v.exponent(w)
            if eu != ev:
                return GREATER if eu > ev else LESS
        ux = Monomial((w, e) for w, e in u.items() if w.family == X_FAMILY)
        vx = Monomial((w, e) for w, e in v.items() if w.family == X_FAMILY)
        return _compare_revlex(ux, vx)

    def sort_key(self) -> Callable:
        return cmp_to_key(self.compare)

    def max(self, monomials) -> Monomial:
        return max(monomials, key=self.sort_key())


TermOrder = GradedRevLex | DiagLexOrder
