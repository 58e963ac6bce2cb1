"""Uniform-label thresholds.

With every label equal to p, membership is monotone in p, so the largest
admissible p can be bracketed by bisection on the exact checker.  Running the
same recursion over rational functions of p yields one polynomial
constraint per vertex; the threshold is the smallest root in (0, 1] among
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chordal import TreeOrder, down_neighbors, linear_extension
from .checker import check_membership
from .graph import LabeledGraph
from .numerics import (
    IntPolynomial,
    RationalFunction,
    bisect_bracket,
    format_decimal,
    format_rational,
    poly_primitive,
    smallest_root,
)

DEFAULT_TOL = Fraction(1, 10**6)


@dataclass
class ThresholdReport:
    lo: Fraction
    hi: Fraction
    critical_vertex: Optional[str]
    critical_poly: Optional[IntPolynomial] = None
    root_bracket: Optional[tuple[Fraction, Fraction]] = None

    def to_json(self) -> dict:
        return {
            "lo": format_rational(self.lo),
            "hi": format_rational(self.hi),
            "lo_decimal": format_decimal(self.lo),
            "hi_decimal": format_decimal(self.hi),
            "critical_vertex": self.critical_vertex,
            "poly_coeffs": None if self.critical_poly is None else list(self.critical_poly.coeffs),
            "root_bracket": None
            if self.root_bracket is None
            else [format_rational(r) for r in self.root_bracket],
        }


def threshold_bisect(
    g: LabeledGraph, t: TreeOrder, tol: Fraction = DEFAULT_TOL
) -> ThresholdReport:
    """Bracket the uniform threshold: in the family at ``lo``, not at ``hi``.

    Stored labels are ignored.  Midpoints are dyadic; once the width is at
    most ``tol`` bisection carries on (bounded) until both ends share one
    ``tol``-aligned cell, so the bracket certifies the threshold's digits.
    """
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    witness = {}

    def inside(p: Fraction) -> bool:
        rep = check_membership(g.with_labels(p), t)
        if not rep.in_L:
            witness[p] = rep.witness
        return rep.in_L

    lo, hi = Fraction(0), Fraction(1)
    if g.n == 0:
        return ThresholdReport(lo, hi, None)
    inside(hi)
    lo, hi, _ = bisect_bracket(inside, lo, hi, tol)
    return ThresholdReport(lo, hi, witness[hi])


def symbolic_assignment(g: LabeledGraph, t: TreeOrder) -> dict[str, RationalFunction]:
    """x_v as reduced rational functions of the uniform label p."""
    p = RationalFunction.variable()
    one_minus: dict[str, RationalFunction] = {}
    out = {}
    for v in linear_extension(t):
        num, den = p.num, p.den
        for u in down_neighbors(g, t, v):
            # divide by (1 - x_u) = (den_u - num_u) / den_u
            c = one_minus[u]
            if c.num.is_zero():
                raise ArithmeticError("degenerate recursion")
            num, den = num * c.den, den * c.num
        x = RationalFunction(num, den)
        out[v] = x
        one_minus[v] = RationalFunction(x.den - x.num, x.den)
    return out


def constraint_polynomials(g: LabeledGraph, t: TreeOrder) -> dict[str, IntPolynomial]:
    """Per vertex, the primitive part of den - num; x_v < 1 near 0 iff it is positive."""
    return {
        v: poly_primitive(x.den - x.num) for v, x in symbolic_assignment(g, t).items()
    }


def _root_in_unit(c: IntPolynomial, tol: Fraction) -> Optional[tuple[Fraction, Fraction]]:
    # search (0, 2) so a root exactly at 1 is still found; roots above 1 are dropped
    for hi in (Fraction(2), Fraction(17, 8), Fraction(19, 8)):
        try:
            br = smallest_root(c, Fraction(0), hi, tol)
        except ValueError:
            continue
        if br is None or br[0] >= 1:
            return None
        return br
    raise ValueError("could not place a search interval avoiding roots")


def _root_below(a, abr, b, bbr, tol) -> bool:
    # strictly smaller root; overlapping brackets are refined a bounded number of times
    fine = tol
    for _ in range(8):
        if abr[1] <= bbr[0]:
            return True
        if bbr[1] <= abr[0]:
            return False
        fine /= 1 << 16
        abr = smallest_root(a, abr[0], abr[1], fine) or abr
        bbr = smallest_root(b, bbr[0], bbr[1], fine) or bbr
    return False


def critical_polynomial(
    g: LabeledGraph, t: TreeOrder, tol: Fraction = DEFAULT_TOL
) -> tuple[str, IntPolynomial, tuple[Fraction, Fraction]]:
    """The vertex whose constraint has the smallest root in (0, 1], its
    constraint polynomial, and a root bracket of width at most ``tol``.

    Ties between brackets go to the vertex processed first.
    """
    tol = Fraction(tol)
    polys = constraint_polynomials(g, t)
    best = None
    for v in linear_extension(t):
        br = _root_in_unit(polys[v], tol)
        if br is None:
            continue
        if best is None or _root_below(polys[v], br, best[1], best[2], tol):
            best = (v, polys[v], br)
    if best is None:
        raise ValueError("no constraint root in (0, 1]")
    return best


def threshold_report(
    g: LabeledGraph, t: TreeOrder, tol: Fraction = DEFAULT_TOL
) -> ThresholdReport:
    rep = threshold_bisect(g, t, tol)
    if g.n:
        _, poly, br = critical_polynomial(g, t, tol)
        rep.critical_poly = poly
        rep.root_bracket = br
    return rep
