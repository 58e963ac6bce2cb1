"""Polynomial-time membership test for labeled chordal graphs.

Walking a linear extension of a lefthanded tree order, each vertex gets

    x_v = p_v / prod_{u in N_v} (1 - x_u)

and the labeled graph belongs to the Shearer family exactly when every x_v
lies in [0, 1).  When it does, prod (1 - x_v) is the best possible lower
bound on the probability that no event occurs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .chordal import TreeOrder, down_neighbors, linear_extension, verify_lefthanded
from .graph import GraphError, LabeledGraph
from .numerics import format_decimal, format_rational

# float results this close to the boundary are recomputed exactly
FLOAT_MARGIN = 1e-12


class CrosscheckError(AssertionError):
    pass


@dataclass
class CheckReport:
    """Outcome of the recursion.

    ``x`` holds every vertex processed, including the failing one (its value
    is then >= 1); vertices after a failure are absent.
    """

    order: tuple[str, ...]
    x: dict[str, Union[Fraction, float]]
    verdict: str
    bound: Optional[Union[Fraction, float]] = None
    witness: Optional[str] = None
    exact: bool = True
    down: dict[str, frozenset[str]] = field(default_factory=dict, repr=False)

    @property
    def in_L(self) -> bool:
        return self.verdict == "in_L"

    def to_json(self) -> dict:
        def show(r):
            return format_rational(r) if isinstance(r, Fraction) else repr(r)

        out = {
            "verdict": self.verdict,
            "bound": None if self.bound is None else show(self.bound),
            "bound_decimal": None,
            "x": {v: show(x) for v, x in self.x.items()},
            "witness": self.witness,
            "order": list(self.order),
            "exact": self.exact,
        }
        if self.bound is not None:
            out["bound_decimal"] = format_decimal(Fraction(self.bound))
        return out


def _down_map(g: LabeledGraph, t: TreeOrder) -> dict[str, frozenset[str]]:
    return {v: down_neighbors(g, t, v) for v in g.names}


def _run(g, order, down, one) -> CheckReport:
    x = {}
    bound = one
    for v in order:
        denom = one
        for u in down[v]:
            denom *= one - x[u]
        xv = g.label(v) / denom
        x[v] = xv
        if xv >= 1:
            return CheckReport(order, x, "out_of_L", None, v, down=down)
        bound *= one - xv
    return CheckReport(order, x, "in_L", bound, None, down=down)


def check_membership(
    g: LabeledGraph, t: TreeOrder, use_float: bool = False
) -> CheckReport:
    """Decide membership by the recursive assignment along ``linear_extension(t)``.

    Stops at the first vertex with ``x_v >= 1``, so no factor ``1 - x_u`` used
    as a divisor is ever zero.  With ``use_float`` the recursion runs in
    doubles first and is repeated exactly whenever some ``x_v`` lands within
    ``FLOAT_MARGIN`` of 1.
    """
    bad = verify_lefthanded(g, t)
    if bad is not None:
        raise GraphError(f"not a lefthanded order: {bad.kind} {bad.vertices}")
    order = linear_extension(t)
    down = _down_map(g, t)
    if use_float:
        fast = _run(_FloatLabels(g), order, down, 1.0)
        if all(abs(1.0 - x) > FLOAT_MARGIN for x in fast.x.values()):
            fast.exact = False
            return fast
    return _run(g, order, down, Fraction(1))


class _FloatLabels:
    def __init__(self, g: LabeledGraph):
        self._p = {v: float(p) for v, p in zip(g.names, g.labels)}

    def label(self, v: str) -> float:
        return self._p[v]


def bound_crosscheck(g: LabeledGraph, t: TreeOrder, cap: int = 20) -> CheckReport:
    """Compare the checker against brute force on a graph in the family.

    Requires: bound == sigma(empty set); x equals the canonical assignment
    p_v B(F_v) / B(D_v); and p_v == x_v * prod_{u in N_v} (1 - x_u) for all v.
    Raises :class:`CrosscheckError` listing every discrepancy.
    """
    from .oracle import canonical_assignment, sigma

    rep = check_membership(g, t)
    if not rep.in_L:
        raise ValueError("bound_crosscheck needs a graph the checker accepts")
    problems = []
    s0 = sigma(g, (), cap=cap)
    if rep.bound != s0:
        problems.append(f"bound {rep.bound} != sigma(empty) {s0}")
    canon = canonical_assignment(g, t, cap=cap)
    for v in g.names:
        if rep.x[v] != canon[v]:
            problems.append(f"x[{v}] = {rep.x[v]} but canonical value is {canon[v]}")
        prod = Fraction(1)
        for u in rep.down[v]:
            prod *= 1 - rep.x[u]
        if rep.x[v] * prod != g.label(v):
            problems.append(f"x[{v}] * prod(1 - x_u) = {rep.x[v] * prod} != p = {g.label(v)}")
    if problems:
        raise CrosscheckError("; ".join(problems))
    return rep
