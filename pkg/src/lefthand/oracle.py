"""Brute-force Shearer sums and signed independence polynomials.

Everything here is exponential in the number of vertices and exists to
cross-check the polynomial-time checker on small graphs.  Sets of vertices
are handled internally as bitmasks over vertex indices; labels are scaled to
integers over a common denominator so enumeration runs on plain ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Iterator, Optional

from .chordal import TreeOrder, down_neighbors, verify_lefthanded
from .graph import GraphError, LabeledGraph

DEFAULT_CAP = 20


class OracleCapError(ValueError):
    pass


class DegenerateError(ArithmeticError):
    pass


class OracleIdentityError(AssertionError):
    pass


def _check_cap(g: LabeledGraph, cap: int) -> None:
    if g.n > cap:
        raise OracleCapError(f"oracle size cap exceeded: {g.n} vertices > {cap}")


def _mask(g: LabeledGraph, s: Iterable[str]) -> int:
    m = 0
    for v in s:
        m |= 1 << g.index(v)
    return m


def _names(g: LabeledGraph, mask: int) -> frozenset[str]:
    return frozenset(g.names[i] for i in range(g.n) if mask >> i & 1)


class _Scaled:
    """Labels as integers ``a_v`` over one common denominator ``D``."""

    def __init__(self, g: LabeledGraph):
        self.den = reduce(math.lcm, (p.denominator for p in g.labels), 1)
        self.a = [p.numerator * (self.den // p.denominator) for p in g.labels]
        self.closed = [(1 << i) | sum(1 << j for j in g.adj[i]) for i in range(g.n)]


def _independent_subsets(sc: _Scaled, allowed: int) -> Iterator[tuple[int, int, int]]:
    """Yield ``(mask, size, prod a_v)`` for every independent subset of ``allowed``."""
    stack = [(allowed, 0, 0, 1)]
    while stack:
        rest, mask, size, prod = stack.pop()
        if not rest:
            yield mask, size, prod
            continue
        low = rest & -rest
        i = low.bit_length() - 1
        stack.append((rest & ~low, mask, size, prod))
        stack.append((rest & ~sc.closed[i], mask | low, size + 1, prod * sc.a[i]))


def _signed_sum(sc: _Scaled, allowed: int) -> Fraction:
    # sum over independent I within allowed of (-1)^|I| prod p_v
    by_size: dict[int, int] = {}
    for _, size, prod in _independent_subsets(sc, allowed):
        by_size[size] = by_size.get(size, 0) + prod
    if not by_size:
        return Fraction(0)
    top = max(by_size)
    total = sum((-1) ** k * c * sc.den ** (top - k) for k, c in by_size.items())
    return Fraction(total, sc.den**top)


def independent_sets(g: LabeledGraph, cap: int = DEFAULT_CAP) -> list[frozenset[str]]:
    """All independent sets, ordered by size then by sorted vertex indices."""
    _check_cap(g, cap)
    sc = _Scaled(g)
    masks = [m for m, _, _ in _independent_subsets(sc, (1 << g.n) - 1)]
    masks.sort(key=lambda m: (bin(m).count("1"), [i for i in range(g.n) if m >> i & 1]))
    return [_names(g, m) for m in masks]


def sigma(g: LabeledGraph, s: Iterable[str], cap: int = DEFAULT_CAP) -> Fraction:
    """Shearer sum over the independent supersets ``I`` of ``s``:
    ``sum (-1)^(|I|-|s|) prod_{v in I} p_v``; zero when ``s`` is dependent."""
    _check_cap(g, cap)
    sc = _Scaled(g)
    smask = _mask(g, s)
    if any(smask >> i & 1 and smask & (sc.closed[i] & ~(1 << i)) for i in range(g.n)):
        return Fraction(0)
    # supersets of s that stay independent add vertices outside N[s]
    forbidden = 0
    base_size, base_prod = 0, 1
    for i in range(g.n):
        if smask >> i & 1:
            forbidden |= sc.closed[i]
            base_size += 1
            base_prod *= sc.a[i]
    allowed = ((1 << g.n) - 1) & ~forbidden
    total = Fraction(0)
    for _, size, prod in _independent_subsets(sc, allowed):
        total += Fraction((-1) ** size * prod * base_prod, sc.den ** (size + base_size))
    return total


def bfunc(g: LabeledGraph, s: Iterable[str], cap: int = DEFAULT_CAP) -> Fraction:
    """Signed independence polynomial of the subgraph induced by ``s``:
    ``sum over independent I within s of (-1)^|I| prod_{v in I} p_v``."""
    _check_cap(g, cap)
    return _signed_sum(_Scaled(g), _mask(g, s))


@dataclass
class ShearerReport:
    sigma: dict[frozenset[str], Fraction]
    sigma_empty: Fraction
    min_sigma: Fraction
    verdict: str
    witness: Optional[frozenset[str]]

    @property
    def in_L(self) -> bool:
        return self.verdict == "in_L"

    def to_json(self) -> dict:
        from .numerics import format_rational

        return {
            "verdict": self.verdict,
            "sigma_empty": format_rational(self.sigma_empty),
            "min_sigma": format_rational(self.min_sigma),
            "witness": None if self.witness is None else sorted(self.witness),
        }


def shearer_check(g: LabeledGraph, cap: int = DEFAULT_CAP) -> ShearerReport:
    """Shearer sums of every independent set and the resulting verdict.

    The sums come from a signed superset transform of the independent-set
    weights.  Before returning, two identities are enforced exactly: the sums
    add up to 1, and for every ``S`` the signed independence polynomial of
    ``S`` equals the total of the sums over subsets of the complement of ``S``.
    """
    _check_cap(g, cap)
    n = g.n
    sc = _Scaled(g)
    full = (1 << n) - 1
    size = 1 << n
    scale = sc.den**n
    # weights times D^n: prod a_v * D^(n-|I|) on independent I, 0 elsewhere
    w = [0] * size
    indep = []
    for mask, k, prod in _independent_subsets(sc, full):
        w[mask] = prod * sc.den ** (n - k)
        indep.append(mask)

    sig = list(w)
    for i in range(n):
        bit = 1 << i
        for m in range(size):
            if not m & bit:
                sig[m] -= sig[m | bit]

    if sum(sig[m] for m in indep) != scale:
        raise OracleIdentityError("Shearer sums do not add up to 1")

    # subset sums of sigma, and B(S) straight from the weights
    zsig = list(sig)
    bvals = [x if bin(m).count("1") % 2 == 0 else -x for m, x in enumerate(w)]
    for i in range(n):
        bit = 1 << i
        for m in range(size):
            if m & bit:
                zsig[m] += zsig[m ^ bit]
                bvals[m] += bvals[m ^ bit]
    for m in range(size):
        if bvals[m] != zsig[full ^ m]:
            raise OracleIdentityError(f"B/sigma identity fails at {sorted(_names(g, m))}")

    indep.sort(key=lambda m: (bin(m).count("1"), [i for i in range(n) if m >> i & 1]))
    table = {_names(g, m): Fraction(sig[m], scale) for m in indep}
    sigma_empty = Fraction(sig[0], scale)
    min_sigma = min(table.values())
    witness = next((_names(g, m) for m in indep if sig[m] < 0), None)
    verdict = "in_L" if min_sigma >= 0 and sigma_empty > 0 else "out_of_L"
    return ShearerReport(table, sigma_empty, min_sigma, verdict, witness)


def canonical_assignment(
    g: LabeledGraph, t: TreeOrder, cap: int = DEFAULT_CAP
) -> dict[str, Fraction]:
    """``x_v = p_v * B(F_v) / B(D_v)`` from brute-force B values."""
    _check_cap(g, cap)
    bad = verify_lefthanded(g, t)
    if bad is not None:
        raise GraphError(f"not a lefthanded order: {bad}")
    sc = _Scaled(g)
    x = {}
    for v in g.names:
        d = t.down_set(v)
        f = d - down_neighbors(g, t, v)
        bd = _signed_sum(sc, _mask(g, d))
        if bd == 0:
            raise DegenerateError("degenerate: sigma(empty set) = 0")
        x[v] = g.label(v) * _signed_sum(sc, _mask(g, f)) / bd
    return x
