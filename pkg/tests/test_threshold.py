import random
from fractions import Fraction

import pytest

from lefthand import (
    build_tree_order,
    check_membership,
    critical_polynomial,
    random_chordal,
    symbolic_assignment,
    threshold_bisect,
)
from lefthand.fixtures import chain_order, complete_graph, goldner_harary, goldner_harary_order
from lefthand.numerics import IntPolynomial, RationalFunction

TOL = Fraction(1, 10**6)


def test_single_vertex():
    g = complete_graph(1)
    t = chain_order(g.names)
    rep = threshold_bisect(g, t, TOL)
    assert rep.hi == 1 and 1 - TOL <= rep.lo < 1
    v, c, (lo, hi) = critical_polynomial(g, t, TOL)
    assert c == IntPolynomial([1, -1]) and lo < 1 < hi
    assert symbolic_assignment(g, t)["v1"] == RationalFunction.variable()


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_complete_graph_threshold(n):
    g = complete_graph(n)
    rep = threshold_bisect(g, build_tree_order(g), TOL)
    assert rep.lo < Fraction(1, n) <= rep.hi and rep.hi - rep.lo <= TOL


def test_k2_symbolic():
    g = complete_graph(2)
    t = chain_order(g.names)
    x = symbolic_assignment(g, t)
    p = RationalFunction.variable()
    assert x["v1"] == p and x["v2"] == p / (1 - p)
    v, c, (lo, hi) = critical_polynomial(g, t, TOL)
    assert v == "v2" and c == IntPolynomial([1, -2]) and lo < Fraction(1, 2) < hi


def test_k3_symbolic_matches_checker():
    g = complete_graph(3)
    t = chain_order(g.names)
    x = symbolic_assignment(g, t)
    assert x["v3"] == RationalFunction(IntPolynomial([0, 1]), IntPolynomial([1, -2]))
    rep = check_membership(g.with_labels(Fraction(1, 4)), t)
    for v in g.names:
        assert x[v](Fraction(1, 4)) == rep.x[v]


def test_goldner_harary_critical_polynomial():
    g = goldner_harary()
    for t in (goldner_harary_order(), build_tree_order(g)):
        v, c, (lo, hi) = critical_polynomial(g, t, TOL)
        assert v == "g"
        assert c == IntPolynomial([1, -11, 28, -29, 17, -6, 1])
        assert Fraction(12689, 10**5) < lo < hi < Fraction(126891, 10**6)


def test_tolerance_validation():
    g = complete_graph(2)
    with pytest.raises(ValueError):
        threshold_bisect(g, chain_order(g.names), Fraction(0))


@pytest.mark.parametrize("seed", range(12))
def test_symbolic_and_numeric_agree(seed):
    g = random_chordal(1 + seed % 9, seed)
    t = build_tree_order(g)
    rep = threshold_bisect(g, t, Fraction(1, 1000))
    xs = symbolic_assignment(g, t)
    rng = random.Random(seed)
    for _ in range(20):
        p = rep.lo * Fraction(rng.randint(1, 999), 1000)
        numeric = check_membership(g.with_labels(p), t)
        assert numeric.in_L
        for v in g.names:
            assert xs[v](p) == numeric.x[v]
    # brackets from the two routes overlap
    _, _, (lo, hi) = critical_polynomial(g, t, Fraction(1, 1000))
    assert lo <= rep.hi and rep.lo <= hi


@pytest.mark.parametrize("seed", range(6))
def test_verdict_monotone_along_a_sweep(seed):
    g = random_chordal(8, seed)
    t = build_tree_order(g)
    verdicts = [check_membership(g.with_labels(Fraction(k, 64)), t).in_L for k in range(65)]
    # once out, stays out
    first_out = verdicts.index(False)
    assert all(verdicts[:first_out]) and not any(verdicts[first_out:])
