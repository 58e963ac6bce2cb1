"""Exit criteria.  Each test prints a PASS/FAIL line in the terminal summary."""

import random
import time
from collections import Counter
from fractions import Fraction

import pytest

from lefthand import (
    bfunc,
    build_tree_order,
    canonical_assignment,
    check_chordal,
    check_membership,
    critical_polynomial,
    down_neighbors,
    far_set,
    maximal_elements,
    mcs_order,
    random_chordal,
    shearer_check,
    threshold_bisect,
    verify_lefthanded,
)
from lefthand.fixtures import complete_graph, cycle_graph, goldner_harary, goldner_harary_order
from lefthand.numerics import IntPolynomial, poly_primitive

from conftest import has_chordless_cycle, random_graph

GH_LO, GH_HI = Fraction(12689, 10**5), Fraction(126891, 10**6)
GH_SEXTIC = IntPolynomial([1, -11, 28, -29, 17, -6, 1])


@pytest.mark.criterion(1, "Goldner-Harary exact assignment at p = 1/8")
def test_criterion_1_goldner_harary_fixture():
    start = time.perf_counter()
    rep = check_membership(goldner_harary(Fraction(1, 8)), goldner_harary_order())
    elapsed = time.perf_counter() - start
    assert rep.verdict == "in_L"
    assert rep.x["b"] == rep.x["j"] == Fraction(64, 343)
    assert rep.x["e"] == Fraction(25088, 77841)
    assert rep.x["f"] == Fraction(25088, 52753)
    assert rep.x["g"] == Fraction(25088, 27665)
    assert all(rep.x[v] == Fraction(1, 8) for v in "acdhik")
    assert elapsed < 1.0


@pytest.mark.criterion(2, "Goldner-Harary boundary pair 101/800 vs 102/800")
def test_criterion_2_boundary_pair():
    start = time.perf_counter()
    g = goldner_harary()
    for t in (goldner_harary_order(), build_tree_order(g)):
        inside = check_membership(g.with_labels(Fraction(101, 800)), t)
        outside = check_membership(g.with_labels(Fraction(102, 800)), t)
        assert inside.verdict == "in_L"
        assert outside.verdict == "out_of_L" and outside.witness == "g"
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(3, "Goldner-Harary threshold bracket and sextic")
def test_criterion_3_threshold():
    start = time.perf_counter()
    g = goldner_harary()
    t = goldner_harary_order()
    tol = Fraction(1, 10**6)
    rep = threshold_bisect(g, t, tol)
    assert rep.hi - rep.lo <= tol
    assert GH_LO < rep.lo < rep.hi < GH_HI
    assert rep.critical_vertex == "g"
    v, poly, (lo, hi) = critical_polynomial(g, t, tol)
    assert v == "g"
    assert poly_primitive(poly) == poly_primitive(GH_SEXTIC)
    assert hi - lo <= tol and GH_LO < lo < hi < GH_HI
    assert lo <= rep.hi and rep.lo <= hi
    assert time.perf_counter() - start < 10.0


@pytest.mark.criterion(4, "complete graphs K_2..K_8 at and below p = 1/n")
def test_criterion_4_complete_graphs():
    start = time.perf_counter()
    for n in range(2, 9):
        k = complete_graph(n)
        t = build_tree_order(k)
        at = check_membership(k.with_labels(Fraction(1, n)), t)
        assert at.verdict == "out_of_L"
        below = check_membership(k.with_labels(Fraction(1, n) - Fraction(1, 1000)), t)
        assert below.verdict == "in_L"
        for i, v in enumerate(at.order):
            if v in at.x:
                assert at.x[v] == Fraction(1, n - i)
        assert at.x[at.witness] == 1 and at.witness == at.order[-1]
    assert time.perf_counter() - start < 1.0


@pytest.mark.criterion(5, "checker agrees with brute-force Shearer oracle on 200 random chordal graphs")
def test_criterion_5_oracle_equivalence(corpus):
    start = time.perf_counter()
    verdicts = Counter()
    for g in corpus:
        assert g.n <= 12 and all(p.denominator <= 64 for p in g.labels)
        t = build_tree_order(g)
        rep = check_membership(g, t)
        oracle = shearer_check(g)
        assert rep.verdict == oracle.verdict, g
        verdicts[rep.verdict] += 1
        if rep.in_L:
            assert rep.bound == oracle.sigma_empty
            assert rep.x == canonical_assignment(g, t)
    assert verdicts["in_L"] and verdicts["out_of_L"]
    assert time.perf_counter() - start < 300


def _random_down_closed(t, rng):
    seed = [v for v in t.vertices if rng.random() < 0.3]
    out = set(seed)
    for v in seed:
        out |= t.down_set(v)
    return out


@pytest.mark.criterion(6, "Shearer-sum, B-function, partition and product identities")
def test_criterion_6_identities(corpus):
    start = time.perf_counter()
    rng = random.Random(6)
    for g in corpus:
        t = build_tree_order(g)
        rep = shearer_check(g)
        assert sum(rep.sigma.values()) == 1
        for _ in range(50):
            s = {v for v in g.names if rng.random() < 0.5}
            comp = set(g.names) - s
            assert bfunc(g, s) == sum((x for r, x in rep.sigma.items() if r <= comp), Fraction(0))
        for v in g.names:
            lhs = Counter(maximal_elements(t, t.down_set(v)))
            for u in down_neighbors(g, t, v):
                lhs.update(maximal_elements(t, t.down_set(u)))
            rhs = Counter(down_neighbors(g, t, v))
            rhs.update(maximal_elements(t, far_set(g, t, v)))
            assert set(lhs.values()) <= {1} and set(rhs.values()) <= {1}
            assert lhs == rhs
        for _ in range(20):
            s = _random_down_closed(t, rng)
            prod = Fraction(1)
            for w in maximal_elements(t, s):
                prod *= bfunc(g, t.down_set(w) | {w})
            assert bfunc(g, s) == prod
    assert time.perf_counter() - start < 300


@pytest.mark.criterion(7, "verdict and bound independent of the tree order")
def test_criterion_7_order_invariance(corpus):
    distinct = 0
    for g in corpus[:50]:
        first = build_tree_order(g)
        second = build_tree_order(g, root=g.names[-1], tiebreak="reverse")
        assert verify_lefthanded(g, second) is None
        distinct += first != second
        a, b = check_membership(g, first), check_membership(g, second)
        assert a.verdict == b.verdict
        assert a.bound == b.bound
    # the comparison is only meaningful if the orders really differ
    assert distinct >= 40


@pytest.mark.criterion(8, "chordality recognition vs brute force")
def test_criterion_8_recognition():
    start = time.perf_counter()
    for n in range(4, 9):
        c = cycle_graph(n)
        w = check_chordal(c, mcs_order(c))
        assert w is not None
        v, u, x = w.vertices
        assert c.adjacent(v, u) and c.adjacent(v, x) and not c.adjacent(u, x)
        peo = [c.names[i] for i in mcs_order(c)[::-1]]
        assert peo.index(v) < peo.index(u) and peo.index(v) < peo.index(x)
    gh = goldner_harary()
    assert check_chordal(gh, mcs_order(gh)) is None
    for seed in range(100):
        g = random_chordal(1 + seed % 15, seed)
        assert check_chordal(g, mcs_order(g)) is None
    rng = random.Random(8)
    for seed in range(500):
        g = random_graph(rng.randint(1, 8), rng.uniform(0.15, 0.85), seed)
        assert (check_chordal(g, mcs_order(g)) is None) == (not has_chordless_cycle(g))
    assert time.perf_counter() - start < 60
