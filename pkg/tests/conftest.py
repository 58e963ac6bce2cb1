import random
from fractions import Fraction
from itertools import combinations

import pytest

from lefthand import LabeledGraph, is_independent, random_chordal

CORPUS_SIZE = 200


def brute_independent_sets(g):
    return [
        frozenset(c)
        for k in range(g.n + 1)
        for c in combinations(g.names, k)
        if is_independent(g, c)
    ]


def weight(g, s):
    w = Fraction(1)
    for v in s:
        w *= g.label(v)
    return w


def brute_sigma(g, s, indep=None):
    s = frozenset(s)
    indep = brute_independent_sets(g) if indep is None else indep
    return sum(
        ((-1) ** (len(i) - len(s)) * weight(g, i) for i in indep if s <= i), Fraction(0)
    )


def brute_b(g, s):
    s = list(s)
    return sum(
        (
            (-1) ** k * weight(g, c)
            for k in range(len(s) + 1)
            for c in combinations(s, k)
            if is_independent(g, c)
        ),
        Fraction(0),
    )


def has_chordless_cycle(g):
    """True when some vertex subset of size >= 4 induces a cycle."""
    for k in range(4, g.n + 1):
        for sub in combinations(range(g.n), k):
            members = set(sub)
            if all(len(g.adj[v] & members) == 2 for v in sub):
                # 2-regular; a cycle iff connected
                seen, stack = {sub[0]}, [sub[0]]
                while stack:
                    v = stack.pop()
                    for u in g.adj[v] & members:
                        if u not in seen:
                            seen.add(u)
                            stack.append(u)
                if len(seen) == k:
                    return True
    return False


def random_graph(n, density, seed):
    rng = random.Random(seed)
    names = [f"u{i}" for i in range(n)]
    edges = [(a, b) for a, b in combinations(names, 2) if rng.random() < density]
    return LabeledGraph.from_edges([(v, Fraction(0)) for v in names], edges)


def corpus_graph(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 12)
    return random_chordal(n, seed, max_label=Fraction(1, rng.choice([1, 2, 3, 4, 6])))


@pytest.fixture(scope="session")
def corpus():
    return [corpus_graph(seed) for seed in range(CORPUS_SIZE)]


_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, text): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        num, text = mark.args
        _criteria[num] = (text, "PASS" if rep.passed else "FAIL", rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        text, status, dur = _criteria[num]
        terminalreporter.write_line(f"[{status}] criterion {num}: {text} ({dur:.2f}s)")
