import itertools
import random

import pytest

from conftest import REF_ROWS, random_dims, random_graph
from graphcodes.bounds import (bounds_report, d_min_bound, k_sys_search,
                               matching_k)
from graphcodes.errors import GuardExceededError, NoMatchingError
from graphcodes.graph import load_graph


def brute_d_min(rows):
    """Independent subset sweep with plain set unions."""
    s = len(rows)
    best = None
    for size in range(1, s + 1):
        for subset in itertools.combinations(range(s), size):
            nb = set()
            for i in subset:
                nb |= {j for j, v in enumerate(rows[i]) if v}
            val = len(nb) - size + 1
            if best is None or val < best:
                best = val
    return best


def brute_k_sys(rows):
    """Minimum over all covering matchings of (max row zeros + 1), from scratch."""
    s, n = len(rows), len(rows[0])
    best = [None]

    def k_of(match):
        worst = 0
        taken = set(match)
        for i in range(s):
            zeros = 0
            for j in range(n):
                v = rows[i][j]
                if j in taken and match[i] != j:
                    v = 0
                zeros += v == 0
            worst = max(worst, zeros)
        return worst + 1

    def rec(i, match):
        if i == s:
            k = k_of(match)
            if best[0] is None or k < best[0]:
                best[0] = k
            return
        for c in range(n):
            if rows[i][c] and c not in match:
                rec(i + 1, match + [c])

    rec(0, [])
    return best[0]


def test_reference_graph_bounds(ref_graph):
    d_min, witness = d_min_bound(ref_graph)
    assert d_min == 5
    assert witness == (0,)
    k, match, exact = k_sys_search(ref_graph)
    assert (k, match, exact) == (4, (0, 1, 2), True)
    rep = bounds_report(ref_graph)
    assert rep.d_min == 5 and rep.k_min == 3
    assert rep.d_sys == 4 and rep.k_sys == 4
    assert rep.a == 3 and rep.r_m == 4
    assert rep.thm2_feasible is False
    assert rep.search_exact is True
    d = rep.to_dict()
    assert d["r_M"] == 4 and d["exact"] is True
    assert d["witness_subset"] == [0] and d["witness_matching"] == [0, 1, 2]


def test_complete_graph_bounds():
    for s, n in [(1, 4), (2, 5), (3, 7), (4, 6)]:
        g = load_graph([[1] * n for _ in range(s)])
        d_min, witness = d_min_bound(g)
        assert d_min == n - s + 1
        assert witness == tuple(range(s))
        rep = bounds_report(g)
        assert rep.k_sys == s and rep.d_sys == n - s + 1
        assert rep.a == n and rep.r_m == 0 and rep.thm2_feasible


def test_identity_graph_bounds():
    for s in [1, 2, 4]:
        g = load_graph([[1 if i == j else 0 for j in range(s)] for i in range(s)])
        assert d_min_bound(g)[0] == 1
        rep = bounds_report(g)
        assert rep.k_sys == s
        assert rep.d_sys == 1
        assert rep.thm2_feasible  # k_min = n = s >= r_M = s


def test_single_row_bound():
    g = load_graph([[1, 1, 1, 1, 1]])
    assert d_min_bound(g) == (5, (0,))
    rep = bounds_report(g)
    assert rep.k_sys == 1 and rep.d_sys == 5


def test_d_min_guard():
    g = load_graph([[1] * 25 for _ in range(22)])
    with pytest.raises(GuardExceededError):
        d_min_bound(g)
    assert d_min_bound(g, guard=22)[0] == 25 - 22 + 1


def test_k_sys_guard_and_heuristic_fallback():
    rows = [[1] * 14 for _ in range(13)]
    g = load_graph(rows)
    with pytest.raises(GuardExceededError):
        k_sys_search(g, exact=True)
    k, match, exact = k_sys_search(g, exact=False)
    assert exact is False
    assert k >= 13  # s <= k always
    assert len(set(match)) == 13


def test_no_matching_propagates():
    g = load_graph([[1, 0, 0], [1, 0, 0], [0, 1, 1]])
    with pytest.raises(NoMatchingError):
        k_sys_search(g)
    with pytest.raises(NoMatchingError):
        bounds_report(g)


def test_d_min_matches_brute_oracle():
    rng = random.Random(404)
    for _ in range(200):
        g = random_graph(rng, *random_dims(rng, 6, 8),
                         density=rng.choice([0.3, 0.5, 0.8]))
        assert d_min_bound(g)[0] == brute_d_min([list(r) for r in g.adjacency])


def test_d_min_witness_is_lex_smallest_minimizer():
    rng = random.Random(414)
    for _ in range(80):
        g = random_graph(rng, *random_dims(rng, 5, 7),
                         density=rng.choice([0.3, 0.6]))
        value, witness = d_min_bound(g)
        minimizers = []
        for size in range(1, g.s + 1):
            for subset in itertools.combinations(range(g.s), size):
                nb = set()
                for i in subset:
                    nb |= set(g.support(i))
                if len(nb) - size + 1 == value:
                    minimizers.append(subset)
        assert witness == min(minimizers)


def test_k_sys_matches_brute_oracle():
    rng = random.Random(505)
    checked = 0
    while checked < 120:
        g = random_graph(rng, *random_dims(rng, 4, 7),
                         density=rng.choice([0.3, 0.5, 0.8]))
        rows = [list(r) for r in g.adjacency]
        expect = brute_k_sys(rows)
        if expect is None:
            with pytest.raises(NoMatchingError):
                k_sys_search(g)
            continue
        k, match, exact = k_sys_search(g)
        assert exact and k == expect
        assert matching_k(g, match) == k
        checked += 1


def test_random_matchings_never_beat_k_sys():
    rng = random.Random(606)
    for _ in range(60):
        g = random_graph(rng, *random_dims(rng, 4, 7, s_min=2), density=0.7)
        try:
            k_sys, _, _ = k_sys_search(g)
        except NoMatchingError:
            continue
        # sample random covering matchings by trying random column orders
        for _ in range(20):
            cols = list(range(g.n))
            rng.shuffle(cols)
            match = []
            used = set()
            for i in range(g.s):
                pick = next((c for c in cols if g.adjacency[i][c] and c not in used), None)
                if pick is None:
                    break
                match.append(pick)
                used.add(pick)
            if len(match) == g.s:
                assert matching_k(g, match) >= k_sys


def test_heuristic_upper_bounds_exact():
    rng = random.Random(707)
    for _ in range(80):
        g = random_graph(rng, *random_dims(rng, 5, 8, s_min=2), density=0.6)
        try:
            k_exact, _, _ = k_sys_search(g, exact=True)
        except NoMatchingError:
            continue
        k_heur, match, exact = k_sys_search(g, exact=False)
        assert exact is False
        assert k_heur >= k_exact
        assert matching_k(g, match) == k_heur


def test_dimension_chain_on_random_reports():
    rng = random.Random(808)
    for _ in range(150):
        g = random_graph(rng, *random_dims(rng, 5, 8),
                         density=rng.choice([0.4, 0.6, 0.9]))
        try:
            rep = bounds_report(g)
        except NoMatchingError:
            continue
        assert g.s <= rep.k_min <= rep.k_sys <= g.n
        assert rep.d_sys <= rep.d_min
        assert rep.d_min <= g.n - g.s + 1  # Singleton via the full subset
