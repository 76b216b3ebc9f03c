"""Distance bounds derived from the constraint graph.

Two quantities drive everything downstream:

* ``d_min``: over every nonempty row subset, the neighborhood size minus the
  subset size plus one, minimized.  No code valid for the graph (with a full
  q^s message space) can beat it.
* ``k_sys``: over every row-covering matching, the maximum number of zeros in
  any row of the matched adjacency matrix plus one, minimized.  It caps what
  a systematic linear code can achieve at distance ``d_sys = n - k_sys + 1``.

Both searches are exponential by nature and carry size guards; ``k_sys``
additionally has a greedy fallback that returns an upper bound flagged as
inexact.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardExceededError
from .graph import (ConstraintGraph, SUBSET_GUARD, find_matching,
                    matched_adjacency, row_zero_stats, subset_union_masks)

MATCHING_GUARD = 12


@dataclass
class BoundsReport:
    d_min: int
    k_min: int
    witness_subset: tuple[int, ...]
    d_sys: int
    k_sys: int
    witness_matching: tuple[int, ...]
    search_exact: bool
    a: int
    r_m: int
    thm2_feasible: bool

    def to_dict(self) -> dict:
        return {
            "d_min": self.d_min,
            "k_min": self.k_min,
            "d_sys": self.d_sys,
            "k_sys": self.k_sys,
            "exact": self.search_exact,
            "witness_subset": list(self.witness_subset),
            "witness_matching": list(self.witness_matching),
            "a": self.a,
            "r_M": self.r_m,
            "thm2_feasible": self.thm2_feasible,
        }


def d_min_bound(g: ConstraintGraph, guard: int = SUBSET_GUARD):
    """(d_min, witness subset), the witness being the lexicographically
    smallest minimizer.  Exhaustive over all nonempty row subsets."""
    if g.s > guard:
        raise GuardExceededError(
            "bound enumerates 2^s subsets; s=%d exceeds the guard %d" % (g.s, guard))
    unions = subset_union_masks(g)
    best_val = None
    best_subset = None
    for m in range(1, 1 << g.s):
        val = unions[m].bit_count() - m.bit_count() + 1
        if best_val is None or val < best_val:
            best_val = val
            best_subset = tuple(i for i in range(g.s) if m >> i & 1)
        elif val == best_val:
            subset = tuple(i for i in range(g.s) if m >> i & 1)
            if subset < best_subset:
                best_subset = subset
    return best_val, best_subset


def matching_k(g: ConstraintGraph, matching) -> int:
    """k value (max row zeros + 1) of the matched adjacency for a matching."""
    return row_zero_stats(matched_adjacency(g, matching))[0] + 1


def _k_sys_exact(g: ConstraintGraph, k_floor: int):
    adj = g.adjacency
    s, n = g.s, g.n
    supports = [g.support(i) for i in range(s)]
    cur_zeros = [n - len(supports[i]) for i in range(s)]
    used = [False] * n
    assign = [0] * s
    best: list = [None, None]  # k, matching

    def dfs(i: int):
        if best[0] == k_floor:
            return
        if i == s:
            k_here = max(cur_zeros) + 1
            if best[0] is None or k_here < best[0]:
                best[0] = k_here
                best[1] = tuple(assign)
            return
        for c in supports[i]:
            if used[c]:
                continue
            touched = [r for r in range(s) if r != i and adj[r][c]]
            for r in touched:
                cur_zeros[r] += 1
            # zeros only grow as the matching extends, so this is a lower bound
            if best[0] is None or max(cur_zeros) + 1 < best[0]:
                used[c] = True
                assign[i] = c
                dfs(i + 1)
                used[c] = False
            for r in touched:
                cur_zeros[r] -= 1

    dfs(0)
    return best[0], best[1]


def _k_sys_heuristic(g: ConstraintGraph, start):
    match = list(start)
    best_k = matching_k(g, match)
    taken = set(match)
    improved = True
    while improved:
        improved = False
        for i in range(g.s):
            for c in g.support(i):
                if c == match[i] or c in taken:
                    continue
                trial = list(match)
                trial[i] = c
                k = matching_k(g, trial)
                if k < best_k:
                    taken.discard(match[i])
                    taken.add(c)
                    match, best_k, improved = trial, k, True
                    break
            if improved:
                break
        if improved:
            continue
        for i in range(g.s):
            for r in range(i + 1, g.s):
                ci, cr = match[i], match[r]
                if g.adjacency[i][cr] != 1 or g.adjacency[r][ci] != 1:
                    continue
                trial = list(match)
                trial[i], trial[r] = cr, ci
                k = matching_k(g, trial)
                if k < best_k:
                    match, best_k, improved = trial, k, True
                    break
            if improved:
                break
    return best_k, tuple(match)


def k_sys_search(g: ConstraintGraph, exact: bool = True,
                 guard: int = MATCHING_GUARD,
                 subset_guard: int = SUBSET_GUARD):
    """(k_sys, witness matching, exact flag).

    Exact mode enumerates row-covering matchings depth-first, pruning any
    partial assignment whose zero counts already rule out an improvement and
    stopping early once the k_min floor is reached.  Heuristic mode improves
    a greedy matching by single reassignments and pairwise swaps; its result
    is only an upper bound.
    """
    start = find_matching(g)  # raises NoMatchingError with a Hall witness
    if not exact:
        k, match = _k_sys_heuristic(g, start)
        return k, match, False
    if g.s > guard:
        raise GuardExceededError(
            "exact search enumerates matchings; s=%d exceeds the guard %d" % (g.s, guard))
    k_floor = g.n - d_min_bound(g, subset_guard)[0] + 1
    k, match = _k_sys_exact(g, k_floor)
    return k, match, True


def fully_connected_columns(g: ConstraintGraph):
    """Columns adjacent to every message row."""
    return [j for j in range(g.n) if all(r[j] for r in g.adjacency)]


def bounds_report(g: ConstraintGraph, subset_guard: int = SUBSET_GUARD,
                  matching_guard: int = MATCHING_GUARD) -> BoundsReport:
    """Aggregate report; falls back to the heuristic k_sys above the guard."""
    d_min, witness_subset = d_min_bound(g, subset_guard)
    k_min = g.n - d_min + 1
    if g.s <= matching_guard:
        k_sys, witness_matching, exact = k_sys_search(g, True, matching_guard, subset_guard)
    else:
        k_sys, witness_matching, exact = k_sys_search(g, False)
    a = len(fully_connected_columns(g))
    r_m = g.n - a
    return BoundsReport(
        d_min=d_min,
        k_min=k_min,
        witness_subset=witness_subset,
        d_sys=g.n - k_sys + 1,
        k_sys=k_sys,
        witness_matching=witness_matching,
        search_exact=exact,
        a=a,
        r_m=r_m,
        thm2_feasible=k_min >= r_m,
    )
