"""Bipartite encoding-constraint graphs.

The graph has s message vertices (rows) and n code vertices (columns),
stored as an s x n binary adjacency matrix: entry (i, j) is 1 iff code
symbol j may depend on message symbol i.  Rows and columns with no edges
are rejected: an unseen message symbol cannot be encoded, and a code symbol
depending on nothing has no defined semantics here.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import GuardExceededError, NoMatchingError

SUBSET_GUARD = 20


@dataclass(frozen=True)
class ConstraintGraph:
    """Validated s x n binary adjacency matrix, s <= n."""

    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = self.adjacency
        if not rows or not rows[0]:
            raise ValueError("adjacency matrix must be non-empty")
        n = len(rows[0])
        for r in rows:
            if len(r) != n:
                raise ValueError("ragged adjacency rows")
            if any(v not in (0, 1) for v in r):
                raise ValueError("adjacency entries must be 0 or 1")
        s = len(rows)
        if s > n:
            raise ValueError("more message symbols than code symbols (s=%d > n=%d)" % (s, n))
        for i, r in enumerate(rows):
            if 1 not in r:
                raise ValueError("message row %d has no edges" % i)
        for j in range(n):
            if all(r[j] == 0 for r in rows):
                raise ValueError("code column %d has no edges" % j)
        masks = tuple(sum(bit << j for j, bit in enumerate(r)) for r in rows)
        object.__setattr__(self, "_masks", masks)

    @property
    def s(self) -> int:
        return len(self.adjacency)

    @property
    def n(self) -> int:
        return len(self.adjacency[0])

    def row_mask(self, i: int) -> int:
        return self._masks[i]

    def support(self, i: int) -> tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.adjacency[i]) if v)

    @classmethod
    def from_rows(cls, rows) -> "ConstraintGraph":
        return cls(tuple(tuple(int(v) for v in r) for r in rows))

    @classmethod
    def from_dict(cls, d: dict) -> "ConstraintGraph":
        g = cls.from_rows(d["adjacency"])
        if "s" in d and d["s"] != g.s:
            raise ValueError("declared s=%r does not match %d adjacency rows" % (d["s"], g.s))
        if "n" in d and d["n"] != g.n:
            raise ValueError("declared n=%r does not match %d adjacency columns" % (d["n"], g.n))
        return g

    def to_dict(self) -> dict:
        return {"s": self.s, "n": self.n,
                "adjacency": [list(r) for r in self.adjacency]}

    @classmethod
    def load(cls, path) -> "ConstraintGraph":
        with open(path, "r", encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


@dataclass(frozen=True)
class MatchedAdjacency:
    """Adjacency matrix after deleting non-matching edges into matched columns."""

    rows: tuple[tuple[int, ...], ...]
    matching: tuple[int, ...]


def load_graph(rows) -> ConstraintGraph:
    """Validate a row-list description into a ConstraintGraph."""
    return ConstraintGraph.from_rows(rows)


def neighborhood_size(g: ConstraintGraph, subset) -> int:
    """Number of code symbols adjacent to any of the given message rows."""
    mask = 0
    for i in subset:
        if not 0 <= i < g.s:
            raise IndexError("row index %r out of range" % (i,))
        mask |= g.row_mask(i)
    return mask.bit_count()


def subset_union_masks(g: ConstraintGraph):
    """Neighborhood bitmask for every subset of rows, indexed by subset bitmask."""
    s = g.s
    table = [0] * (1 << s)
    for m in range(1, 1 << s):
        low = m & -m
        table[m] = table[m ^ low] | g.row_mask(low.bit_length() - 1)
    return table


def hall_check(g: ConstraintGraph, guard: int = SUBSET_GUARD):
    """(True, None) if every row subset has a neighborhood at least as large,
    else (False, lexicographically smallest violating subset)."""
    if g.s > guard:
        raise GuardExceededError(
            "Hall check enumerates 2^s subsets; s=%d exceeds the guard %d" % (g.s, guard))
    unions = subset_union_masks(g)
    worst = None
    for m in range(1, 1 << g.s):
        if m.bit_count() > unions[m].bit_count():
            subset = tuple(i for i in range(g.s) if m >> i & 1)
            if worst is None or subset < worst:
                worst = subset
    return worst is None, worst


def _augment(g: ConstraintGraph, i: int, owner: dict, match: list, seen: set) -> bool:
    for c in g.support(i):
        if c in seen:
            continue
        seen.add(c)
        if c not in owner or _augment(g, owner[c], owner, match, seen):
            owner[c] = i
            match[i] = c
            return True
    return False


def find_matching(g: ConstraintGraph) -> tuple[int, ...]:
    """Matching covering every row, scanning rows in order and preferring the
    smallest admissible column; raises NoMatchingError with a Hall witness."""
    owner: dict[int, int] = {}
    match: list = [None] * g.s
    for i in range(g.s):
        for c in g.support(i):
            if c not in owner:
                owner[c] = i
                match[i] = c
                break
    for i in range(g.s):
        if match[i] is not None:
            continue
        seen: set = set()
        if not _augment(g, i, owner, match, seen):
            witness = tuple(sorted({i} | {owner[c] for c in seen}))
            raise NoMatchingError(
                "rows %s share only %d neighboring columns" % (list(witness), len(seen)),
                witness=witness)
    return tuple(match)


def check_matching(g: ConstraintGraph, matching) -> tuple[int, ...]:
    """Validate a row -> column assignment as a covering matching of g."""
    matching = tuple(matching)
    if len(matching) != g.s:
        raise ValueError("matching must assign all %d rows" % g.s)
    if len(set(matching)) != g.s:
        raise ValueError("matching columns are not distinct")
    for i, c in enumerate(matching):
        if not 0 <= c < g.n or g.adjacency[i][c] != 1:
            raise ValueError("matched pair (%d, %r) is not an edge" % (i, c))
    return matching


def matched_adjacency(g: ConstraintGraph, matching) -> MatchedAdjacency:
    """Zero out every matched column except at its own matched row."""
    matching = check_matching(g, matching)
    rows = [list(r) for r in g.adjacency]
    for i, c in enumerate(matching):
        for r in range(g.s):
            if r != i:
                rows[r][c] = 0
    return MatchedAdjacency(tuple(tuple(r) for r in rows), matching)


def _rows_of(obj):
    if isinstance(obj, ConstraintGraph):
        return obj.adjacency
    if isinstance(obj, MatchedAdjacency):
        return obj.rows
    return obj


def row_zero_stats(obj):
    """(max zeros in any row, per-row zero counts) of an adjacency-like matrix."""
    rows = _rows_of(obj)
    counts = [len(r) - sum(r) for r in rows]
    return max(counts), counts
