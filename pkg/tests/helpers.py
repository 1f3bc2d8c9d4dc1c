"""Shared test utilities: random graphs, exact isomorphism testing, and
exhaustive isomorphism-free graph corpora for oracle-equivalence checks.

The corpus builder extends each (n-1)-vertex representative by one vertex with
every possible neighborhood and deduplicates with invariant buckets plus a
backtracking isomorphism test, so it never needs canonical labeling.
"""

from __future__ import annotations

import random
from itertools import product

from indpoly.graphs import Graph, _bits

# Globally interned refinement colors so colors are comparable across graphs.
_INTERN: dict = {}
_COLOR_CACHE: dict[Graph, tuple[int, ...]] = {}
_WL_ROUNDS = 3


def _intern(key) -> int:
    value = _INTERN.get(key)
    if value is None:
        value = len(_INTERN)
        _INTERN[key] = value
    return value


def wl_colors(g: Graph) -> tuple[int, ...]:
    """Iterated neighborhood refinement colors (isomorphism-invariant)."""
    cached = _COLOR_CACHE.get(g)
    if cached is not None:
        return cached
    colors = [_intern(("deg", g.adj[v].bit_count())) for v in range(g.n)]
    for _ in range(_WL_ROUNDS):
        colors = [
            _intern((colors[v], tuple(sorted(colors[w] for w in _bits(g.adj[v])))))
            for v in range(g.n)
        ]
    result = tuple(colors)
    _COLOR_CACHE[g] = result
    return result


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test by color-pruned backtracking."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False
    c1, c2 = wl_colors(g1), wl_colors(g2)
    if sorted(c1) != sorted(c2):
        return False
    n = g1.n
    # map rare colors first, high degree breaking ties
    order = sorted(
        range(n), key=lambda v: (sorted(c1).count(c1[v]), -g1.degree(v), v)
    )
    candidates = [[u for u in range(n) if c2[u] == c1[v]] for v in range(n)]
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for u in candidates[v]:
            if used[u]:
                continue
            ok = True
            for w in order[:i]:
                if g1.has_edge(v, w) != g2.has_edge(u, mapping[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = u
                used[u] = True
                if extend(i + 1):
                    return True
                used[u] = False
                mapping[v] = -1
        return False

    return extend(0)


def iso_dedup(graphs) -> list[Graph]:
    """Representatives of the isomorphism classes present in the input."""
    buckets: dict[tuple, list[Graph]] = {}
    reps: list[Graph] = []
    for g in graphs:
        key = (g.n, g.edge_count(), tuple(sorted(wl_colors(g))))
        bucket = buckets.setdefault(key, [])
        if not any(are_isomorphic(g, rep) for rep in bucket):
            bucket.append(g)
            reps.append(g)
    return reps


def graph_corpus(max_n: int) -> dict[int, list[Graph]]:
    """All graphs on 1..max_n vertices up to isomorphism."""
    levels: dict[int, list[Graph]] = {1: [Graph.from_edges(1, [])]}
    for n in range(2, max_n + 1):
        buckets: dict[tuple, list[Graph]] = {}
        out: list[Graph] = []
        new_bit = 1 << (n - 1)
        for parent in levels[n - 1]:
            for subset in range(1 << (n - 1)):
                adj = [
                    row | (new_bit if subset >> v & 1 else 0)
                    for v, row in enumerate(parent.adj)
                ]
                adj.append(subset)
                g = Graph(n, tuple(adj))
                key = (g.edge_count(), tuple(sorted(wl_colors(g))))
                bucket = buckets.setdefault(key, [])
                if not any(are_isomorphic(g, rep) for rep in bucket):
                    bucket.append(g)
                    out.append(g)
        levels[n] = out
    return levels


# Isomorphism class counts for simple graphs on 1..8 vertices.
KNOWN_GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}

# Non-isomorphic tree counts on 1..14 vertices.
KNOWN_TREE_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23,
    9: 47, 10: 106, 11: 235, 12: 551, 13: 1301, 14: 3159,
}


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def all_prufer_trees(n: int):
    """All n^(n-2) labeled trees, by decoding every sequence."""
    from indpoly.graphs import prufer_decode

    for seq in product(range(n), repeat=n - 2):
        yield prufer_decode(seq, n)


def count_trees_by_pairwise_iso(n: int) -> int:
    """Brute-force dedup of all labeled trees via isomorphism testing."""
    if n == 1:
        return 1
    return len(iso_dedup(all_prufer_trees(n)))


def integer_partitions(total: int):
    """All partitions of total into positive parts, nonincreasing order."""

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            yield prefix
            return
        for part in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - part, part, prefix + (part,))

    yield from rec(total, total, ())
