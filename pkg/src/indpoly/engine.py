"""Exact independence polynomial computation.

Two routes exist on purpose.  ``independence_polynomial`` is the fast path:
the classic vertex recursion I(G) = I(G-v) + x*I(G-N[v]) over induced-subgraph
masks, with connected components multiplied separately, edgeless remainders
short-circuited to (1+x)^k, and results memoized by mask.
``brute_force_independence_polynomial`` enumerates every independent set with
no sharing at all, so it can certify the fast path.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .graphs import Graph, GraphError, _bits, _max_degree_vertex, mask_components
from .polynomials import ONE, ONE_PLUS_X, IntPoly

BRUTE_FORCE_CAP = 24


@lru_cache(maxsize=None)
def _one_plus_x_pow(k: int) -> IntPoly:
    return ONE_PLUS_X ** k


def independence_polynomial(g: Graph) -> IntPoly:
    """Exact I(G;x) for graphs up to 64 vertices."""
    adj = g.adj
    closed = tuple(adj[v] | (1 << v) for v in range(g.n))
    memo: dict[int, IntPoly] = {}

    def solve(mask: int) -> IntPoly:
        if mask == 0:
            return ONE
        hit = memo.get(mask)
        if hit is not None:
            return hit
        if not any(adj[v] & mask for v in _bits(mask)):
            result = _one_plus_x_pow(mask.bit_count())
        else:
            comps = mask_components(adj, mask)
            if len(comps) > 1:
                result = ONE
                for comp in comps:
                    result = result * solve(comp)
            else:
                v = _max_degree_vertex(adj, mask)
                result = solve(mask & ~(1 << v)) + solve(mask & ~closed[v]).shift(1)
        memo[mask] = result
        return result

    return solve(g.full_mask)


def brute_force_independence_polynomial(g: Graph) -> IntPoly:
    """Tally independent sets by cardinality via plain backtracking.

    Deliberately free of memoization and component splitting so it stays an
    independent oracle; capped at 24 vertices because it enumerates.
    """
    if g.n > BRUTE_FORCE_CAP:
        raise GraphError(f"brute force capped at {BRUTE_FORCE_CAP} vertices")
    adj = g.adj
    counts = [0] * (g.n + 1)

    def extend(candidates: int, size: int) -> None:
        counts[size] += 1
        rest = candidates
        while rest:
            low = rest & -rest
            rest ^= low
            v = low.bit_length() - 1
            extend(candidates & ~((low << 1) - 1) & ~adj[v], size + 1)

    extend(g.full_mask, 0)
    return IntPoly(counts)


def coefficient(g: Graph, k: int) -> int:
    """Number of independent sets of size k (0 beyond alpha).

    The k=1 and k=2 values are cross-checked against their closed forms
    |V| and C(|V|,2) - |E|.
    """
    if k < 0:
        raise ValueError("negative cardinality")
    value = independence_polynomial(g).coefficient(k)
    if k == 1 and value != g.n:
        raise AssertionError("i_1 disagrees with the vertex count")
    if k == 2 and value != comb(g.n, 2) - g.edge_count():
        raise AssertionError("i_2 disagrees with C(n,2) - m")
    return value
