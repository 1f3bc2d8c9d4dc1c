"""Mechanized checkers for composition conditions, rooted-tree products, the
pendant-ladder family, and the exhaustive small-tree scan.

Condition checkers take raw coefficient data so hypotheses can be fuzzed
independently of graph realizability; graph-level wrappers feed them real
instances.  A checker returning ``holds=False`` makes no claim: the conditions
are sufficient, not necessary.
"""

from __future__ import annotations

import base64
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import networkx as nx

from .engine import independence_polynomial
from .graphs import (
    FamilySpec,
    Graph,
    GraphError,
    alpha,
    build_family,
    delete_closed_neighborhood,
    delete_vertex,
    is_well_covered,
    tree_canonical_code,
)
from .polynomials import (
    ONE_PLUS_X,
    X,
    IntPoly,
    PropertyReport,
    coeffs_as_strings,
    is_log_concave,
    is_symmetric,
    is_unimodal,
    property_report,
    real_rooted,
)
from .products import lex_poly, rooted_product


class HypothesisViolation(GraphError):
    """An instance fed to a checker does not satisfy the checker's hypothesis."""


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of a sufficient-condition check on one instance.

    ``conclusion_checked`` records whether the conclusion was independently
    verified on the instance (None when nobody looked).
    """

    condition_name: str
    holds: bool
    first_failing_index: int | None = None
    conclusion_checked: bool | None = None


@dataclass(frozen=True)
class ScanResult:
    """One deduplicated tree from a corpus scan."""

    canonical_code: bytes
    n: int
    polynomial: IntPoly
    report: PropertyReport


# ---------------------------------------------------------------------------
# Composition (lexicographic substitution) conditions
# ---------------------------------------------------------------------------


def _check_positive(a: Sequence[int]) -> None:
    if any(v <= 0 for v in a):
        raise ValueError("coefficient list must be positive")


def composition_log_concavity_condition(
    a: Sequence[int], b1: int, b2: int
) -> ConditionVerdict:
    """(a_i^2 - a_{i-1} a_{i+1}) b1^2 >= a_i a_{i-1} b2 for 1 <= i <= n.

    Together with log-concavity of both operands this forces the composed
    polynomial to be log-concave; a_{n+1} is treated as 0.
    """
    a = list(a)
    _check_positive(a)
    if b1 <= 0 or b2 < 0:
        raise ValueError("b1 must be positive and b2 nonnegative")
    n = len(a) - 1
    for i in range(1, n + 1):
        nxt = a[i + 1] if i + 1 <= n else 0
        if (a[i] * a[i] - a[i - 1] * nxt) * b1 * b1 < a[i] * a[i - 1] * b2:
            return ConditionVerdict("composition-log-concavity", False, i)
    return ConditionVerdict("composition-log-concavity", True)


def composition_unimodality_condition(a: Sequence[int], b1: int) -> ConditionVerdict:
    """a_{i-1} <= b1 * a_i for 1 <= i <= n, forcing a unimodal composition."""
    a = list(a)
    _check_positive(a)
    if b1 <= 0:
        raise ValueError("b1 must be positive")
    for i in range(1, len(a)):
        if a[i - 1] > b1 * a[i]:
            return ConditionVerdict("composition-unimodality", False, i)
    return ConditionVerdict("composition-unimodality", True)


def increasing_coefficients_case(a: Sequence[int], b1: int) -> bool:
    """The derived special case: a nondecreasing and b1 >= 1 already satisfy
    the unimodality condition."""
    a = list(a)
    return b1 >= 1 and all(a[i - 1] <= a[i] for i in range(1, len(a)))


def well_covered_composition_condition(g1: Graph, g2: Graph) -> ConditionVerdict:
    """Both graphs well-covered, I(g2) log-concave, |V(g2)| >= alpha(g1).

    The verified conclusion is unimodality of the composed polynomial.
    """
    i1 = independence_polynomial(g1)
    i2 = independence_polynomial(g2)
    holds = (
        is_well_covered(g1)
        and is_well_covered(g2)
        and is_log_concave(i2)[0]
        and g2.n >= alpha(g1)
    )
    conclusion = is_unimodal(lex_poly(i1, i2))[0]
    return ConditionVerdict(
        "well-covered-composition", holds, conclusion_checked=conclusion
    )


def well_covered_coefficient_bound(g: Graph) -> bool:
    """i_{k-1}(G) <= k * i_k(G) for every 1 <= k <= alpha(G).

    Only meaningful for well-covered graphs; raises if the precondition fails.
    """
    if not is_well_covered(g):
        raise HypothesisViolation("coefficient bound requires a well-covered graph")
    coeffs = independence_polynomial(g).coeffs
    return all(coeffs[k - 1] <= k * coeffs[k] for k in range(1, len(coeffs)))


def binomial_basis_unimodality_condition(d: Sequence[int], strict: bool = False) -> bool:
    """Whether the nonzero entries of d are increasing (weakly by default).

    This is the hypothesis under which sum d_i (1+x)^i is unimodal; the
    strict flag reports the strictly-increasing variant separately.
    """
    d = list(d)
    if any(v < 0 for v in d):
        raise ValueError("d must be nonnegative")
    nz = [v for v in d if v != 0]
    if strict:
        return all(nz[i - 1] < nz[i] for i in range(1, len(nz)))
    return all(nz[i - 1] <= nz[i] for i in range(1, len(nz)))


# ---------------------------------------------------------------------------
# Rooted products with the two reference trees
# ---------------------------------------------------------------------------

_TREE_FAMILY = {"T": "tree_t", "T1": "tree_t1"}
# roots whose rooted product must stay real-rooted; the rest are log-concave
_REAL_ROOTED_ROOTS = {("T", 1), ("T", 2), ("T", 3)}


def tree_factor_identities() -> dict[str, bool]:
    """Exact identities for the 5-vertex tree pinned down by its factors.

    These gate every rooted-tree-product test: if the adjacency reading were
    wrong, the four polynomial equalities below would fail.
    """
    t = build_family(FamilySpec("tree_t"))
    lhs = {
        "t_minus_root1": independence_polynomial(delete_vertex(t, 0)),
        "t_minus_nbhd1": independence_polynomial(delete_closed_neighborhood(t, 0)),
        "t_minus_root4": independence_polynomial(delete_vertex(t, 3)),
        "t_minus_nbhd4": independence_polynomial(delete_closed_neighborhood(t, 3)),
    }
    rhs = {
        "t_minus_root1": ONE_PLUS_X * IntPoly((1, 3)),
        "t_minus_nbhd1": ONE_PLUS_X * IntPoly((1, 2)),
        "t_minus_root4": ONE_PLUS_X ** 3 + X,
        "t_minus_nbhd4": ONE_PLUS_X ** 2 + X,
    }
    return {key: lhs[key] == rhs[key] for key in lhs}


def rooted_tree_product_check(g: Graph, tree: str, root: int) -> ConditionVerdict:
    """Check the promised conclusion for g composed with tree T or T1.

    Roots are the 1..4 labels on the drawing; for T the first three roots
    promise real-rootedness, everything else promises log-concavity.  Raises
    when I(g) is not real-rooted, which is the hypothesis.
    """
    tree = tree.upper().replace("₁", "1")
    if tree not in _TREE_FAMILY:
        raise ValueError("tree must be 'T' or 'T1'")
    if not (1 <= root <= 4):
        raise ValueError("root label must be in 1..4")
    if not real_rooted(independence_polynomial(g)):
        raise HypothesisViolation("hypothesis failure: I(g) is not real-rooted")
    h = build_family(FamilySpec(_TREE_FAMILY[tree]))
    poly = independence_polynomial(rooted_product(g, h, root - 1))
    if (tree, root) in _REAL_ROOTED_ROOTS:
        kind = "real-rooted"
        conclusion = real_rooted(poly)
    else:
        kind = "log-concave"
        conclusion = is_log_concave(poly)[0]
    return ConditionVerdict(
        f"rooted-tree-product:{tree}:root{root}:{kind}",
        True,
        conclusion_checked=conclusion,
    )


def rooted_product_factor_inequalities(r) -> tuple[bool, bool]:
    """The two factor facts behind the rooted-tree-product proof, at one r > 0.

    First: the quadratic 1 + (3+2r)x + 2rx^2 has positive discriminant.
    Second: the cubic (r+1)x^3 + 3(1+r)x^2 + (3+r)x + 1 is log-concave, via
    the cleared inequalities 9(1+r)^2 > (r+1)(3+r) and (3+r)^2 > 3(1+r).
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("r must be positive")
    disc_positive = (3 + 2 * r) ** 2 - 8 * r > 0
    cubic_log_concave = (
        9 * (1 + r) ** 2 > (r + 1) * (3 + r) and (3 + r) ** 2 > 3 * (1 + r)
    )
    return disc_positive, cubic_log_concave


# ---------------------------------------------------------------------------
# The pendant-ladder family G_n
# ---------------------------------------------------------------------------


def pendant_ladder_recurrence(n: int) -> IntPoly:
    """I(G_n;x) from the recurrence (x+1) I(G_{n-1}) + x I(G_{n-2}).

    Bases: I(G_{-1}) = 1 and I(G_0) = 1 + x.
    """
    if n < -1:
        raise ValueError("index must be >= -1")
    prev, cur = IntPoly((1,)), ONE_PLUS_X
    if n == -1:
        return prev
    for _ in range(n):
        prev, cur = cur, ONE_PLUS_X * cur + prev.shift(1)
    return cur


def _trig_product_expansion(n: int) -> list[float]:
    """Float expansion of (1+x)^{delta_n} * prod[(1+x)^2 + 4x cos^2(s pi/(n+2))]."""
    coeffs = [1.0]
    if n % 2 == 0:
        coeffs = [1.0, 1.0]
    for s in range(1, math.ceil(n / 2) + 1):
        c = 4.0 * math.cos(s * math.pi / (n + 2)) ** 2
        factor = [1.0, 2.0 + c, 1.0]
        out = [0.0] * (len(coeffs) + 2)
        for i, a in enumerate(coeffs):
            for j, b in enumerate(factor):
                out[i + j] += a * b
        coeffs = out
    return coeffs


def pendant_ladder_trig_check(n: int, tol: float) -> bool:
    """Compare the trigonometric product expansion against the recurrence,
    coefficient by coefficient, within relative tolerance tol."""
    if n < 0:
        raise ValueError("index must be >= 0")
    exact = pendant_ladder_recurrence(n).coeffs
    approx = _trig_product_expansion(n)
    if len(approx) != len(exact):
        return False
    return all(
        abs(a - e) <= tol * max(1, abs(e)) for a, e in zip(approx, exact)
    )


def pendant_ladder_family_check(n_max: int) -> list[dict]:
    """Symmetry, real-rootedness and degree n+1 for every 0 <= n <= n_max."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    rows = []
    for n in range(n_max + 1):
        poly = pendant_ladder_recurrence(n)
        sym = is_symmetric(poly)
        rr = real_rooted(poly)
        degree_ok = poly.degree == n + 1
        rows.append(
            {
                "n": n,
                "symmetric": sym,
                "real_rooted": rr,
                "degree": poly.degree,
                "degree_ok": degree_ok,
                "ok": sym and rr and degree_ok,
            }
        )
    return rows


# ---------------------------------------------------------------------------
# Tree scan
# ---------------------------------------------------------------------------

TREE_SCAN_MAX = 14


def distinct_trees(n: int) -> list[Graph]:
    """All non-isomorphic trees on n vertices, sorted by canonical code."""
    if n == 1:
        return [Graph.from_edges(1, [])]
    trees = []
    for t in nx.nonisomorphic_trees(n):
        trees.append(Graph.from_edges(n, t.edges()))
    coded = sorted((tree_canonical_code(g), g) for g in trees)
    codes = [c for c, _ in coded]
    if len(set(codes)) != len(codes):
        raise AssertionError("canonical code collision in tree enumeration")
    return [g for _, g in coded]


def tree_scan(n_min: int, n_max: int) -> Iterator[ScanResult]:
    """Scan all non-isomorphic trees with n_min <= n <= n_max.

    Results stream in (n, canonical_code) order so output is deterministic
    and long scans can be restarted at the next n.
    """
    if not (2 <= n_min <= n_max <= TREE_SCAN_MAX):
        raise ValueError(f"bounds must satisfy 2 <= n_min <= n_max <= {TREE_SCAN_MAX}")
    for n in range(n_min, n_max + 1):
        for g in distinct_trees(n):
            poly = independence_polynomial(g)
            yield ScanResult(tree_canonical_code(g), n, poly, property_report(poly))


def scan_result_to_json(result: ScanResult) -> str:
    """One JSON object per line; coefficients as decimal strings."""
    return json.dumps(
        {
            "n": result.n,
            "code": base64.b64encode(result.canonical_code).decode("ascii"),
            "coeffs": coeffs_as_strings(result.polynomial),
            "unimodal": result.report.unimodal,
            "log_concave": result.report.log_concave,
            "symmetric": result.report.symmetric,
            "real_rooted": result.report.real_rooted,
        },
        sort_keys=True,
    )


# ---------------------------------------------------------------------------
# Randomized soundness harnesses
# ---------------------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def composition_soundness_scan(
    kind: str,
    samples: int = 500,
    seed: int = 0,
    max_attempts: int = 200_000,
) -> dict:
    """Sample random graph pairs until `samples` satisfy the hypothesis, and
    verify the promised conclusion on each.

    kind "log_concave": both polynomials log-concave plus the cleared
    inequality imply a log-concave composition.  kind "unimodal": inner
    polynomial log-concave plus the ratio condition imply a unimodal
    composition.  Returns counts and the (expectedly empty) failure list.
    """
    if kind not in ("log_concave", "unimodal"):
        raise ValueError("kind must be 'log_concave' or 'unimodal'")
    rng = random.Random(seed)
    accepted = 0
    attempts = 0
    failures: list[dict] = []
    while accepted < samples:
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError("hypothesis sampling did not converge")
        g1 = random_graph(rng, rng.randint(2, 6), rng.uniform(0.2, 0.9))
        g2 = random_graph(rng, rng.randint(2, 7), rng.uniform(0.2, 0.9))
        i1 = independence_polynomial(g1)
        i2 = independence_polynomial(g2)
        b1 = i2.coefficient(1)
        b2 = i2.coefficient(2)
        if not is_log_concave(i2)[0]:
            continue
        if kind == "log_concave":
            if not is_log_concave(i1)[0]:
                continue
            if not composition_log_concavity_condition(list(i1.coeffs), b1, b2).holds:
                continue
            ok = is_log_concave(lex_poly(i1, i2))[0]
        else:
            if not composition_unimodality_condition(list(i1.coeffs), b1).holds:
                continue
            ok = is_unimodal(lex_poly(i1, i2))[0]
        accepted += 1
        if not ok:
            failures.append(
                {
                    "g1_coeffs": coeffs_as_strings(i1),
                    "g2_coeffs": coeffs_as_strings(i2),
                }
            )
    return {
        "kind": kind,
        "samples": accepted,
        "attempts": attempts,
        "failures": failures,
    }
