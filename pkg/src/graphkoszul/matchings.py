"""Partial matchings and the combinatorial description of the dual algebras.

For a matching W the allowed vertices are those off W that close no triangle
{m, a, b} with m > a > b over a matching edge (a, b).  The dual Hilbert
series is then sum_p z^p sum_{W in L_p} (1 + z)^{r_W}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .freealg import NcPolynomial, Variable, edge, vertex
from .graphs import Graph, has_overlapping_triangles, is_triangle_free
from .groebner import DegreeBoundError, TruncatedGB, normal_form, normal_words
from .series import IntSeries

Matching = tuple  # tuple of normalized edges, sorted descending


class ClassViolation(ValueError):
    """The graph lies outside the class a formula is proved for."""


def partial_matchings(g: Graph) -> dict[int, list[Matching]]:
    """All sets of pairwise vertex-disjoint edges, grouped by size (empty one included)."""
    groups: dict[int, list[Matching]] = {0: [()]}
    edges = g.sorted_edges
    for p in range(1, g.n // 2 + 1):
        found = []
        for combo in itertools.combinations(edges, p):
            used = [v for e in combo for v in e]
            if len(set(used)) == 2 * p:
                found.append(tuple(sorted(combo, reverse=True)))
        if not found:
            break
        groups[p] = sorted(found)
    return groups


def matching_counts(g: Graph) -> list[int]:
    groups = partial_matchings(g)
    return [len(groups.get(p, [])) for p in range(max(groups) + 1)]


def allowed_vertices(g: Graph, w: Matching) -> frozenset[int]:
    used = {v for e in w for v in e}
    allowed = set()
    for m in g.vertices:
        if m in used:
            continue
        if all(m < a or not g.has_edge(m, a) or not g.has_edge(m, b) for a, b in w):
            allowed.add(m)
    return frozenset(allowed)


def _require_class(g: Graph) -> None:
    if has_overlapping_triangles(g):
        raise ClassViolation(f"graph {g.describe()} contains two triangles with a common vertex")


def hilbert_formula(g: Graph, force: bool = False) -> IntSeries:
    """Dual Hilbert polynomial from matchings, coefficients of z^0..z^n.

    ``force`` evaluates the sum outside the overlapping-triangle-free class,
    where it carries no guarantee.
    """
    if not force:
        _require_class(g)
    coeffs = [0] * (g.n + 1)
    for p, group in partial_matchings(g).items():
        for w in group:
            r = len(allowed_vertices(g, w))
            for t in range(r + 1):
                if p + t <= g.n:
                    coeffs[p + t] += comb(r, t)
    return IntSeries(coeffs)


def triangle_free_formula(g: Graph) -> IntSeries:
    """sum_p l_p z^p (1 + z)^(n - 2p) for triangle-free graphs."""
    if not is_triangle_free(g):
        raise ClassViolation(f"graph {g.describe()} has a triangle")
    coeffs = [0] * (g.n + 1)
    for p, lp in enumerate(matching_counts(g)):
        for t in range(g.n - 2 * p + 1):
            coeffs[p + t] += lp * comb(g.n - 2 * p, t)
    return IntSeries(coeffs)


def qdual_basis(g: Graph, d: int) -> list[tuple[Variable, ...]]:
    """Monomials e_{i1 i2} ... e_{i(2p-1) i(2p)} e_{j1} ... e_{jq}, p + q = d.

    Edge factors come from a matching with descending larger endpoints,
    vertex factors are descending and allowed for that matching.
    """
    _require_class(g)
    out = []
    for p, group in partial_matchings(g).items():
        q = d - p
        if q < 0:
            continue
        for w in group:
            allowed = sorted(allowed_vertices(g, w), reverse=True)
            for js in itertools.combinations(allowed, q):
                word = tuple(edge(a, b, "e") for a, b in w) + tuple(vertex(j, "e") for j in js)
                out.append(word)
    return sorted(out, key=lambda w: [(v.kind, v.index) for v in w])


@dataclass(frozen=True)
class FrobeniusRow:
    edge: tuple[int, int]
    degenerate: bool
    checked: int  # number of degree-(n-1) normal words multiplied


def frobenius_degeneracy_witness(g: Graph, gb: TruncatedGB) -> list[FrobeniusRow]:
    """For each edge (ij): does every degree-(n-1) normal word x give x * e_ij = 0?"""
    if not g.edges:
        raise ValueError("the witness needs at least one edge")
    if gb.bound < g.n:
        raise DegreeBoundError(f"basis completed to {gb.bound}, need degree {g.n}")
    symbol = gb.order.precedence[0].symbol
    words = normal_words(gb, g.n - 1)
    rows = []
    for i, j in g.sorted_edges:
        e = NcPolynomial.var(edge(i, j, symbol))
        ok = all(not normal_form(NcPolynomial.monomial(x) * e, gb) for x in words)
        rows.append(FrobeniusRow((i, j), ok, len(words)))
    return rows
