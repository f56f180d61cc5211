"""Quadratic presentations attached to a graph.

``q_presentation`` and ``b_presentation`` generate their relations over all
ordered index tuples and let row reduction remove the duplicates.  The dual
is the orthogonal complement of the relation space under the pairing
<x (x) y, xi (x) eta> = xi(x) * eta(y), with no sign twist.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .freealg import (
    MonomialOrder,
    NcPolynomial,
    Variable,
    commutator,
    default_order,
    edge,
    graded_row_reduce,
    span_equal,
    vertex,
)
from .graphs import Graph, triangles

ZERO = NcPolynomial.zero()


@dataclass(frozen=True)
class QuadraticPresentation:
    alphabet: tuple[Variable, ...]
    relations: tuple[NcPolynomial, ...]
    name: str = ""

    @property
    def order(self) -> MonomialOrder:
        return default_order(self.alphabet)

    @property
    def dim_relations(self) -> int:
        return len(self.relations)

    def dump(self) -> str:
        order = self.order
        lines = [f"# {self.name}" if self.name else "# presentation"]
        lines.append("alphabet: " + " ".join(str(v) for v in sorted(self.alphabet, key=order.rank.get, reverse=True)))
        lines.append(f"relations: {len(self.relations)}")
        lines.extend(r.render(order) for r in self.relations)
        return "\n".join(lines) + "\n"


def graph_alphabet(g: Graph, symbol: str = "u") -> tuple[Variable, ...]:
    return tuple(vertex(i, symbol) for i in g.vertices) + tuple(
        edge(i, j, symbol) for i, j in g.sorted_edges
    )


def _make(alphabet, polys, name) -> QuadraticPresentation:
    order = default_order(alphabet)
    rels = graded_row_reduce([p for p in polys if p], 2, order)
    return QuadraticPresentation(tuple(alphabet), tuple(rels), name)


class _Gens:
    """u_i and u_ij lookups with u_pq = 0 when (pq) is not an edge."""

    def __init__(self, g: Graph, symbol: str):
        self.g = g
        self.symbol = symbol

    def v(self, i: int) -> NcPolynomial:
        return NcPolynomial.var(vertex(i, self.symbol))

    def e(self, i: int, j: int) -> NcPolynomial:
        if self.g.has_edge(i, j):
            return NcPolynomial.var(edge(i, j, self.symbol))
        return ZERO


def q_relations(g: Graph) -> list[NcPolynomial]:
    u = _Gens(g, "u")
    rels = []
    for i, j in itertools.permutations(g.vertices, 2):
        rels.append(commutator(u.v(i), u.v(j)) - u.e(i, j) * (u.v(i) - u.v(j)))
    for i, j, k in itertools.permutations(g.vertices, 3):
        rels.append(
            commutator(u.v(i), u.e(j, k))
            + commutator(u.e(i, k), u.v(j))
            + commutator(u.e(i, k), u.e(j, k))
            - u.e(i, j) * (u.e(i, k) - u.e(j, k))
        )
    for i, j, k, l in itertools.permutations(g.vertices, 4):
        rels.append(commutator(u.e(i, j), u.e(k, l)))
    return rels


def b_relations(g: Graph) -> list[NcPolynomial]:
    u = _Gens(g, "u")
    rels = []
    for i, j in itertools.permutations(g.vertices, 2):
        rels.append(commutator(u.v(i), u.v(j)))
    for i, j, k in itertools.permutations(g.vertices, 3):
        rels.append(commutator(u.v(i), u.e(j, k)) + commutator(u.e(i, k), u.v(j)))
    for i, j, k, l in itertools.permutations(g.vertices, 4):
        rels.append(commutator(u.e(i, j), u.e(k, l)))
    return rels


def q_presentation(g: Graph) -> QuadraticPresentation:
    return _make(graph_alphabet(g), q_relations(g), "Q")


def b_presentation(g: Graph) -> QuadraticPresentation:
    return _make(graph_alphabet(g), b_relations(g), "B")


def _dual_name(name: str) -> str:
    if name.endswith("!"):
        return name[:-1]
    return name + "!"


def quadratic_dual(p: QuadraticPresentation) -> QuadraticPresentation:
    """Presentation on the dual letters by the orthogonal complement of R."""
    order = p.order
    rows = [order.encode(r) for r in p.relations]
    columns = list(itertools.product(range(len(p.alphabet)), repeat=2))
    complement = linalg.nullspace(rows, columns)
    dual_alphabet = tuple(v.dual() for v in p.alphabet)
    dual_order = MonomialOrder([v.dual() for v in order.precedence])
    polys = [dual_order.decode(vec) for vec in complement]
    return _make(dual_alphabet, polys, _dual_name(p.name))


def exterior_relations(alphabet) -> list[NcPolynomial]:
    """x*x for every letter and x*y + y*x for every pair."""
    rels = [NcPolynomial.monomial((x, x)) for x in alphabet]
    for x, y in itertools.combinations(alphabet, 2):
        rels.append(NcPolynomial({(x, y): 1, (y, x): 1}))
    return rels


def bdual_relations(g: Graph) -> dict[str, list[NcPolynomial]]:
    """The hand-written generators of the dual of B, grouped by family.

    T(ijk) = e_i e_jk + e_j e_ki + e_k e_ij for every triangle,
    U(ik) = e_i e_ik for every vertex incident to an edge,
    W(ijk) = e_ik e_jk for every pair of edges sharing the vertex k.
    """
    alphabet = graph_alphabet(g, "e")

    def ev(i):
        return vertex(i, "e")

    def ee(i, j):
        return edge(i, j, "e")

    t_rels = []
    for i, j, k in triangles(g):
        t_rels.append(
            NcPolynomial({(ev(i), ee(j, k)): 1, (ev(j), ee(k, i)): 1, (ev(k), ee(i, j)): 1})
        )
    u_rels = []
    for a, b in g.sorted_edges:
        u_rels.append(NcPolynomial.monomial((ev(a), ee(a, b))))
        u_rels.append(NcPolynomial.monomial((ev(b), ee(a, b))))
    w_rels = []
    for e1, e2 in itertools.combinations(g.sorted_edges, 2):
        if set(e1) & set(e2):
            w_rels.append(NcPolynomial.monomial((ee(*e1), ee(*e2))))
    return {
        "exterior": exterior_relations(alphabet),
        "T": t_rels,
        "U": u_rels,
        "W": w_rels,
    }


def bdual_handwritten(g: Graph) -> QuadraticPresentation:
    groups = bdual_relations(g)
    polys = [p for family in groups.values() for p in family]
    return _make(graph_alphabet(g, "e"), polys, "B!")


def same_span(p1: QuadraticPresentation, p2: QuadraticPresentation) -> bool:
    if set(p1.alphabet) != set(p2.alphabet):
        return False
    return span_equal(p1.relations, p2.relations, p1.order)


def dual_pairing(x: NcPolynomial, y: NcPolynomial) -> Fraction:
    """<x, y> for a u-side quadratic x and an e-side quadratic y."""
    total = Fraction(0)
    for w, c in x.terms.items():
        dw = tuple(v.dual() for v in w)
        total += c * y.terms.get(dw, 0)
    return total
