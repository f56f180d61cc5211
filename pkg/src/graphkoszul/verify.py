"""Batch verification campaigns over the small-graph census.

Every suite returns ``CheckResult`` rows in canonical graph order; a row
names the methods it compares and the degree range it covers.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from . import oracle
from .exterior import complete_exterior
from .freealg import deglex_order, edge, vertex
from .graphs import (
    Graph,
    enumerate_graphs,
    has_overlapping_triangles,
    is_triangle_free,
    to_graph6,
    triangles,
)
from .groebner import complete, dim_vector
from .matchings import frobenius_degeneracy_witness, hilbert_formula, qdual_basis
from .presentations import (
    b_presentation,
    bdual_handwritten,
    bdual_relations,
    graph_alphabet,
    q_presentation,
    quadratic_dual,
    same_span,
)
from .series import IntSeries, global_dimension, koszul_numeric_check, palindrome_report

SCHEMA_VERSION = 1
BUDGET_ENV = "KOSZUL_DEGREE_BUDGET"
SUITES = ("dim3", "gb-quadratic", "koszul", "palindrome", "dual-match", "frobenius")
DEFAULT_MAX_N = {
    "dim3": 5,
    "gb-quadratic": 6,
    "koszul": 6,
    "palindrome": 7,
    "dual-match": 6,
    "frobenius": 6,
}


def default_q_degree(n: int) -> int:
    """Truncation degree for Hilbert series of Q; the env variable overrides it."""
    env = os.environ.get(BUDGET_ENV)
    if env:
        return int(env)
    if n <= 4:
        return 6
    if n == 5:
        return 4
    return 3


def graph_descriptor(g: Graph, family: str | None = None) -> dict:
    desc = {"n": g.n, "edges": [list(e) for e in g.sorted_edges], "graph6": to_graph6(g)}
    if family:
        desc["family"] = family
    return desc


def class_flags(g: Graph) -> dict:
    return {
        "triangle_free": is_triangle_free(g),
        "overlap_free": not has_overlapping_triangles(g),
    }


@dataclass
class CheckResult:
    graph: Graph
    check: str
    methods: str
    degrees: str
    passed: bool
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "graph": graph_descriptor(self.graph),
            "flags": class_flags(self.graph),
            "check": self.check,
            "methods": self.methods,
            "degrees": self.degrees,
            "passed": self.passed,
            "details": self.details,
        }


def class_graphs(max_n: int, min_n: int = 2) -> list[Graph]:
    return [g for g in enumerate_graphs(max_n) if g.n >= min_n and not has_overlapping_triangles(g)]


# -- shared computations --------------------------------------------------------

@lru_cache(maxsize=None)
def bdual_gb(g: Graph):
    return complete(bdual_handwritten(g), bound=g.n + 1)


@lru_cache(maxsize=None)
def qdual_gb(g: Graph):
    return complete(quadratic_dual(q_presentation(g)), bound=g.n + 1)


def leading_word_families(g: Graph) -> dict[str, set[frozenset]]:
    """The three leading-word families of the dual of B, as letter sets."""
    fam1 = {frozenset({vertex(v, "e"), edge(*e, "e")}) for e in g.edges for v in e}
    fam2 = {frozenset({vertex(i, "e"), edge(j, k, "e")}) for i, j, k in triangles(g)}
    fam3 = {
        frozenset({edge(*a, "e"), edge(*b, "e")})
        for a in g.edges
        for b in g.edges
        if a != b and set(a) & set(b)
    }
    return {"vertex-edge": fam1, "triangle": fam2, "adjacent-edges": fam3}


# -- suites ---------------------------------------------------------------------

def suite_dim3(max_n: int = 5) -> list[CheckResult]:
    rows = []
    for g in enumerate_graphs(max_n, no_isolated=True):
        q, b = q_presentation(g), b_presentation(g)
        q_gb = dim_vector(complete(q, bound=3))[3]
        b_gb = dim_vector(complete(b, bound=3))[3]
        q_rank = oracle.rank_dims(q, 3)[3]
        b_rank = oracle.rank_dims(b, 3)[3]
        rows.append(CheckResult(
            g, "dim3", "Q-GB vs B-GB vs exact rank", "3",
            q_gb == b_gb == q_rank == b_rank,
            {"dim_Q3_gb": q_gb, "dim_B3_gb": b_gb, "dim_Q3_rank": q_rank, "dim_B3_rank": b_rank,
             "dim_RQ": q.dim_relations, "dim_RB": b.dim_relations},
        ))
    return rows


def suite_gb_quadratic(max_n: int = 6) -> list[CheckResult]:
    rows = []
    for g in class_graphs(max_n):
        groups = bdual_relations(g)
        gens = groups["T"] + groups["U"] + groups["W"]
        expected = leading_word_families(g)
        want = set().union(*expected.values())
        for edge_order in ("lex", "reverse"):
            order = deglex_order(graph_alphabet(g, "e"), edge_order)
            gb = complete_exterior(gens, order, g.n + 1)
            got = {frozenset(w) for w in gb.leads_of_degree(2)}
            quadratic = gb.max_degree() <= 2
            rows.append(CheckResult(
                g, f"gb-quadratic/{edge_order}", "exterior Buchberger vs leading-word families",
                f"2..{g.n + 1}", quadratic and got == want,
                {"max_degree": gb.max_degree(), "leading_words": len(got),
                 "missing": sorted(map(_set_str, want - got)), "extra": sorted(map(_set_str, got - want))},
            ))
    return rows


def _set_str(letters: frozenset) -> str:
    return "*".join(sorted(map(str, letters)))


def suite_koszul(max_n: int = 6) -> list[CheckResult]:
    rows = []
    for g in class_graphs(max_n):
        n = g.n
        formula = hilbert_formula(g)
        via_b = IntSeries(dim_vector(bdual_gb(g), n).dims)
        via_q = IntSeries(dim_vector(qdual_gb(g), n).dims)
        via_basis = IntSeries(len(qdual_basis(g, d)) for d in range(n + 1))
        rows.append(CheckResult(
            g, "hilbert-agreement", "formula vs B!-GB vs Q!-GB vs basis enumeration", f"0..{n}",
            formula == via_b == via_q == via_basis,
            {"formula": list(formula.coeffs), "bdual_gb": list(via_b.coeffs),
             "qdual_gb": list(via_q.coeffs), "basis": list(via_basis.coeffs)},
        ))
        top = dim_vector(bdual_gb(g), n + 1)[n + 1]
        rows.append(CheckResult(
            g, "global-dimension", "formula degree vs B!-GB", f"{n}..{n + 1}",
            global_dimension(formula) == n and formula[n] == 1 and top == 0,
            {"degree": global_dimension(formula), "top": formula[n], "dim_next": top},
        ))
        D = default_q_degree(n)
        h_q = IntSeries(dim_vector(complete(q_presentation(g), bound=D), D).dims)
        ok = koszul_numeric_check(h_q, formula.truncate(D))
        rows.append(CheckResult(
            g, "koszul-numeric", "Q-GB series times p(-z)", f"0..{D}", ok,
            {"h_q": list(h_q.coeffs), "p": list(formula.coeffs)},
        ))
    return rows


def suite_palindrome(max_n: int = 7) -> list[CheckResult]:
    rows = []
    for g in class_graphs(max_n, min_n=1):
        p = hilbert_formula(g)
        rep = palindrome_report(p, g.n)
        tf = is_triangle_free(g)
        rows.append(CheckResult(
            g, "palindrome", "matching formula", f"0..{g.n}",
            rep.inequalities_hold and rep.is_palindrome == tf,
            {"p": list(p.coeffs), "is_palindrome": rep.is_palindrome,
             "inequalities_hold": rep.inequalities_hold, "triangle_free": tf},
        ))
    return rows


def suite_dual_match(max_n: int = 6) -> list[CheckResult]:
    rows = []
    for g in enumerate_graphs(max_n):
        hand = bdual_handwritten(g)
        computed = quadratic_dual(b_presentation(g))
        rows.append(CheckResult(
            g, "dual-match", "hand-written B! relations vs orthogonal complement", "2",
            same_span(hand, computed),
            {"dim_handwritten": hand.dim_relations, "dim_complement": computed.dim_relations},
        ))
    return rows


def suite_frobenius(max_n: int = 6) -> list[CheckResult]:
    rows = []
    for g in class_graphs(max_n):
        if not g.edges:
            continue
        for name, gb in (("B!", bdual_gb(g)), ("Q!", qdual_gb(g))):
            witness = frobenius_degeneracy_witness(g, gb)
            rows.append(CheckResult(
                g, f"frobenius/{name}", "right multiplication by edge letters on degree n-1",
                f"{g.n - 1}..{g.n}", all(r.degenerate for r in witness),
                {"edges": [{"edge": list(r.edge), "degenerate": r.degenerate} for r in witness],
                 "checked_words": witness[0].checked},
            ))
    return rows


RUNNERS: dict[str, Callable[[int], list[CheckResult]]] = {
    "dim3": suite_dim3,
    "gb-quadratic": suite_gb_quadratic,
    "koszul": suite_koszul,
    "palindrome": suite_palindrome,
    "dual-match": suite_dual_match,
    "frobenius": suite_frobenius,
}


def run_suite(name: str, max_n: int | None = None) -> list[CheckResult]:
    names = SUITES if name == "all" else (name,)
    rows = []
    for s in names:
        rows.extend(RUNNERS[s](max_n if max_n is not None else DEFAULT_MAX_N[s]))
    return rows


def report(name: str, rows: list[CheckResult], max_n: int | None) -> dict:
    failed = [r for r in rows if not r.passed]
    return {
        "schema_version": SCHEMA_VERSION,
        "suite": name,
        "max_n": max_n,
        "summary": {"total": len(rows), "passed": len(rows) - len(failed), "failed": len(failed)},
        "rows": [r.to_json() for r in rows],
    }
