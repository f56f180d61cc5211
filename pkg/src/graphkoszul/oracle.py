"""Graded dimensions by plain linear algebra, independent of Groebner bases.

``ideal_component_dim`` spans the degree-d part of the ideal by all products
x R y directly.  ``quotient_dims`` walks the graded components one at a time:
A_d = (A_{d-1} (x) V) / image(A_{d-2} (x) R), keeping an explicit basis and a
rewriting map at every degree, which scales to the small dual algebras in
high degree.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .linalg import Echelon, axpy
from .presentations import QuadraticPresentation


def _encoded_relations(pres: QuadraticPresentation):
    order = pres.order
    return order, [order.encode(r) for r in pres.relations]


def ideal_component_dim(pres: QuadraticPresentation, d: int) -> int:
    """dim of sum over a + b = d - 2 of V^a (x) R (x) V^b."""
    if d < 2:
        return 0
    _, rels = _encoded_relations(pres)
    letters = range(len(pres.alphabet))
    ech = Echelon()
    for a in range(d - 1):
        b = d - 2 - a
        for left in itertools.product(letters, repeat=a):
            for right in itertools.product(letters, repeat=b):
                for r in rels:
                    ech.add({left + w + right: c for w, c in r.items()})
    return len(ech)


def rank_dims(pres: QuadraticPresentation, D: int) -> tuple[int, ...]:
    """dim T(V)_d - dim I_d for d = 0..D by direct spanning sets."""
    m = len(pres.alphabet)
    return tuple(m**d - ideal_component_dim(pres, d) for d in range(D + 1))


def quotient_dims(pres: QuadraticPresentation, D: int) -> tuple[int, ...]:
    """dim A_d for d = 0..D by the degree-by-degree quotient construction."""
    _, rels = _encoded_relations(pres)
    m = len(pres.alphabet)
    dims = [1]
    basis: list[list[tuple]] = [[()]]
    rewrite: list[dict] = [{(): {(): Fraction(1)}}]
    if D >= 1:
        basis.append([(x,) for x in range(m)])
        rewrite.append({(x,): {(x,): Fraction(1)} for x in range(m)})
        dims.append(m)
    for d in range(2, D + 1):
        prev = rewrite[d - 1]
        ech = Echelon()
        for a in basis[d - 2]:
            for r in rels:
                row: dict = {}
                for (x, y), c in r.items():
                    for b, cb in prev[a + (x,)].items():
                        axpy(row, c * cb, {b + (y,): 1})
                if row:
                    ech.add(row)
        reduced = {max(r): r for r in ech.reduced_rows()}
        current = {}
        new_basis = []
        for b in basis[d - 1]:
            for y in range(m):
                col = b + (y,)
                if col in reduced:
                    current[col] = {c: -v for c, v in reduced[col].items() if c != col}
                else:
                    current[col] = {col: Fraction(1)}
                    new_basis.append(col)
        basis.append(new_basis)
        rewrite.append(current)
        dims.append(len(new_basis))
        if not new_basis:
            dims.extend([0] * (D - d))
            break
    return tuple(dims)
