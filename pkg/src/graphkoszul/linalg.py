"""Sparse exact linear algebra over the rationals.

Vectors are dicts mapping an orderable column key to a nonzero ``Fraction``.
Pivots are always taken at the largest column, so with word-valued columns
(encoded by a monomial order) the pivot of a row is its leading word.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable

Vector = dict


def axpy(target: dict, factor, source: dict) -> None:
    """In place: target += factor * source, dropping zeros."""
    for col, val in source.items():
        new = target.get(col, 0) + factor * val
        if new:
            target[col] = new
        else:
            target.pop(col, None)


class Echelon:
    """Incremental row echelon form keyed by pivot column."""

    def __init__(self):
        self.pivots: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Return a copy of ``vec`` with every pivot column cleared."""
        vec = dict(vec)
        done: dict = {}
        while vec:
            col = max(vec)
            row = self.pivots.get(col)
            if row is None:
                done[col] = vec.pop(col)
            else:
                axpy(vec, -vec[col], row)
        return done

    def add(self, vec: dict) -> bool:
        """Insert ``vec``; return False when it already lies in the span."""
        vec = dict(vec)
        while vec:
            col = max(vec)
            row = self.pivots.get(col)
            if row is None:
                inv = 1 / Fraction(vec[col])
                self.pivots[col] = {c: v * inv for c, v in vec.items()}
                return True
            axpy(vec, -vec[col], row)
        return False

    def reduced_rows(self) -> list[dict]:
        """Reduced row echelon form, rows ordered by descending pivot."""
        done: dict[Hashable, dict] = {}
        for col in sorted(self.pivots):
            row = dict(self.pivots[col])
            while True:
                others = [c for c in row if c != col and c in done]
                if not others:
                    break
                c = max(others)
                axpy(row, -row[c], done[c])
            done[col] = row
        self.pivots = done
        return [done[c] for c in sorted(done, reverse=True)]


def rank(rows: Iterable[dict]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return len(ech)


def rref(rows: Iterable[dict]) -> list[dict]:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.reduced_rows()


def nullspace(rows: list[dict], columns: Iterable) -> list[dict]:
    """Basis of {x : <row, x> = 0 for all rows}, one vector per free column."""
    reduced = rref(rows)
    pivot_of = {max(r): r for r in reduced}
    basis = []
    for free in sorted(set(columns) - set(pivot_of), reverse=True):
        vec = {free: Fraction(1)}
        for p, r in pivot_of.items():
            if free in r:
                vec[p] = -r[free]
        basis.append(vec)
    return basis
