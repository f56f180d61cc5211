"""Groebner bases for homogeneous ideals of an exterior algebra.

A monomial is a strictly descending tuple of letter ranks (a square-free
product written largest letter first).  Monomials compare degree first, then
lexicographically, which is the deg-lex order on these canonical words.

Embedded in the tensor algebra, an exterior quotient by quadratic monomials
needs cubic basis elements (the square-free word x y z with x, z killed is
normal for every quadratic leading word), so quadraticity is checked here,
in the exterior algebra itself.
"""

from __future__ import annotations

import heapq
import itertools
from fractions import Fraction
from typing import Iterable

from .freealg import MonomialOrder, NcPolynomial, Variable
from .groebner import DegreeBoundError
from .linalg import rref

Mono = tuple  # strictly descending ranks


def canonical(word: Iterable[int]) -> tuple[int, Mono] | None:
    """Sign and descending monomial of a word; None when a letter repeats."""
    letters = list(word)
    if len(set(letters)) != len(letters):
        return None
    inversions = sum(1 for a, b in itertools.combinations(letters, 2) if a < b)
    return (-1 if inversions % 2 else 1), tuple(sorted(letters, reverse=True))


def mono_mul(a: Mono, b: Mono) -> tuple[int, Mono] | None:
    return canonical(a + b)


def from_tensor(p: NcPolynomial, order: MonomialOrder) -> dict[Mono, Fraction]:
    out: dict = {}
    for w, c in p.terms.items():
        hit = canonical(order.encode_word(w))
        if hit is None:
            continue
        sign, m = hit
        new = out.get(m, 0) + sign * c
        if new:
            out[m] = new
        else:
            out.pop(m, None)
    return out


def _lead(poly: dict) -> Mono:
    return max(poly, key=lambda m: (len(m), m))


def _times_left(u: Mono, poly: dict) -> dict:
    out: dict = {}
    for m, c in poly.items():
        hit = mono_mul(u, m)
        if hit is None:
            continue
        sign, prod = hit
        new = out.get(prod, 0) + sign * c
        if new:
            out[prod] = new
        else:
            out.pop(prod, None)
    return out


def _axpy(target: dict, factor, source: dict) -> None:
    for k, v in source.items():
        new = target.get(k, 0) + factor * v
        if new:
            target[k] = new
        else:
            target.pop(k, None)


class ExteriorGB:
    def __init__(self, order: MonomialOrder, bound: int):
        self.order = order
        self.bound = bound
        self.polys: dict[Mono, dict[Mono, Fraction]] = {}

    def _insert(self, poly: dict) -> Mono:
        lead = _lead(poly)
        inv = 1 / Fraction(poly[lead])
        self.polys[lead] = {m: c * inv for m, c in poly.items()}
        return lead

    def divisor(self, m: Mono) -> Mono | None:
        """Smallest leading monomial contained in ``m``."""
        for size in range(1, len(m) + 1):
            for sub in itertools.combinations(m, size):
                if sub in self.polys:
                    return sub
        return None

    def reduce(self, poly: dict) -> dict:
        work = {m: c for m, c in poly.items() if c}
        out: dict = {}
        heap = [(-len(m), tuple(-x for x in m), m) for m in work]
        heapq.heapify(heap)
        while heap:
            m = heapq.heappop(heap)[2]
            c = work.pop(m, None)
            if c is None:
                continue
            lead = self.divisor(m)
            if lead is None:
                out[m] = c
                continue
            cofactor = tuple(x for x in m if x not in lead)
            sign, _ = mono_mul(cofactor, lead)
            # m = sign * cofactor * lead, so subtract c * sign * cofactor * g
            for t, ct in _times_left(cofactor, self.polys[lead]).items():
                if t == m:
                    continue
                old = work.get(t)
                new = (old or 0) - c * sign * ct
                if new:
                    if old is None:
                        heapq.heappush(heap, (-len(t), tuple(-x for x in t), t))
                    work[t] = new
                elif old is not None:
                    del work[t]
        return out

    @property
    def elements(self) -> list[NcPolynomial]:
        leads = sorted(self.polys, key=lambda m: (len(m), tuple(-x for x in m)))
        return [self.order.decode(self.polys[m]) for m in leads]

    def leads_of_degree(self, d: int) -> list[tuple[Variable, ...]]:
        return [self.order.decode_word(m) for m in sorted(self.polys, reverse=True) if len(m) == d]

    def max_degree(self) -> int:
        return max((len(m) for m in self.polys), default=0)

    def normal_monomials(self, d: int) -> list[Mono]:
        if d > self.bound:
            raise DegreeBoundError(f"degree {d} exceeds the completion bound {self.bound}")
        letters = range(len(self.order.precedence) - 1, -1, -1)
        return [m for m in itertools.combinations(letters, d) if self.divisor(m) is None]

    def dims(self, D: int | None = None) -> tuple[int, ...]:
        D = self.bound if D is None else D
        return tuple(len(self.normal_monomials(d)) for d in range(D + 1))


def complete_exterior(
    generators: Iterable[NcPolynomial], order: MonomialOrder, bound: int
) -> ExteriorGB:
    """Buchberger completion in the exterior algebra up to degree ``bound``.

    Pairs are the lcm compositions of two leading monomials and the products
    x * f for letters x of lead(f), which vanish on the leading term.
    Generators are read modulo the exterior relations.
    """
    gb = ExteriorGB(order, bound)
    start = [from_tensor(p, order) for p in generators]
    by_degree: dict[int, list[dict]] = {}
    for poly in start:
        if poly:
            by_degree.setdefault(len(_lead(poly)), []).append(poly)
    pending: list = []
    counter = itertools.count()

    def adjoin(poly: dict) -> None:
        lead = gb._insert(poly)
        if len(lead) + 1 <= bound:
            for x in lead:
                heapq.heappush(pending, (len(lead) + 1, next(counter), "annihilator", lead, (x,)))
        for other in list(gb.polys):
            if other == lead:
                continue
            union = tuple(sorted(set(other) | set(lead), reverse=True))
            if len(union) <= bound and len(union) > max(len(other), len(lead)):
                heapq.heappush(pending, (len(union), next(counter), "lcm", other, lead))

    for d in range(0, bound + 1):
        fresh = [gb.reduce(p) for p in by_degree.get(d, [])]
        for row in rref(f for f in fresh if f):
            row = gb.reduce(row)
            if row:
                adjoin(row)
        while pending and pending[0][0] <= d:
            _, _, kind, a, b = heapq.heappop(pending)
            if kind == "annihilator":
                spoly = _times_left(b, gb.polys[a])
            else:
                spoly = _lcm_spoly(gb, a, b)
            rem = gb.reduce(spoly)
            if rem:
                adjoin(rem)
        for lead in [m for m in gb.polys if len(m) == d]:
            tail = {m: c for m, c in gb.polys[lead].items() if m != lead}
            reduced = gb.reduce(tail)
            reduced[lead] = Fraction(1)
            gb.polys[lead] = reduced
    return gb


def _lcm_spoly(gb: ExteriorGB, a: Mono, b: Mono) -> dict:
    union = tuple(sorted(set(a) | set(b), reverse=True))
    out: dict = {}
    for lead, sign_target in ((a, 1), (b, -1)):
        cof = tuple(x for x in union if x not in lead)
        sign, _ = mono_mul(cof, lead)
        _axpy(out, sign_target * sign, _times_left(cof, gb.polys[lead]))
    return out
