"""Degree-truncated two-sided Buchberger completion in the free algebra.

All work happens on encoded words (tuples of letter ranks, see
``MonomialOrder.encode``), where tuple comparison inside one degree is the
monomial order.  Inputs are homogeneous, so S-polynomials are processed one
degree at a time and everything below the bound is exact.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

from .freealg import MonomialOrder, NcPolynomial, Word
from .linalg import rref
from .presentations import QuadraticPresentation

Code = tuple  # encoded word


class DegreeBoundError(ValueError):
    """A request beyond the degree the basis was completed to."""


class Overlap(NamedTuple):
    """left1 * w1 * right1 == left2 * w2 * right2 == word."""

    word: tuple
    left1: tuple
    right1: tuple
    left2: tuple
    right2: tuple


def overlaps(w1: Iterable, w2: Iterable) -> list[Overlap]:
    """Proper suffix/prefix overlaps in both directions, and proper containments."""
    w1, w2 = tuple(w1), tuple(w2)
    a, b = len(w1), len(w2)
    found = []
    for k in range(1, min(a, b)):
        if w1[a - k:] == w2[:k]:
            found.append(Overlap(w1 + w2[k:], (), w2[k:], w1[:a - k], ()))
    if w1 != w2:
        for k in range(1, min(a, b)):
            if w2[b - k:] == w1[:k]:
                found.append(Overlap(w2 + w1[k:], w2[:b - k], (), (), w1[k:]))
    if b < a:
        for s in range(a - b + 1):
            if w1[s:s + b] == w2:
                found.append(Overlap(w1, (), (), w1[:s], w1[s + b:]))
    elif a < b:
        for s in range(b - a + 1):
            if w2[s:s + a] == w1:
                found.append(Overlap(w2, w2[:s], w2[s + a:], (), ()))
    return found


def _heap_key(w: Code):
    return (-len(w), tuple(-x for x in w), w)


class TruncatedGB:
    """A self-reduced Groebner basis valid in degrees up to ``bound``."""

    def __init__(self, order: MonomialOrder, bound: int):
        self.order = order
        self.bound = bound
        self.polys: dict[Code, dict[Code, Fraction]] = {}  # lead -> monic poly
        self.created: list[Code] = []
        self._lengths: list[int] = []

    # -- basic structure ---------------------------------------------------
    def _insert(self, poly: dict) -> Code:
        lead = max(poly, key=lambda w: (len(w), w))
        inv = 1 / Fraction(poly[lead])
        self.polys[lead] = {w: c * inv for w, c in poly.items()}
        self.created.append(lead)
        if len(lead) not in self._lengths:
            self._lengths.append(len(lead))
            self._lengths.sort()
        return lead

    def __len__(self) -> int:
        return len(self.polys)

    @property
    def elements(self) -> list[NcPolynomial]:
        """Monic elements grouped by degree, descending leading word inside a degree."""
        leads = sorted(self.polys, key=lambda w: (len(w), tuple(-x for x in w)))
        return [self.order.decode(self.polys[w]) for w in leads]

    def leads_of_degree(self, d: int) -> list[Code]:
        return sorted(w for w in self.polys if len(w) == d)

    def max_degree(self) -> int:
        return max((len(w) for w in self.polys), default=0)

    # -- reduction ---------------------------------------------------------
    def find_divisor(self, w: Code):
        """Leftmost occurrence of a leading word in ``w`` (shortest at that position)."""
        polys = self.polys
        n = len(w)
        for start in range(n):
            for length in self._lengths:
                end = start + length
                if end > n:
                    break
                sub = w[start:end]
                if sub in polys:
                    return start, sub
        return None

    def reduce_code(self, vec: dict) -> dict:
        work = {w: c for w, c in vec.items() if c}
        heap = [_heap_key(w) for w in work]
        heapq.heapify(heap)
        out = {}
        while heap:
            w = heapq.heappop(heap)[2]
            c = work.pop(w, None)
            if c is None:
                continue
            hit = self.find_divisor(w)
            if hit is None:
                out[w] = c
                continue
            start, lead = hit
            left, right = w[:start], w[start + len(lead):]
            for t, ct in self.polys[lead].items():
                if t == lead:
                    continue
                nw = left + t + right
                old = work.get(nw)
                new = (old or 0) - c * ct
                if new:
                    if old is None:
                        heapq.heappush(heap, _heap_key(nw))
                    work[nw] = new
                elif old is not None:
                    del work[nw]
        return out

    def is_normal(self, w: Code) -> bool:
        return self.find_divisor(w) is None


def _spoly(gb: TruncatedGB, lead1: Code, lead2: Code, ov: Overlap) -> dict:
    out: dict = {}
    for w, c in gb.polys[lead1].items():
        out[ov.left1 + w + ov.right1] = c
    for w, c in gb.polys[lead2].items():
        key = ov.left2 + w + ov.right2
        new = out.get(key, 0) - c
        if new:
            out[key] = new
        else:
            out.pop(key, None)
    return out


def complete(pres: QuadraticPresentation, order: MonomialOrder | None = None, bound: int = 4) -> TruncatedGB:
    """Buchberger completion of the relations of ``pres`` up to degree ``bound``.

    S-polynomials are processed in (degree, creation index) order; nonzero
    remainders are made monic and adjoined; tails of each degree are
    inter-reduced once that degree is finished.
    """
    if bound < 2:
        raise ValueError(f"bound must be at least 2, got {bound}")
    order = order or pres.order
    gb = TruncatedGB(order, bound)
    quadratic = rref(order.encode(r) for r in pres.relations)
    pending: list = []
    counter = itertools.count()

    def adjoin(poly: dict) -> None:
        lead = gb._insert(poly)
        for other in gb.created:
            for ov in overlaps(other, lead):
                if len(ov.word) <= bound:
                    heapq.heappush(pending, (len(ov.word), next(counter), other, lead, ov))

    for poly in quadratic:
        adjoin(poly)

    for d in range(3, bound + 1):
        while pending and pending[0][0] == d:
            _, _, l1, l2, ov = heapq.heappop(pending)
            rem = gb.reduce_code(_spoly(gb, l1, l2, ov))
            if rem:
                adjoin(rem)
        for lead in gb.leads_of_degree(d):
            poly = gb.polys[lead]
            tail = {w: c for w, c in poly.items() if w != lead}
            reduced = gb.reduce_code(tail)
            reduced[lead] = Fraction(1)
            gb.polys[lead] = reduced
    return gb


def normal_form(p: NcPolynomial, gb: TruncatedGB) -> NcPolynomial:
    if p and max(p.degrees()) > gb.bound:
        raise DegreeBoundError(f"degree {max(p.degrees())} exceeds the completion bound {gb.bound}")
    return gb.order.decode(gb.reduce_code(gb.order.encode(p)))


def leading_words(gb: TruncatedGB, degree: int = 2) -> list[Word]:
    """Leading words of the given degree, sorted in descending order."""
    return [gb.order.decode_word(w) for w in sorted(gb.leads_of_degree(degree), reverse=True)]


def _normal_layers(gb: TruncatedGB, d: int):
    """Yield the normal words of degrees 0..d; a word extends a normal word
    by one letter and is kept when no suffix is a leading word."""
    if d > gb.bound:
        raise DegreeBoundError(f"degree {d} exceeds the completion bound {gb.bound}")
    letters = range(len(gb.order.precedence))
    polys = gb.polys
    layer: list[Code] = [()]
    yield layer
    for k in range(1, d + 1):
        lengths = [L for L in gb._lengths if L <= k]
        layer = [
            cand
            for w in layer
            for cand in (w + (x,) for x in letters)
            if not any(cand[k - L:] in polys for L in lengths)
        ]
        yield layer


def normal_words_code(gb: TruncatedGB, d: int) -> list[Code]:
    *_, last = _normal_layers(gb, d)
    return last


def normal_words(gb: TruncatedGB, d: int) -> list[Word]:
    return [gb.order.decode_word(w) for w in normal_words_code(gb, d)]


@dataclass(frozen=True)
class DimVector:
    dims: tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        return self.dims[d]

    def __len__(self) -> int:
        return len(self.dims)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.dims)


def dim_vector(gb: TruncatedGB, D: int | None = None) -> DimVector:
    """Number of normal words in each degree 0..D."""
    D = gb.bound if D is None else D
    return DimVector(tuple(len(layer) for layer in _normal_layers(gb, D)))


def dump(gb: TruncatedGB) -> str:
    lines = [f"# order {gb.order.name}, bound {gb.bound}, {len(gb)} elements"]
    lines.extend(p.render(gb.order) for p in gb.elements)
    return "\n".join(lines) + "\n"
