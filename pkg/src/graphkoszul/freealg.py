"""Free associative algebra on vertex and edge generators.

Polynomials carry exact ``Fraction`` coefficients.  Monomial orders are
degree-lexicographic; an order also provides an integer encoding of words
(letter -> rank) under which plain tuple comparison is the order itself, which
is what the linear algebra and Groebner code work with internally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from . import linalg


@dataclass(frozen=True)
class Variable:
    """A generator ``u_i`` / ``u_ij`` (or dually ``e_i`` / ``e_ij``)."""

    kind: str  # "vertex" or "edge"
    index: tuple[int, ...]
    symbol: str = "u"

    def __post_init__(self):
        if self.kind == "vertex":
            ok = len(self.index) == 1 and self.index[0] >= 1
        elif self.kind == "edge":
            ok = len(self.index) == 2 and self.index[0] > self.index[1] >= 1
        else:
            ok = False
        if not ok:
            raise ValueError(f"malformed variable {self.kind} {self.index}")

    @property
    def is_vertex(self) -> bool:
        return self.kind == "vertex"

    def dual(self) -> Variable:
        return Variable(self.kind, self.index, "e" if self.symbol == "u" else "u")

    def with_symbol(self, symbol: str) -> Variable:
        return Variable(self.kind, self.index, symbol)

    def __str__(self) -> str:
        sep = "_" if any(i > 9 for i in self.index) else ""
        return self.symbol + sep.join(str(i) for i in self.index)

    __repr__ = __str__


def vertex(i: int, symbol: str = "u") -> Variable:
    return Variable("vertex", (i,), symbol)


def edge(i: int, j: int, symbol: str = "u") -> Variable:
    return Variable("edge", (max(i, j), min(i, j)), symbol)


Word = tuple  # tuple[Variable, ...]


class NcPolynomial:
    """Sparse noncommutative polynomial: word -> nonzero Fraction."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | None = None):
        clean = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(w)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def monomial(cls, word: Iterable[Variable], coeff=1) -> NcPolynomial:
        return cls({tuple(word): coeff})

    @classmethod
    def var(cls, v: Variable) -> NcPolynomial:
        return cls({(v,): 1})

    @classmethod
    def one(cls) -> NcPolynomial:
        return cls({(): 1})

    @classmethod
    def zero(cls) -> NcPolynomial:
        return cls()

    @property
    def terms(self) -> Mapping[Word, Fraction]:
        return MappingProxyType(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NcPolynomial({(): other})
        return isinstance(other, NcPolynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: NcPolynomial) -> NcPolynomial:
        out = dict(self._terms)
        linalg.axpy(out, 1, other._terms)
        return NcPolynomial(out)

    def __sub__(self, other: NcPolynomial) -> NcPolynomial:
        out = dict(self._terms)
        linalg.axpy(out, -1, other._terms)
        return NcPolynomial(out)

    def __neg__(self) -> NcPolynomial:
        return NcPolynomial({w: -c for w, c in self._terms.items()})

    def scale(self, c) -> NcPolynomial:
        return NcPolynomial({w: c * v for w, v in self._terms.items()})

    def __mul__(self, other) -> NcPolynomial:
        if not isinstance(other, NcPolynomial):
            return self.scale(other)
        out: dict = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                c = out.get(w, 0) + c1 * c2
                if c:
                    out[w] = c
                else:
                    out.pop(w, None)
        return NcPolynomial(out)

    def __rmul__(self, c) -> NcPolynomial:
        return self.scale(c)

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = self.degrees()
        if d is None:
            return len(degs) <= 1
        return degs <= {d}

    def variables(self) -> set[Variable]:
        return {v for w in self._terms for v in w}

    def render(self, order: MonomialOrder | None = None) -> str:
        if not self._terms:
            return "0"
        order = order or default_order(self.variables())
        parts = []
        for w in sorted(self._terms, key=order.key, reverse=True):
            c = self._terms[w]
            body = "*".join(str(v) for v in w) or "1"
            mag = abs(c)
            head = body if mag == 1 and w else f"{mag}*{body}" if w else str(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, head))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, head in parts[1:]:
            text += f" {sign} {head}"
        return text

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"NcPolynomial({self.render()})"


def multiply(p: NcPolynomial, q: NcPolynomial) -> NcPolynomial:
    return p * q


def commutator(a: NcPolynomial, b: NcPolynomial) -> NcPolynomial:
    return a * b - b * a


class MonomialOrder:
    """Degree-lexicographic order given by a letter precedence.

    ``precedence`` lists the letters from smallest to largest.
    """

    def __init__(self, precedence: Sequence[Variable], name: str = "custom"):
        self.precedence = tuple(precedence)
        self.rank = {v: r for r, v in enumerate(self.precedence)}
        if len(self.rank) != len(self.precedence):
            raise ValueError("precedence lists a variable twice")
        self.name = name

    def __repr__(self) -> str:
        return f"MonomialOrder({self.name}: {' < '.join(map(str, self.precedence))})"

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and self.precedence == other.precedence

    def __hash__(self) -> int:
        return hash(self.precedence)

    def encode_word(self, word: Iterable[Variable]) -> tuple[int, ...]:
        return tuple(self.rank[v] for v in word)

    def decode_word(self, code: Iterable[int]) -> Word:
        return tuple(self.precedence[r] for r in code)

    def key(self, word: Iterable[Variable]) -> tuple[int, tuple[int, ...]]:
        code = self.encode_word(word)
        return (len(code), code)

    def less(self, u: Word, v: Word) -> bool:
        return self.key(u) < self.key(v)

    def encode(self, p: NcPolynomial) -> dict[tuple[int, ...], Fraction]:
        return {self.encode_word(w): c for w, c in p.terms.items()}

    def decode(self, terms: Mapping[tuple[int, ...], object]) -> NcPolynomial:
        return NcPolynomial({self.decode_word(w): c for w, c in terms.items()})

    def sort_desc(self, words: Iterable[Word]) -> list[Word]:
        return sorted(words, key=self.key, reverse=True)


def _edge_key(v: Variable) -> tuple[int, ...]:
    return v.index


def deglex_order(alphabet: Iterable[Variable], edge_order: str = "lex") -> MonomialOrder:
    """Vertex letters above all edge letters, ``x_n > ... > x_1``.

    Edge letters compare by normalized pair: ``lex`` puts (i, j) above (k, l)
    iff i > k or (i = k and j > l); ``reverse`` is the opposite order.
    """
    letters = set(alphabet)
    verts = sorted((v for v in letters if v.is_vertex), key=lambda v: v.index)
    edges = sorted((v for v in letters if not v.is_vertex), key=_edge_key)
    if edge_order == "reverse":
        edges.reverse()
    elif edge_order != "lex":
        raise ValueError(f"unknown edge order {edge_order!r}")
    return MonomialOrder(edges + verts, name=f"deglex/{edge_order}")


def default_order(alphabet: Iterable[Variable]) -> MonomialOrder:
    return deglex_order(alphabet, "lex")


def leading_term(p: NcPolynomial, order: MonomialOrder) -> tuple[Word, Fraction]:
    if not p:
        raise ValueError("zero polynomial has no leading term")
    w = max(p.terms, key=order.key)
    return w, p.terms[w]


def graded_row_reduce(
    polys: Sequence[NcPolynomial], d: int, order: MonomialOrder | None = None
) -> list[NcPolynomial]:
    """Reduced row echelon basis of the span of degree-``d`` homogeneous polynomials.

    Coordinates are words in order-descending sequence, so each basis element is
    monic with a distinct leading word that appears in no other element.
    """
    for p in polys:
        if not p.is_homogeneous(d):
            raise ValueError(f"polynomial is not homogeneous of degree {d}: {p}")
    if order is None:
        order = default_order(v for p in polys for v in p.variables())
    rows = linalg.rref(order.encode(p) for p in polys)
    return [order.decode(r) for r in rows]


def span_equal(a: Sequence[NcPolynomial], b: Sequence[NcPolynomial], order: MonomialOrder) -> bool:
    """Mutual reduction: each side reduces to zero against the other."""
    ea, eb = linalg.Echelon(), linalg.Echelon()
    for p in a:
        ea.add(order.encode(p))
    for p in b:
        eb.add(order.encode(p))
    return all(not eb.reduce(order.encode(p)) for p in a) and all(
        not ea.reduce(order.encode(p)) for p in b
    )
