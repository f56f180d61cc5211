"""Simple undirected graphs on vertices 1..n.

Edges are stored normalized as ``(i, j)`` with ``i > j``.  Besides the
graph model this module holds the named families, triangle analysis,
forbidden-subgraph detection and a small-graph census up to isomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from pathlib import Path
from typing import Iterable, Iterator

MAX_ENUMERATION_N = 7

FAMILIES = ("empty", "line", "star", "cycle", "complete", "triangle", "butterfly", "diamond")

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph input (bad label, loop, parse failure, unknown family)."""


def normalize_edge(i: int, j: int) -> Edge:
    return (i, j) if i > j else (j, i)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"vertex count must be positive, got {self.n}")
        for e in self.edges:
            i, j = e
            if not self.n >= i > j >= 1:
                raise GraphError(f"edge {e} is not normalized within 1..{self.n}")

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and normalize_edge(i, j) in self.edges

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return {v: frozenset(s) for v, s in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_isolated_vertex(self) -> bool:
        return any(not nbrs for nbrs in self.adjacency.values())

    def relabel(self, perm: dict[int, int]) -> Graph:
        return Graph(self.n, frozenset(normalize_edge(perm[i], perm[j]) for i, j in self.edges))

    def describe(self) -> str:
        body = " ".join(f"{i}-{j}" for i, j in self.sorted_edges)
        return f"n={self.n} E=[{body}]"

    def __repr__(self) -> str:
        return f"Graph({self.describe()})"


def from_edge_list(n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from 1-based vertex pairs, normalizing and deduplicating."""
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    edges = set()
    for pair in pairs:
        i, j = pair
        if not (1 <= i <= n and 1 <= j <= n):
            raise GraphError(f"vertex label out of range 1..{n} in pair {tuple(pair)}")
        if i == j:
            raise GraphError(f"loop at vertex {i} in pair {tuple(pair)}")
        edges.add(normalize_edge(i, j))
    return Graph(n, frozenset(edges))


def named_family(name: str, n: int | None = None) -> Graph:
    """Standard graphs: empty, line (path), star (centre 1), cycle, complete,
    triangle (n = 3), butterfly (n = 5) and diamond (n = 4)."""
    if name not in FAMILIES:
        raise GraphError(f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}")
    fixed = {"triangle": 3, "butterfly": 5, "diamond": 4}
    if name in fixed:
        if n is not None and n != fixed[name]:
            raise GraphError(f"family {name} requires n = {fixed[name]}, got {n}")
        n = fixed[name]
    if n is None:
        raise GraphError(f"family {name} requires n")
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    if name == "empty":
        pairs = []
    elif name == "line":
        pairs = [(i, i + 1) for i in range(1, n)]
    elif name == "star":
        pairs = [(1, i) for i in range(2, n + 1)]
    elif name == "cycle":
        if n < 3:
            raise GraphError(f"cycle requires n >= 3, got {n}")
        pairs = [(i, i + 1) for i in range(1, n)] + [(n, 1)]
    elif name in ("complete", "triangle"):
        pairs = list(itertools.combinations(range(1, n + 1), 2))
    elif name == "butterfly":
        pairs = [(1, 2), (1, 3), (2, 3), (1, 4), (1, 5), (4, 5)]
    else:
        pairs = [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]
    return from_edge_list(n, pairs)


BUTTERFLY = named_family("butterfly")
DIAMOND = named_family("diamond")


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles as descending triples, in lexicographic order."""
    found = []
    for a, b, c in itertools.combinations(range(1, g.n + 1), 3):
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
            found.append((c, b, a))
    return sorted(found)


def has_overlapping_triangles(g: Graph) -> bool:
    seen: set[int] = set()
    for tri in triangles(g):
        if seen.intersection(tri):
            return True
        seen.update(tri)
    return False


def is_triangle_free(g: Graph) -> bool:
    return not triangles(g)


def contains_subgraph(g: Graph, pattern: Graph) -> bool:
    """Brute-force test for a (not necessarily induced) copy of ``pattern``."""
    if pattern.n > g.n or len(pattern.edges) > len(g.edges):
        return False
    for image in itertools.permutations(g.vertices, pattern.n):
        if all(g.has_edge(image[i - 1], image[j - 1]) for i, j in pattern.edges):
            return True
    return False


# -- isomorphism and enumeration --------------------------------------------

def _colour_classes(g: Graph) -> list[list[int]]:
    """Isomorphism-invariant ordered partition of the vertices (colour refinement)."""
    colour = {v: g.degree(v) for v in g.vertices}
    while True:
        signature = {
            v: (colour[v], tuple(sorted(colour[w] for w in g.adjacency[v]))) for v in g.vertices
        }
        ranks = {s: r for r, s in enumerate(sorted(set(signature.values()), reverse=True))}
        refined = {v: ranks[signature[v]] for v in g.vertices}
        if len(set(refined.values())) == len(set(colour.values())):
            colour = refined
            break
        colour = refined
    classes: dict[int, list[int]] = {}
    for v in g.vertices:
        classes.setdefault(colour[v], []).append(v)
    return [classes[c] for c in sorted(classes)]


def canonical_form(g: Graph) -> tuple[int, tuple[Edge, ...]]:
    """Lexicographically minimal sorted edge tuple over all relabelings that
    assign label blocks to the colour classes in their canonical order."""
    classes = _colour_classes(g)
    best = None
    for parts in itertools.product(*(itertools.permutations(cls) for cls in classes)):
        order = [v for part in parts for v in part]
        perm = {v: label for label, v in enumerate(order, start=1)}
        form = tuple(sorted(normalize_edge(perm[i], perm[j]) for i, j in g.edges))
        if best is None or form < best:
            best = form
    return (g.n, best)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or len(g1.edges) != len(g2.edges):
        return False
    return canonical_form(g1) == canonical_form(g2)


def _graphs_on(n: int, previous: list[Graph]) -> list[Graph]:
    """Classes on exactly n vertices, grown from the classes on n - 1 vertices."""
    if n == 1:
        return [Graph(1, frozenset())]
    found: dict[tuple, Graph] = {}
    for base in previous:
        for k in range(n):
            for nbrs in itertools.combinations(range(1, n), k):
                g = Graph(n, base.edges | {(n, j) for j in nbrs})
                key = canonical_form(g)
                if key not in found:
                    found[key] = Graph(n, frozenset(key[1]))
    return [found[k] for k in sorted(found, key=lambda key: (len(key[1]), key[1]))]


def enumerate_graphs(max_n: int, no_isolated: bool = False) -> list[Graph]:
    """One canonical representative per isomorphism class with at most
    ``max_n`` vertices, ordered by (n, edge count, canonical edge tuple)."""
    if max_n < 1:
        raise GraphError(f"max_n must be positive, got {max_n}")
    if max_n > MAX_ENUMERATION_N:
        raise GraphError(f"max_n = {max_n} exceeds the brute-force budget ({MAX_ENUMERATION_N})")
    result = []
    for n in range(1, max_n + 1):
        result.extend(g for g in _layer(n) if not (no_isolated and g.has_isolated_vertex()))
    return result


@lru_cache(maxsize=None)
def _layer(n: int) -> tuple[Graph, ...]:
    return tuple(_graphs_on(n, list(_layer(n - 1)) if n > 1 else []))


def iter_overlap_free(max_n: int, min_n: int = 1, no_isolated: bool = False) -> Iterator[Graph]:
    for g in enumerate_graphs(max_n, no_isolated):
        if g.n >= min_n and not has_overlapping_triangles(g):
            yield g


# -- text formats -------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line ``n``, then ``i j`` pairs.

    ``#`` starts a comment; blank lines are ignored.  Errors carry the line number.
    """
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        try:
            values = [int(f) for f in fields]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {line!r}") from None
        if n is None:
            if len(values) != 1:
                raise GraphError(f"line {lineno}: expected vertex count, got {line!r}")
            n = values[0]
            if n < 1:
                raise GraphError(f"line {lineno}: vertex count must be positive")
            continue
        if len(values) != 2:
            raise GraphError(f"line {lineno}: expected a pair 'i j', got {line!r}")
        try:
            from_edge_list(n, [tuple(values)])
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
        pairs.append(tuple(values))
    if n is None:
        raise GraphError("empty edge list: missing vertex count")
    return from_edge_list(n, pairs)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{j} {i}" for i, j in g.sorted_edges]
    return "\n".join(lines) + "\n"


def from_graph6(text: str) -> Graph:
    import networkx as nx

    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        nxg = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise GraphError(f"invalid graph6 string {text!r}: {exc}") from None
    n = nxg.number_of_nodes()
    return from_edge_list(n, [(u + 1, v + 1) for u, v in nxg.edges()])


def to_graph6(g: Graph) -> str:
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from((i - 1, j - 1) for i, j in g.edges)
    return nx.to_graph6_bytes(nxg, header=False).decode("ascii").strip()
