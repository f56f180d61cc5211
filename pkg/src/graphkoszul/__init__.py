"""Quadratic algebras Q(G), B(G) of graphs: presentations, duals, truncated
noncommutative Groebner bases and Hilbert series."""

__version__ = "0.1.0"
