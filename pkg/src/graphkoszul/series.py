"""Truncated integer power series and the numeric checks built on them."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


class SeriesError(ValueError):
    pass


@dataclass(frozen=True)
class IntSeries:
    """Coefficients of z^0..z^D; ``D = len(coeffs) - 1`` is the truncation degree."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))
        if not self.coeffs:
            raise SeriesError("a truncated series needs at least the constant term")

    @property
    def degree_bound(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, D: int) -> IntSeries:
        return IntSeries(self.coeffs[: D + 1] + (0,) * (D + 1 - len(self.coeffs)))

    def negate_variable(self) -> IntSeries:
        """f(z) -> f(-z)."""
        return IntSeries(c if d % 2 == 0 else -c for d, c in enumerate(self.coeffs))

    def poly_degree(self) -> int:
        """Largest d with a nonzero coefficient, -1 for the zero series."""
        for d in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[d]:
                return d
        return -1

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                power = "z" if d == 1 else f"z^{d}"
                body = power if mag == 1 else f"{mag}{power}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> str:
        return json.dumps(list(self.coeffs))


def binomial_series(n: int, D: int) -> IntSeries:
    """(1 + z)^n truncated at D."""
    from math import comb

    return IntSeries(comb(n, d) for d in range(D + 1))


def mul_trunc(a: IntSeries, b: IntSeries) -> IntSeries:
    if a.degree_bound != b.degree_bound:
        raise SeriesError(f"truncation degrees differ: {a.degree_bound} vs {b.degree_bound}")
    D = a.degree_bound
    out = [0] * (D + 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j in range(D + 1 - i):
                out[i + j] += x * b.coeffs[j]
    return IntSeries(out)


def invert_trunc(a: IntSeries) -> IntSeries:
    """b with a * b = 1 + O(z^(D+1)); needs constant term 1."""
    if a.coeffs[0] != 1:
        raise SeriesError(f"constant term must be 1, got {a.coeffs[0]}")
    D = a.degree_bound
    b = [1] + [0] * D
    for d in range(1, D + 1):
        b[d] = -sum(a.coeffs[k] * b[d - k] for k in range(1, d + 1))
    return IntSeries(b)


def koszul_numeric_check(h_algebra: IntSeries, h_dual: IntSeries) -> bool:
    """True iff h_algebra(z) * h_dual(-z) = 1 up to the truncation degree."""
    D = min(h_algebra.degree_bound, h_dual.degree_bound)
    prod = mul_trunc(h_algebra.truncate(D), h_dual.truncate(D).negate_variable())
    return prod.coeffs == (1,) + (0,) * D


@dataclass(frozen=True)
class PalindromeReport:
    is_palindrome: bool
    inequalities_hold: bool


def palindrome_report(p: IntSeries | Sequence[int], n: int) -> PalindromeReport:
    """Compare p_t with p_(n-t): equality for all t, and p_t >= p_(n-t) for t <= n/2."""
    p = p if isinstance(p, IntSeries) else IntSeries(p)
    if p.poly_degree() > n:
        raise SeriesError(f"series has degree {p.poly_degree()} > n = {n}")
    pal = all(p[t] == p[n - t] for t in range(n + 1))
    ineq = all(p[t] >= p[n - t] for t in range(n // 2 + 1))
    return PalindromeReport(pal, ineq)


def global_dimension(p: IntSeries) -> int:
    d = p.poly_degree()
    if d < 0:
        raise SeriesError("dual series has no nonzero coefficient")
    return d
