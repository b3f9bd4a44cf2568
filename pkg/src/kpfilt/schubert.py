"""Exact integer polynomials in x_1, x_2, ..., divided differences and Schubert polynomials.

A monomial is an exponent tuple with no trailing zeros, so ``x_1^2 x_3`` is
``(2, 0, 1)`` and the constant monomial is ``()``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .permutation import (
    Permutation,
    from_lehmer_code,
    lehmer_code,
    times_transposition,
)

Exponent = tuple[int, ...]


def _trim(exp: Iterable[int]) -> Exponent:
    exp = list(exp)
    while exp and exp[-1] == 0:
        exp.pop()
    return tuple(exp)


class Polynomial:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        out: dict[Exponent, int] = {}
        for exp, c in (terms or {}).items():
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            key = _trim(exp)
            out[key] = out.get(key, 0) + int(c)
        self._terms = {k: c for k, c in out.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int]) -> "Polynomial":
        # terms already trimmed; zeros dropped here
        poly = cls.__new__(cls)
        poly._terms = {k: c for k, c in terms.items() if c}
        poly._hash = None
        return poly

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls._raw({(): int(c)})

    @classmethod
    def monomial(cls, exp: Iterable[int], c: int = 1) -> "Polynomial":
        return cls({tuple(exp): c})

    @classmethod
    def variable(cls, k: int) -> "Polynomial":
        return cls._raw({(0,) * (k - 1) + (1,): 1})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            other = Polynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other: int) -> "Polynomial":
        return Polynomial.constant(other) - self

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return Polynomial._raw({k: c * other for k, c in self._terms.items()})
        out: dict[Exponent, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                if len(ea) < len(eb):
                    ea_, eb_ = ea + (0,) * (len(eb) - len(ea)), eb
                else:
                    ea_, eb_ = ea, eb + (0,) * (len(ea) - len(eb))
                key = tuple(x + y for x, y in zip(ea_, eb_))
                out[key] = out.get(key, 0) + ca * cb
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        result = Polynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def num_variables(self) -> int:
        return max((len(e) for e in self._terms), default=0)

    def swap_variables(self, i: int) -> "Polynomial":
        """s_i f: exchange x_i and x_{i+1}."""
        out: dict[Exponent, int] = {}
        for exp, c in self._terms.items():
            e = list(exp) + [0] * max(0, i + 1 - len(exp))
            e[i - 1], e[i] = e[i], e[i - 1]
            key = _trim(e)
            out[key] = out.get(key, 0) + c
        return Polynomial._raw(out)

    def truncate(self, n: int) -> "Polynomial":
        """Set x_k = 0 for k > n."""
        return Polynomial._raw({e: c for e, c in self._terms.items() if len(e) <= n})

    def __call__(self, *values: int) -> int:
        total = 0
        for exp, c in self._terms.items():
            term = c
            for k, e in enumerate(exp):
                if e:
                    term *= values[k] ** e if k < len(values) else 0
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        # graded, then lexicographic descending
        return sorted(self._terms.items(), key=lambda t: (-sum(t[0]), tuple(-x for x in t[0])))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exp, c in self.sorted_terms():
            factors = [f"x{k + 1}" + (f"^{e}" if e > 1 else "") for k, e in enumerate(exp) if e]
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json(self) -> list[dict]:
        return [{"exponents": list(exp), "coeff": str(c)} for exp, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict]) -> "Polynomial":
        return cls({tuple(t["exponents"]): int(t["coeff"]) for t in data})


ZERO = Polynomial()
ONE = Polynomial.constant(1)


def _dd_monomial(exp: Exponent, i: int) -> Iterator[tuple[Exponent, int]]:
    """Terms of d_i(x^exp), each with coefficient +-1."""
    e = list(exp) + [0] * max(0, i + 1 - len(exp))
    a, b = e[i - 1], e[i]
    if a == b:
        return
    sign = 1 if a > b else -1
    lo, hi = min(a, b), max(a, b)
    # (x^hi y^lo - x^lo y^hi)/(x - y) = (xy)^lo * sum_{k<hi-lo} x^{hi-lo-1-k} y^k
    for k in range(hi - lo):
        e[i - 1] = hi - 1 - k
        e[i] = lo + k
        yield _trim(e), sign


def divided_difference(f: Polynomial, i: int) -> Polynomial:
    """(f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial."""
    if i < 1:
        raise ValueError(f"divided difference index must be positive, got {i}")
    out: dict[Exponent, int] = {}
    for exp, c in f.items():
        for key, s in _dd_monomial(exp, i):
            out[key] = out.get(key, 0) + s * c
    result = Polynomial._raw(out)
    x_diff = Polynomial.variable(i) - Polynomial.variable(i + 1)
    if result * x_diff != f - f.swap_variables(i):
        raise AssertionError(f"divided difference d_{i} left a remainder on {f}")
    return result


def staircase(m: int) -> Polynomial:
    """x_1^{m-1} x_2^{m-2} ... x_{m-1}, the Schubert polynomial of the longest element of S_m."""
    return Polynomial.monomial(tuple(range(m - 1, 0, -1)))


@lru_cache(maxsize=None)
def _schubert_in(w: Permutation, m: int, choose: str) -> Polynomial:
    window = w.window(m)
    positions = range(1, m) if choose == "first" else range(m - 1, 0, -1)
    ascent = next((k for k in positions if window[k - 1] < window[k]), None)
    if ascent is None:
        # w is the longest element of S_m
        return staircase(m)
    # S_w = d_k S_{w s_k} whenever k is an ascent of w
    return divided_difference(_schubert_in(times_transposition(w, ascent, ascent + 1), m, choose), ascent)


def schubert(w: Permutation, choose: str = "first") -> Polynomial:
    """Schubert polynomial of ``w`` by descending from the longest element of S_m.

    ``m`` is the window size of ``w``.  ``choose`` selects which ascent is used
    at each step (``"first"`` or ``"last"``); the answer does not depend on it.
    """
    if choose not in ("first", "last"):
        raise ValueError(f"choose must be 'first' or 'last', got {choose!r}")
    return _schubert_in(w, max(w.size, 1), choose)


def complete_symmetric(d: int, i: int) -> Polynomial:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return ONE
    terms: dict[Exponent, int] = {}
    for combo in itertools.combinations_with_replacement(range(i), d):
        e = [0] * i
        for k in combo:
            e[k] += 1
        terms[tuple(e)] = 1
    return Polynomial(terms)


def elementary_symmetric(d: int, i: int) -> Polynomial:
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return ONE
    terms: dict[Exponent, int] = {}
    for combo in itertools.combinations(range(i), d):
        e = [0] * i
        for k in combo:
            e[k] = 1
        terms[tuple(e)] = 1
    return Polynomial(terms)


def evaluate_all_ones(f: Polynomial) -> int:
    return sum(c for _, c in f.items())


def _revlex_key(exp: Exponent) -> tuple:
    # deepest last nonzero position first, then compare from the right
    return (len(exp), tuple(reversed(exp)))


def expand_in_schubert_basis(f: Polynomial) -> dict[Permutation, int]:
    """Write ``f`` as an integer combination of Schubert polynomials.

    The revlex-leading monomial of a Schubert polynomial is x^{code(w)} with
    coefficient 1, so peeling off leading terms terminates.
    """
    remainder = f
    result: dict[Permutation, int] = {}
    while remainder:
        lead = max((e for e, _ in remainder.items()), key=_revlex_key)
        coeff = remainder.terms[lead]
        u = from_lehmer_code(lead)
        if _trim(lehmer_code(u)) != lead:
            raise ValueError(f"leading exponent {lead} is not a Lehmer code")
        remainder = remainder - schubert(u) * coeff
        if lead in remainder.terms:
            raise ValueError(f"leading term x^{lead} not eliminated; input not in the Schubert span")
        result[u] = result.get(u, 0) + coeff
    return {u: c for u, c in result.items() if c}
