"""
The exterior algebra T on the basis u_{ij} (row i <= n, column j >= 1), the
action of the upper triangular Lie algebra b_n on it, and KP modules as
explicit subspaces.

Elements are plain dicts ``{key: coefficient}``.  For T the key is a wedge
monomial: a tuple of ``(row, column)`` pairs sorted increasingly, so
``((1, 2), (1, 3))`` is ``u_{12} ^ u_{13}`` and ``()`` is the unit.  Every
construction of a monomial from an unsorted factor list goes through
:func:`normalize`, which is the single place signs are decided.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Callable, Hashable, Iterable, Sequence

from .permutation import Permutation, in_S_paren, inversion_set
from .schubert import Polynomial

Factor = tuple[int, int]
Wedge = tuple[Factor, ...]
Element = dict  # key -> int | Fraction, no zero values


def normalize(factors: Sequence) -> tuple[int, tuple]:
    """Sort ``factors`` and return ``(sign, sorted_tuple)``; sign 0 on a repeat."""
    items = list(factors)
    if len(set(items)) != len(items):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(items)):
        b = a
        while b > 0 and items[b - 1] > items[b]:
            items[b - 1], items[b] = items[b], items[b - 1]
            sign = -sign
            b -= 1
    return sign, tuple(items)


def wedge(factors: Iterable[Factor]) -> Element:
    """The element ``u_{f_1} ^ u_{f_2} ^ ...`` for factors in the given order."""
    sign, mono = normalize(list(factors))
    return {mono: sign} if sign else {}


def add_into(target: dict, key: Hashable, c) -> None:
    total = target.get(key, 0) + c
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def scale(x: Element, c) -> Element:
    if not c:
        return {}
    return {k: v * c for k, v in x.items()}


def combine(*pairs: tuple) -> Element:
    """Linear combination from ``(coefficient, element)`` pairs."""
    out: dict = {}
    for c, x in pairs:
        for k, v in x.items():
            add_into(out, k, c * v)
    return out


def weight(mono: Wedge, n: int) -> tuple[int, ...]:
    lam = [0] * n
    for row, _ in mono:
        lam[row - 1] += 1
    return tuple(lam)


def _check_lie_pair(p: int, q: int, n: int) -> None:
    if not 1 <= p <= q:
        raise ValueError(f"e_{{{p}{q}}} is not upper triangular")
    if q > n:
        raise ValueError(f"e_{{{p}{q}}} is not in b_{n}: q > n")


def act_e_monomial(p: int, q: int, mono: Wedge) -> Element:
    """e_{pq} on one wedge monomial: Leibniz over factors, row q -> row p."""
    out: dict = {}
    for k, (row, col) in enumerate(mono):
        if row != q:
            continue
        if p == q:
            add_into(out, mono, 1)
            continue
        factors = list(mono)
        factors[k] = (p, col)
        sign, new = normalize(factors)
        if sign:
            add_into(out, new, sign)
    return out


def act_e(p: int, q: int, x: Element, n: int) -> Element:
    """e_{pq} . x for x in T, with 1 <= p <= q <= n."""
    _check_lie_pair(p, q, n)
    out: dict = {}
    for mono, c in x.items():
        for new, s in act_e_monomial(p, q, mono).items():
            add_into(out, new, c * s)
    return out


def u_of(w: Permutation, n: int) -> Element:
    """u_w: the wedge of u_{ij} over the inversions (i, j) of w, in sorted order."""
    if not in_S_paren(w, n):
        raise ValueError(f"{w} is not in S^({n})")
    return {tuple(sorted(inversion_set(w))): 1}


def lie_pairs(n: int) -> list[tuple[int, int]]:
    """All (p, q) with 1 <= p <= q <= n."""
    return [(p, q) for q in range(1, n + 1) for p in range(1, q + 1)]


def wedge_order(mono: Wedge):
    # graded, then lexicographic on the factor sequence
    return (len(mono), mono)


class EchelonSpan:
    """A subspace kept in reduced row echelon form over Q.

    ``order`` is a sort key on basis keys; the pivot of a row is its smallest
    key.  Pivots never move once assigned, so the pivot set only grows.
    """

    def __init__(self, order: Callable = wedge_order):
        self.order = order
        self.rows: dict[Hashable, dict] = {}
        # residuals in insertion order; they form a basis too
        self.added: list[dict] = []

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def reduce(self, x: Element) -> dict:
        """x minus its projection along the current rows."""
        out = {k: Fraction(v) for k, v in x.items() if v}
        for pivot in [k for k in out if k in self.rows]:
            c = out.get(pivot)
            if not c:
                continue
            for k, v in self.rows[pivot].items():
                add_into(out, k, -c * v)
        return out

    def contains(self, x: Element) -> bool:
        return not self.reduce(x)

    def add(self, x: Element) -> dict | None:
        """Insert x; return the nonzero residual if the span grew, else None."""
        res = self.reduce(x)
        if not res:
            return None
        pivot = min(res, key=self.order)
        lead = res[pivot]
        row = {k: v / lead for k, v in res.items()}
        for other in self.rows.values():
            c = other.get(pivot)
            if c:
                for k, v in row.items():
                    add_into(other, k, -c * v)
        self.rows[pivot] = row
        self.added.append(res)
        return res

    def basis(self) -> list[dict]:
        return [self.rows[p] for p in sorted(self.rows, key=self.order)]

    def pivots(self) -> list:
        return sorted(self.rows, key=self.order)

    def same_subspace(self, other: "EchelonSpan") -> bool:
        return self.dimension == other.dimension and all(other.contains(row) for row in self.rows.values())

    def copy(self) -> "EchelonSpan":
        dup = EchelonSpan(self.order)
        dup.rows = {p: dict(r) for p, r in self.rows.items()}
        dup.added = list(self.added)
        return dup


def close_under(span: EchelonSpan, seeds: Iterable[Element], operators: Sequence[Callable]) -> EchelonSpan:
    """Grow ``span`` to the smallest subspace containing ``seeds`` and stable under ``operators``.

    Each residual that enlarges the span is pushed on a worklist and every
    operator is applied to it exactly once.
    """
    work = []
    for seed in seeds:
        res = span.add(seed)
        if res is not None:
            work.append(res)
    while work:
        x = work.pop()
        for op in operators:
            y = op(x)
            if y:
                res = span.add(y)
                if res is not None:
                    work.append(res)
    return span


def generate_span(seeds: Iterable[Element], n: int, span: EchelonSpan | None = None) -> EchelonSpan:
    """The b_n-submodule of T generated by ``seeds`` (optionally extending ``span``)."""
    ops = [lambda x, p=p, q=q: act_e(p, q, x, n) for p, q in lie_pairs(n)]
    return close_under(span if span is not None else EchelonSpan(), seeds, ops)


def kp_module(w: Permutation, n: int) -> EchelonSpan:
    """S_w as the submodule generated by u_w."""
    return generate_span([u_of(w, n)], n)


def element_weight(x: dict, key_weight: Callable) -> tuple[int, ...]:
    weights = {key_weight(k) for k in x}
    if len(weights) != 1:
        raise ValueError(f"element is not a weight vector: weights {sorted(weights)}")
    return weights.pop()


def character_of_vectors(vectors: Iterable[dict], key_weight: Callable) -> Polynomial:
    """Sum of x^weight over a basis of weight vectors."""
    counts = Counter(element_weight(v, key_weight) for v in vectors)
    return Polynomial(dict(counts))


def character(span: EchelonSpan, n: int, key_weight: Callable | None = None) -> Polynomial:
    """ch = sum_lambda dim M_lambda x^lambda, read off the (homogeneous) echelon rows."""
    if key_weight is None:
        key_weight = lambda mono: weight(mono, n)  # noqa: E731
    return character_of_vectors(span.rows.values(), key_weight)


def format_monomial(mono: Wedge) -> str:
    if not mono:
        return "1"
    return "^".join(f"u{r},{c}" for r, c in mono)


def format_element(x: Element) -> str:
    if not x:
        return "0"
    parts = []
    for mono in sorted(x, key=wedge_order):
        parts.append(f"({x[mono]})*{format_monomial(mono)}")
    return " + ".join(parts)
