"""Pieri chains: the sets X_{i,d}(w) and Y_{i,d}(w) and the identities they index.

An X chain is a sequence of Bruhat covers ``w = w_1 < w_2 < ... < w_{d+1}`` with
``w_{j+1} = w_j t_{p_j q_j}``, ``p_j <= i < q_j`` and the values ``w_j(p_j)``
strictly increasing.  A Y chain instead has ``w_j(q_j)`` strictly decreasing.
"""

from __future__ import annotations

import functools
from collections import Counter
from dataclasses import dataclass, field
from typing import Literal

from .permutation import (
    Permutation,
    compose,
    is_cover,
    length,
    lex_compare_inverse,
    rlex_compare_inverse,
    times_transposition,
    transposition,
)
from .schubert import Polynomial, complete_symmetric, elementary_symmetric, schubert

Kind = Literal["X", "Y"]


@dataclass(frozen=True)
class PieriChain:
    kind: Kind
    base: Permutation
    i: int
    steps: tuple[tuple[int, int], ...]
    intermediates: tuple[Permutation, ...] = field(compare=False)

    @property
    def d(self) -> int:
        return len(self.steps)

    @property
    def end(self) -> Permutation:
        return self.intermediates[-1]

    @property
    def product(self) -> Permutation:
        """zeta = t_{p_1 q_1} ... t_{p_d q_d}."""
        zeta = Permutation()
        for p, q in self.steps:
            zeta = compose(zeta, transposition(p, q))
        return zeta

    def w_at(self, j: int) -> Permutation:
        """w_j with the 1-based indexing of the chain (w_1 = base)."""
        return self.intermediates[j - 1]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "w": list(self.base.images),
            "i": self.i,
            "steps": [[p, q] for p, q in self.steps],
            "end": list(self.end.images),
            "length_end": length(self.end),
        }


def column_bound(w: Permutation, i: int) -> int:
    """Largest q for which some p <= i can give a cover w t_{pq} > w.

    With M = max(window, i) the fixed point M + 1 sits strictly between
    w(p) <= M and w(q) = q for every q > M + 1.
    """
    return max(w.size, i) + 1


def _enumerate(w: Permutation, i: int, d: int, kind: Kind, slack: int = 0) -> list[PieriChain]:
    if i < 1 or d < 0:
        raise ValueError(f"need i >= 1 and d >= 0, got i={i}, d={d}")
    found: list[PieriChain] = []

    def extend(cur: Permutation, last: int | None, steps: list, path: list) -> None:
        if len(steps) == d:
            found.append(PieriChain(kind, w, i, tuple(steps), tuple(path)))
            return
        for p in range(1, i + 1):
            for q in range(i + 1, column_bound(cur, i) + 1 + slack):
                if not is_cover(cur, p, q):
                    continue
                value = cur(p) if kind == "X" else cur(q)
                if last is not None and (value <= last if kind == "X" else value >= last):
                    continue
                nxt = times_transposition(cur, p, q)
                steps.append((p, q))
                path.append(nxt)
                extend(nxt, value, steps, path)
                steps.pop()
                path.pop()

    extend(w, None, [], [w])
    by_zeta = {chain.product: chain for chain in found}
    if len(by_zeta) != len(found):
        raise AssertionError(f"chain decomposition not unique for w={w}, i={i}, d={d}, kind={kind}")
    return found


def enumerate_X(w: Permutation, i: int, d: int) -> list[PieriChain]:
    return _enumerate(w, i, d, "X")


def enumerate_Y(w: Permutation, i: int, d: int) -> list[PieriChain]:
    return _enumerate(w, i, d, "Y")


def enumerate_chains(w: Permutation, i: int, d: int, kind: Kind) -> list[PieriChain]:
    if kind not in ("X", "Y"):
        raise ValueError(f"kind must be 'X' or 'Y', got {kind!r}")
    return _enumerate(w, i, d, kind)


def chain_order(kind: Kind):
    """Sort key putting chains in the filtration order of (w zeta)^{-1}."""
    compare = lex_compare_inverse if kind == "X" else rlex_compare_inverse
    return functools.cmp_to_key(lambda a, b: compare(a.end, b.end))


def sorted_chains(w: Permutation, i: int, d: int, kind: Kind) -> list[PieriChain]:
    return sorted(enumerate_chains(w, i, d, kind), key=chain_order(kind))


@dataclass
class PieriCheck:
    ok: bool
    lhs: Polynomial
    rhs: Polynomial
    ends: Counter

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "ends": sorted([list(u.images), c] for u, c in self.ends.items()),
        }


def verify_pieri(w: Permutation, i: int, d: int, kind: Kind) -> PieriCheck:
    """Compare S_w * h_d(x_1..x_i) (or e_d) against the sum over chain ends."""
    factor = complete_symmetric(d, i) if kind == "X" else elementary_symmetric(d, i)
    lhs = schubert(w) * factor
    ends = Counter(chain.end for chain in enumerate_chains(w, i, d, kind))
    rhs = Polynomial()
    for u, c in ends.items():
        rhs = rhs + schubert(u) * c
    return PieriCheck(lhs == rhs, lhs, rhs, ends)
