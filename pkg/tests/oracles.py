"""Independent reference computations used to freeze expected values.

Nothing here calls the code paths it is used to check: Schubert polynomials
come from the Billey-Jockusch-Stanley formula over reduced words, chain sets
from brute force over transposition sequences using only ``length``, and
span dimensions from dense sympy ranks over operator words.
"""

from __future__ import annotations

import itertools
from collections import Counter

import sympy

from kpfilt.permutation import Permutation, compose, length, transposition


def brute_length(images) -> int:
    return sum(1 for a, b in itertools.combinations(range(len(images)), 2) if images[a] > images[b])


def brute_inverse_window(w: Permutation, size: int) -> list[int]:
    images = [w(k) for k in range(1, size + 1)]
    return [images.index(v) + 1 for v in range(1, size + 1)]


def reduced_words(w: Permutation) -> list[tuple[int, ...]]:
    """All (a_1..a_l) with w = s_{a_1} ... s_{a_l}, l = length(w)."""
    target = length(w)
    if target == 0:
        return [()]
    out = []
    for a in range(1, w.size):
        # w = s_a * w' with length(w') = l - 1
        rest = compose(transposition(a, a + 1), w)
        if length(rest) == target - 1:
            out.extend((a,) + word for word in reduced_words(rest))
    return out


def bjs_schubert(w: Permutation) -> Counter:
    """Schubert polynomial as Counter{exponent: coeff} via compatible sequences."""
    poly: Counter = Counter()
    for word in reduced_words(w):
        ell = len(word)

        def rec(j, prev, seq):
            if j == ell:
                exp = [0] * (max(seq) if seq else 0)
                for i in seq:
                    exp[i - 1] += 1
                poly[tuple(exp)] += 1
                return
            lo = 1 if j == 0 else prev + (1 if word[j - 1] < word[j] else 0)
            for i in range(lo, word[j] + 1):
                rec(j + 1, i, seq + [i])

        rec(0, 0, [])
    return +poly


def brute_chains(w: Permutation, i: int, d: int, kind: str, slack: int = 4):
    """Chain ends and steps by exhaustive search with covers tested via length."""
    top = max(w.size, i) + d + slack
    found = []

    def rec(cur, last, steps):
        if len(steps) == d:
            found.append((tuple(steps), cur))
            return
        for p in range(1, i + 1):
            for q in range(i + 1, top + 1):
                nxt = compose(cur, transposition(p, q))
                if length(nxt) != length(cur) + 1:
                    continue
                value = cur(p) if kind == "X" else cur(q)
                if last is not None and ((kind == "X" and value <= last) or (kind == "Y" and value >= last)):
                    continue
                rec(nxt, value, steps + [(p, q)])

    rec(w, None, [])
    return found


def closure_rank(seeds, operators) -> int:
    """Rank of the operator-word closure of ``seeds`` via dense sympy matrices.

    Stops when adding one more layer of words leaves the rank unchanged, which
    means the span is closed.
    """
    vectors = [dict(s) for s in seeds if s]
    layer = list(vectors)
    rank = _rank(vectors)
    while True:
        seen = {frozenset(v.items()) for v in vectors}
        nxt = []
        for x in layer:
            for op in operators:
                y = op(x)
                key = frozenset(y.items())
                if y and key not in seen:
                    seen.add(key)
                    nxt.append(y)
        layer = nxt
        vectors.extend(layer)
        new_rank = _rank(vectors)
        if new_rank == rank:
            return rank
        rank = new_rank


def _rank(vectors) -> int:
    if not vectors:
        return 0
    keys = sorted({k for v in vectors for k in v}, key=repr)
    index = {k: j for j, k in enumerate(keys)}
    mat = sympy.zeros(len(vectors), len(keys))
    for r, v in enumerate(vectors):
        for k, c in v.items():
            mat[r, index[k]] = sympy.Rational(c)
    return mat.rank()
