"""
Finitely supported permutations of the positive integers.

A permutation is stored by its window ``(w(1), ..., w(N))``; every ``k > N``
is a fixed point.  The window is kept minimal, so two permutations compare
equal exactly when they agree as maps on all of N.

>>> w = Permutation.parse("1,3,2")
>>> compose(w, transposition(1, 3))
Permutation(2, 3, 1)
>>> length(Permutation((3, 1, 4, 2)))
3
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _all_orderings
from typing import Iterable, Iterator


@dataclass(frozen=True, init=False)
class Permutation:
    images: tuple[int, ...]

    def __init__(self, images: Iterable[int] = ()):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation: {','.join(map(str, images))}")
        end = len(images)
        while end and images[end - 1] == end:
            end -= 1
        object.__setattr__(self, "images", images[:end])

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line notation such as ``"2,1,3"``; empty means identity."""
        text = text.strip()
        if not text:
            return cls()
        try:
            values = [int(tok) for tok in text.split(",")]
        except ValueError:
            raise ValueError(f"not a permutation: {text!r}") from None
        return cls(values)

    @property
    def size(self) -> int:
        # the window size N
        return len(self.images)

    def __call__(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"permutations act on positive integers, got {k}")
        return self.images[k - 1] if k <= len(self.images) else k

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __iter__(self) -> Iterator[int]:
        return iter(self.images)

    def window(self, size: int) -> tuple[int, ...]:
        """The images ``w(1), ..., w(size)``; ``size`` may exceed the support."""
        return tuple(self(k) for k in range(1, size + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(inv)

    def __str__(self) -> str:
        return ",".join(map(str, self.images)) if self.images else "1"

    def __repr__(self) -> str:
        return f"Permutation({', '.join(map(str, self.images))})"


IDENTITY = Permutation()


def transposition(p: int, q: int) -> Permutation:
    """t_{pq}, exchanging p and q."""
    if p == q:
        return IDENTITY
    p, q = min(p, q), max(p, q)
    images = list(range(1, q + 1))
    images[p - 1], images[q - 1] = q, p
    return Permutation(images)


def compose(u: Permutation, v: Permutation) -> Permutation:
    """(u v)(k) = u(v(k))."""
    size = max(u.size, v.size)
    return Permutation(u(v(k)) for k in range(1, size + 1))


def times_transposition(w: Permutation, p: int, q: int) -> Permutation:
    """w t_{pq}: swap the values at positions p and q."""
    images = list(w.window(max(w.size, p, q)))
    images[p - 1], images[q - 1] = images[q - 1], images[p - 1]
    return Permutation(images)


def length(w: Permutation) -> int:
    img = w.images
    return sum(1 for a in range(len(img)) for b in range(a + 1, len(img)) if img[a] > img[b])


def inversion_set(w: Permutation) -> frozenset[tuple[int, int]]:
    img = w.images
    return frozenset(
        (a + 1, b + 1)
        for a in range(len(img))
        for b in range(a + 1, len(img))
        if img[a] > img[b]
    )


def _check_pair(p: int, q: int) -> None:
    if not 1 <= p < q:
        raise ValueError(f"need 1 <= p < q, got p={p}, q={q}")


def is_cover(w: Permutation, p: int, q: int) -> bool:
    """True iff w t_{pq} covers w in Bruhat order."""
    _check_pair(p, q)
    lo, hi = w(p), w(q)
    if lo > hi:
        return False
    return not any(lo < w(r) < hi for r in range(p + 1, q))


def m_value(z: Permutation, p: int, q: int) -> int:
    """#{r > q : z(p) < z(r) < z(q)}."""
    _check_pair(p, q)
    lo, hi = z(p), z(q)
    top = max(q, z.size)
    count = sum(1 for r in range(q + 1, top + 1) if lo < z(r) < hi)
    # fixed points r > top with lo < r < hi
    count += max(0, hi - max(top, lo) - 1)
    return count


def m_prime_value(z: Permutation, q: int, p: int) -> int:
    """#{r < p : z(p) < z(r) < z(q)}; note the (q, p) argument order."""
    _check_pair(p, q)
    lo, hi = z(p), z(q)
    return sum(1 for r in range(1, p) if lo < z(r) < hi)


def _sign(a: int, b: int) -> int:
    return (a > b) - (a < b)


def lex_compare_inverse(a: Permutation, b: Permutation) -> int:
    """Compare a^{-1} and b^{-1} lexicographically; returns -1, 0 or 1."""
    size = max(a.size, b.size)
    ia, ib = a.inverse().window(size), b.inverse().window(size)
    for x, y in zip(ia, ib):
        if x != y:
            return _sign(x, y)
    return 0


def rlex_compare_inverse(a: Permutation, b: Permutation) -> int:
    """Compare a^{-1} and b^{-1} reverse lexicographically (scan from the top)."""
    size = max(a.size, b.size)
    ia, ib = a.inverse().window(size), b.inverse().window(size)
    for x, y in zip(reversed(ia), reversed(ib)):
        if x != y:
            return _sign(x, y)
    return 0


def lehmer_code(w: Permutation) -> tuple[int, ...]:
    img = w.images
    return tuple(sum(1 for b in range(a + 1, len(img)) if img[b] < img[a]) for a in range(len(img)))


def from_lehmer_code(code: Iterable[int]) -> Permutation:
    code = list(code)
    if any(c < 0 for c in code):
        raise ValueError(f"invalid Lehmer code {code}")
    size = len(code) + (max(code) if code else 0)
    unused = list(range(1, size + 1))
    images = [unused.pop(c) for c in code]
    return Permutation(images + unused)


def in_S_paren(w: Permutation, n: int) -> bool:
    """True iff w(n+1) < w(n+2) < ..., i.e. every inversion starts at a row <= n."""
    img = w.window(max(w.size, n))
    tail = img[n:]
    return all(x < y for x, y in zip(tail, tail[1:]))


def all_permutations(m: int) -> list[Permutation]:
    """Every element of S_m, in lexicographic order of windows."""
    return [Permutation(p) for p in _all_orderings(range(1, m + 1))]


def descents(w: Permutation) -> list[int]:
    return [k for k in range(1, w.size) if w(k) > w(k + 1)]
