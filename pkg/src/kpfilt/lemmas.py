"""Exhaustive checkers for the lemmas behind the triangularity argument.

Each checker walks a finite range and returns the list of counterexamples
(empty means the statement held everywhere) together with the number of
cases examined, so callers can tell a vacuous pass from a real one.
"""

from __future__ import annotations

from itertools import combinations

from .exterior import act_e, add_into, normalize, u_of
from .filtration import apply_power, e_prime, multiple_of, u_key
from .permutation import (
    Permutation,
    all_permutations,
    is_cover,
    m_prime_value,
    m_value,
    times_transposition,
)
from .pieri import enumerate_chains


def pqpq_element(w: Permutation, p: int, q: int, p2: int, q2: int, n: int) -> dict:
    """u_{p q2} ^ e_{pq}^{m_{pq}(w)} (e'_{q2 p2})^{m'_{q2 p2}(w)} u_w."""
    m = m_value(w, p, q)
    m2 = m_prime_value(w, q2, p2)
    x = apply_power(lambda y: e_prime(q2, p2, y), m2, u_of(w, n))
    if q > n:
        assert m == 0, f"m_{{{p}{q}}}({w}) = {m} with q > n"
    else:
        x = apply_power(lambda y: act_e(p, q, y, n), m, x)
    out: dict = {}
    for mono, c in x.items():
        sign, new = normalize(((p, q2),) + mono)
        if sign:
            add_into(out, new, c * sign)
    return out


def check_pqpq(m: int = 4, n: int = 4, bound: int = 6) -> tuple[list, int]:
    failures, cases = [], 0
    for w in all_permutations(m):
        for i in range(1, n + 1):
            covers = [
                (p, q)
                for p in range(1, i + 1)
                for q in range(i + 1, bound + 1)
                if is_cover(w, p, q)
            ]
            for p, q in covers:
                for p2, q2 in covers:
                    cases += 1
                    x = pqpq_element(w, p, q, p2, q2, n)
                    if x and not (w(p2) >= w(p) and w(q2) >= w(q)):
                        failures.append(("order", w, i, (p, q), (p2, q2)))
                    if (p, q) == (p2, q2):
                        if multiple_of(x, u_key(times_transposition(w, p, q))) is None:
                            failures.append(("diagonal", w, i, (p, q)))
    return failures, cases


def check_m_invariance(m: int = 4, max_i: int = 3, max_d: int = 3) -> tuple[list, int]:
    failures, cases = [], 0
    for w in all_permutations(m):
        for i in range(1, max_i + 1):
            for d in range(max_d + 1):
                for kind in ("X", "Y"):
                    for chain in enumerate_chains(w, i, d, kind):
                        steps = chain.steps
                        for a, (p, q) in enumerate(steps, start=1):
                            earlier = steps[: a - 1]
                            if kind == "X" and any(pb == p for pb, _ in earlier):
                                continue
                            if kind == "Y" and any(qb == q for _, qb in earlier):
                                continue
                            cases += 1
                            wa = chain.w_at(a)
                            if m_value(wa, p, q) != m_value(w, p, q) or m_prime_value(wa, q, p) != m_prime_value(w, q, p):
                                failures.append((kind, w, i, steps, a))
    return failures, cases


def check_cover_lemma(m: int = 4, bound: int = 6) -> tuple[list, int]:
    failures, cases = [], 0
    pairs = list(combinations(range(1, bound + 1), 2))
    for w in all_permutations(m):
        for p2, q2 in pairs:
            if not is_cover(w, p2, q2):
                continue
            w2 = times_transposition(w, p2, q2)
            for p, q in pairs:
                if {p, q} & {p2, q2} or not is_cover(w2, p, q):
                    continue
                cases += 1
                if (
                    m_value(w2, p, q) != m_value(w, p, q)
                    or m_prime_value(w2, q, p) != m_prime_value(w, q, p)
                    or not is_cover(w, p, q)
                ):
                    failures.append((w, (p2, q2), (p, q)))
    return failures, cases
