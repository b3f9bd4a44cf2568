"""Batch verification over small ranges, used by ``kpfilt verify-suite``.

Every task returns a :class:`TaskResult`; failures carry a short
description of the first few offending cases.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .exterior import act_e, character, kp_module, lie_pairs, weight
from .filtration import (
    apply_e_primes,
    apply_phi,
    build_filtration,
    build_v,
    tensor_act,
    v_tensor_part,
)
from .lemmas import check_cover_lemma, check_m_invariance, check_pqpq
from .permutation import all_permutations, lex_compare_inverse, rlex_compare_inverse
from .pieri import enumerate_chains, verify_pieri
from .schubert import Polynomial, divided_difference, evaluate_all_ones, schubert


@dataclass
class TaskResult:
    key: str
    cases: int
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures and self.cases > 0

    def to_json(self) -> dict:
        return {
            "key": self.key,
            "ok": self.ok,
            "cases": self.cases,
            "failures": [str(f) for f in self.failures[:5]],
        }


def random_polynomial(rng: random.Random, nvars: int = 4, max_degree: int = 6, max_terms: int = 8) -> Polynomial:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        deg = rng.randint(0, max_degree)
        exp = [0] * nvars
        for _ in range(deg):
            exp[rng.randrange(nvars)] += 1
        terms[tuple(exp)] = rng.randint(-5, 5)
    return Polynomial(terms)


def random_wedge_element(rng: random.Random, n: int = 4, max_col: int = 5, max_deg: int = 3, max_terms: int = 4) -> dict:
    out: dict = {}
    for _ in range(rng.randint(1, max_terms)):
        k = rng.randint(0, max_deg)
        factors = rng.sample([(r, c) for r in range(1, n + 1) for c in range(1, max_col + 1)], k)
        mono = tuple(sorted(factors))
        out[mono] = out.get(mono, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
    return {m: c for m, c in out.items() if c}


def character_task(max_sn: int) -> TaskResult:
    result = TaskResult(f"character:S{max_sn + 1}:n={max_sn}", 0)
    for w in all_permutations(max_sn + 1):
        result.cases += 1
        span = kp_module(w, max_sn)
        s = schubert(w)
        if character(span, max_sn) != s or span.dimension != evaluate_all_ones(s):
            result.failures.append(str(w))
    return result


def pieri_task(max_sn: int, max_i: int = 3, max_d: int = 4) -> TaskResult:
    result = TaskResult(f"pieri:S{max_sn}", 0)
    for w in all_permutations(max_sn):
        for i in range(1, max_i + 1):
            for d in range(max_d + 1):
                for kind in ("X", "Y"):
                    result.cases += 1
                    if not verify_pieri(w, i, d, kind).ok:
                        result.failures.append((str(w), i, d, kind))
    return result


def filtration_task(max_sn: int, n: int | None = None, max_i: int = 3, ds=(1, 2)) -> TaskResult:
    n = max_sn if n is None else n
    result = TaskResult(f"filtration:S{max_sn}:n={n}", 0)
    for w in all_permutations(max_sn):
        for i in range(1, max_i + 1):
            for d in ds:
                for kind in ("X", "Y"):
                    result.cases += 1
                    report = build_filtration(w, i, d, kind, n)
                    if not report.ok:
                        result.failures.append((str(w), i, d, kind, report.verdict))
    return result


def lemma_tasks() -> list[TaskResult]:
    out = []
    for key, fn in (("lemma:pqpq", check_pqpq), ("lemma:m-invar", check_m_invariance), ("lemma:cover", check_cover_lemma)):
        failures, cases = fn()
        out.append(TaskResult(key, cases, failures))
    return out


def divided_difference_task(seed: int, count: int = 200) -> TaskResult:
    rng = random.Random(seed)
    result = TaskResult("structural:divided-differences", 0)
    for _ in range(count):
        f = random_polynomial(rng)
        result.cases += 1
        for i in (1, 2, 3):
            if divided_difference(divided_difference(f, i), i):
                result.failures.append(("nilpotence", i, str(f)))
        for i in (1, 2):
            lhs = divided_difference(divided_difference(divided_difference(f, i), i + 1), i)
            rhs = divided_difference(divided_difference(divided_difference(f, i + 1), i), i + 1)
            if lhs != rhs:
                result.failures.append(("braid", i, str(f)))
    return result


def _sub(x: dict, y: dict) -> dict:
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def bracket_task(seed: int, count: int = 100, n: int = 4) -> TaskResult:
    """[e_ab, e_cd] = delta_bc e_ad - delta_da e_cb on random elements of T."""
    rng = random.Random(seed)
    result = TaskResult("structural:lie-bracket", 0)
    pairs = lie_pairs(n)
    for _ in range(count):
        x = random_wedge_element(rng, n)
        result.cases += 1
        for (a, b), (c, d) in itertools.product(pairs, pairs):
            lhs = _sub(act_e(a, b, act_e(c, d, x, n), n), act_e(c, d, act_e(a, b, x, n), n))
            rhs = act_e(a, d, x, n) if b == c else {}
            if d == a:
                rhs = _sub(rhs, act_e(c, b, x, n))
            if lhs != rhs:
                result.failures.append(((a, b), (c, d), x))
                break
        for mono in x:
            for p, q in pairs:
                expected = list(weight(mono, n))
                expected[p - 1] += 1
                expected[q - 1] -= 1
                if any(weight(m, n) != tuple(expected) for m in act_e(p, q, {mono: 1}, n)):
                    result.failures.append(("weight", (p, q), mono))
    return result


def _chains_range(max_sn: int, max_i: int = 3, ds=(1, 2)):
    for w in all_permutations(max_sn):
        for i in range(1, max_i + 1):
            for d in ds:
                for kind in ("X", "Y"):
                    for chain in enumerate_chains(w, i, d, kind):
                        yield w, i, d, kind, chain


def commutativity_task(max_sn: int, n: int | None = None) -> TaskResult:
    """Reordering the commuting factors of v_zeta and phi_zeta changes nothing."""
    n = max_sn if n is None else n
    result = TaskResult("structural:operator-commutativity", 0)
    for w, i, d, kind, chain in _chains_range(max_sn):
        result.cases += 1
        base_v = v_tensor_part(chain, n)
        base_phi = apply_e_primes(chain, base_v)
        for order in itertools.permutations(range(chain.d)):
            if v_tensor_part(chain, n, list(order)) != base_v:
                result.failures.append(("e", str(w), i, d, kind, chain.steps, order))
            if apply_e_primes(chain, base_v, list(order)) != base_phi:
                result.failures.append(("e'", str(w), i, d, kind, chain.steps, order))
    return result


def equivariance_task(max_sn: int, n: int | None = None) -> TaskResult:
    """phi_zeta(e_pq . v) == e_pq . phi_zeta(v) for every v_zeta in range."""
    n = max_sn if n is None else n
    result = TaskResult("structural:phi-equivariance", 0)
    for w, i, d, kind, chain in _chains_range(max_sn):
        v = build_v(chain, n)
        for p, q in lie_pairs(n):
            result.cases += 1
            lhs = apply_phi(chain, tensor_act(p, q, v, i, n, kind), n)
            rhs = act_e(p, q, apply_phi(chain, v, n), n)
            if lhs != rhs:
                result.failures.append((str(w), i, d, kind, chain.steps, (p, q)))
    return result


def order_task(max_sn: int) -> TaskResult:
    result = TaskResult(f"structural:order-totality:S{max_sn}", 0)
    perms = all_permutations(max_sn)
    for name, cmp in (("lex", lex_compare_inverse), ("rlex", rlex_compare_inverse)):
        for a, b in itertools.product(perms, perms):
            result.cases += 1
            if cmp(a, b) != -cmp(b, a) or (cmp(a, b) == 0) != (a == b):
                result.failures.append((name, str(a), str(b)))
        for a, b, c in itertools.product(perms, perms, perms):
            if cmp(a, b) < 0 and cmp(b, c) < 0 and not cmp(a, c) < 0:
                result.failures.append((name, "transitivity", str(a), str(b), str(c)))
    return result


def run_suite(max_sn: int = 4, seed: int = 0) -> list[TaskResult]:
    """All range and structural checks; results sorted by task key."""
    tasks: list[Callable[[], list[TaskResult] | TaskResult]] = [
        lambda: character_task(max_sn),
        lambda: pieri_task(max_sn),
        lambda: filtration_task(max_sn),
        lemma_tasks,
        lambda: divided_difference_task(seed),
        lambda: bracket_task(seed),
        lambda: commutativity_task(max_sn),
        lambda: equivariance_task(max_sn),
        lambda: order_task(max_sn),
    ]
    results: list[TaskResult] = []
    for task in tasks:
        start = time.perf_counter()
        out = task()
        elapsed = time.perf_counter() - start
        batch = out if isinstance(out, list) else [out]
        for r in batch:
            r.seconds = elapsed / len(batch)
        results.extend(batch)
    return sorted(results, key=lambda r: r.key)
