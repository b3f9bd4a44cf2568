"""KP filtrations of S_w (x) S^d(K^i) and S_w (x) Lambda^d(K^i).

Tensor elements are dicts keyed by ``(wedge_monomial, label)``.  For the
symmetric power the label is a weakly increasing tuple (a multiset basis
element of S^d(K^i)); for the exterior power it is a strictly increasing
tuple.  The label kind is not stored in the key, so every function here that
acts on labels takes ``kind`` ("X" for symmetric, "Y" for exterior,
matching the chain set that indexes the filtration).

Maps out of the tensor module first expand a label into honest d-fold
tensors (:func:`embed_tensor`); those are dicts keyed by ``(monomial, word)``
where ``word`` lists the K^i basis indices slot by slot.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal

from .exterior import (
    EchelonSpan,
    Element,
    act_e,
    act_e_monomial,
    add_into,
    character,
    close_under,
    kp_module,
    lie_pairs,
    normalize,
    u_of,
    weight,
)
from .permutation import Permutation, in_S_paren, m_prime_value, m_value, inversion_set
from .pieri import PieriChain, sorted_chains
from .schubert import Polynomial, evaluate_all_ones, schubert

Kind = Literal["X", "Y"]


def tensor_order(key):
    mono, label = key
    return (len(mono), mono, label)


def tensor_weight(key, n: int) -> tuple[int, ...]:
    mono, label = key
    lam = list(weight(mono, n))
    for p in label:
        lam[p - 1] += 1
    return tuple(lam)


def factor_dimension(i: int, d: int, kind: Kind) -> int:
    """dim S^d(K^i) or dim Lambda^d(K^i)."""
    return math.comb(i + d - 1, d) if kind == "X" else math.comb(i, d)


def _act_label(p: int, q: int, label: tuple[int, ...], kind: Kind) -> dict:
    """e_{pq} on one basis label of S^d(K^i) or Lambda^d(K^i); K^i has e_{pq} u_j = delta_{qj} u_p."""
    if q not in label:
        return {}
    if kind == "X":
        count = label.count(q)
        if p == q:
            return {label: count}
        k = label.index(q)
        new = tuple(sorted(label[:k] + (p,) + label[k + 1:]))
        return {new: count}
    if p == q:
        return {label: 1}
    k = label.index(q)
    sign, new = normalize(label[:k] + (p,) + label[k + 1:])
    return {new: sign} if sign else {}


def tensor_act(p: int, q: int, x: dict, i: int, n: int, kind: Kind) -> dict:
    """e_{pq} (a (x) b) = (e_{pq} a) (x) b + a (x) (e_{pq} b)."""
    if not 1 <= p <= q:
        raise ValueError(f"e_{{{p}{q}}} is not upper triangular")
    if q > n:
        raise ValueError(f"e_{{{p}{q}}} is not in b_{n}: q > n")
    out: dict = {}
    for (mono, label), c in x.items():
        for new, s in act_e_monomial(p, q, mono).items():
            add_into(out, (new, label), c * s)
        if q <= i:
            for new, s in _act_label(p, q, label, kind).items():
                add_into(out, (mono, new), c * s)
    return out


def e_prime_monomial(q: int, p: int, mono) -> dict:
    out: dict = {}
    for k, (row, col) in enumerate(mono):
        if col != p:
            continue
        factors = list(mono)
        factors[k] = (row, q)
        sign, new = normalize(factors)
        if sign:
            add_into(out, new, sign)
    return out


def e_prime(q: int, p: int, x: Element) -> Element:
    """e'_{qp}: replace one column p by column q, summed over factors (p <= q)."""
    if p > q:
        raise ValueError(f"e'_{{{q}{p}}} needs p <= q")
    out: dict = {}
    for mono, c in x.items():
        for new, s in e_prime_monomial(q, p, mono).items():
            add_into(out, new, c * s)
    return out


def mu(j: int, x: dict) -> dict:
    """mu_j: u (x) (v_1 (x) v_2 ...) -> (iota_j(v_1) ^ u) (x) (v_2 ...), iota_j(u_p) = u_{pj}."""
    out: dict = {}
    for (mono, word), c in x.items():
        if not word:
            raise ValueError("mu needs at least one tensor slot")
        sign, new = normalize(((word[0], j),) + tuple(mono))
        if sign:
            add_into(out, (new, word[1:]), c * sign)
    return out


def embed_tensor(label: tuple[int, ...], kind: Kind) -> dict:
    """The label as an explicit (anti)symmetrized sum over S_d of d-fold tensors."""
    out: dict = {}
    for sigma in itertools.permutations(range(len(label))):
        word = tuple(label[s] for s in sigma)
        sign = 1
        if kind == "Y":
            sign, _ = normalize(sigma)
        add_into(out, word, sign)
    return out


def apply_power(op, times: int, x: dict) -> dict:
    for _ in range(times):
        if not x:
            break
        x = op(x)
    return x


def v_exponents(chain: PieriChain) -> list[int]:
    """m_{p_j q_j}(w_j) for each step."""
    return [m_value(chain.w_at(j), p, q) for j, (p, q) in enumerate(chain.steps, start=1)]


def phi_exponents(chain: PieriChain) -> list[int]:
    """m'_{q_j p_j}(w_j) for each step."""
    return [m_prime_value(chain.w_at(j), q, p) for j, (p, q) in enumerate(chain.steps, start=1)]


def v_tensor_part(chain: PieriChain, n: int, order: list[int] | None = None) -> Element:
    """prod_j e_{p_j q_j}^{m_j} u_w; ``order`` permutes the factors (they commute)."""
    exps = v_exponents(chain)
    x = u_of(chain.base, n)
    for j in order if order is not None else range(chain.d):
        p, q = chain.steps[j]
        if q > n:
            # e_{pq} with q > n is not in b_n; the exponent is forced to 0
            assert exps[j] == 0, f"m_{{{p}{q}}} = {exps[j]} with q > n"
            continue
        x = apply_power(lambda y: act_e(p, q, y, n), exps[j], x)
    return x


def chain_label(chain: PieriChain) -> tuple[int, tuple[int, ...]]:
    """prod_j u_{p_j} (or the wedge) as (sign, basis label)."""
    ps = [p for p, _ in chain.steps]
    if chain.kind == "X":
        return 1, tuple(sorted(ps))
    return normalize(ps)


def build_v(chain: PieriChain, n: int) -> dict:
    """v_zeta in S_w (x) S^d(K^i) (X chains) or S_w (x) Lambda^d(K^i) (Y chains)."""
    t_part = v_tensor_part(chain, n)
    if not t_part:
        raise AssertionError(f"T-part of v_zeta vanished for chain {chain.steps} over {chain.base}")
    sign, label = chain_label(chain)
    if not sign:
        raise AssertionError(f"repeated p in Y chain {chain.steps}")
    return {(mono, label): c * sign for mono, c in t_part.items()}


def apply_e_primes(chain: PieriChain, x: Element, order: list[int] | None = None) -> Element:
    exps = phi_exponents(chain)
    for j in order if order is not None else range(chain.d):
        p, q = chain.steps[j]
        x = apply_power(lambda y: e_prime(q, p, y), exps[j], x)
    return x


def apply_phi(chain: PieriChain, x: dict, n: int) -> Element:
    """phi_zeta = mu_{q_d} ... mu_{q_1} prod_j (e'_{q_j p_j})^{m'_j}, landing in T."""
    kind = chain.kind
    qs = [q for _, q in chain.steps]
    words: dict = {}
    cache: dict = {}
    for (mono, label), c in x.items():
        if len(label) != chain.d:
            raise ValueError(f"label {label} has degree {len(label)}, chain has {chain.d}")
        if mono not in cache:
            cache[mono] = apply_e_primes(chain, {mono: 1})
        for word, s in embed_tensor(label, kind).items():
            for new, t in cache[mono].items():
                add_into(words, (new, word), c * s * t)
    for q in qs:
        words = mu(q, words)
    return {mono: c for (mono, _), c in words.items()}


def multiple_of(x: Element, mono) -> Fraction | None:
    """c if x == c * mono with c != 0, else None."""
    if len(x) == 1 and mono in x:
        return Fraction(x[mono])
    return None


def u_key(w: Permutation):
    return tuple(sorted(inversion_set(w)))


def _fmt_fraction(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@dataclass
class TriangularityReport:
    w: Permutation
    i: int
    d: int
    kind: Kind
    n: int
    chains: list[PieriChain]
    # nonzero[a][b]: is phi_{zeta_a}(v_{zeta_b}) nonzero
    nonzero: list[list[bool]]
    constants: list[Fraction | None]
    violations: list[str] = field(default_factory=list)

    @property
    def triangular(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "w": list(self.w.images),
            "i": self.i,
            "d": self.d,
            "kind": self.kind,
            "n": self.n,
            "chains": [c.to_json() for c in self.chains],
            "matrix": [[int(v) for v in row] for row in self.nonzero],
            "diagonal_constants": [None if c is None else _fmt_fraction(c) for c in self.constants],
            "triangular": self.triangular,
            "verdict": "ok" if self.triangular else f"fail:{self.violations[0]}",
        }


def _check_inputs(w: Permutation, i: int, d: int, kind: str, n: int) -> None:
    if kind not in ("X", "Y"):
        raise ValueError(f"kind must be 'X' or 'Y', got {kind!r}")
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    if d < 0:
        raise ValueError(f"need d >= 0, got {d}")
    if not in_S_paren(w, n):
        raise ValueError(f"{w} is not in S^({n})")


def check_main_proposition(w: Permutation, i: int, d: int, kind: Kind, n: int) -> TriangularityReport:
    """Evaluate phi_{zeta'}(v_zeta) for every ordered pair of chains.

    The diagonal must be a nonzero multiple of u_{w zeta}; below the diagonal
    (v of an earlier chain, phi of a later one) everything must vanish.
    """
    _check_inputs(w, i, d, kind, n)
    chains = sorted_chains(w, i, d, kind)
    vs = [build_v(c, n) for c in chains]
    report = TriangularityReport(w, i, d, kind, n, chains, [], [])
    for a, ca in enumerate(chains):
        row = []
        for b, vb in enumerate(vs):
            image = apply_phi(ca, vb, n)
            row.append(bool(image))
            if a == b:
                const = multiple_of(image, u_key(ca.end))
                report.constants.append(const)
                if const is None:
                    report.violations.append(f"diagonal:{a}")
            elif b < a and image:
                report.violations.append(f"nonzero:{a},{b}")
        report.nonzero.append(row)
    return report


@dataclass
class Quotient:
    end: Permutation
    dim: int
    character: Polynomial

    def to_json(self) -> dict:
        return {"end": list(self.end.images), "dim": self.dim, "character": self.character.to_json()}


@dataclass
class FiltrationReport:
    w: Permutation
    i: int
    d: int
    kind: Kind
    n: int
    chains: list[PieriChain]
    ladder: list[int]
    quotients: list[Quotient]
    triangular: bool
    failures: list[str]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "ok" if self.ok else f"fail:{self.failures[0]}"

    def to_json(self) -> dict:
        return {
            "w": list(self.w.images),
            "i": self.i,
            "d": self.d,
            "kind": self.kind,
            "n": self.n,
            "chains": [c.to_json() for c in self.chains],
            "ladder": list(self.ladder),
            "quotients": [q.to_json() for q in self.quotients],
            "triangular": self.triangular,
            "verdict": self.verdict,
        }


def tensor_operators(i: int, n: int, kind: Kind) -> list:
    return [lambda x, p=p, q=q: tensor_act(p, q, x, i, n, kind) for p, q in lie_pairs(n)]


def build_filtration(w: Permutation, i: int, d: int, kind: Kind, n: int) -> FiltrationReport:
    """Build 0 = M_0 < M_1 < ... < M_r with M_j generated by v_{zeta_1..zeta_j} and check it.

    Checks, in order: generation (dim M_r), the dimension ladder, quotient
    characters, and that phi_{zeta_j} kills M_{j-1} and maps M_j onto S_{w zeta_j}.
    """
    _check_inputs(w, i, d, kind, n)
    chains = sorted_chains(w, i, d, kind)
    ops = tensor_operators(i, n, kind)
    key_weight = lambda key: tensor_weight(key, n)  # noqa: E731
    span = EchelonSpan(tensor_order)
    ladder = [0]
    steps: list[int] = [0]  # len(span.added) after each stage
    chars = [Polynomial()]
    quotients = []
    failures: list[str] = []

    for j, chain in enumerate(chains, start=1):
        close_under(span, [build_v(chain, n)], ops)
        ladder.append(span.dimension)
        steps.append(len(span.added))
        chars.append(character(span, n, key_weight))
        diff = chars[-1] - chars[-2]
        target = kp_module(chain.end, n)
        quotients.append(Quotient(chain.end, ladder[-1] - ladder[-2], diff))

        if ladder[-1] - ladder[-2] != target.dimension or target.dimension != evaluate_all_ones(schubert(chain.end)):
            failures.append(f"ladder:{j}")
        if diff != schubert(chain.end).truncate(n):
            failures.append(f"character:{j}")

        earlier = span.added[: steps[-2]]
        current = span.added[steps[-2]: steps[-1]]
        if any(apply_phi(chain, x, n) for x in earlier):
            failures.append(f"phi-kernel:{j}")
        image = EchelonSpan()
        for x in current:
            image.add(apply_phi(chain, x, n))
        if not image.same_subspace(target):
            failures.append(f"phi-image:{j}")

    dim_sw = kp_module(w, n).dimension
    if ladder[-1] != dim_sw * factor_dimension(i, d, kind):
        failures.insert(0, "generation")
    failures.sort(key=lambda f: ["generation", "ladder", "character", "phi-kernel", "phi-image"].index(f.split(":")[0]))

    tri = check_main_proposition(w, i, d, kind, n)
    if not tri.triangular:
        failures.append("triangularity")
    return FiltrationReport(w, i, d, kind, n, chains, ladder, quotients, tri.triangular, failures)
