import itertools
import math

import pytest

from kpfilt.exterior import act_e, kp_module, lie_pairs, u_of
from kpfilt.filtration import (
    apply_e_primes,
    apply_phi,
    build_filtration,
    build_v,
    check_main_proposition,
    e_prime,
    embed_tensor,
    factor_dimension,
    mu,
    tensor_act,
    tensor_operators,
    v_exponents,
    v_tensor_part,
)
from kpfilt.permutation import IDENTITY, Permutation, all_permutations
from kpfilt.pieri import enumerate_X, sorted_chains
from kpfilt.schubert import evaluate_all_ones, schubert

from oracles import closure_rank

P = Permutation
UNIT = ()


def u_key_of(w):
    [mono] = u_of(w, max(w.size, 1))
    return mono


def test_tensor_act_examples():
    assert tensor_act(1, 2, {(UNIT, (2,)): 1}, 2, 2, "X") == {(UNIT, (1,)): 1}
    assert tensor_act(1, 2, {(UNIT, (1,)): 1}, 2, 2, "X") == {}
    assert tensor_act(1, 2, {(((2, 3),), (2,)): 1}, 2, 2, "X") == {
        (((1, 3),), (2,)): 1,
        (((2, 3),), (1,)): 1,
    }


def test_tensor_act_labels():
    # symmetric: multiplicity of q; exterior: repeats vanish
    assert tensor_act(1, 2, {(UNIT, (2, 2)): 1}, 2, 2, "X") == {(UNIT, (1, 2)): 2}
    assert tensor_act(1, 2, {(UNIT, (1, 2)): 1}, 2, 2, "Y") == {}
    assert tensor_act(1, 3, {(UNIT, (2, 3)): 1}, 3, 3, "Y") == {(UNIT, (1, 2)): -1}
    # K^i is untouched when q > i
    assert tensor_act(1, 3, {(UNIT, (1,)): 1}, 2, 3, "X") == {}
    with pytest.raises(ValueError):
        tensor_act(1, 4, {(UNIT, (1,)): 1}, 2, 3, "X")


def test_e_prime_examples():
    assert e_prime(3, 1, {((2, 1),): 1}) == {((2, 3),): 1}
    assert e_prime(2, 1, {((1, 3),): 1}) == {}
    assert e_prime(3, 2, {((1, 2), (3, 2)): 1}) == {((1, 3), (3, 2)): 1, ((1, 2), (3, 3)): 1}
    with pytest.raises(ValueError):
        e_prime(1, 2, {((1, 1),): 1})


def test_mu_examples():
    assert mu(3, {(UNIT, (1,)): 1}) == {(((1, 3),), ()): 1}
    assert mu(2, {(((1, 2),), (1,)): 1}) == {}
    assert mu(3, {(((1, 2),), (1,)): 1}) == {(((1, 2), (1, 3)), ()): -1}
    with pytest.raises(ValueError):
        mu(3, {(UNIT, ()): 1})


def test_embed_tensor_examples():
    assert embed_tensor((1, 1), "X") == {(1, 1): 2}
    assert embed_tensor((1, 2), "X") == {(1, 2): 1, (2, 1): 1}
    assert embed_tensor((1, 2), "Y") == {(1, 2): 1, (2, 1): -1}
    assert embed_tensor((), "Y") == {(): 1}


def test_build_v_examples():
    [chain] = enumerate_X(P((2, 1)), 1, 1)
    assert build_v(chain, 2) == {(((1, 2),), (1,)): 1}
    [chain] = enumerate_X(P((2, 3, 1)), 2, 0)
    assert build_v(chain, 3) == {(u_key_of(P((2, 3, 1))), ()): 1}
    [chain] = enumerate_X(IDENTITY, 1, 2)
    assert v_exponents(chain) == [0, 0]
    assert build_v(chain, 3) == {(UNIT, (1, 1)): 1}


def test_apply_phi_examples():
    [chain] = enumerate_X(P((2, 1)), 1, 1)
    image = apply_phi(chain, build_v(chain, 2), 2)
    assert image == {u_key_of(P((3, 1, 2))): -1}
    [chain] = enumerate_X(P((1, 3, 2)), 2, 0)
    assert apply_phi(chain, {(u_key_of(P((1, 3, 2))), ()): 1}, 3) == {((2, 3),): 1}
    assert apply_phi(chain, {}, 3) == {}


def test_main_proposition_examples():
    report = check_main_proposition(P((2, 1)), 1, 1, "X", 2)
    assert report.nonzero == [[True]] and report.triangular
    report = check_main_proposition(P((1, 3, 2)), 2, 1, "X", 4)
    assert [c.steps for c in report.chains] == [((2, 4),), ((1, 3),)]
    assert report.nonzero == [[True, True], [False, True]]
    assert report.triangular and all(report.constants)
    for kind in "XY":
        report = check_main_proposition(P((2, 3, 1)), 2, 0, kind, 3)
        assert report.nonzero == [[True]] and report.constants == [1]


def test_filtration_examples():
    report = build_filtration(P((2, 1)), 1, 1, "X", 2)
    assert report.ok and report.ladder == [0, 1]
    assert [(q.end, q.dim) for q in report.quotients] == [(P((3, 1, 2)), 1)]
    for kind in "XY":
        report = build_filtration(P((1, 3, 2)), 2, 0, kind, 3)
        assert report.ok and report.ladder == [0, 2]


def test_filtration_132_two_steps():
    w = P((1, 3, 2))
    report = build_filtration(w, 2, 1, "X", 4)
    assert report.ok
    assert [q.end for q in report.quotients] == [P((1, 4, 2, 3)), P((2, 3, 1))]
    assert [q.dim for q in report.quotients] == [3, 1]
    assert report.ladder == [0, 3, 4]
    assert report.to_json()["verdict"] == "ok"


def test_filtration_132_ladder_against_dense_rank():
    w, i, d, kind, n = P((1, 3, 2)), 2, 1, "X", 4
    chains = sorted_chains(w, i, d, kind)
    vs = [build_v(c, n) for c in chains]
    ops = tensor_operators(i, n, kind)
    assert [closure_rank(vs[:j], ops) for j in range(len(vs) + 1)] == [0, 3, 4]
    # the chain ending at 2,3,1 alone already generates a 2-dimensional module,
    # so no ordering can start the ladder with dimension 1
    assert closure_rank([vs[1]], ops) == 2


@pytest.mark.parametrize("kind", ["X", "Y"])
def test_filtration_ladders_against_dense_rank_S3(kind):
    n = 3
    for w in all_permutations(3):
        for i in (1, 2):
            for d in (1, 2):
                chains = sorted_chains(w, i, d, kind)
                vs = [build_v(c, n) for c in chains]
                ops = tensor_operators(i, n, kind)
                expected = [closure_rank(vs[:j], ops) for j in range(len(vs) + 1)]
                report = build_filtration(w, i, d, kind, n)
                assert report.ladder == expected, (w, i, d)
                assert report.ok, (w, i, d, report.verdict)


def test_dimension_bookkeeping():
    n = 4
    for w in all_permutations(4):
        dim_w = kp_module(w, n).dimension
        for i in (1, 2, 3):
            for d in (1, 2, 3):
                for kind in "XY":
                    total = sum(evaluate_all_ones(schubert(c.end)) for c in sorted_chains(w, i, d, kind))
                    assert total == dim_w * factor_dimension(i, d, kind)
    assert factor_dimension(3, 2, "X") == math.comb(4, 2)
    assert factor_dimension(2, 3, "Y") == 0


def _range(ws, n, ds=(1, 2)):
    for w in ws:
        for i in (1, 2, 3):
            for d in ds:
                for kind in "XY":
                    for chain in sorted_chains(w, i, d, kind):
                        yield i, kind, chain


def test_phi_is_equivariant_S4():
    n = 4
    for i, kind, chain in _range(all_permutations(4), n):
        v = build_v(chain, n)
        for p, q in lie_pairs(n):
            lhs = apply_phi(chain, tensor_act(p, q, v, i, n, kind), n)
            assert lhs == act_e(p, q, apply_phi(chain, v, n), n), (chain, p, q)


def test_operator_commutativity_S4():
    n = 4
    for _, _, chain in _range(all_permutations(4), n):
        base = v_tensor_part(chain, n)
        for order in itertools.permutations(range(chain.d)):
            assert v_tensor_part(chain, n, list(order)) == base
            assert apply_e_primes(chain, base, list(order)) == apply_e_primes(chain, base)


def test_filtration_d3_sample():
    for w in (IDENTITY, P((2, 1)), P((1, 3, 2)), P((2, 4, 1, 3))):
        for kind in "XY":
            report = build_filtration(w, 3, 3, kind, 4)
            assert report.ok, (w, kind, report.verdict)


def test_input_validation():
    with pytest.raises(ValueError):
        build_filtration(P((1, 3, 2)), 2, 1, "Z", 4)
    with pytest.raises(ValueError):
        build_filtration(P((1, 3, 2)), 5, 1, "X", 4)
    with pytest.raises(ValueError):
        build_filtration(P((1, 3, 2)), 1, 1, "X", 1)
    with pytest.raises(ValueError):
        check_main_proposition(P((2, 1)), 1, -1, "X", 2)
