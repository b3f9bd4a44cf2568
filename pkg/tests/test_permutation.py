import itertools

import pytest
from hypothesis import given, strategies as st

from kpfilt.permutation import (
    IDENTITY,
    Permutation,
    all_permutations,
    compose,
    from_lehmer_code,
    in_S_paren,
    inversion_set,
    is_cover,
    lehmer_code,
    length,
    lex_compare_inverse,
    m_prime_value,
    m_value,
    rlex_compare_inverse,
    times_transposition,
    transposition,
)

from oracles import brute_inverse_window, brute_length

P = Permutation

perms = st.integers(min_value=0, max_value=7).flatmap(
    lambda m: st.permutations(list(range(1, m + 1)))
).map(Permutation)


def test_canonical_form():
    assert P((1, 2, 3)) == IDENTITY
    assert P((2, 1, 3, 4)).images == (2, 1)
    assert hash(P((2, 1, 3))) == hash(P((2, 1)))
    assert P((2, 1))(7) == 7


@pytest.mark.parametrize("bad", ["2,2", "0,1", "1,3", "a,b", "1,,2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError, match="not a permutation"):
        Permutation.parse(bad)


def test_parse_roundtrip():
    assert Permutation.parse("2,1,3") == P((2, 1))
    assert str(Permutation.parse("3,1,2")) == "3,1,2"
    assert Permutation.parse("") == IDENTITY


def test_compose_examples():
    assert compose(IDENTITY, IDENTITY) == IDENTITY
    assert compose(P((2, 1)), P((2, 1))) == IDENTITY
    assert compose(P((1, 3, 2)), transposition(1, 3)) == P((2, 3, 1))


@given(perms, perms)
def test_compose_pointwise(u, v):
    uv = compose(u, v)
    for k in range(1, 10):
        assert uv(k) == u(v(k))


def test_length_examples():
    assert length(IDENTITY) == 0
    assert length(P((2, 1))) == 1
    assert length(P((3, 1, 4, 2))) == 3


def test_inversion_set_examples():
    assert inversion_set(IDENTITY) == set()
    assert inversion_set(P((2, 1))) == {(1, 2)}
    assert inversion_set(P((3, 2, 1))) == {(1, 2), (1, 3), (2, 3)}


@pytest.mark.parametrize("w", all_permutations(5), ids=str)
def test_length_is_inversion_count(w):
    assert length(w) == len(inversion_set(w)) == brute_length(w.window(5))


def test_is_cover_examples():
    assert is_cover(IDENTITY, 1, 2)
    assert not is_cover(IDENTITY, 1, 3)
    assert is_cover(P((2, 1)), 1, 3)
    assert is_cover(IDENTITY, 5, 6)


def test_is_cover_rejects_bad_pair():
    with pytest.raises(ValueError):
        is_cover(IDENTITY, 2, 2)
    with pytest.raises(ValueError):
        is_cover(IDENTITY, 3, 1)


def test_cover_agrees_with_length_on_S5():
    for w in all_permutations(5):
        for p, q in itertools.combinations(range(1, 8), 2):
            assert is_cover(w, p, q) == (length(times_transposition(w, p, q)) == length(w) + 1)


def _m_oracle(z, p, q, horizon=60):
    return sum(1 for r in range(q + 1, horizon) if z(p) < z(r) < z(q))


def test_m_value_examples():
    assert m_value(P((1, 3, 2)), 1, 2) == 1
    assert m_value(P((2, 1)), 1, 3) == 0
    assert m_value(IDENTITY, 1, 2) == 0


def test_m_prime_examples():
    assert m_prime_value(P((1, 3, 2)), 2, 1) == 0
    assert m_prime_value(P((2, 3, 1)), 3, 2) == 0
    assert m_prime_value(P((2, 1, 3)), 3, 2) == 1


def test_m_rejects_bad_pair():
    with pytest.raises(ValueError):
        m_value(IDENTITY, 2, 1)
    with pytest.raises(ValueError):
        m_prime_value(IDENTITY, 1, 2)


@given(perms, st.integers(1, 9), st.integers(1, 9))
def test_m_values_against_scan(z, a, b):
    if a == b:
        return
    p, q = min(a, b), max(a, b)
    assert m_value(z, p, q) == _m_oracle(z, p, q)
    assert m_prime_value(z, q, p) == sum(1 for r in range(1, p) if z(p) < z(r) < z(q))


def _cmp(x, y):
    return (x > y) - (x < y)


def test_lex_examples():
    w = P((3, 1, 2))
    assert lex_compare_inverse(w, w) == 0
    assert lex_compare_inverse(P((2, 1)), P((1, 2))) == 1
    # inverses are 3,1,2 and 2,3,1
    assert lex_compare_inverse(P((2, 3, 1)), P((3, 1, 2))) == 1


def test_rlex_examples():
    w = P((2, 3, 1))
    assert rlex_compare_inverse(w, w) == 0
    assert rlex_compare_inverse(P((2, 1)), IDENTITY) == -1


@given(perms, perms)
def test_orders_against_inverse_then_compare(a, b):
    size = max(a.size, b.size)
    ia, ib = brute_inverse_window(a, size), brute_inverse_window(b, size)
    assert lex_compare_inverse(a, b) == _cmp(ia, ib)
    assert rlex_compare_inverse(a, b) == _cmp(ia[::-1], ib[::-1])


@given(perms, perms, st.integers(0, 4))
def test_orders_window_independent(a, b, extra):
    size = max(a.size, b.size) + extra
    ia, ib = brute_inverse_window(a, size), brute_inverse_window(b, size)
    assert rlex_compare_inverse(a, b) == _cmp(ia[::-1], ib[::-1])
    assert lex_compare_inverse(a, b) == _cmp(ia, ib)


def test_lehmer_examples():
    assert lehmer_code(IDENTITY) == ()
    assert lehmer_code(P((3, 2, 1))) == (2, 1, 0)
    assert lehmer_code(P((2, 1))) == (1, 0)


@given(perms)
def test_lehmer_roundtrip(w):
    code = lehmer_code(w)
    assert sum(code) == length(w)
    assert from_lehmer_code(code) == w


def test_in_S_paren_examples():
    assert in_S_paren(IDENTITY, 1)
    assert in_S_paren(P((2, 1)), 1)
    assert not in_S_paren(P((1, 3, 2)), 1)


@given(perms, st.integers(1, 8))
def test_in_S_paren_matches_inversions(w, n):
    assert in_S_paren(w, n) == all(i <= n for i, _ in inversion_set(w))
