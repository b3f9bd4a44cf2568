from kpfilt.lemmas import check_cover_lemma, check_m_invariance, check_pqpq, pqpq_element
from kpfilt.permutation import IDENTITY, Permutation

P = Permutation


def test_pqpq_exhaustive():
    failures, cases = check_pqpq()
    assert failures == []
    assert cases > 300


def test_m_invariance_exhaustive():
    failures, cases = check_m_invariance()
    assert failures == []
    assert cases > 500


def test_cover_lemma_exhaustive():
    failures, cases = check_cover_lemma()
    assert failures == []
    assert cases > 200


def test_pqpq_element_examples():
    # w = id, p = q2 column: u_{12} ^ u_id = u_{12}
    assert pqpq_element(IDENTITY, 1, 2, 1, 2, 2) == {((1, 2),): 1}
    # w = 2,1 with the cover t_{13}: u_{13} ^ u_{12} = -u_{12} ^ u_{13}
    assert pqpq_element(P((2, 1)), 1, 3, 1, 3, 2) == {((1, 2), (1, 3)): -1}
