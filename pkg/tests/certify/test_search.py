import pytest
from hypothesis import given, settings, strategies as st
from algunknot.words import Word, enumerate_candidate_conjugators
from algunknot.constructors import (
    Presentation, catalog_presentation, connected_sum_many, twist_spin,
    dihedral_product_group
)
from algunknot.certify import (
    Budget, Inconclusive, replay, default_workers, candidate_tuples,
    search_upper_bound, combine_summand_witnesses, verify_nonadditivity,
    ribbon_stabilization_bound
)


@pytest.fixture
def budget():
    return Budget(max_word_length=2)


@given(n=st.integers(0, 7), c=st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_candidate_tuples(n, c):
    candidates = sorted(
        list(enumerate_candidate_conjugators(2, 0, 2))[:n],
        key=Word.sort_key
    )
    n = len(candidates)
    tuples = list(candidate_tuples(candidates, c))
    index = {w: i for i, w in enumerate(candidates)}
    expected = 1
    for k in range(c):
        expected = expected*(n - k)//(k + 1)
    assert len(tuples) == expected
    assert len(set(tuples)) == len(tuples)
    totals = [sum(len(w) for w in t) for t in tuples]
    assert totals == sorted(totals)
    for t in tuples:
        positions = [index[w] for w in t]
        assert positions == sorted(set(positions))


def test_default_workers():
    assert default_workers() >= 1


@pytest.mark.parametrize('kind', ['ma_qiu', 'a_st', 'a_fw'])
def test_trefoil_bound_one(kind, budget):
    certificate = search_upper_bound(
        catalog_presentation('3_1'), kind, 2, budget
    )
    assert certificate.bound == 1
    assert certificate.payload['invariant'] == kind
    assert certificate.payload['direction'] == 'upper'
    replay(certificate)


def test_unknot_bound_zero(budget):
    certificate = search_upper_bound(
        catalog_presentation('unknot'), 'a_fw', 1, budget
    )
    assert certificate.bound == 0
    assert certificate.payload['relators'] == []
    replay(certificate)


def test_zero_relators_not_enough(budget):
    outcome = search_upper_bound(
        catalog_presentation('3_1'), 'a_st', 0, budget
    )
    assert isinstance(outcome, Inconclusive)


def test_c_min_skips_smaller_counts(budget):
    certificate = search_upper_bound(
        catalog_presentation('3_1'), 'a_st', 2, budget, c_min=2
    )
    assert certificate.bound == 2


def test_search_errors(budget):
    P = catalog_presentation('3_1')
    with pytest.raises(ValueError, match='Unknown relator kind'):
        search_upper_bound(P, 'a_xyz', 1, budget)
    with pytest.raises(ValueError, match='must be >= 0'):
        search_upper_bound(P, 'a_st', -1, budget)


def test_verbose_search(capsys, budget):
    search_upper_bound(
        catalog_presentation('3_1'), 'a_fw', 1, budget, verbose=True
    )
    assert 'Trying 1 a_fw relators' in capsys.readouterr().out


def test_combine_summand_witnesses(budget):
    Ps = [catalog_presentation('3_1'), catalog_presentation('3_1')]
    certificates = [search_upper_bound(P, 'a_fw', 1, budget) for P in Ps]
    certificate = combine_summand_witnesses(Ps, certificates, 'a_fw', budget)
    assert certificate.bound == 2
    assert certificate.presentation_hash == (
        connected_sum_many(Ps).presentation_hash
    )
    # the second witness lives on the second summand's generators
    second = Word.parse(certificate.payload['witnesses'][1][0])
    assert min(second.generators()) >= Ps[0].gen_count
    replay(certificate)


def test_combine_errors(budget):
    P = catalog_presentation('3_1')
    certificate = search_upper_bound(P, 'a_fw', 1, budget)
    with pytest.raises(ValueError, match='certificates for 2 summands'):
        combine_summand_witnesses([P, P], [certificate], 'a_fw', budget)
    with pytest.raises(ValueError, match='not a_st'):
        combine_summand_witnesses(
            [P, P], [certificate, certificate], 'a_st', budget
        )


def test_nonadditivity_errors(budget):
    P = catalog_presentation('3_1')
    with pytest.raises(ValueError, match='pairwise coprime'):
        verify_nonadditivity([P, P], [2, 4], budget)
    with pytest.raises(ValueError, match='one twist number'):
        verify_nonadditivity([P, P], [2], budget)
    with pytest.raises(ValueError, match='cannot be combined'):
        verify_nonadditivity([P, P], [2, 3], budget, kind='ma_qiu')


def test_nonadditivity_single_summand(budget):
    certificate = verify_nonadditivity(
        [catalog_presentation('3_1')], [1], budget
    )
    assert certificate.bound == 1


@pytest.mark.parametrize('conjugators, bound', [
    ([], 0),
    (['x1'], 1),
    (['x0.x1', 'x2^-1'], 2),
])
def test_ribbon_stabilization_bound(conjugators, bound):
    certificate = ribbon_stabilization_bound(
        [Word.parse(text) for text in conjugators], Budget()
    )
    assert certificate.bound == bound
    assert certificate.payload['invariant'] == 'a_st'
    replay(certificate)


@pytest.mark.slow
def test_parallel_search_matches_serial():
    P = catalog_presentation('5_1')
    budget = Budget(max_word_length=3)
    serial = search_upper_bound(P, 'a_st', 1, budget)
    parallel = search_upper_bound(P, 'a_st', 1, budget, workers=2)
    assert serial == parallel


@pytest.mark.parametrize('name', ['3_1', '4_1', '5_1', '5_2'])
def test_two_twist_spin_finger_move(name):
    P = twist_spin(catalog_presentation(name), 2)
    certificate = search_upper_bound(P, 'a_fw', 1, Budget())
    assert certificate.bound == 1
    assert certificate.payload['invariant'] == 'a_fw'
    replay(certificate)


def test_non_uniform_presentation_reaches_enumeration(budget):
    # x1 = x0^2, so the group is Z on the meridian x0
    P = Presentation(
        2, [Word.parse('x1.x0^-2')], meridians=[True, False]
    )
    assert not P.has_uniform_abelianization()
    certificate = search_upper_bound(P, 'a_fw', 1, budget)
    assert certificate.bound == 0
    replay(certificate)


def test_finite_group_without_witness():
    outcome = search_upper_bound(
        dihedral_product_group(3, 3), 'a_st', 1,
        Budget(max_word_length=2, max_candidates=10)
    )
    assert isinstance(outcome, Inconclusive)
    assert 'no a_st witness' in outcome.reason


def test_parallel_matches_serial_trefoil(budget):
    P = catalog_presentation('3_1')
    serial = search_upper_bound(P, 'a_st', 1, budget)
    parallel = search_upper_bound(P, 'a_st', 1, budget, workers=2)
    assert serial.bound == 1
    assert serial == parallel
