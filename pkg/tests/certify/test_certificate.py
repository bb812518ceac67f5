import os
import json
from copy import deepcopy
import pytest
from algunknot.words import Word
from algunknot.constructors import catalog_presentation, ribbon_presentation
from algunknot.certify import (
    Budget, KINDS, Certificate, CertificateError, CertificateCache, replay,
    certify_infinite_cyclic, certify_nonabelian_quotient, search_upper_bound
)


@pytest.fixture
def budget():
    return Budget(max_word_length=2, max_cosets=5000, time_limit=60)


@pytest.fixture
def unknot_certificate(budget):
    return certify_infinite_cyclic(catalog_presentation('unknot'), budget)


@pytest.fixture
def trefoil_quotient(budget):
    return certify_nonabelian_quotient(
        catalog_presentation('3_1'), budget=budget, ladder=['S3']
    )


def test_kinds():
    assert KINDS == (
        'InfiniteCyclic', 'NonTrivialQuotient', 'NonAbelianQuotient',
        'BoundWitness'
    )
    with pytest.raises(ValueError):
        Certificate('Bogus', 'abc')


def test_round_trip_and_digest(unknot_certificate):
    data = deepcopy(unknot_certificate.to_dict())
    copy = Certificate.from_dict(json.loads(json.dumps(data)))
    assert copy == unknot_certificate
    assert copy.digest == unknot_certificate.digest
    assert len({copy, unknot_certificate}) == 1


def test_from_dict_missing_keys():
    with pytest.raises(CertificateError, match='missing'):
        Certificate.from_dict({'kind': 'InfiniteCyclic'})


def test_from_dict_bad_kind():
    with pytest.raises(CertificateError):
        Certificate.from_dict({
            'kind': 'Bogus', 'presentation_hash': '', 'payload': {},
            'replay_data': {}
        })


def test_replay_accepts_dict(unknot_certificate, trefoil_quotient):
    for certificate in (unknot_certificate, trefoil_quotient):
        assert replay(certificate.to_dict()) == certificate


def test_tampered_hash(unknot_certificate):
    data = deepcopy(unknot_certificate.to_dict())
    data['presentation_hash'] = '0'*32
    with pytest.raises(CertificateError, match='does not match'):
        replay(data)


def test_tampered_peak(unknot_certificate):
    data = deepcopy(unknot_certificate.to_dict())
    data['payload']['peak_cosets'] = 0
    with pytest.raises(CertificateError):
        replay(data)


def test_replay_rejects_non_z():
    P = catalog_presentation('3_1')
    forged = Certificate(
        'InfiniteCyclic', P.presentation_hash,
        payload={'peak_cosets': 1000},
        replay_data={'presentation': P.to_dict()},
    )
    with pytest.raises(CertificateError, match='Completed'):
        replay(forged)


def test_tampered_images(trefoil_quotient):
    data = deepcopy(trefoil_quotient.to_dict())
    data['payload']['images'] = [[1, 0, 2], [1, 0, 2]]
    with pytest.raises(CertificateError, match='commute'):
        replay(data)
    data['payload']['images'] = [[1, 0, 2], [0, 2, 1], [0, 1, 2]]
    with pytest.raises(CertificateError, match='images'):
        replay(data)
    data['payload']['images'] = [[1, 0, 2], [1, 2, 0]]
    with pytest.raises(CertificateError, match='not killed'):
        replay(data)


def test_malformed_payload(trefoil_quotient):
    data = deepcopy(trefoil_quotient.to_dict())
    del data['payload']['images']
    with pytest.raises(CertificateError, match='Malformed'):
        replay(data)


def test_upper_bound_replay(budget):
    certificate = search_upper_bound(
        catalog_presentation('3_1'), 'a_fw', 1, budget
    )
    assert certificate.bound == 1
    replay(certificate.to_dict())

    data = deepcopy(certificate.to_dict())
    data['payload']['bound'] = 0
    with pytest.raises(CertificateError, match='witness bound'):
        replay(data)

    data = deepcopy(certificate.to_dict())
    data['payload']['invariant'] = 'a_st'
    with pytest.raises(CertificateError, match='shape'):
        replay(data)

    data = deepcopy(certificate.to_dict())
    data['payload']['direction'] = 'sideways'
    with pytest.raises(CertificateError, match='direction'):
        replay(data)


def test_cache(tmpdir, budget, unknot_certificate):
    cache = CertificateCache(os.path.join(tmpdir, 'certificates'))
    assert cache.entries() == []
    h = unknot_certificate.presentation_hash
    assert cache.get(h, 'search', budget) is None
    path = cache.put(unknot_certificate, 'search', budget)
    assert os.path.basename(path) == f'{h}_search_{budget.label}.json'
    assert cache.entries() == [path]
    assert cache.get(h, 'search', budget) == unknot_certificate
    assert cache.get(h, 'search', budget.with_changes(max_cosets=7)) is None
    assert cache.verify() == [(path, None)]
    assert cache.gc(max_age=10**9) == 0
    assert cache.gc(max_age=0) == 1
    assert cache.entries() == []


def test_cache_reports_bad_files(tmpdir, budget, unknot_certificate):
    cache = CertificateCache(str(tmpdir))
    good = cache.put(unknot_certificate, 'search', budget)
    data = deepcopy(unknot_certificate.to_dict())
    data['presentation_hash'] = 'f'*32
    bad = os.path.join(str(tmpdir), 'forged.json')
    with open(bad, 'w') as f:
        json.dump(data, f)
    results = dict(cache.verify())
    assert results[good] is None
    assert 'does not match' in results[bad]


def test_cache_corrupt_get(tmpdir, budget):
    cache = CertificateCache(str(tmpdir))
    path = cache.path('abc', 'search', budget)
    with open(path, 'w') as f:
        json.dump({'kind': 'InfiniteCyclic'}, f)
    with pytest.raises(CertificateError, match='Corrupt'):
        cache.get('abc', 'search', budget)


def test_ribbon_presentation_certificate(budget):
    P = ribbon_presentation(2, [Word.identity(), Word.parse('x0')])
    certificate = certify_infinite_cyclic(P, budget)
    assert certificate.kind == 'InfiniteCyclic'
    assert certificate.presentation() == P
    replay(certificate)
