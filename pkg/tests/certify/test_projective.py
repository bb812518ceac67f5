import pytest
import numpy as np
from sympy import isprime
from algunknot.constructors import (
    Presentation, make_element, commutator_with_z, freiheitssatz_presentation
)
from algunknot.certify import (
    MatrixRepresentation, projective_action, projective_line_group,
    companion_traces, psl2_search
)

HARD_CELL = ((1, 1), (2, 1), (1, 2), (2, 1), (1, 2), (2, 1))


@pytest.fixture
def hard_instance():
    v = make_element(3, 5, HARD_CELL)
    return freiheitssatz_presentation(3, 5, commutator_with_z(3, 5, v))


def test_action_composes_like_matrices():
    ell = 7
    A = np.array([[1, 1], [0, 1]])
    B = np.array([[0, 6], [1, 0]])
    product = A @ B % ell
    a = np.array(projective_action(A.tolist(), ell))
    b = np.array(projective_action(B.tolist(), ell))
    assert projective_action(product.tolist(), ell) == tuple(a[b])


def test_minus_identity_acts_trivially():
    assert projective_action(((6, 0), (0, 6)), 7) == tuple(range(8))


def test_projective_line_group_any_prime():
    assert projective_line_group(31).degree == 32
    with pytest.raises(ValueError):
        projective_line_group(9)


def test_companion_traces():
    assert companion_traces(7, 3) == (1, 6)
    assert companion_traces(11, 5) == (3, 4, 7, 8)
    assert companion_traces(7, 5) == ()


def test_hard_instance_has_representation(hard_instance):
    representation = psl2_search(hard_instance, (3, 5))
    assert representation is not None
    assert isprime(representation.field)
    h = representation.homomorphism()
    for relator in hard_instance.relators:
        assert h.kills(relator)
    degree = representation.field + 1
    for image, order in zip(h.images, (3, 5)):
        perm = np.array(image)
        power = np.arange(degree)
        for _ in range(order):
            power = power[perm]
        assert not np.array_equal(perm, np.arange(degree))
        assert np.array_equal(power, np.arange(degree))
    assert psl2_search(hard_instance, (3, 5)) == representation


def test_representation_round_trip(hard_instance):
    representation = psl2_search(hard_instance, (3, 5))
    data = representation.to_dict()
    assert MatrixRepresentation.from_dict(data) == representation


def test_small_fields_give_nothing(hard_instance):
    # neither F_5 nor F_7 has elements of orders 3 and 5 in this shape
    assert psl2_search(hard_instance, (3, 5), max_field=7) is None


def test_search_errors(hard_instance):
    with pytest.raises(ValueError, match='odd prime'):
        psl2_search(hard_instance, (2, 5))
    with pytest.raises(ValueError, match='two generators'):
        psl2_search(Presentation(3), (3, 5, 7))
