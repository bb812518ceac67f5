import pytest
from algunknot.words import Word
from algunknot.constructors import (
    Presentation, catalog_presentation, connected_sum, connected_sum_many,
    summand_projection, twist_spin, ribbon_presentation, random_conjugators,
    random_ribbon_presentation, add_stabilization_relation,
    add_finger_move_relation, dihedral_product_group
)
from algunknot.alexander import determinant
from tests.constructors.presentation_test import PresentationTest


class TestConnectedSum(PresentationTest):

    @pytest.fixture(params=[
        ('3_1', '3_1'), ('3_1', '4_1'), ('unknot', '5_2'),
    ])
    def presentation(self, request):
        return connected_sum(*map(catalog_presentation, request.param))


class TestTwistSpin(PresentationTest):

    @pytest.fixture(params=[('3_1', 1), ('3_1', 2), ('4_1', 3), ('5_1', 5)])
    def presentation(self, request):
        name, n = request.param
        return twist_spin(catalog_presentation(name), n)


class TestRibbonPresentation(PresentationTest):

    @pytest.fixture(params=[
        (0, []),
        (1, ['x0.x1^-1']),
        (2, ['1', 'x0^-1.x2']),
        (2, ['x1.x2^-1', 'x0.x1^-1']),
    ])
    def presentation(self, request):
        fusion_count, words = request.param
        return ribbon_presentation(
            fusion_count, [Word.parse(w) for w in words]
        )


class TestRandomRibbonPresentation(PresentationTest):

    @pytest.fixture(params=[0, 1, 2, 3])
    def presentation(self, request):
        return random_ribbon_presentation(3, 4, seed=request.param)


def test_connected_sum_shape():
    a = catalog_presentation('3_1')
    b = catalog_presentation('4_1')
    S = connected_sum(a, b)
    assert S.gen_count == a.gen_count + b.gen_count
    assert len(S.relators) == len(a.relators) + len(b.relators) + 1
    assert S.distinguished == a.distinguished
    assert S.label == '3_1#4_1'


def test_connected_sum_determinant_multiplies():
    S = connected_sum(catalog_presentation('3_1'), catalog_presentation('4_1'))
    assert determinant(S) == 15


def test_connected_sum_many():
    Ps = [catalog_presentation(name) for name in ('3_1', '3_1', '5_1')]
    S = connected_sum_many(Ps)
    assert S.gen_count == 6
    assert determinant(S) == 45
    assert connected_sum_many(Ps[:1]) is Ps[0]
    with pytest.raises(ValueError):
        connected_sum_many([])


def test_summand_projection_kills_sum_relators():
    a = catalog_presentation('3_1')
    b = catalog_presentation('4_1')
    S = connected_sum(a, b)
    h = summand_projection(a, b)
    assert h.source_gen_count == S.gen_count
    assert h.target_gen_count == a.gen_count
    keys = {r.cyclic_key() for r in a.relators}
    for relator in S.relators:
        image = h(relator).cyclic_reduce()
        assert image.is_identity() or image.cyclic_key() in keys


def test_summand_projection_needs_uniform_abelianization():
    with pytest.raises(ValueError):
        summand_projection(
            catalog_presentation('3_1'), dihedral_product_group(3, 3)
        )


def test_twist_spin_adds_centrality_relators():
    P = catalog_presentation('3_1')
    T = twist_spin(P, 2)
    assert T.gen_count == P.gen_count
    assert len(T.relators) == len(P.relators) + P.gen_count - 1
    assert T.label == 'tspin(3_1, 2)'
    assert twist_spin(P, 0) is P
    with pytest.raises(ValueError):
        twist_spin(P, -1)


def test_twist_spin_keeps_determinant():
    assert determinant(twist_spin(catalog_presentation('3_1'), 2)) == 3


def test_ribbon_identity_conjugators_give_unknot_group():
    P = ribbon_presentation(2, [Word.identity(), Word.identity()])
    assert [str(r) for r in P.relators] == ['x0.x1^-1', 'x1.x2^-1']
    assert determinant(P) == 1


@pytest.mark.parametrize('fusion_count, words', [
    (-1, []),
    (2, ['1']),
    (1, ['x2']),
])
def test_invalid_ribbon(fusion_count, words):
    with pytest.raises(ValueError):
        ribbon_presentation(fusion_count, [Word.parse(w) for w in words])


def test_random_conjugators_seeded():
    a = random_conjugators(4, 5, seed=7)
    assert a == random_conjugators(4, 5, seed=7)
    assert len(a) == 4
    for w in a:
        assert len(w) <= 5
        assert w.max_generator() <= 4
    with pytest.raises(ValueError):
        random_conjugators(2, -1)


def test_random_ribbon_label():
    P = random_ribbon_presentation(2, 3, seed=1)
    assert P.label == 'ribbon(2, seed=1)'
    assert P.gen_count == 3


def test_stabilization_relation():
    P = Presentation(3)
    Q = add_stabilization_relation(P, Word.parse('x2'), 0, 1)
    assert [str(r) for r in Q.relators] == ['x2^-1.x0.x2.x1^-1']
    assert len(P.relators) == 0


def test_finger_move_relation():
    P = Presentation(2)
    Q = add_finger_move_relation(P, Word.identity(), 0, 1)
    assert len(Q.relators) == 1
    assert Q.relators[0].exponent_sum() == 0
    assert len(Q.relators[0]) == 4


def test_moves_require_meridians():
    G = dihedral_product_group(3, 3)
    with pytest.raises(ValueError):
        add_stabilization_relation(G, Word.identity(), 0, 1)
    with pytest.raises(ValueError):
        add_finger_move_relation(G, Word.identity(), 1, 0)
