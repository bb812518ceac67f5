import pytest
from algunknot.words import Word, conjugate
from algunknot.certify import (
    RELATOR_KINDS, register_relator_kind, relator_for, combined_relator,
    ma_qiu_relator, stabilization_relator, finger_move_relator
)

x = Word.generator(0)
w = Word.parse('x1.x0^-1')


def test_registered_kinds():
    assert sorted(RELATOR_KINDS) == ['a_fw', 'a_st', 'ma_qiu']


def test_shapes():
    assert ma_qiu_relator(x, w) == w
    assert stabilization_relator(x, w) == (
        x.inverse()*w.inverse()*x*w
    )
    assert finger_move_relator(x, w) == (
        x.inverse()*conjugate(x, w).inverse()*x*conjugate(x, w)
    )
    for kind in RELATOR_KINDS:
        assert relator_for(kind, x, w).exponent_sum() == 0


def test_trivial_conjugator():
    assert stabilization_relator(x, Word.identity()).is_identity()
    assert finger_move_relator(x, Word.identity()).is_identity()


def test_unknown_kind():
    with pytest.raises(ValueError, match='Unknown relator kind'):
        relator_for('a_xyz', x, w)


def test_register_kind():
    register_relator_kind('square', lambda x, w: w*w)
    try:
        assert relator_for('square', x, w) == w*w
    finally:
        RELATOR_KINDS.pop('square')


def test_combined_single_witness_matches_relator():
    for kind in ('a_st', 'a_fw'):
        assert combined_relator([w], kind) == relator_for(kind, x, w)


def test_combined_order():
    ws = [Word.parse('x1'), Word.parse('x2'), Word.parse('x3')]
    assert combined_relator(ws, 'a_st') == stabilization_relator(
        x, Word.parse('x1.x2.x3')
    )
    assert combined_relator(ws, 'a_fw') == finger_move_relator(
        x, Word.parse('x3.x2.x1')
    )
    m = Word.generator(4)
    assert combined_relator(ws, 'a_st', m) == stabilization_relator(
        m, Word.parse('x1.x2.x3')
    )


def test_combined_errors():
    with pytest.raises(ValueError):
        combined_relator([], 'a_st')
    with pytest.raises(ValueError):
        combined_relator([w], 'ma_qiu')
