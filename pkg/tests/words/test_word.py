import pytest
from hypothesis import given, strategies as st
from algunknot.words import (
    Word, reduce, conjugate, commutator, exponent_vector
)

syllables = st.lists(
    st.tuples(st.integers(0, 3), st.integers(-3, 3)), max_size=8
)


@st.composite
def words(draw):
    return Word(draw(syllables))


@pytest.mark.parametrize('text, expected', [
    ('1', '1'),
    ('', '1'),
    ('x0', 'x0'),
    ('x0^1', 'x0'),
    ('x0^2.x1^-1', 'x0^2.x1^-1'),
    ('x0.x0^-1', '1'),
    ('x3.x3', 'x3^2'),
    (' x0 . x1 ', 'x0.x1'),
])
def test_parse_and_str(text, expected):
    assert str(Word.parse(text)) == expected


@pytest.mark.parametrize('text', ['y0', 'x', 'x0^', 'x0^0', 'x-1', 'x0..x1'])
def test_parse_malformed(text):
    with pytest.raises(ValueError):
        Word.parse(text)


def test_negative_generator_rejected():
    with pytest.raises(ValueError):
        Word([(-1, 1)])


@given(words())
def test_parse_inverts_str(w):
    assert Word.parse(str(w)) == w


@given(words(), words())
def test_product_inverse(u, v):
    assert (u*v).inverse() == v.inverse()*u.inverse()
    assert (u*u.inverse()).is_identity()


@given(words())
def test_adjacent_syllables_distinct(w):
    for (g1, e1), (g2, e2) in zip(w.syllables, w.syllables[1:]):
        assert g1 != g2
    assert all(e != 0 for _, e in w.syllables)


@given(words(), st.integers(-3, 3))
def test_power_matches_repeated_product(w, n):
    expected = Word.identity()
    base = w if n >= 0 else w.inverse()
    for _ in range(abs(n)):
        expected = expected*base
    assert w**n == expected


@given(words())
def test_length_counts_letters(w):
    assert len(w) == len(w.letters())
    assert Word(w.letters()) == w


@given(words())
def test_cyclic_reduce_is_conjugate(w):
    reduced = w.cyclic_reduce()
    assert reduced.is_cyclically_reduced()
    assert reduced.exponent_sum() == w.exponent_sum()
    assert reduced.cyclic_key() == w.cyclic_key()


@given(words(), words())
def test_cyclic_key_invariant_under_conjugation(w, g):
    assert conjugate(w, g).cyclic_key() == w.cyclic_key()
    assert w.inverse().cyclic_key() == w.cyclic_key()


def test_rotations_share_cyclic_key():
    a = Word.parse('x0.x1^2.x2^-1')
    b = Word.parse('x1^2.x2^-1.x0')
    assert a.cyclic_key() == b.cyclic_key()
    assert a.cyclic_key() != Word.parse('x0.x1^2.x2').cyclic_key()


def test_commutator_convention():
    x = Word.generator(0)
    w = Word.parse('x1.x2^-1')
    # x^w = x [x, w]
    assert conjugate(x, w) == x*commutator(x, w)


def test_shift_and_max_generator():
    w = Word.parse('x0.x2^-1')
    assert str(w.shift(3)) == 'x3.x5^-1'
    assert w.max_generator() == 2
    assert Word.identity().max_generator() == -1
    assert w.generators() == frozenset({0, 2})


def test_exponent_vector():
    assert exponent_vector(Word.parse('x0^2.x1.x0^-1'), 3).tolist() == [
        1, 1, 0
    ]
    with pytest.raises(ValueError):
        exponent_vector(Word.parse('x4'), 2)


def test_sort_key_orders_by_length_first():
    ws = [Word.parse(t) for t in ('x1^2', 'x0^-1', 'x0', 'x1')]
    ordered = sorted(ws, key=Word.sort_key)
    assert [str(w) for w in ordered] == ['x0', 'x0^-1', 'x1', 'x1^2']


def test_reduce_and_hash():
    assert reduce([(1, 1), (1, -1)]) == Word.identity()
    assert len({Word.parse('x0.x1'), Word([(0, 1), (1, 1)])}) == 1


def test_multiply_by_non_word():
    with pytest.raises(TypeError):
        Word.generator(0)*3
