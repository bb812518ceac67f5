import pytest
from algunknot.words import Word
from algunknot.constructors import (
    catalog_presentation, ribbon_presentation, twist_spin, load_catalog
)
from algunknot.alexander import determinant
from algunknot.knot_spec import (
    KnotSpec, split_top_level, parse_knot_spec, resolve, summands,
    is_classical, is_even_twist_two_bridge
)


@pytest.mark.parametrize('text, expected', [
    ('a,b', ['a', 'b']),
    ('a, (b, c)', ['a', '(b, c)']),
    ('f(x, g(y, z)), w', ['f(x, g(y, z))', 'w']),
    ('', ['']),
])
def test_split_top_level(text, expected):
    assert split_top_level(text) == expected


@pytest.mark.parametrize('text', ['(a', 'a)', ')('])
def test_split_unbalanced(text):
    with pytest.raises(ValueError, match='Unbalanced'):
        split_top_level(text)


@pytest.mark.parametrize('text, kind, normalized', [
    ('3_1', 'catalog', '3_1'),
    ('  T(2,5) ', 'catalog', 'T(2,5)'),
    ('braid(1,1,1)', 'braid', 'braid(1, 1, 1)'),
    ('twobridge(2, -2)', 'twobridge', 'twobridge(2, -2)'),
    ('spin(4_1)', 'spin', 'spin(4_1)'),
    ('tspin(3_1,2)', 'tspin', 'tspin(3_1, 2)'),
    ('sum(3_1,tspin(5_1, 3))', 'sum', 'sum(3_1, tspin(5_1, 3))'),
    ('ribbon(0)', 'ribbon', 'ribbon(0)'),
    ('ribbon(2; x1, x0.x2^-1)', 'ribbon', 'ribbon(2; x1, x0.x2^-1)'),
])
def test_parse(text, kind, normalized):
    spec = parse_knot_spec(text)
    assert spec.kind == kind
    assert str(spec) == normalized
    assert parse_knot_spec(str(spec)) == spec


@pytest.mark.parametrize('text, message', [
    ('', 'Empty'),
    ('3 1', 'Malformed knot expression'),
    ('3_1)', 'Unbalanced'),
    ('tspin(3_1)', 'tspin takes'),
    ('tspin(3_1, two)', 'Malformed integer'),
    ('spin(3_1, 4_1)', 'spin takes one knot'),
    ('sum(3_1, )', 'Empty summand'),
    ('ribbon(2; x1)', 'needs 2 conjugators'),
    ('ribbon(1; x1; x0)', 'one ";"'),
    ('ribbon(; x1)', 'fusion count'),
    ('braid(1, a)', 'Malformed integer'),
])
def test_parse_errors(text, message):
    with pytest.raises(ValueError, match=message):
        parse_knot_spec(text)


def test_to_dict():
    assert parse_knot_spec('tspin(3_1, 2)').to_dict() == {
        'kind': 'tspin',
        'text': 'tspin(3_1, 2)',
        'params': [2],
        'children': [{'kind': 'catalog', 'text': '3_1', 'name': '3_1'}],
    }
    assert parse_knot_spec('ribbon(1; x0)').to_dict()['words'] == ['x0']


class TestResolve:

    def test_catalog(self):
        P = resolve(parse_knot_spec('3_1'))
        assert P == catalog_presentation('3_1')
        assert P.label == '3_1'

    def test_braid_matches_catalog(self):
        assert resolve(parse_knot_spec('braid(1, 1, 1)')) == (
            catalog_presentation('3_1')
        )

    def test_two_bridge_matches_catalog(self):
        assert resolve(parse_knot_spec('twobridge(2, 2)')) == (
            catalog_presentation('4_1_tb')
        )

    def test_spin_has_classical_group(self):
        assert resolve(parse_knot_spec('spin(5_2)')) == (
            catalog_presentation('5_2')
        )

    def test_tspin(self):
        P = resolve(parse_knot_spec('tspin(3_1, 2)'))
        assert P == twist_spin(catalog_presentation('3_1'), 2)
        assert P.label == 'tspin(3_1, 2)'

    def test_sum(self):
        P = resolve(parse_knot_spec('sum(3_1, 4_1)'))
        assert determinant(P) == 15
        assert P.label == 'sum(3_1, 4_1)'

    def test_ribbon(self):
        P = resolve(parse_knot_spec('ribbon(1; x0)'))
        assert P == ribbon_presentation(1, [Word.parse('x0')])

    def test_custom_catalog(self):
        catalog = {'trefoil': {'braid': [1, 1, 1], 'strands': 2}}
        P = resolve(parse_knot_spec('sum(trefoil, trefoil)'), catalog)
        assert determinant(P) == 9

    def test_unknown_name(self):
        with pytest.raises(ValueError, match='Unknown knot'):
            resolve(parse_knot_spec('11n34'))


def test_summands():
    spec = parse_knot_spec('sum(3_1, 4_1)')
    assert [str(s) for s in summands(spec)] == ['3_1', '4_1']
    assert summands(parse_knot_spec('3_1')) == []


@pytest.mark.parametrize('text, expected', [
    ('3_1', True),
    ('braid(1, -2, 1, -2)', True),
    ('twobridge(4, 2)', True),
    ('sum(3_1, braid(1, 1, 1))', True),
    ('spin(3_1)', False),
    ('tspin(3_1, 2)', False),
    ('sum(3_1, tspin(3_1, 2))', False),
    ('ribbon(0)', False),
])
def test_is_classical(text, expected):
    assert is_classical(parse_knot_spec(text)) is expected


@pytest.mark.parametrize('text, expected', [
    ('tspin(3_1, 2)', True),
    ('tspin(T(2,5), 4)', True),
    ('tspin(twobridge(2, 2), 2)', True),
    ('tspin(3_1, 3)', False),
    ('tspin(3_1, 0)', False),
    ('tspin(sum(3_1, 3_1), 2)', False),
    ('tspin(braid(1, 1, 1), 2)', False),
    ('3_1', False),
])
def test_is_even_twist_two_bridge(text, expected):
    assert is_even_twist_two_bridge(parse_knot_spec(text)) is expected


def test_even_twist_uses_given_catalog():
    catalog = load_catalog()
    catalog['wild'] = {'braid': [1, 2, 1, 2], 'strands': 3, 'bridge': 3}
    spec = parse_knot_spec('tspin(wild, 2)')
    assert not is_even_twist_two_bridge(spec, catalog)
    assert isinstance(spec, KnotSpec)
