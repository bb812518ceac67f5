from itertools import combinations
from math import gcd
import numpy as np
import sympy
from hypothesis import given, settings, strategies as st
from algunknot.alexander import (
    smith_normal_form, abelianization_invariants,
    is_infinite_cyclic_abelianization
)
from algunknot.words import Word
from algunknot.constructors import (
    Presentation, catalog_presentation, dihedral_product_group
)

matrices = st.integers(1, 3).flatmap(
    lambda rows: st.integers(1, 3).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(-6, 6), min_size=cols, max_size=cols),
            min_size=rows, max_size=rows
        )
    )
)


def minor_gcd(rows, k):
    M = sympy.Matrix(rows)
    g = 0
    for r in combinations(range(M.rows), k):
        for c in combinations(range(M.cols), k):
            g = gcd(g, int(M.extract(list(r), list(c)).det()))
    return g


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_products_equal_minor_gcds(rows):
    factors = smith_normal_form(rows)
    rank = sympy.Matrix(rows).rank()
    assert len(factors) == rank
    for k in range(1, min(len(rows), len(rows[0])) + 1):
        expected = minor_gcd(rows, k)
        if k <= rank:
            assert int(np.prod(factors[:k])) == expected
        else:
            assert expected == 0


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_divisor_chain(rows):
    factors = smith_normal_form(rows)
    assert all(d > 0 for d in factors)
    for a, b in zip(factors, factors[1:]):
        assert b % a == 0


def test_examples():
    assert smith_normal_form([[2, 4], [6, 8]]) == (2, 4)
    assert smith_normal_form([[6, 0], [0, 4]]) == (2, 12)
    assert smith_normal_form([[1, 2, 3]]) == (1,)
    assert smith_normal_form([]) == ()


def test_abelianization_invariants():
    assert abelianization_invariants(Presentation(2)) == (0, 0)
    assert abelianization_invariants(catalog_presentation('unknot')) == (0,)
    assert abelianization_invariants(dihedral_product_group(3, 5)) == (2,)
    P = Presentation(2, [Word.parse('x0^4'), Word.parse('x1^6')])
    assert abelianization_invariants(P) == (2, 12)


def test_knot_groups_are_infinite_cyclic():
    for name in ('3_1', '4_1', '5_2', '6_1'):
        assert is_infinite_cyclic_abelianization(catalog_presentation(name))
    assert not is_infinite_cyclic_abelianization(Presentation(2))
