import pytest
from algunknot.words import (
    Word, enumerate_reduced_words, enumerate_candidate_conjugators
)


@pytest.mark.parametrize('gen_count, max_length, count', [
    (1, 3, 7),
    (2, 1, 5),
    (2, 2, 17),
    (2, 3, 53),
])
def test_reduced_word_counts(gen_count, max_length, count):
    # 1 + sum of 2n (2n - 1)^(k - 1)
    words = list(enumerate_reduced_words(gen_count, max_length))
    assert len(words) == count
    assert len(set(words)) == count


def test_reduced_words_sorted():
    words = list(enumerate_reduced_words(2, 3))
    keys = [w.sort_key() for w in words]
    assert keys == sorted(keys)


def test_negative_length():
    with pytest.raises(ValueError):
        list(enumerate_reduced_words(2, -1))


def test_candidates_have_zero_exponent_sum():
    candidates = list(enumerate_candidate_conjugators(3, 0, 4))
    assert candidates[0] == Word.identity()
    assert all(w.exponent_sum() == 0 for w in candidates)
    assert len(set(candidates)) == len(candidates)


def test_candidates_skip_meridian_boundary_twists():
    candidates = [str(w) for w in enumerate_candidate_conjugators(2, 0, 2)]
    assert candidates == ['1', 'x0.x1^-1', 'x0^-1.x1']
    assert 'x1.x0^-1' not in candidates


def test_candidate_meridian_out_of_range():
    with pytest.raises(ValueError):
        list(enumerate_candidate_conjugators(2, 2, 2))
