import pytest
from abc import ABCMeta, abstractmethod
from algunknot.constructors import Presentation, validate_presentation
from algunknot.alexander import abelianization_invariants


class PresentationTest(metaclass=ABCMeta):

    @pytest.fixture
    @abstractmethod
    def presentation(self) -> Presentation:
        pass

    def test_valid(self, presentation):
        assert validate_presentation(presentation) == []

    def test_relators_cyclically_reduced(self, presentation):
        for relator in presentation.relators:
            assert relator.is_cyclically_reduced()
            assert not relator.is_identity()

    def test_no_duplicate_relators(self, presentation):
        keys = [r.cyclic_key() for r in presentation.relators]
        assert len(keys) == len(set(keys))

    def test_distinguished_is_meridian(self, presentation):
        assert presentation.meridians[presentation.distinguished]
        presentation.require_meridian(presentation.distinguished)

    def test_uniform_abelianization(self, presentation):
        assert presentation.has_uniform_abelianization()
        matrix = presentation.exponent_matrix()
        assert matrix.shape == (
            len(presentation.relators), presentation.gen_count
        )
        assert all(row.sum() == 0 for row in matrix)

    def test_abelianization_infinite_cyclic(self, presentation):
        assert abelianization_invariants(presentation) == (0,)

    def test_dict_round_trip(self, presentation):
        copy = Presentation.from_dict(presentation.to_dict())
        assert copy == presentation
        assert copy.presentation_hash == presentation.presentation_hash

    def test_hash_ignores_label(self, presentation):
        copy = Presentation.from_dict(presentation.to_dict())
        copy.label = 'renamed'
        assert copy.presentation_hash == presentation.presentation_hash

    def test_total_length(self, presentation):
        assert presentation.total_length() == sum(
            len(r) for r in presentation.relators
        )
