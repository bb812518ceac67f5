"""
Homomorphisms between free groups, defined on generators.
"""
from typing import Dict, Any, Optional, Sequence, Tuple
from ._word import Word, reduce


class Homomorphism:
    """Map sending source generator ``i`` to the word ``images[i]``.

    Parameters
    ----------
    images : Sequence[Word]
        Image of each source generator, in target generators.
    target_gen_count : Optional[int]
        Number of target generators. Inferred from the images if omitted.

    Examples
    --------
    >>> h = Homomorphism([Word.parse('x0.x1'), Word.parse('x1')])
    >>> str(h(Word.parse('x0.x1^-1')))
    'x0'
    """

    def __init__(
        self, images: Sequence[Word], target_gen_count: Optional[int] = None
    ):
        self._images: Tuple[Word, ...] = tuple(images)
        for image in self._images:
            if not isinstance(image, Word):
                raise TypeError(f'Image {image!r} is not a Word')
        inferred = 1 + max(
            (image.max_generator() for image in self._images), default=-1
        )
        if target_gen_count is None:
            target_gen_count = inferred
        elif inferred > target_gen_count:
            raise ValueError(
                f'Images use generator x{inferred - 1} but target has '
                f'only {target_gen_count} generators'
            )
        self._target_gen_count = target_gen_count

    @classmethod
    def identity(cls, gen_count: int) -> 'Homomorphism':
        return cls(
            [Word.generator(i) for i in range(gen_count)], gen_count
        )

    @property
    def images(self) -> Tuple[Word, ...]:
        return self._images

    @property
    def source_gen_count(self) -> int:
        return len(self._images)

    @property
    def target_gen_count(self) -> int:
        return self._target_gen_count

    def __call__(self, word: Word) -> Word:
        return apply_hom(self, word)

    def compose(self, outer: 'Homomorphism') -> 'Homomorphism':
        """Homomorphism applying ``self`` first and then ``outer``."""
        return Homomorphism(
            [apply_hom(outer, image) for image in self._images],
            outer.target_gen_count
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, Homomorphism):
            return NotImplemented
        return (
            self._images == other._images
            and self._target_gen_count == other._target_gen_count
        )

    def __hash__(self) -> int:
        return hash((self._images, self._target_gen_count))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'images': [str(image) for image in self._images],
            'target_gen_count': self._target_gen_count,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Homomorphism':
        return cls(
            [Word.parse(text) for text in data['images']],
            data['target_gen_count']
        )

    def __repr__(self) -> str:
        mapping = ', '.join(
            f'x{i}->{image}' for i, image in enumerate(self._images)
        )
        return f'Homomorphism({mapping})'


def apply_hom(h: Homomorphism, w: Word) -> Word:
    """Image of ``w`` under ``h``, freely reduced.

    >>> h = Homomorphism([Word.parse('x0'), Word.parse('x0')])
    >>> str(apply_hom(h, Word.parse('x0.x1^-1')))
    '1'
    """
    raw = []
    for generator, exponent in w.syllables:
        if generator >= h.source_gen_count:
            raise ValueError(
                f'Generator x{generator} has no image under {h!r}'
            )
        image = h.images[generator]
        if exponent < 0:
            image = image.inverse()
        raw.extend(image.syllables*abs(exponent))
    return reduce(raw)
