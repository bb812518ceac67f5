"""
Relator shapes used by the upper-bound searches.

Each kind maps a meridian ``x`` and a candidate conjugator ``w`` to the
relator added to the knot group.
"""
from typing import Callable, Dict, Optional, Sequence
from ..words import Word, commutator, conjugate

RelatorShape = Callable[[Word, Word], Word]


def ma_qiu_relator(x: Word, w: Word) -> Word:
    """Any element of the commutator subgroup, ``w`` itself."""
    return w


def stabilization_relator(x: Word, w: Word) -> Word:
    """``[x, w]``, which identifies the meridians ``x`` and ``x^w``.

    >>> str(stabilization_relator(Word.generator(0), Word.generator(1)))
    'x0^-1.x1^-1.x0.x1'
    """
    return commutator(x, w)


def finger_move_relator(x: Word, w: Word) -> Word:
    """``[x, x^w]``, which makes the meridians ``x`` and ``x^w`` commute."""
    return commutator(x, conjugate(x, w))


# Register your relator kinds here.
RELATOR_KINDS: Dict[str, RelatorShape] = {
    'ma_qiu': ma_qiu_relator,
    'a_st': stabilization_relator,
    'a_fw': finger_move_relator,
}


def register_relator_kind(name: str, shape: RelatorShape):
    RELATOR_KINDS[name] = shape


def relator_for(kind: str, x: Word, w: Word) -> Word:
    if kind not in RELATOR_KINDS:
        raise ValueError(
            f'Unknown relator kind {kind!r}, '
            f'choose from {sorted(RELATOR_KINDS)}'
        )
    return RELATOR_KINDS[kind](x, w)


def combined_relator(
    ws: Sequence[Word], kind: str, meridian: Optional[Word] = None
) -> Word:
    """One relator doing the work of a witness from each summand.

    For ``a_st`` this is ``[x, w1 w2 ... wn]`` and for ``a_fw`` it is
    ``[x, x^(wn ... w2 w1)]``. The meridian defaults to ``x0``.

    >>> ws = [Word.parse('x1'), Word.parse('x2')]
    >>> str(combined_relator(ws, 'a_st'))
    'x0^-1.x2^-1.x1^-1.x0.x1.x2'
    >>> str(combined_relator(ws, 'a_fw')) == str(
    ...     finger_move_relator(Word.generator(0), Word.parse('x2.x1')))
    True
    """
    if not ws:
        raise ValueError('Need at least one witness to combine')
    x = Word.generator(0) if meridian is None else meridian
    if kind == 'a_st':
        product = Word.identity()
        for w in ws:
            product = product*w
        return stabilization_relator(x, product)
    if kind == 'a_fw':
        product = Word.identity()
        for w in reversed(ws):
            product = product*w
        return finger_move_relator(x, product)
    raise ValueError(f'Witnesses of kind {kind!r} cannot be combined')
