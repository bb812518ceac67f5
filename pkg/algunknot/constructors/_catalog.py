"""
Named classical knots.

A catalog is a JSON document mapping names to either
``{"braid": [...], "strands": n}`` or ``{"two_bridge": [...]}``. An optional
``"bridge"`` entry records the bridge number when it is known.
"""
import os
from typing import Any, Dict, Optional
from ..utils import load_json
from ._presentation import Presentation
from ._braids import BraidWord, wirtinger_from_braid, two_bridge_presentation

DEFAULT_CATALOG_PATH = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    'data', 'catalog.json'
)

UNKNOT = 'unknot'


def load_catalog(path: Optional[str] = None) -> Dict[str, Dict[str, Any]]:
    """Load and check a catalog file, the shipped one by default."""
    if path is None:
        path = DEFAULT_CATALOG_PATH
    entries = load_json(path)
    if not isinstance(entries, dict):
        raise ValueError(f'Catalog {path} must map names to entries')
    for name, entry in entries.items():
        if not isinstance(entry, dict) or not (
            'braid' in entry or 'two_bridge' in entry
        ):
            raise ValueError(
                f'Catalog entry {name!r} in {path} needs '
                '"braid" or "two_bridge"'
            )
    entries.setdefault(UNKNOT, {'braid': [], 'strands': 1, 'bridge': 1})
    return entries


def is_two_bridge(entry: Dict[str, Any]) -> bool:
    return 'two_bridge' in entry or entry.get('bridge') == 2


def entry_presentation(entry: Dict[str, Any]) -> Presentation:
    if 'two_bridge' in entry:
        return two_bridge_presentation(entry['two_bridge'])
    return wirtinger_from_braid(
        BraidWord(entry['braid'], entry.get('strands'))
    )


def catalog_presentation(
    name: str, catalog: Optional[Dict[str, Dict[str, Any]]] = None
) -> Presentation:
    """Presentation of a catalog knot.

    >>> str(catalog_presentation('unknot'))
    '< x0 | >'
    >>> catalog_presentation('3_1').label
    '3_1'
    """
    if catalog is None:
        catalog = load_catalog()
    if name not in catalog:
        raise ValueError(
            f'Unknown knot {name!r}, choose from {sorted(catalog)}'
        )
    P = entry_presentation(catalog[name])
    P.label = name
    return P
