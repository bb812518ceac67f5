"""
Knot and 2-knot group presentations and the moves that add relators.
"""
from ._presentation import Presentation, validate_presentation
from ._braids import (
    BraidWord, wirtinger_from_braid, wirtinger_crossing_presentation,
    two_bridge_fraction, two_bridge_presentation
)
from ._moves import (
    connected_sum, connected_sum_many, summand_projection, twist_spin,
    ribbon_presentation, random_conjugators, random_ribbon_presentation,
    add_stabilization_relation, add_finger_move_relation
)
from ._dihedral_product import (
    DihedralProductElement, make_element, z_element, a_element,
    nf_multiply, nf_inverse, nf_power, nf_commutator, evaluate_in_G,
    dihedral_product_group, commutator_with_z, enumerate_alternating_words,
    freiheitssatz_presentation, dihedral_assignment, assignment_defects
)
from ._catalog import (
    DEFAULT_CATALOG_PATH, UNKNOT, load_catalog, is_two_bridge,
    entry_presentation, catalog_presentation
)

__all__ = [
    'Presentation',
    'validate_presentation',
    'BraidWord',
    'wirtinger_from_braid',
    'wirtinger_crossing_presentation',
    'two_bridge_fraction',
    'two_bridge_presentation',
    'connected_sum',
    'connected_sum_many',
    'summand_projection',
    'twist_spin',
    'ribbon_presentation',
    'random_conjugators',
    'random_ribbon_presentation',
    'add_stabilization_relation',
    'add_finger_move_relation',
    'DihedralProductElement',
    'make_element',
    'z_element',
    'a_element',
    'nf_multiply',
    'nf_inverse',
    'nf_power',
    'nf_commutator',
    'evaluate_in_G',
    'dihedral_product_group',
    'commutator_with_z',
    'enumerate_alternating_words',
    'freiheitssatz_presentation',
    'dihedral_assignment',
    'assignment_defects',
    'DEFAULT_CATALOG_PATH',
    'UNKNOT',
    'load_catalog',
    'is_two_bridge',
    'entry_presentation',
    'catalog_presentation',
]
