"""
Semi-decision certification: coset enumeration, finite quotients, bound
searches, replayable certificates and invariant reports.
"""
from ._budget import Budget, Inconclusive
from ._coset_table import (
    Completed, Exhausted, CosetTable, todd_coxeter, word_columns
)
from ._finite_groups import (
    FiniteGroupSpec, FiniteHomomorphism, symmetric_group, cyclic_group,
    psl2, projective_line_group, cayley_table_group, target_from_name,
    DEFAULT_LADDER, TARGETS, register_target, get_target, group_data,
    element_words, iter_homomorphisms, hom_search
)
from ._projective import (
    DEFAULT_MAX_FIELD, MatrixRepresentation, projective_action,
    companion_traces, psl2_search
)
from ._relators import (
    RELATOR_KINDS, register_relator_kind, relator_for, combined_relator,
    ma_qiu_relator, stabilization_relator, finger_move_relator
)
from ._certificate import (
    TOOL_VERSION, KINDS, Certificate, CertificateError, CertificateCache,
    replay
)
from ._certify import (
    FREIHEITSSATZ_LADDER, certify_infinite_cyclic, certify_nonabelian_quotient,
    verify_freiheitssatz_instance, freiheitssatz_sweep, lower_bound_afw_two
)
from ._search import (
    default_workers, candidate_tuples, search_upper_bound,
    combine_summand_witnesses, verify_nonadditivity,
    ribbon_stabilization_bound
)
from ._report import (
    CHAIN, ChainInconsistencyError, Bound, InvariantReport,
    tietze_meridian_bound, invariant_report
)

__all__ = [
    'Budget',
    'Inconclusive',
    'Completed',
    'Exhausted',
    'CosetTable',
    'todd_coxeter',
    'word_columns',
    'FiniteGroupSpec',
    'FiniteHomomorphism',
    'symmetric_group',
    'cyclic_group',
    'psl2',
    'projective_line_group',
    'cayley_table_group',
    'target_from_name',
    'DEFAULT_LADDER',
    'TARGETS',
    'register_target',
    'get_target',
    'group_data',
    'element_words',
    'iter_homomorphisms',
    'hom_search',
    'DEFAULT_MAX_FIELD',
    'MatrixRepresentation',
    'projective_action',
    'companion_traces',
    'psl2_search',
    'RELATOR_KINDS',
    'register_relator_kind',
    'relator_for',
    'combined_relator',
    'ma_qiu_relator',
    'stabilization_relator',
    'finger_move_relator',
    'TOOL_VERSION',
    'KINDS',
    'Certificate',
    'CertificateError',
    'CertificateCache',
    'replay',
    'FREIHEITSSATZ_LADDER',
    'certify_infinite_cyclic',
    'certify_nonabelian_quotient',
    'verify_freiheitssatz_instance',
    'freiheitssatz_sweep',
    'lower_bound_afw_two',
    'default_workers',
    'candidate_tuples',
    'search_upper_bound',
    'combine_summand_witnesses',
    'verify_nonadditivity',
    'ribbon_stabilization_bound',
    'CHAIN',
    'ChainInconsistencyError',
    'Bound',
    'InvariantReport',
    'tietze_meridian_bound',
    'invariant_report',
]
