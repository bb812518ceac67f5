"""
Report documents for the command line and their JSON schema.

Every document carries ``schema_version`` and ``document_type``, one of
``group``, ``invariants`` or ``verify``, and is validated against the
shipped ``data/report_schema.json``.
"""
import os
import json
from typing import Any, Dict, List, Optional
import jsonschema
from . import __version__
from .utils import load_json, save_json, sizeof_fmt
from .constructors import Presentation
from .certify import Budget, InvariantReport, Inconclusive, Certificate

SCHEMA_VERSION = '1.0'
SCHEMA_PATH = os.path.join(
    os.path.dirname(os.path.abspath(__file__)), 'data', 'report_schema.json'
)
DOCUMENT_TYPES = ('group', 'invariants', 'verify')

_schema: Optional[Dict[str, Any]] = None


def load_schema() -> Dict[str, Any]:
    global _schema
    if _schema is None:
        _schema = load_json(SCHEMA_PATH)
    return _schema


def presentation_stats(P: Presentation) -> Dict[str, Any]:
    """Canonical presentation with its hash, label and sizes."""
    return {
        'label': P.label,
        'hash': P.presentation_hash,
        'generators': P.gen_count,
        'relator_count': len(P.relators),
        'total_length': P.total_length(),
        'meridians': list(P.meridians),
        'distinguished': P.distinguished,
        'relators': [str(r) for r in P.relators],
    }


def _header(document_type: str, wall_time: float) -> Dict[str, Any]:
    return {
        'schema_version': SCHEMA_VERSION,
        'document_type': document_type,
        'tool_version': __version__,
        'wall_time': float(wall_time),
    }


def build_group_document(
    spec: Dict[str, Any], P: Presentation, wall_time: float = 0.0
) -> Dict[str, Any]:
    document = _header('group', wall_time)
    document['spec'] = spec
    document['presentation'] = presentation_stats(P)
    return document


def build_report_document(
    spec: Dict[str, Any], report: InvariantReport, wall_time: float = 0.0
) -> Dict[str, Any]:
    """Invariant report with every referenced certificate inlined."""
    document = _header('invariants', wall_time)
    data = report.to_dict()
    document.update({
        'spec': spec,
        'presentation': presentation_stats(report.presentation),
        'determinant': data['determinant'],
        'coloring_primes': data['coloring_primes'],
        'chain': data['chain'],
        'raw': data['raw'],
        'annotations': data['annotations'],
        'inconclusive': data['inconclusive'],
        'certificates': {
            digest: report.certificates[digest].to_dict()
            for digest in data['certificates']
        },
        'budget': report.budget.to_dict(),
    })
    return document


def verify_cell(
    params: Dict[str, Any], outcome: Any, detail: Optional[str] = None
) -> Dict[str, Any]:
    """One grid cell of a verification run.

    A certificate passes, an ``Inconclusive`` is inconclusive and anything
    else falsy fails.
    """
    cell: Dict[str, Any] = {'params': params}
    if isinstance(outcome, Certificate):
        cell['status'] = 'pass'
        cell['certificate'] = outcome.to_dict()
    elif isinstance(outcome, Inconclusive):
        cell['status'] = 'inconclusive'
        cell['reason'] = outcome.reason
    elif outcome:
        cell['status'] = 'pass'
    else:
        cell['status'] = 'fail'
    if detail is not None:
        cell['detail'] = detail
    return cell


def build_verify_document(
    theorem: str, params: Dict[str, Any], cells: List[Dict[str, Any]],
    budget: Budget, wall_time: float = 0.0
) -> Dict[str, Any]:
    document = _header('verify', wall_time)
    document.update({
        'theorem': theorem,
        'params': params,
        'cells': cells,
        'budget': budget.to_dict(),
    })
    return document


def validate_report(document: Dict[str, Any]):
    """Raise ``ValueError`` unless ``document`` matches the schema."""
    try:
        jsonschema.validate(instance=document, schema=load_schema())
    except jsonschema.ValidationError as err:
        path = '/'.join(str(part) for part in err.absolute_path)
        raise ValueError(
            f'Invalid report document at "{path}": {err.message}'
        ) from None


def to_json(document: Dict[str, Any]) -> str:
    """Deterministic JSON text of a document."""
    return json.dumps(document, sort_keys=True, indent=2)


def dump_report(
    document: Dict[str, Any], path: str, verbose: bool = True
):
    """Validate and save a document to ``.json`` or ``.json.gz``."""
    validate_report(document)
    save_json(document, path)
    if verbose:
        print(
            f'Report written to {path} '
            f'({sizeof_fmt(os.path.getsize(path))})'
        )


def load_report(path: str) -> Dict[str, Any]:
    document = load_json(path)
    validate_report(document)
    return document
