"""
Replayable certificates and their content-addressed disk cache.

A certificate is a JSON document::

    {kind, presentation_hash, payload, replay_data, tool_version}

``replay_data`` always holds the canonical presentation, so a certificate
can be re-checked on its own. Replaying never searches: permutation images
are checked against relators, Smith divisors are recomputed and coset
enumerations are re-run capped at the recorded peak table size.
"""
import os
import time
from dataclasses import dataclass, field
from glob import glob
from typing import Any, Callable, Dict, List, Optional, Tuple, Union
import numpy as np
from .. import __version__
from ..utils import hash_json, identity, load_json, save_json
from ..words import Word, Homomorphism
from ..constructors import (
    Presentation, connected_sum, commutator_with_z,
    enumerate_alternating_words, freiheitssatz_presentation,
    dihedral_assignment, assignment_defects
)
from ..alexander import abelianization_invariants, affine_image
from ._budget import Budget
from ._coset_table import CosetTable, Completed
from ._finite_groups import FiniteGroupSpec, FiniteHomomorphism
from ._projective import MatrixRepresentation
from ._relators import relator_for, combined_relator

TOOL_VERSION = __version__

INFINITE_CYCLIC = 'InfiniteCyclic'
NON_TRIVIAL_QUOTIENT = 'NonTrivialQuotient'
NON_ABELIAN_QUOTIENT = 'NonAbelianQuotient'
BOUND_WITNESS = 'BoundWitness'
KINDS = (
    INFINITE_CYCLIC, NON_TRIVIAL_QUOTIENT, NON_ABELIAN_QUOTIENT,
    BOUND_WITNESS
)


class CertificateError(ValueError):
    """A certificate failed to replay or is malformed."""


@dataclass(frozen=True)
class Certificate:
    """Self-contained evidence for one group-theoretic claim."""

    kind: str
    presentation_hash: str
    payload: Dict[str, Any] = field(default_factory=dict)
    replay_data: Dict[str, Any] = field(default_factory=dict)
    tool_version: str = TOOL_VERSION

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(
                f'Unknown certificate kind {self.kind!r}, choose from {KINDS}'
            )

    def __hash__(self) -> int:
        return hash(self.digest)

    @property
    def digest(self) -> str:
        return hash_json(self.to_dict())

    @property
    def bound(self) -> Optional[int]:
        return self.payload.get('bound')

    def presentation(self) -> Presentation:
        return Presentation.from_dict(self.replay_data['presentation'])

    def to_dict(self) -> Dict[str, Any]:
        return {
            'kind': self.kind,
            'presentation_hash': self.presentation_hash,
            'payload': self.payload,
            'replay_data': self.replay_data,
            'tool_version': self.tool_version,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Certificate':
        missing = [
            key for key in ('kind', 'presentation_hash', 'payload',
                            'replay_data')
            if key not in data
        ]
        if missing:
            raise CertificateError(f'Certificate is missing keys {missing}')
        try:
            return cls(
                data['kind'], data['presentation_hash'], data['payload'],
                data['replay_data'],
                data.get('tool_version', TOOL_VERSION)
            )
        except ValueError as err:
            raise CertificateError(str(err)) from err


def _presentation_of(cert: Certificate) -> Presentation:
    if 'presentation' not in cert.replay_data:
        raise CertificateError(f'{cert.kind} certificate has no presentation')
    P = cert.presentation()
    if P.presentation_hash != cert.presentation_hash:
        raise CertificateError(
            f'Presentation hash {P.presentation_hash} does not match '
            f'{cert.presentation_hash}'
        )
    return P


def _replay_infinite_cyclic(cert: Certificate):
    P = _presentation_of(cert)
    invariants = abelianization_invariants(P)
    if invariants != (0,):
        raise CertificateError(
            f'Abelianization invariants {invariants} are not those of Z'
        )
    peak = int(cert.payload['peak_cosets'])
    if peak < 1:
        raise CertificateError(f'Recorded peak {peak} is not positive')
    table = CosetTable(P, [P.meridian_word], max_cosets=peak)
    status = table.run()
    if status != Completed(1) or not table.is_consistent():
        raise CertificateError(
            f'Meridian subgroup enumeration gave {status}, expected '
            'Completed(1)'
        )


def _homomorphism_of(cert: Certificate, P: Presentation) -> FiniteHomomorphism:
    target = FiniteGroupSpec.from_dict(cert.replay_data['target'])
    h = FiniteHomomorphism.from_dict({
        'target': target.to_dict(), 'images': cert.payload['images']
    })
    if len(h.images) != P.gen_count:
        raise CertificateError(
            f'Got {len(h.images)} images for {P.gen_count} generators'
        )
    for image in h.images:
        if sorted(image) != list(range(target.degree)):
            raise CertificateError(f'{image} is not a permutation')
    extras = [
        Word.parse(text) for text in cert.replay_data.get('extra_relators', [])
    ]
    for relator in list(P.relators) + extras:
        if not h.kills(relator):
            raise CertificateError(
                f'Relator {relator} is not killed in {target.name}'
            )
    return h


def _replay_non_abelian(cert: Certificate):
    P = _presentation_of(cert)
    h = _homomorphism_of(cert, P)
    i, j = cert.payload['pair']
    a = np.array(h.images[i])
    b = np.array(h.images[j])
    if np.array_equal(a[b], b[a]):
        raise CertificateError(f'Images of x{i} and x{j} commute')


def _replay_non_trivial(cert: Certificate):
    P = _presentation_of(cert)
    h = _homomorphism_of(cert, P)
    if h.is_trivial():
        raise CertificateError('Homomorphism is trivial')
    if 'matrices' in cert.payload:
        representation = MatrixRepresentation.from_dict(cert.payload)
        if representation.homomorphism().images != h.images:
            raise CertificateError(
                f'Matrices over F_{representation.field} do not act as the '
                'recorded images'
            )


def _replay_upper_bound(cert: Certificate, P: Presentation):
    payload = cert.payload
    relators = [Word.parse(text) for text in payload['relators']]
    if len(relators) != payload['bound']:
        raise CertificateError(
            f'{len(relators)} relators do not witness bound '
            f'{payload["bound"]}'
        )
    if len(payload['witnesses']) != len(relators):
        raise CertificateError('Every relator needs its witnesses')
    x = P.meridian_word
    for relator, group in zip(relators, payload['witnesses']):
        ws = [Word.parse(text) for text in group]
        if len(ws) == 1:
            expected = relator_for(payload['invariant'], x, ws[0])
        else:
            expected = combined_relator(ws, payload['invariant'], x)
        if expected != relator:
            raise CertificateError(
                f'Relator {relator} does not have {payload["invariant"]} '
                f'shape for witnesses {group}'
            )
    quotient = replay(cert.replay_data['quotient'])
    if quotient.kind != INFINITE_CYCLIC:
        raise CertificateError(f'Quotient certificate is {quotient.kind}')
    quotient_hash = P.with_relators(relators).presentation_hash
    if quotient.presentation_hash != quotient_hash:
        raise CertificateError('Quotient is not the witnessed quotient')


def _replay_dihedral_sweep(cert: Certificate, P: Presentation):
    payload = cert.payload
    p1, p2 = payload['primes']
    summands = [
        Presentation.from_dict(data) for data in cert.replay_data['summands']
    ]
    if connected_sum(*summands).presentation_hash != P.presentation_hash:
        raise CertificateError('Summands do not add up to the presentation')
    for summand, p, data in zip(
        summands, (p1, p2), cert.replay_data['surjections']
    ):
        h = Homomorphism.from_dict(data)
        for relator in summand.relators:
            if affine_image(h(relator), p) != (1, 0):
                raise CertificateError(
                    f'Relator {relator} survives in D_{p}'
                )
        if affine_image(h.images[summand.distinguished], p) != (-1, 0):
            raise CertificateError(f'Meridian does not map to s in D_{p}')
        if all(
            affine_image(a*b, p)[1] == 0 for a in h.images for b in h.images
        ):
            raise CertificateError(f'Image in D_{p} misses the rotations')
    colorings = [
        Homomorphism.from_dict(data)
        for data in cert.replay_data['surjections']
    ]
    assignment = dihedral_assignment(p1, p2, colorings)
    defects = assignment_defects(P, p1, p2, assignment)
    if defects:
        raise CertificateError(
            f'Colorings do not surject onto G({p1},{p2}): {defects[0]}'
        )
    images = [str(assignment[k]) for k in range(P.gen_count)]
    if payload['assignment'] != images:
        raise CertificateError(
            f'Recorded assignment {payload["assignment"]} is not {images}'
        )
    expected = {
        freiheitssatz_presentation(
            p1, p2, commutator_with_z(p1, p2, v)
        ).presentation_hash
        for v in enumerate_alternating_words(
            p1, p2, payload['sweep_length']
        )
    }
    found = set()
    for data in cert.replay_data['instances']:
        instance = replay(data)
        if instance.kind != NON_TRIVIAL_QUOTIENT:
            raise CertificateError(f'Sweep instance is {instance.kind}')
        found.add(instance.presentation_hash)
    if found != expected:
        raise CertificateError(
            f'Sweep covers {len(found)} of {len(expected)} instances'
        )


def _replay_bound_witness(cert: Certificate):
    P = _presentation_of(cert)
    direction = cert.payload.get('direction')
    if direction == 'upper':
        _replay_upper_bound(cert, P)
    elif direction == 'lower':
        _replay_dihedral_sweep(cert, P)
    else:
        raise CertificateError(f'Unknown bound direction {direction!r}')


_REPLAYERS: Dict[str, Callable[[Certificate], None]] = {
    INFINITE_CYCLIC: _replay_infinite_cyclic,
    NON_TRIVIAL_QUOTIENT: _replay_non_trivial,
    NON_ABELIAN_QUOTIENT: _replay_non_abelian,
    BOUND_WITNESS: _replay_bound_witness,
}


def replay(certificate: Union[Certificate, Dict[str, Any]]) -> Certificate:
    """Re-verify a certificate from its own data.

    Returns the certificate, or raises :class:`CertificateError`.
    """
    if isinstance(certificate, dict):
        certificate = Certificate.from_dict(certificate)
    try:
        _REPLAYERS[certificate.kind](certificate)
    except CertificateError:
        raise
    except (KeyError, TypeError, ValueError) as err:
        raise CertificateError(
            f'Malformed {certificate.kind} certificate: {err!r}'
        ) from err
    return certificate


class CertificateCache:
    """Certificates on disk, keyed by presentation, operation and budget.

    Files are named ``<presentation_hash>_<operation>_<budget label>.json``.
    """

    def __init__(self, directory: str):
        self.directory = os.path.abspath(directory)
        os.makedirs(self.directory, exist_ok=True)

    def path(
        self, presentation_hash: str, operation: str, budget: Budget
    ) -> str:
        name = f'{presentation_hash}_{operation}_{budget.label}.json'
        return os.path.join(self.directory, name)

    def get(
        self, presentation_hash: str, operation: str, budget: Budget
    ) -> Optional[Certificate]:
        path = self.path(presentation_hash, operation, budget)
        if not os.path.isfile(path):
            return None
        try:
            return Certificate.from_dict(load_json(path))
        except ValueError as err:
            raise CertificateError(
                f'Corrupt cache file {path}: {err}'
            ) from err

    def put(
        self, certificate: Certificate, operation: str, budget: Budget
    ) -> str:
        path = self.path(certificate.presentation_hash, operation, budget)
        save_json(certificate.to_dict(), path)
        return path

    def entries(self) -> List[str]:
        return sorted(glob(os.path.join(self.directory, '*.json')))

    def gc(self, max_age: float) -> int:
        """Delete certificates at least ``max_age`` seconds old."""
        now = time.time()
        removed = 0
        for path in self.entries():
            if now - os.path.getmtime(path) >= max_age:
                os.remove(path)
                removed += 1
        return removed

    def verify(
        self, progress: Callable = identity
    ) -> List[Tuple[str, Optional[str]]]:
        """Replay every stored certificate.

        Returns ``(path, error)`` pairs, with ``error`` None on success.
        """
        results = []
        for path in progress(self.entries()):
            try:
                replay(load_json(path))
                results.append((path, None))
            except ValueError as err:
                results.append((path, str(err)))
        return results
