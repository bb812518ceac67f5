"""
Invariant reports along the chain ``m <= a <= a_st <= a_fw <= mu - 1``.

Raw bounds come from computations and certificates. Reported bounds are
propagated along the chain: lower bounds move right, upper bounds move
left.
"""
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
from ..utils import identity
from ..words import Word, Homomorphism
from ..constructors import Presentation, connected_sum_many
from ..alexander import determinant, determinant_primes, nakanishi_lower_bound
from ._budget import Budget, Inconclusive
from ._certificate import Certificate, CertificateCache
from ._certify import (
    Outcome, certify_nonabelian_quotient, lower_bound_afw_two
)
from ._search import search_upper_bound, combine_summand_witnesses

CHAIN = ('m', 'a', 'a_st', 'a_fw', 'mu_minus_one')

# Relator kind searched for each invariant.
INVARIANT_KINDS = {'a': 'ma_qiu', 'a_st': 'a_st', 'a_fw': 'a_fw'}
SEARCH_ORDER = ('a_fw', 'a_st', 'a')


class ChainInconsistencyError(RuntimeError):
    """A certified lower bound exceeds a certified upper bound."""


@dataclass
class RawBound:
    value: int
    source: str
    certificate: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'value': self.value,
            'source': self.source,
            'certificate': self.certificate,
        }


@dataclass
class Bound:
    """Propagated bounds on one invariant."""

    name: str
    lower: int = 0
    upper: Optional[int] = None
    lower_source: str = 'nonnegative'
    upper_source: Optional[str] = None
    lower_certificate: Optional[str] = None
    upper_certificate: Optional[str] = None

    @property
    def is_exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    def __str__(self) -> str:
        if self.is_exact:
            return f'{self.name} = {self.lower}'
        upper = '?' if self.upper is None else self.upper
        return f'{self.lower} <= {self.name} <= {upper}'

    def to_dict(self) -> Dict[str, Any]:
        return {
            'lower': self.lower,
            'upper': self.upper,
            'lower_source': self.lower_source,
            'upper_source': self.upper_source,
            'lower_certificate': self.lower_certificate,
            'upper_certificate': self.upper_certificate,
        }


@dataclass
class InvariantReport:
    """Bounds on ``m``, ``a``, ``a_st``, ``a_fw`` and ``mu - 1``."""

    presentation: Presentation
    budget: Budget
    determinant: Optional[int] = None
    coloring_primes: List[int] = field(default_factory=list)
    lowers: Dict[str, List[RawBound]] = field(
        default_factory=lambda: {name: [] for name in CHAIN}
    )
    uppers: Dict[str, List[RawBound]] = field(
        default_factory=lambda: {name: [] for name in CHAIN}
    )
    certificates: Dict[str, Certificate] = field(default_factory=dict)
    inconclusive: List[Tuple[str, str]] = field(default_factory=list)
    annotations: Dict[str, Dict[str, Any]] = field(default_factory=dict)
    upper_witnesses: Dict[str, Certificate] = field(default_factory=dict)

    @property
    def label(self) -> Optional[str]:
        return self.presentation.label

    def _reference(self, certificate: Optional[Certificate]) -> Optional[str]:
        if certificate is None:
            return None
        self.certificates[certificate.digest] = certificate
        return certificate.digest

    def add_lower(
        self, name: str, value: int, source: str,
        certificate: Optional[Certificate] = None
    ):
        self.lowers[name].append(
            RawBound(value, source, self._reference(certificate))
        )

    def add_upper(
        self, name: str, value: int, source: str,
        certificate: Optional[Certificate] = None
    ):
        self.uppers[name].append(
            RawBound(value, source, self._reference(certificate))
        )

    def add_inconclusive(self, name: str, outcome: Inconclusive):
        self.inconclusive.append((name, outcome.reason))

    def bound(self, name: str, certified_only: bool = False) -> Bound:
        """Bounds on ``name`` after propagation along the chain.

        With ``certified_only`` the Tietze bound on ``mu - 1`` is ignored.
        """
        k = CHAIN.index(name)
        result = Bound(name)
        for earlier in CHAIN[:k + 1]:
            for raw in self.lowers[earlier]:
                if raw.value > result.lower:
                    result.lower = raw.value
                    result.lower_source = raw.source
                    result.lower_certificate = raw.certificate
        for later in CHAIN[k:]:
            for raw in self.uppers[later]:
                if certified_only and raw.source == 'tietze':
                    continue
                if result.upper is None or raw.value < result.upper:
                    result.upper = raw.value
                    result.upper_source = raw.source
                    result.upper_certificate = raw.certificate
        return result

    @property
    def bounds(self) -> Dict[str, Bound]:
        return {name: self.bound(name) for name in CHAIN}

    def check_chain(self):
        """Raise if a raw lower bound exceeds a raw upper bound further on."""
        for i, earlier in enumerate(CHAIN):
            for later in CHAIN[i:]:
                for low in self.lowers[earlier]:
                    for high in self.uppers[later]:
                        if low.value > high.value:
                            raise ChainInconsistencyError(
                                f'{earlier} >= {low.value} ({low.source}) '
                                f'contradicts {later} <= {high.value} '
                                f'({high.source}) for {self.presentation!r}'
                            )

    def is_complete(self) -> bool:
        """True when no certification step was inconclusive."""
        return not self.inconclusive

    def to_dict(self) -> Dict[str, Any]:
        return {
            'label': self.label,
            'presentation_hash': self.presentation.presentation_hash,
            'determinant': self.determinant,
            'coloring_primes': list(self.coloring_primes),
            'chain': {
                name: bound.to_dict() for name, bound in self.bounds.items()
            },
            'raw': {
                name: {
                    'lower': [raw.to_dict() for raw in self.lowers[name]],
                    'upper': [raw.to_dict() for raw in self.uppers[name]],
                }
                for name in CHAIN
            },
            'annotations': self.annotations,
            'inconclusive': [
                {'invariant': name, 'reason': reason}
                for name, reason in self.inconclusive
            ],
            'certificates': sorted(self.certificates),
        }


def _single_occurrence(relator: Word, generator: int) -> bool:
    letters = [(g, s) for g, s in relator.letters() if g == generator]
    return len(letters) == 1


def tietze_meridian_bound(P: Presentation) -> Optional[int]:
    """Meridian generators left after greedy Tietze eliminations, minus 1.

    A generator is eliminated when some relator contains it exactly once;
    the distinguished meridian is never eliminated. None when ``P`` is not
    all-meridian.

    >>> from algunknot.constructors import catalog_presentation
    >>> tietze_meridian_bound(catalog_presentation('3_1'))
    1
    >>> from algunknot.constructors import connected_sum
    >>> trefoil = catalog_presentation('3_1')
    >>> tietze_meridian_bound(connected_sum(trefoil, trefoil))
    2
    """
    if not P.is_all_meridian():
        return None
    relators = list(P.relators)
    alive = list(range(P.gen_count))
    eliminated = True
    while eliminated:
        eliminated = False
        for r_index, relator in enumerate(relators):
            choices = [
                g for g in alive
                if g != P.distinguished and _single_occurrence(relator, g)
            ]
            if not choices:
                continue
            g = choices[0]
            before: List[Tuple[int, int]] = []
            after: List[Tuple[int, int]] = []
            sign = 0
            for generator, s in relator.letters():
                if generator == g:
                    sign = s
                elif sign == 0:
                    before.append((generator, s))
                else:
                    after.append((generator, s))
            # before . g^sign . after = 1
            solution = (Word(before).inverse()*Word(after).inverse())**sign
            images = [Word.generator(i) for i in range(P.gen_count)]
            images[g] = solution
            h = Homomorphism(images, P.gen_count)
            relators = [
                h(r) for k, r in enumerate(relators) if k != r_index
            ]
            relators = [r for r in relators if not r.is_identity()]
            alive.remove(g)
            eliminated = True
            break
    return len(alive) - 1


def _cached(
    cache: Optional[CertificateCache], P: Presentation, operation: str,
    budget: Budget, compute: Callable[[], Outcome]
) -> Outcome:
    if cache is not None:
        certificate = cache.get(P.presentation_hash, operation, budget)
        if certificate is not None:
            return certificate
    outcome = compute()
    if cache is not None and isinstance(outcome, Certificate):
        cache.put(outcome, operation, budget)
    return outcome


def invariant_report(
    P: Presentation,
    budget: Optional[Budget] = None,
    summands: Optional[Sequence[InvariantReport]] = None,
    classical: bool = False,
    even_twist_two_bridge: bool = False,
    c_max: int = 2,
    workers: int = 1,
    cache: Optional[CertificateCache] = None,
    progress: Callable = identity,
    verbose: bool = False,
) -> InvariantReport:
    """Certified bounds on the invariant chain of ``P``.

    ``summands`` are reports of connected summands whose sum is ``P``;
    their bounds carry over and their witnesses combine. ``classical``
    and ``even_twist_two_bridge`` only affect annotations.

    >>> from algunknot.constructors import catalog_presentation
    >>> report = invariant_report(catalog_presentation('unknot'))
    >>> [report.bounds[name].upper for name in CHAIN]
    [0, 0, 0, 0, 0]
    """
    if budget is None:
        budget = Budget()
    report = InvariantReport(P, budget)

    def log(message: str):
        if verbose:
            print(message)

    if P.has_uniform_abelianization():
        report.determinant = determinant(P)
        report.coloring_primes = [
            p for p in determinant_primes(P) if p != 2
        ]
    for p in report.coloring_primes:
        value = nakanishi_lower_bound(P, p)
        if value > 0:
            report.add_lower('m', value, f'alexander module at p={p}')
    log(f'Determinant {report.determinant}, primes {report.coloring_primes}')

    mu = tietze_meridian_bound(P)
    if mu is not None:
        report.add_upper('mu_minus_one', mu, 'tietze')

    if summands:
        _summand_bounds(report, summands, budget, cache, progress, log)

    for name in SEARCH_ORDER:
        current = report.bound(name, certified_only=True)
        lower = current.lower
        high = c_max if current.upper is None else min(
            c_max, current.upper - 1
        )
        if high < lower:
            continue
        kind = INVARIANT_KINDS[name]
        log(f'Searching {kind} witnesses with {lower} <= c <= {high}')
        outcome = _cached(
            cache, P, f'search-{kind}-c{lower}-{high}', budget,
            lambda: search_upper_bound(
                P, kind, high, budget, workers, c_min=lower,
                progress=progress
            )
        )
        if isinstance(outcome, Certificate):
            report.add_upper(name, outcome.bound, f'{kind} witness', outcome)
            report.upper_witnesses[name] = outcome
            if outcome.bound == 0:
                report.add_upper(
                    'mu_minus_one', 0, 'meridian generates', outcome
                )
        else:
            report.add_inconclusive(name, outcome)

    a_bound = report.bound('a')
    if a_bound.lower == 0 and (a_bound.upper is None or a_bound.upper > 0):
        log('Looking for a nonabelian finite quotient')
        outcome = _cached(
            cache, P, 'nonabelian', budget,
            lambda: certify_nonabelian_quotient(P, [], budget)
        )
        if isinstance(outcome, Certificate):
            report.add_lower('a', 1, 'nonabelian quotient', outcome)
        else:
            report.add_inconclusive('a', outcome)

    report.check_chain()
    _annotate(report, summands, classical, even_twist_two_bridge)
    return report


def _summand_bounds(
    report: InvariantReport, summands: Sequence[InvariantReport],
    budget: Budget, cache: Optional[CertificateCache],
    progress: Callable, log: Callable[[str], None]
):
    Ps = [s.presentation for s in summands]
    if connected_sum_many(Ps) != report.presentation:
        raise ValueError('Summand reports do not add up to the presentation')
    for name in ('a', 'a_st', 'a_fw'):
        best = max(summands, key=lambda s: s.bound(name).lower)
        bound = best.bound(name)
        if bound.lower > 0:
            certificate = best.certificates.get(bound.lower_certificate or '')
            report.add_lower(
                name, bound.lower, f'summand {best.label}', certificate
            )

    for i in range(len(summands)):
        for j in range(i + 1, len(summands)):
            pair = (Ps[i], Ps[j])
            log(f'Dihedral sweep on summands {i} and {j}')
            outcome = _cached(
                cache, connected_sum_many(pair), 'afw-two', budget,
                lambda: lower_bound_afw_two(*pair, budget, progress)
            )
            if isinstance(outcome, Certificate):
                report.add_lower('a_fw', 2, 'dihedral sweep', outcome)
                break
            report.add_inconclusive('a_fw', outcome)
        else:
            continue
        break

    for name, kind in INVARIANT_KINDS.items():
        witnesses = [s.upper_witnesses.get(name) for s in summands]
        if any(w is None for w in witnesses):
            continue
        log(f'Combining {kind} witnesses of {len(summands)} summands')
        outcome = combine_summand_witnesses(Ps, witnesses, kind, budget)
        if isinstance(outcome, Certificate):
            report.add_upper(name, outcome.bound, 'summand witnesses', outcome)
            report.upper_witnesses[name] = outcome
        else:
            report.add_inconclusive(name, outcome)


def _annotate(
    report: InvariantReport, summands: Optional[Sequence[InvariantReport]],
    classical: bool, even_twist_two_bridge: bool
):
    bounds = report.bounds
    report.annotations['u_st'] = {
        'lower': bounds['a_st'].lower, 'reason': 'u_st >= a_st'
    }
    u_fw: Dict[str, Any] = {
        'lower': bounds['a_fw'].lower, 'reason': 'u_fw >= a_fw'
    }
    if even_twist_two_bridge:
        u_fw['upper'] = 1
        u_fw['reason'] += '; even twist spin of a two-bridge knot'
    elif summands:
        uppers = [s.annotations.get('u_fw', {}).get('upper') for s in summands]
        if all(u is not None for u in uppers):
            u_fw['upper'] = sum(uppers)
            u_fw['reason'] += '; subadditive over summands'
    report.annotations['u_fw'] = u_fw
    if classical:
        report.annotations['u'] = {
            'lower': bounds['a_fw'].lower, 'reason': 'u >= a_fw'
        }
