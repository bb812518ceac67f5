import os
import sys
import time
import functools
import contextlib
from typing import Any, Callable, Dict, List, Optional
import click
from tqdm import tqdm
import algunknot
from .config import (
    CACHE_DIR, CATALOG_PATH, MAX_COSETS, MAX_WORD_LENGTH, TIME_LIMIT,
    TARGETS, RELATOR_KINDS
)
from .utils import identity, sizeof_fmt
from .knot_spec import (
    Catalog, KnotSpec, parse_knot_spec, resolve, is_classical,
    is_even_twist_two_bridge
)
from .constructors import (
    load_catalog, twist_spin, catalog_presentation, random_conjugators
)
from .certify import (
    Budget, Inconclusive, CertificateCache, ChainInconsistencyError,
    InvariantReport, invariant_report, freiheitssatz_sweep,
    verify_nonadditivity, ribbon_stabilization_bound, default_workers
)
from .io import (
    build_group_document, build_report_document, build_verify_document,
    verify_cell, validate_report, to_json
)

EXIT_INCONCLUSIVE = 10
EXIT_ERROR = 1

DEFAULT_INEQUALITY_SPECS = ('unknot', 'tspin(3_1, 1)', 'tspin(3_1, 2)')


def handle_errors(command: Callable) -> Callable:
    """Report library errors as click errors with exit code 1."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except (ValueError, ChainInconsistencyError) as err:
            raise click.ClickException(str(err)) from err
    return wrapper


def catalog_option(command: Callable) -> Callable:
    return click.option(
        '--catalog', 'catalog_path', type=click.Path(dir_okay=False),
        default=CATALOG_PATH, show_default=True,
        help='Knot catalog JSON file'
    )(command)


def _apply(options: List[Callable], command: Callable) -> Callable:
    for option in reversed(options):
        command = option(command)
    return command


def budget_options(command: Callable) -> Callable:
    """Budget and output flags."""
    return _apply([
        click.option(
            '--max-cosets', type=click.INT, default=MAX_COSETS,
            show_default=True, help='Coset table size limit'
        ),
        click.option(
            '--max-word-length', type=click.INT, default=MAX_WORD_LENGTH,
            show_default=True, help='Longest candidate or sweep word'
        ),
        click.option(
            '--time-limit', type=click.FLOAT, default=TIME_LIMIT,
            show_default=True, help='Seconds per certification'
        ),
        click.option(
            '--json', 'json_output', is_flag=True, default=False,
            help='Print the schema-validated JSON document'
        ),
        click.option(
            '-v', '--verbose', is_flag=True, default=False,
            help='Show progress bars and milestones'
        ),
    ], command)


def workers_option(command: Callable) -> Callable:
    return click.option(
        '-w', '--workers', type=click.INT, default=None,
        help='Parallel workers, logical cores by default'
    )(command)


def search_options(command: Callable) -> Callable:
    """Budget flags plus workers, certificate cache and catalog."""
    return _apply([
        budget_options,
        workers_option,
        click.option(
            '--cache-dir', type=click.Path(file_okay=False),
            default=CACHE_DIR, show_default=True,
            help='Certificate cache directory'
        ),
        click.option(
            '--no-cache', is_flag=True, default=False,
            help='Neither read nor write cached certificates'
        ),
        catalog_option,
    ], command)


def _budget(max_cosets: int, max_word_length: int, time_limit: float):
    return Budget(
        max_cosets=max_cosets, max_word_length=max_word_length,
        time_limit=time_limit
    )


def _cache(cache_dir: str, no_cache: bool) -> Optional[CertificateCache]:
    return None if no_cache else CertificateCache(cache_dir)


@contextlib.contextmanager
def _quiet_stdout(json_output: bool):
    """Send milestone prints to stderr while JSON goes to stdout."""
    if json_output:
        with contextlib.redirect_stdout(sys.stderr):
            yield
    else:
        yield


def _emit(document: Dict[str, Any], json_output: bool):
    validate_report(document)
    if json_output:
        click.echo(to_json(document))


@click.group(invoke_without_command=True)
@click.version_option(version=algunknot.__version__, prog_name='algunknot')
@click.pass_context
def cli(ctx):
    """
    algunknot - certified bounds on algebraic unknotting invariants.

    See algunknot COMMAND --help for command-specific help.
    """
    if not ctx.invoked_subcommand:
        click.echo(ctx.get_help())


@click.command()
@click.argument('spec', required=True)
@click.option(
    '--json', 'json_output', is_flag=True, default=False,
    help='Print the schema-validated JSON document'
)
@catalog_option
@handle_errors
def group(spec: str, json_output: bool, catalog_path: str):
    """Show the group presentation of a knot expression."""
    start = time.time()
    knot = parse_knot_spec(spec)
    P = resolve(knot, load_catalog(catalog_path))
    document = build_group_document(
        knot.to_dict(), P, time.time() - start
    )
    _emit(document, json_output)
    if not json_output:
        click.echo(f'{knot}')
        click.echo(str(P))
        meridians = ', '.join(
            f'x{i}' for i, flag in enumerate(P.meridians) if flag
        )
        click.echo(f'Meridians: {meridians}')
        click.echo(f'Distinguished meridian: x{P.distinguished}')
        click.echo(f'Hash: {P.presentation_hash}')


def _knot_report(
    knot: KnotSpec, catalog: Catalog, budget: Budget, c_max: int,
    workers: int, cache: Optional[CertificateCache], progress: Callable,
    verbose: bool
) -> InvariantReport:
    summand_reports = None
    if knot.kind == 'sum':
        summand_reports = [
            _knot_report(
                child, catalog, budget, c_max, workers, cache, progress,
                verbose
            )
            for child in knot.children
        ]
    P = resolve(knot, catalog)
    if verbose:
        print(f'Certifying {knot}')
    return invariant_report(
        P, budget,
        summands=summand_reports,
        classical=is_classical(knot),
        even_twist_two_bridge=is_even_twist_two_bridge(knot, catalog),
        c_max=c_max, workers=workers, cache=cache,
        progress=progress, verbose=verbose,
    )


def _print_report(knot: KnotSpec, report: InvariantReport):
    click.echo(f'{knot}: {report.presentation!r}')
    click.echo(f'Determinant: {report.determinant}')
    primes = ', '.join(map(str, report.coloring_primes)) or 'none'
    click.echo(f'Coloring primes: {primes}')
    for bound in report.bounds.values():
        sources = [bound.lower_source]
        if bound.upper_source:
            sources.append(bound.upper_source)
        click.echo(f'    {str(bound):<28} [{"; ".join(sources)}]')
    for name, annotation in sorted(report.annotations.items()):
        upper = annotation.get('upper')
        text = f'{annotation["lower"]} <= {name}'
        if upper is not None:
            text += f' <= {upper}'
        click.echo(f'    {text:<28} ({annotation["reason"]})')
    for name, reason in report.inconclusive:
        click.echo(f'Inconclusive {name}: {reason}')


@click.command()
@click.argument('spec', required=True)
@click.option(
    '--c-max', type=click.INT, default=2, show_default=True,
    help='Largest relator count searched for upper bounds'
)
@search_options
@click.pass_context
@handle_errors
def invariants(
    ctx, spec: str, c_max: int, max_cosets: int, max_word_length: int,
    time_limit: float, workers: Optional[int], cache_dir: str,
    no_cache: bool, json_output: bool, verbose: bool, catalog_path: str
):
    """Certified bounds on m, a, a_st, a_fw and mu - 1."""
    start = time.time()
    knot = parse_knot_spec(spec)
    catalog = load_catalog(catalog_path)
    budget = _budget(max_cosets, max_word_length, time_limit)
    progress = tqdm if verbose else identity
    with _quiet_stdout(json_output):
        report = _knot_report(
            knot, catalog, budget, c_max, workers or default_workers(),
            _cache(cache_dir, no_cache), progress, verbose
        )
    document = build_report_document(
        knot.to_dict(), report, time.time() - start
    )
    _emit(document, json_output)
    if not json_output:
        _print_report(knot, report)
    if not report.is_complete():
        ctx.exit(EXIT_INCONCLUSIVE)


@click.group(invoke_without_command=True)
@click.pass_context
def verify(ctx):
    """Run a verification grid and report pass or inconclusive per cell."""
    if not ctx.invoked_subcommand:
        click.echo(ctx.get_help())


def _finish_verify(
    ctx, theorem: str, params: Dict[str, Any], cells: List[Dict[str, Any]],
    budget: Budget, start: float, json_output: bool
):
    document = build_verify_document(
        theorem, params, cells, budget, time.time() - start
    )
    _emit(document, json_output)
    statuses = [cell['status'] for cell in cells]
    if not json_output:
        for cell in cells:
            label = ', '.join(f'{k}={v}' for k, v in cell['params'].items())
            line = f'{cell["status"]:<12} {label}'
            if 'reason' in cell:
                line += f'  ({cell["reason"]})'
            elif 'detail' in cell:
                line += f'  ({cell["detail"]})'
            click.echo(line)
        click.echo(
            f'{statuses.count("pass")} pass, '
            f'{statuses.count("inconclusive")} inconclusive, '
            f'{statuses.count("fail")} fail'
        )
    if 'fail' in statuses:
        ctx.exit(EXIT_ERROR)
    if 'inconclusive' in statuses:
        ctx.exit(EXIT_INCONCLUSIVE)


@click.command()
@click.option('--p1', type=click.INT, required=True, help='First odd prime')
@click.option('--p2', type=click.INT, required=True, help='Second odd prime')
@click.option(
    '-L', '--length', type=click.INT, default=4, show_default=True,
    help='Longest alternating word swept'
)
@budget_options
@click.pass_context
@handle_errors
def algadd(
    ctx, p1: int, p2: int, length: int, max_cosets: int,
    max_word_length: int, time_limit: float, json_output: bool,
    verbose: bool
):
    """Nontrivial quotients for the one-relator sweep over G(p1, p2)."""
    start = time.time()
    if length < 1:
        raise ValueError(f'length={length} must be positive')
    budget = _budget(max_cosets, max_word_length, time_limit)
    cells = []
    with _quiet_stdout(json_output):
        sweep = freiheitssatz_sweep(
            p1, p2, length, budget, tqdm if verbose else identity
        )
        for v, g, outcome in sweep:
            cells.append(verify_cell({'v': str(v), 'g': str(g)}, outcome))
    _finish_verify(
        ctx, 'algadd', {'p1': p1, 'p2': p2, 'length': length}, cells,
        budget, start, json_output
    )


def _integer_list(text: str, name: str) -> List[int]:
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise ValueError(
            f'{name}={text!r} is not a list of integers'
        ) from None


@click.command()
@click.option(
    '--knots', type=str, default='3_1,3_1', show_default=True,
    help='Comma-separated catalog knots to twist spin'
)
@click.option(
    '--js', type=str, default='2,3', show_default=True,
    help='Comma-separated pairwise coprime twist numbers'
)
@click.option(
    '-c', '--c', 'c', type=click.INT, default=1, show_default=True,
    help='Number of combined relators'
)
@click.option(
    '--kind', type=click.Choice(['a_st', 'a_fw']), default='a_st',
    show_default=True, help='Relator kind combined across summands'
)
@budget_options
@workers_option
@catalog_option
@click.pass_context
@handle_errors
def nonadd(
    ctx, knots: str, js: str, c: int, kind: str, max_cosets: int,
    max_word_length: int, time_limit: float, json_output: bool,
    verbose: bool, workers: Optional[int], catalog_path: str
):
    """One combined relator for a sum of twist spins with coprime twists."""
    start = time.time()
    names = [name.strip() for name in knots.split(',') if name.strip()]
    twists = _integer_list(js, 'js')
    if len(names) != len(twists):
        raise ValueError(
            f'Got {len(names)} knots for {len(twists)} twist numbers'
        )
    catalog = load_catalog(catalog_path)
    budget = _budget(max_cosets, max_word_length, time_limit)
    Ps = [
        twist_spin(catalog_presentation(name, catalog), j)
        for name, j in zip(names, twists)
    ]
    with _quiet_stdout(json_output):
        outcome = verify_nonadditivity(
            Ps, twists, budget, c, kind, workers or default_workers()
        )
    params = {'knots': names, 'js': twists, 'c': c, 'kind': kind}
    cells = [verify_cell(
        params, outcome, detail=f'{kind} <= {c} for the sum'
    )]
    _finish_verify(ctx, 'nonadd', params, cells, budget, start, json_output)


@click.command()
@click.option(
    '-n', '--fusion-count', type=click.INT, default=2, show_default=True,
    help='Fusion count of the ribbon presentations'
)
@click.option(
    '--seeds', type=click.INT, default=3, show_default=True,
    help='Number of random presentations, seeded 0, 1, ...'
)
@click.option(
    '--max-conjugator-length', type=click.INT, default=4, show_default=True,
    help='Longest random conjugator'
)
@budget_options
@click.pass_context
@handle_errors
def fusion(
    ctx, fusion_count: int, seeds: int, max_conjugator_length: int,
    max_cosets: int, max_word_length: int, time_limit: float,
    json_output: bool, verbose: bool
):
    """Stabilization bound by the fusion count on random ribbon knots."""
    start = time.time()
    if seeds < 1:
        raise ValueError(f'seeds={seeds} must be positive')
    budget = _budget(max_cosets, max_word_length, time_limit)
    cells = []
    seed_range = range(seeds)
    for seed in (tqdm(seed_range) if verbose else seed_range):
        conjugators = random_conjugators(
            fusion_count, max_conjugator_length, seed
        )
        outcome: Any = ribbon_stabilization_bound(conjugators, budget)
        if outcome and outcome.bound > fusion_count:
            outcome = False
        cells.append(verify_cell(
            {'seed': seed, 'conjugators': [str(g) for g in conjugators]},
            outcome, detail=f'a_st <= {fusion_count}'
        ))
    params = {
        'fusion_count': fusion_count,
        'seeds': seeds,
        'max_conjugator_length': max_conjugator_length,
    }
    _finish_verify(ctx, 'fusion', params, cells, budget, start, json_output)


@click.command()
@click.option(
    '--specs', type=str, default=';'.join(DEFAULT_INEQUALITY_SPECS),
    show_default=True, help='Semicolon-separated knot expressions'
)
@click.option(
    '--c-max', type=click.INT, default=2, show_default=True,
    help='Largest relator count searched for upper bounds'
)
@search_options
@click.pass_context
@handle_errors
def inequalities(
    ctx, specs: str, c_max: int, max_cosets: int, max_word_length: int,
    time_limit: float, workers: Optional[int], cache_dir: str,
    no_cache: bool, json_output: bool, verbose: bool, catalog_path: str
):
    """Check m <= a <= a_st <= a_fw <= mu - 1 on each knot."""
    start = time.time()
    knots = [
        parse_knot_spec(text) for text in specs.split(';') if text.strip()
    ]
    if not knots:
        raise ValueError('No knot expressions given')
    catalog = load_catalog(catalog_path)
    budget = _budget(max_cosets, max_word_length, time_limit)
    cache = _cache(cache_dir, no_cache)
    progress = tqdm if verbose else identity
    cells = []
    for knot in knots:
        try:
            with _quiet_stdout(json_output):
                report = _knot_report(
                    knot, catalog, budget, c_max,
                    workers or default_workers(), cache, progress, verbose
                )
        except ChainInconsistencyError as err:
            cells.append(verify_cell({'spec': str(knot)}, False, str(err)))
            continue
        detail = '; '.join(str(bound) for bound in report.bounds.values())
        outcome: Any = True
        if not report.is_complete():
            outcome = Inconclusive('; '.join(
                f'{name}: {reason}' for name, reason in report.inconclusive
            ))
        cells.append(verify_cell({'spec': str(knot)}, outcome, detail))
    params = {'specs': [str(knot) for knot in knots], 'c_max': c_max}
    _finish_verify(
        ctx, 'inequalities', params, cells, budget, start, json_output
    )


@click.group(invoke_without_command=True)
@click.pass_context
def cache(ctx):
    """Inspect, prune or replay cached certificates."""
    if not ctx.invoked_subcommand:
        click.echo(ctx.get_help())


def _cache_dir_option(command: Callable) -> Callable:
    return click.option(
        '--cache-dir', type=click.Path(file_okay=False), default=CACHE_DIR,
        show_default=True, help='Certificate cache directory'
    )(command)


@click.command(name='list')
@_cache_dir_option
def cache_list(cache_dir: str):
    """List cached certificates."""
    entries = CertificateCache(cache_dir).entries()
    for path in entries:
        size = sizeof_fmt(os.path.getsize(path))
        click.echo(f'{os.path.basename(path)} ({size})')
    click.echo(f'{len(entries)} certificates in {cache_dir}')


@click.command()
@click.option(
    '--max-age', type=click.FLOAT, default=30*24*3600.0, show_default=True,
    help='Delete certificates at least this many seconds old'
)
@_cache_dir_option
def gc(max_age: float, cache_dir: str):
    """Delete old cached certificates."""
    removed = CertificateCache(cache_dir).gc(max_age)
    click.echo(f'Removed {removed} certificates from {cache_dir}')


@click.command(name='verify')
@click.option(
    '-v', '--verbose', is_flag=True, default=False, help='Show progress'
)
@_cache_dir_option
@click.pass_context
def cache_verify(ctx, verbose: bool, cache_dir: str):
    """Replay every cached certificate."""
    results = CertificateCache(cache_dir).verify(
        progress=tqdm if verbose else identity
    )
    failures = [(path, error) for path, error in results if error is not None]
    for path, error in failures:
        click.echo(f'FAILED {os.path.basename(path)}: {error}')
    click.echo(f'{len(results)} checked, {len(failures)} failed')
    if failures:
        ctx.exit(EXIT_ERROR)


@click.command()
@click.argument('listing', required=False, type=click.Choice(
    ['catalog', 'targets', 'kinds'],
    case_sensitive=False
))
@catalog_option
@handle_errors
def ls(catalog_path: str, listing: Optional[str] = None):
    """List catalog knots, finite target groups and relator kinds."""
    if listing is None or listing == 'catalog':
        click.echo('Catalog:')
        click.echo('\n'.join([
            '    ' + name for name in sorted(load_catalog(catalog_path))
        ]))
    if listing is None or listing == 'targets':
        click.echo('Targets:')
        click.echo('\n'.join([
            '    ' + name for name in sorted(TARGETS.keys())
        ]))
    if listing is None or listing == 'kinds':
        click.echo('Relator kinds:')
        click.echo('\n'.join([
            '    ' + name for name in sorted(RELATOR_KINDS.keys())
        ]))


verify.add_command(algadd)
verify.add_command(nonadd)
verify.add_command(fusion)
verify.add_command(inequalities)
cache.add_command(cache_list)
cache.add_command(gc)
cache.add_command(cache_verify)
cli.add_command(group)
cli.add_command(invariants)
cli.add_command(verify)
cli.add_command(cache)
cli.add_command(ls)
