import os
import json
import pytest
from click.testing import CliRunner

from algunknot.cli import cli, EXIT_INCONCLUSIVE

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')
QUICK = ['--max-word-length', '2', '-w', '1']


@pytest.fixture
def runner():
    """Click CliRunner with isolated file system."""
    _runner = CliRunner()
    with _runner.isolated_filesystem():
        yield _runner
    assert hasattr(_runner, 'invoke')


@pytest.mark.parametrize('arguments', [
    [],
    ['--help'],
    ['--version'],
    ['verify'],
    ['cache'],
])
def test_cli_basic(arguments, runner):
    result = runner.invoke(cli, arguments)
    assert result.exit_code == 0


class TestLS:

    def test_ls_all(self, runner):
        result = runner.invoke(cli, ['ls'])
        assert result.exit_code == 0
        assert 'Catalog:' in result.output
        assert 'Targets:' in result.output
        assert 'Relator kinds:' in result.output

    def test_ls_catalog(self, runner):
        result = runner.invoke(cli, ['ls', 'catalog'])
        assert result.exit_code == 0
        assert '    3_1\n' in result.output
        assert 'Targets:' not in result.output
        assert 'Relator kinds:' not in result.output

    def test_ls_targets(self, runner):
        result = runner.invoke(cli, ['ls', 'targets'])
        assert result.exit_code == 0
        assert 'Catalog:' not in result.output
        assert '    PSL(2,7)\n' in result.output

    def test_ls_kinds(self, runner):
        result = runner.invoke(cli, ['ls', 'kinds'])
        assert result.exit_code == 0
        assert result.output.split() == [
            'Relator', 'kinds:', 'a_fw', 'a_st', 'ma_qiu'
        ]

    def test_ls_custom_catalog(self, runner):
        path = os.path.join(DATA_DIR, 'custom_catalog.json')
        result = runner.invoke(cli, ['ls', 'catalog', '--catalog', path])
        assert result.exit_code == 0
        assert '    trefoil\n' in result.output
        assert '    3_1\n' not in result.output

    def test_ls_bad_catalog(self, runner):
        path = os.path.join(DATA_DIR, 'bad_catalog.json')
        result = runner.invoke(cli, ['ls', '--catalog', path])
        assert result.exit_code == 1
        assert '"braid" or "two_bridge"' in result.output


class TestGroup:

    def test_text(self, runner):
        result = runner.invoke(cli, ['group', '3_1'])
        assert result.exit_code == 0
        assert '< x0, x1 |' in result.output
        assert 'Meridians: x0, x1' in result.output
        assert 'Distinguished meridian: x0' in result.output

    def test_json(self, runner):
        result = runner.invoke(cli, ['group', 'tspin(3_1, 2)', '--json'])
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document['document_type'] == 'group'
        assert document['spec']['kind'] == 'tspin'
        assert document['presentation']['label'] == 'tspin(3_1, 2)'

    @pytest.mark.parametrize('spec, message', [
        ('3 1', 'Malformed knot expression'),
        ('8_19', 'Unknown knot'),
        ('braid(1, 1)', 'components'),
    ])
    def test_errors(self, runner, spec, message):
        result = runner.invoke(cli, ['group', spec])
        assert result.exit_code == 1
        assert message in result.output


class TestInvariants:

    def test_unknot(self, runner):
        result = runner.invoke(
            cli, ['invariants', 'unknot', '--no-cache'] + QUICK
        )
        assert result.exit_code == 0
        assert 'a_fw = 0' in result.output
        assert 'mu_minus_one = 0' in result.output

    def test_trefoil_json(self, runner):
        result = runner.invoke(cli, [
            'invariants', '3_1', '--c-max', '1', '--no-cache', '--json'
        ] + QUICK)
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document['document_type'] == 'invariants'
        for bound in document['chain'].values():
            assert bound['lower'] == bound['upper'] == 1

    def test_inconclusive_exit_code(self, runner):
        result = runner.invoke(cli, [
            'invariants', '4_1', '--c-max', '1', '--no-cache',
            '--max-word-length', '1', '-w', '1'
        ])
        assert result.exit_code == EXIT_INCONCLUSIVE
        assert 'Inconclusive a_fw' in result.output

    def test_bad_budget(self, runner):
        result = runner.invoke(cli, [
            'invariants', '3_1', '--no-cache', '--max-cosets', '0'
        ])
        assert result.exit_code == 1
        assert 'max_cosets=0' in result.output


class TestCache:

    def test_list_verify_gc(self, runner):
        result = runner.invoke(cli, [
            'invariants', '3_1', '--c-max', '1', '--cache-dir', 'certs'
        ] + QUICK)
        assert result.exit_code == 0
        assert len(os.listdir('certs')) == 1

        result = runner.invoke(cli, ['cache', 'list', '--cache-dir', 'certs'])
        assert result.exit_code == 0
        assert '1 certificates in certs' in result.output

        result = runner.invoke(
            cli, ['cache', 'verify', '--cache-dir', 'certs']
        )
        assert result.exit_code == 0
        assert '1 checked, 0 failed' in result.output

        result = runner.invoke(
            cli, ['cache', 'gc', '--max-age', '0', '--cache-dir', 'certs']
        )
        assert result.exit_code == 0
        assert 'Removed 1 certificates' in result.output
        assert os.listdir('certs') == []

    def test_verify_reports_tampering(self, runner):
        runner.invoke(cli, [
            'invariants', 'unknot', '--cache-dir', 'certs'
        ] + QUICK)
        name = os.listdir('certs')[0]
        path = os.path.join('certs', name)
        with open(path) as f:
            data = json.load(f)
        data['presentation_hash'] = '0'*32
        with open(path, 'w') as f:
            json.dump(data, f)
        result = runner.invoke(
            cli, ['cache', 'verify', '--cache-dir', 'certs']
        )
        assert result.exit_code == 1
        assert f'FAILED {name}' in result.output


class TestVerify:

    def test_algadd(self, runner):
        result = runner.invoke(
            cli, ['verify', 'algadd', '--p1', '3', '--p2', '5', '-L', '1']
        )
        assert result.exit_code == 0
        assert '6 pass, 0 inconclusive, 0 fail' in result.output

    def test_algadd_json(self, runner):
        result = runner.invoke(cli, [
            'verify', 'algadd', '--p1', '3', '--p2', '3', '-L', '1', '--json'
        ])
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document['theorem'] == 'algadd'
        assert document['params'] == {'p1': 3, 'p2': 3, 'length': 1}
        assert [cell['status'] for cell in document['cells']] == ['pass']*4

    @pytest.mark.parametrize('arguments, message', [
        (['--p1', '4', '--p2', '3'], 'not an odd prime'),
        (['--p1', '3', '--p2', '3', '-L', '0'], 'must be positive'),
    ])
    def test_algadd_errors(self, runner, arguments, message):
        result = runner.invoke(cli, ['verify', 'algadd'] + arguments)
        assert result.exit_code == 1
        assert message in result.output

    def test_fusion(self, runner):
        result = runner.invoke(cli, [
            'verify', 'fusion', '-n', '1', '--seeds', '2',
            '--max-conjugator-length', '2'
        ])
        assert result.exit_code == 0
        assert '2 pass' in result.output

    def test_fusion_needs_seeds(self, runner):
        result = runner.invoke(cli, ['verify', 'fusion', '--seeds', '0'])
        assert result.exit_code == 1

    @pytest.mark.parametrize('arguments, message', [
        (['--js', '2,4'], 'pairwise coprime'),
        (['--knots', '3_1', '--js', '2,3'], 'Got 1 knots for 2'),
        (['--js', '2,x'], 'not a list of integers'),
    ])
    def test_nonadd_errors(self, runner, arguments, message):
        result = runner.invoke(cli, ['verify', 'nonadd'] + arguments)
        assert result.exit_code == 1
        assert message in result.output

    @pytest.mark.slow
    def test_nonadd(self, runner):
        result = runner.invoke(cli, [
            'verify', 'nonadd', '--knots', '3_1,3_1', '--js', '2,3', '-w', '1'
        ])
        assert result.exit_code in (0, EXIT_INCONCLUSIVE)

    def test_inequalities(self, runner):
        result = runner.invoke(cli, [
            'verify', 'inequalities', '--specs', 'unknot; 3_1',
            '--c-max', '1', '--no-cache'
        ] + QUICK)
        assert result.exit_code == 0
        assert '2 pass, 0 inconclusive, 0 fail' in result.output
        assert 'a_fw = 1' in result.output

    def test_inequalities_inconclusive(self, runner):
        result = runner.invoke(cli, [
            'verify', 'inequalities', '--specs', '4_1', '--c-max', '1',
            '--no-cache', '--max-word-length', '1', '-w', '1'
        ])
        assert result.exit_code == EXIT_INCONCLUSIVE
        assert '0 pass, 1 inconclusive, 0 fail' in result.output

    def test_inequalities_needs_specs(self, runner):
        result = runner.invoke(
            cli, ['verify', 'inequalities', '--specs', ' ; ']
        )
        assert result.exit_code == 1
        assert 'No knot expressions' in result.output
