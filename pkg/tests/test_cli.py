"""
Command-line tests: every command runs through qweyl.py in a subprocess
"""

import json
import os
import subprocess
import sys

import pytest

from conftest import ROOT

SCRIPT = os.path.join(ROOT, 'qweyl.py')


def run_command(*args, cwd=None):
    """Run qweyl.py and capture output"""
    env = {k: v for k, v in os.environ.items() if not k.startswith('QWEYL_')}
    env['PYTHONIOENCODING'] = 'utf-8'
    return subprocess.run(
        [sys.executable, SCRIPT, *args],
        capture_output=True,
        text=True,
        encoding='utf-8',
        timeout=300,
        cwd=cwd,
        env=env,
    )


@pytest.fixture
def workdir(tmp_path):
    return str(tmp_path)


def test_help(workdir):
    result = run_command('--help', cwd=workdir)
    assert result.returncode == 0
    assert 'relcheck' in result.stdout and 'module-graph' in result.stdout


def test_relcheck_passes(workdir):
    result = run_command('relcheck', '--n', '2', '--family', 'maltsiniotis', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert 'ALL IDENTITIES HOLD' in result.stdout


def test_relcheck_perturbed_fails(workdir):
    result = run_command('relcheck', '--n', '1', '--perturb', cwd=workdir)
    assert result.returncode == 1
    assert '❌' in result.stdout


def test_relcheck_json(workdir):
    result = run_command('relcheck', '--n', '1', '--no-localized', '--format', 'json', cwd=workdir)
    assert result.returncode == 0, result.stderr
    records = [json.loads(line) for line in result.stdout.strip().split('\n')]
    assert all(record['status'] == 'pass' for record in records[:-1])
    assert records[-1]['summary']['failed'] == 0


def test_relcheck_all_presentations(workdir):
    result = run_command('relcheck', '--n', '2', '--all-presentations', '--format', 'json', cwd=workdir)
    assert result.returncode == 0, result.stderr
    records = [json.loads(line) for line in result.stdout.strip().split('\n')]
    prefixes = {record['identity'].split(':')[0] for record in records[:-1]}
    assert prefixes == {'AJ-A', 'AJ-B', 'Malt-A', 'Malt-B'}
    assert records[-1]['check'] == 'relations-suite'


def test_relcheck_all_presentations_rejects_perturb(workdir):
    result = run_command('relcheck', '--n', '1', '--all-presentations', '--perturb', cwd=workdir)
    assert result.returncode == 2


def test_algebra_check(workdir):
    result = run_command('algebra-check', '--n', '1', '--samples', '3', '--seed', '11', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert 'ALL IDENTITIES HOLD' in result.stdout


def test_normalize(workdir):
    result = run_command('normalize', '--n', '1', '--no-localized', '--expr', 'x1*y1', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert result.stdout.strip() == '1 + q1*y1*x1'


def test_normalize_syntax_error(workdir):
    result = run_command('normalize', '--n', '1', '--expr', 'x1^-1', cwd=workdir)
    assert result.returncode == 2
    assert 'offset 0' in result.stderr


def test_classify(workdir):
    result = run_command('classify', '--n', '1', '--phi', '[q^2]', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert 'Descriptor: LowerRay(2)' in result.stdout
    assert 'S-support: k1 ≤ 2; P simple: false' in result.stdout


def test_classify_enumerate(workdir):
    result = run_command('classify', '--n', '1', '--enumerate', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert '4 isomorphism classes among 11 characters' in result.stdout


def test_iso(workdir):
    result = run_command('iso', '--n', '1', '--kind', 'S', '--phi', '[q^2]', '--psi', '[q^5]', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert result.stdout.startswith('true')
    result = run_command('iso', '--n', '1', '--phi', '[q^2]', '--psi', '[q^-1]', '--format', 'json', cwd=workdir)
    assert json.loads(result.stdout)['isomorphic'] is False


def test_module_graph_dot(workdir):
    result = run_command('module-graph', '--n', '1', '--phi', '[q^2]', '--radius', '4', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert result.stdout.startswith('digraph P_phi {')
    assert 'v_3 -> v_2 [label="y1 = 0"' in result.stdout


def test_module_graph_to_file(workdir):
    result = run_command('module-graph', '--n', '2', '--phi', '[q, c1]', '--kind', 'S', '--radius', '2',
                         '--format', 'json', '--output', 'graph.jsonl', cwd=workdir)
    assert result.returncode == 0, result.stderr
    with open(os.path.join(workdir, 'graph.jsonl')) as f:
        assert len(f.read().strip().split('\n')) == 20


def test_shift_iso_degenerate_axis(workdir):
    result = run_command('shift-iso', '--n', '1', '--phi', '[1]', cwd=workdir)
    assert result.returncode == 1
    assert 'not injective' in result.stdout


def test_shift_iso(workdir):
    result = run_command('shift-iso', '--n', '1', '--phi', '[q^2]', '--radius', '3', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert 'mu(-1,) = q1 + 1' in result.stdout


def test_tensor_check_needs_trivial_matrix(workdir):
    result = run_command('tensor-check', '--n', '2', '--phi', '[q, q]', cwd=workdir)
    assert result.returncode == 2
    result = run_command('tensor-check', '--n', '2', '--lambda', 'ones', '--phi', '[q, c1]', '--radius', '2',
                         cwd=workdir)
    assert result.returncode == 0, result.stderr


def test_qdiff_check(workdir):
    result = run_command('qdiff-check', '--n', '1', '--degree', '3', '--radius', '3', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert 'reciprocal' in result.stdout


def test_module_check_saves_report(workdir):
    result = run_command('module-check', '--n', '1', '--phi', '[c1*q]', '--radius', '3', '--samples', '2',
                         '--save-report', cwd=workdir)
    assert result.returncode == 0, result.stderr
    assert os.listdir(os.path.join(workdir, 'reports'))


def test_numeric_lambdas(workdir):
    result = run_command('relcheck', '--n', '2', '--lambdas', '12=3/2', cwd=workdir)
    assert result.returncode == 0, result.stderr
    result = run_command('relcheck', '--n', '2', '--lambdas', '21=3', cwd=workdir)
    assert result.returncode == 2


@pytest.mark.parametrize('args', [
    ('classify', '--n', '2', '--phi', '[q]'),
    ('module-graph', '--n', '1'),
    ('normalize', '--n', '1'),
    ('relcheck', '--radius', '0'),
])
def test_usage_errors(workdir, args):
    result = run_command(*args, cwd=workdir)
    assert result.returncode == 2
    assert '❌' in result.stderr


def test_missing_config_file(workdir):
    result = run_command('relcheck', '--config', 'missing.ini', cwd=workdir)
    assert result.returncode == 2
    assert 'Configuration error' in result.stderr


@pytest.mark.slow
def test_theta_and_twist_checks(workdir):
    assert run_command('theta-check', '--n', '2', cwd=workdir).returncode == 0
    assert run_command('twist-check', '--n', '2', '--samples', '5', '--phi', '[q, c1]', '--radius', '2',
                       cwd=workdir).returncode == 0
