"""
Configuration, logging and report persistence tests
"""

import json
import logging
import os

import pytest

from core.config import QweylConfig, load_config
from core.report import CheckReport
from core.scalars import ParamContext
from utils.utils import format_duration, save_report, setup_logging


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for name in ('QWEYL_CONFIG', 'QWEYL_LOG_LEVEL', 'QWEYL_SEED'):
        monkeypatch.delenv(name, raising=False)
    return tmp_path


def write_ini(path, body):
    path.write_text(body)
    return str(path)


def test_defaults_without_a_file(workdir):
    config = load_config()
    assert config.config_file is None
    assert config.get_engine_config() == {
        'default_radius': 4, 'generic_symbols': 2, 'lambda_mode': 'symbolic', 'family': 'aj', 'localized': True,
    }
    assert config.get_output_config()['format'] == 'text'
    assert config.get_seed() is None


def test_standard_location(workdir):
    (workdir / 'config').mkdir()
    write_ini(workdir / 'config' / 'qweyl.ini', '[engine]\ndefault_radius = 6\nfamily = maltsiniotis\n')
    config = QweylConfig()
    assert config.config_file == 'config/qweyl.ini'
    assert config.get_engine_config()['default_radius'] == 6
    assert config.get_engine_config()['family'] == 'maltsiniotis'


def test_environment_overrides(workdir, monkeypatch):
    path = write_ini(workdir / 'custom.ini', '[logging]\nlog_level = WARNING\n')
    monkeypatch.setenv('QWEYL_CONFIG', path)
    monkeypatch.setenv('QWEYL_LOG_LEVEL', 'DEBUG')
    monkeypatch.setenv('QWEYL_SEED', '7')
    config = QweylConfig()
    assert config.config_file == path
    assert config.get_logging_config()['log_level'] == 'DEBUG'
    assert config.get_seed() == 7


@pytest.mark.parametrize('body', [
    '[engine]\ndefault_radius = 0\n',
    '[engine]\nlambda_mode = random\n',
    '[engine]\nfamily = weyl\n',
    '[engine]\ngeneric_symbols = -1\n',
    '[output]\nformat = xml\n',
])
def test_invalid_values(workdir, body):
    with pytest.raises(ValueError):
        QweylConfig(write_ini(workdir / 'bad.ini', body))


def test_missing_explicit_file(workdir):
    with pytest.raises(FileNotFoundError):
        QweylConfig('nowhere.ini')


def test_bad_seed(workdir, monkeypatch):
    monkeypatch.setenv('QWEYL_SEED', 'abc')
    with pytest.raises(ValueError):
        QweylConfig().get_seed()


def test_large_radius_warns(workdir, caplog):
    with caplog.at_level(logging.WARNING):
        QweylConfig(write_ini(workdir / 'big.ini', '[engine]\ndefault_radius = 12\n'))
    assert 'Large default radius' in caplog.text


def test_ensure_directories(workdir):
    config = QweylConfig(write_ini(workdir / 'dirs.ini', '[logging]\nlog_to_file = true\nlog_directory = out/logs\n'))
    config.ensure_directories()
    assert os.path.isdir('reports') and os.path.isdir('out/logs')


def test_setup_logging(workdir):
    assert setup_logging('INFO') is None
    path = setup_logging('DEBUG', log_to_file=True, log_directory='logs')
    assert path.startswith(os.path.join('logs', 'qweyl_')) and os.path.exists(path)
    with pytest.raises(ValueError):
        setup_logging('LOUD')
    setup_logging('WARNING')


def test_report_bookkeeping():
    report = CheckReport('demo', {'n': 1})
    report.record('a', True)
    report.record('b', False, 'k=(0,)')
    other = CheckReport('inner')
    other.record('c', True)
    other.note('inner note')
    report.extend(other, prefix='inner: ')
    report.finish()
    assert report.summary() == {'total': 3, 'passed': 2, 'failed': 1}
    assert [entry.identity for entry in report.failures] == ['b']
    assert report.entries[-1].identity == 'inner: c'
    lines = report.to_json_lines().split('\n')
    assert json.loads(lines[1]) == {'identity': 'b', 'status': 'fail', 'witness': 'k=(0,)'}
    assert json.loads(lines[-1])['notes'] == ['inner note']


def test_save_report(workdir):
    report = CheckReport('relcheck', {'n': 2})
    report.record('x1*y1 - q1*y1*x1 - 1', True)
    path = save_report(report.finish(), 'reports')
    assert os.path.basename(path).startswith('relcheck_')
    with open(path) as f:
        data = json.load(f)
    assert data['summary'] == {'total': 1, 'passed': 1, 'failed': 0}
    assert data['parameters'] == {'n': 2}


def test_format_duration():
    assert format_duration(12.34) == '12.3 seconds'
    assert format_duration(125) == '2m 5s'


def test_zero_generic_symbols_matches_the_context(workdir):
    config = QweylConfig(write_ini(workdir / 'plain.ini', '[engine]\ngeneric_symbols = 0\n'))
    symbols = config.get_engine_config()['generic_symbols']
    assert symbols == 0
    assert ParamContext(2, generic_symbols=symbols).generic_symbols == 0
