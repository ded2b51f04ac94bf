import json

import pytest
from click.testing import CliRunner

from ffperm import config
from ffperm import logging
from ffperm.cli import cli, run


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def _json(result) -> dict:
    return json.loads(result.stdout)


def test_help_lists_commands(runner):
    result = runner.invoke(cli, ['--help'])

    assert result.exit_code == 0
    for name in ('verify', 'classify', 'sweep'):
        assert name in result.output


def test_verify_help_lists_sweeps(runner):
    result = runner.invoke(cli, ['verify', '--help'])

    assert result.exit_code == 0
    for name in ('thm1', 'lemma30', 'lemma31', 'necessity', 'identity', 'recurrence', 'certificate', 'hyp', 'rewrite', 'eq33', 'gnq'):
        assert name in result.output


def test_classify_json(runner):
    result = runner.invoke(cli, ['classify', '--q', '7', '--t', '1', '--format', 'json'])

    assert result.exit_code == 0, result.stderr
    doc = _json(result)
    assert doc['summary'] == {'total': 1, 'passed': 1, 'failed': 0, 'skipped': 0}
    assert doc['records'][0]['observed'] == 'not-pp'


def test_classify_permutation(runner):
    result = runner.invoke(cli, ['classify', '--q', '11', '--t', '3', '--format', 'json'])

    assert result.exit_code == 0
    record = _json(result)['records'][0]
    assert record['params']['case'] == 'case-iii'
    assert record['observed'] == 'pp'


@pytest.mark.parametrize('args', [
    ['verify', 'thm1', '--q-max', '0'],
    ['classify', '--q', '6', '--t', '1'],
    ['classify', '--q', '7', '--t', '0'],
    ['verify', 'lemma31', '--q-list', '3,4'],
    ['verify', 'gnq', '--q-list', 'x'],
    ['verify', 'identity', '--format', 'xml'],
    ['verify', 'certificate', '--k-min', '5', '--k-max', '1'],
])
def test_bad_parameters_exit_2(runner, args):
    assert runner.invoke(cli, args).exit_code == 2


def test_run_returns_exit_code():
    assert run(['verify', 'thm1', '--q-max', '0']) == 2
    assert run(['verify', 'identity', '--n-max', '3']) == 0


def test_bad_environment_exits_2(runner):
    result = runner.invoke(cli, ['verify', 'identity', '--n-max', '2'], env={config.MAX_FIELD_SIZE_ENV_VAR: 'abc'})

    assert result.exit_code == 2
    assert config.MAX_FIELD_SIZE_ENV_VAR in result.stderr


def test_small_field_bound_is_a_configuration_failure(runner):
    result = runner.invoke(cli, ['classify', '--q', '11', '--t', '1'], env={config.MAX_FIELD_SIZE_ENV_VAR: '100'})
    assert result.exit_code == 2


def test_identity_csv(runner):
    result = runner.invoke(cli, ['verify', 'identity', '--n-max', '20', '--format', 'csv'])

    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == 'check,params,expected,observed,pass,skipped'
    assert len(lines) == 22


def test_text_report_ends_with_summary(runner):
    result = runner.invoke(cli, ['verify', 'recurrence', '--n-max', '4'])

    assert result.exit_code == 0
    assert result.stdout.splitlines()[-1] == '10 checks: 10 passed, 0 failed, 0 skipped'


def test_jobs_do_not_change_output(runner):
    serial = runner.invoke(cli, ['verify', 'eq33', '--q-max', '25', '--format', 'json', '--jobs', '1'])
    pooled = runner.invoke(cli, ['verify', 'eq33', '--q-max', '25', '--format', 'json', '--jobs', '2'])

    assert serial.exit_code == pooled.exit_code == 0
    assert serial.stdout == pooled.stdout


def test_lemma30_seed_is_reproducible(runner):
    args = ['verify', 'lemma30', '--samples', '20', '--q-max', '27', '--format', 'json']
    first = runner.invoke(cli, args + ['--seed', '1'])
    again = runner.invoke(cli, args + ['--seed', '1'])

    assert first.exit_code == 0
    assert first.stdout == again.stdout


def test_out_writes_file(runner, tmp_path):
    path = tmp_path / 'report.json'
    result = runner.invoke(cli, ['verify', 'hyp', '--n-max', '3', '--format', 'json', '--out', str(path)])

    assert result.exit_code == 0
    assert result.stdout == ''
    assert json.loads(path.read_text())['summary']['total'] == 16


def test_gnq_reports_skips(runner):
    result = runner.invoke(cli, ['verify', 'gnq', '--q-list', '3', '--i-max', '2', '--format', 'json'])

    assert result.exit_code == 0
    assert _json(result)['summary']['skipped'] > 0


def test_certificate_reports_poles(runner):
    result = runner.invoke(cli, ['verify', 'certificate', '--n-max', '2', '--k-max', '6', '--format', 'json'])

    assert result.exit_code == 0
    summary = _json(result)['summary']
    assert summary['skipped'] > 0
    assert summary['failed'] == 0


def test_log_file(runner, tmp_path):
    path = tmp_path / 'logs' / 'ffperm.log'
    result = runner.invoke(cli, ['--log-file', str(path), 'verify', 'identity', '--n-max', '1'])
    logging.close_log_file()

    assert result.exit_code == 0
    assert 'CLI' in path.read_text()


def test_output_options_before_subcommand(runner):
    result = runner.invoke(cli, ['--format', 'json', 'classify', '--q', '7', '--t', '1'])

    assert result.exit_code == 0
    assert _json(result)['summary']['total'] == 1


def test_output_options_after_subcommand_win(runner):
    result = runner.invoke(cli, ['--format', 'json', 'verify', 'identity', '--n-max', '2', '--format', 'csv'])

    assert result.exit_code == 0
    assert result.stdout.startswith('check,params,')
