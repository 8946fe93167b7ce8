"""
Tests for the fixture self-test and the inverse benchmark
"""

import json
from math import gcd

import pytest
from click.testing import CliRunner

from kuttaka_kit.bench import InverseBenchmark
from kuttaka_kit.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, cli
from kuttaka_kit.config import Config
from kuttaka_kit.congruence import mod_inverse
from kuttaka_kit.errors import FixtureError, InvalidInputError
from kuttaka_kit.fixtures import OPERATIONS, VectorRunner


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def vectors():
    return json.loads(Config.FIXTURES_PATH.read_text(encoding='utf-8'))


def write_vectors(tmp_path, payload):
    path = tmp_path / 'vectors.json'
    path.write_text(json.dumps(payload), encoding='utf-8')
    return str(path)


def test_every_vector_passes():
    results = VectorRunner(Config.FIXTURES_PATH).run()
    assert results
    assert [result.id for result in results if not result.passed] == []


def test_fixture_ids_are_unique(vectors):
    ids = [vector['id'] for vector in vectors]
    assert len(ids) == len(set(ids))


def test_fixtures_cover_every_operation(vectors):
    assert {vector['op'] for vector in vectors} == set(OPERATIONS)


def test_selftest_command_passes(runner, vectors):
    result = runner.invoke(cli, ['selftest'])
    assert result.exit_code == EXIT_OK
    assert f"{len(vectors)}/{len(vectors)} vectors passed" in result.stdout


def test_selftest_json(runner):
    result = runner.invoke(cli, ['selftest', '--json'])
    payload = json.loads(result.stdout)
    assert payload['result']['failed'] == []
    assert all(vector['passed'] for vector in payload['result']['vectors'])


def test_empty_fixture_file(runner, tmp_path):
    path = tmp_path / 'empty.json'
    path.write_text('', encoding='utf-8')
    result = runner.invoke(cli, ['selftest', '--fixtures', str(path)])
    assert result.exit_code == EXIT_USAGE
    assert 'no vectors' in result.stderr


def test_empty_vector_list(tmp_path):
    with pytest.raises(FixtureError):
        VectorRunner(write_vectors(tmp_path, []))


def test_missing_fixture_file(runner, tmp_path):
    result = runner.invoke(cli, ['selftest', '--fixtures', str(tmp_path / 'absent.json')])
    assert result.exit_code == EXIT_USAGE


@pytest.mark.parametrize('index', [0, 8, 14, 23])
def test_mutated_vector_is_named(runner, tmp_path, vectors, index):
    vector = vectors[index]
    if isinstance(vector['expected'], dict):
        key = sorted(vector['expected'])[0]
        vector['expected'][key] = 'mutated'
    else:
        vector['expected'] = 'mutated'
    result = runner.invoke(cli, ['selftest', '--fixtures', write_vectors(tmp_path, vectors)])
    assert result.exit_code == EXIT_CHECK_FAILED
    assert vector['id'] in result.stderr
    assert f"FAIL {vector['id']}" in result.stdout


def test_unknown_operation_fails(tmp_path):
    path = write_vectors(tmp_path, {'vectors': [{'id': 'odd', 'op': 'factor', 'expected': 1}]})
    result = VectorRunner(path).run()[0]
    assert not result.passed
    assert result.error['kind'] == 'unknown_op'


def test_raising_vector_fails_with_error(tmp_path):
    path = write_vectors(tmp_path, [
        {'id': 'no-inverse', 'op': 'mod_inverse', 'inputs': {'a': 6, 'm': 9}, 'expected': 1},
    ])
    result = VectorRunner(path).run()[0]
    assert not result.passed
    assert result.error['kind'] == 'not_coprime'


@pytest.mark.parametrize('op, inputs', [
    ('mod_inverse', {'a': 137}),
    ('mod_inverse', {'a': 137, 'm': None}),
    ('solve_system', {'congruences': [[0]]}),
    ('choose_mati', {'r_last': 17, 'd_prev': 43, 'c': 10, 'parity': 'sideways'}),
])
def test_malformed_vector_fails_and_later_vectors_still_run(tmp_path, op, inputs):
    path = write_vectors(tmp_path, [
        {'id': 'broken', 'op': op, 'inputs': inputs, 'expected': 1},
        {'id': 'sound', 'op': 'mod_inverse', 'inputs': {'a': 137, 'm': 60}, 'expected': 53},
    ])
    broken, sound = VectorRunner(path).run()
    assert broken.id == 'broken'
    assert not broken.passed
    assert broken.error['kind'] == 'malformed_vector'
    assert sound.passed


def test_selftest_names_malformed_vector(runner, tmp_path):
    path = write_vectors(tmp_path, [
        {'id': 'missing-m', 'op': 'mod_inverse', 'inputs': {'a': 137}, 'expected': 53},
    ])
    result = runner.invoke(cli, ['selftest', '--fixtures', path])
    assert result.exit_code == EXIT_CHECK_FAILED
    assert 'missing-m' in result.stderr


def test_coprime_pairs_are_deterministic():
    first = InverseBenchmark.coprime_pairs(100, 20, 42)
    assert first == InverseBenchmark.coprime_pairs(100, 20, 42)
    assert all(gcd(a, m) == 1 for a, m in first)
    assert all(2 ** 19 <= a < 2 ** 20 and 2 ** 19 <= m < 2 ** 20 for a, m in first)


@pytest.mark.parametrize('trials, bits', [(0, 32), (10, 1), (10, 60)])
def test_bench_rejects_bad_sizes(trials, bits):
    with pytest.raises(InvalidInputError):
        InverseBenchmark().run(trials, bits, 1)


def test_bench_agrees_on_random_pairs():
    report = InverseBenchmark().run(2000, 32, 2026)
    assert report.ok
    assert report.completed == 2000
    assert report.counterexample is None


def test_bench_workers_cover_every_trial():
    report = InverseBenchmark().run(401, 24, 9, workers=4)
    assert report.ok
    assert report.completed == 401


def test_bench_reports_counterexample():
    def off_by_one(a, m):
        return (mod_inverse(a, m) + 1) % m

    report = InverseBenchmark(primary=off_by_one).run(50, 16, 3)
    assert not report.ok
    assert report.mismatches == 1
    assert report.completed == 0
    assert set(report.counterexample) == {'a', 'm', 'kuttaka', 'euclid'}


def test_bench_command_fixed_pair(runner):
    result = runner.invoke(cli, ['bench', '--trials', '1', '--a', '137', '--m', '60'])
    assert result.exit_code == EXIT_OK
    assert 'mismatches=0' in result.stdout
    assert 'inverse of 137 mod 60 = 53' in result.stdout


def test_bench_command_zero_trials(runner):
    result = runner.invoke(cli, ['bench', '--trials', '0'])
    assert result.exit_code == EXIT_USAGE


def test_bench_command_needs_both_fixed_values(runner):
    result = runner.invoke(cli, ['bench', '--trials', '3', '-a', '137'])
    assert result.exit_code == EXIT_USAGE


def test_bench_json_is_deterministic_apart_from_timing(runner):
    args = ['bench', '--trials', '300', '--bits', '32', '--seed', '5', '--json']
    first = json.loads(runner.invoke(cli, args).stdout)['result']
    second = json.loads(runner.invoke(cli, args).stdout)['result']
    for timing in ('kuttaka_median_us', 'euclid_median_us'):
        first.pop(timing)
        second.pop(timing)
    assert first == second
    assert first['mismatches'] == 0


def test_bench_command_mismatch_exits_with_check_failure(runner, monkeypatch):
    def broken(a, m):
        return 0

    monkeypatch.setattr('kuttaka_kit.cli.InverseBenchmark',
                        lambda: InverseBenchmark(primary=broken))
    result = runner.invoke(cli, ['bench', '--trials', '5', '--bits', '16'])
    assert result.exit_code == EXIT_CHECK_FAILED
    assert 'mismatch' in result.stderr
