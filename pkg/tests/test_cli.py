import json

import pytest
from click.testing import CliRunner

from ltaction import RunConfig, golden_names, load_golden, run_suite
from ltaction.cli import (main, ERRORS, EXIT_CODES, EXIT_SYNTAX, EXIT_PARITY_OR_UNIT, EXIT_PRECISION, EXIT_CEILING,
                          EXIT_ORACLE, EXIT_USAGE)
from ltaction.output import format_coefficient, read_json
from stabilizer import GroupElem, ResidueDegreeParityError, act_u1
from witt import WittElem, InvalidParamsError, make_params, parse_elem


def _invoke(*args):
    return CliRunner(mix_stderr=False).invoke(main, list(args))


def test_act_published_series():
    result = _invoke('act', '--p', '2', '--f', '1', '--alpha0', '1+2*z', '--alpha1', '0', '--w', '73', '--m', '64')
    assert result.exit_code == 0, result.stderr
    rows = dict(line.split() for line in result.stdout.splitlines() if not line.startswith('#'))
    assert len(rows) == 24
    assert rows['70'] == '57330724580351'
    assert rows['1'] == '-1'


def test_act_identity():
    result = _invoke('act', '--target', 'u1', '--p', '5', '--f', '1', '--alpha0', '1', '--alpha1', '0')
    assert result.exit_code == 0
    rows = [line.split() for line in result.stdout.splitlines() if not line.startswith('#')]
    assert rows == [['1', '1']]


def test_act_on_u_json():
    """the constant term of alpha.u / u is alpha"""
    result = _invoke('act', '--target', 'u', '--p', '3', '--f', '1', '--alpha', 'z^2', '--w', '12', '--m', '10',
                     '--format', 'json')
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    assert document['target'] == 'u' and document['precision'] == {'p_exp': 10, 'u1_exp': 12}
    first = document['series'][0]
    params = make_params(3, 1, 10)
    assert first['n'] == 0 and first['denom_exp'] == 0
    assert WittElem(first['coeff'], params) == parse_elem('z^2', params)
    assert all(record['n'] % 4 == 0 for record in document['series'])


def test_json_round_trip():
    result = _invoke('act', '--p', '3', '--alpha0', '1+z', '--alpha1', '2*z', '--w', '15', '--m', '12', '--method',
                     'functional', '--format', 'json')
    assert result.exit_code == 0
    g, series = read_json(result.stdout)
    assert json.loads(result.stdout)['method'] == 'functional'
    assert series == act_u1(g, 15).as_u1_series()


def test_witt_alternating_method():
    result = _invoke('act', '--p', '3', '--alpha', '1+3*z^2', '--w', '33', '--m', '40', '--method', 'witt-alt')
    assert result.exit_code == 0
    degrees = [int(line.split()[0]) for line in result.stdout.splitlines() if not line.startswith('#')]
    assert degrees and all(n % 4 == 1 for n in degrees)


def test_act_p3_series_from_expression():
    """1+3*z^2 is read beyond p^M, its action modulo 3^40 is the published one"""
    result = _invoke('act', '--p', '3', '--alpha', '1+3*z^2', '--m', '40', '--w', '33', '--format', 'json')
    assert result.exit_code == 0, result.stderr
    g, series = read_json(result.stdout)
    golden = load_golden('paper_p3')
    assert g.alpha0 == parse_elem('1+3*z^2', golden.params)
    for n in range(golden.u1_exp):
        assert series.coefficient(n) == golden.expected(n)


def test_act_trees_beyond_crosscheck_weight():
    """the default method keeps going past the enumerated weights and agrees with the functional equation"""
    args = ('act', '--p', '2', '--alpha0', '1', '--alpha1', '1', '--w', '16', '--m', '8')
    trees, functional = _invoke(*args), _invoke(*args, '--method', 'functional')
    assert trees.exit_code == 0, trees.stderr
    assert functional.exit_code == 0, functional.stderr

    def rows(output):
        return [line for line in output.splitlines() if not line.startswith('#')]
    assert rows(trees.stdout) and rows(trees.stdout) == rows(functional.stdout)


@pytest.mark.parametrize('args, code', [
    (('--p', '3', '--alpha0', '1+'), EXIT_SYNTAX),
    (('--p', '2', '--f', '2', '--target', 'u'), EXIT_PARITY_OR_UNIT),
    (('--p', '3', '--alpha0', '3'), EXIT_PARITY_OR_UNIT),
    (('--p', '2', '--alpha0', '1+z', '--alpha1', '1', '--budget', '0'), EXIT_PRECISION),
    (('--p', '4',), EXIT_USAGE),
    (('--p', '3', '--method', 'nope'), EXIT_USAGE),
    (('--p', '3', '--alpha0', '1+z', '--alpha1', '1', '--method', 'witt-alt'), EXIT_USAGE),
])
def test_act_exit_codes(args, code):
    assert _invoke('act', *args).exit_code == code


def test_trees_census():
    assert '3 trees of weight 3 for q=2' in _invoke('trees', '--q', '2', '--weight', '3').stdout
    assert '3 trees of weight 4 for q=3' in _invoke('trees', '--q', '3', '--weight', '4').stdout
    result = _invoke('trees', '--q', '25', '--weight', '1', '--alternating', '--format', 'json')
    assert json.loads(result.stdout)['count'] == 1


def test_trees_with_index():
    """the single weight-1 tree has index sigma(alpha0) / alpha0"""
    result = _invoke('trees', '--q', '2', '--weight', '1', '--alpha0', '1+2*z', '--m', '16', '--format', 'json')
    assert result.exit_code == 0
    document = json.loads(result.stdout)
    params = make_params(2, 1, 16)
    a = parse_elem('1+2*z', params)
    record = document['summed_index']
    assert record['denom_exp'] == 0
    assert WittElem(record['coeff'], params) == a.frobenius() * a.inv()
    assert document['trees'][0]['index'] == record


def test_trees_ceiling(monkeypatch):
    monkeypatch.setenv('LTACTION_TREE_CEILING', '2')
    assert _invoke('trees', '--q', '2', '--weight', '4').exit_code == EXIT_CEILING
    assert _invoke('trees', '--q', '6', '--weight', '2').exit_code == EXIT_USAGE


def test_verify_suite(tmp_path):
    result = _invoke('verify', '--suite', 'trees-census', '--seed', '3', '--threads', '2', '--log',
                     str(tmp_path / 'run'))
    assert result.exit_code == 0, result.stdout
    report = json.loads(result.stdout)
    assert report['failed'] == 0 and report['passed'] == 4
    assert '"passed": 4' in (tmp_path / 'run.txt').read_text()
    assert (tmp_path / 'run.err.txt').exists()


def test_run_suite_paper_p3():
    results = run_suite('paper-p3', seed=1, threads=2)
    assert [r.name for r in results] == ['series', 'alternating trees']
    assert all(r.passed for r in results)
    assert results[0].detail == '8/8 coefficients matched'


def test_run_suite_unknown():
    with pytest.raises(KeyError):
        run_suite('nope')


def test_golden_files():
    assert golden_names() == ['paper_p2', 'paper_p3']
    golden = load_golden('paper_p2')
    assert golden.params.N == 64 and golden.u1_exp == 73
    assert len(golden.coefficients) == 24
    assert golden.expected(70).balanced_integer() == 57330724580351
    assert golden.expected(2) == 0
    assert len(load_golden('paper_p3').coefficients) == 8


def test_format_coefficient():
    params = make_params(2, 1, 8)
    assert format_coefficient(WittElem.from_int(255, params)) == '-1'
    assert format_coefficient(WittElem.from_int(128, params)) == '128'
    assert format_coefficient(WittElem.generator(params)) == '1*z'


def test_run_config_validation():
    with pytest.raises(InvalidParamsError):
        RunConfig(3, w=0).validate()
    with pytest.raises(InvalidParamsError):
        RunConfig(3, alpha='z', alpha0='1').validate()
    with pytest.raises(ResidueDegreeParityError):
        RunConfig(2, 2, method='witt-alt').validate()
    config = RunConfig(3, alpha0='1+z', alpha1='z').validate()
    assert isinstance(config.group_element(), GroupElem)
    assert RunConfig(3, alpha='2').group_element().is_witt()
    config = RunConfig(3, m=40, w=33, alpha='1+3*z^2')
    assert config.group_element().params.N == 73
    assert config.group_element().alpha0 == load_golden('paper_p3').alpha0
    assert RunConfig(3, m=40, w=33, budget=5, alpha='1').group_element().params.N == 45


def test_exit_codes_are_flat():
    assert ERRORS and all(issubclass(error, Exception) for error in ERRORS)
    assert {code for _, code in EXIT_CODES} == {EXIT_SYNTAX, EXIT_PARITY_OR_UNIT, EXIT_PRECISION, EXIT_CEILING,
                                               EXIT_ORACLE, EXIT_USAGE}
