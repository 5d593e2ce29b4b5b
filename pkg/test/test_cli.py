#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests de la CLI: salidas de texto, esquema JSON, códigos de salida,
cotas y trazas de referencia en data/golden
"""

import json
import os
import sys

import pytest

# Agregar el directorio del proyecto al path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from cli import EXIT_OK, EXIT_USAGE, RunConfig, main, parse_factors, parse_legs
from config import GOLDEN_DIR
from errors import FactorisationError
from perm_core import Transposition

GOLDEN_TRACES = {
    'gamma_121.txt': ['--map', 'gamma', '--legs', '1,2,1', '--target', '(1 2)(3)'],
    'gamma_212.txt': ['--map', 'gamma', '--legs', '2,1,2', '--target', '(1 2)(3)'],
    'gamma_112.txt': ['--map', 'gamma', '--legs', '1,1,2', '--target', '(1)(2 3)'],
    'gamma_inverse_123.txt': ['--map', 'gamma-inverse', '--sigma', '(1 2 3)', '--factors', '(1 3)'],
    'lambda_2_12_13.txt': ['--map', 'lambda', '--factors', '(1 2),(1 3)', '--index', '2'],
    'natural_213.txt': ['--map', 'natural', '--factors', '(1 2),(2 3)', '--order', '2<1<3'],
    'theta_13.txt': [
        '--map', 'theta', '--sigma', '(1 2 3)', '--factors', '(1 3)',
        '--target', '(1 2)(3)', '--conjugator', '(1 3)',
    ],
}


@pytest.fixture(autouse=True)
def default_bounds(monkeypatch):
    """Cada test corre con las cotas por defecto"""
    for name in ('LIST_N_MAX', 'LIST_G_MAX', 'DP_N_MAX', 'RELATION_N_MAX', 'FACTOR_THREADS'):
        monkeypatch.delenv(name, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    """Test suite for input helpers"""

    def test_parse_factors(self):
        assert parse_factors("(1 2),(1 3)") == (Transposition(1, 2), Transposition(1, 3))
        with pytest.raises(FactorisationError):
            parse_factors("1 2")

    def test_parse_legs(self):
        assert parse_legs("1,2,1") == (1, 2, 1)
        assert parse_legs("(1, 2, 1)") == (1, 2, 1)
        with pytest.raises(FactorisationError):
            parse_legs("1,x")

    def test_config_drops_unset_fields(self):
        config = RunConfig(command='count', family='star', target='(1 2)(3)')
        data = config.to_dict()
        assert data['family'] == 'star'
        assert 'root' not in data
        assert 'workers' not in data


class TestCount:
    """Test suite for the count command"""

    def test_star_example(self, capsys):
        code, out, _ = run(capsys, 'count', '--family', 'star', '--target', '(1 2)(3)', '--genus', '0')
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "family=star target=(1 2)(3) genus=0 root=3 count=2 method=dp"
        assert lines[1].endswith("count=2 method=formula")

    def test_monotone_double_full_cycle(self, capsys):
        code, out, _ = run(capsys, 'count', '--family', 'md', '--target', '(1 2 3)')
        assert code == EXIT_OK
        assert all("count=1" in line for line in out.strip().splitlines())

    def test_partition_genus_one(self, capsys):
        code, out, _ = run(capsys, 'count', '--family', 'md', '--partition', '[3]', '--genus', '1')
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert [line.split()[-2] for line in lines] == ["count=5", "count=5"]

    def test_monotone_formula_and_listing(self, capsys):
        code, out, _ = run(capsys, 'count', '--family', 'monotone', '--target', '(1 3 2)', '--method', 'listing')
        assert code == EXIT_OK
        assert out.strip() == "family=monotone target=(1 3 2) genus=0 order=1<2<3 count=2 method=listing"
        code, out, _ = run(capsys, 'count', '--family', 'monotone', '--target', '(1 3 2)')
        assert code == EXIT_OK
        assert "count=2 method=formula" in out

    def test_double_hurwitz_family(self, capsys):
        code, out, _ = run(capsys, 'count', '--family', 'b', '--partition', '[2,1]')
        assert code == EXIT_OK
        assert out.strip().endswith("count=2 method=dp")

    def test_double_hurwitz_family_by_listing(self, capsys):
        code, out, _ = run(capsys, 'count', '--family', 'b', '--partition', '[2,1]', '--method', 'listing')
        assert code == EXIT_OK
        assert out.strip().startswith("family=b ")
        assert out.strip().endswith("count=2 method=listing")

    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, 'count', '--target', '(1 2)(3)', '--format', 'json')
        assert code == EXIT_OK
        payload = json.loads(out)
        assert set(payload) == {'command', 'config', 'results', 'pass'}
        assert payload['command'] == 'count'
        assert payload['pass'] is True
        assert payload['results'][0]['count'] == 2
        assert payload['config']['target'] == '(1 2)(3)'

    def test_json_config_independent_of_workers(self, capsys):
        outputs = []
        for workers in ('1', '2'):
            code, out, _ = run(capsys, 'count', '--target', '(1 2)(3)', '--format', 'json', '--workers', workers)
            assert code == EXIT_OK
            outputs.append(out)
        assert outputs[0] == outputs[1]
        assert 'workers' not in json.loads(outputs[0])['config']

    def test_missing_target(self, capsys):
        code, _, err = run(capsys, 'count', '--family', 'star')
        assert code == EXIT_USAGE
        assert err.startswith("ERROR:")


class TestEnumerate:
    """Test suite for the enumerate command"""

    def test_monotone_double_lines(self, capsys):
        code, out, _ = run(capsys, 'enumerate', '--family', 'md', '--target', '(1 2)(3)')
        assert code == EXIT_OK
        assert out.strip().splitlines() == ["((1 2 3),(1 3))", "((1 3 2),(2 3))"]

    def test_star_lines(self, capsys):
        code, out, _ = run(capsys, 'enumerate', '--family', 'star', '--target', '(1 2)(3)')
        assert code == EXIT_OK
        assert out.strip().splitlines()[0] == "((1 3),(2 3),(1 3))"

    def test_listing_bound(self, capsys):
        code, _, err = run(capsys, 'enumerate', '--family', 'star', '--target', '(1 2)', '--n', '6')
        assert code == EXIT_USAGE
        assert "bound exceeded: listing n" in err


class TestVerify:
    """Test suite for the verify command"""

    def test_passing_suite(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'transitive-power-expression', '--n', '3', '--kmax', '1')
        assert code == EXIT_OK
        assert out.strip().splitlines()[-1] == "suite transitive-power-expression: PASS"

    def test_relation_bound(self, capsys):
        code, _, err = run(capsys, 'verify', '--suite', 'double-hurwitz-relation', '--n', '4')
        assert code == EXIT_USAGE
        assert "bound exceeded" in err
        assert "relation n" in err

    def test_unknown_suite(self, capsys):
        code, _, _ = run(capsys, 'verify', '--suite', 'no-such-suite')
        assert code == EXIT_USAGE

    def test_anchor_alias_bound(self, capsys):
        code, _, err = run(capsys, 'verify', '--suite', 'relation-6.4', '--n', '4')
        assert code == EXIT_USAGE
        assert "relation n <= 3" in err

    def test_anchor_alias_runs(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'corollary-1.6', '--n', '3', '--kmax', '1')
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[-1] == "suite corollary-1.6: PASS"
        assert all(line.startswith("PASS ") and "[corollary-1.6]" in line for line in lines[:-1])

    def test_relation_alias_within_bound(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'relation-6.4', '--n', '2', '--gmax', '1')
        assert code == EXIT_OK
        assert out.strip().splitlines()[-1] == "suite relation-6.4: PASS"

    def test_json_report_carries_anchor(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'star-monotone-double', '--n', '2', '--gmax', '0', '--format', 'json')
        assert code == EXIT_OK
        report = json.loads(out)['results'][0]
        assert report['suite'] == 'star-monotone-double'
        assert {c['anchor'] for c in report['checks']} == {'theorem-1.4'}


class TestTrace:
    """Test suite for the trace command"""

    @pytest.mark.parametrize("name", sorted(GOLDEN_TRACES))
    def test_golden(self, capsys, name):
        code, out, _ = run(capsys, 'trace', *GOLDEN_TRACES[name])
        assert code == EXIT_OK
        with open(os.path.join(GOLDEN_DIR, name), encoding='utf-8') as f:
            assert out == f.read()

    def test_every_golden_file_is_covered(self):
        files = {f for f in os.listdir(GOLDEN_DIR) if f.endswith('.txt')}
        assert files == set(GOLDEN_TRACES)

    def test_reroot(self, capsys):
        code, out, _ = run(capsys, 'trace', '--map', 'reroot', '--legs', '1,2,1',
                           '--target', '(1 2)(3)', '--to-root', '1')
        assert code == EXIT_OK
        assert out.strip().splitlines()[-1] == "result=((2 1),(3 1),(3 1))"

    def test_invalid_star_input(self, capsys):
        code, _, err = run(capsys, 'trace', '--map', 'gamma', '--legs', '1,1', '--target', '(2 3)')
        assert code == EXIT_USAGE
        assert "(2 3) never appears" in err

    def test_json_steps(self, capsys):
        code, out, _ = run(capsys, 'trace', '--format', 'json', *GOLDEN_TRACES['gamma_112.txt'])
        assert code == EXIT_OK
        payload = json.loads(out)
        assert payload['results'][0]['steps'] == ["pos=2 move=LHM before=(1 3)(2 3) after=(2 3)(1 2)"]


class TestAlgebra:
    """Test suite for the algebra command"""

    def test_transitive_power(self, capsys):
        code, out, _ = run(capsys, 'algebra', '--n', '4', '--expr', 'T(J[4]^4)')
        assert code == EXIT_OK
        assert out.strip() == "3*K[3,1] + 4*K[2,2]"

    def test_not_central(self, capsys):
        code, out, _ = run(capsys, 'algebra', '--n', '4', '--expr', 'J[4]^4')
        assert code == EXIT_OK
        assert out.startswith("NotCentral witness=")

    def test_syntax_error(self, capsys):
        code, _, err = run(capsys, 'algebra', '--n', '4', '--expr', 'T(J[4]')
        assert code == EXIT_USAGE
        assert "position" in err


class TestTableAndExperiments:
    """Test suite for table and experiment commands"""

    def test_csv_header(self, capsys):
        code, out, _ = run(capsys, 'table', '--nmax', '3', '--gmax', '1', '--format', 'csv')
        assert code == EXIT_OK
        lines = out.strip().splitlines()
        assert lines[0] == "partition,genus,count_star,md_count,sinh_formula,closed_form,all_agree"
        assert len(lines) == 1 + 12

    def test_markdown(self, capsys):
        code, out, _ = run(capsys, 'table', '--nmax', '2', '--gmax', '0', '--format', 'markdown')
        assert code == EXIT_OK
        assert out.startswith("| partition | genus |")

    def test_span_dimension(self, capsys):
        code, out, _ = run(capsys, 'experiment', '--name', 'span-dimension', '--n', '3', '--max-degree', '3')
        assert code == EXIT_OK
        assert "centre_dimension=3" in out

    def test_basis_agreement(self, capsys):
        code, _, _ = run(capsys, 'experiment', '--name', 'basis-agreement', '--n', '3', '--max-degree', '3')
        assert code == EXIT_OK


class TestUsage:
    """Test suite for usage errors"""

    def test_no_command(self, capsys):
        code, _, _ = run(capsys)
        assert code == EXIT_USAGE

    def test_invalid_environment(self, capsys, monkeypatch):
        monkeypatch.setenv('DP_N_MAX', 'abc')
        code, _, err = run(capsys, 'count', '--target', '(1 2)(3)')
        assert code == EXIT_USAGE
        assert "DP_N_MAX" in err
