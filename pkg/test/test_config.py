#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Tests de configuración: variables de entorno, logger y parallel_map
"""

import os
import sys

import pytest

# Agregar el directorio del proyecto al path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import NUMERIC_VARS, get_logger, get_setting, parallel_map, validate_environment_variables


def _square(x):
    return x * x


class TestSettings:
    """Test suite for environment settings"""

    def setup_method(self):
        self.saved = {name: os.environ.pop(name, None) for name in NUMERIC_VARS}

    def teardown_method(self):
        for name, value in self.saved.items():
            os.environ.pop(name, None)
            if value is not None:
                os.environ[name] = value

    def test_defaults(self):
        assert get_setting('LIST_N_MAX') == 5
        assert get_setting('LIST_G_MAX') == 2
        assert get_setting('DP_N_MAX') == 6
        assert get_setting('RELATION_N_MAX') == 3
        assert get_setting('FACTOR_THREADS') == 1

    def test_override(self, monkeypatch):
        monkeypatch.setenv('DP_N_MAX', '7')
        assert get_setting('DP_N_MAX') == 7

    def test_invalid_value_falls_back_for_reads(self, monkeypatch):
        monkeypatch.setenv('DP_N_MAX', 'abc')
        assert get_setting('DP_N_MAX') == 6

    def test_validation_ok(self):
        assert validate_environment_variables() is True

    def test_validation_rejects_non_integer(self, monkeypatch):
        monkeypatch.setenv('DP_N_MAX', 'abc')
        with pytest.raises(EnvironmentError) as exc:
            validate_environment_variables()
        assert 'DP_N_MAX' in str(exc.value)

    def test_validation_rejects_negative(self, monkeypatch):
        monkeypatch.setenv('LIST_G_MAX', '-1')
        with pytest.raises(EnvironmentError):
            validate_environment_variables()


class TestHelpers:
    """Test suite for logging and parallel helpers"""

    def test_logger_namespace(self):
        assert get_logger('x').name == 'factor.x'

    def test_parallel_map_keeps_order(self):
        items = list(range(10))
        assert parallel_map(_square, items, workers=1) == [x * x for x in items]
        assert parallel_map(_square, items, workers=2) == [x * x for x in items]

    def test_parallel_map_empty(self):
        assert parallel_map(_square, [], workers=4) == []
