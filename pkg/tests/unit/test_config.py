"""Test configuration module."""

from fractions import Fraction

import pytest
from pydantic import ValidationError

import curve_zeta.cli.corpus as corpus_module
from curve_zeta.cli.corpus import CorpusConfig
from curve_zeta.config.settings import Settings, parse_coefficients


def test_settings_default_values():
    """Test that settings have correct default values."""
    settings = Settings()

    assert settings.log_level == "WARNING"
    assert settings.debug is False
    assert settings.corpus_seed == 1
    assert settings.corpus_count == 100
    assert settings.corpus_max_vertices == 6
    assert settings.corpus_max_coordinate == 30
    assert settings.corpus_workers == 1
    assert Fraction(1, 2) in settings.coefficient_choices


def test_settings_env_override(monkeypatch):
    """Test that environment variables override default values."""
    monkeypatch.setenv("CURVE_ZETA_LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("CURVE_ZETA_CORPUS_SEED", "7")
    monkeypatch.setenv("CURVE_ZETA_CORPUS_COEFFICIENTS", "1, -1, 5/3")

    settings = Settings()

    assert settings.log_level == "DEBUG"
    assert settings.corpus_seed == 7
    assert settings.coefficient_choices == [Fraction(1), Fraction(-1), Fraction(5, 3)]


def test_settings_reject_zero_coefficient(monkeypatch):
    monkeypatch.setenv("CURVE_ZETA_CORPUS_COEFFICIENTS", "1,0")
    with pytest.raises(ValidationError):
        Settings()


def test_settings_reject_nonpositive_count(monkeypatch):
    monkeypatch.setenv("CURVE_ZETA_CORPUS_COUNT", "0")
    with pytest.raises(ValidationError):
        Settings()


def test_parse_coefficients_skips_blanks():
    assert parse_coefficients("2, ,-1/2,") == [Fraction(2), Fraction(-1, 2)]


class TestCorpusConfig:
    def test_from_settings_with_overrides(self, monkeypatch):
        monkeypatch.setenv("CURVE_ZETA_CORPUS_MAX_VERTICES", "3")
        config = CorpusConfig.from_settings(Settings(), seed=11, workers=None)

        assert config.max_vertices == 3
        assert config.seed == 11
        assert config.workers == 1

    def test_count_must_be_positive(self):
        with pytest.raises(ValueError):
            CorpusConfig(count=0)

    def test_coefficients_must_be_nonzero(self):
        with pytest.raises(ValueError):
            CorpusConfig(coefficients=[Fraction(0)])

    def test_defaults_follow_settings(self, monkeypatch):
        monkeypatch.setenv("CURVE_ZETA_CORPUS_SEED", "42")
        monkeypatch.setenv("CURVE_ZETA_CORPUS_MAX_COORDINATE", "12")
        monkeypatch.setenv("CURVE_ZETA_CORPUS_COEFFICIENTS", "2,-5")
        monkeypatch.setattr(corpus_module, "default_settings", Settings())

        config = CorpusConfig(count=3)

        assert config.seed == 42
        assert config.count == 3
        assert config.max_coordinate == 12
        assert config.coefficients == [Fraction(2), Fraction(-5)]
