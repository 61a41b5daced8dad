"""Tests for configuration sanity checks."""
import pytest

from lf_refine import config


def test_defaults_are_valid():
    config.validate_config()
    assert config.DEFAULT_SUBST_MODE in config.SUBST_MODES
    assert config.RESULTS_DIR.parent == config.DATA_DIR


def test_invalid_subst_mode_rejected(monkeypatch):
    monkeypatch.setattr(config, "DEFAULT_SUBST_MODE", "lazy")
    with pytest.raises(ValueError, match="DEFAULT_SUBST_MODE"):
        config.validate_config()


def test_non_positive_depth_rejected(monkeypatch):
    monkeypatch.setattr(config, "MAX_DEPTH", 0)
    with pytest.raises(ValueError, match="MAX_DEPTH"):
        config.validate_config()


def test_meta_letters_distinct(monkeypatch):
    monkeypatch.setattr(config, "META_LETTERS", {"term": "M", "type": "M"})
    with pytest.raises(ValueError, match="META_LETTERS"):
        config.validate_config()


def test_emitted_vocabulary_disjoint():
    assert not set(config.FUNCTORS) & set(config.PREDICATES)
