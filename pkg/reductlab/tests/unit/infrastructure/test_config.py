"""Tests for hierarchical configuration"""

import pytest

from reductlab.infrastructure.config import ConfigManager, load_config


class TestConfigManager:
    """Base file, environment overrides and interpolation"""

    def test_environment_comes_from_variable(self):
        assert ConfigManager().environment == "test"

    def test_test_environment_overrides_budget(self):
        config = load_config(environment="test")
        assert config.get("engine.budget") == 200000
        assert config.get("engine.method") == "auto"
        assert config.get("logging.level") == "DEBUG"

    def test_base_values_survive_missing_environment(self):
        config = load_config(environment="production")
        assert config.get("engine.budget") == 1000000
        assert config.get("sampler") == {"samples": 200, "seed": 7, "max_objects": 3, "max_attributes": 3}

    def test_unset_placeholder_keeps_base_value(self):
        config = load_config(environment="development")
        assert config.get("logging.level") == "WARNING"
        assert config.get("logging.format") == "text"

    def test_placeholder_is_interpolated(self, monkeypatch):
        monkeypatch.setenv("REDUCTLAB_LOG_LEVEL", "INFO")
        assert load_config(environment="development").get("logging.level") == "INFO"

    def test_overrides_are_deep_merged(self):
        config = load_config({"engine": {"budget": 5}}, environment="test")
        assert config.get("engine.budget") == 5
        assert config.get("engine.strategy") == "generators"

    def test_overrides_leave_files_untouched(self):
        load_config({"engine": {"budget": 5}}, environment="test")
        assert load_config(environment="test").get("engine.budget") == 200000

    def test_dot_notation(self):
        manager = ConfigManager(environment="test").load()
        assert manager.get("sampler.seed") == 7
        assert manager.get("sampler.missing", 3) == 3
        assert manager.get("engine.budget.deeper") is None

    @pytest.mark.parametrize("content", ["engine: [unclosed", ""])
    def test_unreadable_base_gives_empty_config(self, tmp_path, content):
        (tmp_path / "base.yaml").write_text(content, encoding="utf-8")
        assert ConfigManager(tmp_path, environment="test").load().config == {}
