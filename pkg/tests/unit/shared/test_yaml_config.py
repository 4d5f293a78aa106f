"""Unit tests for the YAML experiment tree."""
import pytest

from src.domain.exceptions import ConfigurationError
from src.infrastructure.config import default_experiment_tree
from src.shared.config import YAMLConfig


@pytest.fixture
def config_file(tmp_path):
    path = tmp_path / "experiment.yaml"
    path.write_text(
        "grid:\n  N: 32\nstudy:\n  name: gaffney\n  p: [1.0, 2.0]\n",
        encoding="utf-8",
    )
    return path


@pytest.mark.unit
class TestYAMLConfig:

    def test_file_is_merged_over_defaults(self, config_file):
        config = YAMLConfig(str(config_file), defaults=default_experiment_tree())

        assert config.get("grid.N") == 32
        assert config.get("grid.n") == 1
        assert config.get("study.name") == "gaffney"
        assert config.get("time_grid.levels") == default_experiment_tree()["time_grid"]["levels"]

    def test_missing_key_returns_default(self):
        config = YAMLConfig(defaults={"grid": {"N": 8}})

        assert config.get("grid.spacing", "x") == "x"
        assert config.get("output.directory") is None

    def test_overrides_parse_yaml_values(self, config_file):
        config = YAMLConfig(str(config_file), defaults=default_experiment_tree())

        config.apply_overrides(["time_grid.levels=12", "study.p=[0.5, 1]", "study.oracle=true", "output.directory=out"])

        assert config.get("time_grid.levels") == 12
        assert config.get("study.p") == [0.5, 1]
        assert config.get("study.oracle") is True
        assert config.get("output.directory") == "out"

    def test_override_creates_nested_keys(self):
        config = YAMLConfig()

        config.apply_overrides(["a.b.c=1"])

        assert config.get_all() == {"a": {"b": {"c": 1}}}

    @pytest.mark.parametrize("item", ["levels", "=3"])
    def test_malformed_override(self, item):
        with pytest.raises(ConfigurationError):
            YAMLConfig().apply_overrides([item])

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigurationError) as exc_info:
            YAMLConfig(str(tmp_path / "absent.yaml"))

        assert "not found" in exc_info.value.message

    def test_top_level_must_be_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")

        with pytest.raises(ConfigurationError):
            YAMLConfig(str(path))

    def test_save_writes_effective_tree(self, config_file, tmp_path):
        config = YAMLConfig(str(config_file), defaults=default_experiment_tree())
        config.set("grid.N", 16)
        target = tmp_path / "out" / "effective.yaml"

        config.save(str(target))

        assert YAMLConfig(str(target)).get("grid.N") == 16

    def test_get_all_is_a_copy(self):
        config = YAMLConfig(defaults={"grid": {"N": 8}})

        snapshot = config.get_all()
        snapshot["grid"]["N"] = 99

        assert config.get("grid.N") == 8
