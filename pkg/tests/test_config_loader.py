from __future__ import annotations

import json
from pathlib import Path

import pytest

from adorn.config import (
    Budgets,
    ConfigError,
    FileConfig,
    ProbeParams,
    UnsupportedConfigFormatError,
    load_budgets,
    load_config,
)


# -------------------------
# Helpers
# -------------------------


def write_text(path: Path, text: str) -> Path:
    path.write_text(text, encoding="utf-8")
    return path


def write_json(path: Path, obj: object) -> Path:
    path.write_text(json.dumps(obj), encoding="utf-8")
    return path


# -------------------------
# Basic file/path errors
# -------------------------


def test_missing_file_raises_config_error(tmp_path: Path) -> None:
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.yaml")


def test_path_is_dir_raises_config_error(tmp_path: Path) -> None:
    d = tmp_path / "dir"
    d.mkdir()
    with pytest.raises(ConfigError):
        load_config(d)


def test_unsupported_extension_raises_unsupported_format(tmp_path: Path) -> None:
    p = write_text(tmp_path / "budgets.txt", "budgets: {}")
    with pytest.raises(UnsupportedConfigFormatError):
        load_config(p)


# -------------------------
# Parse errors are wrapped
# -------------------------


@pytest.mark.parametrize(
    "name, content",
    [("budgets.yaml", "budgets: [\n"), ("budgets.toml", "budgets = {"), ("budgets.json", '{"budgets": ')],
)
def test_invalid_files_are_wrapped_as_config_error(tmp_path: Path, name: str, content: str) -> None:
    p = write_text(tmp_path / name, content)
    with pytest.raises(ConfigError):
        load_config(p)


@pytest.mark.parametrize("ext, content", [(".yaml", "[]\n"), (".json", "[]"), (".json", "null")])
def test_top_level_not_mapping_raises(tmp_path: Path, ext: str, content: str) -> None:
    p = write_text(tmp_path / f"budgets{ext}", content)
    with pytest.raises(ConfigError):
        load_config(p)


def test_empty_yaml_means_defaults(tmp_path: Path) -> None:
    p = write_text(tmp_path / "budgets.yaml", "")
    assert load_config(p) == FileConfig()


# -------------------------
# Section validation
# -------------------------


def test_unknown_top_level_field_raises(tmp_path: Path) -> None:
    p = write_text(tmp_path / "budgets.yaml", "tasks: {}\n")
    with pytest.raises(ConfigError):
        load_config(p)


@pytest.mark.parametrize(
    "content",
    [
        "budgets: []\n",
        "budgets:\n  max_depht: 3\n",
        "budgets:\n  max_depth: -1\n",
        "budgets:\n  max_cosets: 0\n",
        "budgets:\n  max_order: 12.5\n",
        "budgets:\n  max_depth: yes\n",
        "probe:\n  count: 0\n",
        "probe:\n  workers: two\n",
    ],
)
def test_bad_sections_raise(tmp_path: Path, content: str) -> None:
    p = write_text(tmp_path / "budgets.yaml", content)
    with pytest.raises(ConfigError):
        load_config(p)


def test_zero_depth_is_allowed(tmp_path: Path) -> None:
    p = write_text(tmp_path / "budgets.yaml", "budgets:\n  max_depth: 0\n")
    assert load_budgets(p).max_depth == 0


# -------------------------
# Happy paths (all formats)
# -------------------------


def test_valid_yaml_loads(tmp_path: Path) -> None:
    p = write_text(
        tmp_path / "budgets.yaml",
        "budgets:\n  max_depth: 4\n  max_cosets: 5000\nprobe:\n  count: 20\n  seed: 7\n",
    )
    cfg = load_config(p)
    assert cfg.budgets == Budgets(max_depth=4, max_cosets=5000)
    assert cfg.probe == ProbeParams(count=20, seed=7)


def test_valid_json_loads(tmp_path: Path) -> None:
    p = write_json(tmp_path / "budgets.json", {"budgets": {"max_order": 5000}})
    assert load_budgets(p) == Budgets(max_order=5000)


def test_valid_toml_loads(tmp_path: Path) -> None:
    p = write_text(tmp_path / "budgets.toml", "[budgets]\nmax_depth = 2\n\n[probe]\nworkers = 3\n")
    cfg = load_config(p)
    assert cfg.budgets.max_depth == 2
    assert cfg.probe.workers == 3


def test_example_file_in_repo_loads() -> None:
    example = Path(__file__).resolve().parent.parent / "budgets-example.yaml"
    cfg = load_config(example)
    assert isinstance(cfg.budgets, Budgets)


# -------------------------
# Merging command line overrides
# -------------------------


def test_merge_replaces_only_given_fields() -> None:
    base = Budgets(max_depth=3)
    merged = base.merge(max_depth=None, max_cosets=10)
    assert merged == Budgets(max_depth=3, max_cosets=10)
    assert base.merge() == base


def test_merge_validates() -> None:
    with pytest.raises(ConfigError):
        ProbeParams().merge(count=-5)
