from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from enum import Enum

from adorn.errors import AdornError


class ConfigError(AdornError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


class UnsupportedConfigFormatError(ConfigError):
    def __init__(self, *args: object) -> None:
        super().__init__(*args)


def _require_positive(owner: str, name: str, value: object, allow_zero: bool = False) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"{owner}.{name} must be an integer, got {type(value).__name__}")
    if value < 0 or (value == 0 and not allow_zero):
        raise ConfigError(f"{owner}.{name} must be positive, got {value}")


@dataclass(frozen=True)
class Budgets:
    max_depth: int = 8
    max_cosets: int = 100_000
    max_order: int = 1_000_000
    tietze_passes: int = 16
    simplicity_order: int = 10_000

    def __post_init__(self) -> None:
        for f in fields(self):
            zero_ok = f.name in ("max_depth", "tietze_passes")
            _require_positive("budgets", f.name, getattr(self, f.name), allow_zero=zero_ok)

    def merge(self, **overrides: int | None) -> Budgets:
        """Replace fields whose override is not None."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class ProbeParams:
    count: int = 100
    n_gens: int = 2
    n_rels: int = 2
    max_len: int = 8
    seed: int = 0
    workers: int = 1

    def __post_init__(self) -> None:
        for f in fields(self):
            zero_ok = f.name in ("n_rels", "seed")
            _require_positive("probe", f.name, getattr(self, f.name), allow_zero=zero_ok)

    def merge(self, **overrides: int | None) -> ProbeParams:
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})

    def to_dict(self) -> dict[str, int]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass(frozen=True)
class FileConfig:
    budgets: Budgets = field(default_factory=Budgets)
    probe: ProbeParams = field(default_factory=ProbeParams)


class SourceKind(Enum):
    INLINE = "inline"
    FILE = "file"
    CATALOG = "catalog"


@dataclass(frozen=True)
class InputSource:
    kind: SourceKind
    value: str

    def to_dict(self) -> dict[str, str]:
        return {"kind": self.kind.value, "value": self.value}


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"


@dataclass(frozen=True)
class RunConfig:
    command: str
    source: InputSource | None
    budgets: Budgets = field(default_factory=Budgets)
    output: OutputFormat = OutputFormat.TEXT
    probe: ProbeParams = field(default_factory=ProbeParams)
