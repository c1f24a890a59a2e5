from .loader import load_budgets, load_config
from .types import (
    Budgets,
    ConfigError,
    FileConfig,
    InputSource,
    OutputFormat,
    ProbeParams,
    RunConfig,
    SourceKind,
    UnsupportedConfigFormatError,
)

__all__ = [
    "load_budgets",
    "load_config",
    "Budgets",
    "ConfigError",
    "FileConfig",
    "InputSource",
    "OutputFormat",
    "ProbeParams",
    "RunConfig",
    "SourceKind",
    "UnsupportedConfigFormatError",
]
