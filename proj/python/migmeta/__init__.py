"""Cloud migration metamodel toolkit."""

from ._migmeta import (
    InstanceModel,
    Metamodel,
    MigmetaError,
    apply_extension,
    canonical,
    check,
    coverage_csv,
    diff,
    fixture,
    fixture_names,
    metamodel,
    metamodel_from_json,
    model_from_json,
    parse_model,
    run_cli,
    select_subset,
    version_1_0,
)

__all__ = [
    "InstanceModel",
    "Metamodel",
    "MigmetaError",
    "apply_extension",
    "canonical",
    "check",
    "coverage_csv",
    "diff",
    "fixture",
    "fixture_names",
    "metamodel",
    "metamodel_from_json",
    "model_from_json",
    "parse_model",
    "run_cli",
    "select_subset",
    "version_1_0",
]
