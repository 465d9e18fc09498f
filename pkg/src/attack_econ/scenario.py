"""
Scenario files and parameter resolution.

A scenario is a JSON object::

    {"V": 1000, "alpha": 0.5, "p2": 0.8, "delta": 0.8, "C1": 100, "C2": 200,
     "archetype": "criminal", "t": 1.0,
     "overrides": {"delta": 0.3},
     "distributions": {"p2": {"kind": "uniform", "a": 0.0, "b": 1.0}}}

Resolution order, later wins: base values, archetype preset, overrides.
Any of the six parameters may be left out of the base if a later layer
supplies it. Unknown keys are rejected.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .archetypes import get_archetype
from .distributions import FIELD_TO_FILE_KEY, FILE_KEYS, ParamDistribution
from .errors import ParameterError, ScenarioFileError
from .payoff import PARAM_NAMES, ScenarioParams, check_param, check_value

_TOP_KEYS = set(FILE_KEYS) | {"archetype", "t", "overrides", "distributions"}


@dataclass(frozen=True)
class ScenarioConfig:
    """Unresolved scenario. Parameter mappings use ScenarioParams field names."""

    base: Mapping[str, float] = field(default_factory=dict)
    archetype: str | None = None
    overrides: Mapping[str, float] = field(default_factory=dict)
    distributions: tuple[ParamDistribution, ...] = ()
    t: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "base", _checked(self.base))
        object.__setattr__(self, "overrides", _checked(self.overrides))
        dists = tuple(self.distributions)
        targets = [d.target for d in dists]
        if len(set(targets)) != len(targets):
            raise ParameterError("at most one distribution per parameter", "distributions")
        object.__setattr__(self, "distributions", dists)
        if self.t is not None:
            object.__setattr__(self, "t", check_value("t", self.t))

    @classmethod
    def from_params(cls, params: ScenarioParams, **kwargs) -> ScenarioConfig:
        return cls(base=params.as_dict(), **kwargs)

    def to_dict(self) -> dict:
        doc: dict = {FIELD_TO_FILE_KEY[k]: self.base[k] for k in PARAM_NAMES if k in self.base}
        if self.archetype is not None:
            doc["archetype"] = self.archetype
        if self.t is not None:
            doc["t"] = self.t
        if self.overrides:
            doc["overrides"] = {FIELD_TO_FILE_KEY[k]: self.overrides[k] for k in PARAM_NAMES if k in self.overrides}
        if self.distributions:
            doc["distributions"] = {FIELD_TO_FILE_KEY[d.target]: d.to_dict() for d in self.distributions}
        return doc

    @classmethod
    def from_dict(cls, doc) -> ScenarioConfig:
        if not isinstance(doc, dict):
            raise ScenarioFileError("scenario must be a JSON object")
        unknown = sorted(set(doc) - _TOP_KEYS)
        if unknown:
            raise ScenarioFileError(f"unknown key(s): {', '.join(unknown)}")

        base = _params_from_file(doc, "")
        overrides = {}
        if "overrides" in doc:
            if not isinstance(doc["overrides"], dict):
                raise ScenarioFileError("overrides: expected an object")
            bad = sorted(set(doc["overrides"]) - set(FILE_KEYS))
            if bad:
                raise ScenarioFileError(f"overrides: unknown key(s): {', '.join(bad)}")
            overrides = _params_from_file(doc["overrides"], "overrides.")

        archetype = doc.get("archetype")
        if archetype is not None and not isinstance(archetype, str):
            raise ScenarioFileError(f"archetype: expected a string, got {archetype!r}")

        t = doc.get("t")
        if t is not None and (isinstance(t, bool) or not isinstance(t, (int, float))):
            raise ScenarioFileError(f"t: expected a number, got {t!r}")

        dists = []
        if "distributions" in doc:
            if not isinstance(doc["distributions"], dict):
                raise ScenarioFileError("distributions: expected an object")
            dists = [ParamDistribution.from_dict(k, v) for k, v in doc["distributions"].items()]

        return cls(base=base, archetype=archetype, overrides=overrides, distributions=tuple(dists), t=t)


def _checked(values: Mapping[str, float]) -> dict[str, float]:
    out = {}
    for key, value in values.items():
        if key not in PARAM_NAMES:
            raise ParameterError(f"unknown parameter {key!r}", key)
        out[key] = check_param(key, value)
    return out


def _params_from_file(doc: dict, prefix: str) -> dict:
    out = {}
    for file_key, name in FILE_KEYS.items():
        if file_key not in doc:
            continue
        value = doc[file_key]
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ScenarioFileError(f"{prefix}{file_key}: expected a number, got {value!r}")
        try:
            out[name] = check_param(name, value)
        except ParameterError as exc:
            if not prefix:
                raise
            raise ParameterError(f"{prefix}{file_key}: {exc}", name) from None
    return out


def resolve(config: ScenarioConfig) -> ScenarioParams:
    merged = dict(config.base)
    if config.archetype is not None:
        merged.update(get_archetype(config.archetype).overrides)
    merged.update(config.overrides)
    missing = [name for name in PARAM_NAMES if name not in merged]
    if missing:
        names = ", ".join(FIELD_TO_FILE_KEY[m] for m in missing)
        raise ParameterError(f"missing parameter(s): {names}", missing[0])
    return ScenarioParams(**merged)


def _reject_constant(name: str):
    raise ValueError(f"non-finite number {name} is not allowed")


def load_scenario(path) -> ScenarioConfig:
    """Read and validate a scenario file.

    Raises ScenarioFileError for I/O, JSON and schema problems, and
    ParameterError for values outside their bounds.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioFileError(f"cannot read {path}: {exc.strerror or exc}") from None
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except ValueError as exc:
        raise ScenarioFileError(f"{path}: malformed JSON: {exc}") from None
    return ScenarioConfig.from_dict(doc)


def dump_scenario(config: ScenarioConfig, path) -> None:
    Path(path).write_text(json.dumps(config.to_dict(), indent=2) + "\n", encoding="utf-8")
