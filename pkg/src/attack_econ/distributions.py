"""Uncertainty descriptions for single model parameters."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, ScenarioFileError
from .payoff import PARAM_NAMES, check_param

# Scenario-file spelling of each parameter -> ScenarioParams field.
FILE_KEYS = {"V": "V", "alpha": "alpha", "p2": "p2", "delta": "delta", "C1": "c1", "C2": "c2"}
FIELD_TO_FILE_KEY = {v: k for k, v in FILE_KEYS.items()}

KINDS = ("point", "uniform", "beta")
_KIND_KEYS = {"point": {"kind", "v"}, "uniform": {"kind", "a", "b"}, "beta": {"kind", "a", "b"}}


@dataclass(frozen=True)
class ParamDistribution:
    """Distribution of one parameter.

    ``point`` stores its value in ``a`` (and ``b``). ``uniform`` is on
    ``[a, b]``. ``beta`` has shape parameters ``a, b`` and support [0, 1],
    which lies inside the valid range of every parameter, so draws never
    need rejection.
    """

    target: str
    kind: str
    a: float
    b: float

    def __post_init__(self):
        if self.target not in PARAM_NAMES:
            raise ParameterError(f"unknown distribution target {self.target!r}", self.target)
        if self.kind not in KINDS:
            raise ParameterError(f"{self.target}: unknown distribution kind {self.kind!r}", self.target)
        for attr in ("a", "b"):
            value = getattr(self, attr)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
                raise ParameterError(f"{self.target}: {attr} must be a finite number, got {value!r}", self.target)
            object.__setattr__(self, attr, float(value))
        if self.kind == "beta":
            if self.a <= 0.0 or self.b <= 0.0:
                raise ParameterError(f"{self.target}: beta shape parameters must be > 0", self.target)
            return
        check_param(self.target, self.a)
        check_param(self.target, self.b)
        if self.a > self.b:
            raise ParameterError(f"{self.target}: uniform bounds need a <= b", self.target)

    @classmethod
    def point(cls, target: str, v: float) -> ParamDistribution:
        return cls(target, "point", v, v)

    @classmethod
    def uniform(cls, target: str, a: float, b: float) -> ParamDistribution:
        return cls(target, "uniform", a, b)

    @classmethod
    def beta(cls, target: str, a: float, b: float) -> ParamDistribution:
        return cls(target, "beta", a, b)

    def sample(self, rng: np.random.Generator, n: int) -> np.ndarray:
        if self.kind == "point":
            return np.full(n, self.a)
        if self.kind == "uniform":
            return np.clip(rng.uniform(self.a, self.b, n), self.a, self.b)
        return rng.beta(self.a, self.b, n)

    def to_dict(self) -> dict:
        if self.kind == "point":
            return {"kind": "point", "v": self.a}
        return {"kind": self.kind, "a": self.a, "b": self.b}

    @classmethod
    def from_dict(cls, key: str, obj) -> ParamDistribution:
        """Parse one entry of a scenario file's ``distributions`` object."""
        if key not in FILE_KEYS:
            raise ScenarioFileError(f"distributions: unknown parameter {key!r}")
        if not isinstance(obj, dict):
            raise ScenarioFileError(f"distributions.{key}: expected an object")
        kind = obj.get("kind")
        if kind not in _KIND_KEYS:
            raise ScenarioFileError(f"distributions.{key}.kind: expected one of {', '.join(KINDS)}, got {kind!r}")
        keys = set(obj)
        if keys != _KIND_KEYS[kind]:
            extra = sorted(keys - _KIND_KEYS[kind])
            missing = sorted(_KIND_KEYS[kind] - keys)
            raise ScenarioFileError(f"distributions.{key}: unknown keys {extra}, missing keys {missing}")
        for name in keys - {"kind"}:
            value = obj[name]
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ScenarioFileError(f"distributions.{key}.{name}: expected a number, got {value!r}")
        target = FILE_KEYS[key]
        if kind == "point":
            return cls.point(target, obj["v"])
        return cls(target, kind, obj["a"], obj["b"])
