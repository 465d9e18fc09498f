"""
Attacker archetypes.

Presets differ in patience (discount rate) and capability (phase-two
success probability). Resource-rich attackers discount slowly and can
finish the tailored phase; low-resource attackers discount fast and rarely
go past the commodified first phase. The numbers are illustrative defaults,
only their ordering carries meaning: hacktivist > criminal > nation-state
in ``delta``, and the reverse in ``p2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import ParameterError
from .payoff import PARAM_NAMES, check_param


class AttackClass(str, enum.Enum):
    COMMODIFIED = "Commodified"
    TAILORED = "Tailored"


@dataclass(frozen=True)
class Archetype:
    name: str
    overrides: Mapping[str, float]
    description: str
    # Descriptive only: phase one rides on off-the-shelf tooling, phase two
    # needs target-specific engineering.
    phase_one_class: AttackClass = field(default=AttackClass.COMMODIFIED, init=False)
    phase_two_class: AttackClass = field(default=AttackClass.TAILORED, init=False)

    def __post_init__(self):
        checked = {}
        for key, value in self.overrides.items():
            if key not in PARAM_NAMES:
                raise ValueError(f"archetype {self.name!r}: unknown parameter {key!r}")
            checked[key] = check_param(key, value)
        object.__setattr__(self, "overrides", MappingProxyType(checked))

    @property
    def delta(self) -> float | None:
        return self.overrides.get("delta")

    @property
    def p2(self) -> float | None:
        return self.overrides.get("p2")


_BUILTIN = (
    Archetype(
        "nation-state",
        {"delta": 0.05, "p2": 0.9},
        "well-resourced and patient; can sustain long reconnaissance and holds ready SCADA exploits",
    ),
    Archetype(
        "criminal",
        {"delta": 0.8, "p2": 0.6},
        "profit-driven group; moderate patience and tooling",
    ),
    Archetype(
        "hacktivist",
        {"delta": 2.0, "p2": 0.4},
        "low-resource and time-sensitive; mostly stops at internet-facing systems",
    ),
)

_REGISTRY = MappingProxyType({a.name: a for a in _BUILTIN})
assert len(_REGISTRY) == len(_BUILTIN), "archetype names must be unique"


def builtin_archetypes() -> list[Archetype]:
    """The preset attackers, ordered by ascending discount rate."""
    return list(_BUILTIN)


def get_archetype(name: str) -> Archetype:
    try:
        return _REGISTRY[name]
    except KeyError:
        known = ", ".join(_REGISTRY)
        raise ParameterError(f"unknown archetype {name!r} (known: {known})", "archetype") from None
