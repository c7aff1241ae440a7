"""Session configuration shared by the command-line entry points."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalar import parse_rat

OUTPUTS = ("json", "latex", "text")


class ConfigError(ValueError):
    """Invalid user input; maps to exit status 2."""


def parse_kappa(text: str, name: str = "kappa") -> Fraction:
    try:
        value = parse_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{name}: {exc}") from None
    return value


@dataclass(frozen=True)
class SessionConfig:
    m: int
    kappa: tuple[Fraction, Fraction, Fraction]
    delta: int = 1
    max_degree: int = 4
    seed: int = 0
    output: str = "json"

    def __post_init__(self):
        if self.m < 2:
            raise ConfigError("m must be at least 2")
        if len(self.kappa) != 3:
            raise ConfigError("kappa must be a triple (kappa0, kappa1, kappam)")
        kappa = tuple(k if isinstance(k, Fraction) else parse_kappa(str(k)) for k in self.kappa)
        object.__setattr__(self, "kappa", kappa)
        if self.m % 2 and kappa[1] != kappa[2]:
            raise ConfigError(f"odd m = {self.m} requires kappa1 = kappam (got {kappa[1]} and {kappa[2]})")
        if self.delta not in (1, -1):
            raise ConfigError("delta must be 1 or -1")
        if self.max_degree < 0:
            raise ConfigError("max-degree must be non-negative")
        if self.output not in OUTPUTS:
            raise ConfigError(f"output must be one of {OUTPUTS}")

    @classmethod
    def from_strings(cls, m: int, kappa0: str, kappa1: str, kappam: str | None = None, **kw) -> "SessionConfig":
        k0 = parse_kappa(kappa0, "kappa0")
        k1 = parse_kappa(kappa1, "kappa1")
        km = k1 if kappam is None else parse_kappa(kappam, "kappam")
        return cls(m, (k0, k1, km), **kw)

    def to_json(self) -> dict:
        return {"m": self.m, "kappa": [str(k) for k in self.kappa], "delta": self.delta,
                "max_degree": self.max_degree, "seed": self.seed, "output": self.output}
