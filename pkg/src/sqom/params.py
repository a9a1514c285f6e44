"""Dimensionless system parameters and their validation.

Every rate is expressed in units of the mechanical frequency, which is pinned
to exactly 1. Cavity j carries a pump detuning delta_j, an intracavity
parametric drive of amplitude lambda_j >= 0 and phase phi_dj, and the two
cavities exchange photons at rate j_hop. The optomechanical cavity (index 2)
couples to the mechanical mode with single-photon strength g0.
"""
from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, replace
from pathlib import Path

from .errors import ConfigError, NegativeParameter, NonPositiveParameter, Stage1Unstable

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class PhysicalParams:
    """Raw dimensionless parameter set (units of omega_m unless stated)."""

    delta1: float
    delta2: float
    lambda1: float
    lambda2: float
    j_hop: float
    g0: float
    kappa: float
    gamma_m: float
    phi_d1: float = 0.0
    phi_d2: float = 0.0
    omega_m: float = 1.0

    def replace(self, **changes) -> "PhysicalParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class ValidatedParams:
    """Parameter set that passed `validate`, plus the canonical phase difference.

    delta_phi = (phi_d1 - phi_d2) mod 2*pi, in [0, 2*pi).
    """

    delta1: float
    delta2: float
    lambda1: float
    lambda2: float
    j_hop: float
    g0: float
    kappa: float
    gamma_m: float
    phi_d1: float
    phi_d2: float
    omega_m: float
    delta_phi: float

    def as_physical(self) -> PhysicalParams:
        d = {k: getattr(self, k) for k in PhysicalParams.__dataclass_fields__}
        return PhysicalParams(**d)


def canonical_delta_phi(phi_d1: float, phi_d2: float) -> float:
    """Phase difference folded into [0, 2*pi)."""
    d = (phi_d1 - phi_d2) % TWO_PI
    # float mod of a tiny negative argument can round up to the modulus itself
    return 0.0 if d >= TWO_PI else d


def validate(raw: PhysicalParams) -> ValidatedParams:
    """Check stability and sign conventions; return the validated wrapper.

    Raises
    ------
    NonPositiveParameter
        for kappa or gamma_m <= 0.
    ConfigError
        if omega_m differs from 1 (all rates are normalized to omega_m,
        so any other value indicates an inconsistent configuration).
    NegativeParameter
        for lambda_j, j_hop or g0 < 0.
    Stage1Unstable
        when |delta_j| <= 2*lambda_j for either cavity. The inequality is
        strict with no margin: operating arbitrarily close to the boundary
        is legitimate and simply produces a large squeezing parameter.
    """
    for field in ("kappa", "gamma_m"):
        value = getattr(raw, field)
        if not (value > 0.0) or not math.isfinite(value):
            raise NonPositiveParameter(field, value)
    if raw.omega_m != 1.0:
        raise ConfigError(
            f"omega_m is the unit of every rate and must be exactly 1, got {raw.omega_m!r}"
        )
    for field in ("lambda1", "lambda2", "j_hop", "g0"):
        value = getattr(raw, field)
        if value < 0.0 or not math.isfinite(value):
            raise NegativeParameter(field, value)
    for field in ("delta1", "delta2", "phi_d1", "phi_d2"):
        value = getattr(raw, field)
        if not math.isfinite(value):
            raise ConfigError(f"{field} must be finite, got {value!r}")

    for j, (delta, lam) in enumerate(
        [(raw.delta1, raw.lambda1), (raw.delta2, raw.lambda2)], start=1
    ):
        if not abs(delta) > 2.0 * lam:
            raise Stage1Unstable(j, delta, lam)

    return ValidatedParams(
        **asdict(raw), delta_phi=canonical_delta_phi(raw.phi_d1, raw.phi_d2)
    )


# --- configuration files -----------------------------------------------------

_REQUIRED_KEYS = ("delta1", "delta2", "lambda1", "lambda2", "j_hop", "g0", "kappa", "gamma_m")
_OPTIONAL_KEYS = {"phi_d1": 0.0, "phi_d2": 0.0, "omega_m": 1.0, "f1_hi": 10.0, "f1_lo": 0.1}


@dataclass(frozen=True)
class Config:
    """A parameter set plus the regime-classification thresholds."""

    params: PhysicalParams
    f1_hi: float = 10.0
    f1_lo: float = 0.1


def parse_config(data: dict) -> Config:
    """Build a Config from a parsed JSON object; unknown keys are an error."""
    if not isinstance(data, dict):
        raise ConfigError(f"config root must be a JSON object, got {type(data).__name__}")
    known = set(_REQUIRED_KEYS) | set(_OPTIONAL_KEYS)
    unknown = sorted(set(data) - known)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(unknown)} (typo guard)")
    missing = sorted(k for k in _REQUIRED_KEYS if k not in data)
    if missing:
        raise ConfigError(f"missing config keys: {', '.join(missing)}")
    values = {}
    for key in known:
        value = data.get(key, _OPTIONAL_KEYS.get(key))
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"config key {key!r} must be a number, got {value!r}")
        values[key] = float(value)
    f1_hi = values.pop("f1_hi")
    f1_lo = values.pop("f1_lo")
    if not (0.0 <= f1_lo <= f1_hi):
        raise ConfigError(f"need 0 <= f1_lo <= f1_hi, got f1_lo={f1_lo}, f1_hi={f1_hi}")
    return Config(params=PhysicalParams(**values), f1_hi=f1_hi, f1_lo=f1_lo)


def load_config(path: str | Path) -> Config:
    """Read a JSON config file (see README for the schema)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from exc
    return parse_config(data)
