# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

import json
import re

from dataclasses import (
    dataclass,
    replace,
)
from functools import (
    lru_cache
)
from typing import (
    Any
)

from lattices import (
    Lattice,
    NestedLatticeCode,
)
from loggers import (
    get_logger
)
from utils.exceptions import (
    CFLatticeError,
    ConfigError,
)

logging = get_logger(__name__)

FADING_SCENARIO = "fading-1d"
GAUSSIAN_SCENARIO = "gaussian-map"
FADING_DECODERS = ("conventional", "ida", "ml")
GAUSSIAN_DECODERS = ("conventional", "map-augmented", "map-gdfe", "map-exhaustive")
FADING_MODES = ("fast", "slow")

DEFAULT_MAX_ERRORS = 100
DEFAULT_BATCH_SIZE = 1000

def read_config_document(path: str) -> dict:
    """
    Load a JSON configuration document.

    A UTF-8 byte order mark and trailing commas before a closing bracket are tolerated.

    Raises
    ------
    ConfigError
        When the file cannot be read or parsed, or is not a JSON object.
    """
    try:
        with open(path, "r", encoding="utf-8-sig") as f:
            raw_text = f.read()
    except OSError as e:
        raise ConfigError(f"cannot read configuration: {e}") from e

    raw_text = re.sub(r",\s*([]}])", r"\1", raw_text)

    try:
        data = json.loads(raw_text)
    except json.JSONDecodeError as e:
        raise ConfigError(f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict):
        raise ConfigError("configuration must be a JSON object")
    return data

def _number(data: dict, key: str, path: str, default: Any = ..., positive: bool = False) -> float:
    if key not in data:
        if default is ...:
            raise ConfigError("missing required key", f"{path}{key}")
        return default
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"expected a number, got {value!r}", f"{path}{key}")
    if positive and not value > 0:
        raise ConfigError(f"must be positive, got {value}", f"{path}{key}")
    return float(value)

def _integer(data: dict, key: str, path: str, default: Any = ..., minimum: int | None = None) -> int:
    if key not in data:
        if default is ...:
            raise ConfigError("missing required key", f"{path}{key}")
        return default
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"expected an integer, got {value!r}", f"{path}{key}")
    if minimum is not None and value < minimum:
        raise ConfigError(f"must be at least {minimum}, got {value}", f"{path}{key}")
    return value

def _vector(data: dict, key: str, path: str, integral: bool = False, default: Any = ...) -> tuple:
    if key not in data:
        if default is ...:
            raise ConfigError("missing required key", f"{path}{key}")
        return default
    value = data[key]
    kinds = (int,) if integral else (int, float)
    if not isinstance(value, list) or not value or any(
        isinstance(v, bool) or not isinstance(v, kinds) for v in value
    ):
        kind = "integers" if integral else "numbers"
        raise ConfigError(f"expected a nonempty list of {kind}, got {value!r}", f"{path}{key}")
    return tuple(value) if integral else tuple(float(v) for v in value)

def _matrix(value: Any, key: str) -> tuple[tuple[float, ...], ...]:
    if not isinstance(value, list) or not value or not all(isinstance(row, list) for row in value):
        raise ConfigError("expected a nonempty list of rows", key)
    width = len(value[0])
    if width == 0 or any(len(row) != width for row in value):
        raise ConfigError("rows must be nonempty and of equal length", key)
    if any(isinstance(v, bool) or not isinstance(v, (int, float)) for row in value for v in row):
        raise ConfigError("matrix entries must be numbers", key)
    return tuple(tuple(float(v) for v in row) for row in value)


@dataclass(frozen=True)
class CodeConfig:
    """
    Nested lattice code definition.

    The coarse lattice is either ``coarse_scale`` times the integer lattice or an explicit
    generator.
    """
    fine: tuple[tuple[float, ...], ...]
    coarse_scale: float | None = None
    coarse: tuple[tuple[float, ...], ...] | None = None
    power: float | None = None

    @classmethod
    def from_dict(cls, data: Any, path: str = "code.") -> "CodeConfig":
        if not isinstance(data, dict):
            raise ConfigError("expected an object", path.rstrip("."))
        if "fine" not in data:
            raise ConfigError("missing required key", f"{path}fine")
        fine = _matrix(data["fine"], f"{path}fine")
        if len(fine) != len(fine[0]):
            raise ConfigError("fine generator must be square", f"{path}fine")

        coarse = data.get("coarse")
        if not isinstance(coarse, dict) or ("scale" in coarse) == ("generator" in coarse):
            raise ConfigError("expected {\"scale\": s} or {\"generator\": [[...]]}", f"{path}coarse")
        coarse_scale = coarse_generator = None
        if "scale" in coarse:
            coarse_scale = _number(coarse, "scale", f"{path}coarse.", positive=True)
        else:
            coarse_generator = _matrix(coarse["generator"], f"{path}coarse.generator")
            if len(coarse_generator) != len(fine) or len(coarse_generator[0]) != len(fine):
                raise ConfigError("coarse generator must match the fine dimension", f"{path}coarse.generator")

        power = _number(data, "power", path, default=None, positive=True)
        return cls(fine, coarse_scale, coarse_generator, power)

    @property
    def dimension(self) -> int:
        return len(self.fine)

    def build(self) -> NestedLatticeCode:
        return build_code(self)

@lru_cache(maxsize=32)
def build_code(code: CodeConfig) -> NestedLatticeCode:
    """Construct (once per definition) the nested code a configuration describes."""
    try:
        fine = Lattice(code.fine)
        if code.coarse_scale is not None:
            coarse = Lattice.integer(code.dimension, code.coarse_scale)
        else:
            coarse = Lattice(code.coarse)
        return NestedLatticeCode.build(fine, coarse, code.power)
    except CFLatticeError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"invalid code: {e}", "code") from e


@dataclass(frozen=True)
class SimConfig:
    """
    Monte Carlo sweep definition.

    Attributes
    ----------
    scenario: str
        ``fading-1d`` or ``gaussian-map``.
    sources: int
        Number of transmitters N.
    snr_db: tuple[float, ...]
        SNR grid in dB.
    trials: int
        Maximum trials per SNR point.
    max_errors: int
        A point stops early once every decoder has this many errors.
    batch_size: int
        Trials per deterministic batch; early stopping is checked between batches.
    seed: int
        Root of every per-trial random stream.
    decoders: tuple[str, ...]
        Decoders to run, in output order.
    constellation_bound: int | None
        S_m of the 1-D constellation [-S_m, S_m] (fading-1d).
    code: CodeConfig | None
        Nested code (gaussian-map).
    fading_mode: str
        ``fast`` redraws h every trial, ``slow`` keeps ``fading_h``.
    fading_h: tuple[float, ...] | None
        Fixed fading vector of the slow mode.
    conventional_code_vector: tuple[int, ...] | None
        Fixed code vector of the conventional fading decoder; the rate-optimal vector of
        each trial when absent.
    output: str | None
        CSV destination.
    """
    scenario: str
    sources: int
    snr_db: tuple[float, ...]
    trials: int
    max_errors: int
    batch_size: int
    seed: int
    decoders: tuple[str, ...]
    constellation_bound: int | None = None
    code: CodeConfig | None = None
    fading_mode: str = "fast"
    fading_h: tuple[float, ...] | None = None
    conventional_code_vector: tuple[int, ...] | None = None
    output: str | None = None

    @classmethod
    def from_dict(cls, data: dict) -> "SimConfig":
        scenario = data.get("scenario")
        if scenario not in (FADING_SCENARIO, GAUSSIAN_SCENARIO):
            raise ConfigError(
                f"expected {FADING_SCENARIO!r} or {GAUSSIAN_SCENARIO!r}, got {scenario!r}", "scenario"
            )
        known = FADING_DECODERS if scenario == FADING_SCENARIO else GAUSSIAN_DECODERS

        decoders = data.get("decoders")
        if not isinstance(decoders, list) or not decoders:
            raise ConfigError("decoder list must be nonempty", "decoders")
        unknown = [name for name in decoders if name not in known]
        if unknown or len(set(decoders)) != len(decoders):
            raise ConfigError(f"unknown or repeated decoders {decoders}; choose from {list(known)}", "decoders")

        sources = _integer(data, "sources", "", default=2, minimum=1)
        snr_db = _vector(data, "snr_db", "")
        trials = _integer(data, "trials", "", minimum=1)
        max_errors = _integer(data, "max_errors", "", default=DEFAULT_MAX_ERRORS, minimum=1)
        batch_size = _integer(data, "batch_size", "", default=DEFAULT_BATCH_SIZE, minimum=1)
        seed = _integer(data, "seed", "", default=0, minimum=0)
        output = data.get("output")
        if output is not None and not isinstance(output, str):
            raise ConfigError("expected a path string", "output")

        bound = code = fading_h = conventional_code_vector = None
        fading_mode = "fast"
        if scenario == FADING_SCENARIO:
            if sources != 2:
                raise ConfigError("the 1-D fading scenario has exactly two sources", "sources")
            code_section = data.get("code")
            if not isinstance(code_section, dict):
                raise ConfigError("expected an object", "code")
            bound = _integer(code_section, "constellation_bound", "code.", minimum=1)
            fading = data.get("fading", {})
            if not isinstance(fading, dict):
                raise ConfigError("expected an object", "fading")
            fading_mode = fading.get("mode", "fast")
            if fading_mode not in FADING_MODES:
                raise ConfigError(f"expected one of {list(FADING_MODES)}", "fading.mode")
            if fading_mode == "slow":
                fading_h = _vector(fading, "h", "fading.")
                if len(fading_h) != 2:
                    raise ConfigError("slow fading needs two gains", "fading.h")
            conventional_code_vector = _vector(data, "conventional_code_vector", "", integral=True, default=None)
            if conventional_code_vector is not None and (
                len(conventional_code_vector) != 2 or not any(conventional_code_vector)
            ):
                raise ConfigError("expected two integers, not both zero", "conventional_code_vector")
        else:
            code = CodeConfig.from_dict(data.get("code"))

        return cls(
            scenario, sources, snr_db, trials, max_errors, batch_size, seed, tuple(decoders),
            bound, code, fading_mode, fading_h, conventional_code_vector, output,
        )

    def with_overrides(self, seed: int | None = None, output: str | None = None) -> "SimConfig":
        return replace(
            self,
            seed=self.seed if seed is None else seed,
            output=self.output if output is None else output,
        )


@dataclass(frozen=True)
class ChannelSweepConfig:
    """Fading vector and SNR grid of the ``rate`` and ``coeffs`` tables."""
    h: tuple[float, ...]
    snr_db: tuple[float, ...]
    a: tuple[int, ...] | None = None
    power: float = 1.0

    @classmethod
    def from_dict(cls, data: dict) -> "ChannelSweepConfig":
        h = _vector(data, "h", "")
        a = _vector(data, "a", "", integral=True, default=None)
        if a is not None and (len(a) != len(h) or not any(a)):
            raise ConfigError("code vector must be nonzero and match the length of h", "a")
        return cls(h, _vector(data, "snr_db", ""), a, _number(data, "power", "", default=1.0, positive=True))


PROFILE_PRESETS = {
    "matched": {"constellation_bound": 5, "x": [3, 4], "h": [-1.191, 1.189], "a": [-1, 1], "snr_db": 10},
    "high-snr": {"constellation_bound": 5, "x": [-5, -4], "h": [1.3681, -0.2359], "a": [-1, 0], "snr_db": 60},
    "near-tie": {"constellation_bound": 10, "x": [-2, -4], "h": [1.4741, -0.2839], "a": [-1, 0], "snr_db": 10},
}


@dataclass(frozen=True)
class ProfileConfig:
    """
    One two-source fading observation whose likelihood profile is tabulated.

    ``noise`` fixes the noise sample; when absent and a seed is available the noise is
    drawn from N(0, sigma^2), otherwise the observation is noise free.
    """
    constellation_bound: int
    x: tuple[int, int]
    h: tuple[float, float]
    snr_db: float
    a: tuple[int, int] | None = None
    noise: float | None = None
    seed: int | None = None

    @classmethod
    def from_dict(cls, data: dict) -> "ProfileConfig":
        preset = data.get("scenario")
        if preset is not None:
            if preset not in PROFILE_PRESETS:
                raise ConfigError(f"unknown preset, choose from {sorted(PROFILE_PRESETS)}", "scenario")
            data = {**PROFILE_PRESETS[preset], **{k: v for k, v in data.items() if k != "scenario"}}

        bound = _integer(data, "constellation_bound", "", minimum=1)
        x = _vector(data, "x", "", integral=True)
        h = _vector(data, "h", "")
        a = _vector(data, "a", "", integral=True, default=None)
        if len(x) != 2 or len(h) != 2 or (a is not None and len(a) != 2):
            raise ConfigError("the likelihood profile is defined for two sources", "x")
        if any(abs(v) > bound for v in x):
            raise ConfigError(f"symbols must lie in [-{bound}, {bound}]", "x")
        if a is not None and not any(a):
            raise ConfigError("code vector must be nonzero", "a")
        return cls(
            bound, x, h, _number(data, "snr_db", ""), a,
            _number(data, "noise", "", default=None),
            _integer(data, "seed", "", default=None, minimum=0),
        )


@dataclass(frozen=True)
class CodeSweepConfig:
    """Code, source count and SNR grid of the ``bound`` and ``histogram`` tables."""
    code: CodeConfig
    sources: int
    snr_db: tuple[float, ...] = ()

    @classmethod
    def from_dict(cls, data: dict, require_snr: bool = True) -> "CodeSweepConfig":
        snr_db = _vector(data, "snr_db", "") if require_snr else _vector(data, "snr_db", "", default=())
        return cls(
            CodeConfig.from_dict(data.get("code")),
            _integer(data, "sources", "", default=2, minimum=1),
            snr_db,
        )
