"""Input checks shared by the layout functions and the estimator."""
from __future__ import annotations

import math
import numbers
from typing import Any, Mapping

from .void import DiagramModel


def _finite(name: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, numbers.Real) or not math.isfinite(value):
        raise ValueError(f"{name} must be a finite number, got {value!r}")
    return float(value)


def _integer(name: str, value: Any, minimum: int) -> int:
    if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def check_layout_params(params: Mapping[str, Any]) -> None:
    """Raise ``ValueError`` unless ``params`` describe a usable layout."""
    for name in ("canvas_width", "canvas_height"):
        if _finite(name, params[name]) <= 0:
            raise ValueError(f"{name} must be positive")
    if _finite("padding", params["padding"]) < 0:
        raise ValueError("padding must be nonnegative")
    r_min = _finite("r_min", params["r_min"])
    r_max = _finite("r_max", params["r_max"])
    if not 0 < r_min <= r_max:
        raise ValueError(f"need 0 < r_min <= r_max, got r_min={r_min}, r_max={r_max}")
    t_ref = _finite("t_ref", params["t_ref"])
    t_cap = _finite("t_cap", params["t_cap"])
    if not 1 <= t_ref < t_cap:
        raise ValueError(f"need 1 <= t_ref < t_cap, got t_ref={t_ref}, t_cap={t_cap}")
    _integer("iterations", params["iterations"], 1)
    _integer("overlap_passes", params["overlap_passes"], 0)
    seed = _integer("seed", params["seed"], 0)
    if seed >= 1 << 64:
        raise ValueError("seed must fit in 64 bits")


def check_model(model: Any) -> DiagramModel:
    if not isinstance(model, DiagramModel):
        raise TypeError(f"expected a DiagramModel, got {type(model).__name__}")
    if model.is_empty:
        raise ValueError("cannot lay out an empty diagram model")
    return model
