"""Circle sizing and deterministic force-directed placement."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from ._validation import check_layout_params, check_model
from .void import DiagramModel

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
DISTANCE_FLOOR = 1e-9
OVERLAP_TOLERANCE = 1e-6


class Vec2(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class LayoutConfig:
    canvas_width: float = 1000.0
    canvas_height: float = 1000.0
    seed: int = 42
    iterations: int = 500
    padding: float = 10.0
    r_min: float = 20.0
    r_max: float = 80.0
    t_ref: float = 1e3
    t_cap: float = 1e9
    overlap_passes: int = 50

    def __post_init__(self) -> None:
        check_layout_params(asdict(self))


@dataclass(frozen=True)
class Bounds:
    min_x: float
    min_y: float
    max_x: float
    max_y: float

    @property
    def width(self) -> float:
        return self.max_x - self.min_x

    @property
    def height(self) -> float:
        return self.max_y - self.min_y


@dataclass
class LayoutResult:
    positions: Dict[str, Vec2]
    radii: Dict[str, float]
    bounds: Bounds
    converged: bool = True
    warnings: List[str] = field(default_factory=list)


# --- splitmix64 ---------------------------------------------------------------


def splitmix64(state: int) -> Tuple[int, int]:
    """One splitmix64 step: returns ``(new_state, 64-bit output)``."""
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def rng_next(state: int) -> Tuple[int, float]:
    state, z = splitmix64(state)
    return state, (z >> 11) / float(1 << 53)


class SplitMix64:
    """Stateful wrapper around :func:`rng_next` that counts its draws."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64
        self.draws = 0

    def next_u64(self) -> int:
        self.state, z = splitmix64(self.state)
        self.draws += 1
        return z

    def random(self) -> float:
        self.state, u = rng_next(self.state)
        self.draws += 1
        return u


# --- sizing and placement ------------------------------------------------------


def radius_for(triples: Optional[int], config: LayoutConfig = LayoutConfig()) -> float:
    if triples is None or triples <= config.t_ref:
        return float(config.r_min)
    if triples >= config.t_cap:
        return float(config.r_max)
    lo, hi = math.log10(config.t_ref), math.log10(config.t_cap)
    return config.r_min + (config.r_max - config.r_min) * (math.log10(triples) - lo) / (hi - lo)


def initial_positions(
    model: DiagramModel, config: LayoutConfig, rng: Optional[SplitMix64] = None
) -> np.ndarray:
    """Seeded start positions, one row per node in canonical order."""
    n = len(model.nodes)
    if n == 1:
        return np.array([[config.canvas_width / 2, config.canvas_height / 2]])
    rng = rng if rng is not None else SplitMix64(config.seed)
    out = np.empty((n, 2))
    for i in range(n):
        out[i, 0] = rng.random() * config.canvas_width
        out[i, 1] = rng.random() * config.canvas_height
    return out


def edge_index(model: DiagramModel) -> np.ndarray:
    index = {node.iri: i for i, node in enumerate(model.nodes)}
    return np.array([(index[e.source], index[e.target]) for e in model.edges], dtype=np.intp).reshape(-1, 2)


def force_step(positions: np.ndarray, edges: np.ndarray, k: float, temperature: float) -> np.ndarray:
    """One Fruchterman-Reingold step with Jacobi-style accumulation.

    ``edges`` is an ``(m, 2)`` array of node-index pairs. Coincident nodes
    separate along the x axis, lower index towards -x.
    """
    pos = np.asarray(positions, dtype=float)
    n = len(pos)
    if n == 0:
        return pos.copy()
    delta = pos[:, None, :] - pos[None, :, :]
    dist = np.hypot(delta[..., 0], delta[..., 1])
    floored = np.maximum(dist, DISTANCE_FLOOR)
    coincident = dist == 0.0
    np.fill_diagonal(coincident, False)
    if coincident.any():
        i, j = np.nonzero(coincident)
        delta[i, j, 0] = np.where(i < j, -1.0, 1.0)
        delta[i, j, 1] = 0.0
        dist[i, j] = 1.0
    np.fill_diagonal(dist, 1.0)
    unit = delta / dist[..., None]
    repulse = (k * k) / floored
    np.fill_diagonal(repulse, 0.0)
    disp = (unit * repulse[..., None]).sum(axis=1)

    if len(edges):
        s, t = edges[:, 0], edges[:, 1]
        d = pos[t] - pos[s]
        length = np.hypot(d[:, 0], d[:, 1])
        # (d / |d|) * |d|^2 / k
        pull = d * (length / k)[:, None]
        np.add.at(disp, s, pull)
        np.add.at(disp, t, -pull)

    length = np.hypot(disp[:, 0], disp[:, 1])
    scale = np.ones_like(length)
    over = length > temperature
    scale[over] = temperature / length[over]
    return pos + disp * scale[:, None]


def resolve_overlaps(
    positions: np.ndarray,
    radii: Sequence[float],
    padding: float,
    max_passes: int,
) -> Tuple[np.ndarray, bool]:
    """Push overlapping circles apart pairwise until a sweep changes nothing.

    Returns the new positions and whether the last sweep was clean.
    """
    pos = [list(map(float, p)) for p in positions]
    r = [float(x) for x in radii]
    n = len(pos)
    for _ in range(max_passes):
        pushed = False
        for i in range(n):
            for j in range(i + 1, n):
                need = r[i] + r[j] + padding
                dx = pos[j][0] - pos[i][0]
                dy = pos[j][1] - pos[i][1]
                d = math.hypot(dx, dy)
                # tiny slack keeps float noise from triggering endless pushes
                if d >= need - 1e-9:
                    continue
                if d == 0.0:
                    ux, uy = 1.0, 0.0
                else:
                    ux, uy = dx / d, dy / d
                half = (need - d) / 2
                pos[i][0] -= ux * half
                pos[i][1] -= uy * half
                pos[j][0] += ux * half
                pos[j][1] += uy * half
                pushed = True
        if not pushed:
            return np.array(pos).reshape(-1, 2), True
    out = np.array(pos).reshape(-1, 2)
    return out, not overlapping_pairs(out, r, padding)


def overlapping_pairs(positions, radii, padding, tolerance=OVERLAP_TOLERANCE) -> List[Tuple[int, int]]:
    bad = []
    n = len(positions)
    for i in range(n):
        for j in range(i + 1, n):
            d = math.hypot(positions[j][0] - positions[i][0], positions[j][1] - positions[i][1])
            if d < radii[i] + radii[j] + padding - tolerance:
                bad.append((i, j))
    return bad


def temperature_schedule(config: LayoutConfig) -> np.ndarray:
    start = config.canvas_width / 10
    return start * (1.0 - np.arange(config.iterations) / config.iterations)


def run_layout(model: DiagramModel, config: LayoutConfig = LayoutConfig()) -> LayoutResult:
    check_model(model)
    n = len(model.nodes)
    radii = np.array([radius_for(node.triples, config) for node in model.nodes])
    pos = initial_positions(model, config)
    edges = edge_index(model)
    k = math.sqrt(config.canvas_width * config.canvas_height / n)
    for temperature in temperature_schedule(config):
        pos = force_step(pos, edges, k, float(temperature))
    pos, converged = resolve_overlaps(pos, radii, config.padding, config.overlap_passes)
    warnings = []
    if not converged:
        warnings.append(
            f"overlap removal did not converge within {config.overlap_passes} passes"
        )

    margin = radii + config.padding
    shift_x = float(np.min(pos[:, 0] - margin))
    shift_y = float(np.min(pos[:, 1] - margin))
    pos = pos - np.array([shift_x, shift_y])
    bounds = Bounds(
        0.0,
        0.0,
        float(np.max(pos[:, 0] + margin)),
        float(np.max(pos[:, 1] + margin)),
    )
    if not np.isfinite(pos).all():  # pragma: no cover - guarded by the distance floor
        raise FloatingPointError("layout produced non-finite coordinates")
    return LayoutResult(
        positions={node.iri: Vec2(float(x), float(y)) for node, (x, y) in zip(model.nodes, pos)},
        radii={node.iri: float(r) for node, r in zip(model.nodes, radii)},
        bounds=bounds,
        converged=converged,
        warnings=warnings,
    )
