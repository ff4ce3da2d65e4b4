"""scikit-learn style wrapper around the layout pipeline."""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from ._validation import check_model
from .layout import LayoutConfig, run_layout


class ForceDirectedLayout(BaseEstimator):
    """Estimator-style front end to :func:`run_layout`.

    ``fit`` takes a :class:`~voidgraph.void.DiagramModel` and stores the
    result; ``fit_transform`` returns the ``(n_nodes, 2)`` centre coordinates
    in canonical node order.

    Attributes set by ``fit``: ``layout_``, ``positions_``, ``radii_``,
    ``node_iris_``, ``bounds_``, ``converged_``.
    """

    def __init__(
        self,
        canvas_width=1000.0,
        canvas_height=1000.0,
        seed=42,
        iterations=500,
        padding=10.0,
        r_min=20.0,
        r_max=80.0,
        t_ref=1e3,
        t_cap=1e9,
        overlap_passes=50,
    ):
        self.canvas_width = canvas_width
        self.canvas_height = canvas_height
        self.seed = seed
        self.iterations = iterations
        self.padding = padding
        self.r_min = r_min
        self.r_max = r_max
        self.t_ref = t_ref
        self.t_cap = t_cap
        self.overlap_passes = overlap_passes

    def to_config(self) -> LayoutConfig:
        return LayoutConfig(**self.get_params())

    def fit(self, X, y=None):
        model = check_model(X)
        self.layout_ = run_layout(model, self.to_config())
        self.node_iris_ = [node.iri for node in model.nodes]
        self.positions_ = np.array([self.layout_.positions[i] for i in self.node_iris_])
        self.radii_ = np.array([self.layout_.radii[i] for i in self.node_iris_])
        self.bounds_ = self.layout_.bounds
        self.converged_ = self.layout_.converged
        return self

    def fit_transform(self, X, y=None):
        return self.fit(X).positions_
