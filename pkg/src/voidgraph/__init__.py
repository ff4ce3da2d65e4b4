"""Render VoID dataset descriptions as LOD-cloud-style SVG diagrams."""
from .layout import (
    LayoutConfig,
    LayoutResult,
    Vec2,
    radius_for,
    run_layout,
)
from .rdf import Format, ParseResult, parse
from .pipeline import EmptyModelError, ParseFailure, Rendering, VoidGraphError, render
from .svg import Style, SvgDocument, emit_svg
from .void import DatasetNode, DiagramModel, LinkEdge, extract_model

__version__ = "0.1.0"


def __getattr__(name):
    # keeps scikit-learn out of the CLI's import path
    if name == "ForceDirectedLayout":
        from .estimator import ForceDirectedLayout

        return ForceDirectedLayout
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = [
    "DatasetNode",
    "DiagramModel",
    "EmptyModelError",
    "Format",
    "ForceDirectedLayout",
    "LayoutConfig",
    "LayoutResult",
    "LinkEdge",
    "ParseFailure",
    "ParseResult",
    "Rendering",
    "Style",
    "SvgDocument",
    "Vec2",
    "VoidGraphError",
    "emit_svg",
    "extract_model",
    "parse",
    "radius_for",
    "render",
    "run_layout",
]
