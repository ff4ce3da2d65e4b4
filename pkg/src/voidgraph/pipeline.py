"""End-to-end: VoID text in, SVG text out."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Union

from .layout import LayoutConfig, LayoutResult, run_layout
from .rdf import Format, ParseDiagnostic, detect_format, parse
from .svg import Style, SvgDocument, emit_svg
from .void import DiagramModel, extract_model


class VoidGraphError(Exception):
    pass


class ParseFailure(VoidGraphError):
    def __init__(self, diagnostic: ParseDiagnostic, warnings: List[ParseDiagnostic]) -> None:
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic
        self.warnings = warnings


class EmptyModelError(VoidGraphError):
    def __init__(self, warnings: List[str]) -> None:
        super().__init__("no datasets found")
        self.warnings = warnings


@dataclass
class Rendering:
    svg: SvgDocument
    model: DiagramModel
    layout: LayoutResult
    format: Format
    warnings: List[str] = field(default_factory=list)

    @property
    def text(self) -> str:
        return self.svg.text


def render(
    text: str,
    format: Union[Format, str] = "auto",
    filename_hint: Optional[str] = None,
    base: Optional[str] = None,
    config: LayoutConfig = LayoutConfig(),
    style: Style = Style(),
) -> Rendering:
    """Parse, extract, lay out and emit in one go.

    Raises :class:`ParseFailure` on the first syntax error and
    :class:`EmptyModelError` when the description yields no circles.
    Warnings from every stage are collected in ``Rendering.warnings``.
    """
    fmt = detect_format(text, filename_hint) if format == "auto" else Format(format)
    result = parse(text, fmt, base)
    warnings = [str(d) for d in result.warnings]
    if not result.ok:
        raise ParseFailure(result.errors[0], result.warnings)
    model = extract_model(result.graph)
    warnings.extend(model.diagnostics)
    if model.is_empty:
        raise EmptyModelError(warnings)
    layout = run_layout(model, config)
    warnings.extend(layout.warnings)
    svg = emit_svg(model, layout, style)
    warnings.extend(svg.warnings)
    return Rendering(svg, model, layout, fmt, warnings)
