"""Canonical N-Triples output."""
from __future__ import annotations

import re

from .terms import Graph

_ECHARS = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t", "\b": "\\b", "\f": "\\f"}
_NEEDS_ESCAPE = re.compile(r'[\\"\x00-\x1f\x7f]')


def _escape_char(m: "re.Match") -> str:
    c = m.group(0)
    return _ECHARS.get(c) or f"\\u{ord(c):04X}"


def escape_literal(lexical: str) -> str:
    return _NEEDS_ESCAPE.sub(_escape_char, lexical)


def serialize_ntriples(graph: Graph) -> str:
    return "".join(
        f"{t.subject.n3()} {t.predicate.n3()} {t.object.n3()} .\n" for t in graph
    )
