"""Minimal RDF layer: terms, graph, Turtle/N-Triples reader, N-Triples writer."""
from .iri import resolve_iri
from .ntriples import escape_literal, serialize_ntriples
from .parser import (
    EscapeError,
    Format,
    ParseDiagnostic,
    ParseResult,
    RDFSyntaxError,
    UndefinedPrefixError,
    detect_format,
    expand_prefixed_name,
    parse,
    unescape_string,
)
from .terms import IRI, RDF_TYPE, XSD_STRING, BlankNode, Graph, Literal, Term, Triple

__all__ = [
    "IRI",
    "RDF_TYPE",
    "XSD_STRING",
    "BlankNode",
    "EscapeError",
    "Format",
    "Graph",
    "Literal",
    "ParseDiagnostic",
    "ParseResult",
    "RDFSyntaxError",
    "Term",
    "Triple",
    "UndefinedPrefixError",
    "detect_format",
    "escape_literal",
    "expand_prefixed_name",
    "parse",
    "resolve_iri",
    "serialize_ntriples",
    "unescape_string",
]
