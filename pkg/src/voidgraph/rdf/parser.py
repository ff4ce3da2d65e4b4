"""Turtle / N-Triples reader.

Supports the Turtle subset that shows up in VoID descriptions: ``@prefix``,
``@base`` and their SPARQL spellings, comments, ``a``, ``;``/``,`` lists,
labeled and anonymous blank nodes, numeric and boolean shorthand, all four
string quotings, datatypes and language tags. Collections and graph blocks
are rejected.
"""
from __future__ import annotations

import bisect
import enum
import re
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Tuple

from .iri import is_absolute, resolve_iri
from .terms import (
    IRI,
    RDF_TYPE,
    XSD_BOOLEAN,
    XSD_DECIMAL,
    XSD_DOUBLE,
    XSD_INTEGER,
    XSD_STRING,
    BlankNode,
    Graph,
    Literal,
    Term,
    Triple,
    is_valid_iri_text,
)

GENID_PREFIX = "genid-"


class Format(str, enum.Enum):
    TURTLE = "turtle"
    NTRIPLES = "ntriples"


class RDFSyntaxError(ValueError):
    """Raised for malformed input; ``offset`` is relative to the text examined."""

    def __init__(self, message: str, offset: int = 0) -> None:
        super().__init__(message)
        self.message = message
        self.offset = offset


class UndefinedPrefixError(RDFSyntaxError):
    pass


class EscapeError(RDFSyntaxError):
    pass


@dataclass(frozen=True)
class ParseDiagnostic:
    severity: str  # "error" | "warning"
    line: int
    column: int
    message: str

    def __post_init__(self) -> None:
        if self.line < 1 or self.column < 1:
            raise ValueError("diagnostic positions are 1-based")

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


@dataclass
class ParseResult:
    graph: Graph
    diagnostics: List[ParseDiagnostic] = field(default_factory=list)

    @property
    def errors(self) -> List[ParseDiagnostic]:
        return [d for d in self.diagnostics if d.severity == "error"]

    @property
    def warnings(self) -> List[ParseDiagnostic]:
        return [d for d in self.diagnostics if d.severity == "warning"]

    @property
    def ok(self) -> bool:
        return not self.errors

    def __iter__(self):
        # allows ``graph, diagnostics = parse(...)``
        return iter((self.graph, self.diagnostics))


_DIRECTIVE_LINE = re.compile(r"^[ \t]*(?:@prefix|@base|PREFIX|BASE)", re.M)


def detect_format(text: str, filename_hint: Optional[str] = None) -> Format:
    if filename_hint:
        if filename_hint.endswith(".ttl"):
            return Format.TURTLE
        if filename_hint.endswith(".nt"):
            return Format.NTRIPLES
    if _DIRECTIVE_LINE.search(text):
        return Format.TURTLE
    return Format.NTRIPLES


# --- escapes -----------------------------------------------------------------

_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_HEX = re.compile(r"[0-9A-Fa-f]+\Z")


def _decode_uchar(text: str, i: int) -> Tuple[str, int]:
    """Decode the ``\\u``/``\\U`` escape whose backslash sits at ``i``."""
    width = 4 if text[i + 1] == "u" else 8
    digits = text[i + 2 : i + 2 + width]
    if len(digits) != width or not _HEX.match(digits):
        raise EscapeError(f"malformed \\{text[i + 1]} escape", i)
    code = int(digits, 16)
    if code > 0x10FFFF or 0xD800 <= code <= 0xDFFF:
        raise EscapeError(f"escape \\{text[i + 1]}{digits} is not a Unicode scalar value", i)
    return chr(code), i + 2 + width


def unescape_string(lexical: str) -> str:
    """Resolve string escapes (``\\n``, ``\\"``, ``\\u0041``, ...) in a quoted body."""
    if "\\" not in lexical:
        return lexical
    out = []
    i = 0
    n = len(lexical)
    while i < n:
        c = lexical[i]
        if c != "\\":
            out.append(c)
            i += 1
            continue
        if i + 1 >= n:
            raise EscapeError("truncated escape at end of string", i)
        nxt = lexical[i + 1]
        if nxt in "uU":
            ch, i = _decode_uchar(lexical, i)
            out.append(ch)
        elif nxt in _ECHAR:
            out.append(_ECHAR[nxt])
            i += 2
        else:
            raise EscapeError(f"unknown escape \\{nxt}", i)
    return "".join(out)


def _unescape_iri(body: str) -> str:
    if "\\" not in body:
        return body
    out = []
    i = 0
    while i < len(body):
        if body[i] == "\\":
            if i + 1 >= len(body) or body[i + 1] not in "uU":
                raise EscapeError("only \\u and \\U escapes are allowed in IRIs", i)
            ch, i = _decode_uchar(body, i)
            out.append(ch)
        else:
            out.append(body[i])
            i += 1
    return "".join(out)


# --- lexical patterns --------------------------------------------------------

_PN_CHARS_BASE = (
    "A-Za-z\u00C0-\u00D6\u00D8-\u00F6\u00F8-\u02FF\u0370-\u037D\u037F-\u1FFF"
    "\u200C-\u200D\u2070-\u218F\u2C00-\u2FEF\u3001-\uD7FF\uF900-\uFDCF"
    "\uFDF0-\uFFFD\U00010000-\U000EFFFF"
)
_PN_CHARS_U = _PN_CHARS_BASE + "_"
_PN_CHARS = _PN_CHARS_U + "\\-0-9\u00B7\u0300-\u036F\u203F-\u2040"
_PLX = r"(?:%[0-9A-Fa-f]{2}|\\[_~.\-!$&'()*+,;=/?#@%])"
_PN_PREFIX = rf"[{_PN_CHARS_BASE}](?:[{_PN_CHARS}.]*[{_PN_CHARS}])?"
_PN_LOCAL = (
    rf"(?:[{_PN_CHARS_U}:0-9]|{_PLX})"
    rf"(?:(?:[{_PN_CHARS}.:]|{_PLX})*(?:[{_PN_CHARS}:]|{_PLX}))?"
)

_WS = re.compile(r"(?:[ \t\r\n]+|#[^\r\n]*)*")
_IRIREF = re.compile(r'<((?:[^\x00-\x20<>"{}|^`\\]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*)>')
_PNAME = re.compile(rf"((?:{_PN_PREFIX})?):((?:{_PN_LOCAL})?)")
_PNAME_NS = re.compile(rf"((?:{_PN_PREFIX})?):")
_BLANK_LABEL = re.compile(rf"_:((?:[{_PN_CHARS_U}0-9])(?:[{_PN_CHARS}.]*[{_PN_CHARS}])?)")
_LANGTAG = re.compile(r"@([a-zA-Z]+(?:-[a-zA-Z0-9]+)*)")
_DOUBLE = re.compile(r"[+-]?(?:[0-9]+\.[0-9]*[eE][+-]?[0-9]+|\.[0-9]+[eE][+-]?[0-9]+|[0-9]+[eE][+-]?[0-9]+)")
_DECIMAL = re.compile(r"[+-]?[0-9]*\.[0-9]+")
_INTEGER = re.compile(r"[+-]?[0-9]+")
_NAME_TAIL = re.compile(rf"[{_PN_CHARS}:]")
_KEYWORD = re.compile(r"(@prefix|@base|PREFIX|BASE)\b", re.I)
_LOCAL_ESC = re.compile(r"\\(.)")


def expand_prefixed_name(prefix_map: Mapping[str, str], pname: str) -> str:
    """Expand ``prefix:local`` with ``prefix_map``, unescaping ``\\``-escaped local chars."""
    prefix, sep, local = pname.partition(":")
    if not sep:
        raise RDFSyntaxError(f"not a prefixed name: {pname!r}")
    if prefix not in prefix_map:
        raise UndefinedPrefixError(f"undefined prefix '{prefix}:'")
    return prefix_map[prefix] + _LOCAL_ESC.sub(r"\1", local)


# --- parser ------------------------------------------------------------------

_BOOLEAN = re.compile(rf"(true|false)(?![{_PN_CHARS}:])")


class _Abort(Exception):
    pass


class _Parser:
    def __init__(self, text: str, fmt: Format, base: Optional[str]) -> None:
        self.text = text
        self.n = len(text)
        self.pos = 0
        self.last_end = 0
        self.turtle = fmt is Format.TURTLE
        self.base = base
        self.prefixes: Dict[str, str] = {}
        self.triples: Dict[Triple, None] = {}
        self.diagnostics: List[ParseDiagnostic] = []
        self.genid = 0
        self._warned_relative: set = set()
        self._line_starts = [0] + [m.end() for m in re.finditer(r"\r\n|\r|\n", text)]

    # positions and diagnostics

    def position(self, offset: int) -> Tuple[int, int]:
        line = bisect.bisect_right(self._line_starts, offset)
        return line, offset - self._line_starts[line - 1] + 1

    def fail(self, message: str, offset: Optional[int] = None):
        line, col = self.position(self.pos if offset is None else offset)
        self.diagnostics.append(ParseDiagnostic("error", line, col, message))
        raise _Abort

    def warn(self, message: str, offset: int) -> None:
        line, col = self.position(offset)
        self.diagnostics.append(ParseDiagnostic("warning", line, col, message))

    # scanning

    def skip_ws(self) -> None:
        self.pos = _WS.match(self.text, self.pos).end()

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < self.n else ""

    def match(self, pattern: "re.Pattern") -> Optional["re.Match"]:
        return pattern.match(self.text, self.pos)

    def advance(self, to: int) -> None:
        self.pos = self.last_end = to

    def expect(self, ch: str, what: str) -> None:
        self.skip_ws()
        if self.peek() != ch:
            # anchor on the end of the previous token so the error keeps its line
            self.fail(f"expected '{ch}' {what}, found {self.describe_here()}", self.last_end)
        self.advance(self.pos + 1)

    def describe_here(self) -> str:
        if self.pos >= self.n:
            return "end of input"
        token = re.compile(r"\S{1,20}").match(self.text, self.pos)
        return repr(token.group(0)) if token else repr(self.peek())

    def emit(self, s, p, o) -> None:
        self.triples[Triple(s, p, o)] = None

    # statements

    def run(self) -> None:
        while True:
            self.skip_ws()
            if self.pos >= self.n:
                return
            if self.turtle and self.directive():
                continue
            self.triples_statement()
            self.expect(".", "at end of triple")

    def directive(self) -> bool:
        m = self.match(_KEYWORD)
        if not m:
            return False
        word = m.group(1)
        sparql = not word.startswith("@")
        if not sparql and word != word.lower():
            return False
        if sparql and _NAME_TAIL.match(self.text, m.end()):
            return False  # "PREFIX:x" is a prefixed name
        self.advance(m.end())
        self.skip_ws()
        if word.lower().endswith("prefix"):
            ns = self.match(_PNAME_NS)
            if not ns:
                self.fail(f"expected prefix name after {word}, found {self.describe_here()}")
            self.advance(ns.end())
            self.skip_ws()
            self.prefixes[ns.group(1)] = self.iriref()
        else:
            self.skip_ws()
            self.base = self.iriref()
        if not sparql:
            self.expect(".", f"after {word} directive")
        return True

    def triples_statement(self) -> None:
        if self.turtle and self.peek() == "[":
            subject, anonymous = self.blank_property_list()
            self.skip_ws()
            if not anonymous and self.peek() == ".":
                return
            self.predicate_object_list(subject)
            return
        self.predicate_object_list(self.subject())

    def predicate_object_list(self, subject) -> None:
        while True:
            predicate = self.verb()
            self.object_list(subject, predicate)
            self.skip_ws()
            if not self.turtle or self.peek() != ";":
                return
            while self.peek() == ";":
                self.advance(self.pos + 1)
                self.skip_ws()
            if self.peek() in (".", "]", ""):
                return

    def object_list(self, subject, predicate) -> None:
        while True:
            self.emit(subject, predicate, self.object())
            self.skip_ws()
            if not self.turtle or self.peek() != ",":
                return
            self.advance(self.pos + 1)

    # terms

    def subject(self):
        self.skip_ws()
        c = self.peek()
        if c == "<":
            return IRI(self.iriref())
        if c == "_":
            return self.blank_label()
        if c in "\"'":
            self.fail("literal in subject position")
        if not self.turtle:
            self.fail(f"expected subject IRI or blank node, found {self.describe_here()}")
        if c == "[":
            return self.blank_property_list()[0]
        self.reject_unsupported(c)
        pname = self.prefixed_name()
        if pname is not None:
            return IRI(pname)
        if self.match(_DECIMAL) or self.match(_INTEGER) or self.match(_BOOLEAN):
            self.fail("literal in subject position")
        self.fail(f"expected subject, found {self.describe_here()}")

    def verb(self) -> IRI:
        self.skip_ws()
        c = self.peek()
        if c == "<":
            return IRI(self.iriref())
        if self.turtle:
            pname = self.prefixed_name()
            if pname is not None:
                return IRI(pname)
            if c == "a" and not _NAME_TAIL.match(self.text, self.pos + 1):
                self.advance(self.pos + 1)
                return IRI(RDF_TYPE)
        if c and c in "\"'_[":
            self.fail("predicate must be an IRI")
        self.fail(f"expected predicate, found {self.describe_here()}")

    def object(self) -> Term:
        self.skip_ws()
        c = self.peek()
        if c == "<":
            return IRI(self.iriref())
        if c == "_":
            return self.blank_label()
        if c == '"' or (c == "'" and self.turtle):
            return self.literal()
        if not self.turtle:
            self.fail(f"expected object, found {self.describe_here()}")
        if c == "[":
            return self.blank_property_list()[0]
        self.reject_unsupported(c)
        for pattern, datatype in ((_DOUBLE, XSD_DOUBLE), (_DECIMAL, XSD_DECIMAL), (_INTEGER, XSD_INTEGER)):
            m = self.match(pattern)
            if m:
                self.advance(m.end())
                return Literal(m.group(0), datatype)
        pname = self.prefixed_name()
        if pname is not None:
            return IRI(pname)
        m = self.match(_BOOLEAN)
        if m:
            self.advance(m.end())
            return Literal(m.group(1), XSD_BOOLEAN)
        self.fail(f"expected object, found {self.describe_here()}")

    def reject_unsupported(self, c: str) -> None:
        if c == "(":
            self.fail("collections are not supported")
        if c == "{":
            self.fail("graph blocks are not supported")

    def iriref(self) -> str:
        start = self.pos
        if self.peek() != "<":
            self.fail(f"expected IRI, found {self.describe_here()}")
        m = self.match(_IRIREF)
        if not m:
            self._diagnose_iri(start)
        self.advance(m.end())
        try:
            value = _unescape_iri(m.group(1))
        except EscapeError as exc:  # pragma: no cover - the pattern admits only valid escapes
            self.fail(exc.message, start + 1 + exc.offset)
        if not is_valid_iri_text(value):
            self.fail("IRI escape produces a character not allowed in IRIs", start)
        return self.resolve(value, start)

    def _diagnose_iri(self, start: int) -> None:
        i = start + 1
        while i < self.n:
            c = self.text[i]
            if c == ">":
                break
            if c == "\\":
                if self.text[i + 1 : i + 2] not in ("u", "U"):
                    self.fail("only \\u and \\U escapes are allowed in IRIs", i)
                try:
                    _, i = _decode_uchar(self.text, i)
                except EscapeError as exc:
                    self.fail(exc.message, exc.offset)
                continue
            if c in " \t\r\n":
                self.fail("unterminated IRI", start)
            if c in '<"{}|^`' or ord(c) < 0x20:
                self.fail(f"character {c!r} not allowed in IRI", i)
            i += 1
        self.fail("unterminated IRI", start)

    def resolve(self, value: str, offset: int) -> str:
        if is_absolute(value):
            return value
        if self.base is not None:
            return resolve_iri(self.base, value)
        if value not in self._warned_relative:
            self._warned_relative.add(value)
            self.warn(f"relative IRI <{value}> kept as-is (no base IRI)", offset)
        return value

    def prefixed_name(self) -> Optional[str]:
        start = self.pos
        m = self.match(_PNAME)
        if not m:
            return None
        if m.group(1) not in self.prefixes:
            self.fail(f"undefined prefix '{m.group(1)}:'", start)
        self.advance(m.end())
        return expand_prefixed_name(self.prefixes, m.group(0))

    def blank_label(self) -> BlankNode:
        m = self.match(_BLANK_LABEL)
        if not m:
            self.fail(f"malformed blank node label {self.describe_here()}")
        self.advance(m.end())
        label = m.group(1)
        if self.turtle and label.startswith(GENID_PREFIX):
            # genid-<n> is reserved for anonymous nodes
            label = GENID_PREFIX + "u-" + label[len(GENID_PREFIX) :]
        return BlankNode(label)

    def blank_property_list(self) -> Tuple[BlankNode, bool]:
        """Parse ``[ ... ]``; the flag is True for the empty form ``[]``."""
        self.advance(self.pos + 1)
        self.genid += 1
        node = BlankNode(f"{GENID_PREFIX}{self.genid}")
        self.skip_ws()
        if self.peek() == "]":
            self.advance(self.pos + 1)
            return node, True
        self.predicate_object_list(node)
        self.expect("]", "to close blank node property list")
        return node, False

    def literal(self) -> Literal:
        start = self.pos
        q = self.peek()
        closer = q * 3 if self.turtle and self.text.startswith(q * 3, start) else q
        body_start = i = start + len(closer)
        while True:
            if i >= self.n or (len(closer) == 1 and self.text[i] in "\r\n"):
                self.fail("unterminated string", start)
            if self.text[i] == "\\":
                i += 2
                continue
            if self.text.startswith(closer, i):
                break
            i += 1
        self.advance(i + len(closer))
        try:
            lexical = unescape_string(self.text[body_start:i])
        except EscapeError as exc:
            self.fail(exc.message, body_start + exc.offset)
        m = self.match(_LANGTAG)
        if m:
            self.advance(m.end())
            return Literal(lexical, language=m.group(1))
        after = self.pos
        self.skip_ws()
        if not self.text.startswith("^^", self.pos):
            self.pos = after
            return Literal(lexical, XSD_STRING)
        self.pos += 2
        self.skip_ws()
        if self.peek() == "<":
            datatype = self.iriref()
        else:
            datatype = self.prefixed_name() if self.turtle else None
            if datatype is None:
                self.fail(f"expected datatype IRI, found {self.describe_here()}")
        return Literal(lexical, datatype)


def parse(text: str, format: Format = Format.TURTLE, base: Optional[str] = None) -> ParseResult:
    """Parse ``text`` into a :class:`Graph`.

    Parsing stops at the first error. The result then carries an empty graph
    and the diagnostics gathered so far, the error last.
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    parser = _Parser(text, Format(format), base)
    try:
        parser.run()
    except _Abort:
        return ParseResult(Graph(), parser.diagnostics)
    return ParseResult(Graph(parser.triples, parser.prefixes), parser.diagnostics)
