"""RDF terms, triples and an immutable, insertion-ordered graph."""
from __future__ import annotations

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Optional, Union

XSD = "http://www.w3.org/2001/XMLSchema#"
RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"

XSD_STRING = XSD + "string"
XSD_INTEGER = XSD + "integer"
XSD_DECIMAL = XSD + "decimal"
XSD_DOUBLE = XSD + "double"
XSD_BOOLEAN = XSD + "boolean"
RDF_TYPE = RDF + "type"
RDF_LANGSTRING = RDF + "langString"

# characters that may never appear raw inside an IRI
_IRI_FORBIDDEN = re.compile(r'[\x00-\x20<>"{}|^`\\]')


def is_valid_iri_text(value: str) -> bool:
    return _IRI_FORBIDDEN.search(value) is None


@dataclass(frozen=True, order=True)
class IRI:
    value: str

    kind = "iri"

    def __str__(self) -> str:
        return self.value

    def n3(self) -> str:
        return f"<{self.value}>"


@dataclass(frozen=True, order=True)
class BlankNode:
    label: str

    kind = "blank"

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("blank node label must be nonempty")

    def __str__(self) -> str:
        return f"_:{self.label}"

    def n3(self) -> str:
        return f"_:{self.label}"


@dataclass(frozen=True)
class Literal:
    lexical: str
    datatype: str = XSD_STRING
    language: Optional[str] = None

    kind = "literal"

    def __post_init__(self) -> None:
        if self.language is not None and self.datatype != RDF_LANGSTRING:
            # a language tag always implies rdf:langString
            object.__setattr__(self, "datatype", RDF_LANGSTRING)

    def __str__(self) -> str:
        return self.lexical

    def n3(self) -> str:
        from .ntriples import escape_literal

        body = f'"{escape_literal(self.lexical)}"'
        if self.language is not None:
            return f"{body}@{self.language}"
        if self.datatype == XSD_STRING:
            return body
        return f"{body}^^<{self.datatype}>"


Term = Union[IRI, BlankNode, Literal]


@dataclass(frozen=True)
class Triple:
    subject: Union[IRI, BlankNode]
    predicate: IRI
    object: Term

    def __post_init__(self) -> None:
        if isinstance(self.subject, Literal):
            raise TypeError("a literal cannot be the subject of a triple")
        if not isinstance(self.predicate, IRI):
            raise TypeError("the predicate of a triple must be an IRI")

    def __iter__(self) -> Iterator[Term]:
        return iter((self.subject, self.predicate, self.object))


class Graph:
    """Deduplicated triples in first-insertion order, plus the prefix map.

    Instances are immutable once constructed; build them from any iterable of
    triples and duplicates are dropped silently.
    """

    __slots__ = ("_triples", "_index", "_prefixes")

    def __init__(
        self,
        triples: Iterable[Triple] = (),
        prefixes: Optional[Mapping[str, str]] = None,
    ) -> None:
        ordered = dict.fromkeys(triples)
        self._triples = tuple(ordered)
        self._index = frozenset(ordered)
        self._prefixes = MappingProxyType(dict(prefixes or {}))

    @property
    def triples(self) -> tuple:
        return self._triples

    @property
    def prefixes(self) -> Mapping[str, str]:
        return self._prefixes

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __contains__(self, triple: object) -> bool:
        return triple in self._index

    def __eq__(self, other: object) -> bool:
        # set semantics; order and prefixes do not matter
        if not isinstance(other, Graph):
            return NotImplemented
        return self._index == other._index

    def __hash__(self) -> int:
        return hash(self._index)

    def __repr__(self) -> str:
        return f"Graph({len(self)} triples)"

    def triple_set(self) -> frozenset:
        return self._index

    def match(self, subject=None, predicate=None, obj=None) -> Iterator[Triple]:
        for t in self._triples:
            if subject is not None and t.subject != subject:
                continue
            if predicate is not None and t.predicate != predicate:
                continue
            if obj is not None and t.object != obj:
                continue
            yield t

    def subjects(self, predicate=None, obj=None) -> list:
        return list(dict.fromkeys(t.subject for t in self.match(None, predicate, obj)))

    def objects(self, subject=None, predicate=None) -> list:
        return list(dict.fromkeys(t.object for t in self.match(subject, predicate, None)))
