"""Reading a VoID graph as circles (datasets) and arrows (linksets)."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple
from urllib.parse import urlsplit

from .rdf.terms import IRI, RDF_TYPE, Graph, Literal, Term

VOID = "http://rdfs.org/ns/void#"


class VocabTerms:
    DATASET = IRI(VOID + "Dataset")
    LINKSET = IRI(VOID + "Linkset")
    TRIPLES = IRI(VOID + "triples")
    SUBSET = IRI(VOID + "subset")
    TARGET = IRI(VOID + "target")
    SUBJECTS_TARGET = IRI(VOID + "subjectsTarget")
    OBJECTS_TARGET = IRI(VOID + "objectsTarget")
    TYPE = IRI(RDF_TYPE)
    TITLE = IRI("http://purl.org/dc/terms/title")
    LABEL = IRI("http://www.w3.org/2000/01/rdf-schema#label")


V = VocabTerms


@dataclass(frozen=True)
class DatasetNode:
    iri: str
    label: str
    triples: Optional[int] = None
    declared: bool = True

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("node label must be nonempty")
        if self.triples is not None and self.triples < 0:
            raise ValueError("triple count must be nonnegative")


@dataclass(frozen=True)
class LinkEdge:
    source: str
    target: str
    triples: Optional[int] = None
    directed: bool = True
    origin: str = ""


@dataclass(frozen=True)
class DiagramModel:
    nodes: Tuple[DatasetNode, ...] = ()
    edges: Tuple[LinkEdge, ...] = ()
    diagnostics: Tuple[str, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.nodes

    def node(self, iri: str) -> DatasetNode:
        for n in self.nodes:
            if n.iri == iri:
                return n
        raise KeyError(iri)

    @property
    def implicit_count(self) -> int:
        return sum(not n.declared for n in self.nodes)


def term_key(term: Term) -> str:
    """Code-point sort key that keeps IRIs and blank nodes apart."""
    return term.value if isinstance(term, IRI) else str(term)


def _name(term: Term) -> str:
    return term.value if isinstance(term, IRI) else term.n3()


def _objects(graph: Graph, subject: Term, predicate: IRI) -> List[Term]:
    # sorted so results never depend on statement order
    return sorted(graph.objects(subject, predicate), key=lambda t: t.n3())


def classify_resources(graph: Graph) -> Tuple[FrozenSet[Term], FrozenSet[Term]]:
    """Return ``(datasets, linksets)``; anything typed as a linkset is never a dataset."""
    linksets = frozenset(graph.subjects(V.TYPE, V.LINKSET))
    datasets = frozenset(graph.subjects(V.TYPE, V.DATASET)) - linksets
    return datasets, linksets


_INTEGER = re.compile(r"[+-]?[0-9]+\Z")


def read_triple_count(graph: Graph, resource: Term) -> Tuple[Optional[int], List[str]]:
    warnings: List[str] = []
    values = []
    for obj in _objects(graph, resource, V.TRIPLES):
        if not isinstance(obj, Literal):
            warnings.append(f"{_name(resource)}: void:triples value {obj.n3()} is not a literal; ignored")
            continue
        if not _INTEGER.match(obj.lexical):
            warnings.append(f"{_name(resource)}: void:triples value {obj.lexical!r} is not an integer; ignored")
            continue
        value = int(obj.lexical)
        if value < 0:
            warnings.append(f"{_name(resource)}: negative void:triples value {value} ignored")
            continue
        values.append(value)
    if not values:
        return None, warnings
    if len(set(values)) > 1:
        warnings.append(
            f"{_name(resource)}: {len(set(values))} different void:triples values; using the largest"
        )
    return max(values), warnings


def _literal_choice(graph: Graph, resource: Term, predicate: IRI) -> Optional[str]:
    lexicals = [o.lexical for o in graph.objects(resource, predicate) if isinstance(o, Literal) and o.lexical]
    return min(lexicals) if lexicals else None


def resolve_label(graph: Graph, resource: Term) -> str:
    for predicate in (V.TITLE, V.LABEL):
        found = _literal_choice(graph, resource, predicate)
        if found is not None:
            return found
    iri = _name(resource)
    head, sep, fragment = iri.partition("#")
    if sep and fragment:
        return fragment
    path = urlsplit(head).path.rstrip("/")
    if "/" in path:
        segment = path.rsplit("/", 1)[1]
        if segment:
            return segment
    return iri


def resolve_edge(
    graph: Graph,
    linkset: Term,
    datasets: Iterable[Term],
    linksets: Iterable[Term] = (),
) -> Tuple[Optional[LinkEdge], List[str]]:
    """Work out the arrow a linkset stands for; ``None`` plus a warning when it cannot."""
    name = _name(linkset)
    count, warnings = read_triple_count(graph, linkset)
    datasets = set(datasets)
    linksets = set(linksets)

    def usable(terms: List[Term]) -> Optional[str]:
        bad = [t for t in terms if not isinstance(t, IRI)]
        if bad:
            kind = "literal" if isinstance(bad[0], Literal) else "blank-node"
            return f"linkset {name} skipped: {kind} target {bad[0].n3()}"
        nested = [t for t in terms if t in linksets]
        if nested:
            return f"linkset {name} skipped: target {nested[0].value} is itself a linkset"
        return None

    subjects_t = _objects(graph, linkset, V.SUBJECTS_TARGET)
    objects_t = _objects(graph, linkset, V.OBJECTS_TARGET)
    if len(subjects_t) == 1 and len(objects_t) == 1:
        problem = usable(subjects_t + objects_t)
        if problem:
            return None, warnings + [problem]
        edge = LinkEdge(subjects_t[0].value, objects_t[0].value, count, True, name)
        return edge, warnings

    targets = _objects(graph, linkset, V.TARGET)
    if len(targets) != 2:
        return None, warnings + [
            f"linkset {name} skipped: expected 2 void:target values, found {len(targets)}"
        ]
    problem = usable(targets)
    if problem:
        return None, warnings + [problem]
    a, b = sorted(t.value for t in targets)
    parents = {
        p.value
        for p in graph.subjects(V.SUBSET, linkset)
        if isinstance(p, IRI) and p in datasets and p.value in (a, b)
    }
    if len(parents) == 1:
        parent = parents.pop()
        other = b if parent == a else a
        return LinkEdge(parent, other, count, True, name), warnings
    return LinkEdge(a, b, count, False, name), warnings


def extract_model(graph: Graph) -> DiagramModel:
    datasets, linksets = classify_resources(graph)
    diagnostics: List[str] = []

    declared: List[str] = []
    for d in sorted(datasets, key=term_key):
        if isinstance(d, IRI):
            declared.append(d.value)
        else:
            diagnostics.append(f"blank-node dataset {d.n3()} skipped: it cannot be labeled stably")

    merged: Dict[Tuple[str, str], LinkEdge] = {}
    for linkset in sorted(linksets, key=term_key):
        edge, warnings = resolve_edge(graph, linkset, datasets, linksets)
        diagnostics.extend(warnings)
        if edge is None:
            continue
        if edge.source == edge.target:
            diagnostics.append(f"linkset {edge.origin} dropped: both ends are {edge.source}")
            continue
        key = (edge.source, edge.target)
        prior = merged.get(key)
        if prior is None:
            merged[key] = edge
            continue
        counts = [c for c in (prior.triples, edge.triples) if c is not None]
        merged[key] = LinkEdge(
            edge.source,
            edge.target,
            sum(counts) if counts else None,
            prior.directed or edge.directed,
            min(prior.origin, edge.origin),
        )

    declared_set = set(declared)
    nodes: Dict[str, DatasetNode] = {}
    for iri in declared:
        triples, warnings = read_triple_count(graph, IRI(iri))
        diagnostics.extend(warnings)
        nodes[iri] = DatasetNode(iri, resolve_label(graph, IRI(iri)), triples, True)
    for edge in merged.values():
        for iri in (edge.source, edge.target):
            if iri not in nodes and iri not in declared_set:
                nodes[iri] = DatasetNode(iri, resolve_label(graph, IRI(iri)), None, False)

    return DiagramModel(
        nodes=tuple(nodes[k] for k in sorted(nodes)),
        edges=tuple(sorted(merged.values(), key=lambda e: (e.source, e.target, e.origin))),
        diagnostics=tuple(diagnostics),
    )
