import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from voidgraph.void import DatasetNode, DiagramModel, LinkEdge  # noqa: E402

DATA = Path(__file__).parent / "data"

CANONICAL_TTL = """\
@prefix void: <http://rdfs.org/ns/void#> .
@prefix dcterms: <http://purl.org/dc/terms/> .
@prefix : <http://example.org/void#> .

:DBpedia a void:Dataset ;
    dcterms:title "DBpedia" ;
    void:triples 1000000 ;
    void:subset :DBpedia2DBLP .

:DBLP a void:Dataset ;
    dcterms:title "DBLP" .

:DBpedia2DBLP a void:Linkset ;
    void:target :DBpedia , :DBLP .
"""


@pytest.fixture
def canonical_ttl():
    return CANONICAL_TTL


def random_model(seed, n_min=2, n_max=50):
    """A random DiagramModel with n in [n_min, n_max] nodes and random directed edges."""
    rng = random.Random(seed)
    n = rng.randint(n_min, n_max)
    iris = sorted(f"http://example.org/ds/{i:03d}" for i in range(n))
    nodes = tuple(
        DatasetNode(iri, iri.rsplit("/", 1)[1], rng.choice([None, 10 ** rng.randint(0, 12)]), True)
        for iri in iris
    )
    edges = {}
    for _ in range(rng.randint(0, 2 * n) if n > 1 else 0):
        a, b = rng.sample(iris, 2)
        edges[(a, b)] = LinkEdge(a, b, None, True, f"http://example.org/ls/{a[-3:]}-{b[-3:]}")
    return DiagramModel(nodes, tuple(sorted(edges.values(), key=lambda e: (e.source, e.target, e.origin))))
