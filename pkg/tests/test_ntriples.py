from hypothesis import given, settings
from hypothesis import strategies as st

from voidgraph.rdf import IRI, BlankNode, Format, Graph, Literal, Triple, parse, serialize_ntriples
from voidgraph.rdf.terms import XSD_STRING


def test_empty_graph():
    assert serialize_ntriples(Graph()) == ""


def test_single_iri_triple():
    g = Graph([Triple(IRI("http://a"), IRI("http://b"), IRI("http://c"))])
    assert serialize_ntriples(g) == "<http://a> <http://b> <http://c> .\n"


def test_literal_forms_and_escaping():
    s, p = IRI("http://s"), IRI("http://p")
    g = Graph(
        [
            Triple(s, p, Literal('say "hi"\\\n\r\t\x01\x7f é')),
            Triple(s, p, Literal("chat", language="fr")),
            Triple(s, p, Literal("5", "http://www.w3.org/2001/XMLSchema#integer")),
            Triple(BlankNode("b0"), p, BlankNode("b1")),
        ]
    )
    assert serialize_ntriples(g).splitlines() == [
        '<http://s> <http://p> "say \\"hi\\"\\\\\\n\\r\\t\\u0001\\u007F é" .',
        '<http://s> <http://p> "chat"@fr .',
        '<http://s> <http://p> "5"^^<http://www.w3.org/2001/XMLSchema#integer> .',
        "_:b0 <http://p> _:b1 .",
    ]


def test_keeps_graph_order():
    s, p = IRI("http://s"), IRI("http://p")
    triples = [Triple(s, p, Literal(str(i))) for i in (3, 1, 2)]
    lines = serialize_ntriples(Graph(triples)).splitlines()
    assert [line.split('"')[1] for line in lines] == ["3", "1", "2"]


# round trip

_iri_chars = st.characters(blacklist_characters='<>"{}|^`\\', blacklist_categories=("Cs", "Cc", "Zs", "Zl", "Zp"))
iris = st.builds(lambda tail: IRI("http://example.org/" + tail), st.text(_iri_chars, max_size=12))
blanks = st.from_regex(r"[A-Za-z_0-9][A-Za-z0-9_\-]{0,6}", fullmatch=True).map(BlankNode)
langs = st.from_regex(r"[a-zA-Z]{1,8}(-[a-zA-Z0-9]{1,8}){0,2}", fullmatch=True)
literals = st.one_of(
    st.builds(Literal, st.text(max_size=20)),
    st.builds(Literal, st.text(max_size=20), iris.map(lambda i: i.value)),
    st.builds(lambda lex, lang: Literal(lex, language=lang), st.text(max_size=20), langs),
)
triples = st.builds(Triple, st.one_of(iris, blanks), iris, st.one_of(iris, blanks, literals))
graphs = st.lists(triples, max_size=30).map(Graph)


@settings(max_examples=200)
@given(graphs)
def test_round_trip(graph):
    result = parse(serialize_ntriples(graph), Format.NTRIPLES)
    assert result.ok, result.diagnostics
    assert result.graph.triple_set() == graph.triple_set()


@given(graphs)
def test_round_trip_is_also_valid_turtle(graph):
    result = parse(serialize_ntriples(graph), Format.TURTLE)
    assert result.ok, result.diagnostics
    assert result.graph == graph


def test_plain_literal_is_xsd_string():
    assert Literal("x").datatype == XSD_STRING
