import pytest
from hypothesis import given, settings

from indexcode.graphs import (
    CycleList,
    Digraph,
    ParseError,
    canonical_rotation,
    cycle_arcs,
    enumerate_cycles,
    parse_digraph,
    path_arcs,
    serialize_digraph,
    strongly_connected_components,
    union_of_cycles,
)

from strategies import digraphs

C3_TEXT = "3 3\n1 2\n2 3\n3 1\n"
K3_TEXT = "3 6\n1 2\n1 3\n2 1\n2 3\n3 1\n3 2\n"


def test_parse_basic():
    g = parse_digraph(C3_TEXT)
    assert g.n == 3
    assert g.arcs == frozenset({(1, 2), (2, 3), (3, 1)})
    assert g.live == frozenset({1, 2, 3})


def test_parse_skips_comments_and_blanks():
    text = "# a triangle\n\n 3 3 \n1 2\n# middle\n2 3\n\n3 1\n"
    assert parse_digraph(text).arcs == parse_digraph(C3_TEXT).arcs


@pytest.mark.parametrize("text,lineno,fragment", [
    ("", 1, "missing 'n m' header"),
    ("# only comments\n", 1, "missing"),
    ("3\n1 2\n", 1, "header must be 'n m'"),
    ("a b\n", 1, "two integers"),
    ("0 0\n", 1, "at least 1"),
    ("2 -1\n", 1, "non-negative"),
    ("2 2\n1 2\n", 2, "expected 2 arc lines, found 1"),
    ("2 1\n1 2\n2 1\n", 3, "unexpected extra arc line"),
    ("2 1\n1 2 3\n", 2, "arc line must be 'i j'"),
    ("2 1\nx y\n", 2, "endpoints must be integers"),
    ("2 1\n1 3\n", 2, "out of range"),
    ("2 1\n1 1\n", 2, "self-loop"),
    ("2 2\n1 2\n1 2\n", 3, "duplicate arc"),
])
def test_parse_errors(text, lineno, fragment):
    with pytest.raises(ParseError, match=fragment) as exc:
        parse_digraph(text)
    assert exc.value.lineno == lineno


def test_serialize_round_trip():
    g = parse_digraph(K3_TEXT)
    text = serialize_digraph(g)
    assert not text.endswith("\n")
    assert parse_digraph(text) == g


def test_serialize_rejects_masked_graphs():
    g = parse_digraph(C3_TEXT).delete_vertices({2})
    with pytest.raises(ValueError, match="masked"):
        serialize_digraph(g)


def test_digraph_validation():
    with pytest.raises(ValueError, match="self-loop"):
        Digraph.from_arcs(2, [(1, 1)])
    with pytest.raises(ValueError, match="dead or unknown"):
        Digraph(2, frozenset({(1, 3)}), frozenset({1, 2}))
    with pytest.raises(ValueError, match="out of range"):
        Digraph(1, frozenset(), frozenset({2}))


def test_neighbors_sorted_and_guarded():
    g = Digraph.from_arcs(4, [(1, 3), (1, 2), (4, 1), (2, 1)])
    assert g.out_neighbors(1) == (2, 3)
    assert g.in_neighbors(1) == (2, 4)
    assert g.out_neighbors(3) == ()
    h = g.delete_vertices({3})
    with pytest.raises(ValueError, match="not live"):
        h.out_neighbors(3)


def test_delete_keeps_labels():
    g = parse_digraph(K3_TEXT)
    h = g.delete_vertices({1})
    assert h.live == frozenset({2, 3})
    assert h.arcs == frozenset({(2, 3), (3, 2)})
    assert h.vertices == (2, 3)


def test_is_acyclic():
    assert parse_digraph("3 2\n1 2\n2 3\n").is_acyclic()
    assert not parse_digraph(C3_TEXT).is_acyclic()
    assert Digraph.from_arcs(1, []).is_acyclic()


def test_canonical_rotation():
    assert canonical_rotation((3, 1, 2)) == (1, 2, 3)
    assert canonical_rotation((5,)) == (5,)


def test_cycle_and_path_arcs():
    assert cycle_arcs((1, 2, 3)) == ((1, 2), (2, 3), (3, 1))
    assert path_arcs((2, 4, 1)) == ((2, 4), (4, 1))
    assert path_arcs((7,)) == ()


def test_k3_cycle_list_frozen():
    # all five elementary cycles, shortest first then lexicographic
    cl = enumerate_cycles(parse_digraph(K3_TEXT))
    assert cl.cycles == ((1, 2), (1, 3), (2, 3), (1, 2, 3), (1, 3, 2))
    assert not cl.truncated
    assert len(cl) == 5


def test_enumerate_cycles_cap():
    g = parse_digraph(K3_TEXT)
    cl = enumerate_cycles(g, cap=3)
    assert cl.truncated
    assert len(cl.cycles) == 3
    with pytest.raises(ValueError):
        enumerate_cycles(g, cap=0)
    assert isinstance(cl, CycleList)


def test_scc_order():
    g = parse_digraph("5 5\n4 5\n5 4\n1 2\n2 3\n3 1\n")
    assert strongly_connected_components(g) == (
        frozenset({1, 2, 3}), frozenset({4, 5}))


def test_union_of_cycles():
    g = parse_digraph("6 6\n1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n")
    sub = union_of_cycles(g, [(1, 2, 3)])
    assert sub.live == frozenset({1, 2, 3})
    assert sub.arcs == frozenset({(1, 2), (2, 3), (3, 1)})
    with pytest.raises(ValueError, match="not present"):
        union_of_cycles(g, [(1, 2, 4)])


@given(digraphs())
def test_serialize_parse_identity(g):
    assert parse_digraph(serialize_digraph(g)) == g


@given(digraphs(max_n=6))
def test_delete_composes(g):
    live = sorted(g.live)
    a = set(live[::2])
    b = set(live[1::2])
    assert g.delete_vertices(a).delete_vertices(b) == g.delete_vertices(a | b)


@given(digraphs(max_n=6))
@settings(deadline=None)
def test_cycles_are_canonical_and_ordered(g):
    cl = enumerate_cycles(g)
    keys = [(len(c), c) for c in cl.cycles]
    assert keys == sorted(keys)
    for c in cl.cycles:
        assert c[0] == min(c)
        assert all(a in g.arcs for a in cycle_arcs(c))
