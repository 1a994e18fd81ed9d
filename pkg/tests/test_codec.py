import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indexcode.codec import (
    LinearCode,
    UnsupportedRemovalNumber,
    apply_code,
    build_code,
    code_from_json,
    code_to_json,
    decode_receiver,
    encode_cyclic,
    encode_uncoded,
)
from indexcode.graphs import parse_digraph
from indexcode.interlinked import build_config

C3 = parse_digraph("3 3\n1 2\n2 3\n3 1\n")
K3 = parse_digraph("3 6\n1 2\n1 3\n2 1\n2 3\n3 1\n3 2\n")
THETA6 = parse_digraph("6 9\n1 4\n1 5\n2 4\n2 6\n3 5\n3 6\n4 3\n5 2\n6 1\n")
TWO_C3 = parse_digraph("6 6\n1 2\n2 3\n3 1\n4 5\n5 6\n6 4\n")
P3 = parse_digraph("3 2\n1 2\n2 3\n")
K4 = parse_digraph(
    "4 12\n1 2\n1 3\n1 4\n2 1\n2 3\n2 4\n3 1\n3 2\n3 4\n4 1\n4 2\n4 3\n")


def test_linear_code_validation():
    with pytest.raises(ValueError, match="alphabet"):
        LinearCode(1, 2, ((1, 0),))
    with pytest.raises(ValueError, match="width"):
        LinearCode(2, 3, ((1, 0),))
    with pytest.raises(ValueError, match="coefficient"):
        LinearCode(2, 2, ((1, 2),))
    with pytest.raises(ValueError, match="zero row"):
        LinearCode(2, 2, ((0, 0),))
    with pytest.raises(ValueError, match="label"):
        LinearCode(2, 2, ((1, 0),), labels=())


def test_exprs():
    code = LinearCode(3, 3, ((1, 2, 0), (0, 0, 1)))
    assert code.exprs == ("x1+2*x2", "x3")
    assert code.length == 2


def test_json_round_trip_drops_labels():
    code = build_code(C3, q=2)
    assert code.labels == (("cycle", 1, 2), ("cycle", 2, 3))
    back = code_from_json(code_to_json(code))
    assert back.rows == code.rows
    assert back.q == code.q and back.n == code.n
    assert back.labels is None


def test_code_from_json_rejects_garbage():
    with pytest.raises(ValueError, match="not valid JSON"):
        code_from_json("{")
    with pytest.raises(ValueError, match="JSON object"):
        code_from_json("[1, 2]")
    with pytest.raises(ValueError, match="malformed"):
        code_from_json('{"q": 2, "n": 2}')


def test_encode_uncoded_is_identity():
    code = encode_uncoded(P3, q=3)
    assert code.rows == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert code.labels == (("uncoded", 1), ("uncoded", 2), ("uncoded", 3))


def test_encode_cyclic_rows():
    rows, labels = encode_cyclic((2, 4, 5), n=5, q=2)
    assert rows == [(0, 1, 0, 1, 0), (0, 0, 0, 1, 1)]
    assert labels == [("cycle", 2, 4), ("cycle", 4, 5)]


def test_build_code_lengths_and_labels():
    # acyclic: everything uncoded
    assert build_code(P3).labels == (
        ("uncoded", 1), ("uncoded", 2), ("uncoded", 3))
    # one cycle: saves one symbol
    assert build_code(C3).length == 2
    # two disjoint cycles: two cyclic blocks
    code = build_code(TWO_C3)
    assert code.length == 4
    assert code.labels == (("cycle", 1, 2), ("cycle", 2, 3),
                           ("cycle", 4, 5), ("cycle", 5, 6))
    # interlinked: one row per configuration vertex except two hubs
    code = build_code(THETA6)
    assert code.length == 4
    assert code.labels == (("config", 3), ("config", 4),
                           ("config", 5), ("config", 6))


def test_build_code_rejects_three_removals():
    with pytest.raises(UnsupportedRemovalNumber):
        build_code(K4)
    # callers that only catch ValueError still see the rejection
    assert issubclass(UnsupportedRemovalNumber, ValueError)


def test_apply_code():
    code = build_code(C3, q=2)
    assert apply_code(code, (1, 1, 0)) == (0, 1)
    assert apply_code(code, (1, 0, 1)) == (1, 1)
    with pytest.raises(ValueError):
        apply_code(code, (1, 0))


@pytest.mark.parametrize("g,q", [
    (K3, 2), (K3, 3), (K3, 5), (THETA6, 2), (THETA6, 3),
])
def test_decode_receiver_exhaustive(g, q):
    cfg = build_config(g)
    code = build_code(g, q=q)
    for x in itertools.product(range(q), repeat=g.num_vertices):
        y = apply_code(code, x)
        for i in g.vertices:
            side = {j: x[j - 1] for j in g.out_neighbors(i)}
            assert decode_receiver(cfg, code, y, i, side) == x[i - 1]


def test_decode_receiver_needs_side_information():
    cfg = build_config(K3)
    code = build_code(K3, q=2)
    y = apply_code(code, (1, 0, 1))
    with pytest.raises(ValueError, match="side"):
        decode_receiver(cfg, code, y, 1, {})


def test_decode_receiver_needs_labels():
    cfg = build_config(K3)
    bare = code_from_json(code_to_json(build_code(K3, q=2)))
    with pytest.raises(ValueError, match="labels"):
        decode_receiver(cfg, bare, (0,), 1, {2: 0, 3: 0})


@given(st.integers(min_value=2, max_value=5), st.data())
@settings(deadline=None)
def test_apply_code_is_linear(q, data):
    code = build_code(THETA6, q=q)
    n = code.n
    x = data.draw(st.tuples(*[st.integers(0, q - 1)] * n))
    z = data.draw(st.tuples(*[st.integers(0, q - 1)] * n))
    both = tuple((a + b) % q for a, b in zip(x, z))
    combined = tuple((a + b) % q
                     for a, b in zip(apply_code(code, x), apply_code(code, z)))
    assert apply_code(code, both) == combined
