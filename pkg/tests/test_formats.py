import json

import networkx as nx
import pytest

from fullcycle.config import PLANAR_CODE_HEADER
from fullcycle.corpus.store import read_graphs, write_graphs
from fullcycle.exceptions import GraphFormatError, PlanarCodeError
from fullcycle.graphs import (
    FullereneGraph,
    dumps_json,
    encode_planar_code,
    generate_nanotube,
    loads_json,
    parse_planar_code,
    rotation_from_networkx,
)

HEADER = len(PLANAR_CODE_HEADER)


@pytest.fixture(scope="module")
def corpus(dodecahedron, c30, c40, buckyball):
    return [dodecahedron, c30, c40, buckyball]


def test_planar_code_byte_identical(corpus):
    data = encode_planar_code(corpus)
    decoded = parse_planar_code(data)
    assert len(decoded) == 4
    assert [g.rotation for g in decoded] == [g.rotation for g in corpus]
    assert encode_planar_code(decoded) == data


def test_planar_code_layout(dodecahedron):
    data = encode_planar_code([dodecahedron])
    assert data.startswith(b">>planar_code<<")
    assert data[HEADER] == 20
    # 20 lists of three 1-based neighbors plus a terminator each
    assert len(data) == HEADER + 1 + 20 * 4
    assert data[HEADER + 4] == 0


def test_header_only_is_empty_stream():
    assert parse_planar_code(PLANAR_CODE_HEADER) == []


def test_missing_header_offset_zero(dodecahedron):
    data = encode_planar_code([dodecahedron])[HEADER:]
    with pytest.raises(PlanarCodeError) as excinfo:
        parse_planar_code(data)
    assert excinfo.value.offset == 0


def test_truncated_stream(dodecahedron):
    data = encode_planar_code([dodecahedron])
    with pytest.raises(PlanarCodeError, match="truncated"):
        parse_planar_code(data[:-5])


def test_index_out_of_range(dodecahedron):
    data = bytearray(encode_planar_code([dodecahedron]))
    data[HEADER + 1] = 200
    with pytest.raises(PlanarCodeError) as excinfo:
        parse_planar_code(bytes(data))
    assert excinfo.value.offset == HEADER + 1


def test_missing_terminator(dodecahedron):
    data = bytearray(encode_planar_code([dodecahedron]))
    terminator = HEADER + 1 + 3
    data[terminator] = 5
    with pytest.raises(PlanarCodeError, match="terminator") as excinfo:
        parse_planar_code(bytes(data))
    assert excinfo.value.offset == terminator


def test_non_fullerene_needs_validation_off():
    cube = FullereneGraph.from_rotation(rotation_from_networkx(nx.cubical_graph()), name="cube")
    data = encode_planar_code([cube])
    with pytest.raises(PlanarCodeError):
        parse_planar_code(data)
    assert parse_planar_code(data, validate=False)[0].n == 8


def test_large_graph_refused():
    big = generate_nanotube(24)
    assert big.n == 260
    with pytest.raises(GraphFormatError):
        encode_planar_code([big])


def test_json_single_and_many(dodecahedron, c30):
    single = json.loads(dumps_json([dodecahedron]))
    assert single["n"] == 20
    assert len(single["rotation"]) == 20

    many = loads_json(dumps_json([dodecahedron, c30]))
    assert [g.rotation for g in many] == [dodecahedron.rotation, c30.rotation]
    assert many[0].name == dodecahedron.name


def test_json_errors():
    with pytest.raises(GraphFormatError):
        loads_json("{not json")
    with pytest.raises(GraphFormatError):
        loads_json(json.dumps({"n": 3, "rotation": [[1], [0]]}))


def test_store_detects_format(tmp_path, corpus):
    pc = write_graphs(tmp_path / "corpus.pc", corpus, "planar_code")
    js = write_graphs(tmp_path / "corpus.json", corpus, "json")
    from_pc = read_graphs(pc)
    from_js = read_graphs(js)
    assert [g.rotation for g in from_pc] == [g.rotation for g in from_js]
    assert from_pc[0].name == "corpus#0"
    assert from_js[0].name == corpus[0].name


def test_store_rejects_non_fullerene_json(tmp_path):
    cube = FullereneGraph.from_rotation(rotation_from_networkx(nx.cubical_graph()), name="cube")
    path = write_graphs(tmp_path / "cube.json", [cube], "json")
    with pytest.raises(GraphFormatError):
        read_graphs(path)
    assert read_graphs(path, validate=False)[0].name == "cube"


def test_store_unknown_format(tmp_path, dodecahedron):
    with pytest.raises(GraphFormatError):
        write_graphs(tmp_path / "x.txt", [dodecahedron], "graph6")


def test_json_empty_list(tmp_path):
    assert json.loads(dumps_json([])) == []
    assert loads_json("[]") == []
    path = write_graphs(tmp_path / "empty.json", [], "json")
    assert read_graphs(path) == []
