"""planar_code and JSON interchange formats for embedded fullerene graphs."""

from __future__ import annotations

import json
from typing import Any, Dict, Iterable, List, Union

from ..config import PLANAR_CODE_HEADER, PLANAR_CODE_MAX_ORDER, logger
from ..exceptions import EmbeddingError, GraphFormatError, PlanarCodeError
from .embedding import FullereneGraph
from .validation import validate_fullerene

MAX_DEGREE = 3


def parse_planar_code(data: bytes, validate: bool = True) -> List[FullereneGraph]:
    """Decode a planar_code stream.

    Layout: the ASCII header, then per graph one byte n followed by each
    vertex's clockwise neighbor list as 1-based bytes closed by a 0 byte.
    With validate=True every decoded graph must pass validate_fullerene.
    """
    if not data.startswith(PLANAR_CODE_HEADER):
        raise PlanarCodeError("missing >>planar_code<< header", offset=0)

    graphs: List[FullereneGraph] = []
    pos = len(PLANAR_CODE_HEADER)
    while pos < len(data):
        start = pos
        n = data[pos]
        pos += 1
        if n == 0:
            raise PlanarCodeError("graph with zero vertices", offset=start)

        rotation = []
        for v in range(n):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise PlanarCodeError(f"truncated stream inside the list of vertex {v}", offset=pos)
                b = data[pos]
                if b == 0:
                    pos += 1
                    break
                if b > n:
                    raise PlanarCodeError(f"neighbor index {b} out of range 1..{n}", offset=pos)
                if len(nbrs) == MAX_DEGREE:
                    raise PlanarCodeError(
                        f"vertex {v} lists more than {MAX_DEGREE} neighbors (missing 0 terminator?)", offset=pos
                    )
                nbrs.append(b - 1)
                pos += 1
            rotation.append(tuple(nbrs))

        name = f"planar_code#{len(graphs)}"
        try:
            graph = FullereneGraph.from_rotation(rotation, name=name)
        except EmbeddingError as e:
            raise PlanarCodeError(f"graph {len(graphs)} has an invalid embedding: {e}", offset=start) from e

        if validate:
            report = validate_fullerene(graph)
            if not report.ok:
                raise PlanarCodeError(
                    f"graph {len(graphs)} is not a fullerene (failed: {', '.join(report.failed_names())})",
                    offset=start,
                )
        graphs.append(graph)

    logger.debug(f"Parsed {len(graphs)} graphs from planar_code ({len(data)} bytes)")
    return graphs


def encode_planar_code(graphs: Iterable[FullereneGraph]) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER)
    for graph in graphs:
        if graph.n > PLANAR_CODE_MAX_ORDER:
            raise GraphFormatError(
                f"{graph.name or 'graph'} has {graph.n} vertices; planar_code is limited to {PLANAR_CODE_MAX_ORDER}, use JSON"
            )
        out.append(graph.n)
        for nbrs in graph.rotation:
            out.extend(u + 1 for u in nbrs)
            out.append(0)
    return bytes(out)


def graph_to_json(graph: FullereneGraph) -> Dict[str, Any]:
    return {"id": graph.name, "n": graph.n, "rotation": [list(nbrs) for nbrs in graph.rotation]}


def graph_from_json(payload: Dict[str, Any], default_name: str = "") -> FullereneGraph:
    try:
        n = int(payload["n"])
        rotation = payload["rotation"]
    except (KeyError, TypeError, ValueError) as e:
        raise GraphFormatError(f"JSON graph needs 'n' and 'rotation': {e}") from e
    if len(rotation) != n:
        raise GraphFormatError(f"JSON graph declares n={n} but lists {len(rotation)} rotations")
    try:
        return FullereneGraph.from_rotation(rotation, name=str(payload.get("id", default_name)))
    except EmbeddingError as e:
        raise GraphFormatError(f"JSON graph {payload.get('id', default_name)!r}: {e}") from e


def dumps_json(graphs: List[FullereneGraph]) -> str:
    payload: Union[Dict[str, Any], List[Dict[str, Any]]]
    payload = graph_to_json(graphs[0]) if len(graphs) == 1 else [graph_to_json(g) for g in graphs]
    return json.dumps(payload, indent=2)


def loads_json(text: str) -> List[FullereneGraph]:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"invalid JSON: {e}") from e
    items = payload if isinstance(payload, list) else [payload]
    return [graph_from_json(item, default_name=f"json#{i}") for i, item in enumerate(items)]
