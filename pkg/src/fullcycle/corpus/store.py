"""Reading and writing graph files (planar_code or JSON, detected by header)."""

from __future__ import annotations

from pathlib import Path
from typing import List, Sequence, Union

from ..config import PLANAR_CODE_HEADER, logger
from ..exceptions import GraphFormatError
from ..graphs.embedding import FullereneGraph
from ..graphs.formats import dumps_json, encode_planar_code, loads_json, parse_planar_code
from ..graphs.validation import validate_fullerene

PathLike = Union[str, Path]


def read_graphs(path: PathLike, validate: bool = True) -> List[FullereneGraph]:
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise GraphFormatError(f"Cannot read {path}: {e}") from e

    if data.startswith(PLANAR_CODE_HEADER):
        graphs = parse_planar_code(data, validate=validate)
    else:
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise GraphFormatError(f"{path} is neither planar_code nor UTF-8 JSON") from e
        graphs = loads_json(text)
        if validate:
            for graph in graphs:
                report = validate_fullerene(graph)
                if not report.ok:
                    raise GraphFormatError(f"{graph.name} is not a fullerene (failed: {', '.join(report.failed_names())})")

    stem = path.stem
    named = [
        g if g.name and not g.name.startswith(("planar_code#", "json#"))
        else FullereneGraph(g.rotation, g.faces, f"{stem}#{i}" if len(graphs) > 1 else stem)
        for i, g in enumerate(graphs)
    ]
    logger.info(f"Loaded {len(named)} graph(s) from {path}")
    return named


def write_graphs(path: PathLike, graphs: Sequence[FullereneGraph], fmt: str = "planar_code") -> Path:
    path = Path(path)
    if fmt == "planar_code":
        payload = encode_planar_code(graphs)
    elif fmt == "json":
        payload = dumps_json(list(graphs)).encode("utf-8")
    else:
        raise GraphFormatError(f"Unknown graph format: {fmt}")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(payload)
    logger.info(f"Wrote {len(graphs)} graph(s) to {path} ({fmt}, {len(payload)} bytes)")
    return path
