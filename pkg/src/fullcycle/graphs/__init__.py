"""Fullerene graphs: embeddings, generators, formats and structural validation."""

from .embedding import Face, FullereneGraph, edge_key, rotation_from_networkx, trace_faces
from .formats import dumps_json, encode_planar_code, loads_json, parse_planar_code
from .generators import generate_buckyball, generate_dodecahedron, generate_nanotube
from .validation import CheckResult, ValidationReport, has_adjacent_pentagons, validate_fullerene

__all__ = [
    "Face",
    "FullereneGraph",
    "edge_key",
    "rotation_from_networkx",
    "trace_faces",
    "dumps_json",
    "encode_planar_code",
    "loads_json",
    "parse_planar_code",
    "generate_buckyball",
    "generate_dodecahedron",
    "generate_nanotube",
    "CheckResult",
    "ValidationReport",
    "has_adjacent_pentagons",
    "validate_fullerene",
]
