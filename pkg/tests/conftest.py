import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from fullcycle.graphs.generators import generate_buckyball, generate_nanotube


@pytest.fixture(scope="session")
def dodecahedron():
    return generate_nanotube(0)


@pytest.fixture(scope="session")
def c30():
    return generate_nanotube(1)


@pytest.fixture(scope="session")
def c40():
    return generate_nanotube(2)


@pytest.fixture(scope="session")
def buckyball():
    return generate_buckyball()


def face_with_vertices(g, vertices):
    """Id of the face whose boundary is exactly the given vertex set."""
    target = set(vertices)
    return next(face.id for face in g.faces if set(face.boundary) == target)
