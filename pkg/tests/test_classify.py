import pytest

from conftest import face_with_vertices
from fullcycle.proof import (
    CycleState,
    FaceClass,
    check_max_two_whites_per_face,
    check_no_white_p3,
    check_no_white_pentagon,
    classify_pattern,
    color,
    longest_cycle_exact,
    pattern_catalogue,
    run_lemma_checks,
)
from fullcycle.proof.classify import canonical_word, classify_all

# 17-cycle on the dodecahedron missing 0, 1 and 18; 0 and 1 share two pentagons
Z_ORDER = [7, 2, 3, 4, 9, 13, 8, 12, 17, 16, 15, 19, 14, 5, 10, 6, 11]
# 26-cycle on C30 missing 6, 11, 16 (a white path on one hexagon) and 28
H_ORDER = [26, 21, 17, 12, 7, 2, 1, 0, 4, 3, 8, 13, 9, 14, 5, 10, 15, 20, 25, 29, 24, 19, 23, 18, 22, 27]


@pytest.fixture(scope="module")
def z_cycle():
    return CycleState.from_order(Z_ORDER)


@pytest.fixture(scope="module")
def h_cycle():
    return CycleState.from_order(H_ORDER)


def test_hamiltonian_coloring_is_all_black(dodecahedron):
    c = longest_cycle_exact(dodecahedron).cycle
    coloring = color(dodecahedron, c)
    assert coloring.white_count == 0
    assert coloring.faces_of_class(FaceClass.BLACK) == list(range(dodecahedron.f))
    assert run_lemma_checks(dodecahedron, coloring).ok


def test_z_coloring(dodecahedron, z_cycle):
    coloring = color(dodecahedron, z_cycle)
    assert coloring.white_vertices() == [0, 1, 18]
    assert sum(coloring.face_whites) == 9
    top = face_with_vertices(dodecahedron, [0, 1, 2, 3, 4])
    assert coloring.face_class[top] is FaceClass.WHITE


def test_z_white_pentagon(dodecahedron, z_cycle):
    coloring = color(dodecahedron, z_cycle)
    assert check_no_white_p3(dodecahedron, coloring).passed
    assert check_max_two_whites_per_face(dodecahedron, coloring).passed
    pentagon = check_no_white_pentagon(dodecahedron, coloring)
    assert not pentagon.passed
    assert set(pentagon.witness) == {0, 1}
    assert {0, 1} <= set(dodecahedron.faces[pentagon.face_id].boundary)


def test_h_white_path(c30, h_cycle):
    coloring = color(c30, h_cycle)
    assert coloring.white_vertices() == [6, 11, 16, 28]
    hexagon = face_with_vertices(c30, [10, 6, 11, 16, 20, 15])

    p3 = check_no_white_p3(c30, coloring)
    assert not p3.passed
    assert p3.witness == (6, 11, 16)
    assert p3.face_id == hexagon

    crowded = check_max_two_whites_per_face(c30, coloring)
    assert not crowded.passed
    assert crowded.face_id == hexagon
    assert coloring.face_class[hexagon] is FaceClass.OVERFULL
    assert hexagon in run_lemma_checks(c30, coloring).witness_faces()


def test_catalogue_size():
    assert len(pattern_catalogue()) == 14
    assert len(pattern_catalogue(include_facial=True)) == 16
    assert sum(1 for w in pattern_catalogue() if len(w) == 10) == 5
    assert sum(1 for w in pattern_catalogue() if len(w) == 12) == 9


def test_canonical_word_ignores_rotation_and_reflection():
    vertices = list("BWBBB")
    edges = list("--==-")
    base = canonical_word(vertices, edges)
    for shift in range(5):
        assert canonical_word(vertices[shift:] + vertices[:shift], edges[shift:] + edges[:shift]) == base
    # reversing the walk pairs vertex j with edge j-1
    rev_vertices = vertices[::-1]
    rev_edges = [edges[(len(edges) - 2 - j) % len(edges)] for j in range(len(edges))]
    assert canonical_word(rev_vertices, rev_edges) == base


def test_hamiltonian_patterns_in_catalogue(c30):
    c = longest_cycle_exact(c30).cycle
    coloring = color(c30, c)
    patterns = classify_all(c30, coloring, c)
    assert all(p.in_catalogue and p.lemma_consistent for p in patterns)


def test_white_pentagon_pattern_flagged(dodecahedron, z_cycle):
    coloring = color(dodecahedron, z_cycle)
    top = dodecahedron.faces[face_with_vertices(dodecahedron, [0, 1, 2, 3, 4])]
    pattern = classify_pattern(top, coloring, z_cycle)
    assert pattern.in_catalogue
    assert not pattern.lemma_consistent


def test_white_path_pattern_outside_catalogue(c30, h_cycle):
    coloring = color(c30, h_cycle)
    hexagon = c30.faces[face_with_vertices(c30, [10, 6, 11, 16, 20, 15])]
    pattern = classify_pattern(hexagon, coloring, h_cycle)
    assert not pattern.in_catalogue
    assert pattern.canonical_id is None


def test_patterns_survive_relabeling(c30, h_cycle):
    perm = [(v * 7) % c30.n for v in range(c30.n)]
    relabeled = c30.relabel(perm)
    moved = CycleState.from_order([perm[v] for v in h_cycle.order])
    before = sorted(p.canonical for p in classify_all(c30, color(c30, h_cycle), h_cycle))
    after = sorted(p.canonical for p in classify_all(relabeled, color(relabeled, moved), moved))
    assert before == after


def test_overfull_pentagon_left_to_max_two_check(c30):
    c = longest_cycle_exact(c30, {0, 1, 2}).cycle
    coloring = color(c30, c)
    top = face_with_vertices(c30, [0, 1, 2, 3, 4])
    assert coloring.face_whites[top] >= 3
    assert coloring.face_class[top] is FaceClass.OVERFULL

    assert not check_max_two_whites_per_face(c30, coloring).passed
    pentagon = check_no_white_pentagon(c30, coloring)
    assert pentagon.face_id != top
    if not pentagon.passed:
        assert len(pentagon.witness) == 2
        assert coloring.face_whites[pentagon.face_id] == 2
