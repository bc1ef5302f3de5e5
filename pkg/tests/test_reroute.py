import pytest

from conftest import face_with_vertices
from fullcycle.exceptions import ConfigurationError, InternalConsistencyError
from fullcycle.proof import (
    CycleState,
    apply_move,
    bounded_local_reroute,
    face_segment_swap,
    improve_until_stable,
    longest_cycle_exact,
    verify_cycle,
)
from fullcycle.proof.datamodel import MoveKind, RerouteMove
from fullcycle.proof.reroute import cycle_from_edges, flagged_regions

Z = CycleState.from_order([7, 2, 3, 4, 9, 13, 8, 12, 17, 16, 15, 19, 14, 5, 10, 6, 11])
H = CycleState.from_order([26, 21, 17, 12, 7, 2, 1, 0, 4, 3, 8, 13, 9, 14, 5,
                           10, 15, 20, 25, 29, 24, 19, 23, 18, 22, 27])


@pytest.mark.parametrize("face_vertices", [[0, 1, 2, 3, 4], [0, 1, 6, 10, 5]])
def test_swap_on_white_pentagon(dodecahedron, face_vertices):
    face_id = face_with_vertices(dodecahedron, face_vertices)
    move = face_segment_swap(dodecahedron, Z, face_id)
    assert move is not None
    assert move.kind is MoveKind.SEGMENT_SWAP
    assert move.delta == 1
    longer = apply_move(dodecahedron, Z, move)
    assert longer.length == 18
    assert {0, 1} <= longer.vertex_set
    assert verify_cycle(dodecahedron, longer) == []


def test_swap_on_white_path_hexagon(c30):
    hexagon = face_with_vertices(c30, [10, 6, 11, 16, 20, 15])
    move = face_segment_swap(c30, H, hexagon)
    assert move.delta == 2
    assert len(move.removed) == 2
    assert len(move.added) == 4
    assert apply_move(c30, H, move).length == 28


def test_swap_respects_forbidden(c30):
    hexagon = face_with_vertices(c30, [10, 6, 11, 16, 20, 15])
    assert face_segment_swap(c30, H, hexagon, forbidden=frozenset({11})) is None


def test_local_reroute_on_white_path(c30):
    hexagon = face_with_vertices(c30, [10, 6, 11, 16, 20, 15])
    move = bounded_local_reroute(c30, H, (hexagon,), radius=1)
    assert move is not None
    assert move.kind is MoveKind.BOUNDED_LOCAL
    assert move.delta >= 2
    longer = apply_move(c30, H, move)
    assert longer.length == H.length + move.delta
    assert verify_cycle(c30, longer) == []


def test_hamiltonian_has_no_move(dodecahedron):
    c = longest_cycle_exact(dodecahedron).cycle
    assert all(face_segment_swap(dodecahedron, c, face.id) is None for face in dodecahedron.faces)
    assert bounded_local_reroute(dodecahedron, c, (0,), radius=2) is None
    assert improve_until_stable(dodecahedron, c, radius=1) == c
    assert flagged_regions(dodecahedron, c) == []


@pytest.mark.parametrize("radius", [-1, 4])
def test_radius_out_of_range(dodecahedron, radius):
    with pytest.raises(ConfigurationError):
        bounded_local_reroute(dodecahedron, Z, (0,), radius=radius)
    with pytest.raises(ConfigurationError):
        improve_until_stable(dodecahedron, Z, radius=radius)


def test_apply_move_checks_delta(dodecahedron):
    face_id = face_with_vertices(dodecahedron, [0, 1, 2, 3, 4])
    move = face_segment_swap(dodecahedron, Z, face_id)
    lying = RerouteMove(move.kind, move.region, move.removed, move.added, delta=5)
    with pytest.raises(InternalConsistencyError):
        apply_move(dodecahedron, Z, lying)


def test_apply_move_rejects_foreign_edges(dodecahedron):
    bogus = RerouteMove(MoveKind.SEGMENT_SWAP, (0,), frozenset({(0, 1)}), frozenset(), delta=0)
    with pytest.raises(InternalConsistencyError):
        apply_move(dodecahedron, Z, bogus)


def test_cycle_from_edges_rejects_two_cycles():
    triangle_a = {(0, 1), (1, 2), (0, 2)}
    triangle_b = {(3, 4), (4, 5), (3, 5)}
    with pytest.raises(InternalConsistencyError):
        cycle_from_edges(triangle_a | triangle_b)
    assert cycle_from_edges(triangle_a).order == (0, 1, 2)


def test_improve_until_stable(dodecahedron, c30):
    moves = []
    better = improve_until_stable(dodecahedron, Z, radius=1, moves=moves)
    assert better.length == 18
    assert moves and all(m.delta > 0 for m in moves)
    assert better.length == Z.length + sum(m.delta for m in moves)
    assert verify_cycle(dodecahedron, better) == []

    polished = improve_until_stable(c30, H, radius=1)
    assert polished.length >= 28
    assert verify_cycle(c30, polished) == []


def test_flagged_regions_lead_with_witnesses(c30):
    hexagon = face_with_vertices(c30, [10, 6, 11, 16, 20, 15])
    regions = flagged_regions(c30, H)
    assert (hexagon,) in regions[:3]
    assert len(regions) == len({r[0] for r in regions})


def test_improve_until_stable_recovers_hamiltonian(dodecahedron):
    # the 17-cycle misses 0, 1 and 18; a radius-2 ball relinks all three
    recovered = improve_until_stable(dodecahedron, Z, radius=2)
    assert recovered.length == 20
    assert verify_cycle(dodecahedron, recovered) == []
