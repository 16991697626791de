"""Unit tests for diagram_core.py.

These tests validate the diagram data model and its transforms, including:
    - GaussDiagram, Shadow, ArcDiagram: validation, positions, edges
    - reverse, mirror, shadow: Orientation and crossing-information transforms
    - assign_state, assign_state_mask, crossing_bits: Shadow states
    - crossing_change, relabel: Single-crossing flips and id normalisation
    - PlanarCurve: validation, rotation system and face tracing
    - reverse_curve, mirror_curve, rotate_curve, reverse_based_curve

Edge cases tested:
    - The empty (n = 0) diagram and circle
    - Crossings passed twice Over, or only once
    - Unknown crossings and out-of-range edges
    - Sequences that cannot be drawn in the plane
"""

import pytest

from warpknot.diagram_core import (
    ArcDiagram,
    BasedPlanarCurve,
    Chirality,
    GaussDiagram,
    Passage,
    PlanarCurve,
    Shadow,
    Side,
    Strand,
    assign_state,
    assign_state_mask,
    crossing_bits,
    crossing_change,
    mirror,
    mirror_curve,
    relabel,
    reverse,
    reverse_based_curve,
    reverse_curve,
    rotate_curve,
    shadow,
)
from warpknot.exceptions import (
    BadOuterFaceError,
    DiagramValidationError,
    EdgeIndexError,
    LengthMismatchError,
    NotPlanarError,
    UnknownCrossingError,
)
from warpknot.gauss_codes import parse_gauss_code, parse_planar_curve

O, U = Strand.OVER, Strand.UNDER


@pytest.fixture
def one_bridge_trefoil():
    """The one-bridge trefoil diagram."""
    return parse_gauss_code("O1 O2 O3 U1 U2 U3")


@pytest.fixture
def lemniscate():
    """Figure-eight curve with one lobe unbounded side up."""
    return PlanarCurve((1, 1), (Chirality.L,), (1, Side.LEFT))


def test_enum_flips():
    """Test the involutions on strands, sides and flags."""
    assert Strand.OVER.flipped() is Strand.UNDER
    assert Side.LEFT.opposite() is Side.RIGHT
    assert Chirality.R.flipped() is Chirality.L
    assert str(Passage(3, Strand.UNDER)) == "U3"


def test_gauss_diagram_basics(one_bridge_trefoil):
    """Test counts, positions and edge validation."""
    D = one_bridge_trefoil
    assert D.n == 3
    assert D.num_edges == 6
    assert list(D.crossings) == [1, 2, 3]
    assert D.positions(2) == (1, 4)
    assert D.over_position(2) == 1
    assert D.under_position(2) == 4
    assert D.over_flags() == (True, True, True, False, False, False)
    assert D.check_edge(5) == 5


def test_gauss_diagram_lookup_errors(one_bridge_trefoil):
    """Test unknown crossings and bad edges raise the typed errors."""
    with pytest.raises(UnknownCrossingError):
        one_bridge_trefoil.positions(4)
    with pytest.raises(KeyError):
        one_bridge_trefoil.over_position(0)
    with pytest.raises(EdgeIndexError):
        one_bridge_trefoil.check_edge(6)
    with pytest.raises(IndexError):
        one_bridge_trefoil.check_edge(-1)


@pytest.mark.parametrize(
    "passages, message",
    [
        ((Passage(1, O), Passage(1, O)), "once Over and once Under"),
        ((Passage(1, O),), "appears 1 times"),
        ((Passage(2, O), Passage(2, U)), "must be 1..1"),
    ],
)
def test_gauss_diagram_validation(passages, message):
    """Test malformed passage sequences are rejected."""
    with pytest.raises(DiagramValidationError, match=message):
        GaussDiagram(passages)


def test_empty_diagram():
    """Test the crossingless diagram has one edge and renders as '-'."""
    D = GaussDiagram(())
    assert D.n == 0
    assert D.num_edges == 1
    assert str(D) == "-"
    assert str(Shadow(())) == "-"


def test_arc_diagram():
    """Test arcs have 2n + 1 edges and reject repeated strands."""
    S = ArcDiagram((Passage(1, O), Passage(1, U)))
    assert S.n == 1
    assert S.num_edges == 3
    with pytest.raises(DiagramValidationError):
        ArcDiagram((Passage(1, U), Passage(1, U)))


def test_reverse_and_mirror(one_bridge_trefoil):
    """Test reversal reverses the sequence and mirroring swaps strands."""
    D = one_bridge_trefoil
    assert str(reverse(D)) == "U3 U2 U1 O3 O2 O1"
    assert reverse(reverse(D)) == D
    assert str(mirror(D)) == "U1 U2 U3 O1 O2 O3"
    assert mirror(mirror(D)) == D


def test_shadow(one_bridge_trefoil):
    """Test forgetting over/under keeps the crossing sequence."""
    assert shadow(one_bridge_trefoil) == Shadow((1, 2, 3, 1, 2, 3))
    assert Shadow((1, 2, 1, 2)).first_visit_flags() == (True, True, False, False)


@pytest.mark.parametrize(
    "choice, expected",
    [
        ([True, True], "O1 O2 U1 U2"),
        ([True, False], "O1 U2 U1 O2"),
        ([False, False], "U1 U2 O1 O2"),
    ],
)
def test_assign_state(choice, expected):
    """Test each choice bit picks the strand of the first visit."""
    assert str(assign_state(Shadow((1, 2, 1, 2)), choice)) == expected


def test_assign_state_mask_and_bits():
    """Test masks select bit k - 1 for crossing k and crossing_bits inverts."""
    P = Shadow((1, 2, 1, 2))
    assert str(assign_state_mask(P, 0b01)) == "O1 U2 U1 O2"
    for mask in range(4):
        D = assign_state_mask(P, mask)
        assert assign_state(P, crossing_bits(D)) == D


def test_assign_state_length_mismatch():
    """Test a short choice vector is rejected."""
    with pytest.raises(LengthMismatchError):
        assign_state(Shadow((1, 2, 1, 2)), [True])


def test_crossing_change(one_bridge_trefoil):
    """Test only the chosen crossing flips."""
    changed = crossing_change(one_bridge_trefoil, 1)
    assert str(changed) == "U1 O2 O3 O1 U2 U3"
    assert crossing_change(changed, 1) == one_bridge_trefoil
    with pytest.raises(UnknownCrossingError):
        crossing_change(one_bridge_trefoil, 9)


def test_relabel():
    """Test ids are renumbered in order of first appearance."""
    assert relabel([3, 1, 3, 1]) == {3: 1, 1: 2}


def test_planar_curve_rotation_system(lemniscate):
    """Test the counterclockwise order and traced faces of the lemniscate."""
    C = lemniscate
    assert C.n == 1
    assert C.flag(1) is Chirality.L
    assert C.ccw_order(1) == ((1, True), (0, True), (1, False), (0, False))
    faces = {frozenset(face) for face in C.trace_faces()}
    assert faces == {
        frozenset({(0, Side.LEFT)}),
        frozenset({(1, Side.RIGHT)}),
        frozenset({(1, Side.LEFT), (0, Side.RIGHT)}),
    }
    assert C.shadow() == Shadow((1, 1))


def test_circle_has_two_faces():
    """Test the embedded circle traces its inside and outside."""
    C = PlanarCurve((), (), (0, Side.RIGHT))
    assert C.num_edges == 1
    assert len(C.trace_faces()) == 2


def test_planar_curve_validation():
    """Test flag counts, outer markers and planarity are enforced."""
    with pytest.raises(DiagramValidationError, match="chirality flags"):
        PlanarCurve((1, 1), ())
    with pytest.raises(BadOuterFaceError):
        PlanarCurve((1, 1), (Chirality.L,), (2, Side.LEFT))
    for flags in [(Chirality.L, Chirality.L), (Chirality.L, Chirality.R)]:
        with pytest.raises(NotPlanarError):
            PlanarCurve((1, 2, 1, 2), flags)


def test_based_curve_checks_edge(lemniscate):
    """Test the base edge must exist."""
    with pytest.raises(EdgeIndexError):
        BasedPlanarCurve(lemniscate, 5)


def test_reverse_curve(lemniscate):
    """Test reversal flips every flag and maps the outer dart."""
    reversed_curve = reverse_curve(lemniscate)
    assert reversed_curve.chirality == (Chirality.R,)
    assert reversed_curve.outer == (1, Side.RIGHT)
    assert reverse_curve(reversed_curve) == lemniscate


def test_reverse_based_curve():
    """Test the base edge follows the reversed edge numbering."""
    C = parse_planar_curve("1 2 3 1R 2L 3R\nOUTER 0 RIGHT")
    assert reverse_based_curve(BasedPlanarCurve(C, 0)).base_edge == 4
    assert reverse_based_curve(BasedPlanarCurve(C, 4)).base_edge == 0


def test_mirror_curve(lemniscate):
    """Test mirroring flips flags and swaps the outer side."""
    mirrored = mirror_curve(lemniscate)
    assert mirrored.chirality == (Chirality.R,)
    assert mirrored.outer == (1, Side.RIGHT)


def test_rotate_curve(lemniscate):
    """Test rotating the start flips swapped crossings and shifts edges."""
    rotated = rotate_curve(lemniscate, 1)
    assert rotated.chirality == (Chirality.R,)
    assert rotated.outer == (0, Side.LEFT)
    assert rotate_curve(lemniscate, 2) == lemniscate
