"""Faces, colourings and canonical orientations of plane curves.

Faces come from the rotation system of a ``PlanarCurve``; the face adjacency
graph is a networkx MultiGraph with one edge per curve edge (keyed by edge
index). Colours, winding labels and Seifert regions are all propagated over
that graph.

The induced alternating diagram uses one fixed convention,
``OVER_ON_BLACK_LEFT``: a passage is Over exactly when the face on the left of
the edge leaving it is Black. This is the convention under which a positive
kink whose lobe sits inside a Black face keeps the diagram alternating.

Functions:
    - compute_faces: Trace faces and build the adjacency graph.
    - checkerboard: Proper 2-colouring with the unbounded face White.
    - sphere_black_majority_coloring: The S^2 colouring with more Black faces.
    - induced_alternating: Alternating diagram read off the colouring.
    - crossing_sign: Right-hand sign of a crossing.
    - winding_labels: Face labels rising by one across each edge, right to left.
    - seifert_circles: Circles of the oriented smoothing, with directions.
    - winding_and_rotation: Labels and rotation number together.
    - rotation_number: Signed count of counterclockwise Seifert circles.
    - insert_positive_kink: Add a positive curl on the Black side of an edge.
    - orient_even_warping, orient_even_rotation: Canonical orientations for
      an even number of crossings.
    - orient_odd_warping, orient_odd_black_right: Canonical orientations of a
      based curve with an odd number of crossings, in the plane or on S^2.
    - oriented_curve: The curve traversed with a chosen orientation.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Optional, Tuple

import networkx as nx

from .diagram_core import (
    BasedPlanarCurve,
    Chirality,
    Dart,
    GaussDiagram,
    Passage,
    PlanarCurve,
    Side,
    Strand,
    reverse,
    reverse_curve,
    shadow,
    with_outer,
)
from .exceptions import (
    BadOuterFaceError,
    DiagramValidationError,
    EvenCrossingNumberError,
    InternalInconsistencyError,
    NoBlackSideError,
    NoCrossingsError,
    NotBipartiteError,
    NotPlanarError,
    OddCrossingNumberError,
    TieBreakError,
    ZeroRotationError,
)
from .warping import classify, diagram_warping_degree

logger = logging.getLogger(__name__)

OVER_ON_BLACK_LEFT = True


class Color(Enum):
    """Checkerboard colour of a face."""

    BLACK = "Black"
    WHITE = "White"


@dataclass(frozen=True)
class FaceStructure:
    """Faces of a plane curve and their adjacency.

    Attributes:
        curve (PlanarCurve): The traced curve.
        faces (tuple): Each face as a cycle of (edge, side) darts.
        outer_face (int | None): Id of the unbounded face; None on the sphere.
        adjacency (networkx.MultiGraph): Faces as nodes, one edge per curve edge
            between the faces on its two sides, keyed by edge index.
    """

    curve: PlanarCurve
    faces: Tuple[Tuple[Dart, ...], ...]
    outer_face: Optional[int]
    adjacency: nx.MultiGraph = field(compare=False, repr=False)
    face_of: Dict[Dart, int] = field(compare=False, repr=False)

    @property
    def num_faces(self) -> int:
        """Number of faces, n + 2."""
        return len(self.faces)

    def face(self, dart: Dart) -> int:
        """Id of the face containing ``dart``."""
        return self.face_of[dart]

    def left_face(self, edge: int) -> int:
        """Id of the face on the left of ``edge``."""
        return self.face_of[(edge, Side.LEFT)]

    def right_face(self, edge: int) -> int:
        """Id of the face on the right of ``edge``."""
        return self.face_of[(edge, Side.RIGHT)]


def compute_faces(C: PlanarCurve) -> FaceStructure:
    """Trace the faces of ``C``.

    Args:
        C (PlanarCurve): Curve; the outer marker is optional.

    Returns:
        FaceStructure: n + 2 faces with their adjacency graph.

    Raises:
        NotPlanarError: If the face count is not n + 2.

    Example:
        >>> compute_faces(parse_planar_curve("1 1L\\nOUTER 1 LEFT")).num_faces
        3
    """
    faces = C.trace_faces()
    if len(faces) != C.n + 2:
        raise NotPlanarError(f"Traced {len(faces)} faces, expected {C.n + 2}.")
    face_of = {dart: i for i, face in enumerate(faces) for dart in face}

    # One graph edge per curve edge, between its two sides
    adjacency = nx.MultiGraph()
    adjacency.add_nodes_from(range(len(faces)))
    for edge in range(C.num_edges):
        adjacency.add_edge(
            face_of[(edge, Side.LEFT)], face_of[(edge, Side.RIGHT)], key=edge
        )

    outer_face = None if C.outer is None else face_of[C.outer]
    return FaceStructure(C, faces, outer_face, adjacency, face_of)


def curve_faces_on_sphere(C: PlanarCurve) -> FaceStructure:
    """Trace the faces of ``C`` ignoring any outer marker."""
    structure = compute_faces(C)
    return FaceStructure(
        structure.curve,
        structure.faces,
        None,
        structure.adjacency,
        structure.face_of,
    )


@dataclass(frozen=True)
class Checkerboard:
    """Colour of every face, indexed by face id."""

    colors: Tuple[Color, ...]
    faces: FaceStructure = field(compare=False, repr=False)

    def color(self, face: int) -> Color:
        """Colour of face ``face``."""
        return self.colors[face]

    def color_of(self, dart: Dart) -> Color:
        """Colour of the face containing ``dart``."""
        return self.colors[self.faces.face(dart)]

    def count(self, color: Color) -> int:
        """Number of faces with colour ``color``."""
        return sum(1 for c in self.colors if c is color)


def _two_coloring(faces: FaceStructure) -> Dict[int, int]:
    try:
        parts = nx.bipartite.color(faces.adjacency)
    except nx.NetworkXError as err:
        raise NotBipartiteError(
            f"Face adjacency graph of {faces.curve.sequence} is not 2-colourable."
        ) from err
    for u, v in faces.adjacency.edges():
        if parts[u] == parts[v]:
            raise NotBipartiteError(f"Faces {u} and {v} share an edge and a colour.")
    return parts


def checkerboard(C: PlanarCurve, faces: FaceStructure = None) -> Checkerboard:
    """Colour the faces of ``C`` with the unbounded face White.

    Args:
        C (PlanarCurve): Curve with an outer marker.
        faces (FaceStructure, optional): Precomputed faces of ``C``.

    Returns:
        Checkerboard: The unique proper colouring with a White outer face.

    Raises:
        BadOuterFaceError: If ``C`` has no outer marker.
        NotBipartiteError: If no proper colouring exists.
    """
    if C.outer is None:
        raise BadOuterFaceError("Checkerboard colouring needs an outer face.")
    faces = faces or compute_faces(C)
    parts = _two_coloring(faces)
    white = parts[faces.outer_face]
    colors = tuple(
        Color.WHITE if parts[f] == white else Color.BLACK
        for f in range(faces.num_faces)
    )
    return Checkerboard(colors, faces)


def sphere_black_majority_coloring(C: PlanarCurve) -> Checkerboard:
    """Return the sphere colouring of ``C`` with more Black than White faces.

    With an odd crossing number there are n + 2 faces, an odd count, so the
    two proper colourings have different Black counts.

    Raises:
        EvenCrossingNumberError: If ``C`` has an even number of crossings.
    """
    if C.n % 2 == 0:
        raise EvenCrossingNumberError(
            f"Majority colouring needs an odd crossing number, got {C.n}."
        )
    faces = curve_faces_on_sphere(C)
    parts = _two_coloring(faces)
    zeros = sum(1 for f in range(faces.num_faces) if parts[f] == 0)
    black = 0 if 2 * zeros > faces.num_faces else 1
    colors = tuple(
        Color.BLACK if parts[f] == black else Color.WHITE
        for f in range(faces.num_faces)
    )
    return Checkerboard(colors, faces)


def induced_alternating(C: PlanarCurve, board: Checkerboard = None) -> GaussDiagram:
    """Return the alternating diagram on ``C`` fixed by its colouring.

    Passage p is Over exactly when the face on the left of edge p is Black.

    Raises:
        NoCrossingsError: If ``C`` has no crossings.
        InternalInconsistencyError: If the result is not alternating.

    Example:
        >>> C = parse_planar_curve("1 2 3 1R 2L 3R\\nOUTER 0 RIGHT")
        >>> str(induced_alternating(C))
        'O1 U2 O3 U1 O2 U3'
    """
    if C.n == 0:
        raise NoCrossingsError("The embedded circle has no induced diagram.")
    board = board or checkerboard(C)
    passages = []
    for p, c in enumerate(C.sequence):
        black_left = board.color_of((p, Side.LEFT)) is Color.BLACK
        over = black_left == OVER_ON_BLACK_LEFT
        passages.append(Passage(c, Strand.OVER if over else Strand.UNDER))
    try:
        D = GaussDiagram(tuple(passages))
    except DiagramValidationError as err:
        raise InternalInconsistencyError(
            f"Colouring of {C.sequence} gives a crossing two equal strands."
        ) from err
    if not classify(D).alternating:
        raise InternalInconsistencyError(f"Induced diagram {D} is not alternating.")
    return D


def _check_state_of(C: PlanarCurve, D: GaussDiagram) -> None:
    if shadow(D).passages != C.sequence:
        raise DiagramValidationError(
            f"Diagram {D} is not an over/under assignment on {C.sequence}."
        )


def _check_orientation(orientation: int) -> None:
    if orientation not in (1, -1):
        raise ValueError(f"Orientation must be +1 or -1, got {orientation!r}.")


def crossing_sign(C: PlanarCurve, orientation: int, D: GaussDiagram, c: int) -> int:
    """Return the right-hand sign of crossing ``c``.

    Looking along the Over strand, the sign is +1 when the Under strand passes
    from right to left. Reversing the whole curve reverses both strands, so
    ``orientation`` never changes the result.

    Args:
        C (PlanarCurve): Curve.
        orientation (int): +1 for the reference orientation, -1 for reversed.
        D (GaussDiagram): Over/under assignment on the reference sequence of C.
        c (int): Crossing id.

    Returns:
        int: +1 or -1.

    Raises:
        UnknownCrossingError: If ``c`` is not a crossing of ``C``.
    """
    _check_orientation(orientation)
    _check_state_of(C, D)
    first, second = C.positions(c)
    flag = C.flag(c)
    if flag is Chirality.L:
        positive = D.passages[second].is_over
    else:
        positive = D.passages[first].is_over
    return 1 if positive else -1


@dataclass(frozen=True)
class WindingLabels:
    """Integer label of every face, indexed by face id."""

    labels: Tuple[int, ...]
    faces: FaceStructure = field(compare=False, repr=False)

    def label(self, face: int) -> int:
        """Label of face ``face``."""
        return self.labels[face]


def _require_outer(C: PlanarCurve, what: str) -> None:
    if C.outer is None:
        raise BadOuterFaceError(f"{what} needs an outer face.")


def winding_labels(
    C: PlanarCurve, orientation: int = 1, faces: FaceStructure = None
) -> WindingLabels:
    """Label faces by winding number: outer 0, one more on the left of each edge.

    Raises:
        BadOuterFaceError: If ``C`` has no outer marker.
        InternalInconsistencyError: If two routes give a face different labels.
    """
    _check_orientation(orientation)
    _require_outer(C, "Winding labels")
    faces = faces or compute_faces(C)
    labels = {faces.outer_face: 0}
    for u, v in nx.bfs_edges(faces.adjacency, faces.outer_face):
        # Any curve edge between u and v fixes the step
        edge = next(iter(faces.adjacency[u][v]))
        step = orientation if faces.left_face(edge) == v else -orientation
        labels[v] = labels[u] + step
    for edge in range(C.num_edges):
        left, right = faces.left_face(edge), faces.right_face(edge)
        if labels[left] - labels[right] != orientation:
            raise InternalInconsistencyError(
                f"Winding labels across edge {edge} differ by "
                f"{labels[left] - labels[right]}."
            )
    return WindingLabels(tuple(labels[f] for f in range(faces.num_faces)), faces)


@dataclass(frozen=True)
class SeifertCircle:
    """One circle of the oriented smoothing.

    Attributes:
        edges (tuple[int, ...]): Curve edges on the circle, in traversal order.
        sign (int): +1 if counterclockwise under the reference orientation.
    """

    edges: Tuple[int, ...]
    sign: int


def smoothing_successor(C: PlanarCurve, edge: int) -> int:
    """Edge taken after ``edge`` when every crossing is smoothed.

    Arriving at a first visit leaves along the second visit's outgoing edge,
    and vice versa.
    """
    if C.n == 0:
        return 0
    p = (edge + 1) % C.num_edges
    first, second = C.positions(C.sequence[p])
    return second if p == first else first


def _seifert_regions(C: PlanarCurve, faces: FaceStructure) -> nx.utils.UnionFind:
    """Merge the faces joined by smoothing: the out-out and in-in corners."""
    regions = nx.utils.UnionFind(range(faces.num_faces))
    for c in range(1, C.n + 1):
        order = C.ccw_order(c)
        merged = []
        for k, half_edge in enumerate(order):
            following = order[(k + 1) % 4]
            if half_edge[1] == following[1]:
                merged.append(faces.face(C.leave(half_edge)))
        regions.union(*merged)
    return regions


def seifert_circles(
    C: PlanarCurve, faces: FaceStructure = None
) -> Tuple[SeifertCircle, ...]:
    """Smooth every crossing along the orientation and classify the circles.

    A circle is counterclockwise when the region on its left is cut off from
    the unbounded region once the circle is removed.

    Returns:
        tuple[SeifertCircle, ...]: Circles ordered by their smallest edge.

    Raises:
        BadOuterFaceError: If ``C`` has no outer marker.
        InternalInconsistencyError: If a circle's direction is not the same
            along all of its edges.
    """
    _require_outer(C, "Seifert circle directions")
    faces = faces or compute_faces(C)
    regions = _seifert_regions(C, faces)

    # Region graph: one edge per curve edge, keyed by edge index
    region_graph = nx.MultiGraph()
    region_graph.add_nodes_from({regions[f] for f in range(faces.num_faces)})
    for edge in range(C.num_edges):
        region_graph.add_edge(
            regions[faces.left_face(edge)], regions[faces.right_face(edge)], key=edge
        )
    outer = regions[faces.outer_face]

    circles, seen = [], set()
    for start in range(C.num_edges):
        if start in seen:
            continue
        edges = [start]
        seen.add(start)
        edge = smoothing_successor(C, start)
        while edge != start:
            edges.append(edge)
            seen.add(edge)
            edge = smoothing_successor(C, edge)

        cut = region_graph.copy()
        cut.remove_edges_from(
            (regions[faces.left_face(e)], regions[faces.right_face(e)], e)
            for e in edges
        )
        outside = nx.node_connected_component(cut, outer)
        verdicts = {regions[faces.left_face(e)] not in outside for e in edges}
        if len(verdicts) != 1:
            raise InternalInconsistencyError(
                f"Seifert circle through edges {edges} has no consistent direction."
            )
        circles.append(SeifertCircle(tuple(edges), 1 if verdicts.pop() else -1))
    return tuple(circles)


def rotation_number(C: PlanarCurve, orientation: int = 1) -> int:
    """Return the rotation number of ``C`` under ``orientation``.

    Example:
        >>> rotation_number(parse_planar_curve("-\\nOUTER 0 RIGHT"))
        1
    """
    _check_orientation(orientation)
    return orientation * sum(circle.sign for circle in seifert_circles(C))


def winding_and_rotation(
    C: PlanarCurve, orientation: int = 1
) -> Tuple[WindingLabels, int]:
    """Return the winding labels and rotation number under ``orientation``."""
    faces = compute_faces(C)
    labels = winding_labels(C, orientation, faces)
    circles = seifert_circles(C, faces)
    return labels, orientation * sum(circle.sign for circle in circles)


def black_side(board: Checkerboard, edge: int) -> Side:
    """Return the side of ``edge`` whose face is Black.

    Raises:
        NoBlackSideError: If neither side is Black.
    """
    if board.color_of((edge, Side.LEFT)) is Color.BLACK:
        return Side.LEFT
    if board.color_of((edge, Side.RIGHT)) is Color.BLACK:
        return Side.RIGHT
    raise NoBlackSideError(f"Neither side of edge {edge} borders a Black face.")


def insert_positive_kink(
    C: PlanarCurve, D: GaussDiagram, edge: int
) -> Tuple[PlanarCurve, GaussDiagram]:
    """Insert a positive one-crossing curl on ``edge``, lobe on its Black side.

    The new crossing n + 1 is visited at positions edge + 1 and edge + 2. Edges
    up to ``edge`` keep their index, the loop is edge + 1 and later edges move
    up by two. A lobe on the left takes flag L with the second visit Over; on
    the right, flag R with the first visit Over. Either way the sign is +1.

    Alternation is preserved only when ``D`` is the induced alternating diagram
    of ``C``. Any other alternating ``D``, such as its mirror, puts Over on the
    White side, and the curl then breaks alternation.

    Args:
        C (PlanarCurve): Curve with an outer marker and n >= 1.
        D (GaussDiagram): Over/under assignment on the sequence of ``C``.
        edge (int): Edge receiving the curl.

    Returns:
        tuple[PlanarCurve, GaussDiagram]: The curve and diagram with n + 1
        crossings.

    Raises:
        NoCrossingsError: If ``C`` has no crossings.
        NoBlackSideError: If neither side of ``edge`` is Black.
        InternalInconsistencyError: If the curl is not positive, the face count
            is not n + 3, or an induced diagram stops being induced.
    """
    if C.n == 0:
        raise NoCrossingsError("Kink insertion needs at least one crossing.")
    C.check_edge(edge)
    _check_state_of(C, D)
    board = checkerboard(C)
    side = black_side(board, edge)
    m = C.n + 1

    if side is Side.LEFT:
        flag, first, second = Chirality.L, Strand.UNDER, Strand.OVER
    else:
        flag, first, second = Chirality.R, Strand.OVER, Strand.UNDER
    sequence = C.sequence[: edge + 1] + (m, m) + C.sequence[edge + 1 :]
    passages = (
        D.passages[: edge + 1]
        + (Passage(m, first), Passage(m, second))
        + D.passages[edge + 1 :]
    )
    outer_edge, outer_side = C.outer
    outer = (outer_edge if outer_edge <= edge else outer_edge + 2, outer_side)

    try:
        kinked = PlanarCurve(sequence, C.chirality + (flag,), outer)
    except NotPlanarError as err:
        raise InternalInconsistencyError(
            f"Curl on edge {edge} of {C.sequence} broke planarity."
        ) from err
    D_kinked = GaussDiagram(passages)

    # Postconditions
    if len(kinked.trace_faces()) != C.n + 3:
        raise InternalInconsistencyError("Curl insertion did not add one face.")
    if crossing_sign(kinked, 1, D_kinked, m) != 1:
        raise InternalInconsistencyError(f"Curl on edge {edge} is not positive.")
    if D == induced_alternating(C, board) and D_kinked != induced_alternating(kinked):
        raise InternalInconsistencyError(
            f"Curl on edge {edge} does not keep {D} alternating."
        )
    return kinked, D_kinked


@dataclass(frozen=True)
class OrientationChoice:
    """A canonical orientation relative to the curve's reference orientation.

    Attributes:
        sign (int): +1 for the reference orientation, -1 for its reverse.
        method (str): ``warping``, ``rotation`` or ``black-right``.
    """

    sign: int
    method: str

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"Orientation sign must be +1 or -1, got {self.sign}.")


def oriented_curve(C: PlanarCurve, sign: int) -> PlanarCurve:
    """Return ``C`` traversed in the orientation ``sign``."""
    _check_orientation(sign)
    return C if sign == 1 else reverse_curve(C)


def _with_white_outer(C: PlanarCurve) -> PlanarCurve:
    """Put the unbounded face of a sphere curve in a White majority face.

    The plane colouring of the result equals the S^2 majority colouring.
    """
    if C.outer is not None:
        return C
    board = sphere_black_majority_coloring(C)
    white = board.colors.index(Color.WHITE)
    return with_outer(C, board.faces.faces[white][0])


def _warping_sign(D: GaussDiagram) -> int:
    d_forward = diagram_warping_degree(D)
    d_backward = diagram_warping_degree(reverse(D))
    if d_forward == d_backward:
        raise TieBreakError(
            f"{D} and its reverse both have warping degree {d_forward}."
        )
    return 1 if d_forward < d_backward else -1


def orient_even_warping(C: PlanarCurve) -> OrientationChoice:
    """Orient an even curve so its induced diagram has d(D) < d(-D).

    Raises:
        OddCrossingNumberError: If ``C`` has an odd number of crossings.
        NoCrossingsError: For the embedded circle.
        TieBreakError: If d(D) = d(-D).
    """
    if C.n % 2:
        raise OddCrossingNumberError(f"Expected an even crossing number, got {C.n}.")
    if C.n == 0:
        raise NoCrossingsError("The warping orientation needs at least two crossings.")
    sign = _warping_sign(induced_alternating(C))
    logger.debug("Warping orientation of %s: %+d", C.sequence, sign)
    return OrientationChoice(sign, "warping")


def orient_even_rotation(C: PlanarCurve) -> OrientationChoice:
    """Orient an even curve so its rotation number is positive.

    Raises:
        OddCrossingNumberError: If ``C`` has an odd number of crossings.
        ZeroRotationError: If the rotation number is 0.
    """
    if C.n % 2:
        raise OddCrossingNumberError(f"Expected an even crossing number, got {C.n}.")
    rot = rotation_number(C)
    if rot == 0:
        raise ZeroRotationError(f"Curve {C.sequence} has rotation number 0.")
    return OrientationChoice(1 if rot > 0 else -1, "rotation")


def orient_odd_warping(Cb: BasedPlanarCurve) -> OrientationChoice:
    """Orient an odd based curve through a positive curl at the base point.

    The curl turns the induced alternating diagram into an even one, whose
    warping orientation is pulled back to ``Cb``.

    A curve without an outer marker lies on S^2 and is coloured by
    ``sphere_black_majority_coloring``.

    Raises:
        EvenCrossingNumberError: If the curve has an even number of crossings.
        TieBreakError: If the curled diagram ties with its reverse.
    """
    C = Cb.curve
    if C.n % 2 == 0:
        raise EvenCrossingNumberError(f"Expected an odd crossing number, got {C.n}.")
    C = _with_white_outer(C)
    _, D_kinked = insert_positive_kink(C, induced_alternating(C), Cb.base_edge)
    return OrientationChoice(_warping_sign(D_kinked), "warping")


def orient_odd_black_right(Cb: BasedPlanarCurve) -> OrientationChoice:
    """Orient an odd based curve so the Black face lies right of the base point.

    On S^2 (no outer marker) the Black faces are those of the majority
    colouring.

    Raises:
        EvenCrossingNumberError: If the curve has an even number of crossings.
    """
    C = Cb.curve
    if C.n % 2 == 0:
        raise EvenCrossingNumberError(f"Expected an odd crossing number, got {C.n}.")
    C = _with_white_outer(C)
    side = black_side(checkerboard(C), Cb.base_edge)
    return OrientationChoice(1 if side is Side.RIGHT else -1, "black-right")
