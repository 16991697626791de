"""Data model and elementary transforms for knot diagrams and plane curves.

A knot diagram is handled as its Gauss sequence: a cyclic sequence of 2n
over/under passages. No embedding is required for the warping machinery, so
abstract (possibly non-realizable) sequences are accepted everywhere except
where a plane curve is asked for explicitly.

Conventions:
    - Edge i of a cyclic sequence runs from passage i to passage i + 1
      (indices mod 2n). An n = 0 diagram has a single edge 0.
    - A dart ``(edge, side)`` names one side of an edge relative to the
      sequence's (reference) orientation.
    - A plane curve stores, for each crossing, whether its second visit crosses
      the first-visit strand from left to right (``Chirality.L``) or right to
      left (``Chirality.R``).

Functions:
    - reverse: Reverse the orientation of a diagram.
    - mirror: Swap over and under at every crossing.
    - shadow: Forget over/under information.
    - assign_state: Build the state of a shadow selected by a choice vector.
    - crossing_bits: Recover the choice vector of a diagram (inverse of
      assign_state).
    - crossing_change: Swap over and under at one crossing.
    - reverse_curve, mirror_curve, rotate_curve, relabel_curve: Curve
      transforms that keep the embedding.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from .exceptions import (
    BadOuterFaceError,
    DiagramValidationError,
    EdgeIndexError,
    LengthMismatchError,
    NotPlanarError,
    UnknownCrossingError,
)


class Strand(Enum):
    """Which strand a passage travels along at its crossing."""

    OVER = "O"
    UNDER = "U"

    def flipped(self) -> "Strand":
        """Return the other strand."""
        return Strand.UNDER if self is Strand.OVER else Strand.OVER


class Side(Enum):
    """Side of an oriented edge."""

    LEFT = "LEFT"
    RIGHT = "RIGHT"

    def opposite(self) -> "Side":
        """Return the other side."""
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


class Chirality(Enum):
    """Direction in which the second visit crosses the first-visit strand."""

    L = "L"
    R = "R"

    def flipped(self) -> "Chirality":
        """Return the other chirality."""
        return Chirality.R if self is Chirality.L else Chirality.L


Dart = Tuple[int, Side]
HalfEdge = Tuple[int, bool]  # (passage index, leaves the crossing)


@dataclass(frozen=True)
class Passage:
    """One encounter of the curve with a crossing."""

    crossing: int
    strand: Strand

    @property
    def is_over(self) -> bool:
        """True for an over-crossing passage."""
        return self.strand is Strand.OVER

    def flipped(self) -> "Passage":
        """Return the passage with over/under swapped."""
        return Passage(self.crossing, self.strand.flipped())

    def __str__(self) -> str:
        return f"{self.strand.value}{self.crossing}"


def _check_pairing(crossings: Sequence[int], what: str) -> int:
    """Check that ids are exactly 1..n, each used twice; return n."""
    counts: Dict[int, int] = {}
    for c in crossings:
        counts[c] = counts.get(c, 0) + 1
    bad = sorted(c for c, k in counts.items() if k != 2)
    if bad:
        raise DiagramValidationError(
            f"{what}: crossing {bad[0]} appears {counts[bad[0]]} times, expected 2."
        )
    n = len(counts)
    if set(counts) != set(range(1, n + 1)):
        raise DiagramValidationError(
            f"{what}: crossing ids must be 1..{n}, got {sorted(counts)}."
        )
    return n


def _positions_by_crossing(crossings: Sequence[int]) -> Dict[int, Tuple[int, int]]:
    """Map each crossing to (first index, second index) in sequence order."""
    seen: Dict[int, List[int]] = {}
    for i, c in enumerate(crossings):
        seen.setdefault(c, []).append(i)
    return {c: (pos[0], pos[1]) for c, pos in seen.items()}


@dataclass(frozen=True)
class GaussDiagram:
    """Oriented knot diagram as a cyclic sequence of over/under passages.

    Attributes:
        passages (tuple[Passage, ...]): The 2n passages in traversal order.

    Raises:
        DiagramValidationError: If a crossing id does not appear exactly twice,
            once Over and once Under, or ids are not 1..n.
    """

    passages: Tuple[Passage, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "passages", tuple(self.passages))
        _check_pairing([p.crossing for p in self.passages], "Gauss diagram")
        for c, (i, j) in self._positions.items():
            if self.passages[i].strand is self.passages[j].strand:
                raise DiagramValidationError(
                    f"Gauss diagram: crossing {c} must be passed once Over and "
                    f"once Under, got {self.passages[i].strand.name} twice."
                )

    @cached_property
    def _positions(self) -> Dict[int, Tuple[int, int]]:
        return _positions_by_crossing([p.crossing for p in self.passages])

    @property
    def n(self) -> int:
        """Crossing count c(D)."""
        return len(self.passages) // 2

    @property
    def num_edges(self) -> int:
        """Number of edges: 2n, or 1 for the crossingless circle."""
        return max(1, len(self.passages))

    @property
    def crossings(self) -> range:
        """Crossing ids 1..n."""
        return range(1, self.n + 1)

    def positions(self, crossing: int) -> Tuple[int, int]:
        """Return (first, second) passage indices of ``crossing``.

        Raises:
            UnknownCrossingError: If the crossing does not occur.
        """
        try:
            return self._positions[crossing]
        except KeyError as err:
            raise UnknownCrossingError(
                f"Crossing {crossing} does not occur in a diagram with "
                f"{self.n} crossings."
            ) from err

    def over_position(self, crossing: int) -> int:
        """Index of the Over passage of ``crossing``."""
        i, j = self.positions(crossing)
        return i if self.passages[i].is_over else j

    def under_position(self, crossing: int) -> int:
        """Index of the Under passage of ``crossing``."""
        i, j = self.positions(crossing)
        return j if self.passages[i].is_over else i

    def check_edge(self, edge: int) -> int:
        """Validate an edge index and return it.

        Raises:
            EdgeIndexError: If ``edge`` is outside 0..num_edges - 1.
        """
        if not isinstance(edge, int) or not 0 <= edge < self.num_edges:
            raise EdgeIndexError(
                f"Edge index {edge!r} out of range for {self.num_edges} edges."
            )
        return edge

    def over_flags(self) -> Tuple[bool, ...]:
        """Return the Over/Under flag of every passage as booleans."""
        return tuple(p.is_over for p in self.passages)

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.passages) if self.passages else "-"


@dataclass(frozen=True)
class Shadow:
    """Knot projection: a Gauss sequence with over/under forgotten."""

    passages: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "passages", tuple(int(c) for c in self.passages))
        _check_pairing(self.passages, "Shadow")

    @cached_property
    def _positions(self) -> Dict[int, Tuple[int, int]]:
        return _positions_by_crossing(self.passages)

    @property
    def n(self) -> int:
        """Crossing count c(P)."""
        return len(self.passages) // 2

    @property
    def num_edges(self) -> int:
        """Number of edges: 2n, or 1 for the crossingless circle."""
        return max(1, len(self.passages))

    def positions(self, crossing: int) -> Tuple[int, int]:
        """Return (first, second) occurrence indices of ``crossing``."""
        try:
            return self._positions[crossing]
        except KeyError as err:
            raise UnknownCrossingError(
                f"Crossing {crossing} does not occur in the shadow."
            ) from err

    def first_visit_flags(self) -> Tuple[bool, ...]:
        """True at the first occurrence of each crossing, False at the second."""
        return tuple(self._positions[c][0] == i for i, c in enumerate(self.passages))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.passages) if self.passages else "-"


@dataclass(frozen=True)
class ArcDiagram:
    """Spatial arc diagram: a linear (non-cyclic) passage sequence.

    An arc with n crossings has 2n + 1 edges; edge j precedes passage j.
    """

    passages: Tuple[Passage, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "passages", tuple(self.passages))
        _check_pairing([p.crossing for p in self.passages], "Arc diagram")
        positions = _positions_by_crossing([p.crossing for p in self.passages])
        for c, (i, j) in positions.items():
            if self.passages[i].strand is self.passages[j].strand:
                raise DiagramValidationError(
                    f"Arc diagram: crossing {c} must be passed once Over and once "
                    f"Under."
                )

    @property
    def n(self) -> int:
        """Crossing count."""
        return len(self.passages) // 2

    @property
    def num_edges(self) -> int:
        """Number of edges, 2n + 1."""
        return len(self.passages) + 1

    def __str__(self) -> str:
        return " ".join(str(p) for p in self.passages) if self.passages else "-"


@dataclass(frozen=True)
class PlanarCurve:
    """Closed transversely intersected plane curve.

    The embedding is pinned by the Gauss sequence plus one chirality flag per
    crossing. The unbounded region, when known, is the face on side
    ``outer[1]`` of edge ``outer[0]``; ``outer=None`` describes a curve on the
    sphere.

    Attributes:
        sequence (tuple[int, ...]): Crossing ids in traversal order.
        chirality (tuple[Chirality, ...]): Flag of crossing c at index c - 1.
        outer (tuple[int, Side] | None): Dart lying in the unbounded face.

    Raises:
        DiagramValidationError: On a malformed sequence or flag count.
        NotPlanarError: If the rotation system does not yield n + 2 faces.
        BadOuterFaceError: If ``outer`` names an edge out of range.
    """

    sequence: Tuple[int, ...] = ()
    chirality: Tuple[Chirality, ...] = ()
    outer: Optional[Tuple[int, Side]] = None

    def __post_init__(self):
        object.__setattr__(self, "sequence", tuple(int(c) for c in self.sequence))
        object.__setattr__(self, "chirality", tuple(self.chirality))
        n = _check_pairing(self.sequence, "Plane curve")
        if len(self.chirality) != n:
            raise DiagramValidationError(
                f"Plane curve: expected {n} chirality flags, got "
                f"{len(self.chirality)}."
            )
        if self.outer is not None:
            edge, side = self.outer
            if not isinstance(side, Side) or not 0 <= edge < self.num_edges:
                raise BadOuterFaceError(
                    f"Outer marker {self.outer!r} does not name a side of one of "
                    f"the {self.num_edges} edges."
                )
        faces = len(self.trace_faces())
        if faces != n + 2:
            raise NotPlanarError(
                f"Plane curve {self.sequence} with flags "
                f"{''.join(f.value for f in self.chirality)} traces {faces} faces, "
                f"expected n + 2 = {n + 2}."
            )

    @property
    def n(self) -> int:
        """Crossing count c(C)."""
        return len(self.sequence) // 2

    @property
    def num_edges(self) -> int:
        """Number of edges: 2n, or 1 for the embedded circle."""
        return max(1, len(self.sequence))

    @cached_property
    def _positions(self) -> Dict[int, Tuple[int, int]]:
        return _positions_by_crossing(self.sequence)

    def positions(self, crossing: int) -> Tuple[int, int]:
        """Return (first visit, second visit) indices of ``crossing``."""
        try:
            return self._positions[crossing]
        except KeyError as err:
            raise UnknownCrossingError(
                f"Crossing {crossing} does not occur in the curve."
            ) from err

    def flag(self, crossing: int) -> Chirality:
        """Return the chirality flag of ``crossing``."""
        self.positions(crossing)
        return self.chirality[crossing - 1]

    def shadow(self) -> Shadow:
        """Return the curve's Gauss sequence as a shadow."""
        return Shadow(self.sequence)

    def check_edge(self, edge: int) -> int:
        """Validate an edge index and return it."""
        if not isinstance(edge, int) or not 0 <= edge < self.num_edges:
            raise EdgeIndexError(
                f"Edge index {edge!r} out of range for {self.num_edges} edges."
            )
        return edge

    # Rotation system

    def ccw_order(self, crossing: int) -> Tuple[HalfEdge, ...]:
        """Return the four half-edges at ``crossing`` in counter-clockwise order.

        With the first-visit strand pointing north, flag L sends the second
        strand west to east and flag R east to west.
        """
        a, b = self.positions(crossing)
        in1, out1, in2, out2 = (a, False), (a, True), (b, False), (b, True)
        if self.chirality[crossing - 1] is Chirality.L:
            return (out2, out1, in2, in1)
        return (in2, out1, out2, in1)

    @cached_property
    def _cw_next(self) -> Dict[HalfEdge, HalfEdge]:
        cw_next = {}
        for c in range(1, self.n + 1):
            order = self.ccw_order(c)
            for k, h in enumerate(order):
                cw_next[h] = order[k - 1]
        return cw_next

    def clockwise_next(self, half_edge: HalfEdge) -> HalfEdge:
        """Return the half-edge clockwise from ``half_edge`` at its crossing."""
        return self._cw_next[half_edge]

    def counterclockwise_next(self, half_edge: HalfEdge) -> HalfEdge:
        """Return the half-edge counter-clockwise from ``half_edge``."""
        position, _ = half_edge
        order = self.ccw_order(self.sequence[position])
        return order[(order.index(half_edge) + 1) % 4]

    def leave(self, half_edge: HalfEdge) -> Dart:
        """Dart traced when a face boundary leaves a crossing along ``half_edge``.

        Leaving along an outgoing half-edge walks its edge forwards (face on the
        left); leaving along an incoming one walks the previous edge backwards
        (face on that edge's right).
        """
        position, outgoing = half_edge
        if outgoing:
            return (position, Side.LEFT)
        return ((position - 1) % self.num_edges, Side.RIGHT)

    def arrive(self, dart: Dart) -> HalfEdge:
        """Half-edge through which a face boundary reaches the next crossing."""
        edge, side = dart
        if side is Side.LEFT:
            return ((edge + 1) % self.num_edges, False)
        return (edge, True)

    def next_dart(self, dart: Dart) -> Dart:
        """Next dart along the boundary of the face containing ``dart``."""
        return self.leave(self.clockwise_next(self.arrive(dart)))

    def trace_faces(self) -> Tuple[Tuple[Dart, ...], ...]:
        """Trace every face of the rotation system.

        Returns:
            tuple: Faces in order of their smallest dart (edge 0 LEFT first),
            each a cycle of darts keeping the face on the traversal's left.
        """
        if self.n == 0:
            return (((0, Side.LEFT),), ((0, Side.RIGHT),))
        faces = []
        visited = set()
        for edge in range(self.num_edges):
            for side in (Side.LEFT, Side.RIGHT):
                start = (edge, side)
                if start in visited:
                    continue
                face = []
                dart = start
                while dart not in visited:
                    visited.add(dart)
                    face.append(dart)
                    dart = self.next_dart(dart)
                faces.append(tuple(face))
        return tuple(faces)

    def __str__(self) -> str:
        from .gauss_codes import serialize_planar_curve

        return serialize_planar_curve(self)


@dataclass(frozen=True)
class BasedPlanarCurve:
    """Plane curve with a base point on edge ``base_edge``."""

    curve: PlanarCurve
    base_edge: int

    def __post_init__(self):
        self.curve.check_edge(self.base_edge)


# Diagram transforms


def reverse(D: GaussDiagram) -> GaussDiagram:
    """Reverse the orientation of a diagram.

    The passage sequence is reversed and flags kept. Passage k becomes passage
    2n - 1 - k, so edge i becomes edge (2n - 2 - i) mod 2n.

    Example:
        >>> str(reverse(parse_gauss_code("O1 O2 O3 U1 U2 U3")))
        'U3 U2 U1 O3 O2 O1'
    """
    return GaussDiagram(tuple(reversed(D.passages)))


def mirror(D: GaussDiagram) -> GaussDiagram:
    """Swap over and under at every crossing, keeping the sequence order."""
    return GaussDiagram(tuple(p.flipped() for p in D.passages))


def shadow(D: GaussDiagram) -> Shadow:
    """Forget the over/under information of a diagram."""
    return Shadow(tuple(p.crossing for p in D.passages))


def assign_state(P: Shadow, choice: Sequence[bool]) -> GaussDiagram:
    """Return the state of ``P`` selected by ``choice``.

    The first occurrence of crossing k becomes Over when ``choice[k - 1]`` is
    set and Under otherwise; the second occurrence gets the other flag.

    Args:
        P (Shadow): Shadow with n crossings.
        choice (Sequence[bool]): One entry per crossing.

    Returns:
        GaussDiagram: The state.

    Raises:
        LengthMismatchError: If ``len(choice) != n``.

    Example:
        >>> str(assign_state(Shadow((1, 2, 1, 2)), [True, True]))
        'O1 O2 U1 U2'
    """
    if len(choice) != P.n:
        raise LengthMismatchError(
            f"Choice vector has {len(choice)} entries for {P.n} crossings."
        )
    firsts = P.first_visit_flags()
    passages = []
    for c, first in zip(P.passages, firsts):
        over = bool(choice[c - 1]) == first
        passages.append(Passage(c, Strand.OVER if over else Strand.UNDER))
    return GaussDiagram(tuple(passages))


def assign_state_mask(P: Shadow, mask: int) -> GaussDiagram:
    """Return the state of ``P`` whose choice bit for crossing k is bit k - 1."""
    return assign_state(P, [bool(mask >> k & 1) for k in range(P.n)])


def crossing_bits(D: GaussDiagram) -> Tuple[bool, ...]:
    """Return the choice vector with ``assign_state(shadow(D), bits) == D``."""
    return tuple(D.passages[D.positions(c)[0]].is_over for c in D.crossings)


def crossing_change(D: GaussDiagram, p: int) -> GaussDiagram:
    """Swap over and under at crossing ``p``.

    Raises:
        UnknownCrossingError: If ``p`` is not a crossing of ``D``.
    """
    i, j = D.positions(p)
    passages = list(D.passages)
    passages[i] = passages[i].flipped()
    passages[j] = passages[j].flipped()
    return GaussDiagram(tuple(passages))


def relabel(crossings: Sequence[int]) -> Dict[int, int]:
    """Map crossing ids to 1..n in order of first appearance."""
    mapping: Dict[int, int] = {}
    for c in crossings:
        if c not in mapping:
            mapping[c] = len(mapping) + 1
    return mapping


# Curve transforms


def reverse_curve(C: PlanarCurve) -> PlanarCurve:
    """Reverse the curve's reference orientation, keeping crossing ids.

    Every crossing's visit order swaps, so every chirality flag flips. Edge i
    becomes edge (2n - 2 - i) mod 2n and sides swap.
    """
    outer = None
    if C.outer is not None:
        edge, side = C.outer
        outer = ((2 * C.n - 2 - edge) % C.num_edges, side.opposite())
    return PlanarCurve(
        tuple(reversed(C.sequence)),
        tuple(f.flipped() for f in C.chirality),
        outer,
    )


def mirror_curve(C: PlanarCurve) -> PlanarCurve:
    """Reflect the plane: same traversal, flags flipped, sides swapped."""
    outer = None if C.outer is None else (C.outer[0], C.outer[1].opposite())
    return PlanarCurve(C.sequence, tuple(f.flipped() for f in C.chirality), outer)


def rotate_curve(C: PlanarCurve, k: int) -> PlanarCurve:
    """Start the traversal at passage ``k`` instead of passage 0.

    Crossings whose visit order swaps get their flag flipped; edge i becomes
    edge (i - k) mod 2n. Crossing ids are kept.
    """
    if C.n == 0:
        return C
    size = C.num_edges
    k %= size
    sequence = C.sequence[k:] + C.sequence[:k]
    flags = list(C.chirality)
    for c in range(1, C.n + 1):
        a, b = C.positions(c)
        if (a - k) % size > (b - k) % size:
            flags[c - 1] = flags[c - 1].flipped()
    outer = None if C.outer is None else ((C.outer[0] - k) % size, C.outer[1])
    return PlanarCurve(sequence, tuple(flags), outer)


def relabel_curve(C: PlanarCurve) -> PlanarCurve:
    """Relabel crossings of ``C`` in order of first appearance."""
    mapping = relabel(C.sequence)
    flags = [None] * C.n
    for old, new in mapping.items():
        flags[new - 1] = C.chirality[old - 1]
    return PlanarCurve(tuple(mapping[c] for c in C.sequence), tuple(flags), C.outer)


def with_outer(C: PlanarCurve, outer: Optional[Dart]) -> PlanarCurve:
    """Return ``C`` with a different outer-face marker."""
    return PlanarCurve(C.sequence, C.chirality, outer)


def reverse_based_curve(Cb: BasedPlanarCurve) -> BasedPlanarCurve:
    """Reverse a based curve; the base point stays on the same piece of curve."""
    C = Cb.curve
    base = (2 * C.n - 2 - Cb.base_edge) % C.num_edges
    return BasedPlanarCurve(reverse_curve(C), base)
