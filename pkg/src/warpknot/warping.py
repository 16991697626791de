"""Warping degrees and the two warping polynomials of a knot diagram.

Conventions follow ``diagram_core``: edge i runs from passage i to passage
i + 1. Walking the base point forward past an Over passage raises the warping
degree by one and past an Under passage lowers it by one, so a whole profile
costs one definition walk plus a cumulative sum.

Functions:
    - warping_degree_at: Warping degree from one edge, by the definition walk.
    - edge_degrees_naive: Every edge by an independent definition walk.
    - edge_degrees: Every edge by the step rule.
    - warping_polynomial: W_D(t), summed over edges.
    - crossing_weight: t^d(c), base point just before the Over passage of c.
    - crossing_weights: Map of every crossing to its weight.
    - warping_crossing_polynomial: X_D(t), summed over crossings.
    - diagram_warping_degree: Minimal warping degree d(D).
    - warping_degree_pair: (d(D), d(-D)).
    - classify: Alternating flag and bridge count.
    - is_alternating_asymmetric: Whether an alternating diagram is told apart
      from its reverse by X.
    - crossing_change_partition: The (A, B) split behind the crossing-change
      identities.
    - terminal_degree_multisets: Degrees of edges ending at Over and at Under
      passages.
    - arc_polynomials: W and X of a spatial arc diagram.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from .diagram_core import ArcDiagram, GaussDiagram, reverse
from .exceptions import DiagramValidationError, EmptyDiagramError
from .polynomial import IntPolynomial


@dataclass(frozen=True)
class EdgeDegreeProfile:
    """Warping degree of every edge, indexed by edge.

    Raises:
        DiagramValidationError: If cyclically consecutive entries do not differ
            by exactly one.
    """

    degrees: Tuple[int, ...]

    def __post_init__(self):
        degrees = tuple(int(d) for d in self.degrees)
        object.__setattr__(self, "degrees", degrees)
        if len(degrees) > 1:
            for i, d in enumerate(degrees):
                if abs(d - degrees[i - 1]) != 1:
                    raise DiagramValidationError(
                        f"Edge degrees {degrees[i - 1]} and {d} at edges {i - 1} "
                        f"and {i} do not differ by one."
                    )

    def __getitem__(self, edge: int) -> int:
        return self.degrees[edge]

    def __len__(self) -> int:
        return len(self.degrees)

    def minimum(self) -> int:
        """Return the smallest degree."""
        return min(self.degrees)

    def maximum(self) -> int:
        """Return the largest degree."""
        return max(self.degrees)


def warping_degree_at(D: GaussDiagram, edge: int) -> int:
    """Count warping crossings seen from a base point on ``edge``.

    Walks forward through all 2n passages and counts crossings whose first
    encounter is an Under passage.

    Args:
        D (GaussDiagram): Diagram.
        edge (int): Edge index in 0..2n - 1 (0 for n = 0).

    Returns:
        int: The warping degree d(D_b), between 0 and n.

    Raises:
        EdgeIndexError: If ``edge`` is out of range.

    Example:
        >>> D = parse_gauss_code("O1 U2 O3 U1 O2 U3")
        >>> warping_degree_at(D, 5)
        1
    """
    D.check_edge(edge)
    size = len(D.passages)
    met = set()
    count = 0
    for k in range(1, size + 1):
        passage = D.passages[(edge + k) % size]
        if passage.crossing not in met:
            met.add(passage.crossing)
            if not passage.is_over:
                count += 1
    return count


def edge_degrees_naive(D: GaussDiagram) -> EdgeDegreeProfile:
    """Return the profile from 2n independent definition walks."""
    return EdgeDegreeProfile(
        tuple(warping_degree_at(D, e) for e in range(D.num_edges))
    )


def edge_degrees(D: GaussDiagram) -> EdgeDegreeProfile:
    """Return the warping degree of every edge.

    One definition walk fixes the degree of the last edge (the base point just
    before passage 0); the rest follow by the +1/-1 step rule.

    Example:
        >>> edge_degrees(parse_gauss_code("O1 O2 O3 U1 U2 U3")).degrees
        (1, 2, 3, 2, 1, 0)
    """
    if D.n == 0:
        return EdgeDegreeProfile((0,))
    last = warping_degree_at(D, D.num_edges - 1)
    steps = np.where(np.array(D.over_flags()), 1, -1)
    return EdgeDegreeProfile(tuple((last + np.cumsum(steps)).tolist()))


def warping_polynomial(D: GaussDiagram) -> IntPolynomial:
    """Return W_D(t), the sum of t^d(e) over all edges.

    Example:
        >>> str(warping_polynomial(parse_gauss_code("O1 O2 O3 U1 U2 U3")))
        '1 + 2t + 2t^2 + t^3'
    """
    return IntPolynomial.from_exponents(edge_degrees(D).degrees)


def _weight_exponents(D: GaussDiagram, profile: EdgeDegreeProfile) -> Dict[int, int]:
    size = D.num_edges
    return {c: profile[(D.over_position(c) - 1) % size] for c in D.crossings}


def crossing_weight(D: GaussDiagram, c: int) -> IntPolynomial:
    """Return the crossing weight t^d(c) of crossing ``c``.

    The base point sits on the edge terminating at the Over passage of ``c``.

    Raises:
        UnknownCrossingError: If ``c`` is not a crossing of ``D``.
    """
    over = D.over_position(c)
    return IntPolynomial.monomial(edge_degrees(D)[(over - 1) % D.num_edges])


def crossing_weights(D: GaussDiagram) -> Dict[int, IntPolynomial]:
    """Return every crossing's weight, keyed by crossing id."""
    exponents = _weight_exponents(D, edge_degrees(D))
    return {c: IntPolynomial.monomial(e) for c, e in exponents.items()}


def warping_crossing_polynomial(D: GaussDiagram) -> IntPolynomial:
    """Return X_D(t), the sum of crossing weights; zero for n = 0.

    Example:
        >>> str(warping_crossing_polynomial(parse_gauss_code("O1 U2 O3 U1 O2 U3")))
        '3t'
    """
    if D.n == 0:
        return IntPolynomial.zero()
    return IntPolynomial.from_exponents(
        _weight_exponents(D, edge_degrees(D)).values()
    )


def diagram_warping_degree(D: GaussDiagram) -> int:
    """Return d(D), the minimal warping degree over all base points."""
    return edge_degrees(D).minimum()


def warping_degree_pair(D: GaussDiagram) -> Tuple[int, int]:
    """Return (d(D), d(-D))."""
    return diagram_warping_degree(D), diagram_warping_degree(reverse(D))


@dataclass(frozen=True)
class DiagramClassification:
    """Shape flags read off the Over/Under pattern."""

    alternating: bool
    bridge_count: int

    @property
    def one_bridge(self) -> bool:
        """True when the diagram has exactly one bridge."""
        return self.bridge_count == 1


def classify(D: GaussDiagram) -> DiagramClassification:
    """Classify a diagram as alternating and count its bridges.

    A bridge is a maximal cyclic run of Over passages.

    Raises:
        EmptyDiagramError: For n = 0.

    Examples:
        >>> classify(parse_gauss_code("O1 O2 U1 U2 O3 U3")).bridge_count
        2
        >>> classify(parse_gauss_code("O1 O2 O3 U1 U2 U3")).one_bridge
        True
    """
    if D.n == 0:
        raise EmptyDiagramError("Classification needs at least one crossing.")
    flags = D.over_flags()
    alternating = all(flags[i] != flags[i - 1] for i in range(len(flags)))
    # Each bridge starts at an Over passage preceded by an Under passage
    bridge_count = sum(1 for i in range(len(flags)) if flags[i] and not flags[i - 1])
    return DiagramClassification(alternating, bridge_count)


def is_alternating_asymmetric(D: GaussDiagram) -> bool:
    """Return True if ``D`` is alternating and X_D differs from X_{-D}.

    Every alternating diagram with a non-zero even crossing number has this
    property, since X_D = n t^d and X_{-D} = n t^(n-1-d).
    """
    if D.n == 0 or not classify(D).alternating:
        return False
    return warping_crossing_polynomial(D) != warping_crossing_polynomial(reverse(D))


def crossing_change_partition(
    D: GaussDiagram, p: int
) -> Tuple[IntPolynomial, IntPolynomial]:
    """Split the edges of ``D`` at crossing ``p`` into the sums A and B.

    A collects t^d(e) over the edges from the one after the Under passage of
    ``p`` through the one ending at its Over passage. B collects t^(d(e) - 1)
    over the remaining edges, all of which see ``p`` as a warping crossing.
    With D' the diagram after changing ``p``:

        X_D - t X_D' = (1 - t) A,  X_D' - t X_D = (1 - t) B,  X_D + X_D' = A + B.

    Raises:
        UnknownCrossingError: If ``p`` is not a crossing of ``D``.

    Example:
        >>> A, B = crossing_change_partition(parse_gauss_code("O1 O2 O3 U1 U2 U3"), 1)
        >>> str(A)
        '1 + t + t^2'
    """
    over, under = D.over_position(p), D.under_position(p)
    profile = edge_degrees(D)
    size = D.num_edges
    inside = {(under + k) % size for k in range((over - under) % size)}
    a_exponents = [profile[e] for e in range(size) if e in inside]
    b_exponents = [profile[e] - 1 for e in range(size) if e not in inside]
    return IntPolynomial.from_exponents(a_exponents), IntPolynomial.from_exponents(
        b_exponents
    )


def terminal_degree_multisets(D: GaussDiagram) -> Tuple[Counter, Counter]:
    """Return degree multisets of edges ending at Over and at Under passages.

    The first equals the multiset of crossing weight exponents and the second
    is the same multiset shifted up by one.
    """
    profile = edge_degrees(D)
    size = D.num_edges
    ending_over, ending_under = Counter(), Counter()
    for i, passage in enumerate(D.passages):
        target = ending_over if passage.is_over else ending_under
        target[profile[(i - 1) % size]] += 1
    return ending_over, ending_under


def arc_edge_degrees(S: ArcDiagram) -> Tuple[int, ...]:
    """Return the warping degree of each of the 2n + 1 edges of an arc.

    Edge j precedes passage j. From edge j, a crossing counts when its first
    passage at index >= j is Under; crossings left entirely behind do not.
    """
    degrees = []
    for j in range(S.num_edges):
        met = set()
        count = 0
        for passage in S.passages[j:]:
            if passage.crossing not in met:
                met.add(passage.crossing)
                if not passage.is_over:
                    count += 1
        degrees.append(count)
    return tuple(degrees)


def arc_polynomials(S: ArcDiagram) -> Tuple[IntPolynomial, IntPolynomial]:
    """Return (W_S, X_S) of a spatial arc diagram.

    X_S takes each crossing's degree at the edge immediately preceding its Over
    passage. W_S(1) = 2n + 1 and X_S(1) = n.

    Example:
        >>> W, X = arc_polynomials(parse_arc_code("O1 U1"))
        >>> str(W), str(X)
        ('2 + t', '1')
    """
    degrees = arc_edge_degrees(S)
    W = IntPolynomial.from_exponents(degrees)
    X = IntPolynomial.from_exponents(
        degrees[i] for i, passage in enumerate(S.passages) if passage.is_over
    )
    return W, X
