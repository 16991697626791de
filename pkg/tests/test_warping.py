"""Unit tests for warping.py.

These tests validate warping degrees and the warping polynomials, including:
    - warping_degree_at, edge_degrees, edge_degrees_naive: Edge degree profiles
    - warping_polynomial, warping_crossing_polynomial: W_D and X_D
    - crossing_weight, crossing_weights: Per-crossing weights
    - warping_degree_pair: d(D) and d(-D)
    - classify, is_alternating_asymmetric: Shape flags
    - crossing_change_partition: The (A, B) split at one crossing
    - terminal_degree_multisets: Degrees of edges ending at each strand
    - arc_polynomials: W and X of spatial arcs

Edge cases tested:
    - The crossingless diagram (n = 0)
    - Single-crossing kinks in both orders
    - Profiles whose neighbours do not differ by one

Property tests draw random abstract Gauss diagrams with hypothesis.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from warpknot.diagram_core import (
    GaussDiagram,
    Shadow,
    assign_state,
    crossing_change,
    mirror,
    reverse,
)
from warpknot.exceptions import (
    DiagramValidationError,
    EdgeIndexError,
    EmptyDiagramError,
    UnknownCrossingError,
)
from warpknot.gauss_codes import parse_arc_code, parse_gauss_code
from warpknot.polynomial import IntPolynomial, parse_polynomial, reciprocal_transform
from warpknot.warping import (
    EdgeDegreeProfile,
    arc_polynomials,
    classify,
    crossing_change_partition,
    crossing_weight,
    crossing_weights,
    diagram_warping_degree,
    edge_degrees,
    edge_degrees_naive,
    is_alternating_asymmetric,
    terminal_degree_multisets,
    warping_crossing_polynomial,
    warping_degree_at,
    warping_degree_pair,
    warping_polynomial,
)

ONE_BRIDGE = "O1 O2 O3 U1 U2 U3"
ALTERNATING = "O1 U2 O3 U1 O2 U3"
ONE_MINUS_T = IntPolynomial((1, -1))
T = IntPolynomial.monomial(1)


@st.composite
def gauss_diagrams(draw, min_n=1, max_n=6):
    """Draw an abstract Gauss diagram with min_n..max_n crossings."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    sequence = draw(st.permutations([c for c in range(1, n + 1) for _ in range(2)]))
    order = {}
    for c in sequence:
        order.setdefault(c, len(order) + 1)
    P = Shadow(tuple(order[c] for c in sequence))
    choice = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return assign_state(P, choice)


def test_edge_degrees_one_bridge():
    """Test the profile of the one-bridge trefoil."""
    D = parse_gauss_code(ONE_BRIDGE)
    assert edge_degrees(D).degrees == (1, 2, 3, 2, 1, 0)
    assert warping_degree_at(D, 2) == 3
    assert edge_degrees(D).minimum() == 0
    assert edge_degrees(D).maximum() == 3


def test_warping_degree_at_bad_edge():
    """Test the base edge is validated."""
    with pytest.raises(EdgeIndexError):
        warping_degree_at(parse_gauss_code(ONE_BRIDGE), 6)


def test_edge_degree_profile_validation():
    """Test neighbouring degrees must differ by exactly one."""
    assert len(EdgeDegreeProfile((0,))) == 1
    with pytest.raises(DiagramValidationError):
        EdgeDegreeProfile((0, 2))
    with pytest.raises(DiagramValidationError):
        EdgeDegreeProfile((1, 2, 3))


@pytest.mark.parametrize(
    "code, W, X",
    [
        (ONE_BRIDGE, "1 + 2t + 2t^2 + t^3", "1 + t + t^2"),
        (ALTERNATING, "3t + 3t^2", "3t"),
        ("O1 U1", "1 + t", "1"),
        ("U1 O1", "1 + t", "1"),
        ("O1 U1 O2 U2", "2 + 2t", "2"),
        ("U1 O1 O2 U2", "1 + 2t + t^2", "1 + t"),
    ],
)
def test_warping_polynomials(code, W, X):
    """Test W and X on small diagrams."""
    D = parse_gauss_code(code)
    assert warping_polynomial(D) == parse_polynomial(W)
    assert warping_crossing_polynomial(D) == parse_polynomial(X)


def test_empty_diagram_polynomials():
    """Test the crossingless diagram has W = 1 and X = 0."""
    D = GaussDiagram(())
    assert edge_degrees(D).degrees == (0,)
    assert warping_polynomial(D) == IntPolynomial((1,))
    assert warping_crossing_polynomial(D).is_zero()


def test_crossing_weights():
    """Test crossing weights of the one-bridge trefoil."""
    D = parse_gauss_code(ONE_BRIDGE)
    assert crossing_weights(D) == {
        1: IntPolynomial((1,)),
        2: IntPolynomial.monomial(1),
        3: IntPolynomial.monomial(2),
    }
    assert crossing_weight(D, 3) == IntPolynomial.monomial(2)
    with pytest.raises(UnknownCrossingError):
        crossing_weight(D, 4)


def test_warping_degree_pair():
    """Test d(D) and d(-D)."""
    assert warping_degree_pair(parse_gauss_code(ONE_BRIDGE)) == (0, 0)
    assert warping_degree_pair(parse_gauss_code(ALTERNATING)) == (1, 1)
    assert diagram_warping_degree(parse_gauss_code("U1 O1 U2 O2")) == 1


@pytest.mark.parametrize(
    "code, alternating, bridges",
    [
        (ONE_BRIDGE, False, 1),
        (ALTERNATING, True, 3),
        ("O1 O2 U1 U2 O3 U3", False, 2),
        ("U1 O1", True, 1),
    ],
)
def test_classify(code, alternating, bridges):
    """Test the alternating flag and the bridge count."""
    shape = classify(parse_gauss_code(code))
    assert shape.alternating is alternating
    assert shape.bridge_count == bridges
    assert shape.one_bridge is (bridges == 1)


def test_classify_empty():
    """Test classification needs a crossing."""
    with pytest.raises(EmptyDiagramError):
        classify(GaussDiagram(()))


@pytest.mark.parametrize(
    "code, expected",
    [
        ("U1 O1 U2 O2", True),
        (ALTERNATING, False),
        (ONE_BRIDGE, False),
        ("-", False),
    ],
)
def test_is_alternating_asymmetric(code, expected):
    """Test even alternating diagrams differ from their reverse."""
    assert is_alternating_asymmetric(parse_gauss_code(code)) is expected


def test_crossing_change_partition():
    """Test the split at crossing 1 of the one-bridge trefoil."""
    D = parse_gauss_code(ONE_BRIDGE)
    A, B = crossing_change_partition(D, 1)
    assert A == parse_polynomial("1 + t + t^2")
    assert B == parse_polynomial("1 + t + t^2")
    X_changed = warping_crossing_polynomial(crossing_change(D, 1))
    assert X_changed == parse_polynomial("1 + t + t^2")


def test_terminal_degree_multisets():
    """Test edges ending at Over passages carry the weight exponents."""
    over, under = terminal_degree_multisets(parse_gauss_code(ONE_BRIDGE))
    assert sorted(over.elements()) == [0, 1, 2]
    assert sorted(under.elements()) == [1, 2, 3]


def test_arc_polynomials():
    """Test W and X of a one-crossing arc."""
    W, X = arc_polynomials(parse_arc_code("O1 U1"))
    assert W == parse_polynomial("2 + t")
    assert X == parse_polynomial("1")
    W_empty, X_empty = arc_polynomials(parse_arc_code("-"))
    assert W_empty == IntPolynomial((1,))
    assert X_empty.is_zero()


@given(gauss_diagrams())
def test_step_rule_matches_definition(D):
    """Test the step rule against independent walks."""
    assert edge_degrees(D) == edge_degrees_naive(D)


@given(gauss_diagrams())
def test_warping_factorization(D):
    """Test W = (1 + t) X with W(1) = 2n and X(1) = n."""
    W, X = warping_polynomial(D), warping_crossing_polynomial(D)
    assert W == X.mul_by_one_plus_t()
    assert W.evaluate(1) == 2 * D.n
    assert X.evaluate(1) == D.n


@given(gauss_diagrams())
def test_reverse_and_mirror_reciprocal(D):
    """Test X of the reverse and of the mirror are the reciprocal of X."""
    expected = reciprocal_transform(warping_crossing_polynomial(D), D.n)
    assert warping_crossing_polynomial(reverse(D)) == expected
    assert warping_crossing_polynomial(mirror(D)) == expected


@given(gauss_diagrams(), st.data())
def test_crossing_change_identities(D, data):
    """Test the three identities linking X before and after a crossing change."""
    p = data.draw(st.integers(min_value=1, max_value=D.n))
    X = warping_crossing_polynomial(D)
    X_changed = warping_crossing_polynomial(crossing_change(D, p))
    A, B = crossing_change_partition(D, p)
    assert X - T * X_changed == ONE_MINUS_T * A
    assert X_changed - T * X == ONE_MINUS_T * B
    assert X + X_changed == A + B


@given(gauss_diagrams())
def test_warping_degree_sum_bound(D):
    """Test d(D) + d(-D) + 1 <= n, with equality for alternating diagrams."""
    d_forward, d_backward = warping_degree_pair(D)
    assert d_forward + d_backward + 1 <= D.n
    if classify(D).alternating:
        assert d_forward + d_backward + 1 == D.n
