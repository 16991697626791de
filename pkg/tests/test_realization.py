"""Unit tests for realization.py.

These tests validate which polynomials are warping crossing polynomials,
including:
    - realizability_check: The contiguous-block shape test
    - realize_search: Exhaustive witness search
    - witness_index: Every X attained at n crossings
    - contiguous_polynomials: Every polynomial passing the shape test

Edge cases tested:
    - The zero polynomial and negative coefficients
    - Gaps between non-zero coefficients
    - Exponents above n - 1
    - Targets above the search bound
"""

import pytest

from warpknot.exceptions import NotFoundError, TooLargeError
from warpknot.polynomial import IntPolynomial, parse_polynomial
from warpknot.realization import (
    contiguous_polynomials,
    realizability_check,
    realize_search,
    witness_index,
)
from warpknot.warping import warping_crossing_polynomial


@pytest.mark.parametrize(
    "text, expected",
    [
        ("1 + 2t^2", False),  # Gap at t
        ("3t", True),  # Alternating trefoil
        ("1 + t + t^2", True),  # One-bridge trefoil
        ("t", False),  # Exponent 1 above n - 1 = 0
        ("1 - t", False),  # Negative coefficient
        ("0", False),  # Zero polynomial
        ("2t^2", False),  # Exponent 2 above n - 1 = 1
        ("2t", True),
    ],
)
def test_realizability_check(text, expected):
    """Test the shape condition on hand-checked polynomials."""
    assert realizability_check(parse_polynomial(text)) is expected


def test_contiguous_polynomials_small():
    """Test the shapes with two crossings."""
    assert set(contiguous_polynomials(2)) == {
        parse_polynomial("2"),
        parse_polynomial("2t"),
        parse_polynomial("1 + t"),
    }


@pytest.mark.parametrize("n", [1, 2, 3])
def test_witness_index_matches_shapes(n):
    """Test the attained polynomials are exactly the realizable shapes."""
    attained = set(witness_index(n))
    assert attained == set(contiguous_polynomials(n))
    assert all(realizability_check(f) for f in attained)


def test_witness_index_size():
    """Test eight polynomials are attained at three crossings."""
    assert len(witness_index(3)) == 8


def test_realize_search_returns_witness():
    """Test the witness has the requested X."""
    f = parse_polynomial("1 + t + t^2")
    D = realize_search(f)
    assert D.n == 3
    assert warping_crossing_polynomial(D) == f


@pytest.mark.parametrize("text", ["t", "0", "1 - t + t^2"])
def test_realize_search_not_found(text):
    """Test polynomials without a witness."""
    with pytest.raises(NotFoundError):
        realize_search(parse_polynomial(text))


def test_realize_search_too_large():
    """Test the crossing bound is enforced before searching."""
    with pytest.raises(TooLargeError):
        realize_search(parse_polynomial("7"))
    with pytest.raises(TooLargeError):
        realize_search(IntPolynomial((1, 1, 1)), max_n=2)
