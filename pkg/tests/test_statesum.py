"""Unit tests for statesum.py.

These tests validate the shadow state sums, including:
    - state_sum: Z_P, W_total and the closed-form verdict, locally and on Spark
    - closed_form_z, closed_form_w_total: 2n(1+t)^(n-1) and 2n(1+t)^n
    - edge_degree_distribution: States counted by degree at one edge
    - state_distribution: Multiset of X_D over all states

Edge cases tested:
    - The one-crossing shadow
    - The crossingless shadow and shadows above the enumeration limit
    - Block sizes that split the states unevenly
    - Out-of-range edges

The Spark test runs on a local[1] session; its result must equal the local sum.
"""

import os
from math import comb

import pytest
from pyspark.sql import SparkSession

from warpknot.corpus import canonical_shadows
from warpknot.diagram_core import Shadow, assign_state_mask
from warpknot.exceptions import EdgeIndexError, EmptyShadowError, TooManyCrossingsError
from warpknot.gauss_codes import parse_shadow
from warpknot.polynomial import IntPolynomial, parse_polynomial
from warpknot.statesum import (
    closed_form_w_total,
    closed_form_z,
    edge_degree_distribution,
    state_distribution,
    state_sum,
)
from warpknot.warping import warping_crossing_polynomial, warping_polynomial

SRC_FOLDER = os.path.join(os.path.dirname(os.path.dirname(__file__)), "src")


@pytest.fixture(scope="session")
def spark():
    """Create a SparkSession for testing; workers import warpknot from src."""
    paths = [SRC_FOLDER, os.environ.get("PYTHONPATH", "")]
    os.environ["PYTHONPATH"] = os.pathsep.join(p for p in paths if p)
    return (
        SparkSession.builder.master("local[1]")
        .appName("statesum-tests")
        .getOrCreate()
    )


def test_closed_forms():
    """Test the closed forms at n = 4."""
    assert closed_form_z(4) == parse_polynomial("8 + 24t + 24t^2 + 8t^3")
    assert closed_form_w_total(4) == IntPolynomial((8, 32, 48, 32, 8))


def test_state_sum_four_crossings():
    """Test the four-crossing worked example."""
    report = state_sum(parse_shadow("1 2 3 4 1 2 3 4"))
    assert report.n == 4
    assert report.Z == parse_polynomial("8 + 24t + 24t^2 + 8t^3")
    assert report.W_total == IntPolynomial((8, 32, 48, 32, 8))
    assert report.closed_form_ok
    assert report.states_enumerated == 16


def test_state_sum_one_crossing():
    """Test the kink shadow."""
    report = state_sum(Shadow((1, 1)))
    assert report.Z == IntPolynomial((2,))
    assert report.W_total == IntPolynomial((2, 2))
    assert report.closed_form_ok


@pytest.mark.parametrize("chunk_size", [1, 3, 64])
def test_state_sum_block_size_independent(chunk_size):
    """Test splitting the states into blocks does not change the sums."""
    P = parse_shadow("1 2 3 1 2 3")
    assert state_sum(P, chunk_size=chunk_size) == state_sum(P)


def test_state_sum_matches_diagram_sums():
    """Test the vectorised sums against per-diagram polynomials."""
    P = parse_shadow("1 2 1 3 2 3")
    Z, W_total = IntPolynomial.zero(), IntPolynomial.zero()
    for mask in range(2**P.n):
        D = assign_state_mask(P, mask)
        Z = Z + warping_crossing_polynomial(D)
        W_total = W_total + warping_polynomial(D)
    report = state_sum(P)
    assert report.Z == Z
    assert report.W_total == W_total


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_state_sum_closed_form_every_shadow(n):
    """Test the closed form on every canonical shadow."""
    for P in canonical_shadows(n):
        assert state_sum(P).closed_form_ok


def test_state_sum_errors():
    """Test the empty shadow and the enumeration limit."""
    with pytest.raises(EmptyShadowError):
        state_sum(Shadow(()))
    with pytest.raises(TooManyCrossingsError, match="above the enumeration limit"):
        state_sum(parse_shadow("1 2 3 1 2 3"), limit=2)


def test_state_sum_on_spark(spark):
    """Test Spark partitions reduce to the local result."""
    P = parse_shadow("1 2 3 4 1 2 3 4")
    assert state_sum(P, spark=spark, chunk_size=4) == state_sum(P)


def test_edge_degree_distribution():
    """Test states are binomially distributed at every edge."""
    assert edge_degree_distribution(parse_shadow("1 2 1 2"), 0) == (1, 2, 1)
    P = parse_shadow("1 2 3 1 2 3")
    for edge in range(P.num_edges):
        assert edge_degree_distribution(P, edge) == tuple(
            comb(3, m) for m in range(4)
        )
    assert edge_degree_distribution(Shadow(()), 0) == (1,)


def test_edge_degree_distribution_bad_edge():
    """Test out-of-range edges are rejected."""
    with pytest.raises(EdgeIndexError):
        edge_degree_distribution(parse_shadow("1 1"), 2)


def test_state_distribution():
    """Test the multiset of X over all states."""
    assert state_distribution(Shadow((1, 1))) == {IntPolynomial((1,)): 2}
    distribution = state_distribution(parse_shadow("1 1 2 2"))
    assert sum(distribution.values()) == 4
    assert distribution == {
        IntPolynomial((2,)): 1,
        IntPolynomial((0, 2)): 1,
        IntPolynomial((1, 1)): 2,
    }
