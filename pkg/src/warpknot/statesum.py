"""State sums over the 2^n over/under choices of a shadow.

The enumeration is vectorised with numpy: a block of choice masks becomes a
(states x passages) matrix of Over flags, the edge degrees of every state
are one cumulative sum, and the polynomials are histograms of those degrees.
Blocks are independent, so they can be summed locally or fanned out to Spark
executors and reduced by addition.

Functions:
    - state_sum: Z_P and the summed warping polynomial, with closed-form check.
    - edge_degree_distribution: Count of states by degree at one edge.
    - state_distribution: Multiset of X_D over all states.
    - closed_form_z, closed_form_w_total: 2n(1+t)^(n-1) and 2n(1+t)^n.
"""

import logging
from dataclasses import dataclass
from functools import partial
from typing import Dict, List, Tuple

import numpy as np

from .diagram_core import Shadow
from .exceptions import EdgeIndexError, EmptyShadowError, TooManyCrossingsError
from .polynomial import IntPolynomial, one_plus_t_power

logger = logging.getLogger(__name__)

DEFAULT_LIMIT = 20
CHUNK_SIZE = 2**16


@dataclass(frozen=True)
class StateSumReport:
    """Result of enumerating every state of a shadow.

    Attributes:
        n (int): Crossing count.
        Z (IntPolynomial): Sum of X_D over all states.
        W_total (IntPolynomial): Sum of W_D over all states.
        closed_form_ok (bool): Both sums match 2n(1+t)^(n-1) and 2n(1+t)^n.
        states_enumerated (int): Always 2^n.
    """

    n: int
    Z: IntPolynomial
    W_total: IntPolynomial
    closed_form_ok: bool
    states_enumerated: int


def closed_form_z(n: int) -> IntPolynomial:
    """Return 2n(1+t)^(n-1)."""
    return one_plus_t_power(n - 1, 2 * n)


def closed_form_w_total(n: int) -> IntPolynomial:
    """Return 2n(1+t)^n."""
    return one_plus_t_power(n, 2 * n)


def _state_levels(
    passages: Tuple[int, ...], first_visit: Tuple[bool, ...], start: int, stop: int
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return Over flags, edge degrees and degrees before each passage.

    Rows are the states ``start..stop - 1``; bit k - 1 of a mask chooses Over
    at the first visit of crossing k.
    """
    n = len(passages) // 2
    masks = np.arange(start, stop, dtype=np.int64)
    bits = (masks[:, None] >> np.arange(n, dtype=np.int64)) & 1
    chosen = bits[:, np.asarray(passages) - 1]
    over = np.where(np.asarray(first_visit), chosen, 1 - chosen)

    # The edge before passage 0 sees every Under first visit as warping
    last = n - bits.sum(axis=1)
    levels = last[:, None] + np.cumsum(2 * over - 1, axis=1)
    before = np.concatenate([last[:, None], levels[:, :-1]], axis=1)
    return over, levels, before


def _partial_sums(
    passages: Tuple[int, ...], first_visit: Tuple[bool, ...], bounds: Tuple[int, int]
) -> Tuple[List[int], List[int]]:
    """Coefficient lists of the X and W sums over one block of states."""
    n = len(passages) // 2
    over, levels, before = _state_levels(passages, first_visit, *bounds)
    x_counts = np.bincount(before[over == 1], minlength=n)
    w_counts = np.bincount(levels.ravel(), minlength=n + 1)
    return x_counts.tolist(), w_counts.tolist()


def _add_counts(
    left: Tuple[List[int], List[int]], right: Tuple[List[int], List[int]]
) -> Tuple[List[int], List[int]]:
    def add(a, b):
        size = max(len(a), len(b))
        a, b = a + [0] * (size - len(a)), b + [0] * (size - len(b))
        return [x + y for x, y in zip(a, b)]

    return add(left[0], right[0]), add(left[1], right[1])


def _check_shadow(P: Shadow, limit: int) -> None:
    if P.n == 0:
        raise EmptyShadowError("State sums need a shadow with at least one crossing.")
    if P.n > limit:
        raise TooManyCrossingsError(
            f"Shadow has {P.n} crossings, above the enumeration limit {limit}. "
            f"Raise the limit to enumerate 2^{P.n} states."
        )


def _blocks(n: int, chunk_size: int) -> List[Tuple[int, int]]:
    total = 2**n
    return [(s, min(s + chunk_size, total)) for s in range(0, total, chunk_size)]


def state_sum(
    P: Shadow, limit: int = DEFAULT_LIMIT, spark=None, chunk_size: int = CHUNK_SIZE
) -> StateSumReport:
    """Enumerate all 2^n states of ``P`` and sum their warping polynomials.

    Args:
        P (Shadow): Shadow with 1..limit crossings.
        limit (int): Largest crossing count accepted. Defaults to 20.
        spark (SparkSession, optional): When given, state blocks are summed on
            Spark executors.
        chunk_size (int): States per block.

    Returns:
        StateSumReport: Z, W_total and the closed-form verdict.

    Raises:
        EmptyShadowError: If ``P`` has no crossings.
        TooManyCrossingsError: If ``P`` has more than ``limit`` crossings.

    Example:
        >>> report = state_sum(parse_shadow("1 2 3 4 1 2 3 4"))
        >>> str(report.Z), report.closed_form_ok
        ('8 + 24t + 24t^2 + 8t^3', True)
    """
    _check_shadow(P, limit)
    n = P.n
    blocks = _blocks(n, chunk_size)
    worker = partial(_partial_sums, P.passages, P.first_visit_flags())

    if spark is not None:
        logger.info("Summing %d states in %d Spark partitions", 2**n, len(blocks))
        totals = (
            spark.sparkContext.parallelize(blocks, numSlices=len(blocks))
            .map(worker)
            .reduce(_add_counts)
        )
    else:
        logger.debug("Summing %d states in %d local blocks", 2**n, len(blocks))
        totals = ([0] * n, [0] * (n + 1))
        for block in blocks:
            totals = _add_counts(totals, worker(block))

    Z = IntPolynomial.from_counts(totals[0])
    W_total = IntPolynomial.from_counts(totals[1])
    closed_form_ok = Z == closed_form_z(n) and W_total == closed_form_w_total(n)
    if not closed_form_ok:
        logger.warning("State sum of %s misses the closed form: Z = %s", P, Z)
    return StateSumReport(n, Z, W_total, closed_form_ok, 2**n)


def edge_degree_distribution(
    P: Shadow, edge: int, limit: int = DEFAULT_LIMIT
) -> Tuple[int, ...]:
    """Count states of ``P`` by their warping degree at ``edge``.

    Entry m is the number of states with d(e) = m, m = 0..n; every entry should
    be the binomial coefficient C(n, m).

    Raises:
        EdgeIndexError: If ``edge`` is out of range.
        TooManyCrossingsError: If ``P`` has more than ``limit`` crossings.

    Example:
        >>> edge_degree_distribution(parse_shadow("1 2 1 2"), 0)
        (1, 2, 1)
    """
    if not isinstance(edge, int) or not 0 <= edge < P.num_edges:
        raise EdgeIndexError(f"Edge index {edge!r} out of range for {P.num_edges}.")
    if P.n == 0:
        return (1,)
    _check_shadow(P, limit)
    counts = np.zeros(P.n + 1, dtype=np.int64)
    for start, stop in _blocks(P.n, CHUNK_SIZE):
        _, levels, _ = _state_levels(P.passages, P.first_visit_flags(), start, stop)
        counts += np.bincount(levels[:, edge], minlength=P.n + 1)
    return tuple(counts.tolist())


def state_distribution(
    P: Shadow, limit: int = DEFAULT_LIMIT
) -> Dict[IntPolynomial, int]:
    """Return how many states of ``P`` have each warping crossing polynomial."""
    _check_shadow(P, limit)
    n = P.n
    distribution: Dict[IntPolynomial, int] = {}
    for start, stop in _blocks(n, CHUNK_SIZE):
        over, _, before = _state_levels(P.passages, P.first_visit_flags(), start, stop)
        # Per-state histogram of weight exponents at Over passages
        rows = np.repeat(np.arange(stop - start), over.shape[1])
        histograms = np.zeros((stop - start, n + 1), dtype=np.int64)
        np.add.at(histograms, (rows, before.ravel()), over.ravel())
        unique, counts = np.unique(histograms, axis=0, return_counts=True)
        for coefficients, count in zip(unique.tolist(), counts.tolist()):
            X = IntPolynomial.from_counts(coefficients)
            distribution[X] = distribution.get(X, 0) + count
    return distribution
