"""Which polynomials are warping crossing polynomials, and witnesses for them.

A polynomial f is the X of some n-crossing diagram exactly when its non-zero
coefficients are positive, fill a contiguous block of exponents d..d+s, and
d + s <= n - 1 with n = f(1). The exponent bound holds because every crossing
weight is read from a base point where that crossing is not warping.

Functions:
    - realizability_check: Test the shape condition.
    - realize_search: Exhaustive search for a diagram with a given X.
    - witness_index: Every X attained at n crossings, with a first witness.
    - contiguous_polynomials: Every polynomial passing the shape condition
      with a given coefficient sum.
"""

import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator

from .corpus import gauss_diagrams
from .diagram_core import GaussDiagram
from .exceptions import NotFoundError, TooLargeError
from .polynomial import IntPolynomial, format_pretty
from .warping import warping_crossing_polynomial

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 6


def realizability_check(f: IntPolynomial) -> bool:
    """Return True if ``f`` has the shape of a warping crossing polynomial.

    Examples:
        >>> realizability_check(parse_polynomial("1 + 2t^2"))
        False
        >>> realizability_check(parse_polynomial("3t"))
        True
    """
    if f.is_zero():
        return False
    low, high = f.low_degree(), f.degree()
    block = f.coeffs[low : high + 1]
    if any(c <= 0 for c in block):
        return False
    return high <= f.evaluate(1) - 1


@lru_cache(maxsize=None)
def witness_index(n: int) -> Dict[IntPolynomial, GaussDiagram]:
    """Map every X_D attained by an n-crossing diagram to its first witness.

    Diagrams are visited in corpus order, so the witness is deterministic.
    """
    index: Dict[IntPolynomial, GaussDiagram] = {}
    for D in gauss_diagrams(n):
        X = warping_crossing_polynomial(D)
        if X not in index:
            index[X] = D
    logger.debug("%d distinct warping crossing polynomials at n = %d", len(index), n)
    return index


def realize_search(f: IntPolynomial, max_n: int = DEFAULT_MAX_N) -> GaussDiagram:
    """Find a Gauss diagram with X_D = f by exhaustive search.

    Every diagram with n = f(1) crossings is tried, one rotation class of
    sequences at a time.

    Args:
        f (IntPolynomial): Target polynomial.
        max_n (int): Largest crossing count searched. Defaults to 6.

    Returns:
        GaussDiagram: A witness.

    Raises:
        TooLargeError: If f(1) exceeds ``max_n``.
        NotFoundError: If no diagram has X_D = f.

    Example:
        >>> D = realize_search(parse_polynomial("1 + t + t^2"))
        >>> str(warping_crossing_polynomial(D))
        '1 + t + t^2'
    """
    n = f.evaluate(1)
    if n > max_n:
        raise TooLargeError(
            f"{format_pretty(f)} needs {n} crossings, above the search bound {max_n}."
        )
    if n < 1 or any(c < 0 for c in f.coeffs):
        raise NotFoundError(f"{format_pretty(f)} is not a warping crossing polynomial.")
    witness = witness_index(n).get(f)
    if witness is None:
        raise NotFoundError(
            f"No diagram with {n} crossings has X = {format_pretty(f)}."
        )
    return witness


def contiguous_polynomials(n: int) -> Iterator[IntPolynomial]:
    """Yield every polynomial with coefficient sum ``n`` passing the shape test.

    Blocks m_0..m_s of positive integers summing to n are placed at every
    offset d with d + s <= n - 1.
    """
    for s in range(n):
        # Compositions of n into s + 1 positive parts
        for cuts in combinations(range(1, n), s):
            bounds = (0,) + cuts + (n,)
            parts = tuple(bounds[i + 1] - bounds[i] for i in range(s + 1))
            for d in range(n - s):
                yield IntPolynomial((0,) * d + parts)
