"""Deterministic generators for shadows, diagrams and plane curves.

Exhaustive corpora are generated, never checked in. Shadows are enumerated as
perfect matchings of 2n cyclic positions, one representative per rotation
class. Random draws go through ``numpy.random.Generator`` so a seed fixes
every sample.

Functions:
    - canonical_shadows: One shadow per rotation class of n-crossing pairings.
    - gauss_diagrams: Every state of every canonical shadow.
    - random_shadow, random_gauss_diagram: Seeded random draws.
    - is_realizable_shadow: Whether some chirality flags embed the shadow.
    - sphere_curves: Plane curves on the sphere, up to rotation and relabeling.
    - plane_curves: Every sphere curve with each of its faces made unbounded.
"""

import logging
from functools import lru_cache
from itertools import product
from typing import Iterator, List, Tuple

import numpy as np

from .diagram_core import (
    Chirality,
    GaussDiagram,
    PlanarCurve,
    Shadow,
    Side,
    assign_state_mask,
    relabel,
    relabel_curve,
    rotate_curve,
    with_outer,
)
from .exceptions import NotPlanarError

logger = logging.getLogger(__name__)


def _matchings(points: List[int]) -> Iterator[List[Tuple[int, int]]]:
    """Yield every perfect matching of ``points`` (recursively on the first)."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for k, partner in enumerate(rest):
        remaining = rest[:k] + rest[k + 1 :]
        for matching in _matchings(remaining):
            yield [(first, partner)] + matching


def _offsets(partner: List[int]) -> Tuple[int, ...]:
    size = len(partner)
    return tuple((partner[i] - i) % size for i in range(size))


def _shadow_from_partner(partner: List[int]) -> Shadow:
    labels = [0] * len(partner)
    next_id = 1
    for i, j in enumerate(partner):
        if labels[i] == 0:
            labels[i] = labels[j] = next_id
            next_id += 1
    return Shadow(tuple(labels))


@lru_cache(maxsize=None)
def _canonical_shadows(n: int) -> Tuple[Shadow, ...]:
    if n == 0:
        return (Shadow(()),)
    size = 2 * n
    shadows = []
    for matching in _matchings(list(range(size))):
        partner = [0] * size
        for a, b in matching:
            partner[a], partner[b] = b, a
        offsets = _offsets(partner)
        # Keep the rotation-minimal representative of each class
        if offsets == min(offsets[k:] + offsets[:k] for k in range(size)):
            shadows.append(_shadow_from_partner(partner))
    logger.debug("Generated %d canonical shadows with %d crossings", len(shadows), n)
    return tuple(shadows)


def canonical_shadows(n: int) -> Tuple[Shadow, ...]:
    """Return one shadow per rotation class of n-crossing Gauss pairings.

    Args:
        n (int): Crossing count, at least 0.

    Returns:
        tuple[Shadow, ...]: Shadows in generation order; deterministic.

    Raises:
        ValueError: If ``n`` is negative.

    Example:
        >>> [str(P) for P in canonical_shadows(2)]
        ['1 1 2 2', '1 2 1 2']
    """
    if n < 0:
        raise ValueError(f"Crossing count must be non-negative, got {n}.")
    return _canonical_shadows(n)


def gauss_diagrams(n: int) -> Iterator[GaussDiagram]:
    """Yield every state of every canonical shadow with ``n`` crossings.

    Every abstract Gauss diagram is a rotation of one of these, and all the
    warping polynomials are invariant under rotating the sequence.
    """
    for P in canonical_shadows(n):
        for mask in range(2**n):
            yield assign_state_mask(P, mask)


def random_shadow(rng: np.random.Generator, n: int) -> Shadow:
    """Draw a uniformly random abstract shadow with ``n`` crossings."""
    sequence = rng.permutation(np.repeat(np.arange(1, n + 1), 2)).tolist()
    mapping = relabel(sequence)
    return Shadow(tuple(mapping[c] for c in sequence))


def random_gauss_diagram(rng: np.random.Generator, n: int) -> GaussDiagram:
    """Draw a random abstract Gauss diagram with ``n`` crossings."""
    P = random_shadow(rng, n)
    mask = int(rng.integers(0, 2**n)) if n else 0
    return assign_state_mask(P, mask)


def _satisfies_gauss_parity(P: Shadow) -> bool:
    """Every crossing has an even number of passages between its two visits."""
    for c in range(1, P.n + 1):
        first, second = P.positions(c)
        if (second - first - 1) % 2:
            return False
    return True


def _embeddings(P: Shadow) -> Iterator[PlanarCurve]:
    if not _satisfies_gauss_parity(P):
        return
    for flags in product((Chirality.L, Chirality.R), repeat=P.n):
        try:
            yield PlanarCurve(P.passages, flags)
        except NotPlanarError:
            continue


@lru_cache(maxsize=4096)
def _realizable(passages: Tuple[int, ...]) -> bool:
    return next(_embeddings(Shadow(passages)), None) is not None


def is_realizable_shadow(P: Shadow) -> bool:
    """Return True if some chirality flags make ``P`` a plane curve."""
    return _realizable(P.passages)


def curve_key(C: PlanarCurve) -> Tuple:
    """Return a key shared by all encodings of the same curve.

    Encodings differ by the starting passage and crossing ids; the key is the
    smallest normalised encoding over all starting passages.
    """
    keys = []
    for k in range(C.num_edges):
        rotated = relabel_curve(rotate_curve(C, k))
        keys.append(
            (rotated.sequence, tuple(f.value for f in rotated.chirality))
        )
    return min(keys)


@lru_cache(maxsize=None)
def _sphere_curves(n: int) -> Tuple[PlanarCurve, ...]:
    if n == 0:
        return (PlanarCurve((), ()),)
    curves, keys = [], set()
    for P in canonical_shadows(n):
        for C in _embeddings(P):
            key = curve_key(C)
            if key not in keys:
                keys.add(key)
                curves.append(C)
    logger.debug("Generated %d sphere curves with %d crossings", len(curves), n)
    return tuple(curves)


def sphere_curves(n: int) -> Tuple[PlanarCurve, ...]:
    """Return every curve with ``n`` crossings on the sphere, without outer marker.

    Curves are deduplicated up to the starting passage and crossing labels;
    mirror images are kept as distinct curves.
    """
    if n < 0:
        raise ValueError(f"Crossing count must be non-negative, got {n}.")
    return _sphere_curves(n)


def plane_curves(n: int) -> Iterator[PlanarCurve]:
    """Yield every sphere curve once per face, that face made unbounded.

    The outer marker is the first dart of the face as traced.
    """
    for C in sphere_curves(n):
        if n == 0:
            yield with_outer(C, (0, Side.RIGHT))
            yield with_outer(C, (0, Side.LEFT))
            continue
        for face in C.trace_faces():
            yield with_outer(C, face[0])
