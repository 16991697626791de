"""Batch verification of every identity the toolkit relies on.

Each check sweeps a deterministic corpus (exhaustive for small crossing
numbers, seeded random draws beyond) and returns a ``CheckResult``. A failed
check always carries a serialized counterexample that reproduces it.

Functions:
    - run_verification: Run every check and collect a VerifyReport.
    - check_*: The individual checks; each takes a VerifyConfig.
"""

import logging
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import numpy as np
import pandas as pd

from .corpus import (
    canonical_shadows,
    gauss_diagrams,
    is_realizable_shadow,
    plane_curves,
    random_gauss_diagram,
    random_shadow,
    sphere_curves,
)
from .diagram_core import (
    BasedPlanarCurve,
    GaussDiagram,
    crossing_change,
    mirror,
    reverse,
    reverse_based_curve,
    relabel_curve,
    reverse_curve,
    rotate_curve,
    shadow,
)
from .environment_utils import get_seed, get_spark_session
from .exceptions import WarpknotError
from .gauss_codes import parse_gauss_code, parse_shadow, serialize_planar_curve
from .planar import (
    Color,
    checkerboard,
    compute_faces,
    induced_alternating,
    orient_even_rotation,
    orient_even_warping,
    orient_odd_black_right,
    orient_odd_warping,
    rotation_number,
    sphere_black_majority_coloring,
    winding_labels,
)
from .polynomial import (
    IntPolynomial,
    parse_polynomial,
    reciprocal_transform,
    span,
)
from .realization import (
    contiguous_polynomials,
    realizability_check,
    realize_search,
    witness_index,
)
from .statesum import edge_degree_distribution, state_sum
from .warping import (
    classify,
    crossing_change_partition,
    crossing_weights,
    edge_degrees,
    edge_degrees_naive,
    is_alternating_asymmetric,
    terminal_degree_multisets,
    warping_crossing_polynomial,
    warping_degree_pair,
    warping_polynomial,
)

logger = logging.getLogger(__name__)

T = IntPolynomial.monomial(1)
ONE_MINUS_T = IntPolynomial((1, -1))


@dataclass(frozen=True)
class VerifyConfig:
    """Scale and seed of a verification run.

    Attributes:
        max_exhaustive_n (int): Exhaustive bound for the warping identities.
        random_samples (int): Random diagrams drawn for the factorization check.
        random_max_n (int): Largest crossing number of those random diagrams.
        seed (int): Seed of every random draw.
        statesum_limit (int): Largest shadow enumerated for state sums.
        max_sweep_n (int): Exhaustive bound for state sums, crossing changes,
            the warping degree bound and the plane-curve corpus.
        random_shadows_per_n (int): Random shadows per crossing number above
            ``max_sweep_n``.
        random_shadow_max_n (int): Largest crossing number of random shadows.
        max_relabel_n (int): Largest crossing number whose curves are
            re-oriented under every change of start passage and crossing ids.
        use_spark (bool): Sum states on Spark.
    """

    max_exhaustive_n: int = 5
    random_samples: int = 10000
    random_max_n: int = 12
    seed: int = 0
    statesum_limit: int = 20
    max_sweep_n: int = 6
    random_shadows_per_n: int = 100
    random_shadow_max_n: int = 16
    max_relabel_n: int = 4
    use_spark: bool = False

    def __post_init__(self):
        positive = (
            "max_exhaustive_n",
            "random_max_n",
            "statesum_limit",
            "max_sweep_n",
            "max_relabel_n",
        )
        for name in positive:
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}.")
        for name in ("random_samples", "random_shadows_per_n", "random_shadow_max_n"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 0:
                raise ValueError(
                    f"{name} must be a non-negative integer, got {value!r}."
                )
        if not -(2**63) <= self.seed < 2**63:
            raise ValueError(f"seed must fit in 64 bits, got {self.seed}.")

    @classmethod
    def from_env(cls, **overrides) -> "VerifyConfig":
        """Build a config whose seed defaults to ``WARPKNOT_SEED``."""
        if overrides.get("seed") is None:
            overrides["seed"] = get_seed()
        return cls(**{k: v for k, v in overrides.items() if v is not None})


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check.

    Attributes:
        name (str): Check name.
        passed (bool): True when no counterexample was found.
        cases (int): Number of cases examined.
        wall_time (float): Seconds spent.
        counterexample (str | None): Serialized input that fails the check.
        details (str): Short human-readable summary.
        findings (tuple[str, ...]): Reported observations that are not failures.
    """

    name: str
    passed: bool
    cases: int
    wall_time: float
    counterexample: Optional[str] = None
    details: str = ""
    findings: Tuple[str, ...] = ()


@dataclass(frozen=True)
class VerifyReport:
    """Every check of a run, in execution order."""

    checks: Tuple[CheckResult, ...]
    config: VerifyConfig = field(default_factory=VerifyConfig)

    @property
    def passed(self) -> bool:
        """True when every check passed."""
        return all(check.passed for check in self.checks)

    def failures(self) -> Tuple[CheckResult, ...]:
        """The failed checks."""
        return tuple(check for check in self.checks if not check.passed)

    def to_frame(self) -> pd.DataFrame:
        """Return one row per check."""
        return pd.DataFrame(
            [
                {
                    "check": c.name,
                    "passed": c.passed,
                    "cases": c.cases,
                    "wall_time_s": round(c.wall_time, 6),
                    "counterexample": c.counterexample or "",
                    "details": c.details,
                    "findings": "; ".join(c.findings),
                }
                for c in self.checks
            ],
            columns=[
                "check",
                "passed",
                "cases",
                "wall_time_s",
                "counterexample",
                "details",
                "findings",
            ],
        )

    def to_dict(self) -> Dict:
        """Return a JSON-serialisable summary."""
        return {
            "passed": self.passed,
            "config": asdict(self.config),
            "checks": [
                {**asdict(c), "findings": list(c.findings)} for c in self.checks
            ],
        }


class _Sweep:
    """Counts cases and records the first counterexample of one check."""

    def __init__(self, name: str):
        self.name = name
        self.cases = 0
        self.counterexample = None
        self.details = ""
        self.findings: List[str] = []
        self._start = time.perf_counter()

    def fail(self, counterexample: str, details: str) -> None:
        if self.counterexample is None:
            self.counterexample = counterexample
            self.details = details
            logger.warning("%s failed on %s: %s", self.name, counterexample, details)

    @property
    def failed(self) -> bool:
        return self.counterexample is not None

    def result(self, details: str = "") -> CheckResult:
        wall_time = time.perf_counter() - self._start
        passed = self.counterexample is None
        logger.info(
            "%s: %s over %d cases in %.2fs",
            self.name,
            "PASS" if passed else "FAIL",
            self.cases,
            wall_time,
        )
        return CheckResult(
            self.name,
            passed,
            self.cases,
            wall_time,
            self.counterexample,
            self.details if not passed else details,
            tuple(self.findings),
        )


def _diagrams_up_to(max_n: int) -> Iterator[GaussDiagram]:
    for n in range(1, max_n + 1):
        yield from gauss_diagrams(n)


def _random_diagrams(config: VerifyConfig) -> Iterator[GaussDiagram]:
    rng = np.random.default_rng(config.seed)
    for _ in range(config.random_samples):
        n = int(rng.integers(1, config.random_max_n + 1))
        yield random_gauss_diagram(rng, n)


def check_worked_example(config: VerifyConfig) -> CheckResult:
    """The one-bridge trefoil and the four-crossing state sum."""
    sweep = _Sweep("worked_example")
    D = parse_gauss_code("O1 O2 O3 U1 U2 U3")
    sweep.cases += 1
    if warping_crossing_polynomial(D) != parse_polynomial("1 + t + t^2"):
        sweep.fail(str(D), f"X = {warping_crossing_polynomial(D)}")
    elif warping_polynomial(D) != parse_polynomial("1 + 2t + 2t^2 + t^3"):
        sweep.fail(str(D), f"W = {warping_polynomial(D)}")
    P = parse_shadow("1 2 3 4 1 2 3 4")
    sweep.cases += 1
    Z = state_sum(P).Z
    if Z != parse_polynomial("8 + 24t + 24t^2 + 8t^3"):
        sweep.fail(str(P), f"Z = {Z}")
    return sweep.result("X = 1 + t + t^2, Z = 8(1+t)^3")


def check_state_sums(config: VerifyConfig, spark=None) -> CheckResult:
    """Closed forms of Z_P and the summed W_D over the shadow corpus."""
    sweep = _Sweep("state_sum_closed_form")
    rng = np.random.default_rng(config.seed)
    exhaustive_n = min(config.max_sweep_n, config.statesum_limit)
    shadows = [P for n in range(1, exhaustive_n + 1) for P in canonical_shadows(n)]
    random_n = min(config.random_shadow_max_n, config.statesum_limit)
    for n in range(exhaustive_n + 1, random_n + 1):
        shadows.extend(
            random_shadow(rng, n) for _ in range(config.random_shadows_per_n)
        )

    z_by_n: Dict[int, IntPolynomial] = {}
    for P in shadows:
        sweep.cases += 1
        report = state_sum(P, limit=config.statesum_limit, spark=spark)
        if not report.closed_form_ok:
            sweep.fail(str(P), f"Z = {report.Z}, W_total = {report.W_total}")
        elif report.W_total != report.Z.mul_by_one_plus_t():
            sweep.fail(str(P), "W_total != (1 + t) Z")
        elif reciprocal_transform(report.Z, P.n) != report.Z:
            sweep.fail(str(P), "Z is not palindromic")
        elif z_by_n.setdefault(P.n, report.Z) != report.Z:
            sweep.fail(str(P), f"Z differs between shadows with {P.n} crossings")
        if sweep.failed:
            break
    return sweep.result(f"{sweep.cases} shadows up to n = {max(z_by_n, default=0)}")


def check_warping_factorization(
    config: VerifyConfig, mutate: Callable[[GaussDiagram], GaussDiagram] = None
) -> CheckResult:
    """W_D = (1 + t) X_D, exhaustive and on random diagrams.

    Args:
        config (VerifyConfig): Scale and seed.
        mutate (callable, optional): Applied to each diagram before X is
            computed; used to confirm the check catches a broken X.
    """
    sweep = _Sweep("warping_factorization")
    diagrams = [_diagrams_up_to(config.max_exhaustive_n), _random_diagrams(config)]
    for source in diagrams:
        for D in source:
            sweep.cases += 1
            X = warping_crossing_polynomial(mutate(D) if mutate else D)
            W = warping_polynomial(D)
            if W != X.mul_by_one_plus_t():
                sweep.fail(str(D), f"W = {W}, X = {X}")
                return sweep.result()
            over, under = terminal_degree_multisets(D)
            exponents = [w.degree() for w in crossing_weights(D).values()]
            if sorted(over.elements()) != sorted(exponents) or sorted(
                under.elements()
            ) != sorted(e + 1 for e in exponents):
                sweep.fail(str(D), "terminal edge degrees do not match the weights")
                return sweep.result()
    return sweep.result(
        f"n <= {config.max_exhaustive_n} and {config.random_samples} random"
    )


def check_edge_degree_step_rule(config: VerifyConfig) -> CheckResult:
    """The +1/-1 step rule agrees with independent definition walks."""
    sweep = _Sweep("edge_degree_step_rule")
    for D in _diagrams_up_to(config.max_exhaustive_n):
        sweep.cases += 1
        if edge_degrees(D) != edge_degrees_naive(D):
            sweep.fail(str(D), f"step rule gives {edge_degrees(D).degrees}")
            break
    return sweep.result()


def check_crossing_change(config: VerifyConfig) -> Tuple[CheckResult, CheckResult]:
    """Crossing-change identities and the span bound, every crossing.

    Returns:
        tuple[CheckResult, CheckResult]: The identities and the span bound.
    """
    identities = _Sweep("crossing_change_identities")
    spans = _Sweep("span_bound")
    attained = None
    for D in _diagrams_up_to(config.max_sweep_n):
        X = warping_crossing_polynomial(D)
        for p in D.crossings:
            identities.cases += 1
            spans.cases += 1
            changed = crossing_change(D, p)
            X_changed = warping_crossing_polynomial(changed)
            A, B = crossing_change_partition(D, p)
            if X - T * X_changed != ONE_MINUS_T * A:
                identities.fail(f"{D} @ {p}", "X_D - t X_D' != (1 - t) A")
            elif X_changed - T * X != ONE_MINUS_T * B:
                identities.fail(f"{D} @ {p}", "X_D' - t X_D != (1 - t) B")
            elif X + X_changed != A + B:
                identities.fail(f"{D} @ {p}", "X_D + X_D' != A + B")
            gap = abs(span(X_changed) - span(X))
            if gap > 2:
                spans.fail(f"{D} @ {p}", f"span changes by {gap}")
            elif gap == 2 and attained is None:
                attained = f"{D} @ {p}"
        if identities.failed and spans.failed:
            break
    if attained is None and not spans.failed:
        spans.fail("-", "no crossing change attains a span gap of 2")
    return identities.result(), spans.result(f"gap 2 attained by {attained}")


def check_reverse_mirror(config: VerifyConfig) -> CheckResult:
    """X of the reverse and of the mirror are the reciprocal of X."""
    sweep = _Sweep("reverse_mirror")
    for D in _diagrams_up_to(config.max_exhaustive_n):
        sweep.cases += 1
        expected = reciprocal_transform(warping_crossing_polynomial(D), D.n)
        if warping_crossing_polynomial(reverse(D)) != expected:
            sweep.fail(str(D), "X_{-D} is not the reciprocal of X_D")
        elif warping_crossing_polynomial(mirror(D)) != expected:
            sweep.fail(str(D), "X_{D*} is not the reciprocal of X_D")
        if sweep.failed:
            break
    return sweep.result()


def _is_single_term(X: IntPolynomial, n: int) -> bool:
    terms = X.nonzero_terms()
    return len(terms) == 1 and terms[0][1] == n


def _is_geometric(X: IntPolynomial, n: int) -> bool:
    return X.coeffs == (1,) * n


def check_alternating_and_one_bridge(
    config: VerifyConfig,
) -> Tuple[CheckResult, CheckResult]:
    """Alternating iff X = n t^d; one-bridge iff X = 1 + t + ... + t^(n-1).

    Alternating diagrams must have equal weights and one-bridge diagrams
    distinct ones.
    """
    alternating = _Sweep("alternating_characterization")
    one_bridge = _Sweep("one_bridge_characterization")
    for D in _diagrams_up_to(config.max_exhaustive_n):
        alternating.cases += 1
        one_bridge.cases += 1
        shape = classify(D)
        X = warping_crossing_polynomial(D)
        weights = set(crossing_weights(D).values())
        if shape.alternating != _is_single_term(X, D.n):
            alternating.fail(str(D), f"alternating={shape.alternating}, X = {X}")
        elif shape.alternating and len(weights) != 1:
            alternating.fail(str(D), "alternating diagram with unequal weights")
        if shape.one_bridge != _is_geometric(X, D.n):
            one_bridge.fail(str(D), f"one_bridge={shape.one_bridge}, X = {X}")
        elif shape.one_bridge and len(weights) != D.n:
            one_bridge.fail(str(D), "one-bridge diagram with repeated weights")
        if alternating.failed and one_bridge.failed:
            break
    return alternating.result(), one_bridge.result()


def _weak_compositions(total: int, slots: int) -> Iterator[Tuple[int, ...]]:
    for cuts in combinations(range(total + slots - 1), slots - 1):
        bounds = (-1,) + cuts + (total + slots - 1,)
        yield tuple(bounds[i + 1] - bounds[i] - 1 for i in range(slots))


def check_realizability(config: VerifyConfig) -> CheckResult:
    """Realizable shapes have witnesses and no other polynomial does."""
    sweep = _Sweep("realizability_round_trip")
    for n in range(1, config.max_exhaustive_n + 1):
        index = witness_index(n)
        for f in contiguous_polynomials(n):
            sweep.cases += 1
            try:
                witness = realize_search(f, max_n=config.max_exhaustive_n)
            except WarpknotError:
                sweep.fail(str(f), "no witness for a realizable shape")
                return sweep.result()
            if warping_crossing_polynomial(witness) != f:
                sweep.fail(str(f), f"witness {witness} has the wrong X")
                return sweep.result()
        for coefficients in _weak_compositions(n, n):
            sweep.cases += 1
            f = IntPolynomial(coefficients)
            if realizability_check(f) != (f in index):
                sweep.fail(
                    str(f), f"check={realizability_check(f)}, found={f in index}"
                )
                return sweep.result()
    return sweep.result()


def check_warping_degree_bound(config: VerifyConfig) -> Tuple[CheckResult, CheckResult]:
    """d(D) + d(-D) + 1 <= n, equality exactly on alternating diagrams.

    Violations on Gauss codes with no plane embedding are reported as findings.
    Also checks that even alternating diagrams are told apart from their
    reverse by X.
    """
    bound = _Sweep("warping_degree_bound")
    asymmetry = _Sweep("alternating_even_asymmetry")
    for D in _diagrams_up_to(config.max_sweep_n):
        bound.cases += 1
        d_forward, d_backward = warping_degree_pair(D)
        total = d_forward + d_backward + 1
        alternating = classify(D).alternating
        if total > D.n or (total == D.n) != alternating:
            message = (
                f"d(D) + d(-D) + 1 = {total}, n = {D.n}, alternating={alternating}"
            )
            if is_realizable_shadow(shadow(D)):
                bound.fail(str(D), message)
            else:
                bound.findings.append(f"{D}: {message}")
                logger.warning("Abstract Gauss code %s: %s", D, message)
        if alternating and D.n % 2 == 0:
            asymmetry.cases += 1
            if not is_alternating_asymmetric(D):
                asymmetry.fail(str(D), "X_D = X_{-D} for an even alternating diagram")
        if bound.failed and asymmetry.failed:
            break
    return bound.result(), asymmetry.result()


def check_edge_degree_distribution(config: VerifyConfig) -> CheckResult:
    """States with d(e) = m number C(n, m) at every edge of every shadow."""
    sweep = _Sweep("edge_degree_distribution")
    for n in range(1, config.max_sweep_n + 1):
        expected = tuple(comb(n, m) for m in range(n + 1))
        for P in canonical_shadows(n):
            for edge in range(P.num_edges):
                sweep.cases += 1
                counts = edge_degree_distribution(P, edge, limit=config.statesum_limit)
                if counts != expected:
                    sweep.fail(f"{P} @ {edge}", f"counts {counts}")
                    return sweep.result()
    return sweep.result()


def _curve_code(C) -> str:
    return serialize_planar_curve(C).replace("\n", " | ")


def _check_curve_structure(C, code: str, sweep: _Sweep) -> None:
    faces = compute_faces(C)
    board = checkerboard(C, faces)
    if faces.num_faces != C.n + 2:
        sweep.fail(code, f"{faces.num_faces} faces")
    elif board.color(faces.outer_face) is not Color.WHITE:
        sweep.fail(code, "outer face is not White")
    elif C.n and not classify(induced_alternating(C, board)).alternating:
        sweep.fail(code, "induced diagram is not alternating")
    winding_labels(C, 1, faces)
    rot = rotation_number(C)
    if rot % 2 != (C.n + 1) % 2:
        sweep.fail(code, f"rotation number {rot} has the wrong parity")
    elif rotation_number(reverse_curve(C)) != -rot:
        sweep.fail(code, "rotation number is not odd under reversal")


def _shifted(C, k: int):
    return relabel_curve(rotate_curve(C, k))


def _even_orientations_differ(C, code: str, sweep: _Sweep, shifts: bool) -> bool:
    rotation = orient_even_rotation(C).sign
    if orient_even_rotation(reverse_curve(C)).sign != -rotation:
        sweep.fail(code, "rotation orientation is not equivariant")
    if C.n == 0:
        return False
    warping = orient_even_warping(C).sign
    if orient_even_warping(reverse_curve(C)).sign != -warping:
        sweep.fail(code, "warping orientation is not equivariant")
    for k in range(1, C.num_edges if shifts else 2):
        shifted = _shifted(C, k)
        if orient_even_warping(shifted).sign != warping:
            sweep.fail(code, f"warping orientation changes under shift {k}")
        if orient_even_rotation(shifted).sign != rotation:
            sweep.fail(code, f"rotation orientation changes under shift {k}")
    return warping != rotation


def _odd_orientations_differ(
    Cb: BasedPlanarCurve, code: str, sweep: _Sweep, shifts: bool
) -> bool:
    warping = orient_odd_warping(Cb).sign
    black_right = orient_odd_black_right(Cb).sign
    reversed_Cb = reverse_based_curve(Cb)
    if orient_odd_warping(reversed_Cb).sign != -warping:
        sweep.fail(code, "odd warping orientation is not equivariant")
    if orient_odd_black_right(reversed_Cb).sign != -black_right:
        sweep.fail(code, "black-right orientation is not equivariant")
    size = Cb.curve.num_edges
    for k in range(1, size if shifts else 1):
        # The base point moves with the start
        shifted = BasedPlanarCurve(_shifted(Cb.curve, k), (Cb.base_edge - k) % size)
        if orient_odd_warping(shifted).sign != warping:
            sweep.fail(code, f"odd warping orientation changes under shift {k}")
        if orient_odd_black_right(shifted).sign != black_right:
            sweep.fail(code, f"black-right orientation changes under shift {k}")
    return warping != black_right


def check_plane_curves(config: VerifyConfig) -> Tuple[CheckResult, CheckResult]:
    """Faces, colouring, induced diagrams, rotation numbers and orientations.

    Up to ``max_relabel_n`` crossings every orientation is also recomputed
    from every start passage with crossings renumbered, and odd curves on
    S^2 are oriented as well.

    Returns:
        tuple[CheckResult, CheckResult]: The pipeline invariants and the
        search for curves where the two canonical orientations differ.
    """
    pipeline = _Sweep("plane_curve_pipeline")
    independence = _Sweep("orientation_independence")
    even_witness, odd_witness = None, None

    for n in range(config.max_sweep_n + 1):
        shifts = n <= config.max_relabel_n
        for C in plane_curves(n):
            pipeline.cases += 1
            code = _curve_code(C)
            try:
                _check_curve_structure(C, code, pipeline)
                if n % 2 == 0:
                    if _even_orientations_differ(C, code, pipeline, shifts):
                        even_witness = even_witness or code
                    continue
                for base in range(C.num_edges):
                    based_code = f"{code} | BASE {base}"
                    Cb = BasedPlanarCurve(C, base)
                    if _odd_orientations_differ(Cb, based_code, pipeline, shifts):
                        odd_witness = odd_witness or based_code
            except WarpknotError as err:
                pipeline.fail(code, f"{type(err).__name__}: {err}")
            if pipeline.failed:
                return pipeline.result(), independence.result()

    # S^2 colourings and orientations of odd curves
    for n in range(1, config.max_sweep_n + 1, 2):
        orient = n <= config.max_relabel_n
        for C in sphere_curves(n):
            pipeline.cases += 1
            code = _curve_code(C)
            board = sphere_black_majority_coloring(C)
            if board.count(Color.BLACK) <= board.count(Color.WHITE):
                pipeline.fail(code, "majority colouring is not Black")
            try:
                for base in range(C.num_edges if orient else 0):
                    based_code = f"{code} | BASE {base}"
                    Cb = BasedPlanarCurve(C, base)
                    _odd_orientations_differ(Cb, based_code, pipeline, True)
            except WarpknotError as err:
                pipeline.fail(code, f"{type(err).__name__}: {err}")
            if pipeline.failed:
                return pipeline.result(), independence.result()

    independence.cases = pipeline.cases
    if even_witness is None and config.max_sweep_n >= 2:
        independence.fail("-", "no even curve separates the two orientations")
    elif odd_witness is None and config.max_sweep_n >= 3:
        independence.fail("-", "no based odd curve separates the two orientations")
    return (
        pipeline.result(),
        independence.result(f"even: {even_witness}; odd: {odd_witness}"),
    )


def run_verification(
    config: VerifyConfig = None,
    mutate: Callable[[GaussDiagram], GaussDiagram] = None,
    spark=None,
) -> VerifyReport:
    """Run every check.

    Args:
        config (VerifyConfig, optional): Scale and seed; defaults from the
            environment.
        mutate (callable, optional): Passed to the factorization check.
        spark (SparkSession, optional): Session for state sums; created when
            ``config.use_spark`` is set and none is given.

    Returns:
        VerifyReport: All check results.

    Example:
        >>> report = run_verification(VerifyConfig(max_sweep_n=4))
        >>> report.passed
        True
    """
    config = config or VerifyConfig.from_env()
    if config.use_spark and spark is None:
        spark = get_spark_session("warpknot-verify")
    logger.info("Running verification with %s", config)

    checks: List[CheckResult] = [
        check_worked_example(config),
        check_state_sums(config, spark=spark),
        check_warping_factorization(config, mutate=mutate),
        check_edge_degree_step_rule(config),
        *check_crossing_change(config),
        check_reverse_mirror(config),
        *check_alternating_and_one_bridge(config),
        check_realizability(config),
        *check_warping_degree_bound(config),
        check_edge_degree_distribution(config),
        *check_plane_curves(config),
    ]
    report = VerifyReport(tuple(checks), config)
    logger.info(
        "Verification %s: %d checks, %d failed",
        "passed" if report.passed else "failed",
        len(checks),
        len(report.failures()),
    )
    return report
