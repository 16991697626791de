"""Command-line front end.

Every command prints human-readable lines followed by machine-readable
``RESULT <command> key=value ...`` records. Values containing spaces are
shell-quoted, so records split cleanly with ``shlex.split``.

Exit codes: 0 success, 1 a check failed, 2 usage error, 3 input error.

Functions:
    - main: Parse arguments and dispatch to a command.
    - cmd_poly, cmd_arc, cmd_statesum, cmd_orient, cmd_change, cmd_realize,
      cmd_verify, cmd_corpus: The subcommands.
"""

import argparse
import logging
import os
import shlex
import sys
from typing import Optional, Sequence

from . import __version__
from .corpus import canonical_shadows, gauss_diagrams, plane_curves
from .csv_utils import write_csv_file
from .diagram_core import (
    BasedPlanarCurve,
    crossing_change,
    reverse_based_curve,
    shadow,
)
from .environment_utils import get_spark_session, resolve_path
from .exceptions import (
    BadOuterFaceError,
    InternalInconsistencyError,
    NotFoundError,
    WarpknotError,
)
from .gauss_codes import (
    read_arc_file,
    read_curve_file,
    read_gauss_file,
    read_shadow_file,
    serialize_gauss_code,
    serialize_planar_curve,
    serialize_shadow,
    write_code_file,
)
from .json_utils import write_json_file
from .planar import (
    orient_even_rotation,
    orient_even_warping,
    orient_odd_black_right,
    orient_odd_warping,
    oriented_curve,
)
from .polynomial import (
    IntPolynomial,
    format_closed_form,
    format_coefficients,
    parse_polynomial,
    span,
)
from .realization import realizability_check, realize_search
from .statesum import DEFAULT_LIMIT, state_sum
from .verification import VerifyConfig, run_verification
from .warping import (
    arc_edge_degrees,
    arc_polynomials,
    classify,
    crossing_change_partition,
    warping_crossing_polynomial,
    warping_degree_pair,
    warping_polynomial,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
ONE_MINUS_T = IntPolynomial((1, -1))


def result_line(command: str, **fields) -> str:
    """Render a ``RESULT`` record.

    Example:
        >>> result_line("realize", f="[1,1]", witness="O1 U1")
        "RESULT realize f=[1,1] witness='O1 U1'"
    """
    values = " ".join(f"{key}={shlex.quote(str(v))}" for key, v in fields.items())
    return f"RESULT {command} {values}".rstrip()


def _verdict(ok: bool) -> str:
    return "PASS" if ok else "FAIL"


def cmd_poly(args) -> int:
    """Print W, X, warping degrees and shape flags of every diagram in a file.

    ``.arc`` files are handed to ``cmd_arc``.
    """
    if args.path.endswith(".arc"):
        return cmd_arc(args)
    exit_code = EXIT_OK
    for index, D in enumerate(read_gauss_file(args.path)):
        W = warping_polynomial(D)
        X = warping_crossing_polynomial(D)
        factorization_ok = W == X.mul_by_one_plus_t()
        if not factorization_ok:
            exit_code = EXIT_FAILED
        if D.n == 0:
            print(f"{D}: X = 0; trivial; W = {W}")
            print(result_line("poly", index=index, n=0, W=format_coefficients(W)))
            continue
        shape = classify(D)
        tags = []
        if shape.alternating:
            tags.append("alternating")
        if shape.one_bridge:
            tags.append("one-bridge")
        tags = tags or [f"{shape.bridge_count} bridges"]
        d_forward, d_backward = warping_degree_pair(D)
        print(
            f"{D}: X = {X}; {', '.join(tags)}; W = {W}; d(D) = {d_forward}; "
            f"d(-D) = {d_backward}; span = {span(X)}; "
            f"W = (1+t)X {_verdict(factorization_ok)}"
        )
        print(
            result_line(
                "poly",
                index=index,
                n=D.n,
                W=format_coefficients(W),
                X=format_coefficients(X),
                d=d_forward,
                d_reverse=d_backward,
                alternating=str(shape.alternating).lower(),
                bridges=shape.bridge_count,
                span=span(X),
                factorization=_verdict(factorization_ok),
            )
        )
    return exit_code


def cmd_arc(args) -> int:
    """Print edge degrees and the two polynomials of every arc in a file."""
    for index, S in enumerate(read_arc_file(args.path)):
        W, X = arc_polynomials(S)
        degrees = arc_edge_degrees(S)
        print(f"{S}: W = {W}; X = {X}; edge degrees {list(degrees)}")
        print(
            result_line(
                "arc",
                index=index,
                n=S.n,
                W=format_coefficients(W),
                X=format_coefficients(X),
                degrees=",".join(str(d) for d in degrees),
            )
        )
    return EXIT_OK


def _read_shadows(path: str):
    if path.endswith(".gauss"):
        return [shadow(D) for D in read_gauss_file(path)]
    return read_shadow_file(path)


def cmd_statesum(args) -> int:
    """Sum X and W over every state of each shadow and compare closed forms."""
    spark = get_spark_session() if args.spark else None
    exit_code = EXIT_OK
    for index, P in enumerate(_read_shadows(args.path)):
        report = state_sum(P, limit=args.limit, spark=spark)
        n = report.n
        if report.closed_form_ok:
            z_text = format_closed_form(2 * n, n - 1)
            w_text = format_closed_form(2 * n, n)
        else:
            exit_code = EXIT_FAILED
            z_text, w_text = str(report.Z), str(report.W_total)
        verdict = _verdict(report.closed_form_ok)
        print(f"{P}: Z = {z_text} {verdict}; W_total = {w_text}")
        print(
            result_line(
                "statesum",
                index=index,
                n=n,
                Z=format_coefficients(report.Z),
                W_total=format_coefficients(report.W_total),
                states=report.states_enumerated,
                status=_verdict(report.closed_form_ok),
            )
        )
    return exit_code


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_USAGE


def _print_orientation(method: str, sign: int, curve_text: str) -> None:
    direction = " (ccw)" if method == "rotation" and sign == 1 else ""
    direction = " (cw)" if method == "rotation" and sign == -1 else direction
    print(f"{method}: {sign:+d}{direction}")
    print(curve_text)
    print(result_line("orient", method=method, sign=sign))


def cmd_orient(args) -> int:
    """Choose a canonical orientation of a plane curve.

    Even curves need an OUTER line and take ``warping`` or ``rotation`` (both
    when no method is given). Odd curves need a base point, from a BASE line
    or ``--base``, and take ``warping`` or ``black-right`` (both when no method
    is given). Without an OUTER line an odd curve is oriented on S^2.

    A method that does not fit the parity, or a missing base point, is a usage
    error.
    """
    loaded = read_curve_file(args.path, require_outer=False)
    base = args.base
    if isinstance(loaded, BasedPlanarCurve):
        C = loaded.curve
        base = loaded.base_edge if base is None else base
    else:
        C = loaded

    signs = {}
    if C.n % 2 == 0:
        if args.method == "black-right":
            return _usage_error(
                f"black-right orients odd curves; this curve has {C.n} crossings."
            )
        if C.outer is None:
            raise BadOuterFaceError("Even curves need an OUTER line.")
        methods = [args.method] if args.method else ["warping", "rotation"]
        if C.n == 0 and not args.method:
            methods = ["rotation"]
        for method in methods:
            if method == "warping":
                choice = orient_even_warping(C)
            else:
                choice = orient_even_rotation(C)
            signs[method] = choice.sign
            text = serialize_planar_curve(oriented_curve(C, choice.sign))
            _print_orientation(method, choice.sign, text)
    else:
        if args.method == "rotation":
            return _usage_error(
                f"rotation orients even curves; this curve has {C.n} crossings."
            )
        if base is None:
            return _usage_error(
                "An odd curve needs a base point: add a BASE line or pass --base."
            )
        Cb = BasedPlanarCurve(C, base)
        methods = [args.method] if args.method else ["warping", "black-right"]
        for method in methods:
            if method == "warping":
                choice = orient_odd_warping(Cb)
            else:
                choice = orient_odd_black_right(Cb)
            signs[method] = choice.sign
            oriented = Cb if choice.sign == 1 else reverse_based_curve(Cb)
            _print_orientation(method, choice.sign, serialize_planar_curve(oriented))

    if len(signs) == 2:
        agree = len(set(signs.values())) == 1
        print(f"orientations {'agree' if agree else 'differ'}")
        print(result_line("orient", agree=str(agree).lower()))
    return EXIT_OK


def cmd_change(args) -> int:
    """Change one crossing of every diagram and check the three identities."""
    exit_code = EXIT_OK
    for index, D in enumerate(read_gauss_file(args.path)):
        changed = crossing_change(D, args.crossing)
        X = warping_crossing_polynomial(D)
        X_changed = warping_crossing_polynomial(changed)
        A, B = crossing_change_partition(D, args.crossing)
        t = IntPolynomial.monomial(1)
        ok = (
            X - t * X_changed == ONE_MINUS_T * A
            and X_changed - t * X == ONE_MINUS_T * B
            and X + X_changed == A + B
        )
        if not ok:
            exit_code = EXIT_FAILED
        print(
            f"{D} -> {changed}: X = {X}; X' = {X_changed}; A = {A}; B = {B}; "
            f"identities {_verdict(ok)}"
        )
        print(
            result_line(
                "change",
                index=index,
                crossing=args.crossing,
                changed=serialize_gauss_code(changed),
                X=format_coefficients(X),
                X_changed=format_coefficients(X_changed),
                A=format_coefficients(A),
                B=format_coefficients(B),
                status=_verdict(ok),
            )
        )
    return exit_code


def cmd_realize(args) -> int:
    """Decide whether a polynomial is some X_D and print a witness."""
    f = parse_polynomial(args.polynomial)
    if not realizability_check(f):
        print(f"{f} is not a warping crossing polynomial")
        print(result_line("realize", f=format_coefficients(f), realizable="false"))
        return EXIT_OK
    try:
        witness = realize_search(f, max_n=args.max_n)
    except NotFoundError as err:
        # The shape test passed but the search came back empty
        logger.error("%s", err)
        print(
            result_line(
                "realize", f=format_coefficients(f), realizable="true", witness="none"
            )
        )
        return EXIT_FAILED
    print(f"{f}: witness {witness}")
    print(
        result_line(
            "realize",
            f=format_coefficients(f),
            realizable="true",
            witness=serialize_gauss_code(witness),
        )
    )
    return EXIT_OK


def cmd_verify(args) -> int:
    """Run the verification suite and optionally export the report."""
    config = VerifyConfig.from_env(
        seed=args.seed,
        max_exhaustive_n=args.max_exhaustive_n,
        random_samples=args.random_samples,
        random_max_n=args.random_max_n,
        statesum_limit=args.statesum_limit,
        max_sweep_n=args.max_sweep_n,
        random_shadows_per_n=args.random_shadows_per_n,
        random_shadow_max_n=args.random_shadow_max_n,
        max_relabel_n=args.max_relabel_n,
        use_spark=args.spark,
    )
    report = run_verification(config)
    for check in report.checks:
        print(
            f"{check.name}: {_verdict(check.passed)} "
            f"({check.cases} cases, {check.wall_time:.2f}s) {check.details}".rstrip()
        )
        for finding in check.findings:
            print(f"  finding: {finding}")
        fields = dict(
            check=check.name,
            status=_verdict(check.passed),
            cases=check.cases,
            time=f"{check.wall_time:.3f}",
        )
        if check.counterexample is not None:
            fields["counterexample"] = check.counterexample
        print(result_line("verify", **fields))
    print(
        result_line(
            "verify",
            status=_verdict(report.passed),
            checks=len(report.checks),
            failed=len(report.failures()),
            seed=config.seed,
        )
    )
    if args.report_csv:
        write_csv_file(report.to_frame(), args.report_csv)
    if args.report_json:
        write_json_file(report.to_dict(), args.report_json)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_corpus(args) -> int:
    """Write the exhaustive corpora for n = 1..max_n into a directory.

    Each n gets ``n<n>.gauss`` and ``n<n>.shadow`` (one code per line) and a
    ``curves_n<n>/`` directory with one ``.curve`` file per plane curve.
    """
    directory = resolve_path(args.directory)
    os.makedirs(directory, exist_ok=True)
    for n in range(1, args.max_n + 1):
        diagrams = [serialize_gauss_code(D) for D in gauss_diagrams(n)]
        shadows = [serialize_shadow(P) for P in canonical_shadows(n)]
        write_code_file(os.path.join(directory, f"n{n}.gauss"), diagrams)
        write_code_file(os.path.join(directory, f"n{n}.shadow"), shadows)
        curve_dir = os.path.join(directory, f"curves_n{n}")
        os.makedirs(curve_dir, exist_ok=True)
        curves = 0
        for C in plane_curves(n):
            with open(os.path.join(curve_dir, f"{curves:05d}.curve"), "w") as handle:
                handle.write(serialize_planar_curve(C) + "\n")
            curves += 1
        print(
            result_line(
                "corpus", n=n, gauss=len(diagrams), shadows=len(shadows), curves=curves
            )
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser with every subcommand."""
    parser = argparse.ArgumentParser(
        prog="warpknot",
        description="Warping polynomials, state sums and canonical orientations.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Log INFO with -v, DEBUG with -vv.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    poly = sub.add_parser("poly", help="W, X and shape of each diagram in a file.")
    poly.add_argument("path", help=".gauss or .arc file")
    poly.set_defaults(func=cmd_poly)

    arc = sub.add_parser("arc", help="W and X of each arc diagram in a file.")
    arc.add_argument("path", help=".arc file")
    arc.set_defaults(func=cmd_arc)

    statesum = sub.add_parser("statesum", help="Sum over all states of a shadow.")
    statesum.add_argument("path", help=".shadow or .gauss file")
    statesum.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    statesum.add_argument("--spark", action="store_true", help="Sum on Spark.")
    statesum.set_defaults(func=cmd_statesum)

    orient = sub.add_parser("orient", help="Canonical orientation of a plane curve.")
    orient.add_argument("path", help=".curve file")
    orient.add_argument(
        "--method", choices=["warping", "rotation", "black-right"], default=None
    )
    orient.add_argument("--base", type=int, default=None, help="Base edge index.")
    orient.set_defaults(func=cmd_orient)

    change = sub.add_parser("change", help="Crossing-change identities.")
    change.add_argument("path", help=".gauss file")
    change.add_argument("crossing", type=int, help="Crossing id to change.")
    change.set_defaults(func=cmd_change)

    realize = sub.add_parser("realize", help="Find a diagram with a given X.")
    realize.add_argument("polynomial", help='e.g. "1 + 2t" or "[1,2]"')
    realize.add_argument("--max-n", type=int, default=6)
    realize.set_defaults(func=cmd_realize)

    verify = sub.add_parser("verify", help="Run every verification check.")
    defaults = VerifyConfig()
    verify.add_argument(
        "--seed", type=int, default=None, help="Overrides WARPKNOT_SEED."
    )
    for option in (
        "max_exhaustive_n",
        "random_samples",
        "random_max_n",
        "statesum_limit",
        "max_sweep_n",
        "random_shadows_per_n",
        "random_shadow_max_n",
        "max_relabel_n",
    ):
        flag = "--" + option.replace("_", "-")
        verify.add_argument(flag, type=int, default=getattr(defaults, option))
    verify.add_argument("--spark", action="store_true", help="Sum states on Spark.")
    verify.add_argument("--report-csv", default=None, help="Write the report as CSV.")
    verify.add_argument("--report-json", default=None, help="Write the report as JSON.")
    verify.set_defaults(func=cmd_verify)

    corpus = sub.add_parser("corpus", help="Write the exhaustive corpora.")
    corpus.add_argument("directory")
    corpus.add_argument("--max-n", type=int, default=4)
    corpus.set_defaults(func=cmd_corpus)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_OK if err.code in (0, None) else EXIT_USAGE

    level = logging.WARNING
    if args.verbose == 1:
        level = logging.INFO
    elif args.verbose > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT)

    try:
        return args.func(args)
    except InternalInconsistencyError:
        logger.exception("Internal consistency check failed")
        return EXIT_FAILED
    except (WarpknotError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT

