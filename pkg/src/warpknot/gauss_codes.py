"""Parsers, serializers and file readers for the diagram code formats.

Formats:
    - ``.gauss``: one diagram per line, tokens ``O<k>``/``U<k>``.
    - ``.shadow``: one shadow per line, positive integers each appearing twice.
    - ``.arc``: like ``.gauss`` but read as a linear sequence.
    - ``.curve``: line 1 holds tokens ``<k>`` (first visit) and ``<k>L``/``<k>R``
      (second visit with its chirality flag); then ``OUTER <edge> <LEFT|RIGHT>``
      and an optional ``BASE <edge>``.

A lone ``-`` stands for the empty (n = 0) sequence. ``#`` starts a comment and
blank lines are skipped. Indices in files are 0-based; line and column numbers
in diagnostics are 1-based.

Functions:
    - parse_gauss_code: Parse one Gauss code into a GaussDiagram.
    - parse_shadow: Parse one shadow.
    - parse_arc_code: Parse one arc code.
    - parse_planar_curve: Parse a ``.curve`` document into a PlanarCurve.
    - parse_based_planar_curve: Parse a ``.curve`` document with a BASE line.
    - serialize_gauss_code, serialize_shadow, serialize_arc_code,
      serialize_planar_curve: Render the normal forms the parsers accept.
    - read_gauss_file, read_shadow_file, read_arc_file, read_curve_file: Read
      files, reporting the offending line on failure.
"""

import logging
import re
from typing import Iterator, List, Optional, Tuple, Union

from .diagram_core import (
    ArcDiagram,
    BasedPlanarCurve,
    Chirality,
    GaussDiagram,
    Passage,
    PlanarCurve,
    Shadow,
    Side,
    Strand,
    relabel,
)
from .environment_utils import resolve_path
from .exceptions import BadOuterFaceError, DiagramSyntaxError

logger = logging.getLogger(__name__)

_PASSAGE_TOKEN = re.compile(r"([OU])([1-9]\d*)")
_SHADOW_TOKEN = re.compile(r"[1-9]\d*")
_CURVE_TOKEN = re.compile(r"([1-9]\d*)([LR])?")
_EMPTY = "-"


def _tokens(text: str) -> Iterator[Tuple[str, int]]:
    """Yield ``(token, 1-based column)`` pairs, stopping at a ``#`` comment."""
    text = text.split("#", 1)[0]
    for match in re.finditer(r"\S+", text):
        yield match.group(), match.start() + 1


def _is_empty_code(tokens: List[Tuple[str, int]]) -> bool:
    return not tokens or (len(tokens) == 1 and tokens[0][0] == _EMPTY)


def _parse_passages(text: str, line: Optional[int]) -> List[Passage]:
    tokens = list(_tokens(text))
    if _is_empty_code(tokens):
        return []
    passages = []
    for token, column in tokens:
        match = _PASSAGE_TOKEN.fullmatch(token)
        if match is None:
            raise DiagramSyntaxError(
                f"Bad passage token {token!r}, expected O<k> or U<k>.", line, column
            )
        passages.append(Passage(int(match.group(2)), Strand(match.group(1))))
    mapping = relabel([p.crossing for p in passages])
    return [Passage(mapping[p.crossing], p.strand) for p in passages]


def parse_gauss_code(text: str, line: Optional[int] = None) -> GaussDiagram:
    """Parse a Gauss code such as ``O1 O2 O3 U1 U2 U3``.

    Crossing ids are normalised to 1..n in order of first appearance.

    Args:
        text (str): Whitespace-separated ``O<k>``/``U<k>`` tokens, or ``-``.
        line (int, optional): Line number reported in diagnostics.

    Returns:
        GaussDiagram: The validated diagram.

    Raises:
        DiagramSyntaxError: On a malformed token.
        DiagramValidationError: If a crossing does not appear exactly twice,
            once Over and once Under.

    Example:
        >>> parse_gauss_code("O7 U3 O3 U7").passages[1]
        Passage(crossing=2, strand=<Strand.UNDER: 'U'>)
    """
    return GaussDiagram(tuple(_parse_passages(text, line)))


def parse_arc_code(text: str, line: Optional[int] = None) -> ArcDiagram:
    """Parse an arc code; same tokens as a Gauss code, read linearly."""
    return ArcDiagram(tuple(_parse_passages(text, line)))


def parse_shadow(text: str, line: Optional[int] = None) -> Shadow:
    """Parse a shadow such as ``1 2 1 2``, normalising ids."""
    tokens = list(_tokens(text))
    if _is_empty_code(tokens):
        return Shadow(())
    crossings = []
    for token, column in tokens:
        if _SHADOW_TOKEN.fullmatch(token) is None:
            raise DiagramSyntaxError(
                f"Bad shadow token {token!r}, expected a positive integer.",
                line,
                column,
            )
        crossings.append(int(token))
    mapping = relabel(crossings)
    return Shadow(tuple(mapping[c] for c in crossings))


def _parse_curve_sequence(
    text: str, line: int
) -> Tuple[Tuple[int, ...], Tuple[Chirality, ...]]:
    tokens = list(_tokens(text))
    if _is_empty_code(tokens):
        return (), ()
    crossings, flags = [], {}
    seen = set()
    for token, column in tokens:
        match = _CURVE_TOKEN.fullmatch(token)
        if match is None:
            raise DiagramSyntaxError(
                f"Bad curve token {token!r}, expected <k>, <k>L or <k>R.", line, column
            )
        crossing, flag = int(match.group(1)), match.group(2)
        if crossing not in seen:
            if flag is not None:
                raise DiagramSyntaxError(
                    f"Chirality flag on the first visit of crossing {crossing}.",
                    line,
                    column,
                )
            seen.add(crossing)
        elif crossing not in flags:
            if flag is None:
                raise DiagramSyntaxError(
                    f"Missing chirality flag on the second visit of crossing "
                    f"{crossing}.",
                    line,
                    column,
                )
            flags[crossing] = Chirality(flag)
        crossings.append(crossing)
    # A crossing with a third visit or no second visit fails curve validation
    mapping = relabel(crossings)
    chirality = [Chirality.L] * len(mapping)
    for old, flag in flags.items():
        chirality[mapping[old] - 1] = flag
    if len(flags) != len(mapping):
        missing = sorted(set(mapping) - set(flags))
        raise DiagramSyntaxError(
            f"Crossing {missing[0]} is visited only once.", line, None
        )
    return tuple(mapping[c] for c in crossings), tuple(chirality)


def _parse_edge(token: str, line: int, column: int) -> int:
    if not token.isdigit():
        raise DiagramSyntaxError(
            f"Bad edge index {token!r}, expected a non-negative integer.", line, column
        )
    return int(token)


def _parse_curve_document(
    text: str, require_outer: bool
) -> Tuple[PlanarCurve, Optional[int]]:
    """Parse a ``.curve`` document into a curve and an optional base edge."""
    lines = []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = list(_tokens(raw))
        if tokens:
            lines.append((number, tokens))
    if not lines:
        raise DiagramSyntaxError("Curve document has no sequence line.")

    # First non-blank line is the sequence
    first_number = lines[0][0]
    sequence, chirality = _parse_curve_sequence(
        text.splitlines()[first_number - 1], first_number
    )

    outer, base = None, None
    for number, tokens in lines[1:]:
        keyword, column = tokens[0]
        if keyword == "OUTER":
            if len(tokens) != 3:
                raise DiagramSyntaxError(
                    "Expected 'OUTER <edge> <LEFT|RIGHT>'.", number, column
                )
            edge = _parse_edge(tokens[1][0], number, tokens[1][1])
            side_token, side_column = tokens[2]
            if side_token not in ("LEFT", "RIGHT"):
                raise DiagramSyntaxError(
                    f"Bad side {side_token!r}, expected LEFT or RIGHT.",
                    number,
                    side_column,
                )
            outer = (edge, Side(side_token))
        elif keyword == "BASE":
            if len(tokens) != 2:
                raise DiagramSyntaxError("Expected 'BASE <edge>'.", number, column)
            base = _parse_edge(tokens[1][0], number, tokens[1][1])
        else:
            raise DiagramSyntaxError(
                f"Unknown directive {keyword!r}, expected OUTER or BASE.",
                number,
                column,
            )

    if outer is None and require_outer:
        raise BadOuterFaceError("Curve document has no OUTER line.")
    return PlanarCurve(sequence, chirality, outer), base


def parse_planar_curve(text: str, require_outer: bool = True) -> PlanarCurve:
    """Parse a ``.curve`` document.

    Args:
        text (str): Document text; a BASE line, if present, is validated and
            then ignored.
        require_outer (bool): Reject documents without an OUTER line. Pass
            False for curves on the sphere.

    Returns:
        PlanarCurve: The validated curve.

    Raises:
        DiagramSyntaxError: On a malformed token or directive.
        NotPlanarError: If the rotation system does not yield n + 2 faces.
        BadOuterFaceError: If OUTER is missing or names a bad edge.

    Example:
        >>> parse_planar_curve("1 1L\\nOUTER 1 LEFT").n
        1
    """
    curve, base = _parse_curve_document(text, require_outer)
    if base is not None:
        curve.check_edge(base)
    return curve


def parse_based_planar_curve(text: str) -> BasedPlanarCurve:
    """Parse a ``.curve`` document that carries a BASE line."""
    curve, base = _parse_curve_document(text, require_outer=True)
    if base is None:
        raise DiagramSyntaxError("Curve document has no BASE line.")
    return BasedPlanarCurve(curve, base)


def serialize_gauss_code(D: GaussDiagram) -> str:
    """Render a Gauss diagram, ``-`` for n = 0."""
    return str(D)


def serialize_arc_code(S: ArcDiagram) -> str:
    """Render an arc diagram, ``-`` for n = 0."""
    return str(S)


def serialize_shadow(P: Shadow) -> str:
    """Render a shadow, ``-`` for n = 0."""
    return str(P)


def serialize_curve_sequence(C: PlanarCurve) -> str:
    """Render the sequence line of a ``.curve`` document."""
    if C.n == 0:
        return _EMPTY
    tokens = []
    for i, c in enumerate(C.sequence):
        first, _ = C.positions(c)
        tokens.append(str(c) if i == first else f"{c}{C.chirality[c - 1].value}")
    return " ".join(tokens)


def serialize_planar_curve(
    C: Union[PlanarCurve, BasedPlanarCurve], base_edge: Optional[int] = None
) -> str:
    """Render a ``.curve`` document.

    Args:
        C (PlanarCurve | BasedPlanarCurve): Curve to render.
        base_edge (int, optional): BASE line value; taken from ``C`` when it
            is a BasedPlanarCurve.

    Returns:
        str: The document, lines joined by newlines, without a trailing newline.
    """
    if isinstance(C, BasedPlanarCurve):
        C, base_edge = C.curve, C.base_edge
    lines = [serialize_curve_sequence(C)]
    if C.outer is not None:
        lines.append(f"OUTER {C.outer[0]} {C.outer[1].value}")
    if base_edge is not None:
        lines.append(f"BASE {base_edge}")
    return "\n".join(lines)


def _read_lines(path: str, parser):
    resolved_path = resolve_path(path)
    items = []
    with open(resolved_path) as handle:
        for number, raw in enumerate(handle, start=1):
            if not list(_tokens(raw)):
                continue
            try:
                items.append(parser(raw, number))
            except DiagramSyntaxError:
                raise
            except ValueError as err:
                raise type(err)(f"line {number}: {err}") from err
    logger.debug("Read %d entries from %s", len(items), resolved_path)
    return items


def read_gauss_file(path: str) -> List[GaussDiagram]:
    """Read every diagram of a ``.gauss`` file.

    Raises:
        DiagramSyntaxError: With line and column of the bad token.
        DiagramValidationError: With the line number prefixed to the message.
    """
    return _read_lines(path, parse_gauss_code)


def read_shadow_file(path: str) -> List[Shadow]:
    """Read every shadow of a ``.shadow`` file."""
    return _read_lines(path, parse_shadow)


def read_arc_file(path: str) -> List[ArcDiagram]:
    """Read every arc of a ``.arc`` file."""
    return _read_lines(path, parse_arc_code)


def read_curve_file(
    path: str, require_outer: bool = True
) -> Union[PlanarCurve, BasedPlanarCurve]:
    """Read a ``.curve`` file.

    Returns:
        PlanarCurve | BasedPlanarCurve: A based curve when the file has a BASE
        line, otherwise a plain curve.
    """
    with open(resolve_path(path)) as handle:
        text = handle.read()
    curve, base = _parse_curve_document(text, require_outer)
    return curve if base is None else BasedPlanarCurve(curve, base)


def write_code_file(path: str, codes: List[str]) -> None:
    """Write one serialized code per line to ``path``."""
    resolved_path = resolve_path(path)
    with open(resolved_path, "w") as handle:
        for code in codes:
            handle.write(f"{code}\n")
