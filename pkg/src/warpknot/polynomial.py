"""Exact integer-coefficient polynomials in one variable t.

Every warping quantity lives here: warping polynomials, warping crossing
polynomials, state sums and the partition sums of a crossing change. All
arithmetic is exact; there is no floating point anywhere.

Functions:
    - div_exact_one_plus_t: Exact division by (1 + t).
    - reciprocal_transform: t^(n-1) * p(1/t) for a degree bound n - 1.
    - span: Highest minus lowest exponent with a non-zero coefficient.
    - one_plus_t_power: (1 + t)^k with binomial coefficients.
    - parse_polynomial: Parse either text rendering back into a polynomial.
    - format_closed_form: Render c(1+t)^k the way reports print closed forms.
"""

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence, Tuple, Union

from .exceptions import (
    DegreeTooHighError,
    NotDivisibleError,
    PolynomialSyntaxError,
    ZeroPolynomialError,
)

_TERM = re.compile(r"([+-])?(\d+)?(?:\*?(t)(?:\^(\d+))?)?")


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with integer coefficients and non-negative exponents.

    ``coeffs[i]`` is the coefficient of t^i. Trailing zeros are trimmed on
    construction, so the zero polynomial has ``coeffs == ()`` and equality is a
    plain tuple comparison.

    Example:
        >>> IntPolynomial((1, 2, 2, 1, 0))
        IntPolynomial(coeffs=(1, 2, 2, 1))
        >>> str(IntPolynomial((0, 3)))
        '3t'
    """

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def zero(cls) -> "IntPolynomial":
        """Return the zero polynomial."""
        return cls(())

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        """Return the constant polynomial ``value``."""
        return cls((value,))

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "IntPolynomial":
        """Return ``coefficient * t^exponent``."""
        if exponent < 0:
            raise ValueError(f"Exponent must be non-negative, got {exponent}.")
        return cls((0,) * exponent + (coefficient,))

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "IntPolynomial":
        """Return the sum of t^e over ``exponents`` (repeats accumulate)."""
        coeffs = []
        for e in exponents:
            if e < 0:
                raise ValueError(f"Exponent must be non-negative, got {e}.")
            if e >= len(coeffs):
                coeffs.extend([0] * (e + 1 - len(coeffs)))
            coeffs[e] += 1
        return cls(tuple(coeffs))

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> "IntPolynomial":
        """Return the polynomial whose coefficient list is ``counts``."""
        return cls(tuple(counts))

    def is_zero(self) -> bool:
        """Return True for the zero polynomial."""
        return not self.coeffs

    def degree(self) -> int:
        """Return the degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def low_degree(self) -> int:
        """Return the lowest exponent with a non-zero coefficient.

        Raises:
            ZeroPolynomialError: For the zero polynomial.
        """
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ZeroPolynomialError("The zero polynomial has no lowest term.")

    def __getitem__(self, exponent: int) -> int:
        if exponent < 0:
            raise IndexError("Negative exponents are not supported.")
        return self.coeffs[exponent] if exponent < len(self.coeffs) else 0

    def evaluate(self, t: int) -> int:
        """Evaluate at an integer point using Horner's rule."""
        result = 0
        for c in reversed(self.coeffs):
            result = result * t + c
        return result

    def nonzero_terms(self) -> Tuple[Tuple[int, int], ...]:
        """Return ``(exponent, coefficient)`` pairs with non-zero coefficient."""
        return tuple((i, c) for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        other = _coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[i] + other[i] for i in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return _coerce(other) - self

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial.zero()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by t^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def mul_by_one_plus_t(self) -> "IntPolynomial":
        """Return (1 + t) * self as the sum of two shifted copies."""
        return self + self.shift(1)

    def __str__(self) -> str:
        return format_pretty(self)


def _coerce(value) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial.constant(value)
    raise TypeError(f"Expected IntPolynomial or int, got {type(value).__name__}.")


def div_exact_one_plus_t(p: IntPolynomial) -> IntPolynomial:
    """Divide by (1 + t) exactly.

    Synthetic division from the top coefficient down; the remainder p(-1)
    must vanish.

    Args:
        p (IntPolynomial): Dividend.

    Returns:
        IntPolynomial: q with (1 + t) * q == p.

    Raises:
        NotDivisibleError: If (1 + t) does not divide p, i.e. p(-1) != 0.

    Example:
        >>> div_exact_one_plus_t(IntPolynomial((1, 2, 2, 1)))
        IntPolynomial(coeffs=(1, 1, 1))
    """
    if p.is_zero():
        return p
    remainder = p.evaluate(-1)
    if remainder != 0:
        raise NotDivisibleError(
            f"{format_pretty(p)} is not divisible by 1 + t (remainder {remainder})."
        )
    # q_{k-1} = p_k - q_k, running down from the leading term
    d = p.degree()
    quotient = [0] * d
    carry = 0
    for k in range(d, 0, -1):
        carry = p[k] - carry
        quotient[k - 1] = carry
    return IntPolynomial(tuple(quotient))


def reciprocal_transform(p: IntPolynomial, n: int) -> IntPolynomial:
    """Return t^(n-1) * p(1/t).

    Coefficient i of the result is coefficient n-1-i of ``p``.

    Args:
        p (IntPolynomial): Polynomial of degree at most n - 1.
        n (int): Positive bound; for a warping crossing polynomial, c(D).

    Returns:
        IntPolynomial: The index-reversed polynomial.

    Raises:
        ValueError: If n is not positive.
        DegreeTooHighError: If degree(p) > n - 1.

    Example:
        >>> reciprocal_transform(IntPolynomial((1, 2)), 4)
        IntPolynomial(coeffs=(0, 0, 2, 1))
    """
    if not isinstance(n, int) or n <= 0:
        raise ValueError(f"n must be a positive integer, got {n!r}.")
    if p.degree() > n - 1:
        raise DegreeTooHighError(
            f"Degree {p.degree()} of {format_pretty(p)} exceeds n - 1 = {n - 1}."
        )
    return IntPolynomial(tuple(p[n - 1 - i] for i in range(n)))


def span(p: IntPolynomial) -> int:
    """Return highest minus lowest exponent with a non-zero coefficient.

    Raises:
        ZeroPolynomialError: For the zero polynomial.
    """
    if p.is_zero():
        raise ZeroPolynomialError("span is undefined for the zero polynomial.")
    return p.degree() - p.low_degree()


def one_plus_t_power(k: int, scale: int = 1) -> IntPolynomial:
    """Return scale * (1 + t)^k."""
    if k < 0:
        raise ValueError(f"Exponent must be non-negative, got {k}.")
    return IntPolynomial(tuple(scale * comb(k, i) for i in range(k + 1)))


def format_coefficients(p: IntPolynomial) -> str:
    """Render the ascending coefficient list, e.g. ``[1,2,2,1]``.

    The zero polynomial renders as ``[0]``.
    """
    return "[" + ",".join(str(c) for c in (p.coeffs or (0,))) + "]"


def format_pretty(p: IntPolynomial) -> str:
    """Render ``c0 + c1 t + ...`` omitting zero terms, e.g. ``1 + 2t + t^2``."""
    if p.is_zero():
        return "0"
    parts = []
    for exponent, coefficient in p.nonzero_terms():
        magnitude = abs(coefficient)
        if exponent == 0:
            body = str(magnitude)
        else:
            power = "t" if exponent == 1 else f"t^{exponent}"
            body = power if magnitude == 1 else f"{magnitude}{power}"
        if not parts:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f"{'-' if coefficient < 0 else '+'} {body}")
    return " ".join(parts)


def format_closed_form(scale: int, exponent: int) -> str:
    """Render scale * (1 + t)^exponent, e.g. ``8(1+t)^3``."""
    if exponent == 0:
        return str(scale)
    power = "(1+t)" if exponent == 1 else f"(1+t)^{exponent}"
    return f"{scale}{power}"


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse a coefficient list or a pretty rendering.

    Args:
        text (str): ``[c0,c1,...]`` or a sum of terms such as ``2 + 5t + 2t^2``.
            Terms may repeat; ``*`` between coefficient and ``t`` is optional.

    Returns:
        IntPolynomial: The parsed polynomial.

    Raises:
        PolynomialSyntaxError: If the text matches neither rendering.

    Examples:
        >>> parse_polynomial("[1,2,2,1]") == parse_polynomial("1 + 2t + 2t^2 + t^3")
        True
        >>> parse_polynomial("0")
        IntPolynomial(coeffs=())
    """
    compact = "".join(text.split())
    if not compact:
        raise PolynomialSyntaxError("Empty polynomial text.")

    # Ascending coefficient list
    if compact.startswith("["):
        if not compact.endswith("]"):
            raise PolynomialSyntaxError(f"Unterminated coefficient list: {text!r}")
        body = compact[1:-1]
        try:
            return IntPolynomial(tuple(int(c) for c in body.split(",")) if body else ())
        except ValueError as err:
            raise PolynomialSyntaxError(f"Bad coefficient list: {text!r}") from err

    # Sum of terms
    coeffs = {}
    pos = 0
    while pos < len(compact):
        match = _TERM.match(compact, pos)
        sign, digits, variable, power = match.groups()
        if match.end() == pos or (digits is None and variable is None):
            raise PolynomialSyntaxError(
                f"Unexpected character {compact[pos]!r} in {text!r}"
            )
        if pos > 0 and sign is None:
            raise PolynomialSyntaxError(f"Missing operator before term in {text!r}")
        coefficient = int(digits) if digits is not None else 1
        if sign == "-":
            coefficient = -coefficient
        exponent = 0 if variable is None else (int(power) if power else 1)
        coeffs[exponent] = coeffs.get(exponent, 0) + coefficient
        pos = match.end()

    size = max(coeffs) + 1
    return IntPolynomial(tuple(coeffs.get(i, 0) for i in range(size)))
