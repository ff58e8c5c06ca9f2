"""Executable forms of Baudhayana's rules I.58-I.62 and the exact identity
checks that relate them.

The circle-area comparisons anachronistically use pi (the source rules never
mention it); pi enters only through a fixed 50-digit decimal literal used
for error reporting, keeping the computational core float-free.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_numbers import Rational, rat

# First 50 decimals of pi, truncated. Used only for reporting how far the
# rules land from the circle constant; no rational equals pi.
PI_DECIMAL_50 = "3.14159265358979323846264338327950288419716939937510"


class NonPositiveSide(ValueError):
    """The circulature rule needs a positive square side."""


class OutOfRange(ValueError):
    """A side-over-diameter ratio must lie strictly between 0 and 1."""


def pi_reference() -> Rational:
    """The 50-digit pi literal as an exact rational (a stand-in, not pi)."""
    whole, frac = PI_DECIMAL_50.split(".")
    return rat(int(whole + frac), 10 ** len(frac))


@dataclass(frozen=True)
class RuleValue:
    """A rule's value together with the summands exactly as the rule states
    them; the term structure is data, not just a number."""

    value: Rational
    term_list: tuple[Rational, ...]

    def __post_init__(self) -> None:
        total = rat(0)
        for term in self.term_list:
            total = total + term
        if total != self.value:
            raise ValueError("term list does not sum to the stated value")


VERDICT_EQUAL = "exact-equal"
VERDICT_RESIDUAL = "differs-by-residual"


@dataclass(frozen=True)
class IdentityReport:
    """Bit-exact comparison of two rationals; residual = left - right."""

    name: str
    left: Rational
    right: Rational
    residual: Rational
    verdict: str

    @classmethod
    def compare(cls, name: str, left: Rational, right: Rational) -> "IdentityReport":
        residual = left - right
        verdict = VERDICT_EQUAL if residual.num == 0 else VERDICT_RESIDUAL
        return cls(name, left, right, residual, verdict)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "left": f"{self.left.num}/{self.left.den}",
            "right": f"{self.right.num}/{self.right.den}",
            "residual": f"{self.residual.num}/{self.residual.den}",
            "verdict": self.verdict,
        }


def sqrt2_i61() -> RuleValue:
    """Rule I.61-62: the four-term approximation of the square diagonal,
    1 + 1/3 + 1/12 - 1/408 = 577/408."""
    terms = (rat(1), rat(1, 3), rat(1, 12), rat(-1, 408))
    value = rat(0)
    for term in terms:
        value = value + term
    return RuleValue(value, terms)


def circulature_i58(s: Rational, sqrt2: Rational) -> Rational:
    """Rule I.58: square of side s into a circle of radius
    r = s/2 + E/3, with E = (sqrt2 - 1) * s/2 the excess of the
    half-diagonal over the half-side."""
    if s <= 0:
        raise NonPositiveSide(f"side {s} must be positive")
    half = s / 2
    excess = (sqrt2 - rat(1)) * half
    return half + excess / 3


def quadrature_ratio_i59() -> Rational:
    """Rule I.59 as a side-over-diameter ratio:
    1 - (1/(8*29)) * (28 + 1/6 - (1/8)(1/6))."""
    bracket = rat(28) + rat(1, 6) - rat(1, 8) * rat(1, 6)
    return rat(1) - bracket / rat(8 * 29)


def quadrature_ratio_i60() -> Rational:
    """Rule I.60, the cruder reading: remove 2 of 15 diameter parts."""
    return rat(1) - rat(2, 15)


def diameter_over_side_i58(sqrt2: Rational) -> Rational:
    """d/s implied by I.58 at unit side: 2r with r = circulature_i58(1),
    i.e. (2 + sqrt2)/3 reduced."""
    return circulature_i58(rat(1), sqrt2) * 2


def verify_decompositions() -> list[IdentityReport]:
    """The three exact decomposition checks around s/d = 1224/1393.

    (a) 1224/1393 against the I.59 ratio: off by exactly
        -41/(8*29*6*8*1393) = -41/15512448.
    (b) 1224/1393 against the 34-based split (1 - 33/(8*34)) + 1/(8*34*1393):
        exactly equal.
    (c) the I.59 ratio against the seemingly simpler 1 - 1/8 + 1/(8*34):
        a nonzero exact residual, which is why the simpler rule is a
        different rule.
    """
    inverse_ratio = rat(1224, 1393)
    v59 = quadrature_ratio_i59()
    alt34 = (rat(1) - rat(33, 8 * 34)) + rat(1, 8 * 34 * 1393)
    simpler = rat(1) - rat(1, 8) + rat(1, 8 * 34)
    return [
        IdentityReport.compare("s/d from I.58 with sqrt2 of I.61-62 vs quadrature I.59", inverse_ratio, v59),
        IdentityReport.compare("s/d from I.58 vs the 34-based decomposition", inverse_ratio, alt34),
        IdentityReport.compare("quadrature I.59 vs the simpler 8-and-34 rule", v59, simpler),
    ]


def implied_pi(side_over_diameter: Rational) -> Rational:
    """Circle constant implied by equating square and circle areas:
    s^2 = pi d^2 / 4 gives pi = 4 (s/d)^2.

    An anachronism kept as the standard accuracy metric; the source rules
    never speak of pi.
    """
    if not (rat(0) < side_over_diameter < rat(1)):
        raise OutOfRange(f"ratio {side_over_diameter} must be in (0, 1)")
    return side_over_diameter * side_over_diameter * 4
