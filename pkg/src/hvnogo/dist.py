"""Binary-outcome probability primitives in exact or floating arithmetic.

Conventions
-----------
Every distribution in this package is over one or two binary outcomes.  A
joint over (a, b) is stored as a flat 4-tuple in alphanumeric order of the
outcome pair::

    index 0: ab = 00      index 2: ab = 10
    index 1: ab = 01      index 3: ab = 11

so ``entries[2*a + b]`` is the probability of detector outcomes (a, b).
This ordering is frozen; every module and file format uses it.

Scalar kinds
------------
Probabilities are either exact rationals (``fractions.Fraction``) or
double-precision floats, never a mix inside one container.  Constructors
promote: if any input value is a float the whole container becomes float
("real mode"); otherwise ints and Fractions are stored as Fractions
("exact mode").  The hidden-variable pipeline works in exact mode, where
all identities hold with zero residual; the quantum pipeline works in real
mode because squared cosines are generically irrational.

All real-mode invariant checks use the single tolerance ``REAL_TOL``.

Any joint can be traded for three independent parameters: the detector-b
marginal ``x = P(b=0)`` and the two conditional a-distributions
``(e_p, 1-e_p) = P(a | b=0)`` and ``(e_w, 1-e_w) = P(a | b=1)``.  In the
delayed-choice reading, b selects the apparatus configuration, e_p is the
particle-statistics weight and e_w the wave-statistics weight.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ConditionOnNull, DegenerateMarginal, InvalidDistribution

Scalar = Union[Fraction, float]

#: Single tolerance used by every float-mode invariant check in the package.
REAL_TOL = 1e-12


def parse_rational(text: str) -> Fraction:
    """Parse the rational literal format "p/q", with integer shorthand "p".

    >>> parse_rational("1/3")
    Fraction(1, 3)
    >>> parse_rational("2")
    Fraction(2, 1)
    """
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational literal: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Inverse of :func:`parse_rational`; integers print without "/1"."""
    return str(Fraction(value))


def _coerce_homogeneous(values, what: str) -> tuple[Scalar, ...]:
    """Coerce a sequence of numbers to one scalar kind.

    Floats force the whole container to real mode; otherwise everything is
    stored exactly.
    """
    vals = list(values)
    for v in vals:
        if isinstance(v, bool) or not isinstance(v, (int, float, Fraction)):
            raise TypeError(f"{what}: expected int, Fraction, or float, got {type(v).__name__}")
    if any(isinstance(v, float) for v in vals):
        return tuple(float(v) for v in vals)
    return tuple(Fraction(v) for v in vals)


def _check_probability(p: Scalar, what: str) -> None:
    if isinstance(p, Fraction):
        if p < 0 or p > 1:
            raise InvalidDistribution(f"{what}: probability {p} outside [0, 1]")
    else:
        if not math.isfinite(p):
            raise InvalidDistribution(f"{what}: probability is not finite")
        if p < -REAL_TOL or p > 1 + REAL_TOL:
            raise InvalidDistribution(f"{what}: probability {p!r} outside [0, 1] beyond tolerance")


def _check_normalized(entries, what: str) -> None:
    total = sum(entries)
    if isinstance(total, Fraction):
        if total != 1:
            raise InvalidDistribution(f"{what}: entries sum to {total}, expected 1")
    elif abs(total - 1.0) > REAL_TOL:
        raise InvalidDistribution(f"{what}: entries sum to {total!r}, expected 1 within {REAL_TOL}")


def is_exact(value: Scalar) -> bool:
    """True for exact rationals, False for floats."""
    return isinstance(value, Fraction)


@dataclass(frozen=True)
class BinaryDist:
    """Probability distribution over one binary outcome."""

    p0: Scalar
    p1: Scalar

    def __post_init__(self):
        p0, p1 = _coerce_homogeneous((self.p0, self.p1), "BinaryDist")
        object.__setattr__(self, "p0", p0)
        object.__setattr__(self, "p1", p1)
        _check_probability(p0, "BinaryDist.p0")
        _check_probability(p1, "BinaryDist.p1")
        _check_normalized((p0, p1), "BinaryDist")

    @property
    def exact(self) -> bool:
        return is_exact(self.p0)

    def as_tuple(self) -> tuple[Scalar, Scalar]:
        return (self.p0, self.p1)


@dataclass(frozen=True)
class JointDist:
    """Joint distribution over detector outcomes (a, b), order 00, 01, 10, 11."""

    entries: tuple[Scalar, Scalar, Scalar, Scalar]

    def __post_init__(self):
        entries = _coerce_homogeneous(self.entries, "JointDist")
        if len(entries) != 4:
            raise InvalidDistribution(f"JointDist needs 4 entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)
        for i, e in enumerate(entries):
            _check_probability(e, f"JointDist.entries[{i}]")
        _check_normalized(entries, "JointDist")

    def entry(self, a: int, b: int) -> Scalar:
        """Probability of the outcome pair (a, b)."""
        if a not in (0, 1) or b not in (0, 1):
            raise ValueError(f"outcomes must be bits, got (a={a}, b={b})")
        return self.entries[2 * a + b]

    @property
    def exact(self) -> bool:
        return is_exact(self.entries[0])


@dataclass(frozen=True)
class GeneralParams:
    """The three-parameter representation (x, e_p, e_w) of a joint.

    x is the probability of b=0; e_p and e_w are the probabilities of a=0
    conditional on b=0 and b=1 respectively.
    """

    x: Scalar
    e_p: Scalar
    e_w: Scalar

    def __post_init__(self):
        x, e_p, e_w = _coerce_homogeneous((self.x, self.e_p, self.e_w), "GeneralParams")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "e_p", e_p)
        object.__setattr__(self, "e_w", e_w)
        _check_probability(x, "GeneralParams.x")
        _check_probability(e_p, "GeneralParams.e_p")
        _check_probability(e_w, "GeneralParams.e_w")

    @property
    def exact(self) -> bool:
        return is_exact(self.x)


def joint_from_params(params: GeneralParams) -> JointDist:
    """Reconstruct the joint from (x, e_p, e_w).

    Returns (x*e_p, (1-x)*e_w, x*(1-e_p), (1-x)*(1-e_w)): the b-marginal is
    (x, 1-x) and the conditional a-distributions are (e_p, 1-e_p) at b=0 and
    (e_w, 1-e_w) at b=1.
    """
    x, e_p, e_w = params.x, params.e_p, params.e_w
    one = Fraction(1) if params.exact else 1.0
    return JointDist((x * e_p, (one - x) * e_w, x * (one - e_p), (one - x) * (one - e_w)))


def params_from_joint(joint: JointDist) -> GeneralParams:
    """Invert :func:`joint_from_params`.

    Raises :class:`DegenerateMarginal` when the b-marginal is degenerate:
    x=0 leaves e_p undefined, x=1 leaves e_w undefined.
    """
    e00, e01, e10, e11 = joint.entries
    x = e00 + e10
    x_complement = e01 + e11  # equals 1-x, exactly in rational mode
    if x == 0:
        raise DegenerateMarginal("e_p")
    if x_complement == 0:
        raise DegenerateMarginal("e_w")
    return GeneralParams(x, e00 / x, e01 / x_complement)


def marginal_b(joint: JointDist) -> BinaryDist:
    """Marginal distribution of the b outcome: (e00+e10, e01+e11)."""
    e00, e01, e10, e11 = joint.entries
    return BinaryDist(e00 + e10, e01 + e11)


def conditional_a_given_b(joint: JointDist, b: int) -> BinaryDist:
    """Conditional distribution of a given the b outcome (Bayes' rule).

    Raises :class:`ConditionOnNull` when the b-marginal is zero.
    """
    if b not in (0, 1):
        raise ValueError(f"b must be a bit, got {b}")
    top = joint.entry(0, b)
    bottom = joint.entry(1, b)
    norm = top + bottom
    if norm <= 0:
        raise ConditionOnNull(f"marginal probability of b={b} is zero")
    return BinaryDist(top / norm, bottom / norm)


def tv_distance(d1: JointDist, d2: JointDist) -> Scalar:
    """Total-variation distance: half the entrywise L1 distance.

    Exact when both joints are exact; otherwise a float.
    """
    diffs = [abs(p - q) for p, q in zip(d1.entries, d2.entries)]
    total = sum(diffs)
    if d1.exact and d2.exact:
        return total / 2
    return float(total) / 2.0
