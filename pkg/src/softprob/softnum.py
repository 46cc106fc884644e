"""Arithmetic on the two-axis number system a*0~ + b.

A soft number pairs a real part ``b`` with a coefficient ``a`` on the soft
zero axis 0~. The axis element is nilpotent: 0~ * 0~ = 0, which fixes the
whole multiplication table. Soft numbers carry infinitesimal event mass
(densities) alongside ordinary probability mass, so they show up as the
return type of nearly every quantity in this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, Union

from .errors import DomainError

Scalar = Union[int, float]


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class SoftNumber:
    """Value a*0~ + b with soft coefficient ``soft`` and real part ``real``."""

    soft: float
    real: float

    def __post_init__(self):
        object.__setattr__(self, "soft", _check_finite("soft", self.soft))
        object.__setattr__(self, "real", _check_finite("real", self.real))

    @classmethod
    def zero(cls) -> "SoftNumber":
        """The absolute zero 0*0~ + 0."""
        return cls(0.0, 0.0)

    @classmethod
    def soft_zero(cls, coefficient: float = 1.0) -> "SoftNumber":
        """A pure soft zero a*0~."""
        return cls(coefficient, 0.0)

    @classmethod
    def from_real(cls, value: float) -> "SoftNumber":
        """Embed an ordinary real number."""
        return cls(0.0, value)

    @property
    def is_absolute_zero(self) -> bool:
        return self.soft == 0.0 and self.real == 0.0

    @property
    def is_soft_zero(self) -> bool:
        """True for a*0~ with a != 0."""
        return self.soft != 0.0 and self.real == 0.0

    def conjugate(self) -> "SoftNumber":
        """Flip the sign of the soft coefficient."""
        return SoftNumber(-self.soft, self.real)

    def __add__(self, other) -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SoftNumber(self.soft + other.soft, self.real + other.real)

    __radd__ = __add__

    def __neg__(self) -> "SoftNumber":
        return SoftNumber(-self.soft, -self.real)

    def __sub__(self, other) -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return SoftNumber(self.soft - other.soft, self.real - other.real)

    def __rsub__(self, other) -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a*0~ + b)(c*0~ + d) = (ad + bc)*0~ + bd, using 0~^2 = 0
        return SoftNumber(self.soft * other.real + self.real * other.soft,
                          self.real * other.real)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other) -> "SoftNumber":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return div(other, self)

    def __pow__(self, n: int) -> "SoftNumber":
        return pow_nat(self, n)

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.real, self.soft) < (other.real, other.soft)

    def __le__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.real, self.soft) <= (other.real, other.soft)

    def __gt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.real, self.soft) > (other.real, other.soft)

    def __ge__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self.real, self.soft) >= (other.real, other.soft)

    def __str__(self) -> str:
        return render_soft(self)


def _coerce(value) -> SoftNumber:
    if isinstance(value, SoftNumber):
        return value
    if isinstance(value, (int, float)):
        return SoftNumber(0.0, float(value))
    return NotImplemented


def add(s: SoftNumber, t: SoftNumber) -> SoftNumber:
    """Componentwise sum."""
    return s + t


def sub(s: SoftNumber, t: SoftNumber) -> SoftNumber:
    """Componentwise difference."""
    return s - t


def mul(s: SoftNumber, t: SoftNumber) -> SoftNumber:
    """Product under the nilpotent rule 0~^2 = 0."""
    return s * t


def pow_nat(s: SoftNumber, n: int) -> SoftNumber:
    """Natural power: (a*0~ + b)^n = n*a*b^(n-1)*0~ + b^n, with s^0 = 1."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError(f"exponent must be a natural number, got {n!r}")
    if n == 0:
        return SoftNumber(0.0, 1.0)
    if n == 1:
        return s
    return SoftNumber(n * s.soft * s.real ** (n - 1), s.real ** n)


def lift(f: Callable[[float], float], df: Callable[[float], float],
         s: SoftNumber) -> SoftNumber:
    """Apply an analytic real function: f(a*0~ + x) = a*f'(x)*0~ + f(x).

    ``df`` must be the derivative of ``f``. Both are evaluated at the real
    part only; a non-finite or failing evaluation is a domain error.
    """
    try:
        y = f(s.real)
        dy = df(s.real)
    except (ValueError, OverflowError, ZeroDivisionError) as exc:
        raise DomainError(
            f"function undefined at {s.real!r}: {exc}") from exc
    if not (math.isfinite(y) and math.isfinite(dy)):
        raise DomainError(
            f"function or derivative not finite at {s.real!r}: f={y!r}, df={dy!r}")
    return SoftNumber(s.soft * dy, y)


SIGN_RULE = "sign_rule"
CONJUGATE = "conjugate"


def soft_abs(s: SoftNumber, mode: str) -> SoftNumber:
    """Absolute value, in one of two inequivalent senses.

    ``sign_rule`` multiplies both components by the sign of the real part,
    so |a*0~ + b| = (a*sign(b))*0~ + |b|; it is undefined when b = 0.
    ``conjugate`` takes sqrt(s * conj(s)) and always lands on the real
    axis: |a*0~ + b| = |b|, discarding the soft coefficient.
    """
    if mode == SIGN_RULE:
        if s.real == 0.0:
            raise DomainError("sign_rule absolute value is undefined at real part 0")
        sign = 1.0 if s.real > 0 else -1.0
        return SoftNumber(s.soft * sign, abs(s.real))
    if mode == CONJUGATE:
        return SoftNumber(0.0, abs(s.real))
    raise DomainError(f"unknown absolute-value mode {mode!r}")


def div(num: SoftNumber, den: SoftNumber) -> SoftNumber:
    """Quotient num/den.

    Division by absolute zero is an error. A pure soft-zero denominator
    a*0~ divides only pure soft zeros, giving the real ratio of the
    coefficients. Otherwise the denominator c*0~ + d has d != 0 and
    rationalizing with its conjugate gives
    ((a*d - b*c)/d^2)*0~ + b/d.
    """
    if den.is_absolute_zero:
        raise DomainError("division by absolute zero")
    if den.real == 0.0:
        # pure soft zero denominator
        if num.real != 0.0:
            raise DomainError(
                "only a pure soft zero can be divided by a pure soft zero")
        return SoftNumber(0.0, num.soft / den.soft)
    d = den.real
    return SoftNumber((num.soft * d - num.real * den.soft) / (d * d),
                      num.real / d)


def cmp(s: SoftNumber, t: SoftNumber) -> int:
    """Total order: real parts first, soft coefficients break ties.

    Returns -1, 0, or 1.
    """
    a, b = (s.real, s.soft), (t.real, t.soft)
    if a < b:
        return -1
    if a > b:
        return 1
    return 0


@dataclass(frozen=True)
class SymmetricPair:
    """Alternative (height, width) coordinates for a soft number.

    ``height`` is the component sum soft + real and ``width`` is the share
    of the height sitting on the real axis. Values produced by ``to_sp``
    may fall outside the unit width band; ``from_sp`` only accepts widths
    in [0, 1].
    """

    height: float
    width: float


def to_sp(s: SoftNumber) -> SymmetricPair:
    """Convert to (height, width) coordinates; component sum 0 is an error."""
    h = s.soft + s.real
    if h == 0.0:
        raise DomainError("height is zero, width coordinate undefined")
    return SymmetricPair(h, s.real / h)


def from_sp(p: SymmetricPair) -> SoftNumber:
    """Convert back from (height, width); width must lie in [0, 1]."""
    a, b = float(p.height), float(p.width)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("symmetric-pair coordinates must be finite")
    if not 0.0 <= b <= 1.0:
        raise DomainError(f"width must lie in [0, 1], got {b!r}")
    return SoftNumber((1.0 - b) * a, b * a)


@dataclass(frozen=True)
class BridgeNumber:
    """One-sided form a*0~ (+) b with the soft term on the left or right.

    The two orientations hold the same components but are distinct values;
    ``side`` participates in equality. ``mirror`` swaps the orientation.
    """

    side: str
    soft: float
    real: float

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise DomainError(f"side must be 'left' or 'right', got {self.side!r}")
        object.__setattr__(self, "soft", _check_finite("soft", self.soft))
        object.__setattr__(self, "real", _check_finite("real", self.real))

    def mirror(self) -> "BridgeNumber":
        other = "right" if self.side == "left" else "left"
        return BridgeNumber(other, self.soft, self.real)

    def to_soft(self) -> SoftNumber:
        """Collapse the orientation and return the plain soft number."""
        return SoftNumber(self.soft, self.real)


def bridges_of(s: SoftNumber) -> tuple[BridgeNumber, BridgeNumber]:
    """The (left, right) oriented forms of a soft number."""
    return (BridgeNumber("left", s.soft, s.real),
            BridgeNumber("right", s.soft, s.real))


@dataclass(frozen=True)
class ExtendedSoftNumber:
    """Three-axis value h1*0log0~ + h2*0~ + h3 used by entropy quantities.

    The extra axis 0log0~ carries coefficients of the indeterminate form
    0~*log(0~). Only linear combinations are defined on it; there is no
    multiplication involving the 0log0~ axis.
    """

    zlogz: float
    soft: float
    real: float

    def __post_init__(self):
        object.__setattr__(self, "zlogz", _check_finite("zlogz", self.zlogz))
        object.__setattr__(self, "soft", _check_finite("soft", self.soft))
        object.__setattr__(self, "real", _check_finite("real", self.real))

    def __add__(self, other) -> "ExtendedSoftNumber":
        if not isinstance(other, ExtendedSoftNumber):
            return NotImplemented
        return ExtendedSoftNumber(self.zlogz + other.zlogz,
                                  self.soft + other.soft,
                                  self.real + other.real)

    def __sub__(self, other) -> "ExtendedSoftNumber":
        if not isinstance(other, ExtendedSoftNumber):
            return NotImplemented
        return ExtendedSoftNumber(self.zlogz - other.zlogz,
                                  self.soft - other.soft,
                                  self.real - other.real)

    def __neg__(self) -> "ExtendedSoftNumber":
        return ExtendedSoftNumber(-self.zlogz, -self.soft, -self.real)

    def scaled(self, factor: float) -> "ExtendedSoftNumber":
        return ExtendedSoftNumber(factor * self.zlogz, factor * self.soft,
                                  factor * self.real)

    def without_zlogz(self) -> SoftNumber:
        """Project onto the two ordinary axes; zlogz must already be 0."""
        if self.zlogz != 0.0:
            raise DomainError("value still carries a 0log0~ component")
        return SoftNumber(self.soft, self.real)

    def __str__(self) -> str:
        return render_extended(self)


def ext_combine(terms: Iterable[tuple[float, ExtendedSoftNumber]]) -> ExtendedSoftNumber:
    """Weighted sum of extended values, componentwise."""
    z = s = r = 0.0
    for weight, e in terms:
        z += weight * e.zlogz
        s += weight * e.soft
        r += weight * e.real
    return ExtendedSoftNumber(z, s, r)


def render_soft(s: SoftNumber) -> str:
    """Human form "a*0~ + b" with shortest round-trip float digits."""
    return f"{s.soft!r}*0~ + {s.real!r}"


def render_extended(e: ExtendedSoftNumber) -> str:
    """Human form "h1*0log0~ + h2*0~ + h3"."""
    return f"{e.zlogz!r}*0log0~ + {e.soft!r}*0~ + {e.real!r}"


def soft_to_dict(s: SoftNumber) -> dict:
    return {"soft": s.soft, "real": s.real}


def soft_from_dict(obj: dict) -> SoftNumber:
    try:
        return SoftNumber(float(obj["soft"]), float(obj["real"]))
    except (KeyError, TypeError) as exc:
        raise DomainError(f"not a soft-number record: {obj!r}") from exc


def ext_to_dict(e: ExtendedSoftNumber) -> dict:
    return {"zlogz": e.zlogz, "soft": e.soft, "real": e.real}


def ext_from_dict(obj: dict) -> ExtendedSoftNumber:
    try:
        return ExtendedSoftNumber(float(obj["zlogz"]), float(obj["soft"]),
                                  float(obj["real"]))
    except (KeyError, TypeError) as exc:
        raise DomainError(f"not an extended record: {obj!r}") from exc
