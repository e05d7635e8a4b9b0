"""Truncated formal power series with exact rational coefficients.

Used to expand the algebraic generating functions for the 31-2 occurrence
counts (square roots of 1-4x) and the exponential generating functions for
the 21-3 and 12-3 avoider counts (nested exponentials of Bell type), and to
compare their coefficients with the recurrence tables and avoider formulas.

A series carries exactly ``order`` coefficients (exponents 0..order-1);
arithmetic truncates to the shorter operand, and ``agrees_with`` is the
explicit way to compare across truncation orders.  Default truncation order
for the prebuilt expansions is 24; callers may not exceed order 64.  Pure
immutable values throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .qpoly import IdentityViolation

DEFAULT_ORDER = 24
MAX_ORDER = 64

Coeff = Union[int, Fraction]


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series needs a positive truncation order")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Coeff], order: int | None = None
                    ) -> "PowerSeries":
        cs = list(coeffs)
        if order is not None:
            cs = (cs + [0] * order)[:order]
        return cls(tuple(Fraction(c) for c in cs))

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls.from_coeffs([], order)

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        return cls.from_coeffs([1], order)

    @classmethod
    def x(cls, order: int) -> "PowerSeries":
        return cls.from_coeffs([0, 1], order)

    def coefficient(self, exponent: int) -> Fraction:
        if not 0 <= exponent < self.order:
            raise IndexError(
                f"exponent {exponent} beyond truncation order {self.order}")
        return self.coeffs[exponent]

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries.from_coeffs(self.coeffs, order)

    def agrees_with(self, other: "PowerSeries") -> bool:
        """Coefficientwise equality up to the shorter truncation order."""
        m = min(self.order, other.order)
        return self.coeffs[:m] == other.coeffs[:m]

    # -- arithmetic (results carry the min of the operand orders) -------

    @staticmethod
    def _coerce(value, order: int) -> "PowerSeries":
        if isinstance(value, PowerSeries):
            return value
        if isinstance(value, (int, Fraction)):
            return PowerSeries.from_coeffs([value], order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        m = min(self.order, other.order)
        return PowerSeries(tuple(a + b for a, b in
                                 zip(self.coeffs[:m], other.coeffs[:m])))

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other, self.order)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PowerSeries(tuple(other * a for a in self.coeffs))
        if not isinstance(other, PowerSeries):
            return NotImplemented
        m = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * m
        for i in range(m):
            ai = a[i]
            if ai:
                for j in range(m - i):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return PowerSeries(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "PowerSeries":
        if exponent < 0:
            raise ValueError("negative series power")
        result = PowerSeries.one(self.order)
        for _ in range(exponent):
            result = result * self
        return result

    def exact_div(self, divisor: "PowerSeries") -> "PowerSeries":
        """Series quotient; the divisor must have a nonzero constant term."""
        if divisor.coeffs[0] == 0:
            raise ValueError("series division needs a nonzero constant term")
        m = min(self.order, divisor.order)
        a, b = self.coeffs, divisor.coeffs
        lead = b[0]
        out: list[Fraction] = []
        for i in range(m):
            acc = a[i]
            for j in range(1, i + 1):
                if b[j]:
                    acc -= b[j] * out[i - j]
            out.append(acc / lead)
        return PowerSeries(tuple(out))

    def derive(self) -> "PowerSeries":
        if self.order == 1:
            raise ValueError("cannot differentiate an order-1 series")
        return PowerSeries(tuple(i * c for i, c in enumerate(self.coeffs))[1:])

    def integrate(self) -> "PowerSeries":
        """Antiderivative with zero constant term; order grows by one."""
        return PowerSeries((Fraction(0),) + tuple(
            c / (i + 1) for i, c in enumerate(self.coeffs)))

    def __str__(self):
        shown = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return (" + ".join(shown) or "0") + f" + O(x^{self.order})"


def exp_series(s: PowerSeries) -> PowerSeries:
    """exp of a series with zero constant term, coefficient by coefficient
    from E' = s'E."""
    if s.coeffs[0] != 0:
        raise ValueError("exp needs a zero constant term")
    n = s.order
    out = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for m in range(1, n):
        acc = Fraction(0)
        for i in range(1, m + 1):
            if s.coeffs[i]:
                acc += i * s.coeffs[i] * out[m - i]
        out[m] = acc / m
    return PowerSeries(tuple(out))


def sqrt_series(s: PowerSeries) -> PowerSeries:
    """Square root of a series with constant term 1, by Newton iteration."""
    if s.coeffs[0] != 1:
        raise ValueError("sqrt needs constant term 1")
    y = PowerSeries.one(1)
    order = 1
    half = Fraction(1, 2)
    while order < s.order:
        order = min(2 * order, s.order)
        y = y.truncate(order)
        y = half * (y + s.truncate(order).exact_div(y))
    return y


# ---------------------------------------------------------------------------
# The prebuilt expansions
# ---------------------------------------------------------------------------

# Numerator data for the algebraic generating functions of permutations by
# number of 31-2 occurrences r: each is (x_power, A, B) encoding
# (A(x) + B(x) sqrt(1-4x)) / (x^x_power * sqrt((1-4x)^(2r+1))).
_G31_2_DATA = {
    0: (0, (0, 1), (0, -1, -2)),
    1: (1, (-1, 8, -17, 6), (1, -6, 7)),
    2: (1, (1, -12, 50, -76, 22), (-1, 10, -32, 28)),
    3: (2, (2, -37, 270, -972, 1748, -1346, 220),
        (-2, 33, -208, 614, -824, 368)),
}


def _check_order(order: int, minimum: int):
    if order < minimum:
        raise ValueError(f"order must be at least {minimum}")
    if order > MAX_ORDER:
        raise ValueError(f"order {order} exceeds the cap {MAX_ORDER}")


def expand_G_r_31_2(r: int, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Ordinary generating function of permutations whose flattened form has
    exactly r occurrences of 31-2, for r in 0..3.

    Known quirk, by design: the r = 0 closed form has x^2 coefficient 0
    even though two permutations of length 2 avoid everything; coefficients
    are reliable from x^3 on.
    """
    if r not in _G31_2_DATA:
        raise ValueError("closed forms are available for r in 0..3 only")
    _check_order(order, 4)
    x_power, a_coeffs, b_coeffs = _G31_2_DATA[r]
    work = order + x_power
    root = sqrt_series(PowerSeries.from_coeffs([1, -4], work))
    numerator = (PowerSeries.from_coeffs(a_coeffs, work)
                 + PowerSeries.from_coeffs(b_coeffs, work) * root)
    quotient = numerator.exact_div(root ** (2 * r + 1))
    if any(quotient.coeffs[:x_power]):
        raise IdentityViolation(
            f"expected the assembled numerator to be divisible by x^{x_power}")
    return PowerSeries(quotient.coeffs[x_power:])


def expand_egf_21_3_avoid(order: int = DEFAULT_ORDER) -> PowerSeries:
    """EGF of 21-3 avoider counts: n! * coefficient of x^n counts the
    avoiders of length n+2."""
    _check_order(order, 2)
    ex = exp_series(PowerSeries.x(order))
    return 2 * exp_series(ex + 2 * PowerSeries.x(order) - 1)


def expand_egf_12_3_avoid(order: int = DEFAULT_ORDER) -> PowerSeries:
    """EGF of 12-3 avoider counts: (n-2)! * coefficient of x^(n-2) counts
    the avoiders of length n.

    Built from the Bell-number EGF together with the integral of the
    complementary-Bell EGF (the exponential of 1 - e^x).
    """
    _check_order(order, 2)
    work = order + 1
    x = PowerSeries.x(work)
    ex = exp_series(x)
    bell_egf = exp_series(ex - 1)
    cbell_integral = exp_series(1 - ex).integrate().truncate(work)
    g = 2 * (ex + 1) * bell_egf * (1 - cbell_integral) - 2
    return g.truncate(order)
