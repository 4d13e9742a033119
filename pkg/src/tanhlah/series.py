"""
Truncated formal power series over the rationals.

A PowerSeries of order N carries the exact coefficients of u^0 .. u^N.
Binary operations on series of different orders truncate to the smaller one.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

from .errors import DomainError


class Family(enum.Enum):
    """The six scaled number triangles."""

    STIRLING_FIRST = "s1"
    STIRLING_SECOND = "s2"
    ARCTANH = "arctanh"
    TANH = "tanh"
    LAH_LOWER = "lah"
    LAH_UPPER = "lah-upper"

    @classmethod
    def parse(cls, name: str | Family) -> Family:
        if isinstance(name, Family):
            return name
        try:
            return cls(name)
        except ValueError:
            raise DomainError(f"unknown family {name!r}") from None


def exact(c) -> Fraction:
    """Coerce to Fraction, refusing floats."""
    if isinstance(c, float):
        raise TypeError(f"float {c!r} has no place in exact arithmetic")
    return Fraction(c)


class PowerSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [exact(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if order < 0:
            raise DomainError("series order must be non-negative")
        if len(cs) <= order:
            cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.coeffs: tuple[Fraction, ...] = tuple(cs[: order + 1])

    @classmethod
    def constant(cls, c, order: int) -> PowerSeries:
        return cls([c], order)

    @classmethod
    def variable(cls, order: int) -> PowerSeries:
        """The series u."""
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        if n < 0 or n > self.order:
            raise IndexError(f"coefficient u^{n} outside truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        terms = [f"{c}*u^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"PowerSeries({' + '.join(terms) or '0'}; O(u^{self.order + 1}))"

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise DomainError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coeffs[: order + 1], order)

    def _coerce(self, other) -> PowerSeries:
        if isinstance(other, PowerSeries):
            return other
        return PowerSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeries([-c for c in self.coeffs], self.order)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        c = exact(other)
        return PowerSeries([c * a for a in self.coeffs], self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, ps_reciprocal(other))
        c = exact(other)
        return PowerSeries([a / c for a in self.coeffs], self.order)

    def __pow__(self, m: int):
        return ps_pow_int(self, m)

    def __call__(self, inner: PowerSeries) -> PowerSeries:
        return ps_compose(self, inner)

    def shift_down(self, k: int = 1) -> PowerSeries:
        """Divide by u^k; the k lowest coefficients must vanish. Loses k orders."""
        if any(self.coeffs[:k]):
            raise DomainError(f"series is not divisible by u^{k}")
        if k > self.order:
            raise DomainError("not enough coefficients to divide by u^k")
        return PowerSeries(self.coeffs[k:], self.order - k)

    def derivative(self) -> PowerSeries:
        if self.order == 0:
            return PowerSeries([0], 0)
        return PowerSeries([i * self.coeffs[i] for i in range(1, self.order + 1)], self.order - 1)

    def integral(self) -> PowerSeries:
        """Antiderivative with zero constant term; gains one order."""
        return PowerSeries([0] + [c / (i + 1) for i, c in enumerate(self.coeffs)], self.order + 1)

    def egf_values(self) -> list[Fraction]:
        """n! * [u^n] for every n up to the order."""
        return [factorial(n) * c for n, c in enumerate(self.coeffs)]


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return PowerSeries(out, n)


def ps_compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner(u)) by Horner's scheme; inner must have zero constant term."""
    if inner.coeffs[0] != 0:
        raise DomainError("composition needs an inner series with zero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = PowerSeries.constant(outer.coeffs[n], n)
    for k in range(n - 1, -1, -1):
        acc = ps_mul(acc, inner) + outer.coeffs[k]
    return acc


def ps_exp(a: PowerSeries) -> PowerSeries:
    if a.coeffs[0] != 0:
        raise DomainError("exp needs a series with zero constant term")
    n = a.order
    ac = a.coeffs
    b = [Fraction(1)]
    # n b_n = sum_{k=1}^n k a_k b_{n-k}, from b' = a' b
    for j in range(1, n + 1):
        s = sum((k * ac[k] * b[j - k] for k in range(1, j + 1) if ac[k]), Fraction(0))
        b.append(s / j)
    return PowerSeries(b, n)


def ps_log(a: PowerSeries) -> PowerSeries:
    if a.coeffs[0] != 1:
        raise DomainError("log needs a series with constant term 1")
    n = a.order
    ac = a.coeffs
    b = [Fraction(0)]
    # a b' = a', solved coefficientwise
    for j in range(1, n + 1):
        s = j * ac[j] - sum((k * b[k] * ac[j - k] for k in range(1, j) if b[k]), Fraction(0))
        b.append(s / j)
    return PowerSeries(b, n)


def ps_reciprocal(a: PowerSeries) -> PowerSeries:
    """1/a as exp(-log(a/a0))/a0; needs a nonzero constant term."""
    a0 = a.coeffs[0]
    if a0 == 0:
        raise DomainError("reciprocal of a series with zero constant term")
    return ps_exp(-ps_log(a / a0)) / a0


def ps_pow_int(a: PowerSeries, m: int) -> PowerSeries:
    if m < 0:
        raise DomainError("negative exponent; use ps_reciprocal")
    result = PowerSeries.constant(1, a.order)
    base = a
    while m:
        if m & 1:
            result = ps_mul(result, base)
        m >>= 1
        if m:
            base = ps_mul(base, base)
    return result


# -- elementary series ------------------------------------------------------

def exp_series(order: int, scale=1) -> PowerSeries:
    """e^{scale*u}."""
    s = Fraction(scale)
    return PowerSeries([s**n / factorial(n) for n in range(order + 1)], order)


def log1p_series(order: int, scale=1) -> PowerSeries:
    """ln(1 + scale*u)."""
    return ps_log(PowerSeries([1, scale], order))


def arctanh_series(order: int) -> PowerSeries:
    """(1/2) ln((1+u)/(1-u))."""
    return (log1p_series(order) - log1p_series(order, -1)) / 2


def sinh_series(order: int) -> PowerSeries:
    return PowerSeries([Fraction(1, factorial(n)) if n % 2 else 0 for n in range(order + 1)], order)


def cosh_series(order: int) -> PowerSeries:
    return PowerSeries([0 if n % 2 else Fraction(1, factorial(n)) for n in range(order + 1)], order)


def sin_series(order: int) -> PowerSeries:
    return PowerSeries(
        [Fraction((-1) ** (n // 2), factorial(n)) if n % 2 else 0 for n in range(order + 1)], order
    )


def cos_series(order: int) -> PowerSeries:
    return PowerSeries(
        [0 if n % 2 else Fraction((-1) ** (n // 2), factorial(n)) for n in range(order + 1)], order
    )


def tanh_series(order: int) -> PowerSeries:
    """tanh u obtained as v/(1+v) composed with v = (e^{2u}-1)/2."""
    v = (exp_series(order, 2) - 1) / 2
    u = PowerSeries.variable(order)
    return ps_compose(u / (1 + u), v)


def tan_series(order: int) -> PowerSeries:
    return sin_series(order) / cos_series(order)


def u_coth_u(order: int) -> PowerSeries:
    """u coth u = cosh u / (sinh u / u)."""
    return cosh_series(order) / sinh_series(order + 1).shift_down()


def arctanh_over_u(order: int) -> PowerSeries:
    """(1/u) arctanh u = sum 1/(2j+1) u^{2j}."""
    return arctanh_series(order + 1).shift_down()


# -- Bernoulli and tangent numbers -----------------------------------------

@lru_cache(maxsize=None)
def _bernoulli_table(order: int) -> tuple[Fraction, ...]:
    # (e^u - 1)/u has coefficients 1/(n+1)!
    denom = PowerSeries([Fraction(1, factorial(n + 1)) for n in range(order + 1)], order)
    return tuple(ps_reciprocal(denom).egf_values())


def bernoulli(n: int) -> Fraction:
    """B_n from u/(e^u - 1), so B_1 = -1/2."""
    if n < 0:
        raise DomainError("Bernoulli index must be non-negative")
    order = 8
    while order < n:
        order *= 2
    return _bernoulli_table(order)[n]


@lru_cache(maxsize=None)
def _tan_table(order: int) -> tuple[Fraction, ...]:
    return tuple(tan_series(order).egf_values())


def tangent_number(n: int) -> int:
    """n! [u^n] tan u; zero for even n."""
    order = 8
    while order < n:
        order *= 2
    value = _tan_table(order)[n]
    assert value.denominator == 1
    return int(value)


def tanh_number(n: int) -> int:
    """n! [u^n] tanh u, i.e. (-1)^j T_{2j+1} for n = 2j+1."""
    if n % 2 == 0:
        return 0
    return (-1) ** (n // 2) * tangent_number(n)


# -- column generating functions -------------------------------------------

def _base_series(family: Family, order: int) -> PowerSeries:
    u = PowerSeries.variable(order)
    if family is Family.STIRLING_FIRST:
        return log1p_series(order, 2) / 2
    if family is Family.STIRLING_SECOND:
        return (exp_series(order, 2) - 1) / 2
    if family is Family.ARCTANH:
        return arctanh_series(order)
    if family is Family.TANH:
        return tanh_series(order)
    if family is Family.LAH_LOWER:
        return u / (1 - u)
    if family is Family.LAH_UPPER:
        return u / (1 + u)
    raise DomainError(f"unknown family {family!r}")


def family_egf(family: Family | str, m: int, order: int) -> PowerSeries:
    """Column m of the family's triangle as an EGF: base(u)^m / m!."""
    family = Family.parse(family)
    if order < 0 or m < 0:
        raise DomainError("order and m must be non-negative")
    return ps_pow_int(_base_series(family, order), m) / factorial(m)


def column_from_egf(family: Family | str, m: int, order: int) -> list[Fraction]:
    return family_egf(family, m, order).egf_values()

