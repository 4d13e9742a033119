"""
Stirling, tanh and Lah polynomials.

For k >= 1 the diagonals x -> S1(x, x-k), theta(x, x-k) and l(x, x-k)
are polynomials in x that vanish at x = 0, 1, ..., k.  Dividing out the
falling factorial x(x-1)...(x-k) leaves

    sigma_k(x)   Stirling polynomial   degree k-1
    delta_k(x)   tanh polynomial       degree k/2-1 for even k, zero for odd k
    lambda_k(x)  Lah polynomial        C(x, k)/x, degree k-1

At k = 0 only the product forms x*sigma_0(x) = x*delta_0(x) = x*lambda_0(x) = 1
exist; ``product_form`` gives x*P_k(x) for every k >= 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Sequence

from .errors import DomainError, IntegrityError, UsageError
from .report import IdentityReport
from .series import (
    Family,
    PowerSeries,
    arctanh_over_u,
    bernoulli,
    exact,
    ps_pow_int,
    ps_reciprocal,
    tanh_number,
    u_coth_u,
)
from .triangles import entry


class Polynomial:
    """Dense univariate polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [exact(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c) -> Polynomial:
        return cls([c])

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @property
    def degree(self):
        """Index of the top coefficient; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -math.inf

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "Polynomial(0)"
        terms = [f"{c}*x^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return f"Polynomial({' + '.join(terms)})"

    def _coerce(self, other) -> Polynomial:
        return other if isinstance(other, Polynomial) else Polynomial.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = exact(other)
            return Polynomial(c * a for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = exact(c)
        return Polynomial(a / c for a in self.coeffs)

    def __pow__(self, n: int):
        out = Polynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, q: Polynomial):
        if q.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq, lead = len(q.coeffs) - 1, q.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for i in range(len(rem) - 1 - dq, -1, -1):
            c = rem[i + dq] / lead
            quot[i] = c
            if c:
                for j, b in enumerate(q.coeffs):
                    rem[i + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def compose(self, inner: Polynomial) -> Polynomial:
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, a) -> Polynomial:
        """p(x + a)."""
        return self.compose(Polynomial([a, 1]))

    def reflect(self, a) -> Polynomial:
        """p(a - x)."""
        return self.compose(Polynomial([a, -1]))


ZERO = Polynomial()
ONE = Polynomial.const(1)


def interpolate(points: Sequence[tuple]) -> Polynomial:
    """Unique polynomial of degree < len(points) through the points (Newton form)."""
    if not points:
        raise DomainError("interpolation needs at least one point")
    xs = [exact(p[0]) for p in points]
    if len(set(xs)) != len(xs):
        raise DomainError("interpolation abscissas must be distinct")
    dd = [exact(p[1]) for p in points]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    acc = Polynomial.const(dd[-1])
    for i in range(n - 2, -1, -1):
        acc = acc * Polynomial([-xs[i], 1]) + dd[i]
    return acc


def divide_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    if q.is_zero():
        raise DomainError("division by the zero polynomial")
    quot, rem = divmod(p, q)
    if not rem.is_zero():
        raise IntegrityError(f"{p!r} is not divisible by {q!r} (remainder {rem!r})")
    return quot


def falling_factorial(k: int, a=0) -> Polynomial:
    """(x+a)(x+a-1)...(x+a-k+1)."""
    out = ONE
    for i in range(k):
        out = out * Polynomial([a - i, 1])
    return out


def binomial_poly(k: int, a=0) -> Polynomial:
    """C(x+a, k) as a polynomial in x."""
    if k < 0:
        return ZERO
    return falling_factorial(k, a) / factorial(k)


# -- diagonals of the triangles as polynomials ------------------------------

def _from_samples(f: Callable[[int], int], start: int, degree_bound: int, label: str) -> Polynomial:
    """Interpolate on degree_bound+1 consecutive integers from start; two extra points must agree."""
    pts = [(x, f(x)) for x in range(start, start + degree_bound + 1)]
    p = interpolate(pts)
    for x in range(start + degree_bound + 1, start + degree_bound + 3):
        if p(x) != f(x):
            raise IntegrityError(f"{label}: sample at x={x} is off the interpolated curve")
    return p


# Each diagonal is a sum of k+1 terms of degree 2k (the binomial-weighted
# Stirling expansions), which bounds the interpolation degree.

@lru_cache(maxsize=None)
def stirling_diagonal(k: int) -> Polynomial:
    """x -> S1(x, x-k)."""
    return _from_samples(lambda n: entry(Family.STIRLING_FIRST, n, n - k), k + 1, 2 * k, f"S1(x,x-{k})")


@lru_cache(maxsize=None)
def arctanh_diagonal(k: int) -> Polynomial:
    """x -> theta(x, x-k)."""
    return _from_samples(lambda n: entry(Family.ARCTANH, n, n - k), k + 1, 2 * k, f"theta(x,x-{k})")


@lru_cache(maxsize=None)
def tanh_diagonal(k: int) -> Polynomial:
    """x -> Theta(x+k, x)."""
    return _from_samples(lambda n: entry(Family.TANH, n + k, n), 1, 2 * k, f"Theta(x+{k},x)")


@lru_cache(maxsize=None)
def lah_diagonal(k: int) -> Polynomial:
    """x -> l(x, x-k)."""
    return _from_samples(lambda n: entry(Family.LAH_LOWER, n, n - k), k + 1, 2 * k, f"l(x,x-{k})")


def _quotient(diagonal: Polynomial, k: int) -> Polynomial:
    return divide_exact(diagonal, falling_factorial(k + 1))


@lru_cache(maxsize=None)
def stirling_poly(k: int) -> Polynomial:
    """sigma_k(x) = S1(x, x-k) / x^(k+1 falling); at k = 0 the product form 1."""
    if k < 0:
        raise DomainError("k must be non-negative")
    if k == 0:
        return ONE
    return _quotient(stirling_diagonal(k), k)


def _shifted_sum(k: int, base: Callable[[int], Polynomial], signed: bool, start: int = 0) -> Polynomial:
    """sum_{i=start}^k (+-1)^i C(x-1, i) P_{k-i}(x-i) with P = base (k >= 1)."""
    total = ZERO
    for i in range(start, k + 1):
        if i == k:
            # C(x-1,k) P_0(x-k) with P_0(y) = 1/y cancels to (x-1)...(x-k+1)/k!
            term = falling_factorial(k - 1, -1) / factorial(k)
        else:
            term = binomial_poly(i, -1) * base(k - i).shift(-i)
        total = total - term if signed and i % 2 else total + term
    return total


@lru_cache(maxsize=None)
def tanh_poly(k: int) -> Polynomial:
    """delta_k(x) = sum_{i=0}^k C(x-1, i) sigma_{k-i}(x-i); at k = 0 the product form 1."""
    if k < 0:
        raise DomainError("k must be non-negative")
    if k == 0:
        return ONE
    return _shifted_sum(k, stirling_poly, signed=False)


@lru_cache(maxsize=None)
def tanh_poly_by_division(k: int) -> Polynomial:
    """delta_k(x) straight from theta(x, x-k) / x^(k+1 falling), k >= 1."""
    if k < 1:
        raise DomainError("k must be at least 1")
    return _quotient(arctanh_diagonal(k), k)


def stirling_from_tanh(k: int, signed: bool = True) -> Polynomial:
    """sum_{i=0}^k (-1)^i C(x-1, i) delta_{k-i}(x-i), which equals sigma_k(x).

    With ``signed=False`` every term is added; that sum is sigma_k for even k
    and -sigma_k for odd k.
    """
    if k < 1:
        raise DomainError("k must be at least 1")
    return _shifted_sum(k, tanh_poly, signed=signed)


def odd_stirling_sum(j: int) -> Polynomial:
    """sum_{i=1}^{2j+1} C(x-1, i) sigma_{2j+1-i}(x-i)."""
    if j < 0:
        raise DomainError("j must be non-negative")
    return _shifted_sum(2 * j + 1, stirling_poly, signed=False, start=1)


@lru_cache(maxsize=None)
def lah_poly(k: int) -> Polynomial:
    """lambda_k(x) = l(x, x-k) / x^(k+1 falling) = C(x, k)/x."""
    if k < 1:
        raise DomainError("lambda_0 is not a polynomial; use product_form('lambda', 0)")
    return _quotient(lah_diagonal(k), k)


POLY_FAMILIES = {"sigma": stirling_poly, "delta": tanh_poly, "lambda": lah_poly}


def poly(family: str, k: int) -> Polynomial:
    try:
        build = POLY_FAMILIES[family]
    except KeyError:
        raise UsageError(f"unknown polynomial family {family!r}") from None
    return build(k)


def product_form(family: str, k: int) -> Polynomial:
    """x * P_k(x) for P in sigma, delta, lambda; defined for every k >= 0."""
    if family not in POLY_FAMILIES:
        raise UsageError(f"unknown polynomial family {family!r}")
    if k == 0:
        return ONE
    return Polynomial.x() * poly(family, k)


def entry_via_poly(family: Family | str, n: int, m: int) -> Fraction:
    """theta(n,m) = n!/(m-1)! delta_{n-m}(n) and Theta(n,m) = -n!/(m-1)! delta_{n-m}(-m)."""
    family = Family.parse(family)
    if not 1 <= m <= n:
        raise DomainError(f"entry_via_poly needs 1 <= m <= n, got n={n}, m={m}")
    xd = product_form("delta", n - m)
    if family is Family.ARCTANH:
        return Fraction(factorial(n - 1), factorial(m - 1)) * xd(n)
    if family is Family.TANH:
        # -n!/(m-1)! * (x delta)(-m)/(-m)
        return Fraction(factorial(n), factorial(m)) * xd(-m)
    raise DomainError("entry_via_poly is defined for the arctanh and tanh families")


# -- checks -----------------------------------------------------------------

GF_KINDS = ("coth-power", "arctanh-power", "lah-binomial", "lah-negative")


def _gf_lhs(which: str, x: int, k: int) -> Fraction:
    if k == 0:
        return Fraction(1)
    if which == "coth-power":
        return x * tanh_poly(k)(x)
    if which == "arctanh-power":
        return x * tanh_poly(k)(k + x)
    if which == "lah-binomial":
        return x * lah_poly(k)(x)
    if which == "lah-negative":
        return x * lah_poly(k)(k + x)
    raise UsageError(f"unknown generating function {which!r}")


def _gf_rhs(which: str, x: int, order: int) -> PowerSeries:
    if which == "coth-power":
        return ps_pow_int(u_coth_u(order), x)
    if which == "arctanh-power":
        return ps_pow_int(arctanh_over_u(order), x)
    if which == "lah-binomial":
        return ps_pow_int(PowerSeries([1, 1], order), x)
    if which == "lah-negative":
        return ps_reciprocal(ps_pow_int(PowerSeries([1, -1], order), x))
    raise UsageError(f"unknown generating function {which!r}")


def gf_check(which: str, x: int, order: int) -> IdentityReport:
    """Compare sum_k x P_k(..) u^k with its closed form, coefficient by coefficient."""
    if x < 1 or order < 0:
        raise DomainError("gf_check needs x >= 1 and order >= 0")
    rhs = _gf_rhs(which, x, order)
    report = IdentityReport(f"gf-{which}", f"x={x}, order={order}")
    for k in range(order + 1):
        report.compare(k, _gf_lhs(which, x, k), rhs[k])
    return report


@dataclass(frozen=True)
class SpecialValues:
    """Each field is (polynomial value, closed form)."""

    k: int
    at_1: tuple[Fraction, Fraction]
    k_at_0: tuple[Fraction, Fraction]
    at_minus1: tuple[Fraction, Fraction]
    at_2jplus1: tuple[Fraction, Fraction] | None

    def pairs(self):
        out = {"at_1": self.at_1, "k_at_0": self.k_at_0, "at_minus1": self.at_minus1}
        if self.at_2jplus1 is not None:
            out["at_2jplus1"] = self.at_2jplus1
        return out

    @property
    def ok(self) -> bool:
        return all(a == b for a, b in self.pairs().values())


def special_values(k: int) -> SpecialValues:
    if k < 1:
        raise DomainError("special values need k >= 1")
    d = tanh_poly(k)
    b = bernoulli(k)
    at_2jplus1 = None
    if k % 2 == 0:
        at_2jplus1 = (d(k + 1), Fraction(1, k + 1))
    return SpecialValues(
        k=k,
        at_1=(d(1), 2**k * b / factorial(k) + (1 if k == 1 else 0)),
        k_at_0=(k * d(0), 2**k * (2**k - 2) * b / factorial(k)),
        at_minus1=(d(-1), -Fraction(tanh_number(k + 1), factorial(k + 1))),
        at_2jplus1=at_2jplus1,
    )


def recurrence_check(k_max: int) -> IdentityReport:
    """(x+1) delta_k(x+1) = (x-k) delta_k(x) + (x-1) delta_{k-2}(x-1) for 2 <= k <= k_max."""
    report = IdentityReport("delta-recurrence", f"2<=k<={k_max}")
    x = Polynomial.x()
    for k in range(2, k_max + 1):
        d = tanh_poly(k)
        lhs = (x + 1) * d.shift(1)
        # (x-1) delta_0(x-1) is the product form 1
        tail = ONE if k == 2 else (x - 1) * tanh_poly(k - 2).shift(-1)
        report.compare(k, lhs, (x - k) * d + tail)
    return report


def bridge_check(n_max: int) -> IdentityReport:
    report = IdentityReport("poly-bridge", f"1<=m<=n<={n_max}")
    for fam in (Family.ARCTANH, Family.TANH):
        for n in range(1, n_max + 1):
            for m in range(1, n + 1):
                report.compare((fam.value, n, m), entry_via_poly(fam, n, m), entry(fam, n, m))
    return report
