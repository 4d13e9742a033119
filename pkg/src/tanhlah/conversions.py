"""
Inverse relations between the Stirling, tanh and Lah triangles.

Each pair of triangles is a pair of inverse lower-triangular matrices:

    s1 . s2 = arctanh . tanh = lah . lah-upper = I

and each pair converts between the other two, e.g. tanh = s2 . lah-upper.
A conversion rule is such a factorisation read with one factor as the
*kernel* and the other as the *source*; the kernel sits either on the
left (it sums over the row index) or on the right (column index).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Sequence

from .errors import DomainError, UsageError
from .report import IdentityReport
from .series import Family
from .triangles import entry

S1, S2 = Family.STIRLING_FIRST, Family.STIRLING_SECOND
TH, THETA = Family.ARCTANH, Family.TANH
LL, LU = Family.LAH_LOWER, Family.LAH_UPPER

INVERSE_PAIRS = {
    "stirling": (S1, S2),
    "tanh": (TH, THETA),
    "lah": (LL, LU),
}


@dataclass(frozen=True)
class ConversionRule:
    id: str
    target: Family
    kernel: Family
    source: Family
    side: str  # "left": sum_i K(n,i) S(i,m); "right": sum_i S(n,i) K(i,m)
    partner: str
    formula: str

    def apply(self, n: int, m: int) -> int:
        if self.side == "left":
            return sum(entry(self.kernel, n, i) * entry(self.source, i, m) for i in range(m, n + 1))
        return sum(entry(self.source, n, i) * entry(self.kernel, i, m) for i in range(m, n + 1))


def _rule(id, target, kernel, source, side, partner, formula):
    return ConversionRule(id, target, kernel, source, side, partner, formula)


# Six factorisations, each readable two ways, grouped in inverse pairs.
RULES: dict[str, ConversionRule] = {
    r.id: r
    for r in [
        _rule("tanh-from-s2-via-lah-upper", THETA, LU, S2, "right",
              "s2-from-tanh-via-lah", "Theta(n,m) = sum_i L(i,m) S2(n,i)"),
        _rule("s2-from-tanh-via-lah", S2, LL, THETA, "right",
              "tanh-from-s2-via-lah-upper", "S2(n,m) = sum_i l(i,m) Theta(n,i)"),
        _rule("arctanh-from-s1-via-lah", TH, LL, S1, "left",
              "s1-from-arctanh-via-lah-upper", "theta(n,m) = sum_i l(n,i) S1(i,m)"),
        _rule("s1-from-arctanh-via-lah-upper", S1, LU, TH, "left",
              "arctanh-from-s1-via-lah", "S1(n,m) = sum_i L(n,i) theta(i,m)"),
        _rule("lah-upper-from-tanh-via-s1", LU, S1, THETA, "left",
              "tanh-from-lah-upper-via-s2", "L(n,m) = sum_i S1(n,i) Theta(i,m)"),
        _rule("tanh-from-lah-upper-via-s2", THETA, S2, LU, "left",
              "lah-upper-from-tanh-via-s1", "Theta(n,m) = sum_i S2(n,i) L(i,m)"),
        _rule("lah-from-arctanh-via-s2", LL, S2, TH, "right",
              "arctanh-from-lah-via-s1", "l(n,m) = sum_i S2(i,m) theta(n,i)"),
        _rule("arctanh-from-lah-via-s1", TH, S1, LL, "right",
              "lah-from-arctanh-via-s2", "theta(n,m) = sum_i S1(i,m) l(n,i)"),
        _rule("lah-from-s2-via-arctanh", LL, TH, S2, "left",
              "s2-from-lah-via-tanh", "l(n,m) = sum_i theta(n,i) S2(i,m)"),
        _rule("s2-from-lah-via-tanh", S2, THETA, LL, "left",
              "lah-from-s2-via-arctanh", "S2(n,m) = sum_i Theta(n,i) l(i,m)"),
        _rule("lah-upper-from-s1-via-tanh", LU, THETA, S1, "right",
              "s1-from-lah-upper-via-arctanh", "L(n,m) = sum_i Theta(i,m) S1(n,i)"),
        _rule("s1-from-lah-upper-via-arctanh", S1, TH, LU, "right",
              "lah-upper-from-s1-via-tanh", "S1(n,m) = sum_i theta(i,m) L(n,i)"),
    ]
}


def get_rule(rule: str | ConversionRule) -> ConversionRule:
    if isinstance(rule, ConversionRule):
        return rule
    try:
        return RULES[rule]
    except KeyError:
        raise UsageError(f"unknown conversion rule {rule!r}") from None


def convert_entry(rule: str | ConversionRule, n: int, m: int) -> int:
    """Evaluate the rule's right-hand sum; equals entry(rule.target, n, m)."""
    if not 0 <= m <= n:
        raise DomainError(f"convert_entry needs 0 <= m <= n, got n={n}, m={m}")
    return get_rule(rule).apply(n, m)


def apply_to_sequence(rule: str | ConversionRule, seq: Sequence) -> list:
    """Use the rule's kernel as a linear map on a finite sequence.

    A left kernel maps f to g(n) = sum_{i<=n} K(n,i) f(i); a right kernel to
    g(m) = sum_{i>=m} f(i) K(i,m), i ranging over the support of f.
    The partner rule's kernel undoes the map.
    """
    rule = get_rule(rule)
    k, size = rule.kernel, len(seq)
    if rule.side == "left":
        return [sum(entry(k, n, i) * seq[i] for i in range(n + 1)) for n in range(size)]
    return [sum(seq[i] * entry(k, i, m) for i in range(m, size)) for m in range(size)]


def orthogonality_check(pair: str, n_max: int) -> IdentityReport:
    """sum_i a(n,i) A(i,m) = sum_i A(n,i) a(i,m) = [m = n] for 0 <= m <= n <= n_max."""
    try:
        a, b = INVERSE_PAIRS[pair]
    except KeyError:
        raise UsageError(f"unknown inverse pair {pair!r}") from None
    report = IdentityReport(f"orthogonality-{pair}", f"0<=m<=n<={n_max}")
    for n in range(n_max + 1):
        for m in range(n + 1):
            delta = int(m == n)
            report.compare((n, m, "aA"), sum(entry(a, n, i) * entry(b, i, m) for i in range(m, n + 1)), delta)
            report.compare((n, m, "Aa"), sum(entry(b, n, i) * entry(a, i, m) for i in range(m, n + 1)), delta)
    return report


def rule_check(rule: str | ConversionRule, n_max: int) -> IdentityReport:
    rule = get_rule(rule)
    report = IdentityReport(rule.id, f"1<=m<=n<={n_max}")
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            report.compare((n, m), rule.apply(n, m), entry(rule.target, n, m))
    return report


# -- tanh numbers as finite sums of Stirling numbers ------------------------

def _gbinom(top: int, k: int) -> int:
    """Binomial coefficient with an arbitrary integer upper index."""
    if k < 0:
        return 0
    if top >= 0:
        return comb(top, k)
    return (-1) ** k * comb(k - top - 1, k)


def _weight(n: int, i: int) -> int:
    # i! C(n,i) C(n-1,i) = l(n, n-i)
    return factorial(i) * _gbinom(n, i) * _gbinom(n - 1, i)


COROLLARY_VARIANTS = ("arctanh", "s1", "tanh", "s2")


def corollary_sum(variant: str, n: int, k: int) -> int:
    """Binomial-weighted finite sums linking tanh and Stirling numbers.

    arctanh: theta(n, n-k) = sum_i i! C(n,i) C(n-1,i) S1(n-i, n-k)
    s1:      S1(n, n-k)    = sum_i (-1)^i i! C(n,i) C(n-1,i) theta(n-i, n-k)
    tanh:    Theta(n+k, n) = sum_i (-1)^(k-i) i! C(n+i,i) C(n+i-1,i) S2(n+k, n+i)
    s2:      S2(n+k, n)    = sum_i (-1)^(k-i) i! C(n+i,i) C(n+i-1,i) Theta(n+k, n+i)
    """
    if k < 0 or n < 0:
        raise DomainError("corollary_sum needs non-negative n and k")
    if variant in ("arctanh", "s1") and k > n:
        raise DomainError("corollary_sum needs k <= n for the arctanh/s1 variants")
    terms = range(k + 1)
    if variant == "arctanh":
        return sum(_weight(n, i) * entry(S1, n - i, n - k) for i in terms)
    if variant == "s1":
        return sum((-1) ** i * _weight(n, i) * entry(TH, n - i, n - k) for i in terms)
    if variant == "tanh":
        return sum((-1) ** (k - i) * _weight(n + i, i) * entry(S2, n + k, n + i) for i in terms)
    if variant == "s2":
        return sum((-1) ** (k - i) * _weight(n + i, i) * entry(THETA, n + k, n + i) for i in terms)
    raise UsageError(f"unknown corollary variant {variant!r}")


def corollary_target(variant: str, n: int, k: int) -> int:
    if variant == "arctanh":
        return entry(TH, n, n - k)
    if variant == "s1":
        return entry(S1, n, n - k)
    if variant == "tanh":
        return entry(THETA, n + k, n)
    if variant == "s2":
        return entry(S2, n + k, n)
    raise UsageError(f"unknown corollary variant {variant!r}")


def corollary_check(k_max: int, n_max: int) -> IdentityReport:
    report = IdentityReport("corollary", f"k<={k_max}, n<={n_max}")
    for variant in COROLLARY_VARIANTS:
        for n in range(n_max + 1):
            for k in range(k_max + 1):
                if variant in ("arctanh", "s1") and k > n:
                    continue
                report.compare((variant, n, k), corollary_sum(variant, n, k), corollary_target(variant, n, k))
    return report


# -- identities from the inverse relations at m = 1 -------------------------

def _sum(n: int, f: Callable[[int], int]) -> int:
    return sum(f(i) for i in range(1, n + 1))


def _lengyel_sum(n: int) -> int:
    return _sum(n, lambda i: (-1) ** (i - 1) * factorial(i) * entry(S2, n, i))


def _s1_col1(n: int) -> int:
    return (-2) ** (n - 1) * factorial(n - 1)


# id -> (lhs(n), rhs(n)); the "-b" ids are the inverse halves of a printed pair
_M1: dict[str, tuple[Callable[[int], int], Callable[[int], int]]] = {
    "lengyel-even": (_lengyel_sum, lambda n: 0),
    "theta-odd": (_lengyel_sum, lambda n: entry(THETA, n, 1)),
    "powers2-to-factorial": (
        lambda n: 2 ** (n - 1),
        lambda n: _sum(n, lambda i: factorial(i) * entry(THETA, n, i)),
    ),
    "factorial-to-powers2": (
        lambda n: factorial(n),
        lambda n: _sum(n, lambda i: entry(TH, n, i) * 2 ** (i - 1)),
    ),
    "lah-theta-pair-a": (
        lambda n: entry(TH, n, 1),
        lambda n: _sum(n, lambda i: entry(LL, n, i) * _s1_col1(i)),
    ),
    "lah-theta-pair-b": (
        _s1_col1,
        lambda n: _sum(n, lambda i: entry(LU, n, i) * entry(TH, i, 1)),
    ),
    "lah-classic-pair": (
        lambda n: factorial(n),
        lambda n: _sum(n, lambda i: entry(LU, n, i) * 2 ** (i - 1) * factorial(i)),
    ),
    "lah-classic-pair-b": (
        lambda n: 2 ** (n - 1) * factorial(n),
        lambda n: _sum(n, lambda i: entry(LL, n, i) * factorial(i)),
    ),
    "fifth-pair": (
        lambda n: entry(THETA, n, 1),
        lambda n: _sum(n, lambda i: entry(S2, n, i) * (-1) ** (i - 1) * factorial(i)),
    ),
    "fifth-pair-b": (
        lambda n: (-1) ** (n - 1) * factorial(n),
        lambda n: _sum(n, lambda i: entry(S1, n, i) * entry(THETA, i, 1)),
    ),
    "sixth-pair": (
        lambda n: (-1) ** (n - 1) * factorial(n),
        lambda n: _sum(n, lambda i: entry(THETA, i, 1) * entry(S1, n, i)),
    ),
    "sixth-pair-b": (
        _s1_col1,
        lambda n: _sum(n, lambda i: entry(TH, i, 1) * entry(LU, n, i)),
    ),
}

M1_IDENTITIES = tuple(_M1)


def m1_identity(id: str, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of the named m = 1 identity at n.

    lengyel-even holds for even n only and theta-odd for odd n only;
    the rest hold for every n >= 1.
    """
    try:
        lhs, rhs = _M1[id]
    except KeyError:
        raise UsageError(f"unknown identity {id!r}; choose from {', '.join(M1_IDENTITIES)}") from None
    if n < 1:
        raise DomainError("m=1 identities need n >= 1")
    return Fraction(lhs(n)), Fraction(rhs(n))


def m1_applies(id: str, n: int) -> bool:
    if id == "lengyel-even":
        return n % 2 == 0
    if id == "theta-odd":
        return n % 2 == 1
    return True


def m1_check(id: str, n_max: int) -> IdentityReport:
    report = IdentityReport(f"m1-{id}", f"1<=n<={n_max}")
    for n in range(1, n_max + 1):
        if m1_applies(id, n):
            report.compare(n, *m1_identity(id, n))
    return report
