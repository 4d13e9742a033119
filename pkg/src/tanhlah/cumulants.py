"""
Cumulants of shifted-gamma densities and negative binomial distributions,
three-cumulant matching, and the tanh-number relations between matched pairs.

Scaled cumulants throughout are kbar(n) = 2^n kappa(n) / r.  In a matched
pair both gbar(n) and ebar(n) are polynomials in lambda with zero constant
term; ``cumulant_coeffs`` returns their coefficients of lambda^1 .. lambda^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .conversions import rule_check
from .errors import DomainError, UsageError
from .report import IdentityReport, merge
from .series import Family, exact
from .triangles import entry

S2 = Family.STIRLING_SECOND
TH, THETA = Family.ARCTANH, Family.TANH
LL = Family.LAH_LOWER

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ShiftedGammaParams:
    a: Fraction
    b: Fraction
    c: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, exact(getattr(self, name)))
        if self.a <= 0 or self.b <= 0:
            raise DomainError(f"shifted gamma needs a > 0 and b > 0, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class NegBinParams:
    r: Fraction
    lam: Fraction

    def __post_init__(self):
        object.__setattr__(self, "r", exact(self.r))
        object.__setattr__(self, "lam", exact(self.lam))
        if self.r <= 0 or self.lam < 0:
            raise DomainError(f"negative binomial needs r > 0 and lambda >= 0, got r={self.r}, lambda={self.lam}")


@dataclass(frozen=True)
class CumulantVector:
    """values[n-1] is the n-th cumulant."""

    values: tuple[Fraction, ...]
    scaled: bool = False

    def __getitem__(self, n: int) -> Fraction:
        if n < 1:
            raise IndexError("cumulants are numbered from 1")
        return self.values[n - 1]

    def __len__(self):
        return len(self.values)

    def scale(self, r) -> CumulantVector:
        """2^n kappa(n) / r."""
        if self.scaled:
            return self
        r = Fraction(r)
        return CumulantVector(tuple(2**n * v / r for n, v in enumerate(self.values, 1)), scaled=True)


def sg_cumulants(p: ShiftedGammaParams, N: int) -> CumulantVector:
    """gamma(1) = ab - c, gamma(n) = (n-1)! a b^n."""
    if N < 1:
        raise DomainError("N must be at least 1")
    vals = [p.a * p.b - p.c] + [factorial(n - 1) * p.a * p.b**n for n in range(2, N + 1)]
    return CumulantVector(tuple(vals))


def nb_cumulants(p: NegBinParams, N: int) -> CumulantVector:
    """eta(n) = sum_m r (m-1)! 2^{m-n} S2(n,m) lambda^m."""
    if N < 1:
        raise DomainError("N must be at least 1")
    vals = []
    for n in range(1, N + 1):
        vals.append(sum(
            p.r * factorial(m - 1) * Fraction(2) ** (m - n) * entry(S2, n, m) * p.lam**m
            for m in range(1, n + 1)
        ))
    return CumulantVector(tuple(vals))


def match_nb_to_sg(p: NegBinParams) -> ShiftedGammaParams:
    if p.lam <= 0:
        raise DomainError("matching needs lambda > 0")
    b = HALF + p.lam
    a = p.r * p.lam * (1 + p.lam) / b**2
    return ShiftedGammaParams(a, b, p.r * p.lam / (1 + 2 * p.lam))


def match_sg_to_nb(p: ShiftedGammaParams) -> NegBinParams:
    """The negative binomial with the same first three cumulants; needs b > 1/2."""
    if p.b <= HALF:
        raise DomainError("matching needs b > 1/2")
    return NegBinParams(p.a * p.b**2 / (p.b**2 - Fraction(1, 4)), p.b - HALF)


def cumulant_coeffs(side: str, n: int) -> list[Fraction]:
    """[kappa(n,1), ..., kappa(n,n)] with kbar(n) = sum_m kappa(n,m) lambda^m.

    gamma(n,m) = 2^m (m-1)! [l(n-1,m-1) + 2m l(n-1,m)]
    eta(n,m)   = 2^m (m-1)! S2(n,m)
    """
    if n < 1:
        raise DomainError("n must be at least 1")
    if side == "gamma":
        return [
            Fraction(2**m * factorial(m - 1) * (entry(LL, n - 1, m - 1) + 2 * m * entry(LL, n - 1, m)))
            for m in range(1, n + 1)
        ]
    if side == "eta":
        return [Fraction(2**m * factorial(m - 1) * entry(S2, n, m)) for m in range(1, n + 1)]
    raise UsageError(f"unknown cumulant side {side!r}")


def eval_coeffs(coeffs: list[Fraction], lam) -> Fraction:
    return sum((c * Fraction(lam) ** m for m, c in enumerate(coeffs, 1)), Fraction(0))


def matched_scaled_cumulants(p: NegBinParams, N: int) -> tuple[CumulantVector, CumulantVector]:
    """(gbar, ebar) for the matched pair built from p."""
    g = sg_cumulants(match_nb_to_sg(p), N).scale(p.r)
    e = nb_cumulants(p, N).scale(p.r)
    return g, e


def _tanh_relations(g: CumulantVector, e: CumulantVector, n_max: int, label: str) -> IdentityReport:
    """gbar(n+1) = sum_i theta(n,i) ebar(i+1) and ebar(n+1) = sum_i Theta(n,i) gbar(i+1)."""
    report = IdentityReport(label, f"0<=n<={n_max}")
    for n in range(n_max + 1):
        report.compare(("theta", n), g[n + 1], sum(entry(TH, n, i) * e[i + 1] for i in range(n + 1)))
        report.compare(("Theta", n), e[n + 1], sum(entry(THETA, n, i) * g[i + 1] for i in range(n + 1)))
    return report


def coefficient_system_check(n_max: int) -> IdentityReport:
    """Like powers of lambda: eta(n+1,m+1) = sum_i Theta(n,i) gamma(i+1,m+1) and the theta mirror."""
    report = IdentityReport("cumulant-coefficients", f"0<=m<=n<={n_max}")
    gam = {n: cumulant_coeffs("gamma", n) for n in range(1, n_max + 2)}
    eta = {n: cumulant_coeffs("eta", n) for n in range(1, n_max + 2)}

    def c(table, n, m):  # kappa(n, m), zero above the diagonal
        return table[n][m - 1] if 1 <= m <= n else 0

    for n in range(n_max + 1):
        for m in range(n + 1):
            report.compare(("Theta", n, m), c(eta, n + 1, m + 1),
                           sum(entry(THETA, n, i) * c(gam, i + 1, m + 1) for i in range(n + 1)))
            report.compare(("theta", n, m), c(gam, n + 1, m + 1),
                           sum(entry(TH, n, i) * c(eta, i + 1, m + 1) for i in range(n + 1)))
    return report


def reciprocity_check(r, lam, n_max: int) -> IdentityReport:
    """Both tanh-number relations between the scaled cumulants of a matched pair,
    plus the coefficient-level system behind them."""
    p = NegBinParams(r, lam)
    g, e = matched_scaled_cumulants(p, n_max + 1)
    values = _tanh_relations(g, e, n_max, f"reciprocity r={p.r} lambda={p.lam}")
    return merge(values.identity, [values, coefficient_system_check(n_max)])


def lemma_check(p: NegBinParams, n_max: int) -> IdentityReport:
    """Coefficient polynomials evaluated at lambda reproduce the direct scaled cumulants."""
    g, e = matched_scaled_cumulants(p, n_max)
    report = IdentityReport(f"lemma r={p.r} lambda={p.lam}", f"1<=n<={n_max}")
    for n in range(1, n_max + 1):
        report.compare(("gamma", n), eval_coeffs(cumulant_coeffs("gamma", n), p.lam), g[n])
        report.compare(("eta", n), eval_coeffs(cumulant_coeffs("eta", n), p.lam), e[n])
    return report


def poisson_limit_params(alpha) -> ShiftedGammaParams:
    """Limit of the matched gamma as lambda -> 0 with r*lambda = alpha fixed.

    Substituting r = alpha/lambda leaves rational functions of lambda that are
    finite at lambda = 0.
    """
    alpha = Fraction(alpha)
    lam = Fraction(0)
    b = HALF + lam
    return ShiftedGammaParams(alpha * (1 + lam) / b**2, b, alpha / (1 + 2 * lam))


def poisson_limit_check(alpha, n_max: int) -> IdentityReport:
    """In the Poisson limit the matched-pair relations collapse to
    n! = sum_i theta(n,i) 2^(i-1) and 2^(n-1) = sum_i Theta(n,i) i!."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise DomainError("alpha must be positive")
    lim = poisson_limit_params(alpha)
    report = IdentityReport(f"poisson alpha={alpha}", f"1<=n<={n_max}")
    report.compare("limit-params", (lim.a, lim.b, lim.c), (4 * alpha, HALF, alpha))

    # r cancels from the linear relations, so work with 2^n kappa(n)
    N = n_max + 1
    g = CumulantVector(tuple(2**n * v for n, v in enumerate(sg_cumulants(lim, N).values, 1)), scaled=True)
    e = CumulantVector(tuple(2**n * alpha for n in range(1, N + 1)), scaled=True)
    sub = _tanh_relations(g, e, n_max, "poisson-relations")
    report.count += sub.count
    report.mismatches.extend(sub.mismatches)

    for n in range(1, n_max + 1):
        # gbar(n+1) = 4 alpha n! and each ebar(i+1) = 4 alpha 2^(i-1)
        report.compare(("gbar", n), g[n + 1], 4 * alpha * factorial(n))
        report.compare(("factorial-to-powers2", n), g[n + 1] / (4 * alpha),
                       sum(entry(TH, n, i) * e[i + 1] for i in range(1, n + 1)) / (4 * alpha))
        report.compare(("eq4-a", n), Fraction(factorial(n)),
                       sum(entry(TH, n, i) * Fraction(2) ** (i - 1) for i in range(1, n + 1)))
        # ebar(n+1) = 4 alpha 2^(n-1) and gbar(i+1) = 4 alpha i! for i >= 1
        report.compare(("powers2-to-factorial", n), e[n + 1] / (4 * alpha),
                       sum(entry(THETA, n, i) * g[i + 1] for i in range(1, n + 1)) / (4 * alpha))
        report.compare(("eq4-b", n), Fraction(2) ** (n - 1),
                       sum(entry(THETA, n, i) * factorial(i) for i in range(1, n + 1)))
    return report


def equivalence_check(n_max: int) -> tuple[IdentityReport, IdentityReport]:
    """The cumulant coefficient system next to the conversion rule S2 = Theta . l
    over the same index range; the two checks stand or fall together."""
    return coefficient_system_check(n_max), rule_check("s2-from-lah-via-tanh", n_max + 1)
