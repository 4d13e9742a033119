"""Named verification suites, each a list of IdentityReports."""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Callable

from . import conversions, cumulants, polynomials
from .errors import UsageError
from .report import IdentityReport
from .series import Family, family_egf
from .triangles import entry

# rational (r, lambda) pairs used by the cumulant suite
CUMULANT_PAIRS = [
    (Fraction(1), Fraction(1, 2)),
    (Fraction(2), Fraction(1)),
    (Fraction(7, 3), Fraction(2, 5)),
    (Fraction(1, 4), Fraction(9, 2)),
]
POISSON_ALPHAS = [Fraction(1), Fraction(1, 2), Fraction(3)]


def egf_suite(n_max: int) -> list[IdentityReport]:
    order = n_max
    out = []
    for fam in Family:
        report = IdentityReport(f"egf-{fam.value}", f"n<={order}, m<={min(8, order)}")
        for m in range(min(8, order) + 1):
            values = family_egf(fam, m, order).egf_values()
            for n in range(order + 1):
                report.compare((n, m), Fraction(entry(fam, n, m)), values[n])
        out.append(report)
    return out


def orthogonality_suite(n_max: int) -> list[IdentityReport]:
    return [conversions.orthogonality_check(p, n_max) for p in conversions.INVERSE_PAIRS]


def table2_suite(n_max: int) -> list[IdentityReport]:
    return [conversions.rule_check(r, n_max) for r in conversions.RULES]


def corollary_suite(n_max: int) -> list[IdentityReport]:
    return [conversions.corollary_check(min(10, n_max), n_max)]


def m1_suite(n_max: int) -> list[IdentityReport]:
    return [conversions.m1_check(i, max(n_max, 1)) for i in conversions.M1_IDENTITIES]


def degree_law_check(k_max: int) -> IdentityReport:
    """theta(x,x-2j) and Theta(x+2j,x): degree 3j, leading 1/(3^j j!) and (-1)^j/(3^j j!)."""
    report = IdentityReport("diagonal-degree-law", f"k=2j<={k_max}")
    for k in range(0, k_max + 1, 2):
        j = k // 2
        lead = Fraction(1, 3**j * factorial(j))
        for name, p, sign in (("theta", polynomials.arctanh_diagonal(k), 1),
                              ("Theta", polynomials.tanh_diagonal(k), (-1) ** j)):
            report.compare((name, k, "degree"), p.degree, 3 * j)
            report.compare((name, k, "leading"), p.leading, sign * lead)
    return report


def odd_stirling_sum_check(j_max: int) -> IdentityReport:
    """The sum from i = 1 of C(x-1,i) sigma_{2j+1-i}(x-i), claimed to vanish."""
    report = IdentityReport("odd-stirling-sum-from-1", f"j<={j_max}")
    for j in range(j_max + 1):
        report.compare(j, polynomials.odd_stirling_sum(j), polynomials.ZERO)
    return report


def odd_stirling_full_sum_check(j_max: int) -> IdentityReport:
    """The same sum started at i = 0, which is delta_{2j+1} = 0."""
    report = IdentityReport("odd-stirling-sum-from-0", f"j<={j_max}")
    for j in range(j_max + 1):
        k = 2 * j + 1
        report.compare(j, polynomials.odd_stirling_sum(j) + polynomials.stirling_poly(k), polynomials.ZERO)
    return report


def stirling_tanh_check(k_max: int) -> IdentityReport:
    report = IdentityReport("sigma-delta-expansions", f"1<=k<={k_max}")
    for k in range(1, k_max + 1):
        report.compare(("delta", k), polynomials.tanh_poly(k), polynomials.tanh_poly_by_division(k))
        report.compare(("sigma", k), polynomials.stirling_from_tanh(k), polynomials.stirling_poly(k))
    return report


def lah_duality_check(k_max: int) -> IdentityReport:
    report = IdentityReport("lah-duality", f"1<=k<={k_max}")
    for k in range(1, k_max + 1):
        lam = polynomials.lah_poly(k)
        report.compare(k, lam.reflect(k), (-1) ** (k + 1) * lam)
    return report


def polynomials_suite(n_max: int) -> list[IdentityReport]:
    k_max = min(n_max, 12)
    return [
        degree_law_check(k_max),
        polynomials.recurrence_check(k_max),
        stirling_tanh_check(min(k_max, 10)),
        odd_stirling_full_sum_check(min(5, k_max // 2)),
        odd_stirling_sum_check(min(5, k_max // 2)),
        lah_duality_check(k_max),
        polynomials.bridge_check(min(n_max, 20)),
    ]


def gf_suite(n_max: int) -> list[IdentityReport]:
    out = []
    for which in polynomials.GF_KINDS:
        order = min(n_max, 16 if which.startswith(("coth", "arctanh")) else 12)
        for x in range(1, 6):
            out.append(polynomials.gf_check(which, x, order))
    special = IdentityReport("special-values", f"1<=k<={min(n_max, 12)}")
    for k in range(1, min(n_max, 12) + 1):
        for name, (value, closed) in polynomials.special_values(k).pairs().items():
            special.compare((k, name), value, closed)
    out.append(special)
    return out


def cumulants_suite(n_max: int) -> list[IdentityReport]:
    out = []
    for r, lam in CUMULANT_PAIRS:
        p = cumulants.NegBinParams(r, lam)
        match = IdentityReport(f"matching r={r} lambda={lam}", "cumulants 1..3")
        g = cumulants.sg_cumulants(cumulants.match_nb_to_sg(p), 3)
        e = cumulants.nb_cumulants(p, 3)
        for n in (1, 2, 3):
            match.compare(n, g[n], e[n])
        out += [match, cumulants.lemma_check(p, max(n_max, 1)), cumulants.reciprocity_check(r, lam, n_max)]
    out += list(cumulants.equivalence_check(n_max))
    return out


def poisson_suite(n_max: int) -> list[IdentityReport]:
    return [cumulants.poisson_limit_check(a, n_max) for a in POISSON_ALPHAS]


SUITES: dict[str, Callable[[int], list[IdentityReport]]] = {
    "orthogonality": orthogonality_suite,
    "egf": egf_suite,
    "table2": table2_suite,
    "corollary": corollary_suite,
    "m1": m1_suite,
    "polynomials": polynomials_suite,
    "gf": gf_suite,
    "cumulants": cumulants_suite,
    "poisson": poisson_suite,
}


def run_suite(name: str, n_max: int) -> list[IdentityReport]:
    if name == "all":
        return [r for fn in SUITES.values() for r in fn(n_max)]
    try:
        return SUITES[name](n_max)
    except KeyError:
        raise UsageError(f"unknown suite {name!r}") from None
