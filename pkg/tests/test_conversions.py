import random
from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tanhlah.conversions import (
    COROLLARY_VARIANTS,
    INVERSE_PAIRS,
    M1_IDENTITIES,
    RULES,
    apply_to_sequence,
    convert_entry,
    corollary_check,
    corollary_sum,
    get_rule,
    m1_check,
    m1_identity,
    orthogonality_check,
    rule_check,
)
from tanhlah.errors import DomainError, UsageError
from tanhlah.series import Family
from tanhlah.triangles import entry


def matmul(a, b, n_max):
    return [[sum(entry(a, n, i) * entry(b, i, m) for i in range(m, n + 1)) for m in range(n + 1)]
            for n in range(n_max + 1)]


@pytest.mark.parametrize("pair", sorted(INVERSE_PAIRS))
def test_orthogonality(pair):
    assert orthogonality_check(pair, 25).ok


def test_orthogonality_examples():
    th, tt = Family.ARCTANH, Family.TANH
    assert sum(entry(th, 3, i) * entry(tt, i, 1) for i in range(1, 4)) == 0
    ll, lu = Family.LAH_LOWER, Family.LAH_UPPER
    assert entry(ll, 2, 1) * entry(lu, 1, 1) + entry(ll, 2, 2) * entry(lu, 2, 1) == 0


def test_orthogonality_independent_matrix_product():
    ident = [[int(m == n) for m in range(n + 1)] for n in range(16)]
    for a, b in INVERSE_PAIRS.values():
        assert matmul(a, b, 15) == ident
        assert matmul(b, a, 15) == ident


def test_convert_examples():
    assert convert_entry("tanh-from-s2-via-lah-upper", 3, 1) == -2 == entry(Family.TANH, 3, 1)
    assert convert_entry("s1-from-arctanh-via-lah-upper", 3, 1) == 8


def test_convert_diagonal_is_one():
    for rule in RULES:
        for n in range(6):
            assert convert_entry(rule, n, n) == 1


def test_convert_domain_and_unknown():
    with pytest.raises(DomainError):
        convert_entry("s2-from-tanh-via-lah", 2, 3)
    with pytest.raises(UsageError):
        get_rule("no-such-rule")


def test_rules_pair_up():
    for rule in RULES.values():
        partner = RULES[rule.partner]
        assert partner.partner == rule.id
        assert partner.partner != partner.id
        assert partner.target is rule.source and partner.source is rule.target


def test_rule_matrix_form_independent():
    # every rule read as a plain matrix product of triangles
    for rule in RULES.values():
        if rule.side == "left":
            prod = matmul(rule.kernel, rule.source, 12)
        else:
            prod = matmul(rule.source, rule.kernel, 12)
        assert prod == [[entry(rule.target, n, m) for m in range(n + 1)] for n in range(13)], rule.id


@pytest.mark.parametrize("rule", sorted(RULES))
def test_rule_check(rule):
    assert rule_check(rule, 20).ok


def test_index_swapped_forms_are_not_identities():
    # theta = l * S1 holds, the transposed product S1 * l does not
    theta = [[entry(Family.ARCTANH, n, m) for m in range(n + 1)] for n in range(5)]
    assert matmul(Family.LAH_LOWER, Family.STIRLING_FIRST, 4) == theta
    assert matmul(Family.STIRLING_FIRST, Family.LAH_LOWER, 4) != theta


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(sorted(RULES)), st.lists(st.integers(-50, 50), min_size=1, max_size=12))
def test_round_trip(rule, seq):
    there = apply_to_sequence(rule, seq)
    assert apply_to_sequence(RULES[rule].partner, there) == seq


def test_round_trip_fractions():
    rng = random.Random(7)
    seq = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(10)]
    for rule in RULES.values():
        assert apply_to_sequence(rule.partner, apply_to_sequence(rule, seq)) == seq


def test_corollary_examples():
    assert corollary_sum("arctanh", 3, 2) == 2 == entry(Family.ARCTANH, 3, 1)
    for v in COROLLARY_VARIANTS:
        for n in range(1, 6):
            assert corollary_sum(v, n, 0) == 1


def test_corollary_polynomial_spot_value():
    assert entry(Family.ARCTANH, 5, 3) == 2 * comb(5, 3) == 20


def test_corollary_check():
    assert corollary_check(8, 14).ok


def test_corollary_errors():
    with pytest.raises(DomainError):
        corollary_sum("s1", 2, 3)
    with pytest.raises(UsageError):
        corollary_sum("nope", 4, 2)


def test_m1_examples():
    assert m1_identity("factorial-to-powers2", 3) == (6, 6)
    assert m1_identity("powers2-to-factorial", 3) == (4, 4)
    assert m1_identity("lengyel-even", 2) == (0, 0)
    assert m1_identity("lah-classic-pair", 2) == (2, 2)


def test_m1_returns_fractions():
    lhs, rhs = m1_identity("fifth-pair", 4)
    assert isinstance(lhs, Fraction) and isinstance(rhs, Fraction)


@pytest.mark.parametrize("ident", M1_IDENTITIES)
def test_m1_identities(ident):
    assert m1_check(ident, 20).ok


def test_m1_direct_sums():
    # the two factorial/power-of-two conversions written out by hand
    for n in range(1, 16):
        assert factorial(n) == sum(entry(Family.ARCTANH, n, i) * 2 ** (i - 1) for i in range(1, n + 1))
        assert 2 ** (n - 1) == sum(entry(Family.TANH, n, i) * factorial(i) for i in range(1, n + 1))
        alt = sum((-1) ** (i - 1) * factorial(i) * entry(Family.STIRLING_SECOND, n, i) for i in range(1, n + 1))
        assert alt == (0 if n % 2 == 0 else entry(Family.TANH, n, 1))


def test_m1_errors():
    with pytest.raises(UsageError):
        m1_identity("seventh-pair", 3)
    with pytest.raises(DomainError):
        m1_identity("fifth-pair", 0)
