import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lapoints.arith import (
    ArithDomainError,
    FactorSieve,
    get_sieve,
    lambda_log_conv,
    lambda_log_conv_table,
    twisted_lambda_log_conv,
    von_mangoldt,
)
from lapoints.characters import character


def brute_lambda(n):
    # trial division, independent of the sieve
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return math.log(p) if n == 1 else 0.0
    return 0.0


@pytest.mark.parametrize("n,expected", [(1, 0.0), (9, math.log(3)), (12, 0.0), (2, math.log(2)), (1024, math.log(2))])
def test_von_mangoldt_examples(n, expected):
    assert von_mangoldt(n) == pytest.approx(expected, abs=1e-15)


def test_von_mangoldt_domain():
    with pytest.raises(ArithDomainError):
        von_mangoldt(0)
    small = FactorSieve(100)
    with pytest.raises(ArithDomainError):
        small.von_mangoldt(101)
    with pytest.raises(ArithDomainError):
        FactorSieve(0)


def test_sieve_invariants():
    s = FactorSieve(5000)
    spf = s.smallest_prime_factor
    n = np.arange(2, 5001)
    assert np.all(n % spf[2:] == 0)
    primes = {p for p in range(2, 5001) if all(p % d for d in range(2, math.isqrt(p) + 1))}
    assert {int(k) for k in n if spf[k] == k} == primes


@pytest.mark.parametrize("X,expected", [(1, 0.0), (4, 0.4804530139182014), (6, 1.523000020837618)])
def test_lambda_log_conv_examples(X, expected):
    assert lambda_log_conv(X) == pytest.approx(expected, rel=1e-12, abs=1e-15)


def test_lambda_log_conv_closed_forms():
    assert lambda_log_conv(4) == pytest.approx(math.log(2) ** 2, rel=1e-14)
    assert lambda_log_conv(6) == pytest.approx(2 * math.log(2) * math.log(3), rel=1e-14)


def test_twisted_examples():
    chi3 = character(3, 1)
    chi4 = character(4, 1)
    assert twisted_lambda_log_conv(1, chi3) == 0
    assert twisted_lambda_log_conv(4, chi3) == pytest.approx(math.log(2) ** 2, rel=1e-14)
    assert twisted_lambda_log_conv(2, chi4) == 0


def test_lambda_divisor_sum_identity():
    s = get_sieve()
    for n in range(1, 10**4 + 1):
        total = sum(s.von_mangoldt(d) for d in s.divisors(n))
        assert abs(total - math.log(n)) <= 1e-12


@given(st.integers(min_value=1, max_value=3000))
def test_lambda_matches_trial_division(n):
    assert von_mangoldt(n) == pytest.approx(brute_lambda(n), abs=1e-15)


@given(st.sampled_from([p for p in range(2, 2000) if all(p % d for d in range(2, math.isqrt(p) + 1))]))
def test_conv_vanishes_at_primes(p):
    assert lambda_log_conv(p) == 0.0


@settings(max_examples=60)
@given(st.sampled_from([(3, 1), (4, 1), (5, 1), (5, 2), (7, 3), (8, 3), (12, 3)]), st.integers(1, 10**4))
def test_twisted_equals_conj_times_plain(qi, k):
    chi = character(*qi)
    if math.gcd(k, chi.q) != 1:
        return
    lhs = twisted_lambda_log_conv(k, chi)
    rhs = chi(k).conjugate() * lambda_log_conv(k)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


def test_conv_table_matches_enumeration():
    table = lambda_log_conv_table(2000)
    direct = np.array([0.0] + [lambda_log_conv(k) for k in range(1, 2001)])
    np.testing.assert_allclose(table, direct, rtol=1e-12, atol=1e-13)


def test_factorize_and_divisors():
    s = get_sieve()
    assert s.factorize(360) == [(2, 3), (3, 2), (5, 1)]
    assert s.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert s.is_prime(997) and not s.is_prime(1) and not s.is_prime(999)
