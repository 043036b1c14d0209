"""Sieve-backed arithmetic functions: von Mangoldt and the divisor convolutions
that show up in the explicit formulas (Lambda * log, and its character twist)."""
from __future__ import annotations

import math
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np

if TYPE_CHECKING:
    from .characters import DirichletCharacter

DEFAULT_SIEVE_LIMIT = 10**6


class ArithDomainError(ValueError):
    pass


class FactorSieve:
    """Smallest-prime-factor table for 0..limit (entries 0 and 1 are 0)."""

    def __init__(self, limit: int = DEFAULT_SIEVE_LIMIT):
        if limit < 1:
            raise ArithDomainError(f"sieve limit must be positive, got {limit}")
        self.limit = int(limit)
        spf = np.zeros(self.limit + 1, dtype=np.int64)
        for p in range(2, math.isqrt(self.limit) + 1):
            if spf[p] == 0:
                block = spf[p * p :: p]
                block[block == 0] = p
        idx = np.nonzero(spf[2:] == 0)[0] + 2
        spf[idx] = idx
        spf.flags.writeable = False
        self.smallest_prime_factor = spf

    def _check(self, n: int) -> int:
        n = int(n)
        if n < 1 or n > self.limit:
            raise ArithDomainError(f"n={n} outside 1..{self.limit}")
        return n

    def is_prime(self, n: int) -> bool:
        n = self._check(n)
        return n >= 2 and int(self.smallest_prime_factor[n]) == n

    def factorize(self, n: int) -> list[tuple[int, int]]:
        """Return [(p, e), ...] with p ascending."""
        n = self._check(n)
        out: list[tuple[int, int]] = []
        while n > 1:
            p = int(self.smallest_prime_factor[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        return out

    def divisors(self, n: int) -> list[int]:
        divs = [1]
        for p, e in self.factorize(n):
            divs = [d * p**k for d in divs for k in range(e + 1)]
        divs.sort()
        return divs

    def von_mangoldt(self, n: int) -> float:
        n = self._check(n)
        if n == 1:
            return 0.0
        p = int(self.smallest_prime_factor[n])
        while n % p == 0:
            n //= p
        return _log(p) if n == 1 else 0.0

    def von_mangoldt_table(self, upto: int | None = None) -> np.ndarray:
        """Lambda(n) for n = 0..upto as a float array (entry 0 is 0)."""
        upto = self.limit if upto is None else self._check(upto)
        spf = self.smallest_prime_factor[: upto + 1]
        n = np.arange(upto + 1)
        lam = np.zeros(upto + 1)
        # n is a prime power iff stripping every factor of spf(n) leaves 1
        m = n.copy()
        p = spf.copy()
        mask = p > 1
        while True:
            div = mask & (m % np.where(p > 0, p, 1) == 0) & (m > 1)
            if not div.any():
                break
            m[div] //= p[div]
        pp = mask & (m == 1)
        lam[pp] = np.log(p[pp])
        return lam

    def lambda_log_conv(self, X: int) -> float:
        """Sum over ordered factorizations X = m*n of Lambda(n) * log(m)."""
        X = self._check(X)
        total = 0.0
        # Lambda(n) vanishes off prime powers, so walk n = p^j dividing X
        for p, e in self.factorize(X):
            m = X
            for _ in range(e):
                m //= p
                total += _log(p) * math.log(m)
        return total

    def twisted_lambda_log_conv(self, k: int, chi: DirichletCharacter) -> complex:
        """Sum over k = m*n of Lambda(n) conj(chi(n)) conj(chi(m)) log(m).

        Enumerated term by term; it is not reduced to conj(chi(k)) * (Lambda*log)(k)."""
        k = self._check(k)
        total = 0j
        for p, e in self.factorize(k):
            n, m = 1, k
            for _ in range(e):
                n *= p
                m //= p
                total += _log(p) * chi(n).conjugate() * chi(m).conjugate() * math.log(m)
        return total


@lru_cache(maxsize=None)
def _log(p: int) -> float:
    return math.log(p)


@lru_cache(maxsize=8)
def get_sieve(limit: int = DEFAULT_SIEVE_LIMIT) -> FactorSieve:
    return FactorSieve(limit)


def von_mangoldt(n: int, sieve: FactorSieve | None = None) -> float:
    if int(n) == 0:
        raise ArithDomainError("Lambda(0) is undefined")
    return (sieve or get_sieve()).von_mangoldt(n)


def lambda_log_conv(X: int, sieve: FactorSieve | None = None) -> float:
    return (sieve or get_sieve()).lambda_log_conv(X)


def twisted_lambda_log_conv(k: int, chi: DirichletCharacter, sieve: FactorSieve | None = None) -> complex:
    return (sieve or get_sieve()).twisted_lambda_log_conv(k, chi)


def lambda_log_conv_table(upto: int, sieve: FactorSieve | None = None) -> np.ndarray:
    """(Lambda * log)(k) for k = 0..upto by a Dirichlet-convolution sweep.

    Used for the long k-sums; the per-k enumerators above stay the reference."""
    sieve = sieve or get_sieve()
    lam = sieve.von_mangoldt_table(upto)
    out = np.zeros(upto + 1)
    logs = np.log(np.maximum(np.arange(upto + 1), 1))
    for n in np.nonzero(lam)[0]:
        ms = np.arange(1, upto // n + 1)
        out[n * ms] += lam[n] * logs[ms]
    return out
