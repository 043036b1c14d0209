"""Dirichlet characters mod q.

The unit group (Z/qZ)^* is split by CRT over prime powers. Odd p^e contributes
one cyclic factor generated by a primitive root; 4 contributes <-1>; 2^e with
e >= 3 contributes <-1> x <5>. A character is an exponent vector x with
chi(g_j) = exp(2 pi i x_j / ord_j). Characters are indexed by the mixed-radix
value of x (first factor most significant), so index 0 is principal.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce

import numpy as np


class CharacterError(ValueError):
    pass


def root_of_unity(num: int, den: int) -> complex:
    """exp(2 pi i num/den) with the quarter turns (1, i, -1, -i) exact."""
    frac = Fraction(num, den) % 1
    if frac.denominator in (1, 2, 4):
        return (1, 1j, -1, -1j)[int(frac * 4)]
    return cmath.exp(2j * math.pi * frac.numerator / frac.denominator)


def _factor(q: int) -> list[tuple[int, int]]:
    out = []
    p = 2
    while p * p <= q:
        if q % p == 0:
            e = 0
            while q % p == 0:
                q //= p
                e += 1
            out.append((p, e))
        p += 1
    if q > 1:
        out.append((q, 1))
    return out


def _primitive_root_prime_power(p: int, e: int) -> int:
    n = p**e
    order = p ** (e - 1) * (p - 1)
    prime_divs = [r for r, _ in _factor(order)]
    for g in range(2, n):
        if math.gcd(g, p) != 1:
            continue
        if all(pow(g, order // r, n) != 1 for r in prime_divs):
            return g
    raise AssertionError("no primitive root")  # unreachable for odd p


@dataclass(frozen=True)
class _CyclicFactor:
    modulus: int  # the prime power this factor lives on
    generator: int  # generator residue mod `modulus`
    order: int
    log_table: dict[int, int]  # residue mod `modulus` -> discrete log


def _cyclic_factors(q: int) -> list[_CyclicFactor]:
    factors: list[_CyclicFactor] = []
    for p, e in _factor(q):
        pe = p**e
        if p == 2:
            if e == 1:
                continue
            # -1 component: n mod 4
            factors.append(_CyclicFactor(pe, pe - 1, 2, {r: (0 if r % 4 == 1 else 1) for r in range(1, pe, 2)}))
            if e >= 3:
                order = 2 ** (e - 2)
                logs: dict[int, int] = {}
                x = 1
                for k in range(order):
                    logs[x] = k
                    logs[(-x) % pe] = k
                    x = x * 5 % pe
                factors.append(_CyclicFactor(pe, 5, order, logs))
        else:
            g = _primitive_root_prime_power(p, e)
            order = pe // p * (p - 1)
            logs = {}
            x = 1
            for k in range(order):
                logs[x] = k
                x = x * g % pe
            factors.append(_CyclicFactor(pe, g, order, logs))
    return factors


@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    q: int
    index: int
    exponent_vector: tuple[int, ...]
    orders: tuple[int, ...]
    # chi(n) = exp(2 pi i angle[n mod q] / denominator); angle -1 marks chi(n) = 0
    denominator: int
    angle_table: tuple[int, ...] = field(repr=False)
    values: np.ndarray = field(repr=False)

    def __call__(self, n: int) -> complex:
        return complex(self.values[int(n) % self.q])

    def evaluate(self, n: int) -> complex:
        return self(n)

    def at(self, n) -> np.ndarray:
        """Vectorised evaluation on an integer array."""
        return self.values[np.asarray(n, dtype=np.int64) % self.q]

    @property
    def char_id(self) -> dict:
        return {"q": self.q, "index": self.index}

    @property
    def is_principal(self) -> bool:
        return self.index == 0

    @property
    def is_real(self) -> bool:
        return all(2 * a % self.denominator == 0 for a in self.angle_table if a >= 0)

    @property
    def parity(self) -> int:
        """nu in {0, 1} with chi(-1) = (-1)^nu."""
        return 0 if self(-1).real > 0 else 1

    nu = parity

    @property
    def conductor(self) -> int:
        for f in sorted(d for d in range(1, self.q + 1) if self.q % d == 0):
            if all(
                self.angle_table[n] == 0
                for n in range(1, self.q, f) if math.gcd(n, self.q) == 1
            ):
                return f
        return self.q

    @property
    def is_primitive(self) -> bool:
        return self.conductor == self.q

    @property
    def first_support(self) -> int:
        """min{n >= 2 : chi(n) != 0}."""
        n = 2
        while math.gcd(n, self.q) != 1:
            n += 1
        return n

    def conj(self) -> DirichletCharacter:
        x = tuple((-e) % o for e, o in zip(self.exponent_vector, self.orders))
        return character(self.q, _index_from_vector(x, self.orders))

    def gauss_sum(self) -> complex:
        return gauss_sum(self)


def _index_from_vector(x, orders) -> int:
    idx = 0
    for e, o in zip(x, orders):
        idx = idx * o + e
    return idx


def _vector_from_index(idx: int, orders) -> tuple[int, ...]:
    x = []
    for o in reversed(orders):
        idx, e = divmod(idx, o)
        x.append(e)
    return tuple(reversed(x))


@lru_cache(maxsize=None)
def _group_data(q: int):
    factors = _cyclic_factors(q)
    orders = tuple(f.order for f in factors)
    den = reduce(math.lcm, orders, 1)
    logs = []
    for n in range(q):
        if math.gcd(n, q) != 1:
            logs.append(None)
        else:
            logs.append(tuple(f.log_table[n % f.modulus] for f in factors))
    return orders, den, logs


@lru_cache(maxsize=None)
def character(q: int, index: int) -> DirichletCharacter:
    if q < 1:
        raise CharacterError(f"modulus must be positive, got {q}")
    orders, den, logs = _group_data(q)
    size = math.prod(orders)
    if not 0 <= index < size:
        raise CharacterError(f"character index {index} out of range for q={q} (phi(q)={size})")
    x = _vector_from_index(index, orders)
    angles = []
    for lg in logs:
        if lg is None:
            angles.append(-1)
        else:
            angles.append(sum(xi * li * (den // o) for xi, li, o in zip(x, lg, orders)) % den)
    vals = np.array([0j if a < 0 else root_of_unity(a, den) for a in angles], dtype=complex)
    vals.flags.writeable = False
    return DirichletCharacter(q, index, x, orders, den, tuple(angles), vals)


def enumerate_characters(q: int) -> list[DirichletCharacter]:
    if q < 1:
        raise CharacterError(f"modulus must be positive, got {q}")
    orders, _, _ = _group_data(q)
    return [character(q, i) for i in range(math.prod(orders))]


def evaluate(chi: DirichletCharacter, n: int) -> complex:
    return chi(n)


def conductor(chi: DirichletCharacter) -> int:
    return chi.conductor


def is_primitive(chi: DirichletCharacter) -> bool:
    return chi.is_primitive


def gauss_sum(chi: DirichletCharacter) -> complex:
    q = chi.q
    return complex(sum(chi(m) * cmath.exp(2j * math.pi * m / q) for m in range(q)))


def primitive_characters(q: int) -> list[DirichletCharacter]:
    return [c for c in enumerate_characters(q) if c.is_primitive]
