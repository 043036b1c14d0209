import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lapoints.characters import (
    CharacterError,
    character,
    conductor,
    enumerate_characters,
    evaluate,
    gauss_sum,
    is_primitive,
    primitive_characters,
)


def phi(q):
    return sum(1 for n in range(1, q + 1) if math.gcd(n, q) == 1)


def test_small_moduli():
    c3 = enumerate_characters(3)
    assert len(c3) == 2 and c3[1](2) == -1
    c4 = enumerate_characters(4)
    assert len(c4) == 2 and c4[1](3) == -1
    c1 = enumerate_characters(1)
    assert len(c1) == 1 and all(c1[0](n) == 1 for n in range(1, 20))


def test_bad_modulus():
    with pytest.raises(CharacterError):
        enumerate_characters(0)
    with pytest.raises(CharacterError):
        character(4, 2)


def test_evaluate_examples(chi4):
    assert evaluate(chi4, 3) == -1
    assert evaluate(chi4, 2) == 0
    assert evaluate(chi4, -1) == -1
    for q in (3, 5, 8, 15):
        for chi in enumerate_characters(q):
            assert chi(1) == 1


def test_conductor_examples(chi4):
    assert conductor(character(4, 0)) == 1 and not is_primitive(character(4, 0))
    assert conductor(chi4) == 4 and is_primitive(chi4)
    mod8 = [c for c in enumerate_characters(8) if c(3) == -1 and c(5) == 1]
    assert len(mod8) == 1 and conductor(mod8[0]) == 4


def test_gauss_examples(chi4):
    assert gauss_sum(chi4) == pytest.approx(2j, abs=1e-14)
    assert gauss_sum(character(3, 1)) == pytest.approx(1j * math.sqrt(3), abs=1e-14)
    assert gauss_sum(character(1, 0)) == pytest.approx(1, abs=1e-15)


def test_primitive_counts():
    # number of primitive characters mod q is the Dirichlet convolution mu * phi
    expected = {3: 1, 4: 1, 5: 3, 7: 5, 8: 2, 9: 4, 11: 9, 12: 1, 15: 3, 16: 4, 6: 0, 2: 0}
    for q, n in expected.items():
        assert len(primitive_characters(q)) == n


@pytest.mark.parametrize("q", range(1, 41))
def test_group_structure(q):
    chars = enumerate_characters(q)
    assert len(chars) == phi(q)
    assert chars[0].is_principal
    assert all(c.conductor == 1 for c in chars[:1])
    table = np.array([c.values for c in chars])
    # orthogonality of rows; also distinctness
    gram = table @ table.conj().T
    np.testing.assert_allclose(gram, phi(q) * np.eye(len(chars)), atol=1e-10)
    for c in chars[1:]:
        assert abs(np.sum(c.values)) < 1e-12


@pytest.mark.parametrize("q", range(2, 101))
def test_gauss_modulus(q):
    for chi in primitive_characters(q):
        assert abs(abs(gauss_sum(chi)) ** 2 - q) <= 1e-10 * q


@given(st.integers(1, 60), st.data())
def test_character_properties(q, data):
    chars = enumerate_characters(q)
    chi = chars[data.draw(st.integers(0, len(chars) - 1))]
    m = data.draw(st.integers(-500, 500))
    n = data.draw(st.integers(-500, 500))
    assert abs(chi(m * n) - chi(m) * chi(n)) < 1e-12
    assert (chi(n) == 0) == (math.gcd(n, q) > 1)
    if math.gcd(n, q) == 1:
        assert abs(abs(chi(n)) - 1) < 1e-14
    assert chi.conj()(n) == pytest.approx(chi(n).conjugate(), abs=1e-14)
    assert chi.parity in (0, 1)
    assert chi(-1) == pytest.approx((-1) ** chi.parity, abs=1e-14)
    assert q % chi.conductor == 0
    assert chi.is_primitive == (chi.conductor == q)


def test_roots_are_exact_at_quarter_turns():
    chi5 = character(5, 1)
    assert {complex(v) for v in chi5.values[1:]} <= {1, 1j, -1, -1j}


def test_first_support():
    assert character(4, 1).first_support == 3
    assert character(3, 1).first_support == 2
    assert character(8, 1).first_support == 3
    assert character(6, 1).first_support == 5


def test_induced_character_agrees():
    # an imprimitive character agrees with the character of its conductor on coprime residues
    for chi in enumerate_characters(12):
        f = chi.conductor
        base = [c for c in enumerate_characters(f)
                if all(cmath.isclose(c(n), chi(n)) for n in range(1, 12) if math.gcd(n, 12) == 1)]
        assert base and base[0].is_primitive
