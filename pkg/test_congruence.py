"""
Tests for modular inverses and congruence systems
"""

import random
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import scan_congruences
from kuttaka_kit.congruence import (
    Congruence, CongruenceSolution, inverse_extended, mod_inverse, solve_pair, solve_system
)
from kuttaka_kit.errors import (
    InconsistentSystemError, InvalidInputError, NoSolutionError, NotCoprimeError
)


def test_inverse_worked_examples():
    assert mod_inverse(137, 60) == 53
    assert mod_inverse(60, 137) == 16


def test_inverse_matches_scan():
    for m in range(2, 101):
        for a in range(1, m + 1):
            if gcd(a, m) != 1:
                continue
            expected = next(v for v in range(m) if a * v % m == 1)
            assert mod_inverse(a, m) == expected, (a, m)


def test_inverse_not_coprime():
    with pytest.raises(NotCoprimeError) as excinfo:
        mod_inverse(6, 9)
    assert excinfo.value.gcd == 3
    assert isinstance(excinfo.value, NoSolutionError)


@pytest.mark.parametrize('a, m', [(0, 7), (3, 1), (-2, 5)])
def test_inverse_preconditions(a, m):
    with pytest.raises(InvalidInputError):
        mod_inverse(a, m)


def test_inverse_agrees_with_extended_euclid():
    rng = random.Random(60137)
    checked = 0
    while checked < 10 ** 4:
        m = rng.randint(2, 10 ** 9)
        a = rng.randint(1, 10 ** 9)
        if gcd(a, m) != 1:
            continue
        assert mod_inverse(a, m) == inverse_extended(a, m)
        checked += 1


def test_inverse_of_inverse_is_original():
    rng = random.Random(1380)
    checked = 0
    while checked < 2000:
        m = rng.randint(2, 10 ** 9)
        a = rng.randint(1, 10 ** 9)
        if gcd(a, m) != 1:
            continue
        assert mod_inverse(mod_inverse(a, m), m) == a % m, (a, m)
        checked += 1


def test_solve_pair_worked_example():
    result = solve_pair(Congruence(0, 60), Congruence(10, 137))
    assert result == CongruenceSolution(1380, 8220)


def test_solve_pair_shifted_by_five():
    assert solve_pair(Congruence(5, 60), Congruence(15, 137)).value == 1385


def test_solve_pair_order_does_not_matter():
    assert solve_pair(Congruence(10, 137), Congruence(0, 60)).value == 1380


def test_solve_pair_matches_scan():
    for m1 in range(1, 13):
        for m2 in range(1, 13):
            for r1 in range(m1):
                for r2 in range(m2):
                    expected = scan_congruences([(r1, m1), (r2, m2)])
                    if expected is None:
                        with pytest.raises(InconsistentSystemError):
                            solve_pair(Congruence(r1, m1), Congruence(r2, m2))
                        continue
                    result = solve_pair(Congruence(r1, m1), Congruence(r2, m2))
                    assert result.value == expected, (r1, m1, r2, m2)


def test_consistency_detection_with_shared_factors():
    for m1 in range(1, 25):
        for m2 in range(1, 25):
            g = gcd(m1, m2)
            if g == 1:
                continue
            for r1 in range(m1):
                for r2 in range(m2):
                    agree = r1 % g == r2 % g
                    try:
                        result = solve_pair(Congruence(r1, m1), Congruence(r2, m2))
                    except InconsistentSystemError:
                        assert not agree
                        continue
                    assert agree
                    assert result.value % m1 == r1 and result.value % m2 == r2
                    assert result.combined_modulus == m1 * m2 // g


def test_shift_property():
    rng = random.Random(1385)
    base = solve_system([Congruence(0, 60), Congruence(10, 137)]).value
    for _ in range(200):
        k = rng.randint(-10 ** 6, 10 ** 6)
        shifted = solve_system([Congruence.normalized(k, 60), Congruence.normalized(10 + k, 137)])
        assert shifted.value == (base + k) % 8220


@st.composite
def consistent_systems(draw):
    target = draw(st.integers(min_value=0, max_value=10 ** 6))
    moduli = draw(st.lists(st.integers(min_value=1, max_value=200), min_size=1, max_size=5))
    return [Congruence(target % m, m) for m in moduli]


@settings(max_examples=200)
@given(consistent_systems(), st.randoms())
def test_solve_system_order_independent(system, rnd):
    shuffled = list(system)
    rnd.shuffle(shuffled)
    assert solve_system(system) == solve_system(shuffled)


@settings(max_examples=200)
@given(consistent_systems())
def test_solve_system_satisfies_every_congruence(system):
    result = solve_system(system)
    assert all(congruence.admits(result.value) for congruence in system)
    assert 0 <= result.value < result.combined_modulus


def test_small_consistent_systems_match_scan():
    rng = random.Random(4187)
    for _ in range(300):
        moduli = [rng.randint(1, 30) for _ in range(rng.randint(3, 5))]
        target = rng.randint(0, 5000)
        system = [Congruence(target % m, m) for m in moduli]
        combined = 1
        for m in moduli:
            combined = combined * m // gcd(combined, m)

        result = solve_system(system)
        assert result.value == scan_congruences([(c.residue, c.modulus) for c in system])
        assert result.combined_modulus == combined


def test_solve_system_reports_first_conflict():
    system = [Congruence(1, 5), Congruence(0, 4), Congruence(3, 6)]
    with pytest.raises(InconsistentSystemError) as excinfo:
        solve_system(system)
    assert excinfo.value.pair == (1, 2)
    assert excinfo.value.gcd == 2


def test_solve_system_single_and_empty():
    assert solve_system([Congruence(3, 7)]) == CongruenceSolution(3, 7)
    with pytest.raises(InvalidInputError):
        solve_system([])


def test_congruence_validation():
    with pytest.raises(InvalidInputError):
        Congruence(5, 5)
    with pytest.raises(InvalidInputError):
        Congruence(0, 0)
    assert Congruence.normalized(-1, 5) == Congruence(4, 5)
