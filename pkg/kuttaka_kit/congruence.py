"""
Modular inverses and simultaneous congruences by the pulverizer
"""

from dataclasses import dataclass
from math import gcd
from typing import List, Sequence, Tuple

import structlog

from kuttaka_kit.arith import check_magnitude, checked_add, checked_mul, lcm
from kuttaka_kit.errors import (
    InconsistentSystemError, InvalidInputError, NoSolutionError, NotCoprimeError
)
from kuttaka_kit.kuttaka import Equation, extended_euclid, solve

logger = structlog.get_logger(__name__)


@dataclass(frozen=True)
class Congruence:
    """x = residue (mod modulus)"""

    residue: int
    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise InvalidInputError(f"modulus must be positive, got {self.modulus}")
        check_magnitude('modulus', self.modulus)
        if not 0 <= self.residue < self.modulus:
            raise InvalidInputError(
                f"residue {self.residue} must lie in [0, {self.modulus})"
            )

    @classmethod
    def normalized(cls, residue: int, modulus: int) -> 'Congruence':
        """Build a congruence from any integer residue"""
        if modulus < 1:
            raise InvalidInputError(f"modulus must be positive, got {modulus}")
        return cls(residue % modulus, modulus)

    def admits(self, value: int) -> bool:
        return value % self.modulus == self.residue

    def __str__(self):
        return f"x = {self.residue} (mod {self.modulus})"


@dataclass(frozen=True)
class CongruenceSolution:
    """Least nonnegative common solution and the lcm of the moduli"""

    value: int
    combined_modulus: int

    def as_congruence(self) -> Congruence:
        return Congruence(self.value, self.combined_modulus)

    def to_dict(self):
        return {'value': self.value, 'combined_modulus': self.combined_modulus}


def mod_inverse(a: int, m: int) -> int:
    """
    Multiplicative inverse of a modulo m from a*x + 1 = m*y

    Args:
        a: Number to invert (positive)
        m: Modulus, at least 2

    Returns:
        v in [1, m) with a*v = 1 (mod m), taken as -x mod m
    """
    if a < 1:
        raise InvalidInputError(f"a must be positive, got {a}")
    if m < 2:
        raise InvalidInputError(f"modulus must be at least 2, got {m}")
    g = gcd(a, m)
    if g != 1:
        raise NotCoprimeError(f"{a} has no inverse modulo {m}: gcd is {g}", gcd=g)

    solution = solve(Equation(a, 1, m))
    return (-solution.x_min) % m


def inverse_extended(a: int, m: int) -> int:
    """Multiplicative inverse of a modulo m from the Bezout coefficients"""
    if a < 1 or m < 2:
        raise InvalidInputError(f"need a >= 1 and m >= 2, got a={a}, m={m}")
    g, s, _ = extended_euclid(a, m)
    if g != 1:
        raise NotCoprimeError(f"{a} has no inverse modulo {m}: gcd is {g}", gcd=g)
    return s % m


def solve_pair(first: Congruence, second: Congruence) -> CongruenceSolution:
    """
    The number answering to two divisors (dvicchedagra)

    With R_g the greater remainder on divisor D_g and R_s the smaller on D_s,
    solve D_g*x + (R_g - R_s) = D_s*y, multiply x by D_g and add R_g.
    Equal remainders take the larger modulus as the greater side.

    Returns:
        CongruenceSolution with the least nonnegative value mod lcm(m1, m2)
    """
    greater, smaller = first, second
    if (smaller.residue, smaller.modulus) > (greater.residue, greater.modulus):
        greater, smaller = smaller, greater

    combined = lcm(first.modulus, second.modulus)
    difference = greater.residue - smaller.residue
    try:
        solution = solve(Equation(greater.modulus, difference, smaller.modulus))
    except NoSolutionError as exc:
        g = gcd(first.modulus, second.modulus)
        raise InconsistentSystemError(
            f"inconsistent congruences: {first} and {second} disagree modulo {g}",
            pair=(0, 1), gcd=g,
        ) from exc

    value = checked_add(checked_mul(solution.x_min, greater.modulus), greater.residue) % combined
    logger.debug("pair combined", first=str(first), second=str(second), value=value,
                 modulus=combined)
    return CongruenceSolution(value, combined)


def _first_conflict(congruences: Sequence[Congruence], index: int) -> Tuple[int, int]:
    """Earliest congruence before `index` that disagrees with it, and the pair gcd"""
    current = congruences[index]
    for earlier_index in range(index):
        earlier = congruences[earlier_index]
        g = gcd(earlier.modulus, current.modulus)
        if earlier.residue % g != current.residue % g:
            return earlier_index, g
    return 0, gcd(congruences[0].modulus, current.modulus)


def solve_system(congruences: Sequence[Congruence]) -> CongruenceSolution:
    """
    Fold solve_pair left to right over a list of congruences

    Moduli need not be pairwise coprime; the combined modulus is their lcm.
    """
    items: List[Congruence] = list(congruences)
    if not items:
        raise InvalidInputError("a congruence system needs at least one congruence")

    accumulated = CongruenceSolution(items[0].residue, items[0].modulus)
    for index in range(1, len(items)):
        try:
            accumulated = solve_pair(accumulated.as_congruence(), items[index])
        except InconsistentSystemError as exc:
            earlier, g = _first_conflict(items, index)
            logger.info("inconsistent system", first=earlier, second=index)
            raise InconsistentSystemError(
                f"inconsistent congruences #{earlier + 1} ({items[earlier]}) "
                f"and #{index + 1} ({items[index]}): they disagree modulo {g}",
                pair=(earlier, index), gcd=g,
            ) from exc
    return accumulated
