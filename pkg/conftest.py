"""
Shared fixtures and brute-force oracles for the test suite

The oracles here never import the package's solvers.
"""

import logging
from math import gcd
from typing import List, Optional, Sequence, Tuple

import pytest

from kuttaka_kit.logging_setup import configure_logging


@pytest.fixture(autouse=True, scope='session')
def quiet_logging():
    configure_logging('WARNING')


@pytest.fixture(autouse=True)
def restore_root_handlers():
    """CliRunner swaps stderr; keep later tests off its closed stream"""
    root = logging.getLogger()
    handlers = list(root.handlers)
    yield
    root.handlers = handlers


def scan_solution(a: int, b: int, c: int) -> Optional[Tuple[int, int]]:
    """Least x >= 0 with b | a*x + c, paired with its y; None if there is none"""
    for x in range(b):
        if (a * x + c) % b == 0:
            return x, (a * x + c) // b
    return None


def scan_congruences(pairs: Sequence[Tuple[int, int]]) -> Optional[int]:
    """Least x >= 0 satisfying every x = r (mod m) by trying each x below the lcm"""
    limit = 1
    for _, modulus in pairs:
        limit = limit * modulus // gcd(limit, modulus)
    for x in range(limit):
        if all(x % modulus == residue % modulus for residue, modulus in pairs):
            return x
    return None


def long_division_chain(a: int, b: int) -> Tuple[List[int], List[int]]:
    """Quotients and remainders of the mutual division, by repeated subtraction"""
    quotients, remainders = [], []
    dividend, divisor = a, b
    while True:
        quotient, remainder = 0, dividend
        while remainder >= divisor:
            remainder -= divisor
            quotient += 1
        quotients.append(quotient)
        remainders.append(remainder)
        if remainder == 0:
            return quotients, remainders
        dividend, divisor = divisor, remainder


def convergent_fold(entries: Sequence[int]) -> Tuple[int, int]:
    """
    Fold a column by the forward convergent recurrence

    The leading entries act as partial quotients; the last two weight the
    final pair of convergents.
    """
    h_prev, h_prev2 = 1, 0
    k_prev, k_prev2 = 0, 1
    for term in entries[:-2]:
        h_prev, h_prev2 = term * h_prev + h_prev2, h_prev
        k_prev, k_prev2 = term * k_prev + k_prev2, k_prev
    penultimate, last = entries[-2], entries[-1]
    return h_prev * penultimate + h_prev2 * last, k_prev * penultimate + k_prev2 * last


def positional_value(rows) -> int:
    """Number written by a place table"""
    return sum(row.digit * 10 ** row.power for row in rows)
