"""
Kuttaka (pulverizer) solver for the linear indeterminate equation ax + c = by

The solver divides the larger coefficient by the smaller one repeatedly,
multiplies the last retained remainder by an optional number (mati) chosen so
the adjusted value divides exactly, writes the quotients, mati and final
quotient in a column (the valli) and folds it bottom-up into the solution.
"""

from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

import structlog

from kuttaka_kit.arith import (
    MAGNITUDE_BOUND, check_magnitude, checked_add, checked_mul, checked_sub
)
from kuttaka_kit.errors import InvalidInputError, KuttakaKitError, NoSolutionError

logger = structlog.get_logger(__name__)


class Parity(Enum):
    """Count parity of the quotients retained in the valli"""

    EVEN = 'even'
    ODD = 'odd'

    @classmethod
    def of(cls, count: int) -> 'Parity':
        return cls.EVEN if count % 2 == 0 else cls.ODD

    @property
    def sign(self) -> int:
        """Sign applied to the constant: -1 for even, +1 for odd"""
        return -1 if self is Parity.EVEN else 1


@dataclass(frozen=True)
class Equation:
    """The equation a*x + c = b*y"""

    a: int
    c: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1:
            raise InvalidInputError(f"coefficients must be positive, got a={self.a}, b={self.b}")
        check_magnitude('a', self.a)
        check_magnitude('b', self.b)
        check_magnitude('c', self.c)

    def holds(self, x: int, y: int) -> bool:
        return self.a * x + self.c == self.b * y

    def __str__(self):
        return f"{self.a}x + {self.c} = {self.b}y"


@dataclass(frozen=True)
class QuotientChain:
    """Quotients and remainders of the mutual division of dividend by divisor"""

    dividend: int
    divisor: int
    quotients: Tuple[int, ...]
    remainders: Tuple[int, ...]
    gcd: int

    def __len__(self):
        return len(self.quotients)

    def remainder_after(self, count: int) -> int:
        """Remainder left after the first `count` divisions (count=0 gives the divisor)"""
        if count == 0:
            return self.divisor
        return self.remainders[count - 1]

    def divisor_of(self, count: int) -> int:
        """Divisor of the count-th division (count=0 gives the dividend)"""
        if count == 0:
            return self.dividend
        return self.remainder_after(count - 1)


@dataclass(frozen=True)
class Valli:
    """The column of quotients, mati and mati-quotient"""

    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) < 2:
            raise InvalidInputError(f"valli needs at least 2 entries, got {len(self.entries)}")

    def __len__(self):
        return len(self.entries)


@dataclass(frozen=True)
class Solution:
    """Raw output of the array plus the least nonnegative member of the family"""

    x_raw: int
    y_raw: int
    x_min: int
    y_min: int
    period_x: int
    period_y: int

    def general(self, t: int) -> Tuple[int, int]:
        """The t-th solution (x_min + t*period_x, y_min + t*period_y)"""
        return self.x_min + t * self.period_x, self.y_min + t * self.period_y

    def to_dict(self):
        return {
            'x_raw': self.x_raw,
            'y_raw': self.y_raw,
            'x_min': self.x_min,
            'y_min': self.y_min,
            'period_x': self.period_x,
            'period_y': self.period_y,
        }


@dataclass(frozen=True)
class KuttakaTrace:
    """Working of one solve, laid out the way the array is written by hand"""

    chain: QuotientChain
    retained: int
    sign: int
    mati: Optional[int]
    quotient: Optional[int]
    valli: Tuple[int, ...]
    columns: Tuple[Tuple[int, ...], ...]
    swapped: bool
    gcd: int = field(default=1)

    def to_dict(self):
        return {
            'dividend': self.chain.dividend,
            'divisor': self.chain.divisor,
            'quotients': list(self.chain.quotients),
            'remainders': list(self.chain.remainders),
            'gcd': self.gcd,
            'retained': self.retained,
            'sign': self.sign,
            'mati': self.mati,
            'mati_quotient': self.quotient,
            'valli': list(self.valli),
            'columns': [list(column) for column in self.columns],
            'top_is_x': self.swapped,
        }


def mutual_division(a: int, b: int) -> QuotientChain:
    """
    Divide a by b, then each divisor by the remainder, until the remainder is 0

    Args:
        a: Dividend of the first division
        b: Divisor of the first division

    Returns:
        QuotientChain whose gcd is the last nonzero remainder
    """
    if a < 1 or b < 1:
        raise InvalidInputError(f"mutual division needs positive integers, got {a} and {b}")
    check_magnitude('a', a)
    check_magnitude('b', b)

    quotients: List[int] = []
    remainders: List[int] = []
    dividend, divisor = a, b
    while True:
        quotient, remainder = divmod(dividend, divisor)
        quotients.append(quotient)
        remainders.append(remainder)
        if remainder == 0:
            break
        dividend, divisor = divisor, remainder

    logger.debug("mutual division", dividend=a, divisor=b, length=len(quotients), gcd=divisor)
    return QuotientChain(a, b, tuple(quotients), tuple(remainders), divisor)


def choose_mati(r_last: int, d_prev: int, c: int, parity: Parity) -> Tuple[int, int]:
    """
    Pick the optional number (mati) for the final remainder

    The mati is the smallest t >= 0 for which r_last*t + s*c divides exactly
    by d_prev with a positive quotient, s being the parity sign. A zero
    constant admits mati 0 with quotient 0.

    Args:
        r_last: Remainder after the retained divisions
        d_prev: Divisor of the last retained division
        c: Constant of the equation
        parity: Parity of the retained quotient count

    Returns:
        (mati, quotient)
    """
    if r_last < 1 or d_prev < 1:
        raise InvalidInputError(f"r_last and d_prev must be positive, got {r_last} and {d_prev}")
    check_magnitude('c', c)

    if c == 0:
        return 0, 0

    signed_c = parity.sign * c
    g = gcd(r_last, d_prev)
    if signed_c % g != 0:
        raise NoSolutionError(f"no solution: gcd {g} does not divide {abs(c)}", gcd=g)

    step = d_prev // g
    reduced_r = r_last // g
    target = (-signed_c // g) % step
    if step == 1:
        mati = 0
    elif reduced_r % step == 1:
        mati = target
    else:
        _, s, _ = extended_euclid(reduced_r, step)
        mati = checked_mul(target, s % step) % step

    quotient = checked_add(checked_mul(r_last, mati), signed_c) // d_prev
    if quotient < 1:
        # each step of d_prev/g in the mati raises the quotient by r_last/g
        lifts = -((quotient - 1) // reduced_r)
        mati = checked_add(mati, checked_mul(lifts, step))
        quotient = checked_add(quotient, checked_mul(lifts, reduced_r))

    logger.debug("mati chosen", r_last=r_last, d_prev=d_prev, c=c, parity=parity.value,
                 mati=mati, quotient=quotient)
    return mati, quotient


def _fold_once(entries: List[int]) -> List[int]:
    below = entries[-1]
    penultimate = entries[-2]
    above = entries[-3]
    return entries[:-3] + [checked_add(checked_mul(above, penultimate), below), penultimate]


def valli_columns(valli: Union[Valli, Sequence[int]]) -> List[Tuple[int, ...]]:
    """Every column of the reduction, from the full valli down to the final pair"""
    entries = list(valli.entries if isinstance(valli, Valli) else Valli(tuple(valli)).entries)
    columns = [tuple(entries)]
    while len(entries) > 2:
        entries = _fold_once(entries)
        columns.append(tuple(entries))
    return columns


def reduce_valli(valli: Union[Valli, Sequence[int]]) -> Tuple[int, int]:
    """
    Fold the valli bottom-up until two numbers remain

    The number above the penultimate entry is replaced by itself times the
    penultimate plus the bottom entry, and the bottom entry is discarded.

    Returns:
        (top, second)
    """
    top, second = valli_columns(valli)[-1]
    return top, second


def solve_with_trace(eq: Equation, retain: Optional[int] = None) -> Tuple[Solution, KuttakaTrace]:
    """
    Solve a*x + c = b*y and return the solution with its working

    Args:
        eq: The equation
        retain: Number of quotients kept in the valli; defaults to all but the
            terminal division, so the last retained remainder is the gcd

    Returns:
        (Solution, KuttakaTrace)
    """
    a, b, c = eq.a, eq.b, eq.c
    swapped = a < b
    dividend, divisor = (b, a) if swapped else (a, b)
    chain = mutual_division(dividend, divisor)
    g = chain.gcd

    if c % g != 0:
        logger.info("equation has no solution", equation=str(eq), gcd=g)
        raise NoSolutionError(f"no solution: gcd {g} does not divide {c}", gcd=g)

    period_x, period_y = b // g, a // g

    if c == 0:
        trace = KuttakaTrace(chain, 0, -1, None, None, (), (), swapped, g)
        return Solution(0, 0, 0, 0, period_x, period_y), trace

    if retain is None:
        retain = len(chain) - 1
    if not 0 <= retain < len(chain):
        raise InvalidInputError(f"retain must lie in [0, {len(chain) - 1}], got {retain}")

    # with the larger coefficient as dividend, the fold yields divisor*top - dividend*second = c'
    effective_c = -c if swapped else c
    parity = Parity.of(retain)
    mati, quotient = choose_mati(
        chain.remainder_after(retain), chain.divisor_of(retain), effective_c, parity
    )

    valli = Valli(chain.quotients[:retain] + (mati, quotient))
    columns = valli_columns(valli)
    top, second = columns[-1]
    x_raw, y_raw = (top, second) if swapped else (second, top)

    if not eq.holds(x_raw, y_raw):
        raise KuttakaKitError(f"array output ({x_raw}, {y_raw}) does not satisfy {eq}")

    x_min = x_raw % period_x
    numerator = checked_add(checked_mul(a, x_min), c)
    y_min = numerator // b
    if checked_sub(numerator, checked_mul(b, y_min)) != 0:
        raise KuttakaKitError(f"minimal x {x_min} does not satisfy {eq}")

    solution = Solution(x_raw, y_raw, x_min, y_min, period_x, period_y)
    trace = KuttakaTrace(chain, retain, parity.sign, mati, quotient, valli.entries,
                         tuple(columns), swapped, g)
    logger.debug("solved", equation=str(eq), x_raw=x_raw, y_raw=y_raw, x_min=x_min, y_min=y_min)
    return solution, trace


def solve(eq: Equation, retain: Optional[int] = None) -> Solution:
    """Solve a*x + c = b*y by the pulverizer"""
    solution, _ = solve_with_trace(eq, retain)
    return solution


def extended_euclid(a: int, b: int) -> Tuple[int, int, int]:
    """
    Bezout coefficients by the extended Euclid algorithm

    Returns:
        (g, s, t) with s*a + t*b = g = gcd(a, b)
    """
    if a < 1 or b < 1:
        raise InvalidInputError(f"extended Euclid needs positive integers, got {a} and {b}")
    check_magnitude('a', a, MAGNITUDE_BOUND)
    check_magnitude('b', b, MAGNITUDE_BOUND)

    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1 != 0:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def inverse_pair(a: int, b: int) -> Tuple[int, int]:
    """
    Both reciprocals from one solve of a*x + 1 = b*y

    Returns:
        (a^-1 mod b, b^-1 mod a), read off as -x mod b and y mod a
    """
    solution = solve(Equation(a, 1, b))
    return (-solution.x_min) % b, solution.y_min % a
