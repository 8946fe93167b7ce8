"""
Checked integer arithmetic

Inputs are bounded by MAGNITUDE_BOUND; products and sums of bounded values
are allowed to grow to double width (WIDE_BOUND) and no further.
"""

from math import gcd

from kuttaka_kit.errors import MagnitudeOverflowError

MAGNITUDE_BOUND = 10 ** 18
WIDE_BOUND = (1 << 127) - 1


def check_magnitude(name: str, value: int, bound: int = MAGNITUDE_BOUND) -> int:
    """Return value unchanged, or raise if |value| exceeds bound"""
    if abs(value) > bound:
        raise MagnitudeOverflowError(f"{name} = {value} exceeds magnitude bound {bound}")
    return value


def checked_add(left: int, right: int) -> int:
    return check_magnitude('sum', left + right, WIDE_BOUND)


def checked_sub(left: int, right: int) -> int:
    return check_magnitude('difference', left - right, WIDE_BOUND)


def checked_mul(left: int, right: int) -> int:
    return check_magnitude('product', left * right, WIDE_BOUND)


def lcm(left: int, right: int) -> int:
    """Least common multiple of two positive integers, bounded"""
    return check_magnitude('lcm', left // gcd(left, right) * right)
