"""
Aryabhata's alphabetic numeral code

Consonants carry values (varga k..m = 1..25, avarga y..h = 30..100) and the
vowel of a syllable multiplies the summed consonant values by its place
(a = 1, i = 10^2, ... au = 10^16). Syllable order does not matter.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

import structlog

from kuttaka_kit.codes.tokens import (
    AVARGA, AVARGA_KIND, SPACE, VARGA, VARGA_KIND, VOWEL_KIND, VOWELS, Token, tokenize
)
from kuttaka_kit.errors import ParseError, RangeError

logger = structlog.get_logger(__name__)

UPPER_BOUND = 10 ** 18

VARGA_VALUES: Dict[str, int] = dict(VARGA)
AVARGA_VALUES: Dict[str, int] = dict(AVARGA)
VOWEL_PLACES: Dict[str, int] = dict(VOWELS)

VARGA_BY_VALUE: Dict[int, str] = {value: symbol for symbol, value in VARGA}
AVARGA_BY_TENS: Dict[int, str] = {value // 10: symbol for symbol, value in AVARGA if value < 100}
VOWEL_BY_GROUP: Tuple[str, ...] = tuple(symbol for symbol, _ in VOWELS)

# "lR" opening a syllable can only be l (50) on the vowel R
SYLLABIC_L = ('l', 'R')


@dataclass(frozen=True)
class ConsonantToken:
    symbol: str
    klass: str
    value: int


@dataclass(frozen=True)
class VowelToken:
    symbol: str
    place: int


@dataclass(frozen=True)
class Syllable:
    """One or more consonants sharing a vowel"""

    consonants: Tuple[ConsonantToken, ...]
    vowel: VowelToken

    @property
    def value(self) -> int:
        return sum(consonant.value for consonant in self.consonants) * self.vowel.place

    @property
    def text(self) -> str:
        return ''.join(consonant.symbol for consonant in self.consonants) + self.vowel.symbol


@dataclass(frozen=True)
class PlaceRow:
    """One digit of the place table: power of ten, class, vowel, digit, letter"""

    power: int
    klass: str
    vowel: str
    digit: int
    letter: str

    def to_dict(self):
        return {
            'power': self.power,
            'class': self.klass,
            'vowel': self.vowel,
            'digit': self.digit,
            'letter': self.letter,
        }


def _consonant(symbol: str) -> ConsonantToken:
    if symbol in VARGA_VALUES:
        return ConsonantToken(symbol, VARGA_KIND, VARGA_VALUES[symbol])
    return ConsonantToken(symbol, AVARGA_KIND, AVARGA_VALUES[symbol])


def _as_tokens(text: Union[str, Sequence[str], Sequence[Token]]) -> List[Token]:
    if isinstance(text, str):
        return tokenize(text)
    tokens = []
    for index, item in enumerate(text, start=1):
        symbol = item.symbol if isinstance(item, Token) else item
        tokens.extend(Token(t.symbol, t.kind, index) for t in tokenize(symbol))
    return tokens


def parse_syllables(text: Union[str, Sequence[str]]) -> List[Syllable]:
    """
    Split text into syllables

    Raises:
        ParseError: unknown token, vowel with no consonant, whitespace inside
            a syllable, or consonants left without a vowel
    """
    syllables: List[Syllable] = []
    pending: List[ConsonantToken] = []
    pending_start = 0

    for token in _as_tokens(text):
        if token.kind == SPACE:
            if pending:
                raise ParseError(
                    f"whitespace inside a syllable at token {token.position}", token.position
                )
            continue

        if token.kind in (VARGA_KIND, AVARGA_KIND):
            if not pending:
                pending_start = token.position
            pending.append(_consonant(token.symbol))
        elif token.kind == VOWEL_KIND:
            if not pending:
                if token.symbol != 'lR':
                    raise ParseError(
                        f"vowel '{token.symbol}' has no preceding consonant at token {token.position}",
                        token.position,
                    )
                consonant_symbol, vowel_symbol = SYLLABIC_L
                pending.append(_consonant(consonant_symbol))
                symbol = vowel_symbol
            else:
                symbol = token.symbol
            syllables.append(Syllable(tuple(pending), VowelToken(symbol, VOWEL_PLACES[symbol])))
            pending = []
        else:
            raise ParseError(f"unknown token '{token.symbol}' at token {token.position}", token.position)

    if pending:
        raise ParseError(
            f"consonants from token {pending_start} have no vowel", pending_start
        )
    return syllables


def aryabhata_decode(text: Union[str, Sequence[str]]) -> int:
    """Sum of (consonant values x vowel place) over all syllables"""
    return sum(syllable.value for syllable in parse_syllables(text))


def _group_syllables(value: int, vowel: str) -> List[str]:
    """Canonical syllables for one two-digit group, avarga before varga"""
    if value == 0:
        return []
    if value <= 25:
        return [VARGA_BY_VALUE[value] + vowel]
    tens, units = divmod(value, 10)
    if tens < 3:
        # 26..29 have no single letter: m (25) clustered with the remainder
        return ['m' + VARGA_BY_VALUE[value - 25] + vowel]
    syllables = [AVARGA_BY_TENS[tens] + vowel]
    if units:
        syllables.append(VARGA_BY_VALUE[units] + vowel)
    return syllables


def _check_range(n: int) -> None:
    if n < 1:
        raise RangeError(f"{n} cannot be encoded: the code has no letter for zero")
    if n >= UPPER_BOUND:
        raise RangeError(f"{n} cannot be encoded: values must be below 10^18")


def aryabhata_syllables(n: int, order: str = 'descending') -> List[str]:
    """
    Canonical syllables of n

    Args:
        n: Value in [1, 10^18)
        order: 'descending' (highest place first) or 'ascending'

    Returns:
        List of syllable strings
    """
    _check_range(n)
    if order not in ('descending', 'ascending'):
        raise RangeError(f"order must be 'descending' or 'ascending', got {order!r}")

    groups = []
    remaining = n
    while remaining:
        remaining, value = divmod(remaining, 100)
        groups.append(value)

    syllables: List[str] = []
    for index in reversed(range(len(groups))):
        syllables.extend(_group_syllables(groups[index], VOWEL_BY_GROUP[index]))

    if order == 'ascending':
        syllables.reverse()
    return syllables


def aryabhata_encode(n: int, order: str = 'descending') -> str:
    """Encode n as syllable text; descending order matches 'yijivaka' for 3861"""
    code = ''.join(aryabhata_syllables(n, order))
    logger.debug("encoded", value=n, code=code)
    return code


def aryabhata_layout(n: int) -> List[PlaceRow]:
    """Place table of n, highest power first, as it is drawn when encoding by hand"""
    _check_range(n)
    digits = str(n)
    if len(digits) % 2:
        digits = '0' + digits

    rows: List[PlaceRow] = []
    group_count = len(digits) // 2
    for offset in range(group_count):
        group_index = group_count - 1 - offset
        vowel = VOWEL_BY_GROUP[group_index]
        tens, units = int(digits[2 * offset]), int(digits[2 * offset + 1])
        value = tens * 10 + units

        if tens >= 3:
            tens_letter = AVARGA_BY_TENS[tens]
            units_letter = VARGA_BY_VALUE.get(units, '')
        elif value == 0:
            tens_letter = units_letter = ''
        elif value <= 25:
            tens_letter, units_letter = '', VARGA_BY_VALUE[value]
        else:
            tens_letter, units_letter = '', 'm' + VARGA_BY_VALUE[value - 25]

        rows.append(PlaceRow(2 * group_index + 1, 'A', vowel, tens, tens_letter))
        rows.append(PlaceRow(2 * group_index, 'V', vowel, units, units_letter))
    return rows
