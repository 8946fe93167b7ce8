"""
Katapayadi consonant-to-digit code, Sanskrit and English tables

Vowels are free: they carry no digit and may be chosen to make words.
Digits are read left to right as written.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import structlog

from kuttaka_kit.codes.tokens import SANSKRIT, SPACE, Token, Tokenizer
from kuttaka_kit.errors import EmptyDecodeError, InvalidInputError, UnknownTokenError

logger = structlog.get_logger(__name__)

Chooser = Callable[[str, int, Tuple[str, ...]], str]


@dataclass(frozen=True)
class KatapayadiTable:
    """Rows of consonants per digit, with the free vowels of the script"""

    name: str
    rows: Tuple[Tuple[str, ...], ...]
    free_symbols: FrozenSet[str]
    tokenizer: Tokenizer
    default_vowel: str
    trailing_vowel: bool

    @cached_property
    def mapping(self) -> Dict[str, int]:
        """Consonant -> digit; row entries are listed for digits 1..9 then 0"""
        mapping = {}
        for row in self.rows:
            for index, symbol in enumerate(row):
                mapping[symbol] = (index + 1) % 10
        return mapping

    def candidates(self, digit: int) -> Tuple[str, ...]:
        """Every consonant standing for digit, in row order"""
        return tuple(symbol for symbol, value in self.mapping.items() if value == digit)


SANSKRIT_TABLE = KatapayadiTable(
    name='sanskrit',
    rows=(
        ('k', 'kh', 'g', 'gh', 'G', 'c', 'ch', 'j', 'jh', 'J'),
        ('T', 'Th', 'D', 'Dh', 'N', 't', 'th', 'd', 'dh', 'n'),
        ('p', 'ph', 'b', 'bh', 'm'),
        ('y', 'r', 'l', 'v', 'z', 'S', 's', 'h'),
    ),
    free_symbols=frozenset({'a', 'i', 'u', 'R', 'lR', 'e', 'ai', 'o', 'au'}),
    tokenizer=SANSKRIT,
    default_vowel='a',
    trailing_vowel=True,
)

_ENGLISH_LETTERS = 'abcdefghijklmnopqrstuvwxyz'

ENGLISH_TABLE = KatapayadiTable(
    name='english',
    rows=(
        ('b', 'c', 'd', 'f', 'g', 'h', 'j', 'k', 'l', 'm'),
        ('n', 'p', 'q', 'r', 's', 't', 'v', 'w', 'x', 'y'),
        ('z',),
    ),
    free_symbols=frozenset('aeiou'),
    tokenizer=Tokenizer({letter: 'letter' for letter in _ENGLISH_LETTERS}, fold_case=True),
    default_vowel='o',
    trailing_vowel=False,
)

TABLES: Dict[str, KatapayadiTable] = {
    SANSKRIT_TABLE.name: SANSKRIT_TABLE,
    ENGLISH_TABLE.name: ENGLISH_TABLE,
}


def choose_first(digit: str, position: int, candidates: Tuple[str, ...]) -> str:
    return candidates[0]


def choose_last(digit: str, position: int, candidates: Tuple[str, ...]) -> str:
    return candidates[-1]


def choose_cycle(digit: str, position: int, candidates: Tuple[str, ...]) -> str:
    return candidates[position % len(candidates)]


CHOOSERS: Dict[str, Chooser] = {
    'first': choose_first,
    'last': choose_last,
    'cycle': choose_cycle,
}


def get_table(name: Union[str, KatapayadiTable]) -> KatapayadiTable:
    if isinstance(name, KatapayadiTable):
        return name
    try:
        return TABLES[name]
    except KeyError:
        raise InvalidInputError(
            f"unknown Katapayadi table {name!r}; expected one of {', '.join(sorted(TABLES))}"
        )


def katapayadi_decode(word: Union[str, Sequence[str]],
                      table: Union[str, KatapayadiTable] = SANSKRIT_TABLE,
                      strict: bool = False) -> str:
    """
    One digit per mapped consonant, left to right

    Free vowels, whitespace and unmapped tokens contribute nothing.

    Raises:
        EmptyDecodeError: no mapped consonant in the word
        UnknownTokenError: strict mode and a token that is neither a mapped
            consonant nor a free vowel
    """
    table = get_table(table)
    mapping = table.mapping
    if isinstance(word, str):
        tokens = table.tokenizer.tokenize(word)
    else:
        tokens = [Token(symbol, 'letter', index) for index, symbol in enumerate(word, start=1)]

    if strict:
        for token in tokens:
            if token.kind != SPACE and token.symbol not in mapping \
                    and token.symbol not in table.free_symbols:
                raise UnknownTokenError(
                    f"unknown token '{token.symbol}' at token {token.position}", token.position
                )

    digits = [str(mapping[token.symbol]) for token in tokens
              if token.kind != SPACE and token.symbol in mapping]
    if not digits:
        raise EmptyDecodeError(f"no mapped consonant in {''.join(t.symbol for t in tokens)!r}")
    return ''.join(digits)


def katapayadi_encode(digits: str,
                      table: Union[str, KatapayadiTable] = SANSKRIT_TABLE,
                      chooser: Union[str, Chooser] = 'first',
                      vowel: Optional[str] = None) -> str:
    """
    Spell a digit string with one consonant per digit

    Args:
        digits: Nonempty string of 0-9
        table: Table or table name
        chooser: Name in CHOOSERS or a callable (digit, position, candidates)
        vowel: Filler vowel; defaults to the table's vowel

    Returns:
        The word; decoding it gives back digits
    """
    table = get_table(table)
    if not digits or not digits.isdigit() or not digits.isascii():
        raise InvalidInputError(f"expected a nonempty digit string, got {digits!r}")

    if isinstance(chooser, str):
        if chooser not in CHOOSERS:
            raise InvalidInputError(
                f"unknown chooser {chooser!r}; expected one of {', '.join(sorted(CHOOSERS))}"
            )
        chooser = CHOOSERS[chooser]

    filler = table.default_vowel if vowel is None else vowel
    if filler not in table.free_symbols:
        raise InvalidInputError(f"filler {filler!r} is not a free vowel of the {table.name} table")

    consonants: List[str] = []
    for position, digit in enumerate(digits):
        candidates = table.candidates(int(digit))
        symbol = chooser(digit, position, candidates)
        if symbol not in candidates:
            raise InvalidInputError(f"chooser picked {symbol!r}, which does not stand for {digit}")
        consonants.append(symbol)

    word = filler.join(consonants)
    if table.trailing_vowel:
        word += filler

    # the filler must not fuse with a consonant under longest match ('l' + 'R' reads as 'lR')
    spelled = [token.symbol for token in table.tokenizer.tokenize(word)
               if token.symbol in table.mapping]
    if spelled != consonants:
        raise InvalidInputError(
            f"filler {filler!r} merges with the chosen consonants: {word!r} does not read back"
        )
    logger.debug("katapayadi encoded", digits=digits, table=table.name, word=word)
    return word
