"""
Harvard-Kyoto style token inventory and a longest-match tokenizer
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Union

VARGA = (
    ('k', 1), ('kh', 2), ('g', 3), ('gh', 4), ('G', 5),
    ('c', 6), ('ch', 7), ('j', 8), ('jh', 9), ('J', 10),
    ('T', 11), ('Th', 12), ('D', 13), ('Dh', 14), ('N', 15),
    ('t', 16), ('th', 17), ('d', 18), ('dh', 19), ('n', 20),
    ('p', 21), ('ph', 22), ('b', 23), ('bh', 24), ('m', 25),
)

AVARGA = (
    ('y', 30), ('r', 40), ('l', 50), ('v', 60),
    ('z', 70), ('S', 80), ('s', 90), ('h', 100),
)

VOWELS = (
    ('a', 10 ** 0), ('i', 10 ** 2), ('u', 10 ** 4), ('R', 10 ** 6), ('lR', 10 ** 8),
    ('e', 10 ** 10), ('ai', 10 ** 12), ('o', 10 ** 14), ('au', 10 ** 16),
)

IAST = {
    'G': 'ṅ', 'J': 'ñ', 'T': 'ṭ', 'Th': 'ṭh', 'D': 'ḍ', 'Dh': 'ḍh', 'N': 'ṇ',
    'z': 'ś', 'S': 'ṣ', 'R': 'ṛ', 'lR': 'ḷ',
}

SPACE = 'space'
UNKNOWN = 'unknown'
VARGA_KIND = 'varga'
AVARGA_KIND = 'avarga'
VOWEL_KIND = 'vowel'


@dataclass(frozen=True)
class Token:
    """One token of input text; position is the 1-based token index"""

    symbol: str
    kind: str
    position: int

    @property
    def is_space(self) -> bool:
        return self.kind == SPACE


class Tokenizer:
    """Longest-match tokenizer over a fixed symbol inventory"""

    def __init__(self, kinds: Dict[str, str], fold_case: bool = False):
        self.kinds = dict(kinds)
        self.fold_case = fold_case
        alternatives = sorted(self.kinds, key=len, reverse=True)
        self._pattern = re.compile(
            r'\s+|' + '|'.join(re.escape(symbol) for symbol in alternatives) + r'|.',
            re.DOTALL,
        )

    def tokenize(self, text: str) -> List[Token]:
        if self.fold_case:
            text = text.lower()
        tokens = []
        for index, match in enumerate(self._pattern.finditer(text), start=1):
            symbol = match.group(0)
            if symbol.isspace():
                tokens.append(Token(' ', SPACE, index))
            else:
                tokens.append(Token(symbol, self.kinds.get(symbol, UNKNOWN), index))
        return tokens


def _sanskrit_kinds() -> Dict[str, str]:
    kinds = {symbol: VARGA_KIND for symbol, _ in VARGA}
    kinds.update({symbol: AVARGA_KIND for symbol, _ in AVARGA})
    kinds.update({symbol: VOWEL_KIND for symbol, _ in VOWELS})
    return kinds


SANSKRIT_KINDS = _sanskrit_kinds()
SANSKRIT = Tokenizer(SANSKRIT_KINDS)

TokenStream = Union[str, Sequence[str], Sequence[Token]]


def tokenize(text: str) -> List[Token]:
    """Tokenize Harvard-Kyoto text by longest match"""
    return SANSKRIT.tokenize(text)


def symbols_of(stream: TokenStream, tokenizer: Tokenizer = SANSKRIT) -> List[str]:
    """Token symbols of a string (tokenized first) or of an existing token list"""
    if isinstance(stream, str):
        return [token.symbol for token in tokenizer.tokenize(stream)]
    return [item.symbol if isinstance(item, Token) else item for item in stream]


def render(symbols: Iterable[str], separator: str = '') -> str:
    return separator.join(symbols)


def to_iast(symbols: Union[str, Iterable[str]]) -> str:
    """Render tokens with IAST diacritics; display only"""
    if isinstance(symbols, str):
        symbols = symbols_of(symbols)
    return ''.join(IAST.get(symbol, symbol) for symbol in symbols)
