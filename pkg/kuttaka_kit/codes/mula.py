"""
Muladeviya reciprocal cipher: paired letters swap, all others stay
"""

from typing import Dict, Iterable, List, Sequence, Tuple, Union

import structlog

from kuttaka_kit.codes.tokens import SANSKRIT_KINDS, SPACE, UNKNOWN, Token, Tokenizer
from kuttaka_kit.errors import CipherConfigError, UnknownTokenError

logger = structlog.get_logger(__name__)

DEFAULT_PAIRS: Tuple[Tuple[str, str], ...] = (
    ('a', 'k'), ('kh', 'g'), ('gh', 'G'), ('c', 'T'), ('t', 'p'),
    ('J', 'N'), ('n', 'm'), ('r', 'S'), ('l', 's'), ('y', 'z'),
)


class ReciprocalCipher:
    """Involutory substitution built from unordered letter pairs"""

    def __init__(self, pairs: Iterable[Tuple[str, str]] = DEFAULT_PAIRS):
        self.pairs = tuple((left, right) for left, right in pairs)
        self.partner: Dict[str, str] = {}
        for left, right in self.pairs:
            if left == right:
                raise CipherConfigError(f"token {left!r} cannot be paired with itself")
            for symbol in (left, right):
                if symbol in self.partner:
                    raise CipherConfigError(f"token {symbol!r} appears in more than one pair")
            self.partner[left] = right
            self.partner[right] = left

        kinds = dict(SANSKRIT_KINDS)
        for symbol in self.partner:
            kinds.setdefault(symbol, 'paired')
        self.tokenizer = Tokenizer(kinds)

    def substitute(self, symbol: str) -> str:
        return self.partner.get(symbol, symbol)

    def tokens(self, text: Union[str, Sequence[str]]) -> List[Token]:
        if isinstance(text, str):
            return self.tokenizer.tokenize(text)
        known = self.tokenizer.kinds
        return [
            Token(symbol, SPACE if symbol.isspace() else known.get(symbol, UNKNOWN), index)
            for index, symbol in enumerate(text, start=1)
        ]


DEFAULT_CIPHER = ReciprocalCipher()


def mula_apply(text: Union[str, Sequence[str]],
               cipher: ReciprocalCipher = DEFAULT_CIPHER,
               strict: bool = False) -> List[str]:
    """
    Swap every paired token with its partner

    Args:
        text: String (tokenized by longest match) or token list
        cipher: The pairing
        strict: Raise on tokens outside the cipher's alphabet instead of
            passing them through

    Returns:
        Token list of the same length; applying twice restores the input
    """
    result = []
    for token in cipher.tokens(text):
        if token.kind == UNKNOWN and strict:
            raise UnknownTokenError(
                f"unknown token '{token.symbol}' at token {token.position}", token.position
            )
        result.append(cipher.substitute(token.symbol))
    logger.debug("mula applied", tokens=len(result))
    return result
