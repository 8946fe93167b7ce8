"""
Substitution codes: Aryabhata's numeral code, Katapayadi and Muladeviya
"""

from kuttaka_kit.codes.aryabhata import (
    aryabhata_decode, aryabhata_encode, aryabhata_layout, aryabhata_syllables, parse_syllables
)
from kuttaka_kit.codes.katapayadi import (
    ENGLISH_TABLE, SANSKRIT_TABLE, TABLES, katapayadi_decode, katapayadi_encode
)
from kuttaka_kit.codes.mula import DEFAULT_CIPHER, ReciprocalCipher, mula_apply
from kuttaka_kit.codes.tokens import render, to_iast, tokenize

__all__ = [
    'aryabhata_decode', 'aryabhata_encode', 'aryabhata_layout', 'aryabhata_syllables',
    'parse_syllables', 'ENGLISH_TABLE', 'SANSKRIT_TABLE', 'TABLES', 'katapayadi_decode',
    'katapayadi_encode', 'DEFAULT_CIPHER', 'ReciprocalCipher', 'mula_apply', 'render',
    'to_iast', 'tokenize',
]
