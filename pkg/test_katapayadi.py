"""
Tests for the Katapayadi code
"""

from itertools import product

import pytest

from kuttaka_kit.codes.katapayadi import (
    CHOOSERS, ENGLISH_TABLE, SANSKRIT_TABLE, TABLES, katapayadi_decode, katapayadi_encode
)
from kuttaka_kit.errors import EmptyDecodeError, InvalidInputError, UnknownTokenError


@pytest.mark.parametrize('word, digits', [
    ('mule dana', '5380'),
    ('zila hena', '5380'),
    ('kava sira', '1472'),
])
def test_sanskrit_words(word, digits):
    assert katapayadi_decode(word) == digits


def test_english_sentence():
    assert katapayadi_decode('fog base game bin rip bone nod', 'english') == '45155011421113'


def test_english_is_case_insensitive():
    assert katapayadi_decode('Fog', ENGLISH_TABLE) == '45'


def test_sanskrit_is_case_sensitive():
    # T (retroflex) is 1, t (dental) is 6
    assert katapayadi_decode('Ta') == '1'
    assert katapayadi_decode('ta') == '6'


def test_english_encoding_of_45():
    assert katapayadi_encode('45', 'english') == 'fog'


def test_sanskrit_encoding_has_trailing_vowel():
    assert katapayadi_encode('5380') == 'GagajaJa'


def test_every_consonant_has_one_digit():
    for table in TABLES.values():
        symbols = [symbol for row in table.rows for symbol in row]
        assert len(symbols) == len(set(symbols))
        assert not set(symbols) & table.free_symbols


def test_roundtrip_all_four_digit_strings():
    for table, chooser in product(TABLES, CHOOSERS):
        for number in range(10 ** 4):
            digits = f"{number:04d}"
            word = katapayadi_encode(digits, table, chooser)
            assert katapayadi_decode(word, table) == digits, (table, chooser, digits)


def test_cycle_chooser_walks_the_candidates():
    assert katapayadi_encode('111', SANSKRIT_TABLE, 'cycle') == 'kaTapa'


def test_custom_filler_vowel():
    assert katapayadi_encode('12', 'sanskrit', vowel='i') == 'kikhi'
    with pytest.raises(InvalidInputError):
        katapayadi_encode('12', 'sanskrit', vowel='k')


def test_filler_that_fuses_with_consonant_is_rejected():
    with pytest.raises(InvalidInputError):
        katapayadi_encode('33', 'sanskrit', chooser='last', vowel='R')
    assert katapayadi_encode('33', 'sanskrit', vowel='R') == 'gRgR'
    assert katapayadi_decode('gRgR') == '33'


@pytest.mark.parametrize('vowel', sorted(SANSKRIT_TABLE.free_symbols))
@pytest.mark.parametrize('chooser', sorted(CHOOSERS))
def test_every_filler_either_reads_back_or_is_rejected(vowel, chooser):
    for digit in '0123456789':
        digits = digit * 3
        try:
            word = katapayadi_encode(digits, 'sanskrit', chooser, vowel)
        except InvalidInputError:
            continue
        assert katapayadi_decode(word) == digits


def test_vowels_only_word_has_no_digits():
    with pytest.raises(EmptyDecodeError):
        katapayadi_decode('aeiou', 'english')


def test_strict_decode_rejects_foreign_tokens():
    assert katapayadi_decode('fog!', 'english') == '45'
    with pytest.raises(UnknownTokenError) as excinfo:
        katapayadi_decode('fog!', 'english', strict=True)
    assert excinfo.value.position == 4


@pytest.mark.parametrize('digits', ['', '12a', '١٢'])
def test_encode_rejects_non_digits(digits):
    with pytest.raises(InvalidInputError):
        katapayadi_encode(digits)


def test_unknown_table_and_chooser():
    with pytest.raises(InvalidInputError):
        katapayadi_decode('kava', 'latin')
    with pytest.raises(InvalidInputError):
        katapayadi_encode('12', 'sanskrit', 'random')


def test_chooser_must_pick_a_candidate():
    with pytest.raises(InvalidInputError):
        katapayadi_encode('1', 'sanskrit', lambda digit, position, candidates: 'zz')


def test_single_zero_digit():
    word = katapayadi_encode('0')
    assert word == 'Ja'
    assert katapayadi_decode(word) == '0'
