from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from src.algebra.burau import burau_image
from src.algebra.laurent import INTEGERS
from src.braids.b2 import (FORBIDDEN, TRANSITIONS, B2Normal, B2Word, Move, MoveSequence,
                           b2_conjugate_to_yx, b2_expand, b2_normalize, b2_rotate_to_yx,
                           b2_segment, central_word)
from src.braids.braid import BraidWord
from src.errors import RotationError


def image(word):
    if isinstance(word, B2Word):
        word = b2_expand(word)
    return burau_image(word, INTEGERS)


def segmentable_words(max_length):
    for length in range(2, max_length + 1):
        for middle in product("xy", repeat=length - 2):
            word = "y" + "".join(middle) + "x"
            if not any(f in word for f in FORBIDDEN):
                yield word


def test_expand():
    assert b2_expand(B2Word("x")).letters == (2, 1, 1, 2)
    assert b2_expand(B2Word("Y")).letters == (-3,)
    assert b2_expand(B2Word.parse("x Y")).letters == (2, 1, 1, 2, -3)
    assert image(B2Word("xyxy")) == image(B2Word("yxyx"))
    with pytest.raises(ValueError):
        B2Word("xz")


def test_central_relations():
    sigma1 = BraidWord(4, (1,))
    assert image(b2_expand(B2Word("xyxy")) * sigma1.power(2)) == image(BraidWord.delta(4).power(2))
    for letter in "xy":
        piece = b2_expand(B2Word(letter))
        assert image(sigma1 * piece) == image(piece * sigma1)


def test_normalize_examples():
    assert b2_normalize(B2Word("X")) == B2Normal(-1, "yxy")
    assert b2_normalize(B2Word("xyxy")) == B2Normal(1, "")
    assert b2_normalize(B2Word("yxyxx")) == B2Normal(1, "x")
    assert b2_normalize(B2Word("xY")) == B2Normal(-1, "xxyx")
    assert central_word(-2).letters == "YXYXYXYX"


def test_normal_form_rejects_forbidden_factor():
    with pytest.raises(ValueError):
        B2Normal(0, "xxyxy")
    with pytest.raises(ValueError):
        B2Normal(0, "xY")


def test_rotation_examples():
    assert b2_rotate_to_yx("xy") == ("yx", B2Word("x"))
    assert b2_rotate_to_yx("yx") == ("yx", B2Word(""))
    assert b2_rotate_to_yx("xxy") == ("yxx", B2Word("xx"))
    with pytest.raises(ValueError):
        b2_rotate_to_yx("xx")
    with pytest.raises(RotationError):
        b2_rotate_to_yx("xyxxyyxy")


def test_conjugation_recovers_from_collapsing_rotation():
    start = B2Normal(0, "xyxxyyxy")
    normal, conjugator = b2_conjugate_to_yx(start)
    assert normal == B2Normal(1, "yyxx")
    assert conjugator == B2Word("xyxx")
    moved = conjugator.inverse() * start.to_word() * conjugator
    assert image(moved) == image(normal.to_word())


def test_segment_examples():
    assert b2_segment("yx").moves == (Move("yx", "Y", "X"),)
    assert b2_segment("yx").delta_exp == 0
    assert b2_segment("yxx").moves == (Move("yx", "Y", "X"), Move("x", "X", "X"))
    five = b2_segment("yxxyx")
    assert five.moves == (Move("yx", "Y", "X"), Move("Y", "X", "X"))
    assert five.delta_exp == 1
    six = b2_segment("yxxxyx")
    assert six.moves == (Move("yx", "Y", "X"), Move("x", "X", "X"), Move("Y", "X", "X"))
    assert six.delta_exp == 1
    with pytest.raises(ValueError):
        b2_segment("xy")


def test_move_rendering():
    assert Move("X", "Y", "Y").render() == "x^-1: Y->Y"
    assert Move("xy", "X", "Y").render() == "xy: X->Y"


def test_move_sequence_checks_transitions():
    with pytest.raises(ValueError):
        MoveSequence(0, 0, (Move("x", "Y", "Y"),))
    with pytest.raises(ValueError):
        MoveSequence(0, 0, (Move("yx", "Y", "X"), Move("y", "Y", "Y")))


def test_move_sequence_braid():
    path = b2_segment("yxxyx")
    braid = MoveSequence(path.delta_exp, -2 * path.delta_exp, path.moves).to_braid()
    assert image(braid) == image(B2Word("yxxyx"))


def test_exhaustive_segmentation():
    """Every reduced positive y...x word up to length 12 parses, and the parse is sound."""
    count = 0
    for word in segmentable_words(12):
        path = b2_segment(word)
        assert path.moves[0].before == "Y"
        assert path.moves[-1].after == "X"
        for move in path.moves:
            assert TRANSITIONS[(move.before, move.label)] == move.after
        rebuilt = central_word(path.delta_exp) * path.moves_word()
        assert image(rebuilt) == image(B2Word(word))
        count += 1
    assert count > 100


@given(st.text(alphabet="xyXY", max_size=12))
def test_normalization_is_sound(letters):
    word = B2Word(letters)
    normal = b2_normalize(word)
    assert image(word) == image(central_word(normal.delta_exp)) @ image(B2Word(normal.positive))
    assert image(normal.to_word()) == image(word)
