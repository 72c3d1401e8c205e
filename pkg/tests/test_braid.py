import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.braids.braid import (BraidWord, concat, conjugate, exponent_sum, forget_strand,
                              forget_strand_tracked, forget_strands, format_word_lines,
                              invert, parse_braid, parse_word_lines, read_word_file)
from src.braids.handles import is_trivial_word
from src.kernel.brunnian import verify_kernel
from src.kernel.examples import alpha_k
from strategies import words

DELTA4 = "1 2 1 3 2 1"


def test_parse_examples():
    assert parse_braid("1 -1", 4).letters == (1, -1)
    assert parse_braid(DELTA4, 4) == BraidWord.delta(4)
    assert parse_braid("1,-2, 3", 4).letters == (1, -2, 3)
    assert BraidWord.delta(3).letters == (1, 2, 1)


@pytest.mark.parametrize("text", ["3", "0", "1 a", "-5"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_braid(text, 3)


def test_exponent_sums():
    assert exponent_sum(BraidWord.delta(4)) == 6
    assert exponent_sum(BraidWord.delta(3).power(2) * BraidWord(3, (-1, -1))) == 4
    assert exponent_sum(alpha_k(3).word) == 0


def test_group_operations():
    assert invert(parse_braid("1 2", 4)) == parse_braid("-2 -1", 4)
    assert concat(parse_braid("1", 4), parse_braid("-1", 4)).free_reduce().letters == ()
    assert conjugate(parse_braid("2", 4), parse_braid("1", 4)) == parse_braid("1 2 -1", 4)
    with pytest.raises(ValueError):
        parse_braid("1", 3) * parse_braid("1", 4)


def test_free_reduce_is_not_implicit():
    word = parse_braid("1 2 -2 -1 3", 4)
    assert len(word) == 5
    assert word.free_reduce().letters == (3,)


def test_forget_strand_examples():
    assert forget_strand(BraidWord(4, (3,)), 4) == BraidWord(3)
    assert forget_strand(BraidWord(4, (1,)), 3) == BraidWord(3, (1,))
    assert forget_strand(BraidWord(4, (3,)), 1) == BraidWord(3, (2,))


@pytest.mark.parametrize("k", [1, 2, 3, 4, -1])
def test_forgetting_strands_two_and_four_of_alpha_k(k):
    assert verify_kernel(alpha_k(k).word, 2)
    word = forget_strand(forget_strand(alpha_k(k).word, 2), 3)
    assert word == forget_strands(alpha_k(k).word, [2, 4])
    assert word.strands == 2
    assert exponent_sum(word) == 4 * k
    assert is_trivial_word(word * BraidWord(2, (1,)).power(-4 * k))


def test_forget_strand_range():
    with pytest.raises(ValueError):
        forget_strand(BraidWord(4, (1,)), 5)
    with pytest.raises(ValueError):
        forget_strand(BraidWord(2, (1,)), 1)
    with pytest.raises(ValueError):
        forget_strands(BraidWord(4, (1,)), [2, 2])


def test_word_file_round_trip(tmp_path):
    words_in = [parse_braid("1 -2 3", 4), BraidWord(3), BraidWord.delta(3)]
    path = tmp_path / "words.txt"
    path.write_text(format_word_lines(words_in, ["three words"]))
    assert read_word_file(path) == words_in


def test_word_file_errors():
    assert parse_word_lines(["# only a comment", "", "3: 1 2  # trailing"]) == [BraidWord(3, (1, 2))]
    with pytest.raises(ValueError, match="line 1"):
        parse_word_lines(["1 2 3"])
    with pytest.raises(ValueError, match="line 2"):
        parse_word_lines(["4: 1", "3: 3"])


@given(words(), words())
def test_exponent_sum_is_a_homomorphism(a, b):
    if a.strands == b.strands:
        assert exponent_sum(a * b) == exponent_sum(a) + exponent_sum(b)
    assert exponent_sum(invert(a)) == -exponent_sum(a)


def check_forget_threads_through_concatenation(data):
    strands = data.draw(st.sampled_from([3, 4]))
    a = data.draw(words(strands, max_size=10))
    b = data.draw(words(strands, max_size=10))
    s = data.draw(st.integers(1, strands))
    first, position = forget_strand_tracked(a, s)
    second, _ = forget_strand_tracked(b, position)
    assert forget_strand(a * b, s) == first * second


@given(st.data())
def test_forget_threads_through_concatenation(data):
    check_forget_threads_through_concatenation(data)


@pytest.mark.slow
@settings(max_examples=1000)
@given(st.data())
def test_forget_threads_through_concatenation_full_size(data):
    check_forget_threads_through_concatenation(data)

