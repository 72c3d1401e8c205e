import pytest

from src.algebra.burau import burau_image
from src.algebra.laurent import INTEGERS, CoeffRing
from src.braids.braid import BraidWord, exponent_sum, forget_strand, forget_strands
from src.braids.handles import is_trivial_word
from src.errors import CertificateError
from src.kernel.brunnian import brunnian_report, nontriviality_witness, verify_kernel
from src.kernel.examples import (alpha_base, alpha_k, alpha_prime_closed_form,
                                 cooper_long_alpha, cooper_long_alpha_prime,
                                 default_examples, example_words, named_example,
                                 named_word)

ALPHA = cooper_long_alpha().word
ALPHA_PRIME = cooper_long_alpha_prime()


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_alpha_k_in_kernel_mod_2(k):
    example = alpha_k(k)
    assert example.modulus == 2
    assert example.in_kernel()
    assert verify_kernel(example.word, 2)
    assert exponent_sum(example.word) == 0


def test_alpha_k_shape():
    assert len(alpha_k(1).word) == 24
    assert alpha_base(3).letters == (-1, 2, 2, 2, 1, 3, -2, -2, -2, -3)
    with pytest.raises(ValueError):
        alpha_k(0)


def test_alpha_in_kernel_mod_3():
    assert len(ALPHA) == 44
    assert cooper_long_alpha().in_kernel()
    assert verify_kernel(ALPHA, 3)


def test_verify_kernel_negative_cases():
    assert not verify_kernel(alpha_k(1).word, 3)
    for modulus in (0, 2, 3, 7):
        assert verify_kernel(BraidWord(4), modulus)
        assert verify_kernel(BraidWord(3), modulus)


def test_alpha_prime():
    assert exponent_sum(ALPHA_PRIME) == 0
    assert is_trivial_word(alpha_prime_closed_form() * ALPHA_PRIME.inverse())
    assert not is_trivial_word(ALPHA_PRIME)
    assert not burau_image(ALPHA_PRIME, INTEGERS).is_identity()
    for modulus in (2, 3):
        assert not burau_image(ALPHA_PRIME, CoeffRing(modulus)).is_identity()


def test_forgetting_fourth_strand_of_alpha():
    forgotten = forget_strand(ALPHA, 4)
    assert forgotten.strands == 3
    assert is_trivial_word(forgotten * ALPHA_PRIME.inverse())


def test_alpha_1_is_not_brunnian():
    report = brunnian_report(alpha_k(1).word, pairs=[(2, 4)])
    assert not report.brunnian
    pair, = report.pairs
    assert pair.strands == (2, 4)
    assert not pair.trivial
    assert exponent_sum(pair.word) == 4
    assert pair.witness == "exponent sum 4"
    assert "brunnian: no" in report.render()


def test_alpha_is_not_brunnian():
    report = brunnian_report(ALPHA)
    assert not report.brunnian
    fourth = report.deletions[3]
    assert fourth.strands == (4,)
    assert not fourth.trivial
    assert fourth.witness == "Burau image over Z is not I"


def test_identity_is_brunnian():
    report = brunnian_report(BraidWord(4))
    assert report.brunnian
    assert all(d.trivial and d.witness is None for d in report.deletions)
    assert report.to_dict()["brunnian"] is True
    with pytest.raises(ValueError):
        brunnian_report(BraidWord(2, (1,)))


def test_witnesses():
    assert nontriviality_witness(BraidWord(3, (1, 1))) == "exponent sum 2"
    assert nontriviality_witness(BraidWord(3, (1, -2))) == "Burau image over Z is not I"
    assert nontriviality_witness(BraidWord(3, (1, -1))) is None
    assert nontriviality_witness(BraidWord(2, (1, -1))) is None


def test_named_words():
    assert named_word("alpha_2") == alpha_k(2).word
    assert named_word("alpha_-1") == alpha_k(-1).word
    assert named_word("alpha") == ALPHA
    assert named_word("alpha_prime") == ALPHA_PRIME
    assert named_example("alpha").modulus == 3
    with pytest.raises(ValueError):
        named_word("beta")
    with pytest.raises(ValueError):
        named_example("alpha_prime")


def test_example_listing():
    assert [example.name for example in default_examples()] == [
        "alpha_1", "alpha_2", "alpha_3", "alpha_4", "alpha"]
    assert set(example_words()) == {"alpha_1", "alpha_2", "alpha_3", "alpha_4", "alpha", "alpha_prime"}


def test_forget_pairs_match_sequential_forgets():
    word = alpha_k(2).word
    assert forget_strands(word, [2, 4]) == forget_strand(forget_strand(word, 2), 3)
    assert forget_strands(word, [4, 2]) == forget_strand(forget_strand(word, 4), 2)


def test_inconsistent_oracles_raise(monkeypatch):
    from src.kernel import brunnian
    monkeypatch.setattr(brunnian, "is_trivial_word", lambda word: True)
    with pytest.raises(CertificateError):
        brunnian_report(alpha_k(1).word, pairs=[(2, 4)])
