import pytest

from src.algebra.burau import RowVector
from src.algebra.laurent import CoeffRing
from src.braids.b2 import B2Word
from src.braids.braid import BraidWord, parse_braid
from src.certify.certificate import Certificate, Verdict, build, check_certificate_text
from src.certify.evidence import (ActionEvidence, DistinctEvidence, EquationEvidence,
                                  ExponentSumEvidence, ImageEvidence, MembershipEvidence,
                                  TrivialityEvidence, parse_evidence, parse_word_ref,
                                  render_word)
from src.certify.pingpong import (NormalFormB4a, NormalFormB4b,
                                  PseudoAnosovB3, ReducibleB3, certify_b3,
                                  certify_periodic, certify_reducible_a,
                                  certify_reducible_b)
from src.certify.regions import Region
from src.errors import CertificateError

Z2 = CoeffRing(2)

CERTIFICATES = [
    lambda: certify_periodic(4, "delta", 1, 2),
    lambda: certify_periodic(3, "gamma", -2, 3),
    lambda: certify_periodic(4, "gamma", 0, 5),
    lambda: certify_b3(ReducibleB3(-1, 2, 1), 2),
    lambda: certify_b3(ReducibleB3(0, 1, 0), 2),
    lambda: certify_b3(PseudoAnosovB3(parse_braid("2 -1 -1 2", 3), -1), 3),
    lambda: certify_reducible_a(NormalFormB4a(1, 0), 2),
    lambda: certify_reducible_a(NormalFormB4a(1, -1, parse_braid("1 2", 4)), 3),
    lambda: certify_reducible_b(NormalFormB4b(0, B2Word.parse("x y x y")), 2),
    lambda: certify_reducible_b(NormalFormB4b(2, B2Word("y")), 2),
    lambda: certify_reducible_b(NormalFormB4b(0, B2Word.parse("y x")), 2),
    lambda: certify_reducible_b(NormalFormB4b(-1, B2Word("xxyXy")), 3),
]


def test_render_word():
    assert render_word(parse_braid("1 2", 4)) == "[4: 1 2]"
    assert render_word(BraidWord(4)) == "[4:]"
    assert parse_word_ref("[3: -1 2]") == parse_braid("-1 2", 3)
    assert parse_word_ref("[4:]") == BraidWord(4)


def test_evidence_lines():
    ring = Z2
    act = ActionEvidence(RowVector.of(ring, 0, 0, 1), BraidWord(4, (3,)), RowVector.of(ring, 0, 0, "t"))
    assert act.render() == "act: (0, 0, 1) * [4: 3] = (0, 0, t)"
    assert act.check(ring, {})
    member = MembershipEvidence(Region.VY, RowVector.of(ring, 0, 0, 1), True)
    assert member.render() == "member: (0, 0, 1) ∈ V_Y"
    assert parse_evidence(member.render(), ring) == member
    eq = EquationEvidence(((1, "k"), (-2, "l")), 0)
    assert eq.render() == "eq: k - 2*l = 0"
    assert parse_evidence(eq.render(), ring) == eq
    assert eq.check(ring, {"k": 4, "l": 2})
    assert not eq.check(ring, {"k": 4})
    with pytest.raises(ValueError):
        parse_evidence("guess: 1 = 1", ring)


def test_false_evidence_fails_check():
    ring = Z2
    assert not DistinctEvidence(RowVector.of(ring, 1, 0), RowVector.of(ring, 1, 0)).check(ring, {})
    assert not ExponentSumEvidence(BraidWord(3, (1, 1)), 1).check(ring, {})
    assert not ImageEvidence(BraidWord(3, (1,)), True).check(ring, {})
    assert not TrivialityEvidence(BraidWord(3, (1, -2)), True).check(ring, {})


@pytest.mark.parametrize("make", CERTIFICATES)
def test_serialization_round_trip(make):
    certificate = make()
    text = certificate.serialize()
    assert text.splitlines()[-1] == f"verdict: {certificate.verdict.value}"
    parsed = check_certificate_text(text)
    assert parsed.serialize() == text
    assert parsed.params == certificate.params
    assert parsed.verdict is certificate.verdict
    assert parsed.case == certificate.case


def test_word_params_stay_text():
    word = parse_braid("2", 3)
    certificate = Certificate("b3-pa", 3, Verdict.NONTRIVIAL_IMAGE, word,
                              params=(("P", "2"), ("k", 0), ("a_tail", "1"), ("variant", "delta")))
    parsed = Certificate.parse(certificate.serialize())
    assert parsed.param_map == {"P": "2", "k": 0, "a_tail": "1", "variant": "delta"}


@pytest.mark.parametrize("make", CERTIFICATES)
def test_structured_form(make):
    certificate = make()
    data = certificate.to_dict()
    assert data["verdict"] == certificate.verdict.value
    assert data["word"]["letters"] == list(certificate.word.letters)
    assert len(data["evidence"]) == len(certificate.evidence)


def test_tampered_vector_is_rejected():
    text = certify_reducible_b(NormalFormB4b(0, B2Word.parse("y x")), 2).serialize()
    tampered = text.replace("(t+t^2, t+t^3, t)", "(t+t^2, t+t^3, 1)", 1)
    assert tampered != text
    with pytest.raises(CertificateError) as raised:
        check_certificate_text(tampered)
    assert "verdict:" in raised.value.dump


def test_wrong_verdict_is_rejected():
    text = certify_periodic(4, "delta", 1, 2).serialize()
    with pytest.raises(CertificateError):
        check_certificate_text(text.replace("NONTRIVIAL_IMAGE", "TRIVIAL_BRAID"))


def test_unsound_certificate_is_rejected():
    with pytest.raises(CertificateError):
        build("periodic", Z2, Verdict.NONTRIVIAL_IMAGE, BraidWord(4), (), [])


def test_parse_errors():
    with pytest.raises(ValueError):
        Certificate.parse("case: periodic\nmodulus: 2\n")
    with pytest.raises(ValueError):
        Certificate.parse("case: periodic\nmodulus: 2\nword: [4:]\nverdict: MAYBE\n")
    with pytest.raises(ValueError):
        Certificate.parse("just words\n")


def test_equation_names_resolve_against_params():
    certificate = certify_b3(ReducibleB3(-1, 2, 1), 2)
    equations = [item for item in certificate.evidence if isinstance(item, EquationEvidence)]
    assert {name for item in equations for _, name in item.terms} == {"k", "l", "m"}
    assert certificate.param_map == {"m": -1, "k": 2, "l": 1}
