"""
Ping-pong certificates for the 3- and 4-strand Burau representations over Z/pZ.

Every certifier takes a normal form, assembles the braid it stands for,
records re-checkable evidence and returns a validated Certificate.
"""

import logging
from dataclasses import dataclass, field
from typing import List

from ..algebra.burau import RowVector, act_row, burau_image
from ..algebra.laurent import CoeffRing, minus_t_power
from ..braids.b2 import (B2Normal, B2Word, MoveSequence, b2_conjugate_to_yx,
                         b2_expand, b2_normalize, b2_segment)
from ..braids.braid import BraidWord
from ..braids.handles import is_trivial_word
from ..errors import CertificateError
from .certificate import Certificate, Verdict, build
from .evidence import (ActionEvidence, ConjugacyEvidence, DeterminantEvidence,
                       DistinctEvidence, EntryEvidence, EquationEvidence,
                       Evidence, ExponentSumEvidence, ImageEvidence,
                       MembershipEvidence, TrivialityEvidence)
from .regions import Region, region_member

logger = logging.getLogger(__name__)

PERIODIC_VARIANTS = ("delta", "gamma")
MOVES = ("x", "y", "xy", "yx", "X", "Y")

_STATE_REGION = {"X": Region.VX, "Y": Region.VY}


@dataclass(frozen=True)
class PeriodicForm:
    """(sigma_{n-1} ... sigma_1)^power for delta, (sigma_{n-1} ... sigma_1 sigma_1)^power for gamma."""

    strands: int
    variant: str
    power: int

    def __post_init__(self):
        if self.strands not in (3, 4):
            raise ValueError(f"periodic forms are provided for 3 and 4 strands, got {self.strands}")
        if self.variant not in PERIODIC_VARIANTS:
            raise ValueError(f"periodic variant must be delta or gamma, got {self.variant!r}")

    def base(self) -> BraidWord:
        letters = tuple(range(self.strands - 1, 0, -1))
        if self.variant == "gamma":
            letters += (1,)
        return BraidWord(self.strands, letters)

    def to_braid(self) -> BraidWord:
        return self.base().power(self.power)

    def exponent(self) -> int:
        return self.power * len(self.base())


@dataclass(frozen=True)
class ReducibleB3:
    """Delta_3^{2m} sigma_1^k (sigma_2 sigma_1^2 sigma_2)^l"""

    m: int
    k: int
    l: int

    def to_braid(self) -> BraidWord:
        return (BraidWord.delta(3).power(2 * self.m)
                * BraidWord(3, (1,)).power(self.k)
                * BraidWord(3, (2, 1, 1, 2)).power(self.l))

    def rewritten(self) -> BraidWord:
        """Delta_3^{2(l+m)} sigma_1^{k-2l}"""
        return BraidWord.delta(3).power(2 * (self.l + self.m)) * BraidWord(3, (1,)).power(self.k - 2 * self.l)


@dataclass(frozen=True)
class PseudoAnosovB3:
    """P(sigma_1^-1, sigma_2) Delta_3^{2k}, P nonempty and starting with sigma_2."""

    word: BraidWord
    k: int = 0

    def __post_init__(self):
        if self.word.strands != 3:
            raise ValueError(f"pseudo-Anosov form needs a 3-braid, got {self.word.strands} strands")
        if not self.word.letters or self.word.letters[0] != 2:
            raise ValueError(f"pseudo-Anosov word must start with sigma_2, got [{self.word}]")
        bad = [letter for letter in self.word.letters if letter not in (-1, 2)]
        if bad:
            raise ValueError(f"pseudo-Anosov word may use only -1 and 2, found {bad[0]}")

    def to_braid(self) -> BraidWord:
        return self.word * BraidWord.delta(3).power(2 * self.k)


@dataclass(frozen=True)
class NormalFormB4a:
    """Delta_4^{2l} (sigma_3 sigma_2 sigma_1^2 sigma_2 sigma_3)^k W(sigma_1, sigma_2)"""

    k: int
    l: int
    tail: BraidWord = field(default_factory=lambda: BraidWord(4))

    def __post_init__(self):
        if self.tail.max_index() > 2:
            raise ValueError(f"curve-(a) tail may use only sigma_1 and sigma_2, got [{self.tail}]")
        if self.tail.strands != 4:
            object.__setattr__(self, "tail", self.tail.embed(4))

    def to_braid(self) -> BraidWord:
        return (BraidWord.delta(4).power(2 * self.l)
                * BraidWord(4, (3, 2, 1, 1, 2, 3)).power(self.k)
                * self.tail)

    def residual(self) -> BraidWord:
        """(sigma_1 sigma_2 sigma_1)^{-2k} W as a 3-braid; equal to the braid when k + l = 0."""
        return BraidWord.delta(3).power(-2 * self.k) * BraidWord(3, self.tail.letters)


@dataclass(frozen=True)
class NormalFormB4b:
    """sigma_1^k W(x, y)"""

    k: int
    tail: B2Word = field(default_factory=B2Word)

    def to_braid(self) -> BraidWord:
        return BraidWord(4, (1,)).power(self.k) * b2_expand(self.tail)


def action_table(v: RowVector, move: str) -> RowVector:
    """
    Closed-form action of the six automaton moves on (f, g, h).

    ``X`` and ``Y`` stand for x^-1 and y^-1.
    """
    if len(v) != 3:
        raise ValueError(f"move actions apply to 3-vectors, got {len(v)}")
    f, g, h = v
    ring = v.ring
    t = ring.t()
    one = ring.one()
    if move == "x":
        return RowVector((t * f + (t ** 2 - t) * g + (one - t) * h, t ** 3 * g + (one - t ** 2) * h, h))
    if move == "y":
        return RowVector((f, g, t * g - t * h))
    if move == "xy":
        return RowVector((t * f + (t ** 2 - t) * g + (one - t) * h,
                          t ** 3 * g + (one - t ** 2) * h,
                          t ** 4 * g - t ** 3 * h))
    if move == "yx":
        return RowVector((t * f + (t ** 2 - t) * h, t * g + (t ** 3 - t) * h, t * g - t * h))
    if move == "X":
        return RowVector((t ** -1 * f + (t ** -3 - t ** -2) * g + (t ** -2 - t ** -3) * h,
                          t ** -3 * g + (t ** -1 - t ** -3) * h,
                          h))
    if move == "Y":
        return RowVector((f, g, g - t ** -1 * h))
    raise ValueError(f"unknown move {move!r}; expected one of {', '.join(MOVES)}")


def central_twist_holds(strands: int, ring: CoeffRing) -> bool:
    """rho_n(Delta_n^2) = t^n * I."""
    image = burau_image(BraidWord.delta(strands).power(2), ring)
    scalar = ring.t(strands)
    size = strands - 1
    return all(image[i, j] == (scalar if i == j else ring.zero())
               for i in range(size) for j in range(size))


def certify_periodic(strands: int, variant: str, power: int, modulus: int) -> Certificate:
    """
    Periodic braids: det rho = (-t)^e with e = power*(n-1) or power*n.

    Args:
        strands: 3 or 4
        variant: ``delta`` or ``gamma``
        power: exponent k
        modulus: p (0 for the integers)

    Returns:
        Certificate: TRIVIAL_BRAID for power 0, else NONTRIVIAL_IMAGE
    """
    form = PeriodicForm(strands, variant, power)
    ring = CoeffRing(modulus)
    word = form.to_braid()
    params = (("n", strands), ("variant", variant), ("k", power))
    if power == 0:
        return build("periodic", ring, Verdict.TRIVIAL_BRAID, word, params,
                     [EquationEvidence(((1, "k"),), 0), TrivialityEvidence(word, True)])
    exponent = form.exponent()
    determinant = burau_image(word, ring).determinant()
    evidence = [
        ExponentSumEvidence(word, exponent),
        DeterminantEvidence(word, determinant, exponent),
    ]
    return build("periodic", ring, Verdict.NONTRIVIAL_IMAGE, word, params, evidence,
                 notes=[f"det = (-t)^{exponent} and {exponent} != 0, so the image is not I"])


def certify_b3(form, modulus: int) -> Certificate:
    """Dispatch on the three 3-braid normal forms."""
    if isinstance(form, PeriodicForm):
        if form.strands != 3:
            raise ValueError("certify_b3 takes 3-strand periodic forms")
        return certify_periodic(3, form.variant, form.power, modulus)
    if isinstance(form, ReducibleB3):
        return _certify_b3_reducible(form, CoeffRing(modulus))
    if isinstance(form, PseudoAnosovB3):
        return _certify_b3_pseudo_anosov(form, CoeffRing(modulus))
    raise ValueError(f"not a 3-braid normal form: {form!r}")


def _certify_b3_reducible(form: ReducibleB3, ring: CoeffRing) -> Certificate:
    word = form.to_braid()
    rewritten = form.rewritten()
    params = (("m", form.m), ("k", form.k), ("l", form.l))
    evidence: List[Evidence] = [
        ConjugacyEvidence(word, BraidWord(3), rewritten),
        EntryEvidence(rewritten, 0, 1, ring.zero()),
    ]
    twist, corner = form.l + form.m, form.k - 2 * form.l
    if twist == 0 and corner == 0:
        evidence += [
            EquationEvidence(((1, "l"), (1, "m")), 0),
            EquationEvidence(((1, "k"), (-2, "l")), 0),
            ImageEvidence(word, True),
            TrivialityEvidence(word, True),
        ]
        return build("b3-reducible", ring, Verdict.TRIVIAL_BRAID, word, params, evidence)

    scale = ring.t(3 * twist)
    evidence.append(EntryEvidence(rewritten, 1, 1, scale))
    evidence.append(EntryEvidence(rewritten, 0, 0, scale * minus_t_power(ring, corner)))
    if twist != 0:
        note = f"entry (1,1) is t^{3 * twist} != 1"
    else:
        note = f"entry (0,0) is (-t)^{corner} != 1"
    return build("b3-reducible", ring, Verdict.NONTRIVIAL_IMAGE, word, params, evidence, notes=[note])


def _certify_b3_pseudo_anosov(form: PseudoAnosovB3, ring: CoeffRing) -> Certificate:
    word = form.to_braid()
    start = RowVector.of(ring, 1, 0)
    end = act_row(start, word)
    if not region_member(Region.V0, end):
        logger.error("(1,0) * %s = %s left V_0", word, end)
        raise CertificateError(f"(1, 0) * [{word}] = {end} is not in V_0", dump=str(word))
    evidence = [
        MembershipEvidence(Region.V0, start, False),
        ActionEvidence(start, word, end),
        MembershipEvidence(Region.V0, end, True),
        DistinctEvidence(start, end),
    ]
    params = (("P", " ".join(str(letter) for letter in form.word.letters)), ("k", form.k))
    return build("b3-pa", ring, Verdict.NONTRIVIAL_IMAGE, word, params, evidence)


def certify_reducible_a(form: NormalFormB4a, modulus: int) -> Certificate:
    """
    Braids fixing the round curve around strands 1-3.

    (0,0,1) * beta has third coordinate t^{4(k+l)}; when k + l = 0 the braid is a
    3-braid and Burau(3) over Z/pZ decides it.
    """
    ring = CoeffRing(modulus)
    word = form.to_braid()
    params = (("k", form.k), ("l", form.l), ("tail", str(form.tail) or "-"))
    start = RowVector.basis(ring, 3, 3)
    end = act_row(start, word)
    if form.k + form.l != 0:
        if end[2] != ring.t(4 * (form.k + form.l)):
            logger.error("third coordinate of (0,0,1) * %s is %s", word, end[2])
            raise CertificateError(f"unexpected third coordinate {end[2]}", dump=str(word))
        evidence = [ActionEvidence(start, word, end), DistinctEvidence(start, end)]
        return build("b4a-twist", ring, Verdict.NONTRIVIAL_IMAGE, word, params, evidence,
                     notes=[f"third coordinate is t^{4 * (form.k + form.l)}"])

    residual = form.residual()
    evidence: List[Evidence] = [
        EquationEvidence(((1, "k"), (1, "l")), 0),
        ConjugacyEvidence(word, BraidWord(4), residual.embed(4)),
    ]
    identity = burau_image(residual, ring).is_identity()
    trivial = is_trivial_word(residual)
    if identity and not trivial:
        logger.error("Burau(3) over %s sends nontrivial %s to I", ring, residual)
        raise CertificateError(f"residual 3-braid [{residual}] has identity image but is nontrivial",
                               dump=str(residual))
    evidence.append(ImageEvidence(residual, identity))
    evidence.append(TrivialityEvidence(residual, trivial))
    verdict = Verdict.TRIVIAL_BRAID if trivial else Verdict.NONTRIVIAL_IMAGE
    return build("b4a-residual", ring, verdict, word, params, evidence)


def certify_reducible_b(form: NormalFormB4b, modulus: int) -> Certificate:
    """
    Braids fixing the curve around strands 2-4: sigma_1^k W(x, y).

    Args:
        form: k and the x,y-word W
        modulus: p (0 for the integers)

    Returns:
        Certificate: for the braid itself; when the positive part had to be
        rotated the evidence is about the conjugate and the conjugator is recorded

    Raises:
        CertificateError: if the region chain breaks
    """
    ring = CoeffRing(modulus)
    word = form.to_braid()
    normal = b2_normalize(form.tail)
    conjugator = B2Word()
    if "x" in normal.positive and "y" in normal.positive:
        normal, conjugator = b2_conjugate_to_yx(normal)

    m, positive = normal.delta_exp, normal.positive
    subject = _b4b_braid(m, form.k, B2Word(positive))
    evidence: List[Evidence] = [ConjugacyEvidence(word, b2_expand(conjugator), subject)]
    params = [("k", form.k), ("W", form.tail.letters or "-"), ("m", m), ("P", positive or "-")]
    recorded = b2_expand(conjugator) if conjugator.letters else None

    if "y" not in positive:
        return _certify_b4b_x(form, ring, word, m, len(positive), params, evidence, recorded)
    if "x" not in positive:
        return _certify_b4b_y(form, ring, word, subject, m, len(positive), params, evidence, recorded)
    return _certify_b4b_mixed(form, ring, word, subject, normal, params, evidence, recorded)


def _b4b_braid(m: int, k: int, positive: B2Word) -> BraidWord:
    """Delta_4^{2m} sigma_1^{k-2m} P"""
    return (BraidWord.delta(4).power(2 * m)
            * BraidWord(4, (1,)).power(k - 2 * m)
            * b2_expand(positive))


def _certify_b4b_x(form, ring, word, m, l, params, evidence, conjugator) -> Certificate:
    tail = BraidWord(4, (1,)).power(form.k - 2 * m) * BraidWord(4, (2, 1, 1, 2)).power(l)
    routed = certify_reducible_a(NormalFormB4a(0, m, tail), ring.modulus)
    return build("b4b-x", ring, routed.verdict, word,
                 params + [(f"a_{name}", value) for name, value in routed.params],
                 evidence + [_prefixed(item, "a_") for item in routed.evidence],
                 notes=[f"P = x^{l}: handled as curve (a) with k = 0, l = {m}"] + list(routed.notes),
                 conjugator=conjugator)


def _certify_b4b_y(form, ring, word, subject, m, l, params, evidence, conjugator) -> Certificate:
    exponent = 12 * m + (form.k - 2 * m) + l
    third = RowVector.basis(ring, 3, 3)
    first = RowVector.basis(ring, 3, 1)
    third_end = act_row(third, subject)
    first_end = act_row(first, subject)
    evidence = evidence + [
        ActionEvidence(third, subject, third_end),
        ActionEvidence(first, subject, first_end),
        ExponentSumEvidence(subject, exponent),
    ]
    if third_end != third:
        evidence.append(DistinctEvidence(third, third_end))
        note = f"third coordinate is (-t)^{4 * m + l}"
    elif first_end != first:
        evidence.append(DistinctEvidence(first, first_end))
        note = f"first coordinate is (-t)^{2 * m + form.k}"
    elif exponent != 0:
        evidence.append(DeterminantEvidence(subject, minus_t_power(ring, exponent), exponent))
        note = f"exponent sum {exponent} != 0"
    else:
        logger.error("no witness for y-power case m=%d k=%d l=%d", m, form.k, l)
        raise CertificateError("P = y^l with l >= 1 produced no nontriviality witness",
                               dump=str(word))
    return build("b4b-y", ring, Verdict.NONTRIVIAL_IMAGE, word, params, evidence,
                 notes=[note], conjugator=conjugator)


def _certify_b4b_mixed(form, ring, word, subject, normal: B2Normal, params, evidence,
                       conjugator) -> Certificate:
    path = b2_segment(normal.positive)
    m1 = normal.delta_exp + path.delta_exp
    k1 = form.k - 2 * m1
    chain = MoveSequence(m1, k1, path.moves)
    segmented = chain.to_braid()
    evidence = evidence + [ConjugacyEvidence(subject, BraidWord(4), segmented)]
    params = params + [("m1", m1), ("k1", k1),
                       ("moves", " ".join(move.render() for move in path.moves))]

    start = RowVector.basis(ring, 3, 3)
    dump: List[str] = []

    def step(vector: RowVector, piece: BraidWord, region: Region) -> RowVector:
        result = act_row(vector, piece)
        evidence.append(ActionEvidence(vector, piece, result))
        dump.append(f"{vector} * [{piece}] = {result}")
        if not region_member(region, result):
            logger.error("region chain broken: %s not in %s", result, region.value)
            raise CertificateError(f"{result} is not in {region.value}", dump="\n".join(dump))
        evidence.append(MembershipEvidence(region, result, True))
        return result

    evidence.append(MembershipEvidence(Region.VY, start, True))
    vector = step(start, BraidWord.delta(4).power(2 * m1), Region.VY)
    vector = step(vector, BraidWord(4, (1,)).power(k1), Region.VY)
    for move in path.moves:
        vector = step(vector, b2_expand(move.to_word()), _STATE_REGION[move.after])
    # the last move ends at state X
    evidence.append(DistinctEvidence(vector, start))
    evidence.append(MembershipEvidence(Region.VX, vector, True))
    return build("b4b-mixed", ring, Verdict.NONTRIVIAL_IMAGE, word, params, evidence,
                 notes=["V_X and V_Y are disjoint and (0, 0, 1) is in V_Y"],
                 conjugator=conjugator)


def _prefixed(item: Evidence, prefix: str) -> Evidence:
    if isinstance(item, EquationEvidence):
        return EquationEvidence(tuple((c, prefix + name) for c, name in item.terms), item.value)
    return item
