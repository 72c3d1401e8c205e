"""
Evidence items carried by certificates.

Each item renders to one line ``<kind>: <payload>`` and can be parsed back
and re-checked against the coefficient ring of its certificate.
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple, Type, Union

from ..algebra.burau import RowVector, act_row, burau_image
from ..algebra.laurent import CoeffRing, LaurentPoly, minus_t_power
from ..braids.braid import BraidWord, parse_braid
from ..braids.handles import is_trivial_word
from .regions import Region, region_member

_WORD = r"\[(\d+):([^\]]*)\]"
_VECTOR = r"(\([^)]*\))"

_REGISTRY: Dict[str, Type["Evidence"]] = {}


def render_word(word: BraidWord) -> str:
    return f"[{word.strands}: {word}]".replace(": ]", ":]")


def _word(strands: str, body: str) -> BraidWord:
    return parse_braid(body, int(strands))


def parse_word_ref(text: str) -> BraidWord:
    """Inverse of ``render_word``."""
    strands, body = _match(_WORD, text, "word")
    return _word(strands, body)


def _match(pattern: str, payload: str, kind: str) -> Tuple[str, ...]:
    found = re.fullmatch(pattern, payload.strip())
    if not found:
        raise ValueError(f"malformed {kind} evidence: {payload!r}")
    return found.groups()


class Evidence(ABC):
    kind: str = ""

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        _REGISTRY[cls.kind] = cls

    @abstractmethod
    def check(self, ring: CoeffRing, params: Mapping[str, Union[int, str]]) -> bool:
        """Recompute the claim from scratch."""

    @abstractmethod
    def payload(self) -> str:
        ...

    @classmethod
    @abstractmethod
    def parse_payload(cls, payload: str, ring: CoeffRing) -> "Evidence":
        ...

    def render(self) -> str:
        return f"{self.kind}: {self.payload()}"


def parse_evidence(line: str, ring: CoeffRing) -> Evidence:
    kind, sep, payload = line.partition(":")
    if not sep or kind.strip() not in _REGISTRY:
        raise ValueError(f"unknown evidence line {line!r}")
    return _REGISTRY[kind.strip()].parse_payload(payload, ring)


@dataclass(frozen=True)
class ActionEvidence(Evidence):
    """start * word = result, checked letter by letter and by the matrix product."""

    start: RowVector
    word: BraidWord
    result: RowVector
    kind = "act"

    def check(self, ring, params) -> bool:
        by_letters = act_row(self.start, self.word)
        by_matrix = self.start @ burau_image(self.word, ring)
        return by_letters == self.result and by_matrix == self.result

    def payload(self) -> str:
        return f"{self.start} * {render_word(self.word)} = {self.result}"

    @classmethod
    def parse_payload(cls, payload, ring):
        start, strands, body, result = _match(rf"{_VECTOR} \* {_WORD} = {_VECTOR}", payload, cls.kind)
        return cls(RowVector.parse(start, ring), _word(strands, body), RowVector.parse(result, ring))


@dataclass(frozen=True)
class MembershipEvidence(Evidence):
    region: Region
    vector: RowVector
    member: bool
    kind = "member"

    def check(self, ring, params) -> bool:
        return region_member(self.region, self.vector) == self.member

    def payload(self) -> str:
        return f"{self.vector} {'∈' if self.member else '∉'} {self.region.value}"

    @classmethod
    def parse_payload(cls, payload, ring):
        vector, relation, label = _match(rf"{_VECTOR} (∈|∉) (\S+)", payload, cls.kind)
        return cls(Region.from_label(label), RowVector.parse(vector, ring), relation == "∈")


@dataclass(frozen=True)
class DistinctEvidence(Evidence):
    left: RowVector
    right: RowVector
    kind = "distinct"

    def check(self, ring, params) -> bool:
        return self.left != self.right

    def payload(self) -> str:
        return f"{self.left} ≠ {self.right}"

    @classmethod
    def parse_payload(cls, payload, ring):
        left, right = _match(rf"{_VECTOR} ≠ {_VECTOR}", payload, cls.kind)
        return cls(RowVector.parse(left, ring), RowVector.parse(right, ring))


@dataclass(frozen=True)
class DeterminantEvidence(Evidence):
    """det rho(word) = value = (-t)^exponent."""

    word: BraidWord
    value: LaurentPoly
    exponent: int
    kind = "det"

    def check(self, ring, params) -> bool:
        determinant = burau_image(self.word, ring).determinant()
        return (determinant == self.value
                and self.value == minus_t_power(ring, self.exponent)
                and self.exponent == self.word.exponent_sum())

    def payload(self) -> str:
        return f"{render_word(self.word)} = {self.value} = (-t)^{self.exponent}"

    @classmethod
    def parse_payload(cls, payload, ring):
        strands, body, value, exponent = _match(rf"{_WORD} = (\S+) = \(-t\)\^(-?\d+)", payload, cls.kind)
        return cls(_word(strands, body), LaurentPoly.parse(value, ring), int(exponent))


@dataclass(frozen=True)
class EntryEvidence(Evidence):
    """rho(word)[row][col] = value (0-based positions)."""

    word: BraidWord
    row: int
    col: int
    value: LaurentPoly
    kind = "entry"

    def check(self, ring, params) -> bool:
        return burau_image(self.word, ring)[self.row, self.col] == self.value

    def payload(self) -> str:
        return f"{render_word(self.word)} ({self.row},{self.col}) = {self.value}"

    @classmethod
    def parse_payload(cls, payload, ring):
        strands, body, row, col, value = _match(rf"{_WORD} \((\d+),(\d+)\) = (\S+)", payload, cls.kind)
        return cls(_word(strands, body), int(row), int(col), LaurentPoly.parse(value, ring))


@dataclass(frozen=True)
class ImageEvidence(Evidence):
    word: BraidWord
    identity: bool
    kind = "image"

    def check(self, ring, params) -> bool:
        return burau_image(self.word, ring).is_identity() == self.identity

    def payload(self) -> str:
        return f"{render_word(self.word)} {'=' if self.identity else '≠'} I"

    @classmethod
    def parse_payload(cls, payload, ring):
        strands, body, relation = _match(rf"{_WORD} (=|≠) I", payload, cls.kind)
        return cls(_word(strands, body), relation == "=")


@dataclass(frozen=True)
class TrivialityEvidence(Evidence):
    """Word-problem verdict from handle reduction."""

    word: BraidWord
    trivial: bool
    kind = "trivial"

    def check(self, ring, params) -> bool:
        return is_trivial_word(self.word) == self.trivial

    def payload(self) -> str:
        return f"{render_word(self.word)} {'yes' if self.trivial else 'no'}"

    @classmethod
    def parse_payload(cls, payload, ring):
        strands, body, verdict = _match(rf"{_WORD} (yes|no)", payload, cls.kind)
        return cls(_word(strands, body), verdict == "yes")


@dataclass(frozen=True)
class ExponentSumEvidence(Evidence):
    word: BraidWord
    value: int
    kind = "esum"

    def check(self, ring, params) -> bool:
        return self.word.exponent_sum() == self.value

    def payload(self) -> str:
        return f"{render_word(self.word)} = {self.value}"

    @classmethod
    def parse_payload(cls, payload, ring):
        strands, body, value = _match(rf"{_WORD} = (-?\d+)", payload, cls.kind)
        return cls(_word(strands, body), int(value))


@dataclass(frozen=True)
class ConjugacyEvidence(Evidence):
    """rho(c^-1 * original * c) = rho(conjugate); an empty c states plain equality."""

    original: BraidWord
    conjugator: BraidWord
    conjugate: BraidWord
    kind = "conj"

    def check(self, ring, params) -> bool:
        moved = self.conjugator.inverse() * self.original * self.conjugator
        return burau_image(moved, ring) == burau_image(self.conjugate, ring)

    def payload(self) -> str:
        return (f"{render_word(self.original)} by {render_word(self.conjugator)}"
                f" = {render_word(self.conjugate)}")

    @classmethod
    def parse_payload(cls, payload, ring):
        s1, b1, s2, b2, s3, b3 = _match(rf"{_WORD} by {_WORD} = {_WORD}", payload, cls.kind)
        return cls(_word(s1, b1), _word(s2, b2), _word(s3, b3))


_TERM = re.compile(r"([+-])?\s*(\d*)\*?([A-Za-z_]\w*)")


@dataclass(frozen=True)
class EquationEvidence(Evidence):
    """Integer linear combination of certificate parameters: sum(c * p) = value."""

    terms: Tuple[Tuple[int, str], ...]
    value: int
    kind = "eq"

    def check(self, ring, params) -> bool:
        try:
            total = sum(c * int(params[name]) for c, name in self.terms)
        except (KeyError, ValueError):
            return False
        return total == self.value

    def payload(self) -> str:
        pieces = []
        for index, (c, name) in enumerate(self.terms):
            magnitude = "" if abs(c) == 1 else f"{abs(c)}*"
            if index == 0:
                pieces.append(f"{'-' if c < 0 else ''}{magnitude}{name}")
            else:
                pieces.append(f" {'-' if c < 0 else '+'} {magnitude}{name}")
        return f"{''.join(pieces)} = {self.value}"

    @classmethod
    def parse_payload(cls, payload, ring):
        lhs, sep, rhs = payload.partition("=")
        if not sep:
            raise ValueError(f"malformed eq evidence: {payload!r}")
        terms = []
        for sign, digits, name in _TERM.findall(lhs):
            c = int(digits) if digits else 1
            terms.append((-c if sign == "-" else c, name))
        if not terms:
            raise ValueError(f"malformed eq evidence: {payload!r}")
        return cls(tuple(terms), int(rhs))
