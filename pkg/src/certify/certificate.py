"""
Certificates: a verdict plus the evidence that reproduces it.

Text form, one item per line, verdict last:

    case: b4b-mixed
    modulus: 2
    word: [4: 3 2 1 1 2]
    param k: 0
    member: (0, 0, 1) ∈ V_Y
    act: (0, 0, 1) * [4: 3 2 1 1 2] = (t+t^2, t+t^3, t)
    ...
    verdict: NONTRIVIAL_IMAGE
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..algebra.burau import burau_image
from ..algebra.laurent import CoeffRing
from ..braids.braid import BraidWord
from ..braids.handles import is_trivial_word
from ..errors import CertificateError
from .evidence import Evidence, parse_evidence, parse_word_ref, render_word

logger = logging.getLogger(__name__)

ParamValue = Union[int, str]

# parsed back as text even when they look numeric, e.g. a one-letter word "2"
WORD_PARAMS = frozenset({"P", "W", "tail", "moves", "variant"})


class Verdict(Enum):
    NONTRIVIAL_IMAGE = "NONTRIVIAL_IMAGE"
    TRIVIAL_BRAID = "TRIVIAL_BRAID"


@dataclass(frozen=True)
class Certificate:
    case: str
    modulus: int
    verdict: Verdict
    word: BraidWord
    params: Tuple[Tuple[str, ParamValue], ...] = ()
    evidence: Tuple[Evidence, ...] = ()
    notes: Tuple[str, ...] = ()
    conjugator: Optional[BraidWord] = None

    @property
    def ring(self) -> CoeffRing:
        return CoeffRing(self.modulus)

    @property
    def param_map(self) -> Dict[str, ParamValue]:
        return dict(self.params)

    @property
    def nontrivial(self) -> bool:
        return self.verdict is Verdict.NONTRIVIAL_IMAGE

    def failures(self) -> List[Evidence]:
        ring, params = self.ring, self.param_map
        return [item for item in self.evidence if not item.check(ring, params)]

    def sound(self) -> bool:
        """NONTRIVIAL => rho(word) != I; TRIVIAL => word problem says trivial."""
        if self.nontrivial:
            return not burau_image(self.word, self.ring).is_identity()
        return is_trivial_word(self.word)

    def validate(self) -> "Certificate":
        """
        Re-run every evidence item and the verdict soundness check.

        Raises:
            CertificateError: if anything fails to reproduce; ``dump`` holds the text form
        """
        failed = self.failures()
        if failed:
            logger.error("certificate %s: %d evidence item(s) failed", self.case, len(failed))
            raise CertificateError(
                f"evidence does not reproduce: {failed[0].render()}", dump=self.serialize()
            )
        if not self.sound():
            logger.error("certificate %s: verdict %s is not sound", self.case, self.verdict.value)
            raise CertificateError(f"verdict {self.verdict.value} is not sound", dump=self.serialize())
        return self

    def serialize(self) -> str:
        lines = [
            f"case: {self.case}",
            f"modulus: {self.modulus}",
            f"word: {render_word(self.word)}",
        ]
        if self.conjugator is not None:
            lines.append(f"conjugator: {render_word(self.conjugator)}")
        lines.extend(f"param {name}: {value}" for name, value in self.params)
        lines.extend(f"note: {note}" for note in self.notes)
        lines.extend(item.render() for item in self.evidence)
        lines.append(f"verdict: {self.verdict.value}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "case": self.case,
            "modulus": self.modulus,
            "word": {"n": self.word.strands, "letters": list(self.word.letters)},
            "params": {name: value for name, value in self.params},
            "evidence": [item.render() for item in self.evidence],
            "notes": list(self.notes),
            "verdict": self.verdict.value,
        }
        if self.conjugator is not None:
            data["conjugator"] = {"n": self.conjugator.strands, "letters": list(self.conjugator.letters)}
        return data

    @classmethod
    def parse(cls, text: str) -> "Certificate":
        """Inverse of ``serialize``; evidence is parsed but not checked."""
        fields: Dict[str, Any] = {"params": [], "notes": [], "evidence": []}
        pending: List[str] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition(":")
            if not sep:
                raise ValueError(f"line {number}: expected 'key: value', got {line!r}")
            key, value = key.strip(), value.strip()
            if key == "case":
                fields["case"] = value
            elif key == "note":
                fields["notes"].append(value)
            elif key == "modulus":
                fields["modulus"] = int(value)
            elif key in ("word", "conjugator"):
                fields[key] = parse_word_ref(value)
            elif key.startswith("param "):
                name = key[len("param "):].strip()
                fields["params"].append((name, _param_value(name, value)))
            elif key == "verdict":
                try:
                    fields["verdict"] = Verdict(value)
                except ValueError:
                    raise ValueError(f"line {number}: unknown verdict {value!r}") from None
            else:
                pending.append(line)

        for required in ("case", "modulus", "word", "verdict"):
            if required not in fields:
                raise ValueError(f"certificate text has no {required!r} line")
        ring = CoeffRing(fields["modulus"])
        evidence = tuple(parse_evidence(line, ring) for line in pending)
        return cls(
            case=fields["case"],
            modulus=fields["modulus"],
            verdict=fields["verdict"],
            word=fields["word"],
            params=tuple(fields["params"]),
            evidence=evidence,
            notes=tuple(fields["notes"]),
            conjugator=fields.get("conjugator"),
        )


def _param_value(name: str, text: str) -> ParamValue:
    if name.rpartition("_")[2] in WORD_PARAMS:
        return text
    try:
        return int(text)
    except ValueError:
        return text


def check_certificate_text(text: str) -> Certificate:
    """Parse and re-validate a serialized certificate."""
    return Certificate.parse(text).validate()


def build(case: str, ring: CoeffRing, verdict: Verdict, word: BraidWord,
          params: Sequence[Tuple[str, ParamValue]], evidence: Sequence[Evidence],
          notes: Sequence[str] = (), conjugator: Optional[BraidWord] = None) -> Certificate:
    """Assemble a certificate and validate it."""
    certificate = Certificate(case, ring.modulus, verdict, word, tuple(params),
                              tuple(evidence), tuple(notes), conjugator)
    return certificate.validate()
