"""
Kernel membership and strand-deletion analysis.

Forgetting a strand is a homomorphism, so a nontrivial image certifies that
the original braid is nontrivial.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

from ..algebra.burau import burau_image
from ..algebra.laurent import INTEGERS, CoeffRing
from ..braids.braid import BraidWord, forget_strand, forget_strands
from ..braids.handles import is_trivial_word
from ..errors import CertificateError

logger = logging.getLogger(__name__)


def verify_kernel(word: BraidWord, modulus: int) -> bool:
    """True iff the Burau image of ``word`` over Z/modulus is the identity."""
    return burau_image(word, CoeffRing(modulus)).is_identity()


def nontriviality_witness(word: BraidWord) -> Optional[str]:
    """Cheap certificate that ``word`` is not the identity, or None."""
    exponent = word.exponent_sum()
    if exponent:
        return f"exponent sum {exponent}"
    if word.strands in (3, 4) and not burau_image(word, INTEGERS).is_identity():
        return "Burau image over Z is not I"
    return None


@dataclass(frozen=True)
class StrandDeletion:
    strands: Tuple[int, ...]
    word: BraidWord
    trivial: bool
    witness: Optional[str] = None

    def render(self) -> str:
        label = ",".join(str(s) for s in self.strands)
        verdict = "trivial" if self.trivial else f"nontrivial ({self.witness})"
        return f"forget {label}: [{self.word}] {verdict}"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "strands": list(self.strands),
            "letters": list(self.word.letters),
            "trivial": self.trivial,
            "witness": self.witness,
        }


@dataclass(frozen=True)
class BrunnianReport:
    word: BraidWord
    deletions: Tuple[StrandDeletion, ...]
    pairs: Tuple[StrandDeletion, ...] = field(default_factory=tuple)

    @property
    def brunnian(self) -> bool:
        return all(deletion.trivial for deletion in self.deletions)

    def render(self) -> str:
        lines = [f"word: {self.word.to_line()}"]
        lines.extend(deletion.render() for deletion in self.deletions + self.pairs)
        lines.append(f"brunnian: {'yes' if self.brunnian else 'no'}")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.word.strands,
            "letters": list(self.word.letters),
            "deletions": [d.to_dict() for d in self.deletions],
            "pairs": [d.to_dict() for d in self.pairs],
            "brunnian": self.brunnian,
        }


def _analyse(strands: Tuple[int, ...], word: BraidWord) -> StrandDeletion:
    trivial = is_trivial_word(word)
    witness = nontriviality_witness(word)
    if trivial and witness is not None:
        logger.error("forgetting %s gives [%s]: reduced to empty but %s", strands, word, witness)
        raise CertificateError(f"word problem and witness disagree on [{word}]", dump=word.to_line())
    if not trivial and witness is None:
        witness = "handle reduction"
    return StrandDeletion(strands, word, trivial, witness)


def brunnian_report(word: BraidWord, pairs: Sequence[Sequence[int]] = ()) -> BrunnianReport:
    """
    Forget each strand in turn and decide whether what is left is trivial.

    Args:
        word: a braid on 3 or 4 strands
        pairs: optional extra deletions of several strands, by original label

    Returns:
        BrunnianReport: brunnian iff every single-strand deletion is trivial
    """
    if word.strands < 3:
        raise ValueError(f"strand deletion needs at least 3 strands, got {word.strands}")
    deletions = tuple(_analyse((s,), forget_strand(word, s)) for s in range(1, word.strands + 1))
    extra = tuple(_analyse(tuple(labels), forget_strands(word, labels)) for labels in pairs)
    report = BrunnianReport(word, deletions, extra)
    logger.info("brunnian analysis of length-%d word: %s", len(word),
                "brunnian" if report.brunnian else "not brunnian")
    return report

