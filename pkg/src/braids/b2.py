"""
The subgroup <x, y> of B_4 with x = sigma_2 sigma_1^2 sigma_2 and y = sigma_3.

It is the Artin group of type B_2 with central element D = xyxy = yxyx; D
times sigma_1^2 is Delta_4^2. Letters are written ``x y X Y`` (uppercase =
inverse).
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ..errors import CertificateError, RotationError
from .braid import BraidWord

logger = logging.getLogger(__name__)

ALPHABET = "xyXY"
FORBIDDEN = ("xyxy", "yxyx")

_EXPANSION = {
    "x": (2, 1, 1, 2),
    "y": (3,),
    "X": (-2, -1, -1, -2),
    "Y": (-3,),
}

# Blocks of the automaton reading positive words without xyxy / yxyx.
# Longest first so the deterministic parse prefers long blocks.
_BLOCKS = {
    "Y": (("yxy", "Y"), ("yx", "X"), ("y", "Y")),
    "X": (("xyx", "X"), ("xy", "Y"), ("x", "X")),
}

# Block -> (move label, whether one central D is collected).
_MOVE_OF_BLOCK = {
    "x": ("x", False),
    "y": ("y", False),
    "xy": ("xy", False),
    "yx": ("yx", False),
    "xyx": ("Y", True),
    "yxy": ("X", True),
}

# Allowed move transitions between automaton states.
TRANSITIONS = {
    ("X", "x"): "X",
    ("X", "Y"): "X",
    ("X", "xy"): "Y",
    ("Y", "y"): "Y",
    ("Y", "X"): "Y",
    ("Y", "yx"): "X",
}


@dataclass(frozen=True)
class B2Word:
    letters: str = ""

    def __post_init__(self):
        for letter in self.letters:
            if letter not in ALPHABET:
                raise ValueError(f"B2 letter {letter!r} is not one of x y X Y")

    @classmethod
    def parse(cls, text: str) -> "B2Word":
        return cls("".join(text.split()))

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "B2Word") -> "B2Word":
        return B2Word(self.letters + other.letters)

    def inverse(self) -> "B2Word":
        return B2Word("".join(letter.swapcase() for letter in reversed(self.letters)))

    def __str__(self) -> str:
        return " ".join(self.letters)


@dataclass(frozen=True)
class B2Normal:
    """W = D^delta_exp * positive, with no xyxy / yxyx inside ``positive``."""

    delta_exp: int
    positive: str

    def __post_init__(self):
        if not set(self.positive) <= {"x", "y"}:
            raise ValueError(f"normal form must be positive, got {self.positive!r}")
        if _forbidden_at(self.positive) is not None:
            raise ValueError(f"normal form {self.positive!r} contains xyxy or yxyx")

    def to_word(self) -> B2Word:
        central = "xyxy" if self.delta_exp >= 0 else "YXYX"
        return B2Word(central * abs(self.delta_exp) + self.positive)


@dataclass(frozen=True)
class Move:
    label: str
    before: str
    after: str

    def to_word(self) -> B2Word:
        return B2Word(self.label)

    def render(self) -> str:
        shown = {"X": "x^-1", "Y": "y^-1"}.get(self.label, self.label)
        return f"{shown}: {self.before}->{self.after}"


@dataclass(frozen=True)
class MoveSequence:
    """Delta_4^{2 delta_exp} sigma_1^{sigma1_exp} followed by the moves."""

    delta_exp: int
    sigma1_exp: int
    moves: Tuple[Move, ...]
    conjugator: B2Word = field(default_factory=B2Word)

    def __post_init__(self):
        for previous, current in zip(self.moves, self.moves[1:]):
            if previous.after != current.before:
                raise ValueError(f"state chain broken between {previous} and {current}")
        for move in self.moves:
            if TRANSITIONS.get((move.before, move.label)) != move.after:
                raise ValueError(f"move {move.render()} is not an automaton transition")

    def moves_word(self) -> B2Word:
        return B2Word("".join(move.label for move in self.moves))

    def to_braid(self) -> BraidWord:
        """Delta_4^{2m_1} sigma_1^{k_1} Q as a 4-braid word."""
        twist = BraidWord.delta(4).power(2 * self.delta_exp)
        sigma1 = BraidWord(4, (1,)).power(self.sigma1_exp)
        return twist * sigma1 * b2_expand(self.moves_word())


def b2_expand(word: B2Word) -> BraidWord:
    letters: List[int] = []
    for letter in word.letters:
        letters.extend(_EXPANSION[letter])
    return BraidWord(4, tuple(letters))


def central_word(exponent: int) -> B2Word:
    """D^exponent with D = xyxy."""
    return B2Normal(exponent, "").to_word()


def _forbidden_at(positive: str) -> Optional[int]:
    hits = [positive.find(f) for f in FORBIDDEN]
    hits = [h for h in hits if h >= 0]
    return min(hits) if hits else None


def excise_central(delta_exp: int, positive: str) -> B2Normal:
    """Remove xyxy / yxyx factors (leftmost first), moving each into the central power."""
    while True:
        at = _forbidden_at(positive)
        if at is None:
            return B2Normal(delta_exp, positive)
        positive = positive[:at] + positive[at + 4:]
        delta_exp += 1


def b2_normalize(word: B2Word) -> B2Normal:
    """
    Collect the central element to the left: W = D^m P with P positive and reduced.

    x^-1 = D^-1 yxy and y^-1 = D^-1 xyx, then every xyxy / yxyx factor of the
    positive part is excised.
    """
    delta_exp = 0
    pieces = []
    for letter in word.letters:
        if letter == "X":
            delta_exp -= 1
            pieces.append("yxy")
        elif letter == "Y":
            delta_exp -= 1
            pieces.append("xyx")
        else:
            pieces.append(letter)
    return excise_central(delta_exp, "".join(pieces))


def _check_reduced(positive: str) -> None:
    if not set(positive) <= {"x", "y"}:
        raise ValueError(f"expected a positive word in x, y, got {positive!r}")
    if _forbidden_at(positive) is not None:
        raise ValueError(f"{positive!r} contains xyxy or yxyx")


def _rotations_yx(positive: str):
    for amount in range(len(positive)):
        rotated = positive[amount:] + positive[:amount]
        if rotated.startswith("y") and rotated.endswith("x"):
            yield amount, rotated


def b2_rotate_to_yx(positive: str) -> Tuple[str, B2Word]:
    """
    Smallest cyclic rotation starting with y, ending with x and avoiding xyxy / yxyx.

    Returns (rotated, conjugator) with rotated = conjugator^-1 * positive * conjugator.

    Raises:
        ValueError: if ``positive`` is not a reduced positive word containing both letters
        RotationError: if every such rotation contains a forbidden factor
    """
    _check_reduced(positive)
    if "x" not in positive or "y" not in positive:
        raise ValueError(f"rotation needs both letters, got {positive!r}")
    for amount, rotated in _rotations_yx(positive):
        if _forbidden_at(rotated) is None:
            return rotated, B2Word(positive[:amount])
    raise RotationError(f"no rotation of {positive!r} avoids xyxy and yxyx")


def b2_conjugate_to_yx(normal: B2Normal) -> Tuple[B2Normal, B2Word]:
    """
    Conjugate D^m P until P starts with y and ends with x, or has a single letter.

    When no clean rotation exists, the smallest y...x rotation is re-normalised;
    each pass removes at least one xyxy / yxyx so the loop terminates.
    """
    delta_exp, positive = normal.delta_exp, normal.positive
    conjugator = B2Word()
    while "x" in positive and "y" in positive:
        try:
            rotated, step = b2_rotate_to_yx(positive)
            return B2Normal(delta_exp, rotated), conjugator * step
        except RotationError:
            amount, rotated = next(_rotations_yx(positive))
            logger.debug("no clean rotation of %s; re-normalising %s", positive, rotated)
            conjugator = conjugator * B2Word(positive[:amount])
            collapsed = excise_central(delta_exp, rotated)
            delta_exp, positive = collapsed.delta_exp, collapsed.positive
    return B2Normal(delta_exp, positive), conjugator


def _parse_table(positive: str) -> List[Dict[str, bool]]:
    """reachable[pos][state]: a path from ``state`` at ``pos`` ends at X after the last letter."""
    size = len(positive)
    reachable = [{"X": False, "Y": False} for _ in range(size + 1)]
    reachable[size]["X"] = True
    for pos in range(size - 1, -1, -1):
        for state, blocks in _BLOCKS.items():
            reachable[pos][state] = any(
                positive.startswith(block, pos) and reachable[pos + len(block)][target]
                for block, target in blocks
            )
    return reachable


def b2_segment(positive: str) -> MoveSequence:
    """
    Parse a reduced positive word starting with y and ending with x as an automaton path.

    The path starts at Y and ends at X; at each position the longest block that
    still leads to a complete parse is taken. Blocks xyx and yxy become the
    moves y^-1 and x^-1, each collecting one D = Delta_4^2 sigma_1^-2.
    """
    _check_reduced(positive)
    if not (positive.startswith("y") and positive.endswith("x")):
        raise ValueError(f"segmentation needs a word starting with y and ending with x, got {positive!r}")
    reachable = _parse_table(positive)
    if not reachable[0]["Y"]:
        logger.error("automaton has no path for %s", positive)
        raise CertificateError(f"no automaton path reads {positive!r}", dump=positive)

    moves: List[Move] = []
    collected = 0
    pos, state = 0, "Y"
    while pos < len(positive):
        for block, target in _BLOCKS[state]:
            if positive.startswith(block, pos) and reachable[pos + len(block)][target]:
                label, central = _MOVE_OF_BLOCK[block]
                moves.append(Move(label, state, target))
                collected += int(central)
                pos, state = pos + len(block), target
                break
    return MoveSequence(collected, -2 * collected, tuple(moves))
