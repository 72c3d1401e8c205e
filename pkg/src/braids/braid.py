"""
Braid words as syntactic objects.

A letter is a nonzero integer: k stands for sigma_|k| with the sign of k.
Letters act left to right, so ``a * b`` means "a then b" and
``act_row(v, a * b) == act_row(act_row(v, a), b)``.
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, List, Sequence, Tuple, Union

_SEPARATORS = re.compile(r"[\s,]+")


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 2:
            raise ValueError(f"strand count must be an integer >= 2, got {self.strands!r}")
        letters = tuple(self.letters)
        for letter in letters:
            if not isinstance(letter, int) or letter == 0:
                raise ValueError(f"braid letters must be nonzero integers, got {letter!r}")
            if abs(letter) > self.strands - 1:
                raise ValueError(
                    f"index {abs(letter)} exceeds n-1={self.strands - 1} for {self.strands} strands"
                )
        object.__setattr__(self, "letters", letters)

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    @classmethod
    def delta(cls, strands: int) -> "BraidWord":
        """Half twist: sigma_1 sigma_2 sigma_1 for 3 strands, sigma_1 sigma_2 sigma_1 sigma_3 sigma_2 sigma_1 for 4."""
        letters: List[int] = []
        for top in range(1, strands):
            letters.extend(range(top, 0, -1))
        return cls(strands, tuple(letters))

    @classmethod
    def parse(cls, text: str, strands: int) -> "BraidWord":
        return parse_braid(text, strands)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def _check_same_group(self, other: "BraidWord") -> None:
        if self.strands != other.strands:
            raise ValueError(f"strand-count mismatch: {self.strands} and {other.strands}")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        self._check_same_group(other)
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-letter for letter in reversed(self.letters)))

    def power(self, k: int) -> "BraidWord":
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.strands, base.letters * abs(k))

    def conjugate(self, by: "BraidWord") -> "BraidWord":
        """by * self * by^{-1}"""
        return by * self * by.inverse()

    def exponent_sum(self) -> int:
        return sum(1 if letter > 0 else -1 for letter in self.letters)

    def free_reduce(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(free_reduce_letters(self.letters)))

    def embed(self, strands: int) -> "BraidWord":
        """Same letters read in a braid group with more strands."""
        if strands < self.strands:
            raise ValueError(f"cannot embed {self.strands} strands into {strands}")
        return BraidWord(strands, self.letters)

    def max_index(self) -> int:
        return max((abs(letter) for letter in self.letters), default=0)

    def forget_strand(self, strand: int) -> "BraidWord":
        return forget_strand(self, strand)

    def to_line(self) -> str:
        """Word-file form ``n: k1 k2 ...``."""
        body = " ".join(str(letter) for letter in self.letters)
        return f"{self.strands}: {body}".rstrip()

    def __str__(self) -> str:
        return " ".join(str(letter) for letter in self.letters)


def free_reduce_letters(letters: Iterable[int]) -> List[int]:
    stack: List[int] = []
    for letter in letters:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return stack


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace- or comma-separated signed generator indices."""
    letters = []
    for token in _SEPARATORS.split(text.strip()):
        if not token:
            continue
        try:
            value = int(token)
        except ValueError:
            raise ValueError(f"malformed braid letter {token!r}") from None
        if value == 0:
            raise ValueError("braid letter 0 is not a generator")
        letters.append(value)
    return BraidWord(strands, tuple(letters))


def exponent_sum(word: BraidWord) -> int:
    return word.exponent_sum()


def invert(word: BraidWord) -> BraidWord:
    return word.inverse()


def concat(first: BraidWord, second: BraidWord) -> BraidWord:
    return first * second


def conjugate(word: BraidWord, by: BraidWord) -> BraidWord:
    return word.conjugate(by)


def forget_strand_tracked(word: BraidWord, position: int) -> Tuple[BraidWord, int]:
    """
    Delete the strand currently at ``position`` while reading ``word``.

    Returns the (n-1)-strand word and the strand's position at the end, which
    is where deletion continues when the word is followed by another one.
    """
    if word.strands < 3:
        raise ValueError(f"forgetting a strand needs at least 3 strands, got {word.strands}")
    if not 1 <= position <= word.strands:
        raise ValueError(f"strand {position} out of range 1..{word.strands}")
    kept: List[int] = []
    p = position
    for letter in word.letters:
        j = abs(letter)
        sign = 1 if letter > 0 else -1
        if p == j:
            p = j + 1
        elif p == j + 1:
            p = j
        elif j + 1 < p:
            kept.append(sign * j)
        else:
            kept.append(sign * (j - 1))
    return BraidWord(word.strands - 1, tuple(kept)), p


def forget_strand(word: BraidWord, strand: int) -> BraidWord:
    """Strand-deletion homomorphism for the strand starting at ``strand``."""
    return forget_strand_tracked(word, strand)[0]


def forget_strands(word: BraidWord, strands: Sequence[int]) -> BraidWord:
    """
    Forget several strands named by their original starting positions.

    Deleting strand s shifts every later original label down by one, so
    ``forget_strands(w, [2, 4])`` deletes original strands 2 and 4.
    """
    remaining = list(range(1, word.strands + 1))
    for original in strands:
        if original not in remaining:
            raise ValueError(f"strand {original} is not present (remaining: {remaining})")
        word = forget_strand(word, remaining.index(original) + 1)
        remaining.remove(original)
    return word


def parse_word_lines(lines: Iterable[str]) -> List[BraidWord]:
    """Read ``n: k1 k2 ...`` lines; blank lines and ``#`` comments are skipped."""
    words = []
    for number, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, body = line.partition(":")
        if not sep:
            raise ValueError(f"line {number}: expected 'n: letters', got {raw.strip()!r}")
        try:
            strands = int(head)
        except ValueError:
            raise ValueError(f"line {number}: bad strand count {head.strip()!r}") from None
        try:
            words.append(parse_braid(body, strands))
        except ValueError as e:
            raise ValueError(f"line {number}: {e}") from None
    return words


def read_word_file(path: Union[str, Path]) -> List[BraidWord]:
    with open(path, "r") as f:
        return parse_word_lines(f)


def format_word_lines(words: Iterable[BraidWord], comments: Iterable[str] = ()) -> str:
    out = [f"# {c}" for c in comments]
    out.extend(word.to_line() for word in words)
    return "\n".join(out) + "\n"
