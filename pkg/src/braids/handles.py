"""
Word problem for braid words by handle reduction.

A sigma_i-handle is a factor sigma_i^e v sigma_i^{-e} where v contains no
sigma_i^{+-1} and no sigma_{i-1}^{+-1}. Reducing it replaces every
sigma_{i+1}^d inside v by sigma_{i+1}^{-e} sigma_i^d sigma_{i+1}^e and drops the
two ends. Only permitted handles are reduced (v holds no sigma_{i+1}-handle);
an inner handle is reduced first when one exists.

A word whose lowest generator occurs with a single sign is sigma-positive or
sigma-negative and therefore not the identity, so reduction stops there.
"""

import logging
from typing import List, Optional, Tuple

from ..config import config
from ..errors import StepBudgetExceeded
from .braid import BraidWord, free_reduce_letters

logger = logging.getLogger(__name__)


def _outer_handle(word: List[int]) -> Optional[Tuple[int, int, int]]:
    """First sigma_i-handle for the lowest index i, or None if the word is sigma_i-definite."""
    lowest = min(abs(letter) for letter in word)
    previous = None
    for pos, letter in enumerate(word):
        if abs(letter) != lowest:
            continue
        if previous is not None and (word[previous] > 0) != (letter > 0):
            return previous, pos, lowest
        previous = pos
    return None


def _permitted(word: List[int], start: int, end: int, index: int) -> Tuple[int, int, int]:
    """Descend into nested handles until the handle's interior holds no next-level handle."""
    while True:
        inner = index + 1
        previous = None
        found = None
        for pos in range(start + 1, end):
            letter = word[pos]
            if abs(letter) != inner:
                continue
            if previous is not None and (word[previous] > 0) != (letter > 0):
                found = (previous, pos)
                break
            previous = pos
        if found is None:
            return start, end, index
        start, end = found
        index = inner


def _reduce_handle(word: List[int], start: int, end: int, index: int) -> List[int]:
    e = 1 if word[start] > 0 else -1
    above = index + 1
    middle: List[int] = []
    for letter in word[start + 1:end]:
        if abs(letter) == above:
            d = 1 if letter > 0 else -1
            middle.extend((-e * above, d * index, e * above))
        else:
            middle.append(letter)
    return word[:start] + middle + word[end + 1:]


def handle_reduce(word: BraidWord, step_cap: Optional[int] = None) -> BraidWord:
    """
    Rewrite ``word`` into an equivalent word that is empty or sigma-definite.

    Args:
        word: braid word to reduce
        step_cap: maximum number of handle rewrites (defaults to word_problem.step_cap)

    Returns:
        BraidWord: the empty word iff ``word`` is the identity braid

    Raises:
        StepBudgetExceeded: if the cap is reached first
    """
    cap = step_cap if step_cap is not None else config.get('word_problem')['step_cap']
    letters = free_reduce_letters(word.letters)
    steps = 0
    while letters:
        handle = _outer_handle(letters)
        if handle is None:
            break
        if steps >= cap:
            raise StepBudgetExceeded(cap, len(letters))
        letters = free_reduce_letters(_reduce_handle(letters, *_permitted(letters, *handle)))
        steps += 1
    logger.debug("handle reduction of length-%d word finished after %d rewrites", len(word), steps)
    return BraidWord(word.strands, tuple(letters))


def is_trivial_word(word: BraidWord, step_cap: Optional[int] = None) -> bool:
    """True iff ``word`` represents the identity braid."""
    return not handle_reduce(word, step_cap).letters
