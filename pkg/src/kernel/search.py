"""
Bounded search for braid words whose Burau image mod p is the identity.

Meet in the middle: a word a*b has identity image iff rho(b) = rho(a^-1).
Half-words b are indexed by ``BurauMatrix.key()`` and each first half a is
looked up by the key of rho(a^-1).
"""

import logging
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from tqdm import tqdm

from ..algebra.burau import BurauMatrix, burau_image, generator
from ..algebra.laurent import CoeffRing
from ..braids.braid import BraidWord
from ..braids.handles import is_trivial_word
from ..config import config
from ..errors import StepBudgetExceeded
from .brunnian import nontriviality_witness

logger = logging.getLogger(__name__)

Letters = Tuple[int, ...]


def full_alphabet(strands: int) -> Letters:
    letters: List[int] = []
    for index in range(1, strands):
        letters.extend((index, -index))
    return tuple(letters)


def letter_rank(letter: int) -> Tuple[int, int]:
    """sigma_1 < sigma_1^-1 < sigma_2 < ..."""
    return abs(letter), 0 if letter > 0 else 1


def parse_pattern(text: str) -> Tuple[Letters, ...]:
    """``"-1 2 1|3"``: whitespace separates positions, ``|`` separates alternatives."""
    positions = []
    for token in text.split():
        try:
            choices = tuple(int(part) for part in token.split("|"))
        except ValueError:
            raise ValueError(f"malformed pattern position {token!r}") from None
        if 0 in choices:
            raise ValueError("pattern letter 0 is not a generator")
        positions.append(choices)
    if not positions:
        raise ValueError("empty search pattern")
    return tuple(positions)


@dataclass(frozen=True)
class SearchConfig:
    """
    modulus: coefficients are taken mod this (0 for Z)
    max_length: longest word examined; capped by search.max_length_cap
    alphabet: allowed letters when no pattern is given
    pattern: letter choices for position i are pattern[i % len(pattern)]
    """

    modulus: int
    max_length: int
    strands: int = 4
    alphabet: Optional[Letters] = None
    pattern: Optional[Tuple[Letters, ...]] = None
    meet_in_middle: bool = True
    include_trivial: bool = False
    memory_budget: Optional[int] = None
    workers: Optional[int] = None

    def __post_init__(self):
        cap = config.get('search')['max_length_cap']
        if self.max_length < 0:
            raise ValueError(f"max length must be non-negative, got {self.max_length}")
        if self.max_length > cap:
            raise ValueError(f"max length {self.max_length} exceeds the cap {cap} (search.max_length_cap)")
        if self.strands not in (3, 4):
            raise ValueError(f"search is provided for 3 and 4 strands, got {self.strands}")
        allowed = set(full_alphabet(self.strands))
        alphabet = tuple(self.alphabet) if self.alphabet is not None else full_alphabet(self.strands)
        for letter in alphabet + tuple(l for choices in (self.pattern or ()) for l in choices):
            if letter not in allowed:
                raise ValueError(f"letter {letter} is not a generator of B_{self.strands}")
        object.__setattr__(self, "alphabet", tuple(sorted(set(alphabet), key=letter_rank)))

    def choices(self, position: int) -> Letters:
        if self.pattern:
            return self.pattern[position % len(self.pattern)]
        return self.alphabet

    @property
    def period(self) -> int:
        return len(self.pattern) if self.pattern else 1

    @property
    def budget(self) -> int:
        return self.memory_budget if self.memory_budget is not None else config.get('search')['memory_budget']


@dataclass(frozen=True)
class SearchHit:
    word: BraidWord
    verified: bool
    witness: Optional[str] = None

    def sort_key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        return len(self.word), tuple(letter_rank(letter) for letter in self.word.letters)

    def render(self) -> str:
        return f"{len(self.word)}\t{self.word}\t{'verified' if self.verified else 'unverified'}"


@dataclass
class SearchResult:
    config: SearchConfig
    hits: List[SearchHit] = field(default_factory=list)
    complete: bool = True
    examined: int = 0

    def render(self) -> str:
        return "".join(hit.render() + "\n" for hit in self.hits)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "modulus": self.config.modulus,
            "max_length": self.config.max_length,
            "complete": self.complete,
            "examined": self.examined,
            "hits": [
                {"length": len(hit.word), "letters": list(hit.word.letters),
                 "verified": hit.verified, "witness": hit.witness}
                for hit in self.hits
            ],
        }


class _BudgetExhausted(Exception):
    pass


def _extensions(cfg: SearchConfig, ring: CoeffRing, length: int, offset: int,
                prefix: Letters = (), image: Optional[BurauMatrix] = None,
                inverse: Optional[BurauMatrix] = None) -> Iterator[Tuple[Letters, BurauMatrix, BurauMatrix]]:
    """
    Freely reduced words of exactly ``length`` letters continuing ``prefix``, with rho(w) and rho(w^-1).

    Position numbering starts at ``offset`` so pattern-restricted halves line up.
    """
    if image is None:
        image = BurauMatrix.identity(cfg.strands - 1, ring)
        inverse = image
    if len(prefix) == length:
        yield prefix, image, inverse
        return
    position = offset + len(prefix)
    for letter in cfg.choices(position):
        if prefix and prefix[-1] == -letter:
            continue
        index, sign = abs(letter), 1 if letter > 0 else -1
        yield from _extensions(
            cfg, ring, length, offset, prefix + (letter,),
            image.apply_generator(index, sign),
            generator(cfg.strands, index, -sign, ring) @ inverse,
        )


def _classify(cfg: SearchConfig, ring: CoeffRing, letters: Letters) -> Optional[SearchHit]:
    """Re-verify an identity candidate from scratch and certify it when possible."""
    word = BraidWord(cfg.strands, letters)
    if not burau_image(word, ring).is_identity():
        logger.error("candidate [%s] does not re-verify to the identity", word)
        return None
    witness = None
    for strand in range(1, cfg.strands + 1):
        found = nontriviality_witness(word.forget_strand(strand))
        if found:
            witness = f"forget strand {strand}: {found}"
            break
    if witness is not None:
        return SearchHit(word, True, witness)
    try:
        trivial = is_trivial_word(word)
    except StepBudgetExceeded:
        logger.warning("word problem budget exhausted on [%s]", word)
        return SearchHit(word, False, None)
    if trivial:
        return SearchHit(word, False, "trivial braid") if cfg.include_trivial else None
    return SearchHit(word, True, "handle reduction")


def _meet_in_middle(cfg: SearchConfig, ring: CoeffRing, result: SearchResult,
                    stop: Optional[threading.Event], progress: bool) -> List[Letters]:
    indexes: Dict[Tuple[int, int], Dict[str, List[Letters]]] = {}
    stored = 0
    candidates: List[Letters] = []

    def index_for(length: int, offset: int) -> Dict[str, List[Letters]]:
        nonlocal stored
        slot = (length, offset % cfg.period)
        if slot not in indexes:
            table: Dict[str, List[Letters]] = {}
            for letters, image, _ in _extensions(cfg, ring, length, offset):
                table.setdefault(image.key(), []).append(letters)
                stored += 1
                if stored > cfg.budget:
                    raise _BudgetExhausted()
            indexes[slot] = table
            logger.debug("indexed %d half-words of length %d", sum(map(len, table.values())), length)
        return indexes[slot]

    for length in tqdm(range(1, cfg.max_length + 1), desc="search", file=sys.stderr, disable=not progress):
        if stop is not None and stop.is_set():
            result.complete = False
            break
        first, second = (length + 1) // 2, length // 2
        try:
            table = index_for(second, first)
        except _BudgetExhausted:
            logger.warning("memory budget of %d half-words reached at length %d", cfg.budget, length)
            result.complete = False
            break
        for a, _, inverse in _extensions(cfg, ring, first, 0):
            result.examined += 1
            for b in table.get(inverse.key(), ()):
                if b and a[-1] == -b[0]:
                    continue
                candidates.append(a + b)
    return candidates


def _direct(cfg: SearchConfig, ring: CoeffRing, result: SearchResult,
            stop: Optional[threading.Event], progress: bool) -> List[Letters]:
    """Enumerate every word; one worker per first letter (GIL-bound, so no speedup)."""
    workers = cfg.workers or config.get('search')['workers']
    lock = threading.Lock()

    def subtree(letter: int) -> Tuple[List[Letters], int, bool]:
        found: List[Letters] = []
        examined = 0
        index, sign = abs(letter), 1 if letter > 0 else -1
        root = BurauMatrix.identity(cfg.strands - 1, ring).apply_generator(index, sign)
        pending = [((letter,), root)]
        while pending:
            if stop is not None and stop.is_set():
                return found, examined, False
            letters, image = pending.pop()
            examined += 1
            if image.is_identity():
                found.append(letters)
            if len(letters) == cfg.max_length:
                continue
            for following in cfg.choices(len(letters)):
                if following == -letters[-1]:
                    continue
                pending.append((letters + (following,),
                                image.apply_generator(abs(following), 1 if following > 0 else -1)))
        return found, examined, True

    candidates: List[Letters] = []
    if cfg.max_length == 0:
        return candidates
    with ThreadPoolExecutor(max_workers=workers) as executor:
        for found, examined, finished in tqdm(executor.map(subtree, cfg.choices(0)),
                                              total=len(cfg.choices(0)), desc="search",
                                              file=sys.stderr, disable=not progress):
            with lock:
                candidates.extend(found)
                result.examined += examined
                result.complete = result.complete and finished
    return candidates


def kernel_search(cfg: SearchConfig, stop: Optional[threading.Event] = None,
                  progress: bool = False) -> SearchResult:
    """
    Report nonempty freely reduced words up to ``cfg.max_length`` with identity image.

    Hits are sorted by length, then letter by letter (sigma_1 < sigma_1^-1 < sigma_2 ...).
    Trivial braids are dropped unless ``include_trivial`` is set. Running out of
    the memory budget or being stopped returns what was found with ``complete=False``.
    """
    ring = CoeffRing(cfg.modulus)
    result = SearchResult(cfg)
    search = _meet_in_middle if cfg.meet_in_middle else _direct
    candidates = search(cfg, ring, result, stop, progress)
    hits = (_classify(cfg, ring, letters) for letters in sorted(set(candidates)))
    result.hits = sorted((hit for hit in hits if hit is not None), key=SearchHit.sort_key)
    logger.info("search mod %d up to length %d: %d hit(s), %d words examined%s",
                cfg.modulus, cfg.max_length, len(result.hits), result.examined,
                "" if result.complete else " (incomplete)")
    return result
