"""
Seeded random suites for the closure rules, the determinant identity and
Burau(3) faithfulness.

Samples are drawn in fixed-size chunks; chunk i uses
``numpy.random.default_rng([seed, i])`` so a report depends only on its
arguments, not on the worker count or scheduling.
"""

import logging
import sys
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
from tqdm import tqdm

from ..algebra.burau import RowVector, act_row, burau_image, check_det_identity
from ..algebra.laurent import CoeffRing, LaurentPoly
from ..braids.b2 import B2Word, b2_expand
from ..braids.braid import BraidWord
from ..braids.handles import is_trivial_word
from ..config import config
from .pingpong import MOVES, action_table
from .regions import Region, region_member

logger = logging.getLogger(__name__)

CHUNK_SIZE = 250
MAX_EXAMPLES = 5
MAX_TERMS = 4

# (source region, move, target region); X and Y are x^-1 and y^-1
CLOSURE_RULES: Tuple[Tuple[Region, str, Region], ...] = (
    (Region.VX, "x", Region.VX),
    (Region.VX, "Y", Region.VX),
    (Region.VX, "xy", Region.VY),
    (Region.VY, "y", Region.VY),
    (Region.VY, "X", Region.VY),
    (Region.VY, "yx", Region.VX),
)

V0_GENERATORS = {
    "sigma_1^-1": BraidWord(3, (-1,)),
    "sigma_2": BraidWord(3, (2,)),
    "Delta_3^2": BraidWord.delta(3).power(2),
}

ChunkResult = Tuple[int, List[str]]


@dataclass
class FuzzReport:
    suite: str
    seed: int
    trials: int = 0
    violations: int = 0
    examples: List[str] = field(default_factory=list)
    complete: bool = True
    extra: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def clean(self) -> bool:
        return self.violations == 0 and self.complete

    def merge(self, other: "FuzzReport") -> None:
        self.trials += other.trials
        self.violations += other.violations
        self.examples.extend(other.examples[:MAX_EXAMPLES - len(self.examples)])
        self.complete = self.complete and other.complete

    def render(self) -> str:
        lines = [
            f"suite: {self.suite}",
            f"seed: {self.seed}",
            f"trials: {self.trials}",
            f"violations: {self.violations}",
        ]
        lines.extend(f"{key}: {value}" for key, value in self.extra)
        if not self.complete:
            lines.append("complete: no")
        lines.extend(f"violation: {example}" for example in self.examples)
        return "\n".join(lines) + "\n"


def random_poly(rng: np.random.Generator, ring: CoeffRing, low: int, high: int,
                leading: Optional[int] = None) -> LaurentPoly:
    """
    Random polynomial with exponents in [low, high].

    With ``leading`` set the result has exactly that degree; otherwise it may be zero.
    """
    raw = {}
    if high >= low:
        count = int(rng.integers(0, MAX_TERMS + 1))
        for _ in range(count):
            raw[int(rng.integers(low, high + 1))] = _random_coefficient(rng, ring)
    if leading is not None:
        raw = {e: c for e, c in raw.items() if e < leading}
        raw[leading] = _random_unit(rng, ring)
    return LaurentPoly.from_terms(raw, ring)


def _random_coefficient(rng: np.random.Generator, ring: CoeffRing) -> int:
    if ring.is_integers:
        return int(rng.integers(-5, 6))
    return int(rng.integers(0, ring.modulus))


def _random_unit(rng: np.random.Generator, ring: CoeffRing) -> int:
    if ring.is_integers:
        return int(rng.choice([-3, -2, -1, 1, 2, 3]))
    return int(rng.integers(1, ring.modulus))


def random_region_vector(rng: np.random.Generator, ring: CoeffRing, region: Region,
                         spread: int) -> RowVector:
    """Random member of ``region`` with exponents in [-spread, spread]."""
    top = int(rng.integers(-spread, spread + 1))
    if region is Region.V0:
        return RowVector((random_poly(rng, ring, -spread, top - 1),
                          random_poly(rng, ring, -spread, top, leading=top)))
    below = random_poly(rng, ring, -spread, top - 1)
    if region is Region.VX:
        return RowVector((below, random_poly(rng, ring, -spread, top, leading=top),
                          random_poly(rng, ring, -spread, top)))
    return RowVector((below, random_poly(rng, ring, -spread, top - 1),
                      random_poly(rng, ring, -spread, top, leading=top)))


def random_vector(rng: np.random.Generator, ring: CoeffRing, dim: int, spread: int) -> RowVector:
    return RowVector(tuple(random_poly(rng, ring, -spread, spread) for _ in range(dim)))


def random_word(rng: np.random.Generator, strands: int, max_length: int) -> BraidWord:
    length = int(rng.integers(0, max_length + 1))
    indices = rng.integers(1, strands, size=length)
    signs = rng.choice([-1, 1], size=length)
    return BraidWord(strands, tuple(int(i) * int(s) for i, s in zip(indices, signs)))


def run_chunks(suite: str, trials: int, seed: int, sampler: Callable[[np.random.Generator, int], ChunkResult],
               workers: Optional[int] = None, stop: Optional[threading.Event] = None,
               progress: bool = False) -> FuzzReport:
    """
    Split ``trials`` into chunks, run ``sampler(rng, count)`` on each and merge in chunk order.

    Chunks not started when ``stop`` is set are skipped and the report is marked incomplete.
    Threads share the GIL, so ``workers`` bounds how many chunks are in flight for
    cancellation and progress; it does not make the sampling faster.
    """
    workers = workers or config.get('fuzz')['workers']
    sizes = [min(CHUNK_SIZE, trials - start) for start in range(0, trials, CHUNK_SIZE)]

    def work(index: int) -> Optional[ChunkResult]:
        if stop is not None and stop.is_set():
            return None
        return sampler(np.random.default_rng([seed, index]), sizes[index])

    report = FuzzReport(suite, seed)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        results = executor.map(work, range(len(sizes)))
        for index, result in enumerate(tqdm(results, total=len(sizes), desc=suite,
                                            file=sys.stderr, disable=not progress)):
            if result is None:
                report.complete = False
                continue
            violations, examples = result
            report.merge(FuzzReport(suite, seed, sizes[index], violations, examples))
    if report.violations:
        logger.warning("%s: %d violation(s) in %d trials", suite, report.violations, report.trials)
    else:
        logger.info("%s: %d trials, no violations", suite, report.trials)
    return report


def closure_suite(modulus: int, seed: int, trials: Optional[int] = None,
                  spread: Optional[int] = None, rules: Sequence = CLOSURE_RULES, **kwargs) -> FuzzReport:
    """``trials`` samples per rule: a random vector of the source region must land in the target."""
    settings = config.get('fuzz')
    trials = trials if trials is not None else settings['closure_trials']
    spread = spread if spread is not None else settings['exponent_range']
    ring = CoeffRing(modulus)
    combined = FuzzReport(f"closure mod {modulus}", seed)

    for number, (source, move, target) in enumerate(rules):
        piece = b2_expand(B2Word(move))

        def sampler(rng, count, source=source, target=target, piece=piece, move=move):
            bad = 0
            examples = []
            for _ in range(count):
                v = random_region_vector(rng, ring, source, spread)
                image = act_row(v, piece)
                if not region_member(target, image):
                    bad += 1
                    if len(examples) < MAX_EXAMPLES:
                        examples.append(f"{v} * {move} = {image} not in {target.value}")
            return bad, examples

        report = run_chunks(f"{source.value} * {move} in {target.value}", trials, seed + number,
                            sampler, **kwargs)
        combined.merge(report)
        combined.extra.append((f"{source.value} * {move} -> {target.value}", str(report.violations)))
    return combined


def v0_suite(modulus: int, seed: int, trials: Optional[int] = None,
             spread: Optional[int] = None, **kwargs) -> FuzzReport:
    """V_0 is closed under sigma_1^-1, sigma_2 and Delta_3^2."""
    settings = config.get('fuzz')
    trials = trials if trials is not None else settings['closure_trials']
    spread = spread if spread is not None else settings['exponent_range']
    ring = CoeffRing(modulus)

    def sampler(rng, count):
        bad = 0
        examples = []
        for _ in range(count):
            v = random_region_vector(rng, ring, Region.V0, spread)
            for name, word in V0_GENERATORS.items():
                image = act_row(v, word)
                if not region_member(Region.V0, image):
                    bad += 1
                    if len(examples) < MAX_EXAMPLES:
                        examples.append(f"{v} * {name} = {image} not in V_0")
        return bad, examples

    return run_chunks(f"V_0 closure mod {modulus}", trials, seed, sampler, **kwargs)


def disjointness_suite(modulus: int, seed: int, trials: Optional[int] = None,
                       spread: Optional[int] = None, **kwargs) -> FuzzReport:
    settings = config.get('fuzz')
    trials = trials if trials is not None else settings['closure_trials']
    spread = spread if spread is not None else settings['exponent_range']
    ring = CoeffRing(modulus)

    def sampler(rng, count):
        bad = 0
        examples = []
        for _ in range(count):
            v = random_vector(rng, ring, 3, spread)
            if region_member(Region.VX, v) and region_member(Region.VY, v):
                bad += 1
                if len(examples) < MAX_EXAMPLES:
                    examples.append(f"{v} in both V_X and V_Y")
        return bad, examples

    return run_chunks(f"disjointness mod {modulus}", trials, seed, sampler, **kwargs)


def action_agreement_suite(modulus: int, seed: int, trials: int = 1000,
                           spread: Optional[int] = None, **kwargs) -> FuzzReport:
    """Closed-form move actions against the letter-by-letter action, on every move."""
    spread = spread if spread is not None else config.get('fuzz')['exponent_range']
    ring = CoeffRing(modulus)
    pieces = {move: b2_expand(B2Word(move)) for move in MOVES}

    def sampler(rng, count):
        bad = 0
        examples = []
        for _ in range(count):
            v = random_vector(rng, ring, 3, spread)
            for move, piece in pieces.items():
                if action_table(v, move) != act_row(v, piece):
                    bad += 1
                    if len(examples) < MAX_EXAMPLES:
                        examples.append(f"{v} * {move}")
        return bad, examples

    return run_chunks(f"action table mod {modulus}", trials, seed, sampler, **kwargs)


def faithful_suite(seed: int, modulus: int = 2, trials: Optional[int] = None,
                   max_length: Optional[int] = None, **kwargs) -> FuzzReport:
    """
    Random 3-braid words: identity image over Z/pZ must mean the braid is trivial.

    The extra line ``identity images`` counts how often the implication was exercised.
    """
    settings = config.get('fuzz')
    trials = trials if trials is not None else settings['faithful_trials']
    max_length = max_length if max_length is not None else settings['max_word_length']
    ring = CoeffRing(modulus)
    hits = []
    lock = threading.Lock()

    def sampler(rng, count):
        bad = 0
        examples = []
        identities = 0
        for _ in range(count):
            word = random_word(rng, 3, max_length)
            if burau_image(word, ring).is_identity():
                identities += 1
                if not is_trivial_word(word):
                    bad += 1
                    if len(examples) < MAX_EXAMPLES:
                        examples.append(f"[{word}] has identity image but is nontrivial")
        with lock:
            hits.append(identities)
        return bad, examples

    report = run_chunks(f"Burau(3) faithfulness mod {modulus}", trials, seed, sampler, **kwargs)
    report.extra.append(("identity images", str(sum(hits))))
    return report


def det_suite(seed: int, trials: int = 1000, moduli: Sequence[int] = (0, 2, 3, 5),
              max_length: Optional[int] = None, **kwargs) -> FuzzReport:
    """det rho(w) = (-t)^{e(w)} for random words on 3 and 4 strands."""
    max_length = max_length if max_length is not None else config.get('fuzz')['max_word_length']

    def sampler(rng, count):
        bad = 0
        examples = []
        for _ in range(count):
            strands = int(rng.choice([3, 4]))
            ring = CoeffRing(int(rng.choice(list(moduli))))
            word = random_word(rng, strands, max_length)
            if not check_det_identity(word, ring):
                bad += 1
                if len(examples) < MAX_EXAMPLES:
                    examples.append(f"{strands}: [{word}] over {ring}")
        return bad, examples

    return run_chunks("determinant identity", trials, seed, sampler, **kwargs)
