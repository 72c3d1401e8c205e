"""Known elements of the kernels of Burau(4) over Z/2 and Z/3."""

import re
from dataclasses import dataclass
from typing import Dict, List

from ..algebra.burau import burau_image
from ..algebra.laurent import CoeffRing
from ..braids.braid import BraidWord

_ALPHA_LETTERS = (
    2, 2, 1, -2, -2, -3, -3,
    2, -1, -1, -1, -2,
    3, -2, 1, 2, 2, -3, -3, -1, -2, -2,
    1, -2, -2, 1, 3, -2, 3, 2, 2, 2,
    1, -2, 3, -2, 1, -2, -2, 1,
    3, 3, 2, -3,
)

_ALPHA_PRIME_LETTERS = (
    2, 2, 1, -2, -1, -1, -1, -2, 1, 1, -2, -2,
    -1, -1, 2, 2, 2, -1, 2, -1, 2, 2,
)

_ALPHA_K = re.compile(r"alpha_(-?\d+)$")


@dataclass(frozen=True)
class KernelExample:
    name: str
    word: BraidWord
    modulus: int
    note: str = ""

    def in_kernel(self) -> bool:
        return burau_image(self.word, CoeffRing(self.modulus)).is_identity()


def alpha_base(k: int) -> BraidWord:
    """sigma_1^-1 sigma_2^k sigma_1 sigma_3 sigma_2^-k sigma_3^-1"""
    if k == 0:
        raise ValueError("alpha_k is defined for k != 0")
    sigma2 = BraidWord(4, (2,))
    return (BraidWord(4, (-1,)) * sigma2.power(k) * BraidWord(4, (1, 3))
            * sigma2.power(-k) * BraidWord(4, (-3,)))


def alpha_k(k: int) -> KernelExample:
    """Fourth power of ``alpha_base(k)``, in the kernel mod 2."""
    return KernelExample(
        f"alpha_{k}", alpha_base(k).power(4), 2,
        f"(s1^-1 s2^{k} s1 s3 s2^{-k} s3^-1)^4; forgetting strands 2 and 4 leaves s1^{4 * k}",
    )


def cooper_long_alpha() -> KernelExample:
    return KernelExample(
        "alpha", BraidWord(4, _ALPHA_LETTERS), 3,
        "nontrivial element of the kernel mod 3; forgetting strand 4 leaves alpha_prime",
    )


def cooper_long_alpha_prime() -> BraidWord:
    """The 3-braid left after forgetting strand 4 of ``alpha``."""
    return BraidWord(3, _ALPHA_PRIME_LETTERS)


def alpha_prime_closed_form() -> BraidWord:
    """(sigma_2 sigma_1^-1 sigma_2 sigma_1^-1 sigma_2^2)^3 Delta_3^-2"""
    return BraidWord(3, (2, -1, 2, -1, 2, 2)).power(3) * BraidWord.delta(3).power(-2)


def named_word(name: str) -> BraidWord:
    """Resolve ``alpha_<k>``, ``alpha`` or ``alpha_prime`` to its braid word."""
    if name == "alpha":
        return cooper_long_alpha().word
    if name == "alpha_prime":
        return cooper_long_alpha_prime()
    found = _ALPHA_K.match(name)
    if found:
        return alpha_k(int(found.group(1))).word
    raise ValueError(f"unknown example {name!r}; expected alpha_<k>, alpha or alpha_prime")


def named_example(name: str) -> KernelExample:
    if name == "alpha":
        return cooper_long_alpha()
    found = _ALPHA_K.match(name)
    if found:
        return alpha_k(int(found.group(1)))
    raise ValueError(f"{name!r} is not a kernel example; expected alpha_<k> or alpha")


def default_examples(ks=(1, 2, 3, 4)) -> List[KernelExample]:
    return [alpha_k(k) for k in ks] + [cooper_long_alpha()]


def example_words() -> Dict[str, BraidWord]:
    """Every named word, for the word-file listing."""
    words = {example.name: example.word for example in default_examples()}
    words["alpha_prime"] = cooper_long_alpha_prime()
    return words
