"""
Sparse Laurent polynomials over Z/pZ (p >= 2) or over the integers (modulus 0).

Values are immutable: every operation returns a new canonical polynomial, so
instances can be shared between threads and used as dictionary keys.
"""

import re
from dataclasses import dataclass
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple, Union

from ..errors import RingMismatchError

NEG_INFINITY = float("-inf")

# An integer exponent, or NEG_INFINITY for the zero polynomial. Python's
# float("-inf") already has the required ordering against integers.
Degree = Union[int, float]

_TERM_RE = re.compile(r"([+-]?)(\d*)(?:\*?(t)(?:\^(-?\d+))?)?")


@dataclass(frozen=True)
class CoeffRing:
    """Coefficient ring: Z/pZ for modulus p >= 2, the integers for modulus 0."""

    modulus: int

    def __post_init__(self):
        if not isinstance(self.modulus, int) or isinstance(self.modulus, bool):
            raise ValueError(f"modulus must be an integer, got {self.modulus!r}")
        if self.modulus < 0 or self.modulus == 1:
            raise ValueError(f"modulus must be 0 (integers) or at least 2, got {self.modulus}")

    @property
    def is_integers(self) -> bool:
        return self.modulus == 0

    def reduce(self, value: int) -> int:
        """Canonical representative of an integer in this ring."""
        return value % self.modulus if self.modulus else value

    def inverse(self, value: int) -> int:
        """Multiplicative inverse of a unit coefficient."""
        value = self.reduce(value)
        if self.modulus == 0:
            if value not in (1, -1):
                raise ValueError(f"{value} is not a unit of Z")
            return value
        try:
            return pow(value, -1, self.modulus)
        except ValueError:
            raise ValueError(f"{value} is not a unit of Z/{self.modulus}Z") from None

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self)

    def one(self) -> "LaurentPoly":
        return LaurentPoly.monomial(self, 1, 0)

    def t(self, exponent: int = 1) -> "LaurentPoly":
        return LaurentPoly.monomial(self, 1, exponent)

    def const(self, value: int) -> "LaurentPoly":
        return LaurentPoly.monomial(self, value, 0)

    def __str__(self) -> str:
        return "Z" if self.modulus == 0 else f"Z/{self.modulus}Z"


INTEGERS = CoeffRing(0)


class LaurentPoly:
    """Finite sum of a_m t^m with nonzero coefficients in a CoeffRing."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: CoeffRing, terms: Mapping[int, int] = None):
        self.ring = ring
        clean: Dict[int, int] = {}
        if terms:
            for exponent, coefficient in terms.items():
                value = ring.reduce(coefficient)
                if value:
                    clean[exponent] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def _from_canonical(cls, ring: CoeffRing, terms: Dict[int, int]) -> "LaurentPoly":
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        poly._hash = None
        return poly

    @classmethod
    def from_terms(cls, raw: Mapping[int, int], ring: CoeffRing) -> "LaurentPoly":
        """Normalize a raw exponent -> integer association into the ring."""
        return cls(ring, raw)

    @classmethod
    def monomial(cls, ring: CoeffRing, coefficient: int, exponent: int) -> "LaurentPoly":
        return cls(ring, {exponent: coefficient})

    @classmethod
    def parse(cls, text: str, ring: CoeffRing) -> "LaurentPoly":
        """
        Parse the rendering grammar, e.g. ``t^-2+1+2t^3`` or ``1 - t^2``.

        Whitespace is ignored and an optional ``*`` may separate a coefficient
        from ``t``. Repeated exponents are summed.
        """
        compact = "".join(text.split())
        if not compact:
            raise ValueError("empty polynomial text")
        if compact == "0":
            return cls(ring)

        raw: Dict[int, int] = {}
        pos = 0
        while pos < len(compact):
            match = _TERM_RE.match(compact, pos)
            sign, digits, variable, exponent = match.groups()
            if match.end() == pos or not (digits or variable):
                raise ValueError(f"malformed polynomial {text!r} at offset {pos}")
            if pos > 0 and not sign:
                raise ValueError(f"missing '+' or '-' before term at offset {pos} in {text!r}")
            coefficient = int(digits) if digits else 1
            if sign == "-":
                coefficient = -coefficient
            if variable:
                power = int(exponent) if exponent is not None else 1
            else:
                power = 0
            raw[power] = raw.get(power, 0) + coefficient
            pos = match.end()
        return cls(ring, raw)

    @property
    def terms(self) -> Mapping[int, int]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterable[Tuple[int, int]]:
        """(exponent, coefficient) pairs in increasing exponent order."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def degree(self) -> Degree:
        return max(self._terms) if self._terms else NEG_INFINITY

    def min_degree(self) -> Degree:
        return min(self._terms) if self._terms else NEG_INFINITY

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    def _check_ring(self, other: "LaurentPoly") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot combine polynomials over {self.ring} and {other.ring}")

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check_ring(other)
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._terms:
            return self
        if not self._terms:
            return other
        result = dict(self._terms)
        modulus = self.ring.modulus
        for exponent, coefficient in other._terms.items():
            value = result.get(exponent, 0) + coefficient
            if modulus:
                value %= modulus
            if value:
                result[exponent] = value
            else:
                result.pop(exponent, None)
        return LaurentPoly._from_canonical(self.ring, result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        modulus = self.ring.modulus
        if modulus:
            terms = {e: (-c) % modulus for e, c in self._terms.items()}
        else:
            terms = {e: -c for e, c in self._terms.items()}
        return LaurentPoly._from_canonical(self.ring, terms)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._terms or not other._terms:
            return LaurentPoly(self.ring)
        raw: Dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                raw[e1 + e2] = raw.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(self.ring, raw)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentPoly":
        if exponent >= 0:
            result = self.ring.one()
            base = self
            while exponent:
                if exponent & 1:
                    result = result * base
                base = base * base
                exponent >>= 1
            return result
        if not self.is_monomial():
            raise ValueError(f"negative power of non-monomial {self}")
        (power, coefficient), = self._terms.items()
        inverse = self.ring.inverse(coefficient)
        return LaurentPoly.monomial(self.ring, pow(inverse, -exponent), power * exponent)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by t^k."""
        if not k:
            return self
        return LaurentPoly._from_canonical(self.ring, {e + k: c for e, c in self._terms.items()})

    def reduce(self, modulus: int) -> "LaurentPoly":
        """Image in Z/modulus of a polynomial over the integers."""
        if not self.ring.is_integers and self.ring.modulus != modulus:
            raise RingMismatchError(f"cannot reduce a polynomial over {self.ring} modulo {modulus}")
        return LaurentPoly(CoeffRing(modulus), self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.modulus, tuple(sorted(self._terms.items()))))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for index, (exponent, coefficient) in enumerate(sorted(self._terms.items())):
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                variable = "t" if exponent == 1 else f"t^{exponent}"
                body = variable if magnitude == 1 else f"{magnitude}{variable}"
            if coefficient < 0:
                pieces.append("-" + body)
            else:
                pieces.append(body if index == 0 else "+" + body)
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"LaurentPoly({self}, {self.ring})"


def lp_normalize(raw: Mapping[int, int], ring: CoeffRing) -> LaurentPoly:
    return LaurentPoly.from_terms(raw, ring)


def lp_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_degree(poly: LaurentPoly) -> Degree:
    return poly.degree()


def minus_t_power(ring: CoeffRing, exponent: int) -> LaurentPoly:
    """(-t)^exponent as a monomial."""
    return LaurentPoly.monomial(ring, -1 if exponent % 2 else 1, exponent)
