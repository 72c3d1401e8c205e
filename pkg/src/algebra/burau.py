"""
Reduced Burau representations of B_3 and B_4 acting on row vectors from the right.

Generator sigma_i changes only coordinate i of a row vector v:

    v * sigma_i      : v_i -> t v_{i-1} - t v_i + v_{i+1}
    v * sigma_i^{-1} : v_i -> v_{i-1} - t^{-1} v_i + t^{-1} v_{i+1}

(missing neighbours count as zero). The matrices built by ``generator`` are
exactly the displayed ones, e.g. rho_4(sigma_1) = [[-t,0,0],[1,1,0],[0,0,1]].
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from .laurent import CoeffRing, LaurentPoly, minus_t_power

logger = logging.getLogger(__name__)

SUPPORTED_STRANDS = (3, 4)

Entry = Union[LaurentPoly, int, str]


def _check_strands(strands: int) -> None:
    if strands not in SUPPORTED_STRANDS:
        raise ValueError(
            f"Burau representation is only provided for 3 and 4 strands, got {strands}"
        )


def _as_poly(value: Entry, ring: CoeffRing) -> LaurentPoly:
    if isinstance(value, LaurentPoly):
        if value.ring != ring:
            raise ValueError(f"entry {value} is over {value.ring}, expected {ring}")
        return value
    if isinstance(value, str):
        return LaurentPoly.parse(value, ring)
    return ring.const(value)


def _updated_coordinate(coords: Sequence[LaurentPoly], index: int, sign: int) -> LaurentPoly:
    """New value of coordinate ``index`` (1-based) after acting by sigma_index^sign."""
    dim = len(coords)
    current = coords[index - 1]
    if sign > 0:
        value = -current.shift(1)
        if index > 1:
            value = value + coords[index - 2].shift(1)
        if index < dim:
            value = value + coords[index]
    else:
        value = -current.shift(-1)
        if index > 1:
            value = value + coords[index - 2]
        if index < dim:
            value = value + coords[index].shift(-1)
    return value


@dataclass(frozen=True)
class RowVector:
    """Row vector of Laurent polynomials; (f, g) for B_3, (f, g, h) for B_4."""

    coords: Tuple[LaurentPoly, ...]

    def __post_init__(self):
        if not self.coords:
            raise ValueError("row vector must have at least one coordinate")
        ring = self.coords[0].ring
        if any(c.ring != ring for c in self.coords):
            raise ValueError("row vector coordinates must share one ring")

    @classmethod
    def of(cls, ring: CoeffRing, *values: Entry) -> "RowVector":
        return cls(tuple(_as_poly(v, ring) for v in values))

    @classmethod
    def basis(cls, ring: CoeffRing, dim: int, index: int) -> "RowVector":
        """Standard basis vector e_index (1-based)."""
        return cls.of(ring, *[1 if k == index else 0 for k in range(1, dim + 1)])

    @classmethod
    def parse(cls, text: str, ring: CoeffRing) -> "RowVector":
        body = text.strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"row vector must be parenthesised: {text!r}")
        parts = [p for p in body[1:-1].split(",")]
        return cls(tuple(LaurentPoly.parse(p, ring) for p in parts))

    @property
    def ring(self) -> CoeffRing:
        return self.coords[0].ring

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[LaurentPoly]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> LaurentPoly:
        return self.coords[index]

    def apply_generator(self, index: int, sign: int) -> "RowVector":
        if not 1 <= index <= len(self.coords):
            raise ValueError(f"generator index {index} out of range for dimension {len(self.coords)}")
        coords = list(self.coords)
        coords[index - 1] = _updated_coordinate(self.coords, index, sign)
        return RowVector(tuple(coords))

    def __matmul__(self, matrix: "BurauMatrix") -> "RowVector":
        if len(self.coords) != matrix.size:
            raise ValueError(f"dimension mismatch: vector {len(self.coords)}, matrix {matrix.size}")
        ring = self.ring
        result = []
        for j in range(matrix.size):
            total = ring.zero()
            for k in range(matrix.size):
                if self.coords[k] and matrix.rows[k][j]:
                    total = total + self.coords[k] * matrix.rows[k][j]
            result.append(total)
        return RowVector(tuple(result))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class BurauMatrix:
    """Square matrix of Laurent polynomials over one CoeffRing."""

    ring: CoeffRing
    rows: Tuple[Tuple[LaurentPoly, ...], ...]

    def __post_init__(self):
        size = len(self.rows)
        for row in self.rows:
            if len(row) != size:
                raise ValueError("Burau matrix must be square")
            for entry in row:
                if entry.ring != self.ring:
                    raise ValueError(f"entry {entry} is over {entry.ring}, expected {self.ring}")

    @classmethod
    def from_entries(cls, ring: CoeffRing, entries: Iterable[Iterable[Entry]]) -> "BurauMatrix":
        return cls(ring, tuple(tuple(_as_poly(e, ring) for e in row) for row in entries))

    @classmethod
    def identity(cls, size: int, ring: CoeffRing) -> "BurauMatrix":
        return cls.from_entries(ring, [[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @property
    def size(self) -> int:
        return len(self.rows)

    @property
    def strands(self) -> int:
        return self.size + 1

    def __getitem__(self, position: Tuple[int, int]) -> LaurentPoly:
        i, j = position
        return self.rows[i][j]

    def __matmul__(self, other: "BurauMatrix") -> "BurauMatrix":
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} and {other.ring}")
        if self.size != other.size:
            raise ValueError(f"size mismatch: {self.size} and {other.size}")
        return BurauMatrix(self.ring, tuple((RowVector(row) @ other).coords for row in self.rows))

    def apply_generator(self, index: int, sign: int) -> "BurauMatrix":
        """Right-multiply by the image of sigma_index^sign."""
        return BurauMatrix(self.ring, tuple(RowVector(row).apply_generator(index, sign).coords
                                            for row in self.rows))

    def is_identity(self) -> bool:
        for i, row in enumerate(self.rows):
            for j, entry in enumerate(row):
                if i == j:
                    if not entry.is_one():
                        return False
                elif entry:
                    return False
        return True

    def determinant(self) -> LaurentPoly:
        m = self.rows
        if self.size == 1:
            return m[0][0]
        if self.size == 2:
            return m[0][0] * m[1][1] - m[0][1] * m[1][0]
        if self.size == 3:
            return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
        raise ValueError(f"determinant not provided for size {self.size}")

    def reduce(self, modulus: int) -> "BurauMatrix":
        """Reduce a matrix over Z to Z/modulus."""
        ring = CoeffRing(modulus)
        return BurauMatrix(ring, tuple(tuple(e.reduce(modulus) for e in row) for row in self.rows))

    def key(self) -> str:
        """Canonical text key; equal matrices give equal keys."""
        return f"{self.ring.modulus}|" + ";".join(",".join(str(e) for e in row) for row in self.rows)

    def render(self) -> str:
        cells = [[str(e) for e in row] for row in self.rows]
        width = max(len(c) for row in cells for c in row)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells)

    @classmethod
    def parse_grid(cls, text: str, ring: CoeffRing) -> "BurauMatrix":
        """Inverse of ``render``."""
        rows: List[List[str]] = []
        for line in text.strip().splitlines():
            line = line.strip()
            if not (line.startswith("[") and line.endswith("]")):
                raise ValueError(f"malformed matrix row: {line!r}")
            rows.append(line[1:-1].split())
        return cls.from_entries(ring, rows)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.strands,
            "modulus": self.ring.modulus,
            "entries": [[str(e) for e in row] for row in self.rows],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "BurauMatrix":
        try:
            ring = CoeffRing(int(data["modulus"]))
            matrix = cls.from_entries(ring, data["entries"])
        except KeyError as e:
            raise ValueError(f"structured matrix is missing field {e}") from None
        if matrix.strands != data.get("n", matrix.strands):
            raise ValueError(f"entries give {matrix.strands} strands but n = {data['n']}")
        return matrix

    def __str__(self) -> str:
        return self.render()


def generator(strands: int, index: int, sign: int, ring: CoeffRing) -> BurauMatrix:
    """Image of sigma_index^sign under rho_strands over ``ring``."""
    _check_strands(strands)
    if not 1 <= index <= strands - 1:
        raise ValueError(f"generator index {index} out of range for {strands} strands")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return _generator_table(strands, ring)[(index, sign)]


@lru_cache(maxsize=None)
def _generator_table(strands: int, ring: CoeffRing) -> Dict[Tuple[int, int], BurauMatrix]:
    size = strands - 1
    t = ring.t()
    table: Dict[Tuple[int, int], BurauMatrix] = {}
    for i in range(1, size + 1):
        for sign in (1, -1):
            entries: List[List[LaurentPoly]] = [
                [ring.one() if r == c else ring.zero() for c in range(size)] for r in range(size)
            ]
            col = i - 1
            if sign > 0:
                entries[col][col] = -t
                above, below = t, ring.one()
            else:
                entries[col][col] = -ring.t(-1)
                above, below = ring.one(), ring.t(-1)
            if col > 0:
                entries[col - 1][col] = above
            if col < size - 1:
                entries[col + 1][col] = below
            table[(i, sign)] = BurauMatrix(ring, tuple(tuple(r) for r in entries))

    identity = BurauMatrix.identity(size, ring)
    for i in range(1, size + 1):
        forward, backward = table[(i, 1)], table[(i, -1)]
        if not ((forward @ backward) == identity and (backward @ forward) == identity):
            logger.error("inverse generator check failed for sigma_%d over %s", i, ring)
            raise RuntimeError(f"precomputed inverse of sigma_{i} is wrong over {ring}")
    return table


def burau_image(word, ring: CoeffRing) -> BurauMatrix:
    """Ordered product of generator images; letters act left to right."""
    _check_strands(word.strands)
    _generator_table(word.strands, ring)
    matrix = BurauMatrix.identity(word.strands - 1, ring)
    for letter in word.letters:
        matrix = matrix.apply_generator(abs(letter), 1 if letter > 0 else -1)
    return matrix


def act_row(vector: RowVector, word) -> RowVector:
    """v * word, one letter at a time."""
    if len(vector) != word.strands - 1:
        raise ValueError(
            f"dimension mismatch: vector of length {len(vector)} for a {word.strands}-strand braid"
        )
    for letter in word.letters:
        vector = vector.apply_generator(abs(letter), 1 if letter > 0 else -1)
    return vector


def is_identity(matrix: BurauMatrix) -> bool:
    return matrix.is_identity()


def check_det_identity(word, ring: CoeffRing) -> bool:
    """det rho(word) == (-t)^{e(word)} in ``ring``."""
    determinant = burau_image(word, ring).determinant()
    return determinant == minus_t_power(ring, word.exponent_sum())
