"""Bit-packed vectors over F2 and exact linear algebra.

A :class:`BitVec` stores an element of F2^n in one Python integer.  String
position 1 (the leftmost coordinate ``x1``) is the most significant bit, so
the packed payload *is* the Hadamard index ``x_n + 2 x_{n-1} + ... + 2^{n-1} x_1``
and no conversion is needed between the two.

Row reduction always keeps a fully reduced basis with one pivot per row.  The
pivot of a row is its leftmost one, i.e. its highest set bit, and rows are kept
sorted by pivot from left to right.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from ..config.settings import ENUMERATION_GUARD, MAX_WIDTH
from ..utils.errors import GuardError, InputError

logger = logging.getLogger(__name__)


def _check_width(width: int) -> None:
    if not isinstance(width, int) or isinstance(width, bool):
        raise InputError(f"width must be an integer, got {width!r}")
    if not 1 <= width <= MAX_WIDTH:
        raise InputError(f"width must lie in [1, {MAX_WIDTH}], got {width}")


@dataclass(frozen=True, order=True)
class BitVec:
    """One element of F2^n.

    Ordering compares ``(width, bits)`` so vectors of one width sort by index.
    """

    width: int
    bits: int

    def __post_init__(self) -> None:
        _check_width(self.width)
        if not 0 <= self.bits < (1 << self.width):
            raise InputError(
                f"payload {self.bits} does not fit in {self.width} bits"
            )

    @classmethod
    def from_string(cls, text: str) -> "BitVec":
        """Parse a 0/1 string such as ``"1001"`` (``x1`` leftmost)."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise InputError(f"not a binary vector: {text!r}")
        return cls(len(text), int(text, 2))

    @classmethod
    def zero(cls, width: int) -> "BitVec":
        return cls(width, 0)

    @classmethod
    def unit(cls, position: int, width: int) -> "BitVec":
        """Return ``e_position`` with 1-based string positions."""
        if not 1 <= position <= width:
            raise InputError(f"unit position {position} outside 1..{width}")
        return cls(width, 1 << (width - position))

    def coordinate(self, position: int) -> int:
        """Return ``x_position`` (1-based, leftmost is 1)."""
        if not 1 <= position <= self.width:
            raise InputError(f"coordinate {position} outside 1..{self.width}")
        return (self.bits >> (self.width - position)) & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def __xor__(self, other: "BitVec") -> "BitVec":
        return add(self, other)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.width}b")


def _same_width(x: BitVec, y: BitVec) -> None:
    if x.width != y.width:
        raise InputError(f"width mismatch: {x.width} != {y.width}")


def dot(x: BitVec, y: BitVec) -> int:
    """Return the pairing ``x . y = sum x_i y_i mod 2``."""
    _same_width(x, y)
    return (x.bits & y.bits).bit_count() & 1


def add(x: BitVec, y: BitVec) -> BitVec:
    """Return the componentwise XOR of two vectors."""
    _same_width(x, y)
    return BitVec(x.width, x.bits ^ y.bits)


def index_of(x: BitVec) -> int:
    """Return the Hadamard index of ``x`` (``x1`` most significant)."""
    return x.bits


def vec_of(index: int, width: int) -> BitVec:
    """Inverse of :func:`index_of`."""
    _check_width(width)
    if not 0 <= index < (1 << width):
        raise InputError(f"index {index} outside [0, 2^{width})")
    return BitVec(width, index)


def pairing_signs(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Return the ``len(xs) x len(ys)`` table of ``(-1)^(x . y)``.

    Both inputs are ``uint64`` arrays of packed vectors of one width.
    """
    parity = np.bitwise_count(xs[:, None] & ys[None, :]) & 1
    return 1 - 2 * parity.astype(np.int64)


@dataclass(frozen=True)
class Gf2Matrix:
    """An ordered list of rows of one width.

    Read as a linear map it sends ``v`` to the vector of pairings
    ``(row_1 . v, ..., row_m . v)`` in F2^m.
    """

    width: int
    rows: Tuple[BitVec, ...] = ()

    def __post_init__(self) -> None:
        _check_width(self.width)
        object.__setattr__(self, "rows", tuple(self.rows))
        for row in self.rows:
            if row.width != self.width:
                raise InputError(
                    f"matrix row {row} has width {row.width}, expected {self.width}"
                )

    @classmethod
    def from_strings(cls, rows: Sequence[str], width: Optional[int] = None) -> "Gf2Matrix":
        vectors = [BitVec.from_string(row) for row in rows]
        if width is None:
            if not vectors:
                raise InputError("width is required for an empty matrix")
            width = vectors[0].width
        return cls(width, tuple(vectors))

    def __len__(self) -> int:
        return len(self.rows)

    def apply(self, v: BitVec) -> BitVec:
        """Return the image of ``v`` under the map defined by the rows."""
        if v.width != self.width:
            raise InputError(f"width mismatch: {v.width} != {self.width}")
        if not self.rows:
            raise InputError("cannot apply a matrix without rows")
        out = 0
        for row in self.rows:
            out = (out << 1) | dot(row, v)
        return BitVec(len(self.rows), out)

    def rank(self) -> int:
        return rref(self)[1]


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of F2^n held as a fully reduced row echelon basis."""

    width: int
    basis: Tuple[BitVec, ...] = ()

    def __post_init__(self) -> None:
        _check_width(self.width)
        object.__setattr__(self, "basis", tuple(self.basis))
        pivots = []
        for row in self.basis:
            if row.width != self.width:
                raise InputError("basis rows must share the subspace width")
            if row.is_zero:
                raise InputError("basis rows must be nonzero")
            pivots.append(row.bits.bit_length() - 1)
        if any(a <= b for a, b in zip(pivots, pivots[1:])):
            raise InputError("basis pivots must move strictly to the right")
        mask = sum(1 << p for p in pivots)
        for row, pivot in zip(self.basis, pivots):
            if row.bits & mask != 1 << pivot:
                raise InputError(f"basis row {row} is not reduced")

    @classmethod
    def full(cls, width: int) -> "Subspace":
        return cls(width, tuple(BitVec.unit(i, width) for i in range(1, width + 1)))

    @classmethod
    def trivial(cls, width: int) -> "Subspace":
        return cls(width, ())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def cardinality(self) -> int:
        return 1 << self.dimension

    @property
    def pivot_mask(self) -> int:
        """Packed mask of the pivot positions of the basis."""
        return sum(1 << (row.bits.bit_length() - 1) for row in self.basis)

    def contains(self, v: BitVec) -> bool:
        return canonical_rep(v, self).is_zero

    def __contains__(self, v: BitVec) -> bool:
        return self.contains(v)

    def intersection(self, other: "Subspace") -> "Subspace":
        if other.width != self.width:
            raise InputError(f"width mismatch: {self.width} != {other.width}")
        rows = annihilator(self).basis + annihilator(other).basis
        return nullspace(Gf2Matrix(self.width, rows))

    def member_indices(self, guard: int = ENUMERATION_GUARD) -> np.ndarray:
        """Return every member index, ascending, as a ``uint64`` array."""
        if self.dimension > guard:
            raise GuardError(
                "enumeration", guard, self.dimension,
                hint="the subspace has 2^dimension members",
            )
        members = np.zeros(1, dtype=np.uint64)
        # Adding rows from the rightmost pivot outwards keeps the list sorted
        for row in reversed(self.basis):
            members = np.concatenate([members, members ^ np.uint64(row.bits)])
        return members

    def enumerate(self, guard: int = ENUMERATION_GUARD) -> List[BitVec]:
        return enumerate_subspace(self, guard)

    def __str__(self) -> str:
        return "<" + ", ".join(str(row) for row in self.basis) + ">"


@dataclass(frozen=True)
class AffineCoset:
    """The affine space ``representative + direction``."""

    representative: BitVec
    direction: Subspace

    def __post_init__(self) -> None:
        if canonical_rep(self.representative, self.direction) != self.representative:
            raise InputError(
                f"{self.representative} is not canonical against {self.direction}"
            )

    @classmethod
    def through(cls, v: BitVec, direction: Subspace) -> "AffineCoset":
        return cls(canonical_rep(v, direction), direction)

    def contains(self, v: BitVec) -> bool:
        return canonical_rep(v, self.direction) == self.representative

    def members(self, guard: int = ENUMERATION_GUARD) -> List[BitVec]:
        offset = self.representative.bits
        indices = np.sort(self.direction.member_indices(guard) ^ np.uint64(offset))
        return [BitVec(self.representative.width, int(i)) for i in indices]


def _reduce_rows(width: int, rows: Iterable[Tuple[int, int]]) -> Tuple[dict, bool]:
    """Eliminate ``(row_bits, rhs_bit)`` pairs in the order given.

    Returns ``(pivots, consistent)`` where ``pivots`` maps a pivot bit to its
    fully reduced ``(row_bits, rhs_bit)`` pair.
    """
    pivots: dict = {}
    consistent = True
    for bits, rhs in rows:
        for pivot, (pbits, prhs) in pivots.items():
            if bits >> pivot & 1:
                bits ^= pbits
                rhs ^= prhs
        if bits == 0:
            if rhs:
                consistent = False
            continue
        pivot = bits.bit_length() - 1
        for other, (obits, orhs) in list(pivots.items()):
            if obits >> pivot & 1:
                pivots[other] = (obits ^ bits, orhs ^ rhs)
        pivots[pivot] = (bits, rhs)
    return pivots, consistent


def rref(m: Gf2Matrix) -> Tuple[Subspace, int]:
    """Return the row space of ``m`` in reduced row echelon form and its rank."""
    pivots, _ = _reduce_rows(m.width, ((row.bits, 0) for row in m.rows))
    basis = tuple(
        BitVec(m.width, pivots[p][0]) for p in sorted(pivots, reverse=True)
    )
    return Subspace(m.width, basis), len(basis)


def span(vectors: Sequence[BitVec], width: Optional[int] = None) -> Subspace:
    """Return the linear span of ``vectors``."""
    if width is None:
        if not vectors:
            raise InputError("width is required to span an empty family")
        width = vectors[0].width
    return rref(Gf2Matrix(width, tuple(vectors)))[0]


def nullspace(m: Gf2Matrix) -> Subspace:
    """Return ``{y : row . y = 0 for every row of m}``."""
    space, _ = rref(m)
    pivot_mask = space.pivot_mask
    rows = []
    for free in range(m.width):
        if pivot_mask >> free & 1:
            continue
        y = 1 << free
        for row in space.basis:
            if row.bits >> free & 1:
                y |= 1 << (row.bits.bit_length() - 1)
        rows.append(BitVec(m.width, y))
    return rref(Gf2Matrix(m.width, tuple(rows)))[0]


def annihilator(s: Subspace) -> Subspace:
    """Return ``{y : v . y = 0 for all v in s}``."""
    return nullspace(Gf2Matrix(s.width, s.basis))


def hyperplane(y: BitVec) -> Subspace:
    """Return ``H_y = {x : x . y = 0}``."""
    return nullspace(Gf2Matrix(y.width, (y,)))


def canonical_rep(v: BitVec, s: Subspace) -> BitVec:
    """Return the member of ``v + s`` whose pivot coordinates are all zero.

    It is also the member of the coset with the smallest index.
    """
    _same_width(v, BitVec.zero(s.width))
    bits = v.bits
    for row in s.basis:
        if bits >> (row.bits.bit_length() - 1) & 1:
            bits ^= row.bits
    return BitVec(v.width, bits)


def solve_affine(m: Gf2Matrix, rhs: Sequence[int]) -> Optional[BitVec]:
    """Solve ``{row_j . y = rhs_j}``.

    Returns the canonical particular solution (against ``nullspace(m)``), or
    ``None`` when the system is inconsistent.  The full solution set is the
    returned vector plus ``nullspace(m)``.
    """
    if len(rhs) != len(m.rows):
        raise InputError(
            f"right-hand side has {len(rhs)} entries for {len(m.rows)} equations"
        )
    if any(b not in (0, 1) for b in rhs):
        raise InputError("right-hand side entries must be bits")
    pivots, consistent = _reduce_rows(
        m.width, ((row.bits, b) for row, b in zip(m.rows, rhs))
    )
    if not consistent:
        return None
    y = 0
    for pivot, (_, b) in pivots.items():
        if b:
            y |= 1 << pivot
    return canonical_rep(BitVec(m.width, y), nullspace(m))


def coordinates(v: BitVec, vectors: Sequence[BitVec]) -> Optional[List[int]]:
    """Return coefficients ``alpha`` with ``v = sum alpha_i vectors_i``.

    ``vectors`` must be linearly independent.  Returns ``None`` when ``v`` is
    outside their span.
    """
    # Each reduced row remembers which of the inputs were added into it
    pivots: dict = {}
    for position, w in enumerate(vectors):
        _same_width(v, w)
        bits, mask = w.bits, 1 << position
        for pivot, (pbits, pmask) in pivots.items():
            if bits >> pivot & 1:
                bits ^= pbits
                mask ^= pmask
        if bits == 0:
            raise InputError("coordinates needs linearly independent vectors")
        pivot = bits.bit_length() - 1
        for other, (obits, omask) in list(pivots.items()):
            if obits >> pivot & 1:
                pivots[other] = (obits ^ bits, omask ^ mask)
        pivots[pivot] = (bits, mask)
    bits, mask = v.bits, 0
    for pivot, (pbits, pmask) in pivots.items():
        if bits >> pivot & 1:
            bits ^= pbits
            mask ^= pmask
    if bits:
        return None
    return [mask >> i & 1 for i in range(len(vectors))]


def enumerate_subspace(s: Subspace, guard: int = ENUMERATION_GUARD) -> List[BitVec]:
    """Return all ``2^dim`` members of ``s`` in increasing index order."""
    return [BitVec(s.width, int(i)) for i in s.member_indices(guard)]


def vectors_to_array(vectors: Iterable[BitVec]) -> np.ndarray:
    """Pack vectors into a ``uint64`` array of their indices."""
    return np.fromiter((v.bits for v in vectors), dtype=np.uint64)


def iter_vectors(width: int) -> Iterator[BitVec]:
    """Yield every vector of F2^width in index order."""
    _check_width(width)
    for i in range(1 << width):
        yield BitVec(width, i)
