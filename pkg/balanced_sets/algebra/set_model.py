"""Subsets and multisets of F2^n.

:class:`VectorSet` is a nonempty set of distinct vectors kept sorted by
index, so two sets are equal exactly when their member tuples are.
:class:`BoolMultiset` attaches a positive multiplicity to each vector of its
support.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

import numpy as np

from ..config.settings import ENUMERATION_GUARD, MULTIPLICITY_GUARD
from ..utils.errors import GuardError, InputError
from .gf2_core import (
    BitVec,
    Gf2Matrix,
    Subspace,
    add,
    rref,
    span,
    vectors_to_array,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VectorSet:
    """A nonempty set ``S`` of vectors of one width."""

    width: int
    members: Tuple[BitVec, ...]

    def __post_init__(self) -> None:
        members = tuple(self.members)
        if not members:
            raise InputError("a vector set must be nonempty")
        for v in members:
            if v.width != self.width:
                raise InputError(
                    f"member {v} has width {v.width}, expected {self.width}"
                )
        ordered = tuple(sorted(members))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise InputError(
                    f"duplicate member {a}; use a multiset to repeat vectors"
                )
        object.__setattr__(self, "members", ordered)

    @classmethod
    def of(cls, vectors: Iterable[BitVec]) -> "VectorSet":
        vectors = tuple(vectors)
        if not vectors:
            raise InputError("a vector set must be nonempty")
        return cls(vectors[0].width, vectors)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "VectorSet":
        return cls.of(BitVec.from_string(row) for row in rows)

    @classmethod
    def from_subspace(
        cls, space: Subspace, offset: Optional[BitVec] = None, guard: int = ENUMERATION_GUARD
    ) -> "VectorSet":
        """Return the members of ``offset + space`` as a set."""
        indices = space.member_indices(guard)
        if offset is not None:
            indices = np.sort(indices ^ np.uint64(offset.bits))
        return cls(space.width, tuple(BitVec(space.width, int(i)) for i in indices))

    @classmethod
    def full_space(cls, width: int, guard: int = ENUMERATION_GUARD) -> "VectorSet":
        return cls.from_subspace(Subspace.full(width), guard=guard)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, v: BitVec) -> bool:
        return v in self._lookup

    @property
    def _lookup(self) -> frozenset:
        cached = self.__dict__.get("_lookup_cache")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_lookup_cache", cached)
        return cached

    @property
    def cardinality(self) -> int:
        return len(self.members)

    @property
    def total(self) -> int:
        """Total multiplicity; every member counts once."""
        return len(self.members)

    @property
    def support(self) -> "VectorSet":
        return self

    def as_array(self) -> np.ndarray:
        return vectors_to_array(self.members)

    def weights(self) -> np.ndarray:
        return np.ones(len(self.members), dtype=np.int64)

    def as_multiset(self) -> "BoolMultiset":
        return BoolMultiset(self.width, {v: 1 for v in self.members})

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self.members) + "}"


def _check_vector(S, s: BitVec) -> None:
    if s.width != S.width:
        raise InputError(f"width mismatch: {s.width} != {S.width}")


def translate(S: VectorSet, s: BitVec) -> VectorSet:
    """Return ``s + S``."""
    _check_vector(S, s)
    return VectorSet(S.width, tuple(add(s, x) for x in S.members))


def translated_to_origin(S: VectorSet) -> VectorSet:
    """Return ``s0 + S`` for the first member ``s0``, a translate containing 0."""
    return translate(S, S.members[0])


def rank_of(S: VectorSet) -> int:
    """Return ``rk(S)``: the dimension of the span of ``s0 + S``."""
    s0 = S.members[0]
    return rref(Gf2Matrix(S.width, tuple(add(s0, x) for x in S.members)))[1]


def linear_span(S: VectorSet) -> Subspace:
    """Return ``<S>``, the span of the members themselves (no translation)."""
    return span(S.members, S.width)


def independent_subset(S: VectorSet) -> List[BitVec]:
    """Greedily pick ``rank_of(S)`` independent members in sorted order.

    ``S`` must contain the zero vector; translate it first otherwise.
    """
    if BitVec.zero(S.width) not in S:
        raise InputError("independent_subset needs 0 in S; translate the set first")
    chosen: List[BitVec] = []
    current = Subspace.trivial(S.width)
    for v in S.members:
        if v.is_zero or v in current:
            continue
        chosen.append(v)
        current = span(chosen, S.width)
    return chosen


def is_vector_space(S: VectorSet) -> bool:
    """True iff ``0 in S`` and ``S`` is closed under addition."""
    if BitVec.zero(S.width) not in S:
        return False
    r = rank_of(S)
    # A set containing 0 is a subspace iff it has as many members as its span
    return len(S) == 1 << r


def is_affine(S: VectorSet) -> bool:
    """True iff ``S`` is a coset of a linear subspace."""
    return is_vector_space(translated_to_origin(S))


def union(a: VectorSet, b: VectorSet) -> VectorSet:
    if a.width != b.width:
        raise InputError(f"width mismatch: {a.width} != {b.width}")
    return VectorSet(a.width, tuple(set(a.members) | set(b.members)))


def difference(a: VectorSet, b: VectorSet) -> VectorSet:
    """Return ``a \\ b``; raises :class:`InputError` when nothing is left."""
    if a.width != b.width:
        raise InputError(f"width mismatch: {a.width} != {b.width}")
    return VectorSet(a.width, tuple(v for v in a.members if v not in b))


def intersection(a: VectorSet, b: VectorSet) -> VectorSet:
    if a.width != b.width:
        raise InputError(f"width mismatch: {a.width} != {b.width}")
    return VectorSet(a.width, tuple(v for v in a.members if v in b))


def complement(S: VectorSet, guard: int = ENUMERATION_GUARD) -> VectorSet:
    """Return ``F2^n \\ S``."""
    if S.width > guard:
        raise GuardError("enumeration", guard, S.width, hint="complement lists 2^n vectors")
    taken = {v.bits for v in S.members}
    return VectorSet(
        S.width,
        tuple(BitVec(S.width, i) for i in range(1 << S.width) if i not in taken),
    )


def map_linear(S: VectorSet, matrix: Gf2Matrix) -> VectorSet:
    """Return the image of ``S`` under ``matrix``; the map must be injective on S."""
    if matrix.width != S.width:
        raise InputError(f"width mismatch: {matrix.width} != {S.width}")
    image = tuple(matrix.apply(v) for v in S.members)
    if len(set(image)) != len(image):
        raise InputError("the linear map is not injective on the set")
    return VectorSet(len(matrix.rows), image)


@dataclass(frozen=True, eq=False)
class BoolMultiset:
    """A Boolean multiset ``M = (F2^n, m)`` with a nonempty support."""

    width: int
    entries: Mapping[BitVec, int]

    def __post_init__(self) -> None:
        if not self.entries:
            raise InputError("a multiset must have a nonempty support")
        total = 0
        for v, count in self.entries.items():
            if v.width != self.width:
                raise InputError(f"entry {v} has width {v.width}, expected {self.width}")
            if not isinstance(count, (int, np.integer)) or count < 1:
                raise InputError(f"multiplicity of {v} must be a positive integer, got {count}")
            total += int(count)
        if total > MULTIPLICITY_GUARD:
            raise GuardError("multiplicity", MULTIPLICITY_GUARD, total)
        ordered = tuple(sorted((v, int(c)) for v, c in self.entries.items()))
        object.__setattr__(self, "entries", dict(ordered))
        object.__setattr__(self, "_items", ordered)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BoolMultiset):
            return NotImplemented
        return self.width == other.width and self._items == other._items

    def __hash__(self) -> int:
        return hash((self.width, self._items))

    def multiplicity(self, v: BitVec) -> int:
        return self.entries.get(v, 0)

    @property
    def support(self) -> VectorSet:
        return VectorSet(self.width, tuple(v for v, _ in self._items))

    @property
    def total(self) -> int:
        return sum(c for _, c in self._items)

    @property
    def cardinality(self) -> int:
        return len(self._items)

    @property
    def is_constant(self) -> bool:
        """True when every vector of the support has the same multiplicity."""
        return len({c for _, c in self._items}) == 1

    def as_array(self) -> np.ndarray:
        return vectors_to_array(v for v, _ in self._items)

    def weights(self) -> np.ndarray:
        return np.fromiter((c for _, c in self._items), dtype=np.int64)

    def items(self) -> Tuple[Tuple[BitVec, int], ...]:
        return self._items

    def translate(self, s: BitVec) -> "BoolMultiset":
        """Return ``s + M`` with ``m'(x) = m(s + x)``."""
        _check_vector(self, s)
        return BoolMultiset(self.width, {add(s, v): c for v, c in self._items})

    def map_linear(self, matrix: Gf2Matrix) -> "BoolMultiset":
        """Image under an injective linear map; multiplicities travel with vectors."""
        image = map_linear(self.support, matrix)
        return BoolMultiset(
            image.width, {matrix.apply(v): c for v, c in self._items}
        )

    def __str__(self) -> str:
        return "{" + ", ".join(f"{v}:{c}" for v, c in self._items) + "}"


def multiset_from_pairs(pairs: Iterable[Tuple[BitVec, int]]) -> BoolMultiset:
    """Accumulate ``(vector, count)`` pairs into a multiset.

    Repeated vectors add up, zero counts are dropped and negative counts are
    rejected.  An input with no positive count is rejected as empty.
    """
    counts: Dict[BitVec, int] = {}
    width = None
    for v, count in pairs:
        if width is None:
            width = v.width
        elif v.width != width:
            raise InputError(f"width mismatch: {v.width} != {width}")
        if count < 0:
            raise InputError(f"negative multiplicity {count} for {v}")
        if count:
            counts[v] = counts.get(v, 0) + count
    if not counts:
        raise InputError("the multiset has an empty support")
    return BoolMultiset(width, counts)


def as_weighted(obj) -> Tuple[int, np.ndarray, np.ndarray, int]:
    """Return ``(width, vectors, weights, total)`` for a set or a multiset."""
    if not isinstance(obj, (VectorSet, BoolMultiset)):
        raise InputError(f"expected a VectorSet or BoolMultiset, got {type(obj).__name__}")
    return obj.width, obj.as_array(), obj.weights(), obj.total
