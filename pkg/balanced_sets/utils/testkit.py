"""Witness generators and the brute-force oracle.

Random choices come from SplitMix64 so a ``(FamilySpec, seed)`` pair names the
same set in every language and on every platform::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)

(all arithmetic modulo 2^64).  Bounded draws use rejection sampling on the
top bits.

:func:`oracle_analyze` evaluates the balance sum of every ``y`` literally and
assembles its answer without the row reduction, the coset sweep or the
spectrum code, so it can catch bugs shared by those paths.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Union

from ..algebra.gf2_core import (
    BitVec,
    Gf2Matrix,
    Subspace,
    canonical_rep,
    dot,
    iter_vectors,
    span,
)
from ..algebra.set_model import BoolMultiset, VectorSet, multiset_from_pairs, rank_of
from ..analysis.analysis import fixing_set
from ..analysis.structure import BalanceStructure, Method
from ..config.settings import ORACLE_GUARD
from .errors import ConsistencyError, GuardError, InputError

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1


class SplitMix64:
    """The SplitMix64 generator (constants in the module docstring)."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def bits(self, count: int) -> int:
        """A uniform integer of ``count`` bits (``count <= 64``)."""
        if count == 0:
            return 0
        return self.next_u64() >> (64 - count)

    def below(self, bound: int) -> int:
        """A uniform integer in ``[0, bound)``."""
        if bound < 1:
            raise InputError(f"bound must be positive, got {bound}")
        if bound == 1:
            return 0
        width = (bound - 1).bit_length()
        while True:
            value = self.bits(width)
            if value < bound:
                return value

    def between(self, low: int, high: int) -> int:
        """A uniform integer in ``[low, high]``."""
        return low + self.below(high - low + 1)

    def vector(self, width: int) -> BitVec:
        return BitVec(width, self.bits(width))

    def shuffle(self, items: List) -> List:
        """Fisher-Yates shuffle in place; returns ``items``."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


class Family(str, Enum):
    SUBSPACE = "subspace"
    AFFINE = "affine"
    INDEPENDENT = "independent"
    ONE_RELATION = "one_relation"
    FIXED_BY = "fixed_by"
    RANDOM_SET = "random_set"
    RANDOM_MULTISET = "random_multiset"


@dataclass(frozen=True)
class FamilySpec:
    """Which witness to build.

    ``r`` is the rank, ``k`` the relation weight, ``f`` the fixing dimension,
    ``classes`` the number of cosets of the fixing space, ``cardinality`` the
    support size of random families and ``max_multiplicity`` the largest
    multiplicity of a random multiset.  ``canonical`` uses ``e_1, e_2, ...``
    instead of random independent vectors where a family allows it.
    """

    family: Family
    n: int
    r: Optional[int] = None
    k: Optional[int] = None
    f: Optional[int] = None
    classes: Optional[int] = None
    cardinality: Optional[int] = None
    max_multiplicity: int = 3
    seed: int = 0
    canonical: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", Family(self.family))
        if not 1 <= self.n <= 64:
            raise InputError(f"n must lie in 1..64, got {self.n}")

    def need(self, name: str) -> int:
        value = getattr(self, name)
        if value is None:
            raise InputError(f"family {self.family.value} needs {name}")
        return value


def random_independent(rng: SplitMix64, count: int, width: int) -> List[BitVec]:
    """Draw ``count`` linearly independent vectors by rejection."""
    if count > width:
        raise InputError(f"cannot draw {count} independent vectors in width {width}")
    chosen: List[BitVec] = []
    current = Subspace.trivial(width)
    while len(chosen) < count:
        v = rng.vector(width)
        if v not in current:
            chosen.append(v)
            current = span(chosen, width)
    return chosen


def random_invertible(rng: SplitMix64, n: int) -> Gf2Matrix:
    """A uniformly drawn invertible ``n x n`` matrix over F2."""
    return Gf2Matrix(n, tuple(random_independent(rng, n, n)))


def random_embedding(rng: SplitMix64, n: int, m: int) -> Gf2Matrix:
    """An injective linear map ``F2^n -> F2^m`` as ``m`` rows of width ``n``."""
    if m < n:
        raise InputError(f"no injective map from width {n} into width {m}")
    while True:
        rows = tuple(rng.vector(n) for _ in range(m))
        matrix = Gf2Matrix(n, rows)
        if matrix.rank() == n:
            return matrix


def _basis(rng: SplitMix64, spec: FamilySpec, count: int) -> List[BitVec]:
    if count > spec.n:
        raise InputError(f"rank {count} exceeds n = {spec.n}")
    if spec.canonical:
        return [BitVec.unit(i, spec.n) for i in range(1, count + 1)]
    return random_independent(rng, count, spec.n)


def _random_support(rng: SplitMix64, width: int, size: int) -> List[BitVec]:
    if not 1 <= size <= 1 << width:
        raise InputError(f"cannot pick {size} distinct vectors in width {width}")
    if size * 2 > 1 << width and width <= 20:
        pool = [BitVec(width, i) for i in range(1 << width)]
        return rng.shuffle(pool)[:size]
    chosen: Dict[int, BitVec] = {}
    while len(chosen) < size:
        v = rng.vector(width)
        chosen[v.bits] = v
    return list(chosen.values())


def _generate_fixed_by(rng: SplitMix64, spec: FamilySpec) -> VectorSet:
    f, classes = spec.need("f"), spec.need("classes")
    if f > spec.n or not 1 <= classes <= 1 << (spec.n - f):
        raise InputError(f"cannot place {classes} classes of dimension {f} in width {spec.n}")
    fixing = span(_basis(rng, spec, f), spec.n)
    reps: Dict[BitVec, None] = {}
    while len(reps) < classes:
        reps[canonical_rep(rng.vector(spec.n), fixing)] = None
    members = []
    for rep in reps:
        members.extend(VectorSet.from_subspace(fixing, rep).members)
    return VectorSet(spec.n, tuple(members))


def generate(spec: FamilySpec) -> Union[VectorSet, BoolMultiset]:
    """Build the witness named by ``spec``; the same spec always gives the same output."""
    rng = SplitMix64(spec.seed)
    n = spec.n
    family = spec.family
    if family in (Family.SUBSPACE, Family.AFFINE):
        space = span(_basis(rng, spec, spec.need("r")), n)
        offset = None
        if family is Family.AFFINE:
            offset = BitVec.unit(n, n) if spec.canonical else rng.vector(n)
        result = VectorSet.from_subspace(space, offset)
    elif family is Family.INDEPENDENT:
        result = VectorSet.of([BitVec.zero(n), *_basis(rng, spec, spec.need("r"))])
    elif family is Family.ONE_RELATION:
        r, k = spec.need("r"), spec.need("k")
        if not 2 <= k <= r:
            raise InputError(
                f"the extra vector sums k of the r basis vectors; need 2 <= k <= r, got k={k}"
            )
        basis = _basis(rng, spec, r)
        if not spec.canonical:
            rng.shuffle(basis)
        extra = BitVec(n, 0)
        for v in basis[:k]:
            extra = extra ^ v
        result = VectorSet.of([BitVec.zero(n), *basis, extra])
    elif family is Family.FIXED_BY:
        result = _generate_fixed_by(rng, spec)
    elif family is Family.RANDOM_SET:
        size = spec.cardinality or rng.between(1, min(1 << n, 64))
        result = VectorSet.of(_random_support(rng, n, size))
    elif family is Family.RANDOM_MULTISET:
        size = spec.cardinality or rng.between(1, min(1 << n, 64))
        support = _random_support(rng, n, size)
        result = multiset_from_pairs(
            (v, rng.between(1, spec.max_multiplicity)) for v in support
        )
    else:
        raise InputError(f"unknown family {family!r}")
    _check_family(spec, result)
    logger.debug("generated %s: %s", family.value, result)
    return result


def _check_family(spec: FamilySpec, result) -> None:
    """Re-verify the defining predicate of the family on the generated output."""
    family = spec.family
    ok = True
    if family in (Family.SUBSPACE, Family.AFFINE):
        ok = len(result) == 1 << spec.r and rank_of(result) == spec.r
    elif family is Family.INDEPENDENT:
        ok = len(result) == spec.r + 1 and rank_of(result) == spec.r
    elif family is Family.ONE_RELATION:
        ok = len(result) == spec.r + 2 and rank_of(result) == spec.r
    elif family is Family.FIXED_BY:
        ok = (
            len(result) == spec.classes << spec.f
            and fixing_set(result).dimension >= spec.f
        )
    if not ok:
        raise ConsistencyError(f"generated {family.value} witness fails its predicate")


def canonical_witness_one_relation(r: int, k: int) -> VectorSet:
    """``{0, e_1..e_r, 1^k 0^(r-k)}`` in ``F2^r``."""
    spec = FamilySpec(Family.ONE_RELATION, n=r, r=r, k=k, canonical=True)
    return generate(spec)


def canonical_witness_independent(r: int, n: int) -> VectorSet:
    """``{0, e_1..e_r}`` in ``F2^n``."""
    return generate(FamilySpec(Family.INDEPENDENT, n=n, r=r, canonical=True))


# Oracle ---------------------------------------------------------------------


def _reduced_basis(width: int, members: Sequence[int]) -> Subspace:
    """Reduced echelon basis of a subspace given by all of its members.

    The basis row for pivot ``p`` is the unique member whose leading bit is
    ``p`` and which is zero on every other pivot.
    """
    pivots = sorted({m.bit_length() - 1 for m in members if m}, reverse=True)
    mask = sum(1 << p for p in pivots)
    rows = []
    for p in pivots:
        for m in members:
            if m.bit_length() - 1 == p and m & mask == 1 << p:
                rows.append(BitVec(width, m))
                break
    return Subspace(width, tuple(rows))


def oracle_analyze(
    obj: Union[VectorSet, BoolMultiset], max_n: int = ORACLE_GUARD
) -> BalanceStructure:
    """Evaluate every balance sum one ``y`` at a time and assemble ``B`` and ``C``."""
    width = obj.width
    if width > max_n:
        raise GuardError("oracle", max_n, width, hint="the oracle visits all 2^n vectors")
    if isinstance(obj, BoolMultiset):
        weighted = list(obj.items())
    else:
        weighted = [(x, 1) for x in obj.members]
    total = sum(m for _, m in weighted)
    constant: List[int] = []
    balancing: List[int] = []
    for y in iter_vectors(width):
        index = y.bits
        value = sum(-m if dot(x, y) else m for x, m in weighted)
        if abs(value) == total:
            constant.append(index)
        elif value == 0 and index:
            balancing.append(index)
    # The smallest member of each coset of C is its canonical representative
    assigned = set()
    reps = []
    for index in balancing:
        if index in assigned:
            continue
        coset = {index ^ c for c in constant}
        assigned |= coset
        reps.append(BitVec(width, min(coset)))
    space = _reduced_basis(width, constant)
    return BalanceStructure(space, tuple(sorted(reps)), width - space.dimension, Method.ORACLE)
