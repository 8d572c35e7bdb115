"""Balanced and constant sets of a subset of F2^n.

For ``S`` and a nonzero ``y`` the balance sum ``sum_{x in S} (-1)^(x . y)``
vanishes exactly when ``y`` balances ``S`` and reaches ``+-#S`` exactly when
``S`` is ``y``-constant.  The constant set ``C(S)`` is a nullspace, and the
balancing set ``B(S)`` is a union of cosets of ``C(S)``, one for every
right-hand side ``b`` of the system ``{s_j . y = b_j}`` built on independent
members of a translate of ``S`` containing 0.  One representative per system
decides the whole coset.

Every function here accepts a :class:`VectorSet`; the weighted helpers also
accept a :class:`BoolMultiset`.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence, Union

import numpy as np

from ..algebra.gf2_core import (
    BitVec,
    Gf2Matrix,
    Subspace,
    annihilator,
    canonical_rep,
    dot,
    nullspace,
    pairing_signs,
    solve_affine,
    span,
)
from ..algebra.set_model import (
    BoolMultiset,
    VectorSet,
    as_weighted,
    independent_subset,
    is_affine,
    rank_of,
    translated_to_origin,
)
from ..config.settings import RANK_GUARD, SPECTRUM_GUARD, SWEEP_CHUNK
from ..utils.errors import ConsistencyError, GuardError, InputError
from .structure import BalanceStructure, Method, QuotientView

logger = logging.getLogger(__name__)

Analyzable = Union[VectorSet, BoolMultiset]


def balance_sum(obj: Analyzable, y: BitVec) -> int:
    """Return ``sum m(x) (-1)^(x . y)`` exactly (``m = 1`` on a set)."""
    width, xs, weights, _ = as_weighted(obj)
    if y.width != width:
        raise InputError(f"width mismatch: {y.width} != {width}")
    return int(balance_sums(xs, weights, np.array([y.bits], dtype=np.uint64))[0])


def balance_sums(xs: np.ndarray, weights: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Vectorised balance sums of the weighted vectors ``xs`` for every ``y``."""
    out = np.empty(len(ys), dtype=np.int64)
    step = max(1, SWEEP_CHUNK // max(1, len(xs)))
    for start in range(0, len(ys), step):
        block = ys[start:start + step]
        out[start:start + step] = weights @ pairing_signs(xs, block)
    return out


def is_balanced(obj: Analyzable, y: BitVec) -> bool:
    """True iff ``y`` balances ``obj``; ``y`` must be nonzero."""
    if y.is_zero:
        raise InputError("the balancing test needs a nonzero vector")
    return balance_sum(obj, y) == 0


def is_constant(obj: Analyzable, y: BitVec) -> bool:
    """True iff every member of the support pairs to the same bit with ``y``."""
    return abs(balance_sum(obj, y)) == obj.total


def constant_value(S: VectorSet, y: BitVec) -> Optional[int]:
    """Return the common pairing value when ``S`` is ``y``-constant, else ``None``."""
    if not is_constant(S, y):
        return None
    return dot(S.members[0], y)


def constant_set(S: VectorSet) -> Subspace:
    """Return ``C(S)``, the nullspace of a translate of ``S`` containing 0."""
    shifted = translated_to_origin(S)
    space = nullspace(Gf2Matrix(S.width, shifted.members))
    logger.debug("C(S) has dimension %d in width %d", space.dimension, S.width)
    return space


def _check_rank(rank: int, max_rank: int, width: int) -> None:
    if rank > max_rank:
        hint = None
        if width <= SPECTRUM_GUARD:
            hint = "use the spectrum method (--method spectrum) for this width"
        raise GuardError("rank", max_rank, rank, flag="--max-rank", hint=hint)


def _combinations(generators: Sequence[BitVec]) -> np.ndarray:
    """All XOR combinations of ``generators``; entry ``i`` uses the bits of ``i``."""
    out = np.zeros(1, dtype=np.uint64)
    for g in reversed(generators):
        out = np.concatenate([out, out ^ np.uint64(g.bits)])
    return out


def _system_solutions(rows: Sequence[BitVec], width: int) -> List[BitVec]:
    """Canonical solutions of ``{rows . y = e_j}`` for each unit right-hand side.

    The solution for any right-hand side ``b`` is the XOR of the entries
    selected by ``b``: canonical reduction against the nullspace is linear.
    """
    matrix = Gf2Matrix(width, tuple(rows))
    solutions = []
    for j in range(len(rows)):
        rhs = [0] * len(rows)
        rhs[j] = 1
        y = solve_affine(matrix, rhs)
        if y is None:
            raise ConsistencyError("independent rows produced an inconsistent system")
        solutions.append(y)
    return solutions


def _balanced_candidates(obj: Analyzable, candidates: np.ndarray) -> np.ndarray:
    _, xs, weights, _ = as_weighted(obj)
    sums = balance_sums(xs, weights, candidates)
    return np.sort(candidates[sums == 0])


def _to_vectors(indices: np.ndarray, width: int) -> tuple:
    return tuple(BitVec(width, int(i)) for i in indices)


def coset_structure(obj: Analyzable, max_rank: int = RANK_GUARD) -> BalanceStructure:
    """Sweep the ``2^r`` systems of the coset method for a set or multiset."""
    support = obj.support
    shifted = translated_to_origin(support)
    rows = independent_subset(shifted)
    r = len(rows)
    _check_rank(r, max_rank, obj.width)
    space = nullspace(Gf2Matrix(obj.width, tuple(rows)))
    if obj.total % 2:
        logger.info("odd total multiplicity %d: nothing balances it", obj.total)
        return BalanceStructure(space, (), r, Method.COSET)
    solutions = _system_solutions(rows, obj.width)
    # Index 0 is b = 0, the constant set itself
    candidates = _combinations(solutions)[1:]
    logger.debug("coset sweep over %d systems", len(candidates))
    reps = _balanced_candidates(obj, candidates)
    structure = BalanceStructure(space, _to_vectors(reps, obj.width), r, Method.COSET)
    logger.info(
        "coset method: rank %d, dim C %d, b = %d",
        r, space.dimension, structure.balancing_number,
    )
    return structure


def balancing_set(S: VectorSet, max_rank: int = RANK_GUARD) -> BalanceStructure:
    """Return ``B(S)`` as canonical cosets of ``C(S)`` (coset method)."""
    return coset_structure(S, max_rank)


def balancing_number(S: VectorSet, max_rank: int = RANK_GUARD) -> int:
    """Return ``b(S)``, the number of cosets of ``C(S)`` making up ``B(S)``."""
    return balancing_set(S, max_rank).balancing_number


def is_fully_balanced(S: VectorSet, max_rank: int = RANK_GUARD) -> bool:
    """True iff ``B(S) u C(S)`` is the whole space.

    Computed as ``b(S) = 2^r - 1`` and checked against the affine test; the two
    must agree.
    """
    structure = balancing_set(S, max_rank)
    by_count = structure.is_fully_balanced
    by_shape = is_affine(S)
    if by_count != by_shape:
        raise ConsistencyError(
            f"b(S) = {structure.balancing_number} with rank {structure.rank} "
            f"but is_affine(S) = {by_shape}"
        )
    return by_count


def fixing_set(S: VectorSet) -> Subspace:
    """Return ``F(S) = {x : x + S = S}``.

    After translating ``S`` to contain 0 every fixing vector is a member, so
    only members are tested.  Fixing vectors form a subspace, so members
    already in the span of those found are skipped without a test.
    """
    shifted = translated_to_origin(S)
    members = {x.bits for x in shifted}
    found: List[BitVec] = []
    current = Subspace.trivial(S.width)
    for f in shifted.members:
        if f.is_zero or current.contains(f):
            continue
        if all((x ^ f.bits) in members for x in members):
            found.append(f)
            current = span(found, S.width)
    logger.debug("F(S) has dimension %d", current.dimension)
    return current


def fixing_set_by_intersection(S: VectorSet) -> Subspace:
    """Return ``F(S)`` as the intersection of the translates ``x + S``, ``x in S``."""
    members = [x.bits for x in S]
    common = {members[0] ^ y for y in members}
    for x in members[1:]:
        common &= {x ^ y for y in members}
    return span([BitVec(S.width, v) for v in sorted(common)], S.width)


def quotient(S: VectorSet, fixing: Optional[Subspace] = None) -> QuotientView:
    """Return ``S / F(S)`` with one canonical member of ``S`` per class.

    Pass ``fixing`` when ``F(S)`` is already known.
    """
    if fixing is None:
        fixing = fixing_set(S)
    s0 = S.members[0]
    reps = sorted({
        canonical_rep(x ^ s0, fixing) ^ s0 for x in S.members
    })
    view = QuotientView(fixing, annihilator(fixing), VectorSet(S.width, tuple(reps)))
    if len(reps) * fixing.cardinality != len(S):
        raise ConsistencyError(
            f"{len(reps)} classes of size {fixing.cardinality} do not cover {len(S)} members"
        )
    return view


def balancing_complement_of_h(S: VectorSet, fixing: Optional[Subspace] = None) -> bool:
    """True when ``#S`` is not a multiple of ``2^(f+1)``, so ``B(S) = F2^n \\ H``."""
    f = (fixing if fixing is not None else fixing_set(S)).dimension
    return len(S) % (1 << (f + 1)) != 0


def balancing_via_quotient(
    S: VectorSet, max_rank: int = RANK_GUARD, fixing: Optional[Subspace] = None
) -> BalanceStructure:
    """Return ``B(S)`` through the fixing set.

    Every ``y`` outside ``H`` balances ``S``; inside ``H`` a vector balances
    ``S`` iff it balances the class representatives ``S_F``.  The result is
    the same structure :func:`balancing_set` returns.
    """
    view = quotient(S, fixing)
    _check_rank(rank_of(view.representatives), max_rank, S.width)
    shifted = translated_to_origin(S)
    fixing_rows = list(view.fixing_space.basis)
    # Extend a basis of F to a basis of span(s0 + S) using members
    rows = list(fixing_rows)
    current = view.fixing_space
    for x in shifted.members:
        if not x.is_zero and x not in current:
            rows.append(x)
            current = span(rows, S.width)
    r, f = len(rows), len(fixing_rows)
    _check_rank(r, max_rank, S.width)
    space = nullspace(Gf2Matrix(S.width, tuple(rows)))
    solutions = _system_solutions(rows, S.width)
    # Combinations with a nonzero F part land outside H
    combos = _combinations(solutions)
    outside_h = combos.reshape(1 << f, -1)[1:].ravel()
    inside_h = combos[1:1 << (r - f)]
    if len(S) % (1 << (f + 1)):
        logger.info("#S = %d is not a multiple of 2^%d: B(S) is the complement of H", len(S), f + 1)
        quotient_part = np.zeros(0, dtype=np.uint64)
    else:
        quotient_part = _balanced_candidates(view.representatives, inside_h)
    reps = np.sort(np.concatenate([outside_h, quotient_part]))
    structure = BalanceStructure(space, _to_vectors(reps, S.width), r, Method.QUOTIENT)
    logger.info(
        "quotient method: r = %d, f = %d, complement of H %d + quotient %d",
        r, f, len(outside_h), len(quotient_part),
    )
    return structure
