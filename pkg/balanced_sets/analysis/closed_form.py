"""Closed-form balancing numbers for structured sets.

The predictors cover vector and affine spaces, ``{0}`` plus an independent
family, ``{0}`` plus an independent family and one extra relation, and sets
with a nontrivial fixing space.  :func:`closed_form_checks` recognises which
of these shapes a given set has and compares each prediction with a computed
:class:`~balanced_sets.analysis.structure.BalanceStructure`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from ..algebra.gf2_core import Subspace, coordinates
from ..algebra.set_model import (
    VectorSet,
    independent_subset,
    is_affine,
    is_vector_space,
    rank_of,
    translated_to_origin,
)
from ..config.settings import RANK_GUARD
from ..utils.errors import InputError
from .analysis import balancing_complement_of_h, balancing_via_quotient, fixing_set
from .structure import BalanceStructure

logger = logging.getLogger(__name__)


def binom(a: int, b: int) -> int:
    """Binomial coefficient that is 0 outside ``0 <= b <= a``."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


def e(x: int) -> int:
    """``(1 + (-1)^x) / 2``: 1 for even ``x``, 0 for odd."""
    return 1 if x % 2 == 0 else 0


@dataclass(frozen=True)
class OneRelationParams:
    """Rank ``r`` and weight ``k`` of the single extra relation."""

    r: int
    k: int

    def __post_init__(self) -> None:
        if self.r < 1:
            raise InputError(f"rank must be at least 1, got {self.r}")
        if not 1 <= self.k <= self.r:
            raise InputError(f"relation weight must lie in 1..{self.r}, got {self.k}")

    def phi(self) -> Tuple[int, int]:
        """Summation bounds ``(phi1, phi2)`` for the relation weight."""
        r, k = self.r, self.k
        half = r // 2
        if 2 * k < r:
            return 0, k
        if 2 * k == r:
            return 1, k
        return k - half + e(k - half), half + e(half + 1)


def predict_subspace(r: int) -> int:
    """``b(S) = 2^r - 1`` for a vector or affine space of rank ``r``."""
    if r < 0:
        raise InputError(f"rank must be nonnegative, got {r}")
    return (1 << r) - 1


def predict_independent(r: int, n: int) -> Tuple[int, int]:
    """``(b(S), #B(S))`` for ``S = {0} u {r independent vectors}`` in ``F2^n``."""
    if not 0 <= r <= n:
        raise InputError(f"need 0 <= r <= n, got r={r}, n={n}")
    if r % 2 == 0:
        return 0, 0
    b = comb(r, (r + 1) // 2)
    return b, b << (n - r)


def predict_one_relation(p: OneRelationParams) -> int:
    """``b(S)`` for ``{0, s_1..s_r, s}`` where ``s`` sums ``k`` of the ``s_i``."""
    if p.r % 2:
        raise InputError(f"the one-relation count needs an even rank, got {p.r}")
    lo, hi = p.phi()
    if lo > hi:
        return 0
    half = p.r // 2
    return sum(
        binom(p.k, i) * binom(p.r - p.k, half + e(i) - i) for i in range(lo, hi + 1)
    )


def predict_fixing(r: int, f: int) -> int:
    """``2^(r-f) (2^f - 1)``: the cosets of ``C(S)`` lying outside ``H``."""
    if not 0 <= f <= r:
        raise InputError(f"need 0 <= f <= r, got r={r}, f={f}")
    return (1 << (r - f)) * ((1 << f) - 1)


@dataclass(frozen=True)
class FamilyMatch:
    """A structured shape recognised in a set, with its parameters."""

    family: str
    r: int
    k: Optional[int] = None
    f: Optional[int] = None


@dataclass(frozen=True)
class ClosedFormCheck:
    name: str
    predicted: int
    actual: int

    @property
    def matches(self) -> bool:
        return self.predicted == self.actual


def relation_weight(S: VectorSet) -> Optional[int]:
    """Return ``k`` when ``s0 + S`` is ``{0}``, ``r`` independent vectors and one more.

    ``k`` counts the independent vectors that sum to the extra one.
    """
    r = rank_of(S)
    if len(S) != r + 2:
        return None
    shifted = translated_to_origin(S)
    basis = independent_subset(shifted)
    chosen = set(basis)
    extra = [x for x in shifted.members if not x.is_zero and x not in chosen]
    alpha = coordinates(extra[0], basis)
    return sum(alpha) if alpha is not None else None


def detect_families(S: VectorSet, fixing: Optional[Subspace] = None) -> List[FamilyMatch]:
    """Recognise every structured shape ``S`` has; ``fixing`` is ``F(S)`` if known."""
    r = rank_of(S)
    found: List[FamilyMatch] = []
    if is_vector_space(S):
        found.append(FamilyMatch("subspace", r))
    elif is_affine(S):
        found.append(FamilyMatch("affine", r))
    if len(S) == r + 1:
        found.append(FamilyMatch("independent", r))
    k = relation_weight(S)
    if k is not None:
        found.append(FamilyMatch("one_relation", r, k=k))
    f = (fixing if fixing is not None else fixing_set(S)).dimension
    if f > 0:
        found.append(FamilyMatch("fixing", r, f=f))
    logger.debug("families of %s: %s", S, [m.family for m in found])
    return found


def closed_form_checks(
    S: VectorSet,
    structure: BalanceStructure,
    max_rank: int = RANK_GUARD,
    fixing: Optional[Subspace] = None,
) -> List[ClosedFormCheck]:
    """Compare ``structure`` with every closed form whose hypothesis ``S`` meets."""
    if fixing is None:
        fixing = fixing_set(S)
    b = structure.balancing_number
    checks = [ClosedFormCheck("parity", 0 if len(S) % 2 else b, b)]
    for match in detect_families(S, fixing):
        if match.family in ("subspace", "affine"):
            checks.append(ClosedFormCheck(match.family, predict_subspace(match.r), b))
        elif match.family == "independent":
            predicted, count = predict_independent(match.r, S.width)
            checks.append(ClosedFormCheck("independent", predicted, b))
            checks.append(
                ClosedFormCheck("independent_cardinality", count, structure.balancing_cardinality)
            )
        elif match.family == "one_relation" and match.r % 2 == 0:
            predicted = predict_one_relation(OneRelationParams(match.r, match.k))
            checks.append(ClosedFormCheck("one_relation", predicted, b))
        elif match.family == "fixing":
            if balancing_complement_of_h(S, fixing):
                checks.append(ClosedFormCheck("fixing", predict_fixing(match.r, match.f), b))
            if match.r <= max_rank:
                via_quotient = balancing_via_quotient(S, max_rank, fixing).balancing_number
                checks.append(ClosedFormCheck("quotient_decomposition", via_quotient, b))
    for check in checks:
        if not check.matches:
            logger.warning(
                "closed form %s predicts %d, computed %d",
                check.name, check.predicted, check.actual,
            )
    return checks
