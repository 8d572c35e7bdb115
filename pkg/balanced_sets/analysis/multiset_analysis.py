"""Balancing analysis for Boolean multisets.

Every quantity is defined as for sets with the balance sum weighted by the
multiplicities.  The constant set only depends on the support, and a shift by
a member of ``C(M)`` flips the sign of every term at once, so the coset
method of :mod:`~balanced_sets.analysis.analysis` carries over unchanged.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from ..algebra.gf2_core import BitVec, Subspace
from ..algebra.set_model import BoolMultiset, is_affine
from ..config.settings import RANK_GUARD, SPECTRUM_GUARD
from ..utils.errors import ConsistencyError, InputError
from .analysis import balance_sum, coset_structure, constant_set, is_balanced, is_constant
from .spectrum import spectrum_analysis
from .structure import BalanceStructure

logger = logging.getLogger(__name__)


def balance_sum_m(M: BoolMultiset, y: BitVec) -> int:
    """``sum m(x) (-1)^(x . y)`` over the support."""
    return balance_sum(M, y)


def is_balanced_m(M: BoolMultiset, y: BitVec) -> bool:
    """True iff ``y`` balances ``M``."""
    return is_balanced(M, y)


def is_constant_m(M: BoolMultiset, y: BitVec) -> bool:
    """True iff ``y`` fixes ``M``: the weighted sum reaches the total multiplicity."""
    return is_constant(M, y)


def constant_set_m(M: BoolMultiset) -> Subspace:
    """``C(M) = C(S_M)``."""
    return constant_set(M.support)


def balancing_set_m(
    M: BoolMultiset,
    method: str = "coset",
    max_rank: int = RANK_GUARD,
    max_n: int = SPECTRUM_GUARD,
) -> BalanceStructure:
    """Return ``B(M)`` as cosets of ``C(M)``, by the coset or the spectrum method."""
    if method == "coset":
        return coset_structure(M, max_rank)
    if method == "spectrum":
        return spectrum_analysis(M, max_n)
    raise InputError(f"unknown method {method!r}; expected 'coset' or 'spectrum'")


@dataclass(frozen=True)
class FullBalanceWitness:
    """Both sides of the fully-balanced classification of a multiset."""

    fully_balanced: bool
    affine_support: bool
    constant_multiplicity: bool
    balancing_number: int
    rank: int

    def __bool__(self) -> bool:
        return self.fully_balanced


def is_fully_balanced_m(
    M: BoolMultiset,
    method: str = "coset",
    max_rank: int = RANK_GUARD,
    max_n: int = SPECTRUM_GUARD,
) -> FullBalanceWitness:
    """Decide whether ``B(M) u C(M)`` is the whole space.

    The count ``b(M) = 2^r - 1`` must agree with the structural test
    (affine support and constant multiplicity).
    """
    structure = balancing_set_m(M, method, max_rank, max_n)
    witness = FullBalanceWitness(
        fully_balanced=structure.is_fully_balanced,
        affine_support=is_affine(M.support),
        constant_multiplicity=M.is_constant,
        balancing_number=structure.balancing_number,
        rank=structure.rank,
    )
    structural = witness.affine_support and witness.constant_multiplicity
    if witness.fully_balanced != structural:
        raise ConsistencyError(
            f"b(M) = {witness.balancing_number} with rank {witness.rank} "
            f"but affine support = {witness.affine_support}, "
            f"constant multiplicity = {witness.constant_multiplicity}"
        )
    return witness
