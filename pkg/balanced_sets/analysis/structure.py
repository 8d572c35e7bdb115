"""Result types shared by the analysis paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

import numpy as np
import pandas as pd

from ..algebra.gf2_core import AffineCoset, BitVec, Subspace, canonical_rep
from ..algebra.set_model import VectorSet
from ..config.settings import ENUMERATE_MEMBERS_LIMIT
from ..utils.errors import GuardError, InputError


class Method(str, Enum):
    """How a :class:`BalanceStructure` was obtained."""

    COSET = "coset"
    QUOTIENT = "quotient"
    SPECTRUM = "spectrum"
    ORACLE = "oracle"


@dataclass(frozen=True)
class BalanceStructure:
    """``C(S)`` plus one canonical representative per coset of ``B(S)``.

    ``B(S)`` is never stored explicitly: it is the union of
    ``rep + constant_space`` over ``balancing_reps``.  Equality ignores
    ``method`` so results of different paths compare directly.
    """

    constant_space: Subspace
    balancing_reps: Tuple[BitVec, ...]
    rank: int
    method: Method = field(default=Method.COSET, compare=False)

    def __post_init__(self) -> None:
        reps = tuple(self.balancing_reps)
        object.__setattr__(self, "balancing_reps", reps)
        space = self.constant_space
        if self.rank != space.width - space.dimension:
            raise InputError(
                f"rank {self.rank} does not match dim C = {space.dimension} in width {space.width}"
            )
        if list(reps) != sorted(set(reps)):
            raise InputError("balancing representatives must be sorted and distinct")
        for rep in reps:
            if rep.is_zero:
                raise InputError("the zero coset never balances a nonempty set")
            if canonical_rep(rep, space) != rep:
                raise InputError(f"representative {rep} is not canonical")
        if len(reps) > (1 << self.rank) - 1:
            raise InputError("more balancing cosets than nonzero classes")

    @property
    def width(self) -> int:
        return self.constant_space.width

    @property
    def balancing_number(self) -> int:
        """``b(S) = #B(S) / #C(S)``."""
        return len(self.balancing_reps)

    @property
    def balancing_cardinality(self) -> int:
        """``#B(S)``."""
        return self.balancing_number * self.constant_space.cardinality

    @property
    def is_fully_balanced(self) -> bool:
        return self.balancing_number == (1 << self.rank) - 1

    def cosets(self) -> List[AffineCoset]:
        return [AffineCoset(rep, self.constant_space) for rep in self.balancing_reps]

    def balances(self, y: BitVec) -> bool:
        """Membership test ``y in B(S)`` without enumerating ``B(S)``."""
        coset = AffineCoset.through(y, self.constant_space)
        return coset.representative in set(self.balancing_reps)

    def enumerate_members(self, limit: int = ENUMERATE_MEMBERS_LIMIT) -> List[BitVec]:
        """Return every member of ``B(S)`` in index order."""
        if self.balancing_cardinality > limit:
            raise GuardError(
                "enumeration", limit, self.balancing_cardinality,
                hint="B(S) is only listed up to this many members",
            )
        if not self.balancing_reps:
            return []
        directions = self.constant_space.member_indices(guard=self.constant_space.dimension)
        reps = np.fromiter((rep.bits for rep in self.balancing_reps), dtype=np.uint64)
        members = np.sort((reps[:, None] ^ directions[None, :]).ravel())
        return [BitVec(self.width, int(i)) for i in members]

    def to_frame(self) -> pd.DataFrame:
        """Tabulate the balancing cosets, one row per representative."""
        return pd.DataFrame(
            {
                "representative": [str(rep) for rep in self.balancing_reps],
                "index": [rep.bits for rep in self.balancing_reps],
                "coset_size": [self.constant_space.cardinality] * len(self.balancing_reps),
            },
            columns=["representative", "index", "coset_size"],
        )


@dataclass(frozen=True)
class QuotientView:
    """``S / F(S)``: the fixing space, ``H`` and one member of ``S`` per class."""

    fixing_space: Subspace
    h_space: Subspace
    representatives: VectorSet

    @property
    def f(self) -> int:
        return self.fixing_space.dimension

    def classes(self, S: VectorSet) -> Dict[BitVec, List[BitVec]]:
        """Group the members of ``S`` by the representative of their class."""
        lookup = {
            canonical_rep(rep, self.fixing_space): rep for rep in self.representatives
        }
        grouped: Dict[BitVec, List[BitVec]] = {rep: [] for rep in self.representatives}
        for x in S:
            grouped[lookup[canonical_rep(x, self.fixing_space)]].append(x)
        return grouped
