"""Walsh-Hadamard spectrum of a set or multiset.

The whole table ``W[y] = sum_x m(x) (-1)^(x . y)`` is the unnormalised
Walsh-Hadamard transform of the multiplicity vector indexed by
:func:`~balanced_sets.algebra.gf2_core.index_of`.  Reading its zeros and its
extreme values gives ``B`` and ``C`` without any linear algebra, which makes
it an independent check on the coset method.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
import pandas as pd

from ..algebra.gf2_core import BitVec, span
from ..algebra.set_model import as_weighted
from ..config.settings import HADAMARD_GUARD, SPECTRUM_GUARD
from ..utils.errors import GuardError, InputError
from .analysis import Analyzable
from .structure import BalanceStructure, Method

logger = logging.getLogger(__name__)

H1 = np.array([[1, 1], [1, -1]], dtype=np.int64)


def wht(values) -> np.ndarray:
    """Return the unnormalised fast Walsh-Hadamard transform of ``values``.

    ``out[j] = sum_i (-1)^popcount(i & j) values[i]`` in exact 64-bit integers.
    The input is copied; applying the transform twice multiplies by the length.
    """
    a = np.array(values, dtype=np.int64)
    size = a.size
    if a.ndim != 1 or size == 0 or size & (size - 1):
        raise InputError(f"transform length must be a power of two, got {size}")
    h = 1
    while h < size:
        # Blocks of 2h entries; pair entry j of the first half with entry j of the second
        blocks = a.reshape(-1, 2, h)
        upper = blocks[:, 0, :].copy()
        lower = blocks[:, 1, :]
        blocks[:, 0, :] += lower
        blocks[:, 1, :] = upper - lower
        h *= 2
    return a


@dataclass(frozen=True)
class SpectrumTable:
    """The balance sum of every ``y`` in ``F2^n``, indexed by ``index_of(y)``."""

    width: int
    sums: np.ndarray

    def __post_init__(self) -> None:
        sums = np.asarray(self.sums, dtype=np.int64)
        if sums.shape != (1 << self.width,):
            raise InputError(f"a width-{self.width} spectrum needs 2^{self.width} entries")
        sums.setflags(write=False)
        object.__setattr__(self, "sums", sums)

    @property
    def total(self) -> int:
        """Total multiplicity: the sum at ``y = 0``."""
        return int(self.sums[0])

    def __getitem__(self, y: BitVec) -> int:
        if y.width != self.width:
            raise InputError(f"width mismatch: {y.width} != {self.width}")
        return int(self.sums[y.bits])

    def balancing_indices(self) -> np.ndarray:
        zeros = np.flatnonzero(self.sums == 0)
        return zeros[zeros != 0].astype(np.uint64)

    def constant_indices(self) -> np.ndarray:
        return np.flatnonzero(np.abs(self.sums) == self.total).astype(np.uint64)

    def to_frame(self) -> pd.DataFrame:
        """Tabulate the spectrum: one row per vector ``y``."""
        index = np.arange(1 << self.width)
        frame = pd.DataFrame(
            {
                "vector": [format(i, f"0{self.width}b") for i in index],
                "index": index,
                "sum": self.sums,
            }
        )
        frame["balanced"] = (frame["sum"] == 0) & (frame["index"] != 0)
        frame["constant"] = frame["sum"].abs() == self.total
        return frame


def _check_width(width: int, max_n: int) -> None:
    if width > max_n:
        raise GuardError(
            "spectrum", max_n, width, flag="--max-spectrum-n",
            hint="the spectrum holds 2^n integers",
        )


def spectrum_table(obj: Analyzable, max_n: int = SPECTRUM_GUARD) -> SpectrumTable:
    """Transform the multiplicity vector of ``obj``."""
    width, xs, weights, _ = as_weighted(obj)
    _check_width(width, max_n)
    values = np.zeros(1 << width, dtype=np.int64)
    np.add.at(values, xs.astype(np.int64), weights)
    return SpectrumTable(width, wht(values))


def spectrum_analysis(obj: Analyzable, max_n: int = SPECTRUM_GUARD) -> BalanceStructure:
    """Read ``C`` and ``B`` off the spectrum and group ``B`` into cosets of ``C``."""
    table = spectrum_table(obj, max_n)
    width = table.width
    constant = span([BitVec(width, int(i)) for i in table.constant_indices()], width)
    zeros = table.balancing_indices()
    # Canonical reduction, vectorised: clear each pivot bit the basis owns
    for row in constant.basis:
        pivot = np.uint64(row.bits.bit_length() - 1)
        hit = (zeros >> pivot) & np.uint64(1)
        zeros = zeros ^ (hit * np.uint64(row.bits))
    reps = np.unique(zeros)
    structure = BalanceStructure(
        constant,
        tuple(BitVec(width, int(i)) for i in reps),
        width - constant.dimension,
        Method.SPECTRUM,
    )
    logger.info(
        "spectrum method: n = %d, dim C %d, b = %d",
        width, constant.dimension, structure.balancing_number,
    )
    return structure


def hadamard_sign(ix: int, iy: int, n: int) -> int:
    """Sign of entry ``(ix, iy)`` of the order-``2^n`` Hadamard matrix."""
    if n < 1:
        raise InputError(f"order exponent must be positive, got {n}")
    for i in (ix, iy):
        if not 0 <= i < (1 << n):
            raise InputError(f"index {i} outside [0, 2^{n})")
    return -1 if (ix & iy).bit_count() & 1 else 1


def hadamard_matrix(n: int, max_n: int = HADAMARD_GUARD) -> np.ndarray:
    """Return the ``2^n x 2^n`` sign matrix ``H_n = H_1 (x) H_(n-1)``."""
    if n < 1:
        raise InputError(f"order exponent must be positive, got {n}")
    if n > max_n:
        raise GuardError("hadamard", max_n, n, hint="the matrix has 4^n entries")
    matrix = H1
    for _ in range(n - 1):
        matrix = np.kron(H1, matrix)
    return matrix

