"""Hypothesis strategies for vectors, sets and multisets."""

from hypothesis import strategies as st

from balanced_sets.algebra.gf2_core import BitVec, Gf2Matrix
from balanced_sets.algebra.set_model import BoolMultiset, VectorSet
from balanced_sets.utils.testkit import SplitMix64, random_invertible


@st.composite
def widths(draw, low: int = 1, high: int = 6) -> int:
    return draw(st.integers(low, high))


@st.composite
def vectors(draw, width: int) -> BitVec:
    return BitVec(width, draw(st.integers(0, (1 << width) - 1)))


@st.composite
def vector_sets(draw, low: int = 1, high: int = 6, max_size: int = 24) -> VectorSet:
    n = draw(widths(low, high))
    indices = draw(
        st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=min(1 << n, max_size))
    )
    return VectorSet(n, tuple(BitVec(n, i) for i in indices))


@st.composite
def sets_with_vector(draw, low: int = 1, high: int = 6):
    S = draw(vector_sets(low, high))
    return S, draw(vectors(S.width))


@st.composite
def multisets(draw, low: int = 1, high: int = 5, max_count: int = 4) -> BoolMultiset:
    n = draw(widths(low, high))
    entries = draw(
        st.dictionaries(
            st.integers(0, (1 << n) - 1),
            st.integers(1, max_count),
            min_size=1,
            max_size=min(1 << n, 16),
        )
    )
    return BoolMultiset(n, {BitVec(n, i): c for i, c in entries.items()})


@st.composite
def invertible_matrices(draw, width: int) -> Gf2Matrix:
    return random_invertible(SplitMix64(draw(st.integers(0, 2**32))), width)


@st.composite
def set_pairs(draw, low: int = 2, high: int = 5, disjoint: bool = False):
    """Two sets of one width; ``disjoint`` splits one draw of indices in two."""
    n = draw(widths(low, high))
    if disjoint:
        indices = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=2, unique=True,
                                max_size=min(1 << n, 24)))
        cut = draw(st.integers(1, len(indices) - 1))
        parts = indices[:cut], indices[cut:]
    else:
        parts = [
            draw(st.sets(st.integers(0, (1 << n) - 1), min_size=1, max_size=min(1 << n, 16)))
            for _ in range(2)
        ]
    return tuple(VectorSet(n, tuple(BitVec(n, i) for i in part)) for part in parts)
