import itertools

import pytest
from hypothesis import assume, given, settings, strategies as st

from balanced_sets.algebra.gf2_core import BitVec, span
from balanced_sets.algebra.set_model import BoolMultiset, is_affine
from balanced_sets.analysis.analysis import balancing_set
from balanced_sets.analysis.multiset_analysis import (
    FullBalanceWitness,
    balance_sum_m,
    balancing_set_m,
    constant_set_m,
    is_balanced_m,
    is_constant_m,
    is_fully_balanced_m,
)
from balanced_sets.utils.errors import InputError
from balanced_sets.utils.testkit import oracle_analyze

from strategies import invertible_matrices, multisets, vectors


def v(text: str) -> BitVec:
    return BitVec.from_string(text)


@pytest.fixture
def uneven() -> BoolMultiset:
    return BoolMultiset(2, {v("00"): 1, v("01"): 2, v("10"): 2, v("11"): 1})


class TestWeightedTests:
    def test_balance_sums(self, uneven):
        assert balance_sum_m(uneven, v("01")) == 0
        assert balance_sum_m(uneven, v("10")) == 0
        assert balance_sum_m(uneven, v("11")) == -2
        assert balance_sum_m(uneven, v("00")) == 6

    def test_balanced_and_constant(self, uneven):
        assert is_balanced_m(uneven, v("01"))
        assert not is_balanced_m(uneven, v("11"))
        assert is_constant_m(uneven, v("00"))
        assert not is_constant_m(uneven, v("11"))

    def test_constant_multiplicity_does_not_matter_for_constancy(self):
        M = BoolMultiset(3, {v("100"): 5, v("101"): 1})
        assert is_constant_m(M, v("100"))
        assert constant_set_m(M) == span([v("100"), v("010")])


class TestBalancingSet:
    def test_uneven_multiplicities(self, uneven):
        structure = balancing_set_m(uneven)
        assert [str(r) for r in structure.balancing_reps] == ["01", "10"]
        assert structure.constant_space.dimension == 0
        assert not structure.is_fully_balanced

    def test_methods_agree(self, uneven):
        assert balancing_set_m(uneven, "spectrum") == balancing_set_m(uneven, "coset")
        with pytest.raises(InputError):
            balancing_set_m(uneven, "quotient")

    def test_unit_multiplicities_match_the_set(self, s2, s4):
        for S in (s2, s4):
            assert balancing_set_m(S.as_multiset()) == balancing_set(S)

    @given(multisets())
    def test_odd_total_is_never_balanced(self, M):
        assume(M.total % 2 == 1)
        assert balancing_set_m(M).balancing_number == 0

    @settings(max_examples=80, deadline=None)
    @given(multisets())
    def test_agrees_with_oracle(self, M):
        assert balancing_set_m(M) == oracle_analyze(M)

    @settings(max_examples=60, deadline=None)
    @given(multisets(), st.data())
    def test_translation_invariant(self, M, data):
        s = data.draw(vectors(M.width))
        assert balancing_set_m(M.translate(s)) == balancing_set_m(M)

    @settings(max_examples=60, deadline=None)
    @given(multisets(), st.data())
    def test_isomorphism_invariant(self, M, data):
        matrix = data.draw(invertible_matrices(M.width))
        image = M.map_linear(matrix)
        assert image.total == M.total
        assert balancing_set_m(image).balancing_number == balancing_set_m(M).balancing_number


class TestFullyBalanced:
    def test_witness(self):
        M = BoolMultiset(2, {v("00"): 3, v("11"): 3})
        witness = is_fully_balanced_m(M)
        assert isinstance(witness, FullBalanceWitness)
        assert witness
        assert witness.affine_support and witness.constant_multiplicity
        assert witness.balancing_number == 1

    def test_uneven_full_support(self, uneven):
        witness = is_fully_balanced_m(uneven)
        assert not witness
        assert witness.affine_support
        assert not witness.constant_multiplicity

    def test_exhaustive_small_width(self):
        vectors_2 = [BitVec(2, i) for i in range(4)]
        for counts in itertools.product(range(5), repeat=4):
            if not any(counts):
                continue
            M = BoolMultiset(2, {x: c for x, c in zip(vectors_2, counts) if c})
            witness = is_fully_balanced_m(M)
            assert bool(witness) == (is_affine(M.support) and M.is_constant)

    @settings(max_examples=100, deadline=None)
    @given(multisets(high=6))
    def test_random(self, M):
        witness = is_fully_balanced_m(M, method="spectrum")
        assert bool(witness) == (is_affine(M.support) and M.is_constant)

    def test_sets_are_multisets_with_unit_multiplicity(self, s1):
        assert is_fully_balanced_m(s1.as_multiset())
