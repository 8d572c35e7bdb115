"""Constant, balancing and fixing sets: worked values and algebraic laws."""

import itertools

import pytest
from hypothesis import assume, given, settings, strategies as st

import balanced_sets.analysis.analysis as analysis_module
from balanced_sets.algebra.gf2_core import BitVec, Subspace, span
from balanced_sets.algebra.set_model import (
    VectorSet,
    complement,
    difference,
    intersection,
    is_affine,
    linear_span,
    map_linear,
    rank_of,
    translate,
    union,
)
from balanced_sets.analysis.analysis import (
    balance_sum,
    balancing_complement_of_h,
    balancing_number,
    balancing_set,
    balancing_via_quotient,
    constant_set,
    constant_value,
    fixing_set,
    fixing_set_by_intersection,
    is_balanced,
    is_constant,
    is_fully_balanced,
    quotient,
)
from balanced_sets.analysis.spectrum import spectrum_table
from balanced_sets.analysis.structure import Method
from balanced_sets.utils.errors import GuardError, InputError
from balanced_sets.utils.testkit import Family, FamilySpec, generate, oracle_analyze

from strategies import invertible_matrices, set_pairs, sets_with_vector, vector_sets


def v(text: str) -> BitVec:
    return BitVec.from_string(text)


def strings(vectors):
    return [str(x) for x in vectors]


def balanced_by(S: VectorSet):
    """Every nonzero y balancing S, by direct evaluation."""
    return [
        BitVec(S.width, i) for i in range(1, 1 << S.width)
        if balance_sum(S, BitVec(S.width, i)) == 0
    ]


def zeros_of(S: VectorSet):
    """Indices of the nonzero y with a vanishing balance sum, from the spectrum."""
    return spectrum_table(S).balancing_indices()


class TestBalanceTests:
    def test_balance_sum(self, s1):
        assert balance_sum(s1, v("0001")) == 0
        assert abs(balance_sum(s1, v("0010"))) == 4
        assert balance_sum(s1, v("0000")) == 4

    def test_is_balanced(self, s1):
        assert is_balanced(s1, v("0001"))
        assert not is_balanced(s1, v("1000"))

    def test_zero_vector_is_a_contract_violation(self, s1):
        with pytest.raises(InputError):
            is_balanced(s1, v("0000"))

    def test_width_mismatch(self, s1):
        with pytest.raises(InputError):
            balance_sum(s1, v("001"))

    def test_constant(self, s1):
        assert is_constant(s1, v("1000"))
        assert constant_value(s1, v("1000")) == 1
        assert constant_value(s1, v("0010")) == 0
        assert constant_value(s1, v("0001")) is None

    @given(vector_sets())
    def test_odd_sets_are_never_balanced(self, S):
        assume(len(S) % 2 == 1)
        assert balancing_number(S) == 0


class TestConstantSet:
    def test_worked_examples(self, s1, s2, s3):
        assert strings(constant_set(s1).enumerate()) == ["0000", "0010", "1000", "1010"]
        assert constant_set(s2).dimension == 0
        assert strings(constant_set(s3).enumerate()) == ["0000", "0001"]

    @given(vector_sets())
    def test_dimension_is_width_minus_rank(self, S):
        space = constant_set(S)
        assert space.dimension == S.width - rank_of(S)
        for y in space.enumerate():
            assert is_constant(S, y)

    @given(sets_with_vector())
    def test_translation_invariant(self, case):
        S, s = case
        assert constant_set(translate(S, s)) == constant_set(S)


class TestBalancingSet:
    def test_s1_cosets(self, s1):
        structure = balancing_set(s1)
        assert structure.balancing_number == 3
        assert strings(structure.balancing_reps) == ["0001", "0100", "0101"]
        assert [strings(c.members()) for c in structure.cosets()] == [
            ["0001", "0011", "1001", "1011"],
            ["0100", "0110", "1100", "1110"],
            ["0101", "0111", "1101", "1111"],
        ]
        assert structure.method is Method.COSET

    def test_membership_of_non_representatives(self, s1):
        structure = balancing_set(s1)
        assert structure.balances(v("1011"))
        assert structure.balances(v("1110"))
        assert not structure.balances(v("1010"))

    def test_s3_cosets(self, s3):
        structure = balancing_set(s3)
        assert [strings(c.members()) for c in structure.cosets()] == [
            ["0110", "0111"], ["1010", "1011"], ["1100", "1101"],
        ]

    def test_singleton(self):
        assert balancing_number(VectorSet.from_strings(["0110"])) == 0

    def test_rank_guard_names_the_spectrum_fallback(self):
        S = VectorSet.of([BitVec.zero(8)] + [BitVec.unit(i, 8) for i in range(1, 9)])
        with pytest.raises(GuardError, match="spectrum"):
            balancing_set(S, max_rank=4)

    @settings(max_examples=80, deadline=None)
    @given(vector_sets())
    def test_matches_direct_evaluation(self, S):
        structure = balancing_set(S)
        assert structure.enumerate_members() == balanced_by(S)
        assert structure.balancing_cardinality == len(balanced_by(S))

    @settings(max_examples=60, deadline=None)
    @given(vector_sets())
    def test_cosets_are_saturated(self, S):
        structure = balancing_set(S)
        for y in balanced_by(S)[:6]:
            assert structure.balances(y)
            for c in structure.constant_space.enumerate()[:8]:
                assert is_balanced(S, y ^ c)

    @settings(max_examples=60, deadline=None)
    @given(vector_sets())
    def test_agrees_with_oracle(self, S):
        assert balancing_set(S) == oracle_analyze(S)

    @given(sets_with_vector())
    def test_translation_invariant(self, case):
        S, s = case
        assert balancing_set(translate(S, s)) == balancing_set(S)

    @settings(max_examples=40, deadline=None)
    @given(vector_sets(), st.data())
    def test_isomorphism_invariant(self, S, data):
        matrix = data.draw(invertible_matrices(S.width))
        assert balancing_number(map_linear(S, matrix)) == balancing_number(S)


class TestSetOperationLaws:
    """Closure of the balancing relation under the usual set operations."""

    @settings(max_examples=60, deadline=None)
    @given(set_pairs(disjoint=True))
    def test_disjoint_union(self, pair):
        a, b = pair
        for y in set(balanced_by(a)) & set(balanced_by(b)):
            assert is_balanced(union(a, b), y)

    @settings(max_examples=60, deadline=None)
    @given(set_pairs(disjoint=True))
    def test_difference_of_nested_sets(self, pair):
        small, rest = pair
        big = union(small, rest)
        for y in set(balanced_by(big)) & set(balanced_by(small)):
            assert is_balanced(difference(big, small), y)

    @settings(max_examples=60, deadline=None)
    @given(set_pairs())
    def test_inclusion_exclusion(self, pair):
        a, b = pair
        common = [x for x in a if x in b]
        assume(common)
        both = VectorSet.of(common)
        assert intersection(a, b) == both
        for y in set(balanced_by(a)) & set(balanced_by(b)) & set(balanced_by(both)):
            assert is_balanced(union(a, b), y)

    @pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_complement_exhaustive(self, n):
        for mask in range(1, (1 << (1 << n)) - 1):
            S = VectorSet(n, tuple(BitVec(n, i) for i in range(1 << n) if mask >> i & 1))
            assert list(zeros_of(S)) == list(zeros_of(complement(S)))

    @settings(max_examples=40, deadline=None)
    @given(vector_sets(low=5, high=10, max_size=40))
    def test_complement_random(self, S):
        assume(len(S) < 1 << S.width)
        rest = complement(S)
        assert balancing_set(S).enumerate_members() == balancing_set(rest).enumerate_members()

    @given(st.integers(1, 5))
    def test_full_space_is_balanced_by_everything(self, n):
        full = VectorSet.full_space(n)
        assert balanced_by(full) == [BitVec(n, i) for i in range(1, 1 << n)]

    @settings(max_examples=60, deadline=None)
    @given(vector_sets(high=6))
    def test_self_fixing_member_forces_balance(self, S):
        members = set(S.members)
        for s in S:
            if {s ^ x for x in members} != members:
                continue
            for i in range(1, 1 << S.width):
                y = BitVec(S.width, i)
                if (y.bits & s.bits).bit_count() % 2:
                    assert is_balanced(S, y)

    @settings(max_examples=60, deadline=None)
    @given(set_pairs())
    def test_span_of_two_sets(self, pair):
        a, b = pair
        joint = VectorSet.from_subspace(span(list(a) + list(b), a.width))
        for y in set(balanced_by(a)) | set(balanced_by(b)):
            assert is_balanced(joint, y)

    @settings(max_examples=60, deadline=None)
    @given(vector_sets(high=6))
    def test_span_is_balanced_by_the_same_vectors(self, S):
        spanned = VectorSet.from_subspace(linear_span(S))
        for y in balanced_by(S):
            assert is_balanced(spanned, y)

    @pytest.mark.parametrize("n", [1, 2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_only_the_full_space_is_balanced_by_everything(self, n):
        for mask in range(1, (1 << (1 << n)) - 1):
            S = VectorSet(n, tuple(BitVec(n, i) for i in range(1 << n) if mask >> i & 1))
            assert len(zeros_of(S)) < (1 << n) - 1


class TestVectorSpaces:
    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_balancing_set_is_complement_of_constant_set(self, data):
        n = data.draw(st.integers(1, 12))
        rows = data.draw(st.lists(st.integers(0, (1 << n) - 1), max_size=min(n, 8)))
        space = span([BitVec(n, r) for r in rows], n)
        S = VectorSet.from_subspace(space)
        structure = balancing_set(S)
        r = space.dimension
        assert structure.balancing_number == (1 << r) - 1
        assert structure.balancing_cardinality == (1 << n) - structure.constant_space.cardinality
        assert is_fully_balanced(S)


class TestFullyBalanced:
    def test_worked_examples(self, s1, s2):
        assert is_fully_balanced(s1)
        assert not is_fully_balanced(s2)

    def test_full_space(self):
        assert is_fully_balanced(VectorSet.full_space(4))

    @pytest.mark.parametrize("n", [2, 3, pytest.param(4, marks=pytest.mark.slow)])
    def test_exhaustive_classification(self, n):
        for size in range(2, (1 << n) + 1, 2):
            for combo in itertools.combinations(range(1 << n), size):
                S = VectorSet(n, tuple(BitVec(n, i) for i in combo))
                assert is_fully_balanced(S) == is_affine(S)


class TestFixingSet:
    def test_worked_examples(self, s2, s4):
        assert strings(fixing_set(s4).basis) == ["0010"]
        assert fixing_set(s2).dimension == 0

    def test_vector_space_fixes_itself(self):
        space = span([v("1100"), v("0011")])
        assert fixing_set(VectorSet.from_subspace(space)) == space

    @given(sets_with_vector())
    def test_translation_invariant_and_matches_intersection(self, case):
        S, s = case
        assert fixing_set(translate(S, s)) == fixing_set(S)
        assert fixing_set_by_intersection(S) == fixing_set(translate(S, s))

    def test_large_subspace_tests_one_candidate_per_dimension(self, monkeypatch):
        calls = []
        real_span = analysis_module.span

        def counting_span(rows, width):
            calls.append(len(rows))
            return real_span(rows, width)

        monkeypatch.setattr(analysis_module, "span", counting_span)
        full = Subspace.full(12)
        assert fixing_set(VectorSet.from_subspace(full)) == full
        # Members already in the span of those found are never tested
        assert calls == list(range(1, 13))

    @pytest.mark.parametrize("f", [1, 2, 3])
    def test_fixed_by_families_match_intersection(self, f):
        for seed in range(8):
            S = generate(FamilySpec(Family.FIXED_BY, n=8, f=f, classes=1 + seed % 4, seed=seed))
            fixing = fixing_set(S)
            assert fixing == fixing_set_by_intersection(S)
            assert fixing.dimension >= f

    @given(vector_sets())
    def test_every_fixing_vector_fixes(self, S):
        members = set(S.members)
        for f in fixing_set(S).enumerate():
            assert {f ^ x for x in members} == members


class TestQuotient:
    def test_worked_example(self, s4):
        view = quotient(s4)
        assert view.f == 1
        assert strings(view.representatives) == ["0000", "0001", "0101", "1000"]
        assert view.h_space.dimension == 3
        classes = view.classes(s4)
        assert all(len(block) == 2 for block in classes.values())
        assert strings(classes[v("0101")]) == ["0101", "0111"]

    def test_trivial_fixing_set(self, s2):
        assert quotient(s2).representatives == s2

    def test_via_quotient_worked_example(self, s4):
        structure = balancing_via_quotient(s4)
        assert structure.balancing_number == 11
        assert structure == balancing_set(s4)
        assert structure.method is Method.QUOTIENT

    def test_odd_class_count_gives_complement_of_h(self):
        # Three classes of the line through 0001: #S = 6, f = 1
        S = VectorSet.from_strings(["0000", "0001", "0100", "0101", "1000", "1001"])
        assert fixing_set(S).dimension == 1
        assert balancing_complement_of_h(S)
        structure = balancing_via_quotient(S)
        assert structure.balancing_number == 1 << (rank_of(S) - 1)
        for y in structure.enumerate_members():
            assert y.bits & 1

    @settings(max_examples=80, deadline=None)
    @given(vector_sets())
    def test_matches_coset_method(self, S):
        assert balancing_via_quotient(S) == balancing_set(S)
