import itertools

import pytest
from hypothesis import given, strategies as st

from cminor import (
    ClassVector,
    Permutation,
    PreconditionError,
    SizeGuardError,
    SquareMatrix,
    StirlingVector,
    all_ones,
    cycle_stats,
    enumerate_restricted,
    identity,
    lemma1_map,
    oracle_all_functions,
)


class TestCycleStats:
    def test_identity(self):
        stats = cycle_stats(Permutation((1, 2, 3)))
        assert (stats.gamma, stats.decrement, stats.structure) == (3, 0, (3, 0, 0))

    def test_transposition_plus_fixed_point(self):
        stats = cycle_stats(Permutation((2, 1, 3)))
        assert (stats.gamma, stats.decrement, stats.structure) == (2, 1, (1, 1, 0))

    def test_three_cycle(self):
        stats = cycle_stats(Permutation((3, 1, 2)))
        assert (stats.gamma, stats.decrement, stats.structure) == (1, 2, (0, 0, 1))

    def test_invalid_images(self):
        with pytest.raises(PreconditionError):
            Permutation((1, 1, 3))


@given(st.permutations(list(range(1, 8))))
def test_cycle_stats_consistency(images):
    stats = cycle_stats(Permutation(tuple(images)))
    n = len(images)
    assert sum(i * k for i, k in enumerate(stats.structure, start=1)) == n
    assert sum(stats.structure) == stats.gamma
    assert stats.decrement == n - stats.gamma
    assert stats.decrement == sum((i - 1) * k for i, k in enumerate(stats.structure, start=1))


class TestLemma1Map:
    def test_three_cycle(self):
        image = lemma1_map(Permutation((3, 1, 2)), 2)
        assert image == Permutation((2, 1))
        assert cycle_stats(image).gamma == 1

    def test_transposition(self):
        image = lemma1_map(Permutation((2, 1, 3)), 2)
        assert image == Permutation((1, 2))
        assert cycle_stats(image).gamma == 2

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_single_cycle_shortens(self, n):
        # (n, 1, 2, ..., n-1) is one n-cycle with value 1 at position 2
        p = Permutation((n,) + tuple(range(1, n)))
        image = lemma1_map(p, 2)
        assert cycle_stats(image).gamma == 1
        assert image.n == n - 1

    def test_precondition_violations(self):
        with pytest.raises(PreconditionError):
            lemma1_map(Permutation((2, 1, 3)), 3)  # p(3) != 1
        with pytest.raises(PreconditionError):
            lemma1_map(Permutation((1, 2)), 1)  # j must be >= 2

    @pytest.mark.parametrize("n", range(2, 8))
    def test_preserves_cycle_count(self, n):
        for images in itertools.permutations(range(1, n + 1)):
            p = Permutation(images)
            for j in range(2, n + 1):
                if images[j - 1] != 1:
                    continue
                assert cycle_stats(lemma1_map(p, j)).gamma == cycle_stats(p).gamma

    @pytest.mark.parametrize("n", range(2, 7))
    def test_bijection_onto_smaller_group(self, n):
        import math

        for j in range(2, n + 1):
            images = {
                lemma1_map(Permutation(p), j).images
                for p in itertools.permutations(range(1, n + 1))
                if p[j - 1] == 1
            }
            assert len(images) == math.factorial(n - 1)


class TestEnumerateRestricted:
    def test_prohibited_corner(self):
        a = SquareMatrix.from_rows([[0, 1, 1], [1, 1, 1], [1, 1, 1]])
        perms = list(enumerate_restricted(a))
        assert len(perms) == 4
        assert all(w == 1 for _, w in perms)
        assert all(p(1) != 1 for p, _ in perms)

    def test_identity_matrix(self):
        perms = list(enumerate_restricted(identity(4)))
        assert perms == [(Permutation((1, 2, 3, 4)), 1)]

    def test_all_ones(self):
        assert len(list(enumerate_restricted(all_ones(3)))) == 6

    def test_empty_stream(self):
        a = SquareMatrix.from_rows([[0, 0], [1, 1]])
        assert list(enumerate_restricted(a)) == []

    def test_weights_multiply(self):
        a = SquareMatrix.from_rows([[2, 0], [0, 3]])
        assert list(enumerate_restricted(a)) == [(Permutation((1, 2)), 6)]


class TestOracle:
    def test_all_ones_3(self):
        report = oracle_all_functions(all_ones(3), 2)
        assert report.permanent == 6
        assert report.class_counts == ClassVector((3, 3))
        assert report.full_cycle_count == 2
        assert report.stirling == StirlingVector((2, 3, 1))
        assert report.indicator.as_dict() == {(3, 0, 0): 1, (1, 1, 0): 3, (0, 0, 1): 2}

    def test_single_entry(self):
        report = oracle_all_functions(SquareMatrix.from_rows([[1]]), 5)
        assert report.permanent == 1
        assert report.class_counts == ClassVector((1, 0, 0, 0, 0))
        assert report.full_cycle_count == 1
        assert report.stirling == StirlingVector((1,))
        assert report.indicator.as_dict() == {(1,): 1}

    def test_derangements_3(self):
        a = SquareMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
        report = oracle_all_functions(a, 3)
        assert report.permanent == 2
        assert report.class_counts == ClassVector((0, 0, 2))
        assert report.full_cycle_count == 2
        assert report.stirling == StirlingVector((2, 0, 0))
        assert report.indicator.as_dict() == {(0, 0, 1): 2}

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            oracle_all_functions(identity(10), 2)
        # the limit is configurable
        report = oracle_all_functions(identity(10), 2, limit=10)
        assert report.permanent == 1

    def test_rejects_zero_modulus(self):
        with pytest.raises(PreconditionError):
            oracle_all_functions(identity(2), 0)

    def test_stream_count_matches_permanent(self):
        a = SquareMatrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        report = oracle_all_functions(a, 1)
        assert report.permanent == len(list(enumerate_restricted(a)))
