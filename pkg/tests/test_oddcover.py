import math

import pytest

from bmcircuits.arboricity import arboricity
from bmcircuits.errors import EmptyMatroidError, OutOfRangeError, TooSmallError
from bmcircuits.gf2core import (
    BinaryMatroid,
    Gf2Vector,
    max_independent_subset,
    rank,
)
from bmcircuits.generators import complete_matroid, independent_copies
from bmcircuits.oddcover import (
    OddCover,
    complete_to_circuit,
    density_lower_bound,
    oddcover_via_arboricity,
    symdiff_reduce,
)


def vec(bits):
    return Gf2Vector.from_bits(bits)


def triangle():
    return BinaryMatroid(2, [vec("10"), vec("01"), vec("11")])


def check_cover(m, cover):
    parity = set()
    for c in cover.circuits:
        parity ^= c.key_set
    assert parity == set(m.key_set)


class TestCompleteToCircuit:
    def test_pair(self):
        c = complete_to_circuit([vec("10"), vec("01")])
        assert c.key_set == {1, 2, 3}

    def test_three_elements(self):
        c = complete_to_circuit([vec("100"), vec("010"), vec("001")])
        assert c.size == 4
        assert vec("111") in c

    def test_singleton_too_small(self):
        with pytest.raises(TooSmallError):
            complete_to_circuit([vec("10")])

    def test_dependent_rejected(self):
        with pytest.raises(OutOfRangeError):
            complete_to_circuit([vec("10"), vec("01"), vec("11")])


class TestSymdiffReduce:
    def test_triangle_single_step(self):
        cover = symdiff_reduce(triangle())
        assert len(cover.circuits) == 1

    def test_empty(self):
        assert len(symdiff_reduce(BinaryMatroid(3)).circuits) == 0

    def test_complete_dim5_first_step_accounting(self):
        # one manual step: the completion removes rank(M) elements and the sum
        # lands inside the complete matroid, so 31 drops to exactly 25
        m = complete_matroid(5)
        c = complete_to_circuit(max_independent_subset(m))
        after = m.symmetric_difference(c)
        assert len(after) == 25
        cover = symdiff_reduce(m)
        check_cover(m, cover)

    def test_corpus_validity(self, small_corpus):
        for m in small_corpus:
            check_cover(m, symdiff_reduce(m))


class TestOddcoverViaArboricity:
    def test_triangle_collapses(self):
        cover = oddcover_via_arboricity(triangle())
        check_cover(triangle(), cover)
        assert len(cover.circuits) <= 2

    def test_empty_rejected(self):
        with pytest.raises(EmptyMatroidError):
            oddcover_via_arboricity(BinaryMatroid(2))

    def test_complete_dim4_bound(self):
        m = complete_matroid(4)
        a, _ = arboricity(m)
        cover = oddcover_via_arboricity(m)
        check_cover(m, cover)
        assert a == 4
        assert len(cover.circuits) <= math.ceil(4 * a / 3)

    def test_two_copies_lower_bound_context(self):
        # any circuit meets this matroid in at most rank(M) elements, so a
        # cover needs at least ceil(14/6) = 3 = a(M) circuits
        m = independent_copies(2, 3)
        a, _ = arboricity(m)
        assert a == 3
        cover = oddcover_via_arboricity(m)
        check_cover(m, cover)
        assert len(cover.circuits) >= 3

    def test_four_thirds_bound_on_corpus(self, small_corpus):
        for m in small_corpus:
            a, _ = arboricity(m)
            cover = oddcover_via_arboricity(m)
            check_cover(m, cover)
            assert len(cover.circuits) <= math.ceil(4 * a / 3)

    def test_parity_counting_matches_definition(self):
        # count occurrences per vector: odd inside M, even outside
        from collections import Counter

        m = independent_copies(2, 2)
        cover = oddcover_via_arboricity(m)
        counts = Counter()
        for c in cover.circuits:
            for v in c:
                counts[v.key] += 1
        for key in range(1, 1 << m.dim):
            assert (counts[key] % 2 == 1) == (key in m.key_set)


class TestDensityLowerBound:
    def test_triangle(self):
        assert density_lower_bound(triangle()) == 1

    def test_two_copies_dim3(self):
        # exhaustive: N = M gives ceil(14/7) = 2; one block gives ceil(7/4) = 2
        assert density_lower_bound(independent_copies(2, 3)) == 2

    def test_complete_dim4_exhaustive(self):
        assert density_lower_bound(complete_matroid(4)) == 3

    def test_heuristic_path_is_still_a_bound(self):
        # force the heuristic by setting the exhaustive limit below |M|
        m = complete_matroid(4)
        exact = density_lower_bound(m, exhaustive_limit=20)
        heur = density_lower_bound(m, exhaustive_limit=4)
        assert heur <= exact
        assert heur >= math.ceil(len(m) / (rank(m) + 1))

    def test_bounds_both_cover_builders(self, small_corpus):
        for m in small_corpus:
            lb = density_lower_bound(m, exhaustive_limit=16)
            assert lb <= len(symdiff_reduce(m).circuits)
            assert lb <= len(oddcover_via_arboricity(m).circuits)


class TestOddCoverType:
    def test_rejects_wrong_parity(self):
        from bmcircuits.circuits import Circuit

        tri = Circuit([vec("10"), vec("01"), vec("11")])
        with pytest.raises(OutOfRangeError):
            OddCover(BinaryMatroid(2), (tri,))
