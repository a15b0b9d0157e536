import random

import pytest

import helpers
from alphacirc import (
    ChainRing,
    CodeSpec,
    gray_image,
    hamming_weight,
    is_doubly_even,
    lee_weight,
    min_hamming_distance,
    min_lee_distance,
)
from alphacirc.distance import lee_table

Z2 = ChainRing(2, 1, 1)
Z4 = ChainRing(2, 2, 3)
Z8 = ChainRing(2, 3, 7)
Z9 = ChainRing(3, 2, 8)


def rand_spec(rng, kmax=4):
    ring, alpha = rng.choice([(Z2, 1), (Z4, 3), (Z4, 1), (Z9, 8)])
    if rng.random() < 0.5:
        k = rng.randrange(1, kmax + 1)
        a = tuple(rng.randrange(ring.size) for _ in range(k))
        return CodeSpec("double", ring, k, alpha, a)
    k = rng.randrange(2, kmax + 1)
    a = tuple(rng.randrange(ring.size) for _ in range(k - 1))
    border = tuple(rng.randrange(ring.size) for _ in range(3))
    return CodeSpec("bordered", ring, k, alpha, a, border)


class TestWeights:
    def test_lee_table_z4(self):
        assert lee_table(Z4).tolist() == [0, 1, 2, 1]

    def test_lee_table_z9(self):
        assert lee_table(Z9).tolist() == [0, 1, 2, 3, 4, 4, 3, 2, 1]

    def test_lee_weight_word(self):
        assert lee_weight(Z4, (1, 2, 3, 0)) == 4
        assert lee_weight(Z8, (5, 7)) == 4

    def test_hamming_weight_word(self):
        assert hamming_weight(Z4, (1, 2, 3, 0)) == 3
        assert hamming_weight(Z4, (0, 4)) == 0  # 4 reduces to 0


class TestGrayMap:
    def test_images(self):
        assert gray_image(Z4, (0, 1, 2, 3)) == (0, 0, 0, 1, 1, 1, 1, 0)

    def test_rejects_other_rings(self):
        with pytest.raises(ValueError):
            gray_image(Z8, (1,))

    def test_isometry(self):
        rng = random.Random(0)
        for _ in range(1000):
            word = [rng.randrange(4) for _ in range(rng.randrange(1, 12))]
            assert lee_weight(Z4, word) == hamming_weight(Z2, gray_image(Z4, word))

    def test_additivity_of_images(self):
        # the Gray image of u + v differs from image(u) + image(v) in general,
        # but weights still match coordinatewise on single words
        for c in range(4):
            assert lee_weight(Z4, (c,)) == sum(gray_image(Z4, (c,)))


class TestMinDistance:
    def test_extended_hamming_base(self):
        spec = CodeSpec("double", Z2, 4, 1, (1, 1, 1, 0))
        assert min_hamming_distance(spec) == 4

    def test_octacode_style_lift(self):
        spec = CodeSpec("double", Z4, 4, 3, (1, 3, 3, 2))
        assert min_lee_distance(spec) == 6
        assert min_lee_distance(CodeSpec("double", Z4, 4, 3, (1, 3, 3, 0))) == 4

    def test_k1_double(self):
        spec = CodeSpec("double", Z4, 1, 3, (1,))
        assert min_lee_distance(spec) == 2
        assert min_hamming_distance(spec) == 2

    def test_zero_rank_rejected(self):
        with pytest.raises(Exception):
            min_hamming_distance(CodeSpec("double", Z4, 0, 3, ()))

    def test_matches_naive_oracle(self):
        rng = random.Random(1)
        for _ in range(120):
            spec = rand_spec(rng)
            assert min_lee_distance(spec) == helpers.naive_min_weight(spec, "lee"), spec
            assert min_hamming_distance(spec) == helpers.naive_min_weight(spec, "hamming"), spec

    def test_bitpacked_and_generic_agree(self):
        # force the generic path by comparing against the naive oracle on Z4
        rng = random.Random(2)
        from alphacirc.distance import _min_weight, lee_table as lt
        from alphacirc import generator_matrix

        for _ in range(100):
            k = rng.randrange(1, 5)
            spec = CodeSpec(
                "double", Z4, k, 3, tuple(rng.randrange(4) for _ in range(k))
            )
            G = generator_matrix(spec)
            assert min_lee_distance(spec) == _min_weight(G, 4, lt(Z4), None)

    def test_early_abort_returns_witness(self):
        rng = random.Random(3)
        for _ in range(100):
            spec = rand_spec(rng)
            exact = min_lee_distance(spec)
            aborted = min_lee_distance(spec, early_abort_at=exact + 1)
            assert aborted <= exact  # a witness below the threshold
            assert min_lee_distance(spec, early_abort_at=exact) == exact
            assert min_lee_distance(spec, early_abort_at=0) == exact

    def test_bound_lee_le_twice_hamming(self):
        rng = random.Random(4)
        for _ in range(100):
            spec = rand_spec(rng)
            # Lee weight of any residue is at most (size-1), but for the
            # codeword realizing min Hamming weight each nonzero entry
            # contributes at most floor(size/2)
            assert min_lee_distance(spec) <= (spec.ring.size // 2) * min_hamming_distance(spec)


class TestDoublyEven:
    def test_extended_hamming(self):
        assert is_doubly_even(CodeSpec("double", Z2, 4, 1, (1, 1, 1, 0)))

    def test_singly_even_counterexample(self):
        assert not is_doubly_even(CodeSpec("double", Z2, 2, 1, (1, 0)))

    def test_length_32_example(self):
        v = tuple(int(c) for c in "1111101011011010")
        assert is_doubly_even(CodeSpec("double", Z2, 16, 1, v))

    def test_rejects_non_binary(self):
        with pytest.raises(ValueError):
            is_doubly_even(CodeSpec("double", Z4, 4, 3, (1, 3, 3, 0)))

    def test_matches_full_enumeration(self):
        import itertools

        import numpy as np

        from alphacirc import generator_matrix

        rng = random.Random(5)
        for _ in range(60):
            k = rng.randrange(1, 5)
            spec = CodeSpec("double", Z2, k, 1, tuple(rng.randrange(2) for _ in range(k)))
            G = generator_matrix(spec)
            all_even = all(
                int((np.array(m) @ G % 2).sum()) % 4 == 0
                for m in itertools.product(range(2), repeat=k)
            )
            assert is_doubly_even(spec) == all_even
