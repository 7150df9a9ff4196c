"""The deterministic merge rule, traces, lengths, and code accounting."""

import json
from fractions import Fraction as F

import pytest

from prefixcode import (
    LengthVector,
    MergeState,
    canonical_codebook,
    counterexample,
    expected_length,
    huffman,
    huffman_lengths,
    kraft_sum,
    merge_step,
    validate,
)
from prefixcode.errors import (
    KraftViolationError,
    NotSortedError,
    SizeMismatchError,
    TooFewEntriesError,
)
from randgen import near_uniform_distribution, random_distribution


class TestMergeStep:
    def test_insert_between(self):
        state, k = merge_step(MergeState(0, (F(2, 5), F(3, 10), F(1, 5), F(1, 10))))
        assert state.probs == (F(2, 5), F(3, 10), F(3, 10))
        assert (state.m, k) == (1, 2)

    def test_tie_with_maximum_goes_first(self):
        state, k = merge_step(MergeState(0, (F(1, 2), F(1, 4), F(1, 4))))
        assert state.probs == (F(1, 2), F(1, 2))
        assert k == 1

    def test_uniform_thirds(self):
        state, k = merge_step(MergeState(0, (F(1, 3), F(1, 3), F(1, 3))))
        assert state.probs == (F(2, 3), F(1, 3))
        assert k == 1

    def test_too_few(self):
        with pytest.raises(TooFewEntriesError):
            merge_step(MergeState(2, (F(1),)))


class TestHuffman:
    def test_dyadic_lengths(self):
        d = validate([F(1, 2), F(1, 4), F(1, 8), F(1, 8)])
        lengths, _ = huffman(d)
        assert tuple(lengths) == (1, 2, 3, 3)

    def test_counterexample_top_lengths(self):
        assert huffman_lengths(counterexample(2, F(1, 36)))[0] == 3
        assert huffman_lengths(counterexample(3, F(0)))[0] == 3
        assert huffman_lengths(counterexample(1, F(1, 12)))[0] == 1

    def test_lengths_fast_path_agrees(self, rng):
        for _ in range(30):
            d = random_distribution(rng, rng.randint(2, 25))
            lengths, _ = huffman(d)
            assert lengths == huffman_lengths(d)

    def test_deterministic(self, rng):
        d = random_distribution(rng, 12)
        assert huffman(d) == huffman(d)

    def test_trace_structure(self):
        d = validate([F(2, 5), F(3, 10), F(1, 5), F(1, 10)])
        lengths, trace = huffman(d)
        assert len(trace.states) == d.n
        assert trace.states[0].probs == d.probs
        assert trace.states[-1].probs == (F(1),)
        # every state is reproduced by replaying merge_step
        for m in range(1, d.n):
            expected, k = merge_step(trace.states[m - 1])
            assert expected == trace.states[m]
            assert trace.insertions[m - 1] == (
                m,
                k,
                expected.probs[k - 1],
            )

    def test_trace_json_lines(self):
        d = validate([F(1, 3), F(1, 3), F(1, 3)])
        _, trace = huffman(d)
        records = [json.loads(line) for line in trace.json_lines()]
        assert records[0] == {"m": 1, "k": 1, "merged": "2/3", "state": ["2/3", "1/3"]}
        assert records[1]["state"] == ["1"]

    def test_kraft_equality_always(self, rng):
        for _ in range(40):
            d = random_distribution(rng, rng.randint(2, 30))
            assert kraft_sum(huffman_lengths(d)) == 1

    def test_sibling_property(self, rng):
        # coding the reduced source and re-expanding preserves the optimum
        for _ in range(30):
            d = random_distribution(rng, rng.randint(3, 15))
            merged = d.probs[-1] + d.probs[-2]
            reduced = validate(sorted(d.probs[:-2] + (merged,), reverse=True))
            e_full = expected_length(d, huffman_lengths(d))
            e_reduced = expected_length(reduced, huffman_lengths(reduced))
            assert e_full == e_reduced + merged

    def test_near_uniform_top_length_is_floor_log2(self, rng):
        for _ in range(40):
            n = rng.randint(2, 100)
            d = near_uniform_distribution(rng, n)
            assert d.probs[-1] + d.probs[-2] >= d.p1
            assert huffman_lengths(d)[0] == n.bit_length() - 1

    def test_power_of_two_near_uniform_is_perfect(self, rng):
        # pairwise sums dominate the maximum, so the tree is perfect
        for t in (1, 2, 3, 4, 5):
            d = near_uniform_distribution(rng, 2**t)
            assert tuple(huffman_lengths(d)) == (t,) * 2**t


class TestAccounting:
    def test_expected_length_examples(self):
        assert expected_length(validate([F(1, 3)] * 3), (1, 2, 2)) == F(5, 3)
        d = validate([F(1, 2), F(1, 4), F(1, 8), F(1, 8)])
        assert expected_length(d, (1, 2, 3, 3)) == F(7, 4)
        ce = counterexample(2, F(0))
        assert expected_length(ce, (3,) * 8) == 3
        assert expected_length(ce, (2, 3, 3, 3, 3, 3, 4, 4)) == 3

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatchError):
            expected_length(validate([F(1, 2), F(1, 2)]), (1, 1, 1))

    def test_kraft_sum_examples(self):
        assert kraft_sum((1, 2, 2)) == 1
        assert kraft_sum((1, 1, 1)) == F(3, 2)
        assert kraft_sum((1, 2, 3, 4, 4)) == 1


class TestCanonicalCodebook:
    @pytest.mark.parametrize(
        "lengths,expected",
        [
            ((1, 2, 2), ("0", "10", "11")),
            ((2, 2, 2, 2), ("00", "01", "10", "11")),
            ((1, 2, 3, 3), ("0", "10", "110", "111")),
        ],
    )
    def test_examples(self, lengths, expected):
        assert tuple(canonical_codebook(lengths)) == expected

    def test_kraft_violation(self):
        with pytest.raises(KraftViolationError):
            canonical_codebook((1, 1, 2))

    def test_prefix_free_with_matching_lengths(self, rng):
        for _ in range(30):
            d = random_distribution(rng, rng.randint(2, 20))
            lengths = huffman_lengths(d)
            words = list(canonical_codebook(lengths))
            assert [len(w) for w in words] == list(lengths)
            for i, w in enumerate(words):
                for j, v in enumerate(words):
                    if i != j:
                        assert not v.startswith(w)


class TestLengthVector:
    def test_must_be_non_decreasing(self):
        with pytest.raises(NotSortedError):
            LengthVector((2, 1))

    def test_must_be_positive(self):
        with pytest.raises(Exception):
            LengthVector((0, 1))

    def test_huffman_output_is_non_decreasing(self, rng):
        for _ in range(20):
            d = random_distribution(rng, rng.randint(2, 30))
            lv = huffman_lengths(d)
            assert all(a <= b for a, b in zip(lv, list(lv)[1:]))
