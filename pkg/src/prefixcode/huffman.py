"""Deterministic Huffman coding with a complete merge trace.

The merge rule is fully standardized so that every run over the same input
is bit-identical: the two masses merged are always the last two positions
of the non-increasing state, and their sum is inserted *before* any
existing entry of equal value.  Equivalently the 1-based insertion index k
is the unique position such that every entry before k is strictly greater
than the sum and every entry from k on is at most the sum (a virtual
sentinel larger than 1 sits at position 0).

Codeword lengths are recovered by replaying the merge tree top-down: the
root has depth 0 and each merged node's two children sit one level deeper.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from prefixcode import kernel
from prefixcode.distributions import FiniteDistribution
from prefixcode.errors import (
    KraftViolationError,
    NonPositiveEntryError,
    NotNormalizedError,
    NotSortedError,
    SizeMismatchError,
    TooFewEntriesError,
)


@dataclass(frozen=True)
class MergeState:
    """Probability state after m merges: non-increasing, total mass 1."""

    m: int
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        probs = tuple(Fraction(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise TooFewEntriesError("a merge state cannot be empty")
        for p in probs:
            if p <= 0:
                raise NonPositiveEntryError(f"state entry {p} not positive")
        for a, b in zip(probs, probs[1:]):
            if a < b:
                raise NotSortedError(f"state entries {a} < {b} out of order")
        total = sum(probs)
        if total != 1:
            raise NotNormalizedError(total)

    def __len__(self) -> int:
        return len(self.probs)


@dataclass(frozen=True)
class MergeTrace:
    """All states from m = 0 to m = n-1 plus every insertion record.

    ``insertions[m-1]`` is ``(m, k, merged)``: merge number m placed the
    merged mass at 1-based index k of the reduced state.
    """

    states: tuple[MergeState, ...]
    insertions: tuple[tuple[int, int, Fraction], ...]

    def json_lines(self) -> list[str]:
        """One JSON record per merge step, rationals rendered as strings."""
        lines = []
        for m, k, merged in self.insertions:
            record = {
                "m": m,
                "k": k,
                "merged": str(merged),
                "state": [str(p) for p in self.states[m].probs],
            }
            lines.append(json.dumps(record))
        return lines


@dataclass(frozen=True)
class LengthVector:
    """Positive, non-decreasing codeword lengths aligned with symbol order."""

    lengths: tuple[int, ...]

    def __post_init__(self):
        lengths = tuple(int(l) for l in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        if not lengths:
            raise TooFewEntriesError("length vector cannot be empty")
        for l in lengths:
            if l < 1:
                raise NonPositiveEntryError(f"length {l} must be >= 1")
        for a, b in zip(lengths, lengths[1:]):
            if a > b:
                raise NotSortedError(f"lengths {a} > {b}: must be non-decreasing")

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lengths)

    def __getitem__(self, i: int) -> int:
        return self.lengths[i]


@dataclass(frozen=True)
class CodeBook:
    """Binary codewords aligned with symbol order."""

    codewords: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self) -> Iterator[str]:
        return iter(self.codewords)


def merge_step(state: MergeState) -> tuple[MergeState, int]:
    """One standardized merge; returns the new state and the 1-based
    insertion index of the merged mass."""
    probs = state.probs
    if len(probs) < 2:
        raise TooFewEntriesError("need at least two entries to merge")
    s = probs[-1] + probs[-2]
    rest = list(probs[:-2])
    lo, hi = 0, len(rest)
    while lo < hi:
        mid = (lo + hi) // 2
        if rest[mid] <= s:
            hi = mid
        else:
            lo = mid + 1
    rest.insert(lo, s)
    return MergeState(state.m + 1, tuple(rest)), lo + 1


def huffman_lengths(dist: FiniteDistribution) -> LengthVector:
    """Codeword lengths of the standardized Huffman code (no trace)."""
    nums, _ = dist.common_numerators()
    depths, _, _, _, _ = kernel.run_merges(nums)
    return LengthVector(tuple(depths))


def huffman(dist: FiniteDistribution) -> tuple[LengthVector, MergeTrace]:
    """Standardized Huffman code lengths plus the full merge trace."""
    nums, den = dist.common_numerators()
    depths, ks, sums, raw_states, _ = kernel.run_merges(nums, record_states=True)
    states = [MergeState(0, dist.probs)]
    insertions = []
    for m, (k, s, vals) in enumerate(zip(ks, sums, raw_states), start=1):
        states.append(MergeState(m, tuple(Fraction(v, den) for v in vals)))
        insertions.append((m, k, Fraction(s, den)))
    return LengthVector(tuple(depths)), MergeTrace(tuple(states), tuple(insertions))


def kraft_sum(lengths: LengthVector | Iterable[int]) -> Fraction:
    """Exact sum of 2**(-l) over the vector."""
    if not isinstance(lengths, LengthVector):
        lengths = LengthVector(tuple(lengths))
    return sum(Fraction(1, 2**l) for l in lengths)


def expected_length(dist: FiniteDistribution, lengths: LengthVector | Iterable[int]) -> Fraction:
    """Exact sum of p_i * l_i."""
    if not isinstance(lengths, LengthVector):
        lengths = LengthVector(tuple(lengths))
    if len(lengths) != dist.n:
        raise SizeMismatchError(
            f"{dist.n} probabilities but {len(lengths)} lengths"
        )
    return sum(p * l for p, l in zip(dist.probs, lengths))


def canonical_codebook(lengths: LengthVector | Iterable[int]) -> CodeBook:
    """Canonical codewords: symbols sorted by (length, index) receive
    lexicographically increasing words of their lengths."""
    if not isinstance(lengths, LengthVector):
        lengths = LengthVector(tuple(lengths))
    if kraft_sum(lengths) > 1:
        raise KraftViolationError(f"lengths {tuple(lengths)} exceed the Kraft budget")
    words = []
    code = 0
    prev = lengths[0]
    for l in lengths:  # non-decreasing by construction
        code <<= l - prev
        words.append(format(code, f"0{l}b"))
        code += 1
        prev = l
    return CodeBook(tuple(words))
