"""Infinite sources with closed-form tails, and the alpha parameterization.

A source over symbols 1, 2, ... is represented by one of three generator
families, each of which can produce any prefix probability p_i and any
partial sum S_n = p_1 + ... + p_n as an exact rational.  That closed-form
requirement is what keeps truncation exact: the truncated distribution is
(p_1/S_n, ..., p_n/S_n).

The alpha view writes a distribution through its conditional tail ratios

    alpha_1 = p_1,    alpha_m = p_m / (1 - (p_1 + ... + p_{m-1})),

so that p_m = alpha_m * prod_{j<m}(1 - alpha_j) and the mass left after the
first n symbols is prod_{j<=n}(1 - alpha_j).  A constant alpha reproduces
the geometric family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from prefixcode.distributions import FiniteDistribution
from prefixcode.errors import (
    AlphaOutOfRangeError,
    NotSortedError,
    OutOfRangeError,
    PrefixMassReachesOneError,
    TooFewEntriesError,
)
from prefixcode.numutil import exact_fraction


@dataclass(frozen=True)
class AlphaVector:
    """A finite vector of conditional ratios, each strictly inside (0, 1).

    The induced probability prefix is automatically positive with partial
    sums below 1; it is *not* required to be non-increasing (that stronger
    condition is enforced by :class:`AlphaSequence`, which models a whole
    source rather than a raw prefix).
    """

    alphas: tuple[Fraction, ...]

    def __post_init__(self):
        alphas = tuple(exact_fraction(a) for a in self.alphas)
        object.__setattr__(self, "alphas", alphas)
        if not alphas:
            raise TooFewEntriesError("alpha vector must be non-empty")
        for a in alphas:
            if not 0 < a < 1:
                raise AlphaOutOfRangeError(f"alpha {a} not in (0, 1)")

    def __len__(self) -> int:
        return len(self.alphas)

    def __iter__(self):
        return iter(self.alphas)


def _coerce_alphas(alphas: AlphaVector | Sequence[Fraction]) -> tuple[Fraction, ...]:
    if isinstance(alphas, AlphaVector):
        return alphas.alphas
    return AlphaVector(tuple(alphas)).alphas


def from_alphas(alphas: AlphaVector | Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    """First n probabilities induced by the ratios (an unnormalized prefix)."""
    avec = _coerce_alphas(alphas)
    if n < 1:
        raise OutOfRangeError(f"n must be positive, got {n}")
    if n > len(avec):
        raise TooFewEntriesError(f"need at least {n} alphas, got {len(avec)}")
    probs = []
    residual = Fraction(1)
    for a in avec[:n]:
        probs.append(a * residual)
        residual *= 1 - a
    return tuple(probs)


def to_alphas(probs: Sequence[Fraction]) -> AlphaVector:
    """Exact inverse of :func:`from_alphas` on valid probability prefixes."""
    out = []
    residual = Fraction(1)
    for p in probs:
        p = exact_fraction(p)
        if p <= 0:
            raise OutOfRangeError(f"prefix entry {p} is not strictly positive")
        if p >= residual:
            raise PrefixMassReachesOneError(
                f"entry {p} consumes the remaining mass {residual}"
            )
        out.append(p / residual)
        residual -= p
    return AlphaVector(tuple(out))


class SourceSpec:
    """Generator of an infinite distribution with exact closed-form tails."""

    def prob(self, i: int) -> Fraction:
        """Exact p_i for a 1-based symbol index."""
        raise NotImplementedError

    def prefix_probs(self, n: int) -> list[Fraction]:
        """Exact [p_1, ..., p_n]."""
        raise NotImplementedError

    def head_sum(self, n: int) -> Fraction:
        """Exact S_n = p_1 + ... + p_n."""
        raise NotImplementedError

    def tail_after(self, n: int) -> Fraction:
        """Exact 1 - S_n."""
        return 1 - self.head_sum(n)

    def alphas_cover(self) -> AlphaVector:
        """Finite alpha vector whose last entry repeats forever.

        Every family in this module has an eventually constant alpha
        sequence, so criteria quantified over all alphas can be decided
        exactly from this cover.
        """
        raise NotImplementedError

    def literal(self) -> str:
        """Human-readable spec literal for report echoes."""
        raise NotImplementedError

    def _check_index(self, i: int) -> None:
        if i < 1:
            raise OutOfRangeError(f"symbol index must be >= 1, got {i}")


@dataclass(frozen=True)
class Geometric(SourceSpec):
    """p_i = ratio * (1 - ratio)**(i - 1); ratio is p_1 itself."""

    ratio: Fraction

    def __post_init__(self):
        ratio = exact_fraction(self.ratio)
        object.__setattr__(self, "ratio", ratio)
        if not 0 < ratio < 1:
            raise OutOfRangeError(f"ratio must be in (0, 1), got {ratio}")

    def prob(self, i: int) -> Fraction:
        self._check_index(i)
        return self.ratio * (1 - self.ratio) ** (i - 1)

    def prefix_probs(self, n: int) -> list[Fraction]:
        probs = []
        p = self.ratio
        for _ in range(n):
            probs.append(p)
            p *= 1 - self.ratio
        return probs

    def head_sum(self, n: int) -> Fraction:
        self._check_index(n)
        return 1 - (1 - self.ratio) ** n

    def tail_after(self, n: int) -> Fraction:
        self._check_index(n)
        return (1 - self.ratio) ** n

    def alphas_cover(self) -> AlphaVector:
        return AlphaVector((self.ratio,))

    def literal(self) -> str:
        return f"geom:{self.ratio}"


@dataclass(frozen=True)
class AlphaSequence(SourceSpec):
    """Source defined by conditional ratios; the last listed ratio repeats.

    Construction rejects ratio lists whose induced probabilities are not
    non-increasing, since a source is sorted by definition.  The repeated
    tail never breaks sortedness on its own (alpha * (1 - alpha) < alpha),
    so only consecutive listed pairs need checking.
    """

    alphas: tuple[Fraction, ...]

    def __post_init__(self):
        alphas = AlphaVector(tuple(self.alphas)).alphas
        object.__setattr__(self, "alphas", alphas)
        for a, b in zip(alphas, alphas[1:]):
            # p_{i+1} <= p_i  <=>  b * (1 - a) <= a
            if b * (1 - a) > a:
                raise NotSortedError(
                    f"ratios {a}, {b} induce an increasing probability pair"
                )

    def alpha_at(self, i: int) -> Fraction:
        self._check_index(i)
        return self.alphas[min(i, len(self.alphas)) - 1]

    def prob(self, i: int) -> Fraction:
        self._check_index(i)
        return self.prefix_probs(i)[-1]

    def prefix_probs(self, n: int) -> list[Fraction]:
        probs = []
        residual = Fraction(1)
        for i in range(1, n + 1):
            a = self.alpha_at(i)
            probs.append(a * residual)
            residual *= 1 - a
        return probs

    def head_sum(self, n: int) -> Fraction:
        return 1 - self.tail_after(n)

    def tail_after(self, n: int) -> Fraction:
        self._check_index(n)
        listed = len(self.alphas)
        residual = Fraction(1)
        for a in self.alphas[: min(n, listed)]:
            residual *= 1 - a
        if n > listed:
            residual *= (1 - self.alphas[-1]) ** (n - listed)
        return residual

    def alphas_cover(self) -> AlphaVector:
        return AlphaVector(self.alphas)

    def literal(self) -> str:
        return "alpha:[" + ",".join(str(a) for a in self.alphas) + "]"


@dataclass(frozen=True)
class ExplicitHead(SourceSpec):
    """Explicit leading probabilities, then a geometric split of the rest.

    After the listed head the remaining mass M = 1 - sum(head) is spent as
    M * ratio * (1 - ratio)**(j - 1), which keeps every partial sum in
    closed form.  The first tail entry must not exceed the last head entry.
    """

    head: tuple[Fraction, ...]
    ratio: Fraction

    def __post_init__(self):
        head = tuple(exact_fraction(p) for p in self.head)
        ratio = exact_fraction(self.ratio)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "ratio", ratio)
        if not head:
            raise TooFewEntriesError("head must be non-empty")
        if not 0 < ratio < 1:
            raise OutOfRangeError(f"ratio must be in (0, 1), got {ratio}")
        for p in head:
            if p <= 0:
                raise OutOfRangeError(f"head entry {p} is not strictly positive")
        for a, b in zip(head, head[1:]):
            if a < b:
                raise NotSortedError(f"head entries {a} < {b} are not sorted")
        mass = sum(head)
        if mass >= 1:
            raise PrefixMassReachesOneError(f"head mass {mass} leaves no tail")
        if (1 - mass) * ratio > head[-1]:
            raise NotSortedError("first tail entry exceeds the last head entry")

    def _tail_mass(self) -> Fraction:
        return 1 - sum(self.head)

    def prob(self, i: int) -> Fraction:
        self._check_index(i)
        k = len(self.head)
        if i <= k:
            return self.head[i - 1]
        return self._tail_mass() * self.ratio * (1 - self.ratio) ** (i - k - 1)

    def prefix_probs(self, n: int) -> list[Fraction]:
        k = len(self.head)
        probs = list(self.head[:n])
        p = self._tail_mass() * self.ratio
        for _ in range(k, n):
            probs.append(p)
            p *= 1 - self.ratio
        return probs

    def head_sum(self, n: int) -> Fraction:
        self._check_index(n)
        k = len(self.head)
        if n <= k:
            return sum(self.head[:n])
        return sum(self.head) + self._tail_mass() * (1 - (1 - self.ratio) ** (n - k))

    def tail_after(self, n: int) -> Fraction:
        self._check_index(n)
        k = len(self.head)
        if n <= k:
            return 1 - sum(self.head[:n])
        return self._tail_mass() * (1 - self.ratio) ** (n - k)

    def alphas_cover(self) -> AlphaVector:
        # conditional ratios over the head, then the constant tail ratio
        alphas = list(to_alphas(self.head))
        alphas.append(self.ratio)
        return AlphaVector(tuple(alphas))

    def literal(self) -> str:
        head = ",".join(str(p) for p in self.head)
        return f"head:[{head}]+geom:{self.ratio}"


def truncate(spec: SourceSpec, n: int) -> FiniteDistribution:
    """Keep the first n symbols and renormalize by the exact partial sum."""
    if n < 2:
        raise OutOfRangeError(f"truncation needs n >= 2, got {n}")
    sn = spec.head_sum(n)
    return FiniteDistribution(tuple(p / sn for p in spec.prefix_probs(n)))
