"""Chains, isotonic valuations, and closed intervals along a chain.

A chain models an observer: a totally ordered run of events. Values are
exact rationals so every identity downstream (lengths, pairs, scalars)
holds exactly; equal consecutive values are allowed (coarse graining).
The arbitrary endpoint function of the interval-length solution is fixed
to the identity, so the length of a closed interval is the difference of
its endpoint values and is additive under joins.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Sequence

from .errors import (
    DifferentChainsError,
    NotAChainError,
    NotAdjacentError,
    NotIsotonicError,
)
from .poset import EventId, Poset

RationalLike = Rational | int | str


def as_fraction(value: RationalLike) -> Fraction:
    """Normalize ints, strings like ``3/2``, and rationals to Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Chain:
    """Strictly increasing, non-empty run of events in a poset."""

    poset: Poset
    elements: tuple[EventId, ...]
    name: str = ""

    def __post_init__(self):
        if not self.elements:
            raise NotAChainError("a chain needs at least one element")
        object.__setattr__(self, "elements", tuple(self.elements))
        for event in self.elements:
            self.poset.check_id(event)
        for i in range(len(self.elements) - 1):
            a, b = self.elements[i], self.elements[i + 1]
            if a == b or not self.poset.leq(a, b):
                raise NotAChainError(
                    f"elements {a} and {b} at positions {i},{i + 1} are not "
                    "strictly increasing"
                )

    def __len__(self) -> int:
        return len(self.elements)

    def index_of(self, event: EventId) -> int | None:
        try:
            return self.elements.index(event)
        except ValueError:
            return None

    def subchain(self, lo: int, hi: int, name: str = "") -> "Chain":
        """Elements at positions ``lo..hi`` inclusive."""
        return Chain(self.poset, self.elements[lo : hi + 1], name or self.name)


@dataclass(frozen=True)
class ValuedChain:
    """A chain together with an isotonic rational valuation."""

    chain: Chain
    values: tuple[Fraction, ...]

    def __post_init__(self):
        values = tuple(as_fraction(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != len(self.chain):
            raise NotIsotonicError(
                f"{len(values)} values for {len(self.chain)} chain elements"
            )
        for i in range(len(values) - 1):
            if values[i] > values[i + 1]:
                raise NotIsotonicError(
                    f"values {values[i]} > {values[i + 1]} at positions {i},{i + 1}"
                )

    @property
    def poset(self) -> Poset:
        return self.chain.poset

    @property
    def elements(self) -> tuple[EventId, ...]:
        return self.chain.elements

    @property
    def name(self) -> str:
        return self.chain.name

    def __len__(self) -> int:
        return len(self.values)

    def index_of(self, event: EventId) -> int | None:
        return self.chain.index_of(event)

    def value_of(self, event: EventId) -> Fraction:
        index = self.chain.index_of(event)
        if index is None:
            raise DifferentChainsError(f"event {event} is not on chain {self.name!r}")
        return self.values[index]

    def subchain(self, lo: int, hi: int, name: str = "") -> "ValuedChain":
        return ValuedChain(self.chain.subchain(lo, hi, name), self.values[lo : hi + 1])

    def revalued(self, values: Sequence[RationalLike]) -> "ValuedChain":
        """Same elements under a different valuation."""
        return ValuedChain(self.chain, tuple(as_fraction(v) for v in values))


def make_valued_chain(
    poset: Poset,
    elements: Sequence[EventId],
    values: Sequence[RationalLike],
    name: str = "",
) -> ValuedChain:
    """Validate and assemble a valued chain.

    Raises NotAChainError if consecutive elements are out of order or
    incomparable, NotIsotonicError if the values ever decrease.
    """
    return ValuedChain(Chain(poset, tuple(elements), name), tuple(values))


@dataclass(frozen=True)
class ClosedInterval:
    """Indices ``lo..hi`` into a valued chain, endpoints included."""

    valued_chain: ValuedChain
    lo_index: int
    hi_index: int

    def __post_init__(self):
        n = len(self.valued_chain)
        if not 0 <= self.lo_index <= self.hi_index < n:
            raise ValueError(
                f"interval indices ({self.lo_index}, {self.hi_index}) invalid "
                f"for a chain of length {n}"
            )


def interval_length(interval: ClosedInterval) -> Fraction:
    """Difference of the endpoint values."""
    vc = interval.valued_chain
    return vc.values[interval.hi_index] - vc.values[interval.lo_index]


def join_closed_intervals(first: ClosedInterval, second: ClosedInterval) -> ClosedInterval:
    """Join intervals sharing one endpoint; lengths add exactly.

    ``first`` must end where ``second`` starts, on the same valued chain.
    """
    if first.valued_chain is not second.valued_chain:
        raise DifferentChainsError("closed intervals live on different chains")
    if first.hi_index != second.lo_index:
        raise NotAdjacentError(
            f"intervals do not share a single endpoint: "
            f"{first.hi_index} != {second.lo_index}"
        )
    return ClosedInterval(first.valued_chain, first.lo_index, second.hi_index)
