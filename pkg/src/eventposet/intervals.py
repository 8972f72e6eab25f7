"""Generalized intervals and their pair quantification.

An interval is just an ordered pair of events; the endpoints need not be
comparable. Relative to chains it is quantified by an interval pair, two
closed-interval lengths obtained from projections. Pairs carry a basis
tag (which quantification produced them) so that cross-basis arithmetic
is rejected rather than silently wrong: componentwise addition only holds
within one subspace.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .chains import ValuedChain, as_fraction
from .errors import (
    BasisMismatchError,
    MissingProjectionError,
    NoSharedEndpointError,
    NotBetweenError,
    NotCompatibleError,
    NotCoordinatedError,
    OutOfRangeError,
    SideUnknownError,
)
from .poset import EventId
from .projection import ProjectionCase, classify_projection, forward_project
from .structure import Betweenness, CollinearityCase, check_coordinated, matching_cases


class PairBasis(Enum):
    ONE_CHAIN_SAME_SIDE = "one-chain-same-side"
    ONE_CHAIN_STRADDLE = "one-chain-straddle"
    TWO_CHAIN = "two-chain"


class IntervalKind(Enum):
    CHAIN_LIKE = "chain-like"
    ANTICHAIN_LIKE = "antichain-like"
    PROJECTION_LIKE = "projection-like"


@dataclass(frozen=True)
class GeneralizedInterval:
    a: EventId
    b: EventId


@dataclass(frozen=True)
class IntervalPair:
    """Two-component quantification of an interval.

    Components are exact rationals except downstream of an inexact pair
    transform, where they may be floats. ``chains`` names the quantifying
    chain(s), when known.
    """

    first: Fraction | float
    second: Fraction | float
    basis: PairBasis = PairBasis.TWO_CHAIN
    chains: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.first, float):
            object.__setattr__(self, "first", as_fraction(self.first))
        if not isinstance(self.second, float):
            object.__setattr__(self, "second", as_fraction(self.second))

    @property
    def is_symmetric(self) -> bool:
        return self.first == self.second

    @property
    def is_antisymmetric(self) -> bool:
        return self.first == -self.second

    def __str__(self) -> str:
        return f"({self.first}, {self.second})"


@dataclass(frozen=True)
class IntervalClassification:
    kind: IntervalKind
    pure: bool


def pair(first, second) -> IntervalPair:
    """Bare two-chain pair, for transform-level arithmetic and tests."""
    return IntervalPair(first, second)


def _quantify(x: EventId, vc: ValuedChain) -> tuple[Fraction, Fraction]:
    outcome = classify_projection(x, vc.chain)
    if outcome.case is not ProjectionCase.D_BOTH:
        raise MissingProjectionError(
            f"endpoint {x} is {outcome.case.value} with respect to chain "
            f"{vc.name!r}"
        )
    return vc.value_of(outcome.forward), vc.value_of(outcome.backward)


def _on_p_side(side: Betweenness) -> bool:
    if side is Betweenness.NONE:
        raise SideUnknownError("endpoint side relative to the chain is unknown")
    return side is Betweenness.P_SIDE


def interval_pair_one_chain(
    interval: GeneralizedInterval,
    p: ValuedChain,
    side_a: Betweenness,
    side_b: Betweenness,
) -> IntervalPair:
    """Quantify by a single chain, given each endpoint's side.

    Sides are betweenness values relative to (P, partner): P_SIDE means
    the endpoint sits beyond P, anything else on the partner side. With
    both endpoints on one side the pair is (forward length, backward
    length); with the chain straddled the projections cross over.
    """
    fa, ba = _quantify(interval.a, p)
    fb, bb = _quantify(interval.b, p)
    straddles = _on_p_side(side_a) != _on_p_side(side_b)
    if straddles:
        return IntervalPair(
            fb - ba, bb - fa, PairBasis.ONE_CHAIN_STRADDLE, (p.name,)
        )
    return IntervalPair(
        fb - fa, bb - ba, PairBasis.ONE_CHAIN_SAME_SIDE, (p.name,)
    )


def _require_coordinated(
    p: ValuedChain,
    q: ValuedChain,
    p_range: tuple[int, int] | None = None,
    q_range: tuple[int, int] | None = None,
) -> None:
    try:
        coordinated = check_coordinated(p, q, p_range, q_range)
    except (MissingProjectionError, NotCompatibleError) as exc:
        raise NotCoordinatedError(
            f"chains {p.name!r} and {q.name!r}: {exc}"
        ) from exc
    if not coordinated:
        raise NotCoordinatedError(
            f"chains {p.name!r} and {q.name!r} do not preserve projected "
            "interval lengths"
        )


def _require_between(x: EventId, p: ValuedChain, q: ValuedChain) -> None:
    # Enforced when decidable: the full case test needs projections that
    # finite windows may cut off even for elements that sit between the
    # chains, so an undecidable endpoint is trusted to the caller.
    try:
        matched = matching_cases(x, p.chain, q.chain)
    except MissingProjectionError:
        return
    if matched and matched[0] is not CollinearityCase.II:
        raise NotBetweenError(
            f"endpoint {x} is not between chains {p.name!r} and {q.name!r}"
        )


def interval_pair_two_chains(
    interval: GeneralizedInterval, p: ValuedChain, q: ValuedChain
) -> IntervalPair:
    """Quantify by forward projections onto two coordinated chains."""
    _require_coordinated(p, q)
    _require_between(interval.a, p, q)
    _require_between(interval.b, p, q)
    values = []
    for vc in (p, q):
        images = []
        for x in (interval.a, interval.b):
            image = forward_project(x, vc.chain)
            if image is None:
                raise MissingProjectionError(
                    f"endpoint {x} does not forward project onto {vc.name!r}"
                )
            images.append(vc.value_of(image))
        values.append(images[1] - images[0])
    return IntervalPair(values[0], values[1], PairBasis.TWO_CHAIN, (p.name, q.name))


def length_of_pair(p: IntervalPair) -> Fraction:
    """Chain-like extent: the mean of the components."""
    return (p.first + p.second) / 2


def distance_of_pair(p: IntervalPair) -> Fraction:
    """Antichain-like extent: half the component difference."""
    return (p.first - p.second) / 2


def chain_distance(
    p: ValuedChain,
    q: ValuedChain,
    p_event: EventId,
    q_event: EventId,
    p_range: tuple[int, int] | None = None,
    q_range: tuple[int, int] | None = None,
) -> Fraction:
    """Distance between coordinated chains from one element of each.

    Computed as ((p - Pq) - (Qp - q)) / 2 in valuations. Coordination,
    checked over the given index ranges (whole chains by default), makes
    the result independent of which elements are chosen; it is symmetric
    in the chain pair and zero only for chains at no separation.
    """
    _require_coordinated(p, q, p_range, q_range)
    if p.index_of(p_event) is None:
        raise OutOfRangeError(f"event {p_event} is not on chain {p.name!r}")
    if q.index_of(q_event) is None:
        raise OutOfRangeError(f"event {q_event} is not on chain {q.name!r}")
    p_image = forward_project(q_event, p.chain)
    q_image = forward_project(p_event, q.chain)
    if p_image is None or q_image is None:
        raise OutOfRangeError(
            f"events {p_event}, {q_event} do not mutually project within "
            "the coordinated range"
        )
    delta_p = p.value_of(p_event) - p.value_of(p_image)
    delta_q = q.value_of(q_image) - q.value_of(q_event)
    return (delta_p - delta_q) / 2


def decompose(p: IntervalPair) -> tuple[IntervalPair, IntervalPair]:
    """Split into symmetric plus antisymmetric parts; they re-add exactly."""
    mean = (p.first + p.second) / 2
    half_diff = (p.first - p.second) / 2
    symmetric = IntervalPair(mean, mean, p.basis, p.chains)
    antisymmetric = IntervalPair(half_diff, -half_diff, p.basis, p.chains)
    return symmetric, antisymmetric


def classify_interval(p: IntervalPair) -> IntervalClassification:
    """Like signs are chain-like, opposite antichain-like, a zero
    component projection-like. Pure means equal magnitudes; the (0, 0)
    pair counts as pure projection-like."""
    product = p.first * p.second
    if product > 0:
        kind = IntervalKind.CHAIN_LIKE
    elif product < 0:
        kind = IntervalKind.ANTICHAIN_LIKE
    else:
        kind = IntervalKind.PROJECTION_LIKE
    return IntervalClassification(kind, abs(p.first) == abs(p.second))


def join_intervals(
    first: GeneralizedInterval,
    first_pair: IntervalPair,
    second: GeneralizedInterval,
    second_pair: IntervalPair,
) -> tuple[GeneralizedInterval, IntervalPair]:
    """Join [a,b] and [b,c]; pairs in one basis add componentwise.

    Pairs quantified against different chains or bases describe distinct
    subspaces and do not add; such joins are refused.
    """
    if first.b != second.a:
        raise NoSharedEndpointError(
            f"intervals [{first.a}, {first.b}] and [{second.a}, {second.b}] "
            "do not share the middle endpoint"
        )
    if first_pair.basis is not second_pair.basis or first_pair.chains != second_pair.chains:
        raise BasisMismatchError(
            f"cannot add pairs quantified in bases {first_pair.basis.value} "
            f"{first_pair.chains} and {second_pair.basis.value} {second_pair.chains}"
        )
    joined = GeneralizedInterval(first.a, second.b)
    summed = IntervalPair(
        first_pair.first + second_pair.first,
        first_pair.second + second_pair.second,
        first_pair.basis,
        first_pair.chains,
    )
    return joined, summed


def split_at_artificial_event(
    interval: GeneralizedInterval, p: ValuedChain, q: ValuedChain
) -> tuple[Fraction, Fraction]:
    """Projections (p0, q0) of the artificial event splitting the interval.

    The event is defined so that [a, 0] is quantified by an antisymmetric
    pair and [0, b] by a symmetric one; together they realize the
    symmetric-antisymmetric decomposition as an actual join.
    """
    _require_coordinated(p, q)
    _require_between(interval.a, p, q)
    _require_between(interval.b, p, q)
    coords = {}
    for label, x in (("a", interval.a), ("b", interval.b)):
        for vc in (p, q):
            image = forward_project(x, vc.chain)
            if image is None:
                raise MissingProjectionError(
                    f"endpoint {x} does not forward project onto {vc.name!r}"
                )
            coords[(label, vc.name)] = vc.value_of(image)
    pa, pb = coords[("a", p.name)], coords[("b", p.name)]
    qa, qb = coords[("a", q.name)], coords[("b", q.name)]
    p0 = (pa + pb + qa - qb) / 2
    q0 = (pa - pb + qa + qb) / 2
    return p0, q0
