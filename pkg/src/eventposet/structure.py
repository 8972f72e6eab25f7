"""Chain-induced structure: collinearity, betweenness, coordination.

Distinguishing chains induces geometry in an otherwise structureless
poset. An element is collinear with its projections onto two chains when
composing projections through one chain reproduces the direct projections
onto the other; five identity patterns are possible. Three of them are
invariant under order reversal (proper collinearity) and read as "element
on this side / between / on that side", which orders chains along an
emergent spatial direction. Compatibility and coordination make two
chains agree on each other's interval lengths, the analogue of observers
at relative rest.

All classification here is per element, from that element's own
projections; twists hidden between an element's projections would only be
visible through other elements and are deliberately not searched for.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .chains import Chain, ValuedChain
from .errors import (
    MissingProjectionError,
    NotBetweenError,
    NotCompatibleError,
    NotLinearlyRelatedError,
    NotProperlyCollinearError,
)
from .poset import EventId
from .projection import backward_project, forward_project


class CollinearityCase(Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    V = "V"
    NOT_COLLINEAR = "not-collinear"


class Betweenness(Enum):
    """Side of an element relative to an ordered chain pair (P, Q)."""

    P_SIDE = "x|P|Q"
    BETWEEN = "P|x|Q"
    Q_SIDE = "P|Q|x"
    NONE = "none"


class IntervalPosition(Enum):
    """The nine placements of an interval [a, b] against a chain pair."""

    INTERVAL_P_SIDE = "[a,b]|P|Q"
    BETWEEN = "P|[a,b]|Q"
    INTERVAL_Q_SIDE = "P|Q|[a,b]"
    A_P_B_Q = "a|P|b|Q"
    B_P_A_Q = "b|P|a|Q"
    A_P_Q_B = "a|P|Q|b"
    B_P_Q_A = "b|P|Q|a"
    P_A_Q_B = "P|a|Q|b"
    P_B_Q_A = "P|b|Q|a"


@dataclass(frozen=True)
class LinearRelation:
    """Constant projection step lengths (m, n) per unit of valuation."""

    m: Fraction
    n: Fraction

    def __post_init__(self):
        if self.m < 0 or self.n < 0:
            raise ValueError("projection step lengths cannot be negative")


def _primaries(x: EventId, chain: Chain) -> tuple[EventId, EventId]:
    fwd = forward_project(x, chain)
    bwd = backward_project(x, chain)
    if fwd is None or bwd is None:
        raise MissingProjectionError(
            f"event {x} does not project both ways onto chain {chain.name!r}"
        )
    return fwd, bwd


def _case_patterns(px, pbx, qx, qbx, p_chain, q_chain):
    """The five identity blocks, as lazy checks.

    Each entry is (case, [(lhs, direction, chain, argument), ...]) where
    the identity asserts lhs == project(argument, chain, direction). A
    composite whose projection does not exist simply fails its identity.
    """
    F, B = forward_project, backward_project
    return (
        (CollinearityCase.I, ((px, B, p_chain, qx), (qx, F, q_chain, px),
                              (pbx, F, p_chain, qbx), (qbx, B, q_chain, pbx))),
        (CollinearityCase.II, ((px, F, p_chain, qbx), (qx, F, q_chain, pbx),
                               (pbx, B, p_chain, qx), (qbx, B, q_chain, px))),
        (CollinearityCase.III, ((px, F, p_chain, qx), (qx, B, q_chain, px),
                                (pbx, B, p_chain, qbx), (qbx, F, q_chain, pbx))),
        (CollinearityCase.IV, ((px, F, p_chain, qx), (qx, B, q_chain, px),
                               (pbx, F, p_chain, qbx), (qbx, B, q_chain, pbx))),
        (CollinearityCase.V, ((px, B, p_chain, qx), (qx, F, q_chain, px),
                              (pbx, B, p_chain, qbx), (qbx, F, q_chain, pbx))),
    )


def matching_cases(x: EventId, p_chain: Chain, q_chain: Chain) -> tuple[CollinearityCase, ...]:
    """All identity blocks that hold for ``x``; used by the verifier to
    confirm at most one ever matches on generated posets."""
    px, pbx = _primaries(x, p_chain)
    qx, qbx = _primaries(x, q_chain)
    matched = []
    cache: dict[tuple[int, int, int], EventId | None] = {}

    def project(argument, chain, direction):
        key = (id(chain), argument, direction is forward_project)
        if key not in cache:
            cache[key] = direction(argument, chain)
        return cache[key]

    for case, identities in _case_patterns(px, pbx, qx, qbx, p_chain, q_chain):
        if all(
            project(argument, chain, direction) == lhs
            for lhs, direction, chain, argument in identities
        ):
            matched.append(case)
    return tuple(matched)


def collinearity_case(x: EventId, p_chain: Chain, q_chain: Chain) -> CollinearityCase:
    """Classify ``x`` against the chain pair by the projection identities.

    Requires the four direct projections of ``x`` to exist
    (MissingProjectionError otherwise). Returns the first matching case,
    or NOT_COLLINEAR when none holds.
    """
    matched = matching_cases(x, p_chain, q_chain)
    return matched[0] if matched else CollinearityCase.NOT_COLLINEAR


_BETWEENNESS_OF_CASE = {
    CollinearityCase.I: Betweenness.P_SIDE,
    CollinearityCase.II: Betweenness.BETWEEN,
    CollinearityCase.III: Betweenness.Q_SIDE,
}


def betweenness_of(x: EventId, p_chain: Chain, q_chain: Chain) -> Betweenness:
    case = collinearity_case(x, p_chain, q_chain)
    return _BETWEENNESS_OF_CASE.get(case, Betweenness.NONE)


def is_properly_collinear(x: EventId, p_chain: Chain, q_chain: Chain) -> bool:
    """True for the order-reversal-invariant cases I, II, III."""
    return collinearity_case(x, p_chain, q_chain) in (
        CollinearityCase.I,
        CollinearityCase.II,
        CollinearityCase.III,
    )


def chain_properly_collinear(x_chain: Chain, p_chain: Chain, q_chain: Chain) -> bool:
    """Proper collinearity of a whole chain with a chain pair.

    Every element of ``x_chain`` must be properly collinear with (P, Q),
    and its projections must cover, without gaps, the stretch of each
    chain between the lowest backward image and the highest forward image.
    """
    # Extremal projections must exist; monotonicity then covers the rest.
    _primaries(x_chain.elements[0], p_chain)
    _primaries(x_chain.elements[-1], p_chain)
    _primaries(x_chain.elements[0], q_chain)
    _primaries(x_chain.elements[-1], q_chain)

    for target in (p_chain, q_chain):
        touched: set[int] = set()
        for x in x_chain.elements:
            if not is_properly_collinear(x, p_chain, q_chain):
                return False
            fwd, bwd = _primaries(x, target)
            touched.add(target.index_of(fwd))
            touched.add(target.index_of(bwd))
        span = range(min(touched), max(touched) + 1)
        if any(i not in touched for i in span):
            return False
    return True


def interval_betweenness(
    a: EventId, b: EventId, p_chain: Chain, q_chain: Chain
) -> IntervalPosition:
    """Combine endpoint sides into the nine-way interval placement."""
    side_a = betweenness_of(a, p_chain, q_chain)
    side_b = betweenness_of(b, p_chain, q_chain)
    if side_a is Betweenness.NONE or side_b is Betweenness.NONE:
        raise NotProperlyCollinearError(
            f"interval [{a}, {b}] has an endpoint not properly collinear "
            f"with chains {p_chain.name!r}, {q_chain.name!r}"
        )
    table = {
        (Betweenness.P_SIDE, Betweenness.P_SIDE): IntervalPosition.INTERVAL_P_SIDE,
        (Betweenness.BETWEEN, Betweenness.BETWEEN): IntervalPosition.BETWEEN,
        (Betweenness.Q_SIDE, Betweenness.Q_SIDE): IntervalPosition.INTERVAL_Q_SIDE,
        (Betweenness.P_SIDE, Betweenness.BETWEEN): IntervalPosition.A_P_B_Q,
        (Betweenness.BETWEEN, Betweenness.P_SIDE): IntervalPosition.B_P_A_Q,
        (Betweenness.P_SIDE, Betweenness.Q_SIDE): IntervalPosition.A_P_Q_B,
        (Betweenness.Q_SIDE, Betweenness.P_SIDE): IntervalPosition.B_P_Q_A,
        (Betweenness.BETWEEN, Betweenness.Q_SIDE): IntervalPosition.P_A_Q_B,
        (Betweenness.Q_SIDE, Betweenness.BETWEEN): IntervalPosition.P_B_Q_A,
    }
    return table[(side_a, side_b)]


def induced_chain_order(
    a_chain: Chain, b_chain: Chain, c_chain: Chain
) -> tuple[Chain, Chain, Chain]:
    """Total order on three chains induced by betweenness of the middle one.

    Every element of the middle chain must be properly collinear with and
    between the outer pair. The direction of the returned order follows
    the argument order; the opposite direction is equally valid.
    """
    for x in b_chain.elements:
        side = betweenness_of(x, a_chain, c_chain)
        if side is not Betweenness.BETWEEN:
            raise NotBetweenError(
                f"element {x} of chain {b_chain.name!r} is {side.value} "
                f"relative to {a_chain.name!r}, {c_chain.name!r}"
            )
    return (a_chain, b_chain, c_chain)


IndexRange = tuple[int, int]


def _full_range(vc: ValuedChain) -> IndexRange:
    return (0, len(vc) - 1)


def _window_map(
    src: ValuedChain,
    dst: ValuedChain,
    src_range: IndexRange,
    dst_range: IndexRange,
    forward: bool,
) -> list[tuple[int, int]]:
    """Index pairs (i, j) of the projection map restricted to the windows."""
    project = forward_project if forward else backward_project
    pairs = []
    for i in range(src_range[0], src_range[1] + 1):
        image = project(src.elements[i], dst.chain)
        if image is None:
            continue
        j = dst.index_of(image)
        if dst_range[0] <= j <= dst_range[1]:
            pairs.append((i, j))
    return pairs


def _bijective(pairs: list[tuple[int, int]]) -> bool:
    """Domain contiguous and image indices advancing by exactly one."""
    for (i1, j1), (i2, j2) in zip(pairs, pairs[1:]):
        if i2 != i1 + 1 or j2 != j1 + 1:
            return False
    return True


def _direction_maps(
    p: ValuedChain,
    q: ValuedChain,
    p_range: IndexRange,
    q_range: IndexRange,
) -> list[tuple[ValuedChain, ValuedChain, list[tuple[int, int]]]]:
    """The four window-restricted projection maps between two chains."""
    maps = []
    for src, dst, src_range, dst_range in (
        (p, q, p_range, q_range),
        (q, p, q_range, p_range),
    ):
        for forward in (True, False):
            pairs = _window_map(src, dst, src_range, dst_range, forward)
            maps.append((src, dst, pairs))
    return maps


def check_compatible(
    p: ValuedChain,
    q: ValuedChain,
    p_range: IndexRange | None = None,
    q_range: IndexRange | None = None,
) -> bool:
    """Are the projection maps between the windows bijective?

    The forward and the backward projection in each chain direction,
    restricted to sources whose image lands in the other window, must hit
    a contiguous run exactly once per element. Checking both directions
    keeps the relation symmetric, which element-independent distances
    rely on. Raises MissingProjectionError when some direction has no
    projections over the windows at all.
    """
    p_range = p_range or _full_range(p)
    q_range = q_range or _full_range(q)
    for src, dst, pairs in _direction_maps(p, q, p_range, q_range):
        if not pairs:
            raise MissingProjectionError(
                f"chains {src.name!r} and {dst.name!r} share no projections "
                "over the inspected ranges"
            )
        if not _bijective(pairs):
            return False
    return True


def check_coordinated(
    p: ValuedChain,
    q: ValuedChain,
    p_range: IndexRange | None = None,
    q_range: IndexRange | None = None,
) -> bool:
    """Compatible, and projected closed intervals keep their lengths.

    Checking consecutive elements suffices: lengths are additive, so equal
    unit steps imply equal lengths for every closed subinterval.
    """
    p_range = p_range or _full_range(p)
    q_range = q_range or _full_range(q)
    if not check_compatible(p, q, p_range, q_range):
        raise NotCompatibleError(
            f"chains {p.name!r} and {q.name!r} are not compatible over the "
            "inspected ranges"
        )
    for src, dst, pairs in _direction_maps(p, q, p_range, q_range):
        for (i1, j1), (i2, j2) in zip(pairs, pairs[1:]):
            src_step = src.values[i2] - src.values[i1]
            dst_step = dst.values[j2] - dst.values[j1]
            if src_step != dst_step:
                return False
    return True


def detect_linear_relation(s: ValuedChain, p: ValuedChain) -> LinearRelation:
    """Per-unit projection step lengths of chain S onto chain P.

    Each valuation step of S must forward-project onto P with length
    ``m * step`` and backward-project with length ``n * step`` for fixed
    rationals m, n; constancy is exact, with no tolerance. Zero-length
    steps (coarse graining) must project to zero-length steps.
    """
    if len(s) < 2:
        raise NotLinearlyRelatedError(
            f"chain {s.name!r} has no steps to compare"
        )
    images = []
    for x in s.elements:
        fwd, bwd = _primaries(x, p.chain)
        images.append((p.value_of(fwd), p.value_of(bwd)))

    m: Fraction | None = None
    n: Fraction | None = None
    for k in range(len(s) - 1):
        step = s.values[k + 1] - s.values[k]
        fwd_step = images[k + 1][0] - images[k][0]
        bwd_step = images[k + 1][1] - images[k][1]
        if step == 0:
            if fwd_step != 0 or bwd_step != 0:
                raise NotLinearlyRelatedError(
                    f"zero-length step {k} of {s.name!r} projects onto "
                    f"{p.name!r} with nonzero length"
                )
            continue
        ratio_f = fwd_step / step
        ratio_b = bwd_step / step
        if m is None:
            m, n = ratio_f, ratio_b
        elif ratio_f != m or ratio_b != n:
            raise NotLinearlyRelatedError(
                f"step {k} of {s.name!r} projects onto {p.name!r} with "
                f"lengths ({ratio_f}, {ratio_b}) per unit, expected ({m}, {n})"
            )
    if m is None:
        raise NotLinearlyRelatedError(
            f"chain {s.name!r} has zero total length"
        )
    return LinearRelation(m, n)
