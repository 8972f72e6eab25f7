"""Invariant suite run by the ``verify`` CLI subcommand.

Each check sweeps a structural identity over generated posets and fails
loudly with the name of the violated invariant. The corpus is desk scale
on purpose: every sweep is exhaustive over its window, so a pass is a
proof for that configuration rather than a statistical argument.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .chains import Chain, ClosedInterval, ValuedChain, interval_length
from .errors import EventPosetError, MissingProjectionError, OutOfRangeError
from .generators import (
    Lattice,
    LatticeChainSpec,
    LatticeSpec,
    generate_lattice,
    generate_random,
    generate_simplex,
    maximal_chains,
    standard_lattice,
)
from .intervals import (
    GeneralizedInterval,
    IntervalKind,
    chain_distance,
    classify_interval,
    decompose,
    interval_pair_one_chain,
    interval_pair_two_chains,
    pair,
)
from .poset import Poset
from .projection import backward_project, forward_project
from .spacetime import (
    PairTransform,
    apply_pair_transform,
    beta,
    combine_projection_distances,
    compose_transforms,
    exact_sqrt,
    from_coords,
    lorentz_apply,
    subspace_projection,
    to_coords,
)
from .structure import (
    Betweenness,
    CollinearityCase,
    betweenness_of,
    check_coordinated,
    detect_linear_relation,
    matching_cases,
)
from .textio import format_poset_text, parse_poset_text


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def brute_forward(poset: Poset, x: int, elements: tuple[int, ...]) -> int | None:
    """Independent oracle: linear scan for the least including element."""
    for e in elements:
        if poset.leq(x, e):
            return e
    return None


def brute_backward(poset: Poset, x: int, elements: tuple[int, ...]) -> int | None:
    for e in reversed(elements):
        if poset.leq(e, x):
            return e
    return None


def projection_lattice() -> Lattice:
    """Window hosting the in-plane subspace-projection example.

    Rest chains sit at v-offsets 0, 2, 8, 10 (axis positions 0, 1, 4, 5);
    the window is tall enough for mid events to project onto all of them.
    """
    spec = LatticeSpec(
        11,
        17,
        (
            LatticeChainSpec("P", 1, 1, 0, 0),
            LatticeChainSpec("P2", 1, 1, 0, 2),
            LatticeChainSpec("Q2", 1, 1, 0, 8),
            LatticeChainSpec("Q", 1, 1, 0, 10),
        ),
    )
    return generate_lattice(spec)


def _rest_chains(lattice: Lattice) -> dict[str, ValuedChain]:
    rest = {}
    for spec in lattice.spec.chains:
        if spec.du == spec.dv:
            rest[spec.name] = lattice.chains[spec.name]
    return rest


def _aligned_rest_chains(lattice: Lattice) -> dict[str, ValuedChain]:
    """Rest chains starting on the window's past edge.

    These are pairwise coordinated over their full extents. Rest chains
    shifted into the interior (like T) pile early neighbors onto their
    first element and need caller-scoped ranges instead.
    """
    return {
        spec.name: lattice.chains[spec.name]
        for spec in lattice.spec.chains
        if spec.du == spec.dv and spec.v0 == 0
    }


# ---------------------------------------------------------------------------
# Individual checks. Each returns a list of violation strings.


def _check_order_axioms(poset: Poset) -> list[str]:
    bad = []
    for x in poset.events():
        above_x = poset.above_bits(x)
        mask = above_x
        while mask:
            low = mask & -mask
            y = low.bit_length() - 1
            mask ^= low
            if poset.above_bits(y) & ~above_x:
                bad.append(f"transitivity broken at {x} <= {y}")
            if y != x and poset.leq(y, x):
                bad.append(f"antisymmetry broken at {x}, {y}")
    return bad


def _check_reduction_roundtrip(poset: Poset) -> list[str]:
    from .poset import build_poset

    rebuilt = build_poset(poset.event_count, poset.cover_edges())
    for x in poset.events():
        if rebuilt.above_bits(x) != poset.above_bits(x):
            return [f"closure changed after reduction round-trip at event {x}"]
    return []


def _check_projection_oracle(poset: Poset, chains: Iterable[Chain]) -> list[str]:
    bad = []
    for chain in chains:
        for x in poset.events():
            if forward_project(x, chain) != brute_forward(poset, x, chain.elements):
                bad.append(f"forward projection of {x} onto {chain.name!r}")
            if backward_project(x, chain) != brute_backward(poset, x, chain.elements):
                bad.append(f"backward projection of {x} onto {chain.name!r}")
    return bad


def _check_projection_monotone(poset: Poset, chains: Iterable[Chain]) -> list[str]:
    bad = []
    for chain in chains:
        forwards = {x: forward_project(x, chain) for x in poset.events()}
        backwards = {x: backward_project(x, chain) for x in poset.events()}
        for x in poset.events():
            fx, bx = forwards[x], backwards[x]
            if fx is not None and bx is not None and not poset.leq(bx, fx):
                bad.append(f"projection sandwich broken at {x} on {chain.name!r}")
            mask = poset.above_bits(x)
            while mask:
                low = mask & -mask
                y = low.bit_length() - 1
                mask ^= low
                fy, by = forwards[y], backwards[y]
                if fx is not None and fy is not None and not poset.leq(fx, fy):
                    bad.append(f"forward monotonicity broken at {x} <= {y}")
                if bx is not None and by is not None and not poset.leq(bx, by):
                    bad.append(f"backward monotonicity broken at {x} <= {y}")
    return bad


def _check_collinearity_unique(lattice: Lattice) -> list[str]:
    # Elements lying on one of the chains sit on the boundary between
    # "between" and that chain's side, and genuinely satisfy both identity
    # blocks; the uniqueness claim is about elements off the chains.
    bad = []
    names = sorted(lattice.chains)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            p, q = lattice.chains[a], lattice.chains[b]
            on_chain = set(p.elements) | set(q.elements)
            if set(p.elements) & set(q.elements):
                # Intersecting chains degenerate the same way: projections
                # landing on a shared element satisfy two identity blocks.
                continue
            for x in lattice.poset.events():
                if x in on_chain:
                    continue
                try:
                    matched = matching_cases(x, p.chain, q.chain)
                except MissingProjectionError:
                    continue
                if len(matched) > 1:
                    bad.append(
                        f"event {x} matches cases "
                        f"{[c.value for c in matched]} against {a}, {b}"
                    )
    return bad


def _check_self_duality(lattice: Lattice) -> list[str]:
    bad = []
    reversed_poset = lattice.poset.reverse()
    names = sorted(lattice.chains)
    swap = {
        CollinearityCase.I: CollinearityCase.I,
        CollinearityCase.II: CollinearityCase.II,
        CollinearityCase.III: CollinearityCase.III,
        CollinearityCase.IV: CollinearityCase.V,
        CollinearityCase.V: CollinearityCase.IV,
        CollinearityCase.NOT_COLLINEAR: CollinearityCase.NOT_COLLINEAR,
    }
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            p, q = lattice.chains[a], lattice.chains[b]
            p_rev = Chain(reversed_poset, p.elements[::-1], p.name)
            q_rev = Chain(reversed_poset, q.elements[::-1], q.name)
            for x in lattice.poset.events():
                try:
                    direct = matching_cases(x, p.chain, q.chain)
                    dual = matching_cases(x, p_rev, q_rev)
                except MissingProjectionError:
                    continue
                got = dual[0] if dual else CollinearityCase.NOT_COLLINEAR
                want = swap[direct[0] if direct else CollinearityCase.NOT_COLLINEAR]
                if want in (CollinearityCase.I, CollinearityCase.II, CollinearityCase.III):
                    if got is not want:
                        bad.append(
                            f"event {x} flips from {want.value} to {got.value} "
                            f"under order reversal against {a}, {b}"
                        )
    return bad


def _check_length_additivity(chains: Iterable[ValuedChain]) -> list[str]:
    bad = []
    for vc in chains:
        n = len(vc)
        for i in range(n):
            for k in range(i, n):
                whole = interval_length(ClosedInterval(vc, i, k))
                for j in range(i, k + 1):
                    left = interval_length(ClosedInterval(vc, i, j))
                    right = interval_length(ClosedInterval(vc, j, k))
                    if left + right != whole:
                        bad.append(f"additivity broken on {vc.name!r} at {i},{j},{k}")
    return bad


def _check_coordination(lattice: Lattice) -> list[str]:
    bad = []
    rest = _aligned_rest_chains(lattice)
    names = sorted(rest)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            try:
                if not check_coordinated(rest[a], rest[b]):
                    bad.append(f"rest chains {a}, {b} not coordinated")
                if not check_coordinated(rest[b], rest[a]):
                    bad.append(f"coordination not symmetric for {a}, {b}")
            except EventPosetError as exc:
                bad.append(f"coordination check failed for {a}, {b}: {exc}")
            doubled = rest[b].revalued([2 * v for v in rest[b].values])
            try:
                if check_coordinated(rest[a], doubled):
                    bad.append(f"double-rate revaluation of {b} still coordinated")
            except EventPosetError:
                pass
    # An interior rest chain coordinates over scoped ranges: the early
    # neighbors piling onto its first element are excluded by the window.
    if "T" in lattice.chains and "P" in rest:
        t = lattice.chains["T"]
        p = rest["P"]
        try:
            if not check_coordinated(p, t, (2, len(t) + 1), (0, len(t) - 1)):
                bad.append("P and T not coordinated over scoped ranges")
        except EventPosetError as exc:
            bad.append(f"scoped coordination P, T failed: {exc}")
    return bad


def _check_linear_relation(lattice: Lattice) -> list[str]:
    """Boosted chains against the rest chain sharing their origin.

    A boosted chain recedes from that chain for its whole extent, so the
    per-step projection lengths are exactly (du, dv). Against rest chains
    it crosses inside the window, the discrete projections wobble around
    the crossing and no exact relation is expected.
    """
    bad = []
    rest = {
        (spec.u0, spec.v0): lattice.chains[spec.name]
        for spec in lattice.spec.chains
        if spec.du == spec.dv
    }
    for spec in lattice.spec.chains:
        if spec.du == spec.dv:
            continue
        s = lattice.chains[spec.name]
        origin_rest = rest.get((spec.u0, spec.v0))
        if origin_rest is None:
            continue
        try:
            relation = detect_linear_relation(s, origin_rest)
        except EventPosetError as exc:
            bad.append(f"{spec.name} vs {origin_rest.name}: {exc}")
            continue
        if (relation.m, relation.n) != (Fraction(spec.du), Fraction(spec.dv)):
            bad.append(
                f"{spec.name} vs {origin_rest.name}: detected "
                f"({relation.m}, {relation.n}), expected ({spec.du}, {spec.dv})"
            )
        self_relation = detect_linear_relation(s, s)
        if (self_relation.m, self_relation.n) != (Fraction(1), Fraction(1)):
            bad.append(f"{spec.name} vs itself: {self_relation}")
    return bad


def _check_distance_constancy(lattice: Lattice) -> list[str]:
    bad = []
    rest = _aligned_rest_chains(lattice)
    names = sorted(rest)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            p, q = rest[a], rest[b]
            seen: set[Fraction] = set()
            for p_event in p.elements:
                for q_event in q.elements:
                    try:
                        seen.add(chain_distance(p, q, p_event, q_event))
                    except OutOfRangeError:
                        continue
            if len(seen) > 1:
                bad.append(f"distance between {a}, {b} varies: {sorted(seen)}")
            if not seen:
                bad.append(f"distance between {a}, {b} never defined")
    return bad


def _check_two_vs_one_chain(lattice: Lattice) -> list[str]:
    bad = []
    rest = _aligned_rest_chains(lattice)
    names = sorted(rest)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            p, q = rest[a], rest[b]
            between = [
                x
                for x in lattice.poset.events()
                if _safe_betweenness(x, p, q) is Betweenness.BETWEEN
            ]
            for xa in between:
                for xb in between:
                    interval = GeneralizedInterval(xa, xb)
                    two = interval_pair_two_chains(interval, p, q)
                    one = interval_pair_one_chain(
                        interval, p, Betweenness.BETWEEN, Betweenness.BETWEEN
                    )
                    if (two.first, two.second) != (one.first, one.second):
                        bad.append(
                            f"[{xa},{xb}] splits {a},{b}: two-chain {two} vs "
                            f"one-chain {one}"
                        )
    return bad


def _safe_betweenness(x: int, p: ValuedChain, q: ValuedChain) -> Betweenness:
    try:
        return betweenness_of(x, p.chain, q.chain)
    except MissingProjectionError:
        return Betweenness.NONE


def _check_scalar_invariance(lattice: Lattice) -> list[str]:
    """Closed intervals on each chain, quantified by every other chain.

    Rest chains agree directly. A boosted chain's own tick units differ
    by the factor sqrt(mn); its self-quantification is rescaled to those
    units before comparing, which is exactly the pair-transform route.
    """
    bad = []
    rest = _aligned_rest_chains(lattice)
    boosted = [s.name for s in lattice.spec.chains if s.du != s.dv]
    for name in boosted:
        s = lattice.chains[name]
        for rest_name, p in rest.items():
            try:
                relation = detect_linear_relation(s, p)
            except EventPosetError:
                continue
            scale = exact_sqrt(relation.m * relation.n)
            if scale is None:
                bad.append(f"{name} vs {rest_name}: tick scalar not a perfect square")
                continue
            transform = PairTransform(relation.m, relation.n)
            for i in range(len(s)):
                for j in range(i, len(s)):
                    self_pair = pair(
                        scale * (s.values[j] - s.values[i]),
                        scale * (s.values[j] - s.values[i]),
                    )
                    fwd = p.value_of(forward_project(s.elements[j], p.chain)) - p.value_of(
                        forward_project(s.elements[i], p.chain)
                    )
                    bwd = p.value_of(backward_project(s.elements[j], p.chain)) - p.value_of(
                        backward_project(s.elements[i], p.chain)
                    )
                    transported = apply_pair_transform(self_pair, transform)
                    if (transported.first, transported.second) != (fwd, bwd):
                        bad.append(
                            f"{name}[{i}:{j}] transports to {transported}, "
                            f"but {rest_name} measures ({fwd}, {bwd})"
                        )
                    if self_pair.first * self_pair.second != fwd * bwd:
                        bad.append(
                            f"{name}[{i}:{j}] scalar differs from {rest_name}'s"
                        )
    # Rest-chain pairs quantify every shared interval identically.
    names = sorted(rest)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            p, q = rest[a], rest[b]
            between = [
                x
                for x in lattice.poset.events()
                if _safe_betweenness(x, p, q) is Betweenness.BETWEEN
            ]
            for xa in between:
                for xb in between:
                    interval = GeneralizedInterval(xa, xb)
                    left = interval_pair_two_chains(interval, p, q)
                    right = interval_pair_one_chain(
                        interval, q, Betweenness.BETWEEN, Betweenness.BETWEEN
                    )
                    if left.first * left.second != right.first * right.second:
                        bad.append(f"scalar of [{xa},{xb}] differs between {a} and {b}")
    return bad


def _check_sign_preservation(lattice: Lattice) -> list[str]:
    bad = []
    rest = _aligned_rest_chains(lattice)
    names = sorted(rest)
    chain_pairs = [
        (rest[a], rest[b]) for i, a in enumerate(names) for b in names[i + 1 :]
    ]
    events = list(lattice.poset.events())
    for xa in events:
        for xb in events:
            if xa == xb:
                continue
            kinds = set()
            for p, q in chain_pairs:
                if (
                    _safe_betweenness(xa, p, q) is Betweenness.BETWEEN
                    and _safe_betweenness(xb, p, q) is Betweenness.BETWEEN
                ):
                    kind = classify_interval(
                        interval_pair_two_chains(GeneralizedInterval(xa, xb), p, q)
                    ).kind
                    kinds.add(kind)
            if IntervalKind.CHAIN_LIKE in kinds and IntervalKind.ANTICHAIN_LIKE in kinds:
                bad.append(f"interval [{xa},{xb}] flips between chain pairs")
    return bad


def _check_simplex(n_max: int = 8) -> list[str]:
    bad = []
    for n in range(2, n_max + 1):
        _, chains = generate_simplex(n)
        names = sorted(chains)
        magnitudes = set()
        for i, a in enumerate(names):
            for b in names[i + 1 :]:
                found = None
                for p_event in chains[a].elements:
                    for q_event in chains[b].elements:
                        try:
                            found = abs(
                                chain_distance(chains[a], chains[b], p_event, q_event)
                            )
                        except OutOfRangeError:
                            continue
                if found is None:
                    bad.append(f"simplex N={n}: no distance between {a}, {b}")
                else:
                    magnitudes.add(found)
        if len(magnitudes) != 1:
            bad.append(f"simplex N={n}: unequal distances {sorted(magnitudes)}")
        elif n == 3 and magnitudes != {Fraction(1)}:
            bad.append(f"simplex N=3: distance {magnitudes} instead of 1")
    return bad


def _check_transform_layer(samples: int = 300, seed: int = 5) -> list[str]:
    bad = []
    rng = random.Random(seed)

    def random_fraction(lo=1, hi=12):
        return Fraction(rng.randint(lo, hi), rng.randint(lo, hi))

    for _ in range(samples):
        t = PairTransform(random_fraction(), random_fraction())
        t2 = PairTransform(random_fraction(), random_fraction())
        b1, b2 = beta(t), beta(t2)
        if beta(compose_transforms(t, t2)) != (b1 + b2) / (1 + b1 * b2):
            bad.append(f"velocity addition broken for {t}, {t2}")
        p = pair(rng.randint(-9, 9), rng.randint(-9, 9))
        transported = apply_pair_transform(p, t)
        via_coords = lorentz_apply(to_coords(p), t)
        back = to_coords(transported)
        for lhs, rhs in ((via_coords.dt, back.dt), (via_coords.dx, back.dx)):
            if not math.isclose(float(lhs), float(rhs), rel_tol=1e-12, abs_tol=1e-12):
                bad.append(f"pair and coordinate routes disagree for {p} under {t}")
        null = pair(rng.randint(1, 9), 0)
        moved = apply_pair_transform(null, t)
        if not (moved.first != 0 and float(moved.second) == 0.0):
            bad.append(f"null pair {null} lost its zero component under {t}")
        sym, anti = decompose(p)
        if (sym.first + anti.first, sym.second + anti.second) != (p.first, p.second):
            bad.append(f"decomposition does not re-add for {p}")
    return bad


def _check_minkowski(samples: int = 1000, seed: int = 6) -> list[str]:
    bad = []
    rng = random.Random(seed)
    for _ in range(samples):
        p = pair(
            Fraction(rng.randint(-50, 50), rng.randint(1, 9)),
            Fraction(rng.randint(-50, 50), rng.randint(1, 9)),
        )
        dt = (p.first + p.second) / 2
        dx = (p.first - p.second) / 2
        if p.first * p.second != dt * dt - dx * dx:
            bad.append(f"quadratic form identity broken for {p}")
        roundtrip = from_coords(to_coords(p))
        if (roundtrip.first, roundtrip.second) != (p.first, p.second):
            bad.append(f"coordinate round-trip broken for {p}")
    return bad


def _check_subspace_projection(lattice: Lattice) -> list[str]:
    bad = []
    x = lattice.event(6, 10)
    y = lattice.event(2, 10)
    expected = Fraction(2)
    for a, b in (("P", "Q"), ("P2", "Q2"), ("P", "Q2"), ("P2", "Q")):
        value = subspace_projection(x, y, lattice.chains[a], lattice.chains[b])
        if value != expected:
            bad.append(f"projection via {a},{b} gave {value}, expected {expected}")
    # Off-axis displacement cancels: each squared distance gains h^2, and
    # the antisymmetric combination removes it.
    for h in (1.0, 3.5, 2.6):
        displaced = combine_projection_distances(
            math.sqrt(4 + h * h),
            math.sqrt(9 + h * h),
            math.sqrt(16 + h * h),
            math.sqrt(1 + h * h),
            5.0,
        )
        if not math.isclose(displaced, 2.0, rel_tol=1e-12, abs_tol=1e-12):
            bad.append(f"off-axis displacement h={h} shifted projection to {displaced}")
    return bad


def _check_text_roundtrip(poset: Poset, chains: dict[str, ValuedChain]) -> list[str]:
    text = format_poset_text(poset, chains)
    reparsed, rechains = parse_poset_text(text)
    if reparsed.event_count != poset.event_count:
        return ["event count changed across text round-trip"]
    for x in poset.events():
        if reparsed.above_bits(x) != poset.above_bits(x):
            return [f"closure changed across text round-trip at {x}"]
    if set(rechains) != set(chains):
        return ["chain set changed across text round-trip"]
    return []


# ---------------------------------------------------------------------------


def run_for(
    poset: Poset,
    chains: dict[str, ValuedChain],
    report: Callable[[str], None] = print,
) -> list[CheckResult]:
    """Run the structure-agnostic checks against one poset.

    Used by ``verify --input/--gen``; generator-specific sweeps (scalar
    invariance, coordination, simplex distances) need the built-in
    configurations and run through :func:`run_all` instead.
    """
    checks: list[tuple[str, Callable[[], list[str]]]] = [
        ("order-axioms", lambda: _check_order_axioms(poset)),
        ("reduction-roundtrip", lambda: _check_reduction_roundtrip(poset)),
        ("text-roundtrip", lambda: _check_text_roundtrip(poset, chains)),
    ]
    if chains:
        chain_list = [vc.chain for vc in chains.values()]
        checks.extend(
            [
                (
                    "projection-oracle",
                    lambda: _check_projection_oracle(poset, chain_list),
                ),
                (
                    "projection-monotonicity",
                    lambda: _check_projection_monotone(poset, chain_list),
                ),
                (
                    "interval-length-additivity",
                    lambda: _check_length_additivity(chains.values()),
                ),
            ]
        )
    return _run_checks(checks, report)


def run_all(report: Callable[[str], None] = print) -> list[CheckResult]:
    """Run every invariant check over the built-in corpus."""
    small = standard_lattice(8, 8)
    big = standard_lattice(12, 12)
    projection = projection_lattice()
    randoms = [generate_random(seed, 40, density) for seed, density in
               ((0, 0.08), (1, 0.2), (2, 0.5))]

    checks: list[tuple[str, Callable[[], list[str]]]] = []

    def add(name: str, fn: Callable[[], list[str]]):
        checks.append((name, fn))

    for label, poset in (
        ("lattice-8x8", small.poset),
        ("lattice-12x12", big.poset),
        *((f"random-{i}", p) for i, p in enumerate(randoms)),
    ):
        add(f"order-axioms[{label}]", lambda p=poset: _check_order_axioms(p))
        add(f"reduction-roundtrip[{label}]", lambda p=poset: _check_reduction_roundtrip(p))

    for label, lattice in (("8x8", small), ("12x12", big)):
        chains = [vc.chain for vc in lattice.chains.values()]
        add(
            f"projection-oracle[lattice-{label}]",
            lambda p=lattice.poset, c=chains: _check_projection_oracle(p, c),
        )
        add(
            f"projection-monotonicity[lattice-{label}]",
            lambda p=lattice.poset, c=chains: _check_projection_monotone(p, c),
        )
    for i, poset in enumerate(randoms):
        chains = [
            Chain(poset, elems, f"W{j}")
            for j, elems in enumerate(maximal_chains(poset, seed=i, count=3))
        ]
        add(
            f"projection-oracle[random-{i}]",
            lambda p=poset, c=chains: _check_projection_oracle(p, c),
        )

    add("interval-length-additivity", lambda: _check_length_additivity(big.chains.values()))
    add("collinearity-uniqueness", lambda: _check_collinearity_unique(small))
    add("collinearity-self-duality", lambda: _check_self_duality(small))
    add("coordination-rest-chains", lambda: _check_coordination(big))
    add("linear-relation-detection", lambda: _check_linear_relation(big))
    add("chain-distance-constancy", lambda: _check_distance_constancy(big))
    add("two-chain-vs-one-chain", lambda: _check_two_vs_one_chain(small))
    add("scalar-invariance", lambda: _check_scalar_invariance(big))
    add("sign-preservation", lambda: _check_sign_preservation(small))
    add("simplex-equal-distances", lambda: _check_simplex())
    add("transform-layer", lambda: _check_transform_layer())
    add("minkowski-identity", lambda: _check_minkowski())
    add("subspace-projection", lambda: _check_subspace_projection(projection))
    add("text-roundtrip", lambda: _check_text_roundtrip(big.poset, big.chains))

    return _run_checks(checks, report)


def _run_checks(
    checks: list[tuple[str, Callable[[], list[str]]]],
    report: Callable[[str], None],
) -> list[CheckResult]:
    results = []
    for name, fn in checks:
        violations = fn()
        result = CheckResult(name, not violations, "; ".join(violations[:3]))
        results.append(result)
        status = "PASS" if result.passed else "FAIL"
        suffix = f": {result.detail}" if result.detail else ""
        report(f"[{status}] {name}{suffix}")
    return results
