"""Poset generators used by the test harness, the verifier, and the CLI.

The light-cone lattice is the canonical 1+1 generator: events are integer
pairs ``(u, v)`` inside a window, ordered by the product order
``(u, v) <= (u', v') iff u <= u' and v <= v'``. Projections onto straight
chains have closed forms (max/min of shifted coordinates), which gives an
independent oracle against the graph-search implementation. Chains that
step ``(1, 1)`` per tick ("rest" chains) are pairwise coordinated; a chain
stepping ``(m, n)`` per tick is linearly related to rest chains with
exactly that ``(m, n)``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .chains import ValuedChain, make_valued_chain
from .errors import ChainEscapesWindowError, EmptyWindowError
from .poset import EventId, Poset, build_poset


@dataclass(frozen=True)
class LatticeChainSpec:
    """Straight chain stepping ``(du, dv)`` per tick from ``(u0, v0)``."""

    name: str
    du: int
    dv: int
    u0: int = 0
    v0: int = 0

    def __post_init__(self):
        if self.du < 0 or self.dv < 0 or (self.du == 0 and self.dv == 0):
            raise ValueError(
                f"chain {self.name!r} must step forward in at least one "
                f"coordinate, got ({self.du}, {self.dv})"
            )


@dataclass(frozen=True)
class LatticeSpec:
    u_max: int
    v_max: int
    chains: tuple[LatticeChainSpec, ...] = ()


@dataclass(frozen=True)
class SimplexSpec:
    """N two-event chains whose tops include every bottom."""

    n_chains: int

    def __post_init__(self):
        if self.n_chains < 1:
            raise ValueError("a simplex needs at least one chain")


@dataclass(frozen=True)
class Lattice:
    """A generated window poset plus its named chains and coordinate maps."""

    spec: LatticeSpec
    poset: Poset
    chains: dict[str, ValuedChain] = field(compare=False)

    def event(self, u: int, v: int) -> EventId:
        if not (0 <= u < self.spec.u_max and 0 <= v < self.spec.v_max):
            raise ValueError(f"({u}, {v}) outside the {self.spec.u_max}x{self.spec.v_max} window")
        return u * self.spec.v_max + v

    def coords(self, event: EventId) -> tuple[int, int]:
        self.poset.check_id(event)
        return divmod(event, self.spec.v_max)


def generate_lattice(spec: LatticeSpec) -> Lattice:
    """Product-order window poset with one valued chain per chain spec.

    Chain elements are emitted tick by tick until the window edge; the
    valuation is the tick index, one unit per tick.
    """
    if spec.u_max < 1 or spec.v_max < 1:
        raise EmptyWindowError(f"window {spec.u_max}x{spec.v_max} has no events")

    relations = []
    for u in range(spec.u_max):
        for v in range(spec.v_max):
            event = u * spec.v_max + v
            if u + 1 < spec.u_max:
                relations.append((event, event + spec.v_max))
            if v + 1 < spec.v_max:
                relations.append((event, event + 1))
    poset = build_poset(spec.u_max * spec.v_max, relations)

    chains: dict[str, ValuedChain] = {}
    for chain_spec in spec.chains:
        if not (0 <= chain_spec.u0 < spec.u_max and 0 <= chain_spec.v0 < spec.v_max):
            raise ChainEscapesWindowError(
                f"chain {chain_spec.name!r} starts at ({chain_spec.u0}, "
                f"{chain_spec.v0}), outside the window"
            )
        elements = []
        values = []
        tick = 0
        while True:
            u = chain_spec.u0 + tick * chain_spec.du
            v = chain_spec.v0 + tick * chain_spec.dv
            if u >= spec.u_max or v >= spec.v_max:
                break
            elements.append(u * spec.v_max + v)
            values.append(tick)
            tick += 1
        chains[chain_spec.name] = make_valued_chain(
            poset, elements, values, chain_spec.name
        )
    return Lattice(spec, poset, chains)


def standard_lattice(u_max: int = 12, v_max: int = 12) -> Lattice:
    """Window with the default demo chain set.

    Rest chains P, Q, R sit at increasing u-offsets, T is a rest chain
    shifted into the interior between P and Q, and S is a (4, 1) boosted
    chain. Chains that do not fit the window (fewer than two elements)
    are dropped.
    """
    candidates = [
        LatticeChainSpec("P", 1, 1, 0, 0),
        LatticeChainSpec("Q", 1, 1, 4, 0),
        LatticeChainSpec("R", 1, 1, 8, 0),
        LatticeChainSpec("T", 1, 1, 4, 2),
        LatticeChainSpec("S", 4, 1, 0, 0),
    ]
    kept = []
    for c in candidates:
        if c.u0 >= u_max or c.v0 >= v_max:
            continue
        second_u = c.u0 + c.du
        second_v = c.v0 + c.dv
        if second_u < u_max and second_v < v_max:
            kept.append(c)
    spec = LatticeSpec(u_max, v_max, tuple(kept))
    return generate_lattice(spec)


def generate_simplex(spec: SimplexSpec | int) -> tuple[Poset, dict[str, ValuedChain]]:
    """N two-event chains x_i < y_i with every y including every x.

    By symmetry all pairwise chain distances are equal in magnitude, which
    is only realizable in N-1 spatial dimensions. Valuations are 0 at the
    bottom and 1 at the top of each chain.
    """
    if isinstance(spec, int):
        spec = SimplexSpec(spec)
    n = spec.n_chains
    relations = [(j, n + i) for i in range(n) for j in range(n)]
    poset = build_poset(2 * n, relations)
    chains = {
        f"C{i + 1}": make_valued_chain(poset, (i, n + i), (0, 1), f"C{i + 1}")
        for i in range(n)
    }
    return poset, chains


def generate_random(seed: int, n_events: int, edge_density: float) -> Poset:
    """Random DAG, deterministic per seed.

    A random permutation fixes a topological order; each order-respecting
    pair becomes a relation with probability ``edge_density``. Density 0
    yields an antichain, density 1 a total order.
    """
    if not 0.0 <= edge_density <= 1.0:
        raise ValueError("edge_density must be within [0, 1]")
    rng = random.Random(seed)
    order = list(range(n_events))
    rng.shuffle(order)
    relations = []
    for i in range(n_events):
        for j in range(i + 1, n_events):
            if edge_density >= 1.0 or rng.random() < edge_density:
                relations.append((order[i], order[j]))
    return build_poset(n_events, relations)


def maximal_chains(poset: Poset, seed: int, count: int) -> list[tuple[EventId, ...]]:
    """Sample maximal chains by random walks along cover edges."""
    successors: dict[int, list[int]] = {}
    predecessors: dict[int, list[int]] = {}
    for a, b in poset.cover_edges():
        successors.setdefault(a, []).append(b)
        predecessors.setdefault(b, []).append(a)
    minimal = [v for v in poset.events() if v not in predecessors]
    rng = random.Random(seed)
    chains = []
    for _ in range(count):
        if not minimal:
            break
        node = rng.choice(minimal)
        walk = [node]
        while node in successors:
            node = rng.choice(successors[node])
            walk.append(node)
        chains.append(tuple(walk))
    return chains
