from fractions import Fraction

import pytest

from eventposet import (
    ChainEscapesWindowError,
    EmptyWindowError,
    LatticeChainSpec,
    LatticeSpec,
    OutOfRangeError,
    chain_distance,
    check_coordinated,
    detect_linear_relation,
    forward_project,
    generate_lattice,
    generate_random,
    generate_simplex,
    maximal_chains,
)


def test_lattice_product_order():
    lattice = generate_lattice(LatticeSpec(3, 3))
    assert lattice.poset.event_count == 9
    assert lattice.poset.leq(lattice.event(0, 0), lattice.event(2, 1))
    assert not lattice.poset.leq(lattice.event(1, 0), lattice.event(0, 2))
    u, v = lattice.coords(lattice.event(2, 1))
    assert (u, v) == (2, 1)


def test_single_event_window():
    lattice = generate_lattice(LatticeSpec(1, 1))
    assert lattice.poset.event_count == 1


def test_empty_window_rejected():
    with pytest.raises(EmptyWindowError):
        generate_lattice(LatticeSpec(0, 3))


def test_chain_outside_window_rejected():
    spec = LatticeSpec(3, 3, (LatticeChainSpec("P", 1, 1, 5, 0),))
    with pytest.raises(ChainEscapesWindowError):
        generate_lattice(spec)


def test_chain_step_validation():
    with pytest.raises(ValueError):
        LatticeChainSpec("P", 0, 0)
    with pytest.raises(ValueError):
        LatticeChainSpec("P", -1, 1)


def test_rest_chains_coordinated(lattice8):
    assert check_coordinated(lattice8.chains["P"], lattice8.chains["Q"])


def test_adjacent_rest_chains_coordinated():
    spec = LatticeSpec(
        8,
        8,
        (
            LatticeChainSpec("A", 1, 1, 0, 0),
            LatticeChainSpec("B", 1, 1, 2, 0),
        ),
    )
    lattice = generate_lattice(spec)
    assert check_coordinated(lattice.chains["A"], lattice.chains["B"])


def test_boosted_chain_relation(lattice12):
    relation = detect_linear_relation(lattice12.chains["S"], lattice12.chains["P"])
    assert (relation.m, relation.n) == (Fraction(4), Fraction(1))


def test_chain_valuation_is_tick_index(lattice12):
    s = lattice12.chains["S"]
    assert s.values == tuple(Fraction(k) for k in range(len(s)))


def test_simplex_structure():
    poset, chains = generate_simplex(3)
    assert poset.event_count == 6
    assert sorted(chains) == ["C1", "C2", "C3"]
    for name, vc in chains.items():
        assert vc.values == (Fraction(0), Fraction(1))
    # every top includes every bottom
    for i in range(3):
        for j in range(3):
            assert poset.leq(j, 3 + i)


def test_simplex_pairwise_distance_magnitude():
    _, chains = generate_simplex(3)
    names = sorted(chains)
    for i, a in enumerate(names):
        for b in names[i + 1 :]:
            d = chain_distance(chains[a], chains[b], chains[a].elements[0], chains[b].elements[0])
            assert abs(d) == 1


def test_simplex_two_chain_projection_pair():
    _, chains = generate_simplex(2)
    c1, c2 = chains["C1"], chains["C2"]
    x1, x2 = c1.elements[0], c2.elements[0]
    # ingredient pair of the distance formula: (p - Pq, Qp - q)
    delta_p = c1.value_of(x1) - c1.value_of(forward_project(x2, c1.chain))
    delta_q = c2.value_of(forward_project(x1, c2.chain)) - c2.value_of(x2)
    assert (delta_p, delta_q) == (Fraction(-1), Fraction(1))
    assert abs(chain_distance(c1, c2, x1, x2)) == 1


def test_simplex_degenerate():
    poset, chains = generate_simplex(1)
    assert poset.event_count == 2
    assert len(chains) == 1
    with pytest.raises(ValueError):
        generate_simplex(0)


def test_random_density_extremes():
    antichain = generate_random(7, 12, 0.0)
    assert antichain.cover_edges() == ()
    total = generate_random(7, 12, 1.0)
    assert len(total.cover_edges()) == 11
    for x in total.events():
        for y in total.events():
            assert total.leq(x, y) or total.leq(y, x)


def test_random_deterministic():
    a = generate_random(3, 25, 0.3)
    b = generate_random(3, 25, 0.3)
    assert a.cover_edges() == b.cover_edges()
    c = generate_random(4, 25, 0.3)
    assert c.cover_edges() != a.cover_edges()


def test_random_density_validation():
    with pytest.raises(ValueError):
        generate_random(0, 5, 1.5)


def test_maximal_chains_are_maximal():
    poset = generate_random(11, 30, 0.2)
    succ = {a for a, _ in poset.cover_edges()}
    pred = {b for _, b in poset.cover_edges()}
    for walk in maximal_chains(poset, 0, 5):
        assert walk[0] not in pred
        assert walk[-1] not in succ
        for a, b in zip(walk, walk[1:]):
            assert poset.leq(a, b) and a != b


def test_distance_needs_mutual_projection():
    _, chains = generate_simplex(2)
    c1, c2 = chains["C1"], chains["C2"]
    with pytest.raises(OutOfRangeError):
        chain_distance(c1, c2, c1.elements[1], c2.elements[0])
