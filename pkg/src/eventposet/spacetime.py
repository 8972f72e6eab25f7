"""The emergent space-time layer over interval pairs.

The product of a pair's components is the interval scalar, invariant
among linearly-related quantifying chains; its sign separates chain-like
(time-like), antichain-like (space-like), and projection-like (null)
intervals. The pair transform rescales components by sqrt(m/n) and its
inverse, which under the change of variables dt = (first + second)/2,
dx = (first - second)/2 is a Lorentz boost with beta = (m - n)/(m + n).

Results stay exact rationals whenever the needed square roots are exact
(the lattice generators are arranged so they are); otherwise values fall
back to floats with a 1e-12 accuracy contract.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .chains import ValuedChain, as_fraction
from .errors import (
    CoincidentChainsError,
    DegenerateTransformError,
    MissingProjectionError,
    OutOfRangeError,
)
from .intervals import IntervalPair, chain_distance
from .poset import EventId
from .projection import ProjectionCase, classify_projection


class Character(Enum):
    TIME_LIKE = "time-like"
    SPACE_LIKE = "space-like"
    NULL = "null"


@dataclass(frozen=True)
class ScalarResult:
    value: Fraction | float
    character: Character


@dataclass(frozen=True)
class ScalarLength:
    """sqrt of the interval scalar; ``imaginary`` marks a negative radicand."""

    value: Fraction | float
    imaginary: bool

    def __str__(self) -> str:
        return f"{self.value}i" if self.imaginary else f"{self.value}"


@dataclass(frozen=True)
class PairTransform:
    """Projection step lengths (m, n) relating two linearly-related chains.

    A vanishing component means every element of one chain projects to a
    single element of the other (|beta| = 1); such transforms cannot be
    inverted and are rejected.
    """

    m: Fraction
    n: Fraction

    def __post_init__(self):
        object.__setattr__(self, "m", as_fraction(self.m))
        object.__setattr__(self, "n", as_fraction(self.n))
        if self.m <= 0 or self.n <= 0:
            raise DegenerateTransformError(
                f"pair transform needs positive step lengths, got "
                f"({self.m}, {self.n})"
            )

    def inverse(self) -> "PairTransform":
        return PairTransform(self.n, self.m)


@dataclass(frozen=True)
class SpacetimeCoords:
    dt: Fraction | float
    dx: Fraction | float

    def __post_init__(self):
        if not isinstance(self.dt, float):
            object.__setattr__(self, "dt", as_fraction(self.dt))
        if not isinstance(self.dx, float):
            object.__setattr__(self, "dx", as_fraction(self.dx))


def exact_sqrt(value: Fraction) -> Fraction | None:
    """Exact rational square root, or None when irrational or negative."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    root_num, root_den = math.isqrt(num), math.isqrt(den)
    if root_num * root_num == num and root_den * root_den == den:
        return Fraction(root_num, root_den)
    return None


def interval_scalar(p: IntervalPair) -> ScalarResult:
    """Product of the pair components, with its causal character."""
    value = p.first * p.second
    if value > 0:
        character = Character.TIME_LIKE
    elif value < 0:
        character = Character.SPACE_LIKE
    else:
        character = Character.NULL
    return ScalarResult(value, character)


def scalar_length(p: IntervalPair) -> ScalarLength:
    """sqrt(first * second); imaginary for antichain-like pairs."""
    product = p.first * p.second
    imaginary = product < 0
    magnitude = -product if imaginary else product
    if isinstance(magnitude, Fraction):
        root = exact_sqrt(magnitude)
        if root is not None:
            return ScalarLength(root, imaginary)
    return ScalarLength(math.sqrt(float(magnitude)), imaginary)


def minkowski_form(p: IntervalPair) -> tuple[Fraction, Fraction, Fraction]:
    """(scalar, dt^2, dx^2) with scalar = dt^2 - dx^2 exactly."""
    scalar = p.first * p.second
    dt = (p.first + p.second) / 2
    dx = (p.first - p.second) / 2
    return scalar, dt * dt, dx * dx


def _sqrt_ratio(t: PairTransform) -> Fraction | float:
    """sqrt(m/n), exact when possible."""
    ratio = t.m / t.n
    root = exact_sqrt(ratio)
    return root if root is not None else math.sqrt(float(ratio))


def apply_pair_transform(p: IntervalPair, t: PairTransform) -> IntervalPair:
    """Rescale components by sqrt(m/n) and sqrt(n/m).

    The reciprocal factors preserve the interval scalar: exactly when m/n
    is a rational square, to 1e-12 otherwise.
    """
    factor = _sqrt_ratio(t)
    if isinstance(factor, Fraction) and not isinstance(p.first, float) and not isinstance(p.second, float):
        return IntervalPair(p.first * factor, p.second / factor, p.basis, p.chains)
    factor = float(factor)
    return IntervalPair(float(p.first) * factor, float(p.second) / factor, p.basis, p.chains)


def beta(t: PairTransform) -> Fraction:
    """(m - n) / (m + n): the emergent relative speed, always exact."""
    return (t.m - t.n) / (t.m + t.n)


def gamma(t: PairTransform) -> Fraction | float:
    """1 / sqrt(1 - beta^2) = (m + n) / (2 sqrt(mn))."""
    b = beta(t)
    radicand = 1 - b * b
    root = exact_sqrt(radicand)
    if root is not None:
        return 1 / root
    return 1.0 / math.sqrt(float(radicand))


def lorentz_matrix(
    t: PairTransform,
) -> tuple[tuple[Fraction | float, Fraction | float], tuple[Fraction | float, Fraction | float]]:
    """Boost matrix [[g, bg], [bg, g]] applied by :func:`lorentz_apply`.

    This is the coordinate form of the pair transform itself: the
    off-diagonal sign is fixed by sqrt(m/n) = gamma * (1 + beta), so a
    pair carried from one chain to the other transforms with +beta*gamma
    off-diagonal. The opposite sign belongs to the inverse transform.
    """
    g = gamma(t)
    b = beta(t)
    bg = g * b if isinstance(g, Fraction) else g * float(b)
    return ((g, bg), (bg, g))


def compose_transforms(t1: PairTransform, t2: PairTransform) -> PairTransform:
    """Componentwise product; betas combine by the velocity addition rule."""
    return PairTransform(t1.m * t2.m, t1.n * t2.n)


def to_coords(p: IntervalPair) -> SpacetimeCoords:
    return SpacetimeCoords((p.first + p.second) / 2, (p.first - p.second) / 2)


def from_coords(coords: SpacetimeCoords) -> IntervalPair:
    return IntervalPair(coords.dt + coords.dx, coords.dt - coords.dx)


def lorentz_apply(coords: SpacetimeCoords, t: PairTransform) -> SpacetimeCoords:
    """Boost the coordinates; identical to the pair-transform route."""
    g = gamma(t)
    b = beta(t)
    if isinstance(g, Fraction) and not isinstance(coords.dt, float) and not isinstance(coords.dx, float):
        return SpacetimeCoords(
            g * (coords.dt + b * coords.dx),
            g * (coords.dx + b * coords.dt),
        )
    g = float(g)
    bf = float(b)
    dt, dx = float(coords.dt), float(coords.dx)
    return SpacetimeCoords(g * (dt + bf * dx), g * (dx + bf * dt))


def pythagorean_join(
    a_pair: IntervalPair, b_pair: IntervalPair, *, orthogonal: bool
) -> Fraction:
    """Squared joint extent of two orthogonal pure antisymmetric intervals.

    Scalars of orthogonal intervals add, so the squared magnitudes of the
    antisymmetric components combine as dc^2 = da^2 + db^2. Orthogonality
    cannot be read off the pairs themselves and must be asserted by the
    caller, who knows the subspaces.
    """
    if not orthogonal:
        raise ValueError("pythagorean_join requires orthogonal subspaces")
    for p in (a_pair, b_pair):
        if not p.is_antisymmetric:
            raise ValueError(f"pair {p} is not pure antisymmetric")
    return a_pair.first * a_pair.first + b_pair.first * b_pair.first


def spherical_decompose(
    dt: float, dr: float, theta: float, phi: float
) -> tuple[float, float, float, float]:
    """Split a radial antisymmetric extent over two decomposition chains.

    Returns (dt, dr sin(theta) cos(phi), dr sin(theta) sin(phi),
    dr cos(theta)). The sin/cos parameterization keeps f^2 + g^2 = 1, so
    the scalar dt^2 - dr^2 equals dt^2 minus the spatial sum of squares;
    the identity is checked to 1e-12 before returning.
    """
    components = (
        float(dt),
        float(dr) * math.sin(theta) * math.cos(phi),
        float(dr) * math.sin(theta) * math.sin(phi),
        float(dr) * math.cos(theta),
    )
    radial = components[0] ** 2 - float(dr) ** 2
    cartesian = components[0] ** 2 - sum(c * c for c in components[1:])
    if not math.isclose(radial, cartesian, rel_tol=1e-12, abs_tol=1e-12):
        raise ValueError(
            f"spherical split broke the scalar: {radial} vs {cartesian}"
        )
    return components


def element_chain_distance(x: EventId, p: ValuedChain, ref: EventId) -> Fraction:
    """Antisymmetric combination of the projections of ``x`` and ``ref``.

    ``ref`` must lie on the chain; it cancels, so the result is
    independent of which reference element is used. The magnitude is the
    separation between the element and the chain; a single chain carries
    no orientation, so the sign is fixed (backward minus forward, halved)
    rather than side-dependent.
    """
    if p.index_of(ref) is None:
        raise OutOfRangeError(f"reference {ref} is not on chain {p.name!r}")
    outcome = classify_projection(x, p.chain)
    if outcome.case is not ProjectionCase.D_BOTH:
        raise MissingProjectionError(
            f"event {x} does not project both ways onto chain {p.name!r}"
        )
    ref_value = p.value_of(ref)
    forward_value = p.value_of(outcome.forward)
    backward_value = p.value_of(outcome.backward)
    return ((ref_value - forward_value) - (ref_value - backward_value)) / 2


def chain_separation(p: ValuedChain, q: ValuedChain) -> Fraction:
    """Chain distance evaluated at the first mutually projecting elements."""
    for p_event in p.elements:
        for q_event in q.elements:
            try:
                return chain_distance(p, q, p_event, q_event)
            except OutOfRangeError:
                continue
    raise MissingProjectionError(
        f"chains {p.name!r} and {q.name!r} never mutually project"
    )


def combine_projection_distances(d_xp, d_xq, d_yp, d_yq, d_pq):
    """Core arithmetic of the subspace projection, on raw distances.

    The antisymmetric combination of squared element-chain distances,
    normalized by twice the inter-chain separation. Squares make the
    element-chain signs irrelevant; the separation enters by magnitude,
    so the result is oriented from the first chain toward the second.
    """
    if d_pq == 0:
        raise CoincidentChainsError("the chain pair has zero separation")
    numerator = (d_yp * d_yp - d_yq * d_yq) - (d_xp * d_xp - d_xq * d_xq)
    return numerator / (2 * abs(d_pq))


def subspace_projection(
    x: EventId, y: EventId, p: ValuedChain, q: ValuedChain
) -> Fraction:
    """Projection of the interval [x, y] onto the subspace of (P, Q).

    Consistent under replacing (P, Q) by any other coordinated chain pair
    of the same subspace with the same orientation, and insensitive to
    displacement of the endpoints orthogonal to the subspace (the
    displacement adds equally to both squared distances and cancels).
    """
    separation = chain_separation(p, q)
    d_xp = element_chain_distance(x, p, p.elements[0])
    d_xq = element_chain_distance(x, q, q.elements[0])
    d_yp = element_chain_distance(y, p, p.elements[0])
    d_yq = element_chain_distance(y, q, q.elements[0])
    return combine_projection_distances(d_xp, d_xq, d_yp, d_yq, separation)
