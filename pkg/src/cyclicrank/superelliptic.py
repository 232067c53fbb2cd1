"""Cyclic covers y^n = f(x) of the projective line and their divisor calculus.

A cover is described by its branch points on P^1 (exact rationals or the
point at infinity), the multiplicity a_j of each branch point in the
branch divisor, and a flag marking the branch points that move in a
one-parameter family.  The affine model is

    y^n = f(x) = prod_{b_j finite} (x - b_j)^{a_j}

and the multiplicity at infinity, when infinity is a branch point, is the
one making sum_j a_j divisible by n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

from . import poly
from .errors import GenusError, PreconditionError


class _Infinity:
    """The point at infinity of P^1.  A singleton; compares equal only to itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __reduce__(self):
        return (_Infinity, ())

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"


INF = _Infinity()


def location_key(loc):
    """Total order on P^1(Q): finite points by value, infinity last."""
    return (1, Fraction(0)) if loc is INF else (0, loc)


def parse_location(text):
    if isinstance(text, _Infinity):
        return INF
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    s = str(text).strip()
    if s.lower() in ("inf", "infinity", "oo", "∞"):
        return INF
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational coordinate or 'inf': {text!r}") from exc


def format_location(loc):
    return "inf" if loc is INF else str(loc)


@dataclass(frozen=True)
class BranchPoint:
    location: object
    multiplicity: int = 1
    moving: bool = False

    def __post_init__(self):
        object.__setattr__(self, "location", parse_location(self.location))
        if int(self.multiplicity) != self.multiplicity or self.multiplicity < 1:
            raise PreconditionError(
                f"branch multiplicity must be a positive integer, got {self.multiplicity}",
                "a_j >= 1",
            )
        object.__setattr__(self, "multiplicity", int(self.multiplicity))


class Fibre(NamedTuple):
    """Local data of pi over one point of P^1.

    ``e`` is the ramification index of each of the ``npoints`` points over
    ``location``, ``ell`` the order of y at each of them and ``dx_order``
    the order of the differential dx there.
    """

    location: object
    branch_index: int | None
    e: int
    ell: int
    npoints: int
    dx_order: int


@dataclass(frozen=True)
class CyclicCoverSpec:
    n: int
    branch: tuple

    def __post_init__(self):
        object.__setattr__(self, "branch", tuple(self.branch))
        n = self.n
        if int(n) != n or n < 2:
            raise PreconditionError(f"covering degree must be >= 2, got {n}", "n >= 2")
        locs = [bp.location for bp in self.branch]
        if len(set(locs)) != len(locs):
            raise PreconditionError("branch point locations must be pairwise distinct",
                                    "q_i distinct")
        for bp in self.branch:
            if bp.multiplicity >= n:
                raise PreconditionError(
                    f"branch multiplicity {bp.multiplicity} must be < n = {n}",
                    "1 <= a_j < n")
        if self.total_multiplicity % n:
            raise PreconditionError(
                f"n must divide the total branch multiplicity "
                f"({n} does not divide {self.total_multiplicity})", "n | m")

    # -- basic numerology -------------------------------------------------

    @property
    def m(self):
        return len(self.branch)

    @property
    def k(self):
        return sum(1 for bp in self.branch if bp.moving)

    @property
    def multiplicities(self):
        return tuple(bp.multiplicity for bp in self.branch)

    @property
    def total_multiplicity(self):
        return sum(bp.multiplicity for bp in self.branch)

    @property
    def is_reduced(self):
        return all(bp.multiplicity == 1 for bp in self.branch)

    @property
    def moving_indices(self):
        return tuple(j for j, bp in enumerate(self.branch) if bp.moving)

    @property
    def locations(self):
        return tuple(bp.location for bp in self.branch)

    @property
    def deg_f(self):
        return sum(bp.multiplicity for bp in self.branch if bp.location is not INF)

    @property
    def f(self):
        """Coefficients of the monic defining polynomial, lowest degree first."""
        return poly.product_of_powers(
            (bp.location, bp.multiplicity) for bp in self.branch if bp.location is not INF)

    def index_of(self, location):
        location = parse_location(location)
        for j, bp in enumerate(self.branch):
            if bp.location == location and (bp.location is INF) == (location is INF):
                return j
        return None

    def fibres(self):
        """Fibre data over every branch point, plus infinity when it is unbranched."""
        n = self.n
        out = []
        has_inf = False
        for j, bp in enumerate(self.branch):
            g = gcd(n, bp.multiplicity)
            e = n // g
            if bp.location is INF:
                has_inf = True
                out.append(Fibre(INF, j, e, -(e * self.deg_f) // n, g, -e - 1))
            else:
                out.append(Fibre(bp.location, j, e, bp.multiplicity // g, g, e - 1))
        if not has_inf:
            out.append(Fibre(INF, None, 1, -self.deg_f // n, n, -2))
        return out

    # -- serialization ----------------------------------------------------

    def to_dict(self):
        return {
            "n": self.n,
            "branch": [
                {"x": format_location(bp.location), "mult": bp.multiplicity,
                 "moving": bp.moving}
                for bp in self.branch
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(
                int(data["n"]),
                tuple(BranchPoint(item["x"], int(item.get("mult", 1)),
                                  bool(item.get("moving", False)))
                      for item in data["branch"]),
            )
        except KeyError as exc:
            raise ValueError(f"cover spec is missing field {exc}") from exc

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


def simple_cyclic_spec(n, locations, moving=1):
    """Reduced simple cyclic cover of degree n branched at ``locations``.

    ``moving`` is either the number k of moving points (the first k
    locations move) or an explicit iterable of 0-based indices.
    """
    locations = [parse_location(x) for x in locations]
    if isinstance(moving, int):
        moving_set = set(range(moving))
    else:
        moving_set = set(moving)
    return CyclicCoverSpec(
        n, tuple(BranchPoint(x, 1, j in moving_set) for j, x in enumerate(locations)))


def catanese_dettweiler_spec(n, moving_location=-1):
    """Standard-case cover: branch 0 with multiplicity n-3, and 1, Q, infinity simply.

    Q = ``moving_location`` is the moving branch point.
    """
    if n < 4:
        raise PreconditionError(f"need n >= 4, got {n}", "n >= 4")
    q = parse_location(moving_location)
    if q in (0, 1) or q is INF:
        raise PreconditionError("the moving point must avoid 0, 1 and infinity",
                                "Q not in {0, 1, inf}")
    return CyclicCoverSpec(n, (
        BranchPoint(0, n - 3), BranchPoint(1, 1), BranchPoint(q, 1, True),
        BranchPoint(INF, 1)))


# -- Riemann-Hurwitz ------------------------------------------------------

def riemann_hurwitz(deg, base_genus, profile):
    """Genus of a degree ``deg`` cover of a genus ``base_genus`` curve.

    ``profile`` lists, for every branch point, the partition of ``deg``
    given by the ramification indices over it.
    """
    if deg < 1:
        raise GenusError(f"degree must be positive, got {deg}", "deg >= 1")
    ram = 0
    for part in profile:
        part = list(part)
        if sum(part) != deg or any(p < 1 for p in part):
            raise GenusError(f"{part} is not a partition of {deg}", "partition of deg")
        ram += sum(p - 1 for p in part)
    two_g_minus_2 = deg * (2 * base_genus - 2) + ram
    if two_g_minus_2 % 2:
        raise GenusError(f"2g-2 = {two_g_minus_2} is odd", "2g-2 even")
    g = two_g_minus_2 // 2 + 1
    if g < 0:
        raise GenusError(f"Riemann-Hurwitz gives negative genus {g}", "g >= 0")
    return g


def genus(spec):
    profile = [[n_e.e] * n_e.npoints for n_e in spec.fibres() if n_e.e > 1]
    return riemann_hurwitz(spec.n, 0, profile)


def require_genus_at_least_two(spec):
    g = genus(spec)
    if g < 2:
        raise PreconditionError(f"rank computations need genus >= 2, got g = {g}", "g >= 2")
    return g


# -- divisors -------------------------------------------------------------

@dataclass(frozen=True)
class RamificationPoint:
    over: int
    index: int
    local_order_of_y: int
    count: int = 1


def ramification_points(spec):
    return [RamificationPoint(fb.branch_index, fb.e, fb.ell, fb.npoints)
            for fb in spec.fibres() if fb.branch_index is not None and fb.e > 1]


@dataclass(frozen=True)
class CurveDivisor:
    """A divisor invariant under the deck group.

    ``ram_part[j]`` is the coefficient carried by each point over branch
    point j; ``pullback_part`` is a divisor E on P^1 contributing pi^*E.
    """

    ram_part: Mapping = field(default_factory=dict)
    pullback_part: Mapping = field(default_factory=dict)

    def __post_init__(self):
        ram = {int(j): int(c) for j, c in dict(self.ram_part).items() if c}
        pb = {}
        for loc, c in dict(self.pullback_part).items():
            if c:
                loc = parse_location(loc)
                pb[loc] = pb.get(loc, 0) + int(c)
        object.__setattr__(self, "ram_part", MappingProxyType(ram))
        object.__setattr__(self, "pullback_part",
                           MappingProxyType({k: v for k, v in pb.items() if v}))

    def __add__(self, other):
        ram = dict(self.ram_part)
        for j, c in other.ram_part.items():
            ram[j] = ram.get(j, 0) + c
        pb = dict(self.pullback_part)
        for x, c in other.pullback_part.items():
            pb[x] = pb.get(x, 0) + c
        return CurveDivisor(ram, pb)

    def __neg__(self):
        return CurveDivisor({j: -c for j, c in self.ram_part.items()},
                            {x: -c for x, c in self.pullback_part.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        return CurveDivisor({j: k * c for j, c in self.ram_part.items()},
                            {x: k * c for x, c in self.pullback_part.items()})

    def __eq__(self, other):
        if not isinstance(other, CurveDivisor):
            return NotImplemented
        return (dict(self.ram_part) == dict(other.ram_part)
                and dict(self.pullback_part) == dict(other.pullback_part))

    def __hash__(self):
        return hash((frozenset(self.ram_part.items()), frozenset(self.pullback_part.items())))

    def __repr__(self):
        return f"CurveDivisor({dict(self.ram_part)}, {dict(self.pullback_part)})"

    def pointwise(self, spec):
        """Coefficient carried by each point over every location touched by the divisor."""
        fibres = {fb.location: fb for fb in spec.fibres()}
        out = {}
        for j, c in self.ram_part.items():
            if not 0 <= j < spec.m:
                raise IndexError(f"branch index {j} out of range for m = {spec.m}")
            loc = spec.branch[j].location
            out[loc] = out.get(loc, 0) + c
        for loc, c in self.pullback_part.items():
            e = fibres[loc].e if loc in fibres else 1
            out[loc] = out.get(loc, 0) + e * c
        return {loc: c for loc, c in out.items() if c}

    def degree(self, spec):
        fibres = spec.fibres()
        npoints = {fb.branch_index: fb.npoints for fb in fibres if fb.branch_index is not None}
        return (sum(c * npoints[j] for j, c in self.ram_part.items())
                + spec.n * sum(self.pullback_part.values()))

    def is_effective(self, spec):
        return all(c >= 0 for c in self.pointwise(spec).values())

    def leq(self, other, spec):
        return (other - self).is_effective(spec)


def ramification_divisor(spec):
    return CurveDivisor({fb.branch_index: fb.e - 1 for fb in spec.fibres()
                         if fb.branch_index is not None and fb.e > 1})


def variable_ramification_divisor(spec):
    """D = sum over moving branch points of (e_j - 1) p_j."""
    if spec.k == 0:
        raise PreconditionError(
            "no moving branch points: the family would be isotrivial", "k >= 1")
    fibres = spec.fibres()
    ram = {}
    for fb in fibres:
        if fb.branch_index is not None and spec.branch[fb.branch_index].moving:
            if fb.npoints != 1:
                raise PreconditionError(
                    "moving branch points must have a single ramification point over them",
                    "only one ramification point over q_i")
            ram[fb.branch_index] = fb.e - 1
    return CurveDivisor(ram)


def canonical_divisor(spec):
    """Divisor of dx: R - 2 pi^*(infinity)."""
    return ramification_divisor(spec) + CurveDivisor({}, {INF: -2})


# -- coordinate changes ---------------------------------------------------

def _mobius_point(loc, a, b, c, d):
    if loc is INF:
        return INF if c == 0 else Fraction(a) / c
    den = c * loc + d
    if den == 0:
        return INF
    return (a * loc + b) / den


def mobius_map(matrix):
    a, b, c, d = (Fraction(v) for v in matrix)
    if a * d - b * c == 0:
        raise ValueError("Moebius matrix must be invertible")
    return lambda loc: _mobius_point(parse_location(loc), a, b, c, d)


def mobius(spec, matrix):
    """Image of the cover under x -> (a x + b)/(c x + d); branch order is kept."""
    phi = mobius_map(matrix)
    return CyclicCoverSpec(spec.n, tuple(
        BranchPoint(phi(bp.location), bp.multiplicity, bp.moving) for bp in spec.branch))


def mobius_divisor(D, matrix):
    phi = mobius_map(matrix)
    return CurveDivisor(dict(D.ram_part),
                        {phi(x): c for x, c in D.pullback_part.items()})


def finite_chart(spec, avoid: Iterable = ()):
    """Moebius matrix sending a non-special rational point to infinity.

    The returned matrix maps x -> 1/(x - c) for the smallest non-negative
    integer c that is neither a branch point nor in ``avoid``; afterwards
    every branch point and every avoided point is finite and infinity is
    an unbranched point carrying nothing.  Returns ``None`` when the
    identity already has these properties.
    """
    avoid = {parse_location(x) for x in avoid}
    special = set(spec.locations) | avoid
    if INF not in special:
        return None
    c = 0
    while Fraction(c) in special:
        c += 1
    return (0, 1, 1, -c)
