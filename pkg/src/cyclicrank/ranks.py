"""Rank numerology for the kernel of the Higgs field and the flat unitary part.

Closed forms for families of cyclic covers obtained by moving branch
points, together with :func:`certify_rank`, which re-derives rk K for one
concrete curve through rigidity, minimality and the residue oracle.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from math import gcd

from . import cohomology, oracle
from .errors import OracleMismatchError, PreconditionError
from .superelliptic import (CurveDivisor, catanese_dettweiler_spec, genus,
                            require_genus_at_least_two, riemann_hurwitz,
                            variable_ramification_divisor)


@dataclass(frozen=True)
class KernelBounds:
    lower: int
    upper: int

    @property
    def exact(self):
        return self.lower == self.upper


def kernel_bounds(g, deg_D, r_D):
    """g - (deg D - r(D)) <= dim ker(cup xi) <= g - Cliff(D)."""
    if deg_D < 0 or r_D < 0:
        raise PreconditionError("need deg D >= 0 and r(D) >= 0", "deg D >= 0, r(D) >= 0")
    return KernelBounds(g - (deg_D - r_D), g - (deg_D - 2 * r_D))


def rigid_family_rank(g, d):
    if not 0 < d <= g:
        raise PreconditionError(f"need 0 < d <= g, got d = {d}, g = {g}", "0 < d <= g")
    return g - d


@dataclass(frozen=True)
class RankReport:
    g: int
    rk_K: int
    rk_U_upper: int
    strict_inclusion: bool
    singular_fibers: int
    base_genus: int
    monodromy_finite_claimed: bool
    non_isotrivial: bool
    rk_U_exact: int = None
    certified_by_oracle: bool = False

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def _check_nmk(n, m, k):
    if n < 2:
        raise PreconditionError(f"n must be at least 2, got {n}", "n >= 2")
    if m % n:
        raise PreconditionError(f"n must divide m ({n} does not divide {m})", "n | m")
    if k < 1:
        raise PreconditionError(
            "k must be at least 1: with no moving branch point the family is isotrivial",
            "1 <= k")
    if k * n >= m:
        raise PreconditionError(f"k must satisfy k < m/n (k = {k}, m/n = {m // n})",
                                "k < m/n")
    g = (n - 1) * (m - 2) // 2
    if g < 2:
        raise PreconditionError(f"genus must be at least 2, got g = {g}", "g >= 2")
    return g


def base_curve_genus(n, m, k):
    """Genus of the cyclic cover branched at k(m-1) simple points and k times infinity."""
    _check_nmk(n, m, k)
    d = gcd(n, k)
    profile = [[n]] * (k * (m - 1))
    if k % n:
        profile.append([n // d] * d)
    return riemann_hurwitz(n, 0, profile)


def strict_inclusion_holds(n, m, k):
    # k < (mn - 2n - m) / (4(n-1)), cleared of denominators
    return 4 * (n - 1) * k < m * n - 2 * n - m


def cyclic_rank_report(n, m, k):
    g = _check_nmk(n, m, k)
    rk = g - (n - 1) * k
    if 2 * rk != (n - 1) * (m - 2 - 2 * k):
        raise AssertionError("rank identity failed")
    return RankReport(
        g=g,
        rk_K=rk,
        rk_U_upper=(g + 1) // 2,
        strict_inclusion=strict_inclusion_holds(n, m, k),
        singular_fibers=k * (m - 1),
        base_genus=base_curve_genus(n, m, k),
        monodromy_finite_claimed=True,
        non_isotrivial=True,
    )


@dataclass(frozen=True)
class CDReport:
    n: int
    g: int
    q: int
    rk_K: int
    rk_U: int
    r_D: int
    h0_nP: int
    rk_K_upper: int
    pushforward: tuple

    def to_dict(self):
        d = asdict(self)
        d["pushforward"] = list(self.pushforward)
        return d

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


def cd_rank(n):
    g = n - 1
    return (2 * g + 1) // 3 if n % 3 == 1 else (2 * g - 2) // 3


def cd_standard_report(n):
    """Numbers of the four-point standard case, recomputed from the curve where possible."""
    if n < 4:
        raise PreconditionError(f"need n >= 4, got {n}", "n >= 4")
    if gcd(n, 6) != 1:
        raise PreconditionError(f"the standard case needs gcd(n, 6) = 1, got n = {n}",
                                "gcd(n,6) = 1")
    spec = catanese_dettweiler_spec(n)
    g = genus(spec)
    moving = spec.moving_indices[0]
    q = spec.branch[moving].location
    h0_nP = cohomology.h0_pullback(spec, {q: 1})
    D = variable_ramification_divisor(spec)
    r_D = cohomology.h0(spec, D) - 1
    rk = cd_rank(n)
    return CDReport(
        n=n, g=g, q=(n - 1) // 2, rk_K=rk, rk_U=rk, r_D=r_D, h0_nP=h0_nP,
        rk_K_upper=g - (D.degree(spec) - 2 * r_D),
        pushforward=cohomology.pushforward_degrees(spec).degrees)


def certify_rank(spec, order=None):
    """RankReport for a concrete reduced family, with rk K confirmed by the residue oracle.

    Raises PreconditionError when D is not rigid or not minimal, and
    OracleMismatchError when the cup-product kernel disagrees with g - deg D.
    """
    if spec.k == 0:
        raise PreconditionError(
            "k must be at least 1: with no moving branch point the family is isotrivial",
            "1 <= k")
    g = require_genus_at_least_two(spec)
    D = variable_ramification_divisor(spec)
    d = D.degree(spec)
    lin = cohomology.h0_ram_divisor(spec, D)
    if not lin.rigid:
        raise PreconditionError(f"variable ramification divisor is not rigid (h0 = {lin.h0})",
                                "h0(D) = 1")
    t = cohomology.h0_twisted_tangent(spec, D)
    if t:
        raise PreconditionError(f"h0(T_C(D)) = {t}, so D is not certified minimal",
                                "H0(T_C(D)) = 0")
    predicted = rigid_family_rank(g, d)
    B = oracle.cup_matrix(spec, order=order)
    got = oracle.kernel_dimension(B)
    if got != predicted:
        raise OracleMismatchError(
            f"residue oracle gives dim ker = {got}, formula gives g - deg D = {predicted}")
    if spec.is_reduced and spec.m % spec.n == 0 and spec.k * spec.n < spec.m:
        n, m, k = spec.n, spec.m, spec.k
        base = base_curve_genus(n, m, k)
        strict = strict_inclusion_holds(n, m, k)
        sing = k * (m - 1)
    else:
        base, strict, sing = None, (g + 1) // 2 < predicted, None
    return RankReport(
        g=g, rk_K=got, rk_U_upper=(g + 1) // 2, strict_inclusion=strict,
        singular_fibers=sing, base_genus=base, monodromy_finite_claimed=True,
        non_isotrivial=D != CurveDivisor(), certified_by_oracle=True)
