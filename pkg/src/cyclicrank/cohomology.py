"""Section spaces of deck-invariant line bundles on cyclic covers.

The deck group mu_n acts on C and on every line bundle O(D) with D
invariant, and H^0 splits into eigenspaces spanned by sections g(x) y^s,
s = 0..n-1.  In eigenspace s the conditions on the rational function g
are pointwise on P^1: at a point b with ramification index e_b, local
order ell_b of y and coefficient c_b of D at each point above b,

    ord_b(g) >= -floor((c_b + s*ell_b) / e_b),

so each eigenspace is H^0 of a line bundle on P^1 and its dimension is
max(0, 1 + sum_b floor((c_b + s*ell_b)/e_b)).  k-differentials are
handled by shifting c_b by k * ord(dx).

:func:`brute_force_h0` computes the same numbers by a completely different
route (local Laurent expansions plus exact elimination) and is the oracle
the eigenspace formula is tested against.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import linalg, poly
from .errors import InsufficientBoundError, PreconditionError, UnsupportedDivisorError
from .local import branch_chart, unbranched_chart
from .series import TruncatedSeries
from .superelliptic import (INF, CurveDivisor, canonical_divisor, finite_chart, genus,
                            location_key,
                            mobius, mobius_divisor, parse_location)


@dataclass(frozen=True)
class PushforwardDecomposition:
    """Degrees d_0..d_{n-1} of the summands of (pi_* O_C) (x) O(twist)."""

    degrees: tuple

    def h0(self):
        return sum(max(0, d + 1) for d in self.degrees)

    def h1(self):
        return sum(max(0, -d - 1) for d in self.degrees)


@dataclass(frozen=True)
class LinearSeriesReport:
    h0: int
    r: int
    clifford: int
    rigid: bool

    def to_dict(self):
        return {"h0": self.h0, "r": self.r, "cliff": self.clifford, "rigid": self.rigid}

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True)


class IncidenceDims(NamedTuple):
    dim_X_d: int
    dim_degenerate: int


def _as_divisor(D):
    return CurveDivisor() if D is None else D


def eigenspace_h0(spec, D=None, k=0):
    """Per-eigenspace dimensions of H^0(omega^k (D)), s = 0..n-1."""
    D = _as_divisor(D)
    pw = D.pointwise(spec)
    fibres = spec.fibres()
    fibre_locs = {fb.location for fb in fibres}
    generic = sum(c for loc, c in pw.items() if loc not in fibre_locs)
    out = []
    for s in range(spec.n):
        total = generic
        for fb in fibres:
            c = pw.get(fb.location, 0) + k * fb.dx_order
            total += (c + s * fb.ell) // fb.e
        out.append(max(0, total + 1))
    return tuple(out)


def h0(spec, D=None, k=0):
    """dim H^0(C, omega_C^{(x) k} (D)) for a deck-invariant divisor D."""
    return sum(eigenspace_h0(spec, D, k))


def pushforward_degrees(spec, twist=None):
    """Splitting type of O(twist) (x) pi_* O_C on P^1."""
    twist = {parse_location(x): int(c) for x, c in (twist or {}).items()}
    D = CurveDivisor({}, twist)
    pw = D.pointwise(spec)
    fibres = spec.fibres()
    fibre_locs = {fb.location for fb in fibres}
    generic = sum(c for loc, c in pw.items() if loc not in fibre_locs)
    degrees = []
    for s in range(spec.n):
        d = generic
        for fb in fibres:
            d += (pw.get(fb.location, 0) + s * fb.ell) // fb.e
        degrees.append(d)
    return PushforwardDecomposition(tuple(degrees))


def h0_pullback(spec, E):
    """h^0(C, pi^* O(E)) for a divisor E on P^1 given as {location: coefficient}."""
    return pushforward_degrees(spec, E).h0()


def linear_series_report(spec, D):
    h = h0(spec, D)
    r = h - 1
    return LinearSeriesReport(h, r, D.degree(spec) - 2 * r, h == 1)


def h0_ram_divisor(spec, D):
    """Exact h^0 of an effective divisor supported on ramification points and pullbacks."""
    for j in D.ram_part:
        if not 0 <= j < spec.m:
            raise UnsupportedDivisorError(f"branch index {j} out of range")
    if not D.is_effective(spec):
        raise PreconditionError("divisor must be effective", "D >= 0")
    return linear_series_report(spec, D)


def h0_twisted_tangent(spec, D):
    """dim H^0(C, T_C(D))."""
    if not D.is_effective(spec):
        raise PreconditionError("divisor must be effective", "D >= 0")
    return h0(spec, D, k=-1)


def span_dim(spec, D):
    """Projective dimension of the span of D in the bicanonical embedding."""
    g = genus(spec)
    if not D.is_effective(spec):
        raise PreconditionError("divisor must be effective", "D >= 0")
    if D.degree(spec) >= 2 * g - 2:
        raise PreconditionError(
            f"span dimension formula needs deg D < 2g-2 = {2 * g - 2}", "deg D < 2g-2")
    return (3 * g - 4) - h0(spec, -D, k=2)


def bicanonical_drops(spec, D):
    """For each totally ramified point p, whether h^0(2K-D-p) < h^0(2K-D)."""
    base = h0(spec, -D, k=2)
    out = {}
    for fb in spec.fibres():
        if fb.branch_index is None or fb.e == 1 or fb.npoints != 1:
            continue
        p = CurveDivisor({fb.branch_index: 1})
        out[fb.branch_index] = h0(spec, -(D + p), k=2) < base
    return out


def base_point_free_bicanonical(spec, D):
    """Whether omega^2(-D) is base point free, tested on the ramification locus.

    Degree >= 2g (that is deg D <= 2g-4) is always base point free.
    Otherwise a base point among the totally ramified points is detected
    exactly; points off the ramification locus are not examined.
    """
    g = genus(spec)
    if not D.is_effective(spec):
        raise PreconditionError("divisor must be effective", "D >= 0")
    if D.degree(spec) <= 2 * g - 4:
        return True
    if h0(spec, -D, k=2) == 0:
        return True
    return all(bicanonical_drops(spec, D).values())


def incidence_dims(g, d):
    if not 1 <= d <= g:
        raise PreconditionError(f"need 1 <= d <= g, got d = {d}, g = {g}", "1 <= d <= g")
    return IncidenceDims(2 * d - 1, 2 * d - 2)


def serre_defect(spec, D):
    """h^0(D) - h^0(K-D) - (deg D - g + 1); zero by Riemann-Roch."""
    g = genus(spec)
    return h0(spec, D) - h0(spec, -D, k=1) - (D.degree(spec) - g + 1)


# -- brute force ---------------------------------------------------------

def brute_force_h0(spec, D=None, search_bound=None, k=0):
    """h^0(omega^k(D)) by linear algebra on candidate functions.

    The candidate functions are x^t y^s / Q(x), 0 <= s < n, 0 <= t <= bound,
    where Q clears every allowed pole at finite points.  Pole and zero
    conditions are imposed coefficientwise on exact local Laurent
    expansions at every point of the support and at infinity; the answer
    is the number of candidates minus the rank of those conditions.

    Coordinates are first moved so that infinity is an unbranched point
    outside the support.  ``search_bound`` defaults to the certified bound
    deg Q; a smaller value raises :class:`InsufficientBoundError`.
    """
    D = _as_divisor(D)
    if k:
        D = D + k * canonical_divisor(spec)
    matrix = finite_chart(spec, D.pullback_part.keys())
    if matrix is not None:
        spec = mobius(spec, matrix)
        D = mobius_divisor(D, matrix)
    n, A = spec.n, spec.deg_f
    fibres = {fb.location: fb for fb in spec.fibres()}
    pw = D.pointwise(spec)
    # g(x) may have poles at branch points even off the support of D, since
    # y^s vanishes there to order s*a; those points get conditions too
    locs = set(pw) | {loc for loc, fb in fibres.items() if fb.branch_index is not None}
    support = []
    for loc in sorted(locs, key=location_key):
        c = pw.get(loc, 0)
        fb = fibres.get(loc)
        if fb is not None and fb.branch_index is not None:
            a = spec.branch[fb.branch_index].multiplicity
            N = max(0, (c + (n - 1) * a) // n)
            if fb.npoints != 1:
                if c == 0 and a * (n - 1) < n:
                    continue
                raise UnsupportedDivisorError(
                    "brute force needs totally ramified branch points")
            if N == 0 and c == 0:
                continue
            support.append((loc, c, fb.branch_index, a, N))
        else:
            support.append((loc, c, None, 0, max(0, c)))
    Q = poly.product_of_powers((loc, N) for loc, _, _, _, N in support)
    degQ = len(Q) - 1
    if search_bound is None:
        search_bound = degQ
    elif search_bound < degQ:
        raise InsufficientBoundError(
            f"search bound {search_bound} cannot certify completeness; need {degQ}", degQ)
    S = search_bound
    total = 0
    for s in range(n):
        rows = []
        for loc, c, j, a, N in support:
            rows.extend(_rows_at_point(spec, Q, loc, c, j, a, N, s, S))
        rows.extend(_rows_at_infinity(spec, Q, degQ, s, S, A))
        rk = linalg.rank(rows) if rows else 0
        total += (S + 1) - rk
    return total


def _rows_at_point(spec, Q, loc, c, j, a, N, s, S):
    n = spec.n
    Qb = poly.exact_div(Q, poly.power(poly.linear(loc), N))
    if j is not None:
        # x = b + z^n, y ~ z^a U(z); Q(x) = z^{nN} Qb(x)
        low = s * a - n * N
        rel = max(1, -c - low + 1)
        chart = branch_chart(spec, j, rel)
        x = chart.x(rel)
        base = chart.y_power(s) * _series_of_poly_at(Qb, x).inverse()
        base = base.shift(-n * N)
        xfull = chart.x(base.prec - base.val + 2)
    else:
        low = -N
        rel = max(1, -c - low + 1)
        chart = unbranched_chart(spec, loc, rel)
        x = TruncatedSeries([loc, 1], 0, rel, "w")
        base = chart.y_power(s) * _series_of_poly_at(Qb, x).inverse()
        base = base.shift(-N)
        xfull = TruncatedSeries([loc, 1], 0, base.prec - base.val + 2, "w")
    rows_by_r = {}
    cur = base
    columns = []
    for t in range(S + 1):
        columns.append(cur)
        cur = cur * xfull
    lo = min(col.val for col in columns)
    for r in range(lo, -c):
        rows_by_r[r] = [col[r] for col in columns]
    return [row for row in rows_by_r.values() if any(row)]


def _rows_at_infinity(spec, Q, degQ, s, S, A):
    n = spec.n
    # w = 1/x:  x^t y^s / Q = w^{degQ - t - sA/n} W^s / Qrev(w)
    lead = degQ - s * A // n
    rel = max(1, S - lead + 1)
    chart = unbranched_chart(spec, INF, rel)
    Qrev = TruncatedSeries.from_polynomial(tuple(reversed(Q)), rel, "w")
    base = ((chart.V ** s) * Qrev.inverse()).shift(lead)
    rows = []
    for r in range(lead - S, 0):
        row = [base[r + t] for t in range(S + 1)]
        if any(row):
            rows.append(row)
    return rows


def _series_of_poly_at(p, x):
    from .series import evaluate_polynomial
    return evaluate_polynomial(p, x)
