"""Exact local expansions of y^n = f(x) at points of the curve.

Three kinds of charts are provided:

* at a simple branch point b (f(b) = 0, f'(b) != 0) the coordinate y itself
  is a uniformizer and x(y) is found by Newton iteration;
* at a totally ramified branch point of multiplicity a coprime to n the
  uniformizer z satisfies x = b + z^n and y = c * z^a * U(z);
* at an unbranched point, the uniformizer is x - b (or 1/x at infinity)
  and y is an n-th root of a unit power series.

In the last two cases y is only determined up to a nonzero constant; the
callers only use valuations and linear conditions that are insensitive to
that constant within one eigenspace.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import poly
from .errors import PreconditionError, TruncationError
from .series import TruncatedSeries, evaluate_polynomial
from .superelliptic import INF


def taylor_shift(p, b):
    """Coefficients of p(b + X) as a polynomial in X."""
    return poly.normalize(_compose_linear(p, b))


def _compose_linear(p, b):
    out = (Fraction(0),)
    shift = (Fraction(b), Fraction(1))
    for c in reversed(p):
        out = poly.add(poly.mul(out, shift), (c,))
    return out


@dataclass(frozen=True)
class LocalExpansion:
    """x(y) and dx/dy near a simple branch point, in the uniformizer y."""

    branch_index: int
    location: Fraction
    x: TruncatedSeries
    dxdy: TruncatedSeries

    def residual(self, spec):
        """y^n - f(x(y)); vanishes up to the precision of x."""
        y = TruncatedSeries.monomial(1, self.x.prec, var="y")
        return y ** spec.n - evaluate_polynomial(spec.f, self.x)


def _reversion(F, N):
    """X in Q[[u]] with F(X) = u, X(0) = 0, for F(0) = 0, F'(0) != 0; precision u^N."""
    F1 = F[1] if len(F) > 1 else 0
    if F1 == 0:
        raise PreconditionError("branch point is not simple: f'(b) = 0", "f'(b_j) != 0")
    dF = poly.derivative(F)
    X = TruncatedSeries([0, 1 / Fraction(F1)], 0, 2, "u")
    while X.prec < N:
        p = min(2 * X.prec, N)
        Xp = TruncatedSeries(X.coeffs, X.val, p, "u")
        u = TruncatedSeries.monomial(1, p, var="u")
        step = (evaluate_polynomial(F, Xp) - u) / evaluate_polynomial(dF, Xp)
        X = (Xp - step).truncate(p)
    return X.truncate(N)


def local_expansion(spec, j, order):
    """Newton-iteration expansion of x in the uniformizer y at branch point j.

    ``order`` is the absolute precision in y of the returned x(y).
    """
    bp = spec.branch[j]
    if bp.location is INF:
        raise PreconditionError("local expansion needs a finite branch point; "
                                "apply a Moebius normalization first", "b_j finite")
    if bp.multiplicity != 1:
        raise PreconditionError("local expansion in y needs a simple branch point",
                                "f'(b_j) != 0")
    n = spec.n
    b = bp.location
    F = taylor_shift(spec.f, b)
    Nu = -(-order // n)
    X = _reversion(F, Nu)
    xs = X.substitute_power(n, "y").truncate(order) + b
    return LocalExpansion(j, b, xs, xs.derivative())


# -- charts used for valuations and brute-force linear conditions ---------

@dataclass(frozen=True)
class BranchChart:
    """x = b + z^n and y ~ z^a * U(z) at a totally ramified finite point."""

    location: Fraction
    n: int
    a: int
    U: TruncatedSeries

    def x(self, prec):
        return TruncatedSeries([self.location] + [0] * (self.n - 1) + [1], 0, prec, "z")

    def y_power(self, s):
        return (self.U ** s).shift(s * self.a)


def branch_chart(spec, j, rel_prec):
    bp = spec.branch[j]
    n, a, b = spec.n, bp.multiplicity, bp.location
    if b is INF:
        raise PreconditionError("branch chart needs a finite point", "b_j finite")
    if gcd(n, a) != 1:
        raise PreconditionError("branch chart needs a totally ramified point",
                                "gcd(n, a_j) = 1")
    u = poly.exact_div(spec.f, poly.power(poly.linear(b), a))
    ub = poly.evaluate(u, b)
    xz = TruncatedSeries([b] + [0] * (n - 1) + [1], 0, rel_prec, "z")
    unit = evaluate_polynomial(u, xz) * (1 / ub)
    return BranchChart(b, n, a, unit.real_power(Fraction(1, n)))


@dataclass(frozen=True)
class UnbranchedChart:
    """w = x - b (or w = 1/x at infinity) and y ~ w^shift * V(w)."""

    location: object
    V: TruncatedSeries
    shift: int

    def y_power(self, s):
        return (self.V ** s).shift(s * self.shift)


def unbranched_chart(spec, location, rel_prec):
    if location is INF:
        if any(bp.location is INF for bp in spec.branch) or spec.deg_f % spec.n:
            raise PreconditionError("infinity must be unbranched", "n | deg f")
        # w^A f(1/w) = prod (1 - b w)^a for monic f
        rev = poly.product_of_powers(())
        for bp in spec.branch:
            rev = poly.mul(rev, poly.power((Fraction(1), -bp.location), bp.multiplicity))
        W = TruncatedSeries.from_polynomial(rev, rel_prec, "w").real_power(
            Fraction(1, spec.n))
        return UnbranchedChart(INF, W, -(spec.deg_f // spec.n))
    fb = poly.evaluate(spec.f, location)
    if fb == 0:
        raise PreconditionError("point is a branch point", "f(b) != 0")
    shifted = taylor_shift(spec.f, location)
    V = (TruncatedSeries.from_polynomial(shifted, rel_prec, "w") * (1 / fb)).real_power(
        Fraction(1, spec.n))
    return UnbranchedChart(location, V, 0)


def laurent_valuation(series_fn, start=4, limit=4096):
    """Valuation of a lazily computed series, escalating precision until known."""
    prec = start
    while prec <= limit:
        s = series_fn(prec)
        if s.coeffs:
            return s.val
        prec *= 2
    raise TruncationError("valuation not determined within the precision limit")
