"""Cup-product pairing oracle for the kernel of the Higgs field.

The Kodaira-Spencer class of moving the branch point b_j is represented on
a punctured disc around p_j (the point over b_j) by the vector field

    rho_j(x) d/dx,   rho_j = f / ((x - b_j) f'),

which is the difference between the lift that keeps y fixed and the lift
that keeps x fixed.  Pairing it with a quadratic differential q means
taking the residue at p_j of the 1-form obtained by contraction.  With y
as uniformizer at p_j this is the coefficient of y^(e-1) in
rho_j(x(y)) G(x(y)) x'(y) for q = G(x) dx^2 / y^e.

Holomorphic 1-forms are x^a P_i(x) dx / y^i with P_i = prod (x-b)^floor(i a_b / n);
the basis is certified (count and regularity) rather than trusted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg, poly
from .errors import PreconditionError, TruncationError
from .local import branch_chart, local_expansion, unbranched_chart
from .series import TruncatedSeries, evaluate_polynomial
from .superelliptic import (INF, CurveDivisor, finite_chart, format_location, genus,
                            mobius, mobius_divisor)


def _fmt(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _check_oracle_spec(spec):
    for fb in spec.fibres():
        if fb.branch_index is not None and fb.npoints != 1:
            raise PreconditionError(
                "the residue oracle needs every branch point totally ramified",
                "gcd(n, a_j) = 1")
    for j in spec.moving_indices:
        if spec.branch[j].multiplicity != 1:
            raise PreconditionError("moving branch points must be simple", "a_j = 1")


def normalize_chart(spec, avoid=()):
    """Spec in coordinates where every branch point is finite, plus the matrix used."""
    _check_oracle_spec(spec)
    matrix = finite_chart(spec, avoid)
    if matrix is None:
        return spec, None
    return mobius(spec, matrix), matrix


# -- holomorphic differentials -------------------------------------------

@dataclass(frozen=True)
class HolomorphicBasis:
    """Basis x^a P_i(x) dx / y^i of H^0(omega_C), in finite coordinates."""

    spec: object
    elements: tuple
    factors: dict = field(repr=False)
    chart: tuple = None

    def __len__(self):
        return len(self.elements)

    def form(self, u):
        """(G, i) with the u-th basis element equal to G(x) dx / y^i."""
        i, a = self.elements[u]
        return poly.mul(poly.monomial(a), self.factors[i]), i

    def index(self):
        return {el: u for u, el in enumerate(self.elements)}


def _eigen_factor(spec, i):
    n = spec.n
    return poly.product_of_powers(
        (bp.location, (i * bp.multiplicity) // n) for bp in spec.branch)


def _top_exponent(spec, i):
    n, A = spec.n, spec.deg_f
    return (i * A) // n - sum((i * bp.multiplicity) // n for bp in spec.branch) - 2


def _valuation_at_branch(spec, j, G, power_y, dx_power):
    """Valuation at p_j of G(x) dx^dx_power / y^power_y, read off a series chart."""
    n = spec.n
    rel = 4 * n + 4
    while True:
        chart = branch_chart(spec, j, rel)
        x = chart.x(rel)
        val = evaluate_polynomial(G, x)
        dx = TruncatedSeries([n], n - 1, n - 1 + rel, "z")
        s = val * (dx ** dx_power) * chart.y_power(power_y).inverse() if power_y else \
            val * (dx ** dx_power)
        if s.coeffs:
            return s.val
        rel *= 2
        if rel > 1 << 14:
            raise TruncationError("valuation not determined")


def _valuation_at_infinity(spec, G, power_y, dx_power):
    rel = 8
    deg = poly.degree(G)
    chart = unbranched_chart(spec, INF, rel)
    # G(1/w) = w^-deg * reversed(G)(w);  dx = -w^-2 dw;  y = w^shift W
    Grev = TruncatedSeries.from_polynomial(tuple(reversed(G)), rel, "w").shift(-deg)
    s = Grev * (chart.y_power(power_y).inverse() if power_y else 1)
    return s.valuation() - 2 * dx_power


def holomorphic_basis(spec, certify=True):
    """Certified basis of holomorphic 1-forms (moves infinity off the branch locus)."""
    cspec, matrix = normalize_chart(spec)
    n = cspec.n
    elements, factors = [], {}
    for i in range(1, n):
        factors[i] = _eigen_factor(cspec, i)
        for a in range(_top_exponent(cspec, i) + 1):
            elements.append((i, a))
    basis = HolomorphicBasis(cspec, tuple(elements), factors, matrix)
    if certify:
        certify_basis(basis)
    return basis


def certify_basis(basis):
    """Raise unless the basis has g elements, each regular everywhere."""
    spec = basis.spec
    g = genus(spec)
    if len(basis) != g:
        raise PreconditionError(f"basis has {len(basis)} elements, genus is {g}",
                                "|basis| = g")
    for u in range(len(basis)):
        G, i = basis.form(u)
        for j, bp in enumerate(spec.branch):
            if _valuation_at_branch(spec, j, G, i, 1) < 0:
                raise PreconditionError(
                    f"basis element {basis.elements[u]} has a pole over "
                    f"{format_location(bp.location)}", "regular at p_j")
        if _valuation_at_infinity(spec, G, i, 1) < 0:
            raise PreconditionError(
                f"basis element {basis.elements[u]} has a pole over infinity",
                "regular over infinity")
    return True


# -- Kodaira-Spencer cocycles --------------------------------------------

@dataclass(frozen=True)
class KSCocycle:
    """rho(x) d/dx near the point over a moving branch point."""

    branch_index: int
    location: Fraction
    numerator: tuple
    denominator: tuple

    def rho(self, x):
        return evaluate_polynomial(self.numerator, x) / evaluate_polynomial(self.denominator, x)


def ks_cocycles(spec):
    if not spec.moving_indices:
        raise PreconditionError("no moving branch points: the family is isotrivial",
                                "k >= 1")
    out = []
    fp = poly.derivative(spec.f)
    for j in spec.moving_indices:
        b = spec.branch[j].location
        if b is INF:
            raise PreconditionError("moving point at infinity; normalize coordinates first",
                                    "b_j finite")
        if spec.branch[j].multiplicity != 1:
            raise PreconditionError("moving branch points must be simple", "a_j = 1")
        out.append(KSCocycle(j, b, poly.exact_div(spec.f, poly.linear(b)), fp))
    return tuple(out)


def vector_field_order(spec, j, order=None):
    """Order at p_j of the cocycle vector field, measured in the uniformizer y."""
    n = spec.n
    order = order or 3 * n
    cocycle = next(c for c in ks_cocycles(spec) if c.branch_index == j)
    le = local_expansion(spec, j, order)
    # rho d/dx = rho / x'(y) d/dy
    return (cocycle.rho(le.x) / le.dxdy).valuation()


class _ResidueKernel:
    """Series rho(x(y)) x'(y) (x(y) - b)^t at one moving point, cached by t."""

    def __init__(self, spec, cocycle, order):
        self.n = spec.n
        self.b = cocycle.location
        le = local_expansion(spec, cocycle.branch_index, order)
        self.delta = le.x - self.b
        self.powers = [cocycle.rho(le.x) * le.dxdy]

    def coefficient(self, G, e):
        n = self.n
        shifted = poly.normalize(_taylor(G, self.b))
        total = Fraction(0)
        for t, c in enumerate(shifted):
            if n * t > e - 1:
                break
            if c == 0:
                continue
            while len(self.powers) <= t:
                self.powers.append(self.powers[-1] * self.delta)
            total += c * self.powers[t][e - 1]
        return total


def _taylor(G, b):
    from .local import taylor_shift
    return taylor_shift(G, b)


def _as_poly(c):
    if isinstance(c, int):
        return poly.monomial(c)
    return poly.normalize(tuple(Fraction(v) for v in c))


def default_order(spec, e_max):
    return 3 * spec.n + e_max


class PairingEngine:
    """Evaluates <xi, G dx^2 / y^e> for a fixed spec, escalating precision as needed."""

    def __init__(self, spec, order=None, weights=None):
        self.spec = spec
        self.cocycles = ks_cocycles(spec)
        if weights is None:
            weights = [1] * len(self.cocycles)
        if len(weights) != len(self.cocycles):
            raise ValueError("one weight per moving branch point is required")
        self.weights = [Fraction(w) for w in weights]
        self.order = order
        self._kernels = None

    def _build(self, order):
        self._kernels = [_ResidueKernel(self.spec, c, order) for c in self.cocycles]
        self.order = order

    def __call__(self, G, e):
        G = _as_poly(G)
        if e < 0:
            raise PreconditionError("the y-exponent e must be non-negative", "e >= 0")
        order = max(self.order or default_order(self.spec, e), e + 2)
        while True:
            if self._kernels is None or order > self.order:
                self._build(order)
            try:
                return sum((w * k.coefficient(G, e)
                            for w, k in zip(self.weights, self._kernels)), Fraction(0))
            except TruncationError:
                order *= 2


def pairing(spec, q, order=None, weights=None):
    """<xi, q> for q = (G, e) meaning G(x) dx^2 / y^e; G a polynomial or exponent c."""
    G, e = q
    return PairingEngine(spec, order, weights)(G, e)


# -- cup-product matrix ----------------------------------------------------

@dataclass(frozen=True)
class CupMatrix:
    entries: tuple
    basis: HolomorphicBasis = field(repr=False, default=None)

    @property
    def g(self):
        return len(self.entries)

    def is_symmetric(self):
        return all(self.entries[u][v] == self.entries[v][u]
                   for u in range(self.g) for v in range(u))

    def rank(self):
        return linalg.rank(self.entries) if self.g else 0

    def scaled(self, c):
        return CupMatrix(tuple(tuple(c * v for v in row) for row in self.entries), self.basis)

    def apply(self, vec):
        return linalg.mat_vec(self.entries, vec)

    def to_json(self):
        return json.dumps([[_fmt(v) for v in row] for row in self.entries])


def cup_matrix(spec, order=None, weights=None, basis=None):
    """B[u][v] = <xi, omega_u omega_v> over the certified holomorphic basis."""
    if basis is None:
        basis = holomorphic_basis(spec)
    engine = PairingEngine(basis.spec, order, weights)
    g = len(basis)
    forms = [basis.form(u) for u in range(g)]
    rows = [[Fraction(0)] * g for _ in range(g)]
    for u in range(g):
        for v in range(u, g):
            (Gu, iu), (Gv, iv) = forms[u], forms[v]
            val = engine(poly.mul(Gu, Gv), iu + iv)
            rows[u][v] = rows[v][u] = val
    return CupMatrix(tuple(tuple(r) for r in rows), basis)


def kernel_dimension(B):
    return B.g - B.rank()


# -- forms vanishing on a divisor -------------------------------------------

def _chart_divisor(basis, D):
    if basis.chart is not None:
        D = mobius_divisor(D, basis.chart)
    pw = D.pointwise(basis.spec)
    if INF in pw and pw[INF]:
        raise PreconditionError("divisor meets infinity in the oracle chart",
                                "supp D finite")
    return pw


def _vanishing_orders(spec, pw, i, weight):
    """Extra vanishing of the cofactor needed at each point for G dx^w / y^i."""
    n = spec.n
    fibres = {fb.location: fb for fb in spec.fibres()}
    out = []
    for loc, c in pw.items():
        fb = fibres.get(loc)
        if fb is not None and fb.branch_index is not None:
            a = spec.branch[fb.branch_index].multiplicity
            need = -((-(c - weight * (n - 1) + i * a)) // n)
            out.append((loc, max(0, need)))
        elif c > 0:
            out.append((loc, c))
    return out


def forms_vanishing_on(basis, D):
    """Coordinates (in ``basis``) of a basis of H^0(omega_C(-D)) for effective D."""
    spec = basis.spec
    if any(c < 0 for c in D.ram_part.values()) or any(
            c < 0 for c in D.pullback_part.values()):
        raise PreconditionError("divisor must be effective", "D >= 0")
    pw = _chart_divisor(basis, D)
    idx = basis.index()
    vectors = []
    for i in range(1, spec.n):
        # G = P_i * h; order of h at b must reach kappa_b
        kappas = []
        for loc, need in _vanishing_orders(spec, pw, i, 1):
            floor_part = (i * _mult_at(spec, loc)) // spec.n
            kappas.append((loc, max(0, need - floor_part)))
        K = poly.product_of_powers(kappas)
        top = _top_exponent(spec, i)
        for s in range(top - poly.degree(K) + 1):
            h = poly.mul(K, poly.monomial(s))
            v = [Fraction(0)] * len(basis)
            for a, c in enumerate(h):
                if c:
                    v[idx[(i, a)]] = c
            vectors.append(v)
    return vectors


def _mult_at(spec, loc):
    j = spec.index_of(loc)
    return 0 if j is None else spec.branch[j].multiplicity


@dataclass(frozen=True)
class QuadraticDifferentials:
    spec: object
    chart: tuple
    forms: tuple  # (G, e) meaning G dx^2 / y^e


def quadratic_differential_basis(spec, D=None):
    """Basis of H^0(omega_C^2(-D)) as forms G dx^2/y^e, one eigenspace per e."""
    D = D if D is not None else CurveDivisor()
    cspec, matrix = normalize_chart(spec, D.pullback_part.keys())
    if not D.is_effective(spec):
        raise PreconditionError("divisor must be effective", "D >= 0")
    Dc = mobius_divisor(D, matrix) if matrix is not None else D
    pw = Dc.pointwise(cspec)
    n, A = cspec.n, cspec.deg_f
    forms = []
    for e in range(2 * n - 2, 3 * n - 2):
        needs = dict(_vanishing_orders(cspec, pw, e, 2))
        for bp in cspec.branch:
            if bp.location not in needs:
                needs[bp.location] = max(0, -((-(-2 * (n - 1) + e * bp.multiplicity)) // n))
        M = poly.product_of_powers(needs.items())
        top = (e * A) // n - 4 - poly.degree(M)
        if (e * A) % n:
            raise PreconditionError("infinity must be unbranched in the chart", "n | deg f")
        for s in range(top + 1):
            forms.append((poly.mul(M, poly.monomial(s)), e))
    return QuadraticDifferentials(cspec, matrix, tuple(forms))


def kernel_containment_check(spec, D, B=None):
    """Whether every form in H^0(omega_C(-D)) lies in the kernel of the cup matrix."""
    if B is None:
        B = cup_matrix(spec)
    for v in forms_vanishing_on(B.basis, D):
        if any(B.apply(v)):
            return False
    return True


def containment_dims(spec, D, B=None):
    """(dim H^0(omega_C(-D)), dim ker B) in the oracle's coordinates."""
    if B is None:
        B = cup_matrix(spec)
    return len(forms_vanishing_on(B.basis, D)), kernel_dimension(B)
