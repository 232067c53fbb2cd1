"""Truncated Laurent series over Q with sound precision tracking.

A :class:`TruncatedSeries` stands for

    sum_{k = val}^{prec - 1} c_k t^k + O(t^prec)

and every arithmetic operation returns the largest precision that is
guaranteed by its inputs.  Asking for a coefficient at or beyond ``prec``
raises :class:`TruncationError` instead of silently returning zero.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import TruncationError

_ZERO = Fraction(0)


class TruncatedSeries:
    __slots__ = ("coeffs", "val", "prec", "var")

    def __init__(self, coeffs, val=0, prec=None, var="t"):
        coeffs = [Fraction(c) for c in coeffs]
        if prec is None:
            prec = val + len(coeffs)
        coeffs = coeffs[: max(prec - val, 0)]
        coeffs.extend([_ZERO] * (prec - val - len(coeffs)))
        # strip leading zeros so that ``val`` is the true valuation when known
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        val = min(val + i, prec)
        coeffs = coeffs[i:]
        self.coeffs = coeffs
        self.val = val
        self.prec = prec
        self.var = var

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_polynomial(cls, p, prec, var="t"):
        return cls(list(p)[:prec], 0, prec, var)

    @classmethod
    def monomial(cls, k, prec, coeff=1, var="t"):
        return cls([coeff], k, prec, var)

    @classmethod
    def one(cls, prec, var="t"):
        return cls([1], 0, prec, var)

    # -- inspection -------------------------------------------------------

    def is_known_zero(self):
        return not self.coeffs

    def __getitem__(self, k):
        if k >= self.prec:
            raise TruncationError(
                f"coefficient of {self.var}^{k} requested but series is only known "
                f"up to O({self.var}^{self.prec})")
        if k < self.val:
            return _ZERO
        return self.coeffs[k - self.val]

    def valuation(self):
        """True valuation; raises if the series is indistinguishable from zero."""
        if not self.coeffs:
            raise TruncationError(
                f"valuation unknown: series is O({self.var}^{self.prec})")
        return self.val

    def residue(self):
        return self[-1]

    def __repr__(self):
        terms = [f"{c}*{self.var}^{self.val + i}"
                 for i, c in enumerate(self.coeffs) if c]
        return " + ".join(terms + [f"O({self.var}^{self.prec})"])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.val, self.prec, self.coeffs) == (other.val, other.prec, other.coeffs)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries([other], 0, max(self.prec, 1), self.var)

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            other = TruncatedSeries([other], 0, max(self.prec, 1), self.var)
        prec = min(self.prec, other.prec)
        val = min(self.val, other.val)
        out = [_ZERO] * max(prec - val, 0)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.val + i
                if k < prec:
                    out[k - val] += c
        return TruncatedSeries(out, val, prec, self.var)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs], self.val, self.prec, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = Fraction(other)
            if c == 0:
                return TruncatedSeries([], self.prec, self.prec, self.var)
            return TruncatedSeries([c * a for a in self.coeffs], self.val, self.prec,
                                   self.var)
        val = self.val + other.val
        prec = min(self.val + other.prec, other.val + self.prec)
        size = prec - val
        if size <= 0:
            return TruncatedSeries([], prec, prec, self.var)
        a, b = self.coeffs, other.coeffs
        out = [_ZERO] * size
        for i in range(min(len(a), size)):
            ai = a[i]
            if ai == 0:
                continue
            lim = min(len(b), size - i)
            for j in range(lim):
                out[i + j] += ai * b[j]
        return TruncatedSeries(out, val, prec, self.var)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by var^k."""
        return TruncatedSeries(self.coeffs, self.val + k, self.prec + k, self.var)

    def inverse(self):
        v = self.valuation()
        rel = self.prec - v
        a = self.coeffs
        inv0 = 1 / a[0]
        out = [inv0]
        for k in range(1, rel):
            s = _ZERO
            for j in range(1, min(k, len(a) - 1) + 1):
                s += a[j] * out[k - j]
            out.append(-s * inv0)
        return TruncatedSeries(out, -v, rel - v, self.var)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        if e == 0:
            return TruncatedSeries.one(max(self.prec, 1), self.var)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self):
        out = [(self.val + i) * c for i, c in enumerate(self.coeffs)]
        return TruncatedSeries(out, self.val - 1, self.prec - 1, self.var)

    def truncate(self, prec):
        return TruncatedSeries(self.coeffs, self.val, min(prec, self.prec), self.var)

    def substitute_power(self, n, var=None):
        """Series in s obtained by t -> s^n."""
        out = []
        for c in self.coeffs:
            out.append(c)
            out.extend([_ZERO] * (n - 1))
        return TruncatedSeries(out, self.val * n, self.prec * n, var or self.var)

    def real_power(self, alpha):
        """(self)^alpha for rational alpha; needs valuation 0 and constant term 1."""
        if self.valuation() != 0 or self.coeffs[0] != 1:
            raise ValueError("real_power needs a series with constant term 1")
        alpha = Fraction(alpha)
        a = self.coeffs
        n = len(a)
        g = [Fraction(1)]
        # F G' = alpha F' G, term by term
        for k in range(1, n):
            s = _ZERO
            for j in range(1, min(k, n - 1) + 1):
                s += ((alpha + 1) * j - k) * a[j] * g[k - j]
            g.append(s / k)
        return TruncatedSeries(g, 0, self.prec, self.var)


def evaluate_polynomial(p, s):
    """p(s) for a polynomial p (coefficients lowest first) and a series s."""
    p = list(p)
    if len(p) <= 1:
        return TruncatedSeries(p, 0, max(s.prec, 1), s.var)
    acc = s * p[-1] + p[-2]
    for c in reversed(p[:-2]):
        acc = acc * s + c
    return acc
