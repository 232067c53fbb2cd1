"""Dense univariate polynomials over Q as tuples of Fractions, lowest degree first."""

from fractions import Fraction


def normalize(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(Fraction(c) for c in p)


def degree(p):
    return len(normalize(p)) - 1


def add(p, q):
    n = max(len(p), len(q))
    return normalize(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return normalize(out)


def power(p, e):
    out = (Fraction(1),)
    for _ in range(e):
        out = mul(out, p)
    return out


def linear(root):
    """The monic polynomial x - root."""
    return (Fraction(-root), Fraction(1))


def monomial(k):
    return (Fraction(0),) * k + (Fraction(1),)


def derivative(p):
    return normalize(i * p[i] for i in range(1, len(p)))


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def divmod_poly(p, q):
    p = list(normalize(p))
    q = normalize(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q) and p:
        shift = len(p) - len(q)
        c = p[-1] / q[-1]
        quot[shift] = c
        for i, b in enumerate(q):
            p[i + shift] -= c * b
        p = list(normalize(p))
    return normalize(quot), normalize(p)


def exact_div(p, q):
    quot, rem = divmod_poly(p, q)
    if rem:
        raise ArithmeticError("polynomial division is not exact")
    return quot


def product_of_powers(roots_and_exponents):
    out = (Fraction(1),)
    for root, e in roots_and_exponents:
        out = mul(out, power(linear(root), e))
    return out
