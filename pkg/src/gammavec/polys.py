"""Exact univariate polynomial arithmetic over rationals.

A polynomial is a tuple of Fractions in ascending degree with trailing
zeros trimmed; the zero polynomial is the empty tuple ().  Everything is
exact; no floats appear anywhere in this module.
"""

from fractions import Fraction

NEG_INF = float("-inf")  # degree sentinel for the zero polynomial


def poly(coeffs):
    """Canonicalize a coefficient sequence into a trimmed Fraction tuple."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def degree(p):
    return len(p) - 1 if p else NEG_INF


def coeff(p, i):
    return p[i] if 0 <= i < len(p) else Fraction(0)


def add(p, q):
    n = max(len(p), len(q))
    return poly([coeff(p, i) + coeff(q, i) for i in range(n)])


def sub(p, q):
    n = max(len(p), len(q))
    return poly([coeff(p, i) - coeff(q, i) for i in range(n)])


def scale(p, c):
    return poly([Fraction(c) * a for a in p])


def mul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def pow_(p, n):
    out = poly([1])
    for _ in range(n):
        out = mul(out, p)
    return out


def eval_at(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def compose_linear(p, a, b):
    """p(a*x + b), exactly."""
    out = ()
    lin = poly([b, a])
    power = poly([1])
    for c in p:
        if c != 0:
            out = add(out, scale(power, c))
        power = mul(power, lin)
    return out


def divide_by_one_plus_t(p):
    """Exact division p(t) = (1 + t) q(t); raises if the remainder is nonzero."""
    if not p:
        return ()
    # p = (1+t) q  =>  p_0 = q_0 and p_i = q_i + q_{i-1}
    q = [Fraction(0)] * (len(p) - 1)
    for i in range(len(q)):
        q[i] = coeff(p, i) - (q[i - 1] if i > 0 else 0)
    rem = coeff(p, len(q)) - (q[-1] if q else 0)
    if rem != 0:
        raise ArithmeticError("polynomial is not divisible by (1 + t)")
    return poly(q)


def chebyshev_t(n):
    """Coefficients of the degree-n Chebyshev polynomial of the first kind."""
    if n == 0:
        return poly([1])
    prev, cur = poly([1]), poly([0, 1])
    for _ in range(n - 1):
        prev, cur = cur, sub(scale(mul(poly([0, 1]), cur), 2), prev)
    return cur


def apply_chebyshev_map(p):
    """Image of p under the linear map sending x^m to T_m(x)."""
    out = ()
    for m, c in enumerate(p):
        if c != 0:
            out = add(out, scale(chebyshev_t(m), c))
    return out
