"""Rigorous enclosures for rational powers, with three-valued comparisons.

Interval endpoints are exact Fractions, so ordinary arithmetic (+, -, *)
is exact and never widens an enclosure.  The only rounding happens when
taking integer k-th roots, and it is always outward.  Comparisons return
True / False / None; None means the enclosures still overlap at the last
precision of the ladder (width floor ~1e-30), i.e. "unknown".
"""

from dataclasses import dataclass
from fractions import Fraction

from sympy import integer_nthroot

# digits of the root scaling ladder; 48 digits ~ 160 bits
PRECISION_LADDER = (24, 48, 96, 192)
WIDTH_FLOOR = Fraction(1, 10**30)


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def exact(self):
        return self.lo == self.hi

    def midpoint_float(self):
        return float((self.lo + self.hi) / 2)


def exact(x):
    x = Fraction(x)
    return Interval(x, x)


def as_interval(x):
    return x if isinstance(x, Interval) else exact(x)


def add(a, b):
    a, b = as_interval(a), as_interval(b)
    return Interval(a.lo + b.lo, a.hi + b.hi)


def sub(a, b):
    a, b = as_interval(a), as_interval(b)
    return Interval(a.lo - b.hi, a.hi - b.lo)


def mul(a, b):
    a, b = as_interval(a), as_interval(b)
    prods = (a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi)
    return Interval(min(prods), max(prods))


def div(a, b):
    a, b = as_interval(a), as_interval(b)
    if b.lo <= 0 <= b.hi:
        raise ZeroDivisionError("interval denominator straddles zero")
    quots = (a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi)
    return Interval(min(quots), max(quots))


def nth_root(x, k, prec):
    """Enclosure of x**(1/k) for a Fraction x >= 0, k >= 1, prec decimal digits."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative base in fractional root")
    if k == 1:
        return Interval(x, x)
    if x == 0:
        return Interval(Fraction(0), Fraction(0))
    scale = 10**prec
    scaled = x * scale**k
    n_lo = scaled.numerator // scaled.denominator           # floor
    root_lo, exact_lo = integer_nthroot(n_lo, k)
    if exact_lo and scaled == n_lo:
        r = Fraction(int(root_lo), scale)
        return Interval(r, r)
    n_hi = -((-scaled.numerator) // scaled.denominator)     # ceil
    root_hi, exact_hi = integer_nthroot(n_hi, k)
    hi = int(root_hi) if (exact_hi and scaled == n_hi) else int(root_hi) + 1
    return Interval(Fraction(int(root_lo), scale), Fraction(hi, scale))


def rational_power(x, p, q, prec):
    """Enclosure of x**(p/q) for x an Interval or Fraction >= 0; p, q >= 1 ints."""
    x = as_interval(x)
    if x.lo < 0:
        raise ValueError("negative base in fractional power")
    if q == 1:
        return Interval(x.lo**p, x.hi**p)
    lo = nth_root(x.lo**p, q, prec)
    hi = lo if x.exact else nth_root(x.hi**p, q, prec)
    return Interval(lo.lo, hi.hi)


def le(a, b):
    """Three-valued a <= b on enclosures."""
    a, b = as_interval(a), as_interval(b)
    if a.hi <= b.lo:
        return True
    if a.lo > b.hi:
        return False
    return None


def ge(a, b):
    return le(b, a)


def decide(make_pair, relation=le, ladder=PRECISION_LADDER):
    """Refine `make_pair(prec) -> (lhs, rhs)` until `relation` resolves.

    Returns True/False, or None when the ladder is exhausted with both
    widths under the floor (a genuine tie at working precision).
    """
    verdict = None
    for prec in ladder:
        lhs, rhs = make_pair(prec)
        verdict = relation(lhs, rhs)
        if verdict is not None:
            return verdict
        if lhs.width < WIDTH_FLOOR and rhs.width < WIDTH_FLOOR:
            return None
    return verdict
