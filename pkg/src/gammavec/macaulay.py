"""Macaulay representations, pseudopowers, and the realizability checks.

The three checks (f-vector, Cohen-Macaulay h-vector, simplicial-sphere
g-vector) are exact integer arithmetic.  The real-number bounds around a
pseudopower (binomial root, fractional powers) are certified with exact
rational brackets; no verdict is ever decided by bare floating point.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import intervals
from .errors import RangeGuardError

# ---------------------------------------------------------------------------
# representation and pseudopower
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MacaulayRep:
    a: int
    k: int
    terms: tuple  # ((n_k, k), (n_{k-1}, k-1), ..., (n_j, j)), strictly descending

    def value(self):
        return sum(comb(n, i) for n, i in self.terms)

    def pseudopower(self):
        return sum(comb(n + 1, i + 1) for n, i in self.terms)

    def to_json(self):
        return {
            "a": str(self.a),
            "k": self.k,
            "terms": [[n, i] for n, i in self.terms],
            "pseudopower": str(self.pseudopower()),
        }

    def dumps(self):
        return json.dumps(self.to_json())


def _largest_top(a, k):
    """Largest q with C(q, k) <= a (a >= 1)."""
    q = k
    while comb(q + 1, k) <= a:
        q = max(q + 1, 2 * q)  # gallop
    lo, hi = k, q
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if comb(mid, k) <= a:
            lo = mid
        else:
            hi = mid - 1
    return lo


def macaulay_rep(a, k):
    """The unique expansion a = C(n_k,k) + ... + C(n_j,j), n_k > ... > n_j >= j >= 1."""
    if a < 1 or k < 1:
        raise RangeGuardError("macaulay_rep needs a >= 1 and k >= 1")
    terms = []
    rest, i = a, k
    prev_top = None
    while rest > 0 and i >= 1:
        n = _largest_top(rest, i)
        assert prev_top is None or n < prev_top, "greedy descent lost strictness"
        terms.append((n, i))
        rest -= comb(n, i)
        prev_top = n
        i -= 1
    assert rest == 0, "greedy Macaulay descent failed to terminate"
    return MacaulayRep(a, k, tuple(terms))


def pseudopower(a, k):
    """Index-shifted Macaulay sum a^<k>; 0^<k> = 0 by convention."""
    if k < 1:
        raise RangeGuardError("pseudopower needs k >= 1")
    if a == 0:
        return 0
    return macaulay_rep(a, k).pseudopower()


# ---------------------------------------------------------------------------
# binomial root and rigorous bounds
# ---------------------------------------------------------------------------


def binom_at(x, k):
    """C(x, k) = x(x-1)...(x-k+1)/k! for rational x, exact."""
    num = Fraction(1)
    for j in range(k):
        num *= Fraction(x) - j
    return num / factorial(k)


def binomial_root_bracket(a, k, bits=64):
    """Exact rational bracket [lo, hi] around the real x >= k-1 with C(x,k) = a.

    When a = C(q, k) for an integer q the bracket is the point [q, q];
    otherwise x is irrational and the bracket has width 2^-bits.
    """
    if a < 1 or k < 1:
        raise RangeGuardError("binomial_root needs a >= 1 and k >= 1")
    n = _largest_top(a, k)
    if comb(n, k) == a:
        return Fraction(n), Fraction(n)
    lo, hi = Fraction(n), Fraction(n + 1)
    for _ in range(bits):
        mid = (lo + hi) / 2
        if binom_at(mid, k) <= a:
            lo = mid
        else:
            hi = mid
    return lo, hi


def binomial_root(a, k):
    """The real x with C(x, k) = a, as a float (exact cases are exact)."""
    lo, hi = binomial_root_bracket(a, k, bits=64)
    return float((lo + hi) / 2)


def c_constant_interval(k, prec=24):
    """Enclosure of C_k = (k!)^(1/k) / (k+1)."""
    root = intervals.nth_root(Fraction(factorial(k)), k, prec)
    return intervals.div(root, intervals.exact(k + 1))


def power_upper_interval(a, k, prec=24):
    """Enclosure of a^((k+1)/k)."""
    return intervals.rational_power(Fraction(a), k + 1, k, prec)


@dataclass(frozen=True)
class PseudopowerBounds:
    a: int
    k: int
    pseudo: int
    lower: int                # C(n_k + 1, k + 1)
    x: float                  # real root of C(x, k) = a
    upper_real: float         # C(x + 1, k + 1)
    power_upper: float        # a^((k+1)/k)
    c_k: float                # (k!)^(1/k) / (k+1)
    asymptotic: float         # C_k * a^((k+1)/k)
    chain_verified: bool      # lower <= pseudo <= upper_real <= power_upper, rigorously

    def to_json(self):
        return {
            "a": str(self.a),
            "k": self.k,
            "pseudopower": str(self.pseudo),
            "lower": str(self.lower),
            "x": self.x,
            "upper_real": self.upper_real,
            "power_upper": self.power_upper,
            "C_k": self.c_k,
            "asymptotic": self.asymptotic,
            "chain_verified": self.chain_verified,
        }


def verify_pseudopower_sandwich(a, k):
    """Rigorously certify C(n_k+1, k+1) <= a^<k> <= C(x+1, k+1) <= a^((k+1)/k).

    Uses the identity C(x+1, k+1) = a (x+1)/(k+1) (x the real binomial
    root), which reduces both real comparisons to exact rational ones
    plus a short witness search; everything is exact arithmetic.
    """
    rep = macaulay_rep(a, k)
    pp = rep.pseudopower()
    n_k = rep.terms[0][0]
    if comb(n_k + 1, k + 1) > pp:
        return False

    # middle link: pp <= a (x+1)/(k+1)  <=>  x >= tau
    tau = Fraction(k + 1) * pp / a - 1
    if tau > n_k:  # otherwise x >= n_k >= tau trivially
        if binom_at(tau, k) > a:  # x < tau
            return False

    # last link: a (x+1)/(k+1) <= a^(1+1/k)  <=>  (x+1)^k <= (k+1)^k a
    target = (k + 1) ** k * a
    if comb(n_k, k) == a:  # x = n_k exactly
        return (n_k + 1) ** k <= target
    # witness u >= x certified by C(u,k) >= a, with (u+1)^k <= target;
    # x is irrational here, so the strict inequality resolves in finitely
    # many bisection steps (512 is far beyond any reachable depth)
    lo, hi = Fraction(n_k), Fraction(n_k + 1)
    for _ in range(512):
        if (hi + 1) ** k <= target:
            return True
        if (lo + 1) ** k > target:
            return False  # even a lower bound for x fails
        mid = (lo + hi) / 2
        if binom_at(mid, k) >= a:
            hi = mid  # still an upper witness for x
        else:
            lo = mid
    raise ArithmeticError("pseudopower sandwich bisection did not resolve")


def pseudopower_bounds(a, k, prec=24):
    """All bounds of the pseudopower sandwich, with the chain certified."""
    if a < 1 or k < 1:
        raise RangeGuardError("pseudopower_bounds needs a >= 1 and k >= 1")
    rep = macaulay_rep(a, k)
    pp = rep.pseudopower()
    n_k = rep.terms[0][0]
    lower = comb(n_k + 1, k + 1)
    lo, hi = binomial_root_bracket(a, k)
    upper_real_iv = intervals.Interval(binom_at(lo + 1, k + 1), binom_at(hi + 1, k + 1))
    power_iv = power_upper_interval(a, k, prec)
    ck_iv = c_constant_interval(k, prec)
    asym_iv = intervals.mul(ck_iv, power_iv)
    chain = lower <= pp and verify_pseudopower_sandwich(a, k)
    return PseudopowerBounds(
        a=a,
        k=k,
        pseudo=pp,
        lower=lower,
        x=float((lo + hi) / 2),
        upper_real=upper_real_iv.midpoint_float(),
        power_upper=power_iv.midpoint_float(),
        c_k=ck_iv.midpoint_float(),
        asymptotic=asym_iv.midpoint_float(),
        chain_verified=chain,
    )


def scaled_pseudopower_ratio(a, k, beta):
    """(beta*a)^<k> / (beta^((k+1)/k) a^<k>) as an enclosure (prec ladder inside).

    The ratio tends to 1 as a grows; this is the finite-a diagnostic.
    """
    beta = Fraction(beta)
    scaled = beta * a
    if scaled.denominator != 1 or scaled < 1:
        raise RangeGuardError("beta * a must be a positive integer")
    num = pseudopower(int(scaled), k)
    den_pp = pseudopower(a, k)
    ratio = None
    for prec in intervals.PRECISION_LADDER:
        beta_pow = intervals.rational_power(beta, k + 1, k, prec)
        ratio = intervals.div(
            intervals.exact(num), intervals.mul(beta_pow, intervals.exact(den_pp))
        )
        if ratio.width < Fraction(1, 10**12):
            break
    return ratio


# ---------------------------------------------------------------------------
# realizability checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    failing_index: int | None = None
    note: str | None = None

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {"ok": self.ok, "failing_index": self.failing_index, "note": self.note}


def check_f_vector(f):
    """Is f the f-vector of some simplicial complex (0 < f_{i+1} <= f_i^<i+1>)?

    Trailing zeros are trimmed (noted in the result); an interior zero or
    a nonpositive leading entry fails at its index.
    """
    f = list(f)
    note = None
    trimmed = 0
    while f and f[-1] == 0:
        f.pop()
        trimmed += 1
    if trimmed:
        note = f"trimmed {trimmed} trailing zero(s)"
    if not f:
        return CheckResult(True, note=note or "empty after trimming")
    if f[0] <= 0:
        return CheckResult(False, 0, note)
    for i in range(len(f) - 1):
        if f[i + 1] <= 0:
            return CheckResult(False, i + 1, note or "interior nonpositive entry")
        if f[i + 1] > pseudopower(f[i], i + 1):
            return CheckResult(False, i + 1, note)
    return CheckResult(True, note=note)


def check_cm_h(h):
    """Is h the h-vector of a Cohen-Macaulay (equivalently shellable) complex?

    h_0 = 1, h_1 >= 0, and 0 <= h_{i+1} <= h_i^<i> for i >= 1.
    """
    h = list(h)
    if not h or h[0] != 1:
        return CheckResult(False, 0, "h_0 must be 1")
    for i in range(1, len(h)):
        if h[i] < 0:
            return CheckResult(False, i, "negative entry")
        if i >= 2 and h[i] > pseudopower(h[i - 1], i - 1):
            return CheckResult(False, i)
    return CheckResult(True)


def check_sphere_g(h):
    """Is h the h-vector of a simplicial sphere?

    Palindromic, h_0 = 1, and the truncated g-vector passes the
    Cohen-Macaulay condition (the g-vector characterization).
    """
    h = list(h)
    if not h or h[0] != 1:
        return CheckResult(False, 0, "h_0 must be 1")
    if h != h[::-1]:
        return CheckResult(False, None, "not palindromic")
    d = len(h) - 1
    g = [h[k] - (h[k - 1] if k else 0) for k in range(d // 2 + 1)]
    inner = check_cm_h(g)
    if not inner.ok:
        return CheckResult(False, inner.failing_index, "g-vector fails M-condition")
    return CheckResult(True)


def avgh_bound_check(h, q):
    """q h_q <= h_1 (1 + h_1 + ... + h_{q-1}), exactly."""
    h = list(h)
    if not 1 <= q < len(h):
        raise RangeGuardError("need 1 <= q < len(h)")
    rhs = h[1] * (1 + sum(h[1:q]))
    return q * h[q] <= rhs
