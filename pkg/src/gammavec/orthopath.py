"""Unitary orthogonal polynomials, weighted Motzkin paths, monomer/dimer
covers, and the generalized inverted gamma calculus.

The three-term recursion P_{m+1} = (x - b_m) P_m - lambda_m P_{m-1}
drives everything.  The Motzkin weight table (mu) is the inverse of the
coefficient matrix of the family; its entries are sums over weighted
paths and can be recomputed by brute enumeration.  Coefficients of P_m
are weighted monomer/dimer cover sums; with the translated-Chebyshev
weights this turns gamma vectors into signed cover counts.
"""

import json
from dataclasses import dataclass
from fractions import Fraction

from . import polys
from .complexes import tchebyshev_subdivision
from .errors import NormalizationError, RangeGuardError, ShapeError
from .macaulay import pseudopower
from .vectors import h_half_to_gamma

COVER_GUARD = 24
PATH_GUARD = 18

# ---------------------------------------------------------------------------
# weight schemes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WeightScheme:
    """Recursion weights: b = (b_0, b_1, ...), lam = (lambda_1, lambda_2, ...)."""

    b: tuple
    lam: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(Fraction(x) for x in self.b))
        object.__setattr__(self, "lam", tuple(Fraction(x) for x in self.lam))

    def b_at(self, i):
        if not 0 <= i < len(self.b):
            raise ShapeError(f"scheme has no b_{i}")
        return self.b[i]

    def lam_at(self, j):
        if not 1 <= j <= len(self.lam):
            raise ShapeError(f"scheme has no lambda_{j}")
        return self.lam[j - 1]

    @property
    def all_positive(self):
        return all(x > 0 for x in self.b) and all(x > 0 for x in self.lam)

    def to_json(self):
        return {
            "b": [str(x) for x in self.b],
            "lam": [str(x) for x in self.lam],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(
            tuple(Fraction(s) for s in obj["b"]),
            tuple(Fraction(s) for s in obj["lam"]),
        )


def chebyshev_scheme(order):
    """Weights of the translated unitary Chebyshev family T^_m(x - 1):
    b_m = 1, lambda_1 = 1/2, lambda_m = 1/4 for m >= 2."""
    lam = tuple(
        Fraction(1, 2) if j == 1 else Fraction(1, 4) for j in range(1, max(order, 1))
    )
    return WeightScheme((Fraction(1),) * max(order, 1), lam)


# ---------------------------------------------------------------------------
# the family and its Motzkin inverse
# ---------------------------------------------------------------------------


def unitary_family(weights, n):
    """Coefficient rows of P_0..P_n (ascending degree, exact rationals)."""
    rows = [polys.poly([1])]
    if n >= 1:
        rows.append(polys.poly([-weights.b_at(0), 1]))
    for m in range(1, n):
        x_minus_b = polys.poly([-weights.b_at(m), 1])
        nxt = polys.sub(
            polys.mul(x_minus_b, rows[m]),
            polys.scale(rows[m - 1], weights.lam_at(m)),
        )
        rows.append(nxt)
    return [tuple(polys.coeff(p, i) for i in range(n + 1)) for p in rows]


def mu_matrix(weights, n):
    """Motzkin weight table mu[r][k] for 0 <= k <= r <= n, by the step recursion."""
    mu = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]
    mu[0][0] = Fraction(1)
    for r in range(1, n + 1):
        for k in range(r + 1):
            acc = Fraction(0)
            if k >= 1:
                acc += mu[r - 1][k - 1]
            if k <= r - 1:
                acc += weights.b_at(k) * mu[r - 1][k]
            if k + 1 <= r - 1:
                acc += weights.lam_at(k + 1) * mu[r - 1][k + 1]
            mu[r][k] = acc
    return [tuple(row) for row in mu]


def mu_bruteforce(weights, n, k):
    """Sum of weighted Motzkin paths 0 -> k of length n, by explicit enumeration.

    Steps from level m: NE weight 1, E weight b_m, SE weight lambda_m.
    """
    if n > PATH_GUARD:
        raise RangeGuardError(f"path enumeration capped at length {PATH_GUARD}")
    total = Fraction(0)

    def walk(steps_left, level, weight):
        nonlocal total
        if steps_left == 0:
            if level == k:
                total += weight
            return
        if level + steps_left < k or level - steps_left > k:
            return
        walk(steps_left - 1, level + 1, weight)
        walk(steps_left - 1, level, weight * weights.b_at(level))
        if level > 0:
            walk(steps_left - 1, level - 1, weight * weights.lam_at(level))

    walk(n, 0, Fraction(1))
    return total


def inverse_pair_check(weights, n):
    """Does mu * (coefficient rows of P) equal the identity, exactly?"""
    rows = unitary_family(weights, n)
    mu = mu_matrix(weights, n)
    for r in range(n + 1):
        for i in range(n + 1):
            entry = sum(mu[r][k] * rows[k][i] for k in range(n + 1))
            if entry != (1 if r == i else 0):
                return False
    return True


def mu_ratio_diagnostics(weights, n):
    """Annotation table of ratios mu_{r,s} / mu_{r,s-1} (second-index change)."""
    mu = mu_matrix(weights, n)
    out = {}
    for r in range(1, n + 1):
        for s in range(1, r + 1):
            if mu[r][s - 1] != 0:
                out[(r, s)] = mu[r][s] / mu[r][s - 1]
    return out


def mu_symbolic(n):
    """The mu table over indeterminate weights, as expanded sympy expressions."""
    import sympy

    b = sympy.symbols(f"b0:{n}", positive=True)
    lam = sympy.symbols(f"l1:{n}", positive=True)
    mu = [[sympy.Integer(0)] * (n + 1) for _ in range(n + 1)]
    mu[0][0] = sympy.Integer(1)
    for r in range(1, n + 1):
        for k in range(r + 1):
            acc = sympy.Integer(0)
            if k >= 1:
                acc += mu[r - 1][k - 1]
            if k <= r - 1:
                acc += b[k] * mu[r - 1][k]
            if k + 1 <= r - 1:
                acc += lam[k] * mu[r - 1][k + 1]
            mu[r][k] = sympy.expand(acc)
    return mu, b, lam


# ---------------------------------------------------------------------------
# monomer/dimer covers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CoverSpec:
    """Parameters of a signed/weighted cover count on an integer interval."""

    length: int
    missing: int
    forbid_first_dimer: bool = False
    drop_first_two: bool = False
    monomer_colors: int = 1


def enumerate_covers(length, missing, allow_monomers=True, forbid_first_dimer=False):
    """Yield disjoint monomer/dimer covers of positions 0..length-1 with
    exactly `missing` uncovered positions, as tuples of ('m'|'d', start)."""
    if length > COVER_GUARD:
        raise RangeGuardError(f"cover enumeration capped at length {COVER_GUARD}")

    def go(pos, left, acc):
        if length - pos < left:
            return
        if pos == length:
            if left == 0:
                yield tuple(acc)
            return
        if left > 0:
            yield from go(pos + 1, left - 1, acc)
        if allow_monomers:
            acc.append(("m", pos))
            yield from go(pos + 1, left, acc)
            acc.pop()
        if pos + 1 < length and not (forbid_first_dimer and pos == 0):
            acc.append(("d", pos))
            yield from go(pos + 2, left, acc)
            acc.pop()

    yield from go(0, missing, [])


def cover_sum(spec, weights):
    """Weighted cover sum with scheme weights: monomer at position p (element
    p+1 of [m]) weighs -b_p, dimer at p weighs -lambda_{p+1}; colored
    monomers multiply by the color count."""
    start = 2 if spec.drop_first_two else 0
    length = spec.length - start
    if length < 0:
        return Fraction(0)
    total = Fraction(0)
    for cover in enumerate_covers(
        length, spec.missing, forbid_first_dimer=spec.forbid_first_dimer and start == 0
    ):
        w = Fraction(1)
        for kind, pos in cover:
            p = pos + start
            if kind == "m":
                w *= -weights.b_at(p) * spec.monomer_colors
            else:
                w *= -weights.lam_at(p + 1)
        total += w
    return total


def coefficient_via_covers(weights, m, r):
    if not 0 <= r <= m:
        return Fraction(0)
    return cover_sum(CoverSpec(length=m, missing=r), weights)


def signed_colored_cover_count(length, missing, colors=2, forbid_first_dimer=False,
                               drop_first_two=False):
    """Sum over covers of (-1)^pieces * colors^monomers (dimers uncolored)."""
    start = 2 if drop_first_two else 0
    n = length - start
    if n < 0:
        return 0
    total = 0
    for cover in enumerate_covers(
        n, missing, forbid_first_dimer=forbid_first_dimer and start == 0
    ):
        monomers = sum(1 for kind, _ in cover if kind == "m")
        total += (-1) ** len(cover) * colors**monomers
    return total


def dimer_cover_count(length, missing, forbid_first_dimer=False, drop_first_two=False):
    # dimer-only covers, no monomers
    start = 2 if drop_first_two else 0
    n = length - start
    if n < 0:
        return 0
    return sum(
        1
        for _ in enumerate_covers(
            n, missing, allow_monomers=False,
            forbid_first_dimer=forbid_first_dimer and start == 0,
        )
    )


def dimer_identity_check(m, ell):
    """2^m [x^ell] T^_m  ==  2^ell * (-1)^((m-ell)/2) (A_{m,ell} + 2 B_{m,ell}).

    A counts dimer covers of [0, m-1] with ell missing avoiding {0,1};
    B counts dimer covers of [0, m-1] minus {0,1} with ell missing.
    Parity-mismatched (m, ell) make both sides zero (vacuously true).
    """
    if m < 2:
        raise RangeGuardError("dimer identity needs m >= 2")
    cheb_unitary = polys.scale(polys.chebyshev_t(m), Fraction(1, 2 ** (m - 1)))
    lhs = 2**m * polys.coeff(cheb_unitary, ell)
    if (m - ell) % 2 == 1:
        return {"m": m, "ell": ell, "lhs": lhs, "rhs": Fraction(0),
                "a": 0, "b": 0, "ok": lhs == 0, "note": "parity mismatch, vacuous"}
    a_count = dimer_cover_count(m, ell, forbid_first_dimer=True)
    b_count = dimer_cover_count(m, ell, drop_first_two=True)
    d_val = (-1) ** ((m - ell) // 2) * (a_count + 2 * b_count)
    rhs = Fraction(2**ell * d_val)
    return {"m": m, "ell": ell, "lhs": lhs, "rhs": rhs, "a": a_count, "b": b_count,
            "ok": lhs == rhs, "note": None}


def gamma_via_covers(h, d):
    """Gamma vector by signed 2-colored monomer/dimer cover counting (even d).

    gamma_ell = A_ell - 2 B_ell, where interval lengths j carry
    multiplicity h_{d/2-j}; A sums signed colored covers of [0, j-1]
    avoiding the leading dimer with d/2 - ell missing; B the same on
    [2, j-1].
    """
    h = tuple(h)
    if d % 2 != 0:
        raise RangeGuardError("cover-counting gamma needs even d")
    if len(h) != d + 1:
        raise ShapeError("h must have length d+1")
    half = d // 2
    gamma = []
    for ell in range(half + 1):
        missing = half - ell
        a_val = sum(
            h[half - j]
            * signed_colored_cover_count(j, missing, forbid_first_dimer=True)
            for j in range(half + 1)
        )
        b_val = sum(
            h[half - j]
            * signed_colored_cover_count(j, missing, drop_first_two=True)
            for j in range(half + 1)
        )
        gamma.append(a_val - 2 * b_val)
    return tuple(gamma)


def tcheb_fpoly_identity_check(K, edge_order=None):
    """Chebyshev image of the shifted f-polynomial vs the f-polynomial of the
    edgewise-subdivided complex: T(F_K) == F_{T(K)}, exactly.

    F_S(x) = f_S((x - 1)/2) with f_S(t) = sum_i f_{i-1} t^i, f_{-1} = 1.
    """
    def shifted_f_poly(S):
        f = S.f_vector()
        coeffs = polys.poly((1,) + f)
        return polys.compose_linear(coeffs, Fraction(1, 2), Fraction(-1, 2))

    lhs = polys.apply_chebyshev_map(shifted_f_poly(K))
    rhs = shifted_f_poly(tchebyshev_subdivision(K, edge_order))
    return {"lhs": lhs, "rhs": rhs, "ok": lhs == rhs}


# ---------------------------------------------------------------------------
# generalized inverted gamma vectors
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneralizedGamma:
    z: tuple
    weights: WeightScheme

    def __post_init__(self):
        object.__setattr__(self, "z", tuple(Fraction(x) for x in self.z))

    @property
    def order(self):
        return len(self.z) - 1


def gamma_to_z(gamma):
    """Pack a gamma vector into the inverse-map input: z_i = 2^i gamma_{N-i}."""
    n = len(gamma) - 1
    return tuple(Fraction(2**i * gamma[n - i]) for i in range(n + 1))


def q_values(z, weights):
    """q_ell = sum_{m >= ell} z_m mu_{m, ell}."""
    n = len(z) - 1
    mu = mu_matrix(weights, n)
    return tuple(
        sum(Fraction(z[m]) * mu[m][ell] for m in range(ell, n + 1))
        for ell in range(n + 1)
    )


def formal_h(z, weights):
    """Formal h and g sequences of a generalized inverted gamma vector.

    h_k = 2^-(N-k) q_{N-k};  g_k = 2^-(N-k+1) (2 q_{N-k} - q_{N-k+1}).
    """
    z = tuple(Fraction(x) for x in z)
    n = len(z) - 1
    q = q_values(z, weights)
    h = tuple(q[n - k] / 2 ** (n - k) for k in range(n + 1))
    g = tuple(
        (2 * q[n - k] - (q[n - k + 1] if n - k + 1 <= n else 0)) / 2 ** (n - k + 1)
        for k in range(n + 1)
    )
    return {"q": q, "h": h, "g": g}


def formal_unimodality_check(z, weights):
    """Monotonicity of the formal h-vector, per index, plus the scheme-wide
    printed sufficient condition (reported verbatim; see ledger)."""
    z = tuple(Fraction(x) for x in z)
    n = len(z) - 1
    mu = mu_matrix(weights, n)
    rows = []
    for ell in range(1, n + 1):
        rhs = -Fraction(1, 2) * sum(
            (2 * mu[m][ell - 1] - mu[m][ell]) * z[m] for m in range(ell, n + 1)
        )
        rows.append({"ell": ell, "ok": z[ell - 1] >= rhs, "threshold": rhs})
    printed_condition = all(
        2 * mu[r - 1][s] <= mu[r][s] for r in range(1, n + 1) for s in range(r)
    )
    return {
        "rows": rows,
        "monotone": all(r["ok"] for r in rows),
        "printed_sufficient_condition": printed_condition,
    }


@dataclass(frozen=True)
class FormalExtensionBound:
    index: int              # the z entry being bounded (k - 1)
    mode: str
    upper: Fraction | None
    lower: Fraction         # smallest nonnegative choice keeping formal g >= 0
    slack: Fraction | None
    unbounded: bool = False

    @property
    def feasible(self):
        return self.unbounded or (self.slack is not None and self.slack >= 0)


def formal_extension_bound(z_suffix, n, weights, mode="sphere"):
    """Bound on the next-lower z entry, extending downward from z_N = 2^N.

    Mirrors the gamma extension bounds with mu-matrix coefficients; the
    sphere mode uses the M-condition on the formal g-vector, the cm mode
    the one on the formal h-vector.  The pseudopower argument must come
    out a nonnegative integer.
    """
    z_suffix = tuple(Fraction(x) for x in z_suffix)
    if mode not in ("sphere", "cm"):
        raise ShapeError(f"unknown mode {mode!r}")
    if z_suffix[-1] != 2**n:
        raise NormalizationError(f"z_N must equal 2^N = {2**n}")
    if any(x < 0 for x in z_suffix):
        raise NormalizationError("z entries must be nonnegative")
    k = n - len(z_suffix) + 1
    if k < 1:
        raise RangeGuardError("the z vector is already complete")
    mu = mu_matrix(weights, n)

    def q_at(ell):
        return sum(z_suffix[m - k] * mu[m][ell] for m in range(max(ell, k), n + 1))

    qk, qk1 = q_at(k), q_at(k + 1) if k + 1 <= n else Fraction(0)
    lower = max(Fraction(0), (qk - 2 * sum(
        z_suffix[j - k] * mu[j][k - 1] for j in range(k, n + 1)
    )) / 2)
    if n - k < 1:
        return FormalExtensionBound(k - 1, mode, None, lower, None, unbounded=True)
    lin = sum((2 * mu[j][k - 1] - mu[j][k]) * z_suffix[j - k] for j in range(k, n + 1))
    if mode == "sphere":
        gval = (2 * qk - qk1) / 2 ** (k + 1)
        if gval < 0 or gval.denominator != 1:
            raise RangeGuardError(
                f"formal g entry {gval} is not a nonnegative integer"
            )
        slack = (Fraction(2**k * pseudopower(int(gval), n - k)) - lin) / 2
    else:
        hval = qk / 2**k
        if hval < 0 or hval.denominator != 1:
            raise RangeGuardError(
                f"formal h entry {hval} is not a nonnegative integer"
            )
        lin_h = sum(mu[j][k - 1] * z_suffix[j - k] for j in range(k, n + 1))
        slack = Fraction(2 ** (k - 1) * pseudopower(int(hval), n - k)) - lin_h
    upper = slack if slack >= 0 else None
    return FormalExtensionBound(k - 1, mode, upper, lower, slack)
