"""Local-global identities over vertices and edges, and the inequality
suite for spheres satisfying the link condition.

Identity-grade statements use ext-mode g-vectors (all h-differences),
where they hold exactly; inequality-grade statements use trunc-mode g
(the realizability form).  Fractional powers are certified with exact
rational enclosures; verdicts are three-valued and never decided by bare
floating point.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import intervals
from .complexes import check_link_condition, contract_edge, link
from .errors import LinkConditionError, RangeGuardError
from .vectors import binom, f1_from_g, f_to_h, h_to_g

# ---------------------------------------------------------------------------
# basic vectors of a complex
# ---------------------------------------------------------------------------


def h_of(K):
    f = K.f_vector()
    return f_to_h(f, len(f))


def g_ext_of(K):
    return h_to_g(h_of(K), "ext")


def g_trunc_of(K):
    return h_to_g(h_of(K), "trunc")


def _g_at(g, k):
    return g[k] if 0 <= k < len(g) else 0


@lru_cache(maxsize=128)
def _link_condition(K):
    return check_link_condition(K)


def _require_link_condition(K):
    report = _link_condition(K)
    if not report.ok:
        raise LinkConditionError(report.violations()[0])
    return report


# ---------------------------------------------------------------------------
# local-global identities
# ---------------------------------------------------------------------------


def vertex_local_global_check(K, i):
    """sum_v h_i(lk v)  vs  (i+1) h_{i+1}(K) + (d-i) h_i(K), exactly."""
    if not K.is_pure():
        raise RangeGuardError("vertex local-global sum needs a pure complex")
    d = K.dim + 1
    h = h_of(K)
    lhs = 0
    for v in K.vertices:
        hl = h_of(link(K, (v,)))
        lhs += hl[i] if 0 <= i < len(hl) else 0
    h_i = h[i] if 0 <= i < len(h) else 0
    h_i1 = h[i + 1] if 0 <= i + 1 < len(h) else 0
    rhs = (i + 1) * h_i1 + (d - i) * h_i
    return lhs, rhs, lhs == rhs


def edge_g_sum(K, k):
    """C_k = sum over edges of g_k(lk e), ext-mode link g, exactly."""
    total = 0
    for e in K.edges():
        gl = h_to_g(h_of(link(K, e)), "ext")
        total += _g_at(gl, k)
    return total


def c_k_closed_form(g_ext, d, k):
    """C_k written in global ext-mode g entries: half the three-term combination."""
    val = (
        (k + 1) * (k + 2) * _g_at(g_ext, k + 2)
        + 2 * (k + 1) * (d - k) * _g_at(g_ext, k + 1)
        + (d - k) * (d - k + 1) * _g_at(g_ext, k)
    )
    return Fraction(val, 2)


def edge_local_global_check(K, k):
    """2 sum_e g_k(lk e)  vs  the global ext-mode g combination, exactly."""
    if not K.is_pure():
        raise RangeGuardError("edge local-global sum needs a pure complex")
    _require_link_condition(K)
    d = K.dim + 1
    lhs = 2 * edge_g_sum(K, k)
    rhs = 2 * c_k_closed_form(g_ext_of(K), d, k)
    assert rhs.denominator == 1
    return lhs, int(rhs), lhs == int(rhs)


def contraction_h_formula(K, e):
    """h of the contraction predicted by h_K(x) - x h_{lk e}(x)."""
    d = K.dim + 1
    h = h_of(K)
    hl = h_of(link(K, e))
    shifted = (0,) + hl
    return tuple(
        (h[i] if i < len(h) else 0) - (shifted[i] if i < len(shifted) else 0)
        for i in range(d + 1)
    )


def contraction_h_check(K, e):
    """Direct recount of h after contracting e vs the h-vector law."""
    e = tuple(sorted(e))
    report = _link_condition(K)
    if not report.per_edge.get(e, True):
        raise LinkConditionError(e)
    d = K.dim + 1
    contracted = contract_edge(K, e).complex
    recount = f_to_h(contracted.f_vector() + (0,) * (d - len(contracted.f_vector())), d)
    formula = contraction_h_formula(K, e)
    return recount, formula, recount == formula


# ---------------------------------------------------------------------------
# inequality suite
# ---------------------------------------------------------------------------


def contractions_g_nonneg(K):
    """Check g(contraction at e) >= 0 for every edge, via the h-vector law.

    Under the link condition the law is exact (cross-checked elsewhere
    against direct recounts), so this is both fast and rigorous.
    """
    d = K.dim + 1
    failures = []
    for e in K.edges():
        h_tilde = contraction_h_formula(K, e)
        g_tilde = h_to_g(h_tilde, "trunc")
        if any(g < 0 for g in g_tilde):
            failures.append(e)
    return not failures, tuple(failures)


@dataclass(frozen=True)
class InterlacingRow:
    k: int
    alpha: Fraction
    beta: Fraction
    lower_ok: bool
    upper_ok: bool
    degenerate: bool = False


@dataclass(frozen=True)
class InterlacingReport:
    d: int
    f1: int
    rows: tuple
    premise_verified: bool | None   # None when verification was skipped
    premise_failures: tuple

    @property
    def ok(self):
        return all(r.lower_ok and r.upper_ok for r in self.rows if not r.degenerate)


def interlacing_bounds(K, verify_premise=True):
    """Sandwich alpha_k g_k <= g_{k+1} <= beta_k g_k from per-edge contraction
    nonnegativity, trunc-mode g, exact rationals."""
    _require_link_condition(K)
    d = K.dim + 1
    g = g_trunc_of(K)
    f1 = len(K.edges())
    premise_ok, failures = contractions_g_nonneg(K) if verify_premise else (None, ())
    rows = []
    for k in range(1, d // 2):
        denom_a = 2 * (binom(d + 1, 2) - (k + 1) * (d - k) + d * g[1] + _g_at(g, 2))
        denom_b = k * (k + 1)
        num_b = 2 * (binom(d + 1, 2) - k * (d - k + 1) + d * g[1] + _g_at(g, 2))
        if denom_a <= 0:
            rows.append(InterlacingRow(k, Fraction(0), Fraction(0), False, False, True))
            continue
        alpha = Fraction((d - k) * (d - k + 1), denom_a)
        beta = Fraction(num_b, denom_b)
        rows.append(
            InterlacingRow(
                k,
                alpha,
                beta,
                lower_ok=alpha * g[k] <= g[k + 1],
                upper_ok=g[k + 1] <= beta * g[k],
            )
        )
    return InterlacingReport(d, f1, tuple(rows), premise_ok, failures)


@dataclass(frozen=True)
class GlobalSandwichResult:
    i: int
    c_i: int
    c_prev: int
    lower_ok: bool | None
    upper_ok: bool | None
    cushion_nonneg: bool
    cushion_ok: bool | None
    base_nonneg: bool

    @property
    def ok(self):
        return (
            self.lower_ok is True
            and self.upper_ok is True
            and self.cushion_nonneg
            and self.cushion_ok is True
            and self.base_nonneg
        )


def global_sandwich_check(K, i):
    """The two bracketing inequalities around the edge-summed g-data, plus the
    cushion inequality, certified with rational enclosures.

    Valid for 2 <= i <= floor((d-2)/2): there the edge links are
    (d-3)-spheres whose g_i, g_{i-1} are nonnegative and M-bounded.
    """
    _require_link_condition(K)
    d = K.dim + 1
    if not 2 <= i <= (d - 2) // 2:
        raise RangeGuardError(f"index {i} outside 2..{(d - 2) // 2} for d = {d}")
    g = g_trunc_of(K)
    f1 = len(K.edges())
    c_i = edge_g_sum(K, i)
    c_prev = edge_g_sum(K, i - 1)
    # identity cross-checks against the closed forms
    assert Fraction(c_i) == c_k_closed_form(g_ext_of(K), d, i)
    assert Fraction(c_prev) == c_k_closed_form(g_ext_of(K), d, i - 1)

    base = f1 * g[i] - c_prev          # sum over edges of g_i(K) - g_{i-1}(lk e)
    base_nonneg = base >= 0 and c_prev >= 0
    mid = 2 * c_i

    lower_ok = upper_ok = cushion_ok = None
    if base_nonneg:
        lower_ok = intervals.decide(
            lambda prec: (
                intervals.sub(
                    intervals.exact(2 * f1 * g[i + 1]),
                    intervals.mul(
                        intervals.exact(2),
                        intervals.rational_power(Fraction(base), i + 1, i, prec),
                    ),
                ),
                intervals.exact(mid),
            )
        )
        cushion_lhs = 2 * (f1 * g[i + 1] - c_i)
        cushion_ok = intervals.decide(
            lambda prec: (
                intervals.exact(cushion_lhs),
                intervals.mul(
                    intervals.exact(2),
                    intervals.rational_power(Fraction(base), i + 1, i, prec),
                ),
            )
        )
    if c_prev >= 0:
        upper_ok = intervals.decide(
            lambda prec: (
                intervals.exact(mid),
                intervals.mul(
                    intervals.exact(2),
                    intervals.rational_power(Fraction(c_prev), i, i - 1, prec),
                ),
            )
        )
    cushion_nonneg = f1 * g[i + 1] - c_i >= 0
    return GlobalSandwichResult(
        i, c_i, c_prev, lower_ok, upper_ok, cushion_nonneg, cushion_ok, base_nonneg
    )


# ---------------------------------------------------------------------------
# triviality diagnostics
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TrivialityRow:
    k: int
    c_prev: int                   # C_{k-1}, direct edge sum
    c_k: int                      # C_k, direct edge sum
    r_prev: Fraction              # (1/f1) C_{k-1} / g_k
    r_k: Fraction                 # (1/f1) C_k / g_{k+1}
    r_in_range: bool              # 0 <= r <= 1 for both
    omega_float: float
    bound_applicable: bool | None  # Q = omega^(k/(k+1)) (1 - r_prev) <= 1
    bound_ok: bool | None          # r_k >= (1-Q)^((k+1)/k), when applicable
    simplified_premise: bool | None
    simplified_ok: bool | None     # r_k >= r_prev^((k+1)/k), when premise holds
    trivial_by_m_vector: bool      # surrogate: d^2 g_{k+1}/g_k <= f1
    nontrivial_candidate: bool
    skipped: str | None = None


@dataclass(frozen=True)
class LinkReport:
    d: int
    f1: int
    f1_formula: int
    g: tuple
    rows: tuple
    g1_linear: bool
    interlacing_active: bool
    identities_ok: bool
    premise_verified: bool
    notes: tuple = field(default_factory=tuple)

    @property
    def ok(self):
        if not (self.identities_ok and self.f1 == self.f1_formula):
            return False
        for r in self.rows:
            if r.skipped:
                continue
            if self.premise_verified and not r.r_in_range:
                return False
            if r.bound_applicable and r.bound_ok is False:
                return False
        return True


def _omega_interval(f1, gk, gk1, k, prec):
    """omega_k = f1^(1/k) gk^((k+1)/k) / g_{k+1}."""
    num = intervals.mul(
        intervals.rational_power(Fraction(f1), 1, k, prec),
        intervals.rational_power(Fraction(gk), k + 1, k, prec),
    )
    return intervals.div(num, intervals.exact(gk1))


def triviality_diagnostics(K, nontrivial_threshold=Fraction(1, 2), linear_factor=3):
    """Per-index normalized edge-average ratios, the ratio lower bound, and
    finite-d classification tags."""
    _require_link_condition(K)
    d = K.dim + 1
    g = g_trunc_of(K)
    f1 = len(K.edges())
    f1_formula = f1_from_g(g_ext_of(K), d)
    premise_ok, _failures = contractions_g_nonneg(K)
    c_cache = {k: edge_g_sum(K, k) for k in range(0, max((d - 2) // 2 + 1, 1))}
    identities_ok = all(
        Fraction(c) == c_k_closed_form(g_ext_of(K), d, k) for k, c in c_cache.items()
    )
    rows = []
    for k in range(1, (d - 2) // 2 + 1):
        if k + 1 >= len(g) or g[k] == 0 or g[k + 1] == 0:
            rows.append(
                TrivialityRow(
                    k, 0, 0, Fraction(0), Fraction(0), False, 0.0, None, None,
                    None, None, False, False, skipped="zero g entry",
                )
            )
            continue
        r_prev = Fraction(c_cache[k - 1], f1 * g[k])
        r_k = Fraction(c_cache[k], f1 * g[k + 1])
        in_range = 0 <= r_prev <= 1 and 0 <= r_k <= 1

        def q_interval(prec, _k=k, _rp=r_prev):
            om = _omega_interval(f1, g[_k], g[_k + 1], _k, prec)
            om_pow = intervals.rational_power(om, _k, _k + 1, prec)
            return intervals.mul(om_pow, intervals.exact(1 - _rp)), intervals.exact(1)

        applicable = intervals.decide(q_interval)
        bound_ok = None
        if applicable:
            def bound_pair(prec, _k=k, _rp=r_prev, _rk=r_k):
                om = _omega_interval(f1, g[_k], g[_k + 1], _k, prec)
                om_pow = intervals.rational_power(om, _k, _k + 1, prec)
                q_iv = intervals.mul(om_pow, intervals.exact(1 - _rp))
                base = intervals.sub(intervals.exact(1), q_iv)
                lo = max(base.lo, Fraction(0))
                base = intervals.Interval(lo, max(base.hi, lo))
                return intervals.rational_power(base, _k + 1, _k, prec), intervals.exact(_rk)

            bound_ok = intervals.decide(bound_pair)

        simp_premise = intervals.decide(
            lambda prec, _k=k, _rp=r_prev, _rk=r_k: (
                intervals.exact(1 - _rk),
                intervals.rational_power(Fraction(1 - _rp), _k + 1, _k, prec),
            )
        )
        simp_ok = None
        if simp_premise:
            simp_ok = intervals.decide(
                lambda prec, _k=k, _rp=r_prev, _rk=r_k: (
                    intervals.rational_power(Fraction(_rp), _k + 1, _k, prec),
                    intervals.exact(_rk),
                )
            )
        trivial = d * d * g[k + 1] <= f1 * g[k]
        rows.append(
            TrivialityRow(
                k=k,
                c_prev=c_cache[k - 1],
                c_k=c_cache[k],
                r_prev=r_prev,
                r_k=r_k,
                r_in_range=in_range,
                omega_float=_omega_interval(f1, g[k], g[k + 1], k, 24).midpoint_float(),
                bound_applicable=applicable,
                bound_ok=bound_ok,
                simplified_premise=simp_premise,
                simplified_ok=simp_ok,
                trivial_by_m_vector=trivial,
                nontrivial_candidate=(r_prev >= nontrivial_threshold) and not trivial,
            )
        )
    g1 = g[1] if len(g) > 1 else 0
    return LinkReport(
        d=d,
        f1=f1,
        f1_formula=f1_formula,
        g=g,
        rows=tuple(rows),
        g1_linear=g1 <= linear_factor * d,
        interlacing_active=g1 < d + 10,
        identities_ok=identities_ok,
        premise_verified=premise_ok,
    )


def g_sequence_surrogates(g, d, k):
    """Finite-d surrogate quantities for a bare g-sequence (no complex needed).

    C_j is taken from its closed form; everything is an exact Fraction.
    Returns f1, r_prev (the mu-hat surrogate), r_k (the sigma-hat
    surrogate), and t_k = d^2 (g_{k+1}/g_k) / f1 (trivial when <= 1).
    """
    g = [Fraction(x) for x in g]
    if k + 2 >= len(g) or k < 1:
        raise RangeGuardError("g-sequence must reach index k+2 with k >= 1")
    f1 = Fraction(binom(d + 1, 2)) + d * g[1] + g[2]

    def c_closed(j):
        return (
            (j + 1) * (j + 2) * g[j + 2]
            + 2 * (j + 1) * (d - j) * g[j + 1]
            + (d - j) * (d - j + 1) * g[j]
        ) / 2

    return {
        "f1": f1,
        "r_prev": c_closed(k - 1) / (f1 * g[k]),
        "r_k": c_closed(k) / (f1 * g[k + 1]),
        "t_k": d * d * g[k + 1] / (f1 * g[k]),
    }
