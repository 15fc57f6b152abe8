"""Constructive realizability of nonnegative gamma vectors.

Given a nonnegative gamma prefix, each mode bounds the next entry:

  sphere   next g-entry obeys the sphere M-condition g_{i+1} <= g_i^<i>,
           written in gamma coordinates through the B matrix
  cm       same with the h-side A matrix (Cohen-Macaulay realizability)
  fvector  the gamma vector itself must be an f-vector: gamma_{i+1} <= gamma_i^<i>

The index-1 step carries no upper bound in any mode (pseudopowers start
at k = 1), so extension strategies fall back to a deterministic cap of d
there; any nonnegative choice is compatible.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import NormalizationError, RangeGuardError, ShapeError
from .macaulay import check_cm_h, check_f_vector, check_sphere_g, pseudopower
from .vectors import gamma_to_h, mirror_h, transform_matrix

MODES = ("sphere", "cm", "fvector")


@dataclass(frozen=True)
class ExtensionBound:
    index: int            # the entry being bounded (i + 1)
    mode: str
    upper: int | None     # None when infeasible or unbounded
    slack: int | None     # upper-bound side minus linear side; negative if infeasible
    unbounded: bool = False

    @property
    def feasible(self):
        return self.unbounded or (self.slack is not None and self.slack >= 0)

    def to_json(self):
        return {
            "index": self.index,
            "mode": self.mode,
            "upper": None if self.upper is None else str(self.upper),
            "slack": None if self.slack is None else str(self.slack),
            "unbounded": self.unbounded,
        }


def _validate_prefix(prefix, d, mode):
    prefix = tuple(int(g) for g in prefix)
    if mode not in MODES:
        raise ShapeError(f"unknown mode {mode!r}")
    if not prefix or prefix[0] != 1:
        raise NormalizationError("gamma_0 must be 1")
    if any(g < 0 for g in prefix):
        raise NormalizationError("gamma entries must be nonnegative")
    if len(prefix) > d // 2 + 1:
        raise RangeGuardError(f"prefix longer than floor(d/2)+1 = {d // 2 + 1}")
    return prefix


def gamma_extension_bound(prefix, d, mode):
    """Upper bound for the next gamma entry after the given prefix.

    Returns an ExtensionBound; `unbounded` marks the vacuous index-1 step,
    and a negative slack reports infeasibility exactly.
    """
    prefix = _validate_prefix(prefix, d, mode)
    i = len(prefix) - 1
    target = i + 1
    if target > d // 2:
        raise RangeGuardError(f"no entry of index {target} for d = {d}")
    if i == 0:
        return ExtensionBound(target, mode, None, None, unbounded=True)
    if mode == "fvector":
        up = pseudopower(prefix[i], i)
        return ExtensionBound(target, mode, up, up)
    mat = transform_matrix("B" if mode == "sphere" else "A", d)
    current = sum(mat[i][j] * prefix[j] for j in range(i + 1))
    linear_next = sum(mat[i + 1][j] * prefix[j] for j in range(i + 1))
    slack = pseudopower(current, i) - linear_next
    return ExtensionBound(target, mode, slack if slack >= 0 else None, slack)


def _choose(bound, strategy, d, rng):
    if bound.unbounded:
        if strategy == "max":
            return d
        if isinstance(strategy, tuple) and strategy[0] == "fraction":
            return int(Fraction(strategy[1]) * d)
        if strategy == "random":
            return rng.randint(0, d)
        raise ShapeError(f"strategy {strategy!r} cannot pick an unbounded entry")
    if strategy == "max":
        return bound.upper
    if isinstance(strategy, tuple) and strategy[0] == "fraction":
        rho = Fraction(strategy[1])
        if not 0 < rho <= 1:
            raise ShapeError("fraction strategy needs rho in (0, 1]")
        return int(rho * bound.upper)
    if strategy == "random":
        return rng.randint(0, bound.upper)
    raise ShapeError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True)
class ExtensionResult:
    gamma: tuple
    steps: tuple          # (ExtensionBound, chosen) pairs
    feasible: bool
    failed_index: int | None
    mode: str
    d: int

    def check(self):
        """Convert the produced gamma and run the mode's realizability check."""
        return convert_and_check(self.gamma, self.d, self.mode)


def convert_and_check(gamma, d, mode):
    """Map a full gamma vector to the object the mode constrains, and check it."""
    if mode == "sphere":
        return check_sphere_g(mirror_h(gamma_to_h(gamma, d), d))
    if mode == "cm":
        return check_cm_h(gamma_to_h(gamma, d))
    return check_f_vector(gamma[1:])


def extend_gamma(prefix, d, mode, strategy="max", seed=None):
    """Extend a gamma prefix to full length floor(d/2)+1, or stop when infeasible.

    strategy: "max", ("fraction", rho), "random" (seeded), or ("given", seq)
    where seq supplies the remaining entries in order.
    """
    prefix = _validate_prefix(prefix, d, mode)
    rng = random.Random(seed)
    given = None
    if isinstance(strategy, tuple) and strategy[0] == "given":
        given = list(strategy[1])
    gamma = list(prefix)
    steps = []
    while len(gamma) < d // 2 + 1:
        bound = gamma_extension_bound(gamma, d, mode)
        if not bound.feasible:
            return ExtensionResult(
                tuple(gamma), tuple(steps), False, bound.index, mode, d
            )
        if given is not None:
            if not given:
                raise ShapeError("given sequence ran out of entries")
            chosen = int(given.pop(0))
            if chosen < 0 or (not bound.unbounded and chosen > bound.upper):
                steps.append((bound, chosen))
                return ExtensionResult(
                    tuple(gamma), tuple(steps), False, bound.index, mode, d
                )
        else:
            chosen = _choose(bound, strategy, d, rng)
        steps.append((bound, chosen))
        gamma.append(chosen)
    return ExtensionResult(tuple(gamma), tuple(steps), True, None, mode, d)


def closed_gamma_bounds(prefix, d, q):
    """The three closed-form bounds tied to index q, from a gamma prefix.

    Returns exact integers/rationals:
      linear_bound      q g_q <= g_1 h_{q-1}  (LHS, RHS, ok)
      recursive_bound   polynomial upper bound on gamma_q from lower indices
      closed_bound      g_q <= g_1 C(g_1 + q - 1, q - 1) / q  (LHS, RHS, ok)
      gamma_closed      necessary condition for gamma_q >= 0
    """
    prefix = tuple(int(g) for g in prefix)
    if len(prefix) < q + 1:
        raise RangeGuardError("prefix must reach index q")
    if not 1 <= q <= d // 2:
        raise RangeGuardError("need 1 <= q <= floor(d/2)")
    b = transform_matrix("B", d)
    a = transform_matrix("A", d)
    m = q + 1
    g = [sum(b[i][j] * prefix[j] for j in range(min(i, len(prefix) - 1) + 1)) for i in range(m)]
    h = [sum(a[i][j] * prefix[j] for j in range(min(i, len(prefix) - 1) + 1)) for i in range(m)]
    gamma1 = prefix[1] if len(prefix) > 1 else 0

    linear_lhs, linear_rhs = q * g[q], g[1] * h[q - 1]

    rec = Fraction(0)
    for j in range(q):
        coeff = Fraction(gamma1 + d - 1, q) * sum(b[i][j] for i in range(j, q)) - b[q][j]
        rec += coeff * prefix[j]

    closed_lhs = g[q]
    closed_rhs = Fraction(g[1] * comb(g[1] + q - 1, q - 1), q)

    gc_lhs = Fraction((gamma1 + d - 1) * comb(gamma1 + d - 1 + q - 1, q - 1), q)
    gc_rhs = sum(b[q][j] * prefix[j] for j in range(q))

    return {
        "q": q,
        "linear_bound": {"lhs": linear_lhs, "rhs": linear_rhs, "ok": linear_lhs <= linear_rhs},
        "recursive_bound": rec,
        "recursive_ok": prefix[q] <= rec if len(prefix) > q else None,
        "closed_bound": {"lhs": closed_lhs, "rhs": closed_rhs, "ok": closed_lhs <= closed_rhs},
        "gamma_nonneg_necessary": {"lhs": gc_lhs, "rhs": gc_rhs, "ok": gc_lhs >= gc_rhs},
    }


def order_diagnostics(vec, d, kind="g", linear_factor=3):
    """Growth-order report for a g- (or h-) sequence under the gamma >= 0 premise.

    Per index: the entry against its forced lower bound (the gamma-free
    column of B or A), the power bound g_i <= g_1^i, and globally a
    linear-vs-superlinear surrogate split of g_1 at threshold
    linear_factor * d plus the g_1 < d + 10 nontriviality flag.
    """
    vec = tuple(int(v) for v in vec)
    if kind not in ("g", "h"):
        raise ShapeError("kind must be 'g' or 'h'")
    mat = transform_matrix("B" if kind == "g" else "A", d)
    rows = []
    impossible = False
    for i, value in enumerate(vec):
        if i > d // 2:
            break
        lb = mat[i][0]
        lb_ok = value >= lb
        impossible = impossible or not lb_ok
        power_ok = None
        if kind == "g" and i >= 1:
            power_ok = value <= vec[1] ** i
        rows.append(
            {"i": i, "value": value, "lower_bound": lb, "lower_ok": lb_ok, "power_ok": power_ok}
        )
    g1 = vec[1] - (1 if kind == "h" else 0) if len(vec) > 1 else 0
    return {
        "kind": kind,
        "d": d,
        "rows": rows,
        "g1": g1,
        "classification": "linear" if g1 <= linear_factor * d else "superlinear",
        "interlacing_active": g1 < d + 10,
        "gamma_nonneg_impossible": impossible,
    }
