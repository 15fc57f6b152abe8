"""Exact transforms among f-, h-, g-, extended-g-, and gamma vectors.

Conventions, for a (d-1)-dimensional complex:
  f       length d      (f_0, ..., f_{d-1}); f_{-1} = 1 is implicit
  h       length d+1
  g_trunc length floor(d/2)+1   consecutive h-differences, realizability form
  g_ext   length d+1            all h-differences, identity form
  gamma   length floor(d/2)+1   defined for palindromic h

All arithmetic is exact (Python ints / Fractions).
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import polys
from .errors import DivisibilityError, NotReciprocalError, ShapeError

KINDS = ("f", "h", "g_trunc", "g_ext", "gamma")


def _expected_length(kind, d):
    if kind == "f":
        return d
    if kind in ("h", "g_ext"):
        return d + 1
    return d // 2 + 1  # g_trunc, gamma


@dataclass(frozen=True)
class CountVector:
    kind: str
    d: int
    entries: tuple

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ShapeError(f"unknown vector kind {self.kind!r}")
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))
        want = _expected_length(self.kind, self.d)
        if len(self.entries) != want:
            raise ShapeError(
                f"{self.kind} vector for d={self.d} needs {want} entries, "
                f"got {len(self.entries)}"
            )

    def to_json(self):
        return {
            "kind": self.kind,
            "d": self.d,
            "entries": [str(e) for e in self.entries],
        }

    def dumps(self):
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(obj["kind"], int(obj["d"]), tuple(int(e) for e in obj["entries"]))


def binom(n, k):
    """C(n, k) with the combinatorial zero conventions."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


def f_to_h(f, d):
    """h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}, with f_{-1} = 1."""
    f = tuple(f)
    if len(f) != d:
        raise ShapeError(f"f-vector must have length d={d}, got {len(f)}")
    fm1 = (1,) + f
    return tuple(
        sum((-1) ** (j - i) * binom(d - i, j - i) * fm1[i] for i in range(j + 1))
        for j in range(d + 1)
    )


def h_to_f(h, d):
    h = tuple(h)
    if len(h) != d + 1:
        raise ShapeError(f"h-vector must have length d+1={d + 1}, got {len(h)}")
    return tuple(
        sum(binom(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(1, d + 1)
    )


def h_to_g(h, mode="trunc"):
    """Consecutive differences of h; 'trunc' stops at floor(d/2), 'ext' keeps all."""
    if mode not in ("trunc", "ext"):
        raise ShapeError(f"g-vector mode must be 'trunc' or 'ext', got {mode!r}")
    h = tuple(h)
    d = len(h) - 1
    top = d // 2 if mode == "trunc" else d
    return tuple(h[k] - (h[k - 1] if k > 0 else 0) for k in range(top + 1))


def g_to_h_half(g):
    out, acc = [], 0
    for gk in g:
        acc += gk
        out.append(acc)
    return tuple(out)


def dehn_sommerville_check(h):
    h = tuple(h)
    return h == h[::-1]


def mirror_h(h_half, d):
    """Full palindromic h from its first floor(d/2)+1 entries."""
    h_half = tuple(h_half)
    if len(h_half) != d // 2 + 1:
        raise ShapeError("h-half has the wrong length")
    if d % 2 == 0:
        return h_half + h_half[:-1][::-1]
    return h_half + h_half[::-1]


def transform_matrix(name, d):
    """The lower-triangular gamma-to-h ('A') or gamma-to-g ('B') matrix."""
    m = d // 2 + 1
    if name == "A":
        return tuple(
            tuple(binom(d - 2 * j, i - j) for j in range(m)) for i in range(m)
        )
    if name == "B":
        return tuple(
            tuple(
                binom(d - 2 * j, i - j) - binom(d - 2 * j, i - j - 1)
                for j in range(m)
            )
            for i in range(m)
        )
    raise ShapeError(f"unknown transform matrix {name!r}")


def _apply_lower(mat, vec):
    return tuple(sum(row[j] * vec[j] for j in range(len(vec))) for row in mat)


def gamma_to_h(gamma, d):
    gamma = tuple(gamma)
    if len(gamma) != d // 2 + 1:
        raise ShapeError("gamma has the wrong length")
    return _apply_lower(transform_matrix("A", d), gamma)


def gamma_to_g(gamma, d):
    gamma = tuple(gamma)
    if len(gamma) != d // 2 + 1:
        raise ShapeError("gamma has the wrong length")
    return _apply_lower(transform_matrix("B", d), gamma)


def h_half_to_gamma(h_half, d):
    """Invert the unit lower-triangular gamma-to-h map by forward substitution."""
    h_half = tuple(h_half)
    m = d // 2 + 1
    if len(h_half) != m:
        raise ShapeError("h-half has the wrong length")
    a = transform_matrix("A", d)
    gamma = []
    for i in range(m):
        gamma.append(h_half[i] - sum(a[i][j] * gamma[j] for j in range(i)))
    return tuple(gamma)


def g_trunc_to_gamma(g, d):
    g = tuple(g)
    m = d // 2 + 1
    if len(g) != m:
        raise ShapeError("g_trunc has the wrong length")
    b = transform_matrix("B", d)
    gamma = []
    for i in range(m):
        gamma.append(g[i] - sum(b[i][j] * gamma[j] for j in range(i)))
    return tuple(gamma)


def gamma_via_chebyshev(h, d):
    """Gamma vector through the inverted Chebyshev expansion.

    For even d: gamma(u) = u^(d/2) * g(1/u - 2) with
    g(u) = h_{d/2} + 2 sum_j h_{d/2-j} T_j(u/2).  For odd d the palindromic
    h factors as (1+t) r(t) and the even-degree path applies to r.
    """
    h = tuple(h)
    if len(h) != d + 1:
        raise ShapeError(f"h-vector must have length d+1={d + 1}")
    if not dehn_sommerville_check(h):
        raise NotReciprocalError(f"h-vector {h} is not palindromic")
    if d % 2 == 1:
        try:
            r = polys.divide_by_one_plus_t(polys.poly(h))
        except ArithmeticError as exc:
            raise DivisibilityError(str(exc)) from exc
        r_full = tuple(polys.coeff(r, i) for i in range(d))
        return gamma_via_chebyshev(tuple(int(c) for c in r_full), d - 1)
    half = d // 2
    # g(u) expressed in the monomial basis, exactly
    g_poly = polys.poly([h[half]])
    for j in range(1, half + 1):
        tj_half = polys.compose_linear(polys.chebyshev_t(j), Fraction(1, 2), 0)
        g_poly = polys.add(g_poly, polys.scale(tj_half, 2 * h[half - j]))
    # u^(d/2) g(1/u - 2) = sum_j c_j u^(d/2-j) (1 - 2u)^j
    gamma_poly = ()
    one_minus_2u = polys.poly([1, -2])
    for j in range(len(g_poly)):
        cj = polys.coeff(g_poly, j)
        if cj == 0:
            continue
        term = polys.mul(
            polys.poly([0] * (half - j) + [1]), polys.pow_(one_minus_2u, j)
        )
        gamma_poly = polys.add(gamma_poly, polys.scale(term, cj))
    out = [polys.coeff(gamma_poly, i) for i in range(half + 1)]
    assert all(c.denominator == 1 for c in out)
    assert len(gamma_poly) <= half + 1
    return tuple(int(c) for c in out)


def coefficient_ratio_diagnostics(d):
    """Exhaustive ratios a_{r,s}/a_{r-1,s} and b_{r,s}/b_{r-1,s}, 0 <= s < r <= d//2.

    Returns a dict with the ratio tables and their extrema; the growth
    bounds (a-ratios in [1 + 2/d, d], b-ratios in (1/3, d + 1)) are
    asserted.
    """
    if d < 2:
        raise ShapeError("need d >= 2")
    a = transform_matrix("A", d)
    b = transform_matrix("B", d)
    a_ratios, b_ratios = {}, {}
    for r in range(1, d // 2 + 1):
        for s in range(r):
            a_ratios[(r, s)] = Fraction(a[r][s], a[r - 1][s])
            b_ratios[(r, s)] = Fraction(b[r][s], b[r - 1][s])
    lo_a, hi_a = 1 + Fraction(2, d), Fraction(d)
    for ratio in a_ratios.values():
        assert lo_a <= ratio <= hi_a
    for ratio in b_ratios.values():
        assert Fraction(1, 3) < ratio < d + 1
    return {
        "d": d,
        "a_ratios": a_ratios,
        "b_ratios": b_ratios,
        "a_min": min(a_ratios.values(), default=None),
        "a_max": max(a_ratios.values(), default=None),
        "b_min": min(b_ratios.values(), default=None),
        "b_max": max(b_ratios.values(), default=None),
    }


def gamma_ratio_restrictions(g, d):
    """Per-index consequences of a nonnegative gamma vector on g-ratios.

    For each ell: 3 g_{ell+1} > g_ell must hold (violation certifies that no
    nonnegative gamma can produce this g), and gamma_{ell+1} is bounded below
    by max(0, g_{ell+1} - (d+1) g_ell).
    """
    g = tuple(g)
    rows = []
    for ell in range(len(g) - 1):
        ok = 3 * g[ell + 1] > g[ell]
        rows.append(
            {
                "ell": ell,
                "ratio_ok": ok,
                "gamma_lower_bound": max(0, g[ell + 1] - (d + 1) * g[ell]),
            }
        )
    return {"rows": rows, "all_ok": all(r["ratio_ok"] for r in rows)}


def f1_from_g(g_ext, d):
    """Edge count from the first g entries: C(d+1,2) + d g_1 + g_2."""
    g1 = g_ext[1] if len(g_ext) > 1 else 0
    g2 = g_ext[2] if len(g_ext) > 2 else 0
    return binom(d + 1, 2) + d * g1 + g2
