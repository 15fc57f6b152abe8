import json
import random
from fractions import Fraction
from math import comb

import pytest

from gammavec import complexes as cx
from gammavec import polys
from gammavec import vectors as vec
from gammavec.errors import NotReciprocalError, ShapeError

# ---------------------------------------------------------------------------
# independent oracles
# ---------------------------------------------------------------------------


def h_via_polynomial_identity(f, d):
    """Read h off sum_i h_i x^(d-i) = sum_i f_{i-1} (x-1)^(d-i)."""
    fm1 = (1,) + tuple(f)
    rhs = ()
    for i in range(d + 1):
        rhs = polys.add(rhs, polys.scale(polys.pow_(polys.poly([-1, 1]), d - i), fm1[i]))
    return tuple(int(polys.coeff(rhs, d - i)) for i in range(d + 1))


def h_via_gamma_definition(gamma, d):
    """Full h from h(t) = sum_i gamma_i t^i (1+t)^(d-2i)."""
    acc = ()
    for i, gi in enumerate(gamma):
        term = polys.mul(
            polys.pow_(polys.poly([0, 1]), i), polys.pow_(polys.poly([1, 1]), d - 2 * i)
        )
        acc = polys.add(acc, polys.scale(term, gi))
    return tuple(int(polys.coeff(acc, j)) for j in range(d + 1))


def det(mat):
    """Exact determinant by Laplace expansion (matrices up to 4x4 here)."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in mat[1:]]
        total += (-1) ** j * mat[0][j] * det(minor)
    return total


# ---------------------------------------------------------------------------
# f <-> h
# ---------------------------------------------------------------------------


def test_f_to_h_examples():
    assert vec.f_to_h((6, 12, 8), 3) == h_via_polynomial_identity((6, 12, 8), 3) == (1, 3, 3, 1)
    assert vec.f_to_h((8, 24, 32, 16), 4) == (1, 4, 6, 4, 1)
    for n in range(3, 9):
        assert vec.f_to_h((n, n), 2) == (1, n - 2, 1)
    with pytest.raises(ShapeError):
        vec.f_to_h((1, 2), 3)


def test_f_h_round_trip_random():
    rng = random.Random(11)
    for _ in range(60):
        d = rng.randint(1, 9)
        f = tuple(rng.randint(0, 50) for _ in range(d))
        h = vec.f_to_h(f, d)
        assert h == h_via_polynomial_identity(f, d)
        assert vec.h_to_f(h, d) == f


def test_h_to_g_modes():
    assert vec.h_to_g((1, 4, 6, 4, 1), "trunc") == (1, 3, 2)
    assert vec.h_to_g((1, 4, 6, 4, 1), "ext") == (1, 3, 2, -2, -3)
    assert vec.h_to_g((1, 2, 1), "trunc") == (1, 1)
    assert vec.g_to_h_half(vec.h_to_g((1, 4, 6, 4, 1), "ext")) == (1, 4, 6, 4, 1)


def test_dehn_sommerville():
    assert vec.dehn_sommerville_check((1, 4, 6, 4, 1))
    assert vec.dehn_sommerville_check((1, 3, 4, 3, 1))
    assert not vec.dehn_sommerville_check((1, 2, 3, 1))


# ---------------------------------------------------------------------------
# gamma transforms
# ---------------------------------------------------------------------------


def test_transform_matrix_values():
    assert vec.transform_matrix("A", 4) == ((1, 0, 0), (4, 1, 0), (6, 2, 1))
    b = vec.transform_matrix("B", 4)
    assert b == ((1, 0, 0), (3, 1, 0), (2, 1, 1))
    assert all(b[i][j] >= 0 for i in range(3) for j in range(3))


def test_gamma_to_h_examples():
    assert vec.gamma_to_h((1, 0, 0), 4) == (1, 4, 6)
    assert vec.h_half_to_gamma((1, 4, 6), 4) == (1, 0, 0)
    assert vec.gamma_to_h((1, 2), 2) == (1, 4)
    assert vec.gamma_to_g((1, 2), 2) == (1, 3)


def test_gamma_round_trips_random():
    rng = random.Random(13)
    for _ in range(80):
        d = rng.randint(2, 12)
        m = d // 2 + 1
        gamma = (1,) + tuple(rng.randint(-5, 20) for _ in range(m - 1))
        h_half = vec.gamma_to_h(gamma, d)
        assert vec.h_half_to_gamma(h_half, d) == gamma
        g = vec.gamma_to_g(gamma, d)
        assert vec.g_trunc_to_gamma(g, d) == gamma
        # against the generating-function definition of gamma
        full_h = h_via_gamma_definition(gamma, d)
        assert full_h[: d // 2 + 1] == h_half
        assert vec.h_to_g(full_h, "trunc") == g


def test_gamma_via_chebyshev_examples():
    assert vec.gamma_via_chebyshev((1, 4, 1), 2) == (1, 2)
    assert vec.gamma_via_chebyshev((1, 4, 6, 4, 1), 4) == (1, 0, 0)
    assert vec.gamma_via_chebyshev((1, 3, 3, 1), 3) == (1, 0)
    with pytest.raises(NotReciprocalError):
        vec.gamma_via_chebyshev((1, 2, 3), 2)


def test_chebyshev_equals_matrix_path():
    rng = random.Random(17)
    for d in (2, 4, 6, 8, 10, 12, 14):
        for _ in range(12):
            half = (1,) + tuple(rng.randint(-30, 90) for _ in range(d // 2))
            h = vec.mirror_h(half, d)
            assert vec.gamma_via_chebyshev(h, d) == vec.h_half_to_gamma(half, d)
    # odd d goes through the (1+t) quotient
    for d in (3, 5, 7):
        for _ in range(8):
            half = (1,) + tuple(rng.randint(0, 40) for _ in range(d // 2))
            h = vec.mirror_h(half, d)
            assert vec.gamma_via_chebyshev(h, d) == vec.h_half_to_gamma(half, d)


def test_total_nonnegativity_minors():
    from itertools import combinations

    for d in range(2, 11):
        for name in ("A", "B"):
            mat = vec.transform_matrix(name, d)
            m = len(mat)
            for size in range(1, min(4, m) + 1):
                for rows in combinations(range(m), size):
                    for cols in combinations(range(m), size):
                        sub = [[mat[r][c] for c in cols] for r in rows]
                        assert det(sub) >= 0, (name, d, rows, cols)


def test_nonneg_gamma_forces_h_lower_bound():
    rng = random.Random(19)
    for _ in range(40):
        d = rng.randint(2, 12)
        gamma = (1,) + tuple(rng.randint(0, 25) for _ in range(d // 2))
        h_half = vec.gamma_to_h(gamma, d)
        for i, hi in enumerate(h_half):
            assert hi >= comb(d, i)


def test_f1_identity_on_generated_spheres():
    for d in range(4, 8):
        K = cx.cross_polytope_boundary(d)
        f = K.f_vector()
        g = vec.h_to_g(vec.f_to_h(f, d), "trunc")
        assert f[1] == comb(d + 1, 2) + d * g[1] + g[2]
    for d in (4, 5, 6):
        K = cx.simplex_boundary(d)
        f = K.f_vector()
        g = vec.h_to_g(vec.f_to_h(f, d), "trunc")
        assert f[1] == comb(d + 1, 2) + d * g[1] + g[2]


# ---------------------------------------------------------------------------
# diagnostics
# ---------------------------------------------------------------------------


def test_coefficient_ratio_diagnostics():
    rep = vec.coefficient_ratio_diagnostics(4)
    assert all(Fraction(3, 2) <= r <= 4 for r in rep["a_ratios"].values())
    rep = vec.coefficient_ratio_diagnostics(6)
    assert all(Fraction(1, 3) < r < 7 for r in rep["b_ratios"].values())
    rep = vec.coefficient_ratio_diagnostics(2)
    assert rep["a_ratios"] == {(1, 0): 2}
    for d in range(2, 15):  # growth bounds asserted internally, odd d included
        vec.coefficient_ratio_diagnostics(d)


def test_gamma_ratio_restrictions():
    rep = vec.gamma_ratio_restrictions((1, 3, 2), 4)
    assert rep["all_ok"]
    assert [r["gamma_lower_bound"] for r in rep["rows"]] == [0, 0]

    rep = vec.gamma_ratio_restrictions((1, 3, 1), 4)
    assert not rep["rows"][1]["ratio_ok"] and not rep["all_ok"]

    rep = vec.gamma_ratio_restrictions((1, 0), 7)
    assert not rep["rows"][0]["ratio_ok"]


def test_gamma_lower_bound_reported():
    # g jumps by more than (d+1)x force gamma mass at the top index
    d = 4
    rep = vec.gamma_ratio_restrictions((1, 3, 40), d)
    assert rep["rows"][1]["gamma_lower_bound"] == 40 - 5 * 3


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def test_count_vector_json():
    cv = vec.CountVector("h", 4, (1, 4, 6, 4, 1))
    blob = cv.dumps()
    assert json.loads(blob)["entries"] == ["1", "4", "6", "4", "1"]
    assert vec.CountVector.from_json(blob) == cv
    with pytest.raises(ShapeError):
        vec.CountVector("gamma", 4, (1, 0))
    big = vec.CountVector("f", 1, (10**40,))
    assert vec.CountVector.from_json(big.dumps()) == big
