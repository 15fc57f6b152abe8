import random
from fractions import Fraction

import pytest

from gammavec import complexes as cx
from gammavec import orthopath as op
from gammavec import polys
from gammavec import vectors as vec
from gammavec.errors import NormalizationError, RangeGuardError, ShapeError


def random_scheme(rng, order):
    return op.WeightScheme(
        tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(order)),
        tuple(Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(max(order - 1, 0))),
    )


def mu_table_by_enumeration(ws, n):
    """Oracle: accumulate weights along every step sequence staying >= 0."""
    table = [[Fraction(0)] * (n + 1) for _ in range(n + 1)]

    def walk(length, level, weight):
        table[length][level] += weight
        if length == n:
            return
        walk(length + 1, level + 1, weight)
        walk(length + 1, level, weight * ws.b_at(level))
        if level > 0:
            walk(length + 1, level - 1, weight * ws.lam_at(level))

    walk(0, 0, Fraction(1))
    return table


# ---------------------------------------------------------------------------
# unitary families
# ---------------------------------------------------------------------------


def test_unitary_family_chebyshev():
    ws = op.chebyshev_scheme(4)
    fam = op.unitary_family(ws, 3)
    assert fam[1][:2] == (-1, 1)
    assert fam[2][:3] == (Fraction(1, 2), -2, 1)
    # P_m(x) = T^_m(x - 1) with T^_m = T_m / 2^(m-1)
    for m in (1, 2, 3):
        unitary_cheb = polys.scale(polys.chebyshev_t(m), Fraction(1, 2 ** (m - 1)))
        translated = polys.compose_linear(unitary_cheb, 1, -1)
        assert fam[m][: m + 1] == translated + (0,) * (m + 1 - len(translated))


def test_unitary_family_zero_b():
    ws = op.WeightScheme((0, 0, 0), (Fraction(5, 7), Fraction(1, 3)))
    fam = op.unitary_family(ws, 2)
    assert fam[2][:3] == (Fraction(-5, 7), 0, 1)  # x^2 - lambda_1


def test_unitary_family_needs_enough_weights():
    ws = op.WeightScheme((1, 1), (Fraction(1, 2),))
    with pytest.raises(ShapeError):
        op.unitary_family(ws, 4)


# ---------------------------------------------------------------------------
# Motzkin weights
# ---------------------------------------------------------------------------


def test_mu_matrix_closed_forms():
    rng = random.Random(41)
    for _ in range(6):
        ws = random_scheme(rng, 5)
        mu = op.mu_matrix(ws, 5)
        for n in range(1, 6):
            assert mu[n][n - 1] == sum(ws.b_at(i) for i in range(n))
            assert mu[n][n] == 1
        assert mu[2][0] == ws.b_at(0) ** 2 + ws.lam_at(1)


def test_mu_chebyshev_values():
    mu = op.mu_matrix(op.chebyshev_scheme(4), 4)
    assert mu[2][0] == Fraction(3, 2)
    assert mu[2][1] == 2
    assert mu[4][3] == 4


def test_mu_bruteforce_matches_recursion():
    rng = random.Random(43)
    for _ in range(4):
        ws = random_scheme(rng, 6)
        mu = op.mu_matrix(ws, 6)
        for n in range(7):
            for k in range(n + 1):
                assert op.mu_bruteforce(ws, n, k) == mu[n][k]
    assert op.mu_bruteforce(op.chebyshev_scheme(4), 4, 4) == 1
    assert op.mu_bruteforce(op.chebyshev_scheme(2), 1, 0) == 1  # b_0
    with pytest.raises(RangeGuardError):
        op.mu_bruteforce(op.chebyshev_scheme(20), 19, 0)


def test_mu_full_tables_random_schemes():
    rng = random.Random(47)
    for _ in range(6):
        ws = random_scheme(rng, 8)
        assert mu_table_by_enumeration(ws, 8) == [
            list(row[: r + 1]) + [Fraction(0)] * (8 - r)
            for r, row in enumerate(op.mu_matrix(ws, 8))
        ]


def test_inverse_pair():
    assert op.inverse_pair_check(op.chebyshev_scheme(12), 12)
    rng = random.Random(53)
    for _ in range(5):
        assert op.inverse_pair_check(random_scheme(rng, 8), 8)
    assert op.inverse_pair_check(op.chebyshev_scheme(1), 0)


def test_mu_symbolic_properties():
    import sympy

    mus, b, lam = op.mu_symbolic(6)
    assert sympy.simplify(mus[6][5] - sum(b)) == 0
    assert sympy.simplify(mus[2][0] - (b[0] ** 2 + lam[0])) == 0
    gens = list(b) + list(lam)
    for n in range(7):
        for k in range(n + 1):
            poly = sympy.Poly(mus[n][k], *gens)
            assert poly.total_degree() == n - k, (n, k)
            assert all(c >= 0 for c in poly.coeffs()), (n, k)


def test_mu_ratio_annotations():
    ann = op.mu_ratio_diagnostics(op.chebyshev_scheme(4), 4)
    assert ann[(2, 1)] == Fraction(2) / Fraction(3, 2)


# ---------------------------------------------------------------------------
# covers
# ---------------------------------------------------------------------------


def test_cover_coefficients_match_recursion():
    rng = random.Random(59)
    for _ in range(4):
        ws = random_scheme(rng, 8)
        fam = op.unitary_family(ws, 8)
        for m in range(9):
            for r in range(m + 1):
                assert op.coefficient_via_covers(ws, m, r) == fam[m][r], (m, r)
    for _ in range(2):
        ws = random_scheme(rng, 12)
        fam = op.unitary_family(ws, 12)
        for m in (11, 12):
            for r in range(m + 1):
                assert op.coefficient_via_covers(ws, m, r) == fam[m][r], (m, r)


def test_cover_examples():
    ws = op.chebyshev_scheme(3)
    assert op.coefficient_via_covers(ws, 2, 0) == Fraction(1, 2)
    assert op.coefficient_via_covers(ws, 2, 2) == 1  # monic
    generic = op.WeightScheme((Fraction(2), Fraction(3)), (Fraction(5),))
    # b_0 b_1 - lambda_1 constant term
    assert op.coefficient_via_covers(generic, 2, 0) == 1
    with pytest.raises(RangeGuardError):
        op.coefficient_via_covers(ws, 30, 0)


def test_dimer_identity_sweep():
    for m in range(2, 15):
        for ell in range(m + 1):
            rep = op.dimer_identity_check(m, ell)
            assert rep["ok"], (m, ell)
    rep = op.dimer_identity_check(2, 0)
    assert rep["lhs"] == rep["rhs"] == -2
    assert rep["a"] == 0 and rep["b"] == 1


def test_gamma_via_covers_examples():
    for h1 in (2, 4, 9):
        assert op.gamma_via_covers((1, h1, 1), 2) == (1, h1 - 2)
    assert op.gamma_via_covers((1, 4, 6, 4, 1), 4) == (1, 0, 0)
    assert op.gamma_via_covers((1, 5, 8, 5, 1), 4) == vec.h_half_to_gamma((1, 5, 8), 4)
    with pytest.raises(RangeGuardError):
        op.gamma_via_covers((1, 3, 3, 1), 3)


def test_gamma_triple_agreement_random():
    rng = random.Random(61)
    for d in (2, 4, 6, 8, 10):
        for _ in range(25):
            half = (1,) + tuple(rng.randint(-20, 60) for _ in range(d // 2))
            h = vec.mirror_h(half, d)
            matrix = vec.h_half_to_gamma(half, d)
            cheb = vec.gamma_via_chebyshev(h, d)
            covers = op.gamma_via_covers(h, d)
            assert matrix == cheb == covers, (d, h)


def test_cover_spec_colors_match_signed_count():
    # unit scheme weights with 2-colored monomers reproduce the signed count
    unit = op.WeightScheme((1,) * 10, (1,) * 9)
    for m in range(0, 8):
        for r in range(m + 1):
            via_spec = op.cover_sum(
                op.CoverSpec(length=m, missing=r, monomer_colors=2,
                             forbid_first_dimer=True),
                unit,
            )
            direct = op.signed_colored_cover_count(m, r, colors=2,
                                                   forbid_first_dimer=True)
            assert via_spec == direct, (m, r)


# ---------------------------------------------------------------------------
# subdivision polynomial identity
# ---------------------------------------------------------------------------


def test_tcheb_fpoly_identity():
    rep = op.tcheb_fpoly_identity_check(cx.cycle(3))
    assert rep["ok"]
    assert rep["lhs"] == (Fraction(-1, 2), 0, Fraction(3, 2))

    for n in range(4, 9):
        assert op.tcheb_fpoly_identity_check(cx.cycle(n))["ok"]
    for d in (2, 3):  # d = 1 has no edge to subdivide
        assert op.tcheb_fpoly_identity_check(cx.simplex_boundary(d))["ok"]
    assert op.tcheb_fpoly_identity_check(cx.cross_polytope_boundary(3))["ok"]
    assert op.tcheb_fpoly_identity_check(cx.from_facets([[0, 1]]))["ok"]


def test_tcheb_fpoly_identity_random_sphere():
    rng = random.Random(67)
    K = cx.simplex_boundary(3)
    for _ in range(3):
        e = rng.choice(K.edges())
        K = cx.stellar_subdivide_edge(K, e)
    assert K.euler_characteristic() == 2
    assert op.tcheb_fpoly_identity_check(K)["ok"]


# ---------------------------------------------------------------------------
# generalized inverted gamma vectors
# ---------------------------------------------------------------------------


def test_formal_h_chebyshev_reproduces_gamma_route():
    ws = op.chebyshev_scheme(4)
    z = op.gamma_to_z((1, 2))
    assert z == (2, 2)
    out = op.formal_h(z, ws)
    assert out["h"] == (1, 4)
    assert out["g"] == (1, 3)

    rng = random.Random(71)
    for d in (4, 6, 8):
        for _ in range(10):
            gamma = (1,) + tuple(rng.randint(0, 9) for _ in range(d // 2))
            z = op.gamma_to_z(gamma)
            out = op.formal_h(z, op.chebyshev_scheme(d // 2))
            assert tuple(out["h"]) == vec.gamma_to_h(gamma, d)
            assert tuple(out["g"]) == vec.gamma_to_g(gamma, d)


def test_formal_h_lower_bound_property():
    rng = random.Random(73)
    for _ in range(15):
        n = rng.randint(1, 6)
        ws = random_scheme(rng, n + 1)
        z = tuple(Fraction(rng.randint(0, 8)) for _ in range(n)) + (Fraction(2**n),)
        out = op.formal_h(z, ws)
        mu = op.mu_matrix(ws, n)
        for k in range(n + 1):
            assert out["h"][k] >= 2**k * mu[n][n - k]
        # equality when z is zero except its top entry
        z0 = (Fraction(0),) * n + (Fraction(2**n),)
        out0 = op.formal_h(z0, ws)
        for k in range(n + 1):
            assert out0["h"][k] == 2**k * mu[n][n - k]


def test_formal_unimodality():
    ws = op.chebyshev_scheme(2)
    rep = op.formal_unimodality_check((2, 2), ws)
    assert rep["monotone"]
    assert not rep["printed_sufficient_condition"]  # fails for Chebyshev weights

    # huge leading z keeps the needed slack positive
    rep = op.formal_unimodality_check((10**6, 2), ws)
    assert rep["monotone"]

    # monotone verdict must agree with q_ell <= 2 q_{ell-1} directly
    rng = random.Random(79)
    for _ in range(20):
        n = rng.randint(1, 5)
        ws = random_scheme(rng, n + 1)
        z = tuple(Fraction(rng.randint(0, 6)) for _ in range(n + 1))
        rep = op.formal_unimodality_check(z, ws)
        q = op.q_values(z, ws)
        direct = all(q[ell] <= 2 * q[ell - 1] for ell in range(1, n + 1))
        assert rep["monotone"] == direct


def test_formal_extension_matches_gamma_route():
    # Chebyshev weights turn the z-space bound into the sphere-mode bound
    from gammavec import realize as rz

    for d in (4, 6):
        n = d // 2
        ws = op.chebyshev_scheme(n)
        for gamma1 in (0, 1, 3, 8):
            prefix = (1, gamma1)
            # top two entries of the packed vector: (2^(n-1) gamma_1, 2^n gamma_0)
            z_suffix = (Fraction(2 ** (n - 1) * gamma1), Fraction(2**n))
            fb = op.formal_extension_bound(z_suffix, n, ws, "sphere")
            rb = rz.gamma_extension_bound(prefix, d, "sphere")
            assert fb.feasible == rb.feasible
            scale = Fraction(2 ** (n - 2)) if n >= 2 else Fraction(1, 2)
            assert fb.upper == rb.upper * scale


def test_formal_extension_cm_mode_matches_gamma_route():
    from gammavec import realize as rz

    for d in (4, 6):
        n = d // 2
        ws = op.chebyshev_scheme(n)
        for gamma1 in (0, 2, 5):
            z_suffix = (Fraction(2 ** (n - 1) * gamma1), Fraction(2**n))
            fb = op.formal_extension_bound(z_suffix, n, ws, "cm")
            rb = rz.gamma_extension_bound((1, gamma1), d, "cm")
            scale = Fraction(2 ** (n - 2)) if n >= 2 else Fraction(1, 2)
            assert fb.upper == rb.upper * scale


def test_formal_extension_validation():
    ws = op.chebyshev_scheme(3)
    with pytest.raises(NormalizationError):
        op.formal_extension_bound((1, 5), 3, ws)
    fb = op.formal_extension_bound((Fraction(2),), 1, ws)
    assert fb.unbounded  # N - k = 0: no M-inequality applies


def test_formal_extension_zero_prefix_is_pure_mu():
    # with z = (0, ..., 0, 2^N) the bound is the pure-mu pseudopower expression
    from gammavec.macaulay import pseudopower

    n = 3
    ws = op.chebyshev_scheme(n)
    z_suffix = (Fraction(0), Fraction(0), Fraction(2**n))
    fb = op.formal_extension_bound(z_suffix, n, ws, "sphere")
    mu = op.mu_matrix(ws, n)
    k = 1
    qk = sum(z_suffix[m - k] * mu[m][k] for m in range(k, n + 1))
    qk1 = sum(z_suffix[m - k] * mu[m][k + 1] for m in range(k + 1, n + 1))
    gval = (2 * qk - qk1) / 2 ** (k + 1)
    lin = sum(
        (2 * mu[j][k - 1] - mu[j][k]) * z_suffix[j - k] for j in range(k, n + 1)
    )
    assert fb.upper == (Fraction(2**k * pseudopower(int(gval), n - k)) - lin) / 2


def test_weight_scheme_json_round_trip():
    ws = op.WeightScheme((1, Fraction(2, 3)), (Fraction(1, 2),))
    import json

    blob = json.dumps(ws.to_json())
    assert op.WeightScheme.from_json(blob) == ws
