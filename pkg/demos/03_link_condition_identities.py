"""Local-global identities and the link-condition inequality suite.

Vertex links tie h-vectors together; under the link condition
(lk(a) & lk(b) = lk(ab) for every edge) the edge links satisfy an exact
g-vector identity, edge contractions obey a clean h-vector law, and the
per-edge nonnegativity of contracted g-vectors averages into rational
interlacing bounds on consecutive g entries.
"""

from gammavec import complexes as cx
from gammavec import links

x4 = cx.cross_polytope_boundary(4)

print("=== vertex local-global sums (cross polytope, d=4) ===")
for i in range(5):
    lhs, rhs, ok = links.vertex_local_global_check(x4, i)
    print(f"i={i}:  sum_v h_i(lk v) = {lhs}   (i+1)h_(i+1) + (d-i)h_i = {rhs}   {ok}")

print()
print("=== edge local-global sums, ext-mode g (cross polytope, d=4) ===")
for k in range(3):
    lhs, rhs, ok = links.edge_local_global_check(x4, k)
    print(f"k={k}:  2 sum_e g_k(lk e) = {lhs} = {rhs}   {ok}")

print()
print("=== contraction law h~ = h - x h(lk e) ===")
for K, name in [(x4, "cross_4"), (cx.cycle(4), "4-cycle")]:
    e = K.edges()[0]
    recount, formula, ok = links.contraction_h_check(K, e)
    print(f"{name}, contract {e}: recount {recount}  formula {formula}  {ok}")

print()
print("=== interlacing bounds alpha_k g_k <= g_(k+1) <= beta_k g_k ===")
x6 = cx.cross_polytope_boundary(6)
rep = links.interlacing_bounds(x6)
print(f"cross_6: f1={rep.f1}, premise g(contraction) >= 0 verified: {rep.premise_verified}")
for row in rep.rows:
    print(
        f"  k={row.k}: alpha={row.alpha} beta={row.beta}"
        f"  lower {row.lower_ok}  upper {row.upper_ok}"
    )

print()
print("=== global sandwich with fractional powers (rigorous enclosures) ===")
for d, i in [(6, 2), (8, 2), (8, 3)]:
    gs = links.global_sandwich_check(cx.cross_polytope_boundary(d), i)
    print(
        f"cross_{d}, i={i}:  C_i={gs.c_i} C_(i-1)={gs.c_prev}"
        f"  lower {gs.lower_ok}  upper {gs.upper_ok}  cushion {gs.cushion_ok}"
    )

print()
print("=== triviality diagnostics ===")
for d in (4, 6, 8):
    rep = links.triviality_diagnostics(cx.cross_polytope_boundary(d))
    tags = []
    if rep.interlacing_active:
        tags.append("interlacing-active (g1 < d+10)")
    if rep.g1_linear:
        tags.append("g1 linear in d")
    print(f"cross_{d}: f1={rep.f1} (formula {rep.f1_formula})  {', '.join(tags)}")
    for row in rep.rows:
        print(
            f"  k={row.k}: r_(k-1)={row.r_prev} r_k={row.r_k}"
            f"  trivial-by-M: {row.trivial_by_m_vector}"
            f"  ratio bound applicable: {row.bound_applicable}"
        )
