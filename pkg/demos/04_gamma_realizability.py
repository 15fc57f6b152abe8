"""Growing nonnegative gamma vectors entry by entry.

Each realizability mode (simplicial sphere, Cohen-Macaulay complex,
f-vector) turns into an explicit upper bound for the next gamma entry;
greedy or randomized choices below the bound always produce a vector
whose converted h (or f) passes the corresponding check.  Large entries
never run out of room, and the f-vector bound sits below the sphere
bound once the prefix is huge.
"""

from gammavec import realize
from gammavec.vectors import gamma_to_h, mirror_h

print("=== stepwise extension, d = 8, sphere mode, greedy max ===")
res = realize.extend_gamma((1,), 8, "sphere", strategy="max")
for bound, chosen in res.steps:
    upper = "unbounded" if bound.unbounded else bound.upper
    print(f"  gamma_{bound.index}: upper {upper}  chose {chosen}")
print("full gamma:", res.gamma)
print("converted h passes the sphere check:", res.check().ok)
print("h-half:", gamma_to_h(res.gamma, 8))

print()
print("=== the cross polytope route: all-zero gamma tail ===")
res = realize.extend_gamma((1, 0), 4, "sphere", strategy=("given", (0,)))
print("gamma:", res.gamma, "-> h =", mirror_h(gamma_to_h(res.gamma, 4), 4))

print()
print("=== infeasibility is reported with its exact negative slack ===")
bound = realize.gamma_extension_bound((1, 1, 10**6), 8, "sphere")
print(f"prefix (1, 1, 10^6): feasible={bound.feasible} slack={bound.slack}")

print()
print("=== f-vector bound vs sphere bound on large prefixes ===")
for d in (6, 8):
    prefix = (1,) + tuple(d**d + j for j in range(d // 2 - 1))
    fv = realize.gamma_extension_bound(prefix, d, "fvector")
    sp = realize.gamma_extension_bound(prefix, d, "sphere")
    print(f"d={d}: fvector upper {fv.upper} <= sphere upper {sp.upper}: {fv.upper <= sp.upper}")

print()
print("=== closed-form bounds at q = 2 for the cross polytope data ===")
rep = realize.closed_gamma_bounds((1, 0, 0), 4, 2)
lb = rep["linear_bound"]
print(f"q g_q <= g_1 h_(q-1):  {lb['lhs']} <= {lb['rhs']}  ({lb['ok']})")
print("recursive gamma bound:", rep["recursive_bound"])
cb = rep["closed_bound"]
print(f"g_q <= g_1 C(g_1+q-1, q-1)/q:  {cb['lhs']} <= {cb['rhs']}  ({cb['ok']})")

print()
print("=== growth-order diagnostics ===")
from gammavec import complexes as cx
from gammavec.vectors import f_to_h, h_to_g

g = h_to_g(f_to_h(cx.cross_polytope_boundary(6).f_vector(), 6), "trunc")
rep = realize.order_diagnostics(g, 6, kind="g")
print("cross_6 g =", g, "->", rep["classification"],
      "| interlacing-active:", rep["interlacing_active"])
rep = realize.order_diagnostics((1, 64, 100, 100), 8, kind="g")
print("synthetic g with g_1 = 64 at d=8 ->", rep["classification"])
