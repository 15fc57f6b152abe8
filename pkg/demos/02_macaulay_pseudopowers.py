"""Macaulay representations, pseudopowers, and realizability checks.

The unique binomial expansion of an integer at index k drives three
classical characterizations: f-vectors of simplicial complexes,
h-vectors of Cohen-Macaulay complexes, and g-vectors of simplicial
spheres.  The pseudopower a^<k> is sandwiched between exact binomial
bounds and behaves like C_k a^((k+1)/k) for large a.
"""

from gammavec import macaulay

print("=== Macaulay representations ===")
for a, k in [(7, 2), (10, 3), (100, 4), (1, 5)]:
    rep = macaulay.macaulay_rep(a, k)
    terms = " + ".join(f"C({n},{i})" for n, i in rep.terms)
    print(f"{a} at k={k}:  {terms}   pseudopower {a}^<{k}> = {rep.pseudopower()}")

print()
print("=== the sandwich around a pseudopower ===")
for a, k in [(7, 2), (500, 3), (10**4, 3)]:
    b = macaulay.pseudopower_bounds(a, k)
    print(
        f"a={a}, k={k}:  {b.lower} <= {b.pseudo} <= {b.upper_real:.3f}"
        f" <= {b.power_upper:.3f}   (x = {b.x:.4f}, certified: {b.chain_verified})"
    )

print()
print("=== asymptotic constant C_k = (k!)^(1/k) / (k+1) ===")
for k in (1, 2, 3, 5, 8):
    b = macaulay.pseudopower_bounds(10**5, k)
    print(f"k={k}:  C_k = {b.c_k:.6f}   a^<k>/(C_k a^(1+1/k)) = {b.pseudo / b.asymptotic:.4f}")

print()
print("=== realizability checks ===")
cases = [
    ("fvector", (6, 12, 8), macaulay.check_f_vector),
    ("fvector", (2, 4), macaulay.check_f_vector),
    ("cm h   ", (1, 3, 3, 1), macaulay.check_cm_h),
    ("cm h   ", (1, 2, 4), macaulay.check_cm_h),
    ("sphere ", (1, 4, 6, 4, 1), macaulay.check_sphere_g),
    ("sphere ", (1, 2, 1, 2, 1), macaulay.check_sphere_g),
]
for label, v, checker in cases:
    res = checker(v)
    verdict = "ok" if res.ok else f"FAILS at index {res.failing_index}"
    print(f"{label} {v}: {verdict}")

print()
print("averaged h-bound: q h_q <= h_1 (1 + h_1 + ... + h_{q-1})")
print("  (1,3,3,1), q=2:", macaulay.avgh_bound_check((1, 3, 3, 1), 2))
print("  (1,1,5),   q=2:", macaulay.avgh_bound_check((1, 1, 5), 2), " (not CM-realizable)")
