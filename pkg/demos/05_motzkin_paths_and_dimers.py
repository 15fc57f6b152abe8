"""Orthogonal polynomials, weighted Motzkin paths, and dimer covers.

A unitary family P_(m+1) = (x - b_m) P_m - lambda_m P_(m-1) has an
inverse coefficient matrix whose entries are weighted Motzkin path sums;
polynomial coefficients are weighted monomer/dimer cover sums.  With the
translated Chebyshev weights this machinery reproduces gamma vectors and
generalizes them to arbitrary positive weight schemes.
"""

from fractions import Fraction

from gammavec import complexes as cx
from gammavec import orthopath as op

cheb = op.chebyshev_scheme(6)

print("=== the translated unitary Chebyshev family ===")
fam = op.unitary_family(cheb, 4)
for m, row in enumerate(fam):
    terms = [f"{c}x^{i}" for i, c in enumerate(row) if c]
    print(f"P_{m} =", " + ".join(terms))

print()
print("=== Motzkin weight table (rows: path length, cols: end level) ===")
mu = op.mu_matrix(cheb, 5)
for r in range(6):
    print("  ", [str(mu[r][k]) for k in range(r + 1)])
print("mu[5][4] = b_0 + ... + b_4 =", mu[5][4])
print("brute-force enumeration agrees:", op.mu_bruteforce(cheb, 5, 2) == mu[5][2])
print("mu * P = identity:", op.inverse_pair_check(cheb, 6))

print()
print("=== polynomial coefficients as weighted cover sums ===")
generic = op.WeightScheme((Fraction(2), Fraction(3), Fraction(1, 2)),
                          (Fraction(5), Fraction(1, 3)))
fam = op.unitary_family(generic, 3)
for m in (2, 3):
    for r in range(m + 1):
        via = op.coefficient_via_covers(generic, m, r)
        print(f"  [x^{r}] P_{m}: covers {via}  recursion {fam[m][r]}")

print()
print("=== the dimer identity for unitary Chebyshev coefficients ===")
for m, ell in [(2, 0), (4, 0), (5, 3), (8, 4)]:
    rep = op.dimer_identity_check(m, ell)
    print(f"m={m}, ell={ell}:  2^m [x^ell] T^_m = {rep['lhs']}"
          f"  from counts A={rep['a']}, B={rep['b']}: {rep['rhs']}  ({rep['ok']})")

print()
print("=== Tchebyshev subdivision matches the polynomial substitution ===")
for K, name in [(cx.cycle(3), "3-cycle"), (cx.cross_polytope_boundary(3), "octahedron")]:
    rep = op.tcheb_fpoly_identity_check(K)
    print(f"{name}: T(F) = F(T) coefficients {rep['lhs']}  ({rep['ok']})")

print()
print("=== generalized inverted gamma vectors ===")
z = op.gamma_to_z((1, 2))
out = op.formal_h(z, op.chebyshev_scheme(2))
print(f"z = {z} (packed gamma (1,2)) -> formal h {out['h']}, formal g {out['g']}")

rng_scheme = op.WeightScheme((2, 1, 3), (Fraction(1, 2), Fraction(2)))
z = (Fraction(1), Fraction(3), Fraction(4))
out = op.formal_h(z, rng_scheme)
uni = op.formal_unimodality_check(z, rng_scheme)
print(f"custom scheme, z = {z}: formal h = {tuple(map(str, out['h']))},"
      f" monotone: {uni['monotone']}")

fb = op.formal_extension_bound((Fraction(8), Fraction(8)), 3, op.chebyshev_scheme(3))
print("extension bound for the next-lower z entry:",
      "slack", fb.slack, "upper", fb.upper)
