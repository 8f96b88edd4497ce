"""Recover the generating polynomial of a coordinate-swapped spread.

The involution tau: (x0, x1, x2, x3) -> (x3, x2, x1, x0) preserves the
alternating form, so it maps symplectic spreads to symplectic spreads -- but
it swaps the two distinguished lines, so the image of a one-term spread is
generated by a very different polynomial.  We make it explicit for the
Kantor spread over GF(27) with the modulus t^3 - t + 1, writing coefficients
as powers of the generator n (which satisfies n^3 - n = -1):

expected   n u^21 v^4 + n^8 u^19 v^18 + n^2 u^17 v^6
         + n^4 u^9 v^10 + n^18 u^5 v^12 + n^12 u^3
"""

from symspread import (
    GF, FamilySpec, g_of, recover_g, spread_from_g, tau_spread,
    permutation_criterion, verify_spread,
)

gf = GF(3, 3)
n = gf.epsilon
print(f"GF(27) modulus {list(gf.modulus)}, generator n = {n}, n^3 - n = "
      f"{gf.sub(gf.pow(n, 3), n)} (index of -1 is {gf.neg(1)})")

g = g_of(FamilySpec("kantor", n=n, i=1), gf)
print(f"\nKantor generator: g(x,y) = {g.to_text()}  (that is, -n x^3)")

S = spread_from_g(gf, g)
T = tau_spread(S)
assert tau_spread(T) == S, "tau is an involution"
assert verify_spread(T).is_symplectic

recovered = recover_g(T)
print("\nrecovered generating polynomial of tau(S), one term per line:")
for (i, j), c in sorted(recovered.terms.items(), reverse=True):
    print(f"  n^{int(gf.log_table[c]):2d} * u^{i:<2d} v^{j:<2d}   (coefficient index {c})")

expected = {
    (21, 4): 1, (19, 18): 8, (17, 6): 2, (9, 10): 4, (5, 12): 18, (3, 0): 12,
}
assert {k: int(gf.log_table[c]) for k, c in recovered.terms.items()} == expected
assert permutation_criterion(gf, recovered)
print("\nmatches the expected six terms; the recovered polynomial again")
print("satisfies the permutation criterion, as it must.")
