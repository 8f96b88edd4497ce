"""The low-degree permutation family over GF(3^(2h+1)).

f_a(x) = x^(2*alpha+3) + (a x)^alpha - a^2 x,  alpha = sqrt(3q),

is a permutation polynomial for every a.  Its degree 2*alpha+3 is roughly
sqrt(q) -- tiny compared to the generic degree q-2 of a permutation
polynomial, which is what makes the family interesting.

The rescaling x -> x/zeta multiplies f_a by zeta^(2*alpha+3) and lands on
the member a*zeta^(alpha+1); since gcd(alpha+1, q-1) = 2, the permutation
property only ever needs checking at a = 0, one square, one non-square.
"""

import math
import time

from symspread import GF, ree_tits_fa, scaling_conjugate

for p, h in [(3, 3), (3, 5), (3, 7)]:
    gf = GF(p, h)
    q = gf.q
    alpha = gf.alpha()
    print(f"GF({q}): alpha = {alpha}, degree of f_a = {2*alpha+3}, "
          f"gcd(alpha+1, q-1) = {math.gcd(alpha+1, q-1)}")
    t0 = time.monotonic()
    assert all(ree_tits_fa(gf, a).is_permutation() for a in range(q))
    print(f"  all {q} members are permutation polynomials "
          f"({q*q} evaluations, {time.monotonic()-t0:.2f}s)")

# the scaling identity, spelled out once at q = 27
gf = GF(3, 3)
alpha = gf.alpha()
a, zeta = 5, 7
b = scaling_conjugate(gf, a, zeta)
fa, fb = ree_tits_fa(gf, a), ree_tits_fa(gf, b)
print(f"\nq=27, a={a}, zeta={zeta}: conjugate member is a*zeta^{alpha+1} = {b}")
for x in range(27):
    lhs = gf.mul(gf.pow(zeta, 2 * alpha + 3), fa.eval(gf.mul(x, gf.inv(zeta))))
    assert lhs == fb.eval(x)
print("zeta^(2a+3) * f_a(x/zeta) == f_conjugate(x) at every x")
