"""S-norms in a complex quadratic field, from the ground up.

The ring of S-integers O_S of K = Q(sqrt(-d)) consists of elements
(a + b*w)/c whose denominator c is a product of primes in S.  The
S-norm N_S deletes the primes of S from the usual field norm; K is
S-norm-Euclidean when every xi in K has some alpha in O_S with
N_S(xi - alpha) < 1.
"""
from fractions import Fraction

from seuclid import SSet, make_field, norm, reduce_to_fundamental, s_norm

# -d = 3 mod 4, so the integral basis is {1, w} with w = sqrt(-5)
fld = make_field(5)
print(f"{fld}: D = {fld.D}, half-integer basis: {fld.half_basis}")

xi = fld.element(3, 3, 7)  # (3 + 3w)/7
print(f"xi = {xi}")
print(f"N(xi)        = {norm(xi)}")
print(f"N_S(xi), S={{2}} = {s_norm(xi, SSet.of(2))}")
assert s_norm(xi, SSet.of(2)) == Fraction(27, 49)

# -15 = 1 mod 4: now w = (1 + sqrt(-15))/2 and the discriminant is d itself
fld15 = make_field(15)
xi = fld15.element(1, 1, 2)
print(f"\n{fld15}: D = {fld15.D}, half-integer basis: {fld15.half_basis}")
print(f"N((1+w)/2)   = {norm(xi)}")
print(f"N_S, S={{3}}    = {s_norm(xi, SSet.of(3))}")

# any element splits as a point of the fundamental domain plus an integer
x = fld.element(13, 7, 2)
xp, gamma = reduce_to_fundamental(x)
print(f"\n{x} = {xp} + {gamma}")
assert xp + gamma == x
