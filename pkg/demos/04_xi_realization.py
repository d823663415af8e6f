"""Which dimensions a combination permutes, and building maps to order.

For a combination with coefficient polynomial F, the set xi collects
2 ord(g) over the irreducible factors g of F.  The map permutes F_2^n
exactly when no element of xi divides n, so xi pins down the entire
(infinite) set of good dimensions from one factorization.  Going the
other way, any set of doubled odd numbers is the xi of some
combination, and adding multiples of X (X^m + 1) to F moves between
maps that share their behavior on the dimensions 2^s * m.
"""

from shiftperm import (
    GammaCombination,
    ONE,
    chi,
    factor,
    inv_membership,
    is_permutation,
    kappa,
    order,
    perturb,
    realize_xi,
    xi,
    xi_upper_bound,
)

tau = GammaCombination.parse("g0+g2+g6")
print("tau =", tau, " with coefficient polynomial", tau.poly())
print("factors:", [(str(g), e) for g, e in factor(tau.poly())])
print("order of 1 + X + X^3:", order(tau.poly()))
print("xi(tau) =", sorted(xi(tau)), " (upper bound without orders:", sorted(xi_upper_bound(tau)), ")")
print()

print("so tau permutes F_2^n exactly when 14 does not divide n:")
for n in (7, 14, 21, 22, 28, 44):
    print(f"  n = {n:2d}: {inv_membership(tau, n)}")
print()

print("reference points: xi(chi) =", sorted(xi(chi())), ", xi(kappa) =", sorted(xi(kappa())))
print()

# prescribe the forbidden dimensions and synthesize a map for them
targets = {6, 14}
built = realize_xi(targets)
print(f"realize xi = {sorted(targets)}:", built, " poly", built.poly())
print("check:", sorted(xi(built)) == sorted(targets))
print()

# additive manipulation: adding X (X^11 + 1) to tau keeps it invertible
# wherever the odd part of the dimension is 11
moved = perturb(tau, ONE, 11)
print("tau + psi(X (X^11+1)) =", moved)
for n in (22, 44):
    print(f"  still a permutation on F_2^{n}:", is_permutation(moved, n)[0])
print("  xi of the moved map:", sorted(xi(moved)))
