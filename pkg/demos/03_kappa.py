"""A close look at kappa = gamma(0) + gamma(2) + gamma(4).

Its coefficient polynomial 1 + X + X^2 is the simplest that can be a
unit on even dimensions.  kappa permutes F_2^n exactly when 6 does not
divide n; its inverse has a closed form whose coefficient strings are
palindromes for even n, and the bit flips it performs are described by
three short neighborhood patterns.
"""

from shiftperm import (
    BitVector,
    analyze,
    differential_uniformity,
    evaluate,
    inverse,
    is_permutation,
    is_permutation_bruteforce,
    kappa,
    kappa_flip_predicate,
    kappa_inverse_closed_form,
)

print("permutation window (criterion vs. brute force):")
for n in range(4, 17):
    ok, witness = is_permutation(kappa(n))
    brute = is_permutation_bruteforce(kappa(n))
    marker = "permutation" if ok else f"not a permutation (gcd witness {witness})"
    assert ok == brute
    print(f"  n = {n:2d}: {marker}")
print()

print("closed-form inverse coefficients (palindromes for even n):")
for n in (8, 10, 14, 16, 20, 22):
    print(f"  n = {n:2d}: {kappa_inverse_closed_form(n).to_string()}")
print()

print("on n = 5 the inverse of kappa is chi itself:", inverse(kappa(5)))
print()

# the complementing landscape: which windows flip a bit
x = BitVector.from_bits([1, 0, 1, 1, 0, 1, 0, 0])
y = evaluate(kappa(8), x)
flips = "".join(str(kappa_flip_predicate(x, i)) for i in range(8))
print("x        =", x)
print("kappa(x) =", y)
print("flips    =", flips, "(positions where the 011 / 01-0 / 0001 windows match)")
print()

print("full report on n = 8:")
report = analyze(kappa(8))
for key, value in report.to_dict().items():
    print(f"  {key}: {value}")
print()

print("differential uniformity by full scan:")
for n in range(5, 11):
    print(f"  n = {n:2d}: {differential_uniformity(kappa(n)):4d}   (2^(n-2) - 2^(n-5) = {2**(n-2) - 2**(n-5):4d})")
print("  (the n = 5 value is 8, not 7: difference-table entries are always even)")
