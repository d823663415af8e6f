"""Residue rings of binary polynomials mirroring shift-invariant maps.

For dimension n the modulus polynomial is

    X^((n+1)/2)   for odd n,
    X^n + X^(n/2) for even n,

and RingElement holds the fully reduced representative of a coset.
Multiplication of residues corresponds to composition of the associated
maps on F_2^n; units correspond to the bijective ones.  Inverses come
from the extended Euclidean algorithm; a failed inversion raises
NonUnitError carrying the offending gcd as a witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import poly2
from .poly2 import BinPoly, Factorization, ONE, X, x_power


class NonUnitError(ValueError):
    """Inversion was requested for a non-unit; `witness` is the nontrivial gcd."""

    def __init__(self, witness: BinPoly, message: str):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class Modulus:
    """The residue ring modulus for dimension n, with its 2-adic split n = 2^s * m."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be at least 1")

    @property
    def poly(self) -> BinPoly:
        if self.n % 2:
            return x_power((self.n + 1) // 2)
        return x_power(self.n) + x_power(self.n // 2)

    @property
    def degree(self) -> int:
        return (self.n + 1) // 2 if self.n % 2 else self.n

    @property
    def odd_part(self) -> int:
        """The largest odd divisor m of n."""
        m = self.n
        while m % 2 == 0:
            m //= 2
        return m

    @property
    def two_adic(self) -> int:
        """The exponent s in n = 2^s * m."""
        return (self.n // self.odd_part).bit_length() - 1


@dataclass(frozen=True)
class RingElement:
    """A coset, stored by its canonical representative of degree < deg(modulus)."""

    modulus: Modulus
    rep: BinPoly

    def __post_init__(self):
        if self.rep.degree >= self.modulus.degree:
            raise ValueError("representative is not reduced; build via reduce()")

    def __mul__(self, other):
        return ring_mul(self, other)

    def __add__(self, other):
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        return RingElement(self.modulus, self.rep + other.rep)

    def __str__(self):
        return f"[{self.rep}] mod {self.modulus.poly}"


def reduce(f: BinPoly, mod: Modulus) -> RingElement:
    """Canonical representative of the coset of f."""
    return RingElement(mod, f % mod.poly)


def ring_one(mod: Modulus) -> RingElement:
    return RingElement(mod, ONE)


def ring_mul(a: RingElement, b: RingElement) -> RingElement:
    """Product of cosets, fully reduced."""
    if a.modulus != b.modulus:
        raise ValueError("modulus mismatch")
    return reduce(a.rep * b.rep, a.modulus)


def is_unit(a: RingElement) -> bool:
    """True iff the representative is coprime to the modulus."""
    return poly2.gcd(a.rep, a.modulus.poly) == ONE


def ring_inverse(a: RingElement) -> RingElement:
    """Multiplicative inverse of a unit, via the extended Euclidean algorithm."""
    g, u, _ = poly2.ext_gcd(a.rep, a.modulus.poly)
    if g != ONE:
        raise NonUnitError(
            g, f"[{a.rep}] is not a unit modulo {a.modulus.poly}: gcd = {g}"
        )
    return reduce(u, a.modulus)


def modulus_factorization(mod: Modulus) -> Factorization:
    """Irreducible factorization of the modulus polynomial.

    Odd n gives the single factor X with multiplicity (n+1)/2.  Even
    n = 2^s * m gives X^(n/2) * (X^m + 1)^(2^(s-1)), so X carries
    multiplicity n/2 and every irreducible factor of X^m + 1 (that is,
    1+X and the factors of the exact quotient q = (1+X^m)/(1+X))
    carries multiplicity 2^(s-1).
    """
    n = mod.n
    if n % 2:
        return Factorization(((X, (n + 1) // 2),))
    m, s = mod.odd_part, mod.two_adic
    mult = 1 << (s - 1)
    entries = [(X, n // 2), (BinPoly(0b11), mult)]
    if m > 1:
        q, r = divmod(x_power(m) + ONE, BinPoly(0b11))
        assert r.is_zero, "1 + X must divide 1 + X^m exactly for odd m"
        for g, e in poly2.factor(q):
            assert e == 1, "1 + X^m is squarefree for odd m"
            entries.append((g, mult))
    entries.sort(key=lambda ge: (ge[0].degree, ge[0].bits))
    return Factorization(tuple(entries))


def unit_group_order(mod: Modulus) -> int:
    """Number of units: the product of 2^((e-1)d) * (2^d - 1) over the
    distinct irreducible factors of the modulus (degree d, multiplicity e)."""
    total = 1
    for g, e in modulus_factorization(mod):
        d = g.degree
        total *= (1 << ((e - 1) * d)) * ((1 << d) - 1)
    return total
