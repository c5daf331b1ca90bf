"""Closed-form toy computations on classifying and weighted projective stacks.

Covers the exact discrete Fourier transform picture for B(mu_n) (including
Parseval's identity), K-theory rings of weighted projective stacks with
their tangent Euler classes, the fixed P(2,3) twisted-character example,
and the stars-and-bars moduli count on B(mu_n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cyclotomic import Cyclotomic, root_of_unity
from .groups import Character, char_inner_product
from .polyring import QuotientRing, QuotientRingElement, poly, poly_mul


class ToyStackError(ValueError):
    pass


@dataclass(frozen=True)
class GroupRingElement:
    """An element of Z[x]/(x^n - 1): the representation ring of mu_n."""

    n: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cs = tuple(Fraction(c) for c in self.coeffs)
        if len(cs) > self.n:
            raise ToyStackError("coefficient vector longer than the ring rank")
        object.__setattr__(self, "coeffs", cs + (Fraction(0),) * (self.n - len(cs)))

    @classmethod
    def monomial(cls, n: int, k: int, c=1) -> "GroupRingElement":
        coeffs = [0] * n
        coeffs[k % n] = c
        return cls(n, tuple(coeffs))

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        if self.n != other.n:
            raise ToyStackError("ring rank mismatch")
        return GroupRingElement(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        if self.n != other.n:
            raise ToyStackError("ring rank mismatch")
        out = [Fraction(0)] * self.n
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[(i + j) % self.n] += a * b
        return GroupRingElement(self.n, tuple(out))


def dft_inverse(f: GroupRingElement) -> tuple[Cyclotomic, ...]:
    """The twisted-character vector of f: f_check(k) = sum_j zeta_n^{jk} f(j)."""
    n = f.n
    out = []
    for k in range(n):
        acc = Cyclotomic.zero(n)
        for j, c in enumerate(f.coeffs):
            if c != 0:
                acc = acc + root_of_unity(n, (j * k) % n) * c
        out.append(acc)
    return tuple(out)


def weighted_inner_product(a, b, n: int | None = None) -> Cyclotomic:
    """(1/n) sum conj(a_i) b_i, the centralizer-weighted sesquilinear pairing."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise ToyStackError("vector length mismatch")
    if n is None:
        n = len(a)
    acc = Cyclotomic.zero()
    for ai, bi in zip(a, b):
        ai = ai if isinstance(ai, Cyclotomic) else Cyclotomic.from_rational(ai)
        bi = bi if isinstance(bi, Cyclotomic) else Cyclotomic.from_rational(bi)
        acc = acc + ai.conjugate() * bi
    return acc * Fraction(1, n)


def coefficient_pairing(f: GroupRingElement, g: GroupRingElement) -> Fraction:
    """The Euler pairing on Z[x]/(x^n - 1): <x^i, x^j> = delta_ij, extended."""
    if f.n != g.n:
        raise ToyStackError("ring rank mismatch")
    return sum((a * b for a, b in zip(f.coeffs, g.coeffs)), Fraction(0))


def parseval_check(f: GroupRingElement, g: GroupRingElement) -> bool:
    """Does the coefficient pairing match the weighted pairing of transforms?"""
    lhs = coefficient_pairing(f, g)
    rhs = weighted_inner_product(dft_inverse(f), dft_inverse(g), f.n)
    return rhs == lhs


# -- weighted projective stacks -------------------------------------------


def wps_ring(weights) -> QuotientRing:
    """K(P(a_0..a_n)) = Z[x] / ((x^{a_0}-1) ... (x^{a_n}-1))."""
    weights = tuple(int(a) for a in weights)
    if len(weights) < 2 or any(a < 1 for a in weights):
        raise ToyStackError("need at least two positive weights")
    modulus = poly((1,))
    for a in weights:
        modulus = poly_mul(modulus, poly([-1] + [0] * (a - 1) + [1]))
    return QuotientRing(modulus)


def wps_euler_class_tangent(weights) -> QuotientRingElement:
    """e^K of the tangent bundle: sum_i prod_{j != i} (1 - x^{-a_j})."""
    weights = tuple(int(a) for a in weights)
    ring = wps_ring(weights)
    total = ring.zero
    for i in range(len(weights)):
        term = ring.one
        for j, a in enumerate(weights):
            if j != i:
                term = term * (ring.one - ring.x_power(-a))
        total = total + term
    return total


def wps_relation_element(weights) -> QuotientRingElement:
    """prod_i (1 - x^{-a_i}), which must vanish in the K-ring."""
    weights = tuple(int(a) for a in weights)
    ring = wps_ring(weights)
    prod = ring.one
    for a in weights:
        prod = prod * (ring.one - ring.x_power(-a))
    return prod


def projective_space_euler_class(n: int) -> QuotientRingElement:
    """(n+1)(1 - x^{-1})^n in K(P^n), the unweighted closed form."""
    ring = wps_ring((1,) * (n + 1))
    return ((ring.one - ring.x_power(-1)) ** n) * (n + 1)


# -- the fixed P(2,3) example ----------------------------------------------


@dataclass(frozen=True)
class ChowP23Element:
    """An element of C[h]/(h^2) + three twisted components for P(2,3)."""

    untwisted: tuple[Cyclotomic, Cyclotomic]  # c0 + c1*h
    twisted: tuple[Cyclotomic, Cyclotomic, Cyclotomic]

    def __mul__(self, other: "ChowP23Element") -> "ChowP23Element":
        a0, a1 = self.untwisted
        b0, b1 = other.untwisted
        return ChowP23Element(
            (a0 * b0, a0 * b1 + a1 * b0),  # truncate mod h^2
            tuple(x * y for x, y in zip(self.twisted, other.twisted)),
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ChowP23Element)
            and all(a == b for a, b in zip(self.untwisted, other.untwisted))
            and all(a == b for a, b in zip(self.twisted, other.twisted))
        )


def orbch_p23(k: int) -> ChowP23Element:
    """Twisted characters of the k-th power of the twisting sheaf on P(2,3).

    The components are ((1+h)^k mod h^2, (-1)^k, zeta_6^k, zeta_6^{5k});
    negative k uses the formal inverse (1+h)^{-1} = 1 - h.
    """
    return ChowP23Element(
        (Cyclotomic.one(), Cyclotomic.from_rational(k)),
        (
            Cyclotomic.from_rational((-1) ** (k % 2)),
            root_of_unity(6, k % 6),
            root_of_unity(6, (5 * k) % 6),
        ),
    )


# -- B(mu_n) moduli counting and the BG Euler pairing -----------------------


def bg_moduli_count(n: int, d: int) -> int:
    """Number of degree-d numerical classes on B(mu_n): C(n+d-1, n-1)."""
    if n < 1 or d < 0:
        raise ToyStackError("need n >= 1 and d >= 0")
    return comb(n + d - 1, n - 1)


def bg_euler_pairing(chi: Character, psi: Character) -> Fraction:
    """The orbifold Euler pairing on BG is exactly the character inner product:
    chi(V, W) = dim Hom(V, W)^G."""
    return char_inner_product(chi, psi)
