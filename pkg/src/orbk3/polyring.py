"""Univariate polynomials over Q and canonical quotient-ring residues.

Polynomials are plain tuples of Fractions in ascending degree, with trailing
zeros stripped; the zero polynomial is the empty tuple.  This flat
representation keeps the cyclotomic and K-theory layers free of any
coefficient-normalization concerns.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Coeffs = tuple[Fraction, ...]


def poly(coeffs: Iterable) -> Coeffs:
    """Normalize a coefficient sequence: Fractions, trailing zeros stripped."""
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_deg(p: Sequence[Fraction]) -> int:
    """Degree, with deg(0) = -1."""
    return len(p) - 1


def poly_add(p: Coeffs, q: Coeffs) -> Coeffs:
    n = max(len(p), len(q))
    return poly(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def poly_neg(p: Coeffs) -> Coeffs:
    return tuple(-c for c in p)


def poly_sub(p: Coeffs, q: Coeffs) -> Coeffs:
    return poly_add(p, poly_neg(q))


def poly_mul(p: Coeffs, q: Coeffs) -> Coeffs:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def poly_scale(p: Coeffs, c) -> Coeffs:
    return poly(Fraction(c) * a for a in p)


def poly_divmod(p: Coeffs, m: Coeffs) -> tuple[Coeffs, Coeffs]:
    """Exact long division over Q.  Raises on a zero divisor."""
    if not m:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quot = [Fraction(0)] * max(len(p) - len(m) + 1, 0)
    lead = m[-1]
    for i in range(len(rem) - len(m), -1, -1):
        c = rem[i + len(m) - 1] / lead
        if c == 0:
            continue
        quot[i] = c
        for j, b in enumerate(m):
            rem[i + j] -= c * b
    return poly(quot), poly(rem)


def poly_mod(p: Coeffs, m: Coeffs) -> Coeffs:
    return poly_divmod(p, m)[1]


def poly_xgcd(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs, Coeffs]:
    """Extended Euclid over Q[x]: returns (s, t, g) with s*a + t*b = g."""
    r0, r1 = a, b
    s0, s1 = poly((1,)), ()
    t0, t1 = (), poly((1,))
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    return s0, t0, r0


def poly_eval(p: Coeffs, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def monomial(k: int, c=1) -> Coeffs:
    """c * x^k."""
    return poly([0] * k + [c])


def format_poly(p: Coeffs, var: str = "x") -> str:
    """Exact ascending-degree print: `1/2 + -3*x^2`; zero prints as `0`."""
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        elif k == 1:
            terms.append(f"{c}*{var}")
        else:
            terms.append(f"{c}*{var}^{k}")
    return " + ".join(terms) if terms else "0"


class QuotientRing:
    """Q[x]/(m) with canonical residues.

    When the modulus has a unit constant term, x is invertible: from
    m(x) = x*q(x) + m(0) we get x^{-1} = -q(x)/m(0).  The inverse is computed
    once and cached, so Laurent-style expressions reduce to plain residues.
    """

    def __init__(self, modulus: Iterable):
        m = poly(modulus)
        if poly_deg(m) < 1:
            raise ValueError("modulus must have degree >= 1")
        self.modulus = m
        self._x_inv: Coeffs | None = None

    def reduce(self, p: Iterable) -> "QuotientRingElement":
        return QuotientRingElement(self, poly_mod(poly(p), self.modulus))

    @property
    def zero(self) -> "QuotientRingElement":
        return QuotientRingElement(self, ())

    @property
    def one(self) -> "QuotientRingElement":
        return self.reduce((1,))

    def x(self) -> "QuotientRingElement":
        return self.reduce(monomial(1))

    def x_inverse(self) -> "QuotientRingElement":
        if self._x_inv is None:
            c0 = self.modulus[0]
            if c0 == 0:
                raise ValueError("x is not invertible: modulus constant term is 0")
            # m(x) = x*q(x) + c0  =>  x * (-q/c0) = 1 mod m
            q = self.modulus[1:]
            self._x_inv = poly_mod(poly_scale(q, Fraction(-1) / c0), self.modulus)
        return QuotientRingElement(self, self._x_inv)

    def x_power(self, k: int) -> "QuotientRingElement":
        """x^k for any integer k, negative exponents via the cached inverse."""
        if k >= 0:
            return self.reduce(monomial(k))
        return self.x_inverse() ** (-k)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotientRing) and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"QuotientRing({format_poly(self.modulus)})"


class QuotientRingElement:
    """Canonical residue in a QuotientRing.  Immutable."""

    __slots__ = ("ring", "residue")

    def __init__(self, ring: QuotientRing, residue: Coeffs):
        self.ring = ring
        self.residue = residue

    def _coerce(self, other) -> "QuotientRingElement":
        if isinstance(other, QuotientRingElement):
            if other.ring != self.ring:
                raise ValueError("quotient-ring mismatch")
            return other
        return self.ring.reduce((Fraction(other),))

    def __add__(self, other):
        other = self._coerce(other)
        return QuotientRingElement(self.ring, poly_add(self.residue, other.residue))

    __radd__ = __add__

    def __neg__(self):
        return QuotientRingElement(self.ring, poly_neg(self.residue))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return QuotientRingElement(
            self.ring, poly_mod(poly_mul(self.residue, other.residue), self.ring.modulus)
        )

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of a general element are not supported")
        acc = self.ring.one
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, QuotientRingElement):
            return self.ring == other.ring and self.residue == other.residue
        if isinstance(other, (int, Fraction)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring, self.residue))

    def is_zero(self) -> bool:
        return not self.residue

    def __repr__(self) -> str:
        return format_poly(self.residue)
