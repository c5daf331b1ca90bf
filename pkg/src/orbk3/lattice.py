"""Mukai lattice of a polarized K3 surface.

Picard Gram matrices, Mukai vectors with the pairing v0*w2 - v1*w1 + v2*w0,
Hilbert polynomials and slopes for the fixed polarization, and the
hypothesis predicates used to decide when moduli of stable sheaves are
smooth irreducible symplectic manifolds.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .polyring import Coeffs, poly, poly_eval, poly_scale

INFINITE_SLOPE = "infinity"


class LatticeError(ValueError):
    pass


class PicardLattice:
    """A sublattice of NS(X) with a fixed ample class.

    The Gram matrix must be symmetric with even diagonal (the K3
    intersection form is even) and the ample class must have positive
    self-intersection.
    """

    def __init__(self, gram, ample):
        g = tuple(tuple(int(x) for x in row) for row in gram)
        rank = len(g)
        if any(len(row) != rank for row in g):
            raise LatticeError("Gram matrix must be square")
        for i in range(rank):
            if g[i][i] % 2 != 0:
                raise LatticeError("K3 intersection form must be even")
            for j in range(rank):
                if g[i][j] != g[j][i]:
                    raise LatticeError("Gram matrix must be symmetric")
        h = tuple(int(x) for x in ample)
        if len(h) != rank:
            raise LatticeError("ample class length must equal rank")
        self.gram = g
        self.rank = rank
        self.ample = h
        if rank > 0 and self.intersect(h, h) <= 0:
            raise LatticeError("ample class must have positive self-intersection")

    def intersect(self, a, b) -> int:
        a, b = tuple(a), tuple(b)
        if len(a) != self.rank or len(b) != self.rank:
            raise LatticeError("class length does not match lattice rank")
        return sum(a[i] * self.gram[i][j] * b[j] for i in range(self.rank) for j in range(self.rank))

    def degree(self, a) -> int:
        """(a . h) against the fixed polarization."""
        return self.intersect(a, self.ample)

    @property
    def h_squared(self) -> int:
        return self.intersect(self.ample, self.ample)

    def zero_class(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PicardLattice)
            and self.gram == other.gram
            and self.ample == other.ample
        )

    def __hash__(self):
        return hash((self.gram, self.ample))

    def to_json(self) -> dict:
        return {"rank": self.rank, "gram": [list(r) for r in self.gram], "ample": list(self.ample)}

    @classmethod
    def from_json(cls, data: dict) -> "PicardLattice":
        if not isinstance(data, dict) or "gram" not in data or "ample" not in data:
            raise LatticeError("lattice descriptor needs 'gram' and 'ample'")
        lat = cls(data["gram"], data["ample"])
        if "rank" in data and data["rank"] != lat.rank:
            raise LatticeError("declared rank does not match Gram matrix")
        return lat


def elliptic_k3_lattice() -> PicardLattice:
    """Rank-2 lattice with (s^2) = -2, (s.f) = 1, (f^2) = 0 and h = s + 3f."""
    return PicardLattice([[-2, 1], [1, 0]], [1, 3])


def fermat_quotient_lattice() -> PicardLattice:
    """Rank-1 lattice with (h^2) = 16, the quartic polarization pulled back by O(2)."""
    return PicardLattice([[16]], [1])


@dataclass(frozen=True)
class MukaiVector:
    """v = (r, c1, s) with c1 a coordinate vector in a fixed Picard lattice."""

    r: int
    c1: tuple[int, ...]
    s: int

    def __post_init__(self):
        object.__setattr__(self, "c1", tuple(int(x) for x in self.c1))

    def dual(self) -> "MukaiVector":
        return MukaiVector(self.r, tuple(-x for x in self.c1), self.s)

    def __add__(self, other: "MukaiVector") -> "MukaiVector":
        return MukaiVector(
            self.r + other.r,
            tuple(a + b for a, b in zip(self.c1, other.c1)),
            self.s + other.s,
        )

    def scale(self, k: int) -> "MukaiVector":
        return MukaiVector(k * self.r, tuple(k * x for x in self.c1), k * self.s)

    def is_primitive(self) -> bool:
        g = gcd(gcd(self.r, self.s), gcd(*self.c1) if self.c1 else 0)
        return g == 1

    def to_json(self) -> dict:
        return {"r": self.r, "c1": list(self.c1), "s": self.s}

    @classmethod
    def from_json(cls, data: dict) -> "MukaiVector":
        for key in ("r", "c1", "s"):
            if key not in data:
                raise LatticeError(f"Mukai vector descriptor missing '{key}'")
        return cls(int(data["r"]), tuple(data["c1"]), int(data["s"]))


def mukai_pairing(lattice: PicardLattice, v: MukaiVector, w: MukaiVector) -> int:
    """<v, w> = r_v s_w - (c1_v . c1_w) + s_v r_w."""
    return v.r * w.s - lattice.intersect(v.c1, w.c1) + v.s * w.r


def is_numerical(p: Coeffs, window: int = 3) -> bool:
    """Integrality of p at integers, checked on -window..window."""
    return all(poly_eval(p, z).denominator == 1 for z in range(-window, window + 1))


def hilbert_polynomial(lattice: PicardLattice, v: MukaiVector) -> Coeffs:
    """P(z) = r (h^2)/2 z^2 + (c1 . h) z + r + s for the fixed polarization."""
    p = poly(
        [
            Fraction(v.r + v.s),
            Fraction(lattice.degree(v.c1)),
            Fraction(v.r * lattice.h_squared, 2),
        ]
    )
    if not is_numerical(p):
        raise LatticeError(f"Hilbert polynomial is not numerical: {p}")
    return p


def reduced_hilbert_polynomial(p: Coeffs) -> Coeffs:
    """P divided by its leading coefficient (monic normalization)."""
    if not p:
        raise LatticeError("reduced Hilbert polynomial of the zero polynomial")
    return poly_scale(p, Fraction(1) / p[-1])


def degree_and_slope(lattice: PicardLattice, v: MukaiVector):
    """(deg, slope) with slope = deg/r, or the infinity sentinel when r = 0."""
    d = lattice.degree(v.c1)
    if v.r == 0:
        return d, INFINITE_SLOPE
    return d, Fraction(d, v.r)


def poly_leq_eventually(p: Coeffs, q: Coeffs) -> bool:
    """p(z) <= q(z) for z >> 0: sign of the top coefficient of q - p."""
    from .polyring import poly_sub

    diff = poly_sub(q, p)
    return not diff or diff[-1] > 0


@dataclass(frozen=True)
class HypothesisReport:
    """Predicates feeding the smoothness and deformation-type statements."""

    positive_rank: bool
    primitive: bool
    degree: int
    positive_degree: bool
    gcd_r_d_is_one: bool
    gcd_r_d_s_is_one: bool
    generic_polarization: bool
    main_theorem_hypotheses: bool
    smoothness_hypotheses: bool

    def to_json(self) -> dict:
        return {
            "positive_rank": self.positive_rank,
            "primitive": self.primitive,
            "degree": self.degree,
            "positive_degree": self.positive_degree,
            "gcd_r_d_is_one": self.gcd_r_d_is_one,
            "gcd_r_d_s_is_one": self.gcd_r_d_s_is_one,
            "generic_polarization": self.generic_polarization,
            "main_theorem_hypotheses": self.main_theorem_hypotheses,
            "smoothness_hypotheses": self.smoothness_hypotheses,
        }


def check_hypotheses(
    lattice: PicardLattice, v: MukaiVector, generic: bool = False
) -> HypothesisReport:
    """Evaluate the numerical hypotheses for v against the fixed polarization.

    Genericity of the polarization is an input flag: wall avoidance is an
    assumption, never computed here.  gcd follows gcd(a, 0) = |a|.
    """
    d = lattice.degree(v.c1)
    primitive = v.is_primitive()
    positive_rank = v.r > 0
    gcd_rd = gcd(v.r, d) == 1
    gcd_rds = gcd(gcd(v.r, d), v.s) == 1
    main = positive_rank and primitive and generic and (d > 0 or gcd_rd)
    # the smoothness statement accepts either gcd(r,d,s) = 1 or
    # (primitive + generic polarization)
    smooth = gcd_rds or (primitive and generic)
    return HypothesisReport(
        positive_rank=positive_rank,
        primitive=primitive,
        degree=d,
        positive_degree=d > 0,
        gcd_r_d_is_one=gcd_rd,
        gcd_r_d_s_is_one=gcd_rds,
        generic_polarization=generic,
        main_theorem_hypotheses=main,
        smoothness_hypotheses=smooth,
    )


def load_lattice(path: str) -> PicardLattice:
    with open(path) as f:
        return PicardLattice.from_json(json.load(f))
