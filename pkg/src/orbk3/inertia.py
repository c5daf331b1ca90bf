"""Fixed-point data for symplectic actions of finite groups on K3 surfaces.

A model records, per nontrivial conjugacy class, the orbits of the fixed
locus: stabilizer order, the differential's eigenvalue (a primitive root of
unity of the representative's order), and orbit multiplicity.  The built-in
cyclic presets encode the known fixed-point counts for symplectic
automorphisms of order 2..8, and every model can be checked against the
exact unit identity

    1/|G| + (1/4) sum 1/(|G_ij| (1 - Re lambda_ij)) = 1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .cyclotomic import Cyclotomic, root_of_unity
from .groups import ConjugacyClass, FiniteGroup, conjugacy_classes, cyclic_group
from .lattice import PicardLattice


class ModelError(ValueError):
    pass


class IdentityError(ModelError):
    """The unit identity failed; carries the exact residual value."""

    def __init__(self, value: Fraction):
        self.value = value
        super().__init__(f"unit identity failed: got {value}, expected 1")


MAX_SYMPLECTIC_ORDER = 8

# Known fixed-point counts f_n for a symplectic automorphism of order n.
FIXED_POINT_TABLE = {2: 8, 3: 6, 4: 4, 5: 4, 6: 2, 7: 3, 8: 2}


def fixed_points_closed_form(n: int) -> int:
    """f_n = (24/n) * prod_{p | n} (1 + 1/p)^{-1}, exact."""
    value = Fraction(24, n)
    for p in range(2, n + 1):
        if n % p == 0 and all(p % q != 0 for q in range(2, p)):
            value /= 1 + Fraction(1, p)
    if value.denominator != 1:
        raise ModelError(f"closed-form fixed point count for n={n} is not integral")
    return int(value)


@dataclass(frozen=True)
class SectorEntry:
    """One orbit family in a twisted sector.

    eig_order/eig_exp give the eigenvalue zeta_{eig_order}^{eig_exp} of the
    group element's differential on the fixed points; multiplicity counts
    identical orbits.
    """

    class_index: int  # index into the nontrivial conjugacy classes
    stabilizer_order: int
    eig_order: int
    eig_exp: int
    multiplicity: int

    def __post_init__(self):
        if self.stabilizer_order < 1 or self.multiplicity < 1:
            raise ModelError("stabilizer order and multiplicity must be positive")
        if self.eig_order < 2:
            raise ModelError("eigenvalue must be a nontrivial root of unity")
        if gcd(self.eig_exp, self.eig_order) != 1:
            raise ModelError(
                f"eigenvalue exponent {self.eig_exp} not coprime to order {self.eig_order}"
            )

    def eigenvalue(self, ambient: int | None = None) -> Cyclotomic:
        return root_of_unity(self.eig_order, self.eig_exp, ambient)

    def to_json(self) -> dict:
        return {
            "class": self.class_index,
            "stabilizer": self.stabilizer_order,
            "eig_order": self.eig_order,
            "eig_exp": self.eig_exp,
            "multiplicity": self.multiplicity,
        }


class K3GModel:
    """A symplectic G-action on K3, at the granularity the pairing consumes."""

    def __init__(
        self,
        group: FiniteGroup,
        sectors,
        lattice: PicardLattice,
        validate: bool = True,
    ):
        self.group = group
        self.classes: tuple[ConjugacyClass, ...] = conjugacy_classes(group)
        self.sectors = tuple(sectors)
        self.lattice = lattice
        n_nontrivial = len(self.classes) - 1
        for s in self.sectors:
            if not (0 <= s.class_index < n_nontrivial):
                raise ModelError(f"sector class index {s.class_index} out of range")
            if group.order % s.stabilizer_order != 0:
                raise ModelError("stabilizer order must divide the group order")
            rep = self.classes[s.class_index + 1].representative
            if group.element_order(rep) != s.eig_order:
                raise ModelError(
                    "eigenvalue order must equal the order of the class representative"
                )
        if validate:
            residual = validate_identity(self)
            if residual != 1:
                raise IdentityError(residual)

    def ambient_order(self) -> int:
        orders = [s.eig_order for s in self.sectors]
        return lcm(*orders) if orders else 1

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "lattice": self.lattice.to_json(),
            "sectors": [s.to_json() for s in self.sectors],
        }

    @classmethod
    def from_json(cls, data: dict, validate: bool = True) -> "K3GModel":
        for key in ("group", "lattice", "sectors"):
            if not isinstance(data, dict) or key not in data:
                raise ModelError(f"model descriptor missing '{key}'")
        group = FiniteGroup.from_json(data["group"])
        lattice = PicardLattice.from_json(data["lattice"])
        sectors = []
        for raw in data["sectors"]:
            for key in ("class", "stabilizer", "eig_order", "eig_exp", "multiplicity"):
                if key not in raw:
                    raise ModelError(f"sector entry missing '{key}'")
            sectors.append(
                SectorEntry(
                    class_index=int(raw["class"]),
                    stabilizer_order=int(raw["stabilizer"]),
                    eig_order=int(raw["eig_order"]),
                    eig_exp=int(raw["eig_exp"]),
                    multiplicity=int(raw["multiplicity"]),
                )
            )
        return cls(group, sectors, lattice, validate=validate)


def load_model(path: str, validate: bool = True) -> K3GModel:
    with open(path) as f:
        return K3GModel.from_json(json.load(f), validate=validate)


def trivial_model(lattice: PicardLattice | None = None) -> K3GModel:
    """The trivial group acting on K3: no twisted sectors."""
    return K3GModel(cyclic_group(1), (), lattice or _default_lattice())


def _default_lattice() -> PicardLattice:
    # minimal rank-1 polarized lattice; the preset identities never consume it
    return PicardLattice([[2]], [1])


def _exact_stabilizer_counts(n: int) -> dict[int, int]:
    """t_d = number of points whose stabilizer is exactly the order-d subgroup.

    Inverts f_m = sum over d with m | d | n of t_d, descending over divisors.
    """
    divs = [d for d in range(2, n + 1) if n % d == 0]
    t: dict[int, int] = {}
    for d in sorted(divs, reverse=True):
        t[d] = FIXED_POINT_TABLE[d] - sum(t[e] for e in divs if e > d and e % d == 0)
    return t


def preset_cyclic(n: int, lattice: PicardLattice | None = None) -> K3GModel:
    """The model for a symplectic automorphism of order n, 2 <= n <= 8.

    The class of g^k carries the eigenvalue zeta_n^k uniformly over its
    orbits.  Points with stabilizer of exact order d contribute t_d * d / n
    orbits with |G_ij| = d to the sector of every power fixing them.
    """
    if not (2 <= n <= MAX_SYMPLECTIC_ORDER):
        raise ModelError(f"cyclic preset requires 2 <= n <= {MAX_SYMPLECTIC_ORDER}")
    t = _exact_stabilizer_counts(n)
    sectors = []
    for k in range(1, n):
        order_k = n // gcd(n, k)
        for d, count in sorted(t.items()):
            if count == 0 or d % order_k != 0:
                continue  # these points are not fixed by g^k
            orbits = count * d // n
            assert count * d % n == 0
            # one entry per orbit, so equivariant classes carry one twisted
            # component per fixed-point orbit
            sectors.extend(
                SectorEntry(
                    class_index=k - 1,
                    stabilizer_order=d,
                    eig_order=order_k,
                    eig_exp=(k // gcd(n, k)) % order_k,
                    multiplicity=1,
                )
                for _ in range(orbits)
            )
    return K3GModel(cyclic_group(n), sectors, lattice or _default_lattice())


def validate_identity(model: K3GModel) -> Fraction:
    """Exact value of 1/|G| + (1/4) sum 1/(|G_ij| (1 - Re lambda_ij))."""
    ambient = model.ambient_order()
    total = Cyclotomic.from_rational(Fraction(1, model.group.order))
    quarter = Fraction(1, 4)
    for s in model.sectors:
        lam = s.eigenvalue(ambient)
        denom = Cyclotomic.one(ambient) - lam.real_part()
        total = total + denom.inverse() * Fraction(s.multiplicity, s.stabilizer_order) * quarter
    return total.as_rational()


def solve_fixed_points_cyclic(n: int) -> int:
    """Recover f_n from the unit identity alone.

    The sector of g^k contributes s_k / (4n (1 - cos(2 pi k/n))) where s_k is
    the number of points fixed by g^k.  Powers of composite order n_k < n
    are substituted recursively; the remaining unknown is |X^G| itself.
    """
    if not (2 <= n <= MAX_SYMPLECTIC_ORDER):
        raise ModelError(f"solver requires 2 <= n <= {MAX_SYMPLECTIC_ORDER}")
    known = Cyclotomic.zero(n)
    unknown_weight = Cyclotomic.zero(n)
    for k in range(1, n):
        order_k = n // gcd(n, k)
        weight = (Cyclotomic.one(n) - root_of_unity(n, k).real_part()).inverse()
        if order_k == n:
            unknown_weight = unknown_weight + weight
        else:
            known = known + weight * solve_fixed_points_cyclic(order_k)
    # 1/n + (known + X * unknown_weight) / (4n) = 1
    rhs = Fraction(4 * n) * (1 - Fraction(1, n)) - known.as_rational()
    count = rhs / unknown_weight.as_rational()
    if count.denominator != 1 or count <= 0:
        raise ModelError(f"fixed point solve for n={n} gave non-integer {count}")
    return int(count)
