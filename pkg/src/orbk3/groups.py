"""Finite groups via Cayley tables, conjugacy data, and character theory.

Character values live in Q(zeta_E) where E is the exponent of the group, so
inner products and invariant dimensions come out exact.  Only abelian
character tables are computed internally; nonabelian tables (e.g. S3) are
supplied externally and validated by orthogonality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .cyclotomic import Cyclotomic, format_cyclotomic, parse_cyclotomic, root_of_unity


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group presented by its Cayley table.

    cayley[i][j] is the index of the product of elements i and j.  The table
    is validated on construction: closure, identity, inverses, associativity.
    """

    def __init__(self, cayley, labels=None):
        table = tuple(tuple(row) for row in cayley)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise GroupError("Cayley table must be a nonempty square matrix")
        if any(not (0 <= v < n) for row in table for v in row):
            raise GroupError("Cayley table entries out of range")
        identity = None
        for e in range(n):
            if all(table[e][j] == j and table[j][e] == j for j in range(n)):
                identity = e
                break
        if identity is None:
            raise GroupError("no identity element")
        inverses = [None] * n
        for i in range(n):
            for j in range(n):
                if table[i][j] == identity and table[j][i] == identity:
                    inverses[i] = j
                    break
            if inverses[i] is None:
                raise GroupError(f"element {i} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if table[table[a][b]][c] != table[a][table[b][c]]:
                        raise GroupError("Cayley table is not associative")
        self.cayley = table
        self.order = n
        self.identity = identity
        self.inverses = tuple(inverses)
        self.labels = tuple(labels) if labels else tuple(f"g{i}" for i in range(n))
        if len(self.labels) != n:
            raise GroupError("label count does not match group order")

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def inv(self, i: int) -> int:
        return self.inverses[i]

    def element_order(self, i: int) -> int:
        k, cur = 1, i
        while cur != self.identity:
            cur = self.mul(cur, i)
            k += 1
        return k

    def exponent(self) -> int:
        return lcm(*(self.element_order(i) for i in range(self.order)))

    def is_abelian(self) -> bool:
        return all(
            self.cayley[i][j] == self.cayley[j][i]
            for i in range(self.order)
            for j in range(i)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and self.cayley == other.cayley

    def __hash__(self) -> int:
        return hash(self.cayley)

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order})"

    # -- JSON descriptor ------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "cayley": [list(row) for row in self.cayley],
            "labels": list(self.labels),
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteGroup":
        if not isinstance(data, dict) or "cayley" not in data:
            raise GroupError("group descriptor must contain a 'cayley' table")
        g = cls(data["cayley"], data.get("labels"))
        if "order" in data and data["order"] != g.order:
            raise GroupError("declared order does not match Cayley table")
        return g


def cyclic_group(n: int) -> FiniteGroup:
    """Z/nZ with element i representing g^i."""
    if n < 1:
        raise GroupError("n must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["1"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
    return FiniteGroup(table, labels)


def direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    n, m = g.order, h.order
    table = [
        [
            g.mul(a // m, b // m) * m + h.mul(a % m, b % m)
            for b in range(n * m)
        ]
        for a in range(n * m)
    ]
    labels = [f"({g.labels[a // m]},{h.labels[a % m]})" for a in range(n * m)]
    return FiniteGroup(table, labels)


def symmetric_group_s3() -> FiniteGroup:
    """S3 as permutations of {0,1,2}; used as the nonabelian test table."""
    perms = [(0, 1, 2), (1, 2, 0), (2, 0, 1), (1, 0, 2), (0, 2, 1), (2, 1, 0)]
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[k]] for k in range(3))] for q in perms] for p in perms
    ]
    return FiniteGroup(table, ["e", "r", "r2", "s", "sr", "sr2"])


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]
    centralizer_order: int


def conjugacy_classes(g: FiniteGroup) -> tuple[ConjugacyClass, ...]:
    """Conjugacy partition: identity class first, then by smallest member."""
    seen = set()
    classes = []
    for rep in range(g.order):
        if rep in seen:
            continue
        members = sorted({g.mul(g.mul(h, rep), g.inv(h)) for h in range(g.order)})
        seen.update(members)
        centralizer = g.order // len(members)
        classes.append(ConjugacyClass(members[0], tuple(members), centralizer))
    classes.sort(key=lambda c: (c.representative != g.identity, c.members[0]))
    for c in classes:
        assert len(c.members) * c.centralizer_order == g.order
    return tuple(classes)


def class_index_of(classes, element: int) -> int:
    for i, c in enumerate(classes):
        if element in c.members:
            return i
    raise GroupError(f"element {element} not in any class")


class Character:
    """A class function on a group with cyclotomic values, one per class."""

    def __init__(self, group: FiniteGroup, values):
        self.group = group
        self.classes = conjugacy_classes(group)
        vals = tuple(
            v if isinstance(v, Cyclotomic) else Cyclotomic.from_rational(v)
            for v in values
        )
        if len(vals) != len(self.classes):
            raise GroupError("one value per conjugacy class required")
        self.values = vals

    def value_at_element(self, element: int) -> Cyclotomic:
        return self.values[class_index_of(self.classes, element)]

    def degree(self) -> Cyclotomic:
        return self.values[0]

    def _check(self, other: "Character"):
        if self.group != other.group:
            raise GroupError("characters belong to different groups")

    def __add__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, Character):
            self._check(other)
            return Character(
                self.group, [a * b for a, b in zip(self.values, other.values)]
            )
        return Character(self.group, [v * other for v in self.values])

    __rmul__ = __mul__

    def dual(self) -> "Character":
        """chi^vee(g) = chi(g^{-1}); equals conjugation for genuine characters."""
        vals = [self.value_at_element(self.group.inv(c.representative)) for c in self.classes]
        return Character(self.group, vals)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Character)
            and self.group == other.group
            and all(a == b for a, b in zip(self.values, other.values))
        )

    def __repr__(self) -> str:
        return "Character(" + ", ".join(map(repr, self.values)) + ")"


def trivial_character(g: FiniteGroup) -> Character:
    return Character(g, [1] * len(conjugacy_classes(g)))


def regular_character(g: FiniteGroup) -> Character:
    classes = conjugacy_classes(g)
    return Character(g, [g.order if c.representative == g.identity else 0 for c in classes])


def abelian_character_table(g: FiniteGroup) -> tuple[Character, ...]:
    """All |G| irreducible characters of an abelian group.

    Characters are built by extending along a chain of cyclic extensions;
    values are powers of zeta_E with E the exponent of G, tracked as integer
    exponents so everything stays exact.
    """
    if not g.is_abelian():
        raise GroupError("internal character tables only for abelian groups")
    e = g.exponent()
    # each character: tuple of exponents a_i with chi(i) = zeta_E^{a_i}
    subgroup = [g.identity]
    chars: list[dict[int, int]] = [{g.identity: 0}]
    while len(subgroup) < g.order:
        gen = next(i for i in range(g.order) if i not in subgroup)
        # k = index of <subgroup, gen> over subgroup
        k, cur = 1, gen
        while cur not in subgroup:
            cur = g.mul(cur, gen)
            k += 1
        anchor = cur  # gen^k, inside the current subgroup
        new_subgroup = []
        power = g.identity
        powers = []
        for _ in range(k):
            powers.append(power)
            power = g.mul(power, gen)
        for h in subgroup:
            for p in powers:
                new_subgroup.append(g.mul(h, p))
        new_chars = []
        for chi in chars:
            b = chi[anchor]
            # solve k*a = b (mod E); solvable with exactly k solutions
            assert b % k == 0
            a0 = (b // k) % e
            step = e // k
            for t in range(k):
                a = (a0 + t * step) % e
                ext = dict(chi)
                for h in subgroup:
                    cur = h
                    exp_pow = 0
                    for p in powers:
                        ext[g.mul(h, p)] = (chi[h] + exp_pow) % e
                        exp_pow += a
                new_chars.append(ext)
        subgroup = new_subgroup
        chars = new_chars
    classes = conjugacy_classes(g)
    table = []
    for chi in chars:
        vals = [root_of_unity(e, chi[c.representative]) for c in classes]
        table.append(Character(g, vals))
    # deterministic order: by exponent vector over class representatives
    table.sort(key=lambda ch: tuple(chi_sort_key(ch)))
    return tuple(table)


def chi_sort_key(ch: Character):
    return tuple(tuple(c.coeffs) for c in ch.values)


def char_inner_product(chi: Character, psi: Character) -> Fraction:
    """<chi, psi> = (1/|G|) sum_g chi(g^{-1}) psi(g), via centralizer weights."""
    chi._check(psi)
    g = chi.group
    total = Cyclotomic.zero()
    for i, c in enumerate(chi.classes):
        inv_val = chi.value_at_element(g.inv(c.representative))
        total = total + inv_val * psi.values[i] * Fraction(1, c.centralizer_order)
    return total.as_rational()


def char_inner_product_elementwise(chi: Character, psi: Character) -> Fraction:
    """Independent form of the pairing: direct sum over all group elements."""
    chi._check(psi)
    g = chi.group
    total = Cyclotomic.zero()
    for h in range(g.order):
        total = total + chi.value_at_element(g.inv(h)) * psi.value_at_element(h)
    return (total * Fraction(1, g.order)).as_rational()


def invariant_dimension(chi: Character) -> Fraction:
    """dim V^G = (1/|G|) sum_g chi(g); must be a non-negative integer."""
    total = Cyclotomic.zero()
    for i, c in enumerate(chi.classes):
        total = total + chi.values[i] * len(c.members)
    dim = (total * Fraction(1, chi.group.order)).as_rational()
    if dim.denominator != 1 or dim < 0:
        raise GroupError(f"invariant dimension {dim} is not a non-negative integer")
    return dim


def character_table_to_json(table) -> dict:
    group = table[0].group
    return {
        "group": group.to_json(),
        "characters": [[format_cyclotomic(v) for v in ch.values] for ch in table],
    }


def character_table_from_json(data: dict) -> tuple[Character, ...]:
    group = FiniteGroup.from_json(data["group"])
    table = tuple(
        Character(group, [parse_cyclotomic(s) for s in row])
        for row in data["characters"]
    )
    validate_orthogonality(table)
    return table


def validate_orthogonality(table) -> None:
    """Row orthogonality check for externally supplied tables."""
    for i, chi in enumerate(table):
        for j, psi in enumerate(table):
            expected = Fraction(1 if i == j else 0)
            got = char_inner_product(chi, psi)
            if got != expected:
                raise GroupError(
                    f"character table fails orthogonality at ({i},{j}): {got}"
                )


def load_group(path: str) -> FiniteGroup:
    with open(path) as f:
        return FiniteGroup.from_json(json.load(f))
