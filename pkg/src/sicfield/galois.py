"""Automorphisms of Q(u, r) and the structure of its Galois group.

An automorphism is pinned down by where it sends the two generators.
The images must satisfy the defining relations: the image of u must be
a root of the degree-8 minimal polynomial, and the image of r must
satisfy the quadratic r^2 + c r + 1 = 0 with c = 2/x transported
through the map. The four standard generators are

    g1: u -> 1/u, r -> r        (complex conjugation)
    g2: u -> -u,  r -> -r
    g3: u -> u,   r -> 1/r
    g4: u -> r,   r -> u

and they generate a group of order 16 isomorphic to Z2 x D8. Products
compose right to left: (sigma * phi)(e) = sigma(phi(e)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .tower import (
    FieldElement,
    constant,
    defining_relations_hold,
    substitute_with_powers,
)

__all__ = [
    "Automorphism",
    "StructureCertificate",
    "standard_generators",
    "generate_group",
    "multiplication_table",
    "element_order",
    "order_census",
    "center",
    "is_abelian",
    "is_normal",
    "certify_structure",
    "action_table",
    "fixed_subfield_check",
]


@dataclass(frozen=True)
class Automorphism:
    """A field automorphism given by the images of u and r."""

    image_u: FieldElement
    image_r: FieldElement

    def __post_init__(self) -> None:
        if not defining_relations_hold(self.image_u, self.image_r):
            raise ValueError("images do not satisfy the tower relations")

    @classmethod
    def unchecked(cls, image_u: FieldElement, image_r: FieldElement) -> Automorphism:
        """Build without the relation checks. Only for experiments; the
        group closure guards against the damage this can do."""
        self = object.__new__(cls)
        object.__setattr__(self, "image_u", image_u)
        object.__setattr__(self, "image_r", image_r)
        return self

    @classmethod
    def identity(cls) -> Automorphism:
        return cls.unchecked(constant("u"), constant("r"))

    def is_identity(self) -> bool:
        return self.image_u == constant("u") and self.image_r == constant("r")

    @property
    def _u_powers(self) -> tuple[FieldElement, ...]:
        powers = _POWER_CACHE.get(self.image_u.coords)
        if powers is None:
            acc = [FieldElement.one()]
            for _ in range(7):
                acc.append(acc[-1] * self.image_u)
            powers = tuple(acc)
            _POWER_CACHE[self.image_u.coords] = powers
        return powers

    def apply(self, elem: FieldElement) -> FieldElement:
        """Image of a field element under the automorphism."""
        return substitute_with_powers(elem, self._u_powers, self.image_r)

    def __mul__(self, other: Automorphism) -> Automorphism:
        """Composition, other first: (self * other)(e) = self(other(e))."""
        if not isinstance(other, Automorphism):
            return NotImplemented
        return Automorphism.unchecked(
            self.apply(other.image_u), self.apply(other.image_r),
        )

    def __pow__(self, n: int) -> Automorphism:
        if n < 0:
            return self.inverse() ** (-n)
        result = Automorphism.identity()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> Automorphism:
        power = self
        previous = Automorphism.identity()
        for _ in range(16):
            if power.is_identity():
                return previous
            previous = power
            power = power * self
        raise ValueError("element has no finite order; not an automorphism")

    def __repr__(self) -> str:
        return f"<Automorphism u -> {self.image_u}, r -> {self.image_r}>"


_POWER_CACHE: dict[tuple, tuple[FieldElement, ...]] = {}


def standard_generators() -> dict[str, Automorphism]:
    u = constant("u")
    r = constant("r")
    return {
        "g1": Automorphism(u.inverse(), r),
        "g2": Automorphism(-u, -r),
        "g3": Automorphism(u, r.inverse()),
        "g4": Automorphism(r, u),
    }


def _key(g: Automorphism) -> tuple:
    return (g.image_u.coords, g.image_r.coords)


def generate_group(generators: Sequence[Automorphism],
                   max_order: int = 10_000) -> list[Automorphism]:
    """Closure of the generators under composition, BFS order.

    Aborts once the closure exceeds max_order elements, which signals
    that some "generator" was not actually an automorphism.
    """
    identity = Automorphism.identity()
    elements = {_key(identity): identity}
    frontier = [identity]
    for g in generators:
        if _key(g) not in elements:
            elements[_key(g)] = g
            frontier.append(g)
    while frontier:
        current = frontier.pop(0)
        for g in generators:
            product = g * current
            k = _key(product)
            if k not in elements:
                elements[k] = product
                frontier.append(product)
                if len(elements) > max_order:
                    raise RuntimeError(
                        "group closure exceeded the safety bound; "
                        "a generator is not a field automorphism"
                    )
    return list(elements.values())


def multiplication_table(group: Sequence[Automorphism]) -> list[list[int]]:
    """Index table: table[i][j] = k with group[i] * group[j] = group[k]."""
    index = {_key(g): k for k, g in enumerate(group)}
    table = []
    for a in group:
        row = []
        for b in group:
            k = index.get(_key(a * b))
            if k is None:
                raise ValueError("sequence is not closed under composition")
            row.append(k)
        table.append(row)
    return table


def element_order(g: Automorphism) -> int:
    power = g
    for order in range(1, 17):
        if power.is_identity():
            return order
        power = power * g
    raise ValueError("element order exceeds the field degree")


def order_census(group: Sequence[Automorphism]) -> dict[int, int]:
    census: dict[int, int] = {}
    for g in group:
        order = element_order(g)
        census[order] = census.get(order, 0) + 1
    return census


def is_abelian(group: Sequence[Automorphism]) -> bool:
    table = multiplication_table(group)
    n = len(group)
    return all(table[i][j] == table[j][i] for i in range(n) for j in range(i))


def center(group: Sequence[Automorphism]) -> list[Automorphism]:
    table = multiplication_table(group)
    n = len(group)
    return [
        group[i] for i in range(n)
        if all(table[i][j] == table[j][i] for j in range(n))
    ]


def is_normal(group: Sequence[Automorphism],
              subgroup: Sequence[Automorphism]) -> bool:
    sub_keys = {_key(h) for h in subgroup}
    return all(
        _key(g * h * g.inverse()) in sub_keys
        for g in group for h in subgroup
    )


def _closure_indices(table: list[list[int]], identity: int,
                     gens: Sequence[int]) -> set[int]:
    elements = {identity, *gens}
    frontier = list(elements)
    while frontier:
        a = frontier.pop()
        for b in list(elements):
            for prod in (table[a][b], table[b][a]):
                if prod not in elements:
                    elements.add(prod)
                    frontier.append(prod)
    return elements


@dataclass(frozen=True)
class StructureCertificate:
    """Evidence that a group of order 16 is Z2 x D8.

    The census separates candidates, the dihedral subgroup with its
    five involutions rules out the quaternion alternative, and a
    central involution outside it splits the group as a direct product.
    """

    order: int
    census: dict[int, int]
    abelian: bool
    isomorphism_type: str | None
    central_involution: int | None
    dihedral_generators: tuple[int, int] | None

    @property
    def certified(self) -> bool:
        return self.isomorphism_type is not None


def certify_structure(group: Sequence[Automorphism]) -> StructureCertificate:
    """Decide whether the group is Z2 x D8 and return the evidence."""
    order = len(group)
    census = order_census(group)
    abelian = is_abelian(group)
    failed = StructureCertificate(order, census, abelian, None, None, None)
    if order != 16 or abelian or census != {1: 1, 2: 11, 4: 4}:
        return failed
    table = multiplication_table(group)
    identity = next(k for k, g in enumerate(group) if g.is_identity())
    orders = {k: element_order(g) for k, g in enumerate(group)}
    central = [
        k for k in range(order)
        if orders[k] == 2 and all(table[k][j] == table[j][k] for j in range(order))
    ]
    for z in central:
        for a in range(order):
            for b in range(a):
                sub = _closure_indices(table, identity, [a, b])
                if len(sub) != 8 or z in sub:
                    continue
                if all(table[i][j] == table[j][i] for i in sub for j in sub):
                    continue
                involutions = sum(1 for k in sub if orders[k] == 2)
                if involutions == 5:
                    return StructureCertificate(
                        order, census, abelian, "Z2 x D8", z, (b, a),
                    )
    return failed


def action_table(group: Sequence[Automorphism],
                 elements: Mapping[str, FieldElement]) -> list[dict[str, FieldElement]]:
    """Row per group element: the exact image of each named element."""
    return [
        {name: g.apply(elem) for name, elem in elements.items()}
        for g in group
    ]


def fixed_subfield_check(subgroup: Sequence[Automorphism],
                         elem: FieldElement) -> bool:
    """True when every automorphism in the subgroup fixes the element."""
    return all(g.apply(elem) == elem for g in subgroup)
