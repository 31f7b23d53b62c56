"""Concrete finite groups and exhaustive subgroup enumeration.

Groups are multiplication tables over element indices 0..order-1.  The
profinite Galois group only ever enters through a finite image, so cyclic
subgroups of that image stand in for its procyclic subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .config import max_group_order
from .errors import InputError, SizeError


class FiniteGroup:
    """Finite group given by its full multiplication table.

    `table[i, j]` is the index of the product of elements i and j.
    Instances are immutable; equality and hashing are structural.
    """

    __slots__ = ("order", "table", "identity", "generators", "_inverse", "_elem_order", "_hash")

    def __init__(self, table, generators, *, _validated: bool = False):
        t = np.asarray(table, dtype=np.int64)
        n = t.shape[0]
        if t.shape != (n, n):
            raise InputError("multiplication table must be square")
        if n == 0:
            raise InputError("empty group")
        if t.min() < 0 or t.max() >= n:
            raise InputError("table entries out of range")
        identity = None
        for e in range(n):
            if np.array_equal(t[e, :], np.arange(n)) and np.array_equal(t[:, e], np.arange(n)):
                identity = e
                break
        if identity is None:
            raise InputError("table has no identity element")
        if not _validated:
            # associativity, row by row to bound memory
            for i in range(n):
                if not np.array_equal(t[t[i, :], :], t[i, t]):
                    raise InputError("table is not associative")
        inverse = np.full(n, -1, dtype=np.int64)
        for i in range(n):
            js = np.nonzero(t[i, :] == identity)[0]
            if len(js) != 1 or t[js[0], i] != identity:
                raise InputError(f"element {i} has no two-sided inverse")
            inverse[i] = js[0]
        gens = tuple(int(g) for g in generators)
        if any(g < 0 or g >= n for g in gens):
            raise InputError("generator index out of range")
        if self._closure_of(t, identity, gens) != set(range(n)):
            raise InputError("declared generators do not generate the group")
        t.flags.writeable = False
        inverse.flags.writeable = False
        self.order = n
        self.table = t
        self.identity = identity
        self.generators = gens
        self._inverse = inverse
        orders = np.zeros(n, dtype=np.int64)
        for g in range(n):
            k, x = 1, g
            while x != identity:
                x = int(t[x, g])
                k += 1
            orders[g] = k
        orders.flags.writeable = False
        self._elem_order = orders
        self._hash = hash((n, t.tobytes(), gens))

    @staticmethod
    def _closure_of(table, identity, gens) -> set[int]:
        seen = {identity}
        frontier = [identity]
        while frontier:
            new = []
            for x in frontier:
                for s in gens:
                    y = int(table[s, x])
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return seen

    # -- basic queries -------------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self._inverse[a])

    def element_order(self, a: int) -> int:
        return int(self._elem_order[a])

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^{-1}."""
        return self.mul(self.mul(g, x), self.inv(g))

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return (
            self.order == other.order
            and self.generators == other.generators
            and np.array_equal(self.table, other.table)
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, generators={self.generators})"

    # -- subgroup helpers ----------------------------------------------------

    def subgroup(self, elements) -> "Subgroup":
        elems = tuple(sorted(set(int(x) for x in elements)))
        closed = self._closure_subset(elems)
        if closed != set(elems):
            raise InputError("element set is not closed under the group law")
        return Subgroup(self, elems, self._is_cyclic_set(elems))

    def _closure_subset(self, elems) -> set[int]:
        seen = set(elems) | {self.identity}
        frontier = list(seen)
        while frontier:
            new = []
            for x in frontier:
                for s in elems:
                    for y in (self.mul(s, x), self.inv(x)):
                        if y not in seen:
                            seen.add(y)
                            new.append(y)
            frontier = new
        return seen

    def _is_cyclic_set(self, elems) -> bool:
        return any(self.element_order(g) == len(elems) for g in elems)

    def cyclic_subgroup(self, g: int) -> "Subgroup":
        elems = [self.identity]
        x = g
        while x != self.identity:
            elems.append(x)
            x = self.mul(x, g)
        return Subgroup(self, tuple(sorted(elems)), True)

    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,), True)

    def full_subgroup(self) -> "Subgroup":
        return Subgroup(self, tuple(range(self.order)), self._is_cyclic_set(tuple(range(self.order))))


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of a parent group, stored as a sorted element-index set."""

    parent: FiniteGroup = field(compare=False)
    elements: tuple[int, ...]
    is_cyclic: bool

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in set(self.elements)

    def is_full(self) -> bool:
        return self.order == self.parent.order

    def generator(self) -> int:
        """An element generating the subgroup (cyclic subgroups only)."""
        for g in self.elements:
            if self.parent.element_order(g) == self.order:
                return g
        raise InputError("subgroup is not cyclic")

    def small_generating_set(self) -> tuple[int, ...]:
        """Greedy generating set: largest element order first, deterministic."""
        if self.order == 1:
            return ()
        G = self.parent
        if self.is_full():
            return G.generators
        gens: list[int] = []
        covered = {G.identity}
        while len(covered) < self.order:
            best = min(
                (g for g in self.elements if g not in covered),
                key=lambda g: (-G.element_order(g), g),
            )
            gens.append(best)
            covered = G._closure_subset(tuple(gens))
        return tuple(gens)

    def as_group(self) -> tuple[FiniteGroup, dict[int, int]]:
        """Re-index as a standalone group; returns (group, parent->local map)."""
        index = {g: i for i, g in enumerate(self.elements)}
        n = self.order
        table = np.zeros((n, n), dtype=np.int64)
        for a in self.elements:
            for b in self.elements:
                table[index[a], index[b]] = index[self.parent.mul(a, b)]
        gens = [index[g] for g in self.small_generating_set()]
        return FiniteGroup(table, gens, _validated=True), index

    def conjugate_by(self, g: int) -> "Subgroup":
        G = self.parent
        elems = tuple(sorted(G.conjugate(g, x) for x in self.elements))
        return Subgroup(G, elems, self.is_cyclic)


def group_from_permutations(degree: int, gens, *, max_order: int | None = None) -> FiniteGroup:
    """Group generated by permutations of {0..degree-1}.

    Each generator maps position i to gen[i].  The multiplication table is
    built on the closure; its size is capped.
    """
    cap = max_order if max_order is not None else max_group_order()
    perms = []
    for g in gens:
        p = tuple(int(x) for x in g)
        if len(p) != degree or sorted(p) != list(range(degree)):
            raise InputError(f"not a permutation of 0..{degree - 1}: {g!r}")
        perms.append(p)
    identity = tuple(range(degree))
    elements = [identity]
    seen = {identity: 0}
    frontier = [identity]
    while frontier:
        new = []
        for x in frontier:
            for p in perms:
                y = tuple(p[x[i]] for i in range(degree))  # p after x
                if y not in seen:
                    if len(elements) >= cap:
                        raise SizeError(f"closure exceeds the configured bound ({cap})")
                    seen[y] = len(elements)
                    elements.append(y)
                    new.append(y)
        frontier = new
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = seen[tuple(a[b[k]] for k in range(degree))]  # a after b
    gen_idx = [seen[p] for p in perms]
    return FiniteGroup(table, gen_idx, _validated=True)


def all_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Every subgroup, duplicate-free, smallest first.

    Iterated closure of pairwise joins seeded from the cyclic subgroups;
    every subgroup is a join of cyclic ones, so this is exhaustive.
    """
    if G.order > max_group_order():
        raise SizeError(f"subgroup enumeration capped at order {max_group_order()}")
    found: dict[tuple[int, ...], Subgroup] = {}
    for s in cyclic_subgroups(G):
        found[s.elements] = s
    frontier = list(found.values())
    while frontier:
        new: list[Subgroup] = []
        items = sorted(found.values(), key=lambda s: (s.order, s.elements))
        for a in frontier:
            for b in items:
                if set(b.elements) <= set(a.elements):
                    continue
                elems = tuple(sorted(G._closure_subset(tuple(set(a.elements) | set(b.elements)))))
                if elems not in found:
                    sub = Subgroup(G, elems, G._is_cyclic_set(elems))
                    found[elems] = sub
                    new.append(sub)
        frontier = new
    return sorted(found.values(), key=lambda s: (s.order, s.elements))


def cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    """Subgroups generated by single elements, deduplicated."""
    out: dict[tuple[int, ...], Subgroup] = {}
    for g in range(G.order):
        s = G.cyclic_subgroup(g)
        out.setdefault(s.elements, s)
    return sorted(out.values(), key=lambda s: (s.order, s.elements))


def subgroup_conjugacy_classes(G: FiniteGroup) -> list[tuple[Subgroup, int]]:
    """(representative, class size) per conjugacy class of subgroups.

    Representatives are the lexicographically least element sets; classes are
    sorted by (order, representative) so downstream outputs are deterministic.
    """
    subs = all_subgroups(G)
    seen: set[tuple[int, ...]] = set()
    classes: list[tuple[Subgroup, int]] = []
    by_elems = {s.elements: s for s in subs}
    for s in subs:
        if s.elements in seen:
            continue
        orbit = {s.elements}
        for g in range(G.order):
            orbit.add(s.conjugate_by(g).elements)
        rep_elems = min(orbit)
        classes.append((by_elems[rep_elems], len(orbit)))
        seen |= orbit
    return sorted(classes, key=lambda t: (t[0].order, t[0].elements))


def cyclic_subgroup_classes(G: FiniteGroup) -> list[Subgroup]:
    """One representative per conjugacy class of cyclic subgroups."""
    return [rep for rep, _ in subgroup_conjugacy_classes(G) if rep.is_cyclic]


# ---------------------------------------------------------------------------
# named groups used by the catalog and the test-suite
# ---------------------------------------------------------------------------


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise InputError("cyclic group order must be >= 1")
    if n == 1:
        return trivial_group()
    cycle = tuple((i + 1) % n for i in range(n))
    return group_from_permutations(n, [cycle])


def trivial_group() -> FiniteGroup:
    return FiniteGroup(np.zeros((1, 1), dtype=np.int64), [], _validated=True)


def klein_four_group() -> FiniteGroup:
    return group_from_permutations(4, [(1, 0, 3, 2), (2, 3, 0, 1)])


def symmetric_group_3() -> FiniteGroup:
    return group_from_permutations(3, [(1, 2, 0), (1, 0, 2)])


def dihedral_group_4() -> FiniteGroup:
    return group_from_permutations(4, [(1, 2, 3, 0), (3, 2, 1, 0)])


def quaternion_group() -> FiniteGroup:
    # left-regular representation on {1, i, j, k, -1, -i, -j, -k}
    mul = {}
    units = ["1", "i", "j", "k"]

    def q_mul(a, b):
        sa, xa = a
        sb, xb = b
        if xa == "1":
            return (sa * sb, xb)
        if xb == "1":
            return (sa * sb, xa)
        if xa == xb:
            return (-sa * sb, "1")
        order = {("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}
        s, x = order[(xa, xb)]
        return (sa * sb * s, x)

    elements = [(s, x) for s in (1, -1) for x in units]
    index = {e: i for i, e in enumerate(elements)}
    perm_i = tuple(index[q_mul((1, "i"), e)] for e in elements)
    perm_j = tuple(index[q_mul((1, "j"), e)] for e in elements)
    return group_from_permutations(8, [perm_i, perm_j])


def alternating_group_4() -> FiniteGroup:
    return group_from_permutations(4, [(1, 2, 0, 3), (1, 0, 3, 2)])


NAMED_GROUPS = {
    "C2": lambda: cyclic_group(2),
    "C3": lambda: cyclic_group(3),
    "C4": lambda: cyclic_group(4),
    "V4": klein_four_group,
    "C6": lambda: cyclic_group(6),
    "S3": symmetric_group_3,
    "D4": dihedral_group_4,
    "Q8": quaternion_group,
    "A4": alternating_group_4,
}
