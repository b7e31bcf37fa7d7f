"""Concrete symmetric-group machinery and generic finite-group brute force.

Permutations are 0-indexed one-line tuples: `g[i]` is the image of point i.
The composition convention is fixed once here and used everywhere:

    compose(g, h)(i) = g(h(i))        # h first, then g

`GroupTable` packages an explicit element list with its group operations so
the class/pair/triple counters below work for any finite group we can list
(symmetric groups here, wreath products in `tricomm.wreath`).
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Callable

from .errors import CapExceeded
from .partitions import Partition, centralizer_order, enumerate_partitions

Perm = tuple[int, ...]

DEFAULT_NAIVE_CAP = 5
DEFAULT_CENT_CAP = 8

# Below this order the commuting-pair counter uses the plain double loop;
# above it, the count is grouped over conjugacy classes (see commuting_pairs).
DIRECT_PAIR_LIMIT = 500


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def compose(g: Perm, h: Perm) -> Perm:
    """Product g*h under the convention (g*h)(i) = g(h(i))."""
    return tuple(map(g.__getitem__, h))


@lru_cache(maxsize=None)
def inverse_perm(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, v in enumerate(g):
        out[v] = i
    return tuple(out)


def perm_cycles(g: Perm) -> list[list[int]]:
    """Disjoint cycles of g, fixed points included, each starting at its
    minimum, ordered by that minimum."""
    seen = [False] * len(g)
    cycles = []
    for start in range(len(g)):
        if seen[start]:
            continue
        cur = start
        cycle = []
        while not seen[cur]:
            seen[cur] = True
            cycle.append(cur)
            cur = g[cur]
        cycles.append(cycle)
    return cycles


def cycle_type(g: Perm) -> Partition:
    """Cycle type of g as a partition of its degree (fixed points count)."""
    return Partition(tuple(sorted((len(c) for c in perm_cycles(g)), reverse=True)))


class GroupTable:
    """An explicitly listed finite group.

    `elements` is a deterministic tuple of hashable values closed under the
    operation; `mul`/`inv` implement the group law; `commutes` is an
    optional short-circuit predicate equivalent to mul(x,y) == mul(y,x);
    `generators`, when given, must generate the group and let conjugacy
    orbits be computed by breadth-first closure instead of full sweeps.
    """

    def __init__(
        self,
        elements: tuple,
        mul: Callable,
        inv: Callable,
        identity,
        name: str = "",
        generators: tuple = (),
        commutes: Callable | None = None,
    ):
        self.elements = tuple(elements)
        self.mul = mul
        self.inv = inv
        self.identity = identity
        self.name = name
        self.generators = tuple(generators)
        self.commutes = commutes if commutes is not None else self._mul_commutes
        self._index: dict | None = None

    def _mul_commutes(self, x, y) -> bool:
        return self.mul(x, y) == self.mul(y, x)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, elem) -> bool:
        return elem in self.index

    @property
    def index(self) -> dict:
        if self._index is None:
            self._index = {g: i for i, g in enumerate(self.elements)}
        return self._index

    def subgroup(self, elements, name: str) -> "GroupTable":
        return GroupTable(
            elements=tuple(elements),
            mul=self.mul,
            inv=self.inv,
            identity=self.identity,
            name=name,
            commutes=self.commutes,
        )


def symmetric_generators(n: int) -> tuple[Perm, ...]:
    if n < 2:
        return ()
    if n == 2:
        return ((1, 0),)
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple(range(1, n)) + (0,)
    return (swap, cycle)


def enumerate_symmetric(n: int, *, cap: int = DEFAULT_CENT_CAP) -> GroupTable:
    """The full symmetric group on n points as a table, in lexicographic
    order of one-line tuples.  n = 0 and n = 1 yield the trivial group."""
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n > cap:
        raise CapExceeded(f"S_{n} with {n}! elements", "symmetric-table cap", cap)
    return GroupTable(
        elements=tuple(itertools.permutations(range(n))),
        mul=compose,
        inv=inverse_perm,
        identity=identity_perm(n),
        name=f"S_{n}",
        generators=symmetric_generators(n),
    )


def centralizer(g, table: GroupTable) -> GroupTable:
    """Sub-table of everything in `table` commuting with g."""
    if g not in table:
        raise ValueError(f"element {g!r} is not in {table.name or 'the table'}")
    commutes = table.commutes
    members = tuple(h for h in table.elements if commutes(g, h))
    return GroupTable(
        elements=members,
        mul=table.mul,
        inv=table.inv,
        identity=table.identity,
        name=f"Cent({table.name})",
        commutes=table.commutes,
    )


@dataclass(frozen=True)
class ConjugacyClasses:
    """Partition of a group table's index range into conjugacy classes.

    Classes are ordered by their smallest element index, which is also the
    chosen representative.
    """

    classes: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)


def conjugacy_classes(table: GroupTable) -> ConjugacyClasses:
    """Orbit partition of the table under conjugation.

    With generators available the orbit of each element is closed under
    conjugation by the generators only (same partition, far fewer products);
    otherwise every element conjugates once per orbit.
    """
    elems = table.elements
    n = len(elems)
    mul, inv = table.mul, table.inv
    index = table.index
    assigned = [False] * n
    classes = []
    reps = []
    if table.generators:
        conjugators = [(s, inv(s)) for s in table.generators]
        for i in range(n):
            if assigned[i]:
                continue
            orbit = {i}
            frontier = [elems[i]]
            assigned[i] = True
            while frontier:
                g = frontier.pop()
                for s, s_inv in conjugators:
                    h = mul(mul(s, g), s_inv)
                    j = index[h]
                    if not assigned[j]:
                        assigned[j] = True
                        orbit.add(j)
                        frontier.append(h)
            classes.append(tuple(sorted(orbit)))
            reps.append(i)
    else:
        inverses = [inv(x) for x in elems]
        for i in range(n):
            if assigned[i]:
                continue
            g = elems[i]
            orbit = {index[mul(mul(x, g), x_inv)] for x, x_inv in zip(elems, inverses)}
            for j in orbit:
                assigned[j] = True
            classes.append(tuple(sorted(orbit)))
            reps.append(i)
    return ConjugacyClasses(classes=tuple(classes), representatives=tuple(reps))


def commuting_pairs(table: GroupTable, *, direct_limit: int = DIRECT_PAIR_LIMIT) -> int:
    """Number of ordered pairs (g, h) with g*h = h*g, counted by direct
    commutation tests.

    Small tables get the plain double loop.  Larger ones group the count
    over conjugacy classes -- |Cent(g)| is constant along a class, so the
    sum of centralizer sizes is (class size) * (directly counted centralizer
    of one representative), summed over classes.  Both routes are exact and
    agree (tested); neither consults the class-count identity being verified.
    """
    elems = table.elements
    commutes = table.commutes
    n = len(elems)
    if n <= direct_limit:
        total = n  # every element commutes with itself
        for i in range(n):
            g = elems[i]
            for j in range(i + 1, n):
                if commutes(g, elems[j]):
                    total += 2
        return total
    cc = conjugacy_classes(table)
    total = 0
    for cls, rep_idx in zip(cc.classes, cc.representatives):
        rep = elems[rep_idx]
        cent = sum(1 for h in elems if commutes(rep, h))
        total += len(cls) * cent
    return total


def triples_naive(n: int, *, cap: int = DEFAULT_NAIVE_CAP) -> int:
    """Count ordered triples of pairwise-commuting permutations of n points
    by direct enumeration.

    Per element, the set of commuting partners is stored as a bitmask built
    from explicit commutation tests; a triple (a, b, c) is counted by
    intersecting the masks of a commuting pair (a, b).
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n > cap:
        raise CapExceeded(f"naive triple count over ({n}!)^3", "naive cap", cap)
    table = enumerate_symmetric(n, cap=cap)
    elems = table.elements
    commutes = table.commutes
    size = len(elems)
    masks = [0] * size
    for i in range(size):
        masks[i] |= 1 << i
        g = elems[i]
        for j in range(i + 1, size):
            if commutes(g, elems[j]):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    total = 0
    for i in range(size):
        m = masks[i]
        rest = m
        while rest:
            low = rest & -rest
            j = low.bit_length() - 1
            total += (m & masks[j]).bit_count()
            rest ^= low
    return total


def triples_centralizer(n: int, *, cap: int = DEFAULT_CENT_CAP) -> int:
    """Count ordered pairwise-commuting triples in S_n via centralizers.

    Triples whose first element is g are in bijection with commuting pairs
    of Cent(g), and that count is constant along the conjugacy class of g,
    so the total is sum over cycle types of
    (class size) * commuting_pairs(Cent(representative)).
    """
    if n < 0:
        raise ValueError(f"degree must be >= 0, got {n}")
    if n > cap:
        raise CapExceeded(f"centralizer triple count in S_{n}", "centralizer cap", cap)
    table = enumerate_symmetric(n, cap=cap)
    n_fact = factorial(n)
    total = 0
    for ct in enumerate_partitions(n):
        rep = permutation_of_type(ct)
        class_size = n_fact // centralizer_order(ct)
        cent = centralizer(rep, table)
        total += class_size * commuting_pairs(cent)
    return total


def permutation_of_type(ct: Partition) -> Perm:
    """Canonical permutation with the given cycle type: consecutive cycles
    on 0..n-1, largest first."""
    images = list(range(ct.size))
    start = 0
    for length in ct.parts:
        for k in range(length):
            images[start + k] = start + (k + 1) % length
        start += length
    return tuple(images)
