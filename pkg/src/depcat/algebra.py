"""One-object categories from finite algebra: rings under addition, monoids."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import InvalidSpec, NotARing
from .fincat import FinCat


@dataclass(frozen=True)
class Ring:
    """A finite commutative ring on ``{0, ..., n-1}`` given by its tables."""

    add: tuple
    mul: tuple
    zero: int = 0
    one: int = 1

    @property
    def size(self) -> int:
        return len(self.add)

    @property
    def elements(self) -> range:
        return range(self.size)

    def plus(self, x, y) -> int:
        return self.add[x][y]

    def times(self, x, y) -> int:
        return self.mul[x][y]

    def neg(self, x) -> int:
        return next(y for y in self.elements if self.add[x][y] == self.zero)


def zmod(n: int) -> Ring:
    if n < 1:
        raise InvalidSpec(f"modulus must be positive, got {n}")
    add = tuple(tuple((x + y) % n for y in range(n)) for x in range(n))
    mul = tuple(tuple((x * y) % n for y in range(n)) for x in range(n))
    return Ring(add, mul, 0, 1 % n)


def ring_axiom_violation(R: Ring):
    """First violated axiom as ``(name, elements)``, or None."""
    n = len(R.add)
    if len(R.mul) != n or any(len(row) != n for row in R.add + R.mul):
        return ("shape", ())
    if any(not 0 <= v < n for row in R.add + R.mul for v in row):
        return ("closure", ())
    if not (0 <= R.zero < n and 0 <= R.one < n):
        return ("constants", (R.zero, R.one))
    E = range(n)
    for x in E:
        if R.add[R.zero][x] != x:
            return ("additive identity", (x,))
        if R.mul[R.one][x] != x:
            return ("multiplicative identity", (x,))
        if not any(R.add[x][y] == R.zero for y in E):
            return ("additive inverse", (x,))
    for x, y in itertools.product(E, E):
        if R.add[x][y] != R.add[y][x]:
            return ("additive commutativity", (x, y))
        if R.mul[x][y] != R.mul[y][x]:
            return ("multiplicative commutativity", (x, y))
    for x, y, z in itertools.product(E, E, E):
        if R.add[R.add[x][y]][z] != R.add[x][R.add[y][z]]:
            return ("additive associativity", (x, y, z))
        if R.mul[R.mul[x][y]][z] != R.mul[x][R.mul[y][z]]:
            return ("multiplicative associativity", (x, y, z))
        if R.mul[x][R.add[y][z]] != R.add[R.mul[x][y]][R.mul[x][z]]:
            return ("distributivity", (x, y, z))
    return None


def validate_ring(R: Ring) -> Ring:
    bad = ring_axiom_violation(R)
    if bad is not None:
        name, elems = bad
        raise NotARing(f"ring axiom violated: {name} at {elems}")
    return R


class RingCategory(FinCat):
    """One object ``*``; arrows are ring elements; ``g o f = g + f``."""

    def __init__(self, R: Ring):
        validate_ring(R)
        self.ring = R
        n = R.size
        comp = np.array(R.add, dtype=np.int32).reshape(n, n)
        super().__init__(["*"], [(str(x), 0, 0) for x in range(n)], [R.zero], comp)

    def _rebuild(self, comp):
        return FinCat._rebuild(self, comp)


def ring_category(R: Ring) -> RingCategory:
    return RingCategory(R)


def monoid_category(table, unit: int | None = None, name: str = "*") -> FinCat:
    """One-object category of a finite monoid; ``table[g][f] = g o f``."""
    n = len(table)
    if any(len(row) != n for row in table) or any(not 0 <= v < n for row in table for v in row):
        raise InvalidSpec("monoid table must be square with entries in range")
    if unit is None:
        units = [e for e in range(n) if all(table[e][x] == x == table[x][e] for x in range(n))]
        if not units:
            raise InvalidSpec("monoid table has no unit")
        unit = units[0]
    for x, y, z in itertools.product(range(n), repeat=3):
        if table[x][table[y][z]] != table[table[x][y]][z]:
            raise InvalidSpec(f"monoid table not associative at {(x, y, z)}")
    comp = np.array(table, dtype=np.int32).reshape(n, n)
    return FinCat([name], [(str(x), 0, 0) for x in range(n)], [unit], comp)


def discrete_category(n: int) -> FinCat:
    objs = [f"o{i}" for i in range(n)]
    arrows = [(f"1_o{i}", i, i) for i in range(n)]
    return FinCat(objs, arrows, list(range(n)), {(i, i): i for i in range(n)})


def poset_category(elements, leq) -> FinCat:
    """Thin category of a finite poset; ``leq(x, y)`` gives an arrow ``x -> y``."""
    elements = list(elements)
    n = len(elements)
    for i in range(n):
        if not leq(elements[i], elements[i]):
            raise InvalidSpec(f"relation not reflexive at {elements[i]}")
        for j in range(n):
            if i != j and leq(elements[i], elements[j]) and leq(elements[j], elements[i]):
                raise InvalidSpec(f"relation not antisymmetric at {elements[i]}, {elements[j]}")
            for k in range(n):
                if leq(elements[i], elements[j]) and leq(elements[j], elements[k]) and not leq(elements[i], elements[k]):
                    raise InvalidSpec(f"relation not transitive at {elements[i]}, {elements[j]}, {elements[k]}")
    arrows, index = [], {}
    for i in range(n):
        for j in range(n):
            if leq(elements[i], elements[j]):
                index[(i, j)] = len(arrows)
                arrows.append((f"{elements[i]}<={elements[j]}", i, j))
    comp = {}
    for (i, j), f in index.items():
        for (j2, k), g in index.items():
            if j2 == j:
                comp[(g, f)] = index[(i, k)]
    return FinCat([str(e) for e in elements], arrows, [index[(i, i)] for i in range(n)], comp)


def chain_poset(n: int) -> FinCat:
    return poset_category(range(n), lambda x, y: x <= y)


def divisor_poset(n: int) -> FinCat:
    """Divisors of ``n`` under divisibility; meets are gcds, so products exist."""
    if n < 1:
        raise InvalidSpec("divisor poset needs n >= 1")
    divs = [d for d in range(1, n + 1) if n % d == 0]
    return poset_category(divs, lambda x, y: y % x == 0)


def relation_poset(elements, pairs) -> FinCat:
    """Poset from a list of ``(x, y)`` meaning ``x <= y`` (reflexive closure added)."""
    rel = {(x, y) for x, y in pairs} | {(x, x) for x in elements}
    return poset_category(elements, lambda x, y: (x, y) in rel)
