"""Builders for canonical example structures and corpus families.

Two constructions carry the theory's running examples: the semihyperring of
open sets of a finite topology (A+B = {A∪B}, A·B = A∩B) and the quotient of
Z_n by a subgroup N of its unit group, whose classes xN add multivaluedly.
``direct_product`` supplies extra corpus variety.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import Semihyperring, subset_sort_key


class TopologyError(ValueError):
    """The open-set family violates a topology closure property."""


class SubgroupError(ValueError):
    """The residue set is not a subgroup of the units of Z_n."""


@dataclass(frozen=True)
class FiniteTopology:
    """Open-set family on points {1..point_count}."""

    point_count: int
    opens: tuple[frozenset, ...]

    def validate(self):
        full = frozenset(range(1, self.point_count + 1))
        family = set(self.opens)
        if len(family) != len(self.opens):
            raise TopologyError("duplicate open set in family")
        for U in family:
            if not U <= full:
                raise TopologyError(f"open set {sorted(U)} not within the point set")
        if frozenset() not in family:
            raise TopologyError("empty set missing from the family")
        if full not in family:
            raise TopologyError("full set missing from the family")
        for U in sorted(family, key=subset_sort_key):
            for V in sorted(family, key=subset_sort_key):
                if U | V not in family:
                    raise TopologyError(
                        f"family not closed under union: {sorted(U)} | {sorted(V)}")
                if U & V not in family:
                    raise TopologyError(
                        f"family not closed under intersection: {sorted(U)} & {sorted(V)}")


@dataclass(frozen=True)
class QuotientSpec:
    """Modulus n and a subgroup of the unit group of Z_n."""

    modulus: int
    subgroup: frozenset

    def validate(self):
        n = self.modulus
        N = self.subgroup
        if n < 2:
            raise SubgroupError("modulus must be at least 2")
        for x in sorted(N):
            if not isinstance(x, int) or not 0 <= x < n:
                raise SubgroupError(f"residue {x!r} out of range for modulus {n}")
            if gcd(x, n) != 1:
                raise SubgroupError(f"residue {x} is not a unit modulo {n}")
        if 1 not in N:
            raise SubgroupError("subgroup must contain 1")
        for a in sorted(N):
            for b in sorted(N):
                if (a * b) % n not in N:
                    raise SubgroupError(
                        f"not closed under product: {a}*{b}={(a * b) % n} not in subgroup")
            if not any((a * b) % n == 1 for b in N):
                raise SubgroupError(f"no inverse for {a} in subgroup")


def from_topology(T: FiniteTopology, name: str | None = None) -> Semihyperring:
    """Semihyperring of opens: singleton-union addition, intersection product.

    Opens are ordered by (size, points); the empty set (index 0) is the zero
    and the full set the unity.
    """
    T.validate()
    opens = sorted(T.opens, key=subset_sort_key)
    index = {U: i for i, U in enumerate(opens)}
    n = len(opens)
    add = [[frozenset((index[opens[i] | opens[j]],)) for j in range(n)] for i in range(n)]
    mul = [[index[opens[i] & opens[j]] for j in range(n)] for i in range(n)]
    full = frozenset(range(1, T.point_count + 1))
    S = Semihyperring(add, mul, zero=index[frozenset()], unity=index[full],
                      name=name or f"TOP{T.point_count}")
    return S


def quotient_hyperring(spec: QuotientSpec, name: str | None = None) -> Semihyperring:
    """Quotient of Z_n by the orbits of a unit subgroup N.

    Classes are the orbits xN, labeled by their minimum residue and ordered
    ascending, so the zero class comes first.  Addition of two classes is the
    set of classes meeting their elementwise sum; multiplication is the class
    of any representative product.
    """
    spec.validate()
    n = spec.modulus
    N = sorted(spec.subgroup)
    orbit_of = {}
    orbits = []
    for x in range(n):
        if x in orbit_of:
            continue
        orbit = frozenset((x * u) % n for u in N)
        idx = len(orbits)
        orbits.append(orbit)
        for y in orbit:
            orbit_of[y] = idx
    k = len(orbits)
    add = []
    for i in range(k):
        row = []
        for j in range(k):
            sums = {(a + b) % n for a in orbits[i] for b in orbits[j]}
            row.append(frozenset(orbit_of[s] for s in sums))
        add.append(row)
    mul = [[orbit_of[(min(orbits[i]) * min(orbits[j])) % n] for j in range(k)]
           for i in range(k)]
    labels = [str(min(orbit)) for orbit in orbits]
    if name is None:
        name = f"Z{n}N{'.'.join(str(u) for u in N)}"
    return Semihyperring(add, mul, zero=0, unity=orbit_of[1], name=name, labels=labels)


def direct_product(S1: Semihyperring, S2: Semihyperring, name: str | None = None) -> Semihyperring:
    """Componentwise product; addition cells are Cartesian subset products."""
    o1, o2 = S1.order, S2.order

    def pack(a, b):
        return a * o2 + b

    n = o1 * o2
    add = [[None] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for a1 in range(o1):
        for b1 in range(o2):
            i = pack(a1, b1)
            for a2 in range(o1):
                cell1 = S1.add[a1][a2]
                mrow1 = S1.mul[a1][a2]
                for b2 in range(o2):
                    j = pack(a2, b2)
                    cell2 = S2.add[b1][b2]
                    add[i][j] = frozenset(pack(x, y) for x in cell1 for y in cell2)
                    mul[i][j] = pack(mrow1, S2.mul[b1][b2])
    unity = None
    if S1.unity is not None and S2.unity is not None:
        unity = pack(S1.unity, S2.unity)
    labels = [f"{S1.labels[a]}.{S2.labels[b]}" for a in range(o1) for b in range(o2)]
    return Semihyperring(add, mul, zero=pack(S1.zero, S2.zero), unity=unity,
                         name=name or f"{S1.name}x{S2.name}", labels=labels)


# -- fixtures ------------------------------------------------------------


def top2() -> Semihyperring:
    """Order-3 open-set structure on 2 points: opens {}, {1}, {1,2}."""
    T = FiniteTopology(2, (frozenset(), frozenset((1,)), frozenset((1, 2))))
    return from_topology(T, name="TOP2")


def kq5() -> Semihyperring:
    """Quotient of Z_5 by N={1,4}: classes {0}, {1,4}, {2,3}."""
    return quotient_hyperring(QuotientSpec(5, frozenset((1, 4))), name="KQ5")


def kq6() -> Semihyperring:
    """Quotient of Z_6 by N={1,5}: classes {0}, {1,5}, {2,4}, {3}."""
    return quotient_hyperring(QuotientSpec(6, frozenset((1, 5))), name="KQ6")


def zero1() -> Semihyperring:
    """The one-element structure."""
    return Semihyperring([[frozenset((0,))]], [[0]], zero=0, name="ZERO1", labels=("0",))


def m3_lattice_example() -> Semihyperring:
    """Order-4 structure whose hyperideals form the nondistributive lattice M3.

    Addition: x+x={x}, x+y={1,2,3} for distinct nonzero x,y; multiplication is
    identically zero.  Its three atom ideals {0,i} are irreducible but not
    strongly irreducible, which defeats the finite-intersection identity of
    the spectrum construction; useful for exercising counterexample paths.
    """
    full = frozenset((1, 2, 3))
    add = [[None] * 4 for _ in range(4)]
    for x in range(4):
        add[0][x] = add[x][0] = frozenset((x,))
    for x in range(1, 4):
        for y in range(1, 4):
            add[x][y] = frozenset((x,)) if x == y else full
    mul = [[0] * 4 for _ in range(4)]
    return Semihyperring(add, mul, zero=0, name="M3EX")


# -- corpus families ------------------------------------------------------


def all_topologies(point_count: int) -> list[FiniteTopology]:
    """Every labeled topology on {1..point_count}, deterministically ordered."""
    full = frozenset(range(1, point_count + 1))
    subsets = []
    for mask in range(1 << point_count):
        subsets.append(frozenset(p for p in range(1, point_count + 1) if mask >> (p - 1) & 1))
    subsets.sort(key=subset_sort_key)
    middle = [s for s in subsets if s not in (frozenset(), full)]
    found = []
    for mask in range(1 << len(middle)):
        family = {frozenset(), full}
        for i, s in enumerate(middle):
            if mask >> i & 1:
                family.add(s)
        ok = True
        for U in family:
            for V in family:
                if U | V not in family or U & V not in family:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(FiniteTopology(point_count, tuple(sorted(family, key=subset_sort_key))))
    found.sort(key=lambda T: (len(T.opens), tuple(subset_sort_key(U) for U in T.opens)))
    return found


def unit_group(n: int) -> list[int]:
    return [x for x in range(1, n) if gcd(x, n) == 1]


def unit_subgroups(n: int) -> list[frozenset]:
    """All subgroups of the unit group of Z_n, ordered by (size, members)."""
    units = unit_group(n)
    out = []
    for mask in range(1 << len(units)):
        members = frozenset(units[i] for i in range(len(units)) if mask >> i & 1)
        if 1 not in members:
            continue
        if all((a * b) % n in members for a in members for b in members):
            out.append(members)
    out.sort(key=subset_sort_key)
    return out
