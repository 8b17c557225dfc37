"""Exhaustive catalog of valid structures of a given small order, reduced to
canonical representatives under relabelings that fix zero."""

from __future__ import annotations

from itertools import permutations, product

from .core import (
    Semihyperring,
    SizeLimitError,
    _witness_add_associativity,
    _witness_left_distributivity,
    _witness_mul_associativity,
    _witness_right_distributivity,
)

CATALOG_MAX_ORDER = 3


def detect_unity(mul, n):
    for u in range(n):
        if all(mul[u][x] == x and mul[x][u] == x for x in range(n)):
            return u
    return None


def _encode(add, mul, n):
    return (
        tuple(tuple(tuple(sorted(add[i][j])) for j in range(n)) for i in range(n)),
        tuple(tuple(mul[i]) for i in range(n)),
    )


def _relabel(add, mul, n, perm):
    # perm maps old index -> new index and fixes zero at 0
    new_add = [[None] * n for _ in range(n)]
    new_mul = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            new_add[perm[i]][perm[j]] = frozenset(perm[t] for t in add[i][j])
            new_mul[perm[i]][perm[j]] = perm[mul[i][j]]
    return new_add, new_mul


def is_canonical(add, mul, n) -> bool:
    """True when the table encoding is minimal over all zero-fixing relabelings."""
    own = _encode(add, mul, n)
    for tail in permutations(range(1, n)):
        perm = (0,) + tail
        if perm == tuple(range(n)):
            continue
        radd, rmul = _relabel(add, mul, n, perm)
        if _encode(radd, rmul, n) < own:
            return False
    return True


def catalog(order: int, commutative: bool = False, with_unity: bool = False) -> list[Semihyperring]:
    """Every valid structure of the given order, one canonical representative
    per isomorphism class, in deterministic encoding order.

    The search is exhaustive over all tables, so it is limited to very small
    orders; the zero row of the addition and the zero row and column of the
    multiplication are forced by the axioms and not enumerated.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if order > CATALOG_MAX_ORDER:
        raise SizeLimitError(
            f"catalog search is exhaustive over tables and supports order "
            f"<= {CATALOG_MAX_ORDER}")
    n = order
    if n == 1:
        return [Semihyperring([[frozenset((0,))]], [[0]], zero=0, unity=0,
                              name="C1_000", labels=("0",))]

    nonzero = range(1, n)
    subsets = [frozenset(i for i in range(n) if mask >> i & 1)
               for mask in range(1, 1 << n)]
    add_cells = [(i, j) for i in nonzero for j in nonzero if i <= j]
    mul_cells = [(i, j) for i in nonzero for j in nonzero]

    results = []
    for add_choice in product(subsets, repeat=len(add_cells)):
        add = [[None] * n for _ in range(n)]
        for x in range(n):
            add[0][x] = add[x][0] = frozenset((x,))
        for (i, j), cell in zip(add_cells, add_choice):
            add[i][j] = add[j][i] = cell
        if _witness_add_associativity(add, n) is not None:
            continue
        for mul_choice in product(range(n), repeat=len(mul_cells)):
            mul = [[0] * n for _ in range(n)]
            for (i, j), value in zip(mul_cells, mul_choice):
                mul[i][j] = value
            if _witness_mul_associativity(mul, n) is not None:
                continue
            if _witness_left_distributivity(add, mul, n) is not None:
                continue
            if _witness_right_distributivity(add, mul, n) is not None:
                continue
            if not is_canonical(add, mul, n):
                continue
            results.append((add, mul, detect_unity(mul, n)))

    # sequence numbers are assigned before filtering, so a structure keeps
    # its name across --commutative / --with-unity runs
    out = []
    for seq, (add, mul, unity) in enumerate(results):
        if commutative and any(mul[i][j] != mul[j][i] for i, j in mul_cells):
            continue
        if with_unity and unity is None:
            continue
        S = Semihyperring(add, mul, zero=0, unity=unity,
                          name=f"C{order}_{seq:03d}")
        assert S.is_valid
        out.append(S)
    return out
