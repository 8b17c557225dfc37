"""Naive reference implementations used to cross-check the fast paths.

These deliberately recompute everything from the raw tables with no pruning
and no shared helpers, so a disagreement with the main code paths points at
a real defect on one side.
"""

from __future__ import annotations

from .core import DEFAULT_ENUM_CAP, Semihyperring, Subset
from .ideals import enumerate_hyperideals


def generated_ideal_oracle(S: Semihyperring, X, cap: int = DEFAULT_ENUM_CAP) -> Subset:
    """Literal intersection of every enumerated hyperideal containing X."""
    out = S.carrier
    for I in enumerate_hyperideals(S, cap).ideals:
        if frozenset(X) <= I:
            out &= I
    return out


def hyperring_oracle(S: Semihyperring) -> bool:
    """Direct canonical-hypergroup check on (carrier, add).

    Requires commutativity, associativity, an identity, exactly one opposite
    per element, and reversibility expressed with those opposites.  Computed
    from the raw table, independently of the reversive characterization.
    """
    n = S.order
    add = S.add
    for x in range(n):
        for y in range(n):
            if add[x][y] != add[y][x]:
                return False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                left = set()
                for t in add[x][y]:
                    left |= add[t][z]
                right = set()
                for t in add[y][z]:
                    right |= add[x][t]
                if left != right:
                    return False
    identity = None
    for e in range(n):
        if all(add[e][x] == frozenset((x,)) for x in range(n)):
            identity = e
            break
    if identity is None:
        return False
    neg = {}
    for x in range(n):
        candidates = [y for y in range(n) if identity in add[x][y]]
        if len(candidates) != 1:
            return False
        neg[x] = candidates[0]
    for x in range(n):
        for y in range(n):
            for z in add[x][y]:
                if x not in add[z][neg[y]] or y not in add[neg[x]][z]:
                    return False
    return True


def finite_sums_oracle(S: Semihyperring, P, depth: int) -> Subset:
    """Breadth-first elements of all sums of at most ``depth`` terms from P."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    P = frozenset(P)
    level = P
    seen = set(P)
    for _ in range(depth - 1):
        nxt = set()
        for x in level:
            for p in P:
                nxt |= S.add[x][p]
        seen |= nxt
        level = frozenset(nxt)
    return frozenset(seen)


def stabilized_sums_oracle(S: Semihyperring, P) -> Subset:
    """Double the depth until the breadth-first sum sets stop growing."""
    depth = 1
    current = finite_sums_oracle(S, P, depth)
    while True:
        depth *= 2
        nxt = finite_sums_oracle(S, P, depth)
        if nxt == current:
            return current
        current = nxt
