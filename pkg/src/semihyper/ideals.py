"""Hyperideal predicates, generated/principal/sum/product/annihilator ideals,
and exhaustive enumeration of the hyperideal lattice."""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_ENUM_CAP,
    EmptyOperandError,
    HypothesisError,
    PreconditionError,
    Semihyperring,
    SizeLimitError,
    Subset,
    subset_sort_key,
)


def is_left_hyperideal(S: Semihyperring, I) -> bool:
    """Nonempty, closed under member sums, and under left multiplication by R."""
    if not I:
        raise EmptyOperandError("hyperideal predicates require a nonempty subset")
    for x in I:
        row = S.add[x]
        for y in I:
            if not row[y] <= I:
                return False
    for a in I:
        for r in range(S.order):
            if S.mul[r][a] not in I:
                return False
    return True


def is_right_hyperideal(S: Semihyperring, I) -> bool:
    if not I:
        raise EmptyOperandError("hyperideal predicates require a nonempty subset")
    for x in I:
        row = S.add[x]
        for y in I:
            if not row[y] <= I:
                return False
    for a in I:
        row = S.mul[a]
        for r in range(S.order):
            if row[r] not in I:
                return False
    return True


def is_hyperideal(S: Semihyperring, I) -> bool:
    return is_left_hyperideal(S, I) and is_right_hyperideal(S, I)


def is_subsemihyperring(S: Semihyperring, T) -> bool:
    """Nonempty and closed under both operations."""
    if not T:
        raise EmptyOperandError("subsemihyperring test requires a nonempty subset")
    for a in T:
        arow = S.add[a]
        mrow = S.mul[a]
        for b in T:
            if not arow[b] <= T or mrow[b] not in T:
                return False
    return True


@dataclass(frozen=True)
class IdealLattice:
    """All hyperideals of a structure with their containment order.

    ``ideals`` is sorted by (size, lexicographic); ``contains[i][j]`` holds
    when ideals[i] is a subset of ideals[j].
    """

    structure: Semihyperring
    ideals: tuple[Subset, ...]
    contains: tuple[tuple[bool, ...], ...]

    def __len__(self):
        return len(self.ideals)

    def index(self, I) -> int:
        table = self.__dict__.get("_index")
        if table is None:
            table = {ideal: i for i, ideal in enumerate(self.ideals)}
            object.__setattr__(self, "_index", table)
        return table[I]

    def proper(self) -> tuple[Subset, ...]:
        carrier = self.structure.carrier
        return tuple(I for I in self.ideals if I != carrier)

    def minimal_over(self, I) -> tuple[Subset, ...]:
        """Ideals minimal among those properly containing I."""
        above = [J for J in self.ideals if I < J]
        return tuple(J for J in above if not any(I < K < J for K in above))


def enumerate_hyperideals(S: Semihyperring, cap: int = DEFAULT_ENUM_CAP) -> IdealLattice:
    """Brute-force scan of all subsets containing zero, cached per structure.

    Subsets are visited in ascending integer encoding (bit i = element i) and
    rejected at the first closure violation.
    """
    cached = S._cache.get("lattice")
    if cached is not None:
        return cached
    if S.order > cap:
        raise SizeLimitError(
            f"order {S.order} exceeds the enumeration cap {cap}; raise it with --cap")
    n = S.order
    zbit = 1 << S.zero
    found = []
    for mask in range(1 << n):
        if not mask & zbit:
            continue
        subset = frozenset(i for i in range(n) if mask >> i & 1)
        if _ideal_quick(S, subset):
            found.append(subset)
    found.sort(key=subset_sort_key)
    contains = tuple(tuple(a <= b for b in found) for a in found)
    lattice = IdealLattice(S, tuple(found), contains)
    assert frozenset((S.zero,)) in lattice.ideals and S.carrier in lattice.ideals
    S._cache["lattice"] = lattice
    return lattice


def _ideal_quick(S, I):
    for x in I:
        row = S.add[x]
        for y in I:
            if not row[y] <= I:
                return False
    for a in I:
        mrow = S.mul[a]
        for r in range(S.order):
            if S.mul[r][a] not in I or mrow[r] not in I:
                return False
    return True


def enumerate_one_sided(S: Semihyperring, side: str, cap: int = DEFAULT_ENUM_CAP) -> tuple[Subset, ...]:
    """All left or right hyperideals, sorted canonically; cached."""
    key = ("one_sided", side)
    cached = S._cache.get(key)
    if cached is not None:
        return cached
    if S.order > cap:
        raise SizeLimitError(
            f"order {S.order} exceeds the enumeration cap {cap}; raise it with --cap")
    pred = is_left_hyperideal if side == "left" else is_right_hyperideal
    n = S.order
    zbit = 1 << S.zero
    found = []
    for mask in range(1 << n):
        if not mask & zbit:
            continue
        subset = frozenset(i for i in range(n) if mask >> i & 1)
        if pred(S, subset):
            found.append(subset)
    found.sort(key=subset_sort_key)
    result = tuple(found)
    S._cache[key] = result
    return result


def ideal_generated(S: Semihyperring, X) -> Subset:
    """Least hyperideal containing X, by fixpoint closure from X ∪ {zero}."""
    if not X:
        raise EmptyOperandError("ideal_generated requires a nonempty generating set")
    current = set(X)
    current.add(S.zero)
    changed = True
    while changed:
        changed = False
        members = sorted(current)
        for a in members:
            arow = S.add[a]
            for b in members:
                cell = arow[b]
                if not cell <= current:
                    current |= cell
                    changed = True
            mrow = S.mul[a]
            for r in range(S.order):
                for t in (mrow[r], S.mul[r][a]):
                    if t not in current:
                        current.add(t)
                        changed = True
    return frozenset(current)


def principal_right(S: Semihyperring, a: int) -> Subset:
    """Smallest right hyperideal containing a: sums closure of {a*r : r in R}."""
    if S.unity is None:
        raise HypothesisError("principal one-sided ideals require a declared unity")
    products = frozenset(S.mul[a][r] for r in range(S.order))
    return S.finite_sums_closure(products)


def principal_left(S: Semihyperring, a: int) -> Subset:
    if S.unity is None:
        raise HypothesisError("principal one-sided ideals require a declared unity")
    products = frozenset(S.mul[r][a] for r in range(S.order))
    return S.finite_sums_closure(products)


def _require_ideal(S, I, role):
    if not I:
        raise EmptyOperandError(f"{role} must be nonempty")
    if not is_hyperideal(S, I):
        raise PreconditionError(f"{role} {S.subset_repr(I)} is not a hyperideal")


def ideal_sum(S: Semihyperring, A, B) -> Subset:
    """Subset sum of two hyperideals: the smallest hyperideal containing both."""
    _require_ideal(S, A, "left summand")
    _require_ideal(S, B, "right summand")
    return S.subset_add(A, B)


def sum_closure_of_products(S: Semihyperring, A, B) -> Subset:
    """Elements of finite sums of one product a*b each, a in A, b in B."""
    if not A or not B:
        raise EmptyOperandError("product set requires nonempty operands")
    return S.finite_sums_closure(S.subset_mul(A, B))


def ideal_product(S: Semihyperring, I, J) -> Subset:
    """Product set IJ: finite sums of products; reported as a set, since it
    need not be two-sided when the factors are one-sided."""
    _require_ideal(S, I, "left factor")
    _require_ideal(S, J, "right factor")
    return sum_closure_of_products(S, I, J)


def left_annihilator(S: Semihyperring, A) -> Subset:
    """{r : r*a = 0 for every a in A}."""
    if not A:
        raise EmptyOperandError("annihilator requires a nonempty subset")
    z = S.zero
    return frozenset(r for r in range(S.order)
                     if all(S.mul[r][a] == z for a in A))


def right_annihilator(S: Semihyperring, A) -> Subset:
    if not A:
        raise EmptyOperandError("annihilator requires a nonempty subset")
    z = S.zero
    return frozenset(r for r in range(S.order)
                     if all(S.mul[a][r] == z for a in A))


def subsemihyperring_plus_ideal(S: Semihyperring, T, I) -> Subset:
    """Subset sum T+I for a subsemihyperring T and hyperideal I."""
    if not T:
        raise EmptyOperandError("subsemihyperring must be nonempty")
    if not is_subsemihyperring(S, T):
        raise PreconditionError(f"{S.subset_repr(T)} is not a subsemihyperring")
    _require_ideal(S, I, "ideal")
    out = S.subset_add(T, I)
    if not is_subsemihyperring(S, out):
        raise RuntimeError(f"internal error: {S.subset_repr(out)} is not closed")
    return out


def restrict(S: Semihyperring, T) -> tuple[Semihyperring, dict]:
    """Structure induced on a subsemihyperring T containing zero.

    Returns the restricted structure and the map from S-indices to indices
    of the restriction.
    """
    if S.zero not in T:
        raise PreconditionError("restriction carrier must contain zero")
    if not is_subsemihyperring(S, T):
        raise PreconditionError(f"{S.subset_repr(T)} is not a subsemihyperring")
    members = sorted(T)
    to_sub = {t: i for i, t in enumerate(members)}
    add = [[frozenset(to_sub[t] for t in S.add[a][b]) for b in members] for a in members]
    mul = [[to_sub[S.mul[a][b]] for b in members] for a in members]
    unity = to_sub[S.unity] if S.unity is not None and S.unity in T else None
    sub = Semihyperring(add, mul, zero=to_sub[S.zero], unity=unity,
                        name=f"{S.name}|{S.subset_repr(T)}",
                        labels=[S.labels[t] for t in members])
    return sub, to_sub
