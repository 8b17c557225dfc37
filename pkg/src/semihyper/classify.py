"""Elementwise and ideal-level classification predicates.

Covers opposites and V_H(R), zero-sumfree and additively reversive
structures, the hyperring criterion, the subtractive subset family,
multiplicative regularity, prime/semiprime/irreducible/strongly
irreducible/maximal ideals, and m-/p-/i-systems.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_ENUM_CAP,
    EmptyOperandError,
    HypothesisError,
    PreconditionError,
    Semihyperring,
    Subset,
)
from .ideals import (
    enumerate_hyperideals,
    enumerate_one_sided,
    ideal_generated,
    is_hyperideal,
    sum_closure_of_products,
)


def opposites(S: Semihyperring, a: int) -> Subset:
    """All b with zero in a+b.  May be empty or contain several candidates."""
    z = S.zero
    row = S.add[a]
    return frozenset(b for b in range(S.order) if z in row[b])


def opposite_table(S: Semihyperring) -> tuple[Subset, ...]:
    cached = S._cache.get("opposites")
    if cached is None:
        cached = tuple(opposites(S, a) for a in range(S.order))
        S._cache["opposites"] = cached
    return cached


def v_h(S: Semihyperring) -> Subset:
    """Elements possessing at least one opposite."""
    opp = opposite_table(S)
    return frozenset(a for a in range(S.order) if opp[a])


def is_zero_sumfree(S: Semihyperring) -> bool:
    """Only zero takes part in a sum containing zero."""
    fast = v_h(S) == frozenset((S.zero,))
    z = S.zero
    direct = all(not (z in S.add[r][s] and (r != z or s != z))
                 for r in range(S.order) for s in range(S.order))
    if fast != direct:
        raise RuntimeError("zero-sumfree characterization disagrees with the direct scan")
    return fast


def additively_reversive_witness(S: Semihyperring):
    """First failure of the additive reversal property, or None.

    For every membership a in b+c the reversal demands well-defined opposites
    of b and c (exactly one candidate each) with b in a+ĉ and c in a+b̂;
    elements lacking a unique opposite in a witnessing position fail.
    """
    opp = opposite_table(S)
    for b in range(S.order):
        row = S.add[b]
        for c in range(S.order):
            for a in sorted(row[c]):
                if len(opp[c]) != 1:
                    return (a, b, c, "no unique opposite for " + S.labels[c])
                if len(opp[b]) != 1:
                    return (a, b, c, "no unique opposite for " + S.labels[b])
                (c_hat,) = opp[c]
                (b_hat,) = opp[b]
                if b not in S.add[a][c_hat]:
                    return (a, b, c, "first reversal fails")
                if c not in S.add[a][b_hat]:
                    return (a, b, c, "second reversal fails")
    return None


def is_additively_reversive(S: Semihyperring) -> bool:
    return additively_reversive_witness(S) is None


def is_hyperring(S: Semihyperring) -> bool:
    """Every element has an opposite and addition is reversive."""
    return v_h(S) == S.carrier and is_additively_reversive(S)


def is_hypersubtractive(S: Semihyperring, A) -> bool:
    """a in A and a+b within A force b in A."""
    if not A:
        raise EmptyOperandError("subset predicates require a nonempty subset")
    for a in A:
        row = S.add[a]
        for b in range(S.order):
            if row[b] <= A and b not in A:
                return False
    return True


def is_hyperstrong(S: Semihyperring, A) -> bool:
    """Any sum landing inside A has both addends in A."""
    if not A:
        raise EmptyOperandError("subset predicates require a nonempty subset")
    for a in range(S.order):
        row = S.add[a]
        for b in range(S.order):
            if row[b] <= A and (a not in A or b not in A):
                return False
    return True


def is_semihypersubtractive(S: Semihyperring, A) -> bool:
    """Every opposite of every member of A ∩ V_H lies back in A ∩ V_H."""
    if not A:
        raise EmptyOperandError("subset predicates require a nonempty subset")
    opp = opposite_table(S)
    for a in A:
        if opp[a] and not opp[a] <= A:
            return False
    return True


def is_regular_element(S: Semihyperring, a: int) -> bool:
    """Some b satisfies a = a*b*a."""
    row = S.mul[a]
    return any(S.mul[row[b]][a] == a for b in range(S.order))


def is_multiplicatively_regular(S: Semihyperring) -> bool:
    return all(is_regular_element(S, a) for a in range(S.order))


def regularity_product_test(S: Semihyperring, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """H ∩ I equals the sums-of-products set HI for every right H and left I."""
    if S.unity is None:
        raise HypothesisError("the product-meet test requires a declared unity")
    rights = enumerate_one_sided(S, "right", cap)
    lefts = enumerate_one_sided(S, "left", cap)
    for H in rights:
        for I in lefts:
            if sum_closure_of_products(S, H, I) != H & I:
                return False
    return True


def is_commutative(S: Semihyperring) -> bool:
    return all(S.mul[x][y] == S.mul[y][x]
               for x in range(S.order) for y in range(x + 1, S.order))


# -- ideal-level predicates ------------------------------------------------


def _require_proper_ideal(S, I, cap):
    if not I:
        raise EmptyOperandError("ideal predicates require a nonempty subset")
    if not is_hyperideal(S, I):
        raise PreconditionError(f"{S.subset_repr(I)} is not a hyperideal")
    if I == S.carrier:
        raise PreconditionError("predicate is defined for proper hyperideals only")
    return enumerate_hyperideals(S, cap)


def prime_sandwich_test(S: Semihyperring, I) -> bool:
    """For all a, b: the whole of aRb inside I forces a in I or b in I."""
    for a in range(S.order):
        if a in I:
            continue
        arow = S.mul[a]
        for b in range(S.order):
            if b in I:
                continue
            if all(S.mul[arow[r]][b] in I for r in range(S.order)):
                return False
    return True


def is_prime(S: Semihyperring, I, cap: int = DEFAULT_ENUM_CAP, cross_check: bool = True) -> bool:
    """No pair of hyperideals multiplies into I without a factor inside I."""
    lattice = _require_proper_ideal(S, I, cap)
    verdict = True
    for H in lattice.ideals:
        if H <= I:
            continue
        for K in lattice.ideals:
            if K <= I:
                continue
            if sum_closure_of_products(S, H, K) <= I:
                verdict = False
                break
        if not verdict:
            break
    if cross_check and S.unity is not None:
        if prime_sandwich_test(S, I) != verdict:
            raise RuntimeError(
                f"prime characterizations disagree on {S.subset_repr(I)} in {S.name}")
    return verdict


def semiprime_sandwich_test(S: Semihyperring, I) -> bool:
    """For all a: the whole of aRa inside I forces a in I."""
    for a in range(S.order):
        if a in I:
            continue
        arow = S.mul[a]
        if all(S.mul[arow[r]][a] in I for r in range(S.order)):
            return False
    return True


def is_semiprime(S: Semihyperring, I, cap: int = DEFAULT_ENUM_CAP, cross_check: bool = True) -> bool:
    """No hyperideal squares into I without lying inside I."""
    lattice = _require_proper_ideal(S, I, cap)
    verdict = all(not sum_closure_of_products(S, H, H) <= I
                  for H in lattice.ideals if not H <= I)
    if cross_check and S.unity is not None:
        if semiprime_sandwich_test(S, I) != verdict:
            raise RuntimeError(
                f"semiprime characterizations disagree on {S.subset_repr(I)} in {S.name}")
    return verdict


def is_irreducible(S: Semihyperring, I, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """I is not the meet of two strictly larger hyperideals."""
    lattice = _require_proper_ideal(S, I, cap)
    for H in lattice.ideals:
        if not I <= H:
            continue
        for K in lattice.ideals:
            if I == H & K and I != H and I != K:
                return False
    return True


def is_strongly_irreducible(S: Semihyperring, I, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Any meet of hyperideals inside I has a factor inside I."""
    lattice = _require_proper_ideal(S, I, cap)
    for H in lattice.ideals:
        if H <= I:
            continue
        for K in lattice.ideals:
            if K <= I:
                continue
            if H & K <= I:
                return False
    return True


def is_maximal(S: Semihyperring, I, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """No proper hyperideal sits strictly between I and the carrier."""
    lattice = _require_proper_ideal(S, I, cap)
    return not any(I < J < S.carrier for J in lattice.ideals)


# -- systems ---------------------------------------------------------------


def is_m_system(S: Semihyperring, A) -> bool:
    """Each pair a, b in A admits r with a*r*b back in A."""
    if not A:
        raise EmptyOperandError("system predicates require a nonempty subset")
    for a in A:
        arow = S.mul[a]
        for b in A:
            if not any(S.mul[arow[r]][b] in A for r in range(S.order)):
                return False
    return True


def is_p_system(S: Semihyperring, A) -> bool:
    """Each a in A admits r with a*r*a back in A."""
    if not A:
        raise EmptyOperandError("system predicates require a nonempty subset")
    for a in A:
        arow = S.mul[a]
        if not any(S.mul[arow[r]][a] in A for r in range(S.order)):
            return False
    return True


def _generated_singleton(S, a):
    key = ("gen1", a)
    cached = S._cache.get(key)
    if cached is None:
        cached = ideal_generated(S, frozenset((a,)))
        S._cache[key] = cached
    return cached


def is_i_system(S: Semihyperring, A) -> bool:
    """Principal ideals of any two members meet A."""
    if not A:
        raise EmptyOperandError("system predicates require a nonempty subset")
    for a in A:
        ga = _generated_singleton(S, a)
        for b in A:
            if not ga & _generated_singleton(S, b) & A:
                return False
    return True


def transporter(S: Semihyperring, I, H) -> Subset:
    """{r : rH within I} for hyperideals I properly below H."""
    if not is_hyperideal(S, I):
        raise PreconditionError(f"{S.subset_repr(I)} is not a hyperideal")
    if not is_hyperideal(S, H):
        raise PreconditionError(f"{S.subset_repr(H)} is not a hyperideal")
    if not I < H:
        raise PreconditionError("transporter requires I strictly below H")
    return frozenset(r for r in range(S.order)
                     if all(S.mul[r][h] in I for h in H))


def commutative_prime_elementwise(S: Semihyperring, I, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Elementwise prime test a*b in I => a in I or b in I (commutative only)."""
    if not is_commutative(S):
        raise HypothesisError("the elementwise prime test requires a commutative product")
    _require_proper_ideal(S, I, cap)
    for a in range(S.order):
        if a in I:
            continue
        arow = S.mul[a]
        for b in range(S.order):
            if b not in I and arow[b] in I:
                return False
    return True


@dataclass(frozen=True)
class IdealClassification:
    ideal: Subset
    proper: bool
    prime: bool
    semiprime: bool
    irreducible: bool
    strongly_irreducible: bool
    maximal: bool
    idempotent: bool

    def flags(self) -> tuple[str, ...]:
        names = ("proper", "prime", "semiprime", "irreducible",
                 "strongly_irreducible", "maximal", "idempotent")
        return tuple(n for n in names if getattr(self, n))


def classify_ideal(S: Semihyperring, I, cap: int = DEFAULT_ENUM_CAP) -> IdealClassification:
    """Flag vector for one hyperideal; the improper carrier gets only
    ``idempotent`` evaluated."""
    if not is_hyperideal(S, I):
        raise PreconditionError(f"{S.subset_repr(I)} is not a hyperideal")
    proper = I != S.carrier
    idempotent = sum_closure_of_products(S, I, I) == I
    if not proper:
        return IdealClassification(I, False, False, False, False, False, False, idempotent)
    return IdealClassification(
        I,
        True,
        is_prime(S, I, cap),
        is_semiprime(S, I, cap),
        is_irreducible(S, I, cap),
        is_strongly_irreducible(S, I, cap),
        is_maximal(S, I, cap),
        idempotent,
    )
