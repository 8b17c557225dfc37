"""The irreducible spectrum: points, the Θ-opens, topology verification,
lattice correspondence, and irreducible decompositions.

For a hyperideal I the open Θ_I collects the irreducible proper hyperideals
that do NOT contain I.  Under this reading Θ of the zero ideal is empty and
Θ of the carrier is the whole point set, matching the intended extremes.
The finite-intersection identity Θ_I ∩ Θ_M = Θ_{I∩M} is checked empirically
per structure rather than assumed: it can fail when a merely irreducible
point is not strongly irreducible, and ``verify_topology`` records such
counterexamples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_ENUM_CAP,
    HypothesisError,
    PreconditionError,
    Semihyperring,
    Subset,
    subset_sort_key,
)
from .classify import (
    is_commutative,
    is_irreducible,
    is_multiplicatively_regular,
    is_semiprime,
)
from .ideals import enumerate_hyperideals, is_hyperideal, sum_closure_of_products

UNION_FAMILY_CAP = 12  # ideals; above this only pairwise unions are checked


def irreducible_spectrum(S: Semihyperring, cap: int = DEFAULT_ENUM_CAP) -> list[Subset]:
    """All proper irreducible hyperideals, canonically sorted."""
    lattice = enumerate_hyperideals(S, cap)
    return [I for I in lattice.ideals
            if I != S.carrier and is_irreducible(S, I, cap)]


def theta(S: Semihyperring, I, spectrum) -> frozenset:
    """Points of the spectrum not containing I."""
    if not is_hyperideal(S, I):
        raise PreconditionError(f"{S.subset_repr(I)} is not a hyperideal")
    return frozenset(J for J in spectrum if not I <= J)


@dataclass(frozen=True)
class Open:
    point_set: frozenset  # of Subset
    ideal: Subset  # first generating ideal in canonical order


@dataclass(frozen=True)
class SpectrumTopology:
    structure: Semihyperring
    points: tuple[Subset, ...]
    opens: tuple[Open, ...]
    lattice_map: dict  # ideal -> index into opens

    def open_of(self, I) -> frozenset:
        return self.opens[self.lattice_map[I]].point_set


def spectrum_topology(S: Semihyperring, cap: int = DEFAULT_ENUM_CAP) -> SpectrumTopology:
    """Build H(R) and the family {Θ_I}, tagging each open with the first
    ideal that generates it."""
    lattice = enumerate_hyperideals(S, cap)
    points = tuple(irreducible_spectrum(S, cap))
    raw = []
    tag = {}
    for I in lattice.ideals:
        th = frozenset(J for J in points if not I <= J)
        if th not in tag:
            tag[th] = I
            raw.append(th)
    raw.sort(key=lambda ps: (len(ps), tuple(subset_sort_key(p) for p in sorted(ps, key=subset_sort_key))))
    opens = tuple(Open(ps, tag[ps]) for ps in raw)
    position = {o.point_set: i for i, o in enumerate(opens)}
    lattice_map = {}
    for I in lattice.ideals:
        th = frozenset(J for J in points if not I <= J)
        lattice_map[I] = position[th]
    return SpectrumTopology(S, points, opens, lattice_map)


@dataclass(frozen=True)
class TopologyReport:
    """Outcome of the topology-axiom verification with counterexamples."""

    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems

    def render(self) -> str:
        if self.ok:
            return "PASS"
        return "FAIL\n" + "\n".join("  " + p for p in self.problems)


def verify_topology(S: Semihyperring, T: SpectrumTopology, cap: int = DEFAULT_ENUM_CAP) -> TopologyReport:
    """Check the open-set axioms and the generating identities.

    Verifies membership of the empty and full sets, closure of the family
    under pairwise intersection together with Θ_I ∩ Θ_M = Θ_{I∩M}, and closure
    under unions together with the exact identity
    ∪ Θ_{I_λ} = Θ_{sum of the I_λ} over subfamilies of the ideal lattice.
    """
    lattice = enumerate_hyperideals(S, cap)
    problems = []
    opens_sets = {o.point_set for o in T.opens}
    all_points = frozenset(T.points)
    if frozenset() not in opens_sets:
        problems.append("empty open missing from the family")
    if all_points not in opens_sets:
        problems.append("full point set missing from the family")

    def describe_pointset(ps):
        inner = ",".join(S.subset_repr(p) for p in sorted(ps, key=subset_sort_key))
        return "{" + inner + "}"

    ideals = lattice.ideals
    for i, I in enumerate(ideals):
        for M in ideals[i:]:
            lhs = T.open_of(I) & T.open_of(M)
            rhs = T.open_of(I & M)
            if lhs != rhs:
                problems.append(
                    f"intersection identity fails for I={S.subset_repr(I)}, "
                    f"M={S.subset_repr(M)}: theta(I)&theta(M)={describe_pointset(lhs)} "
                    f"but theta(I&M)={describe_pointset(rhs)}")
            if lhs not in opens_sets:
                problems.append(
                    f"intersection of opens for I={S.subset_repr(I)}, "
                    f"M={S.subset_repr(M)} is not an open")

    if len(ideals) <= UNION_FAMILY_CAP:
        # DFS over all subfamilies, folding the ideal sum incrementally.
        def walk(idx, fold, union):
            if idx == len(ideals):
                if fold is not None:
                    if union != T.open_of(fold):
                        problems.append(
                            f"union identity fails for a subfamily folding to "
                            f"{S.subset_repr(fold)}")
                    if union not in opens_sets:
                        problems.append("a subfamily union is not an open")
                return
            walk(idx + 1, fold, union)
            I = ideals[idx]
            new_fold = I if fold is None else S.subset_add(fold, I)
            walk(idx + 1, new_fold, union | T.open_of(I))

        walk(0, None, frozenset())
    else:
        for i, I in enumerate(ideals):
            for M in ideals[i:]:
                union = T.open_of(I) | T.open_of(M)
                if union != T.open_of(S.subset_add(I, M)):
                    problems.append(
                        f"union identity fails for I={S.subset_repr(I)}, "
                        f"M={S.subset_repr(M)}")
                if union not in opens_sets:
                    problems.append(
                        f"union of opens for I={S.subset_repr(I)}, "
                        f"M={S.subset_repr(M)} is not an open")

    return TopologyReport(tuple(problems))


@dataclass(frozen=True)
class LatticeMapReport:
    """Outcome of checking that I -> Θ_I is an order isomorphism onto the opens."""

    problems: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.problems

    def render(self) -> str:
        if self.ok:
            return "PASS"
        return "FAIL\n" + "\n".join("  " + p for p in self.problems)


def lattice_map_check(S: Semihyperring, T: SpectrumTopology, cap: int = DEFAULT_ENUM_CAP) -> LatticeMapReport:
    lattice = enumerate_hyperideals(S, cap)
    problems = []
    seen = {}
    for I in lattice.ideals:
        o = T.lattice_map[I]
        if o in seen:
            problems.append(
                f"not injective: {S.subset_repr(seen[o])} and {S.subset_repr(I)} "
                f"share the same open")
        else:
            seen[o] = I
    for I in lattice.ideals:
        for M in lattice.ideals:
            forward = I <= M
            backward = T.open_of(I) <= T.open_of(M)
            if forward and not backward:
                problems.append(
                    f"not order-preserving at {S.subset_repr(I)} <= {S.subset_repr(M)}")
            if backward and not forward:
                problems.append(
                    f"not order-reflecting at {S.subset_repr(I)}, {S.subset_repr(M)}")
    mapped = set(T.lattice_map.values())
    for i in range(len(T.opens)):
        if i not in mapped:
            problems.append("an open is not the image of any ideal")
    return LatticeMapReport(tuple(problems))


def irreducible_avoiding(S: Semihyperring, I, a: int, cap: int = DEFAULT_ENUM_CAP) -> Subset:
    """A maximal hyperideal containing I and avoiding a; finite search stands
    in for a maximality argument, and maximal avoiding ideals are irreducible.

    Ties are broken canonically (least by size then lexicographic order).
    """
    if not is_hyperideal(S, I):
        raise PreconditionError(f"{S.subset_repr(I)} is not a hyperideal")
    if a in I:
        raise PreconditionError(f"element {S.labels[a]} already lies in the ideal")
    lattice = enumerate_hyperideals(S, cap)
    avoiding = [J for J in lattice.ideals if I <= J and a not in J]
    maximal = [J for J in avoiding if not any(J < K for K in avoiding)]
    best = min(maximal, key=subset_sort_key)
    if not is_irreducible(S, best, cap):
        raise RuntimeError("internal error: maximal avoiding ideal is reducible")
    return best


def irreducible_decomposition(S: Semihyperring, I, cap: int = DEFAULT_ENUM_CAP) -> list[Subset]:
    """Spectrum points containing I; the carrier alone when there are none.
    Their intersection recovers I exactly."""
    if not is_hyperideal(S, I):
        raise PreconditionError(f"{S.subset_repr(I)} is not a hyperideal")
    points = [J for J in irreducible_spectrum(S, cap) if I <= J]
    return points if points else [S.carrier]


@dataclass(frozen=True)
class RegularEquivalenceReport:
    """The four regularity conditions for commutative structures with unity."""

    regular: bool
    all_idempotent: bool
    meets_equal_products: bool
    all_semiprime: bool
    witness: str | None

    @property
    def agree(self) -> bool:
        return self.regular == self.all_idempotent == self.meets_equal_products == self.all_semiprime

    def verdicts(self) -> tuple[bool, bool, bool, bool]:
        return (self.regular, self.all_idempotent, self.meets_equal_products, self.all_semiprime)

    def render(self) -> str:
        body = (f"regular={self.regular} idempotent-ideals={self.all_idempotent} "
                f"meet=product={self.meets_equal_products} all-semiprime={self.all_semiprime}")
        if self.agree:
            return f"PASS ({body})"
        return f"FAIL ({body}; {self.witness})"


def regular_equivalences(S: Semihyperring, cap: int = DEFAULT_ENUM_CAP) -> RegularEquivalenceReport:
    if not is_commutative(S):
        raise HypothesisError("the regularity equivalences require a commutative product")
    if S.unity is None:
        raise HypothesisError("the regularity equivalences require a declared unity")
    lattice = enumerate_hyperideals(S, cap)
    regular = is_multiplicatively_regular(S)

    idempotent = True
    witness = None
    for I in lattice.ideals:
        if sum_closure_of_products(S, I, I) != I:
            idempotent = False
            witness = f"non-idempotent ideal {S.subset_repr(I)}"
            break

    meets = True
    for I in lattice.ideals:
        for J in lattice.ideals:
            if sum_closure_of_products(S, I, J) != I & J:
                meets = False
                witness = witness or (f"product of {S.subset_repr(I)} and "
                                      f"{S.subset_repr(J)} differs from their meet")
                break
        if not meets:
            break

    semiprime = True
    for I in lattice.ideals:
        if I != S.carrier and not is_semiprime(S, I, cap):
            semiprime = False
            witness = witness or f"non-semiprime ideal {S.subset_repr(I)}"
            break

    report = RegularEquivalenceReport(regular, idempotent, meets, semiprime, witness)
    if not report.agree and witness is None:
        report = RegularEquivalenceReport(regular, idempotent, meets, semiprime,
                                          "conditions disagree")
    return report
