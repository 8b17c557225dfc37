"""Run the whole theory as named checks against one structure.

Each check quantifies one statement's hypothesis exhaustively at the
structure's scale: over all hyperideals, over all subsets when the order is
within the subset cap (deterministically sampled above it), or over all
element tuples.  Checks needing an undeclared unity or a commutative product
report SKIP.  Biconditional checks compare two independently computed
verdicts, so a FAIL is a concrete counterexample candidate and is always
rendered with a witness, never suppressed.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from . import classify, oracle, spectrum
from .catalog import catalog
from .construct import (
    QuotientSpec,
    all_topologies,
    from_topology,
    quotient_hyperring,
    unit_subgroups,
    zero1,
)
from .core import DEFAULT_ENUM_CAP, Semihyperring
from .ideals import (
    enumerate_hyperideals,
    enumerate_one_sided,
    ideal_generated,
    is_hyperideal,
    is_left_hyperideal,
    is_right_hyperideal,
    is_subsemihyperring,
    left_annihilator,
    principal_left,
    principal_right,
    restrict,
    right_annihilator,
    sum_closure_of_products,
)

DEFAULT_SUBSET_CAP = 12
SAMPLE_SIZE = 4096

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    verdict: str
    witness: str | None = None
    note: str | None = None
    seconds: float = 0.0


@dataclass(frozen=True)
class ConformanceReport:
    structure: str
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.verdict != FAIL for r in self.results)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if r.verdict == FAIL)

    def result(self, check_id: str) -> CheckResult:
        for r in self.results:
            if r.check_id == check_id:
                return r
        raise KeyError(check_id)

    def render(self, timings: bool = False) -> str:
        lines = [f"structure {self.structure}"]
        for r in self.results:
            line = f"  {r.check_id}: {r.verdict}"
            if r.note:
                line += f" [{r.note}]"
            if r.witness:
                line += f" -- {r.witness}"
            if timings:
                line += f" ({r.seconds:.3f}s)"
            lines.append(line)
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        checks = []
        for r in self.results:
            entry = {"id": r.check_id, "verdict": r.verdict}
            if r.witness is not None:
                entry["witness"] = r.witness
            if r.note is not None:
                entry["note"] = r.note
            checks.append(entry)
        return {"structure": self.structure, "checks": checks}


class _Ctx:
    """Per-structure caches shared by the checks of one suite run."""

    def __init__(self, S, enum_cap, subset_cap, seed):
        self.S = S
        self.enum_cap = enum_cap
        self.subset_cap = subset_cap
        self.seed = seed
        self._subsets = None
        self._subsemis = None
        self._topology = None

    @property
    def lattice(self):
        return enumerate_hyperideals(self.S, self.enum_cap)

    @property
    def ideals(self):
        return self.lattice.ideals

    @property
    def proper(self):
        return self.lattice.proper()

    @property
    def lefts(self):
        return enumerate_one_sided(self.S, "left", self.enum_cap)

    @property
    def rights(self):
        return enumerate_one_sided(self.S, "right", self.enum_cap)

    @property
    def has_unity(self):
        return self.S.unity is not None

    @property
    def commutative(self):
        return classify.is_commutative(self.S)

    @property
    def topology(self):
        if self._topology is None:
            self._topology = spectrum.spectrum_topology(self.S, self.enum_cap)
        return self._topology

    def subsets(self):
        """All nonempty subsets, or a seeded sample above the subset cap."""
        if self._subsets is None:
            n = self.S.order
            if n <= self.subset_cap:
                masks = range(1, 1 << n)
                sampled = False
            else:
                rng = random.Random(self.seed * 1000003 + n)
                want = min(SAMPLE_SIZE, (1 << n) - 1)
                chosen = set()
                while len(chosen) < want:
                    chosen.add(rng.randrange(1, 1 << n))
                masks = sorted(chosen)
                sampled = True
            subsets = [frozenset(i for i in range(n) if m >> i & 1) for m in masks]
            self._subsets = (subsets, sampled)
        return self._subsets

    def subsemis(self):
        if self._subsemis is None:
            subsets, sampled = self.subsets()
            self._subsemis = ([A for A in subsets if is_subsemihyperring(self.S, A)], sampled)
        return self._subsemis


def _passfail(ok, witness=None, note=None):
    return (PASS, None, note) if ok else (FAIL, witness, note)


# -- checks, one per registry entry ----------------------------------------


def _check_hyperring_reversive_criterion(ctx):
    S = ctx.S
    char = classify.v_h(S) == S.carrier and classify.is_additively_reversive(S)
    direct = oracle.hyperring_oracle(S)
    if char == direct:
        return (PASS, None, None)
    detail = classify.additively_reversive_witness(S)
    extra = f"; reversive witness {detail}" if detail else ""
    return (FAIL, f"reversive criterion gives {char}, canonical-hypergroup oracle gives {direct}{extra}", None)


def _check_zero_sumfree_vh(ctx):
    S = ctx.S
    z = S.zero
    direct = all(not (z in S.add[r][s] and (r != z or s != z))
                 for r in range(S.order) for s in range(S.order))
    via_vh = classify.v_h(S) == frozenset((z,))
    return _passfail(direct == via_vh,
                     f"direct scan gives {direct}, V_H gives {via_vh}")


def _check_hyperstrong_implies_hypersubtractive(ctx):
    S = ctx.S
    subsets, sampled = ctx.subsets()
    note = "sampled" if sampled else None
    for A in subsets:
        if classify.is_hyperstrong(S, A) and not classify.is_hypersubtractive(S, A):
            return (FAIL, f"A={S.subset_repr(A)}", note)
    return (PASS, None, note)


def _check_hypersubtractive_semihypersubtractive(ctx):
    S = ctx.S
    z = S.zero
    subsets, sampled = ctx.subsets()
    note = "sampled" if sampled else None
    for A in subsets:
        if not classify.is_hypersubtractive(S, A):
            continue
        if not all(any(S.add[a][b] == frozenset((z,)) for b in range(S.order)) for a in A):
            continue
        if not classify.is_semihypersubtractive(S, A):
            return (FAIL, f"A={S.subset_repr(A)}", note)
    return (PASS, None, note)


def _check_ideal_intersection_closed(ctx):
    S = ctx.S
    for i, I in enumerate(ctx.ideals):
        for J in ctx.ideals[i:]:
            if not is_hyperideal(S, I & J):
                return (FAIL, f"I={S.subset_repr(I)}, J={S.subset_repr(J)}", None)
    return (PASS, None, None)


def _check_ideal_sum_smallest(ctx):
    S = ctx.S
    for I in ctx.ideals:
        for J in ctx.ideals:
            P = S.subset_add(I, J)
            if not is_hyperideal(S, P) or not (I | J) <= P:
                return (FAIL, f"I={S.subset_repr(I)}, J={S.subset_repr(J)}", None)
            for K in ctx.ideals:
                if (I | J) <= K and not P <= K:
                    return (FAIL, f"I={S.subset_repr(I)}, J={S.subset_repr(J)}, K={S.subset_repr(K)}", None)
    return (PASS, None, None)


def _check_principal_one_sided_smallest(ctx):
    S = ctx.S
    if not ctx.has_unity:
        return (SKIP, None, "no unity")
    for a in range(S.order):
        right = principal_right(S, a)
        if a not in right or not is_right_hyperideal(S, right):
            return (FAIL, f"a={S.labels[a]} (right)", None)
        for K in ctx.rights:
            if a in K and not right <= K:
                return (FAIL, f"a={S.labels[a]}, K={S.subset_repr(K)} (right)", None)
        left = principal_left(S, a)
        if a not in left or not is_left_hyperideal(S, left):
            return (FAIL, f"a={S.labels[a]} (left)", None)
        for K in ctx.lefts:
            if a in K and not left <= K:
                return (FAIL, f"a={S.labels[a]}, K={S.subset_repr(K)} (left)", None)
    return (PASS, None, None)


def _check_principal_generates_commutative(ctx):
    S = ctx.S
    if not ctx.has_unity:
        return (SKIP, None, "no unity")
    if not ctx.commutative:
        return (SKIP, None, "non-commutative")
    for a in range(S.order):
        via_products = S.finite_sums_closure(
            frozenset(S.mul[a][r] for r in range(S.order)))
        if ideal_generated(S, frozenset((a,))) != via_products:
            return (FAIL, f"a={S.labels[a]}", None)
    return (PASS, None, None)


def _check_subring_plus_ideal(ctx):
    S = ctx.S
    subsemis, sampled = ctx.subsemis()
    note = "sampled" if sampled else None
    for T in subsemis:
        restricted = restrict(S, T) if S.zero in T else None
        for I in ctx.ideals:
            total = S.subset_add(T, I)
            if not is_subsemihyperring(S, total):
                return (FAIL, f"T={S.subset_repr(T)}, I={S.subset_repr(I)} (sum not closed)", note)
            if restricted is not None:
                sub, to_sub = restricted
                meet = frozenset(to_sub[t] for t in T & I)
                if not meet or not is_hyperideal(sub, meet):
                    return (FAIL, f"T={S.subset_repr(T)}, I={S.subset_repr(I)} (meet not an ideal of T)", note)
    return (PASS, None, note)


def _check_left_annihilator_left_ideal(ctx):
    S = ctx.S
    subsets, sampled = ctx.subsets()
    note = "sampled" if sampled else None
    for A in subsets:
        if not is_left_hyperideal(S, left_annihilator(S, A)):
            return (FAIL, f"A={S.subset_repr(A)}", note)
    return (PASS, None, note)


def _check_annihilator_two_sided(ctx):
    S = ctx.S
    for A in ctx.lefts:
        if not is_hyperideal(S, left_annihilator(S, A)):
            return (FAIL, f"left ideal A={S.subset_repr(A)}", None)
    for A in ctx.rights:
        if not is_hyperideal(S, right_annihilator(S, A)):
            return (FAIL, f"right ideal A={S.subset_repr(A)}", None)
    return (PASS, None, None)


def _check_regular_iff_product_meet(ctx):
    S = ctx.S
    if not ctx.has_unity:
        return (SKIP, None, "no unity")
    regular = classify.is_multiplicatively_regular(S)
    product_meet = classify.regularity_product_test(S, ctx.enum_cap)
    return _passfail(regular == product_meet,
                     f"regular={regular} but product-meet test={product_meet}")


def _check_prime_sandwich_criterion(ctx):
    S = ctx.S
    if not ctx.has_unity:
        return (SKIP, None, "no unity")
    for I in ctx.proper:
        definitional = classify.is_prime(S, I, ctx.enum_cap, cross_check=False)
        fast = classify.prime_sandwich_test(S, I)
        if definitional != fast:
            return (FAIL, f"I={S.subset_repr(I)}: definitional={definitional}, aRb test={fast}", None)
    return (PASS, None, None)


def _check_prime_commutation_criterion(ctx):
    S = ctx.S
    if not ctx.has_unity:
        return (SKIP, None, "no unity")
    for I in ctx.proper:
        if not classify.is_prime(S, I, ctx.enum_cap):
            continue
        elementwise = all(S.mul[a][b] not in I or a in I or b in I
                          for a in range(S.order) for b in range(S.order))
        commuting = all(S.mul[a][b] not in I or S.mul[b][a] in I
                        for a in range(S.order) for b in range(S.order))
        if elementwise != commuting:
            return (FAIL, f"I={S.subset_repr(I)}: elementwise={elementwise}, commutation={commuting}", None)
    return (PASS, None, None)


def _check_prime_elementwise_commutative(ctx):
    S = ctx.S
    if not ctx.commutative:
        return (SKIP, None, "non-commutative")
    for I in ctx.proper:
        prime = classify.is_prime(S, I, ctx.enum_cap)
        elementwise = classify.commutative_prime_elementwise(S, I, ctx.enum_cap)
        if prime != elementwise:
            return (FAIL, f"I={S.subset_repr(I)}: prime={prime}, elementwise={elementwise}", None)
    return (PASS, None, None)


def _check_prime_iff_m_system(ctx):
    S = ctx.S
    for I in ctx.proper:
        prime = classify.is_prime(S, I, ctx.enum_cap)
        complement = S.carrier - I
        m_system = classify.is_m_system(S, complement)
        if prime != m_system:
            return (FAIL, f"I={S.subset_repr(I)}: prime={prime}, complement m-system={m_system}", None)
    return (PASS, None, None)


def _check_maximal_implies_prime(ctx):
    S = ctx.S
    if not ctx.has_unity:
        return (SKIP, None, "no unity")
    for I in ctx.proper:
        if classify.is_maximal(S, I, ctx.enum_cap) and not classify.is_prime(S, I, ctx.enum_cap):
            return (FAIL, f"I={S.subset_repr(I)}", None)
    return (PASS, None, None)


def _check_transporter_prime(ctx):
    S = ctx.S
    for I in ctx.ideals:
        for H in ctx.lattice.minimal_over(I):
            K = classify.transporter(S, I, H)
            if not is_hyperideal(S, K):
                return (FAIL, f"I={S.subset_repr(I)}, H={S.subset_repr(H)}: transporter not an ideal", None)
            for A in ctx.ideals:
                if A <= K:
                    continue
                for B in ctx.ideals:
                    if B <= K:
                        continue
                    if sum_closure_of_products(S, A, B) <= K:
                        return (FAIL,
                                f"I={S.subset_repr(I)}, H={S.subset_repr(H)}, "
                                f"A={S.subset_repr(A)}, B={S.subset_repr(B)}", None)
    return (PASS, None, None)


def _check_semiprime_sandwich_criterion(ctx):
    S = ctx.S
    if not ctx.has_unity:
        return (SKIP, None, "no unity")
    for I in ctx.proper:
        definitional = classify.is_semiprime(S, I, ctx.enum_cap, cross_check=False)
        fast = classify.semiprime_sandwich_test(S, I)
        if definitional != fast:
            return (FAIL, f"I={S.subset_repr(I)}: definitional={definitional}, aRa test={fast}", None)
    return (PASS, None, None)


def _check_semiprime_iff_p_system(ctx):
    S = ctx.S
    for I in ctx.proper:
        semiprime = classify.is_semiprime(S, I, ctx.enum_cap)
        p_system = classify.is_p_system(S, S.carrier - I)
        if semiprime != p_system:
            return (FAIL, f"I={S.subset_repr(I)}: semiprime={semiprime}, complement p-system={p_system}", None)
    return (PASS, None, None)


def _check_m_system_is_p_system(ctx):
    S = ctx.S
    subsets, sampled = ctx.subsets()
    note = "sampled" if sampled else None
    for A in subsets:
        if classify.is_m_system(S, A) and not classify.is_p_system(S, A):
            return (FAIL, f"A={S.subset_repr(A)}", note)
    return (PASS, None, note)


def _check_strongly_irreducible_implies_irreducible(ctx):
    S = ctx.S
    for I in ctx.proper:
        if classify.is_strongly_irreducible(S, I, ctx.enum_cap) and \
                not classify.is_irreducible(S, I, ctx.enum_cap):
            return (FAIL, f"I={S.subset_repr(I)}", None)
    return (PASS, None, None)


def _check_strongly_irreducible_iff_i_system(ctx):
    S = ctx.S
    for I in ctx.proper:
        strong = classify.is_strongly_irreducible(S, I, ctx.enum_cap)
        i_system = classify.is_i_system(S, S.carrier - I)
        if strong != i_system:
            return (FAIL, f"I={S.subset_repr(I)}: strongly irreducible={strong}, complement i-system={i_system}", None)
    return (PASS, None, None)


def _check_prime_implies_strongly_irreducible(ctx):
    S = ctx.S
    for I in ctx.proper:
        if classify.is_prime(S, I, ctx.enum_cap) and \
                not classify.is_strongly_irreducible(S, I, ctx.enum_cap):
            return (FAIL, f"I={S.subset_repr(I)}", None)
    return (PASS, None, None)


def _check_prime_iff_semiprime_strongly_irreducible(ctx):
    S = ctx.S
    for I in ctx.proper:
        prime = classify.is_prime(S, I, ctx.enum_cap)
        both = classify.is_semiprime(S, I, ctx.enum_cap) and \
            classify.is_strongly_irreducible(S, I, ctx.enum_cap)
        if prime != both:
            return (FAIL, f"I={S.subset_repr(I)}: prime={prime}, semiprime+strongly irreducible={both}", None)
    return (PASS, None, None)


def _check_irreducible_avoiding_exists(ctx):
    S = ctx.S
    for I in ctx.ideals:
        for a in sorted(S.carrier - I):
            H = spectrum.irreducible_avoiding(S, I, a, ctx.enum_cap)
            if not (I <= H and a not in H and classify.is_irreducible(S, H, ctx.enum_cap)):
                return (FAIL, f"I={S.subset_repr(I)}, a={S.labels[a]}", None)
    return (PASS, None, None)


def _check_irreducible_decomposition_exact(ctx):
    S = ctx.S
    for I in ctx.ideals:
        family = spectrum.irreducible_decomposition(S, I, ctx.enum_cap)
        meet = S.carrier
        for J in family:
            meet &= J
        if meet != I:
            return (FAIL, f"I={S.subset_repr(I)}: intersection gives {S.subset_repr(meet)}", None)
    return (PASS, None, None)


def _check_spectrum_topology_axioms(ctx):
    report = spectrum.verify_topology(ctx.S, ctx.topology, ctx.enum_cap)
    if report.ok:
        return (PASS, None, None)
    return (FAIL, report.problems[0], None)


def _check_spectrum_lattice_isomorphism(ctx):
    report = spectrum.lattice_map_check(ctx.S, ctx.topology, ctx.enum_cap)
    if report.ok:
        return (PASS, None, None)
    return (FAIL, report.problems[0], None)


def _check_regular_equivalences_commutative(ctx):
    S = ctx.S
    if not ctx.commutative:
        return (SKIP, None, "non-commutative")
    if not ctx.has_unity:
        return (SKIP, None, "no unity")
    report = spectrum.regular_equivalences(S, ctx.enum_cap)
    return _passfail(report.agree, report.witness)


def _check_ideal_is_subsemihyperring(ctx):
    S = ctx.S
    for I in ctx.lefts:
        if not is_subsemihyperring(S, I):
            return (FAIL, f"I={S.subset_repr(I)}", None)
    return (PASS, None, None)


REGISTRY = (
    ("annihilator_two_sided", _check_annihilator_two_sided),
    ("hyperring_reversive_criterion", _check_hyperring_reversive_criterion),
    ("hyperstrong_implies_hypersubtractive", _check_hyperstrong_implies_hypersubtractive),
    ("hypersubtractive_semihypersubtractive", _check_hypersubtractive_semihypersubtractive),
    ("ideal_intersection_closed", _check_ideal_intersection_closed),
    ("ideal_is_subsemihyperring", _check_ideal_is_subsemihyperring),
    ("ideal_sum_smallest", _check_ideal_sum_smallest),
    ("irreducible_avoiding_exists", _check_irreducible_avoiding_exists),
    ("irreducible_decomposition_exact", _check_irreducible_decomposition_exact),
    ("left_annihilator_left_ideal", _check_left_annihilator_left_ideal),
    ("m_system_is_p_system", _check_m_system_is_p_system),
    ("maximal_implies_prime", _check_maximal_implies_prime),
    ("prime_commutation_criterion", _check_prime_commutation_criterion),
    ("prime_elementwise_commutative", _check_prime_elementwise_commutative),
    ("prime_iff_m_system", _check_prime_iff_m_system),
    ("prime_iff_semiprime_strongly_irreducible", _check_prime_iff_semiprime_strongly_irreducible),
    ("prime_implies_strongly_irreducible", _check_prime_implies_strongly_irreducible),
    ("prime_sandwich_criterion", _check_prime_sandwich_criterion),
    ("principal_generates_commutative", _check_principal_generates_commutative),
    ("principal_one_sided_smallest", _check_principal_one_sided_smallest),
    ("regular_equivalences_commutative", _check_regular_equivalences_commutative),
    ("regular_iff_product_meet", _check_regular_iff_product_meet),
    ("semiprime_iff_p_system", _check_semiprime_iff_p_system),
    ("semiprime_sandwich_criterion", _check_semiprime_sandwich_criterion),
    ("spectrum_lattice_isomorphism", _check_spectrum_lattice_isomorphism),
    ("spectrum_topology_axioms", _check_spectrum_topology_axioms),
    ("strongly_irreducible_iff_i_system", _check_strongly_irreducible_iff_i_system),
    ("strongly_irreducible_implies_irreducible", _check_strongly_irreducible_implies_irreducible),
    ("subring_plus_ideal", _check_subring_plus_ideal),
    ("transporter_prime", _check_transporter_prime),
    ("zero_sumfree_vh", _check_zero_sumfree_vh),
)

CHECK_IDS = tuple(check_id for check_id, _ in REGISTRY)


def run_suite(S: Semihyperring, enum_cap: int = DEFAULT_ENUM_CAP,
              subset_cap: int = DEFAULT_SUBSET_CAP, seed: int = 0) -> ConformanceReport:
    """All registry checks against one structure, assembled in id order."""
    S.require_valid("conformance")
    ctx = _Ctx(S, enum_cap, subset_cap, seed)
    results = []
    for check_id, fn in REGISTRY:
        start = time.perf_counter()
        verdict, witness, note = fn(ctx)
        results.append(CheckResult(check_id, verdict, witness, note,
                                   time.perf_counter() - start))
    return ConformanceReport(S.name, tuple(results))


@dataclass(frozen=True)
class CorpusReport:
    reports: tuple[ConformanceReport, ...]
    summary: dict  # check_id -> {"PASS": n, "FAIL": n, "SKIP": n}

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    def render(self) -> str:
        lines = [f"{len(self.reports)} structures"]
        width = max((len(c) for c in self.summary), default=10)
        lines.append(f"{'check':<{width}}  PASS  FAIL  SKIP")
        for check_id in sorted(self.summary):
            counts = self.summary[check_id]
            lines.append(f"{check_id:<{width}}  {counts[PASS]:>4}  {counts[FAIL]:>4}  {counts[SKIP]:>4}")
        for report in self.reports:
            for r in report.failures():
                lines.append(f"FAIL {report.structure} {r.check_id}: {r.witness}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "corpus": [r.to_json_dict() for r in self.reports],
            "summary": {check_id: dict(counts) for check_id, counts in sorted(self.summary.items())},
        }


def run_corpus(structures, enum_cap: int = DEFAULT_ENUM_CAP,
               subset_cap: int = DEFAULT_SUBSET_CAP, seed: int = 0) -> CorpusReport:
    reports = tuple(run_suite(S, enum_cap, subset_cap, seed) for S in structures)
    summary = {check_id: {PASS: 0, FAIL: 0, SKIP: 0} for check_id in CHECK_IDS}
    for report in reports:
        for r in report.results:
            summary[r.check_id][r.verdict] += 1
    return CorpusReport(reports, summary)


def builtin_corpus(max_points: int = 3, max_modulus: int = 12,
                   catalog_orders: tuple[int, ...] = (2, 3)) -> list[Semihyperring]:
    """The standard corpus: the one-element structure, every topology on up
    to ``max_points`` points, every unit-subgroup quotient of Z_n up to
    ``max_modulus``, and the full catalogs of the requested orders."""
    out = [zero1()]
    for k in range(1, max_points + 1):
        for i, T in enumerate(all_topologies(k)):
            out.append(from_topology(T, name=f"T{k}p{i:02d}"))
    for n in range(2, max_modulus + 1):
        for N in unit_subgroups(n):
            out.append(quotient_hyperring(QuotientSpec(n, N)))
    for order in catalog_orders:
        out.extend(catalog(order))
    return out
