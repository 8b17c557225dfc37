"""Broader sweeps beyond the fixture goldens: parser fuzzing, restriction
structures, and boundary cases for the conformance engine."""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from semihyper.catalog import catalog
from semihyper.conformance import run_suite
from semihyper.construct import FiniteTopology, from_topology, kq6
from semihyper.core import StructureError
from semihyper.ideals import enumerate_hyperideals, is_subsemihyperring, restrict
from semihyper.textio import AxiomError, ParseError, parse_table, serialize_structure


@settings(max_examples=150, deadline=None)
@given(st.text(max_size=200))
def test_parser_never_crashes_on_garbage(text):
    try:
        parse_table(text)
    except ParseError:
        pass
    except StructureError:
        pass


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_parser_survives_single_character_corruption(data):
    base = serialize_structure(kq6())
    pos = data.draw(st.integers(0, len(base) - 1))
    char = data.draw(st.characters(blacklist_categories=("Cs",)))
    corrupted = base[:pos] + char + base[pos + 1:]
    try:
        parse_table(corrupted)
    except (ParseError, StructureError, AxiomError):
        pass


def test_restrictions_pass_conformance():
    """Substructures induced on zero-containing subsemihyperrings are valid
    semihyperrings and the whole registry holds on them too."""
    rng = random.Random(404)
    pool = [S for S in catalog(3) if S.order <= 3]
    checked = 0
    for S in rng.sample(pool, 20):
        for mask in range(1, 1 << S.order):
            T = frozenset(i for i in range(S.order) if mask >> i & 1)
            if S.zero not in T or not is_subsemihyperring(S, T):
                continue
            sub, _ = restrict(S, T)
            assert sub.is_valid
            report = run_suite(sub)
            assert report.ok, report.render()
            checked += 1
    assert checked >= 20


def test_pipeline_with_zero_not_first():
    """Documents may list elements in any order; nothing assumes index 0."""
    from semihyper import spectrum
    from semihyper.textio import parse_structure

    text = (
        "semihyperring SHUF\n"
        "elements: a z b\n"
        "zero: z\n"
        "unity: b\n"
        "add: (a,a) = {a}\n"
        "add: (a,b) = {b}\n"
        "add: (b,b) = {b}\n"
        "mul: (a,a) = a\n"
        "mul: (a,b) = a\n"
        "mul: (b,a) = a\n"
        "mul: (b,b) = b\n"
    )
    S = parse_structure(text)
    assert S.zero == 1 and S.unity == 2
    lat = enumerate_hyperideals(S)
    assert [S.subset_repr(I) for I in lat.ideals] == ["{z}", "{a,z}", "{a,z,b}"]
    topo = spectrum.spectrum_topology(S)
    assert spectrum.verify_topology(S, topo).ok
    assert run_suite(S).ok
    assert parse_table(serialize_structure(S)) == S


def test_order_one_catalog_entry_with_unity_passes():
    S = catalog(1)[0]
    assert S.unity == S.zero == 0
    report = run_suite(S)
    assert report.ok, report.render()


def _relabeled(S, perm):
    from semihyper.core import Semihyperring

    n = S.order
    add = [[None] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            add[perm[i]][perm[j]] = frozenset(perm[t] for t in S.add[i][j])
            mul[perm[i]][perm[j]] = perm[S.mul[i][j]]
    labels = [None] * n
    for i, l in enumerate(S.labels):
        labels[perm[i]] = l
    unity = perm[S.unity] if S.unity is not None else None
    return Semihyperring(add, mul, zero=perm[S.zero], unity=unity,
                         name=S.name + "p", labels=labels)


def test_classification_is_isomorphism_invariant(KQ6, TOP2):
    """Everything the library computes must commute with relabeling."""
    from semihyper import classify

    for S, perm in ((KQ6, (2, 0, 3, 1)), (TOP2, (1, 2, 0))):
        P = _relabeled(S, perm)
        assert P.is_valid

        def image(I, perm=perm):
            return frozenset(perm[i] for i in I)

        lat = enumerate_hyperideals(S)
        plat = enumerate_hyperideals(P)
        assert {image(I) for I in lat.ideals} == set(plat.ideals)
        for I in lat.proper():
            for pred in (classify.is_prime, classify.is_semiprime,
                         classify.is_irreducible, classify.is_strongly_irreducible,
                         classify.is_maximal):
                assert pred(S, I) == pred(P, image(I)), (pred.__name__, I)
        verdicts_s = [(r.check_id, r.verdict) for r in run_suite(S).results]
        verdicts_p = [(r.check_id, r.verdict) for r in run_suite(P).results]
        assert verdicts_s == verdicts_p


def test_chain_of_twelve_passes_suite():
    chain = tuple(frozenset(range(1, k + 1)) for k in range(12))
    S = from_topology(FiniteTopology(11, chain))
    assert len(enumerate_hyperideals(S).ideals) == 12
    report = run_suite(S)
    assert report.ok, report.render()
