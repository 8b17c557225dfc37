import pytest

from semihyper import classify, spectrum
from semihyper.core import PreconditionError
from semihyper.ideals import enumerate_hyperideals
from conftest import fz


def test_spectrum_goldens(TOP2, KQ5, KQ6):
    assert spectrum.irreducible_spectrum(TOP2) == [fz(0), fz(0, 1)]
    assert spectrum.irreducible_spectrum(KQ5) == [fz(0)]
    assert spectrum.irreducible_spectrum(KQ6) == [fz(0, 2), fz(0, 3)]


def test_theta(TOP2, KQ6):
    pts = spectrum.irreducible_spectrum(KQ6)
    assert spectrum.theta(KQ6, fz(0), pts) == fz()
    assert spectrum.theta(KQ6, KQ6.carrier, pts) == frozenset(pts)
    assert spectrum.theta(KQ6, fz(0, 2), pts) == fz(fz(0, 3))
    assert spectrum.theta(KQ6, fz(0, 3), pts) == fz(fz(0, 2))
    with pytest.raises(PreconditionError):
        spectrum.theta(TOP2, fz(0, 2), spectrum.irreducible_spectrum(TOP2))


def test_theta_monotone(TOP2, KQ5, KQ6):
    for S in (TOP2, KQ5, KQ6):
        pts = spectrum.irreducible_spectrum(S)
        lat = enumerate_hyperideals(S)
        for I in lat.ideals:
            for M in lat.ideals:
                if I <= M:
                    assert spectrum.theta(S, I, pts) <= spectrum.theta(S, M, pts)


def test_opens_counts(TOP2, KQ5, KQ6):
    assert len(spectrum.spectrum_topology(TOP2).opens) == 3
    assert len(spectrum.spectrum_topology(KQ5).opens) == 2
    assert len(spectrum.spectrum_topology(KQ6).opens) == 4


def test_verify_topology_passes_on_fixtures(TOP2, KQ5, KQ6, ZERO1):
    for S in (TOP2, KQ5, KQ6, ZERO1):
        topo = spectrum.spectrum_topology(S)
        assert spectrum.verify_topology(S, topo).ok
        assert spectrum.lattice_map_check(S, topo).ok


def test_lattice_map_bijection_sizes(TOP2, KQ5, KQ6):
    for S, expected in ((TOP2, 3), (KQ5, 2), (KQ6, 4)):
        topo = spectrum.spectrum_topology(S)
        assert len(topo.opens) == expected
        assert len(set(topo.lattice_map.values())) == expected


def test_irreducible_avoiding(TOP2, KQ6):
    assert spectrum.irreducible_avoiding(KQ6, fz(0), 1) == fz(0, 2)
    assert spectrum.irreducible_avoiding(KQ6, fz(0), 2) == fz(0, 3)
    assert spectrum.irreducible_avoiding(TOP2, fz(0), 2) == fz(0, 1)
    with pytest.raises(PreconditionError):
        spectrum.irreducible_avoiding(KQ6, fz(0, 2), 2)


def test_irreducible_decomposition(TOP2, KQ6):
    assert spectrum.irreducible_decomposition(KQ6, fz(0)) == [fz(0, 2), fz(0, 3)]
    assert spectrum.irreducible_decomposition(TOP2, fz(0)) == [fz(0), fz(0, 1)]
    assert spectrum.irreducible_decomposition(KQ6, KQ6.carrier) == [KQ6.carrier]


def test_decomposition_exactness(TOP2, KQ5, KQ6, ZERO1):
    for S in (TOP2, KQ5, KQ6, ZERO1):
        for I in enumerate_hyperideals(S).ideals:
            family = spectrum.irreducible_decomposition(S, I)
            meet = S.carrier
            for J in family:
                meet &= J
            assert meet == I


def test_regular_equivalences(TOP2, KQ5, KQ6):
    for S in (TOP2, KQ5, KQ6):
        report = spectrum.regular_equivalences(S)
        assert report.agree
        assert report.verdicts() == (True, True, True, True)


def test_regular_equivalences_hypotheses(M3EX):
    from semihyper.core import HypothesisError

    with pytest.raises(HypothesisError):
        spectrum.regular_equivalences(M3EX)


def test_chain_lattice_of_order_12():
    """A 12-open chain topology: every proper ideal is irreducible, the opens
    are nested initial segments, and everything verifies."""
    from semihyper.construct import FiniteTopology, from_topology

    chain = tuple(frozenset(range(1, k + 1)) for k in range(12))
    S = from_topology(FiniteTopology(11, chain))
    assert S.order == 12
    lat = enumerate_hyperideals(S)
    assert len(lat.ideals) == 12
    assert lat.ideals == tuple(frozenset(range(k + 1)) for k in range(12))
    pts = spectrum.irreducible_spectrum(S)
    assert len(pts) == 11
    topo = spectrum.spectrum_topology(S)
    assert len(topo.opens) == 12
    assert spectrum.verify_topology(S, topo).ok
    assert spectrum.lattice_map_check(S, topo).ok
    # opens are totally ordered by inclusion
    sets = sorted((o.point_set for o in topo.opens), key=len)
    for small, big in zip(sets, sets[1:]):
        assert small <= big


def test_large_chain_uses_pairwise_union_fallback():
    # 14 ideals exceed the exhaustive-subfamily cap; pairwise checks still run
    from semihyper.construct import FiniteTopology, from_topology
    from semihyper.spectrum import UNION_FAMILY_CAP

    chain = tuple(frozenset(range(1, k + 1)) for k in range(14))
    S = from_topology(FiniteTopology(13, chain))
    lat = enumerate_hyperideals(S)
    assert len(lat.ideals) == 14 > UNION_FAMILY_CAP
    topo = spectrum.spectrum_topology(S)
    assert spectrum.verify_topology(S, topo).ok
    assert spectrum.lattice_map_check(S, topo).ok


def test_m3_counterexample_surfaces():
    """The M3-lattice structure genuinely defeats the finite-intersection
    identity; verify this against a definitional recomputation."""
    from semihyper.construct import m3_lattice_example

    S = m3_lattice_example()
    topo = spectrum.spectrum_topology(S)
    report = spectrum.verify_topology(S, topo)
    assert not report.ok
    assert any("intersection identity fails" in p for p in report.problems)

    # independent re-verification: atoms are irreducible but not strongly so
    lat = enumerate_hyperideals(S)
    atoms = [I for I in lat.ideals if len(I) == 2]
    assert len(atoms) == 3
    for A in atoms:
        assert classify.is_irreducible(S, A)
        assert not classify.is_strongly_irreducible(S, A)
    A1, A2, A3 = atoms
    pts = spectrum.irreducible_spectrum(S)
    lhs = spectrum.theta(S, A1, pts) & spectrum.theta(S, A2, pts)
    rhs = spectrum.theta(S, A1 & A2, pts)
    assert lhs == fz(A3) and rhs == fz()

    # the lattice correspondence itself still holds
    assert spectrum.lattice_map_check(S, topo).ok
