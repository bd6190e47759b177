"""(s,n)-closedness, weak closedness, omega/Omega profiles, and the residue model."""

import math

import pytest

from hyperring_lab import (
    ProperIdealRequired,
    ZxResidueModel,
    big_omega,
    closed_profile,
    find_tough_zero,
    is_sn_Regular,
    is_sn_closed,
    is_sn_regular,
    is_weakly_sn_closed,
    make_zx_mod,
    mask_of,
    members,
    omega,
    product_ring,
    proper_hyperideals,
    sn_closed_witness,
    weakly_sn_closed_witness,
    zx_residue_closed,
    zx_residue_weakly_closed,
)
from hyperring_lab.closedness import land_mask, zero_in_mask

import oracles as orc

INF = math.inf


def test_closed_witness_frozen():
    r = make_zx_mod(4, [1])
    zero_ideal = mask_of([0])
    assert not is_sn_closed(r, zero_ideal, 2, 1)
    assert sn_closed_witness(r, zero_ideal, 2, 1) == 2
    assert is_sn_closed(r, zero_ideal, 2, 2)
    assert sn_closed_witness(r, zero_ideal, 2, 2) is None


def test_weakly_closed_ignores_zero_containing_powers():
    """2^2 = {0} lands in the zero ideal but carries 0, so it never witnesses."""
    r = make_zx_mod(4, [1])
    zero_ideal = mask_of([0])
    assert is_weakly_sn_closed(r, zero_ideal, 2, 1)
    assert weakly_sn_closed_witness(r, zero_ideal, 2, 1) is None
    assert not is_sn_closed(r, zero_ideal, 2, 1)


def test_closedness_matches_oracle():
    for ring in [make_zx_mod(4, [1]), make_zx_mod(4, [2]), make_zx_mod(8, [2]),
                 product_ring(make_zx_mod(2, [1]), make_zx_mod(4, [2]))]:
        n, add, mul = orc.tables(ring)
        for q in proper_hyperideals(ring):
            Q = frozenset(members(q))
            for s in range(1, 6):
                for k in range(1, 6):
                    assert is_sn_closed(ring, q, s, k) == orc.sn_closed(n, add, mul, Q, s, k)
                    assert is_weakly_sn_closed(ring, q, s, k) == orc.weakly_sn_closed(n, add, mul, Q, s, k)


def test_exponent_and_properness_validation():
    r = make_zx_mod(4, [1])
    with pytest.raises(ValueError):
        is_sn_closed(r, mask_of([0]), 0, 1)
    with pytest.raises(ProperIdealRequired):
        is_sn_closed(r, r.full, 2, 1)


def test_land_and_zero_in_masks_frozen():
    r = make_zx_mod(8, [2])
    zero_ideal = mask_of([0])
    expect = [[0], [0, 2, 4, 6], [0, 2, 4, 6], list(range(8)), list(range(8)), list(range(8))]
    assert [members(land_mask(r, zero_ideal, k)) for k in range(1, 7)] == expect
    assert [members(zero_in_mask(r, k)) for k in range(1, 7)] == expect


def test_omega_profiles_frozen():
    cases = [
        (make_zx_mod(4, [1]), [0], (1, 2, 2, 2, 2, 2), (1.0, INF, INF, INF, INF, INF), {2: 2, 3: 2, 4: 2, 5: 2, 6: 2}),
        (make_zx_mod(4, [1]), [0, 2], (1, 1, 1, 1, 1, 1), (INF,) * 6, {}),
        (make_zx_mod(4, [2]), [0], (1, 2, 3, 3, 3, 3), (1.0, 2.0, INF, INF, INF, INF), {2: 2, 3: 1, 4: 1, 5: 1, 6: 1}),
        (make_zx_mod(8, [2]), [0], (1, 2, 2, 4, 4, 4), (1.0, 3.0, 3.0, INF, INF, INF), {2: 2, 3: 2, 4: 1, 5: 1, 6: 1}),
    ]
    for ring, ideal, om, big, wits in cases:
        prof = closed_profile(ring, mask_of(ideal), 6, 6)
        assert prof.omega == om, ring.name
        assert prof.Omega == big, ring.name
        assert prof.witnesses == wits, ring.name
        assert prof.bound_L == ring.power_bound()


def test_omega_matches_scan_oracle():
    for ring in [make_zx_mod(4, [2]), make_zx_mod(8, [2]), make_zx_mod(6, [2, 3])]:
        n, add, mul = orc.tables(ring)
        for q in proper_hyperideals(ring):
            Q = frozenset(members(q))
            for s in range(1, 7):
                assert omega(ring, q, s) == orc.omega(n, add, mul, Q, s)


def test_omega_invariant_relations():
    """n >= omega(s) iff closed iff s <= Omega(n), on a sharp instance."""
    r = make_zx_mod(8, [2])
    zero_ideal = mask_of([0])
    for s in range(1, 7):
        for n in range(1, 7):
            closed = is_sn_closed(r, zero_ideal, s, n)
            assert closed == (n >= omega(r, zero_ideal, s))
            assert closed == (s <= big_omega(r, zero_ideal, n))


def test_profile_witnesses_are_sharp():
    r = make_zx_mod(8, [2])
    prof = closed_profile(r, mask_of([0]), 6, 6)
    for s, w in prof.witnesses.items():
        n = prof.omega_at(s)
        assert n > 1
        assert r.power(w, s) & ~mask_of([0]) == 0
        assert r.power(w, n - 1) & ~mask_of([0]) != 0


def test_tough_zero_frozen():
    r = make_zx_mod(4, [1])
    assert find_tough_zero(r, mask_of([0]), 2, 1) == 2
    assert find_tough_zero(r, mask_of([0]), 2, 2) is None
    assert find_tough_zero(r, mask_of([0, 2]), 3, 1) is None


def test_regular_flavors_frozen():
    r = make_zx_mod(4, [1])
    assert is_sn_regular(r, 1, 3, 1)
    assert is_sn_Regular(r, 1, 3, 1)
    assert not is_sn_regular(r, 2, 2, 1)
    assert not is_sn_Regular(r, 2, 2, 1)
    assert is_sn_regular(r, 2, 1, 2)


def test_Regular_subset_quantifier_collapses():
    """Existence over one element, over any subset, and over the full set agree."""
    for ring in [make_zx_mod(4, [1]), make_zx_mod(5, [2]), make_zx_mod(6, [2, 3])]:
        n, add, mul = orc.tables(ring)
        for a in range(n):
            for s in range(1, 5):
                for k in range(1, 5):
                    assert is_sn_Regular(ring, a, s, k) == orc.Regular_subsets(n, add, mul, a, s, k)
                    assert is_sn_regular(ring, a, s, k) == orc.regular(n, add, mul, a, s, k)


def test_residue_model_matches_finite_reduction():
    """dZ inside the multiplier model reduces exactly to {0} inside zx(d;X)."""
    for d, xs in [(4, [2]), (6, [2, 3]), (8, [2]), (9, [3])]:
        model = ZxResidueModel(d, xs)
        ring = make_zx_mod(d, xs)
        zero_ideal = mask_of([0])
        for s in range(1, 7):
            for n in range(1, 7):
                assert model.closed(s, n) == is_sn_closed(ring, zero_ideal, s, n), (d, xs, s, n)


def test_residue_model_frozen_examples():
    assert zx_residue_closed(105, [2, 4], 7, 3)
    assert zx_residue_closed(105, [2, 4], 7, 1)
    assert not zx_residue_closed(4, [2], 2, 1)
    assert ZxResidueModel(4, [2]).witness(2, 1) == 2
    assert zx_residue_weakly_closed(390, [7, 11], 5, 4)


def test_residue_model_weakly_equals_closed():
    """No nonzero integer has 0 among its power residues, so the weak form collapses."""
    model = ZxResidueModel(12, [2, 3])
    for s in range(1, 8):
        for n in range(1, 8):
            assert model.weakly_closed(s, n) == model.closed(s, n)


def test_residue_model_validation():
    with pytest.raises(ValueError):
        ZxResidueModel(1, [2])
    with pytest.raises(ValueError):
        ZxResidueModel(6, [])
    with pytest.raises(ValueError):
        ZxResidueModel(6, [0, 2])
    with pytest.raises(ValueError):
        ZxResidueModel(6, [2]).closed(0, 1)
