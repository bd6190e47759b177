"""Tables, axioms, constructions, powers, and structure maps."""

import pytest

from hyperring_lab import (
    AxiomReport,
    FiniteHyperring,
    HomMap,
    MalformedTables,
    canonical_identity,
    check_good_hom,
    is_strongly_distributive,
    make_zx_mod,
    mask_of,
    members,
    product_ring,
    scalar_identity,
    structure_flags,
    validate_axioms,
    weak_identities,
)
from hyperring_lab.core import factor_mask, identity_hom, pair_index, pair_split

import oracles as orc


def test_make_zx_mod_singleton_tables():
    """a*b = {2ab mod 4} with |X| = 1."""
    r = make_zx_mod(4, [2])
    assert r.order == 4
    assert r.name == "zx(4;2)"
    assert members(r.product_mask(1, 1)) == [2]
    assert members(r.product_mask(0, 3)) == [0]
    assert validate_axioms(r).ok


def test_make_zx_mod_two_multipliers_tables():
    r = make_zx_mod(4, [1, 3])
    assert members(r.product_mask(1, 1)) == [1, 3]
    assert members(r.product_mask(2, 2)) == [0]
    assert validate_axioms(r).ok


def test_make_zx_mod_rejects_bad_arguments():
    with pytest.raises(MalformedTables):
        make_zx_mod(1, [1])
    with pytest.raises(MalformedTables):
        make_zx_mod(4, [])


def test_axiom_report_is_ordered_and_named():
    report = validate_axioms(make_zx_mod(4, [2]))
    names = [c.name for c in report.axioms]
    assert names == [
        "zero_identity",
        "add_commutative",
        "add_associative",
        "add_inverse",
        "mul_commutative",
        "mul_associative",
        "left_distributive_inclusion",
        "right_distributive_inclusion",
        "sign_rule",
    ]
    assert report.ok and report.failed() == []


ORACLE_AXIOM_NAMES = {
    "zero_identity": "add_identity",
    "add_commutative": "add_commutative",
    "add_associative": "add_associative",
    "add_inverse": "add_inverses",
    "mul_commutative": "mul_commutative",
    "mul_associative": "mul_associative",
    "left_distributive_inclusion": "distributive_inclusion",
    "right_distributive_inclusion": "distributive_inclusion",
    "sign_rule": "sign_rule",
}


def test_axiom_report_matches_oracle_on_small_rings():
    for ring in [make_zx_mod(m, xs) for m, xs in [(4, [2]), (4, [1, 3]), (5, [2]), (6, [2, 3])]]:
        n, add, mul = orc.tables(ring)
        oracle = orc.axiom_report(n, add, mul)
        report = validate_axioms(ring)
        assert report.ok == all(oracle.values())
        for check in report.axioms:
            assert check.ok == oracle[ORACLE_AXIOM_NAMES[check.name]], check.name


def test_altered_cell_breaks_axioms_with_witness():
    """Overwriting 1*1 to {1} in the 2ab-mod-4 tables must be caught."""
    r = make_zx_mod(4, [2])
    mul = [list(row) for row in r.mul]
    mul[1][1] = mask_of([1])
    broken = FiniteHyperring.from_masks([list(row) for row in r.add], mul)
    report = validate_axioms(broken)
    assert not report.ok
    assert set(report.failed()) & {"mul_associative", "distributive_inclusion", "mul_commutative", "sign_rule"}
    witness = report[report.failed()[0]].witness
    assert witness is not None and all(0 <= x < 4 for x in witness)


def test_from_masks_rejects_empty_cells_and_bad_shapes():
    with pytest.raises(MalformedTables):
        FiniteHyperring.from_masks([[0, 1], [1, 0]], [[1, 1], [1, 0]])
    with pytest.raises(MalformedTables):
        FiniteHyperring.from_masks([[0], [0]], [[1], [1]])


def test_power_sequences_frozen():
    r1 = make_zx_mod(4, [2])
    assert members(r1.power(1, 1)) == [1]
    assert members(r1.power(1, 2)) == [2]
    assert members(r1.power(1, 3)) == [0]
    assert members(r1.power(1, 7)) == [0]
    r2 = make_zx_mod(4, [1, 3])
    assert members(r2.power(3, 1)) == [3]
    assert members(r2.power(3, 2)) == [1, 3]
    assert members(r2.power(3, 9)) == [1, 3]


def test_power_profile_tail_and_period():
    prof = make_zx_mod(4, [2]).power_profile(1)
    assert prof.tail == 3 and prof.period == 1
    prof = make_zx_mod(4, [1, 3]).power_profile(3)
    assert prof.tail == 2 and prof.period == 1
    with pytest.raises(ValueError):
        prof.power(0)


def test_powers_match_oracle_far_past_the_bound():
    for ring in [make_zx_mod(6, [2, 3]), make_zx_mod(8, [2]), make_zx_mod(7, [3])]:
        n, add, mul = orc.tables(ring)
        for a in range(n):
            for k in range(1, 2 * ring.power_bound() + 3):
                assert frozenset(members(ring.power(a, k))) == orc.power(mul, a, k)


def test_product_ring_componentwise():
    r = product_ring(make_zx_mod(4, [2]), make_zx_mod(4, [1, 3]))
    assert r.order == 16
    a = pair_index(4, 1, 1)
    cell = r.product_mask(a, a)
    expect = {pair_index(4, 2, 1), pair_index(4, 2, 3)}
    assert set(members(cell)) == expect
    assert validate_axioms(r).ok
    assert pair_split(4, a) == (1, 1)


def test_factor_mask_projections():
    mask = mask_of([pair_index(3, 0, 1), pair_index(3, 2, 1), pair_index(3, 2, 2)])
    assert members(factor_mask(mask, 3, 0)) == [0, 2]
    assert members(factor_mask(mask, 3, 1)) == [1, 2]


def test_identity_flavors():
    strong = make_zx_mod(4, [1])
    assert scalar_identity(strong) == 1
    assert canonical_identity(strong) == 1
    loose = make_zx_mod(4, [1, 3])
    assert scalar_identity(loose) is None
    assert weak_identities(loose) == [1, 3]
    assert canonical_identity(loose) == 1
    assert scalar_identity(make_zx_mod(4, [2])) is None


def test_strong_distributivity_flag():
    assert is_strongly_distributive(make_zx_mod(4, [2]))
    assert not is_strongly_distributive(make_zx_mod(4, [1, 3]))


def test_structure_flags_bundle():
    flags = structure_flags(make_zx_mod(4, [1]))
    assert flags == {
        "is_hyperring": True,
        "strongly_distributive": True,
        "has_identity": True,
        "has_scalar_identity": True,
        "identity": 1,
    }


def test_good_hom_identity_and_swap():
    r = make_zx_mod(4, [2])
    ok, witness = check_good_hom(identity_hom(r))
    assert ok and witness is None
    swap = HomMap(r, r, (0, 3, 2, 1))
    ok, witness = check_good_hom(swap)
    assert ok


def test_bad_hom_reports_witness():
    r = make_zx_mod(4, [2])
    collapse = HomMap(r, r, (0, 0, 2, 0))
    ok, witness = check_good_hom(collapse)
    assert not ok and witness is not None


def test_hom_masks():
    r = make_zx_mod(4, [2])
    f = HomMap(r, r, (0, 3, 2, 1))
    assert members(f.image_mask(mask_of([1, 2]))) == [2, 3]
    assert members(f.preimage_mask(mask_of([3]))) == [1]
    assert members(f.kernel_mask()) == [0]
    assert f.is_surjective()
