"""Hyperideal enumeration, classification, arithmetic, and derived subsets."""

import pytest

from hyperring_lab import (
    EmptyOperand,
    NotAHyperideal,
    OrderTooLarge,
    ProperIdealRequired,
    WellDefinednessFailure,
    classify_ideal,
    enumerate_hyperideals,
    find_i_sets,
    generate_hyperideal,
    has_i_set,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_C_hyperideal,
    is_coprime,
    is_hyperideal,
    is_maximal,
    is_n_absorbing,
    is_prime,
    is_strong_C_hyperideal,
    make_zx_mod,
    mask_of,
    members,
    nilpotents,
    prime_hyperideals,
    product_ring,
    proper_hyperideals,
    quotient_by_ideal,
    radical,
    set_power,
    units,
    weak_zero_divisors,
)
from hyperring_lab.ideals import (
    cooccurrence_subgroup,
    n_absorbing_witness,
    product_class_C,
    subgroup_closure,
    sums_class_U,
)

import oracles as orc


def masks_to_sets(masks):
    return [members(m) for m in masks]


def test_is_hyperideal_frozen_cases():
    r = make_zx_mod(4, [2])
    assert is_hyperideal(r, mask_of([0, 2]))
    assert not is_hyperideal(r, mask_of([0, 1]))
    assert not is_hyperideal(r, 0)
    assert is_hyperideal(r, r.full)


def test_enumerate_matches_subset_filter_oracle():
    for ring in [make_zx_mod(4, [2]), make_zx_mod(6, [1]), make_zx_mod(6, [2, 3]),
                 product_ring(make_zx_mod(2, [1]), make_zx_mod(3, [1]))]:
        n, add, mul = orc.tables(ring)
        engine = {frozenset(members(m)) for m in enumerate_hyperideals(ring)}
        assert engine == set(orc.all_ideals(n, add, mul)), ring.name


def test_enumeration_is_sorted_and_cached():
    r = make_zx_mod(6, [1])
    found = enumerate_hyperideals(r)
    assert masks_to_sets(found) == [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]
    assert enumerate_hyperideals(r) == found
    assert masks_to_sets(proper_hyperideals(r)) == [[0], [0, 3], [0, 2, 4]]


def test_generate_hyperideal():
    r = make_zx_mod(4, [2])
    assert members(generate_hyperideal(r, mask_of([2]))) == [0, 2]
    assert members(generate_hyperideal(r, mask_of([1]))) == [0, 1, 2, 3]
    with pytest.raises(EmptyOperand):
        generate_hyperideal(r, 0)


def test_subgroup_closure_is_subtraction_closure():
    r = make_zx_mod(6, [1])
    assert members(subgroup_closure(r, mask_of([2]))) == [0, 2, 4]
    assert members(subgroup_closure(r, mask_of([5]))) == [0, 1, 2, 3, 4, 5]


def test_prime_and_maximal_frozen():
    r = make_zx_mod(4, [1])
    assert is_prime(r, mask_of([0, 2])) and is_maximal(r, mask_of([0, 2]))
    assert not is_prime(r, mask_of([0])) and not is_maximal(r, mask_of([0]))
    assert masks_to_sets(prime_hyperideals(make_zx_mod(6, [1]))) == [[0, 3], [0, 2, 4]]
    assert prime_hyperideals(make_zx_mod(4, [2])) == []


def test_properness_is_enforced():
    r = make_zx_mod(4, [1])
    with pytest.raises(ProperIdealRequired):
        is_prime(r, r.full)
    with pytest.raises(NotAHyperideal):
        is_prime(r, mask_of([0, 1]))
    with pytest.raises(ProperIdealRequired):
        quotient_by_ideal(r, r.full)


def test_radical_frozen():
    assert members(radical(make_zx_mod(4, [1]), mask_of([0]))) == [0, 2]
    assert members(radical(make_zx_mod(4, [1]), mask_of([0, 2]))) == [0, 2]
    assert members(radical(make_zx_mod(4, [2]), mask_of([0]))) == [0, 1, 2, 3]
    assert members(radical(make_zx_mod(6, [1]), mask_of([0]))) == [0]
    for ring in [make_zx_mod(4, [1]), make_zx_mod(6, [2, 3])]:
        n, add, mul = orc.tables(ring)
        for q in proper_hyperideals(ring):
            assert frozenset(members(radical(ring, q))) == orc.radical(n, add, mul, frozenset(members(q)))


def test_ideal_arithmetic_frozen():
    r = make_zx_mod(6, [1])
    evens = mask_of([0, 2, 4])
    threes = mask_of([0, 3])
    assert is_coprime(r, evens, threes)
    assert members(ideal_sum(r, evens, threes)) == [0, 1, 2, 3, 4, 5]
    assert members(ideal_product(r, evens, threes)) == [0]
    assert members(set_power(r, evens, 2)) == [0, 2, 4]
    assert members(ideal_power(r, threes, 2)) == [0, 3]
    with pytest.raises(ValueError):
        set_power(r, evens, 0)


def test_absorbing_witnesses_frozen():
    r = make_zx_mod(4, [2])
    assert n_absorbing_witness(r, mask_of([0]), 1) == (1, 2)
    assert n_absorbing_witness(r, mask_of([0]), 2) == (1, 1, 1)
    assert not is_n_absorbing(r, mask_of([0]), 2)
    r8 = make_zx_mod(8, [2])
    assert n_absorbing_witness(r8, mask_of([0]), 3) == (1, 1, 1, 1)
    r6 = make_zx_mod(6, [3])
    assert not is_n_absorbing(r6, mask_of([0]), 1)
    assert is_n_absorbing(r6, mask_of([0]), 2)
    assert is_n_absorbing(r6, mask_of([0, 2, 4]), 1)
    with pytest.raises(ValueError):
        is_n_absorbing(r6, mask_of([0]), 0)


def test_absorbing_witness_is_genuine():
    """The recorded tuple lands its full product in the ideal but no drop-one product."""
    r = make_zx_mod(8, [2])
    tup = n_absorbing_witness(r, mask_of([0]), 3)
    full = mask_of([0])
    prod = 1 << tup[0]
    for x in tup[1:]:
        prod = r.row_product(prod, x)
    assert prod & ~full == 0
    for i in range(len(tup)):
        rest = tup[:i] + tup[i + 1:]
        sub = 1 << rest[0]
        for x in rest[1:]:
            sub = r.row_product(sub, x)
        assert sub & ~full != 0


def test_class_C_and_cooccurrence_frozen():
    r = make_zx_mod(4, [1, 3])
    assert sorted(members(c) for c in product_class_C(r)) == [[0], [1], [1, 3], [2], [3]]
    assert sorted(members(u) for u in sums_class_U(r)) == [[0], [0, 2], [1], [1, 3], [2], [3]]
    assert members(cooccurrence_subgroup(r)) == [0, 2]
    assert members(cooccurrence_subgroup(make_zx_mod(4, [1]))) == [0]


def test_C_and_strong_C_frozen():
    r = make_zx_mod(4, [1, 3])
    assert is_C_hyperideal(r, mask_of([0]))
    assert not is_strong_C_hyperideal(r, mask_of([0]))
    assert is_C_hyperideal(r, mask_of([0, 2]))
    assert is_strong_C_hyperideal(r, mask_of([0, 2]))
    r6 = make_zx_mod(6, [3])
    for q in proper_hyperideals(r6):
        assert is_C_hyperideal(r6, q) and is_strong_C_hyperideal(r6, q)


def test_element_subsets_frozen():
    r = make_zx_mod(4, [1])
    assert members(nilpotents(r)) == [0, 2]
    assert members(units(r)) == [1, 3]
    assert members(weak_zero_divisors(r)) == [0, 2]
    r2 = make_zx_mod(4, [2])
    assert members(nilpotents(r2)) == [0, 1, 2, 3]
    assert units(r2) is None


def test_i_sets_frozen_and_oracle():
    r = make_zx_mod(4, [1])
    assert masks_to_sets(find_i_sets(r)) == [[1], [0, 1], [2, 3], [0, 2, 3]]
    assert has_i_set(r)
    n, add, mul = orc.tables(r)
    assert {frozenset(members(m)) for m in find_i_sets(r)} == set(orc.all_i_sets(n, add, mul))
    assert not has_i_set(make_zx_mod(4, [2]))
    with pytest.raises(OrderTooLarge):
        find_i_sets(product_ring(make_zx_mod(4, [1, 3]), make_zx_mod(4, [1, 3])))


def test_quotient_frozen_tables():
    r = make_zx_mod(4, [1])
    quot, proj = quotient_by_ideal(r, mask_of([0, 2]))
    assert quot.order == 2
    assert [list(row) for row in quot.add] == [[0, 1], [1, 0]]
    assert [members(c) for c in quot.mul[1]] == [[0], [1]]
    assert proj.table == (0, 1, 0, 1)
    again, _ = quotient_by_ideal(r, mask_of([0, 2]))
    assert again is quot


def test_quotient_collapses_to_singletons_on_cosets():
    r = make_zx_mod(6, [1])
    quot, proj = quotient_by_ideal(r, mask_of([0, 3]))
    assert quot.order == 3
    assert proj.is_surjective()
    for a in range(r.order):
        for b in range(r.order):
            image = proj.image_mask(r.mul[a][b])
            assert image == quot.mul[proj(a)][proj(b)]


def test_classify_ideal_frozen():
    r = make_zx_mod(4, [1])
    assert classify_ideal(r, mask_of([0, 2])) == {
        "proper": True,
        "prime": True,
        "maximal": True,
        "c_hyperideal": True,
        "strong_c_hyperideal": True,
    }
    assert classify_ideal(r, r.full)["proper"] is False
    assert classify_ideal(r, r.full)["prime"] is False
    with pytest.raises(NotAHyperideal):
        classify_ideal(r, mask_of([1]))
