"""Registry of machine-checkable statements about closedness of hyperideals.

Each check instantiates one quantified statement on a single finite
hyperring: it enumerates every hypothesis-satisfying combination of ideals,
elements, and exponent pairs (the check's "cases"), evaluates the claimed
conclusion exactly, and reports the first failing combination in scan order.
Scan order is deterministic -- ideals ascending as enumerated, elements
ascending, exponent pairs in lexicographic order -- so across an instance
stream the first counterexample reported is the least one.

Statements quantified over all exponents are decided on a finite window:
every element's hyperpowers are eventually periodic, so containment masks
stabilize at the ring's power bound and nothing changes beyond it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations
from typing import Callable, Optional

from .bitsets import is_subset, iter_bits, members
from .closedness import land_mask, zero_in_mask
from .core import (
    FiniteHyperring,
    HomMap,
    UnknownCheckId,
    check_good_hom,
    factor_mask,
    identity_hom,
    is_strongly_distributive,
    make_zx_mod,
    product_ring,
    scalar_identity,
)
from .fundamental import ideal_in_fundamental
from .ideals import (
    enumerate_hyperideals,
    has_i_set,
    ideal_product,
    is_C_hyperideal,
    is_hyperideal,
    is_n_absorbing,
    is_strong_C_hyperideal,
    nilpotents,
    prime_hyperideals,
    proper_hyperideals,
    quotient_by_ideal,
    radical,
    set_power,
    units,
    weak_zero_divisors,
)


@dataclass(frozen=True)
class CheckParams:
    """Window bounds shared by all checks."""

    smax: int = 6
    nmax: int = 6
    tuple_max: int = 3
    absorbing_max_n: int = 3


@dataclass(frozen=True)
class Counterexample:
    check_id: str
    ring: FiniteHyperring
    ideals: tuple[int, ...]
    elements: tuple[int, ...]
    sn: Optional[tuple[int, int]]
    detail: str


@dataclass
class RingOutcome:
    """Accumulated result of running one check over one hyperring."""

    applicable: int = 0
    counterexample: Optional[Counterexample] = None
    notes: list[str] = field(default_factory=list)

    def case(self, ok: bool, factory) -> None:
        self.applicable += 1
        if not ok and self.counterexample is None:
            self.counterexample = factory()


@dataclass(frozen=True)
class Check:
    id: str
    statement: str
    fn: Callable[[FiniteHyperring, CheckParams], RingOutcome]
    note: str = ""


# -- shared mask-level shortcuts (hypotheses already guarantee proper ideals) ----


def _closed(ring, q, s, n):
    return land_mask(ring, q, s) & ~land_mask(ring, q, n) == 0


def _weakly(ring, q, s, n):
    return (
        land_mask(ring, q, s) & ~zero_in_mask(ring, s) & ~land_mask(ring, q, n)
        == 0
    )


def _closed_witness(ring, q, s, n):
    bad = land_mask(ring, q, s) & ~land_mask(ring, q, n)
    return members(bad)[0] if bad else None


def _weakly_witness(ring, q, s, n):
    bad = land_mask(ring, q, s) & ~zero_in_mask(ring, s) & ~land_mask(ring, q, n)
    return members(bad)[0] if bad else None


def _omega(ring, q, s):
    ls = land_mask(ring, q, s)
    for n in range(1, s + 1):
        if is_subset(ls, land_mask(ring, q, n)):
            return n
    raise AssertionError("unreachable: (s,s) is always a closed pair")


def _big_omega(ring, q, n):
    bound = ring.power_bound()
    ln = land_mask(ring, q, n)
    if is_subset(land_mask(ring, q, bound), ln):
        return math.inf
    best = 1
    for s in range(1, bound + 1):
        if is_subset(land_mask(ring, q, s), ln):
            best = s
    return float(best)


def _kmax(ring, p):
    return max(ring.power_bound(), p.smax, p.nmax)


def _window(p):
    return [(s, n) for s in range(1, p.smax + 1) for n in range(1, p.nmax + 1)]


def _set_power_cached(ring, mask, s):
    key = ("setpow", mask, s)
    cached = ring._cache.get(key)
    if cached is None:
        cached = set_power(ring, mask, s)
        ring._cache[key] = cached
    return cached


def _regular_rows(ring, a, s):
    """Masks a^s * b for every single element b."""
    key = ("regrow", a, s)
    cached = ring._cache.get(key)
    if cached is None:
        base = ring.power(a, s)
        cached = tuple(ring.row_product(base, b) for b in ring.elements)
        ring._cache[key] = cached
    return cached


def _regular(ring, a, s, n):
    an = ring.power(a, n)
    return any(is_subset(an, row) for row in _regular_rows(ring, a, s))


def _Regular(ring, a, s, n):
    key = ("regall", a, s)
    cached = ring._cache.get(key)
    if cached is None:
        cached = ring.hyper_product(ring.power(a, s), ring.full)
        ring._cache[key] = cached
    return is_subset(ring.power(a, n), cached)


def _box_mask(m1, m2, n2):
    """Pairs mask of m1 x m2 under the (a1, a2) -> a1*n2 + a2 encoding."""
    out = 0
    for a1 in iter_bits(m1):
        base = a1 * n2
        for a2 in iter_bits(m2):
            out |= 1 << (base + a2)
    return out


def _product_factors(ring):
    return ring._cache.get("factors")


# -- closed hyperideals -----------------------------------------------------------


def _run_absorbing_closed(ring, p):
    out = RingOutcome()
    ks = max(ring.power_bound(), p.smax)
    for q in proper_hyperideals(ring):
        if not is_C_hyperideal(ring, q):
            continue
        for n in range(1, p.absorbing_max_n + 1):
            if not is_n_absorbing(ring, q, n):
                continue
            for s in range(1, ks + 1):
                w = _closed_witness(ring, q, s, n)
                out.case(
                    w is None,
                    lambda q=q, s=s, n=n, w=w: Counterexample(
                        "T2_3",
                        ring,
                        (q,),
                        (w,),
                        (s, n),
                        "%d-absorbing C-hyperideal not (%d,%d)-closed at %d"
                        % (n, s, n, w),
                    ),
                )
    return out


def _run_prime_products(ring, p):
    out = RingOutcome()
    primes = prime_hyperideals(ring)
    for t in range(1, p.tuple_max + 1):
        for combo in combinations_with_replacement(primes, t):
            prod = combo[0]
            for q in combo[1:]:
                prod = ideal_product(ring, prod, q)
            for s in range(1, p.smax + 1):
                for n in range(min(s, t), p.nmax + 1):
                    w = _closed_witness(ring, prod, s, n)
                    out.case(
                        w is None,
                        lambda combo=combo, prod=prod, s=s, n=n, w=w: Counterexample(
                            "T2_4",
                            ring,
                            combo + (prod,),
                            (w,),
                            (s, n),
                            "product of %d primes not (%d,%d)-closed at %d"
                            % (len(combo), s, n, w),
                        ),
                    )
    return out


def _run_closed_combinations(ring, p, part):
    out = RingOutcome()
    propers = proper_hyperideals(ring)
    for t in range(1, p.tuple_max + 1):
        for combo in combinations_with_replacement(propers, t):
            if part == "product":
                agg = combo[0]
                for q in combo[1:]:
                    agg = ideal_product(ring, agg, q)
            else:
                agg = ring.full
                for q in combo:
                    agg &= q
            for s in range(1, p.smax + 1):
                nis = [_omega(ring, q, s) for q in combo]
                low = min(s, sum(nis) if part == "product" else max(nis))
                for n in range(max(1, low), p.nmax + 1):
                    w = _closed_witness(ring, agg, s, n)
                    out.case(
                        w is None,
                        lambda combo=combo, agg=agg, s=s, n=n, w=w: Counterexample(
                            "T2_5i" if part == "product" else "T2_5ii",
                            ring,
                            combo + (agg,),
                            (w,),
                            (s, n),
                            "%s of (s=%d, omega)-closed ideals not (%d,%d)-closed at %d"
                            % (part, s, s, n, w),
                        ),
                    )
    return out


def _run_intersection_closed(ring, p):
    out = RingOutcome()
    propers = proper_hyperideals(ring)
    for t in range(2, p.tuple_max + 1):
        for combo in combinations(propers, t):
            inter = ring.full
            for q in combo:
                inter &= q
            for s, n in _window(p):
                if not all(_closed(ring, q, s, n) for q in combo):
                    continue
                w = _closed_witness(ring, inter, s, n)
                out.case(
                    w is None,
                    lambda combo=combo, inter=inter, s=s, n=n, w=w: Counterexample(
                        "C2_6",
                        ring,
                        combo + (inter,),
                        (w,),
                        (s, n),
                        "intersection of (%d,%d)-closed ideals open at %d"
                        % (s, n, w),
                    ),
                )
    return out


def _run_coprime_products(ring, p):
    out = RingOutcome()
    propers = proper_hyperideals(ring)
    for t in range(2, p.tuple_max + 1):
        for combo in combinations(propers, t):
            if not all(
                ring.minkowski_sum(a, b) == ring.full
                for a, b in combinations(combo, 2)
            ):
                continue
            prod = combo[0]
            for q in combo[1:]:
                prod = ideal_product(ring, prod, q)
            for s, n in _window(p):
                if not all(_closed(ring, q, s, n) for q in combo):
                    continue
                w = _closed_witness(ring, prod, s, n)
                out.case(
                    w is None,
                    lambda combo=combo, prod=prod, s=s, n=n, w=w: Counterexample(
                        "C2_7",
                        ring,
                        combo + (prod,),
                        (w,),
                        (s, n),
                        "product of coprime (%d,%d)-closed ideals open at %d"
                        % (s, n, w),
                    ),
                )
    return out


def _run_square_sum(ring, p):
    out = RingOutcome()
    all_ideals = enumerate_hyperideals(ring)
    for q in proper_hyperideals(ring):
        if not is_strong_C_hyperideal(ring, q):
            continue
        for s in range(1, p.smax + 1):
            if not _closed(ring, q, s, 2):
                continue
            for pm in all_ideals:
                if not is_subset(_set_power_cached(ring, pm, s), q):
                    continue
                p2 = _set_power_cached(ring, pm, 2)
                concl = ring.minkowski_sum(p2, p2)
                out.case(
                    is_subset(concl, q),
                    lambda q=q, pm=pm, s=s: Counterexample(
                        "T2_8",
                        ring,
                        (q, pm),
                        (),
                        (s, 2),
                        "P^%d inside Q but P^2+P^2 escapes Q" % s,
                    ),
                )
    return out


def _run_class_ring_transfer(ring, p):
    out = RingOutcome()
    for q in proper_hyperideals(ring):
        tr = ideal_in_fundamental(ring, q, p.smax, p.nmax)
        if tr.skipped:
            out.notes.append(
                "skip ideal %s: %s" % (members(q), tr.note)
            )
            continue
        for s, n, hyper, ringside in tr.pairs:
            out.case(
                hyper == ringside,
                lambda q=q, s=s, n=n, hyper=hyper: Counterexample(
                    "T2_9",
                    ring,
                    (q,),
                    (),
                    (s, n),
                    "hyperring side %s but class-ring side %s"
                    % (hyper, not hyper),
                ),
            )
    return out


def _run_radical_characterization(ring, p):
    out = RingOutcome()
    bound = ring.power_bound()
    for q in proper_hyperideals(ring):
        for s, n in _window(p):
            if s > n:
                continue
            w = _closed_witness(ring, q, s, n)
            out.case(
                w is None,
                lambda q=q, s=s, n=n, w=w: Counterexample(
                    "R2_rad",
                    ring,
                    (q,),
                    (w,),
                    (s, n),
                    "pair with s <= n not closed at %d" % w,
                ),
            )
        radical_fixed = radical(ring, q) == q
        always_closed = is_subset(land_mask(ring, q, bound), q)
        out.case(
            radical_fixed == always_closed,
            lambda q=q, rf=radical_fixed: Counterexample(
                "R2_rad",
                ring,
                (q,),
                (),
                None,
                "radical-fixed %s but closed-for-all-pairs %s" % (rf, not rf),
            ),
        )
    return out


def _run_step_down(ring, p):
    out = RingOutcome()
    for q in proper_hyperideals(ring):
        for s, n in _window(p):
            if s == n:
                continue
            if not (_closed(ring, q, s, n) and _closed(ring, q, s + 1, n + 1)):
                continue
            w = _closed_witness(ring, q, s + 1, n)
            out.case(
                w is None,
                lambda q=q, s=s, n=n, w=w: Counterexample(
                    "T2_10",
                    ring,
                    (q,),
                    (w,),
                    (s + 1, n),
                    "(%d,%d) and (%d,%d) closed but (%d,%d) open at %d"
                    % (s, n, s + 1, n + 1, s + 1, n, w),
                ),
            )
    return out


def _run_pair_monotone(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    for q in proper_hyperideals(ring):
        for s, n in _window(p):
            if not _closed(ring, q, s, n):
                continue
            bad = None
            for s2 in range(1, s + 1):
                for n2 in range(n, kk + 1):
                    if not _closed(ring, q, s2, n2):
                        bad = (s2, n2)
                        break
                if bad:
                    break
            out.case(
                bad is None,
                lambda q=q, s=s, n=n, bad=bad: Counterexample(
                    "L2_11",
                    ring,
                    (q,),
                    (),
                    bad,
                    "(%d,%d) closed but weaker pair %s open" % (s, n, bad),
                ),
            )
    return out


def _run_two_absorbing_spread(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    for q in proper_hyperideals(ring):
        if not is_C_hyperideal(ring, q):
            continue
        for n in range(3, kk + 1):
            if not (_closed(ring, q, n, 2) and _closed(ring, q, n + 1, 2)):
                continue
            bad = next(
                (t for t in range(1, kk + 1) if not _closed(ring, q, t, 2)),
                None,
            )
            out.case(
                bad is None,
                lambda q=q, n=n, bad=bad: Counterexample(
                    "T2_12i",
                    ring,
                    (q,),
                    (),
                    (bad, 2),
                    "(%d,2),(%d,2) closed but (%d,2) open" % (n, n + 1, bad),
                ),
            )
    return out


def _run_half_exponent_spread(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    for q in proper_hyperideals(ring):
        if not is_C_hyperideal(ring, q):
            continue
        for s in range(1, kk + 1):
            for n in range(1, p.nmax + 1):
                if 2 * n > s or not _closed(ring, q, s, n):
                    continue
                bad = next(
                    (t for t in range(1, kk + 1) if not _closed(ring, q, t, n)),
                    None,
                )
                out.case(
                    bad is None,
                    lambda q=q, s=s, n=n, bad=bad: Counterexample(
                        "T2_12ii",
                        ring,
                        (q,),
                        (),
                        (bad, n),
                        "(%d,%d) closed with 2n <= s but (%d,%d) open"
                        % (s, n, bad, n),
                    ),
                )
    return out


def _run_order_comparisons(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    propers = proper_hyperideals(ring)
    for pm, qm in permutations(propers, 2):
        cont = all(
            not _closed(ring, pm, s, n) or _closed(ring, qm, s, n)
            for s in range(1, kk + 1)
            for n in range(1, kk + 1)
        )
        by_omega = all(
            _omega(ring, qm, s) <= _omega(ring, pm, s) for s in range(1, kk + 1)
        )
        by_Omega = all(
            _big_omega(ring, pm, n) <= _big_omega(ring, qm, n)
            for n in range(1, kk + 1)
        )
        out.case(
            cont == by_omega == by_Omega,
            lambda pm=pm, qm=qm, c=cont, o=by_omega, O=by_Omega: Counterexample(
                "R2_omega",
                ring,
                (pm, qm),
                (),
                None,
                "containment %s, omega comparison %s, Omega comparison %s"
                % (c, o, O),
            ),
        )
    return out


def _run_omega_jump(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    for q in proper_hyperideals(ring):
        for s in range(1, kk + 1):
            w = _omega(ring, q, s)
            if w >= s:
                continue
            w2 = _omega(ring, q, s + 1)
            out.case(
                w2 == w or w2 >= w + 2,
                lambda q=q, s=s, w=w, w2=w2: Counterexample(
                    "T2_13",
                    ring,
                    (q,),
                    (),
                    (s, w),
                    "omega(%d)=%d but omega(%d)=%d" % (s, w, s + 1, w2),
                ),
            )
    return out


def _run_Omega_jump(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    for q in proper_hyperideals(ring):
        for n in range(1, kk + 1):
            big = _big_omega(ring, q, n)
            if big <= n:
                continue
            big2 = _big_omega(ring, q, n + 1)
            out.case(
                big2 == big or big2 >= big + 2,
                lambda q=q, n=n, big=big, big2=big2: Counterexample(
                    "T2_14",
                    ring,
                    (q,),
                    (),
                    None,
                    "Omega(%d)=%s but Omega(%d)=%s" % (n, big, n + 1, big2),
                ),
            )
    return out


def _run_intersection_bounds(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    for pm, qm in combinations(proper_hyperideals(ring), 2):
        im = pm & qm
        for s in range(1, kk + 1):
            bound = max(_omega(ring, pm, s), _omega(ring, qm, s))
            got = _omega(ring, im, s)
            out.case(
                got <= bound,
                lambda pm=pm, qm=qm, im=im, s=s, got=got, bound=bound: Counterexample(
                    "T2_15",
                    ring,
                    (pm, qm, im),
                    (),
                    (s, bound),
                    "omega of intersection %d exceeds pointwise max %d"
                    % (got, bound),
                ),
            )
        for n in range(1, kk + 1):
            bound = min(_big_omega(ring, pm, n), _big_omega(ring, qm, n))
            got = _big_omega(ring, im, n)
            out.case(
                bound <= got,
                lambda pm=pm, qm=qm, im=im, n=n, got=got, bound=bound: Counterexample(
                    "T2_15",
                    ring,
                    (pm, qm, im),
                    (),
                    None,
                    "Omega of intersection %s below pointwise min %s"
                    % (got, bound),
                ),
            )
    return out


def _pairset_equal(ring, pm, qm, im, kk):
    return all(
        (_closed(ring, pm, s, n) and _closed(ring, qm, s, n))
        == _closed(ring, im, s, n)
        for s in range(1, kk + 1)
        for n in range(1, kk + 1)
    )


def _run_omega_exactness(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    for pm, qm in combinations(proper_hyperideals(ring), 2):
        im = pm & qm
        lhs = all(
            _omega(ring, im, s) == max(_omega(ring, pm, s), _omega(ring, qm, s))
            for s in range(1, kk + 1)
        )
        rhs = _pairset_equal(ring, pm, qm, im, kk)
        out.case(
            lhs == rhs,
            lambda pm=pm, qm=qm, im=im, lhs=lhs: Counterexample(
                "T2_16",
                ring,
                (pm, qm, im),
                (),
                None,
                "omega equality %s but pair-set equality %s" % (lhs, not lhs),
            ),
        )
    return out


def _run_Omega_exactness(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    for pm, qm in combinations(proper_hyperideals(ring), 2):
        im = pm & qm
        lhs = all(
            _big_omega(ring, im, n)
            == min(_big_omega(ring, pm, n), _big_omega(ring, qm, n))
            for n in range(1, kk + 1)
        )
        rhs = _pairset_equal(ring, pm, qm, im, kk)
        out.case(
            lhs == rhs,
            lambda pm=pm, qm=qm, im=im, lhs=lhs: Counterexample(
                "T2_17",
                ring,
                (pm, qm, im),
                (),
                None,
                "Omega equality %s but pair-set equality %s" % (lhs, not lhs),
            ),
        )
    return out


def _run_invariant_equivalence(ring, p):
    out = RingOutcome()
    kk = _kmax(ring, p)
    for pm, qm in combinations(proper_hyperideals(ring), 2):
        im = pm & qm
        via_omega = all(
            _omega(ring, im, s) == max(_omega(ring, pm, s), _omega(ring, qm, s))
            for s in range(1, kk + 1)
        )
        via_Omega = all(
            _big_omega(ring, im, n)
            == min(_big_omega(ring, pm, n), _big_omega(ring, qm, n))
            for n in range(1, kk + 1)
        )
        out.case(
            via_omega == via_Omega,
            lambda pm=pm, qm=qm, im=im, a=via_omega: Counterexample(
                "C2_18",
                ring,
                (pm, qm, im),
                (),
                None,
                "omega equality %s but Omega equality %s" % (a, not a),
            ),
        )
    return out


# -- weakly closed hyperideals ----------------------------------------------------


def _run_weakly_basics(ring, p):
    out = RingOutcome()
    propers = proper_hyperideals(ring)
    for pm, qm in combinations(propers, 2):
        im = pm & qm
        for s, n in _window(p):
            if not (_weakly(ring, pm, s, n) and _weakly(ring, qm, s, n)):
                continue
            w = _weakly_witness(ring, im, s, n)
            out.case(
                w is None,
                lambda pm=pm, qm=qm, im=im, s=s, n=n, w=w: Counterexample(
                    "D3_w",
                    ring,
                    (pm, qm, im),
                    (w,),
                    (s, n),
                    "intersection of weakly (%d,%d)-closed ideals open at %d"
                    % (s, n, w),
                ),
            )
    for q in propers:
        for s, n in _window(p):
            if not _weakly(ring, q, s, n):
                continue
            w = _weakly_witness(ring, q, s, n + 1)
            out.case(
                w is None,
                lambda q=q, s=s, n=n, w=w: Counterexample(
                    "D3_w",
                    ring,
                    (q,),
                    (w,),
                    (s, n + 1),
                    "weakly (%d,%d)-closed but weakly (%d,%d) open at %d"
                    % (s, n, s, n + 1, w),
                ),
            )
        if not is_C_hyperideal(ring, q):
            continue
        for s, n in _window(p):
            if not _weakly(ring, q, s, n):
                continue
            tough = zero_in_mask(ring, s) & ~land_mask(ring, q, n)
            out.case(
                (not _closed(ring, q, s, n)) == bool(tough),
                lambda q=q, s=s, n=n, tough=tough: Counterexample(
                    "D3_w",
                    ring,
                    (q,),
                    tuple(members(tough)[:1]),
                    (s, n),
                    "not-closed %s but tough-zero existence %s"
                    % (not _closed(ring, q, s, n), bool(tough)),
                ),
            )
    return out


def _run_tough_zero_shift(ring, p):
    out = RingOutcome()
    for q in proper_hyperideals(ring):
        if not is_strong_C_hyperideal(ring, q):
            continue
        for s, n in _window(p):
            if not _weakly(ring, q, s, n):
                continue
            tough = zero_in_mask(ring, s) & ~land_mask(ring, q, n)
            for x in members(tough):
                bad = next(
                    (
                        a
                        for a in members(q)
                        if not ring.zero_in_power(ring.add[x][a], s)
                    ),
                    None,
                )
                out.case(
                    bad is None,
                    lambda q=q, s=s, n=n, x=x, bad=bad: Counterexample(
                        "T3_4",
                        ring,
                        (q,),
                        (x, bad),
                        (s, n),
                        "tough zero %d but 0 not in (%d+%d)^%d" % (x, x, bad, s),
                    ),
                )
    return out


def _run_weakly_nilpotent(ring, p):
    out = RingOutcome()
    ups = nilpotents(ring)
    for q in proper_hyperideals(ring):
        if not is_strong_C_hyperideal(ring, q):
            continue
        for s, n in _window(p):
            if not _weakly(ring, q, s, n) or _closed(ring, q, s, n):
                continue
            escape = q & ~ups
            out.case(
                escape == 0,
                lambda q=q, s=s, n=n, escape=escape: Counterexample(
                    "T3_5",
                    ring,
                    (q,),
                    tuple(members(escape)[:1]),
                    (s, n),
                    "weakly-not-closed ideal contains non-nilpotent %s"
                    % members(escape)[:1],
                ),
            )
    return out


def _run_nilpotent_ideal_criterion(ring, p):
    out = RingOutcome()
    e = scalar_identity(ring)
    if (
        not is_strongly_distributive(ring)
        or e is None
        or e == ring.zero
        or not has_i_set(ring)
    ):
        return out
    ups = nilpotents(ring)
    inside = [
        q for q in proper_hyperideals(ring) if is_subset(q, ups)
    ]
    for s, n in _window(p):
        if s <= n:
            continue
        every_weak = all(_weakly(ring, q, s, n) for q in inside)
        zeros = (ups & ~zero_in_mask(ring, s)) == 0
        out.case(
            every_weak == zeros,
            lambda s=s, n=n, a=every_weak: Counterexample(
                "T3_6",
                ring,
                (),
                (),
                (s, n),
                "all nilpotent-contained ideals weakly closed %s but "
                "0 in x^s for all nilpotent x %s" % (a, not a),
            ),
        )
    return out


# -- regular elements ----------------------------------------------------------------


def _run_regular_implies_Regular(ring, p):
    out = RingOutcome()
    for a in ring.elements:
        for s, n in _window(p):
            if not _regular(ring, a, s, n):
                continue
            out.case(
                _Regular(ring, a, s, n),
                lambda a=a, s=s, n=n: Counterexample(
                    "D3_reg",
                    ring,
                    (),
                    (a,),
                    (s, n),
                    "element (%d,%d)-regular but not (%d,%d)-Regular"
                    % (s, n, s, n),
                ),
            )
    return out


def _run_regular_iff_small_exponent(ring, p):
    out = RingOutcome()
    e = scalar_identity(ring)
    if not is_strongly_distributive(ring) or e is None:
        return out
    um = units(ring)
    zw = weak_zero_divisors(ring)
    pool = ring.full & ~(um | zw)
    for a in members(pool):
        for s, n in _window(p):
            out.case(
                _regular(ring, a, s, n) == (s <= n),
                lambda a=a, s=s, n=n: Counterexample(
                    "T3_9",
                    ring,
                    (),
                    (a,),
                    (s, n),
                    "regularity %s but s <= n is %s"
                    % (_regular(ring, a, s, n), s <= n),
                ),
            )
    return out


def _run_regular_step(ring, p):
    out = RingOutcome()
    for a in ring.elements:
        for s, n in _window(p):
            if s <= n or not _regular(ring, a, s, n):
                continue
            out.case(
                _Regular(ring, a, s + 1, n),
                lambda a=a, s=s, n=n: Counterexample(
                    "T3_10",
                    ring,
                    (),
                    (a,),
                    (s + 1, n),
                    "(%d,%d)-regular element not (%d,%d)-Regular"
                    % (s, n, s + 1, n),
                ),
            )
    return out


def _run_units_Regular(ring, p):
    out = RingOutcome()
    um = units(ring)
    if um is None:
        return out
    for a in members(um):
        for s, n in _window(p):
            out.case(
                _Regular(ring, a, s, n),
                lambda a=a, s=s, n=n: Counterexample(
                    "T3_11",
                    ring,
                    (),
                    (a,),
                    (s, n),
                    "unit not (%d,%d)-Regular" % (s, n),
                ),
            )
    return out


def _run_every_ideal_weakly(ring, p):
    out = RingOutcome()
    if not is_strongly_distributive(ring) or not has_i_set(ring):
        return out
    ups = nilpotents(ring)
    propers = proper_hyperideals(ring)
    for s, n in _window(p):
        if s <= n:
            continue
        every_weak = all(_weakly(ring, q, s, n) for q in propers)
        rhs = (ups & ~zero_in_mask(ring, s)) == 0 and all(
            _Regular(ring, a, s, n) for a in members(ring.full & ~ups)
        )
        out.case(
            every_weak == rhs,
            lambda s=s, n=n, a=every_weak: Counterexample(
                "T3_12",
                ring,
                (),
                (),
                (s, n),
                "all proper ideals weakly closed %s but Regular/nilpotent "
                "criterion %s" % (a, not a),
            ),
        )
    return out


# -- transport along homomorphisms, quotients, and products ---------------------------


def _hom_pool(ring):
    cached = ring._cache.get("homPool")
    if cached is None:
        pool = [identity_hom(ring)]
        for pm in proper_hyperideals(ring):
            _, proj = quotient_by_ideal(ring, pm)
            pool.append(proj)
        partner = make_zx_mod(2, [1])
        target = product_ring(ring, partner)
        emb = HomMap(ring, target, tuple(2 * x for x in range(ring.order)))
        pool.append(emb)
        for f in pool:
            ok, wit = check_good_hom(f)
            assert ok, ("hom pool member is not a good homomorphism", wit)
        cached = tuple(pool)
        ring._cache["homPool"] = cached
    return cached


def _run_hom_transport(ring, p):
    out = RingOutcome()
    for f in _hom_pool(ring):
        target = f.target
        injective = len(set(f.table)) == ring.order
        if injective:
            for q2 in enumerate_hyperideals(target, order_bound=64):
                if q2 == target.full:
                    continue
                pre = f.preimage_mask(q2)
                if pre == ring.full:
                    out.notes.append(
                        "skip: preimage of %s from %s is improper"
                        % (members(q2), target.name)
                    )
                    continue
                assert is_hyperideal(ring, pre)
                for s, n in _window(p):
                    if not _weakly(target, q2, s, n):
                        continue
                    w = _weakly_witness(ring, pre, s, n)
                    out.case(
                        w is None,
                        lambda q2=q2, pre=pre, s=s, n=n, w=w: Counterexample(
                            "T3_13hom",
                            ring,
                            (pre,),
                            (w,),
                            (s, n),
                            "preimage of weakly (%d,%d)-closed ideal %s in %s "
                            "open at %d" % (s, n, members(q2), target.name, w),
                        ),
                    )
        if f.is_surjective():
            ker = f.kernel_mask()
            for q1 in proper_hyperideals(ring):
                if not is_subset(ker, q1):
                    continue
                img = f.image_mask(q1)
                assert img != target.full and is_hyperideal(target, img)
                for s, n in _window(p):
                    if not _weakly(ring, q1, s, n):
                        continue
                    w = _weakly_witness(target, img, s, n)
                    out.case(
                        w is None,
                        lambda q1=q1, img=img, s=s, n=n, w=w: Counterexample(
                            "T3_13hom",
                            ring,
                            (q1,),
                            (),
                            (s, n),
                            "image %s of weakly (%d,%d)-closed ideal in %s "
                            "open at %d" % (members(img), s, n, target.name, w),
                        ),
                    )
    return out


def _run_quotient_transport(ring, p):
    out = RingOutcome()
    propers = proper_hyperideals(ring)
    for pm in propers:
        quot = None
        proj = None
        for qm in propers:
            if not is_subset(pm, qm):
                continue
            if quot is None:
                quot, proj = quotient_by_ideal(ring, pm)
            img = proj.image_mask(qm)
            for s, n in _window(p):
                if not _weakly(ring, qm, s, n):
                    continue
                w = _weakly_witness(quot, img, s, n)
                out.case(
                    w is None,
                    lambda pm=pm, qm=qm, s=s, n=n, w=w: Counterexample(
                        "C3_quot",
                        ring,
                        (pm, qm),
                        (),
                        (s, n),
                        "image of weakly (%d,%d)-closed ideal in quotient "
                        "open at class %d" % (s, n, w),
                    ),
                )
    return out


def _scalar_identity_factors(ring):
    factors = _product_factors(ring)
    if not factors:
        return None
    f1, f2 = factors
    e1, e2 = scalar_identity(f1), scalar_identity(f2)
    if e1 is None or e2 is None or e1 == f1.zero or e2 == f2.zero:
        return None
    return f1, f2


def _run_box_equivalence(ring, p):
    out = RingOutcome()
    factors = _scalar_identity_factors(ring)
    if factors is None:
        return out
    f1, f2 = factors
    n2 = f2.order
    for fac, boxer in (
        (f1, lambda q1: _box_mask(q1, f2.full, n2)),
        (f2, lambda q2: _box_mask(f1.full, q2, n2)),
    ):
        for q in proper_hyperideals(fac):
            if not is_C_hyperideal(fac, q):
                continue
            box = boxer(q)
            for s, n in _window(p):
                i = _weakly(ring, box, s, n)
                ii = _closed(fac, q, s, n)
                iii = _closed(ring, box, s, n)
                out.case(
                    i == ii == iii,
                    lambda q=q, box=box, s=s, n=n, i=i, ii=ii, iii=iii: Counterexample(
                        "T3_14",
                        ring,
                        (box, q),
                        (),
                        (s, n),
                        "box weakly %s, factor closed %s, box closed %s"
                        % (i, ii, iii),
                    ),
                )
    return out


def _run_box_C_hyperideal(ring, p):
    out = RingOutcome()
    factors = _product_factors(ring)
    if not factors:
        return out
    f1, f2 = factors
    n2 = f2.order
    for i1 in enumerate_hyperideals(f1):
        for i2 in enumerate_hyperideals(f2):
            box = _box_mask(i1, i2, n2)
            lhs = is_C_hyperideal(f1, i1) and is_C_hyperideal(f2, i2)
            rhs = is_C_hyperideal(ring, box)
            out.case(
                lhs == rhs,
                lambda i1=i1, i2=i2, box=box, lhs=lhs: Counterexample(
                    "L3_15",
                    ring,
                    (box,),
                    (),
                    None,
                    "factors C-hyperideals %s but box C-hyperideal %s"
                    % (lhs, not lhs),
                ),
            )
    return out


def _weak_not_closed_condition(fa, qa, fb, qb, s, n):
    """One disjunct of the box decomposition criterion."""
    if qa == fa.full:
        return False
    if not _weakly(fa, qa, s, n) or _closed(fa, qa, s, n):
        return False
    if land_mask(fb, qb, s) & ~zero_in_mask(fb, s):
        return False
    trigger = land_mask(fa, qa, s) & ~zero_in_mask(fa, s)
    if trigger and qb != fb.full and not _closed(fb, qb, s, n):
        return False
    return True


def _run_box_decomposition(ring, p):
    out = RingOutcome()
    factors = _scalar_identity_factors(ring)
    if factors is None:
        return out
    f1, f2 = factors
    n2 = f2.order
    for q in proper_hyperideals(ring):
        q1 = factor_mask(q, n2, 0)
        q2 = factor_mask(q, n2, 1)
        decomposes = _box_mask(q1, q2, n2) == q
        for s, n in _window(p):
            lhs = (
                is_C_hyperideal(ring, q)
                and _weakly(ring, q, s, n)
                and not _closed(ring, q, s, n)
            )
            rhs = (
                decomposes
                and is_C_hyperideal(f1, q1)
                and is_C_hyperideal(f2, q2)
                and (
                    _weak_not_closed_condition(f1, q1, f2, q2, s, n)
                    or _weak_not_closed_condition(f2, q2, f1, q1, s, n)
                )
            )
            out.case(
                lhs == rhs,
                lambda q=q, s=s, n=n, lhs=lhs: Counterexample(
                    "T3_16",
                    ring,
                    (q,),
                    (),
                    (s, n),
                    "weakly-not-closed C-hyperideal %s but decomposition "
                    "criterion %s" % (lhs, not lhs),
                ),
            )
    return out


CHECKS: tuple[Check, ...] = (
    Check(
        "T2_3",
        "A proper n-absorbing C-hyperideal is (s,n)-closed for every s.",
        _run_absorbing_closed,
    ),
    Check(
        "T2_4",
        "A product of t prime hyperideals is (s,n)-closed whenever "
        "n >= min(s, t).",
        _run_prime_products,
    ),
    Check(
        "T2_5i",
        "If each Qi is (s,ni)-closed, the product of the Qi is (s,n)-closed "
        "for every n >= min(s, n1+...+nt).",
        lambda ring, p: _run_closed_combinations(ring, p, "product"),
    ),
    Check(
        "T2_5ii",
        "If each Qi is (s,ni)-closed, the intersection of the Qi is "
        "(s,n)-closed for every n >= min(s, max(ni)).",
        lambda ring, p: _run_closed_combinations(ring, p, "intersection"),
    ),
    Check(
        "C2_6",
        "An intersection of (s,n)-closed hyperideals is (s,n)-closed.",
        _run_intersection_closed,
    ),
    Check(
        "C2_7",
        "A product of pairwise coprime (s,n)-closed hyperideals is "
        "(s,n)-closed.",
        _run_coprime_products,
    ),
    Check(
        "T2_8",
        "If Q is an (s,2)-closed strong C-hyperideal and P is a hyperideal "
        "with P^s inside Q, then P^2 + P^2 lies inside Q.",
        _run_square_sum,
    ),
    Check(
        "T2_9",
        "A proper hyperideal is (s,n)-closed exactly when its image in the "
        "ring of co-occurrence classes is (s,n)-closed.",
        _run_class_ring_transfer,
    ),
    Check(
        "R2_rad",
        "Pairs with s <= n are always closed, and a proper hyperideal equals "
        "its radical exactly when every pair is closed.",
        _run_radical_characterization,
    ),
    Check(
        "T2_10",
        "If (s,n) and (s+1,n+1) are closed pairs with s != n, then (s+1,n) "
        "is a closed pair.",
        _run_step_down,
    ),
    Check(
        "L2_11",
        "If (s,n) is a closed pair, so is every (s',n') with s' <= s and "
        "n' >= n.",
        _run_pair_monotone,
    ),
    Check(
        "T2_12i",
        "For a proper C-hyperideal: if (n,2) and (n+1,2) are closed pairs "
        "for some n >= 3, then (t,2) is a closed pair for every t.",
        _run_two_absorbing_spread,
    ),
    Check(
        "T2_12ii",
        "For a proper C-hyperideal: if (s,n) is a closed pair with 2n <= s, "
        "then (t,n) is a closed pair for every t.",
        _run_half_exponent_spread,
    ),
    Check(
        "R2_omega",
        "Containment of closed-pair sets, pointwise comparison of omega, and "
        "pointwise comparison of Omega are equivalent orderings.",
        _run_order_comparisons,
    ),
    Check(
        "T2_13",
        "If omega(s) < s then omega(s+1) equals omega(s) or is at least "
        "omega(s) + 2.",
        _run_omega_jump,
    ),
    Check(
        "T2_14",
        "If Omega(n) > n then Omega(n+1) equals Omega(n) or is at least "
        "Omega(n) + 2.",
        _run_Omega_jump,
    ),
    Check(
        "T2_15",
        "omega of an intersection is bounded by the pointwise max of the "
        "omegas, and the pointwise min of the Omegas bounds Omega of the "
        "intersection.",
        _run_intersection_bounds,
    ),
    Check(
        "T2_16",
        "omega of the intersection equals the pointwise max exactly when the "
        "closed-pair set of the intersection is the intersection of the "
        "closed-pair sets.",
        _run_omega_exactness,
    ),
    Check(
        "T2_17",
        "Omega of the intersection equals the pointwise min exactly when the "
        "closed-pair set of the intersection is the intersection of the "
        "closed-pair sets.",
        _run_Omega_exactness,
    ),
    Check(
        "C2_18",
        "omega of the intersection equals the pointwise max exactly when "
        "Omega of the intersection equals the pointwise min.",
        _run_invariant_equivalence,
    ),
    Check(
        "D3_w",
        "Intersections of weakly (s,n)-closed hyperideals are weakly "
        "(s,n)-closed; weak (s,n)-closedness implies weak (s,n+1)-closedness; "
        "and a weakly (s,n)-closed C-hyperideal fails to be (s,n)-closed "
        "exactly when some x has 0 in x^s and x^n outside it.",
        _run_weakly_basics,
    ),
    Check(
        "T3_4",
        "If a weakly (s,n)-closed strong C-hyperideal has a tough zero x, "
        "then 0 lies in (x+a)^s for every a in the ideal.",
        _run_tough_zero_shift,
    ),
    Check(
        "T3_5",
        "A weakly (s,n)-closed strong C-hyperideal that is not (s,n)-closed "
        "consists of nilpotent elements.",
        _run_weakly_nilpotent,
    ),
    Check(
        "T3_6",
        "In a strongly distributive hyperring with nonzero scalar identity "
        "and an i-set, for s > n: every proper hyperideal inside the "
        "nilpotent set is weakly (s,n)-closed exactly when 0 lies in x^s for "
        "every nilpotent x.",
        _run_nilpotent_ideal_criterion,
    ),
    Check(
        "D3_reg",
        "Every (s,n)-regular element is (s,n)-Regular.",
        _run_regular_implies_Regular,
    ),
    Check(
        "T3_9",
        "In a strongly distributive hyperring with scalar identity, an "
        "element outside the weak zero divisors and the units is "
        "(s,n)-regular exactly when s <= n.",
        _run_regular_iff_small_exponent,
        note=(
            "vacuous at every finite order: strong distributivity makes "
            "b -> a*b collapse to disjoint singleton images for a outside "
            "the weak zero divisors, so such an a is forced to be a unit; "
            "the element pool is provably empty"
        ),
    ),
    Check(
        "T3_10",
        "For s > n, every (s,n)-regular element is (s+1,n)-Regular.",
        _run_regular_step,
    ),
    Check(
        "T3_11",
        "Every unit is (s,n)-Regular for all pairs (s,n).",
        _run_units_Regular,
    ),
    Check(
        "T3_12",
        "In a strongly distributive hyperring with an i-set, for s > n: "
        "every proper hyperideal is weakly (s,n)-closed exactly when every "
        "non-nilpotent element is (s,n)-Regular and 0 lies in a^s for every "
        "nilpotent a.",
        _run_every_ideal_weakly,
    ),
    Check(
        "T3_13hom",
        "Under a good homomorphism, preimages of weakly (s,n)-closed "
        "hyperideals along injections and images of weakly (s,n)-closed "
        "hyperideals containing the kernel along surjections stay weakly "
        "(s,n)-closed.",
        _run_hom_transport,
    ),
    Check(
        "C3_quot",
        "If P <= Q are proper hyperideals and Q is weakly (s,n)-closed, the "
        "image of Q in the quotient by P is weakly (s,n)-closed.",
        _run_quotient_transport,
    ),
    Check(
        "T3_14",
        "For a proper C-hyperideal Q1 of a scalar-identity factor: Q1 x G2 "
        "weakly (s,n)-closed, Q1 (s,n)-closed, and Q1 x G2 (s,n)-closed are "
        "equivalent.",
        _run_box_equivalence,
    ),
    Check(
        "L3_15",
        "I1 and I2 are C-hyperideals exactly when I1 x I2 is a C-hyperideal "
        "of the product.",
        _run_box_C_hyperideal,
    ),
    Check(
        "T3_16",
        "In a product of scalar-identity hyperrings, a proper hyperideal is "
        "a weakly (s,n)-closed C-hyperideal that is not (s,n)-closed exactly "
        "when it decomposes as a box of C-hyperideals satisfying the "
        "one-sided weakly-not-closed criterion.",
        _run_box_decomposition,
    ),
)

REGISTRY: dict[str, Check] = {c.id: c for c in CHECKS}


def get_check(check_id: str) -> Check:
    try:
        return REGISTRY[check_id]
    except KeyError:
        raise UnknownCheckId(
            "no check named %r; known: %s" % (check_id, ", ".join(REGISTRY))
        ) from None
