"""Hyperideals: membership, generation, enumeration, and classification.

A hyperideal is a nonempty subset closed under subtraction (hence an additive
subgroup) that absorbs products: r*a stays inside for every ring element r.
On top of the basic predicates this module computes the product family C (all
finite products of elements, length >= 1) and its sum closure U (all finite
sums of members of C), the classifications built from them, the special
element sets (nilpotents, units, weak zero divisors, i-sets), and the
ideal-level arithmetic (sum, product, raw power) the verification checks use.

The strong-C test does not enumerate U.  Writing N for the additive subgroup
generated by all differences u - v with u, v inside a single member of C, two
facts hold for any hyperring built here:

* if u, v lie in one member E of U, then E is a sum of C-members, so u - v
  decomposes as a sum of within-C differences and lands in N;
* conversely x and x + (u - v) co-occur in {x - v} + P (a sum of two
  C-members, hence in U) whenever u, v lie in P in C.

So "meeting E in U forces containing E" is equivalent to being a union of
N-cosets, which is a single Minkowski-sum test.  The same subgroup N drives
the fundamental-ring partition; see `fundamental`.
"""

from __future__ import annotations

from typing import Optional

from .bitsets import is_subset, iter_bits, members, size
from .core import (
    EmptyOperand,
    FiniteHyperring,
    HomMap,
    NotAHyperideal,
    OrderTooLarge,
    ProperIdealRequired,
    WellDefinednessFailure,
    canonical_identity,
)

I_SET_ORDER_BOUND = 12
ENUMERATION_ORDER_BOUND = 16


def subgroup_closure(ring: FiniteHyperring, amask: int) -> int:
    """Smallest additive subgroup containing the given set."""
    cur = amask | 1 << ring.zero
    add = ring.add
    while True:
        nxt = cur
        xs = members(cur)
        for a in xs:
            nxt |= 1 << ring.neg(a)
            row = add[a]
            for b in xs:
                nxt |= 1 << row[b]
        if nxt == cur:
            return cur
        cur = nxt


def is_hyperideal(ring: FiniteHyperring, imask: int) -> bool:
    if imask == 0:
        return False
    add = ring.add
    mul = ring.mul
    xs = members(imask)
    for a in xs:
        for b in xs:
            if not imask >> add[a][ring.neg(b)] & 1:
                return False
    for a in xs:
        for r in ring.elements:
            if not is_subset(mul[r][a], imask):
                return False
    return True


def generate_hyperideal(ring: FiniteHyperring, gens: int) -> int:
    """Least hyperideal containing `gens`: alternate subgroup and absorption closure."""
    if gens == 0:
        raise EmptyOperand("generate_hyperideal needs at least one generator")
    cur = gens | 1 << ring.zero
    mul = ring.mul
    while True:
        cur = subgroup_closure(ring, cur)
        absorbed = cur
        for a in iter_bits(cur):
            for r in ring.elements:
                absorbed |= mul[r][a]
        if absorbed == cur:
            return cur
        cur = absorbed


def enumerate_hyperideals(
    ring: FiniteHyperring, order_bound: int = ENUMERATION_ORDER_BOUND
) -> list[int]:
    """All hyperideals, ascending by size then member list.

    Additive subgroups are generated breadth-first (every subgroup arises by
    repeatedly adjoining one generator), then filtered for absorption.
    """
    if ring.order > order_bound:
        raise OrderTooLarge(
            "hyperideal enumeration capped at order %d" % order_bound
        )
    cached = ring._cache.get("ideals")
    if cached is not None:
        return list(cached)
    zero_group = 1 << ring.zero
    subgroups = {zero_group}
    frontier = [zero_group]
    while frontier:
        nxt = []
        for sg in frontier:
            for x in ring.elements:
                if sg >> x & 1:
                    continue
                bigger = subgroup_closure(ring, sg | 1 << x)
                if bigger not in subgroups:
                    subgroups.add(bigger)
                    nxt.append(bigger)
        frontier = nxt
    ideals = [sg for sg in subgroups if is_hyperideal(ring, sg)]
    ideals.sort(key=lambda m: (size(m), members(m)))
    ring._cache["ideals"] = tuple(ideals)
    return ideals


def proper_hyperideals(ring: FiniteHyperring) -> list[int]:
    return [m for m in enumerate_hyperideals(ring) if m != ring.full]


def _require_proper(ring: FiniteHyperring, imask: int) -> None:
    if not is_hyperideal(ring, imask):
        raise NotAHyperideal("subset %r is not a hyperideal" % members(imask))
    if imask == ring.full:
        raise ProperIdealRequired("the whole carrier is not a proper hyperideal")


def is_prime(ring: FiniteHyperring, pmask: int) -> bool:
    _require_proper(ring, pmask)
    mul = ring.mul
    for a in ring.elements:
        if pmask >> a & 1:
            continue
        for b in range(a, ring.order):
            if pmask >> b & 1:
                continue
            if is_subset(mul[a][b], pmask):
                return False
    return True


def prime_hyperideals(ring: FiniteHyperring) -> list[int]:
    cached = ring._cache.get("primes")
    if cached is None:
        cached = tuple(
            p for p in proper_hyperideals(ring) if is_prime(ring, p)
        )
        ring._cache["primes"] = cached
    return list(cached)


def is_maximal(ring: FiniteHyperring, pmask: int) -> bool:
    _require_proper(ring, pmask)
    for j in enumerate_hyperideals(ring):
        if j != pmask and j != ring.full and is_subset(pmask, j):
            return False
    return True


def is_coprime(ring: FiniteHyperring, imask: int, jmask: int) -> bool:
    return ring.minkowski_sum(imask, jmask) == ring.full


def radical(ring: FiniteHyperring, imask: int) -> int:
    """Intersection of primes containing the hyperideal; the carrier if none."""
    out = ring.full
    hit = False
    for p in prime_hyperideals(ring):
        if is_subset(imask, p):
            out &= p
            hit = True
    return out if hit else ring.full


def power_members_D(ring: FiniteHyperring, imask: int) -> int:
    """Elements r with r^k inside the hyperideal for some exponent k >= 1."""
    out = 0
    for r in ring.elements:
        prof = ring.power_profile(r)
        if any(is_subset(p, imask) for p in prof.powers):
            out |= 1 << r
    return out


# -- product family C, sum closure U, and the classifications ------------------


def product_class_C(ring: FiniteHyperring) -> list[int]:
    """All finite products of elements (length >= 1 -- singletons included)."""
    cached = ring._cache.get("classC")
    if cached is None:
        seen = {1 << a for a in ring.elements}
        frontier = list(seen)
        while frontier:
            nxt = []
            for s in frontier:
                for r in ring.elements:
                    prod = ring.row_product(s, r)
                    if prod not in seen:
                        seen.add(prod)
                        nxt.append(prod)
            frontier = nxt
        cached = tuple(sorted(seen))
        ring._cache["classC"] = cached
    return list(cached)


def sums_class_U(ring: FiniteHyperring) -> list[int]:
    """All finite Minkowski sums of members of C.

    Exponential in the worst case (fixpoint over subsets); fine at the small
    orders used for cross-checks and demos.  The classification predicates
    below avoid this via the N-coset equivalence (module docstring).
    """
    base = product_class_C(ring)
    seen = set(base)
    frontier = list(base)
    while frontier:
        nxt = []
        for s in frontier:
            for c in base:
                total = ring.minkowski_sum(s, c)
                if total not in seen:
                    seen.add(total)
                    nxt.append(total)
        frontier = nxt
    return sorted(seen)


def cooccurrence_subgroup(ring: FiniteHyperring) -> int:
    """Subgroup generated by all differences within a single member of C."""
    n = ring._cache.get("cooccN")
    if n is None:
        diffs = 1 << ring.zero
        for s in product_class_C(ring):
            xs = members(s)
            base = xs[0]
            for other in xs[1:]:
                diffs |= 1 << ring.add[other][ring.neg(base)]
        n = subgroup_closure(ring, diffs)
        ring._cache["cooccN"] = n
    return n


def is_C_hyperideal(ring: FiniteHyperring, imask: int) -> bool:
    if not is_hyperideal(ring, imask):
        return False
    for s in product_class_C(ring):
        if s & imask and not is_subset(s, imask):
            return False
    return True


def is_strong_C_hyperideal(ring: FiniteHyperring, imask: int) -> bool:
    if not is_hyperideal(ring, imask):
        return False
    n = cooccurrence_subgroup(ring)
    return ring.minkowski_sum(imask, n) == imask


# -- n-absorbing ----------------------------------------------------------------


def _multiset_products(ring: FiniteHyperring, length: int) -> dict:
    """Product mask of every nondecreasing element tuple up to `length` factors."""
    key = ("msprods", length)
    cached = ring._cache.get(key)
    if cached is not None:
        return cached
    table: dict[tuple, int] = {}
    level = {(a,): 1 << a for a in ring.elements}
    table.update(level)
    for _ in range(length - 1):
        nxt = {}
        for tup, prod in level.items():
            last = tup[-1]
            for a in range(last, ring.order):
                nxt[tup + (a,)] = ring.row_product(prod, a)
        table.update(nxt)
        level = nxt
    ring._cache[key] = table
    return table


def n_absorbing_witness(
    ring: FiniteHyperring, imask: int, n: int
) -> Optional[tuple[int, ...]]:
    """First (n+1)-tuple whose product lands in I with no n-subproduct inside."""
    _require_proper(ring, imask)
    if n < 1:
        raise ValueError("absorbing degree starts at 1")
    table = _multiset_products(ring, n + 1)
    for tup in sorted(t for t in table if len(t) == n + 1):
        if not is_subset(table[tup], imask):
            continue
        ok = False
        for i in range(n + 1):
            if i > 0 and tup[i] == tup[i - 1]:
                continue
            sub = tup[:i] + tup[i + 1 :]
            if is_subset(table[sub], imask):
                ok = True
                break
        if not ok:
            return tup
    return None


def is_n_absorbing(ring: FiniteHyperring, imask: int, n: int) -> bool:
    return n_absorbing_witness(ring, imask, n) is None


# -- special element sets ---------------------------------------------------------


def nilpotents(ring: FiniteHyperring) -> int:
    """Elements with 0 inside some hyperpower (membership, not containment)."""
    out = 0
    zero = 1 << ring.zero
    for a in ring.elements:
        if any(p & zero for p in ring.power_profile(a).powers):
            out |= 1 << a
    return out


def units(ring: FiniteHyperring) -> Optional[int]:
    """Elements x with e inside some x*y, for the canonical identity e.

    Returns None when the ring has no identity element at all (the notion
    does not apply).
    """
    e = canonical_identity(ring)
    if e is None:
        return None
    out = 0
    mul = ring.mul
    for x in ring.elements:
        if any(mul[x][y] >> e & 1 for y in ring.elements):
            out |= 1 << x
    return out


def weak_zero_divisors(ring: FiniteHyperring) -> int:
    """Elements a with 0 inside a*b for some nonzero b."""
    out = 0
    zero = ring.zero
    mul = ring.mul
    for a in ring.elements:
        for b in ring.elements:
            if b != zero and mul[a][b] >> zero & 1:
                out |= 1 << a
                break
    return out


def _is_i_set(ring: FiniteHyperring, xi: int) -> bool:
    for x in ring.elements:
        total = None
        for e in iter_bits(xi):
            cell = ring.mul[x][e]
            total = cell if total is None else ring.minkowski_sum(total, cell)
        if total is None or not total >> x & 1:
            return False
    return True


def find_i_sets(
    ring: FiniteHyperring, order_bound: int = I_SET_ORDER_BOUND
) -> list[int]:
    """All subsets xi (some member nonzero) with x in sum of x*e over e in xi."""
    if ring.order > order_bound:
        raise OrderTooLarge("i-set search capped at order %d" % order_bound)
    zero_bit = 1 << ring.zero
    out = []
    for xi in range(1, 1 << ring.order):
        if xi == zero_bit:
            continue
        if _is_i_set(ring, xi):
            out.append(xi)
    out.sort(key=lambda m: (size(m), members(m)))
    return out


def has_i_set(ring: FiniteHyperring, order_bound: int = I_SET_ORDER_BOUND) -> bool:
    """Existence decided by shortcuts where sound, else exhaustive search.

    A weak identity e gives the i-set {e} directly.  When every product cell
    is a singleton the structure is an ordinary ring, sums of cells collapse
    to x*(sum of members), and an i-set forces a multiplicative identity --
    so no identity means no i-set.  Only structures fitting neither shortcut
    fall through to the search (bounded by `order_bound`).
    """
    from .core import weak_identities

    if weak_identities(ring):
        return True
    if all(
        size(ring.mul[a][b]) == 1 for a in ring.elements for b in ring.elements
    ):
        return False
    return bool(find_i_sets(ring, order_bound))


# -- ideal arithmetic --------------------------------------------------------------


def ideal_sum(ring: FiniteHyperring, imask: int, jmask: int) -> int:
    return ring.minkowski_sum(imask, jmask)


def ideal_product(ring: FiniteHyperring, imask: int, jmask: int) -> int:
    """Hyperideal generated by all pairwise products (cached per pair)."""
    key = ("idprod", min(imask, jmask), max(imask, jmask))
    cached = ring._cache.get(key)
    if cached is None:
        cached = generate_hyperideal(ring, ring.hyper_product(imask, jmask))
        ring._cache[key] = cached
    return cached


def set_power(ring: FiniteHyperring, amask: int, s: int) -> int:
    """Union of all s-fold products of elements drawn from the set."""
    if s < 1:
        raise ValueError("set powers start at exponent 1")
    cur = amask
    for _ in range(s - 1):
        cur = ring.hyper_product(cur, amask)
    return cur


def ideal_power(ring: FiniteHyperring, imask: int, s: int) -> int:
    """Raw s-fold product set of a hyperideal (not closed into an ideal)."""
    return set_power(ring, imask, s)


# -- quotients -----------------------------------------------------------------------


def quotient_by_ideal(
    ring: FiniteHyperring, pmask: int
) -> tuple[FiniteHyperring, HomMap]:
    """Cosets of a proper hyperideal with the induced class-set product.

    Class arithmetic is built from least representatives and then checked
    against every representative pair, so a failure of well-definedness (not
    expected for genuine hyperideals) raises instead of miscomputing.
    """
    _require_proper(ring, pmask)
    cached = ring._cache.get(("quot", pmask))
    if cached is not None:
        return cached
    n = ring.order
    class_of = [-1] * n
    classes: list[int] = []
    for a in range(n):
        if class_of[a] >= 0:
            continue
        coset = ring.minkowski_sum(1 << a, pmask)
        idx = len(classes)
        classes.append(coset)
        for x in iter_bits(coset):
            class_of[x] = idx
    order = len(classes)
    reps = [members(c)[0] for c in classes]
    add = [[0] * order for _ in range(order)]
    mul = [[0] * order for _ in range(order)]
    for i in range(order):
        for j in range(order):
            add[i][j] = class_of[ring.add[reps[i]][reps[j]]]
            cell = 0
            for c in iter_bits(ring.mul[reps[i]][reps[j]]):
                cell |= 1 << class_of[c]
            mul[i][j] = cell
    for a in range(n):
        for b in range(n):
            i, j = class_of[a], class_of[b]
            if class_of[ring.add[a][b]] != add[i][j]:
                raise WellDefinednessFailure(
                    "coset addition differs at representatives (%d,%d)" % (a, b)
                )
            cell = 0
            for c in iter_bits(ring.mul[a][b]):
                cell |= 1 << class_of[c]
            if cell != mul[i][j]:
                raise WellDefinednessFailure(
                    "coset product differs at representatives (%d,%d)" % (a, b)
                )
    name = "%s/%s" % (ring.name or "ring", "".join(str(x) for x in members(pmask)))
    quot = FiniteHyperring.from_masks(
        add, mul, name=name, meta={"family": "quotient"}
    )
    proj = HomMap(ring, quot, tuple(class_of))
    ring._cache[("quot", pmask)] = (quot, proj)
    return quot, proj


def classify_ideal(ring: FiniteHyperring, imask: int) -> dict:
    """Classification bits for reports; predicates needing properness gate on it."""
    if not is_hyperideal(ring, imask):
        raise NotAHyperideal("subset %r is not a hyperideal" % members(imask))
    proper = imask != ring.full
    return {
        "proper": proper,
        "prime": is_prime(ring, imask) if proper else False,
        "maximal": is_maximal(ring, imask) if proper else False,
        "c_hyperideal": is_C_hyperideal(ring, imask),
        "strong_c_hyperideal": is_strong_C_hyperideal(ring, imask),
    }
