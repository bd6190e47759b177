"""Exponent-pair closedness of hyperideals, and the derived invariants.

A proper hyperideal Q is (s,n)-closed when every element whose s-th
hyperpower lands inside Q also has its n-th hyperpower inside Q, and weakly
(s,n)-closed when the same holds for elements whose s-th hyperpower does not
contain 0.  Everything here reduces to two per-exponent element masks:

* land(k)    -- elements a with a^k entirely inside Q,
* zero_in(k) -- elements a with 0 a member of a^k.

land(k) is nondecreasing in k (Q absorbs products, so a^k inside Q drags
every higher power in) and constant once k reaches the power bound L, which
makes the "for every exponent" questions decidable on a finite window.  No
monotonicity is assumed for zero_in; it is read off the eventually periodic
power profiles exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .bitsets import is_subset, members
from .core import FiniteHyperring, NotAHyperideal, ProperIdealRequired

INF = math.inf


def _require_exponent(k: int) -> None:
    if k < 1:
        raise ValueError("exponents start at 1")


def _require_proper_ideal(ring: FiniteHyperring, imask: int) -> None:
    from .ideals import is_hyperideal

    if not is_hyperideal(ring, imask):
        raise NotAHyperideal("subset %r is not a hyperideal" % members(imask))
    if imask == ring.full:
        raise ProperIdealRequired("closedness is defined for proper hyperideals")


def land_mask(ring: FiniteHyperring, imask: int, k: int) -> int:
    """Elements whose k-th hyperpower is contained in the given set."""
    _require_exponent(k)
    key = ("land", imask, k)
    cached = ring._cache.get(key)
    if cached is None:
        cached = 0
        for a in ring.elements:
            if is_subset(ring.power(a, k), imask):
                cached |= 1 << a
        ring._cache[key] = cached
    return cached


def zero_in_mask(ring: FiniteHyperring, k: int) -> int:
    """Elements whose k-th hyperpower contains 0."""
    _require_exponent(k)
    key = ("zin", k)
    cached = ring._cache.get(key)
    if cached is None:
        zero = ring.zero
        cached = 0
        for a in ring.elements:
            if ring.power(a, k) >> zero & 1:
                cached |= 1 << a
        ring._cache[key] = cached
    return cached


def sn_closed_witness(
    ring: FiniteHyperring, imask: int, s: int, n: int
) -> Optional[int]:
    """Least element breaking (s,n)-closedness, or None."""
    _require_proper_ideal(ring, imask)
    _require_exponent(s)
    _require_exponent(n)
    bad = land_mask(ring, imask, s) & ~land_mask(ring, imask, n)
    return members(bad)[0] if bad else None


def is_sn_closed(ring: FiniteHyperring, imask: int, s: int, n: int) -> bool:
    return sn_closed_witness(ring, imask, s, n) is None


def weakly_sn_closed_witness(
    ring: FiniteHyperring, imask: int, s: int, n: int
) -> Optional[int]:
    """Least element breaking weak (s,n)-closedness, or None."""
    _require_proper_ideal(ring, imask)
    _require_exponent(s)
    _require_exponent(n)
    bad = (
        land_mask(ring, imask, s)
        & ~zero_in_mask(ring, s)
        & ~land_mask(ring, imask, n)
    )
    return members(bad)[0] if bad else None


def is_weakly_sn_closed(ring: FiniteHyperring, imask: int, s: int, n: int) -> bool:
    return weakly_sn_closed_witness(ring, imask, s, n) is None


def find_tough_zero(
    ring: FiniteHyperring, imask: int, s: int, n: int
) -> Optional[int]:
    """Least x with 0 in x^s but x^n not inside Q.

    When Q is a C-hyperideal, 0 in x^s already forces x^s inside Q (the
    power set meets Q at 0), so such an x directly breaks (s,n)-closedness.
    """
    _require_proper_ideal(ring, imask)
    _require_exponent(s)
    _require_exponent(n)
    mask = zero_in_mask(ring, s) & ~land_mask(ring, imask, n)
    return members(mask)[0] if mask else None


def omega(ring: FiniteHyperring, imask: int, s: int) -> int:
    """Least n with the ideal (s,n)-closed; always within 1..s."""
    _require_proper_ideal(ring, imask)
    _require_exponent(s)
    ls = land_mask(ring, imask, s)
    for n in range(1, s + 1):
        if is_subset(ls, land_mask(ring, imask, n)):
            return n
    raise AssertionError("unreachable: (s,s) is always closed")


def big_omega(ring: FiniteHyperring, imask: int, n: int) -> float:
    """Greatest s with the ideal (s,n)-closed; inf when every s works."""
    _require_proper_ideal(ring, imask)
    _require_exponent(n)
    bound = ring.power_bound()
    ln = land_mask(ring, imask, n)
    if is_subset(land_mask(ring, imask, bound), ln):
        return INF
    best = 1
    for s in range(1, bound + 1):
        if is_subset(land_mask(ring, imask, s), ln):
            best = s
    return float(best)


@dataclass(frozen=True)
class ClosedProfile:
    """Window of closedness invariants for one proper hyperideal."""

    ideal: int
    bound_L: int
    omega: tuple[int, ...]
    Omega: tuple[float, ...]
    witnesses: dict[int, int]

    def omega_at(self, s: int) -> int:
        return self.omega[s - 1]

    def Omega_at(self, n: int) -> float:
        return self.Omega[n - 1]


def closed_profile(
    ring: FiniteHyperring, imask: int, smax: int = 6, nmax: int = 6
) -> ClosedProfile:
    """omega over s = 1..smax, Omega over n = 1..nmax, with sharpness witnesses.

    The witness recorded at s is the least element whose s-th power lies in
    the ideal while its (omega(s)-1)-th power does not, certifying that
    omega(s) cannot be lowered; exponents with omega(s) = 1 need none.
    """
    om = tuple(omega(ring, imask, s) for s in range(1, smax + 1))
    big = tuple(big_omega(ring, imask, n) for n in range(1, nmax + 1))
    wits: dict[int, int] = {}
    for s in range(1, smax + 1):
        n = om[s - 1]
        if n > 1:
            w = sn_closed_witness(ring, imask, s, n - 1)
            assert w is not None
            wits[s] = w
    return ClosedProfile(
        ideal=imask,
        bound_L=ring.power_bound(),
        omega=om,
        Omega=big,
        witnesses=wits,
    )


# -- element regularity -----------------------------------------------------------


def is_sn_regular(ring: FiniteHyperring, a: int, s: int, n: int) -> bool:
    """a^n inside a^s * b for a single element b."""
    _require_exponent(s)
    _require_exponent(n)
    an = ring.power(a, n)
    as_ = ring.power(a, s)
    return any(
        is_subset(an, ring.hyper_product(as_, 1 << b)) for b in ring.elements
    )


def is_sn_Regular(ring: FiniteHyperring, a: int, s: int, n: int) -> bool:
    """a^n inside a^s * B for some subset B; equivalently B = whole carrier.

    a^s * B is monotone in B, so the full carrier is the best possible
    choice; the subset quantifier collapses to one containment.
    """
    _require_exponent(s)
    _require_exponent(n)
    an = ring.power(a, n)
    as_ = ring.power(a, s)
    return is_subset(an, ring.hyper_product(as_, ring.full))


# -- integer residue model ----------------------------------------------------------


class ZxResidueModel:
    """Closedness of d*Z inside the integers with product set a*X*b.

    In that structure the s-th hyperpower of a is {a^s * p} over products p
    of s-1 multipliers, so membership of a^s in d*Z only depends on a mod d:
    the whole question is decided on residues.  Multipliers must be nonzero
    integers, which keeps 0 out of every hyperpower of a nonzero element;
    0 itself never violates any pair (its powers are {0}, inside d*Z), so
    the weak and plain notions agree on this model.
    """

    def __init__(self, d: int, multipliers) -> None:
        if d < 2:
            raise ValueError("modulus must be at least 2")
        xs = sorted(set(int(x) for x in multipliers))
        if not xs:
            raise ValueError("need at least one multiplier")
        if 0 in xs:
            raise ValueError("multipliers must be nonzero integers")
        self.d = d
        self.multipliers = xs
        self._pi_cache: dict[int, frozenset[int]] = {0: frozenset({1 % d})}

    def _pi(self, k: int) -> frozenset[int]:
        """Residues of all k-fold products of multipliers."""
        top = max(self._pi_cache)
        while top < k:
            cur = self._pi_cache[top]
            nxt = frozenset(
                p * x % self.d for p in cur for x in self.multipliers
            )
            top += 1
            self._pi_cache[top] = nxt
        return self._pi_cache[k]

    def power_residues(self, r: int, s: int) -> frozenset[int]:
        """Residues mod d of the s-th hyperpower of any integer congruent to r."""
        _require_exponent(s)
        base = pow(r, s, self.d)
        return frozenset(base * p % self.d for p in self._pi(s - 1))

    def power_in_ideal(self, r: int, s: int) -> bool:
        return self.power_residues(r, s) == {0}

    def witness(self, s: int, n: int) -> Optional[int]:
        """Least residue class violating (s,n)-closedness of d*Z, or None."""
        _require_exponent(s)
        _require_exponent(n)
        for r in range(1, self.d):
            if self.power_in_ideal(r, s) and not self.power_in_ideal(r, n):
                return r
        return None

    def closed(self, s: int, n: int) -> bool:
        return self.witness(s, n) is None

    def weakly_closed(self, s: int, n: int) -> bool:
        return self.closed(s, n)


def zx_residue_closed(d: int, multipliers, s: int, n: int) -> bool:
    return ZxResidueModel(d, multipliers).closed(s, n)


def zx_residue_weakly_closed(d: int, multipliers, s: int, n: int) -> bool:
    return ZxResidueModel(d, multipliers).weakly_closed(s, n)
