"""Quotient of a hyperring by the transitive co-occurrence relation.

Two elements are related when they appear together in some finite sum of
finite products of elements; the transitive closure partitions the carrier,
and class-wise addition and multiplication turn the partition into an
ordinary commutative ring (every product of classes is a single class).

The partition itself is computed without enumerating sums-of-products: the
classes are exactly the cosets of the additive subgroup N generated by
differences within single product sets (see the derivation in `ideals`).
Multiplication well-definedness -- every product cell a*b landing inside one
class, independent of representatives -- is still verified exhaustively and
raises if violated, as is every commutative-ring axiom of the quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bitsets import is_subset, iter_bits, members
from .core import (
    FiniteHyperring,
    NotAHyperideal,
    ProperIdealRequired,
    WellDefinednessFailure,
)
from .ideals import cooccurrence_subgroup, is_hyperideal


def gamma_star_classes(ring: FiniteHyperring) -> list[int]:
    """Co-occurrence classes as element masks, ordered by least member."""
    n = cooccurrence_subgroup(ring)
    seen = 0
    classes = []
    for a in ring.elements:
        if seen >> a & 1:
            continue
        coset = ring.minkowski_sum(1 << a, n)
        classes.append(coset)
        seen |= coset
    return classes


@dataclass(frozen=True)
class FundamentalRing:
    """Ordinary commutative ring of co-occurrence classes."""

    source: FiniteHyperring
    classes: tuple[int, ...]
    class_of: tuple[int, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.classes)

    @property
    def zero(self) -> int:
        return self.class_of[self.source.zero]

    def power(self, i: int, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at exponent 1")
        out = i
        for _ in range(k - 1):
            out = self.mul[out][i]
        return out


def _verify_ring_axioms(fr: FundamentalRing) -> None:
    n = fr.order
    add, mul, zero = fr.add, fr.mul, fr.zero
    rng = range(n)
    for a in rng:
        assert add[a][zero] == a
        assert mul[a][zero] == zero
        for b in rng:
            assert add[a][b] == add[b][a]
            assert mul[a][b] == mul[b][a]
            for c in rng:
                assert add[add[a][b]][c] == add[a][add[b][c]]
                assert mul[mul[a][b]][c] == mul[a][mul[b][c]]
                assert mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
    for a in rng:
        assert any(add[a][b] == zero for b in rng)


def fundamental_ring(ring: FiniteHyperring) -> FundamentalRing:
    """Build and fully verify the class ring; cached per hyperring."""
    cached = ring._cache.get("fundamental")
    if cached is not None:
        return cached
    classes = gamma_star_classes(ring)
    class_of = [-1] * ring.order
    for i, c in enumerate(classes):
        for x in iter_bits(c):
            class_of[x] = i
    order = len(classes)
    add = [[0] * order for _ in range(order)]
    mul = [[0] * order for _ in range(order)]
    reps = [members(c)[0] for c in classes]
    for i in range(order):
        for j in range(order):
            add[i][j] = class_of[ring.add[reps[i]][reps[j]]]
            cell = ring.mul[reps[i]][reps[j]]
            targets = {class_of[x] for x in iter_bits(cell)}
            if len(targets) != 1:
                raise WellDefinednessFailure(
                    "product of representatives (%d,%d) straddles classes"
                    % (reps[i], reps[j])
                )
            mul[i][j] = targets.pop()
    for a in ring.elements:
        for b in ring.elements:
            i, j = class_of[a], class_of[b]
            if class_of[ring.add[a][b]] != add[i][j]:
                raise WellDefinednessFailure(
                    "class sum differs at representatives (%d,%d)" % (a, b)
                )
            targets = {class_of[x] for x in iter_bits(ring.mul[a][b])}
            if targets != {mul[i][j]}:
                raise WellDefinednessFailure(
                    "class product differs at representatives (%d,%d)" % (a, b)
                )
    fr = FundamentalRing(
        source=ring,
        classes=tuple(classes),
        class_of=tuple(class_of),
        add=tuple(tuple(row) for row in add),
        mul=tuple(tuple(row) for row in mul),
    )
    _verify_ring_axioms(fr)
    ring._cache["fundamental"] = fr
    return fr


def ring_ideal_closed(
    fr: FundamentalRing, jmask: int, s: int, n: int
) -> bool:
    """(s,n)-closedness of an ideal in the class ring (powers single-valued)."""
    if jmask == (1 << fr.order) - 1:
        raise ProperIdealRequired("closedness needs a proper ideal")
    for x in range(fr.order):
        if jmask >> fr.power(x, s) & 1 and not jmask >> fr.power(x, n) & 1:
            return False
    return True


@dataclass(frozen=True)
class TransferResult:
    """Closedness comparison between a hyperideal and its class-ring image."""

    image: int
    image_is_ideal: bool
    image_proper: bool
    skipped: bool
    note: str
    pairs: tuple[tuple[int, int, bool, bool], ...]
    first_mismatch: Optional[tuple[int, int]]

    @property
    def equivalent(self) -> bool:
        return self.first_mismatch is None and not self.skipped


def _image_is_ring_ideal(fr: FundamentalRing, jmask: int) -> bool:
    xs = [i for i in range(fr.order) if jmask >> i & 1]
    neg = {}
    for i in range(fr.order):
        for j in range(fr.order):
            if fr.add[i][j] == fr.zero:
                neg[i] = j
    for a in xs:
        for b in xs:
            if not jmask >> fr.add[a][neg[b]] & 1:
                return False
        for r in range(fr.order):
            if not jmask >> fr.mul[r][a] & 1:
                return False
    return bool(jmask)


def ideal_in_fundamental(
    ring: FiniteHyperring, qmask: int, smax: int = 6, nmax: int = 6
) -> TransferResult:
    """Compare hyper-side and class-ring-side closedness over a window.

    When the image collapses to the whole class ring, ring-side closedness is
    undefined and the comparison is marked skipped rather than failed.
    """
    from .closedness import is_sn_closed

    if not is_hyperideal(ring, qmask):
        raise NotAHyperideal("subset %r is not a hyperideal" % members(qmask))
    if qmask == ring.full:
        raise ProperIdealRequired("transfer comparison needs a proper hyperideal")
    fr = fundamental_ring(ring)
    image = 0
    for q in iter_bits(qmask):
        image |= 1 << fr.class_of[q]
    image_is_ideal = _image_is_ring_ideal(fr, image)
    image_proper = image != (1 << fr.order) - 1
    if not image_proper or not image_is_ideal:
        reason = (
            "image is the whole class ring"
            if not image_proper
            else "image is not an ideal of the class ring"
        )
        return TransferResult(
            image=image,
            image_is_ideal=image_is_ideal,
            image_proper=image_proper,
            skipped=True,
            note=reason,
            pairs=(),
            first_mismatch=None,
        )
    pairs = []
    first = None
    for s in range(1, smax + 1):
        for n in range(1, nmax + 1):
            hyper = is_sn_closed(ring, qmask, s, n)
            ringside = ring_ideal_closed(fr, image, s, n)
            pairs.append((s, n, hyper, ringside))
            if hyper != ringside and first is None:
                first = (s, n)
    return TransferResult(
        image=image,
        image_is_ideal=image_is_ideal,
        image_proper=image_proper,
        skipped=False,
        note="",
        pairs=tuple(pairs),
        first_mismatch=first,
    )
