"""Sweep the modular-residue model at sizes far beyond table enumeration."""

from hyperring_lab import (
    ZxResidueModel,
    is_sn_closed,
    make_zx_mod,
    mask_of,
    zx_residue_closed,
    zx_residue_weakly_closed,
)


def sweep(d, multipliers, n, weakly=False, smax=12):
    """Print one verdict per exponent s without building the order-d tables."""
    fn = zx_residue_weakly_closed if weakly else zx_residue_closed
    label = "weakly (s,%d)-closed" % n if weakly else "(s,%d)-closed" % n
    print("d=%d X=%s, %s:" % (d, sorted(multipliers), label))
    verdicts = [fn(d, multipliers, s, n) for s in range(1, smax + 1)]
    for s, v in enumerate(verdicts, 1):
        print("  s=%2d  %s" % (s, "yes" if v else "NO"))
    print("  all of s=1..%d: %s" % (smax, "yes" if all(verdicts) else "NO"))


def cross_check(d, multipliers):
    """The residue shortcut agrees with brute force on the explicit small table."""
    ring = make_zx_mod(d, multipliers)
    q = mask_of([0])
    for s in range(1, 7):
        for n in range(1, 5):
            fast = zx_residue_closed(d, multipliers, s, n)
            slow = is_sn_closed(ring, q, s, n)
            assert fast == slow, (d, multipliers, s, n)
    print("residue shortcut matches the order-%d table for all (s,n) <= (6,4)" % d)


def main():
    sweep(105, {2, 4}, n=3)
    sweep(105, {2, 4}, n=1)
    sweep(390, {7, 11}, n=4, weakly=True)
    model = ZxResidueModel(390, (7, 11))
    print("residues of the 4th hyperpower of 2 in the d=390 model: %s"
          % sorted(model.power_residues(2, 4)))
    cross_check(8, [2])
    cross_check(9, [3])


if __name__ == "__main__":
    main()
