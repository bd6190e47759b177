"""Chart omega/Omega profiles and the gap between closed and weakly closed."""

from hyperring_lab import (
    closed_profile,
    find_tough_zero,
    is_sn_closed,
    is_weakly_sn_closed,
    make_zx_mod,
    mask_of,
    members,
    proper_hyperideals,
    sn_closed_witness,
)


def profile_table(ring):
    """One line per proper hyperideal: omega row, Omega row, sharpness witnesses."""
    print("instance %s" % ring.name)
    for q in proper_hyperideals(ring):
        prof = closed_profile(ring, q, smax=6, nmax=6)
        print("  Q=%-12s omega=%s Omega=%s witnesses=%s"
              % (members(q), list(prof.omega), list(prof.Omega), prof.witnesses))


def weak_vs_strict():
    """Q={0} in zx(4;2): weakly (s,n)-closed for every pair, yet not (2,1)-closed."""
    ring = make_zx_mod(4, [2])
    q = mask_of([0])
    for s, n in [(2, 1), (3, 1), (3, 2)]:
        strict = is_sn_closed(ring, q, s, n)
        weak = is_weakly_sn_closed(ring, q, s, n)
        line = "  (s,n)=(%d,%d): closed=%s weakly=%s" % (s, n, strict, weak)
        if weak and not strict:
            tough = find_tough_zero(ring, q, s, n)
            line += "  tough-zero witness x=%d (0 in x^%d, x^%d not inside Q)" % (tough, s, n)
        print(line)
    print("  closedness witness for (2,1): a=%s" % sn_closed_witness(ring, q, 2, 1))


def main():
    profile_table(make_zx_mod(8, [2]))
    profile_table(make_zx_mod(6, [1]))
    print("gap between the two notions on zx(4;2), Q=[0]:")
    weak_vs_strict()


if __name__ == "__main__":
    main()
