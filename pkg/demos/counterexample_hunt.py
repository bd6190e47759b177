"""Run two checks that genuinely fail on the default instance sweep, then replay one by hand."""

from hyperring_lab import (
    SuiteConfig,
    ideal_product,
    is_coprime,
    is_sn_closed,
    make_zx_mod,
    mask_of,
    members,
    product_ring,
    run_suite,
    set_power,
)


def hunt():
    """Sweep the default instances with the two checks known to find witnesses."""
    suite = run_suite(SuiteConfig(check_ids=("C2_7", "T2_9")))
    for report in suite.reports:
        print("%s: %s (%d cases over %d instances)"
              % (report.check_id, "pass" if report.counterexample is None else "FAIL",
                 report.applicable, report.instances_examined))
        if report.counterexample:
            c = report.counterexample
            print("  instance  %s" % c["instance"])
            print("  ideals    %s" % c["ideals"])
            print("  (s,n)     %s" % c["sn"])
            print("  elements  %s" % c["elements"])
            print("  detail    %s" % c["detail"])


def replay_product_witness():
    """Recompute the coprime-product witness from raw tables, no suite involved."""
    ring = product_ring(make_zx_mod(2, [1]), make_zx_mod(4, [2]))
    i1 = mask_of([0, 1, 2, 3])
    i2 = mask_of([0, 2, 4, 6])
    print("ring %s, I1=%s, I2=%s" % (ring.name, members(i1), members(i2)))
    print("  coprime: %s" % is_coprime(ring, i1, i2))
    for q, label in [(i1, "I1"), (i2, "I2")]:
        print("  %s is (3,2)-closed: %s" % (label, is_sn_closed(ring, q, 3, 2)))
    prod = ideal_product(ring, i1, i2)
    print("  I1*I2 = %s" % members(prod))
    cube = set_power(ring, mask_of([1]), 3)
    square = set_power(ring, mask_of([1]), 2)
    print("  1^3 = %s (inside the product), 1^2 = %s (not inside)"
          % (members(cube), members(square)))
    print("  so the product of coprime (3,2)-closed ideals is not (3,2)-closed here")


def main():
    hunt()
    print()
    replay_product_witness()


if __name__ == "__main__":
    main()
