"""Build a small hyperring from residue tables and watch the law checker work."""

from hyperring_lab import FiniteHyperring, make_zx_mod, members, validate_axioms


def show_tables(ring):
    """Print the addition table and the set-valued product table."""
    print("instance %s (order %d)" % (ring.name, ring.order))
    print("  a + b:")
    for row in ring.add:
        print("   ", list(row))
    print("  a * b (set-valued):")
    for row in ring.mul:
        print("   ", [members(cell) for cell in row])


def main():
    ring = make_zx_mod(6, [1])
    show_tables(ring)
    report = validate_axioms(ring)
    print("law report:")
    for check in report.axioms:
        print("  %-32s %s" % (check.name, "ok" if check.ok else "BROKEN"))

    # Now damage one product cell and watch the report localize the break.
    mul = [[members(cell) for cell in row] for row in ring.mul]
    mul[1][2] = [5]
    broken = FiniteHyperring([list(r) for r in ring.add], mul, name="tampered")
    report = validate_axioms(broken)
    print("after tampering with cell 1*2: failed laws = %s" % report.failed())
    for check in report.axioms:
        if not check.ok:
            print("  %s witness: %s" % (check.name, check.witness))


if __name__ == "__main__":
    main()
