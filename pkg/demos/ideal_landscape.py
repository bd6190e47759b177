"""Enumerate the hyperideal lattice of a few instances and classify each member."""

from hyperring_lab import (
    classify_ideal,
    enumerate_hyperideals,
    make_zx_mod,
    members,
    product_ring,
    radical,
)


def survey(ring):
    """Print every hyperideal with its classification flags and radical."""
    print("instance %s (order %d)" % (ring.name, ring.order))
    for mask in enumerate_hyperideals(ring):
        tags = classify_ideal(ring, mask)
        flags = ", ".join(k for k, v in sorted(tags.items()) if v) or "-"
        line = "  %-14s %s" % (members(mask), flags)
        if tags.get("proper"):
            line += "  rad=%s" % members(radical(ring, mask))
        print(line)


def main():
    survey(make_zx_mod(6, [1]))
    survey(make_zx_mod(4, [2]))
    survey(make_zx_mod(4, [1, 3]))
    survey(product_ring(make_zx_mod(2, [1]), make_zx_mod(4, [2])))


if __name__ == "__main__":
    main()
