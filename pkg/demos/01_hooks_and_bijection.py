"""Hook lengths, and the bijection between the two partition classes.

A self-conjugate partition is determined by its diagonal hooks, which are
distinct odd numbers. Reading them off gives a distinct-odd partition of the
same size, so the two classes are equinumerous, yet they hold different
numbers of t-hooks.
"""
from hookbias.partitions import (
    PartitionClass,
    a_star_brute,
    b_star_brute,
    cell_stats,
    enumerate_class,
    principal_hooks,
)

# hook numbers of (5, 3, 2), row by row
lam = (5, 3, 2)
rows = {}
for c in cell_stats(lam):
    rows.setdefault(c.row, []).append(c.hook)
for r, hooks in rows.items():
    print(f"row {r}: {hooks}")

# the bijection at n = 12
n = 12
sc = enumerate_class(PartitionClass.SELF_CONJUGATE, n)
print(f"\nSC({n}) has {len(sc)} members")
for mu in sc:
    print(f"  {mu.parts} -> diagonal hooks {principal_hooks(mu)}")

# both classes have the same size, but the hook totals differ
print("\n t   a*_t(30)  b*_t(30)")
for t in range(1, 9):
    print(f"{t:2d}  {a_star_brute(t, 30):8d}  {b_star_brute(t, 30):8d}")
