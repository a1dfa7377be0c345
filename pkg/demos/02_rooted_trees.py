"""Rooted trees with unordered leaves and no bivalent vertices.

The library enumerates one representative per isomorphism class, computes
automorphism orders from child multiplicities, and tabulates per-vertex data
(leaf number, valency, movability).  The ordered-leaf variant is counted two
ways: as orbit sums d!/|Aut| and by direct set-partition enumeration.
"""

from ellsuper import enumerate_ordered_trees, enumerate_trees, factorial, ordered_count, vertex_data

print("classes with d unordered leaves:")
print("  d     :", *[f"{d:>6}" for d in range(1, 8)])
print("  count :", *[f"{len(enumerate_trees(d)):>6}" for d in range(1, 8)])

print()
print("the d = 4 gallery (canonical form, |Aut|, internal vertices):")
for tree in enumerate_trees(4):
    cells = "; ".join(
        f"l={v.leaf_number} |v|={v.valency}" + (" movable" if v.movable else "")
        for v in vertex_data(tree)
    )
    print(f"  {tree.to_string():<12} |Aut| = {tree.aut_order:<4} {cells}")

print()
print("ordered-leaf counts, two independent routes:")
for d in range(1, 8):
    orbit = ordered_count(d)
    direct = len(enumerate_ordered_trees(d))
    assert orbit == direct
    print(f"  d={d}: sum of {d}!/|Aut| = {orbit:>7} = set-partition enumeration")

print()
print("orbit sizes at d = 4:", sorted(factorial(4) // t.aut_order for t in enumerate_trees(4)),
      "->", ordered_count(4), "ordered classes")
