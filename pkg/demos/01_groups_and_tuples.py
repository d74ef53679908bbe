"""Groups, wreath products, and commuting tuples.

A commuting d-tuple in G is the same thing as a homomorphism Z^d -> G; the
package enumerates them and their simultaneous-conjugation classes, which is
the indexing set for every class function at height d.
"""

from charops import (
    CommutingTuple,
    build_group,
    commuting_tuples,
    symmetric_group,
    tuple_conjugacy_classes,
    wreath,
)

S3 = symmetric_group(3)
print(f"S3 has {S3.size} elements and "
      f"{len(tuple_conjugacy_classes(S3, 1))} conjugacy classes")

pairs = commuting_tuples(S3, 2)
classes = tuple_conjugacy_classes(S3, 2)
print(f"commuting pairs in S3: {len(pairs)}  "
      f"(= sum over g of |centralizer(g)|)")
print(f"pair classes: {len(classes)}")
for cls in classes:
    g, gp = cls.representative.elements
    print(f"  rep ({S3.label(g)}, {S3.label(gp)})  orbit size {cls.size}")

# Wreath products multiply lazily: no table is ever materialized.
W = wreath(S3, 4)
print(f"\nS3 wr Sigma_4 has {W.size} elements")
w = W.encode((1, 0, 3, 2), (1, 2, 3, 0))
print(f"sample element: {W.label(w)}")
print(f"its square:     {W.label(W.mul(w, w))}")
print(f"its inverse:    {W.label(W.inv(w))}")

# Group descriptors mirror the JSON surface of the command line.
Q8 = build_group({"type": "quaternion"})
print(f"\nquaternion group: order {Q8.size}, "
      f"classes {len(tuple_conjugacy_classes(Q8, 1))}")
h = CommutingTuple(Q8, (2, 3))   # i and -i commute
print(f"(i, -i) is a commuting pair: {h.elements}")
