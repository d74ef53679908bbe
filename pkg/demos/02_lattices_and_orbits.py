"""Integer lattices and the orbit reduction of wreath tuples.

A commuting tuple H in G wr Sigma_n acts on the n points through its
permutation parts.  Every orbit contributes a finite-index stabilizer
sublattice of Z^d (kernel of the action), canonicalized by its Hermite
normal form, and a reduced tuple in G obtained by evaluating H at the HNF
basis vectors and projecting at the orbit's basepoint.
"""

from charops import (
    CommutingTuple,
    cyclic_group,
    hnf,
    reduce_tuple,
    stabilizer_lattice,
    sublattices_of_index,
    wreath,
)

print("HNF of rows (1,2),(3,4):", hnf(((1, 2), (3, 4))))

for n in (2, 3, 4):
    subs = sublattices_of_index(2, n)
    print(f"index-{n} sublattices of Z^2: {len(subs)}  "
          f"bases {[L.basis for L in subs]}")

# the kernel of two commuting swaps on two points: v1 + v2 must be even
L = stabilizer_lattice([(1, 0), (1, 0)], 0)
print(f"\nstabilizer of two simultaneous swaps: basis {L.basis}, index {L.index}")

# orbit reduction of a d=2 tuple in C2 wr Sigma_2
C2 = cyclic_group(2)
W = wreath(C2, 2)
H = CommutingTuple(W, (
    W.encode((1, 0), (1, 0)),   # (a, e) paired with the swap
    W.encode((1, 1), (0, 1)),   # (a, a) with no swap
))
red = reduce_tuple(H)
print(f"\nreduction of a commuting pair in C2 wr Sigma_2:")
for k, orbit in enumerate(red.orbits):
    print(f"  orbit {orbit}, basepoint {red.basepoints[k]}, "
          f"stabilizer {red.stabilizers[k].basis}, "
          f"reduced tuple {red.reduced[k].elements}")

# determinant of the basis matrix always equals the orbit size
for k, orbit in enumerate(red.orbits):
    M = red.matrices[k]
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    assert det == len(orbit)
print("det(M_k) = |orbit k| holds on every orbit")
