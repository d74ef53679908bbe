"""The power operation at height 1, checked against tensor-power traces.

P_n sends a class function on G to one on G wr Sigma_n; on the character of
a representation V it must compute the character of the wreath action on
V tensor n.  The comparison below runs the two completely independent code
paths and reports their maximum disagreement.
"""

from charops import (
    CommutingTuple,
    character,
    compare_with_geometric,
    power_operation,
    symmetric_group,
    tuple_conjugacy_classes,
    wreath,
)
from charops.reporacle import standard_s3, tensor_power_trace_wreath

S3 = symmetric_group(3)
rho = standard_s3(S3)
chi = character(rho)
print("character of the 2-dimensional representation of S3:")
for cls in tuple_conjugacy_classes(S3, 1):
    g = cls.representative.elements[0]
    print(f"  chi({S3.label(g)}) = {chi.evaluate(cls.representative, 0).component(0):.3f}")

n = 3
P3 = power_operation(chi, n)
W = wreath(S3, n)
print(f"\nP_{n}(chi) lives on {W!r}")

print("sample values against the honest tensor trace on V^(x3):")
for cls in tuple_conjugacy_classes(W, 1)[:6]:
    w = cls.representative.elements[0]
    geometric = P3.evaluate(cls.representative, 0).component(0)
    oracle = tensor_power_trace_wreath(rho, W, w)
    print(f"  {W.label(w):28s} geometric {geometric:.3f}   oracle {oracle:.3f}")

dev = compare_with_geometric(rho, n)
print(f"\nmax deviation over all classes: {dev:.2e}")

# multiplicativity without additivity: P_n(fg) relates to P_n(f)P_n(g) only
# through the diagonal, and P_n genuinely fails to respect sums
from charops.classfn import add
s = add(chi, chi)
P2s = power_operation(s, 2)
P2chi = power_operation(chi, 2)
W2 = wreath(S3, 2)
H = CommutingTuple(W2, (W2.identity,))
print(f"\nP_2(chi + chi) at the identity: {P2s.evaluate(H, 0).component(0):.1f}")
print(f"2 P_2(chi) at the identity:     {2 * P2chi.evaluate(H, 0).component(0):.1f}")
