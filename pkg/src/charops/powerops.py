"""Power operations on class functions.

The n-th power operation sends a function on (tuples in G, points of X) to a
function on (tuples in G wr Sigma_n, points of X^n).  Its value at (H, x) is
a product over the orbits of H's permutation action: the orbit of size m
with stabilizer basis matrix M contributes

    height 1:   m^(deg/2)  f(h_k, x_{i_k})
    height 2:   det(M)^(deg/2) M* f(h_k, x_{i_k})      (det M = m),

one degree scaling in either case.  Adams operations arise three ways: the
direct formula n^(deg/2) f(h o n, x), the canonical-cover factorization
through the n^d-th power operation, and (degree 0, p-typical) the
section-dependent pseudo-power operation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classfn import ClassFunction
from .coefficients import (
    GradedValue,
    graded_product,
    scale_by_degree,
    weight_slash_graded,
)
from .groups import CommutingTuple, GroupError, GSet, perm_inverse, wreath
from .lattices import Sublattice, sublattices_of_index
from .orbits import reduce_tuple

EAGER_D1_BOUND = 20000
EAGER_D2_BOUND = 500
ADAMS_WREATH_BUDGET = 9


class PowerGSet(GSet):
    """X^n as a G wr Sigma_n set, with points encoded in base |X|.

    The action is computed on the fly: (w . x)_a = g_a x_{sigma^-1(a)}.
    """

    def __init__(self, base_space, wreath_group):
        self.base_space = base_space
        self.group = wreath_group
        self.n = wreath_group.n
        self.size = base_space.size ** self.n

    def decode_point(self, code):
        out = []
        m = self.base_space.size
        for _ in range(self.n):
            code, r = divmod(code, m)
            out.append(r)
        return tuple(out)

    def encode_point(self, pts):
        m = self.base_space.size
        code = 0
        for p in reversed(pts):
            code = code * m + p
        return code

    def apply(self, g, x):
        bases, sigma = self.group.decode(g)
        xt = self.decode_point(x)
        si = perm_inverse(sigma)
        moved = tuple(self.base_space.apply(bases[a], xt[si[a]])
                      for a in range(self.n))
        return self.encode_point(moved)


def _power_value(f, W, els, x_points, basepoint_rng=None, basis_twists=None):
    """Value of the power operation at a tuple over W and product point."""
    H = CommutingTuple(W, els)
    twists = None
    if basis_twists is not None:
        # one twist per orbit, drawn deterministically from the provided rng
        red0 = reduce_tuple(H)
        twists = [basis_twists(k, H) for k in range(len(red0.orbits))]
    red = reduce_tuple(H, basepoint_rng=basepoint_rng, basis_twists=twists)
    acc = GradedValue.unit(f.kind)
    for k, orbit in enumerate(red.orbits):
        v = f.evaluate(red.reduced[k], x_points[red.basepoints[k]])
        if f.kind == "lat":
            v = weight_slash_graded(red.matrices[k], v)
        v = scale_by_degree(len(orbit), v)
        acc = graded_product(acc, v)
    return acc


def power_operation(f, n, mode="auto", basepoint_rng=None, basis_twists=None,
                    check_input="auto"):
    """The n-th power operation: class functions over G to class functions
    over G wr Sigma_n.

    mode "eager" materializes values on all pair orbits (small groups only);
    "lazy" returns a rule-backed function; "auto" picks by size.  The
    randomization hooks re-run the orbit reduction with random basepoints or
    twisted oriented bases; outputs must not depend on them.

    A non-invariant input draws a warning and the computation proceeds;
    violations then propagate to the invariance report of the output.  The
    check runs automatically for small stored inputs and can be forced or
    disabled.
    """
    if n < 0:
        raise GroupError("power operation arity must be >= 0")
    if check_input == "auto":
        check_input = f.values is not None and len(f.values) <= 64
    if check_input:
        rep = f.is_invariant()
        if not rep.ok:
            import warnings
            warnings.warn(f"power operation applied to a non-invariant input: {rep}")
    G = f.group
    W = wreath(G, n)
    if f.space.size == 1:
        out_space = GSet.point(W)
        def x_points(x):
            return (0,) * n
    else:
        out_space = PowerGSet(f.space, W)
        def x_points(x):
            return out_space.decode_point(x)

    def rule(els, x):
        return _power_value(f, W, els, x_points(x), basepoint_rng, basis_twists)

    out = ClassFunction.from_rule(W, f.d, rule, space=out_space, kind=f.kind,
                                  elliptic=f.elliptic)
    if mode == "eager" or (mode == "auto" and
                           ((f.d <= 1 and W.size <= EAGER_D1_BOUND) or
                            (f.d == 2 and W.size <= EAGER_D2_BOUND))):
        out = out.materialize()
    return out


def adams(f, n):
    """The n-th Adams operation: value at (h, x) is n^(deg/2) f(h o n, x).

    h o n raises every tuple entry to the n-th power; x stays valid because
    anything fixed by the entries is fixed by their powers.  The degree
    scaling is n^(deg/2) = n^j on the degree-2j component, matching the
    classical operation on even cohomology at both heights.
    """
    if n < 1:
        raise GroupError("adams operation needs n >= 1")

    def rule(els, x):
        powered = CommutingTuple(f.group, els).entry_power(n)
        return scale_by_degree(n, f.evaluate(powered, x))

    return ClassFunction.from_rule(f.group, f.d, rule, space=f.space,
                                   kind=f.kind, elliptic=f.elliptic)


def cayley_torsion_tuple(H, n):
    """The canonical-cover tuple over G wr Sigma_{n^d} attached to h: Z^d -> G.

    Entry j is the pair (diagonal tuple of h_j, Cayley translation by e_j on
    Z^d / n Z^d).  The kernel of the permutation part is n Z^d.
    """
    G = H.group
    d = H.d
    npts = n ** d
    W = wreath(G, npts)

    def point(v):
        code = 0
        for c in reversed(v):
            code = code * n + c
        return code

    def translation(j):
        perm = [0] * npts
        for code in range(npts):
            v = []
            c = code
            for _ in range(d):
                c, r = divmod(c, n)
                v.append(r)
            v[j] = (v[j] + 1) % n
            perm[code] = point(v)
        return tuple(perm)

    entries = []
    for j in range(d):
        entries.append(W.encode((H.elements[j],) * npts, translation(j)))
    return CommutingTuple(W, tuple(entries))


def adams_via_power(f, n, budget=ADAMS_WREATH_BUDGET):
    """Adams operation computed through the n^d-th power operation on the
    canonical torsion cover.  Contract: equals adams(f, n) exactly at height
    1 (degree 0) and within tolerance at height 2."""
    if n < 1:
        raise GroupError("adams operation needs n >= 1")
    npts = n ** f.d
    if npts > budget:
        raise GroupError(f"wreath budget exceeded: n^d = {npts} > {budget}")
    G = f.group
    W = wreath(G, npts)

    def rule(els, x):
        tau = cayley_torsion_tuple(CommutingTuple(G, els), n)
        return _power_value(f, W, tau.elements, (x,) * npts)

    return ClassFunction.from_rule(f.group, f.d, rule, space=f.space,
                                   kind=f.kind, elliptic=f.elliptic)


# ---------------------------------------------------------------------------
# E-theory pseudo-power operation


@dataclass
class SectionPhi:
    """A section of (finite-index endomorphisms of Z^d) -> (sublattices).

    rule(L) returns an integer matrix whose rows span the sublattice L; the
    induced isomorphism Z^d -> L sends e_j to the j-th row.  The optional
    coefficient_action(L, value) models a nontrivial action on the
    coefficient ring; the default (None) is the trivial action, valid on
    automorphism-invariant inputs.
    """

    rule: object
    coefficient_action: object = None
    name: str = "section"


def hnf_section():
    return SectionPhi(lambda L: L.basis, name="hnf")


def twisted_section(unit):
    """HNF basis premultiplied by a fixed unimodular matrix (same row span)."""
    from .lattices import mat_mul

    def rule(L):
        if L.d == 0:
            return ()
        return mat_mul(unit, L.basis)

    return SectionPhi(rule, name="twisted")


def _is_prime_power_order(W, element, p):
    k = W.order(element)
    while k % p == 0:
        k //= p
    return k == 1


def pseudo_power_etheory(f, n, p, section=None):
    """The section-dependent power operation on degree-0 class functions of
    p-power-order tuples.

    Value at [h over G wr Sigma_n] is the product over orbits k of
    f([psi* h_k]), where psi: Z^d -> L_k is the isomorphism picked by the
    section for the stabilizer sublattice L_k.  With the HNF section this is
    exactly the degree-0 height-1 power operation.  Raises on tuples whose
    entries do not have p-power order.
    """
    if section is None:
        section = hnf_section()
    G = f.group
    W = wreath(G, n)

    def rule(els, x):
        for e in els:
            if not _is_prime_power_order(W, e, p):
                raise GroupError(f"tuple entry of non-{p}-power order")
        H = CommutingTuple(W, els)
        red = reduce_tuple(H)
        acc = GradedValue.unit(f.kind)
        for k, orbit in enumerate(red.orbits):
            L = red.stabilizers[k]
            A = section.rule(L)
            if L.d > 0 and Sublattice(A, d=L.d) != L:
                raise GroupError("section matrix does not span the sublattice")
            i_k = red.basepoints[k]
            entries = tuple(W.base_coordinate(H.at(row), i_k) for row in A)
            t = CommutingTuple(G, entries)
            for e in entries:
                if not _is_prime_power_order(G, e, p):
                    raise GroupError(f"reduced entry of non-{p}-power order")
            v = f.evaluate(t, 0)
            if section.coefficient_action is not None:
                v = section.coefficient_action(L, v)
            acc = graded_product(acc, v)
        return acc

    return ClassFunction.from_rule(W, f.d, rule, kind=f.kind)


# ---------------------------------------------------------------------------
# Hecke-type operator on lattice functions


def hecke_like(F, n):
    """Sum of pullbacks of F over all index-n sublattices (HNF bases).

    S_n(F)(Lambda) = sum over sublattices L' of index n of F(L' basis of
    Lambda).  On a weight-w modular form this equals n^(1-w) T_n F for the
    classical Hecke operator T_n, so S_2(E4) = (9/8) E4 and
    S_3(E4) = (28/27) E4.  (The power-operation orbit factor would add a
    det^w twist; that variant is n^w S_n and has the same eigenvectors.)
    """
    if n < 1:
        raise GroupError("hecke operator needs index >= 1")
    if n == 1:
        return F
    out = None
    for L in sublattices_of_index(2, n):
        term = F.slash(L.basis)
        out = term if out is None else out + term
    return out


def hecke_q_oracle(coeffs, weight, n):
    """q-expansion of the classical T_n on a level-1 form of given weight.

    a_m(T_n f) = sum over d | gcd(m, n) of d^(weight-1) a_{mn/d^2}; used as an
    independent check of hecke_like's normalization.
    """
    import math
    m_max = (len(coeffs) - 1) // n
    out = []
    for m in range(m_max + 1):
        acc = 0j
        divisors = range(1, n + 1) if m == 0 else range(1, math.gcd(m, n) + 1)
        for d in divisors:
            if n % d == 0 and (m == 0 or m % d == 0):
                idx = (m // d) * (n // d)
                if idx < len(coeffs):
                    acc += d ** (weight - 1) * complex(coeffs[idx])
        out.append(acc)
    return out
