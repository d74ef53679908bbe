"""Orbit reduction of commuting tuples in wreath products.

A commuting d-tuple H in G wr Sigma_n acts on the n points through the
permutation parts.  Each orbit I_k contributes a stabilizer sublattice
L_k of Z^d (index |I_k|), its oriented HNF basis matrix M_k, and a reduced
commuting tuple h_k in G obtained by evaluating H at the basis vectors of
L_k and projecting onto the basepoint coordinate.  This is the single code
path used for every arity; the cycle product is only a cross-check at d=1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .groups import CommutingTuple, GroupError, WreathGroup, fixed_points, perm_inverse
from .lattices import (
    _kernel_from_relations,
    mat_mul,
    orbit_with_labels,
    oriented_basis_matrix,
)


@dataclass
class OrbitReduction:
    group: object              # the wreath group G wr Sigma_n
    tuple: CommutingTuple      # the input tuple
    orbits: list               # sorted point lists, ordered by min point
    basepoints: list
    stabilizers: list          # Sublattice per orbit
    matrices: list             # HNF (or twisted) basis rows per orbit
    reduced: list              # CommutingTuple in the base group per orbit
    labels: list               # per orbit: {point: vector} with sigma^v(i_k) = point

    def to_json(self):
        return {
            "orbits": [list(o) for o in self.orbits],
            "basepoints": list(self.basepoints),
            "stabilizers": [s.to_json() for s in self.stabilizers],
            "matrices": [[list(r) for r in m] for m in self.matrices],
            "reduced": [list(t.elements) for t in self.reduced],
        }


def reduce_tuple(H, basepoint_rng=None, basis_twists=None):
    """Decompose a commuting tuple in G wr Sigma_n into per-orbit data.

    basepoint_rng: optional random.Random; picks random basepoints instead of
    orbit minima (the reduced tuples change only within their conjugacy
    class).  basis_twists: optional list of SL_d(Z) matrices U_k; the basis of
    the k-th stabilizer becomes U_k . HNF, still orientation preserving.
    """
    W = H.group
    if not isinstance(W, WreathGroup):
        raise GroupError("reduce_tuple expects a tuple over a wreath product")
    G = W.base
    n = W.n
    d = H.d
    parts = [W.decode(e) for e in H.elements]
    sigmas = [p for (_, p) in parts]

    remaining = set(range(n))
    orbit_data = []
    while remaining:
        i0 = min(remaining)
        order, labels, relations = orbit_with_labels(sigmas, i0)
        orbit = sorted(order)
        remaining -= set(orbit)
        orbit_data.append((orbit, relations, labels))
    orbit_data.sort(key=lambda t: t[0][0])

    orbits, basepoints, stabs, mats, reduced, all_labels = [], [], [], [], [], []
    for k, (orbit, relations, labels) in enumerate(orbit_data):
        stab = _kernel_from_relations(relations, d, len(orbit))
        if basepoint_rng is not None:
            i_k = basepoint_rng.choice(orbit)
            if i_k != orbit[0]:
                _, labels, _ = orbit_with_labels(sigmas, i_k)
        else:
            i_k = orbit[0]
        basis = oriented_basis_matrix(stab)
        if basis_twists is not None and basis_twists[k] is not None:
            basis = mat_mul(basis_twists[k], basis)
        entries = []
        for row in basis:
            w = H.at(row)
            entries.append(W.base_coordinate(w, i_k))
        try:
            h_k = CommutingTuple(G, tuple(entries))
        except GroupError as exc:
            raise GroupError(f"reduced entries of orbit {k} do not commute") from exc
        orbits.append(orbit)
        basepoints.append(i_k)
        stabs.append(stab)
        mats.append(basis)
        reduced.append(h_k)
        all_labels.append(labels)
    return OrbitReduction(W, H, orbits, basepoints, stabs, mats, reduced, all_labels)


def cycle_product(G, bases, sigma, cycle, basepoint):
    """Ordered product of base entries along a cycle of sigma.

    The traversal runs basepoint, sigma^-1(basepoint), sigma^-2(basepoint), ...
    so that the result equals the basepoint coordinate of (bases, sigma)^m in
    the wreath product, m the cycle length; this matches the twisted product
    convention of WreathGroup and hence agrees with reduce_tuple at d = 1.
    Any two basepoints in the same cycle give conjugate products, and for
    commuting entries the product is independent of the traversal direction.
    """
    if basepoint not in cycle:
        raise GroupError("basepoint not contained in the cycle")
    si = perm_inverse(tuple(sigma))
    pts = [basepoint]
    while si[pts[-1]] != basepoint:
        pts.append(si[pts[-1]])
    if sorted(pts) != sorted(cycle):
        raise GroupError("cycle is not a single sigma-orbit")
    out = G.identity
    for p in pts:
        out = G.mul(out, bases[p])
    return out


@dataclass
class TransportData:
    """Two-sided inverse pair between product fixed points and orbit data."""

    product_fixed: list        # n-tuples of X-points fixed by the whole image
    orbit_fixed: list          # per orbit: fixed points of X under h_k
    reduction: OrbitReduction
    space: object

    def forward(self, xtuple):
        return tuple(xtuple[i] for i in self.reduction.basepoints)

    def inverse(self, ys):
        red = self.reduction
        W = red.group
        X = self.space
        out = [None] * W.n
        for k, orbit in enumerate(red.orbits):
            labels = red.labels[k]
            for p in orbit:
                u = red.tuple.at(labels[p])
                c = W.base_coordinate(u, p)
                out[p] = X.apply(c, ys[k])
        return tuple(out)


def fixed_point_transport(X, H):
    """Fixed points of X^n under im(H) against the product of orbit fixed sets.

    Returns TransportData whose forward map picks basepoint coordinates and
    whose inverse transports each orbit representative around the orbit by
    the stored labels.  Both composites are asserted to be identities.
    """
    W = H.group
    if not isinstance(W, WreathGroup):
        raise GroupError("expected a tuple over a wreath product")
    if X.group != W.base:
        raise GroupError("G-set group does not match the wreath base")
    red = reduce_tuple(H)
    n = W.n

    parts = [(bases, perm_inverse(sigma))
             for bases, sigma in (W.decode(e) for e in H.elements)]
    apply = X.apply

    def is_fixed(xt):
        for bases, si in parts:
            for a in range(n):
                if apply(bases[a], xt[si[a]]) != xt[a]:
                    return False
        return True

    product_fixed = [xt for xt in itertools.product(range(X.size), repeat=n)
                     if is_fixed(xt)]
    orbit_fixed = [fixed_points(X, h_k) for h_k in red.reduced]

    data = TransportData(product_fixed, orbit_fixed, red, X)

    expected = 1
    for fs in orbit_fixed:
        expected *= len(fs)
    if expected != len(product_fixed):
        raise GroupError(
            f"transport cardinality mismatch: {len(product_fixed)} vs {expected}"
        )
    fixed_set = set(product_fixed)
    for xt in product_fixed:
        if data.inverse(data.forward(xt)) != xt:
            raise GroupError("inverse . forward is not the identity")
    for ys in itertools.product(*orbit_fixed):
        back = data.inverse(ys)
        if back not in fixed_set:
            raise GroupError("inverse does not land in the product fixed set")
        if data.forward(back) != tuple(ys):
            raise GroupError("forward . inverse is not the identity")
    return data
