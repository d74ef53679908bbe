import random

import pytest

from charops.groups import (
    CommutingTuple,
    GroupError,
    GSet,
    cyclic_group,
    symmetric_group,
    wreath,
)
from charops.lattices import mat_mul, random_unimodular
from charops.orbits import cycle_product, fixed_point_transport, reduce_tuple


def conjugate_in(G, a, b):
    return any(G.conj(z, a) == b for z in range(G.size))


# --- reduce ---------------------------------------------------------------


def test_reduce_single_2cycle():
    C2 = cyclic_group(2)
    W = wreath(C2, 2)
    h = CommutingTuple(W, (W.encode((1, 0), (1, 0)),))
    red = reduce_tuple(h)
    assert red.orbits == [[0, 1]]
    assert red.stabilizers[0].basis == ((2,),)
    assert red.matrices[0] == ((2,),)
    assert red.reduced[0].elements == (1,)   # a * e = a


def test_reduce_d2_mixed():
    C2 = cyclic_group(2)
    W = wreath(C2, 2)
    h1 = W.encode((1, 0), (1, 0))   # (a, e) with swap
    h2 = W.encode((1, 1), (0, 1))   # (a, a) with identity
    H = CommutingTuple(W, (h1, h2))
    red = reduce_tuple(H)
    assert red.orbits == [[0, 1]]
    assert red.stabilizers[0].basis == ((2, 0), (0, 1))
    # h(2 e1) = ((a,e),(01))^2 = ((a,a), id), projected at 0 gives a
    assert red.reduced[0].elements == (1, 1)


def test_reduce_trivial_sigma():
    S3 = symmetric_group(3)
    W = wreath(S3, 3)
    ident = (0, 1, 2)
    rng = random.Random(2)
    for _ in range(20):
        g = tuple(rng.randrange(6) for _ in range(3))
        H = CommutingTuple(W, (W.encode(g, ident),))
        red = reduce_tuple(H)
        assert red.orbits == [[0], [1], [2]]
        for k in range(3):
            assert red.stabilizers[k].basis == ((1,),)
            assert red.reduced[k].elements == (g[k],)


def test_reduce_det_equals_orbit_size():
    for G in (cyclic_group(2), cyclic_group(3), symmetric_group(3)):
        for n in (2, 3, 4):
            W = wreath(G, n)
            rng = random.Random(G.size * n)
            for _ in range(30):
                a = rng.randrange(W.size)
                red = reduce_tuple(CommutingTuple(W, (a,)))
                total = 0
                for orbit, M in zip(red.orbits, red.matrices):
                    det = M[0][0]
                    assert det == len(orbit)
                    total += len(orbit)
                assert total == n


# --- cycle products ------------------------------------------------------------


def test_cycle_product_matches_reduce_d1():
    """The d=1 reduction equals the cycle product for every wreath element."""
    S3 = symmetric_group(3)
    for n in (2, 3):
        W = wreath(S3, n)
        rng = random.Random(n)
        for _ in range(150):
            w = rng.randrange(W.size)
            bases, sigma = W.decode(w)
            red = reduce_tuple(CommutingTuple(W, (w,)))
            for orbit, h_k, i_k in zip(red.orbits, red.reduced, red.basepoints):
                assert cycle_product(S3, bases, sigma, orbit, i_k) == h_k.elements[0]


def test_cycle_product_abelian_order_free():
    """For commuting entries the product is just the product over the cycle."""
    C4 = cyclic_group(4)
    rng = random.Random(0)
    sigma = (1, 2, 0)  # 3-cycle 0 -> 1 -> 2 -> 0
    for _ in range(20):
        g = tuple(rng.randrange(4) for _ in range(3))
        expected = (g[0] + g[1] + g[2]) % 4
        assert cycle_product(C4, g, sigma, [0, 1, 2], 0) == expected


def test_cycle_product_identity_sigma():
    S3 = symmetric_group(3)
    g = (1, 2, 3)
    assert cycle_product(S3, g, (0, 1, 2), [1], 1) == 2


def test_cycle_product_is_wreath_power_coordinate():
    """Cross-check against the honest wreath power, basepoint by basepoint."""
    S3 = symmetric_group(3)
    W = wreath(S3, 3)
    rng = random.Random(13)
    for _ in range(100):
        w = rng.randrange(W.size)
        bases, sigma = W.decode(w)
        red = reduce_tuple(CommutingTuple(W, (w,)))
        for orbit in red.orbits:
            m = len(orbit)
            power = W.power(w, m)
            pow_bases, pow_sigma = W.decode(power)
            for i in orbit:
                assert cycle_product(S3, bases, sigma, orbit, i) == pow_bases[i]


def test_cycle_product_basepoints_conjugate():
    S3 = symmetric_group(3)
    W = wreath(S3, 3)
    rng = random.Random(4)
    for _ in range(100):
        w = rng.randrange(W.size)
        bases, sigma = W.decode(w)
        red = reduce_tuple(CommutingTuple(W, (w,)))
        for orbit in red.orbits:
            prods = [cycle_product(S3, bases, sigma, orbit, i) for i in orbit]
            for p in prods[1:]:
                assert conjugate_in(S3, prods[0], p)


def test_cycle_product_errors():
    S3 = symmetric_group(3)
    with pytest.raises(GroupError):
        cycle_product(S3, (0, 0, 0), (1, 2, 0), [0, 1, 2], 5)
    with pytest.raises(GroupError):
        cycle_product(S3, (0, 0, 0), (1, 0, 2), [0, 1, 2], 0)


# --- choice robustness -----------------------------------------------------------


def test_reduce_choice_robustness_basepoints():
    S3 = symmetric_group(3)
    W = wreath(S3, 3)
    rng = random.Random(21)
    for _ in range(40):
        w = rng.randrange(W.size)
        H = CommutingTuple(W, (w,))
        red0 = reduce_tuple(H)
        red1 = reduce_tuple(H, basepoint_rng=random.Random(rng.randrange(10**6)))
        assert red0.orbits == red1.orbits
        for h0, h1 in zip(red0.reduced, red1.reduced):
            assert conjugate_in(S3, h0.elements[0], h1.elements[0])


def test_reduce_choice_robustness_bases():
    C2 = cyclic_group(2)
    W = wreath(C2, 4)
    rng = random.Random(33)
    pairs = []
    for _ in range(20):
        a = rng.randrange(W.size)
        cent = [x for x in range(W.size) if W.commutes(a, x)]
        pairs.append(CommutingTuple(W, (a, rng.choice(cent))))
    for H in pairs:
        red0 = reduce_tuple(H)
        twists = [random_unimodular(2, rng) for _ in red0.orbits]
        red1 = reduce_tuple(H, basis_twists=twists)
        for k in range(len(red0.orbits)):
            # M' = U . M for the supplied unimodular U
            assert red1.matrices[k] == mat_mul(twists[k], red0.matrices[k])
            # twisted reduced tuples still commute and have conjugate entries'
            # generated subgroup data; here entries are related by the unimodular
            # change of basis of the stabilizer lattice
            assert red1.stabilizers[k] == red0.stabilizers[k]


def test_reduce_conjugation_equivariance():
    S3 = symmetric_group(3)
    W = wreath(S3, 3)
    rng = random.Random(8)
    for _ in range(40):
        w = rng.randrange(W.size)
        z = rng.randrange(W.size)
        red0 = reduce_tuple(CommutingTuple(W, (w,)))
        red1 = reduce_tuple(CommutingTuple(W, (W.conj(z, w),)))
        # orbit size multisets agree and reduced tuples match up to conjugacy
        sizes0 = sorted(len(o) for o in red0.orbits)
        sizes1 = sorted(len(o) for o in red1.orbits)
        assert sizes0 == sizes1
        used = set()
        for k0, h0 in enumerate(red0.reduced):
            found = None
            for k1, h1 in enumerate(red1.reduced):
                if k1 in used or len(red1.orbits[k1]) != len(red0.orbits[k0]):
                    continue
                if conjugate_in(S3, h0.elements[0], h1.elements[0]):
                    found = k1
                    break
            assert found is not None
            used.add(found)


# --- fixed point transport ----------------------------------------------------------


def test_transport_two_points_diagonal():
    C2 = cyclic_group(2)
    X = GSet.trivial(C2, 2)
    W = wreath(C2, 2)
    H = CommutingTuple(W, (W.encode((1, 1), (1, 0)),))
    data = fixed_point_transport(X, H)
    # reduced element is a^2 = e, so the orbit fixed set is all of X
    assert data.reduction.reduced[0].elements == (0,)
    assert len(data.product_fixed) == 2
    assert [len(f) for f in data.orbit_fixed] == [2]


def test_transport_trivial_tuple():
    C2 = cyclic_group(2)
    X = GSet(C2, 2, [[0, 1], [1, 0]])
    W = wreath(C2, 3)
    H = CommutingTuple(W, (W.identity,))
    data = fixed_point_transport(X, H)
    assert len(data.product_fixed) == X.size ** 3
    for xt in data.product_fixed[:8]:
        assert data.inverse(data.forward(xt)) == xt


def test_transport_free_action_empty():
    C2 = cyclic_group(2)
    X = GSet.left_translation(C2)
    W = wreath(C2, 2)
    # single 2-cycle with base product a: reduced tuple acts freely
    H = CommutingTuple(W, (W.encode((1, 0), (1, 0)),))
    data = fixed_point_transport(X, H)
    assert data.product_fixed == []
    assert data.orbit_fixed == [[]]


def test_transport_bijection_sweep_small():
    C2 = cyclic_group(2)
    spaces = [GSet.trivial(C2, 2), GSet(C2, 2, [[0, 1], [1, 0]]),
              GSet(C2, 3, [[0, 1], [1, 0], [2, 2]])]
    for n in (1, 2, 3):
        W = wreath(C2, n)
        for X in spaces:
            for a in range(W.size):
                fixed_point_transport(X, CommutingTuple(W, (a,)))
