import itertools
import random

import pytest

from charops.groups import (
    CommutingTuple,
    GroupError,
    GroupHomomorphism,
    GSet,
    build_group,
    commuting_tuples,
    cyclic_group,
    dihedral_group,
    direct_product,
    fixed_points,
    gl_act_on_tuple,
    perm_group,
    quaternion_group,
    symmetric_group,
    tuple_conjugacy_classes,
    wreath,
)


def brute_conjugacy_classes(G):
    """Independent oracle: partition by the full conjugation orbit."""
    seen = set()
    classes = []
    for g in range(G.size):
        if g in seen:
            continue
        orbit = {G.conj(z, g) for z in range(G.size)}
        seen |= orbit
        classes.append(sorted(orbit))
    return classes


def check_group_axioms(G):
    assert G.size <= 64
    for x, y, z in itertools.product(range(G.size), repeat=3):
        assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
    e = G.identity
    for x in range(G.size):
        assert G.mul(x, e) == x == G.mul(e, x)
        assert G.mul(x, G.inv(x)) == e


# --- builders ---------------------------------------------------------------

def test_cyclic_2():
    G = cyclic_group(2)
    assert G.size == 2
    a = 1
    assert G.mul(a, a) == G.identity


def test_symmetric_3_classes():
    G = symmetric_group(3)
    assert G.size == 6
    assert len(brute_conjugacy_classes(G)) == 3
    assert len(tuple_conjugacy_classes(G, 1)) == 3


def test_non_associative_table_rejected():
    # start from C3 and corrupt one entry
    table = [[(a + b) % 3 for b in range(3)] for a in range(3)]
    table[2][2] = 2  # breaks associativity / inverse structure
    with pytest.raises(GroupError):
        build_group({"type": "table", "table": table})


@pytest.mark.parametrize("G", [cyclic_group(4), dihedral_group(4),
                               symmetric_group(3), quaternion_group()])
def test_axioms_builtin(G):
    check_group_axioms(G)


def test_dihedral_relation():
    n = 5
    G = dihedral_group(n)
    r, s = 1, n
    assert G.order(r) == n and G.order(s) == 2
    assert G.mul(G.mul(s, r), G.inv(s)) == G.inv(r)


def test_quaternion_relations():
    Q = quaternion_group()
    lab = {name: i for i, name in enumerate(Q.labels)}
    assert Q.mul(lab["i"], lab["i"]) == lab["-1"]
    assert Q.mul(lab["i"], lab["j"]) == lab["k"]
    assert Q.mul(lab["j"], lab["i"]) == lab["-k"]
    check_group_axioms(Q)


def test_build_group_descriptors():
    assert build_group({"type": "cyclic", "n": 4}).size == 4
    assert build_group({"type": "symmetric", "n": 3}).size == 6
    assert build_group({"type": "dihedral", "n": 4}).size == 8
    assert build_group({"type": "quaternion"}).size == 8
    G = build_group({"type": "perm", "degree": 3,
                     "generators": [[1, 0, 2], [1, 2, 0]]})
    assert G.size == 6
    with pytest.raises(GroupError):
        perm_group(8, [[1, 2, 3, 4, 5, 6, 7, 0]], size_bound=4)


# --- wreath products ----------------------------------------------------------

def test_wreath_size_and_product():
    C2 = cyclic_group(2)
    W = wreath(C2, 2)
    assert W.size == 8
    a, e = 1, 0
    swap = (1, 0)
    w = W.encode((a, e), swap)
    sq = W.mul(w, w)
    assert W.decode(sq) == ((a, a), (0, 1))


def test_wreath_untwisted_product():
    C2 = cyclic_group(2)
    W = wreath(C2, 3)
    ident = (0, 1, 2)
    rng = random.Random(1)
    for _ in range(50):
        g = tuple(rng.randrange(2) for _ in range(3))
        h = tuple(rng.randrange(2) for _ in range(3))
        prod = W.mul(W.encode(g, ident), W.encode(h, ident))
        assert W.decode(prod) == (tuple(C2.mul(x, y) for x, y in zip(g, h)), ident)


def test_wreath_inverse_law():
    """(g, s)^-1 = (s^-1 . g^-1, s^-1), elementwise over C2 wr S3."""
    from charops.groups import perm_inverse
    C2 = cyclic_group(2)
    W = wreath(C2, 3)
    for w in range(W.size):
        g, s = W.decode(w)
        si = perm_inverse(s)
        expected = (tuple(C2.inv(g[s[b]]) for b in range(3)), si)
        assert W.decode(W.inv(w)) == expected
        assert W.mul(w, W.inv(w)) == W.identity
        assert W.mul(W.inv(w), w) == W.identity


def test_wreath_associativity_sampled():
    W = wreath(cyclic_group(2), 3)
    rng = random.Random(7)
    for _ in range(300):
        x, y, z = (rng.randrange(W.size) for _ in range(3))
        assert W.mul(W.mul(x, y), z) == W.mul(x, W.mul(y, z))


def test_perm_rank_unrank_roundtrip():
    import itertools as it
    from charops.groups import perm_rank, perm_unrank
    for n in (1, 2, 3, 4):
        for i, p in enumerate(it.permutations(range(n))):
            assert perm_rank(p) == i
            assert perm_unrank(n, i) == p
    # the large-n path used by 9-point wreath groups
    rng = random.Random(2)
    for _ in range(50):
        p = list(range(9))
        rng.shuffle(p)
        p = tuple(p)
        assert perm_unrank(9, perm_rank(p)) == p


def test_wreath_large_n_uses_arith_codec():
    C2 = cyclic_group(2)
    W = wreath(C2, 9)
    assert W._perms is None   # no cached table at this size
    rng = random.Random(0)
    for _ in range(30):
        a = rng.randrange(10 ** 6)
        bases, perm = W.decode(a)
        assert W.encode(bases, perm) == a
    x, y, z = (rng.randrange(10 ** 6) for _ in range(3))
    assert W.mul(W.mul(x, y), z) == W.mul(x, W.mul(y, z))


def test_wreath_encode_decode_roundtrip():
    W = wreath(symmetric_group(3), 4)
    rng = random.Random(3)
    for _ in range(100):
        a = rng.randrange(W.size)
        bases, perm = W.decode(a)
        assert W.encode(bases, perm) == a


def test_nested_wreath():
    W2 = wreath(cyclic_group(2), 2)
    WW = wreath(W2, 2)
    assert WW.size == 8 ** 2 * 2
    rng = random.Random(5)
    for _ in range(100):
        x, y, z = (rng.randrange(WW.size) for _ in range(3))
        assert WW.mul(WW.mul(x, y), z) == WW.mul(x, WW.mul(y, z))


# --- commuting tuples -----------------------------------------------------------

def test_commuting_tuple_counts():
    S3 = symmetric_group(3)
    # oracle: number of commuting pairs = sum over g of |centralizer(g)|
    expected = sum(len(S3.centralizer(g)) for g in range(S3.size))
    assert expected == 18
    assert len(commuting_tuples(S3, 2)) == expected

    C2 = cyclic_group(2)
    assert len(commuting_tuples(C2, 2)) == 4
    for G in (C2, S3):
        assert len(commuting_tuples(G, 1)) == G.size
    assert len(commuting_tuples(S3, 0)) == 1


def test_tuple_class_counts():
    S3 = symmetric_group(3)
    # oracle: classes of pairs = sum over conj classes [g] of the number of
    # conjugacy classes of the centralizer C(g)
    total = 0
    for cls in brute_conjugacy_classes(S3):
        g = cls[0]
        cent = S3.centralizer(g)
        # conjugacy classes of the centralizer acting on itself
        seen = set()
        for h in cent:
            if h in seen:
                continue
            orbit = {S3.conj(z, h) for z in cent}
            seen |= orbit
            total += 1
    assert total == 8
    assert len(tuple_conjugacy_classes(S3, 2)) == 8
    assert len(tuple_conjugacy_classes(cyclic_group(2), 2)) == 4


def test_tuple_classes_partition():
    S3 = symmetric_group(3)
    classes = tuple_conjugacy_classes(S3, 2)
    assert sum(c.size for c in classes) == len(commuting_tuples(S3, 2))
    members = [m for c in classes for m in c.members]
    assert len(members) == len(set(members))


def test_d4_isomorphic_to_wreath():
    W = wreath(cyclic_group(2), 2)
    classes = tuple_conjugacy_classes(W, 1)
    assert sum(c.size for c in classes) == 8
    assert len(classes) == len(brute_conjugacy_classes(W)) == 5


# --- GL_d(Z) action ---------------------------------------------------------------

def test_gl_action_s_matrix():
    S3 = symmetric_group(3)
    for h in commuting_tuples(S3, 2):
        g, gp = h.elements
        out = gl_act_on_tuple(((0, -1), (1, 0)), h)
        assert out.elements == (gp, S3.inv(g))


def test_gl_action_identity():
    S3 = symmetric_group(3)
    for h in commuting_tuples(S3, 2)[:6]:
        assert gl_act_on_tuple(((1, 0), (0, 1)), h).elements == h.elements


def test_gl_action_axiom_random():
    S3 = symmetric_group(3)
    tuples = commuting_tuples(S3, 2)
    rng = random.Random(11)

    def random_sl2():
        mats = [((1, 1), (0, 1)), ((1, 0), (1, 1)), ((0, -1), (1, 0))]
        out = ((1, 0), (0, 1))
        from charops.lattices import mat_mul
        for _ in range(rng.randrange(1, 4)):
            out = mat_mul(out, rng.choice(mats))
        return out

    from charops.lattices import mat_mul
    for _ in range(100):
        g1, g2 = random_sl2(), random_sl2()
        h = rng.choice(tuples)
        # contravariant composition: applying g2 then g1 realizes g2 * g1
        lhs = gl_act_on_tuple(g1, gl_act_on_tuple(g2, h))
        rhs = gl_act_on_tuple(mat_mul(g2, g1), h)
        assert lhs.elements == rhs.elements


def test_gl_action_commutes_with_conjugation():
    S3 = symmetric_group(3)
    gamma = ((1, 1), (0, 1))
    for h in commuting_tuples(S3, 2):
        for z in range(S3.size):
            lhs = gl_act_on_tuple(gamma, h.conjugate(z))
            rhs = gl_act_on_tuple(gamma, h).conjugate(z)
            assert lhs.elements == rhs.elements


def test_gl_action_rejects_non_unimodular():
    C2 = cyclic_group(2)
    h = CommutingTuple(C2, (1, 1))
    with pytest.raises(GroupError):
        gl_act_on_tuple(((2, 0), (0, 1)), h)


# --- G-sets and fixed points ------------------------------------------------------

def test_fixed_points_trivial_tuple():
    S3 = symmetric_group(3)
    X = GSet.trivial(S3, 5)
    h = CommutingTuple(S3, (S3.identity,))
    assert fixed_points(X, h) == list(range(5))


def test_fixed_points_free_action():
    S3 = symmetric_group(3)
    X = GSet.left_translation(S3)
    for g in range(1, S3.size):
        assert fixed_points(X, CommutingTuple(S3, (g,))) == []


def test_fixed_points_swap():
    C2 = cyclic_group(2)
    X = GSet(C2, 2, [[0, 1], [1, 0]])
    assert fixed_points(X, CommutingTuple(C2, (1,))) == []
    assert fixed_points(X, CommutingTuple(C2, (0,))) == [0, 1]


def test_fixed_points_closure_not_just_entries():
    # entries (g, g^-1) generate <g>; a point fixed by both is fixed by all
    C4 = cyclic_group(4)
    X = GSet(C4, 2, [[0, 1, 0, 1], [1, 0, 1, 0]])  # c acts by swap
    h = CommutingTuple(C4, (1, 3))
    assert fixed_points(X, h) == []


def test_gset_from_perms():
    S3 = symmetric_group(3)
    gens = S3.generators()
    X = GSet.from_perms(S3, 3, [S3.perms[g] for g in gens])
    for g in range(6):
        for x in range(3):
            assert X.apply(g, x) == S3.perms[g][x]


def test_fixed_points_intersection_of_cyclic_closures():
    """X^<h> equals the intersection over entries of the fixed sets of the
    cyclic groups they generate."""
    import charops.groups as gr
    S3 = symmetric_group(3)
    X = GSet(S3, 3, [[p[x] for p in S3.perms] for x in range(3)])
    for h in commuting_tuples(S3, 2):
        direct = set(fixed_points(X, h))
        inter = set(range(X.size))
        for e in h.elements:
            cyc = gr.mulclose_indices(S3, [e])
            inter &= {x for x in range(X.size)
                      if all(X.apply(g, x) == x for g in cyc)}
        assert direct == inter


def test_commuting_tuple_rejects_non_commuting():
    S3 = symmetric_group(3)
    a = S3.perms.index((1, 0, 2))
    b = S3.perms.index((0, 2, 1))
    with pytest.raises(GroupError):
        CommutingTuple(S3, (a, b))


def test_homomorphism_validation():
    C4, C2 = cyclic_group(4), cyclic_group(2)
    GroupHomomorphism(C4, C2, [0, 1, 0, 1])           # reduction mod 2
    with pytest.raises(GroupError):
        GroupHomomorphism(C4, C2, [0, 1, 1, 0])


def test_direct_product():
    P = direct_product(cyclic_group(2), symmetric_group(3))
    assert P.size == 12
    check_group_axioms(P)
