"""Finite groups, wreath products, commuting tuples, and finite G-sets.

Elements of every group are dense integer indices 0..size-1.  Small groups
(cyclic, dihedral, symmetric, quaternion, explicit tables, permutation
closures) store an explicit multiplication table; wreath products and direct
products multiply lazily through an index encoding, so G wr Sigma_n works for
n >= 4 without materializing |G|^n * n! rows.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

EAGER_TABLE_BOUND = 5040


class GroupError(ValueError):
    pass


# ---------------------------------------------------------------------------
# permutation helpers (tuples p with p[i] = image of i, composition p.q = p after q)


def perm_compose(p, q):
    return tuple(p[q[i]] for i in range(len(p)))

def perm_inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)

def perm_rank(p):
    """Lexicographic rank of a permutation tuple (Lehmer code)."""
    n = len(p)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if p[j] < p[i])
        f = 1
        for m in range(1, n - i):
            f *= m
        rank += smaller * f
    return rank

def perm_unrank(n, rank):
    avail = list(range(n))
    out = []
    fact = 1
    for m in range(1, n):
        fact *= m
    for i in range(n):
        if n - i - 1 > 0:
            idx, rank = divmod(rank, fact)
            fact //= (n - i - 1)
        else:
            idx = rank
        out.append(avail.pop(idx))
    return tuple(out)


# ---------------------------------------------------------------------------


class FiniteGroup:
    """Base class.  Subclasses implement mul/inv; identity is element 0 by
    convention unless stated otherwise."""

    size: int
    identity: int
    labels = None

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def elements(self):
        return range(self.size)

    def generators(self):
        """A deterministic generating set."""
        raise NotImplementedError

    def power(self, a, k):
        if k < 0:
            return self.power(self.inv(a), -k)
        out = self.identity
        base = a
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def order(self, a):
        k = 1
        x = a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def conj(self, z, a):
        """z a z^-1."""
        return self.mul(self.mul(z, a), self.inv(z))

    def commutes(self, a, b):
        return self.mul(a, b) == self.mul(b, a)

    def centralizer(self, a):
        return [g for g in self.elements() if self.commutes(g, a)]

    def label(self, a):
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    @property
    def table(self):
        """Materialized multiplication table; refuses above the eager bound."""
        if getattr(self, "_table", None) is None:
            if self.size > EAGER_TABLE_BOUND:
                raise GroupError(
                    f"group of size {self.size} exceeds eager table bound "
                    f"{EAGER_TABLE_BOUND}; use lazy multiplication"
                )
            self._table = [
                [self.mul(a, b) for b in range(self.size)] for a in range(self.size)
            ]
        return self._table

    @property
    def inverse(self):
        if getattr(self, "_inverse", None) is None:
            self._inverse = [self.inv(a) for a in range(self.size)]
        return self._inverse

    def __repr__(self):
        return f"<{type(self).__name__} size={self.size}>"


class TableGroup(FiniteGroup):
    """Group given by an explicit multiplication table."""

    def __init__(self, table, labels=None, validate=True, name=None):
        self.size = len(table)
        self._table = [list(row) for row in table]
        self.labels = labels
        self.name = name
        ident = None
        for e in range(self.size):
            if all(self._table[e][x] == x == self._table[x][e] for x in range(self.size)):
                ident = e
                break
        if ident is None:
            raise GroupError("table has no two-sided identity")
        self.identity = ident
        inv = [None] * self.size
        for a in range(self.size):
            for b in range(self.size):
                if self._table[a][b] == ident and self._table[b][a] == ident:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise GroupError(f"element {a} has no inverse")
        self._inverse = inv
        if validate:
            self.validate_associativity()

    def validate_associativity(self, rng=None):
        """Full triple loop up to size 64, seeded sampling above."""
        n = self.size
        t = self._table
        if n <= 64:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = rng or random.Random(0)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(20000))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError(f"non-associative triple ({a},{b},{c})")

    def mul(self, a, b):
        return self._table[a][b]

    def inv(self, a):
        return self._inverse[a]

    def generators(self):
        if getattr(self, "_gens", None) is None:
            gens = []
            have = {self.identity}
            while len(have) < self.size:
                nxt = min(a for a in range(self.size) if a not in have)
                gens.append(nxt)
                have = mulclose_indices(self, gens)
            self._gens = gens or [self.identity]
        return self._gens


def mulclose_indices(G, gens):
    """Closure of a set of element indices under multiplication."""
    els = {G.identity}
    bdy = [G.identity]
    while bdy:
        new = []
        for x in bdy:
            for g in gens:
                y = G.mul(x, g)
                if y not in els:
                    els.add(y)
                    new.append(y)
        bdy = new
    return els


# ---------------------------------------------------------------------------
# built-in families


def cyclic_group(n):
    if n < 1:
        raise GroupError("cyclic order must be >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["e"] + [f"c^{k}" if k > 1 else "c" for k in range(1, n)]
    return TableGroup(table, labels=labels, name=f"C{n}")


def dihedral_group(n):
    """Dihedral group of order 2n: indices 0..n-1 are r^k, n..2n-1 are s r^k."""
    if n < 1:
        raise GroupError("dihedral parameter must be >= 1")
    size = 2 * n

    def mul(a, b):
        fa, ka = divmod(a, n)[0], a % n
        fb, kb = divmod(b, n)[0], b % n
        if fa == 0 and fb == 0:
            return (ka + kb) % n
        if fa == 0 and fb == 1:
            return n + (kb - ka) % n
        if fa == 1 and fb == 0:
            return n + (ka + kb) % n
        return (kb - ka) % n

    table = [[mul(a, b) for b in range(size)] for a in range(size)]
    labels = [f"r^{k}" for k in range(n)] + [f"sr^{k}" for k in range(n)]
    labels[0] = "e"
    return TableGroup(table, labels=labels, name=f"D{n}")


def symmetric_group(n):
    """Symmetric group on n letters; elements indexed in lexicographic order."""
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[perm_compose(p, q)] for q in perms] for p in perms]
    labels = ["".join(map(str, p)) for p in perms]
    G = TableGroup(table, labels=labels, name=f"S{n}")
    G.perms = perms
    return G


_QUAT_UNITS = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

def quaternion_group():
    """Quaternion group of order 8 on units {±1, ±i, ±j, ±k}."""
    base = {("1", "1"): ("+", "1"), ("i", "i"): ("-", "1"),
            ("j", "j"): ("-", "1"), ("k", "k"): ("-", "1"),
            ("i", "j"): ("+", "k"), ("j", "i"): ("-", "k"),
            ("j", "k"): ("+", "i"), ("k", "j"): ("-", "i"),
            ("k", "i"): ("+", "j"), ("i", "k"): ("-", "j")}

    def umul(u, v):
        if u == "1":
            return "+", v
        if v == "1":
            return "+", u
        return base[(u, v)]

    def mul(a, b):
        sa, ua = ("-" if _QUAT_UNITS[a].startswith("-") else "+"), _QUAT_UNITS[a].lstrip("-")
        sb, ub = ("-" if _QUAT_UNITS[b].startswith("-") else "+"), _QUAT_UNITS[b].lstrip("-")
        s, u = umul(ua, ub)
        neg = (sa == "-") ^ (sb == "-") ^ (s == "-")
        return _QUAT_UNITS.index(("-" if neg else "") + u)

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return TableGroup(table, labels=list(_QUAT_UNITS), name="Q8")


def perm_group(degree, generator_perms, size_bound=EAGER_TABLE_BOUND):
    """Group generated by permutations of {0..degree-1}, by orbit closure."""
    gens = [tuple(p) for p in generator_perms]
    for p in gens:
        if sorted(p) != list(range(degree)):
            raise GroupError(f"not a permutation of 0..{degree-1}: {p}")
    ident = tuple(range(degree))
    els = {ident}
    bdy = [ident]
    while bdy:
        new = []
        for x in bdy:
            for g in gens:
                y = perm_compose(x, g)
                if y not in els:
                    if len(els) >= size_bound:
                        raise GroupError(f"generated group exceeds bound {size_bound}")
                    els.add(y)
                    new.append(y)
        bdy = new
    perms = sorted(els)
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[perm_compose(p, q)] for q in perms] for p in perms]
    G = TableGroup(table, labels=["".join(map(str, p)) for p in perms],
                   name=f"perm{degree}")
    G.perms = perms
    return G


def build_group(spec):
    """Build a group from a descriptor dict (the JSON surface).

    {"type":"cyclic","n":4} | {"type":"symmetric","n":3} | {"type":"dihedral","n":4}
    | {"type":"quaternion"} | {"type":"table","size":m,"table":[[...]]}
    | {"type":"perm","degree":k,"generators":[[...]]}
    """
    kind = spec.get("type")
    if kind == "cyclic":
        return cyclic_group(int(spec["n"]))
    if kind == "dihedral":
        return dihedral_group(int(spec["n"]))
    if kind == "symmetric":
        return symmetric_group(int(spec["n"]))
    if kind == "quaternion":
        return quaternion_group()
    if kind == "table":
        table = spec["table"]
        if "size" in spec and len(table) != spec["size"]:
            raise GroupError("declared size does not match table")
        return TableGroup(table)
    if kind == "perm":
        return perm_group(int(spec["degree"]), spec["generators"])
    raise GroupError(f"unknown group descriptor type {kind!r}")


# ---------------------------------------------------------------------------
# wreath products G wr Sigma_n, multiplied lazily through an index encoding


class WreathGroup(FiniteGroup):
    """G wr Sigma_n with the twisted product

        (g, s) (g', s') = (g * (s . g'), s s'),   [s . g']_b = g'_{s^-1(b)}.

    Elements encode as  index = rank(perm) * |G|^n + sum_i base_i |G|^i.
    """

    def __init__(self, base, n):
        if n < 0:
            raise GroupError("wreath arity must be >= 0")
        self.base = base
        self.n = n
        self._bs = base.size
        self._bn = self._bs ** n
        fact = 1
        for m in range(2, n + 1):
            fact *= m
        self.size = self._bn * fact
        self.identity = 0
        if n <= 7:
            self._perms = list(itertools.permutations(range(n)))
            self._perm_index = {p: i for i, p in enumerate(self._perms)}
        else:
            self._perms = None

    # encoding ------------------------------------------------------------

    def encode(self, bases, perm):
        bases = tuple(bases)
        perm = tuple(perm)
        if len(bases) != self.n or len(perm) != self.n:
            raise GroupError("wrong arity for wreath element")
        code = 0
        for i in reversed(range(self.n)):
            code = code * self._bs + bases[i]
        if self._perms is not None:
            r = self._perm_index[perm]
        else:
            r = perm_rank(perm)
        return r * self._bn + code

    def decode(self, a):
        r, code = divmod(a, self._bn)
        bases = []
        for _ in range(self.n):
            code, b = divmod(code, self._bs)
            bases.append(b)
        if self._perms is not None:
            perm = self._perms[r]
        else:
            perm = perm_unrank(self.n, r)
        return tuple(bases), perm

    # group law -----------------------------------------------------------

    def mul(self, a, b):
        g, s = self.decode(a)
        g2, s2 = self.decode(b)
        si = perm_inverse(s)
        bases = tuple(self.base.mul(g[i], g2[si[i]]) for i in range(self.n))
        return self.encode(bases, perm_compose(s, s2))

    def inv(self, a):
        # (g, s)^-1 = (s^-1 . g^-1, s^-1), i.e. coordinate b holds g_{s(b)}^-1
        g, s = self.decode(a)
        bases = tuple(self.base.inv(g[s[i]]) for i in range(self.n))
        return self.encode(bases, perm_inverse(s))

    def generators(self):
        gens = []
        e = self.base.identity
        for g in self.base.generators():
            bases = [e] * self.n
            if self.n:
                bases[0] = g
                gens.append(self.encode(bases, tuple(range(self.n))))
        if self.n >= 2:
            swap = (1, 0) + tuple(range(2, self.n))
            gens.append(self.encode([e] * self.n, swap))
        if self.n >= 3:
            cyc = tuple(range(1, self.n)) + (0,)
            gens.append(self.encode([e] * self.n, cyc))
        return gens or [self.identity]

    def perm_part(self, a):
        return self.decode(a)[1]

    def base_coordinate(self, a, i):
        return self.decode(a)[0][i]

    def label(self, a):
        bases, perm = self.decode(a)
        inner = ",".join(self.base.label(b) for b in bases)
        return f"({inner};{''.join(map(str, perm))})"

    # wreath products over the same base group are interchangeable
    def __eq__(self, other):
        return (isinstance(other, WreathGroup) and self.n == other.n
                and self.base == other.base)

    def __hash__(self):
        return hash(("wreath", self.n, self.base))

    def __repr__(self):
        return f"<WreathGroup {getattr(self.base, 'name', self.base)} wr S{self.n} size={self.size}>"


def wreath(G, n, eager=False):
    """The wreath product G wr Sigma_n.

    eager=True additionally materializes the multiplication table (refused
    above the size bound); the returned group multiplies lazily either way.
    """
    W = WreathGroup(G, n)
    if eager:
        _ = W.table
    return W


class DirectProductGroup(FiniteGroup):
    """G1 x G2 with index = a1 + a2 * |G1|."""

    def __init__(self, g1, g2):
        self.g1 = g1
        self.g2 = g2
        self.size = g1.size * g2.size
        self.identity = self.encode(g1.identity, g2.identity)

    def encode(self, a1, a2):
        return a1 + a2 * self.g1.size

    def decode(self, a):
        a2, a1 = divmod(a, self.g1.size)
        return a1, a2

    def mul(self, a, b):
        a1, a2 = self.decode(a)
        b1, b2 = self.decode(b)
        return self.encode(self.g1.mul(a1, b1), self.g2.mul(a2, b2))

    def inv(self, a):
        a1, a2 = self.decode(a)
        return self.encode(self.g1.inv(a1), self.g2.inv(a2))

    def generators(self):
        out = [self.encode(g, self.g2.identity) for g in self.g1.generators()]
        out += [self.encode(self.g1.identity, g) for g in self.g2.generators()]
        return out

    def __eq__(self, other):
        return (isinstance(other, DirectProductGroup)
                and self.g1 == other.g1 and self.g2 == other.g2)

    def __hash__(self):
        return hash(("product", self.g1, self.g2))


def direct_product(g1, g2):
    return DirectProductGroup(g1, g2)


# ---------------------------------------------------------------------------
# homomorphisms


class GroupHomomorphism:
    """Map of groups stored as a dense image array on source indices."""

    VALIDATE_EXHAUSTIVE_BOUND = 1024

    def __init__(self, source, target, image, validate=True):
        self.source = source
        self.target = target
        self.image = list(image)
        if len(self.image) != source.size:
            raise GroupError("image array has wrong length")
        if validate:
            self.validate()

    def __call__(self, a):
        return self.image[a]

    def validate(self, samples=2000, seed=0):
        S, T = self.source, self.target
        if self.image[S.identity] != T.identity:
            raise GroupError("homomorphism does not preserve identity")
        if S.size <= self.VALIDATE_EXHAUSTIVE_BOUND:
            pairs = itertools.product(range(S.size), repeat=2)
        else:
            rng = random.Random(seed)
            pairs = ((rng.randrange(S.size), rng.randrange(S.size))
                     for _ in range(samples))
        for x, y in pairs:
            if self.image[S.mul(x, y)] != T.mul(self.image[x], self.image[y]):
                raise GroupError(f"not a homomorphism at ({x},{y})")

    def compose(self, other):
        """self after other."""
        if other.target is not self.source:
            raise GroupError("composition mismatch")
        return GroupHomomorphism(
            other.source, self.target,
            [self.image[other.image[a]] for a in range(other.source.size)],
            validate=False,
        )


def hom_from_map(source, target, fn, validate=True):
    return GroupHomomorphism(source, target,
                             [fn(a) for a in range(source.size)],
                             validate=validate)


# ---------------------------------------------------------------------------
# commuting tuples


@dataclass(frozen=True)
class CommutingTuple:
    """A d-tuple of pairwise commuting elements, i.e. a map Z^d -> G."""

    group: FiniteGroup
    elements: tuple

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        G = self.group
        for i in range(len(els)):
            for j in range(i + 1, len(els)):
                if not G.commutes(els[i], els[j]):
                    raise GroupError(f"entries {i},{j} do not commute")

    @property
    def d(self):
        return len(self.elements)

    def at(self, vector):
        """Value of the homomorphism Z^d -> G at an integer vector."""
        G = self.group
        out = G.identity
        for e, k in zip(self.elements, vector):
            out = G.mul(out, G.power(e, k))
        return out

    def entry_power(self, n):
        """Raise every entry to the n-th power (precompose with n * id)."""
        G = self.group
        return CommutingTuple(G, tuple(G.power(e, n) for e in self.elements))

    def conjugate(self, z):
        G = self.group
        return CommutingTuple(G, tuple(G.conj(z, e) for e in self.elements))

    def image_subgroup(self):
        """Elements of the subgroup generated by the entries (abelian)."""
        return sorted(mulclose_indices(self.group, list(self.elements) or [self.group.identity]))


def commuting_tuples(G, d):
    """All d-tuples of pairwise commuting elements, lexicographic order."""
    if d < 0:
        raise GroupError("arity must be >= 0")
    out = []

    def extend(prefix):
        if len(prefix) == d:
            out.append(CommutingTuple(G, tuple(prefix)))
            return
        for g in range(G.size):
            if all(G.commutes(g, p) for p in prefix):
                extend(prefix + [g])

    extend([])
    return out


@dataclass
class TupleClass:
    representative: CommutingTuple
    members: list = field(repr=False)

    @property
    def size(self):
        return len(self.members)


def tuple_conjugacy_classes(G, d):
    """Orbits of simultaneous conjugation on commuting d-tuples.

    Representatives are lexicographic minima; classes are sorted by
    representative, so the output is deterministic.
    """
    gens = G.generators()
    seen = set()
    classes = []
    for t in commuting_tuples(G, d):
        key = t.elements
        if key in seen:
            continue
        orbit = {key}
        bdy = [key]
        while bdy:
            new = []
            for els in bdy:
                for z in gens:
                    c = tuple(G.conj(z, e) for e in els)
                    if c not in orbit:
                        orbit.add(c)
                        new.append(c)
            bdy = new
        seen |= orbit
        rep = min(orbit)
        classes.append(TupleClass(CommutingTuple(G, rep), sorted(orbit)))
    classes.sort(key=lambda c: c.representative.elements)
    return classes


def canonical_tuple(G, elements):
    """Lexicographically minimal simultaneous conjugate of a tuple."""
    best = tuple(elements)
    for z in range(G.size):
        c = tuple(G.conj(z, e) for e in elements)
        if c < best:
            best = c
    return best


# ---------------------------------------------------------------------------
# integer matrices and the unimodular action on tuples


def int_mat_det(M):
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    if n == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    det = 0
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        det += (-1) ** j * M[0][j] * int_mat_det(minor)
    return det


def int_mat_inverse_unimodular(M):
    """Exact inverse of a matrix with determinant +-1 (adjugate method)."""
    n = len(M)
    det = int_mat_det(M)
    if det not in (1, -1):
        raise GroupError(f"matrix is not unimodular (det={det})")
    if n == 0:
        return []
    if n == 1:
        return [[det]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(M) if k != i]
            adj[j][i] = (-1) ** (i + j) * int_mat_det(minor)
    return [[a * det for a in row] for row in adj]  # det is +-1


def gl_act_on_tuple(gamma, h):
    """Basis-change action of GL_d(Z) on commuting d-tuples.

    The convention is precomposition with the inverse transpose: the j-th
    entry of gamma.h is h evaluated at the j-th row of gamma^-1.  For d = 2
    and gamma = [[a,b],[c,d]] this gives (g, g') -> (g^d g'^-b, g^-c g'^a).

    Composition is contravariant: T_{AB} = T_B . T_A (an action of the
    opposite group).  The coefficient-side slash composes the same way, so
    the two twists pair coherently in invariance checks.
    """
    d = h.d
    if len(gamma) != d or any(len(r) != d for r in gamma):
        raise GroupError("matrix shape does not match tuple arity")
    ginv = int_mat_inverse_unimodular([list(r) for r in gamma])
    return CommutingTuple(h.group, tuple(h.at(ginv[j]) for j in range(d)))


SL2_S = ((0, -1), (1, 0))
SL2_T = ((1, 1), (0, 1))


# ---------------------------------------------------------------------------
# finite G-sets


class GSet:
    """Finite left G-set.  action[x][g] is the image of point x under g."""

    def __init__(self, group, size, action, validate=True):
        self.group = group
        self.size = size
        self.action = action
        if validate:
            self.validate()

    def apply(self, g, x):
        return self.action[x][g]

    def validate(self):
        G = self.group
        for x in range(self.size):
            if self.apply(G.identity, x) != x:
                raise GroupError("identity does not act trivially")
        pairs = itertools.product(range(G.size), repeat=2)
        if G.size * G.size * self.size > 500000:
            rng = random.Random(0)
            pairs = ((rng.randrange(G.size), rng.randrange(G.size))
                     for _ in range(2000))
        for g, h in pairs:
            gh = G.mul(g, h)
            for x in range(self.size):
                if self.apply(g, self.apply(h, x)) != self.apply(gh, x):
                    raise GroupError(f"action not compatible at g={g}, h={h}, x={x}")

    @classmethod
    def point(cls, group):
        return _PointGSet(group)

    @classmethod
    def trivial(cls, group, size):
        return cls(group, size, [[x] * group.size for x in range(size)], validate=False)

    @classmethod
    def left_translation(cls, group):
        """The group acting on itself by left translation (a free action)."""
        act = [[group.mul(g, x) for g in range(group.size)] for x in range(group.size)]
        return cls(group, group.size, act, validate=False)

    @classmethod
    def from_perms(cls, group, size, perm_of_generator, validate=True):
        """Build the action table from images of the group's generators."""
        gens = group.generators()
        act = [[None] * group.size for _ in range(size)]
        for x in range(size):
            act[x][group.identity] = x
        known = {group.identity}
        bdy = [group.identity]
        while bdy:
            new = []
            for g in bdy:
                for gen, pg in zip(gens, perm_of_generator):
                    h = group.mul(gen, g)
                    if h not in known:
                        known.add(h)
                        for x in range(size):
                            act[x][h] = pg[act[x][g]]
                        new.append(h)
            bdy = new
        if len(known) != group.size:
            raise GroupError("generator images do not cover the group")
        return cls(group, size, act, validate=validate)

    def product(self, other):
        """Product G-set of two sets over the two groups' direct product."""
        P = direct_product(self.group, other.group)
        size = self.size * other.size
        act = [[0] * P.size for _ in range(size)]
        for x1 in range(self.size):
            for x2 in range(other.size):
                x = x1 + x2 * self.size
                for g in range(P.size):
                    g1, g2 = P.decode(g)
                    act[x][g] = self.apply(g1, x1) + other.apply(g2, x2) * self.size
        return GSet(P, size, act, validate=False)


class _PointGSet(GSet):
    """One point with the trivial action; no table, so it stays cheap for
    arbitrarily large groups."""

    def __init__(self, group):
        self.group = group
        self.size = 1
        self.action = None

    def apply(self, g, x):
        return 0


def fixed_points(X, h):
    """Points of X fixed by the whole subgroup generated by the tuple entries.

    A point fixed by every generator is fixed by every word in them, so
    closing under multiplication changes nothing; the closure is still taken
    to keep the contract literal.
    """
    if X.group != h.group:
        raise GroupError("G-set and tuple live over different groups")
    subgroup = h.image_subgroup()
    return [x for x in range(X.size)
            if all(X.apply(g, x) == x for g in subgroup)]
