"""Brute-force oracle: explicit complex representations and tensor-power
traces under wreath actions.

The oracle never touches the orbit reduction: tensor_power_trace builds the
honest dim^n x dim^n matrix of a wreath element acting on V tensor n and
takes its trace.  Agreement of this trace with the geometric power operation
applied to the character is the strongest end-to-end check in the package.
"""

from __future__ import annotations

import itertools

import numpy as np

from .classfn import ClassFunction
from .coefficients import GradedValue
from .groups import (
    CommutingTuple,
    GroupError,
    perm_inverse,
    tuple_conjugacy_classes,
    wreath,
)
from .powerops import adams, power_operation

ORACLE_TOL = 1e-9
TENSOR_DIM_BUDGET = 3
TENSOR_ARITY_BUDGET = 4


class Representation:
    """Finite-dimensional complex representation given by one matrix per
    group element."""

    def __init__(self, group, matrices, name="rep", validate=True, tol=ORACLE_TOL):
        self.group = group
        self.matrices = [np.asarray(m, dtype=complex) for m in matrices]
        self.dim = self.matrices[0].shape[0]
        self.name = name
        if validate:
            self.validate(tol)

    def validate(self, tol=ORACLE_TOL):
        G = self.group
        if not np.allclose(self.matrices[G.identity], np.eye(self.dim), atol=tol):
            raise GroupError("representation does not send identity to identity")
        for x in range(G.size):
            for y in range(G.size):
                lhs = self.matrices[G.mul(x, y)]
                rhs = self.matrices[x] @ self.matrices[y]
                if not np.allclose(lhs, rhs, atol=tol):
                    raise GroupError(f"not a representation at ({x},{y})")

    def __repr__(self):
        return f"<Representation {self.name} dim={self.dim} of {self.group!r}>"


# built-in constructors -------------------------------------------------------


def trivial_representation(G):
    return Representation(G, [np.eye(1)] * G.size, name="trivial")


def regular_representation(G):
    """Left translation on C[G]; character is |G| at e and 0 elsewhere."""
    mats = []
    for g in range(G.size):
        m = np.zeros((G.size, G.size))
        for x in range(G.size):
            m[G.mul(g, x), x] = 1.0
        mats.append(m)
    return Representation(G, mats, name="regular")


def permutation_representation(X):
    """Permutation matrices of a G-set; character counts fixed points."""
    G = X.group
    mats = []
    for g in range(G.size):
        m = np.zeros((X.size, X.size))
        for x in range(X.size):
            m[X.apply(g, x), x] = 1.0
        mats.append(m)
    return Representation(G, mats, name="permutation")


def sign_representation(G):
    """1-dimensional sign character (symmetric groups, or any group exposing
    permutation data via G.perms)."""
    perms = getattr(G, "perms", None)
    if perms is None:
        raise GroupError("sign representation needs underlying permutations")

    def parity(p):
        seen = [False] * len(p)
        sign = 1
        for i in range(len(p)):
            if seen[i]:
                continue
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    return Representation(G, [np.array([[float(parity(p))]]) for p in perms],
                          name="sign")


def cyclic_character(G, k=1):
    """The 1-dimensional character c^a -> exp(2 pi i k a / n) of a cyclic
    group (generator = element 1)."""
    n = G.size
    mats = [np.array([[np.exp(2j * np.pi * k * a / n)]]) for a in range(n)]
    return Representation(G, mats, name=f"character_{k}")


def standard_s3(G):
    """The 2-dimensional irreducible of S3 with exact-entry matrices.

    Generators: the 3-cycle acts by rotation through 120 degrees realized
    over the field Q(sqrt-3) embedded in C, the transposition by a
    reflection; entries are halves of integers and sqrt(3)/2.
    """
    if G.size != 6 or not hasattr(G, "perms"):
        raise GroupError("standard_s3 expects the symmetric group S3")
    s = np.sqrt(3) / 2
    rot = np.array([[-0.5, -s], [s, -0.5]])     # order 3
    flip = np.array([[1.0, 0.0], [0.0, -1.0]])  # order 2
    gen_images = {}
    for i, p in enumerate(G.perms):
        if p == (1, 2, 0):
            gen_images[i] = rot
        if p == (1, 0, 2):
            gen_images[i] = flip
    mats = [None] * 6
    mats[G.identity] = np.eye(2)
    frontier = [G.identity]
    while frontier:
        new = []
        for x in frontier:
            for g, mg in gen_images.items():
                y = G.mul(g, x)
                if mats[y] is None:
                    mats[y] = mg @ mats[x]
                    new.append(y)
        frontier = new
    return Representation(G, mats, name="standard")


def quaternion_2d(G):
    """The 2-dimensional irreducible of Q8: i, j act by the Pauli-like
    matrices [[i,0],[0,-i]] and [[0,1],[-1,0]]."""
    if G.size != 8 or G.labels is None or "i" not in G.labels:
        raise GroupError("quaternion_2d expects the built-in quaternion group")
    mi = np.array([[1j, 0], [0, -1j]])
    mj = np.array([[0, 1], [-1, 0]], dtype=complex)
    lab = {name: idx for idx, name in enumerate(G.labels)}
    mats = [None] * 8
    mats[lab["1"]] = np.eye(2, dtype=complex)
    mats[lab["-1"]] = -np.eye(2, dtype=complex)
    mats[lab["i"]], mats[lab["-i"]] = mi, -mi
    mats[lab["j"]], mats[lab["-j"]] = mj, -mj
    mats[lab["k"]], mats[lab["-k"]] = mi @ mj, -(mi @ mj)
    return Representation(G, mats, name="irrep2")


def representation_from_json(G, data):
    mats = [np.array([[complex(re, im) for re, im in row] for row in m])
            for m in data["matrices"]]
    return Representation(G, mats, name=data.get("name", "rep"))


# oracle operations -----------------------------------------------------------


def character(rep):
    """Trace character as a height-1 degree-0 class function."""
    G = rep.group
    values = {}
    for cls in tuple_conjugacy_classes(G, 1):
        g = cls.representative.elements[0]
        tr = complex(np.trace(rep.matrices[g]))
        values[(cls.representative.elements, 0)] = GradedValue("complex", {0: tr})
    return ClassFunction.from_values(G, 1, values)


def tensor_power_trace(rep, n, bases, perm, dim_budget=TENSOR_DIM_BUDGET,
                       arity_budget=TENSOR_ARITY_BUDGET):
    """Trace of a wreath element (bases, perm) acting on V tensor n.

    The matrix sends basis vector e_{j_1 .. j_n} to the tensor product over
    slots a of rho(g_a) e_{j_{perm^-1(a)}}.  Budgets guard dim^n blowup.
    """
    if rep.dim > dim_budget or n > arity_budget:
        raise GroupError(
            f"tensor budget exceeded: dim={rep.dim} (<= {dim_budget}), "
            f"n={n} (<= {arity_budget})")
    dim = rep.dim
    si = perm_inverse(tuple(perm))
    size = dim ** n
    M = np.zeros((size, size), dtype=complex)
    idx = list(itertools.product(range(dim), repeat=n))
    flat = {t: i for i, t in enumerate(idx)}
    mats = [rep.matrices[g] for g in bases]
    for jt in idx:
        col = flat[jt]
        # column jt of the big matrix factorizes across slots
        factors = [mats[a][:, jt[si[a]]] for a in range(n)]
        vec = factors[0]
        for fac in factors[1:]:
            vec = np.kron(vec, fac)
        M[:, col] = vec
    return complex(np.trace(M))


def tensor_power_trace_wreath(rep, W, element, **kw):
    bases, perm = W.decode(element)
    return tensor_power_trace(rep, W.n, bases, perm, **kw)


def compare_with_geometric(rep, n, **kw):
    """Max deviation between the tensor-trace oracle and the geometric power
    operation of the character over all conjugacy classes of G wr Sigma_n."""
    G = rep.group
    W = wreath(G, n)
    chi = character(rep)
    Pn = power_operation(chi, n)
    worst = 0.0
    for cls in tuple_conjugacy_classes(W, 1):
        w = cls.representative.elements[0]
        oracle = tensor_power_trace_wreath(rep, W, w, **kw)
        geo = Pn.evaluate(cls.representative, 0).component(0)
        worst = max(worst, abs(oracle - geo))
    return worst


def adams_character_check(rep, n):
    """Max over g of |Psi_n(char)(g) - Tr rho(g^n)|."""
    G = rep.group
    chi = character(rep)
    psi = adams(chi, n)
    worst = 0.0
    for g in range(G.size):
        lhs = psi.evaluate(CommutingTuple(G, (g,)), 0).component(0)
        rhs = complex(np.trace(rep.matrices[G.power(g, n)]))
        worst = max(worst, abs(lhs - rhs))
    return worst


def builtin_representations(G, include_regular=True, max_dim=None):
    """The hand-auditable representations available for a built-in group."""
    out = [trivial_representation(G)]
    name = getattr(G, "name", "")
    if name.startswith("S") and hasattr(G, "perms"):
        out.append(sign_representation(G))
        if G.size == 6:
            out.append(standard_s3(G))
    if name == "Q8":
        out.append(quaternion_2d(G))
    if name.startswith("C") and G.size > 1:
        out.append(cyclic_character(G, 1))
    if include_regular:
        out.append(regular_representation(G))
    if max_dim is not None:
        out = [r for r in out if r.dim <= max_dim]
    return out
