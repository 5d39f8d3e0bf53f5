"""Central extensions, factor sets, and reconstruction of the twisted loop.

Given a central subgroup Z <= Z(G) and a transversal rep: G/Z -> G with
rep(identity coset) = identity, the factor set is

  f(x, y) = rep(x) rep(y) rep(xy)^-1   (values in Z)

and satisfies the cocycle identity f(x,y) f(xy,z) = f(y,z) f(x,yz).  The
twisted product on G induces a twisted factor set over the quotient loop:

  tf(x, y) = f(y, y^-1)^-1 f(y^-1, x) f(y, y) f(y^-1 x, y^2)

and the loop built on pairs (a, x) by (a,x)*(b,y) = (a b tf(x,y), x*y) is
isomorphic to the twisted loop of G via (a, x) -> a rep(x).  Two transversals
differ by tau(x) = rep2(x) rep1(x)^-1 in Z, and the factor sets are related by

  g(x, y) = tau(x) tau(y) f(x, y) tau(x y)^-1          (group product x y)
  tg(x, y) = tau(x) tau(y) tf(x, y) tau(x * y)^-1      (loop product x * y)

The loop product appears in the twisted relation because tf's defining
combination lands on the coset of y^-1 x y^2; substituting the plain relation
into the definition of tf makes the last factor tau(y^-1 x y^2)^-1 exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import NotASubgroup, NotCentral, ValueOutsideCenter
from .groups import FiniteGroup, _subgroup_witness, is_subgroup, quotient_group
from .loops import FiniteLoop, loop_from_table


@dataclass(frozen=True)
class Transversal:
    group: FiniteGroup
    center: tuple[int, ...]              # sorted member indices in G
    quotient: FiniteGroup
    projection: np.ndarray               # G index -> quotient index
    reps: np.ndarray                     # quotient index -> G index
    policy: str


def make_transversal(G: FiniteGroup, Z: Iterable[int], policy: str = "least-index",
                     seed: int | None = None) -> Transversal:
    """Choose coset representatives for a central subgroup.

    policy "least-index" picks the smallest element index of each coset;
    "random-seeded" draws representatives from a seeded RNG.  Both force the
    representative of the identity coset to be the identity (normalization).
    """
    Zs = frozenset(int(z) for z in Z)
    if not is_subgroup(G, Zs):
        raise NotASubgroup(_subgroup_witness(G, Zs))
    for z in sorted(Zs):
        row, col = G.table[z], G.table[:, z]
        if not np.array_equal(row, col):
            x = int(np.argmax(row != col))
            raise NotCentral((z, x))
    Q, proj = quotient_group(G, Zs)
    cosets = [np.flatnonzero(proj == q) for q in range(Q.order)]
    if policy == "least-index":
        reps = np.array([int(c.min()) for c in cosets], dtype=np.int32)
    elif policy == "random-seeded":
        rng = random.Random(seed)
        reps = np.array([int(rng.choice(c.tolist())) for c in cosets], dtype=np.int32)
    else:
        raise ValueError(f"unknown transversal policy {policy!r}")
    reps[0] = 0
    return Transversal(G, tuple(sorted(Zs)), Q, proj, reps, policy)


@dataclass(frozen=True)
class FactorSet:
    """values[x, y] is a G-element index lying in the central subgroup."""

    group: FiniteGroup
    center: tuple[int, ...]
    quotient: FiniteGroup
    values: np.ndarray

    def local_values(self) -> np.ndarray:
        """Values as positions within the sorted center list (for export)."""
        pos = {g: i for i, g in enumerate(self.center)}
        return np.vectorize(pos.__getitem__)(self.values)


def _check_in_center(values: np.ndarray, center: tuple[int, ...]) -> None:
    member = set(center)
    flat = values.ravel()
    for k, v in enumerate(flat.tolist()):
        if v not in member:
            q = values.shape[1]
            raise ValueOutsideCenter((k // q, k % q), int(v))


def factor_set(G: FiniteGroup, T: Transversal) -> FactorSet:
    """f(x, y) = rep(x) rep(y) rep(xy)^-1, verified to be a normalized cocycle."""
    reps = T.reps
    Q = T.quotient
    r_prod = G.table[np.ix_(reps, reps)]                 # rep(x) rep(y)
    values = G.table[r_prod, G.inverse[reps[Q.table]]]
    _check_in_center(values, T.center)
    assert (values[0, :] == 0).all() and (values[:, 0] == 0).all(), \
        "normalized transversal must give a normalized factor set"
    fs = FactorSet(G, T.center, Q, values)
    bad = cocycle_violation(fs)
    assert bad is None, f"factor set of a transversal failed the cocycle identity at {bad}"
    return fs


def cocycle_violation(f: FactorSet) -> tuple[int, int, int] | None:
    """First (x, y, z) violating f(x,y) f(xy,z) == f(y,z) f(x,yz), else None.

    Products of the (central) values are taken in the base group; order does
    not matter since the values commute with everything.
    """
    mul, Q, v = f.group.table, f.quotient, f.values
    q = Q.order
    for x in range(q):
        # lhs[y, z] = f(x,y) * f(xy, z);  rhs[y, z] = f(y,z) * f(x, yz)
        lhs = mul[np.broadcast_to(v[x][:, None], (q, q)), v[Q.table[x], :]]
        rhs = mul[v, v[x, Q.table]]
        if not np.array_equal(lhs, rhs):
            flat = int(np.argmax(lhs != rhs))
            return (x, flat // q, flat % q)
    return None


@dataclass(frozen=True)
class GyroFactorSet:
    """Twisted factor set over the quotient loop; values are G-element indices."""

    group: FiniteGroup
    center: tuple[int, ...]
    quotient: FiniteGroup                 # the quotient as a group
    quotient_loop: FiniteLoop             # the twisted loop on the quotient
    values: np.ndarray

    def local_values(self) -> np.ndarray:
        """Values as positions within the sorted center list (for export)."""
        pos = {g: i for i, g in enumerate(self.center)}
        return np.vectorize(pos.__getitem__)(self.values)


def gyro_factor_set(f: FactorSet, q_circ: FiniteLoop) -> GyroFactorSet:
    """tf(x, y) = f(y, y^-1)^-1 f(y^-1, x) f(y, y) f(y^-1 x, y^2)."""
    G, Q, v = f.group, f.quotient, f.values
    assert q_circ.order == Q.order, "quotient loop must live on the quotient group"
    q = Q.order
    values = np.empty((q, q), dtype=np.int32)
    for y in range(q):
        yinv = Q.inv(y)
        y2 = Q.mul(y, y)
        t0 = G.inv(int(v[y, yinv]))
        t2 = int(v[y, y])
        for x in range(q):
            yx = Q.mul(yinv, x)
            acc = G.mul(G.mul(G.mul(t0, int(v[yinv, x])), t2), int(v[yx, y2]))
            values[x, y] = acc
    _check_in_center(values, f.center)
    return GyroFactorSet(G, f.center, Q, q_circ, values)


def build_gyro_extension(z_part: FiniteGroup, q_part: FiniteLoop,
                         tf: GyroFactorSet) -> FiniteLoop:
    """Loop on pairs (a, x), index a*|Q| + x, with the twisted cocycle product.

    (a, x) * (b, y) = (a b tf(x, y), x * y): first coordinate multiplied in
    the central (abelian) group, second in the quotient loop.  Built leniently
    so that deliberately corrupted factor sets stay representable.
    """
    nz, nq = z_part.order, q_part.order
    pos = {g: i for i, g in enumerate(tf.center)}
    tf_local = np.vectorize(pos.__getitem__)(tf.values).astype(np.int32)
    n = nz * nq
    table = np.empty((n, n), dtype=np.int32)
    for a in range(nz):
        for b in range(nz):
            ab = z_part.mul(a, b)
            zsum = z_part.table[ab, tf_local]             # [x, y] -> a b tf(x,y)
            block = zsum.astype(np.int64) * nq + q_part.table
            table[a * nq:(a + 1) * nq, b * nq:(b + 1) * nq] = block
    names = [f"({z_part.names[a]},{q_part.names[x]})"
             for a in range(nz) for x in range(nq)]
    names[0] = "e"
    return loop_from_table(table, names=names, lenient=True, name="gyro-extension")


def verify_extension_isomorphism(built: FiniteLoop, target: FiniteLoop,
                                 T: Transversal) -> tuple[bool, tuple[int, int] | None]:
    """Check (a, x) -> a rep(x) maps the built loop onto the target cellwise.

    Returns (ok, witness); the witness is the first cell (u, v) of the built
    table where the image product disagrees, which localizes any corrupted
    factor-set entry to its quotient cell.
    """
    G = T.group
    nz, nq = len(T.center), T.quotient.order
    z_members = np.array(T.center, dtype=np.int32)
    phi = G.table[np.repeat(z_members, nq), np.tile(T.reps, nz)]
    if np.bincount(phi, minlength=G.order).max() != 1:
        return False, (int(np.argmax(np.bincount(phi, minlength=G.order) > 1)), -1)
    lhs = phi[built.table]
    rhs = target.table[np.ix_(phi, phi)]
    if np.array_equal(lhs, rhs):
        return True, None
    flat = int(np.argmax(lhs != rhs))
    n = built.order
    return False, (flat // n, flat % n)


def transversal_tau(t1: Transversal, t2: Transversal) -> np.ndarray:
    """tau(x) = rep2(x) rep1(x)^-1, the central difference of two transversals."""
    G = t1.group
    assert t1.center == t2.center, "transversals must share the central subgroup"
    tau = G.table[t2.reps, G.inverse[t1.reps]]
    member = set(t1.center)
    for q, v in enumerate(tau.tolist()):
        if v not in member:
            raise ValueOutsideCenter((q, q), int(v))
    return tau


def coboundary_relate(f: FactorSet, g: FactorSet, tau: np.ndarray) -> np.ndarray:
    """Boolean matrix of g(x,y) == tau(x) tau(y) f(x,y) tau(xy)^-1 per pair."""
    G, Q = f.group, f.quotient
    t_prod = G.table[np.ix_(tau, tau)]
    rhs = G.table[G.table[t_prod, f.values], G.inverse[tau[Q.table]]]
    return g.values == rhs


def gyro_coboundary_relate(tf: GyroFactorSet, tg: GyroFactorSet,
                           tau: np.ndarray) -> tuple[bool, tuple[int, int] | None]:
    """Check tg(x,y) == tau(x) tau(y) tf(x,y) tau(x*y)^-1 with the loop product."""
    G = tf.group
    Lq = tf.quotient_loop
    t_prod = G.table[np.ix_(tau, tau)]
    rhs = G.table[G.table[t_prod, tf.values], G.inverse[tau[Lq.table]]]
    ok = tg.values == rhs
    if ok.all():
        return True, None
    flat = int(np.argmax(~ok))
    q = Lq.order
    return False, (flat // q, flat % q)
