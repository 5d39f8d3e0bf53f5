"""Finite groups as Cayley tables on element indices 0..n-1.

Conventions used across the package:
  * index 0 is always the identity (tables are relabeled on ingestion),
  * the group commutator is [x, y] = x y x^-1 y^-1,
  * tables are numpy arrays and treated as immutable once constructed.
"""

from __future__ import annotations

import logging
import math
import os
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    NoIdentity,
    NotABijection,
    NotAssociative,
    NotASubgroup,
    NotLatinSquare,
    NotNormal,
    OrderCapExceeded,
)

log = logging.getLogger(__name__)

DEFAULT_ORDER_CAP = 10_000
ORDER_CAP_ENV = "GYROLAB_ORDER_CAP"


def order_cap() -> int:
    """Element-count guard for closures and products; override via GYROLAB_ORDER_CAP."""
    raw = os.environ.get(ORDER_CAP_ENV, "").strip()
    return int(raw) if raw else DEFAULT_ORDER_CAP


class FiniteGroup:
    """A finite group given by its multiplication table.

    table[i, j] is the index of x_i * x_j.  inverse[i] is the two-sided
    inverse.  names are display labels; name lookup is exact-string.
    """

    __slots__ = ("order", "table", "names", "inverse", "name", "relabeled_from",
                 "_name_index", "_cache")

    def __init__(self, table: np.ndarray, names: Sequence[str],
                 inverse: np.ndarray, name: str = ""):
        self.order = int(table.shape[0])
        self.table = table
        self.names = tuple(names)
        self.inverse = inverse
        self.name = name
        self.relabeled_from: int | None = None
        self._name_index = {nm: i for i, nm in enumerate(self.names)}
        self._cache: dict = {}
        table.setflags(write=False)
        inverse.setflags(write=False)

    def __repr__(self) -> str:
        label = self.name or "FiniteGroup"
        return f"<{label} of order {self.order}>"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        acc = 0
        for _ in range(k):
            acc = int(self.table[acc, a])
        return acc

    def element_order(self, a: int) -> int:
        x, k = a, 1
        while x != 0:
            x = int(self.table[x, a])
            k += 1
        return k

    def index_of(self, name: str) -> int:
        return self._name_index[name]

    def power_array(self, k: int) -> np.ndarray:
        """Vectorized k-th power of every element (k >= 0)."""
        key = ("pow", k)
        if key not in self._cache:
            ar = np.arange(self.order)
            acc = np.zeros(self.order, dtype=self.table.dtype)
            for _ in range(k):
                acc = self.table[acc, ar]
            self._cache[key] = acc
        return self._cache[key]

    def commutator_table(self) -> np.ndarray:
        """CM[a, b] = a b a^-1 b^-1 for all pairs, as an n x n array."""
        if "cm" not in self._cache:
            n = self.order
            inv_rows = np.broadcast_to(self.inverse[:, None], (n, n))
            inv_cols = np.broadcast_to(self.inverse[None, :], (n, n))
            ab = self.table
            ab_ainv = self.table[ab, inv_rows]
            self._cache["cm"] = self.table[ab_ainv, inv_cols]
        return self._cache["cm"]

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))


def group_commutator(G: FiniteGroup, x: int, y: int) -> int:
    """[x, y] = x y x^-1 y^-1."""
    return G.mul(G.mul(G.mul(x, y), G.inv(x)), G.inv(y))


# ---------------------------------------------------------------------------
# construction and validation

def _first_nonperm_cell(line: np.ndarray) -> tuple[int, int]:
    """Position and value of the first repeated entry in a 1-d line."""
    seen: set[int] = set()
    for pos, v in enumerate(line.tolist()):
        if v in seen:
            return pos, v
        seen.add(v)
    raise AssertionError("line was a permutation after all")


def _check_latin(table: np.ndarray) -> None:
    n = table.shape[0]
    ar = np.arange(n)
    if not (np.sort(table, axis=1) == ar).all():
        for i in range(n):
            if not is_index_perm(table[i]):
                pos, v = _first_nonperm_cell(table[i])
                raise NotLatinSquare("row", i, (i, pos), v)
    if not (np.sort(table, axis=0) == ar[:, None]).all():
        for j in range(n):
            if not is_index_perm(table[:, j]):
                pos, v = _first_nonperm_cell(table[:, j])
                raise NotLatinSquare("column", j, (pos, j), v)


def is_index_perm(line: np.ndarray) -> bool:
    n = len(line)
    return bool((np.bincount(line, minlength=n) == 1).all())


def associativity_violation(table: np.ndarray) -> tuple[int, int, int] | None:
    """First (a, b, c) with (ab)c != a(bc) in lexicographic order, else None."""
    n = table.shape[0]
    for a in range(n):
        left = table[table[a], :]        # [b, c] -> (ab)c
        right = table[a, table]          # [b, c] -> a(bc)
        if not np.array_equal(left, right):
            flat = int(np.argmax(left != right))
            return (a, flat // n, flat % n)
    return None


def _find_identity(table: np.ndarray) -> int | None:
    n = table.shape[0]
    ar = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], ar) and np.array_equal(table[:, e], ar):
            return e
    return None


def _relabel(table: np.ndarray, names: list[str], e: int):
    """Move element e to index 0, keeping the other elements in order."""
    n = table.shape[0]
    old_of_new = np.array([e] + [i for i in range(n) if i != e])
    new_of_old = np.empty(n, dtype=np.int64)
    new_of_old[old_of_new] = np.arange(n)
    new_table = new_of_old[table[np.ix_(old_of_new, old_of_new)]]
    new_names = [names[i] for i in old_of_new]
    return np.ascontiguousarray(new_table.astype(np.int32)), new_names


def _inverse_array(table: np.ndarray) -> np.ndarray:
    # exactly one zero per row once the table is a validated Latin square
    inv = np.argmax(table == 0, axis=1).astype(np.int32)
    assert (table[inv, np.arange(table.shape[0])] == 0).all()
    return inv


def _default_names(n: int) -> list[str]:
    return ["e"] + [f"x{i}" for i in range(1, n)]


def group_from_table(table, names: Sequence[str] | None = None,
                     name: str = "") -> FiniteGroup:
    """Validate a full multiplication table and wrap it as a FiniteGroup.

    Checks: square shape, entries in range, a two-sided identity (relocated to
    index 0 if found elsewhere), Latin-square rows/columns, associativity on
    all triples.  Use this for untrusted tables; catalog constructions go
    through the cheaper structural path since their tables are groups by
    construction.
    """
    arr = np.ascontiguousarray(np.asarray(table, dtype=np.int64))
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("multiplication table must be a square matrix")
    n = arr.shape[0]
    if n == 0:
        raise NoIdentity()
    if arr.min() < 0 or arr.max() >= n:
        flat = int(np.argmax((arr < 0) | (arr >= n)))
        cell = (flat // n, flat % n)
        raise NotLatinSquare("row", cell[0], cell, int(arr[cell]))
    arr = arr.astype(np.int32)
    name_list = list(names) if names is not None else _default_names(n)
    if len(name_list) != n:
        raise ValueError(f"expected {n} names, got {len(name_list)}")

    e = _find_identity(arr)
    if e is None:
        raise NoIdentity()
    relabeled_from = None
    if e != 0:
        arr, name_list = _relabel(arr, name_list, e)
        relabeled_from = e
        log.info("identity relocated from index %d to 0", e)

    _check_latin(arr)
    bad = associativity_violation(arr)
    if bad is not None:
        raise NotAssociative(bad)

    G = FiniteGroup(arr, name_list, _inverse_array(arr), name=name)
    G.relabeled_from = relabeled_from
    return G


def _group_unchecked(table: np.ndarray, names: Sequence[str], name: str = "") -> FiniteGroup:
    """Wrap a table that is a group by construction (catalog, closures, quotients).

    Still performs the cheap structural checks (identity at 0, Latin square);
    skips the O(n^3) associativity scan.
    """
    arr = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
    n = arr.shape[0]
    ar = np.arange(n)
    assert np.array_equal(arr[0], ar) and np.array_equal(arr[:, 0], ar)
    _check_latin(arr)
    return FiniteGroup(arr, names, _inverse_array(arr), name=name)


def group_from_permutations(degree: int, generators: Sequence[Sequence[int]],
                            name: str = "", cap: int | None = None) -> FiniteGroup:
    """Close a generating set of permutations under composition.

    Permutations are image lists acting on the left.  Enumeration is
    breadth-first starting from the identity, which makes element indices
    deterministic.  Raises OrderCapExceeded past the cap (default order_cap()).
    """
    cap = cap if cap is not None else order_cap()
    gens: list[tuple[int, ...]] = []
    for gi, g in enumerate(generators):
        t = tuple(int(v) for v in g)
        if len(t) != degree or sorted(t) != list(range(degree)):
            raise NotABijection("generator", gi)
        if t not in gens:
            gens.append(t)

    ident = tuple(range(degree))
    index: dict[tuple[int, ...], int] = {ident: 0}
    elements: list[tuple[int, ...]] = [ident]
    frontier = [ident]
    while frontier:
        new: list[tuple[int, ...]] = []
        for h in frontier:
            for g in gens:
                p = tuple(g[h[i]] for i in range(degree))
                if p not in index:
                    index[p] = len(elements)
                    elements.append(p)
                    new.append(p)
                    if len(elements) > cap:
                        raise OrderCapExceeded(cap, len(elements))
        frontier = new

    n = len(elements)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elements):
        for j, q in enumerate(elements):
            table[i, j] = index[tuple(p[q[k]] for k in range(degree))]
    names = _default_names(n)
    return _group_unchecked(table, names, name=name or f"perm-closure-{degree}")


def direct_product(A: FiniteGroup, B: FiniteGroup, name: str = "") -> FiniteGroup:
    """Componentwise product; pair (a, b) gets index a*|B| + b."""
    n = A.order * B.order
    if n > order_cap():
        raise OrderCapExceeded(order_cap(), n)
    nb = B.order
    table = (A.table[:, None, :, None].astype(np.int64) * nb
             + B.table[None, :, None, :]).reshape(n, n).astype(np.int32)
    names = [f"{na}|{nbm}" for na in A.names for nbm in B.names]
    names[0] = "e"
    return _group_unchecked(table, names, name=name or f"{A.name}x{B.name}")


# ---------------------------------------------------------------------------
# subgroups, series, centres

def is_subgroup(G: FiniteGroup, subset: Iterable[int]) -> bool:
    S = frozenset(int(s) for s in subset)
    if 0 not in S:
        return False
    lst = sorted(S)
    prods = G.table[np.ix_(lst, lst)]
    if not all(int(v) in S for v in np.unique(prods)):
        return False
    return all(G.inv(a) in S for a in lst)


def subgroup_generated(G: FiniteGroup, seed: Iterable[int]) -> frozenset[int]:
    """Smallest subgroup containing the seed (breadth-first closure)."""
    members = {0}
    for s in seed:
        members.add(int(s))
        members.add(G.inv(int(s)))
    frontier = sorted(members)
    while frontier:
        cur = sorted(members)
        prods = set(np.unique(G.table[np.ix_(frontier, cur)]).tolist())
        prods |= set(np.unique(G.table[np.ix_(cur, frontier)]).tolist())
        new = {int(v) for v in prods if v not in members}
        new |= {G.inv(v) for v in new if G.inv(v) not in members and G.inv(v) not in new}
        members |= new
        frontier = sorted(new)
    return frozenset(members)


def group_center(G: FiniteGroup) -> frozenset[int]:
    mask = (G.table == G.table.T).all(axis=1)
    return frozenset(int(i) for i in np.flatnonzero(mask))


def derived_subgroup(G: FiniteGroup) -> frozenset[int]:
    values = np.unique(G.commutator_table())
    return subgroup_generated(G, (int(v) for v in values))


def lower_central_series(G: FiniteGroup) -> list[frozenset[int]]:
    """gamma_1 = G, gamma_{i+1} = <[gamma_i, G]>; stops when stable."""
    full = frozenset(range(G.order))
    series = [full]
    cm = G.commutator_table()
    while True:
        cur = sorted(series[-1])
        values = np.unique(cm[cur, :])
        nxt = subgroup_generated(G, (int(v) for v in values))
        if nxt == series[-1]:
            break
        series.append(nxt)
        if nxt == frozenset({0}):
            break
    return series


def nilpotency_class(G: FiniteGroup) -> int | None:
    """Nilpotency class via the lower central series; None if not nilpotent."""
    series = lower_central_series(G)
    if series[-1] == frozenset({0}):
        return len(series) - 1
    return None


def subset_exponent(G: FiniteGroup, subset: Iterable[int]) -> int:
    """lcm of the element orders of a subgroup."""
    S = sorted(frozenset(int(s) for s in subset))
    if not is_subgroup(G, S):
        witness = _subgroup_witness(G, frozenset(S))
        raise NotASubgroup(witness)
    exp = 1
    for a in S:
        exp = math.lcm(exp, G.element_order(a))
    return exp


def _subgroup_witness(G: FiniteGroup, S: frozenset[int]) -> tuple:
    if 0 not in S:
        return ("identity-missing",)
    for a in sorted(S):
        if G.inv(a) not in S:
            return ("inverse", a)
        for b in sorted(S):
            if G.mul(a, b) not in S:
                return ("product", a, b)
    return ("not-a-subgroup",)


def is_two_engel(G: FiniteGroup) -> tuple[bool, tuple[int, int] | None]:
    """Whether [[x, y], y] = e for all x, y; witness is the first failing pair."""
    cm = G.commutator_table()
    n = G.order
    cols = np.broadcast_to(np.arange(n)[None, :], (n, n))
    vals = cm[cm, cols]
    if (vals == 0).all():
        return True, None
    flat = int(np.argmax(vals != 0))
    return False, (flat // n, flat % n)


def group_exponent(G: FiniteGroup) -> int:
    exp = 1
    for a in range(G.order):
        exp = math.lcm(exp, G.element_order(a))
    return exp


# ---------------------------------------------------------------------------
# quotients and subgroup reindexing

def normality_violation(G: FiniteGroup, S: Sequence[int]) -> tuple[int, int] | None:
    """First (g, s) with g s g^-1 outside S, scanning g then s ascending."""
    lst = sorted(int(s) for s in S)
    n = G.order
    member = np.zeros(n, dtype=bool)
    member[lst] = True
    gs = G.table[:, lst]                                  # [g, k] -> g * s_k
    conj = G.table[gs, G.inverse[:, None]]                # [g, k] -> g s_k g^-1
    bad = ~member[conj]
    if not bad.any():
        return None
    flat = int(np.argmax(bad))
    return (flat // len(lst), lst[flat % len(lst)])


def quotient_group(G: FiniteGroup, N: Iterable[int],
                   name: str = "") -> tuple[FiniteGroup, np.ndarray]:
    """Quotient by a normal subgroup; returns (Q, projection).

    Cosets are labeled by their least element index, sorted ascending, so the
    coset of the identity is index 0 and labeling is deterministic.
    """
    S = frozenset(int(x) for x in N)
    if not is_subgroup(G, S):
        raise NotASubgroup(_subgroup_witness(G, S))
    bad = normality_violation(G, sorted(S))
    if bad is not None:
        raise NotNormal(bad)

    lst = sorted(S)
    reps_of_elem = G.table[:, lst].min(axis=1)            # least element of gN
    rep_values = np.unique(reps_of_elem)
    label_of_rep = {int(r): i for i, r in enumerate(rep_values)}
    proj = np.array([label_of_rep[int(r)] for r in reps_of_elem], dtype=np.int32)
    q = len(rep_values)
    qtable = proj[G.table[np.ix_(rep_values, rep_values)]].astype(np.int32)
    qnames = [f"[{G.names[int(r)]}]" for r in rep_values]
    Q = _group_unchecked(qtable, qnames, name=name or f"{G.name}/N")
    return Q, proj


def subgroup_as_group(G: FiniteGroup, S: Iterable[int],
                      name: str = "") -> tuple[FiniteGroup, list[int]]:
    """Reindex a subgroup as a standalone group; returns (H, member_list).

    member_list[i] is the G-index of H's element i; members are sorted, so the
    identity keeps index 0.
    """
    Sf = frozenset(int(x) for x in S)
    if not is_subgroup(G, Sf):
        raise NotASubgroup(_subgroup_witness(G, Sf))
    lst = sorted(Sf)
    local = {g: i for i, g in enumerate(lst)}
    sub = G.table[np.ix_(lst, lst)]
    table = np.array([[local[int(v)] for v in row] for row in sub], dtype=np.int32)
    names = [G.names[g] for g in lst]
    H = _group_unchecked(table, names, name=name or f"{G.name}-sub{len(lst)}")
    return H, lst
