"""Nuclei, commutant, center, commutators/associators and nilpotency class of loops.

All sets are returned as frozensets of element indices.  Scans follow the
definitions directly (no structure theory is assumed), so these functions
serve as the brute-force side of every characterization cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotALoop
from .loops import FiniteLoop, quotient_loop

NUCLEUS_KINDS = ("left", "middle", "right")


def _nucleus_member(L: FiniteLoop, a: int, kind: str) -> bool:
    """Test one element against the associativity pattern of a nucleus kind."""
    T = L.table
    if kind == "left":
        row = T[a]
        return np.array_equal(T[row, :], row[T])
    if kind == "middle":
        col, row = T[:, a], T[a]
        return np.array_equal(T[col, :], T[:, row])
    if kind == "right":
        col = T[:, a]
        return np.array_equal(col[T], T[:, col])
    raise ValueError(f"unknown nucleus kind {kind!r}")


def nucleus(L: FiniteLoop, kind: str = "full") -> frozenset[int]:
    """Nucleus by definition: elements that associate in the given slot.

    kind "left" fixes a in (a x) y == a (x y), "middle" in (x a) y == x (a y),
    "right" in (x y) a == x (y a); "full" is the intersection of the three.
    """
    if kind == "full":
        sets = [nucleus(L, k) for k in NUCLEUS_KINDS]
        return sets[0] & sets[1] & sets[2]
    if kind not in NUCLEUS_KINDS:
        raise ValueError(f"unknown nucleus kind {kind!r}")
    return frozenset(a for a in range(L.order) if _nucleus_member(L, a, kind))


def commutant(L: FiniteLoop) -> frozenset[int]:
    """Elements commuting with everything: a with a*x == x*a for all x."""
    mask = (L.table == L.table.T).all(axis=1)
    return frozenset(int(i) for i in np.flatnonzero(mask))


def loop_center(L: FiniteLoop) -> frozenset[int]:
    """Center = commutant intersected with the (full) nucleus.

    Nucleus membership is only tested on commutant elements, which is the
    same set as commutant & nucleus but much cheaper on large loops.
    """
    return frozenset(
        a for a in sorted(commutant(L))
        if all(_nucleus_member(L, a, k) for k in NUCLEUS_KINDS))


def loop_commutator(L: FiniteLoop, x: int, y: int) -> int:
    """The w with x*y = w*(y*x) (right division)."""
    return int(L.right_division[L.table[x, y], L.table[y, x]])


def commutator_bracket_table(L: FiniteLoop) -> np.ndarray:
    """All loop commutators as a table B[x, y]."""
    if L.right_division is None:
        raise NotALoop("commutators need right division")
    return L.right_division[L.table, L.table.T]


def loop_associator(L: FiniteLoop, x: int, y: int, z: int) -> int:
    """The w with (x*y)*z = w*(x*(y*z)) (right division)."""
    T = L.table
    return int(L.right_division[T[T[x, y], z], T[x, T[y, z]]])


def associator_plane(L: FiniteLoop, x: int) -> np.ndarray:
    """Associators A(x, y, z) for one fixed x, as a (y, z) matrix."""
    T = L.table
    lhs = T[T[x], :]                    # [y, z] -> (x*y)*z
    rhs = T[x, T]                       # [y, z] -> x*(y*z)
    return L.right_division[lhs, rhs]


def loop_upper_central_series(L: FiniteLoop) -> list[frozenset[int]]:
    """Z_0 = {0}, Z_{i+1} = preimage of the center of L/Z_i; stops when stable."""
    if not L.is_loop:
        raise NotALoop("central series needs a full loop")
    n = L.order
    chain: list[frozenset[int]] = [frozenset({0})]
    current = L
    proj = np.arange(n)
    while len(chain[-1]) < n:
        zc = loop_center(current)
        z_orig = frozenset(i for i in range(n) if int(proj[i]) in zc)
        if z_orig == chain[-1]:
            break                        # stalled: not nilpotent
        chain.append(z_orig)
        if len(z_orig) == n:
            break
        current, qproj = quotient_loop(current, zc)
        proj = qproj[proj]
    return chain


def loop_nilpotency_class(L: FiniteLoop) -> int | None:
    """Length of the upper central series if it reaches L, else None."""
    chain = loop_upper_central_series(L)
    if len(chain[-1]) == L.order:
        return len(chain) - 1
    return None


@dataclass(frozen=True)
class InvariantBundle:
    left_nucleus: frozenset[int]
    middle_nucleus: frozenset[int]
    right_nucleus: frozenset[int]
    nucleus: frozenset[int]
    commutant: frozenset[int]
    center: frozenset[int]

    def to_dict(self) -> dict:
        return {
            "left_nucleus": sorted(self.left_nucleus),
            "middle_nucleus": sorted(self.middle_nucleus),
            "right_nucleus": sorted(self.right_nucleus),
            "nucleus": sorted(self.nucleus),
            "commutant": sorted(self.commutant),
            "center": sorted(self.center),
        }


def invariant_bundle(L: FiniteLoop) -> InvariantBundle:
    left = nucleus(L, "left")
    middle = nucleus(L, "middle")
    right = nucleus(L, "right")
    nuc = left & middle & right
    com = commutant(L)
    return InvariantBundle(left, middle, right, nuc, com, com & nuc)
