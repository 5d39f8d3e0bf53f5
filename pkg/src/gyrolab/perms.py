"""Permutations of {0..n-1} as integer image arrays.

Maps act on the left: (compose(f, g))(x) = f(g(x)).  Table-level code keeps
permutations as numpy arrays; closure enumeration converts them to tuples,
which are hashable and cheap to compare.
"""

from __future__ import annotations

import numpy as np


def identity_perm(n: int) -> np.ndarray:
    return np.arange(n)

def compose(f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Apply g first, then f."""
    return f[g]

def inverse_perm(p: np.ndarray) -> np.ndarray:
    out = np.empty(len(p), dtype=p.dtype)
    out[p] = np.arange(len(p), dtype=p.dtype)
    return out

def is_perm(p: np.ndarray) -> bool:
    return bool((np.bincount(p, minlength=len(p)) == 1).all())

def as_tuple(p) -> tuple[int, ...]:
    return tuple(int(x) for x in p)
