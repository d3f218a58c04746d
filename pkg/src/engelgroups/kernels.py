"""Hot scans over Cayley tables.

Every kernel exists twice: a loop version compiled with numba and a
vectorised numpy version.  Both take ``table`` and ``inv`` as intp arrays
with the identity at index 0 and return identical results, including the
choice of witness.  The module-level names dispatch to the backend chosen
in :mod:`engelgroups._accel`.
"""

from __future__ import annotations

import numpy as np

from ._accel import BACKEND, njit

__all__ = [
    "associativity_violation",
    "engel_mask",
    "engel_universal_mask",
    "left_absorb_mask",
    "right_absorb_mask",
    "closure_mask",
    "centralizer_mask",
    "conjugation_witness",
    "NUMBA_KERNELS",
    "NUMPY_KERNELS",
    "BACKEND",
]


# ---------------------------------------------------------------- numba ---


@njit
def _assoc_loop(table):
    n = table.shape[0]
    for i in range(n):
        for j in range(n):
            ij = table[i, j]
            for k in range(n):
                if table[ij, k] != table[i, table[j, k]]:
                    return i, j, k
    return -1, -1, -1


@njit
def _comm(table, inv, a, b):
    return table[table[table[inv[a], inv[b]], a], b]


@njit
def _engel_mask_loop(table, inv, e, depth):
    n = table.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for a in range(n):
        cur = a
        for _ in range(depth):
            cur = _comm(table, inv, cur, e)
            if cur == 0:
                break
        out[a] = cur == 0
    return out


@njit
def _engel_universal_loop(table, inv, depth):
    n = table.shape[0]
    out = np.zeros(n, dtype=np.bool_)
    for a in range(n):
        ok = True
        for e in range(n):
            cur = a
            for _ in range(depth):
                cur = _comm(table, inv, cur, e)
                if cur == 0:
                    break
            if cur != 0:
                ok = False
                break
        out[a] = ok
    return out


@njit
def _commutators_with(table, inv, e):
    n = table.shape[0]
    c = np.empty(n, dtype=table.dtype)
    for x in range(n):
        c[x] = _comm(table, inv, x, e)
    return c


@njit
def _left_absorb_loop(table, inv, e):
    n = table.shape[0]
    c = _commutators_with(table, inv, e)
    out = np.zeros(n, dtype=np.bool_)
    for a in range(n):
        ok = True
        for x in range(n):
            if c[table[a, x]] != c[x]:
                ok = False
                break
        out[a] = ok
    return out


@njit
def _right_absorb_loop(table, inv, e):
    n = table.shape[0]
    c = _commutators_with(table, inv, e)
    out = np.zeros(n, dtype=np.bool_)
    for a in range(n):
        ok = True
        for x in range(n):
            if c[table[x, a]] != c[x]:
                ok = False
                break
        out[a] = ok
    return out


@njit
def _closure_loop(table, seed_mask):
    n = table.shape[0]
    inside = np.zeros(n, dtype=np.bool_)
    gens = np.flatnonzero(seed_mask)
    queue = np.empty(n, dtype=np.intp)
    inside[0] = True
    queue[0] = 0
    head = 0
    tail = 1
    while head < tail:
        x = queue[head]
        head += 1
        for s in gens:
            y = table[x, s]
            if not inside[y]:
                inside[y] = True
                queue[tail] = y
                tail += 1
    return inside


@njit
def _centralizer_loop(table, inv, set_mask):
    n = table.shape[0]
    members = np.flatnonzero(set_mask)
    out = np.zeros(n, dtype=np.bool_)
    for a in range(n):
        ok = True
        for m in members:
            if _comm(table, inv, a, m) != 0:
                ok = False
                break
        out[a] = ok
    return out


@njit
def _conjugation_loop(table, inv, s_mask, conj_mask):
    n = table.shape[0]
    for g in range(n):
        if not conj_mask[g]:
            continue
        gi = inv[g]
        for x in range(n):
            if s_mask[x] and not s_mask[table[table[gi, x], g]]:
                return g, x
    return -1, -1


# ---------------------------------------------------------------- numpy ---


def _assoc_np(table):
    n = table.shape[0]
    for i in range(n):
        lhs = table[table[i]]          # lhs[j, k] = (i j) k
        rhs = table[i][table]          # rhs[j, k] = i (j k)
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            return i, int(bad[0, 0]), int(bad[0, 1])
    return -1, -1, -1


def _comm_np(table, inv, a, b):
    return table[table[table[inv[a], inv[b]], a], b]


def _engel_mask_np(table, inv, e, depth):
    cur = np.arange(table.shape[0], dtype=table.dtype)
    for _ in range(depth):
        cur = _comm_np(table, inv, cur, e)
    return cur == 0


def _engel_universal_np(table, inv, depth):
    n = table.shape[0]
    idx = np.arange(n, dtype=table.dtype)
    es = np.broadcast_to(idx[None, :], (n, n))
    cur = np.broadcast_to(idx[:, None], (n, n))
    for _ in range(depth):
        cur = _comm_np(table, inv, cur, es)
    return (cur == 0).all(axis=1)


def _left_absorb_np(table, inv, e):
    c = _comm_np(table, inv, np.arange(table.shape[0], dtype=table.dtype), e)
    return (c[table] == c[None, :]).all(axis=1)


def _right_absorb_np(table, inv, e):
    c = _comm_np(table, inv, np.arange(table.shape[0], dtype=table.dtype), e)
    return (c[table] == c[:, None]).all(axis=0)


def _closure_np(table, seed_mask):
    inside = seed_mask.copy()
    inside[0] = True
    while True:
        members = np.flatnonzero(inside)
        grown = inside.copy()
        grown[table[np.ix_(members, members)].ravel()] = True
        if grown.sum() == inside.sum():
            return grown
        inside = grown


def _centralizer_np(table, inv, set_mask):
    n = table.shape[0]
    members = np.flatnonzero(set_mask).astype(table.dtype)
    a = np.arange(n, dtype=table.dtype)[:, None]
    return (_comm_np(table, inv, a, members[None, :]) == 0).all(axis=1)


def _conjugation_np(table, inv, s_mask, conj_mask):
    gs = np.flatnonzero(conj_mask)
    xs = np.flatnonzero(s_mask)
    if gs.size == 0 or xs.size == 0:
        return -1, -1
    conj = table[table[inv[gs][:, None], xs[None, :]], gs[:, None]]
    bad = np.argwhere(~s_mask[conj])
    if bad.size:
        return int(gs[bad[0, 0]]), int(xs[bad[0, 1]])
    return -1, -1


NUMBA_KERNELS = {
    "associativity_violation": _assoc_loop,
    "engel_mask": _engel_mask_loop,
    "engel_universal_mask": _engel_universal_loop,
    "left_absorb_mask": _left_absorb_loop,
    "right_absorb_mask": _right_absorb_loop,
    "closure_mask": _closure_loop,
    "centralizer_mask": _centralizer_loop,
    "conjugation_witness": _conjugation_loop,
}

NUMPY_KERNELS = {
    "associativity_violation": _assoc_np,
    "engel_mask": _engel_mask_np,
    "engel_universal_mask": _engel_universal_np,
    "left_absorb_mask": _left_absorb_np,
    "right_absorb_mask": _right_absorb_np,
    "closure_mask": _closure_np,
    "centralizer_mask": _centralizer_np,
    "conjugation_witness": _conjugation_np,
}

_active = NUMBA_KERNELS if BACKEND == "numba" else NUMPY_KERNELS


def associativity_violation(table: np.ndarray) -> tuple[int, int, int]:
    """First ``(i, j, k)`` with ``(ij)k != i(jk)`` in row-major order, else ``(-1, -1, -1)``."""
    i, j, k = _active["associativity_violation"](table)
    return int(i), int(j), int(k)


def engel_mask(table: np.ndarray, inv: np.ndarray, e: int, depth: int) -> np.ndarray:
    """Mask of ``a`` with ``[a, e, ..., e]`` (``depth`` commutators) equal to the identity."""
    return _active["engel_mask"](table, inv, e, depth)


def engel_universal_mask(table: np.ndarray, inv: np.ndarray, depth: int) -> np.ndarray:
    return _active["engel_universal_mask"](table, inv, depth)


def left_absorb_mask(table: np.ndarray, inv: np.ndarray, e: int) -> np.ndarray:
    """Mask of ``a`` with ``[a x, e] == [x, e]`` for every ``x``."""
    return _active["left_absorb_mask"](table, inv, e)


def right_absorb_mask(table: np.ndarray, inv: np.ndarray, e: int) -> np.ndarray:
    """Mask of ``a`` with ``[x a, e] == [x, e]`` for every ``x``."""
    return _active["right_absorb_mask"](table, inv, e)


def closure_mask(table: np.ndarray, seed_mask: np.ndarray) -> np.ndarray:
    """Subgroup generated by the seeds (finite group, so products suffice)."""
    return _active["closure_mask"](table, seed_mask)


def centralizer_mask(table: np.ndarray, inv: np.ndarray, set_mask: np.ndarray) -> np.ndarray:
    return _active["centralizer_mask"](table, inv, set_mask)


def conjugation_witness(
    table: np.ndarray, inv: np.ndarray, s_mask: np.ndarray, conj_mask: np.ndarray
) -> tuple[int, int]:
    """First ``(g, x)`` with ``x`` in s, ``g`` in conj and ``g^-1 x g`` outside s."""
    g, x = _active["conjugation_witness"](table, inv, s_mask, conj_mask)
    return int(g), int(x)
