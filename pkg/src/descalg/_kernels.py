"""Integer kernels for group tables and class-sum products.

Every kernel exists twice: a numba ``@njit`` loop and a plain numpy
version.  The numba path is used when numba imports and the environment
variable ``DESCALG_DISABLE_NUMBA`` is unset (or ``0``).  Both paths return
identical arrays; ``benchmarks/bench_kernels.py`` times them against each
other.

Group elements are rows of an ``int64`` window array in lexicographic
order.  A window is keyed by reading ``w_i + n`` as base ``2n + 1`` digits,
most significant first, so lexicographic order of windows is numeric order
of keys and ``searchsorted`` recovers an element's index.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_AVAILABLE = numba is not None
USE_NUMBA = NUMBA_AVAILABLE and os.environ.get("DESCALG_DISABLE_NUMBA", "0").lower() in ("", "0", "false", "no")

# numpy fallback processes the composition table in row blocks of this size
_ROW_BLOCK = 256


def window_keys(windows: np.ndarray) -> np.ndarray:
    n = windows.shape[1]
    base = 2 * n + 1
    weights = base ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (windows.astype(np.int64) + n) @ weights


# numpy implementations


def _compose_table_numpy(windows: np.ndarray, keys: np.ndarray) -> np.ndarray:
    G, n = windows.shape
    base = 2 * n + 1
    weights = base ** np.arange(n - 1, -1, -1, dtype=np.int64)
    idx = np.abs(windows) - 1
    sgn = np.sign(windows)
    out = np.empty((G, G), dtype=np.int32)
    for start in range(0, G, _ROW_BLOCK):
        rows = windows[start:start + _ROW_BLOCK]
        # composed[s, t, i] = sign(t_i) * s(|t_i|)
        composed = rows[:, idx] * sgn[None, :, :]
        k = (composed.astype(np.int64) + n) @ weights
        out[start:start + _ROW_BLOCK] = np.searchsorted(keys, k)
    return out


def _count_factorizations_numpy(mult, inv, class_of, targets, n_classes):
    out = np.zeros((len(targets), n_classes, n_classes), dtype=np.int64)
    for row, r in enumerate(targets):
        tau = mult[inv, r]
        flat = class_of * n_classes + class_of[tau]
        out[row] = np.bincount(flat, minlength=n_classes * n_classes).reshape(n_classes, n_classes)
    return out


def _class_products_numpy(mult, class_of, members, n_classes):
    G = mult.shape[0]
    rows = mult[members]
    flat = class_of[None, :].astype(np.int64) * G + rows
    return np.bincount(flat.ravel(), minlength=n_classes * G).reshape(n_classes, G).astype(np.int64)


# numba implementations

if NUMBA_AVAILABLE:

    @numba.njit(cache=True)
    def _compose_table_numba(windows, keys):
        G, n = windows.shape
        base = 2 * n + 1
        out = np.empty((G, G), dtype=np.int32)
        for s in range(G):
            for t in range(G):
                key = 0
                for i in range(n):
                    ti = windows[t, i]
                    v = windows[s, abs(ti) - 1]
                    if ti < 0:
                        v = -v
                    key = key * base + (v + n)
                out[s, t] = np.searchsorted(keys, key)
        return out

    @numba.njit(cache=True)
    def _count_factorizations_numba(mult, inv, class_of, targets, n_classes):
        G = mult.shape[0]
        out = np.zeros((targets.shape[0], n_classes, n_classes), dtype=np.int64)
        for row in range(targets.shape[0]):
            r = targets[row]
            for s in range(G):
                tau = mult[inv[s], r]
                out[row, class_of[s], class_of[tau]] += 1
        return out

    @numba.njit(cache=True)
    def _class_products_numba(mult, class_of, members, n_classes):
        G = mult.shape[0]
        out = np.zeros((n_classes, G), dtype=np.int64)
        for k in range(members.shape[0]):
            s = members[k]
            for t in range(G):
                out[class_of[t], mult[s, t]] += 1
        return out


def _numba_selected(use_numba: bool | None) -> bool:
    if use_numba is None:
        return USE_NUMBA
    if use_numba and not NUMBA_AVAILABLE:
        raise RuntimeError("numba path requested but numba is not importable")
    return use_numba


def compose_table(windows: np.ndarray, keys: np.ndarray, use_numba: bool | None = None) -> np.ndarray:
    """``table[s, t]`` is the index of ``windows[s] * windows[t]``."""
    windows = np.ascontiguousarray(windows, dtype=np.int64)
    if _numba_selected(use_numba):
        return _compose_table_numba(windows, keys)
    return _compose_table_numpy(windows, keys)


def count_factorizations(mult, inv, class_of, targets, n_classes, use_numba: bool | None = None) -> np.ndarray:
    """``out[k, a, b]`` counts pairs ``(s, t)`` with ``s * t = targets[k]``, ``s`` in class a, ``t`` in class b."""
    targets = np.ascontiguousarray(targets, dtype=np.int64)
    if _numba_selected(use_numba):
        return _count_factorizations_numba(mult, inv, class_of, targets, n_classes)
    return _count_factorizations_numpy(mult, inv, class_of, targets, n_classes)


def class_products(mult, class_of, members, n_classes, use_numba: bool | None = None) -> np.ndarray:
    """``out[b, g]`` is the coefficient of element g in ``(sum of members) * (class sum b)``."""
    members = np.ascontiguousarray(members, dtype=np.int64)
    if _numba_selected(use_numba):
        return _class_products_numba(mult, class_of, members, n_classes)
    return _class_products_numpy(mult, class_of, members, n_classes)
