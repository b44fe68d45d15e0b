"""Pure Python/numpy implementations of the hot kernels.

Same signatures and conventions as the compiled ``_core`` extension; used
when the extension is unavailable or ``TAVIS_GRWA_PURE=1`` is set.
"""

import numpy as np

# columns whose largest components tie within this fraction pick the first one
_TIE = 1e-9


def laguerre_table(nmax, k, x):
    out = np.empty(nmax + 1)
    out[0] = 1.0
    if nmax >= 1:
        out[1] = 1.0 + k - x
    prev, cur = out[0], out[1] if nmax >= 1 else 0.0
    for m in range(1, nmax):
        nxt = ((2 * m + k + 1 - x) * cur - (m + k) * prev) / (m + 1)
        out[m + 1] = nxt
        prev, cur = cur, nxt
    return out


def fix_signs(vecs):
    """Flip each column (last axis pair) so its largest-magnitude entry is positive."""
    mag = np.abs(vecs)
    peak = mag.max(axis=-2, keepdims=True)
    lead = np.argmax(mag >= (1.0 - _TIE) * peak, axis=-2)
    picked = np.take_along_axis(vecs, lead[..., None, :], axis=-2)
    return vecs * np.where(picked < 0, -1.0, 1.0)


def block_eigh(blocks):
    """Eigen-decompose a stack of small real symmetric matrices.

    ``blocks`` has shape ``(B, m, m)``. Returns ``(values, vectors)`` with
    values ascending per block and column ``k`` of ``vectors[b]`` paired with
    ``values[b, k]``.
    """
    blocks = np.ascontiguousarray(blocks, dtype=float)
    vals, vecs = np.linalg.eigh(blocks)
    return vals, fix_signs(vecs)
