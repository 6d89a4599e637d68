"""Counter-based random streams for reproducible, partition-independent
simulation.

Every simulated dataset is a pure function of ``(seed, grid_index,
replicate_index)``; no generator state is carried between replicates, so
any partitioning of replicates across workers yields bit-identical results.

The exact pipeline, which is part of the reproducibility contract:

1.  Bits come from the Philox-4x32 block cipher with 10 rounds
    (multipliers 0xD2511F53 and 0xCD9E8D57, Weyl key increments
    0x9E3779B9 and 0xBB67AE85).  The 64-bit key is the user seed, split
    into (low 32, high 32) words.  The 128-bit counter of block ``b`` for
    replicate ``j`` on grid point ``g`` is the word tuple
    ``(b, g, j & 0xffffffff, j >> 32)``.  Each block yields four 32-bit
    output words ``w0 w1 w2 w3``, consumed in that order.
2.  Uniform doubles take 53 bits from two consecutive words:
    ``u = ((w_even >> 5) * 2**26 + (w_odd >> 6)) * 2**-53``, giving
    ``u`` in [0, 1).
3.  Standard normals come from the Box-Muller transform with fixed
    pairing: uniforms are consumed two at a time, and the pair
    ``(u1, u2)`` produces ``z_even = sqrt(-2*log(1 - u1)) * cos(2*pi*u2)``
    followed by ``z_odd = sqrt(-2*log(1 - u1)) * sin(2*pi*u2)``.  For an
    odd request the final sine variate is discarded.

Implementation is vectorized over replicates; a batch of B replicates
needing k normals each runs the cipher on a (B, ceil(k/2)) counter grid.
"""

from __future__ import annotations

import numpy as np

__all__ = ["philox_words", "uniforms", "standard_normals"]

_M0 = np.uint64(0xD2511F53)
_M1 = np.uint64(0xCD9E8D57)
_W0 = np.uint64(0x9E3779B9)
_W1 = np.uint64(0xBB67AE85)
_MASK32 = np.uint64(0xFFFFFFFF)
_SHIFT32 = np.uint64(32)
_ROUNDS = 10

_U53_HI = 67108864.0  # 2**26
_U53_INV = 1.0 / 9007199254740992.0  # 2**-53


def _as_seed(seed: int) -> int:
    seed = int(seed)
    if not 0 <= seed < 2 ** 64:
        raise ValueError(f"seed must be a 64-bit unsigned integer, got {seed}")
    return seed


def philox_words(
    seed: int, grid_index: int, rep_indices: np.ndarray, blocks: int
) -> np.ndarray:
    """Raw Philox-4x32-10 output words.

    Returns a uint64 array of shape ``(len(rep_indices), 4 * blocks)`` whose
    entries are 32-bit words in stream order; row i is the word stream of
    replicate ``rep_indices[i]``.
    """
    seed = _as_seed(seed)
    reps = np.asarray(rep_indices, dtype=np.uint64).reshape(-1, 1)
    nrep = reps.shape[0]

    x0 = np.broadcast_to(np.arange(blocks, dtype=np.uint64), (nrep, blocks)).copy()
    x1 = np.full((nrep, blocks), np.uint64(int(grid_index) & 0xFFFFFFFF), dtype=np.uint64)
    x2 = np.broadcast_to(reps & _MASK32, (nrep, blocks)).copy()
    x3 = np.broadcast_to(reps >> _SHIFT32, (nrep, blocks)).copy()

    k0 = np.uint64(seed & 0xFFFFFFFF)
    k1 = np.uint64(seed >> 32)
    for _ in range(_ROUNDS):
        p0 = _M0 * x0
        p1 = _M1 * x2
        x0, x1, x2, x3 = (
            (p1 >> _SHIFT32) ^ x1 ^ k0,
            p1 & _MASK32,
            (p0 >> _SHIFT32) ^ x3 ^ k1,
            p0 & _MASK32,
        )
        k0 = (k0 + _W0) & _MASK32
        k1 = (k1 + _W1) & _MASK32

    out = np.empty((nrep, 4 * blocks), dtype=np.uint64)
    out[:, 0::4] = x0
    out[:, 1::4] = x1
    out[:, 2::4] = x2
    out[:, 3::4] = x3
    return out


def uniforms(seed: int, grid_index: int, rep_indices: np.ndarray, count: int) -> np.ndarray:
    """53-bit uniform doubles in [0, 1), shape (len(rep_indices), count)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    n_even = count + (count & 1)
    blocks = n_even // 2  # one block = four words = two uniforms
    words = philox_words(seed, grid_index, rep_indices, blocks)
    hi = (words[:, 0::2] >> np.uint64(5)).astype(np.float64)
    lo = (words[:, 1::2] >> np.uint64(6)).astype(np.float64)
    return (hi * _U53_HI + lo)[:, :count] * _U53_INV


def standard_normals(
    seed: int, grid_index: int, rep_indices: np.ndarray, count: int
) -> np.ndarray:
    """Standard-normal draws via Box-Muller, shape (len(rep_indices), count)."""
    if count < 1:
        raise ValueError("count must be >= 1")
    n_even = count + (count & 1)
    u = uniforms(seed, grid_index, rep_indices, n_even)
    radius = np.sqrt(-2.0 * np.log1p(-u[:, 0::2]))
    angle = (2.0 * np.pi) * u[:, 1::2]
    z = np.empty_like(u)
    z[:, 0::2] = radius * np.cos(angle)
    z[:, 1::2] = radius * np.sin(angle)
    return z[:, :count]
