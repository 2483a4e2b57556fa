"""Hot inner loop for negative-sampling training.

The kernel is compiled with numba when available; setting the environment
variable WEBEMBED_DISABLE_NUMBA=1 before import selects the interpreted
pure-numpy path instead (same code object, no compilation). Both paths are
deterministic for a fixed seed at one thread.
"""

from __future__ import annotations

import math
import os

import numpy as np

DISABLE_ENV = "WEBEMBED_DISABLE_NUMBA"

_LCG_A = 1664525
_LCG_C = 1013904223
_M32 = 0xFFFFFFFF


def _train_kernel_impl(
    tokens,
    sent_offs,
    sub_offs,
    sub_ids,
    keep,
    neg_table,
    inp,
    out,
    cbow,
    window,
    kneg,
    epochs,
    lr0,
    lr_floor,
    seed,
    sched_total,
    epoch_loss,
    epoch_updates,
):
    state = (seed * 2654435761 + 12345) & _M32
    if state == 0:
        state = 1
    nsent = sent_offs.shape[0] - 1
    dim = inp.shape[1]
    tsize = neg_table.shape[0]

    maxlen = 0
    for s in range(nsent):
        length = sent_offs[s + 1] - sent_offs[s]
        if length > maxlen:
            maxlen = length
    kept = np.empty(maxlen, np.int64)
    h = np.zeros(dim, np.float32)
    grad = np.zeros(dim, np.float32)

    processed = 0
    for ep in range(epochs):
        for s in range(nsent):
            nk = 0
            for p in range(sent_offs[s], sent_offs[s + 1]):
                processed += 1
                w = tokens[p]
                state = (_LCG_A * state + _LCG_C) & _M32
                if state / 4294967296.0 < keep[w]:
                    kept[nk] = w
                    nk += 1
            lr = lr0 * (1.0 - processed / sched_total)
            if lr < lr_floor:
                lr = lr_floor
            for i in range(nk):
                state = (_LCG_A * state + _LCG_C) & _M32
                b = 1 + state % window
                lo = i - b
                if lo < 0:
                    lo = 0
                hi = i + b + 1
                if hi > nk:
                    hi = nk

                if cbow:
                    nctx = hi - lo - 1
                    if nctx <= 0:
                        continue
                    for d in range(dim):
                        h[d] = 0.0
                    for j in range(lo, hi):
                        if j == i:
                            continue
                        a0 = sub_offs[kept[j]]
                        a1 = sub_offs[kept[j] + 1]
                        invm = 1.0 / (a1 - a0)
                        for r in range(a0, a1):
                            row = sub_ids[r]
                            for d in range(dim):
                                h[d] += inp[row, d] * invm
                    invc = 1.0 / nctx
                    for d in range(dim):
                        h[d] *= invc
                    loss = _ns_update(
                        h,
                        grad,
                        out,
                        kept[i],
                        neg_table,
                        tsize,
                        kneg,
                        lr,
                        state,
                    )
                    state = (_LCG_A * state + _LCG_C) & _M32
                    for _ in range(kneg):
                        state = (_LCG_A * state + _LCG_C) & _M32
                    for j in range(lo, hi):
                        if j == i:
                            continue
                        a0 = sub_offs[kept[j]]
                        a1 = sub_offs[kept[j] + 1]
                        scale = lr / (nctx * (a1 - a0))
                        for r in range(a0, a1):
                            row = sub_ids[r]
                            for d in range(dim):
                                inp[row, d] -= scale * grad[d]
                    epoch_loss[ep] += loss
                    epoch_updates[ep] += 1
                else:
                    center = kept[i]
                    a0 = sub_offs[center]
                    a1 = sub_offs[center + 1]
                    nrows = a1 - a0
                    invm = 1.0 / nrows
                    for j in range(lo, hi):
                        if j == i:
                            continue
                        for d in range(dim):
                            h[d] = 0.0
                        for r in range(a0, a1):
                            row = sub_ids[r]
                            for d in range(dim):
                                h[d] += inp[row, d]
                        for d in range(dim):
                            h[d] *= invm
                        loss = _ns_update(
                            h,
                            grad,
                            out,
                            kept[j],
                            neg_table,
                            tsize,
                            kneg,
                            lr,
                            state,
                        )
                        state = (_LCG_A * state + _LCG_C) & _M32
                        for _ in range(kneg):
                            state = (_LCG_A * state + _LCG_C) & _M32
                        scale = lr * invm
                        for r in range(a0, a1):
                            row = sub_ids[r]
                            for d in range(dim):
                                inp[row, d] -= scale * grad[d]
                        epoch_loss[ep] += loss
                        epoch_updates[ep] += 1
    return processed


def _ns_update_impl(h, grad, out, target, neg_table, tsize, kneg, lr, state):
    """One target + kneg negatives; fills grad, updates output rows in place."""
    dim = h.shape[0]
    for d in range(dim):
        grad[d] = 0.0
    loss = 0.0
    local = state
    for m in range(kneg + 1):
        if m == 0:
            t = target
            label = 1.0
        else:
            local = (_LCG_A * local + _LCG_C) & _M32
            t = neg_table[local % tsize]
            tries = 0
            while t == target and tries < 10:
                local = (_LCG_A * local + _LCG_C) & _M32
                t = neg_table[local % tsize]
                tries += 1
            if t == target:
                continue
            label = 0.0
        x = 0.0
        for d in range(dim):
            x += out[t, d] * h[d]
        if x > 30.0:
            x = 30.0
        elif x < -30.0:
            x = -30.0
        score = 1.0 / (1.0 + math.exp(-x))
        if label > 0.5:
            loss -= math.log(score if score > 1e-10 else 1e-10)
        else:
            loss -= math.log((1.0 - score) if score < 1.0 - 1e-10 else 1e-10)
        g = score - label
        gl = g * lr
        for d in range(dim):
            grad[d] += g * out[t, d]
        for d in range(dim):
            out[t, d] -= gl * h[d]
    return loss


def _numba_enabled() -> bool:
    if os.environ.get(DISABLE_ENV, "").lower() in ("1", "true", "yes"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_ENABLED = _numba_enabled()

if NUMBA_ENABLED:
    from numba import njit

    _ns_update = njit(cache=True, nogil=True)(_ns_update_impl)
    train_kernel = njit(cache=True, nogil=True)(_train_kernel_impl)
else:
    _ns_update = _ns_update_impl
    train_kernel = _train_kernel_impl
