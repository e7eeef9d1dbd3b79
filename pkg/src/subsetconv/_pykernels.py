"""Pure-Python kernels, interface-compatible with the compiled extension.

These are the fallback selected at import when ``subsetconv._kernels``
is unavailable.  The i64 kernels take numpy int64 arrays (mutated in
place where documented) and emulate checked 64-bit arithmetic with
Python integers; the ``*_obj`` kernels operate on Python lists of
arbitrary exact integer objects.

Pass order is fixed (low bit to high bit) and identical to the compiled
kernels, so results are bitwise identical across backends.
"""

from __future__ import annotations

import numpy as np

from .errors import InexactDivisionError, RingOverflowError
from .rings import I64_MAX, I64_MIN

COMPILED = False


def _check(v: int) -> int:
    if v > I64_MAX or v < I64_MIN:
        raise RingOverflowError(f"i64 overflow: {v}")
    return v


def zeta_i64(arr: np.ndarray, n: int) -> None:
    vals = arr.tolist()
    size = 1 << n
    for j in range(n):
        bit = 1 << j
        for x in range(size):
            if x & bit:
                vals[x] = _check(vals[x ^ bit] + vals[x])
    arr[:] = vals


def mobius_i64(arr: np.ndarray, n: int) -> None:
    vals = arr.tolist()
    size = 1 << n
    for j in range(n):
        bit = 1 << j
        for x in range(size):
            if x & bit:
                vals[x] = _check(vals[x] - vals[x ^ bit])
    arr[:] = vals


def wht_i64(arr: np.ndarray, n: int) -> None:
    vals = arr.tolist()
    size = 1 << n
    for j in range(n):
        bit = 1 << j
        for x in range(size):
            if not x & bit:
                a = vals[x]
                b = vals[x | bit]
                vals[x] = _check(a + b)
                vals[x | bit] = _check(a - b)
    arr[:] = vals


def wht_inverse_i64(arr: np.ndarray, n: int) -> None:
    wht_i64(arr, n)
    vals = arr.tolist()
    low = (1 << n) - 1
    for x in range(1 << n):
        v = vals[x]
        if v & low:
            raise InexactDivisionError(
                f"inverse transform value {v} at mask {x} is not divisible by 2**{n}"
            )
        vals[x] = v >> n
    arr[:] = vals


def mul_i64(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = [_check(x * y) for x, y in zip(a.tolist(), b.tolist())]
    return np.array(out, dtype=np.int64)


def sub_i64(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = [_check(x - y) for x, y in zip(a.tolist(), b.tolist())]
    return np.array(out, dtype=np.int64)


def subset_convolve_i64(f: np.ndarray, g: np.ndarray, n: int) -> np.ndarray:
    size = 1 << n
    pc = [0] * size
    for m in range(1, size):
        pc[m] = pc[m >> 1] + (m & 1)

    fv = f.tolist()
    gv = g.tolist()
    a = [[fv[m] if pc[m] == k else 0 for m in range(size)] for k in range(n + 1)]
    b = [[gv[m] if pc[m] == k else 0 for m in range(size)] for k in range(n + 1)]
    for k in range(n + 1):
        for j in range(n):
            bit = 1 << j
            ak = a[k]
            bk = b[k]
            for x in range(size):
                if x & bit:
                    ak[x] = _check(ak[x ^ bit] + ak[x])
                    bk[x] = _check(bk[x ^ bit] + bk[x])

    out = [0] * size
    for k in range(n + 1):
        acc = [0] * size
        for j in range(k + 1):
            aj = a[j]
            bj = b[k - j]
            for x in range(size):
                acc[x] = _check(acc[x] + _check(aj[x] * bj[x]))
        for j in range(n):
            bit = 1 << j
            for x in range(size):
                if x & bit:
                    acc[x] = _check(acc[x] - acc[x ^ bit])
        for x in range(size):
            if pc[x] == k:
                out[x] = acc[x]
    return np.array(out, dtype=np.int64)


# -- object kernels (arbitrary exact integer values) --


def zeta_obj(vals: list, n: int) -> None:
    size = 1 << n
    for j in range(n):
        bit = 1 << j
        for x in range(size):
            if x & bit:
                vals[x] = vals[x ^ bit] + vals[x]


def mobius_obj(vals: list, n: int) -> None:
    size = 1 << n
    for j in range(n):
        bit = 1 << j
        for x in range(size):
            if x & bit:
                vals[x] = vals[x] - vals[x ^ bit]


def mul_obj(a: list, b: list) -> list:
    return [x * y for x, y in zip(a, b)]


def sub_obj(a: list, b: list) -> list:
    return [x - y for x, y in zip(a, b)]


def mul_add_obj(acc: list, a: list, b: list) -> None:
    for i, (x, y) in enumerate(zip(a, b)):
        acc[i] = acc[i] + x * y


def embed_pow_obj(vals: np.ndarray, sentinel: int, powtab: list) -> list:
    zero = powtab[0] - powtab[0]
    return [zero if v == sentinel else powtab[v] for v in vals.tolist()]
