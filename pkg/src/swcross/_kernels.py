"""Integer inner loops: exterior products on bitmask monomials and the
triangular-number search behind the blow-up enumeration.

Each kernel has a numba-compiled version and a numpy/pure-Python fallback
with identical results.  The fallback is used when numba is unavailable or
when ``SWCROSS_NO_NUMBA`` is set to a non-empty value other than ``0``.
Both variants are always importable (``*_numba`` / ``*_numpy``) so that they
can be compared directly; the unsuffixed names are the selected backend.

Monomial masks are ``uint64`` (bit ``i - 1`` stands for generator ``l_i``);
coefficients are ``int64``.  Callers are responsible for ensuring that the
products handed to :func:`wedge_int64` cannot overflow.
"""

import math
import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_U1 = np.uint64(1)

NUMBA_AVAILABLE = numba is not None
NUMBA_REQUESTED = os.environ.get("SWCROSS_NO_NUMBA", "").strip() in ("", "0")
USE_NUMBA = NUMBA_AVAILABLE and NUMBA_REQUESTED
BACKEND = "numba" if USE_NUMBA else "numpy"

_njit_settings = {"nogil": True, "cache": True, "fastmath": False, "boundscheck": False}


def _identity(fn):
    return fn


njit = numba.njit(**_njit_settings) if NUMBA_AVAILABLE else _identity


# --------------------------------------------------------------------------
# numba path
# --------------------------------------------------------------------------

@njit
def _popcount64(x):
    # SWAR popcount; all operands stay uint64 to avoid float promotion.
    x = x - ((x >> np.uint64(1)) & np.uint64(0x5555555555555555))
    x = (x & np.uint64(0x3333333333333333)) + ((x >> np.uint64(2)) & np.uint64(0x3333333333333333))
    x = (x + (x >> np.uint64(4))) & np.uint64(0x0F0F0F0F0F0F0F0F)
    return np.int64((x * np.uint64(0x0101010101010101)) >> np.uint64(56))


@njit
def _shuffle_parity(a, b):
    """Parity of #{(i, j): i in a, j in b, i > j} for disjoint masks."""
    inv = 0
    bb = b
    while bb != np.uint64(0):
        low = bb & (~bb + np.uint64(1))
        # (low << 1) - 1 wraps to all ones for bit 63, leaving nothing above.
        above = a & ~((low << np.uint64(1)) - np.uint64(1))
        inv += _popcount64(above)
        bb = bb ^ low
    return inv & 1


@njit
def shuffle_table_numba(xm, ym):
    n = xm.size
    m = ym.size
    out = np.zeros(n * m, dtype=np.uint64)
    signs = np.zeros(n * m, dtype=np.int8)
    for a in range(n):
        for b in range(m):
            k = a * m + b
            if xm[a] & ym[b]:
                continue
            out[k] = xm[a] | ym[b]
            signs[k] = -1 if _shuffle_parity(xm[a], ym[b]) else 1
    return out, signs


@njit
def wedge_int64_numba(xm, xc, ym, yc):
    n = xm.size
    m = ym.size
    pm = np.empty(n * m, dtype=np.uint64)
    pc = np.empty(n * m, dtype=np.int64)
    cnt = 0
    for a in range(n):
        xa = xm[a]
        ca = xc[a]
        for b in range(m):
            yb = ym[b]
            if xa & yb:
                continue
            v = ca * yc[b]
            if _shuffle_parity(xa, yb):
                v = -v
            pm[cnt] = xa | yb
            pc[cnt] = v
            cnt += 1
    pm = pm[:cnt]
    pc = pc[:cnt]
    order = np.argsort(pm)
    out_m = np.empty(cnt, dtype=np.uint64)
    out_c = np.empty(cnt, dtype=np.int64)
    k = 0
    i = 0
    while i < cnt:
        mask = pm[order[i]]
        acc = np.int64(0)
        while i < cnt and pm[order[i]] == mask:
            acc += pc[order[i]]
            i += 1
        if acc != 0:
            out_m[k] = mask
            out_c[k] = acc
            k += 1
    return out_m[:k], out_c[:k]


@njit
def _isqrt_nb(n):
    r = np.int64(math.sqrt(n))
    while r * r > n:
        r -= 1
    while (r + 1) * (r + 1) <= n:
        r += 1
    return r


@njit
def _triangular_root_nb(t):
    # m with m(m+1)/2 == t, or -1.
    s = _isqrt_nb(8 * t + 1)
    if s * s != 8 * t + 1:
        return -1
    return (s - 1) // 2


@njit
def triangular_solutions_numba(r, target, limit):
    # Grown by doubling: ``limit`` may be far above the number of solutions.
    out = np.zeros((max(min(limit, 64), 0), r), dtype=np.int64)
    if limit <= 0 or target < 0 or r <= 0:
        return out[:0], limit <= 0 and target >= 0
    if r == 1:
        root = _triangular_root_nb(target)
        if root >= 0:
            out[0, 0] = root
            return out[:1], limit == 1
        return out[:0], False
    m = np.zeros(r, dtype=np.int64)
    rem = np.zeros(r, dtype=np.int64)
    rem[0] = target
    m[0] = -1
    i = 0
    count = 0
    last = r - 2
    while i >= 0:
        m[i] += 1
        t = m[i] * (m[i] + 1) // 2
        if t > rem[i]:
            i -= 1
            continue
        if i == last:
            root = _triangular_root_nb(rem[i] - t)
            if root >= 0:
                if count == out.shape[0]:
                    grown = np.zeros((min(2 * count, limit), r), dtype=np.int64)
                    grown[:count] = out
                    out = grown
                for q in range(r - 1):
                    out[count, q] = m[q]
                out[count, r - 1] = root
                count += 1
                if count == limit:
                    return out[:count], True
            continue
        rem[i + 1] = rem[i] - t
        i += 1
        m[i] = -1
    return out[:count], False


@njit
def triangular_count_numba(r, target):
    if target < 0 or r <= 0:
        return 0
    if r == 1:
        return 1 if _triangular_root_nb(target) >= 0 else 0
    m = np.zeros(r, dtype=np.int64)
    rem = np.zeros(r, dtype=np.int64)
    rem[0] = target
    m[0] = -1
    i = 0
    count = 0
    last = r - 2
    while i >= 0:
        m[i] += 1
        t = m[i] * (m[i] + 1) // 2
        if t > rem[i]:
            i -= 1
            continue
        if i == last:
            if _triangular_root_nb(rem[i] - t) >= 0:
                count += 1
            continue
        rem[i + 1] = rem[i] - t
        i += 1
        m[i] = -1
    return count


# --------------------------------------------------------------------------
# numpy / pure-Python path
# --------------------------------------------------------------------------

def _pair_signs_numpy(xm, ym):
    a = xm[:, None]
    b = ym[None, :]
    disjoint = (a & b) == 0
    inv = np.zeros(disjoint.shape, dtype=np.int64)
    top = int(max(int(xm.max(initial=0)), int(ym.max(initial=0)))).bit_length()
    for j in range(min(top, 63)):
        bit = ((b >> np.uint64(j)) & _U1).astype(np.int64)
        inv += bit * np.bitwise_count(a >> np.uint64(j + 1)).astype(np.int64)
    signs = np.where(inv & 1, -1, 1).astype(np.int8)
    signs[~disjoint] = 0
    return (a | b), signs


def shuffle_table_numpy(xm, ym):
    xm = np.asarray(xm, dtype=np.uint64)
    ym = np.asarray(ym, dtype=np.uint64)
    if xm.size == 0 or ym.size == 0:
        return np.zeros(0, dtype=np.uint64), np.zeros(0, dtype=np.int8)
    out, signs = _pair_signs_numpy(xm, ym)
    out = np.where(signs != 0, out, np.uint64(0))
    return out.ravel(), signs.ravel()


def wedge_int64_numpy(xm, xc, ym, yc):
    xm = np.asarray(xm, dtype=np.uint64)
    ym = np.asarray(ym, dtype=np.uint64)
    if xm.size == 0 or ym.size == 0:
        return np.zeros(0, dtype=np.uint64), np.zeros(0, dtype=np.int64)
    out, signs = _pair_signs_numpy(xm, ym)
    vals = np.multiply.outer(np.asarray(xc, dtype=np.int64), np.asarray(yc, dtype=np.int64))
    keep = signs != 0
    out = out[keep]
    vals = vals[keep] * signs[keep].astype(np.int64)
    if out.size == 0:
        return np.zeros(0, dtype=np.uint64), np.zeros(0, dtype=np.int64)
    uniq, inverse = np.unique(out, return_inverse=True)
    acc = np.zeros(uniq.size, dtype=np.int64)
    np.add.at(acc, inverse.ravel(), vals)
    nz = acc != 0
    return uniq[nz], acc[nz]


def _triangular_root(t):
    s = math.isqrt(8 * t + 1)
    return (s - 1) // 2 if s * s == 8 * t + 1 else -1


def _triangular_dfs(r, target):
    # Yields solutions in lexicographic order; last coordinate solved directly.
    if target < 0 or r <= 0:
        return
    if r == 1:
        root = _triangular_root(target)
        if root >= 0:
            yield (root,)
        return
    prefix = []

    def rec(rem):
        if len(prefix) == r - 1:
            root = _triangular_root(rem)
            if root >= 0:
                yield tuple(prefix) + (root,)
            return
        v = 0
        while v * (v + 1) // 2 <= rem:
            prefix.append(v)
            yield from rec(rem - v * (v + 1) // 2)
            prefix.pop()
            v += 1

    yield from rec(target)


def triangular_solutions_numpy(r, target, limit):
    rows = []
    hit = False
    if limit > 0:
        for sol in _triangular_dfs(r, target):
            rows.append(sol)
            if len(rows) == limit:
                hit = True
                break
    elif target >= 0:
        hit = True
    arr = np.array(rows, dtype=np.int64).reshape(len(rows), max(r, 0))
    return arr, hit


def triangular_count_numpy(r, target):
    return sum(1 for _ in _triangular_dfs(r, target))


if USE_NUMBA:
    shuffle_table = shuffle_table_numba
    wedge_int64 = wedge_int64_numba
    triangular_solutions = triangular_solutions_numba
    triangular_count = triangular_count_numba
else:
    shuffle_table = shuffle_table_numpy
    wedge_int64 = wedge_int64_numpy
    triangular_solutions = triangular_solutions_numpy
    triangular_count = triangular_count_numpy


def warmup():
    """Trigger JIT compilation of every kernel (no-op on the numpy backend)."""
    if not USE_NUMBA:
        return
    m = np.array([1, 2], dtype=np.uint64)
    c = np.array([1, -1], dtype=np.int64)
    wedge_int64(m, c, m, c)
    shuffle_table(m, m)
    triangular_solutions(3, 2, 4)
    triangular_count(3, 2)
