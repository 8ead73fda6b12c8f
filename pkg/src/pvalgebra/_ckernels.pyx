# cython: language_level=3, boundscheck=False, wraparound=False
# distutils: language = c++
"""Compiled term kernels; same contract as ``_pykernels``.

Products first try a machine-word path: exponent vectors are packed into
one 64-bit key and integer coefficients accumulate in ``long long`` with
overflow checks. Anything that does not fit goes through the generic path
on Python integers.
"""

from cpython.tuple cimport PyTuple_New, PyTuple_SET_ITEM, PyTuple_GET_ITEM
from cpython.ref cimport Py_INCREF
from cpython.object cimport PyObject
from cpython.dict cimport PyDict_GetItem, PyDict_SetItem
from libc.stdlib cimport malloc, free
from libcpp.unordered_map cimport unordered_map
from libcpp.utility cimport pair
from libcpp.vector cimport vector

ctypedef long long i64
ctypedef pair[i64, i64] entry

cdef extern from *:
    """
    static inline int pv_mul_ovf(long long a, long long b, long long *r) { return __builtin_mul_overflow(a, b, r); }
    static inline int pv_add_ovf(long long a, long long b, long long *r) { return __builtin_add_overflow(a, b, r); }
    """
    int pv_mul_ovf(long long a, long long b, long long *r) nogil
    int pv_add_ovf(long long a, long long b, long long *r) nogil

from fractions import Fraction
from math import comb, lcm

from ._pykernels import affine_terms as _py_affine, to_fractions


cdef tuple _integerize(dict terms):
    cdef object den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    return {e: c.numerator * (den // c.denominator) for e, c in terms.items()}, den


cdef inline tuple _exp_tuple(long *buf, Py_ssize_t n):
    cdef tuple t = PyTuple_New(n)
    cdef Py_ssize_t i
    cdef object v
    for i in range(n):
        v = buf[i]
        Py_INCREF(v)
        PyTuple_SET_ITEM(t, i, v)
    return t


cdef object _slot_bounds(dict terms, Py_ssize_t width):
    lo = list(next(iter(terms)))
    hi = list(lo)
    for e in terms:
        for s in range(width):
            x = e[s]
            if x < lo[s]:
                lo[s] = x
            elif x > hi[s]:
                hi[s] = x
    return lo, hi


cdef bint _fits(dict ints):
    cdef object limit = 1 << 62
    for v in ints.values():
        if not -limit < v < limit:
            return False
    return True


cdef object _mul_packed(dict ia, dict ib, Py_ssize_t width):
    """Packed-key product on machine integers, or ``None`` if it does not fit."""
    if width == 0 or not _fits(ia) or not _fits(ib):
        return None
    lo_a, hi_a = _slot_bounds(ia, width)
    lo_b, hi_b = _slot_bounds(ib, width)
    shifts, masks = [], []
    cdef long total = 0
    for s in range(width):
        bits = max(1, (hi_a[s] - lo_a[s] + hi_b[s] - lo_b[s]).bit_length())
        shifts.append(total)
        masks.append((1 << bits) - 1)
        total += bits
    if total > 62:
        return None
    cdef vector[long long] ka, kb, ca, cb
    cdef long long key
    for e, v in ia.items():
        key = 0
        for s in range(width):
            key += (<long long>(e[s] - lo_a[s])) << <long long>shifts[s]
        ka.push_back(key)
        ca.push_back(<long long>v)
    for e, v in ib.items():
        key = 0
        for s in range(width):
            key += (<long long>(e[s] - lo_b[s])) << <long long>shifts[s]
        kb.push_back(key)
        cb.push_back(<long long>v)
    cdef unordered_map[long long, long long] acc
    acc.reserve(ka.size() * kb.size() if ka.size() * kb.size() < 4000000 else 4000000)
    cdef size_t i, j
    cdef long long prod, cur
    cdef bint overflow = False
    with nogil:
        for i in range(ka.size()):
            for j in range(kb.size()):
                if pv_mul_ovf(ca[i], cb[j], &prod):
                    overflow = True
                    break
                key = ka[i] + kb[j]
                cur = acc[key]
                if pv_add_ovf(cur, prod, &cur):
                    overflow = True
                    break
                acc[key] = cur
            if overflow:
                break
    if overflow:
        return None
    base = [lo_a[s] + lo_b[s] for s in range(width)]
    out = {}
    cdef pair[long long, long long] kv
    for kv in acc:
        if kv.second:
            k = kv.first
            out[tuple([((k >> shifts[s]) & masks[s]) + base[s] for s in range(width)])] = kv.second
    return out


def mul_terms(dict a, dict b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    ia, da = _integerize(a)
    ib, db = _integerize(b)
    cdef Py_ssize_t w = len(next(iter(ia)))
    packed = _mul_packed(ia, ib, w)
    if packed is not None:
        return to_fractions(packed, da * db)
    cdef Py_ssize_t nb = len(ib)
    cdef Py_ssize_t width = len(next(iter(ib)))
    cdef Py_ssize_t i, j, s
    cdef long *bexp = <long *>malloc(nb * width * sizeof(long) + 1)
    cdef long *buf = <long *>malloc(width * sizeof(long) + 1)
    cdef long *aexp = <long *>malloc(width * sizeof(long) + 1)
    cdef list bcoef = list(ib.values())
    cdef dict out = {}
    cdef tuple key
    cdef object ca, prev
    cdef tuple ea
    cdef PyObject *ptr
    try:
        j = 0
        for eb in ib:
            for s in range(width):
                bexp[j * width + s] = eb[s]
            j += 1
        for ea, ca in ia.items():
            for s in range(width):
                aexp[s] = <long>(<object>PyTuple_GET_ITEM(ea, s))
            for j in range(nb):
                for s in range(width):
                    buf[s] = aexp[s] + bexp[j * width + s]
                key = _exp_tuple(buf, width)
                ptr = PyDict_GetItem(out, key)
                if ptr is NULL:
                    PyDict_SetItem(out, key, ca * bcoef[j])
                else:
                    PyDict_SetItem(out, key, (<object>ptr) + ca * bcoef[j])
    finally:
        free(bexp)
        free(buf)
        free(aexp)
    return to_fractions(out, da * db)


def shift_terms(dict terms, Py_ssize_t idx, c):
    c = Fraction(c)
    if c == 0 or not terms:
        return dict(terms)
    ints, den = _integerize(terms)
    cdef long top = max(e[idx] for e in terms)
    cn, cd = c.numerator, c.denominator
    cdef list cn_pow = [cn**i for i in range(top + 1)]
    cdef list cd_pow = [cd**i for i in range(top + 1)]
    cdef dict out = {}
    cdef long k, jj
    cdef tuple e, key
    cdef PyObject *ptr
    for e, v in ints.items():
        k = e[idx]
        if k < 0:
            raise ValueError("cannot shift a negative power")
        head = e[:idx]
        tail = e[idx + 1:]
        for jj in range(k + 1):
            w = v * comb(k, jj) * cn_pow[k - jj] * cd_pow[top - k + jj]
            key = head + (jj,) + tail
            ptr = PyDict_GetItem(out, key)
            if ptr is NULL:
                PyDict_SetItem(out, key, w)
            else:
                PyDict_SetItem(out, key, (<object>ptr) + w)
    return to_fractions(out, den * cd_pow[top])


def shear_terms(dict terms, Py_ssize_t idx, Py_ssize_t src, c):
    c = Fraction(c)
    if c == 0 or not terms:
        return dict(terms)
    ints, den = _integerize(terms)
    cdef long top = max(e[idx] for e in terms)
    cn, cd = c.numerator, c.denominator
    cdef list cn_pow = [cn**i for i in range(top + 1)]
    cdef list cd_pow = [cd**i for i in range(top + 1)]
    cdef dict out = {}
    cdef long k, jj, s0
    cdef list base
    cdef tuple e, key
    cdef PyObject *ptr
    for e, v in ints.items():
        k = e[idx]
        if k < 0:
            raise ValueError("cannot shear a negative power")
        base = list(e)
        s0 = e[src]
        for jj in range(k + 1):
            w = v * comb(k, jj) * cn_pow[k - jj] * cd_pow[top - k + jj]
            base[idx] = jj
            base[src] = s0 + k - jj
            key = tuple(base)
            ptr = PyDict_GetItem(out, key)
            if ptr is NULL:
                PyDict_SetItem(out, key, w)
            else:
                PyDict_SetItem(out, key, (<object>ptr) + w)
    return to_fractions(out, den * cd_pow[top])


cdef bint _mul3(long long a, long long b, long long c, long long *r) nogil:
    cdef long long t
    if pv_mul_ovf(a, b, &t):
        return True
    return pv_mul_ovf(t, c, r)


cdef object _affine_packed(dict ints, list ops, Py_ssize_t width):
    """Packed machine-integer version of ``affine_terms``; ``None`` if it does not fit.

    Returns ``(ints, den_factor)``.
    """
    cdef int i, s
    if width == 0 or not _fits(ints):
        return None
    maxdeg = 0
    for e in ints:
        tot = 0
        for x in e:
            if x < 0:
                return None
            tot += x
        if tot > maxdeg:
            maxdeg = tot
    if maxdeg > 60:
        return None
    cdef long bits = max(1, maxdeg.bit_length())
    if bits * width > 62:
        return None
    cdef long long mask = (1 << bits) - 1
    cdef vector[pair[long long, long long]] cur
    cdef long long key
    for e, v in ints.items():
        key = 0
        for s in range(width):
            key |= (<long long>e[s]) << (bits * s)
        cur.push_back(entry(key, <i64>v))
    cdef unordered_map[long long, long long] acc
    cdef pair[long long, long long] kv
    cdef long long binom[62][62]
    cdef long long cnp[62]
    cdef long long cdp[62]
    cdef long long top, k, j, val, coef, sh_i, sh_s, delta, key2
    cdef bint shear, overflow = False
    cdef size_t t
    den_factor = 1
    for i in range(62):
        binom[i][0] = 1
        binom[i][i] = 1
        for j in range(1, i):
            binom[i][j] = binom[i - 1][j - 1] + binom[i - 1][j]
    for op in ops:
        c = Fraction(op[len(op) - 1])
        if not c:
            continue
        shear = op[0] == "shear"
        sh_i = bits * op[1]
        sh_s = bits * op[2] if shear else 0
        top = 0
        for t in range(cur.size()):
            k = (cur[t].first >> sh_i) & mask
            if k > top:
                top = k
        if top == 0:
            continue
        cn_big = [c.numerator ** q for q in range(top + 1)]
        cd_big = [c.denominator ** q for q in range(top + 1)]
        if not (_fits({0: cn_big[top]}) and _fits({0: cd_big[top]})):
            return None
        for i in range(top + 1):
            cnp[i] = cn_big[i]
            cdp[i] = cd_big[i]
        acc.clear()
        with nogil:
            for t in range(cur.size()):
                key = cur[t].first
                val = cur[t].second
                k = (key >> sh_i) & mask
                for j in range(k + 1):
                    if _mul3(val, binom[k][j], cnp[k - j], &coef) or pv_mul_ovf(coef, cdp[top - k + j], &coef):
                        overflow = True
                        break
                    delta = k - j
                    if shear:
                        key2 = key - (delta << sh_i) + (delta << sh_s)
                    else:
                        key2 = key - (delta << sh_i)
                    if pv_add_ovf(acc[key2], coef, &coef):
                        overflow = True
                        break
                    acc[key2] = coef
                if overflow:
                    break
        if overflow:
            return None
        cur.clear()
        for kv in acc:
            if kv.second:
                cur.push_back(kv)
        den_factor *= cd_big[top]
    out = {}
    for t in range(cur.size()):
        key = cur[t].first
        out[tuple([(key >> (bits * s)) & mask for s in range(width)])] = cur[t].second
    return out, den_factor


def affine_terms(dict terms, list ops):
    if not terms:
        return {}
    ints, den = _integerize(terms)
    cdef Py_ssize_t w = len(next(iter(ints)))
    packed = _affine_packed(ints, ops, w)
    if packed is None:
        return _py_affine(terms, ops)
    out, factor = packed
    return to_fractions(out, den * factor)


def diff_terms(dict terms, Py_ssize_t idx, long k):
    if k == 0:
        return dict(terms)
    cdef dict out = {}
    cdef long p, f, s
    for e, c in terms.items():
        p = e[idx]
        if 0 <= p < k:
            continue
        f = 1
        for s in range(k):
            f *= p - s
        out[e[:idx] + (p - k,) + e[idx + 1:]] = c * f
    return out
