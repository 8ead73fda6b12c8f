"""Pure-Python term kernels.

A term map is a ``dict`` from exponent tuples to nonzero ``Fraction``
coefficients. The compiled module ``_ckernels`` exposes the same
functions with identical results; :mod:`pvalgebra.kernels` picks one.
"""

from fractions import Fraction
from math import comb, gcd, lcm


def _probe_fast_fraction():
    try:
        f = object.__new__(Fraction)
        f._numerator, f._denominator = 3, 4
        return f == Fraction(3, 4) and hash(f) == hash(Fraction(3, 4))
    except (AttributeError, TypeError):
        return False


_FAST = _probe_fast_fraction()


def to_fractions(ints, den):
    """``{e: v / den}`` for nonzero integer ``v``, skipping the constructor's checks."""
    if not _FAST:
        return {e: Fraction(v, den) for e, v in ints.items() if v}
    new = object.__new__
    out = {}
    for e, v in ints.items():
        if v:
            g = gcd(v, den)
            f = new(Fraction)
            f._numerator = v // g
            f._denominator = den // g
            out[e] = f
    return out


def _integerize(terms):
    den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    return {e: c.numerator * (den // c.denominator) for e, c in terms.items()}, den


def mul_terms(a, b):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    ia, da = _integerize(a)
    ib, db = _integerize(b)
    out = {}
    get = out.get
    for ea, ca in ia.items():
        for eb, cb in ib.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            out[e] = get(e, 0) + ca * cb
    return to_fractions(out, da * db)


def shift_terms(terms, idx, c):
    """Substitute ``v -> v + c`` in slot ``idx``."""
    c = Fraction(c)
    if c == 0 or not terms:
        return dict(terms)
    ints, den = _integerize(terms)
    top = max(e[idx] for e in terms)
    cn, cd = c.numerator, c.denominator
    cn_pow = [cn**i for i in range(top + 1)]
    cd_pow = [cd**i for i in range(top + 1)]
    out = {}
    get = out.get
    for e, v in ints.items():
        k = e[idx]
        if k < 0:
            raise ValueError("cannot shift a negative power")
        head, tail = e[:idx], e[idx + 1:]
        for j in range(k + 1):
            # coefficient scaled by cd**top so every contribution is integral
            w = v * comb(k, j) * cn_pow[k - j] * cd_pow[top - k + j]
            key = head + (j,) + tail
            out[key] = get(key, 0) + w
    return to_fractions(out, den * cd_pow[top])


def shear_terms(terms, idx, src, c):
    """Substitute ``v_idx -> v_idx + c * v_src``."""
    c = Fraction(c)
    if c == 0 or not terms:
        return dict(terms)
    ints, den = _integerize(terms)
    top = max(e[idx] for e in terms)
    cn, cd = c.numerator, c.denominator
    cn_pow = [cn**i for i in range(top + 1)]
    cd_pow = [cd**i for i in range(top + 1)]
    out = {}
    get = out.get
    for e, v in ints.items():
        k = e[idx]
        if k < 0:
            raise ValueError("cannot shear a negative power")
        base = list(e)
        s0 = e[src]
        for j in range(k + 1):
            w = v * comb(k, j) * cn_pow[k - j] * cd_pow[top - k + j]
            base[idx] = j
            base[src] = s0 + k - j
            key = tuple(base)
            out[key] = get(key, 0) + w
    return to_fractions(out, den * cd_pow[top])


def affine_terms(terms, ops):
    """Apply a sequence of ``("shift", idx, c)`` / ``("shear", idx, src, c)`` steps.

    Works on integer numerators with one running denominator, so only the
    final result is converted back to fractions.
    """
    if not terms:
        return {}
    ints, den = _integerize(terms)
    for op in ops:
        if op[0] == "shift":
            _, idx, c = op
            src = None
        else:
            _, idx, src, c = op
        c = Fraction(c)
        if not c or not ints:
            continue
        if any(e[idx] < 0 for e in ints):
            raise ValueError("cannot substitute into a negative power")
        top = max(e[idx] for e in ints)
        if top == 0:
            continue
        cn, cd = c.numerator, c.denominator
        cn_pow = [cn**i for i in range(top + 1)]
        cd_pow = [cd**i for i in range(top + 1)]
        out = {}
        get = out.get
        for e, v in ints.items():
            k = e[idx]
            base = list(e)
            s0 = e[src] if src is not None else 0
            for j in range(k + 1):
                base[idx] = j
                if src is not None:
                    base[src] = s0 + k - j
                key = tuple(base)
                out[key] = get(key, 0) + v * comb(k, j) * cn_pow[k - j] * cd_pow[top - k + j]
        ints = {e: v for e, v in out.items() if v}
        den *= cd_pow[top]
    return to_fractions(ints, den)


def diff_terms(terms, idx, k):
    """k-th partial derivative in slot ``idx``."""
    if k == 0:
        return dict(terms)
    out = {}
    for e, c in terms.items():
        p = e[idx]
        if 0 <= p < k:
            continue
        f = 1
        for s in range(k):
            f *= p - s
        if f == 0:
            continue
        key = e[:idx] + (p - k,) + e[idx + 1:]
        out[key] = c * f
    return out
