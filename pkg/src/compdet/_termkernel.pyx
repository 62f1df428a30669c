# cython: language_level=3
"""Compiled sparse term kernel; same contract as compdet._termkernel_py.

Coefficients stay arbitrary Python numbers (int or Fraction), so the win
over the pure kernel comes from loop and dict overhead, not from coefficient
arithmetic.  Semantics must match the pure twin exactly.
"""


def add_terms(dict acc, dict b, coeff):
    """In place: acc += coeff * b.  Drops entries that cancel to zero."""
    cdef object k, c, v
    if not coeff:
        return
    for k, c in b.items():
        v = acc.get(k)
        if v is None:
            acc[k] = coeff * c
        else:
            v = v + coeff * c
            if v:
                acc[k] = v
            else:
                del acc[k]


def muladd_terms(dict acc, dict a, dict b, unit, coeff):
    """In place: acc += coeff * a * b."""
    cdef object ka, kb, ca, cb, k, v, cc, shift
    cdef dict aa = a, bb = b
    if not coeff or not a or not b:
        return
    if len(aa) < len(bb):
        aa, bb = bb, aa
    for kb, cb in bb.items():
        shift = kb - unit
        cc = coeff * cb
        for ka, ca in aa.items():
            k = ka + shift
            v = acc.get(k)
            if v is None:
                acc[k] = cc * ca
            else:
                v = v + cc * ca
                if v:
                    acc[k] = v
                else:
                    del acc[k]


def mul_terms(dict a, dict b, unit):
    """Product of two term dicts."""
    cdef dict acc = {}
    muladd_terms(acc, a, b, unit, 1)
    return acc
