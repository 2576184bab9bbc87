# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled twin of the pure-Python kernel (see pure.py for the contract).

Coefficients stay Python ints (they can exceed machine width in long
products); codes and exponents are machine longs.
"""


def mono_mul(tuple m1, tuple m2):
    cdef Py_ssize_t i = 0, j = 0, n1 = len(m1), n2 = len(m2)
    cdef long c1, c2
    if n1 == 0:
        return m2
    if n2 == 0:
        return m1
    out = []
    while i < n1 and j < n2:
        c1 = <long> m1[i]
        c2 = <long> m2[j]
        if c1 == c2:
            out.append(c1)
            out.append(m1[i + 1] + m2[j + 1])
            i += 2
            j += 2
        elif c1 < c2:
            out.append(c1)
            out.append(m1[i + 1])
            i += 2
        else:
            out.append(c2)
            out.append(m2[j + 1])
            j += 2
    while i < n1:
        out.append(m1[i])
        i += 1
    while j < n2:
        out.append(m2[j])
        j += 1
    return tuple(out)


def padd(dict p1, dict p2):
    if not p1:
        return dict(p2)
    if not p2:
        return dict(p1)
    cdef dict out = dict(p1)
    for m, c in p2.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        elif m in out:
            del out[m]
    return out


def psub(dict p1, dict p2):
    cdef dict out = dict(p1)
    for m, c in p2.items():
        s = out.get(m, 0) - c
        if s:
            out[m] = s
        elif m in out:
            del out[m]
    return out


def pscale(dict p, c):
    if c == 0:
        return {}
    if c == 1:
        return dict(p)
    cdef dict out = {}
    for m, k in p.items():
        out[m] = c * k
    return out


def pmul(dict p1, dict p2):
    if not p1 or not p2:
        return {}
    if len(p1) > len(p2):
        p1, p2 = p2, p1
    cdef dict out = {}
    for m1, c1 in p1.items():
        for m2, c2 in p2.items():
            m = mono_mul(<tuple> m1, <tuple> m2)
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            elif m in out:
                del out[m]
    return out


cdef tuple _split_uv(tuple m, long u, long v, long* pa, long* pb):
    cdef long a = 0, b = 0, c
    cdef Py_ssize_t i, n = len(m)
    out = []
    for i in range(0, n, 2):
        c = <long> m[i]
        if c == u:
            a = <long> m[i + 1]
        elif c == v:
            b = <long> m[i + 1]
        else:
            out.append(m[i])
            out.append(m[i + 1])
    pa[0] = a
    pb[0] = b
    return tuple(out)


cdef tuple _with_uv(tuple rest, long u, long eu, long v, long ev):
    cdef long c
    cdef Py_ssize_t i, n = len(rest)
    cdef long i1 = 0, e1 = 0, i2 = 0, e2 = 0
    if eu and ev:
        if u < v:
            i1, e1, i2, e2 = u, eu, v, ev
        else:
            i1, e1, i2, e2 = v, ev, u, eu
    elif eu:
        i1, e1 = u, eu
    elif ev:
        i1, e1 = v, ev
    else:
        return rest
    out = []
    for i in range(0, n, 2):
        c = <long> rest[i]
        if e1 and i1 < c:
            out.append(i1)
            out.append(e1)
            e1 = 0
        if e2 and i2 < c:
            out.append(i2)
            out.append(e2)
            e2 = 0
        out.append(rest[i])
        out.append(rest[i + 1])
    if e1:
        out.append(i1)
        out.append(e1)
    if e2:
        out.append(i2)
        out.append(e2)
    return tuple(out)


def pswap(dict p, long u, long v):
    cdef dict out = {}
    cdef long a = 0, b = 0
    for m, c in p.items():
        rest = _split_uv(<tuple> m, u, v, &a, &b)
        out[_with_uv(rest, u, b, v, a)] = c
    return out


def pdivdiff(dict p, long u, long v):
    cdef dict out = {}
    cdef long a = 0, b = 0, lo, hi, t, tot
    for m, c in p.items():
        rest = _split_uv(<tuple> m, u, v, &a, &b)
        if a == b:
            continue
        if a > b:
            lo, hi = b, a
            s = c
        else:
            lo, hi = a, b
            s = -c
        tot = a + b - 1
        for t in range(lo, hi):
            mm = _with_uv(rest, u, t, v, tot - t)
            k = out.get(mm, 0) + s
            if k:
                out[mm] = k
            elif mm in out:
                del out[mm]
    return out


def plinear_div(dict p, long u, long v):
    cdef dict layers = {}, out = {}, carry, shifted, lay
    cdef long a = 0, b = 0, d = 0, j
    if not p:
        return {}
    for m, c in p.items():
        rest = _split_uv(<tuple> m, u, v, &a, &b)
        mm = _with_uv(rest, u, 0, v, b)
        lay = layers.get(a)
        if lay is None:
            lay = {}
            layers[a] = lay
        lay[mm] = c
        if a > d:
            d = a
    if d == 0:
        raise ValueError("not divisible: no occurrence of the leading variable")
    vmono = (v, 1)
    carry = layers.get(d, {})
    for j in range(d - 1, -1, -1):
        if j:
            um = (u, j)
            for m, c in carry.items():
                mm = mono_mul(um, <tuple> m)
                k = out.get(mm, 0) + c
                if k:
                    out[mm] = k
                elif mm in out:
                    del out[mm]
        else:
            for m, c in carry.items():
                k = out.get(m, 0) + c
                if k:
                    out[m] = k
                elif m in out:
                    del out[m]
        shifted = {}
        for m, c in carry.items():
            shifted[mono_mul(vmono, <tuple> m)] = c
        carry = padd(layers.get(j, {}), shifted)
    if carry:
        raise ValueError("not divisible: nonzero remainder")
    return out
