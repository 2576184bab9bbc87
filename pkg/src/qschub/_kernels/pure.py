"""Pure-Python monomial-dict kernel.

A polynomial is a dict mapping monomials to nonzero int coefficients.  A
monomial is a flat even-length tuple (code, exp, code, exp, ...) with variable
codes strictly increasing and all exponents positive; the empty tuple is the
constant monomial.  Codes are opaque ints here — the caller packs family and
index into them — except that the two codes passed to pswap / pdivdiff /
plinear_div must be distinct.

The compiled kernel (cyk.pyx) implements the same eight functions with the
same semantics; tests assert parity between the two.
"""

from __future__ import annotations


def mono_mul(m1: tuple, m2: tuple) -> tuple:
    """Merge two sorted flat monomials, adding exponents."""
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i, j, n1, n2 = 0, 0, len(m1), len(m2)
    while i < n1 and j < n2:
        c1, c2 = m1[i], m2[j]
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
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def padd(p1: dict, p2: dict) -> dict:
    """Sum of two polynomials."""
    if not p1:
        return dict(p2)
    if not p2:
        return dict(p1)
    out = dict(p1)
    for m, c in p2.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        elif m in out:
            del out[m]
    return out


def psub(p1: dict, p2: dict) -> dict:
    """Difference p1 - p2."""
    out = dict(p1)
    for m, c in p2.items():
        s = out.get(m, 0) - c
        if s:
            out[m] = s
        elif m in out:
            del out[m]
    return out


def pscale(p: dict, c: int) -> dict:
    """Scalar multiple c * p."""
    if c == 0:
        return {}
    if c == 1:
        return dict(p)
    return {m: c * k for m, k in p.items()}


def pmul(p1: dict, p2: dict) -> dict:
    """Product of two polynomials."""
    if not p1 or not p2:
        return {}
    if len(p1) > len(p2):
        p1, p2 = p2, p1
    out: dict = {}
    for m1, c1 in p1.items():
        for m2, c2 in p2.items():
            m = mono_mul(m1, m2)
            s = out.get(m, 0) + c1 * c2
            if s:
                out[m] = s
            elif m in out:
                del out[m]
    return out


def _split_uv(m: tuple, u: int, v: int):
    """Return (exp_u, exp_v, rest) where rest is m with u and v removed."""
    a = b = 0
    rest = []
    for i in range(0, len(m), 2):
        c = m[i]
        if c == u:
            a = m[i + 1]
        elif c == v:
            b = m[i + 1]
        else:
            rest.append(c)
            rest.append(m[i + 1])
    return a, b, tuple(rest)


def _with_uv(rest: tuple, u: int, eu: int, v: int, ev: int) -> tuple:
    """Insert u^eu * v^ev (either exponent may be 0) into sorted monomial rest."""
    ins = []
    if eu:
        ins.append((u, eu))
    if ev:
        ins.append((v, ev))
    if not ins:
        return rest
    if u > v:
        ins.sort()
    out = []
    k = 0
    for i in range(0, len(rest), 2):
        c = rest[i]
        while k < len(ins) and ins[k][0] < c:
            out.append(ins[k][0])
            out.append(ins[k][1])
            k += 1
        out.append(c)
        out.append(rest[i + 1])
    while k < len(ins):
        out.append(ins[k][0])
        out.append(ins[k][1])
        k += 1
    return tuple(out)


def pswap(p: dict, u: int, v: int) -> dict:
    """Exchange the variables with codes u and v throughout p."""
    out: dict = {}
    for m, c in p.items():
        a, b, rest = _split_uv(m, u, v)
        out[_with_uv(rest, u, b, v, a)] = c
    return out


def pdivdiff(p: dict, u: int, v: int) -> dict:
    """(p - pswap(p, u, v)) / (u - v), computed monomial by monomial.

    For a monomial u^a v^b r the quotient telescopes to
    sign * sum_{t} u^t v^{a+b-1-t} r over the min(a,b)..max(a,b)-1 range,
    so no actual division happens and the result is exact.
    """
    out: dict = {}
    for m, c in p.items():
        a, b, rest = _split_uv(m, u, v)
        if a == b:
            continue
        if a > b:
            lo, hi, s = b, a, c
        else:
            lo, hi, s = a, b, -c
        tot = a + b - 1
        for t in range(lo, hi):
            mm = _with_uv(rest, u, t, v, tot - t)
            k = out.get(mm, 0) + s
            if k:
                out[mm] = k
            elif mm in out:
                del out[mm]
    return out


def plinear_div(p: dict, u: int, v: int) -> dict:
    """Exact quotient p / (u - v); raises ValueError on a nonzero remainder.

    Synthetic division in u over the coefficient ring Z[v, everything else]:
    writing p = sum_j A_j u^j, the quotient B satisfies B_{d-1} = A_d and
    B_{j-1} = A_j + v * B_j, with remainder A_0 + v * B_0.
    """
    if not p:
        return {}
    layers: dict = {}
    d = 0
    for m, c in p.items():
        a, b, rest = _split_uv(m, u, v)
        mm = _with_uv(rest, u, 0, v, b)
        layers.setdefault(a, {})[mm] = c
        if a > d:
            d = a
    if d == 0:
        raise ValueError("not divisible: no occurrence of the leading variable")
    vmono = (v, 1)
    out: dict = {}
    carry = layers.get(d, {})
    for j in range(d - 1, -1, -1):
        # carry holds B_j; fold it into the quotient with the u^j prefix.
        if j:
            um = (u, j)
            for m, c in carry.items():
                mm = mono_mul(um, m)
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
        shifted = {mono_mul(vmono, m): c for m, c in carry.items()}
        carry = padd(layers.get(j, {}), shifted)
    if carry:
        raise ValueError("not divisible: nonzero remainder")
    return out
