"""Quantum Schubert polynomials, quantum Schur-type functions, quantization.

The quantum elementary polynomials follow the three-term recurrence
e~_k(X_r) = e~_k(X_{r-1}) + x_r e~_{k-1}(X_{r-1}) + q_{r-1} e~_{k-2}(X_{r-2}),
i.e. they are the expansion coefficients of the tridiagonal determinant
Delta_k(t|X_k) = sum_i e~_i(X_k) t^{k-i}.  The top double polynomial is
prod_{i=1}^{n-1} Delta_i(y_{n-i}|X_i) and everything else descends from it by
divided differences acting on the y alphabet; single polynomials set y = 0.

Single polynomials are computed on a pruned chain: only the y-degree slice of
the top polynomial that can survive the whole operator word is materialized
(each y divided difference lowers every surviving term's y-degree by exactly
one), which keeps rank 6 and 7 computations instant.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Sequence

from . import classical, perms
from .errors import (
    CompositionOutOfBox,
    ForeignVariables,
    NotGrassmannian,
    NotRestrictedVexillary,
    RankMismatch,
    ShapeOutOfBox,
)
from .poly import Poly, Q, X, Y, determinant, q, vsplit, x, y

Perm = perms.Perm

# overridable elementary polynomials: the verification suites use this hook to
# inject a corrupted e~ and prove the identity checks actually bite
_override: Callable[[int, int], Poly | None] | None = None

_e_cache: dict = {}
_h_cache: dict = {}
_w0_cache: dict = {}
_slice_cache: dict = {}
_single_cache: dict = {}
_double_cache: dict = {}


def set_elementary_override(fn: Callable[[int, int], Poly | None] | None) -> None:
    """Install (or clear, with None) an e~ override; remember to clear_caches()."""
    global _override
    _override = fn


def clear_caches() -> None:
    for c in (_e_cache, _h_cache, _w0_cache, _slice_cache, _single_cache, _double_cache):
        c.clear()


def q_elementary(k: int, r: int) -> Poly:
    """The quantum elementary polynomial e~_k(X_r)."""
    if k < 0 or k > r:
        return Poly()
    if k == 0:
        return Poly.const(1)
    if _override is not None:
        forced = _override(k, r)
        if forced is not None:
            return forced
    got = _e_cache.get((k, r))
    if got is None:
        got = q_elementary(k, r - 1) + x(r) * q_elementary(k - 1, r - 1)
        if k >= 2 and r >= 2:
            got = got + q(r - 1) * q_elementary(k - 2, r - 2)
        _e_cache[(k, r)] = got
    return got


def delta(k: int, t: Poly) -> Poly:
    """Delta_k(t|X_k) = sum_{i=0}^{k} e~_i(X_k) t^{k-i}."""
    out = Poly()
    for i in range(k + 1):
        out = out + q_elementary(i, k) * t ** (k - i)
    return out


def q_complete(k: int, r: int) -> Poly:
    """The quantum complete polynomial h~_k(X_r), as an e~ determinant."""
    if k < 0:
        return Poly()
    if k == 0:
        return Poly.const(1)
    got = _h_cache.get((k, r))
    if got is None:
        got = determinant(
            [[q_elementary(1 - i + j, r + j) for j in range(k)] for i in range(k)]
        )
        _h_cache[(k, r)] = got
    return got


def q_xy_elementary(m: int, k: int, l: int) -> Poly:
    """e~_m(X_k - Y_l) = sum_j e~_{m-j}(X_k) h_j(Y_l)."""
    out = Poly()
    for j in range(m + 1):
        hj = classical.complete_sym(j, l, Y)
        if hj:
            out = out + q_elementary(m - j, k) * hj
    return out


def q_xy_complete(m: int, k: int, l: int) -> Poly:
    """h~_m(X_k - Y_l) = sum_j h~_{m-j}(X_k) e_j(Y_l)."""
    out = Poly()
    for j in range(min(m, l) + 1):
        ej = classical.elem_sym(j, l, Y)
        if ej:
            out = out + q_complete(m - j, r=k) * ej
    return out


# -- the top cell and divided-difference chains --------------------------------


def q_w0_double(n: int) -> Poly:
    """S~_{w_0}(x, y) = prod_{i=1}^{n-1} Delta_i(y_{n-i} | X_i)."""
    got = _w0_cache.get(n)
    if got is None:
        got = Poly.const(1)
        for i in range(1, n):
            got = got * delta(i, y(n - i))
        _w0_cache[n] = got
    return got


def _w0_y_slice(n: int, want: int) -> Poly:
    """The y-degree-`want` part of S~_{w_0}(x,y), built without the full product."""
    got = _slice_cache.get((n, want))
    if got is not None:
        return got
    total = n * (n - 1) // 2
    slices: list[Poly] = [Poly.const(1)] + [Poly() for _ in range(want)]
    done = 0
    for i in range(1, n):
        yv = y(n - i)
        done += i
        # after this factor the remaining ones add at most total - done, so
        # any bucket below `floor` can never climb back up to `want`
        floor = max(0, want - (total - done))
        nxt = [Poly() for _ in range(want + 1)]
        for k in range(i + 1):
            ek = q_elementary(k, i)
            if not ek:
                continue
            d = i - k
            piece = ek * yv ** d
            for j in range(max(0, floor - d), want + 1 - d):
                if slices[j]:
                    nxt[j + d] = nxt[j + d] + slices[j] * piece
        slices = nxt
    _slice_cache[(n, want)] = slices[want]
    return slices[want]


def _embed(w: Perm, n: int | None) -> Perm:
    w = perms.check_perm(w)
    if n is None:
        return w
    if len(w) > n:
        raise RankMismatch(f"{w} does not fit in rank {n}")
    return perms.right_pad(w, n - len(w))


def q_double_schubert(w: Perm, n: int | None = None) -> Poly:
    """S~_w(x, y) at ambient rank n (default: the rank w is written in)."""
    w = _embed(w, n)
    n = len(w)
    got = _double_cache.get(w)
    if got is None:
        word = perms.reduced_word(perms.compose(w, perms.longest(n)))
        got = classical.apply_word(q_w0_double(n), word, Y)
        _double_cache[w] = got
    return got


def q_schubert(w: Perm, n: int | None = None) -> Poly:
    """The quantum Schubert polynomial S~_w(x) at ambient rank n."""
    w = _embed(w, n)
    n = len(w)
    got = _single_cache.get(w)
    if got is None:
        v = perms.compose(w, perms.longest(n))
        seed = _w0_y_slice(n, perms.length(v))
        got = classical.apply_word(seed, perms.reduced_word(v), Y)
        if any(fam == Y for fam, _ in got.variables()):
            raise AssertionError("pruned chain left y variables behind")
        _single_cache[w] = got
    return got


def quantize(f: Poly, n: int | None = None) -> Poly:
    """Quantization: expand in Schubert polynomials, substitute the quantum
    ones, then project to the rank-n ring (x_{>n} and q_{>=n} vanish).

    The default n is the largest minimal rank among the support permutations,
    which leaves every deformation term the expansion produces alive.
    """
    expansion = classical.schubert_expand(f)
    if not expansion:
        return Poly()
    if n is None:
        n = max(len(w) for w in expansion)
    out = Poly()
    for w, c in expansion.items():
        out = out + c * q_schubert(w)
    return out.restrict(n)


# -- determinantal families ----------------------------------------------------


def q_schur(lam, r: int, n: int) -> Poly:
    """Quantum Schur function s~_lam(X_r) inside rank n (lam in an r x (n-r) box)."""
    lam = perms.check_partition(lam)
    if not perms.fits_box(lam, r, n - r):
        raise ShapeOutOfBox(f"{lam} does not fit in a {r}x{n - r} box")
    m = n - r
    lamc = perms.conjugate(lam) + (0,) * m
    return determinant(
        [[q_elementary(lamc[i] - i + j, r + j) for j in range(m)] for i in range(m)]
    )


def q_monomial(alpha: Sequence[int], n: int) -> Poly:
    """Quantization x~^alpha of the monomial x^alpha, alpha under the staircase."""
    alpha = tuple(alpha)
    if len(alpha) > max(n - 1, 0) and any(alpha[n - 1 :]):
        raise CompositionOutOfBox(f"{alpha} has entries at or past position {n}")
    alpha = (alpha + (0,) * n)[: n - 1]
    if any(alpha[i] > n - 1 - i for i in range(n - 1)):
        raise CompositionOutOfBox(f"{alpha} is not bounded by the staircase of rank {n}")
    m = n - 1
    return determinant(
        [[q_complete(alpha[i] - i + j, i + 1) for j in range(m)] for i in range(m)]
    )


def quantize_monomial_route(f: Poly, n: int) -> Poly:
    """Quantization by direct monomial substitution: replace each x^alpha in f
    by the determinant x~^alpha.  Agrees with quantize() but exercises the
    h~-determinant machinery instead of the divided-difference chain, which
    makes it the right ingredient for corruption-sensitive checks."""
    out = Poly()
    for mono, c in f.terms.items():
        alpha = [0] * max(n - 1, 0)
        it = iter(mono)
        for code_, e in zip(it, it):
            fam, idx = vsplit(code_)
            if fam != X:
                raise ForeignVariables(f"monomial route expects x variables only")
            if idx > n - 1 or e > n - 1:
                raise CompositionOutOfBox(f"x{idx}^{e} is outside the rank-{n} staircase")
            alpha[idx - 1] = e
        out = out + c * q_monomial(tuple(alpha), n)
    return out


def q_bjs(w: Perm, n: int | None = None) -> Poly:
    """Billey-Jockusch-Stanley-style sum of quantized monomials over all
    reduced words and their compatible sequences."""
    w = perms.check_perm(w)
    if n is None:
        n = len(w)
    out = Poly()
    for word in perms.reduced_words(w):
        for b in perms.compatible_sequences(word):
            alpha = [0] * n
            for letter in b:
                alpha[letter - 1] += 1
            out = out + q_monomial(tuple(alpha), n)
    return out


def q_flagged(lam, mu=None, kind: str = "row", xflags=(), yflags=()) -> Poly:
    """Flagged quantum Schur determinants.

    kind="row":    det(h~_{lam_i - mu_j - i + j}(X_{xflags_i}))
    kind="column": det(e~_{lam'_i - mu'_j - i + j}(X_{xflags_j})), size >= lam_1
    kind="multi":  det(h~_{lam_i - mu_j - i + j}(X_{xflags_i} - Y_{yflags_j}))
    """
    lam = perms.check_partition(lam)
    mu = perms.check_partition(mu or ())
    if kind == "row":
        perms.check_flags(lam, xflags)
        m = len(lam)
        mup = mu + (0,) * (m - len(mu))
        return determinant(
            [
                [q_complete(lam[i] - mup[j] - i + j, xflags[i]) for j in range(m)]
                for i in range(m)
            ]
        )
    if kind == "column":
        lamc = perms.conjugate(lam)
        muc = perms.conjugate(mu)
        m = len(xflags)
        if m < (lam[0] if lam else 0):
            raise ShapeOutOfBox(f"need at least {lam[0]} column flags, got {m}")
        lp = lamc + (0,) * (m - len(lamc))
        mp = muc + (0,) * (m - len(muc))
        return determinant(
            [
                [q_elementary(lp[i] - mp[j] - i + j, xflags[j]) for j in range(m)]
                for i in range(m)
            ]
        )
    if kind == "multi":
        perms.check_flags(lam, xflags)
        m = len(lam)
        if len(yflags) != m:
            raise ShapeOutOfBox(f"{m} y flags required, got {len(yflags)}")
        mup = mu + (0,) * (m - len(mu))
        return determinant(
            [
                [
                    q_xy_complete(lam[i] - mup[j] - i + j, xflags[i], yflags[j])
                    for j in range(m)
                ]
                for i in range(m)
            ]
        )
    raise ValueError(f"unknown kind {kind!r}")


def q_multi_rowdiff(lam, rows, mu=None) -> Poly:
    """det(h~_{lam_i - mu_j - i + j}(X_{k_i} - Y_{l_i})) with one difference
    alphabet per row, rows = [(k_1, l_1), ...]."""
    lam = perms.check_partition(lam)
    m = len(lam)
    if len(rows) != m:
        raise ShapeOutOfBox(f"{m} rows required, got {len(rows)}")
    mup = perms.check_partition(mu or ()) + (0,) * m
    return determinant(
        [
            [
                q_xy_complete(lam[i] - mup[j] - i + j, rows[i][0], rows[i][1])
                for j in range(m)
            ]
            for i in range(m)
        ]
    )


def q_rv_double(
    w: Perm, n: int | None = None, reading: str = "straight", tie: str = "max"
) -> Poly:
    """Determinant formula for S~_w(x,y), w restricted vexillary.

    Row i carries the difference alphabet X_{theta_i} - Y_{thetainv_{g(i)}}
    with g(i) = lam_i (reading="straight", the default, consistent with the
    dominant specialization) or g(i) = min(lam'_i, len(thetainv))
    (reading="clamped").
    """
    w = perms.check_perm(w)
    if not perms.is_restricted_vexillary(w):
        raise NotRestrictedVexillary(f"{w} contains one of 2143, 2413, 2431")
    if n is not None and len(w) > n:
        raise RankMismatch(f"{w} does not fit in rank {n}")
    lam = perms.shape(w)
    theta = perms.flag_theta(w, tie=tie)
    thetainv = perms.flag_theta(perms.inverse(w), tie=tie)
    lamc = perms.conjugate(lam)
    rows = []
    for i in range(len(lam)):
        if reading == "straight":
            yf = thetainv[lam[i] - 1]
        elif reading == "clamped":
            gi = min(lamc[i] if i < len(lamc) else 0, len(thetainv))
            yf = thetainv[gi - 1] if gi else 0
        else:
            raise ValueError(f"unknown reading {reading!r}")
        rows.append((theta[i], yf))
    return q_multi_rowdiff(lam, rows)


def q_dominant_double(w: Perm) -> Poly:
    """det(h~_{lam_i - i + j}(X_i - Y_{lam_i})) for dominant w (shape lam)."""
    lam = perms.shape(w)
    return q_multi_rowdiff(lam, [(i + 1, lam[i]) for i in range(len(lam))])


def q_grassmannian_double(w: Perm, n: int | None = None, tie: str = "max") -> Poly:
    """det(e~_{lam'_i - i + j}(X_{r-1+j} - Y_{thetainv_i})) for Grassmannian w."""
    w = perms.check_perm(w)
    if not perms.is_grassmannian(w):
        raise NotGrassmannian(f"{w} has more than one descent")
    if n is None:
        n = len(w)
    elif len(w) > n:
        raise RankMismatch(f"{w} does not fit in rank {n}")
    r = perms.grassmannian_descent(w)
    lam = perms.shape(w)
    thetainv = perms.flag_theta(perms.inverse(w), tie=tie)
    m = n - r
    lamc = perms.conjugate(lam) + (0,) * m
    rowflags = [thetainv[i] if i < len(thetainv) else 0 for i in range(m)]
    return determinant(
        [
            [q_xy_elementary(lamc[i] - i + j, r + j, rowflags[i]) for j in range(m)]
            for i in range(m)
        ]
    )


def q_factorial_schur(lam, r: int, n: int) -> Poly:
    """Quantum factorial Schur s~_lam(X_r || a): the double quantum Schubert
    polynomial of the Grassmannian permutation of shape lam (second alphabet
    kept in the y slots; relabel for display)."""
    lam = perms.check_partition(lam)
    if not perms.fits_box(lam, r, n - r):
        raise ShapeOutOfBox(f"{lam} does not fit in a {r}x{n - r} box")
    return q_double_schubert(perms.grassmannian_perm(lam, r, n), n)


def stable_approx(w: Perm, m: int) -> Poly:
    """S~_{1^m x w} at ambient rank m + |w| (the stable approximation)."""
    return q_schubert(perms.pad_embed(m, perms.check_perm(w)))


def coeff_window(p: Poly, x_max: int, q_max: int) -> Poly:
    """Terms supported on x_1..x_{x_max} and q_1..q_{q_max} only."""
    return p.drop_vars(
        lambda fam, idx: (fam == X and idx > x_max) or (fam == Q and idx > q_max)
    )
