"""Exact multivariate polynomials over the integers.

Variables come in indexed families: x1, x2, ... (the main alphabet),
y1, y2, ... (the second alphabet), q1, q2, ... (the deformation parameters)
and a1, a2, ... (an auxiliary alphabet used by some identities and by the
``--alphabet`` display option).  Degrees are weighted: x, y and a count 1,
each q counts 2, so the quantum elementary polynomials stay homogeneous.

Internally a polynomial is a dict from monomials to nonzero ints, with the
heavy dict/tuple work delegated to the selected kernel (see _kernels).
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence, Union

from ._kernels import (
    KERNEL,
    mono_mul,
    padd,
    pdivdiff,
    plinear_div,
    pmul,
    pscale,
    pswap,
    psub,
)
from .errors import NonSquare, NotDivisible

X, Y, Q, A = 0, 1, 2, 3
_LETTERS = "xyqa"
_FAMILY_OF = {letter: fam for fam, letter in enumerate(_LETTERS)}
_WEIGHT = (1, 1, 2, 1)

_SHIFT = 20
_MASK = (1 << _SHIFT) - 1

# factors inside a printed monomial lead with the deformation parameters,
# matching the usual way these polynomials are written (q1*x1, not x1*q1)
_PRINT_RANK = {Q: 0, X: 1, Y: 2, A: 3}


def _print_pairs(m: tuple) -> list[tuple[int, int, int]]:
    pairs = [(vsplit(m[i]), m[i + 1]) for i in range(0, len(m), 2)]
    pairs.sort(key=lambda it: (_PRINT_RANK[it[0][0]], it[0][1]))
    return [(fam, idx, e) for (fam, idx), e in pairs]


def vcode(family: int, index: int) -> int:
    """Pack a (family, index) pair into a single kernel variable code."""
    if index < 1:
        raise ValueError(f"variable index must be >= 1, got {index}")
    return (family << _SHIFT) | index


def vsplit(code: int) -> tuple[int, int]:
    return code >> _SHIFT, code & _MASK


def _wdeg(mono: tuple) -> int:
    d = 0
    for i in range(0, len(mono), 2):
        d += _WEIGHT[mono[i] >> _SHIFT] * mono[i + 1]
    return d


class Poly:
    """Immutable-by-convention wrapper over a kernel polynomial dict."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = terms or {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def const(c: int) -> "Poly":
        return Poly({(): c} if c else {})

    @staticmethod
    def variable(family: int, index: int) -> "Poly":
        return Poly({(vcode(family, index), 1): 1})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        return Poly(padd(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            other = Poly.const(other)
        return Poly(psub(self.terms, other.terms))

    def __rsub__(self, other: int) -> "Poly":
        return Poly.const(other) - self

    def __neg__(self) -> "Poly":
        return Poly(pscale(self.terms, -1))

    def __mul__(self, other: Union["Poly", int]) -> "Poly":
        if isinstance(other, int):
            return Poly(pscale(self.terms, other))
        return Poly(pmul(self.terms, other.terms))

    def __rmul__(self, other: int) -> "Poly":
        return Poly(pscale(self.terms, other))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.terms == Poly.const(other).terms
        if isinstance(other, Poly):
            return self.terms == other.terms
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # -- inspection --------------------------------------------------------

    def coeff(self, mono: tuple) -> int:
        return self.terms.get(mono, 0)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def variables(self) -> list[tuple[int, int]]:
        """Sorted list of (family, index) pairs occurring in the polynomial."""
        seen = set()
        for m in self.terms:
            for i in range(0, len(m), 2):
                seen.add(m[i])
        return [vsplit(c) for c in sorted(seen)]

    def degree(self) -> int:
        """Largest weighted total degree (0 for the zero polynomial)."""
        return max((_wdeg(m) for m in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({_wdeg(m) for m in self.terms}) <= 1

    # -- substitution and specialization ------------------------------------

    def subs(self, mapping: Mapping[tuple[int, int], Union["Poly", int]]) -> "Poly":
        """Simultaneously substitute polynomials for variables.

        Keys are (family, index) pairs; values may be Poly or int.
        """
        repl = {}
        for (fam, idx), val in mapping.items():
            repl[vcode(fam, idx)] = val if isinstance(val, Poly) else Poly.const(val)
        out: dict = {}
        powcache: dict = {}
        for m, c in self.terms.items():
            kept = []
            piece: Poly | None = None
            for i in range(0, len(m), 2):
                code, e = m[i], m[i + 1]
                if code in repl:
                    key = (code, e)
                    p = powcache.get(key)
                    if p is None:
                        p = repl[code] ** e
                        powcache[key] = p
                    piece = p if piece is None else piece * p
                else:
                    kept.append(code)
                    kept.append(e)
            base = {tuple(kept): c}
            out = padd(out, base if piece is None else pmul(base, piece.terms))
        return Poly(out)

    def drop_vars(self, pred: Callable[[int, int], bool]) -> "Poly":
        """Set to zero every variable with pred(family, index) true.

        Terms containing such a variable are dropped wholesale.
        """
        out = {}
        for m, c in self.terms.items():
            if any(pred(*vsplit(m[i])) for i in range(0, len(m), 2)):
                continue
            out[m] = c
        return Poly(out)

    def restrict(self, m: int) -> "Poly":
        """Project to the rank-m ring: x_j -> 0 for j > m, q_j -> 0 for j >= m.

        The y and a alphabets pass through untouched.
        """
        return self.drop_vars(
            lambda fam, idx: (fam == X and idx > m) or (fam == Q and idx >= m)
        )

    def rename_family(self, src: int, dst: int) -> "Poly":
        """Relabel every src-family variable as the dst-family variable of the
        same index; the dst family must not already occur."""
        out = {}
        for m, c in self.terms.items():
            pairs = []
            for i in range(0, len(m), 2):
                fam, idx = vsplit(m[i])
                if fam == dst:
                    raise ValueError("rename target family already present")
                pairs.append((vcode(dst if fam == src else fam, idx), m[i + 1]))
            pairs.sort()
            mm = []
            for code, e in pairs:
                mm.append(code)
                mm.append(e)
            out[tuple(mm)] = c
        return Poly(out)

    def negate_family(self, family: int) -> "Poly":
        """Substitute v -> -v for every variable of the given family."""
        out = {}
        for m, c in self.terms.items():
            tot = sum(m[i + 1] for i in range(0, len(m), 2) if m[i] >> _SHIFT == family)
            out[m] = -c if tot & 1 else c
        return Poly(out)

    # -- operators ---------------------------------------------------------

    def swap_adjacent(self, i: int, family: int = X) -> "Poly":
        """Exchange v_i and v_{i+1} in the given family."""
        return Poly(pswap(self.terms, vcode(family, i), vcode(family, i + 1)))

    def divided_diff(self, i: int, family: int = X) -> "Poly":
        """(f - s_i f) / (v_i - v_{i+1}) acting on the given family."""
        return Poly(pdivdiff(self.terms, vcode(family, i), vcode(family, i + 1)))

    def exact_linear_div(self, i: int, family: int = X) -> "Poly":
        """Exact quotient by (v_i - v_{i+1}); NotDivisible on remainder."""
        try:
            return Poly(plinear_div(self.terms, vcode(family, i), vcode(family, i + 1)))
        except ValueError as exc:
            raise NotDivisible(str(exc)) from None

    def q_partial(self, i: int) -> "Poly":
        """Formal partial derivative with respect to q_i."""
        code = vcode(Q, i)
        out: dict = {}
        for m, c in self.terms.items():
            for k in range(0, len(m), 2):
                if m[k] == code:
                    e = m[k + 1]
                    if e == 1:
                        mm = m[:k] + m[k + 2 :]
                    else:
                        mm = m[:k] + (code, e - 1) + m[k + 2 :]
                    s = out.get(mm, 0) + c * e
                    if s:
                        out[mm] = s
                    elif mm in out:
                        del out[mm]
                    break
        return Poly(out)

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, int]]:
        """Terms in display order: weighted degree descending, then lex."""

        def key(item):
            m = item[0]
            return (-_wdeg(m), tuple((m[i], -m[i + 1]) for i in range(0, len(m), 2)))

        return sorted(self.terms.items(), key=key)

    def text(self, letters: Mapping[int, str] | None = None) -> str:
        """Canonical textual form, e.g. ``3*x1^2*x2 - q1*x1 + 7``."""
        if not self.terms:
            return "0"
        names = list(_LETTERS)
        if letters:
            for fam, letter in letters.items():
                names[fam] = letter
        chunks: list[str] = []
        for m, c in self.sorted_terms():
            factors = []
            for fam, idx, e in _print_pairs(m):
                v = f"{names[fam]}{idx}"
                factors.append(v if e == 1 else f"{v}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f" + {body}" if c > 0 else f" - {body}")
        return "".join(chunks)

    def __str__(self) -> str:
        return self.text()

    def __repr__(self) -> str:
        return f"Poly({self.text()})"

    def as_json_obj(self, letters: Mapping[int, str] | None = None) -> dict:
        """JSON-friendly form: canonical text plus an explicit term list."""
        names = list(_LETTERS)
        if letters:
            for fam, letter in letters.items():
                names[fam] = letter
        terms = []
        for m, c in self.sorted_terms():
            mono = [[names[fam], idx, e] for fam, idx, e in _print_pairs(m)]
            terms.append([mono, c])
        return {"text": self.text(letters), "terms": terms}


ZERO = Poly()
ONE = Poly.const(1)


def x(i: int) -> Poly:
    return Poly.variable(X, i)


def y(i: int) -> Poly:
    return Poly.variable(Y, i)


def q(i: int) -> Poly:
    return Poly.variable(Q, i)


def a(i: int) -> Poly:
    return Poly.variable(A, i)


def monomial(pairs: Iterable[tuple[int, int, int]], c: int = 1) -> Poly:
    """Build c * prod v_{family,index}^exp from (family, index, exp) triples."""
    m = ()
    for fam, idx, e in pairs:
        m = mono_mul(m, (vcode(fam, idx), e))
    return Poly({m: c} if c else {})


# -- determinants ------------------------------------------------------------


def determinant(rows: Sequence[Sequence[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials (empty matrix: 1).

    Laplace expansion along rows, memoized on the set of unused columns —
    exponentially better than naive expansion on the structured matrices
    here, and exact since everything stays in Z[x,y,q].
    """
    n = len(rows)
    if n == 0:
        return Poly.const(1)
    if any(len(r) != n for r in rows):
        raise NonSquare(f"matrix is not square: {n} rows, {[len(r) for r in rows]} columns")
    full = (1 << n) - 1
    # minor(mask) = det of the submatrix on rows popcount..n-1, columns in mask
    cache: dict[int, dict] = {0: {(): 1}}

    def minor(mask: int) -> dict:
        got = cache.get(mask)
        if got is not None:
            return got
        i = n - bin(mask).count("1")
        acc: dict = {}
        sign = 1
        for j in range(n):
            bit = 1 << j
            if not mask & bit:
                continue
            entry = rows[i][j].terms
            if entry:
                sub = minor(mask & ~bit)
                if sub:
                    acc = padd(acc, pscale(pmul(entry, sub), sign))
            sign = -sign
        cache[mask] = acc
        return acc

    return Poly(minor(full))


# -- parsing -----------------------------------------------------------------


def _tokenize(s: str) -> list:
    toks: list = []
    i, n = 0, len(s)
    while i < n:
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and s[j].isdigit():
                j += 1
            toks.append(("num", int(s[i:j])))
            i = j
        elif ch in _FAMILY_OF:
            j = i + 1
            while j < n and s[j].isdigit():
                j += 1
            if j == i + 1:
                raise ValueError(f"variable letter {ch!r} needs an index (position {i})")
            idx = int(s[i + 1 : j])
            toks.append(("var", (_FAMILY_OF[ch], idx)))
            i = j
        elif ch == "*":
            if i + 1 < n and s[i + 1] == "*":
                toks.append(("^", None))
                i += 2
            else:
                toks.append(("*", None))
                i += 1
        elif ch in "+-^()":
            toks.append((ch, None))
            i += 1
        else:
            raise ValueError(f"unexpected character {ch!r} at position {i}")
    return toks


def parse(s: str) -> Poly:
    """Parse the canonical polynomial grammar.

    Terms are integer-coefficient products of x<k>, y<k>, q<k>, a<k> joined
    by ``*``, exponents via ``^`` (or ``**``), combined with ``+``/``-``;
    parentheses are accepted.  Round-trips with Poly.text().
    """
    toks = _tokenize(s)
    pos = 0

    def peek():
        return toks[pos][0] if pos < len(toks) else None

    def take():
        nonlocal pos
        t = toks[pos]
        pos += 1
        return t

    def parse_atom() -> Poly:
        nonlocal pos
        kind = peek()
        if kind == "num":
            return Poly.const(take()[1])
        if kind == "var":
            fam, idx = take()[1]
            if idx < 1:
                raise ValueError("variable indices start at 1")
            return Poly.variable(fam, idx)
        if kind == "(":
            take()
            p = parse_expr()
            if peek() != ")":
                raise ValueError("unbalanced parenthesis")
            take()
            return p
        if kind == "-":
            take()
            return -parse_atom()
        raise ValueError("expected a number, variable or parenthesized expression")

    def parse_factor() -> Poly:
        p = parse_atom()
        if peek() == "^":
            take()
            if peek() != "num":
                raise ValueError("exponent must be a literal integer")
            return p ** take()[1]
        return p

    def parse_term() -> Poly:
        p = parse_factor()
        while True:
            if peek() == "*":
                take()
                p = p * parse_factor()
            elif peek() in ("var", "num", "("):
                # implicit product, e.g. "3x1" or "2 q1"
                p = p * parse_factor()
            else:
                return p

    def parse_expr() -> Poly:
        if peek() == "-":
            take()
            p = -parse_term()
        else:
            p = parse_term()
        while peek() in ("+", "-"):
            op = take()[0]
            t = parse_term()
            p = p + t if op == "+" else p - t
        return p

    out = parse_expr()
    if pos != len(toks):
        raise ValueError(f"trailing input from token {pos}")
    return out


__all__ = [
    "A",
    "KERNEL",
    "ONE",
    "Poly",
    "Q",
    "X",
    "Y",
    "ZERO",
    "a",
    "determinant",
    "monomial",
    "parse",
    "q",
    "vcode",
    "vsplit",
    "x",
    "y",
]
