"""Sparse polynomials over F_p in the entries ``y_ij`` of a ``t x n`` matrix.

Monomials are packed into Python ints, one byte per variable with variable 0
in the most significant byte.  Multiplying monomials is then integer
addition, and integer order on keys is lexicographic order on the row-major
exponent sequence.  Exponents must stay below 256.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from sohilbert import _accel
from sohilbert.symdet import RingSpec

MAX_EXPONENT = 255


class PolyError(ValueError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int = 32003

    def __post_init__(self):
        if self.p < 3 or not _is_prime(self.p) or self.p > _accel.MAX_PRIME:
            raise PolyError(f"modulus must be an odd prime below 2**31, got {self.p}")

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)


DEFAULT_FIELD = PrimeField()


# --- monomials ----------------------------------------------------------------


def encode(exps) -> int:
    """Pack an exponent sequence into a monomial key."""
    if any(e < 0 or e > MAX_EXPONENT for e in exps):
        raise PolyError("exponent out of range")
    return int.from_bytes(bytes(exps), "big")


def decode(key: int, nvars: int) -> tuple[int, ...]:
    return tuple(key.to_bytes(nvars, "big"))


def var_key(v: int, nvars: int) -> int:
    return 1 << (8 * (nvars - 1 - v))


def var_index(spec: RingSpec, i: int, j: int) -> int:
    """Index of ``y_ij`` (1-based row i, column j), row-major."""
    return (i - 1) * spec.n + (j - 1)


# --- polynomials --------------------------------------------------------------


class PolyFp:
    """Immutable sparse polynomial: ``{monomial key: coefficient in [1, p)}``."""

    __slots__ = ("terms", "nvars", "p", "_maxdeg", "_hdeg")

    def __init__(self, terms, nvars: int, p: int, *, _clean: bool = False, _maxdeg=None):
        if _clean:
            self.terms = terms
        else:
            self.terms = {}
            for k, c in terms.items():
                c %= p
                if c:
                    self.terms[k] = c
        self.nvars = nvars
        self.p = p
        self._maxdeg = _maxdeg
        self._hdeg = False

    # construction
    @classmethod
    def zero(cls, nvars: int, p: int) -> PolyFp:
        return cls({}, nvars, p, _clean=True, _maxdeg=0)

    @classmethod
    def constant(cls, c: int, nvars: int, p: int) -> PolyFp:
        return cls({0: c}, nvars, p, _maxdeg=0)

    @classmethod
    def var(cls, v: int, nvars: int, p: int) -> PolyFp:
        return cls({var_key(v, nvars): 1}, nvars, p, _maxdeg=1)

    @classmethod
    def from_exponents(cls, terms: dict, nvars: int, p: int) -> PolyFp:
        out: dict[int, int] = {}
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise PolyError("exponent vector has wrong length")
            k = encode(exps)
            out[k] = out.get(k, 0) + c
        return cls(out, nvars, p)

    # inspection
    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self):
        """``(exponent tuple, coefficient)`` pairs in lexicographic order."""
        for k in sorted(self.terms, reverse=True):
            yield decode(k, self.nvars), self.terms[k]

    def total_degrees(self):
        return {sum(k.to_bytes(self.nvars, "big")) for k in self.terms}

    @property
    def max_degree(self) -> int:
        if self._maxdeg is None:
            self._maxdeg = max(self.total_degrees(), default=0)
        return self._maxdeg

    @property
    def homogeneous_degree(self) -> int | None:
        """Common total degree of all terms; None if inhomogeneous or zero."""
        if self._hdeg is False:
            degs = self.total_degrees()
            self._hdeg = degs.pop() if len(degs) == 1 else None
        return self._hdeg

    def multidegrees(self, groups) -> set[tuple[int, ...]]:
        """Degree vectors for a grading that puts variable v in group groups[v]."""
        ng = max(groups) + 1
        out = set()
        for k in self.terms:
            vec = [0] * ng
            for v, e in enumerate(k.to_bytes(self.nvars, "big")):
                if e:
                    vec[groups[v]] += e
            out.add(tuple(vec))
        return out

    # arithmetic
    def _check(self, other: PolyFp):
        if self.nvars != other.nvars or self.p != other.p:
            raise PolyError("polynomials live in different rings")

    def __eq__(self, other):
        if not isinstance(other, PolyFp):
            return NotImplemented
        return self.nvars == other.nvars and self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, self.p, frozenset(self.terms.items())))

    def __add__(self, other: PolyFp) -> PolyFp:
        self._check(other)
        out = dict(self.terms)
        p = self.p
        for k, c in other.terms.items():
            v = (out.get(k, 0) + c) % p
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return PolyFp(out, self.nvars, p, _clean=True, _maxdeg=max(self.max_degree, other.max_degree))

    def __neg__(self) -> PolyFp:
        p = self.p
        return PolyFp({k: p - c for k, c in self.terms.items()}, self.nvars, p, _clean=True, _maxdeg=self._maxdeg)

    def __sub__(self, other: PolyFp) -> PolyFp:
        return self + (-other)

    def scale(self, c: int) -> PolyFp:
        c %= self.p
        if c == 0:
            return PolyFp.zero(self.nvars, self.p)
        p = self.p
        return PolyFp({k: v * c % p for k, v in self.terms.items()}, self.nvars, p, _clean=True, _maxdeg=self._maxdeg)

    def __mul__(self, other: PolyFp) -> PolyFp:
        self._check(other)
        if self.max_degree + other.max_degree > MAX_EXPONENT:
            raise PolyError("product degree exceeds the packed-exponent limit")
        p = self.p
        out: dict[int, int] = {}
        get = out.get
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                out[k] = (get(k, 0) + c1 * c2) % p
        out = {k: c for k, c in out.items() if c}
        return PolyFp(out, self.nvars, p, _clean=True, _maxdeg=self.max_degree + other.max_degree)

    def __pow__(self, e: int) -> PolyFp:
        result = PolyFp.constant(1, self.nvars, self.p)
        for _ in range(e):
            result = result * self
        return result

    def evaluate(self, point) -> int:
        p = self.p
        point = [int(x) % p for x in point]
        total = 0
        for k, c in self.terms.items():
            val = c
            for v, e in enumerate(k.to_bytes(self.nvars, "big")):
                if e:
                    val = val * pow(point[v], e, p) % p
            total += val
        return total % p

    def diff(self, v: int) -> PolyFp:
        w = var_key(v, self.nvars)
        shift = 8 * (self.nvars - 1 - v)
        out = {}
        for k, c in self.terms.items():
            e = (k >> shift) & 0xFF
            if e:
                out[k - w] = c * e
        return PolyFp(out, self.nvars, self.p)

    def __repr__(self):
        return f"PolyFp({self.to_str()}, p={self.p})"

    def to_str(self, spec: RingSpec | None = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.monomials():
            factors = []
            for v, e in enumerate(exps):
                if not e:
                    continue
                name = f"y_{v // spec.n + 1}{v % spec.n + 1}" if spec else f"x{v}"
                factors.append(name if e == 1 else f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            else:
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)


def y(spec: RingSpec, i: int, j: int, field: PrimeField = DEFAULT_FIELD) -> PolyFp:
    return PolyFp.var(var_index(spec, i, j), spec.t * spec.n, field.p)


# --- matrices -----------------------------------------------------------------


class MatFp:
    """Dense matrix over F_p, entries kept in ``[0, p)``."""

    def __init__(self, entries, p: int):
        a = np.array(entries, dtype=np.int64)
        if a.ndim != 2:
            a = a.reshape(len(entries), -1) if a.size else np.zeros((len(entries), 0), dtype=np.int64)
        self.a = a % p
        self.a.setflags(write=False)
        self.p = p

    @classmethod
    def identity(cls, n: int, p: int) -> MatFp:
        return cls(np.eye(n, dtype=np.int64), p)

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    def __getitem__(self, ij):
        return int(self.a[ij])

    def tolist(self):
        return self.a.tolist()

    def __eq__(self, other):
        if not isinstance(other, MatFp):
            return NotImplemented
        return self.p == other.p and np.array_equal(self.a, other.a)

    def __repr__(self):
        return f"MatFp({self.tolist()}, p={self.p})"

    @property
    def T(self) -> MatFp:
        return MatFp(self.a.T, self.p)

    def __matmul__(self, other: MatFp) -> MatFp:
        if self.cols != other.rows:
            raise PolyError("dimension mismatch in matrix product")
        # python ints: avoid int64 overflow in the accumulated dot products
        out = (self.a.astype(object) @ other.a.astype(object)) % self.p
        return MatFp(out.astype(np.int64), self.p)

    def __add__(self, other: MatFp) -> MatFp:
        return MatFp(self.a + other.a, self.p)

    def __sub__(self, other: MatFp) -> MatFp:
        return MatFp(self.a - other.a, self.p)

    def __neg__(self) -> MatFp:
        return MatFp(-self.a, self.p)

    def rank(self) -> int:
        return _accel.rank_mod_p(self.a, self.p)

    def det(self) -> int:
        return _accel.det_mod_p(self.a, self.p)

    def inverse(self) -> MatFp:
        n = self.rows
        if n != self.cols:
            raise PolyError("inverse of a non-square matrix")
        p = self.p
        aug = [list(map(int, row)) + [int(i == j) for j in range(n)] for i, row in enumerate(self.a)]
        for c in range(n):
            piv = next((r for r in range(c, n) if aug[r][c]), None)
            if piv is None:
                raise PolyError("matrix is singular")
            aug[c], aug[piv] = aug[piv], aug[c]
            inv = pow(aug[c][c], p - 2, p)
            aug[c] = [x * inv % p for x in aug[c]]
            for r in range(n):
                if r != c and aug[r][c]:
                    f = aug[r][c]
                    aug[r] = [(x - f * y_) % p for x, y_ in zip(aug[r], aug[c])]
        return MatFp([row[n:] for row in aug], p)

    def is_orthogonal(self) -> bool:
        return self.rows == self.cols and self.T @ self == MatFp.identity(self.rows, self.p)


def det_bareiss(rows) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    M = [[int(x) for x in r] for r in rows]
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


# --- determinants of polynomial matrices ----------------------------------------


def maximal_minors(entries, nvars: int, p: int) -> dict[tuple[int, ...], PolyFp]:
    """All maximal minors of an ``r x c`` matrix of polynomials (r <= c).

    Laplace expansion along the top row, memoised on (row, column subset), so
    all ``C(c, r)`` minors share their sub-minors.  Keys are 0-based column
    subsets.
    """
    r = len(entries)
    c = len(entries[0]) if r else 0
    if r > c:
        raise PolyError("more rows than columns")
    memo: dict[tuple[int, tuple[int, ...]], PolyFp] = {}

    def det(i: int, cols: tuple[int, ...]) -> PolyFp:
        if i == r:
            return PolyFp.constant(1, nvars, p)
        key = (i, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        acc = PolyFp.zero(nvars, p)
        for idx, j in enumerate(cols):
            a = entries[i][j]
            if a.is_zero():
                continue
            term = a * det(i + 1, cols[:idx] + cols[idx + 1 :])
            acc = acc - term if idx % 2 else acc + term
        memo[key] = acc
        return acc

    return {cols: det(0, cols) for cols in itertools.combinations(range(c), r)}


def det_poly(entries, nvars: int, p: int) -> PolyFp:
    if len(entries) != len(entries[0]):
        raise PolyError("determinant of a non-square matrix")
    return maximal_minors(entries, nvars, p)[tuple(range(len(entries)))]


def variable_matrix(spec: RingSpec, field: PrimeField = DEFAULT_FIELD):
    nv = spec.t * spec.n
    return [[PolyFp.var(i * spec.n + j, nv, field.p) for j in range(spec.n)] for i in range(spec.t)]


# --- generator sets -------------------------------------------------------------


def gram_generators(spec: RingSpec, field: PrimeField = DEFAULT_FIELD) -> list[PolyFp]:
    """Entries ``(Y^T Y)_{jk}`` for ``j <= k``, in lexicographic (j, k) order."""
    Y = variable_matrix(spec, field)
    nv = spec.t * spec.n
    out = []
    for j, k in itertools.combinations_with_replacement(range(spec.n), 2):
        acc = PolyFp.zero(nv, field.p)
        for i in range(spec.t):
            acc = acc + Y[i][j] * Y[i][k]
        out.append(acc)
    return out


def minor_generators(spec: RingSpec, field: PrimeField = DEFAULT_FIELD) -> list[PolyFp]:
    """The ``C(n, t)`` maximal minors of Y, column subsets in lexicographic order."""
    minors = maximal_minors(variable_matrix(spec, field), spec.t * spec.n, field.p)
    return [minors[cols] for cols in sorted(minors)]


def delta(t: int, field: PrimeField = DEFAULT_FIELD, n: int | None = None) -> PolyFp:
    """Determinant of the first t columns of Y (in the ring of a t x n matrix)."""
    spec = RingSpec(t, n if n is not None else t, check=False)
    Y = variable_matrix(spec, field)
    return det_poly([row[:t] for row in Y], t * spec.n, field.p)


def first_rows_of_gram(spec: RingSpec, field: PrimeField = DEFAULT_FIELD):
    """The ``t x n`` matrix ``(Y')^T Y`` formed by the first t rows of ``Y^T Y``."""
    Y = variable_matrix(spec, field)
    nv = spec.t * spec.n
    rows = []
    for a in range(spec.t):
        row = []
        for j in range(spec.n):
            acc = PolyFp.zero(nv, field.p)
            for i in range(spec.t):
                acc = acc + Y[i][a] * Y[i][j]
            row.append(acc)
        rows.append(row)
    return rows


def p_generators(spec: RingSpec, field: PrimeField = DEFAULT_FIELD) -> list[PolyFp]:
    """Maximal minors of the first t rows of ``Y^T Y``.

    Each one is checked to equal ``delta * (matching maximal minor of Y)``.
    """
    nv = spec.t * spec.n
    gens = maximal_minors(first_rows_of_gram(spec, field), nv, field.p)
    ymin = maximal_minors(variable_matrix(spec, field), nv, field.p)
    d = delta(spec.t, field, spec.n)
    out = []
    for cols in sorted(gens):
        g = gens[cols]
        if g != d * ymin[cols]:
            raise PolyError(f"Cauchy-Binet factorization failed for columns {cols}")
        out.append(g)
    return out


def delta_identity_check(t: int, field: PrimeField = DEFAULT_FIELD) -> bool:
    """``det(Y'^T Y') == det(Y')**2`` for a t x t matrix of indeterminates."""
    spec = RingSpec(t, t, check=False)
    nv = t * t
    Y = variable_matrix(spec, field)
    gram = [[PolyFp.zero(nv, field.p) for _ in range(t)] for _ in range(t)]
    for a in range(t):
        for b in range(t):
            acc = PolyFp.zero(nv, field.p)
            for i in range(t):
                acc = acc + Y[i][a] * Y[i][b]
            gram[a][b] = acc
    d = det_poly(Y, nv, field.p)
    return det_poly(gram, nv, field.p) == d * d


# --- the linear action Y -> MY ---------------------------------------------------


def substitute_direct(poly: PolyFp, M: MatFp, spec: RingSpec) -> PolyFp:
    """``poly(MY)`` by expanding every term; works for singular M too."""
    _check_action(poly, M, spec)
    t, n, p, nv = spec.t, spec.n, poly.p, poly.nvars
    images = {}
    for i in range(t):
        for j in range(n):
            images[i * n + j] = PolyFp(
                {var_key(k * n + j, nv): M[i, k] for k in range(t)}, nv, p
            )
    acc = PolyFp.zero(nv, p)
    for exps, c in poly.monomials():
        term = PolyFp.constant(c, nv, p)
        for v, e in enumerate(exps):
            for _ in range(e):
                term = term * images[v]
        acc = acc + term
    return acc


def _check_action(poly: PolyFp, M: MatFp, spec: RingSpec):
    if M.rows != spec.t or M.cols != spec.t:
        raise PolyError(f"expected a {spec.t}x{spec.t} matrix, got {M.rows}x{M.cols}")
    if poly.nvars != spec.t * spec.n:
        raise PolyError("polynomial does not live in the ring of this spec")
    if poly.p != M.p:
        raise PolyError("polynomial and matrix over different fields")


def _elementary_factors(M: MatFp):
    """Elementary matrices ``E_1, ..., E_r`` with ``M = E_1 @ ... @ E_r``.

    Factors are ("swap", a, b), ("scale", a, s) and ("add", a, b, f), the
    last meaning row_a += f * row_b.  Returns None for singular M.
    """
    p = M.p
    n = M.rows
    A = [list(map(int, r)) for r in M.a]
    ops = []
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return None
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            ops.append(("swap", c, piv))
        if A[c][c] != 1:
            s = pow(A[c][c], p - 2, p)
            A[c] = [x * s % p for x in A[c]]
            ops.append(("scale", c, s))
        for r in range(n):
            if r != c and A[r][c]:
                f = A[r][c]
                A[r] = [(x - f * y_) % p for x, y_ in zip(A[r], A[c])]
                ops.append(("add", r, c, (-f) % p))
    # ops_k ... ops_1 M = I, so M = inv(ops_1) ... inv(ops_k)
    factors = []
    for op in ops:
        if op[0] == "swap":
            factors.append(op)
        elif op[0] == "scale":
            factors.append(("scale", op[1], pow(op[2], p - 2, p)))
        else:
            factors.append(("add", op[1], op[2], (-op[3]) % p))
    return factors


def _apply_elementary(poly: PolyFp, op, n: int) -> PolyFp:
    nv, p = poly.nvars, poly.p
    if op[0] == "swap":
        _, a, b = op
        out = {}
        for k, c in poly.terms.items():
            ex = bytearray(k.to_bytes(nv, "big"))
            ex[a * n : (a + 1) * n], ex[b * n : (b + 1) * n] = ex[b * n : (b + 1) * n], ex[a * n : (a + 1) * n]
            out[int.from_bytes(ex, "big")] = c
        return PolyFp(out, nv, p, _clean=True, _maxdeg=poly._maxdeg)
    if op[0] == "scale":
        _, a, s = op
        out = {}
        for k, c in poly.terms.items():
            deg = sum(k.to_bytes(nv, "big")[a * n : (a + 1) * n])
            out[k] = c * pow(s, deg, p) % p
        return PolyFp(out, nv, p, _clean=True, _maxdeg=poly._maxdeg)
    _, a, b, f = op
    # y_aj -> y_aj + f * y_bj for every column j; binomial expansion per column
    fpow = [1]
    for _ in range(MAX_EXPONENT):
        fpow.append(fpow[-1] * f % p)
    moves = [var_key(b * n + j, nv) - var_key(a * n + j, nv) for j in range(n)]
    out: dict[int, int] = {}
    get = out.get
    for k, c in poly.terms.items():
        row_a = k.to_bytes(nv, "big")[a * n : (a + 1) * n]
        expansion = [(k, c)]
        for j, e in enumerate(row_a):
            if not e:
                continue
            mv = moves[j]
            expansion = [
                (kk + bexp * mv, cc * comb(e, bexp) * fpow[bexp] % p)
                for kk, cc in expansion
                for bexp in range(e + 1)
            ]
        for kk, cc in expansion:
            out[kk] = (get(kk, 0) + cc) % p
    return PolyFp({k: c for k, c in out.items() if c}, nv, p, _clean=True, _maxdeg=poly._maxdeg)


def substitute_linear(poly: PolyFp, M: MatFp, spec: RingSpec) -> PolyFp:
    """``poly(MY)``: every ``y_ij`` becomes ``sum_k M_ik y_kj``.

    Invertible M is factored into elementary matrices and applied one factor
    at a time, which keeps intermediate expansions small.
    """
    _check_action(poly, M, spec)
    factors = _elementary_factors(M)
    if factors is None:
        return substitute_direct(poly, M, spec)
    # f(E_1 ... E_r Y): substitute E_1 first
    for op in factors:
        poly = _apply_elementary(poly, op, spec.n)
    return poly


# --- orthogonal matrices ----------------------------------------------------------


def cayley_transform(S: MatFp) -> MatFp:
    """``(I - S) @ inverse(I + S)``."""
    eye = MatFp.identity(S.rows, S.p)
    return (eye - S) @ (eye + S).inverse()


def random_skew(t: int, field: PrimeField, rng: np.random.Generator) -> MatFp:
    S = np.zeros((t, t), dtype=np.int64)
    for i in range(t):
        for j in range(i + 1, t):
            v = int(rng.integers(0, field.p))
            S[i, j] = v
            S[j, i] = -v
    return MatFp(S, field.p)


def cayley_so(t: int, field: PrimeField = DEFAULT_FIELD, seed: int = 0) -> MatFp:
    """A pseudo-random element of SO_t(F_p), reproducible from ``seed``."""
    if t < 1:
        raise PolyError("t must be positive")
    rng = np.random.Generator(np.random.Philox(seed))
    eye = MatFp.identity(t, field.p)
    while True:
        S = random_skew(t, field, rng)
        if (eye + S).det() != 0:
            M = cayley_transform(S)
            if not M.is_orthogonal() or M.det() != 1:
                raise PolyError("Cayley transform left SO_t")
            return M


def reflect(M: MatFp) -> MatFp:
    """``diag(-1, 1, ..., 1) @ M``."""
    if not M.is_orthogonal():
        raise PolyError("input is not orthogonal")
    a = np.array(M.a)
    a[0] = -a[0]
    return MatFp(a, M.p)


@dataclass
class InvarianceReport:
    spec: RingSpec
    p: int
    seed: int
    samples: int
    so_fixed: int = 0
    reflection_ok: int = 0
    failures: list = dc_field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures and self.so_fixed == self.samples and self.reflection_ok == self.samples


def invariance_check(spec: RingSpec, field: PrimeField = DEFAULT_FIELD, samples: int = 10, seed: int = 0) -> InvarianceReport:
    """Check Gram entries and maximal minors against sampled SO_t elements.

    Sample ``i`` uses ``cayley_so(t, field, seed + i)``.  Under the sample the
    Gram entries and the minors must be fixed; under its reflection the Gram
    entries are fixed and the minors change sign.
    """
    gram = gram_generators(spec, field)
    minors = minor_generators(spec, field)
    cols = list(itertools.combinations(range(1, spec.n + 1), spec.t))
    gram_names = [f"gram{jk}" for jk in itertools.combinations_with_replacement(range(1, spec.n + 1), 2)]
    minor_names = [f"minor{c}" for c in cols]
    report = InvarianceReport(spec, field.p, seed, samples)
    for i in range(samples):
        s = seed + i
        M = cayley_so(spec.t, field, s)
        R = reflect(M)
        ok_so = ok_ref = True
        for name, g in zip(gram_names, gram):
            if substitute_linear(g, M, spec) != g:
                ok_so = False
                report.failures.append((s, name))
            if substitute_linear(g, R, spec) != g:
                ok_ref = False
                report.failures.append((s, "reflected " + name))
        for name, mu in zip(minor_names, minors):
            if substitute_linear(mu, M, spec) != mu:
                ok_so = False
                report.failures.append((s, name))
            if substitute_linear(mu, R, spec) != -mu:
                ok_ref = False
                report.failures.append((s, "reflected " + name))
        report.so_fixed += ok_so
        report.reflection_ok += ok_ref
    return report
