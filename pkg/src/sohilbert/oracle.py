"""Brute-force graded dimensions of subalgebras of ``F_p[Y]``.

The degree-D piece of the algebra generated by homogeneous polynomials is
spanned by the products of generator multisets of total degree D.  We expand
every such product and take the rank of the coefficient matrix over F_p.

Gram entries and maximal minors are homogeneous for the column grading
(``y_ij`` has degree ``e_j``), so the coefficient matrix is block diagonal
with one block per column multidegree; ranks are computed block by block.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb

import numpy as np

from sohilbert import _accel
from sohilbert.polys import DEFAULT_FIELD, PolyFp, PrimeField, gram_generators, minor_generators
from sohilbert.series import GradingTag, LaurentPoly
from sohilbert.symdet import RingSpec

DENSE_LIMIT = 20000


class OracleError(ValueError):
    pass


class GuardError(OracleError):
    pass


class BudgetError(OracleError):
    pass


class Label(enum.Enum):
    GRAM_ONLY = "GramOnly"
    GRAM_PLUS_MINORS = "GramPlusMinors"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Guard:
    ambient: int = 500_000
    multisets: int = 200_000


DEFAULT_GUARD = Guard()


@dataclass(frozen=True)
class GeneratorSet:
    spec: RingSpec
    generators: tuple[PolyFp, ...]
    degrees: tuple[int, ...]
    label: Label

    def __post_init__(self):
        if len(self.generators) != len(self.degrees):
            raise OracleError("one degree per generator")
        for g, d in zip(self.generators, self.degrees):
            if d < 1 or g.homogeneous_degree != d:
                raise OracleError(f"generator is not homogeneous of degree {d}")


def generator_set(spec: RingSpec, label: Label, field: PrimeField = DEFAULT_FIELD) -> GeneratorSet:
    gens = list(gram_generators(spec, field))
    if label is Label.GRAM_PLUS_MINORS:
        gens += minor_generators(spec, field)
    return GeneratorSet(spec, tuple(gens), tuple(g.homogeneous_degree for g in gens), label)


@dataclass(frozen=True)
class HilbertTable:
    spec: RingSpec
    label: Label
    grading: GradingTag
    values: tuple[tuple[int, int], ...]
    prime: int
    seed: int = 0

    @property
    def dims(self) -> list[int]:
        return [v for _, v in self.values]


def ambient_dimension(nvars: int, D: int) -> int:
    return comb(nvars - 1 + D, nvars - 1) if nvars else int(D == 0)


def _column_degrees(gens: GeneratorSet):
    """Column multidegree of each generator, or None if one is not multihomogeneous."""
    n = gens.spec.n
    groups = [v % n for v in range(gens.spec.t * n)]
    out = []
    for g in gens.generators:
        md = g.multidegrees(groups)
        if len(md) != 1:
            return None
        out.append(md.pop())
    return out


def _block_rank(cols: dict, rows: list, p: int) -> int:
    if not rows:
        return 0
    ncols = len(cols)
    if ncols <= DENSE_LIMIT:
        A = np.zeros((len(rows), ncols), dtype=np.int64)
        for i, (idx, val) in enumerate(rows):
            A[i, idx] = val
        return _accel.rank_mod_p(A, p)
    return _accel.sparse_rank_mod_p([dict(zip(idx.tolist(), val.tolist())) for idx, val in rows], p)


def graded_dimension(gens: GeneratorSet, D: int, field: PrimeField = DEFAULT_FIELD, guard: Guard | None = None) -> int:
    """Dimension of the Y-degree-D piece of the algebra generated by ``gens``."""
    if D < 0:
        raise OracleError("degree must be nonnegative")
    guard = guard or DEFAULT_GUARD
    nv = gens.spec.t * gens.spec.n
    ambient = ambient_dimension(nv, D)
    if ambient > guard.ambient:
        raise GuardError(
            f"ambient dimension C({nv - 1 + D}, {nv - 1}) = {ambient} exceeds guard {guard.ambient}"
        )
    if D == 0:
        return 1
    p = field.p
    if gens.generators and gens.generators[0].p != p:
        raise OracleError("generators were built over a different prime")

    coldeg = _column_degrees(gens)
    ncol = gens.spec.n
    degrees = gens.degrees
    polys = gens.generators
    ngen = len(polys)
    blocks: dict[tuple, tuple[dict, list]] = {}
    count = 0

    def emit(prod: PolyFp, md):
        nonlocal count
        count += 1
        if count > guard.multisets:
            raise GuardError(f"more than {guard.multisets} generator multisets in degree {D}")
        cols, rows = blocks.setdefault(md, ({}, []))
        idx = np.empty(len(prod.terms), dtype=np.int64)
        val = np.empty(len(prod.terms), dtype=np.int64)
        for i, (k, c) in enumerate(prod.terms.items()):
            j = cols.get(k)
            if j is None:
                j = cols[k] = len(cols)
            idx[i] = j
            val[i] = c
        rows.append((idx, val))

    # depth-first over nondecreasing generator indices; each step extends the
    # prefix product by one generator
    def walk(start: int, remaining: int, prod: PolyFp | None, md):
        for g in range(start, ngen):
            d = degrees[g]
            if d > remaining:
                continue
            nxt = polys[g] if prod is None else prod * polys[g]
            nmd = None
            if coldeg is not None:
                nmd = tuple(a + b for a, b in zip(md, coldeg[g]))
            if d == remaining:
                emit(nxt, nmd)
            else:
                walk(g, remaining - d, nxt, nmd)

    walk(0, D, None, (0,) * ncol if coldeg is not None else None)
    return sum(_block_rank(cols, rows, p) for _, (cols, rows) in sorted(blocks.items(), key=lambda kv: str(kv[0])))


def hilbert_function(
    spec: RingSpec,
    which: Label,
    D_max: int,
    field: PrimeField = DEFAULT_FIELD,
    guard: Guard | None = None,
    rescale: bool | None = None,
    seed: int = 0,
) -> HilbertTable:
    """Graded dimensions in degrees ``0..D_max``.

    With ``rescale`` (the default whenever every generator has even degree)
    the degrees are rescaled ones, i.e. Y degrees ``0, 2, ..., 2*D_max``.
    """
    field = field or DEFAULT_FIELD
    gens = generator_set(spec, which, field)
    all_even = all(d % 2 == 0 for d in gens.degrees)
    if rescale is None:
        rescale = all_even
    if rescale and not all_even:
        raise OracleError("grading not rescalable: some generator has odd degree")
    mult = 2 if rescale else 1
    values = tuple((D, graded_dimension(gens, mult * D, field, guard)) for D in range(D_max + 1))
    grading = GradingTag.RESCALED if rescale else GradingTag.Y
    return HilbertTable(spec, which, grading, values, field.p, seed)


def reconstruct_numerator(H, d: int, k: int) -> LaurentPoly:
    """Invert ``H = expand(h / (1 - z)**d)`` for a numerator of degree <= k.

    ``h_i = sum_{j <= i} (-1)**j C(d, j) H(i - j)``.  Any extra values of H
    beyond degree k must give vanishing ``h_i``.
    """
    H = list(H)
    if len(H) < k + 1:
        raise OracleError(f"need {k + 1} Hilbert function values, got {len(H)}")
    h = [sum((-1) ** j * comb(d, j) * H[i - j] for j in range(min(i, d) + 1)) for i in range(len(H))]
    if any(h[k + 1 :]):
        raise OracleError("dimension or degree bound wrong")
    return LaurentPoly(0, tuple(h[: k + 1]))


def jacobian_dim(gens: GeneratorSet, field: PrimeField = DEFAULT_FIELD, trials: int = 5, seed: int = 0) -> int:
    """Maximum Jacobian rank of the generators over ``trials`` random points."""
    if trials < 1:
        raise OracleError("need at least one trial")
    nv = gens.spec.t * gens.spec.n
    p = field.p
    partials = [[g.diff(v) for v in range(nv)] for g in gens.generators]
    rng = np.random.Generator(np.random.Philox(seed))
    best = 0
    for _ in range(trials):
        point = [int(x) for x in rng.integers(0, p, size=nv)]
        J = np.array([[dg.evaluate(point) for dg in row] for row in partials], dtype=np.int64)
        best = max(best, _accel.rank_mod_p(J, p))
    return best
