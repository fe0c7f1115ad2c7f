"""Evaluation codes C_X(d): dimension (Hilbert function), regularity, minimum distance."""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from math import comb

import numpy as np

from .errors import MatrixTooLarge, OutOfRange, SearchTooLarge
from .field import FieldSpec
from .linalg import rank, row_reduce
from .toric import ToricSet

DEFAULT_MATRIX_CAP = 10 ** 8  # matrix entries
DEFAULT_DIST_CAP = 10 ** 7  # codewords


def grevlex_key(a) -> tuple:
    """Sort key: larger key means larger monomial in grevlex with t_1 > ... > t_s."""
    return (sum(a), tuple(-x for x in reversed(a)))


def _compositions(d: int, s: int):
    if s == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in _compositions(d - first, s - 1):
            yield (first,) + rest


@lru_cache(maxsize=256)
def monomials(s: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of degree d in s variables, grevlex descending."""
    return tuple(sorted(_compositions(d, s), key=grevlex_key, reverse=True))


@dataclass(frozen=True)
class MonomialBasis:
    s: int
    d: int

    @property
    def monomials(self) -> tuple[tuple[int, ...], ...]:
        return monomials(self.s, self.d)

    def __len__(self):
        return comb(self.s - 1 + self.d, self.s - 1)

    def index(self) -> dict[tuple[int, ...], int]:
        return {m: i for i, m in enumerate(self.monomials)}


def evaluation_matrix(x: ToricSet, d: int, cap: int = DEFAULT_MATRIX_CAP) -> np.ndarray:
    """Rows indexed by degree-d monomials (grevlex descending), columns by points of X."""
    if d < 0:
        raise OutOfRange("degree must be >= 0")
    nrows = comb(x.s - 1 + d, x.s - 1)
    if nrows * len(x) > cap:
        raise MatrixTooLarge(f"{nrows} x {len(x)} evaluation matrix exceeds cap {cap}", cap, nrows * len(x))
    exps = np.array(monomials(x.s, d), dtype=np.int64).reshape(nrows, x.s)
    return x.field.exp_table[(exps @ x.logs.T) % (x.field.q - 1)]


def hilbert_function(x: ToricSet, d: int, cap: int = DEFAULT_MATRIX_CAP) -> int:
    return rank(evaluation_matrix(x, d, cap), x.field)


@dataclass
class HilbertProfile:
    values: list[int]
    regularity: int | None
    degree: int

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "H_X(d)"])
        w.writerows(enumerate(self.values))
        return buf.getvalue()

    def to_json(self) -> dict:
        return {"values": self.values, "regularity": self.regularity, "degree": self.degree}


def hilbert_profile(x: ToricSet, max_d: int | None = None, cap: int = DEFAULT_MATRIX_CAP) -> HilbertProfile:
    """H_X(0), H_X(1), ... until the value reaches |X| (or ``max_d`` is passed)."""
    size = len(x)
    values: list[int] = []
    d = 0
    while True:
        try:
            h = hilbert_function(x, d, cap)
        except MatrixTooLarge as exc:
            exc.partial = HilbertProfile(values, None, size)
            raise
        if values and h < values[-1]:
            raise AssertionError(f"Hilbert function decreased at d={d}: {values[-1]} -> {h}")
        values.append(h)
        if h == size:
            if d > max(size - 1, 0):
                raise AssertionError(f"regularity {d} exceeds |X|-1 = {size - 1}")
            # pad with the stable value when the caller asked for more degrees
            if max_d is not None and max_d > d:
                values.extend([size] * (max_d - d))
            return HilbertProfile(values, d, size)
        if max_d is not None and d >= max_d:
            return HilbertProfile(values, None, size)
        d += 1


def regularity(x: ToricSet, cap: int = DEFAULT_MATRIX_CAP) -> int:
    return hilbert_profile(x, cap=cap).regularity


@dataclass
class CodeParams:
    d: int
    length: int
    dimension: int
    min_distance: int | None = None

    def to_json(self) -> dict:
        out = {"d": self.d, "length": self.length, "dimension": self.dimension}
        if self.min_distance is not None:
            out["min_distance"] = self.min_distance
        return out


def _span(basis: np.ndarray, field: FieldSpec) -> np.ndarray:
    """All q^k linear combinations of the k rows of ``basis``."""
    words = np.zeros((1, basis.shape[1]), dtype=np.int64)
    scalars = np.arange(field.q, dtype=np.int64)
    for row in basis:
        multiples = field.vmul(scalars[:, None], row[None, :])  # q x n
        words = field.vadd(words[:, None, :], multiples[None, :, :]).reshape(-1, basis.shape[1])
    return words


def min_distance(generator: np.ndarray, field: FieldSpec, cap: int = DEFAULT_DIST_CAP) -> int:
    """Minimum Hamming weight over all nonzero codewords spanned by the rows."""
    basis, _ = row_reduce(generator, field)
    k = basis.shape[0]
    if k == 0:
        raise OutOfRange("zero code has no minimum distance")
    if k == basis.shape[1]:
        return 1  # the whole space contains unit vectors
    total = field.q ** k
    if total > cap:
        raise SearchTooLarge(f"q^dim = {total} codewords exceeds search cap {cap}", cap, total)
    inner = k
    while inner > 1 and field.q ** inner > 1 << 16:
        inner -= 1
    tail = _span(basis[k - inner:], field)
    best = basis.shape[1]
    for head in itertools.product(range(field.q), repeat=k - inner):
        offset = np.zeros(basis.shape[1], dtype=np.int64)
        for c, row in zip(head, basis[: k - inner]):
            if c:
                offset = field.vadd(offset, field.vmul(c, row))
        words = field.vadd(tail, offset[None, :])
        weights = np.count_nonzero(words, axis=1)
        if not any(head):
            weights = weights[1:]  # drop the zero word
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def code_params(x: ToricSet, d: int, want_min_distance: bool = False,
                matrix_cap: int = DEFAULT_MATRIX_CAP, dist_cap: int = DEFAULT_DIST_CAP) -> CodeParams:
    mat = evaluation_matrix(x, d, matrix_cap)
    dim = rank(mat, x.field)
    delta = None
    if want_min_distance:
        total = x.field.q ** dim
        if dim < len(x) and total > dist_cap:
            raise SearchTooLarge(f"q^dim = {total} codewords exceeds search cap {dist_cap}", dist_cap, total)
        delta = min_distance(np.unique(mat, axis=0), x.field, dist_cap)
    return CodeParams(d, len(x), dim, delta)


# -- closed forms for the projective torus -----------------------------------

def torus_dimension(s: int, q: int, d: int) -> int:
    if s < 2 or d < 0:
        raise OutOfRange("need s >= 2 and d >= 0")
    return sum((-1) ** j * comb(s - 1, j) * comb(s - 1 + d - j * (q - 1), s - 1)
               for j in range(d // (q - 1) + 1))


def torus_regularity(s: int, q: int) -> int:
    return (s - 1) * (q - 2)


def torus_min_distance(s: int, q: int, d: int) -> int:
    reg = torus_regularity(s, q)
    if d <= 0 or d >= reg:
        raise OutOfRange(f"formula needs 1 <= d < reg = {reg}, got d={d}")
    k = (d - 1) // (q - 2)
    ell = d - k * (q - 2)
    return (q - 1) ** (s - (k + 2)) * (q - 1 - ell)


def torus_hilbert_series_coeffs(s: int, q: int, up_to_d: int) -> list[int]:
    """Coefficients of (1 - t^(q-1))^(s-1) / (1 - t)^s through t^up_to_d."""
    size = up_to_d + 1
    series = [0] * size
    for j in range(s):  # numerator (1 - t^(q-1))^(s-1)
        pos = j * (q - 1)
        if pos < size:
            series[pos] = (-1) ** j * comb(s - 1, j)
    for _ in range(s):  # divide by (1 - t) s times: running sums
        series = list(itertools.accumulate(series))
    return series
