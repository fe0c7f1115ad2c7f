"""Algebraic toric sets X parameterized by graph edges, and their sizes."""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import EnumerationTooLarge, InputError
from .field import FieldSpec
from .graph import ComponentInfo, Graph, components, count_non_bipartite, incidence_vectors

DEFAULT_ENUM_CAP = 10 ** 8
_CHUNK = 1 << 18


@dataclass(frozen=True, eq=False)
class ToricSet:
    """Points of X, each scaled so its first coordinate is 1.

    ``logs`` holds the discrete logs (base ``field.generator``) of the
    coordinates; ``points`` the integer encodings.  Rows are sorted
    lexicographically by encoding.
    """

    field: FieldSpec
    s: int
    logs: np.ndarray
    points: np.ndarray

    def __len__(self):
        return self.points.shape[0]

    def point_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(x) for x in row) for row in self.points}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"t{i + 1}" for i in range(self.s)])
        w.writerows(self.points.tolist())
        return buf.getvalue()


def _from_logs(field: FieldSpec, logs: np.ndarray) -> ToricSet:
    n = field.q - 1
    logs = np.unique((logs - logs[:, :1]) % n, axis=0)
    pts = field.exp_table[logs]
    order = np.lexsort(pts.T[::-1])
    pts, logs = pts[order], logs[order]
    pts.flags.writeable = False
    logs.flags.writeable = False
    return ToricSet(field, logs.shape[1], logs, pts)


def toric_set_from_exponents(nus, field: FieldSpec, cap: int = DEFAULT_ENUM_CAP) -> ToricSet:
    """Image of (K*)^n under x -> (x^nu_1, ..., x^nu_s), projectivized."""
    nu = np.array(nus, dtype=np.int64)  # s x n
    s, nvars = nu.shape
    n = field.q - 1
    total = n ** nvars
    if total > cap:
        raise EnumerationTooLarge(f"(q-1)^n = {total} candidate vectors exceeds cap {cap}", cap, total)
    # vectorize over the trailing `inner` coordinates, loop over the rest
    inner = nvars
    while inner > 0 and n ** inner > _CHUNK:
        inner -= 1
    grid = np.array(list(itertools.product(range(n), repeat=inner)), dtype=np.int64).reshape(-1, inner)
    seen = []
    for head in itertools.product(range(n), repeat=nvars - inner):
        x = np.empty((grid.shape[0], nvars), dtype=np.int64)
        x[:, : nvars - inner] = head
        x[:, nvars - inner:] = grid
        y = (x @ nu.T) % n
        y = (y - y[:, :1]) % n
        seen.append(np.unique(y, axis=0))
        if len(seen) > 64:
            seen = [np.unique(np.vstack(seen), axis=0)]
    return _from_logs(field, np.vstack(seen))


def enumerate_toric_set(g: Graph, field: FieldSpec, cap: int = DEFAULT_ENUM_CAP) -> ToricSet:
    return toric_set_from_exponents(incidence_vectors(g), field, cap)


def projective_torus(s: int, field: FieldSpec, cap: int = DEFAULT_ENUM_CAP) -> ToricSet:
    if s < 2:
        raise InputError("projective torus needs s >= 2")
    n = field.q - 1
    total = n ** (s - 1)
    if total > cap:
        raise EnumerationTooLarge(f"(q-1)^(s-1) = {total} exceeds cap {cap}", cap, total)
    tail = np.array(list(itertools.product(range(n), repeat=s - 1)), dtype=np.int64).reshape(-1, s - 1)
    logs = np.hstack([np.zeros((tail.shape[0], 1), dtype=np.int64), tail])
    return _from_logs(field, logs)


def kernel_order(comp: ComponentInfo, field: FieldSpec) -> int:
    q = field.q
    if comp.bipartite:
        return q - 1
    return (q - 1) // 2 if q % 2 else q - 1


def length_formula(g: Graph, field: FieldSpec) -> int:
    comps = components(g)
    m = len(comps)
    gamma = count_non_bipartite(comps)
    q, n = field.q, g.n
    if gamma == 0:
        return (q - 1) ** (n - m - 1)
    value = Fraction(q - 1) ** (n - m + gamma - 1)
    if q % 2:
        value /= 2 ** (gamma - 1)
    if value.denominator != 1:
        raise ArithmeticError(f"length formula produced non-integer {value}")
    return int(value)


def product_renormalize(x: ToricSet, i: int, j: int) -> tuple[int, ...]:
    """Coordinatewise product of points i and j; the first coordinate stays 1."""
    n = x.field.q - 1
    return tuple(int(v) for v in x.field.exp_table[(x.logs[i] + x.logs[j]) % n])
