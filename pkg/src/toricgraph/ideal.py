"""Binomials t^a - t^b, membership in I(X) by evaluation, and generating-set checks.

The degree-d piece of an ideal generated by binomials is spanned by the
vectors e_u - e_v, one per multiple m*g (u = m*t^a, v = m*t^b).  The rank of
such a family equals (#monomials) - (#connected components) of the graph
with those edges, over any field, so graded dimensions are computed with a
union-find instead of elimination.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from .code import DEFAULT_MATRIX_CAP, grevlex_key, hilbert_profile, monomials
from .errors import (GeneratorDoesNotVanish, InputError, MatrixTooLarge, NotHomogeneous,
                     NotReducible, ParseError, VerificationFailure)
from .field import FieldSpec
from .toric import ToricSet


@dataclass(frozen=True, order=True)
class Binomial:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if len(self.a) != len(self.b):
            raise InputError("exponent vectors of different lengths")
        if any(x < 0 for x in self.a + self.b):
            raise InputError("negative exponent")

    @classmethod
    def zero(cls, s: int) -> "Binomial":
        return cls((0,) * s, (0,) * s)

    @classmethod
    def from_dicts(cls, s: int, a: dict[int, int], b: dict[int, int]) -> "Binomial":
        """Build from {1-based variable index: exponent} maps."""
        av, bv = [0] * s, [0] * s
        for i, e in a.items():
            av[i - 1] = e
        for i, e in b.items():
            bv[i - 1] = e
        return cls(tuple(av), tuple(bv))

    @property
    def s(self) -> int:
        return len(self.a)

    @property
    def is_zero(self) -> bool:
        return self.a == self.b

    @property
    def degree(self) -> int:
        return max(sum(self.a), sum(self.b))

    @property
    def homogeneous(self) -> bool:
        return sum(self.a) == sum(self.b)

    @property
    def supp_a(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.a) if x)

    @property
    def supp_b(self) -> frozenset[int]:
        return frozenset(i for i, x in enumerate(self.b) if x)

    def is_normalized(self, q: int) -> bool:
        return (self.homogeneous and not (self.supp_a & self.supp_b)
                and max(self.a + self.b, default=0) <= q - 2)

    def swapped(self) -> "Binomial":
        return Binomial(self.b, self.a)

    def key(self) -> frozenset:
        """Identifies f and -f."""
        return frozenset((self.a, self.b))

    def leading_monomial(self) -> tuple[int, ...]:
        return max(self.a, self.b, key=grevlex_key)

    def strip_gcd(self) -> "Binomial":
        c = [min(x, y) for x, y in zip(self.a, self.b)]
        return Binomial(tuple(x - z for x, z in zip(self.a, c)), tuple(y - z for y, z in zip(self.b, c)))

    def embed(self, positions, s: int) -> "Binomial":
        """Re-index into s ambient variables: local variable i goes to positions[i] (0-based)."""
        a, b = [0] * s, [0] * s
        for i, pos in enumerate(positions):
            a[pos] = self.a[i]
            b[pos] = self.b[i]
        return Binomial(tuple(a), tuple(b))

    def to_line(self) -> str:
        return " ".join(map(str, self.a)) + " | " + " ".join(map(str, self.b))

    def __str__(self):
        def mono(e):
            parts = [f"t{i + 1}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(e) if x]
            return "*".join(parts) or "1"
        return f"{mono(self.a)} - {mono(self.b)}"


def toric_relations(s: int, q: int) -> list[Binomial]:
    """t_i^(q-1) - t_s^(q-1) for i < s."""
    out = []
    for i in range(s - 1):
        a = [0] * s
        b = [0] * s
        a[i] = q - 1
        b[s - 1] = q - 1
        out.append(Binomial(tuple(a), tuple(b)))
    return out


# -- evaluation ----------------------------------------------------------------

def evaluate_monomial(e, point, field: FieldSpec) -> int:
    acc = 1
    for x, k in zip(point, e):
        if k:
            acc = field.mul(acc, field.pow(int(x), k))
    return acc


def evaluate_binomial(f: Binomial, point, field: FieldSpec) -> int:
    return field.sub(evaluate_monomial(f.a, point, field), evaluate_monomial(f.b, point, field))


def _eval_terms(f: Binomial, x: ToricSet):
    n = x.field.q - 1
    ea = x.field.exp_table[(x.logs @ np.array(f.a, dtype=np.int64)) % n]
    eb = x.field.exp_table[(x.logs @ np.array(f.b, dtype=np.int64)) % n]
    return ea, eb


def vanishes_on(f: Binomial, x: ToricSet) -> bool:
    if f.s != x.s:
        raise InputError(f"binomial has {f.s} variables, X lives in P^{x.s - 1}")
    if not f.homogeneous:
        raise NotHomogeneous(f"{f} is not homogeneous")
    ea, eb = _eval_terms(f, x)
    return bool(np.all(x.field.vsub(ea, eb) == 0))


def witness_point(f: Binomial, x: ToricSet):
    """First point of X where f does not vanish, or None."""
    ea, eb = _eval_terms(f, x)
    bad = np.flatnonzero(ea != eb)
    return None if bad.size == 0 else tuple(int(v) for v in x.points[bad[0]])


# -- exponent reduction ---------------------------------------------------------

def reduce_exponent_step(f: Binomial, q: int) -> tuple[Binomial, int]:
    """One degree-lowering step; returns ``(g, j)`` with f - t_j*g a torus relation.

    ``j`` is 0-based.
    """
    if f.supp_a & f.supp_b:
        raise NotReducible("terms share a variable; strip the gcd first")
    big = [i for i, x in enumerate(f.a) if x >= q - 1]
    if not big or not f.supp_b:
        raise NotReducible(f"{f}: no exponent >= q-1 on the first term, or second term is constant")
    i = big[0]
    j = min(f.supp_b)
    a = list(f.a)
    a[i] -= q - 1
    a[j] += q - 2
    b = list(f.b)
    b[j] -= 1
    return Binomial(tuple(a), tuple(b)), j


def normalize_binomial(f: Binomial, q: int) -> Binomial:
    """Strip gcds and lower exponents until every entry is <= q-2.

    Returns the zero binomial when the reduction collapses.
    """
    if not f.homogeneous:
        raise NotHomogeneous(f"{f} is not homogeneous")
    g = f.strip_gcd()
    while not g.is_zero:
        if max(g.a) >= q - 1:
            g, _ = reduce_exponent_step(g, q)
        elif max(g.b) >= q - 1:
            g, _ = reduce_exponent_step(g.swapped(), q)
            g = g.swapped()
        else:
            return g
        g = g.strip_gcd()
    return Binomial.zero(f.s)


# -- graded pieces --------------------------------------------------------------

class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))
        self.components = n

    def find(self, x):
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry
            self.components -= 1


def binomial_rows(gens, d: int, s: int, cap: int = DEFAULT_MATRIX_CAP):
    """Sparse rows (u, v) of the degree-d multiples m*g, as monomial indices.

    Monomial indices refer to ``monomials(s, d)``; the row stands for e_u - e_v.
    """
    index = {m: i for i, m in enumerate(monomials(s, d))}
    rows = []
    budget = 0
    for g in gens:
        if g.is_zero or not g.homogeneous or g.degree > d:
            if not g.homogeneous:
                raise NotHomogeneous(f"{g} is not homogeneous")
            continue
        mults = monomials(s, d - g.degree)
        budget += len(mults)
        if budget > cap:
            raise MatrixTooLarge(f"more than {cap} multiples in degree {d}", cap, budget)
        for m in mults:
            u = index[tuple(x + y for x, y in zip(m, g.a))]
            v = index[tuple(x + y for x, y in zip(m, g.b))]
            rows.append((u, v))
    return rows


def _degree_components(gens, d: int, s: int, cap: int) -> _UnionFind:
    uf = _UnionFind(comb(s - 1 + d, s - 1))
    for u, v in binomial_rows(gens, d, s, cap):
        uf.union(u, v)
    return uf


def ideal_dim_at_degree(gens, d: int, s: int, q: int | None = None, cap: int = DEFAULT_MATRIX_CAP) -> int:
    """dim_K of the degree-d piece of the ideal generated by ``gens``.

    ``q`` is accepted for interface symmetry; the rank of a difference-vector
    family does not depend on the field.
    """
    uf = _degree_components(gens, d, s, cap)
    return comb(s - 1 + d, s - 1) - uf.components


def in_graded_span(f: Binomial, gens, cap: int = DEFAULT_MATRIX_CAP) -> bool:
    """Whether homogeneous f lies in the degree-deg(f) piece of (gens)."""
    if f.is_zero:
        return True
    d = f.degree
    uf = _degree_components(gens, d, f.s, cap)
    index = {m: i for i, m in enumerate(monomials(f.s, d))}
    return uf.find(index[f.a]) == uf.find(index[f.b])


@dataclass
class DegreeRow:
    d: int
    dim_S: int
    dim_J: int
    dim_I: int

    @property
    def ok(self) -> bool:
        return self.dim_J == self.dim_I


@dataclass
class GenSetReport:
    vanishing: list[bool]
    table: list[DegreeRow]
    verified_up_to: int
    generates: bool
    regularity: int
    bound_regularity: int
    bound_combinatorial: int | None
    minimal: bool | None = None
    redundant: list[int] = dc_field(default_factory=list)
    redundant_degrees: list[int] = dc_field(default_factory=list)

    @property
    def first_failure(self) -> int | None:
        return next((row.d for row in self.table if not row.ok), None)

    def to_json(self) -> dict:
        out = {
            "generates": self.generates,
            "verified_up_to": self.verified_up_to,
            "bounds": {"reg_plus_one": self.bound_regularity,
                       "floor_s_half_times_q_minus_2": self.bound_combinatorial},
            "regularity": self.regularity,
            "non_vanishing": [i for i, ok in enumerate(self.vanishing) if not ok],
            "table": [{"d": r.d, "dim_S_d": r.dim_S, "dim_J_d": r.dim_J, "dim_I_d": r.dim_I}
                      for r in self.table],
            "first_failure": self.first_failure,
        }
        if self.minimal is not None:
            out["minimal"] = self.minimal
            out["redundant"] = self.redundant
            out["redundant_degrees"] = self.redundant_degrees
        return out


def verify_generating_set(gens, x: ToricSet, N: int | None = None, strict: bool = True,
                          cap: int = DEFAULT_MATRIX_CAP, profile=None) -> GenSetReport:
    """Check that ``gens`` vanish on X and span I(X)_d for every d <= N.

    With ``strict`` a non-vanishing generator raises ``GeneratorDoesNotVanish``;
    otherwise it is recorded and ``generates`` is False.
    """
    gens = list(gens)
    s, q = x.s, x.field.q
    for g in gens:
        if not g.homogeneous:
            raise NotHomogeneous(f"{g} is not homogeneous")
        if g.s != s:
            raise InputError(f"{g} has {g.s} variables, expected {s}")
    vanishing = [vanishes_on(g, x) for g in gens]
    offenders = [i for i, ok in enumerate(vanishing) if not ok]
    if offenders and strict:
        raise GeneratorDoesNotVanish(
            f"{len(offenders)} generator(s) do not vanish on X: "
            + ", ".join(str(gens[i]) for i in offenders[:5]), offenders)

    if profile is None:
        profile = hilbert_profile(x, cap=cap)
    reg = profile.regularity
    bound_reg = reg + 1
    half = s // 2
    bound_comb = half * (q - 2) if half >= 2 else None
    if N is None:
        N = bound_reg if bound_comb is None else min(bound_reg, bound_comb)

    table = []
    for d in range(N + 1):
        dim_s = comb(s - 1 + d, s - 1)
        h = profile.values[d] if d < len(profile.values) else len(x)
        table.append(DegreeRow(d, dim_s, ideal_dim_at_degree(gens, d, s, q, cap), dim_s - h))
    generates = not offenders and all(row.ok for row in table)
    return GenSetReport(vanishing, table, N, generates, reg, bound_reg, bound_comb)


def _minimalize_order(gens):
    return sorted(range(len(gens)), key=lambda i: (gens[i].degree, grevlex_key(gens[i].leading_monomial()), i))


def minimalize(gens, x: ToricSet | None = None, verify: bool = True, cap: int = DEFAULT_MATRIX_CAP):
    """Greedily drop generators lying in the ideal of the remaining ones.

    Returns ``(kept, redundant)`` as lists of indices into ``gens``.  Order of
    consideration: ascending degree, then ascending grevlex leading monomial.
    """
    gens = list(gens)
    if verify:
        if x is None:
            raise InputError("verification needs the toric set")
        report = verify_generating_set(gens, x, cap=cap)
        if not report.generates:
            raise VerificationFailure(f"input set does not generate I(X) (first failing degree {report.first_failure})")
    alive = set(range(len(gens)))
    redundant = []
    for i in _minimalize_order(gens):
        others = [gens[j] for j in sorted(alive) if j != i]
        if in_graded_span(gens[i], others, cap):
            alive.discard(i)
            redundant.append(i)
    return sorted(alive), redundant


# -- file format ------------------------------------------------------------------

def parse_binomials(text: str) -> list[Binomial]:
    out = []
    s = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.count("|") != 1:
            raise ParseError(f"line {lineno}: expected 'a_1 ... a_s | b_1 ... b_s'")
        left, right = line.split("|")
        try:
            a = tuple(int(v) for v in left.split())
            b = tuple(int(v) for v in right.split())
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer exponent") from None
        if len(a) != len(b) or not a:
            raise ParseError(f"line {lineno}: sides have {len(a)} and {len(b)} entries")
        if any(v < 0 for v in a + b):
            raise ParseError(f"line {lineno}: negative exponent")
        if s is not None and len(a) != s:
            raise ParseError(f"line {lineno}: {len(a)} variables, earlier lines had {s}")
        s = len(a)
        out.append(Binomial(a, b))
    return out


def format_binomials(gens, header: str | None = None) -> str:
    lines = [f"# {h}" for h in header.splitlines()] if header else []
    lines += [g.to_line() for g in gens]
    return "\n".join(lines) + "\n"


def read_binomials(path) -> list[Binomial]:
    with open(path, encoding="utf-8") as fh:
        return parse_binomials(fh.read())
