"""Small Buchberger toolkit over GF(q): division, S-polynomials, the S-pair criterion.

Polynomials are dicts {exponent tuple: nonzero field encoding}.  Only what the
even-cycle conjecture battery needs; no pair-selection strategies or F4.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

from .errors import CapExceeded, InputError
from .field import FieldSpec

ORDERS = ("grevlex", "revlex")


def grevlex_key(a) -> tuple:
    return (sum(a), tuple(-x for x in reversed(a)))


def revlex_key(a) -> tuple:
    # pure reverse lexicographic: agrees with grevlex on monomials of equal degree
    return tuple(-x for x in reversed(a))


@dataclass(frozen=True)
class MonomialOrder:
    kind: str = "grevlex"

    def __post_init__(self):
        if self.kind not in ORDERS:
            raise InputError(f"unknown order {self.kind!r}; choose from {ORDERS}")

    def key(self, a):
        return grevlex_key(a) if self.kind == "grevlex" else revlex_key(a)

    def describe(self, s: int | None = None) -> str:
        chain = "t1>...>ts" if s is None else ">".join(f"t{i + 1}" for i in range(s))
        return f"{self.kind} {chain}"


GREVLEX = MonomialOrder("grevlex")


def compare(m1, m2, order: MonomialOrder = GREVLEX) -> int:
    """-1, 0 or 1 as m1 is smaller than, equal to, or larger than m2."""
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


class Poly:
    """Sparse polynomial over a FieldSpec with a fixed monomial order."""

    __slots__ = ("field", "order", "terms")

    def __init__(self, field: FieldSpec, terms=None, order: MonomialOrder = GREVLEX):
        self.field = field
        self.order = order
        self.terms: dict[tuple[int, ...], int] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            v = field.add(self.terms.get(e, 0), int(c) % field.p if field.m == 1 else int(c))
            if v:
                self.terms[e] = v
            else:
                self.terms.pop(e, None)

    @classmethod
    def from_binomial(cls, f, field: FieldSpec, order: MonomialOrder = GREVLEX) -> "Poly":
        p = cls(field, order=order)
        p.terms = {}
        if f.a != f.b:
            p.terms[f.a] = 1
            p.terms[f.b] = field.neg(1)
        return p

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: self.order.key(t[0]), reverse=True)

    def leading(self) -> tuple[tuple[int, ...], int]:
        e = max(self.terms, key=self.order.key)
        return e, self.terms[e]

    def lm(self) -> tuple[int, ...]:
        return self.leading()[0]

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        inv = self.field.inv(self.leading()[1])
        return self.scaled(inv, None)

    def scaled(self, c: int, shift) -> "Poly":
        """c * x^shift * self (shift None means 1)."""
        out = Poly(self.field, order=self.order)
        mul = self.field.mul
        if shift is None:
            out.terms = {e: mul(c, v) for e, v in self.terms.items()}
        else:
            out.terms = {tuple(x + y for x, y in zip(e, shift)): mul(c, v) for e, v in self.terms.items()}
        out.terms = {e: v for e, v in out.terms.items() if v}
        return out

    def __sub__(self, other: "Poly") -> "Poly":
        out = Poly(self.field, order=self.order)
        out.terms = dict(self.terms)
        for e, c in other.terms.items():
            v = self.field.sub(out.terms.get(e, 0), c)
            if v:
                out.terms[e] = v
            else:
                out.terms.pop(e, None)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(f"t{i + 1}" + (f"^{x}" if x > 1 else "") for i, x in enumerate(e) if x) or "1"
            parts.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__


def _divides(m, e) -> bool:
    return all(x <= y for x, y in zip(m, e))


def normal_form(f: Poly, basis, order: MonomialOrder | None = None) -> Poly:
    """Full remainder of f on division by ``basis`` (reducers tried in list order)."""
    order = order or f.order
    reducers = [(b.lm(), b.leading()[1], b) for b in basis if b]
    p = Poly(f.field, order=order)
    p.terms = dict(f.terms)
    rem = Poly(f.field, order=order)
    field = f.field
    while p:
        e, c = p.leading()
        for lm, lc, b in reducers:
            if _divides(lm, e):
                shift = tuple(x - y for x, y in zip(e, lm))
                p = p - b.scaled(field.div(c, lc), shift)
                break
        else:
            rem.terms[e] = c
            del p.terms[e]
    return rem


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder | None = None) -> Poly:
    (ef, cf), (eg, cg) = f.leading(), g.leading()
    lcm = tuple(max(x, y) for x, y in zip(ef, eg))
    field = f.field
    left = f.scaled(field.inv(cf), tuple(x - y for x, y in zip(lcm, ef)))
    right = g.scaled(field.inv(cg), tuple(x - y for x, y in zip(lcm, eg)))
    return left - right


@dataclass
class GroebnerCheck:
    is_groebner: bool
    pairs_checked: int
    failing_pair: tuple[int, int] | None = None
    remainder: Poly | None = None

    def __bool__(self):
        return self.is_groebner


def is_groebner(basis, order: MonomialOrder = GREVLEX) -> GroebnerCheck:
    """Every S-pair reduces to zero.  Pairs are visited in (i, j) lexicographic order."""
    basis = [b for b in basis if b]
    checked = 0
    for i, j in itertools.combinations(range(len(basis)), 2):
        checked += 1
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r:
            return GroebnerCheck(False, checked, (i, j), r)
    return GroebnerCheck(True, checked)


def buchberger(basis, order: MonomialOrder = GREVLEX, max_size: int = 500) -> list[Poly]:
    """Complete ``basis`` to a Groebner basis, refusing to grow past ``max_size`` elements."""
    g = [b.monic() for b in basis if b]
    pairs = list(itertools.combinations(range(len(g)), 2))
    while pairs:
        i, j = pairs.pop(0)
        lm_i, lm_j = g[i].lm(), g[j].lm()
        if all(x == 0 or y == 0 for x, y in zip(lm_i, lm_j)):
            continue  # coprime leading monomials
        r = normal_form(s_polynomial(g[i], g[j], order), g, order)
        if r:
            if len(g) >= max_size:
                raise CapExceeded(f"Groebner basis exceeded {max_size} elements", max_size)
            g.append(r.monic())
            pairs += [(k, len(g) - 1) for k in range(len(g) - 1)]
    return g


def polys_from_binomials(binomials, field: FieldSpec, order: MonomialOrder = GREVLEX) -> list[Poly]:
    return [Poly.from_binomial(f, field, order).monic() for f in binomials]


# -- conjecture battery -------------------------------------------------------------

@dataclass
class ConjectureReport:
    k: int
    q: int
    order: str
    generates: bool
    minimal: bool
    groebner: bool
    size: int
    witnesses: list[dict] = dc_field(default_factory=list)
    claim: str = "conjecture (empirical check, not a proof)"
    field: dict | None = None

    def to_json(self) -> dict:
        out = {"k": self.k, "q": self.q, "order": self.order, "claim": self.claim,
               "basis_size": self.size, "generates": self.generates, "minimal": self.minimal,
               "groebner": self.groebner, "witnesses": self.witnesses}
        if self.field is not None:
            out["field"] = self.field
        return out


def test_conjecture(k: int, q: int, basis=None, order: MonomialOrder = GREVLEX,
                    field: FieldSpec | None = None, enum_cap: int | None = None) -> ConjectureReport:
    """Check generation, minimality and the Groebner property for the even-cycle basis.

    ``basis`` defaults to ``conjectured_basis(k, q)``; pass another binomial list
    to run the same three checks on it.
    """
    from .field import parse_q
    from .generators import conjectured_basis
    from .graph import graph_from_edges
    from .ideal import minimalize, verify_generating_set
    from .toric import DEFAULT_ENUM_CAP, enumerate_toric_set

    if field is None:
        field = FieldSpec(*parse_q(str(q)))
    if basis is None:
        basis = conjectured_basis(k, q).binomials
    basis = list(basis)
    cycle = graph_from_edges([(i, i % (2 * k) + 1) for i in range(1, 2 * k + 1)])
    x = enumerate_toric_set(cycle, field, enum_cap or DEFAULT_ENUM_CAP)
    witnesses: list[dict] = []

    report = verify_generating_set(basis, x)
    if not report.generates:
        witnesses.append({"verdict": "generates", "first_failing_degree": report.first_failure})
    if report.generates:
        _, redundant = minimalize(basis, x, verify=False)
    else:
        redundant = []
    for i in redundant:
        witnesses.append({"verdict": "minimal", "redundant": str(basis[i]), "index": i})
    check = is_groebner(polys_from_binomials(basis, field, order), order)
    if not check:
        i, j = check.failing_pair
        witnesses.append({"verdict": "groebner", "pair": [str(basis[i]), str(basis[j])],
                          "remainder": str(check.remainder)})
    return ConjectureReport(k, q, order.describe(2 * k), report.generates, report.generates and not redundant,
                            bool(check), len(basis), witnesses, field=field.to_json())


test_conjecture.__test__ = False  # keep pytest from collecting it
