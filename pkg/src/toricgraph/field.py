"""Arithmetic in GF(q), q = p^m <= 2^16, backed by log/antilog tables.

An element is encoded as an integer in ``[0, q)``: the base-``p`` digits are
the coefficients (low degree first) of its residue polynomial modulo the
defining polynomial.  For ``m == 1`` the encoding is just the residue mod p.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering

import numpy as np

from .errors import DivisionByZero, FieldMismatch, NonPrime, ReducibleModulus, UnsupportedQ

MAX_Q = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over F_p, coefficient lists low degree first ----------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, b, p):
    """Remainder of a by monic-or-not b over F_p."""
    a = _trim(a)
    b = _trim(b)
    inv_lead = pow(b[-1], -1, p)
    while len(a) >= len(b):
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        a = _trim(a)
    return a


def _poly_mulmod(a, b, mod, p):
    prod = [0] * (len(a) + len(b))
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _poly_mod(prod, mod, p)


def is_irreducible(modulus, p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    modulus = _trim(modulus)
    m = len(modulus) - 1
    if m < 1:
        return False
    for deg in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_mod(modulus, list(low) + [1], p):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    # itertools.product yields (c0, ..., c_{m-1}) in lexicographic order with c0 most significant
    for low in itertools.product(range(p), repeat=m):
        cand = list(low) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise ReducibleModulus(f"no irreducible polynomial of degree {m} over F_{p}")  # unreachable


def parse_q(text: str) -> tuple[int, int]:
    """Parse ``"P^M"`` or a plain prime power ``"Q"`` into ``(p, m)``."""
    text = text.strip()
    if "^" in text:
        p_s, m_s = text.split("^", 1)
        return int(p_s), int(m_s)
    q = int(text)
    if q < 2:
        raise UnsupportedQ(f"q={q} is not a prime power")
    factors = prime_factors(q)
    if len(factors) != 1:
        raise NonPrime(f"q={q} is not a prime power")
    p = factors[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


class FieldSpec:
    """GF(p^m) with a fixed modulus and a fixed primitive element.

    Scalar methods (``add``, ``mul``, ...) act on integer encodings; the ``v*``
    methods act elementwise on numpy integer arrays.
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise NonPrime(f"p={p} is not prime")
        if m < 1:
            raise UnsupportedQ(f"extension degree m={m} must be >= 1")
        q = p ** m
        if q < 3 or q > MAX_Q:
            raise UnsupportedQ(f"q={q} outside supported range [3, {MAX_Q}]")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            self.modulus: tuple[int, ...] = ()
        else:
            if modulus is None:
                modulus = smallest_irreducible(p, m)
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != m + 1 or modulus[-1] != 1:
                raise ReducibleModulus(f"modulus must be monic of degree {m}, got {modulus}")
            if not is_irreducible(modulus, p):
                raise ReducibleModulus(f"modulus {modulus} is reducible over F_{p}")
            self.modulus = modulus

        self._pw = np.array([p ** i for i in range(m)], dtype=np.int64)
        self.generator = self._find_generator()
        exp = np.zeros(q, dtype=np.int64)  # exp[q-1] duplicates exp[0] for convenience
        log = np.full(q, -1, dtype=np.int64)
        x = 1
        for k in range(q - 1):
            exp[k] = x
            log[x] = k
            x = self._slow_mul(x, self.generator)
        exp[q - 1] = 1
        exp.flags.writeable = False
        log.flags.writeable = False
        self.exp_table = exp
        self.log_table = log

    # -- construction helpers ----------------------------------------------

    def _digits(self, x: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(x % self.p)
            x //= self.p
        return out

    def _undigits(self, d) -> int:
        x = 0
        for c in reversed(list(d) + [0] * (self.m - len(d))):
            x = x * self.p + c
        return x

    def _slow_mul(self, x: int, y: int) -> int:
        if self.m == 1:
            return x * y % self.p
        return self._undigits(_poly_mulmod(self._digits(x), self._digits(y), self.modulus, self.p))

    def _slow_pow(self, x: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self._slow_mul(acc, x)
            x = self._slow_mul(x, x)
            e >>= 1
        return acc

    def _find_generator(self) -> int:
        n = self.q - 1
        cofactors = [n // f for f in prime_factors(n)]
        for g in range(2, self.q):
            if all(self._slow_pow(g, c) != 1 for c in cofactors):
                return g
        return 1  # q == 3 has generator 2; this line only covers the degenerate q-1 == 1 case

    # -- scalar arithmetic on encodings --------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.m == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        return self._undigits([(a + b) % self.p for a, b in zip(self._digits(x), self._digits(y))])

    def neg(self, x: int) -> int:
        if self.m == 1:
            return -x % self.p
        if self.p == 2:
            return x
        return self._undigits([-a % self.p for a in self._digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return int(self.exp_table[(self.log_table[x] + self.log_table[y]) % (self.q - 1)])

    def inv(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("inverse of zero")
        return int(self.exp_table[-self.log_table[x] % (self.q - 1)])

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise DivisionByZero("negative power of zero")
            return 1 if e == 0 else 0
        return int(self.exp_table[self.log_table[x] * e % (self.q - 1)])

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    # -- vectorized arithmetic ---------------------------------------------

    def vadd(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.m == 1:
            return (x + y) % self.p
        if self.p == 2:
            return x ^ y
        out = np.zeros(np.broadcast_shapes(x.shape, y.shape), dtype=np.int64)
        for w in self._pw:
            out += ((x // w + y // w) % self.p) * w
        return out

    def vneg(self, x):
        x = np.asarray(x, dtype=np.int64)
        if self.m == 1:
            return -x % self.p
        if self.p == 2:
            return x.copy()
        out = np.zeros_like(x)
        for w in self._pw:
            out += (-(x // w) % self.p) * w
        return out

    def vsub(self, x, y):
        return self.vadd(x, self.vneg(y))

    def vmul(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        prod = self.exp_table[(self.log_table[x] + self.log_table[y]) % (self.q - 1)]
        return np.where((x == 0) | (y == 0), 0, prod)

    def vinv(self, x):
        x = np.asarray(x, dtype=np.int64)
        if np.any(x == 0):
            raise DivisionByZero("inverse of zero")
        return self.exp_table[-self.log_table[x] % (self.q - 1)]

    # -- elements ----------------------------------------------------------

    def __call__(self, value: int) -> "FieldElem":
        return FieldElem(self, int(value) % self.q if self.m == 1 else int(value))

    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    def primitive(self) -> "FieldElem":
        return FieldElem(self, self.generator)

    def units(self) -> list["FieldElem"]:
        """Nonzero elements as generator^0, generator^1, ..., generator^(q-2)."""
        return [FieldElem(self, int(v)) for v in self.exp_table[: self.q - 1]]

    def element_order(self, x: int) -> int:
        if x == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.q - 1
        return n // np.gcd(int(self.log_table[x]), n)

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "q": self.q,
                "modulus": list(self.modulus), "generator": self.generator}

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        mod = f", modulus={self.modulus}" if self.m > 1 else ""
        return f"FieldSpec(p={self.p}, m={self.m}{mod})"


def field_new(p: int, m: int = 1, modulus=None) -> FieldSpec:
    return FieldSpec(p, m, modulus)


@total_ordering
@dataclass(frozen=True)
class FieldElem:
    field: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise ValueError(f"encoding {self.value} outside [0, {self.field.q})")

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        if isinstance(other, (int, np.integer)) and self.field.m == 1:
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElem(self.field, self.field.div(self.value, o))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElem(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElem":
        return FieldElem(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def __lt__(self, other):
        return self.value < self._other(other)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@GF({self.field.q})"


def _check(x: FieldElem, y: FieldElem):
    if x.field != y.field:
        raise FieldMismatch(f"{x.field} vs {y.field}")


def add(x: FieldElem, y: FieldElem) -> FieldElem:
    _check(x, y)
    return x + y


def sub(x: FieldElem, y: FieldElem) -> FieldElem:
    _check(x, y)
    return x - y


def mul(x: FieldElem, y: FieldElem) -> FieldElem:
    _check(x, y)
    return x * y


def neg(x: FieldElem) -> FieldElem:
    return -x


def inv(x: FieldElem) -> FieldElem:
    return x.inverse()


def power(x: FieldElem, e: int) -> FieldElem:
    return x ** e


def units(field: FieldSpec) -> list[FieldElem]:
    return field.units()
