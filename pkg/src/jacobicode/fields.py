"""Exact arithmetic in small finite fields F_{p^a} and their extensions.

An element of F_{p^a} is identified with its integer encoding
``sum(c[i] * p**i)`` where ``(c[0], ..., c[a-1])`` are its coordinates in
the power basis of the chosen modulus, low degree first.  The encoding is
also the wire format.  All hot loops (point counting, group enumeration)
work directly on these plain integers through precomputed discrete-log
tables, which is what keeps exhaustive verification affordable in pure
Python.

Default moduli are generated deterministically: for ``a >= 2`` the modulus
of F_{p^a} is the first monic irreducible polynomial of degree ``a`` when
the non-leading coefficient tuples are ordered by their integer encoding.
This makes element encodings reproducible across runs and machines without
shipping literal tables; the irreducibility of every modulus, supplied or
generated, is checked by trial factor search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import (
    DivisionByZeroError,
    FieldTooLargeError,
    NotPrimeError,
    ReducibleModulusError,
    SpecMismatchError,
)

SIZE_CAP = 1 << 16

_OP_NAMES = frozenset({"add", "sub", "neg", "mul", "inv", "pow_"})


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- raw coefficient-tuple arithmetic over F_p (bootstrap only) -------------

def _digits(x: int, p: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(x % p)
        x //= p
    return tuple(out)


def _undigits(c: Sequence[int], p: int) -> int:
    x = 0
    for ci in reversed(c):
        x = x * p + ci
    return x


def _ptrim(c: Sequence[int]) -> tuple[int, ...]:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _pmulmod(a: Sequence[int], b: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    """(a*b) mod m over F_p; m monic."""
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    return _pmod(prod, m, p)


def _pmod(a: Sequence[int], m: Sequence[int], p: int) -> tuple[int, ...]:
    a = list(a)
    dm = len(m) - 1
    while len(a) > dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i in range(dm):
                a[shift + i] = (a[shift + i] - lead * m[i]) % p
        a.pop()
    return _ptrim(a)


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial factor search: no monic divisor of degree 1..deg(m)//2."""
    deg = len(m) - 1
    if deg <= 0:
        return False
    for d in range(1, deg // 2 + 1):
        for enc in range(p ** d):
            cand = _digits(enc, p, d) + (1,)
            if not _pmod(m, cand, p):
                return False
    return True


@lru_cache(maxsize=None)
def default_modulus(p: int, a: int) -> tuple[int, ...]:
    """Canonical modulus for F_{p^a}: first irreducible in encoding order."""
    if a == 1:
        return (0, 1)
    for enc in range(p ** a):
        cand = _digits(enc, p, a) + (1,)
        if cand[0] != 0 and _is_irreducible(cand, p):
            return cand
    raise AssertionError(f"no irreducible polynomial of degree {a} over F_{p}")


class FiniteField:
    """A validated field spec for F_{p^a} plus arithmetic on encodings.

    Instances compare and hash by ``(p, a, modulus)``.  Operation tables
    are built lazily on first arithmetic use and never mutated afterwards,
    so instances are safe for unrestricted concurrent use.
    """

    def __init__(self, p: int, a: int, modulus: Sequence[int] | None = None,
                 *, allow_large: bool = False):
        if not isinstance(p, int) or not is_prime(p):
            raise NotPrimeError(f"p = {p} is not prime")
        if not isinstance(a, int) or a < 1:
            raise ValueError(f"extension degree must be a positive integer, got {a}")
        q = p ** a
        if q > SIZE_CAP and not allow_large:
            raise FieldTooLargeError(
                f"q = {q} exceeds the default cap {SIZE_CAP}; pass allow_large=True")
        if modulus is None:
            modulus = default_modulus(p, a)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != a + 1 or modulus[-1] != 1:
                raise ReducibleModulusError(
                    f"modulus must be monic of degree {a}, got {list(modulus)}")
            if not _is_irreducible(modulus, p):
                raise ReducibleModulusError(
                    f"modulus {list(modulus)} is reducible over F_{p}")
        self.p = p
        self.a = a
        self.q = q
        self.modulus = tuple(modulus)

    # -- identity ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteField):
            return NotImplemented
        return (self.p, self.a, self.modulus) == (other.p, other.a, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.a, self.modulus))

    def __reduce__(self):
        # operation tables hold closures; pickle only the spec and rebuild
        return _rebuild_field, (self.p, self.a, self.modulus)

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, a={self.a})"

    def to_dict(self) -> dict:
        return {"p": self.p, "a": self.a, "modulus": list(self.modulus)}

    @classmethod
    def from_dict(cls, d: dict) -> "FiniteField":
        return make_field(d["p"], d["a"], d.get("modulus"))

    # -- encodings ---------------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        return _digits(x, self.p, self.a)

    def encode(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.a:
            raise ValueError("too many coefficients")
        return _undigits([c % self.p for c in coeffs], self.p)

    def element(self, x: "int | Sequence[int]") -> "FieldElement":
        if isinstance(x, int):
            if not 0 <= x < self.q:
                raise ValueError(f"encoding {x} out of range for q={self.q}")
            return FieldElement(self, self.coeffs(x))
        coeffs = tuple(int(c) % self.p for c in x)
        coeffs = coeffs + (0,) * (self.a - len(coeffs))
        return FieldElement(self, coeffs)

    def elements(self) -> range:
        return range(self.q)

    # -- raw multiplication used to bootstrap the tables --------------------

    def _raw_mul(self, x: int, y: int) -> int:
        if self.p == 2:
            m = _undigits(self.modulus, 2)
            a = self.a
            r = 0
            while y:
                if y & 1:
                    r ^= x
                y >>= 1
                x <<= 1
                if (x >> a) & 1:
                    x ^= m
            return r
        prod = _pmulmod(self.coeffs(x), self.coeffs(y), self.modulus, self.p)
        return _undigits(prod, self.p)

    def _raw_pow(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._raw_mul(r, x)
            x = self._raw_mul(x, x)
            e >>= 1
        return r

    # -- lazy operation tables ----------------------------------------------

    def __getattr__(self, name: str):
        if name in _OP_NAMES:
            self._install_ops()
            return self.__dict__[name]
        raise AttributeError(name)

    def _install_ops(self) -> None:
        p, a, q = self.p, self.a, self.q
        if a == 1:
            def add(x, y):
                return (x + y) % p

            def sub(x, y):
                return (x - y) % p

            def neg(x):
                return (-x) % p

            def mul(x, y):
                return (x * y) % p

            def inv(x):
                if x == 0:
                    raise DivisionByZeroError("0 has no inverse")
                return pow(x, p - 2, p)

            def pow_(x, e):
                if x == 0:
                    if e == 0:
                        return 1
                    if e < 0:
                        raise DivisionByZeroError("0 has no inverse")
                    return 0
                return pow(x, e % (p - 1), p)
        else:
            g = self._find_generator()
            n = q - 1
            exp = [1] * n
            for i in range(1, n):
                exp[i] = self._raw_mul(exp[i - 1], g)
            log = [0] * q
            for i, v in enumerate(exp):
                log[v] = i
            exp2 = exp + exp  # spare period so mul can skip the modulus

            def mul(x, y):
                if x == 0 or y == 0:
                    return 0
                return exp2[log[x] + log[y]]

            def inv(x):
                if x == 0:
                    raise DivisionByZeroError("0 has no inverse")
                return exp[(n - log[x]) % n]

            def pow_(x, e):
                if x == 0:
                    if e == 0:
                        return 1
                    if e < 0:
                        raise DivisionByZeroError("0 has no inverse")
                    return 0
                return exp[(log[x] * e) % n]

            if p == 2:
                def add(x, y):
                    return x ^ y

                sub = add

                def neg(x):
                    return x
            else:
                negtab = [_undigits([(p - c) % p for c in self.coeffs(x)], p)
                          for x in range(q)]

                def neg(x):
                    return negtab[x]

                if q <= 1024:
                    addtab = []
                    for x in range(q):
                        cx = self.coeffs(x)
                        row = [_undigits([(cx[i] + cy) % p for i, cy in
                                          enumerate(self.coeffs(y))], p)
                               for y in range(q)]
                        addtab.append(row)

                    def add(x, y):
                        return addtab[x][y]
                else:
                    def add(x, y):
                        cx = _digits(x, p, a)
                        cy = _digits(y, p, a)
                        return _undigits([(u + v) % p for u, v in zip(cx, cy)], p)

                def sub(x, y):
                    return add(x, neg(y))

        self.__dict__.update(add=add, sub=sub, neg=neg, mul=mul, inv=inv, pow_=pow_)

    def _find_generator(self) -> int:
        q = self.q
        if q == 2:
            return 1
        n = q - 1
        factors = prime_factors(n)
        for g in range(2, q):
            if all(self._raw_pow(g, n // ell) != 1 for ell in factors):
                return g
        raise AssertionError("multiplicative group has no generator; modulus reducible?")

    # -- structure helpers used by point counting ---------------------------

    @cached_property
    def nonzero_squares(self) -> frozenset[int]:
        """Set of nonzero squares; only meaningful in odd characteristic."""
        mul = self.mul
        return frozenset(mul(x, x) for x in range(1, self.q))

    def is_square(self, x: int) -> bool:
        """Whether x is a square (0 counts as a square)."""
        if self.p == 2:
            return True  # squaring is a bijection in characteristic 2
        return x == 0 or x in self.nonzero_squares

    @cached_property
    def _trace_mask(self) -> int:
        """Bit mask m with trace(x) = popcount(x & m) mod 2; characteristic 2 only."""
        mul = self.mul
        mask = 0
        for i in range(self.a):
            basis = 1 << i
            t = 0
            x = basis
            for _ in range(self.a):
                t ^= x
                x = mul(x, x)
            if t == 1:
                mask |= 1 << i
            elif t != 0:
                raise AssertionError("trace of a basis element must be 0 or 1")
        return mask

    def trace_bit(self, x: int) -> int:
        """Absolute trace F_{2^a} -> F_2 of x; z^2 + z = x is solvable iff 0."""
        return (x & self._trace_mask).bit_count() & 1

    @cached_property
    def artin_schreier_roots(self) -> list[int]:
        """Table t with t[z*z + z] = smallest such z, -1 where unsolvable (char 2)."""
        mul, add = self.mul, self.add
        table = [-1] * self.q
        for z in range(self.q):
            c = add(mul(z, z), z)
            if table[c] < 0:
                table[c] = z
        return table

    @cached_property
    def square_roots(self) -> list[int]:
        """Table t with t[x*x] = smallest square root of x*x, -1 for non-squares."""
        mul = self.mul
        table = [-1] * self.q
        table[0] = 0
        for y in range(1, self.q):
            s = mul(y, y)
            if table[s] < 0:
                table[s] = y
        return table


@lru_cache(maxsize=None)
def _cached_field(p: int, a: int, modulus: tuple[int, ...] | None,
                  allow_large: bool) -> FiniteField:
    return FiniteField(p, a, modulus, allow_large=allow_large)


def _rebuild_field(p: int, a: int, modulus: tuple[int, ...]) -> "FiniteField":
    return _cached_field(p, a, tuple(modulus), True)


def make_field(p: int, a: int = 1, modulus: Iterable[int] | None = None,
               *, allow_large: bool = False) -> FiniteField:
    """Validated F_{p^a}; equal arguments return the same cached instance."""
    mod = tuple(int(c) for c in modulus) if modulus is not None else None
    return _cached_field(p, a, mod, allow_large)


def field_from_order(q: int, modulus: Iterable[int] | None = None,
                     *, allow_large: bool = False) -> FiniteField:
    """F_q for a prime power q, writing q = p^a with p its smallest prime factor."""
    if q < 2:
        raise NotPrimeError(f"q = {q} is not a prime power")
    p = prime_factors(q)[0]
    a = 0
    n = q
    while n > 1:
        if n % p:
            raise NotPrimeError(f"q = {q} is not a prime power")
        n //= p
        a += 1
    return make_field(p, a, modulus, allow_large=allow_large)


@dataclass(frozen=True)
class FieldElement:
    """Element of a FiniteField in reduced coordinate form.

    Equality is coefficient-wise (and requires equal field specs).  The
    wire form is the integer encoding ``sum(coeffs[i] * p**i)``.
    """

    field: FiniteField
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.field.a:
            raise ValueError("coefficient count must equal the extension degree")
        if any(not 0 <= c < self.field.p for c in self.coeffs):
            raise ValueError("coefficients must be reduced mod p")

    @property
    def encoding(self) -> int:
        return _undigits(self.coeffs, self.field.p)

    def __int__(self) -> int:
        return self.encoding

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def _peer(self, other: "FieldElement") -> None:
        if self.field != other.field:
            raise SpecMismatchError(
                f"elements of {self.field!r} and {other.field!r} cannot be combined")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._peer(other)
        F = self.field
        return F.element(F.add(self.encoding, other.encoding))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._peer(other)
        F = self.field
        return F.element(F.sub(self.encoding, other.encoding))

    def __neg__(self) -> "FieldElement":
        F = self.field
        return F.element(F.neg(self.encoding))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._peer(other)
        F = self.field
        return F.element(F.mul(self.encoding, other.encoding))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._peer(other)
        F = self.field
        return F.element(F.mul(self.encoding, F.inv(other.encoding)))

    def __pow__(self, e: int) -> "FieldElement":
        F = self.field
        return F.element(F.pow_(self.encoding, e))

    def inverse(self) -> "FieldElement":
        F = self.field
        return F.element(F.inv(self.encoding))

    def __repr__(self) -> str:
        return f"FieldElement(q={self.field.q}, enc={self.encoding})"


class FieldEmbedding:
    """Ring embedding of F_{p^a} into F_{p^(a*k)}, fixing the prime field.

    The base power-basis generator is sent to the smallest-encoding root of
    the base modulus inside the extension, which makes the embedding
    deterministic and reproducible.  Calling the embedding maps integer
    encodings; it is a field homomorphism by construction.
    """

    def __init__(self, base: FiniteField, ext: FiniteField):
        if ext.p != base.p or ext.a % base.a != 0:
            raise ValueError("extension degree must be a multiple of the base degree")
        self.base = base
        self.ext = ext
        if base.a == 1:
            self.root = 1  # only the 0th basis power is used
        elif ext == base:
            self.root = base.p  # identity: the generator maps to itself
        else:
            self.root = self._find_root()

    def _find_root(self) -> int:
        ext = self.ext
        mod = self.base.modulus  # coefficients lie in the prime field
        mul, add = ext.mul, ext.add
        for cand in range(ext.q):
            acc = 0
            for c in reversed(mod):
                acc = add(mul(acc, cand), c)
            if acc == 0:
                return cand
        raise AssertionError("base modulus has no root in the extension")

    @cached_property
    def _table(self) -> list[int]:
        base, ext, rho = self.base, self.ext, self.root
        mul, add = ext.mul, ext.add
        table = []
        for x in range(base.q):
            acc = 0
            for c in reversed(base.coeffs(x)):
                acc = add(mul(acc, rho), c)
            table.append(acc)
        return table

    def __call__(self, x: int) -> int:
        return self._table[x]

    def map_poly(self, coeffs: Sequence[int]) -> tuple[int, ...]:
        t = self._table
        return tuple(t[c] for c in coeffs)

    def element(self, e: FieldElement) -> FieldElement:
        if e.field != self.base:
            raise SpecMismatchError("element does not belong to the base field")
        return self.ext.element(self._table[e.encoding])


@lru_cache(maxsize=None)
def extend_field(field: FiniteField, k: int, *, allow_large: bool = False) -> FieldEmbedding:
    """F_{q^k} together with the embedding of F_q into it."""
    if k < 1:
        raise ValueError("extension degree k must be >= 1")
    ext = make_field(field.p, field.a * k, allow_large=allow_large)
    return FieldEmbedding(field, ext)


def lift_quadratic(field: FiniteField, *, allow_large: bool = False) -> FieldEmbedding:
    """The quadratic extension F_{q^2} with its embedding of F_q."""
    return extend_field(field, 2, allow_large=allow_large)
