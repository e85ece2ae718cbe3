"""Prime-field arithmetic: elements, sets, primality, roots of unity, binomials.

Everything downstream (polynomials, symmetric functions, searches) sits on the
two value types defined here:

* ``FieldElem`` -- a canonical residue mod a prime p, with operator overloads.
* ``FpSet``     -- a sorted, duplicate-free set of residues sharing one modulus.

Values are immutable after construction and safe to share across workers.
Moduli are capped at 63 bits; a zero denominator anywhere raises, it is never
a sentinel.
"""

from __future__ import annotations

import functools
from typing import Iterable, Iterator, List, Sequence

MAX_MODULUS_BITS = 63

# Deterministic Miller-Rabin witness set, valid for every n < 3.3 * 10^24,
# which covers all 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test for 64-bit integers."""
    if n < 0:
        raise ValueError("is_prime expects a nonnegative integer")
    if n >= 1 << 64:
        raise ValueError("is_prime supports inputs below 2**64")
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _require_prime(p: int) -> int:
    if p.bit_length() > MAX_MODULUS_BITS:
        raise ValueError(f"modulus {p} exceeds {MAX_MODULUS_BITS} bits")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return p


def inverse_mod(x: int, p: int) -> int:
    """Inverse of x mod p via Fermat; raises on zero."""
    x %= p
    if x == 0:
        raise ZeroDivisionError(f"zero is not invertible mod {p}")
    return pow(x, p - 2, p)


class FieldElem:
    """A residue mod a prime p, kept canonical in [0, p).

    Arithmetic accepts another ``FieldElem`` with the same modulus or a plain
    int (reduced mod p).  Mixing moduli raises ``ValueError``.
    """

    __slots__ = ("p", "v")

    def __init__(self, value: int, p: int):
        _require_prime(p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "v", value % p)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElem is immutable")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other.v
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FieldElem(self.v + w, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FieldElem(self.v - w, self.p)

    def __rsub__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FieldElem(w - self.v, self.p)

    def __mul__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FieldElem(self.v * w, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FieldElem(self.v * inverse_mod(w, self.p), self.p)

    def __rtruediv__(self, other):
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return FieldElem(w * inverse_mod(self.v, self.p), self.p)

    def __pow__(self, e: int):
        if e < 0:
            return FieldElem(pow(inverse_mod(self.v, self.p), -e, self.p), self.p)
        return FieldElem(pow(self.v, e, self.p), self.p)

    def __neg__(self):
        return FieldElem(-self.v, self.p)

    def inverse(self) -> "FieldElem":
        return FieldElem(inverse_mod(self.v, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.v))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"FieldElem({self.v} mod {self.p})"

    def is_zero(self) -> bool:
        return self.v == 0


class FpSet:
    """Sorted duplicate-free subset of F_p, shared modulus.

    Input values are reduced mod p and deduplicated (set semantics).
    """

    __slots__ = ("p", "elems", "_mask")

    def __init__(self, p: int, values: Iterable[int] = ()):
        _require_prime(p)
        vals = sorted({int(v) % p for v in values})
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "elems", tuple(vals))
        object.__setattr__(self, "_mask", None)

    def __setattr__(self, name, value):
        raise AttributeError("FpSet is immutable")

    @property
    def mask(self) -> int:
        """Bitset of membership, bit v set iff v in the set."""
        if self._mask is None:
            m = 0
            for v in self.elems:
                m |= 1 << v
            object.__setattr__(self, "_mask", m)
        return self._mask

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elems)

    def __contains__(self, v) -> bool:
        if isinstance(v, FieldElem):
            if v.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {v.p}")
            v = v.v
        return (self.mask >> (int(v) % self.p)) & 1 == 1

    def __eq__(self, other):
        return (
            isinstance(other, FpSet) and self.p == other.p and self.elems == other.elems
        )

    def __hash__(self):
        return hash((self.p, self.elems))

    def __repr__(self):
        return f"FpSet(p={self.p}, {{{', '.join(map(str, self.elems))}}})"

    def field_elems(self) -> List[FieldElem]:
        return [FieldElem(v, self.p) for v in self.elems]

    def translate(self, t: int) -> "FpSet":
        t = int(t) % self.p
        return FpSet(self.p, ((v + t) % self.p for v in self.elems))

    def scale(self, c: int) -> "FpSet":
        c = int(c) % self.p
        if c == 0:
            raise ValueError("scaling by zero collapses the set")
        return FpSet(self.p, (v * c % self.p for v in self.elems))

    def __neg__(self) -> "FpSet":
        return FpSet(self.p, ((-v) % self.p for v in self.elems))

    def _same_field(self, other: "FpSet") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def sumset(self, other: "FpSet") -> "FpSet":
        self._same_field(other)
        p = self.p
        return FpSet(p, ((a + b) % p for a in self.elems for b in other.elems))

    def diffset(self, other: "FpSet") -> "FpSet":
        """The set {a - b : a in self, b in other}."""
        self._same_field(other)
        p = self.p
        return FpSet(p, ((a - b) % p for a in self.elems for b in other.elems))

    def union(self, other: "FpSet") -> "FpSet":
        self._same_field(other)
        return FpSet(self.p, self.elems + other.elems)


@functools.lru_cache(maxsize=None)
def _factorize(n: int) -> tuple:
    fs = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            fs.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        fs.append(n)
    return tuple(fs)


@functools.lru_cache(maxsize=None)
def primitive_root(p: int) -> int:
    """Smallest generator of the cyclic group F_p*."""
    _require_prime(p)
    if p == 2:
        return 1
    n = p - 1
    factors = _factorize(n)
    g = 2
    while True:
        if all(pow(g, n // q, p) != 1 for q in factors):
            return g
        g += 1


def roots_of_unity(p: int, d: int) -> FpSet:
    """The subgroup mu_d of d-th roots of unity in F_p*; requires d | p-1."""
    _require_prime(p)
    if d <= 0:
        raise ValueError("d must be positive")
    if (p - 1) % d != 0:
        raise ValueError(f"d={d} does not divide p-1={p - 1}")
    g = primitive_root(p)
    eta = pow(g, (p - 1) // d, p)
    out = []
    x = 1
    for _ in range(d):
        out.append(x)
        x = x * eta % p
    assert len(set(out)) == d
    return FpSet(p, out)


_FACT_TABLE_LIMIT = 1 << 20
_fact_cache: dict = {}


def _factorials(p: int, n: int) -> list:
    tbl = _fact_cache.get(p)
    if tbl is None or len(tbl) <= n:
        start = 1 if tbl is None else len(tbl)
        tbl = tbl or [1]
        for i in range(start, n + 1):
            tbl.append(tbl[-1] * i % p)
        _fact_cache[p] = tbl
    return tbl


def _binom_small(n: int, k: int, p: int) -> int:
    # n < p guaranteed: no factorial below is divisible by p
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    if n <= _FACT_TABLE_LIMIT:
        f = _factorials(p, n)
        return f[n] * pow(f[k] * f[n - k] % p, p - 2, p) % p
    num = 1
    den = 1
    for j in range(1, k + 1):
        num = num * ((n - k + j) % p) % p
        den = den * j % p
    return num * pow(den, p - 2, p) % p


def binom_mod(n: int, k: int, p: int) -> FieldElem:
    """Binomial coefficient C(n, k) mod p.

    For n < p this is a straight factorial computation; for n >= p the
    base-p digit product rule (Lucas) applies.
    """
    _require_prime(p)
    if k < 0 or k > n:
        raise ValueError(f"binom_mod requires 0 <= k <= n, got n={n}, k={k}")
    result = 1
    while n or k:
        nd, n = n % p, n // p
        kd, k = k % p, k // p
        if kd > nd:
            return FieldElem(0, p)
        result = result * _binom_small(nd, kd, p) % p
    return FieldElem(result, p)


def batch_inverse_ints(values: Sequence[int], p: int) -> List[int]:
    """Inverses of a list of nonzero residues, one field inversion total."""
    n = len(values)
    if n == 0:
        return []
    prefix = [0] * n
    acc = 1
    for i, v in enumerate(values):
        v %= p
        if v == 0:
            raise ZeroDivisionError("batch inversion of zero")
        acc = acc * v % p
        prefix[i] = acc
    inv = pow(acc, p - 2, p)
    out = [0] * n
    for i in range(n - 1, 0, -1):
        out[i] = inv * prefix[i - 1] % p
        inv = inv * (values[i] % p) % p
    out[0] = inv
    return out


def batch_inverse(values: Sequence[FieldElem]) -> List[FieldElem]:
    """Elementwise inverses via the Montgomery product trick."""
    if not values:
        return []
    p = values[0].p
    for x in values:
        if x.p != p:
            raise ValueError("batch_inverse requires a shared modulus")
    return [FieldElem(v, p) for v in batch_inverse_ints([x.v for x in values], p)]


def inverse_table(p: int, n: int) -> List[int]:
    """Inverses of 1..n mod p via the standard linear recurrence.

    Index i holds the inverse of i; index 0 is unused.  Requires n < p.
    """
    _require_prime(p)
    if n >= p:
        raise ValueError("inverse_table needs n < p")
    inv = [0] * (n + 1)
    if n >= 1:
        inv[1] = 1
    for i in range(2, n + 1):
        inv[i] = -(p // i) * inv[p % i] % p
    return inv
