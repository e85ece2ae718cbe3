"""Dense univariate polynomials over F_p and truncated Laurent series.

``FpPoly`` stores coefficients low-degree first as plain ints in [0, p), with
no trailing zeros; the zero polynomial is the empty tuple.  Degrees in this
project stay below p, so the dense representation is all that is needed.

``TruncatedSeries`` represents sum_j c_j (x - center)^(start+j) + O((x-center)^order),
with ``center`` either a residue or the AT_INFINITY sentinel (in which case the
local parameter is 1/x and exponent j means x^(-j)).
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple, Union

from .fp import FieldElem, FpSet, _require_prime, inverse_mod


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AT_INFINITY"


AT_INFINITY = _Infinity()

Center = Union[int, _Infinity]


class FpPoly:
    """Dense polynomial over F_p, coefficients low-degree first."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        _require_prime(p)
        cs = [int(c) % p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls(p, (1,))

    @classmethod
    def x(cls, p: int) -> "FpPoly":
        return cls(p, (0, 1))

    @classmethod
    def monomial(cls, p: int, coeff: int, degree: int) -> "FpPoly":
        return cls(p, [0] * degree + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _same_field(self, other: "FpPoly") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __eq__(self, other):
        return (
            isinstance(other, FpPoly) and self.p == other.p and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return f"FpPoly(p={self.p}, 0)"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*x^{j}" if j else str(c))
        return f"FpPoly(p={self.p}, {' + '.join(terms)})"

    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._same_field(other)
        p = self.p
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = (out[i] + c) % p
        return FpPoly(p, out)

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __neg__(self) -> "FpPoly":
        return FpPoly(self.p, ((-c) % self.p for c in self.coeffs))

    def __mul__(self, other) -> "FpPoly":
        p = self.p
        if isinstance(other, int):
            return FpPoly(p, (c * other % p for c in self.coeffs))
        self._same_field(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly.zero(p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] = (out[i + j] + ai * bj) % p
        return FpPoly(p, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FpPoly":
        if e < 0:
            raise ValueError("negative polynomial power")
        result = FpPoly.one(self.p)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def evaluate(self, x) -> FieldElem:
        xv = x.v if isinstance(x, FieldElem) else int(x) % self.p
        return FieldElem(self.eval_int(xv), self.p)

    def eval_int(self, x: int) -> int:
        p = self.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % p
        return acc

    def derivative(self) -> "FpPoly":
        p = self.p
        return FpPoly(p, (j * c % p for j, c in enumerate(self.coeffs) if j > 0))

    def monic(self) -> "FpPoly":
        if not self.coeffs:
            return self
        inv = inverse_mod(self.coeffs[-1], self.p)
        return self * inv

    def divmod(self, other: "FpPoly") -> Tuple["FpPoly", "FpPoly"]:
        self._same_field(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        db = other.degree
        inv_lead = inverse_mod(other.coeffs[-1], p)
        q = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            f = c * inv_lead % p
            q[i - db] = f
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] = (rem[i - db + j] - f * bc) % p
        return FpPoly(p, q), FpPoly(p, rem[:db])

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return self.divmod(other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return self.divmod(other)[1]

    def synth_div(self, a: int) -> Tuple["FpPoly", int]:
        """Divide by (x - a): returns (quotient, remainder), remainder = f(a)."""
        p = self.p
        a %= p
        if not self.coeffs:
            return FpPoly.zero(p), 0
        out = [0] * (len(self.coeffs) - 1)
        acc = 0
        for j in range(len(self.coeffs) - 1, -1, -1):
            acc = (acc * a + self.coeffs[j]) % p
            if j > 0:
                out[j - 1] = acc
        return FpPoly(p, out), acc

    def root_multiplicity(self, a: int) -> int:
        """Multiplicity of a as a root (0 if not a root)."""
        m = 0
        f = self
        while not f.is_zero():
            q, r = f.synth_div(a)
            if r != 0:
                break
            m += 1
            f = q
        return m

    def shift_arg(self, t: int) -> "FpPoly":
        """The polynomial f(x + t)."""
        n = len(self.coeffs) + 1
        series = taylor_at(self, int(t) % self.p, n)
        return FpPoly(self.p, [series.coefficient(j).v for j in range(n)])


def poly_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    """Monic gcd via Euclid."""
    a._same_field(b)
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def from_roots(roots: FpSet, multiplicity: int = 1) -> FpPoly:
    """Monic polynomial with the given root set, each root repeated
    ``multiplicity`` times."""
    if len(roots) == 0:
        raise ValueError("from_roots requires a nonempty root set")
    if multiplicity < 1:
        raise ValueError("multiplicity must be positive")
    p = roots.p
    out = [1]
    for r in roots:
        neg = (-r) % p
        for _ in range(multiplicity):
            nxt = [0] * (len(out) + 1)
            for i, c in enumerate(out):
                nxt[i + 1] = (nxt[i + 1] + c) % p
                nxt[i] = (nxt[i] + c * neg) % p
            out = nxt
    return FpPoly(p, out)


class TruncatedSeries:
    """Truncated Laurent series at a finite center or at infinity.

    Represents sum_{j} coeffs[j] * u^(start+j) + O(u^order) where u is
    (x - center) for a finite center and 1/x at infinity.  ``order`` is
    exclusive: exponents >= order are unknown.
    """

    __slots__ = ("p", "center", "start", "coeffs", "order")

    def __init__(self, p: int, center: Center, start: int, coeffs: Sequence[int], order: int):
        _require_prime(p)
        cs = [int(c) % p for c in coeffs]
        # normalize: drop leading zeros (raising start), clip at order
        while cs and cs[0] == 0:
            cs.pop(0)
            start += 1
        if start + len(cs) > order:
            cs = cs[: max(order - start, 0)]
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            start = order
        if not isinstance(center, _Infinity):
            center = int(center) % p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def _compat(self, other: "TruncatedSeries") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")
        if self.center != other.center:
            raise ValueError("series have different centers")

    def coefficient(self, j: int) -> FieldElem:
        """Coefficient of u^j; raises if j is beyond the truncation order."""
        if j >= self.order:
            raise ValueError(f"exponent {j} at or beyond truncation order {self.order}")
        if j < self.start or j >= self.start + len(self.coeffs):
            return FieldElem(0, self.p)
        return FieldElem(self.coeffs[j - self.start], self.p)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.p == other.p
            and self.center == other.center
            and self.start == other.start
            and self.coeffs == other.coeffs
            and self.order == other.order
        )

    def __repr__(self):
        at = "inf" if isinstance(self.center, _Infinity) else self.center
        return (
            f"TruncatedSeries(p={self.p}, center={at}, start={self.start}, "
            f"coeffs={list(self.coeffs)}, O(u^{self.order}))"
        )

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._compat(other)
        order = min(self.order, other.order)
        if self.is_zero() and other.is_zero():
            return TruncatedSeries(self.p, self.center, order, (), order)
        start = min(self.start, other.start)
        n = max(self.start + len(self.coeffs), other.start + len(other.coeffs)) - start
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[self.start - start + i] = c
        for i, c in enumerate(other.coeffs):
            out[other.start - start + i] = (out[other.start - start + i] + c) % self.p
        return TruncatedSeries(self.p, self.center, start, out, order)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.p, self.center, self.start, [(-c) % self.p for c in self.coeffs], self.order
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        p = self.p
        if isinstance(other, int):
            return TruncatedSeries(
                p, self.center, self.start, [c * other % p for c in self.coeffs], self.order
            )
        self._compat(other)
        # f known mod u^o1 with valuation v1, g mod u^o2 with valuation v2:
        # f*g is known mod u^min(o1+v2, o2+v1)
        v1 = self.start if self.coeffs else self.order
        v2 = other.start if other.coeffs else other.order
        order = min(self.order + v2, other.order + v1)
        if not self.coeffs or not other.coeffs:
            return TruncatedSeries(p, self.center, order, (), order)
        start = self.start + other.start
        n = min(len(self.coeffs) + len(other.coeffs) - 1, order - start)
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if i + j < n:
                        out[i + j] = (out[i + j] + a * b) % p
        return TruncatedSeries(p, self.center, start, out, order)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; the lowest known coefficient must be nonzero."""
        if not self.coeffs:
            raise ZeroDivisionError("cannot invert a series with no known terms")
        p = self.p
        v = self.start
        rel = list(self.coeffs)
        n = self.order - v  # known length of the unit part
        c0_inv = inverse_mod(rel[0], p)
        out = [0] * n
        out[0] = c0_inv
        for j in range(1, n):
            acc = 0
            for i in range(1, min(j, len(rel) - 1) + 1):
                acc = (acc + rel[i] * out[j - i]) % p
            out[j] = (-c0_inv * acc) % p
        # 1/f has valuation -v; known mod u^(order - 2v)
        return TruncatedSeries(p, self.center, -v, out, self.order - 2 * v)

    def shift_exponent(self, k: int) -> "TruncatedSeries":
        """Multiply by u^k."""
        return TruncatedSeries(
            self.p, self.center, self.start + k, self.coeffs, self.order + k
        )


def taylor_at(f: FpPoly, a, order: int) -> TruncatedSeries:
    """Expansion of f in powers of (x - a), to the given exclusive order.

    Computed by repeated synthetic division, so no factorial ever needs to be
    inverted mod p.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    p = f.p
    av = a.v if isinstance(a, FieldElem) else int(a) % p
    out = []
    g = f
    for _ in range(min(order, len(f.coeffs) + 1)):
        g, r = g.synth_div(av)
        out.append(r)
        if g.is_zero():
            break
    return TruncatedSeries(p, av, 0, out, order)


def _reversed_series(f: FpPoly, length: int, order: int) -> TruncatedSeries:
    """Series of t^deg(f) * f(1/t) in t, padded to the given length."""
    cs = list(reversed(f.coeffs))
    cs += [0] * (length - len(cs))
    return TruncatedSeries(f.p, AT_INFINITY, 0, cs[:length], order)


def log_derivative_series(g: FpPoly, center, order: int) -> TruncatedSeries:
    """Truncated expansion of g'/g at a finite center or at infinity.

    At infinity the coefficient of x^(-l-1) is the l-th power sum of the root
    multiset of g.  At a simple root b the series is 1/(x-b) plus a regular
    part; a multiple root is rejected.
    """
    if g.is_zero():
        raise ZeroDivisionError("log derivative of the zero polynomial")
    if order < 1:
        raise ValueError("order must be >= 1")
    p = g.p
    gp = g.derivative()
    if isinstance(center, _Infinity):
        # g'/g = (1/x) * rev(g')(t) / rev(g)(t) * t^(deg g - 1 - deg g') ... with
        # deg g' = deg g - 1 when p does not divide deg g; handle the general
        # case by aligning both reversals to deg g.
        n = order + 1
        dg = g.degree
        rev_g = _reversed_series(g, n, n)
        # t^dg * g'(1/t) has valuation >= 1 in general; build it directly
        cs = [0] * n
        for j, c in enumerate(gp.coeffs):
            e = dg - j  # exponent of t for x^j term under t^dg * (1/t)^j
            if 0 <= e < n:
                cs[e] = c
        rev_gp = TruncatedSeries(p, AT_INFINITY, 0, cs, n)
        # t^dg g'(1/t) / (t^dg g(1/t)) = (g'/g)(x) expressed in t = 1/x
        ratio = rev_gp * rev_g.inverse()
        return TruncatedSeries(p, AT_INFINITY, ratio.start, ratio.coeffs, order)
    cv = center.v if isinstance(center, FieldElem) else int(center) % p
    mult = g.root_multiplicity(cv)
    if mult > 1:
        raise ValueError(f"{cv} is a root of multiplicity {mult} > 1")
    if mult == 1:
        u, r = g.synth_div(cv)
        assert r == 0
        regular = _series_ratio(u.derivative(), u, cv, order)
        principal = TruncatedSeries(p, cv, -1, (1,), order)
        return principal + regular
    return _series_ratio(gp, g, cv, order)


def _series_ratio(num: FpPoly, den: FpPoly, center: int, order: int) -> TruncatedSeries:
    """num/den expanded at a finite center where den does not vanish."""
    extra = order + 1
    ns = taylor_at(num, center, extra)
    ds = taylor_at(den, center, extra)
    prod = ns * ds.inverse()
    return TruncatedSeries(num.p, center, prod.start, prod.coeffs, order)
