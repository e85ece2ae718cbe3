"""Residue calculus for rational differential forms num/den dx on the
projective line over F_p, plus the five named forms built from two sets.

Residue conventions: at a finite b, the coefficient of 1/(x-b) in the Laurent
expansion; at infinity, minus the coefficient of x^(-1).  For a form whose
denominator splits completely over F_p the residues over P^1 sum to zero,
and ``sum_residues_check`` verifies exactly that; denominators with
irrational roots are reported as inconclusive rather than extended.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .fp import FieldElem, FpSet, batch_inverse_ints, inverse_mod
from .poly import AT_INFINITY, FpPoly, TruncatedSeries, from_roots, poly_gcd, taylor_at
from .symm import power_sums_int


class RationalForm:
    """A differential form (num/den) dx, stored gcd-reduced."""

    __slots__ = ("p", "num", "den")

    def __init__(self, num: FpPoly, den: FpPoly):
        if num.p != den.p:
            raise ValueError("numerator and denominator over different fields")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num // g
            den = den // g
        object.__setattr__(self, "p", num.p)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalForm is immutable")

    def __repr__(self):
        return f"RationalForm(({self.num!r}) / ({self.den!r}) dx)"

    def __eq__(self, other):
        if not isinstance(other, RationalForm):
            return NotImplemented
        # equality as rational functions: cross-multiply
        return self.p == other.p and self.num * other.den == other.num * self.den


def residue_at(form: RationalForm, b) -> FieldElem:
    """Coefficient of 1/(x-b); zero at a non-pole."""
    p = form.p
    bv = b.v if isinstance(b, FieldElem) else int(b) % p
    v = form.den.root_multiplicity(bv)
    if v == 0:
        return FieldElem(0, p)
    u = form.den
    for _ in range(v):
        u, r = u.synth_div(bv)
        assert r == 0
    ns = taylor_at(form.num, bv, v + 1)
    us = taylor_at(u, bv, v + 1)
    prod = ns * us.inverse()
    return prod.coefficient(v - 1)


def residue_at_infinity(form: RationalForm) -> FieldElem:
    """Minus the x^(-1) coefficient of the expansion at infinity."""
    p = form.p
    if form.num.is_zero():
        return FieldElem(0, p)
    dn, dd = form.num.degree, form.den.degree
    m = 1 - dd + dn  # exponent of t = 1/x carrying x^(-1) in num_rev/den_rev
    if m < 0:
        return FieldElem(0, p)
    length = m + 1
    nrev = list(reversed(form.num.coeffs)) + [0] * length
    drev = list(reversed(form.den.coeffs)) + [0] * length
    ns = TruncatedSeries(p, AT_INFINITY, 0, nrev[:length], length)
    ds = TruncatedSeries(p, AT_INFINITY, 0, drev[:length], length)
    coeff = (ns * ds.inverse()).coefficient(m)
    return FieldElem((-coeff.v) % p, p)


def _poly_pow_mod(base: FpPoly, e: int, mod: FpPoly) -> FpPoly:
    result = FpPoly.one(base.p)
    base = base % mod
    while e:
        if e & 1:
            result = result * base % mod
        base = base * base % mod
        e >>= 1
    return result


def _roots_of_split_squarefree(u: FpPoly) -> List[int]:
    """Roots of a monic squarefree product of distinct linear factors."""
    p = u.p
    stack = [u.monic()]
    roots: List[int] = []
    while stack:
        g = stack.pop()
        if g.degree <= 0:
            continue
        if g.degree == 1:
            roots.append((-g[0]) * inverse_mod(g[1], p) % p)
            continue
        c = 0
        while True:
            c += 1
            h = _poly_pow_mod(FpPoly(p, [c, 1]), (p - 1) // 2, g) - FpPoly.one(p)
            w = poly_gcd(h, g)
            if 0 < w.degree < g.degree:
                stack.append(w)
                stack.append((g // w).monic())
                break
    return sorted(roots)


def rational_root_part(f: FpPoly) -> Tuple[Dict[int, int], FpPoly]:
    """({root: multiplicity}, cofactor); the cofactor has no roots in F_p."""
    p = f.p
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree == 0:
        return {}, f
    if p <= 1024:
        roots: Dict[int, int] = {}
        g = f
        for r in range(p):
            m = 0
            while True:
                q, rem = g.synth_div(r)
                if rem != 0:
                    break
                g = q
                m += 1
            if m:
                roots[r] = m
            if g.degree == 0:
                break
        return roots, g
    xp = _poly_pow_mod(FpPoly.x(p), p, f)
    u = poly_gcd(xp - FpPoly.x(p), f)
    roots = {}
    g = f
    for r in _roots_of_split_squarefree(u) if u.degree > 0 else []:
        m = 0
        while True:
            q, rem = g.synth_div(r)
            if rem != 0:
                break
            g = q
            m += 1
        roots[r] = m
    return roots, g


@dataclass(frozen=True)
class ResidueTable:
    form: RationalForm
    finite: Dict[int, FieldElem]
    at_infinity: FieldElem
    total: FieldElem


@dataclass(frozen=True)
class ResidueCheck:
    status: str  # "zero" | "nonzero" | "inconclusive"
    table: Optional[ResidueTable]

    @property
    def ok(self) -> bool:
        return self.status == "zero"


def residue_table(form: RationalForm) -> Tuple[ResidueTable, bool]:
    """(table, split): residues at every rational pole plus infinity.

    ``split`` is False when the reduced denominator keeps a factor with no
    rational root, in which case the total omits those poles.
    """
    p = form.p
    roots, cofactor = rational_root_part(form.den)
    finite = {r: residue_at(form, r) for r in sorted(roots)}
    inf = residue_at_infinity(form)
    total = (sum(v.v for v in finite.values()) + inf.v) % p
    return (
        ResidueTable(form, finite, inf, FieldElem(total, p)),
        cofactor.degree == 0,
    )


def sum_residues_check(form: RationalForm) -> ResidueCheck:
    """Check that residues over P^1 sum to zero.

    Inconclusive when the denominator does not split completely over F_p.
    """
    table, split = residue_table(form)
    if not split:
        return ResidueCheck("inconclusive", table)
    return ResidueCheck("zero" if table.total.v == 0 else "nonzero", table)


# ---------------------------------------------------------------------------
# The five named forms: built from g(x) = prod_{b in B} (x - b) and
# h(x) = prod_{a in A} (x + a).

FORM_NAMES = ("omega20", "omega11", "omega30", "psi", "omega21")


def named_form(which: str, A: Optional[FpSet], B: FpSet, k: int) -> RationalForm:
    """Construct the named differential form for the supplied sets.

    omega20 = x^(k+1) (g'/g)^2 dx          omega30 = x^(k+2) (g'/g)^3 dx
    omega11 = x^(k+1) (g'/g)(h'/h) dx      psi     = x^(k+2) (g'/g)' (h'/h) dx
    omega21 = x^(k+2) (g'/g)^2 (h'/h) dx
    """
    p = B.p
    if which not in FORM_NAMES:
        raise ValueError(f"unknown form {which!r}")
    g = from_roots(B, 1)
    gp = g.derivative()
    xk1 = FpPoly.monomial(p, 1, k + 1)
    xk2 = FpPoly.monomial(p, 1, k + 2)
    if which == "omega20":
        return RationalForm(xk1 * gp * gp, g * g)
    if which == "omega30":
        return RationalForm(xk2 * gp * gp * gp, g * g * g)
    if A is None:
        raise ValueError(f"form {which!r} needs the set A")
    if A.p != p:
        raise ValueError("A and B over different fields")
    h = from_roots(-A, 1)  # prod (x + a)
    hp_ = h.derivative()
    if which == "omega11":
        return RationalForm(xk1 * gp * hp_, g * h)
    if which == "psi":
        gg = g.derivative().derivative() * g - gp * gp  # (g'/g)' numerator
        return RationalForm(xk2 * gg * hp_, g * g * h)
    # omega21
    return RationalForm(xk2 * gp * gp * hp_, g * g * h)


@dataclass(frozen=True)
class FormIdentityReport:
    which: str
    k: int
    mode: str
    ok: bool
    residues_match_series: bool
    total_zero: bool
    lhs: FieldElem
    rhs: FieldElem
    hypothesis_failures: Tuple[str, ...] = ()


def _closed_residues(which: str, A: Optional[FpSet], B: FpSet, k: int):
    """Closed-form residues: ({finite pole: value}, value at infinity)."""
    p = B.p
    pB = power_sums_int(B, k + 2)
    s1 = {}
    s2 = {}
    for b in B.elems:
        inv = batch_inverse_ints([(b - bp) % p for bp in B.elems if bp != b], p)
        s1[b] = sum(inv) % p
        s2[b] = sum(x * x % p for x in inv) % p
    if which == "omega20":
        fin = {
            b: ((k + 1) * pow(b, k, p) + 2 * pow(b, k + 1, p) * s1[b]) % p
            for b in B.elems
        }
        inf = (-sum(pB[r] * pB[k - r] % p for r in range(k + 1))) % p
        return fin, inf
    if which == "omega30":
        half = inverse_mod(2, p)
        fin = {}
        for b in B.elems:
            val = (
                (k + 2) * (k + 1) % p * half % p * pow(b, k, p)
                + 3 * (k + 2) % p * pow(b, k + 1, p) % p * s1[b]
                + 3 * pow(b, k + 2, p) % p * ((s1[b] * s1[b] - s2[b]) % p)
            ) % p
            fin[b] = val
        inf = (
            -sum(
                pB[r] * pB[s] % p * pB[k - r - s] % p
                for r in range(k + 1)
                for s in range(k + 1 - r)
            )
        ) % p
        return fin, inf
    assert A is not None
    pA = power_sums_int(A, k + 2)
    negA = [(-a) % p for a in A.elems]
    if set(negA) & set(B.elems):
        raise ValueError("poles collide: (-A) meets B")
    t1 = {}
    t2 = {}
    for b in B.elems:
        inv = batch_inverse_ints([(a + b) % p for a in A.elems], p)
        t1[b] = sum(inv) % p
        t2[b] = sum(x * x % p for x in inv) % p
    u1 = {}
    u2 = {}
    for a in A.elems:
        inv = batch_inverse_ints([(a + b) % p for b in B.elems], p)
        u1[a] = sum(inv) % p
        u2[a] = sum(x * x % p for x in inv) % p
    sgnk = 1 if k % 2 == 0 else p - 1
    fin = {}
    if which == "omega11":
        for b in B.elems:
            fin[b] = pow(b, k + 1, p) * t1[b] % p
        for a in A.elems:
            fin[(-a) % p] = sgnk * pow(a, k + 1, p) % p * u1[a] % p
        inf = (
            -sum(
                (pA[r] if r % 2 == 0 else -pA[r]) * pB[k - r] for r in range(k + 1)
            )
        ) % p
        return fin, inf
    if which == "psi":
        for b in B.elems:
            fin[b] = (
                -(k + 2) * pow(b, k + 1, p) % p * t1[b] + pow(b, k + 2, p) * t2[b]
            ) % p
        for a in A.elems:
            fin[(-a) % p] = (-sgnk * pow(a, k + 2, p) % p * u2[a]) % p
        inf = (
            sum(
                (pA[r] if r % 2 == 0 else -pA[r]) * (k - r + 1) % p * pB[k - r]
                for r in range(k + 1)
            )
        ) % p
        return fin, inf
    # omega21
    for b in B.elems:
        fin[b] = (
            2 * pow(b, k + 2, p) * s1[b] % p * t1[b]
            + (k + 2) * pow(b, k + 1, p) % p * t1[b]
            - pow(b, k + 2, p) * t2[b]
        ) % p
    for a in A.elems:
        fin[(-a) % p] = sgnk * pow(a, k + 2, p) % p * u1[a] % p * u1[a] % p
    inf = (
        -sum(
            pB[r] * pB[s] % p * (pA[t] if t % 2 == 0 else -pA[t]) % p
            for r in range(k + 1)
            for s in range(k + 1 - r)
            for t in [k - r - s]
        )
    ) % p
    return fin, inf


def _surviving_term_failures(k: int, *factors) -> List[str]:
    """Index-k collapse hypotheses, checked termwise: every product of power
    sums at positive indices summing to k must vanish.  ``factors`` are
    (label, power-sum list) pairs; two entries check the pair terms, three
    the triple terms.  Covers both the least-index case (everything below k
    zero) and the secondary-index case (survivors are multiples of the least
    index, which cannot sum to k)."""
    failures = []
    if len(factors) == 2:
        (la, pa), (lb, pb) = factors
        for r in range(1, k):
            if pa[r] and pb[k - r]:
                failures.append(f"surviving term p_{r}({la})*p_{k - r}({lb})")
    else:
        (la, pa), (lb, pb), (lc, pc) = factors
        for r in range(1, k - 1):
            if not pa[r]:
                continue
            for s in range(1, k - r):
                t = k - r - s
                if t >= 1 and pb[s] and pc[t]:
                    failures.append(
                        f"surviving term p_{r}({la})*p_{s}({lb})*p_{t}({lc})"
                    )
    return failures


def _specialized_check(which, A, B, k, fin, report_kw):
    """The final displayed identities under the vanishing-power-sum and
    critical-pair hypotheses; returns (failures, lhs, rhs).

    The hypothesis set depends on which products appear in the residue at
    infinity: B-pair terms for omega20/omega30/omega21, B-triples for
    omega30, A-B cross pairs for the mixed forms, and (B,B,A) triples for
    omega21."""
    p = B.p
    beta = len(B)
    pB = power_sums_int(B, k)
    failures = []
    if pB[k] == 0:
        failures.append(f"p_{k}(B) = 0")
    if which in ("omega20", "omega30", "omega21"):
        failures += _surviving_term_failures(k, ("B", pB), ("B", pB))
    if which == "omega30":
        failures += _surviving_term_failures(k, ("B", pB), ("B", pB), ("B", pB))
    half = inverse_mod(2, p)
    third = inverse_mod(3, p)
    s1 = {}
    for b in B.elems:
        inv = batch_inverse_ints([(b - bp) % p for bp in B.elems if bp != b], p)
        s1[b] = sum(inv) % p
    pkB = pB[k]
    if which == "omega20":
        lhs = sum(pow(b, k + 1, p) * s1[b] for b in B.elems) % p
        rhs = pkB * ((beta - (k + 1) * half) % p) % p
        return failures, lhs, rhs
    if which == "omega30":
        s2 = {}
        for b in B.elems:
            inv = batch_inverse_ints([(b - bp) % p for bp in B.elems if bp != b], p)
            s2[b] = sum(x * x % p for x in inv) % p
        gamma2 = (beta * beta - (k + 2) * beta + (k + 1) * (k + 2) % p * third) % p
        lhs = sum(
            pow(b, k + 2, p) * ((s1[b] * s1[b] - s2[b]) % p) for b in B.elems
        ) % p
        rhs = gamma2 * pkB % p
        return failures, lhs, rhs
    alpha = len(A)
    pA = power_sums_int(A, k)
    failures += _surviving_term_failures(k, ("A", pA), ("B", pB))
    if which == "omega21":
        failures += _surviving_term_failures(k, ("B", pB), ("B", pB), ("A", pA))
    if which == "omega11":
        t1 = {b: sum(batch_inverse_ints([(a + b) % p for a in A.elems], p)) % p for b in B.elems}
        u1 = {a: sum(batch_inverse_ints([(a + b) % p for b in B.elems], p)) % p for a in A.elems}
        sgnk = 1 if k % 2 == 0 else p - 1
        lhs = (
            sum(pow(b, k + 1, p) * t1[b] for b in B.elems)
            + sgnk * sum(pow(a, k + 1, p) * u1[a] for a in A.elems)
        ) % p
        rhs = (alpha * pkB + sgnk * beta % p * pA[k]) % p
        return failures, lhs, rhs
    # psi and omega21 additionally need the critical-pair setting
    from .hp import criticality

    d = alpha * beta
    if alpha != beta:
        failures.append("alpha != beta")
    if k % 2 != 0:
        failures.append("k is odd")
    if (pA[k] + pkB) % p != 0:
        failures.append("p_k(A) != -p_k(B)")
    rep = criticality(A, B, d)
    if not (rep.critical and rep.exact == "mu_d"):
        failures.append("A + B != mu_d")
    if (d - 1) % p == 0 or (d - 2) % p == 0:
        failures.append("d-1 or d-2 vanishes mod p")
        return failures, 0, 0
    gamma0 = alpha * (alpha + 1) % p * inverse_mod((d - 1) % p, p) % p
    gamma3 = (alpha - (k + 1) * half) % p
    if which == "psi":
        gamma4 = ((k + 2) * gamma0 % p * gamma3 - k * alpha) % p
        lhs = 0
        for a in A.elems:
            for b in B.elems:
                w = inverse_mod((a + b) % p, p)
                lhs = (lhs + (pow(b, k + 2, p) - pow(a, k + 2, p)) * w % p * w) % p
        rhs = gamma4 * pkB % p
        return failures, lhs, rhs
    # omega21
    gamma5 = (alpha * alpha - (k + 2) * gamma0 % p * gamma3) % p
    t1 = {b: sum(batch_inverse_ints([(a + b) % p for a in A.elems], p)) % p for b in B.elems}
    u1 = {a: sum(batch_inverse_ints([(a + b) % p for b in B.elems], p)) % p for a in A.elems}
    cross = 0
    for a in A.elems:
        for b in B.elems:
            w = inverse_mod((a + b) % p, p)
            cross = (cross + pow(b, k + 2, p) * w % p * w) % p
    lhs = (
        sum(pow(a, k + 2, p) * u1[a] % p * u1[a] for a in A.elems)
        + 2 * inverse_mod(gamma0, p) % p
        * sum(pow(b, k + 2, p) * t1[b] % p * t1[b] for b in B.elems)
        - cross
    ) % p
    rhs = gamma5 * pkB % p
    return failures, lhs, rhs


def lemma_form_identity(
    which: str,
    A: Optional[FpSet],
    B: FpSet,
    k: int,
    mode: str = "general",
) -> FormIdentityReport:
    """Verify the residue identity attached to a named form.

    General mode checks the unconditional consequence of the vanishing total
    residue: every closed-form residue matches the series computation, and the
    finite residues sum to minus the residue at infinity.  Specialized mode
    additionally requires the vanishing-power-sum / critical-pair hypotheses
    (checked, with precise failures reported) and verifies the final displayed
    identity with its gamma constant.
    """
    if mode not in ("general", "specialized"):
        raise ValueError(f"unknown mode {mode!r}")
    p = B.p
    if k < 0:
        raise ValueError("k must be nonnegative")
    form = named_form(which, A, B, k)
    fin, inf = _closed_residues(which, A, B, k)
    match = True
    for pole, val in fin.items():
        if residue_at(form, pole).v != val:
            match = False
    if residue_at_infinity(form).v != inf:
        match = False
    total = (sum(fin.values()) + inf) % p
    lhs = sum(fin.values()) % p
    rhs = (-inf) % p
    if mode == "general":
        ok = match and total == 0 and lhs == rhs
        return FormIdentityReport(
            which, k, mode, ok, match, total == 0, FieldElem(lhs, p), FieldElem(rhs, p)
        )
    failures, sl, sr = _specialized_check(which, A, B, k, fin, None)
    ok = match and total == 0 and not failures and sl == sr
    return FormIdentityReport(
        which,
        k,
        mode,
        ok,
        match,
        total == 0,
        FieldElem(sl, p),
        FieldElem(sr, p),
        tuple(failures),
    )
