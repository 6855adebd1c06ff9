"""Rees algebra, associated graded ring and fiber cone of monomial ideals.

Inputs are monomial ideals I of A = k[[x]]/N with N monomial (plus the
numerical semigroup class, whose polynomial model is used for certification).
Presentations are computed twice: by elimination from the Rees ideal, and
degree by degree by exact linear algebra; the two must agree.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field as dc_field
from typing import Sequence

from .degreewise import degreewise_kernel
from .groebner import GroebnerBasis, GroebnerIdeal, TruncatedBasisError
from .monomial import (
    LocalMonomialIdeal,
    hilbert_function_from_numerator,
    hilbert_numerator,
    krull_dimension,
)
from .poly import GF, Polynomial, PolynomialRing, block_order, mono_mul

log = logging.getLogger(__name__)


class CrossValidationError(AssertionError):
    """The elimination and degreewise routes disagree: an engine bug."""


class ReductionSearchExhausted(RuntimeError):
    pass


@dataclass
class PresentedAlgebra:
    """``ring / (generators)``, standard graded in the U-variables."""

    ring: PolynomialRing
    generators: list
    flags: dict = dc_field(default_factory=dict)
    base: str = "k"

    def ideal(self) -> GroebnerIdeal:
        return GroebnerIdeal(self.ring, self.generators)

    def degrees(self) -> list:
        return sorted(g.degree() for g in self.generators)

    def __str__(self):
        gens = ", ".join(str(g) for g in self.generators) or "0"
        return f"{self.base}[{','.join(self.ring.names)}]/({gens})"


def u_names(k: int) -> tuple:
    return tuple(f"U{i + 1}" for i in range(k))


# --------------------------------------------------------------------------
# elimination route


def rees_ideal_general(N: GroebnerIdeal, fs: Sequence[Polynomial], names: Sequence[str] | None = None,
                       saturate: bool = False) -> GroebnerIdeal:
    """Defining ideal of R(I) = A[It] as a quotient of k[x, U].

    Eliminates t from N + (U_i - t f_i) with the block order (t) > (x) > (U).
    The graph ideal is already t-saturated (t is a nonzerodivisor on A[t]);
    ``saturate=True`` performs the saturation anyway as a consistency check.
    """
    R = N.ring
    names = tuple(names or u_names(len(fs)))
    nx = R.nvars
    big = PolynomialRing(("t",) + R.names + names, R.field)
    order = block_order(big.nvars, [[0], list(range(1, nx + 1)), list(range(nx + 1, big.nvars))])
    big = big.with_order(order)
    t = big.var("t")
    gens = [g.to_ring(big) for g in N.gens]
    gens += [big.var(u) - t * f.to_ring(big) for u, f in zip(names, fs)]
    graph = GroebnerIdeal(big, gens, N.cap)
    if saturate:
        sat, steps = graph.saturate(t)
        if steps:
            raise CrossValidationError("graph ideal was not t-saturated")
        graph = sat
    gb = graph.groebner(order)
    if gb.truncated:
        raise TruncatedBasisError("Rees ideal needs a complete basis")
    target_order = block_order(nx + len(names), [list(range(nx)), list(range(nx, nx + len(names)))])
    target = PolynomialRing(R.names + names, R.field, target_order)
    kept = [p.to_ring(target) for p in gb.polys if not any(m[0] for m in p.terms)]
    JR = GroebnerIdeal(target, kept, N.cap)
    JR._bases[target_order] = GroebnerBasis(tuple(kept), target_order, False)
    return JR


def rees_ideal(I: LocalMonomialIdeal, field=None, saturate: bool = False) -> GroebnerIdeal:
    """Rees ideal of a monomial ideal of k[[x]]/N, generators in their given order."""
    R = I.ring.polynomial_ring(field)
    N = GroebnerIdeal(R, [R.monomial(r) for r in I.ring.relations])
    return rees_ideal_general(N, [R.monomial(g) for g in I.gens], saturate=saturate)


def fiber_from_rees(JR: GroebnerIdeal, nx: int) -> PresentedAlgebra:
    """L_F = (J_R + (x)) ∩ k[U]: set the x-variables to zero."""
    unames = JR.ring.names[nx:]
    U = PolynomialRing(unames, JR.ring.field)
    polys = [p.subs_zero(range(nx)) for p in JR.basis()]
    polys = [p.to_ring(U) for p in polys if not p.is_zero()]
    L = GroebnerIdeal(U, polys)
    return PresentedAlgebra(U, L.minimal_generators() if polys else [], {"heuristic": False, "route": "elimination"})


def max_u_degree(JR: GroebnerIdeal, nx: int) -> int:
    return max((sum(p.lm[nx:]) for p in JR.basis()), default=0)


# --------------------------------------------------------------------------
# degreewise route


def fiber_oracle(I: LocalMonomialIdeal, min_degree: int = 1, max_degree: int = 12, field=None):
    """Degreewise fiber relations of a local monomial ideal."""
    field = field or GF()
    fs = I.gens
    mIn: dict = {}

    def is_zero(n, w):
        if n not in mIn:
            mIn[n] = (I ** n).m_times()
        return mIn[n].contains(w)

    def image(_s, a):
        w = (0,) * I.ring.nvars
        for e, f in zip(a, fs):
            for _ in range(e):
                w = mono_mul(w, f)
        return w

    ker = degreewise_kernel(len(fs), image, is_zero, field, min_degree=min_degree, max_degree=max_degree)
    U = PolynomialRing(u_names(len(fs)), field)
    gens = [Polynomial(U, {a: c for (_, a), c in v.items()}) for n in sorted(ker.generators) for v in ker.generators[n]]
    return U, gens, ker


def fiber_presentation(I: LocalMonomialIdeal, field=None, verify: bool = True) -> PresentedAlgebra:
    """F(I) = k[U]/L_F by elimination, cross-validated by the degreewise oracle."""
    field = field or GF()
    JR = rees_ideal(I, field)
    F = fiber_from_rees(JR, I.ring.nvars)
    if verify:
        top = max((g.degree() for g in F.generators), default=0)
        U, gens, ker = fiber_oracle(I, min_degree=top + 1, max_degree=max(top + 1, 2 * top + 1), field=field)
        if GroebnerIdeal(U, gens) != F.ideal():
            raise CrossValidationError(f"fiber relations of {I} disagree between routes")
        F.flags["cross_validated_through"] = ker.last_degree
    return F


def semigroup_fiber_by_elimination(I, field=None) -> PresentedAlgebra:
    """Fiber cone of a semigroup ideal through the toric polynomial model."""
    S = I.S
    P = S.polynomial_model(field)
    R = P.ring
    fs = [R.monomial(S.factor(e)) for e in I.generators_in_order]
    JR = rees_ideal_general(P, fs)
    return fiber_from_rees(JR, R.nvars)


# --------------------------------------------------------------------------
# associated graded ring and relation type


def _graded_data(I, field):
    """Base basis of A/I, its multiplication by the variables of A, the image map
    and the elimination bound, for local monomial and semigroup ideals alike."""
    fs = list(I.generators_in_order) if hasattr(I, "S") else list(I.gens)
    if hasattr(I, "S"):
        S = I.S
        basis = sorted(S.unit_ideal().separating_elements(I))
        index = set(basis)
        steps = S.gens

        def base_mult(s, i):
            t = s + steps[i]
            return t if t in index else None

        def image(s, a):
            return s + sum(e * f for e, f in zip(a, fs))

        P = S.polynomial_model(field)
        JR = rees_ideal_general(P, [P.ring.monomial(S.factor(e)) for e in fs])
        nbase, names = len(steps), tuple(f"a{i + 1}" for i in range(len(steps)))
        D = max_u_degree(JR, P.ring.nvars)

        def fmt(s):
            return f"t^{s}" if s else "1"
    else:
        if not I.is_cofinite():
            raise ValueError("A/I must have finite length")
        basis = I.ring.unit_ideal().separating_monomials(I)
        index = set(basis)
        nbase, names = I.ring.nvars, I.ring.names

        def base_mult(s, i):
            t = tuple(e + (j == i) for j, e in enumerate(s))
            return t if t in index else None

        def image(s, a):
            w = s
            for e, f in zip(a, fs):
                for _ in range(e):
                    w = mono_mul(w, f)
            return w

        D = max_u_degree(rees_ideal(I, field), I.ring.nvars)
        fmt = I.ring.format_monomial
    return fs, basis, base_mult, image, nbase, names, D, fmt


@dataclass
class GradedPresentation:
    generator_degrees: list
    generators: list  # each a dict {(base monomial, U-exponent): coeff}
    reltype: int
    flags: dict
    labels: list = dc_field(default_factory=list)


def graded_presentation_and_reltype(I, bound: int | None = None, field=None,
                                    certify: bool = True) -> GradedPresentation:
    """Minimal generators of ker((A/I)[U] -> G(I)) by U-degree, and the relation type.

    A/I is handled as an explicit k-basis, so minimality is exact linear
    algebra.  With ``certify`` the Rees ideal's Groebner basis bounds the
    generator degrees, which makes the degreewise scan exact.
    """
    field = field or GF()
    fs, basis, base_mult, image, nbase, names, D, fmt = _graded_data(I, field)
    if not certify:
        D = 0
    Ipow: dict = {}

    def is_zero(n, w):
        if n + 1 not in Ipow:
            Ipow[n + 1] = I ** (n + 1)
        return Ipow[n + 1].contains(w)

    lo = max(D, bound or 0, 1)
    ker = degreewise_kernel(len(fs), image, is_zero, field, base=basis, base_mult=base_mult, nbase_vars=nbase,
                            min_degree=lo, max_degree=max(lo, 4 * lo + 4))
    us = u_names(len(fs))
    gens, degs, labels = [], [], []
    for n in sorted(ker.generators):
        for v in ker.generators[n]:
            gens.append(v)
            degs.append(n)
            labels.append(_format_graded(v, fmt, us, field))
    flags = {"heuristic": not certify, "stabilized": ker.stabilized, "scanned_through": ker.last_degree}
    if certify:
        flags["elimination_bound"] = D
    # a zero kernel (polynomial ring) counts as relation type 1, as for linear type
    return GradedPresentation(degs, gens, max(degs, default=1), flags, labels)


def _format_graded(vec: dict, fmt, us, field) -> str:
    parts = []
    for (s, a), c in sorted(vec.items(), key=lambda kv: (kv[0][1], str(kv[0][0])), reverse=True):
        u = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(us, a) if e)
        c = field.signed(c)
        coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
        parts.append(f"{coef}({fmt(s)})*{u}")
    return " + ".join(parts).replace("+ -", "- ")


# --------------------------------------------------------------------------
# invariants of presented algebras


def analytic_spread(F: PresentedAlgebra) -> int:
    """Krull dimension of k[U]/L_F from its lead-term ideal."""
    L = F.ideal()
    if L.groebner().truncated:
        raise TruncatedBasisError("analytic spread needs a complete basis")
    return krull_dimension([p.lm for p in L.basis()], F.ring.nvars)


@dataclass
class HilbertData:
    function: list
    numerator: list
    h_vector: list
    dim: int
    e0: int
    symmetric: bool


def hilbert(F: PresentedAlgebra, upto: int = 10) -> HilbertData:
    """Hilbert function, h-vector, multiplicity and palindromicity of k[U]/L."""
    L = F.ideal()
    lts = [p.lm for p in L.basis()]
    n = F.ring.nvars
    K = hilbert_numerator(lts, n)
    dim = krull_dimension(lts, n)
    h = list(K)
    for _ in range(n - dim):
        h = _divide_by_one_minus_z(h)
    while len(h) > 1 and h[-1] == 0:
        h.pop()
    hf = [hilbert_function_from_numerator(K, n, d) for d in range(upto + 1)]
    return HilbertData(hf, list(K), h, dim, sum(h), h == h[::-1])


def _divide_by_one_minus_z(p):
    q, acc = [], 0
    for c in p[:-1]:
        acc += c
        q.append(acc)
    if acc + p[-1] != 0:
        raise ArithmeticError("numerator not divisible by (1 - z)")
    return q or [0]


# --------------------------------------------------------------------------
# reductions and Cohen-Macaulay criteria (combinatorial ideals)


@dataclass
class CheckResult:
    holds: bool
    witness: int | None
    certificate: list

    def __bool__(self):
        return self.holds


def vv_check_G(I, J, bound: int) -> CheckResult:
    """Valabrega-Valla: I^n ∩ J = J I^(n-1) for 1 <= n <= bound."""
    cert = []
    for n in range(1, bound + 1):
        ok = (I ** n) & J == J * I ** (n - 1)
        cert.append((n, ok))
        if not ok:
            return CheckResult(False, n, cert)
    return CheckResult(True, None, cert)


def cm_check_F(I, J, bound: int) -> CheckResult:
    """𝔪 I^n ∩ J = 𝔪 J I^(n-1) for 1 <= n <= bound."""
    cert = []
    for n in range(1, bound + 1):
        ok = (I ** n).m_times() & J == (J * I ** (n - 1)).m_times()
        cert.append((n, ok))
        if not ok:
            return CheckResult(False, n, cert)
    return CheckResult(True, None, cert)


@dataclass
class ReductionData:
    J: list
    r: int
    certificate: list

    def to_dict(self):
        return {"J": [str(g) for g in self.J], "r": self.r, "certificate": [list(c) for c in self.certificate]}


def reduction_number(I, J, bound: int = 20) -> ReductionData:
    """r_J(I) for combinatorial ideals (local monomial or semigroup)."""
    if not J.issubset(I):
        raise ValueError("J is not contained in I")
    cert = []
    In = I ** 0
    for n in range(bound + 1):
        nxt = In * I
        ok = nxt == J * In
        cert.append((n, ok))
        if ok:
            if nxt * I != J * nxt:
                raise AssertionError("reduction equality did not persist")
            cert.append((n + 1, True))
            return ReductionData(list(J.gens), n, cert)
        In = nxt
    from .semigroup import NotAReduction

    raise NotAReduction(bound)


def check_pro9(I, bound: int = 10) -> int | None:
    """Least n0 <= bound with I^n0 = 𝔪 I^(n0-1), if any."""
    prev = I ** 0
    for n in range(1, bound + 1):
        cur = prev * I
        if cur == prev.m_times():
            return n
        prev = cur
    return None


# --------------------------------------------------------------------------
# polynomial reductions in the local ring (generic J)


class LocalPolynomialContext:
    """Groebner-side checks in A = k[[x]]/N for an 𝔪-primary monomial I and polynomial J.

    Local statements are reduced to polynomial ones by adding an 𝔪-primary
    monomial ideal that is locally contained in both sides, so that the two
    ideals compared have quotients supported at the origin only.
    """

    def __init__(self, I: LocalMonomialIdeal, field=None):
        if not I.is_cofinite():
            raise ValueError("I must be 𝔪-primary")
        self.I = I
        self.A = I.ring
        self.R = self.A.polynomial_ring(field)
        self.field = self.R.field

    def mono(self, V: LocalMonomialIdeal) -> list:
        return [self.R.monomial(g) for g in V.gens + self.A.relations]

    def ideal(self, polys) -> GroebnerIdeal:
        return GroebnerIdeal(self.R, list(polys) + [self.R.monomial(r) for r in self.A.relations])

    def times(self, J: Sequence[Polynomial], V: LocalMonomialIdeal) -> list:
        return [j * self.R.monomial(g) for j in J for g in V.gens]

    def reduction_holds(self, J, n: int) -> bool:
        """I^(n+1) = J I^n, via Nakayama: I^(n+1) ⊆ J I^n + 𝔪 I^(n+1)."""
        I = self.I
        In1 = I ** (n + 1)
        rhs = self.ideal(self.times(J, I ** n) + self.mono(In1.m_times()))
        return all(rhs.contains(self.R.monomial(g)) for g in In1.gens)

    def reduction_number(self, J, bound: int = 12) -> ReductionData:
        cert = []
        for n in range(bound + 1):
            ok = self.reduction_holds(J, n)
            cert.append((n, ok))
            if ok:
                ok2 = self.reduction_holds(J, n + 1)
                cert.append((n + 1, ok2))
                if not ok2:
                    raise AssertionError("reduction equality did not persist")
                return ReductionData(list(J), n, cert)
        from .semigroup import NotAReduction

        raise NotAReduction(bound)

    def vv_check(self, J, r: int, bound: int) -> CheckResult:
        """I^n ∩ J = J I^(n-1) locally, compared modulo M = I^(n+r)."""
        cert = []
        I = self.I
        for n in range(1, bound + 1):
            M = self.mono(I ** (n + r))
            lhs = self.ideal(self.mono(I ** n)).intersect(self.ideal(list(J) + M))
            rhs = self.ideal(self.times(J, I ** (n - 1)) + M)
            ok = lhs == rhs
            cert.append((n, ok))
            if not ok:
                return CheckResult(False, n, cert)
        return CheckResult(True, None, cert)

    def cm_check_F(self, J, r: int, bound: int) -> CheckResult:
        """𝔪 I^n ∩ J = 𝔪 J I^(n-1) locally, compared modulo M = 𝔪 I^(n+r)."""
        cert = []
        I = self.I
        m = self.A.maximal_ideal()
        for n in range(1, bound + 1):
            M = self.mono((I ** (n + r)).m_times())
            lhs = self.ideal(self.mono((I ** n).m_times())).intersect(self.ideal(list(J) + M))
            rhs = self.ideal(self.times(J, (I ** (n - 1)) * m) + M)
            ok = lhs == rhs
            cert.append((n, ok))
            if not ok:
                return CheckResult(False, n, cert)
        return CheckResult(True, None, cert)

    def colength(self, polys) -> int:
        """λ(A/(polys)) for an ideal whose polynomial extension is (x)-primary."""
        lts = [p.lm for p in self.ideal(polys).basis()]
        return LocalMonomialIdeal(self.A, lts).colength()

    def cm_by_hilbert(self, J, r: int) -> bool:
        """G(I) is CM iff (1-z)^d HS_G(z) equals the Hilbert function of G(I)/J*G(I).

        Independent of the Valabrega-Valla intersections; only needs N = 0.
        """
        if self.A.relations:
            raise ValueError("the Hilbert-series route needs a polynomial ring")
        I = self.I
        top = r + 2
        h = [(I ** n).quotient_length(I ** (n + 1)) for n in range(top + 1)]
        for _ in range(self.A.nvars):
            h = [h[0]] + [h[i] - h[i - 1] for i in range(1, len(h))]
        for n in range(top + 1):
            den = self.mono(I ** (n + 1)) + (self.times(J, I ** (n - 1)) if n >= 1 else [])
            if self.colength(den) - (I ** n).colength() != h[n]:
                return False
        return True

    def search_reduction(self, seed: int, tries: int = 5, bound: int = 12) -> ReductionData:
        """d random k-linear combinations of the generators of I, first verified reduction wins."""
        rng = random.Random(seed)
        d = self.A.dim
        p = getattr(self.field, "p", None)
        if p is not None and p < 50:
            log.warning("residue field GF(%d) is small; generic reductions may not exist", p)
        gens = [self.R.monomial(g) for g in self.I.gens]
        for attempt in range(tries):
            J = []
            for _ in range(d):
                f = self.R.zero
                for g in gens:
                    c = rng.randrange(1, p) if p else rng.randint(-20, 20)
                    f = f + g.scale(self.field(c))
                J.append(f)
            try:
                return self.reduction_number(J, bound)
            except Exception as exc:  # not a reduction within bound
                log.debug("attempt %d failed: %s", attempt, exc)
        raise ReductionSearchExhausted(f"no reduction found in {tries} tries")


def reduction_suite(I, J=None, seed: int | None = None, tries: int = 5, bound: int = 12, field=None) -> ReductionData:
    """verify(J) when J is given, otherwise search(seed, tries)."""
    if J is not None and not isinstance(J, (list, tuple)):
        return reduction_number(I, J, bound)
    ctx = LocalPolynomialContext(I, field)
    if J is not None:
        return ctx.reduction_number([ctx.R(j) if not isinstance(j, Polynomial) else j for j in J], bound)
    return ctx.search_reduction(seed or 0, tries, bound)
