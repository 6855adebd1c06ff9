"""Numerical semigroup rings k[[t^a1..t^ag]] and their monomial ideals.

An ideal is ``E + S`` for a finite exponent set E; every ideal of interest is
cofinite in S, so all set arithmetic is exact once it is carried out past the
relevant conductor.
"""
from __future__ import annotations

from functools import cached_property, reduce
from math import gcd
from typing import Iterable, Sequence

from .degreewise import degreewise_kernel
from .monomial import ContainmentError
from .poly import GF, Polynomial, PolynomialRing


class NotNumericalSemigroup(ValueError):
    pass


class SemigroupMismatch(ValueError):
    pass


class NotAReduction(RuntimeError):
    def __init__(self, bound: int):
        super().__init__(f"I^(n+1) != J I^n for every n <= {bound}")
        self.bound = bound


class NumericalSemigroup:
    def __init__(self, gens: Sequence[int]):
        gens = sorted({int(g) for g in gens if int(g) != 0})
        if any(g < 0 for g in gens):
            raise NotNumericalSemigroup("generators must be positive")
        if not gens or reduce(gcd, gens) != 1:
            raise NotNumericalSemigroup(f"gcd of {gens} is not 1")
        # minimal generators
        self.gens = tuple(g for g in gens if not self._sum_of_others(g, gens))
        m = self.gens[0]
        # Apery set w.r.t. the multiplicity, by shortest paths on residues mod m
        dist = [None] * m
        dist[0] = 0
        frontier = [0]
        while frontier:
            nxt = []
            for r in frontier:
                for g in self.gens[1:]:
                    v = dist[r] + g
                    s = v % m
                    if dist[s] is None or v < dist[s]:
                        dist[s] = v
                        nxt.append(s)
            frontier = nxt
        self.apery = tuple(sorted(dist))
        self._apery_by_residue = {a % m: a for a in self.apery}
        self.frobenius = max(self.apery) - m
        self.conductor = self.frobenius + 1
        self._member = [self._brute_member(s) for s in range(self.conductor + 1)]

    @staticmethod
    def _sum_of_others(g, gens):
        others = [h for h in gens if h < g]
        reach = [True] + [False] * g
        for s in range(1, g + 1):
            reach[s] = any(s >= h and reach[s - h] for h in others)
        return reach[g]

    def _brute_member(self, s: int) -> bool:
        m = self.gens[0]
        return s >= self._apery_by_residue[s % m]

    @property
    def multiplicity(self) -> int:
        return self.gens[0]

    def __contains__(self, s: int) -> bool:
        if s < 0:
            return False
        if s > self.frobenius:
            return True
        return self._member[s]

    @cached_property
    def gaps(self) -> tuple:
        return tuple(s for s in range(self.conductor) if s not in self)

    def elements_below(self, bound: int) -> list:
        return [s for s in range(bound) if s in self]

    def is_symmetric(self) -> bool:
        """s in S iff F - s not in S, checked directly."""
        F = self.frobenius
        return all((s in self) != ((F - s) in self) for s in range(F + 1))

    # -- ideals
    def ideal(self, exps: Iterable[int]) -> "SemigroupIdeal":
        return SemigroupIdeal(self, exps)

    def unit_ideal(self) -> "SemigroupIdeal":
        return SemigroupIdeal(self, [0])

    def zero_ideal(self) -> "SemigroupIdeal":
        return SemigroupIdeal(self, [])

    def maximal_ideal(self) -> "SemigroupIdeal":
        return SemigroupIdeal(self, self.gens)

    @property
    def dim(self) -> int:
        return 1

    def polynomial_model(self, field=None):
        """``k[a_1..a_g]/P`` with P the toric ideal of the generators."""
        from .groebner import GroebnerIdeal

        names = tuple(f"a{i + 1}" for i in range(len(self.gens)))
        big = PolynomialRing(("t",) + names, field or GF())
        t = big.var("t")
        P = GroebnerIdeal(big, [big.var(n) - t ** g for n, g in zip(names, self.gens)]).eliminate(["t"])
        return P

    def factor(self, s: int) -> tuple:
        """Some exponent vector c with sum(c_i * gens_i) == s."""
        if s not in self:
            raise ValueError(f"{s} not in the semigroup")
        if s == 0:
            return (0,) * len(self.gens)
        for i, g in enumerate(self.gens):
            if s - g in self:
                c = list(self.factor(s - g))
                c[i] += 1
                return tuple(c)
        raise AssertionError("unreachable")

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.gens == other.gens

    def __hash__(self):
        return hash(self.gens)

    def __repr__(self):
        return f"<{', '.join(map(str, self.gens))}>"


class SemigroupIdeal:
    """``E + S`` for a finite set E of semigroup elements, stored minimally."""

    def __init__(self, S: NumericalSemigroup, exps: Iterable[int]):
        self.S = S
        exps = list(dict.fromkeys(int(e) for e in exps))
        for e in exps:
            if e not in S:
                raise ValueError(f"t^{e} is not in the ring {S!r}")
        self.order_hint = tuple(exps)
        self.gens = tuple(sorted(e for e in exps if not any(f != e and (e - f) in S for f in exps)))

    def _same(self, other):
        if not isinstance(other, SemigroupIdeal) or other.S != self.S:
            raise SemigroupMismatch("ideals live in different semigroup rings")

    @property
    def generators_in_order(self) -> tuple:
        """Minimal generators in the order they were given."""
        return tuple(e for e in self.order_hint if e in self.gens)

    # -- membership
    def contains(self, s: int) -> bool:
        return any((s - e) in self.S for e in self.gens if e <= s)

    __contains__ = contains

    @property
    def conductor(self) -> int:
        """Least c with [c, inf) ⊆ E + S (infinite for the zero ideal)."""
        if not self.gens:
            raise ValueError("the zero ideal has no conductor")
        c = min(self.gens) + self.S.conductor
        while c > 0 and self.contains(c - 1):
            c -= 1
        return c

    def elements(self, bound: int) -> set:
        return {s for s in range(bound) if self.contains(s)}

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return 0 in self.gens

    def issubset(self, other) -> bool:
        self._same(other)
        return all(other.contains(e) for e in self.gens)

    __le__ = issubset

    def __eq__(self, other):
        if not isinstance(other, SemigroupIdeal):
            return NotImplemented
        return self.S == other.S and self.gens == other.gens

    def __hash__(self):
        return hash((self.S, self.gens))

    # -- arithmetic
    def __add__(self, other):
        self._same(other)
        return SemigroupIdeal(self.S, self.gens + other.gens)

    def __mul__(self, other):
        self._same(other)
        return SemigroupIdeal(self.S, [a + b for a in self.gens for b in other.gens])

    def __pow__(self, n: int):
        out = self.S.unit_ideal()
        for _ in range(max(n, 0)):
            out = out * self
        return out

    def m_times(self):
        return self * self.S.maximal_ideal()

    def colon(self, other):
        """``(self : other)`` = {s in S : s + other ⊆ self}."""
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("colon by the zero ideal")
        if self.is_zero():
            return self.S.zero_ideal()
        bound = self.conductor + self.S.conductor + 1
        members = [s for s in range(bound) if s in self.S and all(self.contains(s + e) for e in other.gens)]
        return SemigroupIdeal(self.S, members)

    def intersect(self, other):
        self._same(other)
        if self.is_zero() or other.is_zero():
            return self.S.zero_ideal()
        bound = max(self.conductor, other.conductor) + self.S.conductor + 1
        return SemigroupIdeal(self.S, [s for s in range(bound) if self.contains(s) and other.contains(s)])

    __and__ = intersect

    # -- lengths
    def separating_elements(self, sub: "SemigroupIdeal") -> list:
        if self.is_zero():
            return []
        if sub.is_zero():
            raise ValueError("quotient by the zero ideal has infinite length")
        return [s for s in range(sub.conductor) if self.contains(s) and not sub.contains(s)]

    def quotient_length(self, sub: "SemigroupIdeal") -> int:
        """λ(self / sub) = |(E + S) minus (F + S)|."""
        self._same(sub)
        if not sub.issubset(self):
            raise ContainmentError("length needs sub ⊆ self")
        return len(self.separating_elements(sub))

    def colength(self) -> int:
        return self.S.unit_ideal().quotient_length(self)

    def socle_length(self) -> int:
        return self.colon(self.S.maximal_ideal()).quotient_length(self)

    def __repr__(self):
        return "(" + ", ".join(f"t^{e}" for e in self.gens) + ")"


# --------------------------------------------------------------------------
# reductions and presentations


def sg_new(gens: Sequence[int]) -> NumericalSemigroup:
    return NumericalSemigroup(gens)


def sg_reduction_number(I: SemigroupIdeal, J: SemigroupIdeal, bound: int = 20) -> int:
    """Least r with I^(r+1) = J I^r, confirmed for one further step."""
    I._same(J)
    if not J.issubset(I):
        raise ContainmentError("J must be contained in I")
    Ir = I.S.unit_ideal()
    for r in range(bound + 1):
        nxt = Ir * I
        if nxt == J * Ir:
            if nxt * I != J * nxt:
                raise AssertionError("reduction equality did not persist")
            return r
        Ir = nxt
    raise NotAReduction(bound)


def minimal_reduction(I: SemigroupIdeal) -> SemigroupIdeal:
    """(t^v) with v the least exponent of I."""
    return SemigroupIdeal(I.S, [min(I.gens)])


def fiber_kernel_by_degree(I: SemigroupIdeal, degree: int, field=None):
    """Degreewise fiber relations of I: ``(ring, {n: new minimal generators}, stabilized)``.

    U_i corresponds to the i-th minimal generator in the given order.  In degree
    n, U^a maps to t^(a.e) modulo 𝔪 I^n; monomials with equal nonzero image are
    identified and zero images are killed.
    """
    field = field or GF()
    exps = I.generators_in_order
    ring = PolynomialRing(tuple(f"U{i + 1}" for i in range(len(exps))), field)
    mI: dict = {}

    def is_zero(n, v):
        if n not in mI:
            mI[n] = (I ** n).m_times()
        return mI[n].contains(v)

    ker = degreewise_kernel(
        len(exps),
        image=lambda s, a: sum(x * e for x, e in zip(a, exps)),
        is_zero=is_zero,
        field=field,
        min_degree=degree,
        max_degree=degree,
    )
    found = {n: [vector_to_poly(ring, v) for v in vecs] for n, vecs in ker.generators.items()}
    return ring, found, ker.stabilized


def vector_to_poly(ring, vec):
    return Polynomial(ring, {a: c for (_, a), c in vec.items() if c})


def sg_fiber_presentation(I: SemigroupIdeal, degree_bound: int | None = None, field=None, certify: bool = False,
                          J: SemigroupIdeal | None = None):
    """Fiber-cone relations of I by the degreewise valuation oracle.

    The default bound is r + 3.  The result is ``heuristic`` unless
    ``certify`` cross-checks it against elimination in the polynomial model.
    """
    from .blowup import PresentedAlgebra, semigroup_fiber_by_elimination

    if degree_bound is None:
        J = J or minimal_reduction(I)
        degree_bound = sg_reduction_number(I, J) + 3
    ring, found, stabilized = fiber_kernel_by_degree(I, degree_bound, field)
    gens = [g for n in sorted(found) for g in found[n]]
    flags = {"heuristic": True, "stabilized": stabilized, "degree_bound": degree_bound}
    if certify:
        elim = semigroup_fiber_by_elimination(I, field)
        from .groebner import GroebnerIdeal

        ours = GroebnerIdeal(ring, gens)
        theirs = GroebnerIdeal(ring, [p.to_ring(ring) for p in elim.generators])
        elim_top = max((p.degree() for p in elim.generators), default=0)
        if elim_top > degree_bound:
            _, found2, _ = fiber_kernel_by_degree(I, elim_top, field)
            gens = [g for n in sorted(found2) for g in found2[n]]
            ours = GroebnerIdeal(ring, gens)
        if ours != theirs:
            from .blowup import CrossValidationError

            raise CrossValidationError("degreewise fiber relations disagree with elimination")
        flags.update(heuristic=False, certified=True)
    return PresentedAlgebra(ring=ring, generators=gens, flags=flags)


def sg_canonical_length_tables(I: SemigroupIdeal, J: SemigroupIdeal, r: int | None = None,
                               ns: Iterable[int] | None = None, d: int = 1):
    """Lengths of the graded pieces of ω_G and ω_F via colons (J^m : I^r).

    Returns ``(ns, omega_G, omega_F)``.  Needs a symmetric semigroup and a
    principal minimal reduction J.
    """
    S = I.S
    if not S.is_symmetric():
        raise ValueError(f"{S!r} is not symmetric, so the ring is not Gorenstein")
    if len(J.gens) != 1:
        raise ValueError("J must be principal")
    if r is None:
        r = sg_reduction_number(I, J)
    Ir = I ** r
    mIr = Ir.m_times()
    if ns is None:
        ns = range(d - r, d - r + 20)
    ns = list(ns)
    cache: dict = {}

    def Jcol(m, by):
        key = (m, by is mIr)
        if key not in cache:
            cache[key] = (J ** m).colon(by) if m > 0 else S.unit_ideal()
        return cache[key]

    omega_G, omega_F = [], []
    for n in ns:
        lo = Jcol(n + r - d + 1, Ir)
        hi = Jcol(n + r - d, Ir)
        fo = Jcol(n + r - d + 1, mIr) & hi
        if not lo.issubset(hi):
            raise ContainmentError(f"(J^{n + r - d + 1}:I^r) not inside (J^{n + r - d}:I^r)")
        if not lo.issubset(fo):
            raise ContainmentError(f"ω_F numerator does not contain the denominator at n={n}")
        omega_G.append(hi.quotient_length(lo))
        omega_F.append(fo.quotient_length(lo))
    return ns, omega_G, omega_F
