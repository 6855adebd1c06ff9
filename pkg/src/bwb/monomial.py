"""Monomial ideals in A = k[[x_1..x_d]]/N with N monomial, done combinatorially.

Localization changes nothing for monomial data, so powers, colons, lengths
and socles over the power-series quotient are computed on exponent vectors.
Non-monomial input is rejected instead of being silently mis-handled.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .poly import (
    GF,
    Monomial,
    PolynomialRing,
    TermOrder,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class NonMonomialInput(ValueError):
    pass


class AmbientMismatch(ValueError):
    pass


class ContainmentError(ValueError):
    pass


class InfiniteLength(ValueError):
    pass


# --------------------------------------------------------------------------
# exponent-vector helpers


def minimalize(gens: Iterable[Monomial]) -> tuple:
    """Drop duplicates and multiples, keeping first-occurrence order."""
    gens = list(dict.fromkeys(tuple(g) for g in gens))
    out = []
    for i, g in enumerate(gens):
        if any(j != i and mono_divides(h, g) and h != g for j, h in enumerate(gens)):
            continue
        out.append(g)
    return tuple(out)


def in_monomial_ideal(m: Monomial, gens: Iterable[Monomial]) -> bool:
    return any(mono_divides(g, m) for g in gens)


def colon_monomial(gens: Sequence[Monomial], g: Monomial) -> tuple:
    """Generators of ``(gens) : g``."""
    return minimalize(tuple(a - min(a, b) for a, b in zip(m, g)) for m in gens)


def intersect_monomial(a: Sequence[Monomial], b: Sequence[Monomial]) -> tuple:
    return minimalize(mono_lcm(x, y) for x in a for y in b)


def monomials_of_degree(n: int, d: int):
    """All exponent vectors of length n and total degree d, lex-descending."""
    if n == 0:
        if d == 0:
            yield ()
        return
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(n - 1, d - first):
            yield (first,) + rest


def hilbert_numerator(gens: Sequence[Monomial], nvars: int) -> list:
    """K-polynomial coefficients: HS(k[x]/(gens)) = K(z) / (1-z)^nvars."""
    return list(_knum(minimalize(gens), nvars))


@lru_cache(maxsize=4096)
def _knum(gens: tuple, nvars: int) -> tuple:
    if not gens:
        return (1,)
    if any(sum(g) == 0 for g in gens):
        return (0,)
    # pairwise coprime supports: product of (1 - z^deg)
    supp = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    if all(not (supp[i] & supp[j]) for i in range(len(gens)) for j in range(i)):
        poly = [1]
        for g in gens:
            poly = _poly_sub(poly, _shift(poly, sum(g)))
        return tuple(poly)
    # pivot on the largest generator
    piv = max(gens, key=lambda g: (sum(g), g))
    rest = tuple(g for g in gens if g != piv)
    left = _knum(minimalize(rest), nvars)
    right = _knum(colon_monomial(rest, piv), nvars)
    return tuple(_poly_sub(list(left), _shift(list(right), sum(piv))))


def _shift(p, k):
    return [0] * k + list(p)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def hilbert_function_from_numerator(K: Sequence[int], nvars: int, n: int) -> int:
    if nvars == 0:
        return K[n] if n < len(K) else 0
    return sum(c * comb(n - k + nvars - 1, nvars - 1) for k, c in enumerate(K) if k <= n)


def krull_dimension(gens: Sequence[Monomial], nvars: int) -> int:
    """Dimension of k[x]/(gens): largest variable set supporting no generator."""
    gens = minimalize(gens)
    if any(sum(g) == 0 for g in gens):
        return -1
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    for size in range(nvars, -1, -1):
        for S in itertools.combinations(range(nvars), size):
            s = set(S)
            if not any(sup <= s for sup in supports):
                return size
    return 0


# --------------------------------------------------------------------------
# local ring and its monomial ideals


class LocalRing:
    """``k[[names]] / N`` with N generated by monomials."""

    def __init__(self, names: Sequence[str], relations: Iterable = ()):
        self.names = tuple(names)
        self.nvars = len(self.names)
        rels = [self._as_monomial(r) for r in relations]
        self.relations = minimalize(r for r in rels)
        if any(sum(r) == 0 for r in self.relations):
            raise ValueError("the relations generate the unit ideal")

    def _as_monomial(self, g) -> Monomial:
        if isinstance(g, tuple):
            if len(g) != self.nvars:
                raise AmbientMismatch("exponent vector has the wrong length")
            return g
        ring = PolynomialRing(self.names, GF())
        p = ring(g) if isinstance(g, str) else g.to_ring(ring)
        if not p.is_monomial():
            raise NonMonomialInput(
                f"{g} is not a monomial; only monomial ideals of monomial quotients of power series rings are supported"
            )
        return next(iter(p.terms))

    @property
    def dim(self) -> int:
        return krull_dimension(self.relations, self.nvars)

    def is_zero(self, m: Monomial) -> bool:
        return in_monomial_ideal(m, self.relations)

    def ideal(self, gens: Iterable) -> "LocalMonomialIdeal":
        return LocalMonomialIdeal(self, [self._as_monomial(g) for g in gens])

    def unit_ideal(self) -> "LocalMonomialIdeal":
        return LocalMonomialIdeal(self, [(0,) * self.nvars])

    def zero_ideal(self) -> "LocalMonomialIdeal":
        return LocalMonomialIdeal(self, [])

    def maximal_ideal(self) -> "LocalMonomialIdeal":
        return LocalMonomialIdeal(self, [tuple(int(i == j) for j in range(self.nvars)) for i in range(self.nvars)])

    def polynomial_ring(self, field=None, order: TermOrder | None = None) -> PolynomialRing:
        return PolynomialRing(self.names, field or GF(), order or TermOrder("grevlex"))

    def format_monomial(self, m: Monomial) -> str:
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.names, m) if e]
        return "*".join(parts) or "1"

    def __eq__(self, other):
        return isinstance(other, LocalRing) and (self.names, set(self.relations)) == (other.names, set(other.relations))

    def __hash__(self):
        return hash((self.names, frozenset(self.relations)))

    def __repr__(self):
        rel = ", ".join(self.format_monomial(r) for r in self.relations)
        return f"k[[{','.join(self.names)}]]/({rel})"


class LocalMonomialIdeal:
    """A monomial ideal of a :class:`LocalRing`, stored by minimal generators outside N."""

    def __init__(self, ring: LocalRing, gens: Iterable[Monomial]):
        self.ring = ring
        gens = [tuple(g) for g in gens]
        if any(len(g) != ring.nvars for g in gens):
            raise AmbientMismatch("generator arity does not match the ring")
        self.gens = minimalize(g for g in gens if not ring.is_zero(g))

    # -- predicates
    def _same(self, other):
        if not isinstance(other, LocalMonomialIdeal) or other.ring != self.ring:
            raise AmbientMismatch("ideals live in different rings")

    def contains(self, m: Monomial) -> bool:
        return self.ring.is_zero(m) or in_monomial_ideal(m, self.gens)

    __contains__ = contains

    def issubset(self, other) -> bool:
        self._same(other)
        return all(other.contains(g) for g in self.gens)

    __le__ = issubset

    def __eq__(self, other):
        if not isinstance(other, LocalMonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash((self.ring, frozenset(self.gens)))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    def is_cofinite(self) -> bool:
        """True when A/V has finite length."""
        allg = self.gens + self.ring.relations
        return all(any(g[i] and sum(g) == g[i] for g in allg) or self.is_unit() for i in range(self.ring.nvars))

    # -- arithmetic
    def __add__(self, other):
        self._same(other)
        return LocalMonomialIdeal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        self._same(other)
        return LocalMonomialIdeal(self.ring, [mono_mul(a, b) for a in self.gens for b in other.gens])

    def __pow__(self, n: int):
        out = self.ring.unit_ideal()
        for _ in range(max(n, 0)):
            out = out * self
        return out

    def m_times(self):
        return self * self.ring.maximal_ideal()

    def _with_relations(self):
        return self.gens + self.ring.relations

    def colon(self, other):
        """``(self : other)``; other must be nonzero modulo N."""
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("colon by the zero ideal")
        full = self._with_relations()
        acc = None
        for g in other.gens:
            q = colon_monomial(full, g)
            acc = q if acc is None else intersect_monomial(acc, q)
        return LocalMonomialIdeal(self.ring, acc)

    def intersect(self, other):
        self._same(other)
        return LocalMonomialIdeal(self.ring, intersect_monomial(self._with_relations(), other._with_relations()))

    __and__ = intersect

    # -- lengths
    def std_monomials(self, bound: int) -> list:
        """Monomials of degree <= bound outside V + N, by degree then lex-descending."""
        out = []
        for d in range(bound + 1):
            for m in monomials_of_degree(self.ring.nvars, d):
                if not self.contains(m):
                    out.append(m)
        return out

    def _pure_power_bounds(self):
        allg = self._with_relations()
        bounds = []
        for i in range(self.ring.nvars):
            es = [g[i] for g in allg if sum(g) == g[i] and g[i] > 0]
            if not es:
                return None
            bounds.append(min(es))
        return bounds

    def quotient_length(self, sub: "LocalMonomialIdeal") -> int:
        """λ(self / sub) for sub ⊆ self, by counting the separating monomials."""
        self._same(sub)
        if not sub.issubset(self):
            raise ContainmentError("length_between needs sub ⊆ self")
        return len(self.separating_monomials(sub))

    def separating_monomials(self, sub: "LocalMonomialIdeal") -> list:
        """Monomials in self but not in sub (outside N); finite or InfiniteLength."""
        if self.is_zero():
            return []
        if self.ring.nvars == 0:
            return [] if sub.is_unit() or not self.is_unit() else [()]
        if self.issubset(sub):
            return []
        box = sub.colon(self)._pure_power_bounds() if not sub.is_unit() else [1] * self.ring.nvars
        if box is None:
            raise InfiniteLength("quotient is not of finite length")
        found = set()
        for g in self.gens:
            for u in itertools.product(*(range(b) for b in box)):
                m = mono_mul(g, u)
                if not sub.contains(m) and not self.ring.is_zero(m):
                    found.add(m)
        return sorted(found, key=lambda m: (sum(m), tuple(-e for e in m)))

    def colength(self) -> int:
        return self.ring.unit_ideal().quotient_length(self)

    def socle_length(self) -> int:
        """λ((V : 𝔪) / V); A/V is Gorenstein iff this is 1."""
        if not self.is_cofinite():
            raise InfiniteLength("socle length needs A/V of finite length")
        return self.colon(self.ring.maximal_ideal()).quotient_length(self)

    def to_polynomial_ideal(self, ring: PolynomialRing | None = None):
        """V + N as a :class:`GroebnerIdeal` in the polynomial ring."""
        from .groebner import GroebnerIdeal

        ring = ring or self.ring.polynomial_ring()
        return GroebnerIdeal(ring, [ring.monomial(g) for g in self._with_relations()])

    def __repr__(self):
        return "(" + ", ".join(self.ring.format_monomial(g) for g in self.gens) + ")"


def length_between(big, small) -> int:
    return big.quotient_length(small)


def socle_length(V) -> int:
    return V.socle_length()
