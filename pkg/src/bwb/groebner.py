"""Buchberger's algorithm and the ideal calculus built on it."""
from __future__ import annotations

import contextvars
import logging
import threading
from dataclasses import dataclass
from typing import Iterable, Sequence

from .poly import (
    Polynomial,
    PolynomialRing,
    RingMismatch,
    TermOrder,
    elimination_order,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
)

log = logging.getLogger(__name__)

DEFAULT_CAP = 30
# degree cap used when an ideal is built without an explicit one
degree_cap: contextvars.ContextVar = contextvars.ContextVar("degree_cap", default=DEFAULT_CAP)
_UNSET = object()


class DegreeCapExceeded(RuntimeError):
    def __init__(self, degree: int, cap: int):
        super().__init__(f"S-pair of degree {degree} exceeds degree cap {cap}")
        self.degree = degree
        self.cap = cap


class TruncatedBasisError(RuntimeError):
    pass


# --------------------------------------------------------------------------
# division


def _lead(terms: dict, key):
    m = max(terms, key=key)
    return m, terms[m]


def divide(f: Polynomial, divisors: Sequence[Polynomial]):
    """Multivariate division: ``f = sum(q_i * g_i) + r`` with ``r`` fully reduced."""
    ring = f.ring
    norm, inv, key = ring.field.norm, ring.field.inv, ring.order.key
    if any(g.is_zero() for g in divisors):
        raise ZeroDivisionError("division by the zero polynomial")
    leads = [(g.lm, inv(g.lc), g) for g in divisors]
    quots = [dict() for _ in divisors]
    p = dict(f.terms)
    rem = {}
    while p:
        m, c = _lead(p, key)
        for i, (lm, ilc, g) in enumerate(leads):
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                a = norm(c * ilc)
                quots[i][q] = norm(quots[i].get(q, 0) + a)
                for gm, gc in g.terms.items():
                    t = tuple(x + y for x, y in zip(gm, q))
                    v = norm(p.get(t, 0) - a * gc)
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    qs = [Polynomial(ring, {m: c for m, c in q.items() if c}) for q in quots]
    return qs, Polynomial(ring, rem)


def normal_form(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    ring = f.ring
    norm, inv, key = ring.field.norm, ring.field.inv, ring.order.key
    leads = [(g.lm, inv(g.lc), g.terms) for g in basis]
    p = dict(f.terms)
    rem = {}
    while p:
        m, c = _lead(p, key)
        for lm, ilc, gterms in leads:
            if mono_divides(lm, m):
                q = mono_div(m, lm)
                a = norm(c * ilc)
                for gm, gc in gterms.items():
                    t = tuple(x + y for x, y in zip(gm, q))
                    v = norm(p.get(t, 0) - a * gc)
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    return Polynomial(ring, rem)


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    lcm = mono_lcm(f.lm, g.lm)
    inv = f.ring.field.inv
    return f.scale(inv(f.lc), mono_div(lcm, f.lm)) - g.scale(inv(g.lc), mono_div(lcm, g.lm))


# --------------------------------------------------------------------------
# Buchberger


@dataclass(frozen=True)
class GroebnerBasis:
    polys: tuple
    order: TermOrder
    truncated: bool = False

    def __iter__(self):
        return iter(self.polys)

    def __len__(self):
        return len(self.polys)


def _update(store, G, B, h):
    """Gebauer-Moeller pair update after adding ``store[h]``."""
    lh = store[h].lm
    C = [(h, g) for g in G]
    D = []
    lcms = {g: mono_lcm(lh, store[g].lm) for g in G}
    while C:
        h_, g = C.pop()
        lg = store[g].lm
        l = lcms[g]
        if mono_coprime(lh, lg) or not any(mono_divides(lcms[g2], l) for _, g2 in C + D):
            D.append((h_, g))
    E = [(a, b) for a, b in D if not mono_coprime(lh, store[b].lm)]
    B_new = []
    for g1, g2 in B:
        l12 = mono_lcm(store[g1].lm, store[g2].lm)
        if (
            mono_divides(lh, l12)
            and mono_lcm(store[g1].lm, lh) != l12
            and mono_lcm(store[g2].lm, lh) != l12
        ):
            continue
        B_new.append((g1, g2))
    B_new.extend(E)
    G_new = [g for g in G if not mono_divides(lh, store[g].lm)]
    G_new.append(h)
    return G_new, B_new


def reduce_basis(polys: Iterable[Polynomial]) -> list:
    """Minimalize and interreduce a Groebner basis; result is monic and sorted descending."""
    polys = [p.monic() for p in polys if not p.is_zero()]
    key = polys[0].ring.order.key if polys else None
    minimal = []
    for i, p in enumerate(polys):
        lm = p.lm
        if any(
            mono_divides(q.lm, lm) and (q.lm != lm or j < i)
            for j, q in enumerate(polys)
            if j != i
        ):
            continue
        minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        out.append(normal_form(p, others).monic() if others else p)
    out.sort(key=lambda p: key(p.lm), reverse=True)
    return out


def buchberger(gens: Sequence[Polynomial], order: TermOrder | None = None, cap: int | None = DEFAULT_CAP,
               truncate: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of ``gens`` under ``order`` (default: the ring's order).

    S-pairs whose lcm exceeds ``cap`` raise :class:`DegreeCapExceeded`, or are
    skipped when ``truncate`` is set; the result is then flagged ``truncated``.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return GroebnerBasis((), order, False)
    ring = gens[0].ring
    order = order or ring.order
    if ring.order != order:
        ring = ring.with_order(order)
        gens = [g.to_ring(ring) for g in gens]
    key = order.key
    store: list = []
    G: list = []
    B: list = []
    truncated = False
    for g in sorted(gens, key=lambda p: (p.degree(), key(p.lm))):
        h = normal_form(g, [store[i] for i in G])
        if h.is_zero():
            continue
        store.append(h.monic())
        G, B = _update(store, G, B, len(store) - 1)

    def pair_key(pr):
        l = mono_lcm(store[pr[0]].lm, store[pr[1]].lm)
        return (sum(l), key(l))

    while B:
        B.sort(key=pair_key, reverse=True)
        i, j = B.pop()
        deg = sum(mono_lcm(store[i].lm, store[j].lm))
        if cap is not None and deg > cap:
            if not truncate:
                raise DegreeCapExceeded(deg, cap)
            truncated = True
            continue
        h = normal_form(spoly(store[i], store[j]), [store[k] for k in G])
        if h.is_zero():
            continue
        store.append(h.monic())
        G, B = _update(store, G, B, len(store) - 1)
    return GroebnerBasis(tuple(reduce_basis(store[k] for k in G)), order, truncated)


# --------------------------------------------------------------------------
# ideals


class GroebnerIdeal:
    """Generators plus lazily computed reduced Groebner bases, one per order."""

    def __init__(self, ring: PolynomialRing, gens: Iterable = (), cap=_UNSET):
        self.ring = ring
        gs = []
        for g in gens:
            g = ring(g) if not isinstance(g, Polynomial) else g
            if g.ring.names != ring.names:
                raise RingMismatch(f"generator {g} not in {ring!r}")
            if g.ring != ring:
                g = g.to_ring(ring)
            if not g.is_zero() and g not in gs:
                gs.append(g)
        self.gens = tuple(gs)
        self.cap = degree_cap.get() if cap is _UNSET else cap
        self._bases: dict = {}
        self._lock = threading.Lock()

    # -- bases
    def groebner(self, order: TermOrder | None = None, truncate: bool = False) -> GroebnerBasis:
        order = order or self.ring.order
        gb = self._bases.get(order)
        if gb is not None and (not gb.truncated or truncate):
            return gb
        with self._lock:
            gb = self._bases.get(order)
            if gb is None or (gb.truncated and not truncate):
                gb = buchberger(self.gens, order, self.cap, truncate)
                self._bases[order] = gb
        return gb

    def basis(self, order: TermOrder | None = None) -> list:
        gb = self.groebner(order)
        if gb.truncated:
            raise TruncatedBasisError("operation needs a complete Groebner basis")
        return list(gb.polys)

    def reduce(self, f) -> Polynomial:
        f = self._coerce(f)
        return normal_form(f, self.basis())

    def contains(self, f) -> bool:
        return self.reduce(f).is_zero()

    __contains__ = contains

    def _coerce(self, f):
        if not isinstance(f, Polynomial):
            return self.ring(f)
        if f.ring != self.ring:
            return f.to_ring(self.ring)
        return f

    def _same_ring(self, other):
        if other.ring.names != self.ring.names or other.ring.field != self.ring.field:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(p.is_constant() for p in self.basis())

    def leading_monomials(self) -> list:
        return [p.lm for p in self.basis()]

    # -- ideal operations
    def __add__(self, other: "GroebnerIdeal") -> "GroebnerIdeal":
        self._same_ring(other)
        return GroebnerIdeal(self.ring, self.gens + other.gens, self.cap)

    def __mul__(self, other: "GroebnerIdeal") -> "GroebnerIdeal":
        self._same_ring(other)
        return GroebnerIdeal(self.ring, [f * g.to_ring(self.ring) for f in self.gens for g in other.gens], self.cap)

    def __pow__(self, n: int) -> "GroebnerIdeal":
        if n < 0:
            raise ValueError("negative ideal power")
        out = GroebnerIdeal(self.ring, [self.ring.one], self.cap)
        for _ in range(n):
            out = out * self
        return out

    def issubset(self, other: "GroebnerIdeal") -> bool:
        self._same_ring(other)
        return all(other.contains(g) for g in self.gens)

    __le__ = issubset

    def __eq__(self, other):
        if not isinstance(other, GroebnerIdeal):
            return NotImplemented
        return self.issubset(other) and other.issubset(self)

    __hash__ = None

    def eliminate(self, names: Iterable[str]) -> "GroebnerIdeal":
        """``self`` intersected with the polynomial ring in the remaining variables."""
        names = list(names)
        idx = [self.ring.names.index(n) for n in names]
        keep = [n for n in self.ring.names if n not in names]
        target = PolynomialRing(tuple(keep), self.ring.field, self.ring.order if self.ring.order.kind != "block" else TermOrder("grevlex"))
        if not idx:
            return GroebnerIdeal(target, self.gens, self.cap)
        order = elimination_order(self.ring.nvars, idx)
        gb = self.groebner(order)
        if gb.truncated:
            raise TruncatedBasisError("elimination needs a complete Groebner basis")
        kept = [p for p in gb.polys if not any(p.lm[i] for i in idx)]
        kept = [p for p in kept if not any(m[i] for m in p.terms for i in idx)]
        return GroebnerIdeal(target, [p.to_ring(target) for p in kept], self.cap)

    def intersect(self, other: "GroebnerIdeal") -> "GroebnerIdeal":
        self._same_ring(other)
        if self.is_zero() or other.is_zero():
            return GroebnerIdeal(self.ring, [], self.cap)
        tname = _fresh_name(self.ring.names, "T")
        big = PolynomialRing((tname,) + self.ring.names, self.ring.field)
        t = big.var(tname)
        gens = [t * f.to_ring(big) for f in self.gens] + [(1 - t) * g.to_ring(big) for g in other.gens]
        out = GroebnerIdeal(big, gens, self.cap).eliminate([tname])
        return GroebnerIdeal(self.ring, [p.to_ring(self.ring) for p in out.gens], self.cap)

    __and__ = intersect

    def quotient_by(self, g: Polynomial) -> "GroebnerIdeal":
        """``(self : g)`` for one polynomial, via ``(self ∩ (g)) / g``."""
        g = self._coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("colon by the zero polynomial")
        inter = self.intersect(GroebnerIdeal(self.ring, [g], self.cap))
        quots = []
        for h in inter.gens:
            (q,), r = divide(h, [g])
            assert r.is_zero(), "intersection generator not divisible by g"
            quots.append(q)
        return GroebnerIdeal(self.ring, quots, self.cap)

    def colon(self, other: "GroebnerIdeal") -> "GroebnerIdeal":
        self._same_ring(other)
        if other.is_zero():
            raise ZeroDivisionError("colon by the zero ideal")
        result = None
        for g in other.gens:
            q = self.quotient_by(g)
            result = q if result is None else result.intersect(q)
        return result

    def saturate(self, g) -> tuple:
        """``(self : g^inf)`` and the number of colon steps that enlarged the ideal."""
        g = self._coerce(g)
        cur, steps = self, 0
        while True:
            nxt = cur.quotient_by(g)
            steps += 1
            if nxt.issubset(cur):
                return GroebnerIdeal(self.ring, cur.basis(), self.cap), steps - 1
            cur = nxt

    def minimal_generators(self) -> list:
        """Minimal homogeneous generators (greedy by degree); needs homogeneous input."""
        cands = sorted(self.basis(), key=lambda p: (p.degree(), self.ring.order.key(p.lm)))
        if not all(p.is_homogeneous() for p in cands):
            raise ValueError("minimal generators need a homogeneous ideal")
        kept: list = []
        for p in cands:
            if kept and GroebnerIdeal(self.ring, kept, self.cap).contains(p):
                continue
            kept.append(p)
        return kept

    def __repr__(self):
        return "(" + ", ".join(str(g) for g in self.gens) + ")"


def _fresh_name(names, base):
    name, k = base, 0
    while name in names:
        k += 1
        name = f"{base}{k}"
    return name


def ideal(ring: PolynomialRing, *gens) -> GroebnerIdeal:
    return GroebnerIdeal(ring, gens)
