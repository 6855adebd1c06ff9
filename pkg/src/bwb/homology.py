"""Graded free resolutions over k[U], Betti tables and what they determine.

Resolutions are built with Schreyer's induced orders, then made minimal by
cancelling unit entries of the differentials.  Betti numbers can also be
read off Koszul homology degree by degree, which gives an independent check.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import combinations
from typing import Sequence

from .groebner import GroebnerIdeal, normal_form
from .linalg import rank
from .monomial import monomials_of_degree
from .poly import PolynomialRing, mono_div, mono_divides, mono_lcm, mono_mul

# A vector of a graded free module is a dict {(position, monomial): coeff}.


class NonHomogeneousInput(ValueError):
    pass


@dataclass
class FreeModuleOrder:
    """Schreyer order on a free module F_k with basis e_0..e_{s-1}.

    ``marks[i] = (M_i, p_i)`` is the lead term of the image of e_i in F_{k-1};
    m*e_i is compared by the image term m*M_i*e_{p_i}, ties broken by index.
    """

    ring_key: object
    degrees: list
    marks: list | None = None
    parent: "FreeModuleOrder | None" = None

    def key(self, pos: int, mono):
        if self.parent is None:
            return (self.ring_key(mono), -pos)
        M, p = self.marks[pos]
        return (self.parent.key(p, mono_mul(mono, M)), -pos)


def _lead(vec: dict, order: FreeModuleOrder):
    return max(vec, key=lambda t: order.key(t[0], t[1]))


def _add_scaled(target: dict, vec: dict, c, mono, norm):
    for (p, m), d in vec.items():
        t = (p, mono_mul(m, mono))
        v = norm(target.get(t, 0) + c * d)
        if v:
            target[t] = v
        else:
            target.pop(t, None)


def divide_vector(vec: dict, basis: Sequence[dict], leads: Sequence, order: FreeModuleOrder, field):
    """Division of a module vector by a Groebner basis; returns (quotients, remainder).

    Quotients are vectors over the positions of ``basis``.
    """
    norm, inv = field.norm, field.inv
    ilc = [inv(b[l]) for b, l in zip(basis, leads)]
    quots: dict = {}
    p = dict(vec)
    rem: dict = {}
    while p:
        t = _lead(p, order)
        c = p[t]
        for i, (lp, lm) in enumerate(leads):
            if lp == t[0] and mono_divides(lm, t[1]):
                q = mono_div(t[1], lm)
                a = norm(c * ilc[i])
                key = (i, q)
                quots[key] = norm(quots.get(key, 0) + a)
                _add_scaled(p, basis[i], -a, q, norm)
                break
        else:
            rem[t] = c
            del p[t]
    return {k: v for k, v in quots.items() if v}, rem


def schreyer_syzygies(basis: list, order: FreeModuleOrder, field):
    """Syzygies of a module Groebner basis, a Groebner basis for the induced order.

    Returns (syzygy vectors, their degrees, induced order on the new free module).
    The basis is expected sorted so that leads within a position are lex-decreasing.
    """
    norm, inv = field.norm, field.inv
    leads = [_lead(b, order) for b in basis]
    degs = [order.degrees[lp] + sum(lm) for lp, lm in leads]
    new_order = FreeModuleOrder(order.ring_key, degs, [(lm, lp) for lp, lm in leads], order)
    cands = []
    for j in range(len(basis)):
        for i in range(j):
            (pi, mi), (pj, mj) = leads[i], leads[j]
            if pi != pj:
                continue
            l = mono_lcm(mi, mj)
            ai, aj = mono_div(l, mi), mono_div(l, mj)
            ci, cj = inv(basis[i][leads[i]]), inv(basis[j][leads[j]])
            s: dict = {}
            _add_scaled(s, basis[i], ci, ai, norm)
            _add_scaled(s, basis[j], -cj, aj, norm)
            quots, rem = divide_vector(s, basis, leads, order, field)
            assert not rem, "S-vector did not reduce to zero"
            syz = {(i, ai): ci}
            syz[(j, aj)] = norm(syz.get((j, aj), 0) - cj)
            for k, v in quots.items():
                x = norm(syz.get(k, 0) - v)
                if x:
                    syz[k] = x
                else:
                    syz.pop(k, None)
            cands.append(((i, ai), syz))
    # keep only syzygies whose lead term is not a multiple of another one
    kept = []
    for idx, (lt, syz) in enumerate(cands):
        if any(
            lt2[0] == lt[0] and mono_divides(lt2[1], lt[1]) and (lt2[1] != lt[1] or j < idx)
            for j, (lt2, _) in enumerate(cands)
            if j != idx
        ):
            continue
        kept.append((lt, syz))
    return [s for _, s in kept], [lt for lt, _ in kept], new_order


def _sort_for_schreyer(vecs, leads, order):
    """Within each position, order generators lex-decreasing by lead monomial."""
    idx = sorted(range(len(vecs)), key=lambda i: (leads[i][0], tuple(-e for e in leads[i][1])))
    return idx


@dataclass
class Resolution:
    """Differentials as lists of column vectors; degrees[k] lists the degrees of F_k's basis."""

    ring: PolynomialRing
    degrees: list
    maps: list  # maps[k] : F_{k+1} -> F_k, list of columns {(row, mono): coeff}

    def betti(self) -> dict:
        out: dict = {}
        for i, degs in enumerate(self.degrees):
            for j in degs:
                out[(i, j)] = out.get((i, j), 0) + 1
        return out

    def check_complex(self) -> bool:
        """d_k o d_{k+1} == 0 for every k."""
        norm = self.ring.field.norm
        for k in range(len(self.maps) - 1):
            d, e = self.maps[k], self.maps[k + 1]
            for col in e:
                acc: dict = {}
                for (r, m), c in col.items():
                    _add_scaled(acc, d[r], c, m, norm)
                if acc:
                    return False
        return True

    def is_minimal(self) -> bool:
        return not any(sum(m) == 0 for d in self.maps for col in d for (_, m) in col)


def schreyer_resolution(L: GroebnerIdeal) -> Resolution:
    """Non-minimal graded free resolution of S/L by iterated Schreyer syzygies."""
    S = L.ring
    field = S.field
    gb = L.basis()
    if not all(p.is_homogeneous() for p in gb):
        raise NonHomogeneousInput("free resolutions need a homogeneous ideal")
    order0 = FreeModuleOrder(S.order.key, [0])
    vecs = [{(0, m): c for m, c in p.terms.items()} for p in gb]
    degrees = [[0]]
    maps = []
    order = order0
    guard = S.nvars + 2
    while vecs:
        leads = [_lead(v, order) for v in vecs]
        perm = _sort_for_schreyer(vecs, leads, order)
        vecs = [vecs[i] for i in perm]
        syz, _, new_order = schreyer_syzygies(vecs, order, field)
        maps.append(vecs)
        degrees.append(new_order.degrees)
        order = new_order
        vecs = syz
        guard -= 1
        if guard < 0:
            raise RuntimeError("Schreyer resolution did not terminate")
    return Resolution(S, degrees, maps)


def minimalize(res: Resolution) -> Resolution:
    """Cancel unit entries, pivoting on the lowest (i, j, row, column)."""
    field = res.ring.field
    norm, inv = field.norm, field.inv
    degrees = [list(d) for d in res.degrees]
    maps = [[dict(col) for col in d] for d in res.maps]
    zero = (0,) * res.ring.nvars
    while True:
        pivot = None
        for k, d in enumerate(maps):
            for c, col in enumerate(d):
                for (r, m), u in col.items():
                    if m == zero:
                        cand = (k + 1, degrees[k + 1][c], r, c)
                        if pivot is None or cand < pivot:
                            pivot = cand
        if pivot is None:
            break
        i, _, r, c = pivot
        k = i - 1
        d = maps[k]
        col_c = d[c]
        u_inv = inv(col_c[(r, zero)])
        new_cols = []
        for j, col in enumerate(d):
            if j == c:
                continue
            a = {m: v for (row, m), v in col.items() if row == r}
            col = dict(col)
            for m, v in a.items():
                _add_scaled(col, col_c, -norm(v * u_inv), m, norm)
            new_cols.append(_drop_row(col, r))
        maps[k] = new_cols
        if k + 1 < len(maps):
            # in the new basis the e_c coordinate vanishes because d o d = 0
            maps[k + 1] = [_drop_row(col, c, check=False) for col in maps[k + 1]]
        if k >= 1:
            maps[k - 1] = [col for j, col in enumerate(maps[k - 1]) if j != r]
        del degrees[i][c]
        del degrees[i - 1][r]
    while len(degrees) > 1 and not degrees[-1]:
        degrees.pop()
        maps.pop()
    return Resolution(res.ring, degrees, maps)


def _drop_row(col: dict, r: int, check: bool = True) -> dict:
    out = {}
    for (row, m), v in col.items():
        if row == r:
            if check and v:
                raise AssertionError("dropped row carried a nonzero entry")
            continue
        out[(row - (row > r), m)] = v
    return out


# --------------------------------------------------------------------------
# Betti tables


@dataclass
class BettiTable:
    entries: dict
    nvars: int
    dim: int | None = None
    meta: dict = dc_field(default_factory=dict)

    def __getitem__(self, ij):
        return self.entries.get(ij, 0)

    @property
    def pd(self) -> int:
        return max((i for (i, _), b in self.entries.items() if b), default=0)

    @property
    def regularity(self) -> int:
        return max((j - i for (i, j), b in self.entries.items() if b), default=0)

    def degrees(self, i: int) -> list:
        return sorted(j for (ii, j), b in self.entries.items() if ii == i for _ in range(b))

    def total(self, i: int) -> int:
        return sum(b for (ii, _), b in self.entries.items() if ii == i)

    def grid(self) -> list:
        """Rows indexed by j - i (from 0), columns by i, Macaulay style."""
        rows = self.regularity + 1
        cols = self.pd + 1
        g = [[0] * cols for _ in range(rows)]
        for (i, j), b in self.entries.items():
            if b and j - i >= 0:
                g[j - i][i] = b
        return g

    def format(self) -> str:
        g = self.grid()
        width = max(4, max((len(str(x)) for row in g for x in row), default=1) + 1)
        head = "      " + "".join(f"{i:>{width}}" for i in range(self.pd + 1))
        lines = [head, "total:" + "".join(f"{self.total(i):>{width}}" for i in range(self.pd + 1))]
        for r, row in enumerate(g):
            lines.append(f"{r:>5}:" + "".join(f"{(x if x else '.'):>{width}}" for x in row))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {
            "schema_version": 1,
            "nvars": self.nvars,
            "betti": [[i, j, b] for (i, j), b in sorted(self.entries.items()) if b],
            "grid": self.grid(),
        }

    def euler_numerator(self) -> list:
        """sum_i (-1)^i sum_j beta_ij z^j: the K-polynomial of the module."""
        top = max((j for (_, j) in self.entries), default=0)
        out = [0] * (top + 1)
        for (i, j), b in self.entries.items():
            out[j] += (-1) ** i * b
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out


def free_resolution(L: GroebnerIdeal) -> BettiTable:
    """Graded Betti numbers of S/L from a minimalized Schreyer resolution."""
    res = minimalize(schreyer_resolution(L))
    return BettiTable(res.betti(), L.ring.nvars, meta={"resolution": res})


@dataclass
class DerivedInvariants:
    regularity: int
    pd: int
    depth: int
    is_cm: bool
    type: int
    is_gorenstein: bool

    def to_dict(self):
        return dict(self.__dict__)


def derived_invariants(B: BettiTable, dim: int) -> DerivedInvariants:
    pd = B.pd
    depth = B.nvars - pd
    cm = depth == dim
    typ = B.total(pd)
    return DerivedInvariants(B.regularity, pd, depth, cm, typ, cm and typ == 1)


# --------------------------------------------------------------------------
# independent route: Koszul homology


def koszul_betti(L: GroebnerIdeal, max_degree: int) -> dict:
    """beta_ij = dim H_i(K(U) (x) S/L)_j for j <= max_degree, by linear algebra over k."""
    S = L.ring
    n = S.nvars
    field = S.field
    gb = L.basis()
    lts = [p.lm for p in gb]
    std_cache: dict = {}

    def std(d):
        if d not in std_cache:
            std_cache[d] = [m for m in monomials_of_degree(n, d) if not any(mono_divides(l, m) for l in lts)] if d >= 0 else []
        return std_cache[d]

    def nf(m):
        p = normal_form(S.monomial(m), gb)
        return p.terms

    def boundary(i, j):
        """Rows of the map C_{i,j} -> C_{i-1,j} as sparse vectors."""
        rows = []
        for sigma in combinations(range(n), i):
            for m in std(j - i):
                v: dict = {}
                for pos, t in enumerate(sigma):
                    sign = -1 if pos % 2 else 1
                    rest = sigma[:pos] + sigma[pos + 1:]
                    mm = tuple(e + (k == t) for k, e in enumerate(m))
                    for mon, c in nf(mm).items():
                        key = (rest, mon)
                        x = field.norm(v.get(key, 0) + sign * c)
                        if x:
                            v[key] = x
                        else:
                            v.pop(key, None)
                rows.append(v)
        return rows

    out = {}
    for j in range(max_degree + 1):
        ranks = {}
        for i in range(0, n + 2):
            ranks[i] = rank(boundary(i, j), field) if 1 <= i <= n else 0
        for i in range(0, n + 1):
            dim_c = len(list(combinations(range(n), i))) * len(std(j - i))
            b = dim_c - ranks[i] - ranks[i + 1]
            if b:
                out[(i, j)] = b
    return out
