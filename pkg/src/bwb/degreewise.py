"""Degree-by-degree kernels of monomial maps, by exact linear algebra.

The maps handled here send a basis element ``(s, a)`` (``s`` a monomial of a
finite-dimensional base algebra, ``a`` an exponent vector in the U-variables)
to a single monomial ``w`` of the target, or to zero.  Kernels are therefore
spanned by the zero-image elements and by differences inside each image
class, and everything splits into blocks indexed by ``w``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Callable, Hashable, Sequence

from .linalg import EchelonSpace
from .monomial import monomials_of_degree


@dataclass
class DegreewiseKernel:
    """New minimal generators found in each U-degree, as ``{(s, a): coeff}`` vectors."""

    generators: dict = dc_field(default_factory=dict)
    kernel_dims: dict = dc_field(default_factory=dict)
    last_degree: int = 0
    stabilized: bool = False

    @property
    def top_degree(self) -> int:
        return max((n for n, g in self.generators.items() if g), default=0)


def _bump(a, j):
    return tuple(e + (i == j) for i, e in enumerate(a))


def degreewise_kernel(
    nU: int,
    image: Callable[[Hashable, tuple], Hashable],
    is_zero: Callable[[int, Hashable], bool],
    field,
    base: Sequence = (None,),
    base_mult: Callable | None = None,
    nbase_vars: int = 0,
    min_degree: int = 1,
    max_degree: int = 12,
) -> DegreewiseKernel:
    """Minimal generators of ker( base[U] -> target ), degree by degree.

    ``image(s, a)`` is the target monomial of ``s * U^a``; ``is_zero(n, w)``
    says whether it vanishes in degree n; ``base_mult(s, i)`` multiplies a
    base monomial by the i-th base variable (None when the product is zero).
    Runs at least to ``min_degree`` and stops once (top generator degree) + 1
    consecutive degrees brought nothing new, or at ``max_degree``.
    """
    out = DegreewiseKernel()
    prev: list = []
    n = 0
    while n < max_degree:
        n += 1
        blocks: dict = {}
        for a in monomials_of_degree(nU, n):
            for s in base:
                blocks.setdefault(image(s, a), []).append((s, a))
        kernel: list = []
        for w, members in blocks.items():
            if is_zero(n, w):
                kernel.extend({e: 1} for e in members)
            else:
                rep = members[0]
                kernel.extend({rep: 1, e: -1} for e in members[1:])
        # span of (base maximal ideal) * K_n + U * K_{n-1}, split by block
        spaces: dict = {}

        def space_for(w):
            sp = spaces.get(w)
            if sp is None:
                sp = spaces[w] = EchelonSpace(field)
            return sp

        def block_of(vec):
            s, a = next(iter(vec))
            return image(s, a)

        for vec in prev:
            for j in range(nU):
                moved = {(s, _bump(a, j)): field(c) for (s, a), c in vec.items()}
                space_for(block_of(moved)).add(moved)
        if base_mult is not None:
            for vec in kernel:
                for i in range(nbase_vars):
                    moved = {}
                    for (s, a), c in vec.items():
                        t = base_mult(s, i)
                        if t is not None:
                            moved[(t, a)] = field(c)
                    if moved:
                        space_for(block_of(moved)).add(moved)
        new = []
        for vec in kernel:
            v = {e: field(c) for e, c in vec.items()}
            if space_for(block_of(v)).add(v):
                new.append(v)
        out.generators[n] = new
        out.kernel_dims[n] = len(kernel)
        prev = kernel
        top = out.top_degree
        if n >= min_degree and n - top >= top + 1:
            break
    out.last_degree = n
    out.stabilized = n - out.top_degree >= out.top_degree + 1
    return out
