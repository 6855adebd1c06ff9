"""Random search for ideals with reg F(I) > reg G(I).

Instances are 𝔪-primary monomial ideals of a polynomial ring (N = 0), so
grade I > 0.  reg G(I) is only known when G(I) is Cohen-Macaulay, where it
equals the reduction number; elsewhere the relation type gives a lower bound
and no conclusion is drawn.
"""
from __future__ import annotations

import hashlib
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
import random

from .blowup import LocalPolynomialContext, fiber_presentation, graded_presentation_and_reltype
from .groebner import DegreeCapExceeded, TruncatedBasisError
from .homology import free_resolution
from .monomial import LocalRing

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExplorerShape:
    max_vars: int = 3
    max_gens: int = 4
    max_degree: int = 4


def instance_seed(seed: int, index: int) -> int:
    h = hashlib.sha256(f"{seed}:{index}".encode()).digest()
    return int.from_bytes(h[:8], "big")


def random_instance(rng: random.Random, shape: ExplorerShape):
    """Pure powers of every variable (so I is 𝔪-primary) plus random extra monomials."""
    d = rng.randint(1, shape.max_vars)
    names = "xyz"[:d] if d <= 3 else tuple(f"x{i}" for i in range(d))
    gens = []
    for i in range(d):
        gens.append(tuple(rng.randint(1, shape.max_degree) if j == i else 0 for j in range(d)))
    for _ in range(rng.randint(0, shape.max_gens - d)):
        deg = rng.randint(1, shape.max_degree)
        e = [0] * d
        for _ in range(deg):
            e[rng.randrange(d)] += 1
        gens.append(tuple(e))
    A = LocalRing(names)
    return A.ideal(gens)


def explore_one(seed: int, index: int, shape: ExplorerShape = ExplorerShape()) -> dict:
    rng = random.Random(instance_seed(seed, index))
    I = random_instance(rng, shape)
    rep = {"index": index, "ring": repr(I.ring), "I": repr(I), "ngens": len(I.gens)}
    try:
        F = fiber_presentation(I)
        B = free_resolution(F.ideal())
        rep["fiber"] = [str(g) for g in F.generators]
        rep["reg_F"] = B.regularity
        ctx = LocalPolynomialContext(I)
        red = ctx.search_reduction(rng.randrange(2**31), tries=3)
        rep["J"] = [str(g) for g in red.J]
        rep["r"] = red.r
        vv = ctx.vv_check(red.J, red.r, red.r + 1)
        rep["vv"] = vv.holds
        if vv.holds:
            rep["reg_G"] = red.r
            rep["violation"] = B.regularity > red.r
            if rep["violation"]:
                rep["certificate"] = {"betti": B.to_dict(), "vv": [list(c) for c in vv.certificate],
                                      "reduction": red.to_dict()}
        else:
            g = graded_presentation_and_reltype(I)
            rep["reg_G_lower_bound"] = g.reltype - 1
            rep["violation"] = False
        rep["status"] = "ok"
    except (DegreeCapExceeded, TruncatedBasisError) as exc:
        rep["status"] = f"skipped: {exc}"
    return rep


def question_explorer(seed: int = 0, count: int = 100, shape: ExplorerShape = ExplorerShape(),
                      workers: int = 1) -> dict:
    """Reports for ``count`` seeded instances; output depends only on (seed, count, shape)."""
    if workers > 1:
        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(explore_one, [seed] * count, range(count), [shape] * count))
    else:
        reports = [explore_one(seed, i, shape) for i in range(count)]
    ok = [r for r in reports if r["status"] == "ok"]
    return {
        "schema_version": 1,
        "seed": seed,
        "count": count,
        "shape": asdict(shape),
        "instances": reports,
        "summary": {
            "computed": len(ok),
            "skipped": count - len(ok),
            "cm_regime": sum(1 for r in ok if r["vv"]),
            "violations": sum(1 for r in ok if r.get("violation")),
        },
    }
