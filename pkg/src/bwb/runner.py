"""Execution of declared tasks and checking of their ``expect:`` clauses."""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .blowup import (
    LocalPolynomialContext,
    analytic_spread,
    check_pro9,
    cm_check_F,
    fiber_presentation,
    graded_presentation_and_reltype,
    hilbert,
    reduction_number,
    rees_ideal,
    rees_ideal_general,
    vv_check_G,
)
from .config import Config
from .groebner import GroebnerIdeal
from .homology import derived_invariants, free_resolution, koszul_betti
from .semigroup import NumericalSemigroup, minimal_reduction, sg_fiber_presentation
from .taskfile import TaskDecl
from .theorems import canonical_checks, e0_compare, gor_char_verify, thm7_check


class ComputationError(RuntimeError):
    pass


@dataclass
class TaskResult:
    fields: dict
    record: dict
    text: str
    ideal_ring: object = None
    mismatches: list = dc_field(default_factory=list)


def _is_semigroup(I) -> bool:
    return hasattr(I, "S")


def _fiber(I, cfg: Config):
    if _is_semigroup(I):
        return sg_fiber_presentation(I, field=cfg.field, certify=True)
    return fiber_presentation(I, cfg.field, verify=True)


def _degrees_str(degs) -> str:
    return ",".join(map(str, degs))


def _bool(b) -> str:
    return "true" if b else "false"


def task_fiber(I, opts, cfg):
    F = _fiber(I, cfg)
    ring = F.ring.with_order(cfg.term_order)
    L = GroebnerIdeal(ring, [g.to_ring(ring) for g in F.generators])
    B = free_resolution(L)
    spread = analytic_spread(F)
    inv = derived_invariants(B, spread)
    if cfg.verify:
        kb = koszul_betti(L, B.regularity + B.pd + 1)
        if kb != {k: v for k, v in B.entries.items() if v}:
            raise ComputationError("Schreyer and Koszul Betti numbers disagree")
    gens = [str(g) for g in F.generators]
    fields = {
        "ideal": "(" + ",".join(gens) + ")",
        "ngens": str(len(gens)),
        "reg": str(inv.regularity),
        "pd": str(inv.pd),
        "depth": str(inv.depth),
        "cm": _bool(inv.is_cm),
        "gorenstein": _bool(inv.is_gorenstein),
        "spread": str(spread),
    }
    for i in range(B.pd + 1):
        fields[f"betti{i}"] = _degrees_str(B.degrees(i))
    text = f"F(I) = {F}\n{B.format()}\nreg F(I) = {inv.regularity}"
    record = {"fiber": gens, "flags": F.flags, "betti": B.to_dict(), "invariants": inv.to_dict(), "spread": spread}
    return TaskResult(fields, record, text, ideal_ring=ring)


def task_rees(I, opts, cfg):
    if _is_semigroup(I):
        P = I.S.polynomial_model(cfg.field)
        JR = rees_ideal_general(P, [P.ring.monomial(I.S.factor(e)) for e in I.generators_in_order],
                                saturate=cfg.verify)
    else:
        JR = rees_ideal(I, cfg.field, saturate=cfg.verify)
    gens = [str(g) for g in JR.basis()]
    fields = {"ideal": "(" + ",".join(gens) + ")", "ngens": str(len(gens))}
    return TaskResult(fields, {"rees_ideal": gens, "ring": list(JR.ring.names)},
                      "J_R = (" + ", ".join(gens) + ")", ideal_ring=JR.ring)


def task_graded(I, opts, cfg):
    g = graded_presentation_and_reltype(I, bound=int(opts.get("bound", 0)) or None, field=cfg.field)
    fields = {"reltype": str(g.reltype), "degrees": _degrees_str(g.generator_degrees)}
    text = "\n".join(f"  deg {d}: {s}" for d, s in zip(g.generator_degrees, g.labels)) + f"\nreltype G(I) = {g.reltype}"
    return TaskResult(fields, {"generators": g.labels, "degrees": g.generator_degrees, "reltype": g.reltype,
                               "flags": g.flags}, text)


def task_spread(I, opts, cfg):
    s = analytic_spread(_fiber(I, cfg))
    return TaskResult({"spread": str(s)}, {"spread": s}, f"analytic spread = {s}")


def task_hilbert(I, opts, cfg):
    h = hilbert(_fiber(I, cfg), int(opts.get("upto", 8)))
    fields = {"hf": _degrees_str(h.function), "h": _degrees_str(h.h_vector), "e0": str(h.e0),
              "symmetric": _bool(h.symmetric), "dim": str(h.dim)}
    text = f"HF = {h.function}\nh = {h.h_vector} (symmetric: {h.symmetric})\ne0 = {h.e0}"
    return TaskResult(fields, {k: getattr(h, k) for k in ("function", "numerator", "h_vector", "dim", "e0", "symmetric")},
                      text)


def task_reduction(I, J, opts, cfg):
    bound = int(opts.get("bound", cfg.bound))
    if J is not None:
        red = reduction_number(I, J, bound)
        Js = repr(J)
    elif _is_semigroup(I):
        J = minimal_reduction(I)
        red = reduction_number(I, J, bound)
        Js = repr(J)
    else:
        ctx = LocalPolynomialContext(I, cfg.field)
        red = ctx.search_reduction(int(opts.get("seed", cfg.seed)), int(opts.get("tries", cfg.tries)), bound)
        Js = "(" + ", ".join(str(g) for g in red.J) + ")"
    fields = {"r": str(red.r), "J": re.sub(r"\s+", "", Js)}
    return TaskResult(fields, {"J": Js, "r": red.r, "certificate": [list(c) for c in red.certificate]},
                      f"J = {Js}\nr_J(I) = {red.r}")


def _bound_for(I, J, opts, cfg):
    if "bound" in opts:
        return int(opts["bound"])
    return reduction_number(I, J, cfg.bound).r + 1


def task_vv(I, J, opts, cfg):
    res = vv_check_G(I, J, _bound_for(I, J, opts, cfg))
    return _check_result("I^n ∩ J = J I^(n-1)", res)


def task_cmF(I, J, opts, cfg):
    res = cm_check_F(I, J, _bound_for(I, J, opts, cfg))
    return _check_result("𝔪 I^n ∩ J = 𝔪 J I^(n-1)", res)


def _check_result(label, res):
    fields = {"verdict": _bool(res.holds), "witness": str(res.witness)}
    cert = [list(c) for c in res.certificate]
    text = f"{label}: {'holds' if res.holds else f'fails at n = {res.witness}'} (checked n = 1..{len(cert)})"
    return TaskResult(fields, {"holds": res.holds, "witness": res.witness, "certificate": cert}, text)


def task_pro9(I, opts, cfg):
    n0 = check_pro9(I, int(opts.get("bound", cfg.bound)))
    return TaskResult({"n0": str(n0) if n0 is not None else "none"}, {"n0": n0},
                      f"I^n = 𝔪 I^(n-1) first at n = {n0}" if n0 else "no n0 within bound")


def _verdict(rep, extra: dict, text: str):
    fields = {"verdict": rep.verdict, **extra}
    return TaskResult(fields, rep.to_dict(), f"{rep.tag}: {rep.verdict}" + (f" (witness {rep.witness})" if rep.witness is not None else "") + "\n" + text)


def task_gor_char(I, J, opts, cfg):
    rep = gor_char_verify(I, J)
    pairs = ",".join(f"{row['n']}:{row['left']}/{row['right']}" for row in rep.table)
    lines = [f"  n={row['n']}: {row['left']} vs {row['right']}" for row in rep.table]
    return _verdict(rep, {"pairs": pairs, "r": str(rep.certificates["r"])}, "\n".join(lines))


def task_canonical(I, J, opts, cfg):
    rep = canonical_checks(I, J)
    extra = {}
    lines = []
    if rep.certificates:
        checks = rep.certificates["checks"]
        extra = {"a_G": str(checks["a(G) = r - d"][0]), "a_F": str(checks["a(F) = r - d"][0])}
        lines = [f"  {k}: {'ok' if v[2] else 'FAILS'}" for k, v in checks.items()]
    return _verdict(rep, extra, "\n".join(lines))


def task_e0(I, J, opts, cfg):
    rep = e0_compare(I, J)
    extra = {}
    if rep.table:
        row = rep.table[0]
        extra = {"e0_G": str(row["e0_omega_G"]), "e0_F": str(row["e0_omega_F"])}
    return _verdict(rep, extra, str(rep.table))


def task_thm7(I, J, opts, cfg):
    if not _is_semigroup(I):
        raise ComputationError("the reg F = r check is implemented for numerical semigroup rings")
    rep = thm7_check(I, J)
    row = rep.table[0]
    return _verdict(rep, {"reg_F": str(row["reg_F"]), "r": str(row["r"])}, f"reg F(I) = {row['reg_F']}, r = {row['r']}")


SINGLE = {"fiber": task_fiber, "rees": task_rees, "graded": task_graded, "reltype": task_graded,
          "spread": task_spread, "hilbert": task_hilbert, "pro9": task_pro9}
DOUBLE = {"vv": task_vv, "cmF": task_cmF, "gor-char": task_gor_char, "canonical": task_canonical, "e0": task_e0}
OPTIONAL_J = {"reduction": task_reduction, "thm7": task_thm7}


def run_task(task: TaskDecl, ideals: dict, cfg: Config) -> TaskResult:
    args = [ideals[a] for a in task.args]
    opts = task.opts
    if task.kind in SINGLE:
        res = SINGLE[task.kind](args[0], opts, cfg)
    elif task.kind in DOUBLE:
        res = DOUBLE[task.kind](args[0], args[1], opts, cfg)
    else:
        res = OPTIONAL_J[task.kind](args[0], args[1] if len(args) > 1 else None, opts, cfg)
    if task.expect is not None:
        res.mismatches = check_expectation(task, res)
    return res


# --------------------------------------------------------------------------
# expectations


def _expand(v: str) -> str:
    """'4^3' inside a comma list means 4,4,4."""
    out = []
    for tok in v.split(","):
        m = re.fullmatch(r"(-?\d+)\^(\d+)", tok)
        out.extend([m.group(1)] * int(m.group(2)) if m else [tok])
    return ",".join(out)


def _same_ideal(ring, expected: str, got: str) -> bool:
    def parse(s):
        inner = s.strip()[1:-1]
        return GroebnerIdeal(ring, [ring(g) for g in inner.split(",") if g.strip()])

    return parse(expected) == parse(got)


def check_expectation(task: TaskDecl, res: TaskResult) -> list:
    bad = []
    ex = task.expect
    if ex.verdict is not None and res.fields.get("verdict") != ex.verdict:
        bad.append(f"verdict: expected {ex.verdict}, got {res.fields.get('verdict')}")
    for k, v in ex.fields:
        got = res.fields.get(k)
        if got is None:
            bad.append(f"{k}: not produced by task {task.kind}")
            continue
        if k == "ideal" and res.ideal_ring is not None:
            ok = _same_ideal(res.ideal_ring, v, got)
        else:
            ok = _expand(v) == _expand(got)
        if not ok:
            bad.append(f"{k}: expected {v}, got {got}")
    return bad


def ambient_kind(ring) -> str:
    return "semigroup" if isinstance(ring, NumericalSemigroup) else "local"
