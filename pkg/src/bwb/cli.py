"""Command line: ``bwb run FILE``, ``bwb validate FILE``, ``bwb explore``.

Exit codes: 0 success, 1 expectation mismatch, 2 parse or validation error,
3 computation error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from .config import Config
from .explorer import question_explorer
from .runner import run_task
from .taskfile import TaskFileSyntaxError, parse, resolve

SCHEMA_VERSION = 1
EXIT_OK, EXIT_MISMATCH, EXIT_PARSE, EXIT_COMPUTE = 0, 1, 2, 3


def _config(ns) -> Config:
    return Config(prime=ns.prime, rationals=ns.rationals, order=ns.order, max_degree=ns.max_degree,
                  bound=ns.bound, seed=ns.seed, verify=ns.verify)


def _execute(text: str, index: int, cfg: Config) -> dict:
    """Run one task of a task file; the unit of work for --parallel."""
    cfg.activate()
    tf = parse(text)
    _, ideals, _ = resolve(tf)
    task = tf.tasks[index]
    entry = {"line": task.line, "task": task.kind, "args": list(task.args), "options": dict(task.options)}
    try:
        res = run_task(task, ideals, cfg)
    except Exception as exc:  # any engine failure becomes exit code 3
        entry.update(status="error", error=f"{type(exc).__name__}: {exc}")
        return entry
    entry.update(fields=res.fields, result=res.record, text=res.text)
    if task.expect is not None:
        entry["expect"] = {"verdict": task.expect.verdict, "fields": dict(task.expect.fields)}
        entry["mismatches"] = res.mismatches
    entry["status"] = "mismatch" if res.mismatches else "ok"
    return entry


def cmd_run(ns) -> int:
    try:
        text = open(ns.file, encoding="utf-8").read()
        tf = parse(text)
    except (OSError, TaskFileSyntaxError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    diags = resolve(tf)[2]
    if diags:
        for d in diags:
            print(f"{ns.file}:{d}", file=sys.stderr)
        return EXIT_PARSE
    cfg = _config(ns)
    cfg.activate()
    n = len(tf.tasks)
    if ns.parallel and n > 1:
        with ProcessPoolExecutor() as pool:
            entries = list(pool.map(_execute, [text] * n, range(n), [cfg] * n))
    else:
        entries = [_execute(text, i, cfg) for i in range(n)]
    if ns.json:
        out = {"schema_version": SCHEMA_VERSION, "tasks": [{k: v for k, v in e.items() if k != "text"} for e in entries]}
        print(json.dumps(out, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for e in entries:
            head = f"[line {e['line']}] task {e['task']} {' '.join(e['args'])}"
            print(head)
            if e["status"] == "error":
                print(f"  ERROR {e['error']}")
                continue
            print("\n".join("  " + ln for ln in e["text"].splitlines()))
            if "expect" in e:
                print("  expect: " + ("ok" if not e["mismatches"] else "MISMATCH " + "; ".join(e["mismatches"])))
    if any(e["status"] == "error" for e in entries):
        return EXIT_COMPUTE
    if any(e["status"] == "mismatch" for e in entries):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_validate(ns) -> int:
    try:
        tf = parse(open(ns.file, encoding="utf-8").read())
    except (OSError, TaskFileSyntaxError) as exc:
        print(f"{ns.file}: {exc}")
        return EXIT_PARSE
    diags = resolve(tf)[2]
    for d in diags:
        print(f"{ns.file}:{d}")
    return EXIT_PARSE if diags else EXIT_OK


def cmd_explore(ns) -> int:
    cfg = _config(ns)
    cfg.activate()
    res = question_explorer(ns.seed, ns.count, workers=ns.workers)
    print(json.dumps(res, indent=2, sort_keys=True, ensure_ascii=False))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bwb", description="Blowup algebras of monomial and semigroup ideals")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--prime", type=int, default=Config.prime)
        sp.add_argument("--rationals", action="store_true")
        sp.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")
        sp.add_argument("--max-degree", type=int, default=Config.max_degree)
        sp.add_argument("--bound", type=int, default=Config.bound)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--verify", action="store_true", help="force every dual-route cross-check")
        sp.add_argument("--json", action="store_true")

    r = sub.add_parser("run", help="run a task file")
    r.add_argument("file")
    r.add_argument("--parallel", action="store_true")
    common(r)
    r.set_defaults(func=cmd_run)
    v = sub.add_parser("validate", help="check a task file without computing")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)
    e = sub.add_parser("explore", help="random search around reg F(I) <= reg G(I)")
    e.add_argument("--count", type=int, default=100)
    e.add_argument("--workers", type=int, default=1)
    common(e)
    e.set_defaults(func=cmd_explore)
    return p


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
