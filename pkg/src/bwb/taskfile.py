"""Line-oriented task files: parsing, printing and validation.

Grammar (one declaration per line, ``#`` starts a comment)::

    ring NAME = semigroup(INT, INT, ...)
    ring NAME = power_series(VAR, ...)
    ring NAME = quotient(power_series(VAR, ...), [MONOMIAL, ...])
    ideal NAME in RING = (GEN, ...)
    task KIND ARG ... [KEY=VALUE ...] [expect: VERDICT | KEY=VALUE; KEY=VALUE ...]

Semigroup ideal generators are written ``t^e`` (or just ``e``).
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field

from .monomial import LocalRing, NonMonomialInput
from .poly import PolynomialSyntaxError
from .semigroup import NotNumericalSemigroup, NumericalSemigroup

VERDICTS = ("verified", "refuted", "hypotheses-not-met", "true", "false")

# kind -> (min args, max args)
TASK_KINDS = {
    "fiber": (1, 1),
    "rees": (1, 1),
    "graded": (1, 1),
    "reltype": (1, 1),
    "spread": (1, 1),
    "hilbert": (1, 1),
    "reduction": (1, 2),
    "vv": (2, 2),
    "cmF": (2, 2),
    "pro9": (1, 1),
    "gor-char": (2, 2),
    "canonical": (2, 2),
    "e0": (2, 2),
    "thm7": (1, 2),
}
OPTION_RANGES = {"bound": (1, 200), "seed": (0, 2**63 - 1), "tries": (1, 100), "upto": (0, 60)}


class TaskFileSyntaxError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class RingDecl:
    name: str
    kind: str  # semigroup | local
    data: tuple  # semigroup generators, or variable names
    relations: tuple = ()
    line: int = dc_field(default=0, compare=False)


@dataclass(frozen=True)
class IdealDecl:
    name: str
    ring: str
    gens: tuple
    line: int = dc_field(default=0, compare=False)


@dataclass(frozen=True)
class Expectation:
    verdict: str | None = None
    fields: tuple = ()


@dataclass(frozen=True)
class TaskDecl:
    kind: str
    args: tuple
    options: tuple = ()
    expect: Expectation | None = None
    line: int = dc_field(default=0, compare=False)

    @property
    def opts(self) -> dict:
        return dict(self.options)


@dataclass(frozen=True)
class TaskFile:
    rings: tuple = ()
    ideals: tuple = ()
    tasks: tuple = ()


_NAME = r"[A-Za-z_][A-Za-z0-9_]*"
_RING = re.compile(rf"^ring\s+({_NAME})\s*=\s*(.+)$")
_IDEAL = re.compile(rf"^ideal\s+({_NAME})\s+in\s+({_NAME})\s*=\s*\((.*)\)\s*$")
_TASK = re.compile(r"^task\s+(\S+)(.*)$")


def _split_top(s: str, sep: str = ",") -> list:
    """Split on ``sep`` outside brackets."""
    out, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [p.strip() for p in out if p.strip()]


def _norm(s: str) -> str:
    return re.sub(r"\s+", "", s)


def _parse_ring(name: str, rhs: str, line: int) -> RingDecl:
    rhs = rhs.strip()
    m = re.fullmatch(r"semigroup\((.*)\)", rhs)
    if m:
        try:
            gens = tuple(int(x) for x in _split_top(m.group(1)))
        except ValueError:
            raise TaskFileSyntaxError(line, "semigroup generators must be integers") from None
        return RingDecl(name, "semigroup", gens, (), line)
    m = re.fullmatch(r"power_series\((.*)\)", rhs)
    if m:
        return RingDecl(name, "local", tuple(_split_top(m.group(1))), (), line)
    m = re.fullmatch(r"quotient\(\s*power_series\((.*?)\)\s*,\s*\[(.*)\]\s*\)", rhs)
    if m:
        return RingDecl(name, "local", tuple(_split_top(m.group(1))), tuple(_norm(r) for r in _split_top(m.group(2))), line)
    raise TaskFileSyntaxError(line, f"cannot parse ring {rhs!r}")


def _parse_expect(text: str, line: int) -> Expectation:
    verdict = None
    fields = []
    for item in _split_top(text, ";"):
        if "=" in item:
            k, v = item.split("=", 1)
            fields.append((k.strip(), _norm(v)))
        elif item in VERDICTS and verdict is None:
            verdict = item
        else:
            raise TaskFileSyntaxError(line, f"bad expectation {item!r}")
    return Expectation(verdict, tuple(fields))


def _parse_task(rest: str, kind: str, line: int) -> TaskDecl:
    expect = None
    if "expect:" in rest:
        rest, ex = rest.split("expect:", 1)
        expect = _parse_expect(ex.strip(), line)
    args, opts = [], []
    for tok in rest.split():
        if "=" in tok:
            k, v = tok.split("=", 1)
            opts.append((k, v))
        else:
            if opts:
                raise TaskFileSyntaxError(line, "positional argument after options")
            args.append(tok)
    return TaskDecl(kind, tuple(args), tuple(opts), expect, line)


def parse(text: str) -> TaskFile:
    rings, ideals, tasks = [], [], []
    for no, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if not s:
            continue
        if s.startswith("ring"):
            m = _RING.match(s)
            if not m:
                raise TaskFileSyntaxError(no, "malformed ring declaration")
            rings.append(_parse_ring(m.group(1), m.group(2), no))
        elif s.startswith("ideal"):
            m = _IDEAL.match(s)
            if not m:
                raise TaskFileSyntaxError(no, "malformed ideal declaration")
            ideals.append(IdealDecl(m.group(1), m.group(2), tuple(_norm(g) for g in _split_top(m.group(3))), no))
        elif s.startswith("task"):
            m = _TASK.match(s)
            if not m:
                raise TaskFileSyntaxError(no, "malformed task")
            tasks.append(_parse_task(m.group(2), m.group(1), no))
        else:
            raise TaskFileSyntaxError(no, f"unknown declaration {s.split()[0]!r}")
    return TaskFile(tuple(rings), tuple(ideals), tuple(tasks))


def dump(tf: TaskFile) -> str:
    lines = []
    for r in tf.rings:
        if r.kind == "semigroup":
            rhs = f"semigroup({', '.join(map(str, r.data))})"
        elif r.relations:
            rhs = f"quotient(power_series({', '.join(r.data)}), [{', '.join(r.relations)}])"
        else:
            rhs = f"power_series({', '.join(r.data)})"
        lines.append(f"ring {r.name} = {rhs}")
    for i in tf.ideals:
        lines.append(f"ideal {i.name} in {i.ring} = ({', '.join(i.gens)})")
    for t in tf.tasks:
        parts = ["task", t.kind, *t.args, *(f"{k}={v}" for k, v in t.options)]
        if t.expect is not None:
            items = ([t.expect.verdict] if t.expect.verdict else []) + [f"{k}={v}" for k, v in t.expect.fields]
            parts.append("expect: " + "; ".join(items))
        lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")


# --------------------------------------------------------------------------
# resolution of declarations and validation


@dataclass
class Diagnostic:
    line: int
    message: str

    def __str__(self):
        return f"line {self.line}: {self.message}"


def semigroup_exponent(g: str) -> int:
    g = g.strip()
    if re.fullmatch(r"\d+", g):
        return int(g)
    m = re.fullmatch(r"t(?:\^(\d+))?", g)
    if not m:
        raise ValueError(f"{g!r} is not of the form t^e")
    return int(m.group(1) or 1)


def build_ring(r: RingDecl):
    if r.kind == "semigroup":
        return NumericalSemigroup(r.data)
    return LocalRing(r.data, r.relations)


def build_ideal(ring, decl: IdealDecl):
    if isinstance(ring, NumericalSemigroup):
        return ring.ideal([semigroup_exponent(g) for g in decl.gens])
    return ring.ideal(list(decl.gens))


def resolve(tf: TaskFile):
    """Build rings and ideals; returns (rings, ideals, diagnostics)."""
    diags: list = []
    rings: dict = {}
    ideals: dict = {}
    for r in tf.rings:
        if r.name in rings:
            diags.append(Diagnostic(r.line, f"ring {r.name} declared twice"))
            continue
        try:
            rings[r.name] = build_ring(r)
        except NonMonomialInput as exc:
            diags.append(Diagnostic(r.line, f"unsupported input: {exc}"))
        except (NotNumericalSemigroup, PolynomialSyntaxError, ValueError) as exc:
            diags.append(Diagnostic(r.line, f"bad ring {r.name}: {exc}"))
    for i in tf.ideals:
        if i.ring not in rings:
            diags.append(Diagnostic(i.line, f"ideal {i.name} refers to undeclared ring {i.ring}"))
            continue
        if i.name in ideals:
            diags.append(Diagnostic(i.line, f"ideal {i.name} declared twice"))
            continue
        try:
            ideals[i.name] = build_ideal(rings[i.ring], i)
        except NonMonomialInput as exc:
            diags.append(Diagnostic(i.line, f"unsupported input: {exc}"))
        except (PolynomialSyntaxError, ValueError) as exc:
            diags.append(Diagnostic(i.line, f"bad ideal {i.name}: {exc}"))
    for t in tf.tasks:
        if t.kind not in TASK_KINDS:
            diags.append(Diagnostic(t.line, f"unknown task kind {t.kind!r}"))
            continue
        lo, hi = TASK_KINDS[t.kind]
        if not lo <= len(t.args) <= hi:
            diags.append(Diagnostic(t.line, f"task {t.kind} takes {lo}..{hi} ideal arguments, got {len(t.args)}"))
        decl_names = {i.name for i in tf.ideals}
        for a in t.args:
            if a not in decl_names:
                diags.append(Diagnostic(t.line, f"undeclared ideal {a}"))
        present = [ideals[a] for a in t.args if a in ideals]
        if len(present) == 2 and type(present[0]) is not type(present[1]):
            diags.append(Diagnostic(t.line, "ideals live in different kinds of rings"))
        for k, v in t.options:
            if k not in OPTION_RANGES:
                diags.append(Diagnostic(t.line, f"unknown option {k!r}"))
                continue
            lo, hi = OPTION_RANGES[k]
            if not re.fullmatch(r"\d+", v) or not lo <= int(v) <= hi:
                diags.append(Diagnostic(t.line, f"option {k}={v} outside {lo}..{hi}"))
    return rings, ideals, diags


def validate(tf: TaskFile) -> list:
    return resolve(tf)[2]
