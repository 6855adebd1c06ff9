"""Exact sparse multivariate polynomials over GF(p) or QQ.

Monomials are plain exponent tuples.  A :class:`PolynomialRing` bundles the
variable names, the coefficient field and the active term order; every
:class:`Polynomial` carries its ring and a ``{monomial: coefficient}`` dict
with no zero entries, so two polynomials are equal exactly when their term
dicts are.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

DEFAULT_PRIME = 32003
MAX_EXPONENT = 2**31 - 1

Monomial = tuple


class RingMismatch(ValueError):
    pass


class MonomialOverflow(OverflowError):
    pass


# --------------------------------------------------------------------------
# coefficient fields


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class PrimeField:
    """Residues modulo a prime, stored as ints in ``[0, p)``."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def norm(self, x: int) -> int:
        return x % self.p

    def inv(self, x: int) -> int:
        if x % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p)

    def signed(self, x: int) -> int:
        """Symmetric representative, used only for printing."""
        return x - self.p if x > self.p // 2 else x

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


class RationalField:
    characteristic = 0

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    @staticmethod
    def norm(x):
        return x

    @staticmethod
    def inv(x):
        return 1 / Fraction(x)

    @staticmethod
    def signed(x):
        return x

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


# --------------------------------------------------------------------------
# monomials


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    m = tuple(x + y for x, y in zip(a, b))
    if m and max(m) > MAX_EXPONENT:
        raise MonomialOverflow(f"exponent overflow in {a} * {b}")
    return m


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Exact quotient a / b; caller guarantees b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def mono_degree(a: Monomial) -> int:
    return sum(a)


# --------------------------------------------------------------------------
# term orders


def _lex_key(m):
    return m


def _grevlex_key(m):
    return (sum(m),) + tuple(-e for e in reversed(m))


_INNER = {"lex": _lex_key, "grevlex": _grevlex_key}


@dataclass(frozen=True)
class TermOrder:
    """A monomial order; ``key(m)`` sorts ascending in the order.

    ``blocks`` (block orders only) lists ``(variable indices, inner kind)``
    from the most significant block down.
    """

    kind: str = "grevlex"
    blocks: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown order {self.kind!r}")
        if self.kind == "block":
            if not self.blocks:
                raise ValueError("block order needs blocks")
            object.__setattr__(self, "blocks", tuple((tuple(ix), inner) for ix, inner in self.blocks))
        object.__setattr__(self, "key", lru_cache(maxsize=1 << 17)(self._make_key()))

    def _make_key(self):
        if self.kind != "block":
            return _INNER[self.kind]
        parts = [(ix, _INNER[inner]) for ix, inner in self.blocks]

        def key(m):
            return tuple(f(tuple(m[i] for i in ix)) for ix, f in parts)

        return key

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        if len(m1) != len(m2):
            raise RingMismatch("monomial arity mismatch")
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def __getstate__(self):
        return {"kind": self.kind, "blocks": self.blocks}

    def __setstate__(self, state):
        object.__setattr__(self, "kind", state["kind"])
        object.__setattr__(self, "blocks", state["blocks"])
        self.__post_init__()

    def __repr__(self):
        if self.kind == "block":
            return f"block{list(self.blocks)}"
        return self.kind


LEX = TermOrder("lex")
GREVLEX = TermOrder("grevlex")


def block_order(nvars: int, groups: Sequence[Sequence[int]], inner: str = "grevlex") -> TermOrder:
    """Block order with ``groups`` ranked first to last; unlisted variables form a final block."""
    seen = [i for g in groups for i in g]
    rest = [i for i in range(nvars) if i not in seen]
    blocks = [(tuple(g), inner) for g in groups if g]
    if rest:
        blocks.append((tuple(rest), inner))
    return TermOrder("block", tuple(blocks))


def elimination_order(nvars: int, eliminate: Iterable[int], inner: str = "grevlex") -> TermOrder:
    return block_order(nvars, [sorted(eliminate)], inner)


# --------------------------------------------------------------------------
# rings and polynomials


@dataclass(frozen=True)
class PolynomialRing:
    names: tuple
    field: object = field(default_factory=GF)
    order: TermOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(1)

    @property
    def gens(self) -> list:
        return [self.var(n) for n in self.names]

    def var(self, name: str) -> "Polynomial":
        i = self.names.index(name)
        m = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {m: self.field(1)})

    def constant(self, c) -> "Polynomial":
        c = self.field(c)
        return Polynomial(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Monomial, c=1) -> "Polynomial":
        if len(exps) != self.nvars:
            raise RingMismatch("monomial arity mismatch")
        c = self.field(c)
        return Polynomial(self, {tuple(exps): c} if c else {})

    def with_order(self, order: TermOrder) -> "PolynomialRing":
        return PolynomialRing(self.names, self.field, order)

    def with_names(self, names) -> "PolynomialRing":
        return PolynomialRing(tuple(names), self.field, GREVLEX if self.order.kind == "block" else self.order)

    def __call__(self, text) -> "Polynomial":
        if isinstance(text, Polynomial):
            return text.to_ring(self)
        if isinstance(text, (int, Fraction)):
            return self.constant(text)
        return parse_polynomial(text, self)

    def __repr__(self):
        return f"{self.field!r}[{','.join(self.names)}]/{self.order!r}"


class Polynomial:
    __slots__ = ("ring", "terms", "_lead")

    def __init__(self, ring: PolynomialRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lead = None

    # -- structure
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _lead_term(self):
        if self._lead is None:
            if not self.terms:
                raise ValueError("zero polynomial has no leading term")
            m = max(self.terms, key=self.ring.order.key)
            self._lead = (m, self.terms[m])
        return self._lead

    @property
    def lm(self) -> Monomial:
        return self._lead_term()[0]

    @property
    def lc(self):
        return self._lead_term()[1]

    def sorted_terms(self) -> list:
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self, weights=None) -> bool:
        w = weights or (1,) * self.ring.nvars
        degs = {sum(a * b for a, b in zip(m, w)) for m in self.terms}
        return len(degs) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def variables(self) -> set:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    # -- arithmetic
    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring.names != self.ring.names or other.ring.field != self.ring.field:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.norm
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = norm(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.norm
        return Polynomial(self.ring, {m: norm(-c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.norm
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(self.ring, {m: v for m, c in out.items() if (v := norm(c))})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c, mono: Monomial | None = None) -> "Polynomial":
        """Return ``c * x^mono * self``."""
        norm = self.ring.field.norm
        if mono is None:
            return Polynomial(self.ring, {m: v for m, d in self.terms.items() if (v := norm(c * d))})
        return Polynomial(self.ring, {mono_mul(m, mono): v for m, d in self.terms.items() if (v := norm(c * d))})

    def monic(self) -> "Polynomial":
        return self.scale(self.ring.field.inv(self.lc)) if self.terms else self

    def subs_zero(self, indices: Iterable[int]) -> "Polynomial":
        """Set the listed variables to zero."""
        ix = list(indices)
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if not any(m[i] for i in ix)})

    def to_ring(self, target: PolynomialRing) -> "Polynomial":
        """Reinterpret in ``target`` by variable name; absent variables must not occur."""
        if target.names == self.ring.names:
            return Polynomial(target, dict(self.terms))
        pos = {n: i for i, n in enumerate(target.names)}
        out = {}
        for m, c in self.terms.items():
            e = [0] * target.nvars
            for name, k in zip(self.ring.names, m):
                if k:
                    if name not in pos:
                        raise RingMismatch(f"variable {name} not in {target.names}")
                    e[pos[name]] = k
            out[tuple(e)] = target.field(c) if target.field != self.ring.field else c
        return Polynomial(target, {m: c for m, c in out.items() if c})

    # -- comparison and output
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring.names == other.ring.names and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)!r})"


# --------------------------------------------------------------------------
# text syntax


def _format_monomial(m, names) -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_polynomial(f: Polynomial) -> str:
    if not f.terms:
        return "0"
    signed = f.ring.field.signed
    out = []
    for m, c in f.sorted_terms():
        c = signed(c)
        neg = c < 0
        a = -c if neg else c
        mono = _format_monomial(m, f.ring.names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str):
    pos, toks = 0, []
    text = text.strip()
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt:
            break
        num, name, op = mt.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif name is not None:
            toks.append(("var", name))
        else:
            toks.append(("op", op))
        pos = mt.end()
    return toks


class PolynomialSyntaxError(ValueError):
    pass


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """Parse ``3*x^2*y - 1`` style input (``+ - * / ^`` and parentheses)."""
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos] if pos < len(toks) else (None, None)

    def take(kind=None, val=None):
        nonlocal pos
        t = peek()
        if t[0] is None or (kind and t[0] != kind) or (val and t[1] != val):
            raise PolynomialSyntaxError(f"unexpected {t[1]!r} in {text!r}")
        pos += 1
        return t

    def expr():
        sign = 1
        if peek() == ("op", "-"):
            take()
            sign = -1
        elif peek() == ("op", "+"):
            take()
        acc = term() * sign
        while peek() in (("op", "+"), ("op", "-")):
            op = take()[1]
            t = term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term():
        acc = power()
        while peek() in (("op", "*"), ("op", "/")):
            op = take()[1]
            rhs = power()
            if op == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise PolynomialSyntaxError("division only by nonzero constants")
                acc = acc.scale(ring.field.inv(next(iter(rhs.terms.values()))))
        return acc

    def power():
        base = atom()
        if peek() == ("op", "^"):
            take()
            exp = take("num")[1]
            return base ** exp
        return base

    def atom():
        kind, val = peek()
        if kind == "num":
            take()
            return ring.constant(val)
        if kind == "var":
            take()
            if val not in ring.names:
                raise PolynomialSyntaxError(f"unknown variable {val!r} (ring has {', '.join(ring.names)})")
            return ring.var(val)
        if (kind, val) == ("op", "("):
            take()
            e = expr()
            take("op", ")")
            return e
        if (kind, val) == ("op", "-"):
            take()
            return -atom()
        raise PolynomialSyntaxError(f"unexpected {val!r} in {text!r}")

    if not toks:
        raise PolynomialSyntaxError("empty polynomial")
    result = expr()
    if pos != len(toks):
        raise PolynomialSyntaxError(f"trailing input in {text!r}")
    return result
