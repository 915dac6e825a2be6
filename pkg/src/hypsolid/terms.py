"""Signatures and the free term algebra.

Terms are immutable values: equality is syntactic identity and every
construction goes through the interning factories ``var``/``app`` so that
structurally equal terms are usually the same object.  Nothing observable
depends on the sharing; it only makes equality and dict lookups cheap.
"""

from __future__ import annotations

import itertools
import re
import weakref
from dataclasses import dataclass

__all__ = [
    "ParseError",
    "CapExceeded",
    "Signature",
    "Term",
    "Var",
    "App",
    "TermMetrics",
    "var",
    "app",
    "variables",
    "metrics",
    "parse_signature",
    "parse_term",
    "render_term",
    "superpose",
    "enumerate_terms",
    "VARIABLE_ALIASES",
]


class ParseError(ValueError):
    """Malformed signature, term, word, or presentation text."""


class CapExceeded(RuntimeError):
    """A bounded enumeration would exceed its configured cap."""


#: Input aliases for the first six variables.  Output always uses x1,x2,...
VARIABLE_ALIASES = {"x": 1, "y": 2, "z": 3, "u": 4, "v": 5, "w": 6}


class Signature:
    """An ordered list of operation symbols, each with a positive arity."""

    __slots__ = ("symbols", "_index")

    def __init__(self, symbols):
        symbols = tuple((str(name), int(arity)) for name, arity in symbols)
        index = {}
        for pos, (name, arity) in enumerate(symbols):
            if arity < 1:
                raise ValueError(f"symbol {name!r} has non-positive arity {arity}")
            if name in index:
                raise ValueError(f"duplicate symbol name {name!r}")
            index[name] = (pos, arity)
        self.symbols = symbols
        self._index = index

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    def __contains__(self, name):
        return name in self._index

    def arity(self, name: str) -> int:
        try:
            return self._index[name][1]
        except KeyError:
            raise KeyError(f"unknown symbol {name!r}") from None

    def position(self, name: str) -> int:
        return self._index[name][0]

    @property
    def names(self):
        return tuple(name for name, _ in self.symbols)

    def __eq__(self, other):
        return isinstance(other, Signature) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        inner = ", ".join(f"{n}/{a}" for n, a in self.symbols)
        return f"Signature({inner})"


class Term:
    """Base class; instances are either ``Var`` leaves or ``App`` nodes."""

    __slots__ = ("depth", "length", "_h", "__weakref__")

    def __hash__(self):
        return self._h


class Var(Term):
    __slots__ = ("index",)

    def __init__(self, index: int):
        index = int(index)
        if index < 1:
            raise ValueError(f"variable index must be >= 1, got {index}")
        self.index = index
        self.depth = 0
        self.length = 1
        self._h = hash(("x", index))

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Var) and self.index == other.index

    __hash__ = Term.__hash__

    def __repr__(self):
        return f"Var({self.index})"


class App(Term):
    __slots__ = ("symbol", "children")

    def __init__(self, symbol: str, children):
        children = tuple(children)
        if not children:
            raise ValueError("application node needs at least one child (arities are positive)")
        self.symbol = symbol
        self.children = children
        self.depth = 1 + max(c.depth for c in children)
        self.length = sum(c.length for c in children)
        self._h = hash((symbol, children))

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, App):
            return False
        return (
            self._h == other._h
            and self.symbol == other.symbol
            and self.children == other.children
        )

    __hash__ = Term.__hash__

    def __repr__(self):
        return f"App({self.symbol!r}, {list(self.children)!r})"


_var_interned: dict[int, Var] = {}
_app_interned: "weakref.WeakValueDictionary[tuple, App]" = weakref.WeakValueDictionary()


def var(index: int) -> Var:
    t = _var_interned.get(index)
    if t is None:
        t = Var(index)
        _var_interned[index] = t
    return t


def app(symbol: str, children) -> App:
    children = tuple(children)
    key = (symbol, children)
    t = _app_interned.get(key)
    if t is None:
        t = App(symbol, children)
        _app_interned[key] = t
    return t


def variables(t: Term) -> frozenset[int]:
    """Set of variable indices occurring in ``t`` (the set var(t))."""
    out = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Var):
            out.add(node.index)
        else:
            stack.extend(node.children)
    return frozenset(out)


@dataclass(frozen=True)
class TermMetrics:
    depth: int
    length: int
    varset: tuple[int, ...]
    varcount: int


def metrics(t: Term) -> TermMetrics:
    """Depth, length c(t), variable set var(t), and its size cv(t)."""
    vs = tuple(sorted(variables(t)))
    return TermMetrics(depth=t.depth, length=t.length, varset=vs, varcount=len(vs))


_SIG_LINE = re.compile(r"^(\S+)\s+(\S+)$")


def _strip_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_signature(text: str) -> Signature:
    """Parse ``<name> <arity>`` lines (``#`` starts a comment)."""
    symbols = []
    for lineno, line in _strip_lines(text):
        m = _SIG_LINE.match(line)
        if not m:
            raise ParseError(f"line {lineno}: expected '<name> <arity>', got {line!r}")
        name, arity_text = m.groups()
        try:
            arity = int(arity_text)
        except ValueError:
            raise ParseError(f"line {lineno}: arity {arity_text!r} is not an integer") from None
        symbols.append((name, arity))
    try:
        return Signature(symbols)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


_TOKEN = re.compile(r"[A-Za-z_][A-Za-z_0-9]*|[(),]")


def _tokenize_term(text: str):
    tokens = _TOKEN.findall(text)
    if "".join(tokens).replace(" ", "") != text.replace(" ", ""):
        raise ParseError(f"unexpected characters in term {text!r}")
    return tokens


def _variable_index(token: str) -> int:
    if token in VARIABLE_ALIASES:
        return VARIABLE_ALIASES[token]
    m = re.fullmatch(r"x(\d+)", token)
    if m:
        index = int(m.group(1))
        if index >= 1:
            return index
    raise ParseError(f"unknown variable token {token!r}")


def parse_term(text: str, sig: Signature) -> Term:
    """Parse ``var | name '(' term {',' term} ')'`` with x/y/z/u/v/w aliases."""
    tokens = _tokenize_term(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise ParseError(f"unexpected end of term {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, got {tok!r} in {text!r}")
        pos += 1
        return tok

    def parse() -> Term:
        tok = take()
        if tok in "(),":
            raise ParseError(f"unexpected {tok!r} in {text!r}")
        if peek() == "(":
            if tok not in sig:
                raise ParseError(f"unknown symbol {tok!r}")
            take("(")
            children = [parse()]
            while peek() == ",":
                take(",")
                children.append(parse())
            take(")")
            arity = sig.arity(tok)
            if len(children) != arity:
                raise ParseError(
                    f"symbol {tok!r} has arity {arity}, got {len(children)} arguments"
                )
            return app(tok, children)
        return var(_variable_index(tok))

    term = parse()
    if pos != len(tokens):
        raise ParseError(f"trailing tokens after term: {tokens[pos:]!r}")
    return term


def render_term(t: Term) -> str:
    """Canonical text with numbered variables; inverse of ``parse_term``."""
    if isinstance(t, Var):
        return f"x{t.index}"
    inner = ",".join(render_term(c) for c in t.children)
    return f"{t.symbol}({inner})"


def superpose(s: Term, args) -> Term:
    """Simultaneous substitution x_i -> args[i-1] in an n-ary term."""
    args = tuple(args)
    n = len(args)

    def go(t: Term) -> Term:
        if isinstance(t, Var):
            if t.index > n:
                raise ValueError(
                    f"variable x{t.index} exceeds the {n} superposition arguments"
                )
            return args[t.index - 1]
        return app(t.symbol, [go(c) for c in t.children])

    return go(s)


def enumerate_terms(sig: Signature, max_depth: int, max_var: int, cap: int = 500_000):
    """All terms over x1..x_max_var of depth <= max_depth.

    Ordered by (depth, symbol position, lexicographic children); children
    compare by their own position in the enumeration.  Raises
    ``CapExceeded`` before materializing a universe larger than ``cap``.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if max_var < 1:
        raise ValueError("max_var must be >= 1")

    total = max_var
    prev = max_var  # number of terms of depth <= d-1
    prev_strict = 0  # number of terms of depth <= d-2
    for _ in range(max_depth):
        level = sum(prev ** a - prev_strict ** a for _, a in sig.symbols)
        total += level
        if total > cap:
            raise CapExceeded(
                f"term universe exceeds cap ({total} > {cap}); tighten the bounds"
            )
        prev_strict, prev = prev, prev + level

    out: list[Term] = [var(i) for i in range(1, max_var + 1)]
    lower = 0  # start of the previous depth level in out
    for _ in range(max_depth):
        size = len(out)
        new: list[Term] = []
        for name, arity in sig.symbols:
            for combo in itertools.product(range(size), repeat=arity):
                if max(combo) < lower:
                    continue  # all children too shallow: built at an earlier level
                new.append(app(name, [out[i] for i in combo]))
        lower = size
        out.extend(new)
    return out
