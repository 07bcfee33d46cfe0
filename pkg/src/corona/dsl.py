"""Parser for the graph description language.

    path(4)  cycle(5)  complete(3)  star(4)  kbip(2,3)  null(2)
    union(a, b, ...)  corona(X, H)  bristle(X, t)
    graph(7; 1-2,2-3,2-4,3-5,5-6,5-7)

Keywords are case-insensitive and whitespace is ignored.  For grids, any
integer argument may be a range ``a..b`` and a spine pattern may be paired
with a set of inner patterns: ``path(1..3) x {null(1..2), complete(2..3)}``.
"""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass
from itertools import product

from .errors import ParseError
from .graphs import (
    Bristle,
    Complete,
    CompleteBipartite,
    Corona,
    Cycle,
    Explicit,
    GraphSpec,
    GraphUnion,
    Null,
    Path,
    Star,
)

__all__ = ["parse_spec", "parse_pattern", "parse_grid", "expand", "IntRange"]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<ident>[A-Za-z_]\w*)|(?P<dots>\.\.)|(?P<sym>[(),;{}\-]))")

_UNARY = {"path": Path, "cycle": Cycle, "complete": Complete, "star": Star, "null": Null}
KEYWORDS = ("path", "cycle", "complete", "star", "kbip", "null", "union", "corona", "bristle", "graph")


@dataclass(frozen=True)
class IntRange:
    lo: int
    hi: int

    def values(self) -> range:
        return range(self.lo, self.hi + 1)

    def __str__(self) -> str:
        return f"{self.lo}..{self.hi}"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text[pos:]) - len(text[pos:].lstrip()) + pos
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        start = m.start(kind)
        value = m.group(kind)
        tokens.append((kind, value.lower() if kind == "ident" else value, start))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, allow_ranges: bool):
        self.tokens = _tokenize(text)
        self.i = 0
        self.allow_ranges = allow_ranges

    @property
    def tok(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def fail(self, expected) -> ParseError:
        kind, value, pos = self.tok
        found = "end of input" if kind == "eof" else repr(value)
        return ParseError(f"unexpected {found}", pos, tuple(expected))

    def take(self, value: str) -> None:
        if self.tok[1] != value or self.tok[0] == "eof":
            raise self.fail([repr(value)])
        self.i += 1

    def peek(self, value: str) -> bool:
        return self.tok[0] != "eof" and self.tok[1] == value

    def integer(self):
        if self.tok[0] != "num":
            raise self.fail(["integer"])
        lo = int(self.tok[1])
        self.i += 1
        if self.tok[0] == "dots":
            if not self.allow_ranges:
                raise self.fail(["',' or ')'"])
            self.i += 1
            if self.tok[0] != "num":
                raise self.fail(["integer"])
            hi = int(self.tok[1])
            self.i += 1
            return IntRange(lo, hi)
        return lo

    def spec(self):
        kind, name, pos = self.tok
        if kind != "ident" or name not in KEYWORDS:
            raise self.fail(KEYWORDS)
        self.i += 1
        self.take("(")
        if name in _UNARY:
            node = _UNARY[name](self.integer())
        elif name == "kbip":
            u = self.integer()
            self.take(",")
            node = CompleteBipartite(u, self.integer())
        elif name == "union":
            parts = []
            if not self.peek(")"):
                parts.append(self.spec())
                while self.peek(","):
                    self.i += 1
                    parts.append(self.spec())
            node = GraphUnion(tuple(parts))
        elif name == "corona":
            spine = self.spec()
            self.take(",")
            node = Corona(spine, self.spec())
        elif name == "bristle":
            spine = self.spec()
            self.take(",")
            node = Bristle(spine, self.integer())
        else:
            node = self.explicit()
        if not self.peek(")"):
            raise self.fail(["')'", "','"] if name == "union" else ["')'"])
        self.i += 1
        return node

    def explicit(self) -> Explicit:
        if self.tok[0] != "num":
            raise self.fail(["integer"])
        n = int(self.tok[1])
        self.i += 1
        edges = []
        if self.peek(";"):
            self.i += 1
            if self.tok[0] == "num":
                edges.append(self.edge())
                while self.peek(","):
                    self.i += 1
                    edges.append(self.edge())
        return Explicit(n, tuple(edges))

    def edge(self) -> tuple[int, int]:
        if self.tok[0] != "num":
            raise self.fail(["integer"])
        a = int(self.tok[1])
        self.i += 1
        self.take("-")
        if self.tok[0] != "num":
            raise self.fail(["integer"])
        b = int(self.tok[1])
        self.i += 1
        return (a, b)

    def end(self) -> None:
        if self.tok[0] != "eof":
            raise self.fail(["end of input"])


def parse_spec(text: str) -> GraphSpec:
    """Parse one concrete graph description (no ranges)."""
    p = _Parser(text, allow_ranges=False)
    node = p.spec()
    p.end()
    return node


def parse_pattern(text: str):
    """Parse a description whose integer arguments may be ranges."""
    p = _Parser(text, allow_ranges=True)
    node = p.spec()
    p.end()
    return node


def parse_grid(text: str) -> list[GraphSpec]:
    """Expand ``spine x {inner, ...}`` (or a single pattern) to concrete specs.

    A grid produces ``corona(X, H)`` for every spine ``X`` and inner ``H``
    in the expansions, spine-major.
    """
    p = _Parser(text, allow_ranges=True)
    spine = p.spec()
    if not (p.tok[0] == "ident" and p.tok[1] == "x"):
        p.end()
        return expand(spine)
    p.i += 1
    inners = []
    if p.peek("{"):
        p.i += 1
        inners.append(p.spec())
        while p.peek(","):
            p.i += 1
            inners.append(p.spec())
        p.take("}")
    else:
        inners.append(p.spec())
    p.end()
    inner_specs = [h for pat in inners for h in expand(pat)]
    return [Corona(x, h) for x in expand(spine) for h in inner_specs]


def expand(node) -> list:
    """All concrete specs matched by a pattern, in lexicographic order."""
    if isinstance(node, IntRange):
        return list(node.values())
    if isinstance(node, tuple):
        return [tuple(c) for c in product(*(expand(x) for x in node))]
    if isinstance(node, int) or not dataclasses.is_dataclass(node):
        return [node]
    names = [f.name for f in dataclasses.fields(node)]
    choices = [expand(getattr(node, name)) for name in names]
    return [type(node)(*combo) for combo in product(*choices)]
