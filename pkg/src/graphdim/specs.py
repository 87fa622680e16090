"""A small text grammar for named families and products.

::

    spec   := family | op "(" spec ("," spec)* ")"
    family := kind (":" int)+          e.g. path:7, complete_bipartite:2:3
    op     := corona | strong | union | join | complement

``strong``, ``union`` and ``join`` fold left over two or more arguments;
``corona`` takes exactly two and ``complement`` exactly one.
"""

from __future__ import annotations

import re

from .construct import corona, family, join, strong_power, union
from .graph import Graph, GraphError, complement


class SpecError(GraphError):
    pass


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z_0-9]*)|(-?\d+)|([():,]))")


def _tokens(text: str) -> list:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise SpecError(f"unexpected character {text[pos]!r} at offset {pos} in {text!r}")
        out.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    return out


def _fold(fn, graphs):
    acc = graphs[0]
    for g in graphs[1:]:
        acc = fn(acc, g)
    return acc


_OPS = {
    "corona": (2, 2, lambda gs: corona(gs[0], gs[1])[0]),
    "complement": (1, 1, lambda gs: complement(gs[0])),
    "strong": (2, None, strong_power),
    "union": (2, None, lambda gs: _fold(union, gs)),
    "join": (2, None, lambda gs: _fold(join, gs)),
}


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            want = expected or "a token"
            raise SpecError(f"expected {want} at token {self.i} of {self.text!r}, found {tok!r}")
        self.i += 1
        return tok

    def spec(self) -> Graph:
        name = self.take()
        if not re.match(r"[A-Za-z_]", name):
            raise SpecError(f"expected a family or operation name in {self.text!r}, found {name!r}")
        if name in _OPS:
            lo, hi, build = _OPS[name]
            self.take("(")
            args = [self.spec()]
            while self.peek() == ",":
                self.take(",")
                args.append(self.spec())
            self.take(")")
            if len(args) < lo or (hi is not None and len(args) > hi):
                raise SpecError(f"{name} got {len(args)} argument(s)")
            return build(args)
        params = []
        while self.peek() == ":":
            self.take(":")
            tok = self.take()
            try:
                params.append(int(tok))
            except ValueError:
                raise SpecError(f"non-integer parameter {tok!r} for {name}") from None
        if not params:
            raise SpecError(f"family {name!r} needs at least one parameter")
        try:
            return family(name, *params)
        except (ValueError, TypeError) as exc:
            raise SpecError(str(exc)) from None


def parse_spec(text: str) -> Graph:
    """Build the graph described by ``text``; raises :class:`SpecError` on any malformed input."""
    parser = _Parser(text)
    graph = parser.spec()
    if parser.peek() is not None:
        raise SpecError(f"trailing input after position {parser.i} in {text!r}")
    return graph
