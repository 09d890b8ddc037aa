"""Linear (bracket) notation for transformations: parser and printer.

The grammar, with whitespace between tokens ignored:

    form      = component*
    component = "(" [ entry ("," entry)* ] ")" | entry
    entry     = point | "[" source ("," source)* ";" point "]"
    source    = point | "[" source ("," source)* ";" point "]"
    point     = decimal integer

A parenthesized component lists the targets of a cycle in order; a bare
component is a fixed target. Every source maps to the target of the
bracket it sits in, recursively, so the cycle points are the sinks of
trees of transient points. Points that are not mentioned stay fixed, each
point may be mentioned at most once, and the identity map prints (and
parses) as "()".

`print_linear` is canonical: cycles are rotated so their smallest target
comes first, sources are sorted by their own point, components are sorted
by the smallest point occurring anywhere in them, and a source without
sub-sources prints as a bare point.
"""

from __future__ import annotations

import re

from .core import StraytError, Transformation


class NotationError(StraytError):
    """Malformed linear notation or image list."""


_TOKEN = re.compile(r"\s*(\d+|[][(),;])")

# an entry is (point, sources) with each source again an entry
_Entry = tuple[int, list]


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if not text[pos:].strip():
                break
            raise NotationError(f"unexpected character {text[pos]!r} at position {pos}")
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expect: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise NotationError("unexpected end of input")
        if expect is not None and tok != expect:
            raise NotationError(f"expected {expect!r}, got {tok!r}")
        self.pos += 1
        return tok

    def point(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise NotationError(f"expected a point, got {tok!r}")
        return int(tok)

    def form(self) -> list[tuple[bool, list[_Entry]]]:
        components = []
        while self.peek() is not None:
            components.append(self.component())
        return components

    def component(self) -> tuple[bool, list[_Entry]]:
        if self.peek() != "(":
            return False, [self.entry()]
        self.take("(")
        entries: list[_Entry] = []
        if self.peek() != ")":
            entries.append(self.entry())
            while self.peek() == ",":
                self.take(",")
                entries.append(self.entry())
        self.take(")")
        return True, entries

    def entry(self) -> _Entry:
        if self.peek() != "[":
            return self.point(), []
        self.take("[")
        sources = [self.entry()]
        while self.peek() == ",":
            self.take(",")
            sources.append(self.entry())
        self.take(";")
        target = self.point()
        self.take("]")
        return target, sources


def parse_linear(text: str, n: int) -> Transformation:
    """Parse linear notation into a transformation on {1..n}.

    The empty form and "()" give the identity map.
    """
    if n < 1:
        raise ValueError("state count must be at least 1")
    components = _Parser(_tokenize(text)).form()
    images = list(range(1, n + 1))
    seen: set[int] = set()

    def mention(p: int) -> None:
        if not 1 <= p <= n:
            raise NotationError(f"point {p} is outside 1..{n}")
        if p in seen:
            raise NotationError(f"point {p} mentioned twice")
        seen.add(p)

    def place_sources(target: int, sources: list[_Entry]) -> None:
        for point, subs in sources:
            mention(point)
            images[point - 1] = target
            place_sources(point, subs)

    for is_cycle, entries in components:
        targets = []
        for target, sources in entries:
            mention(target)
            targets.append(target)
            place_sources(target, sources)
        k = len(targets)
        for i, t in enumerate(targets):
            images[t - 1] = targets[(i + 1) % k] if is_cycle and k > 1 else t
    return Transformation(images)


def print_linear(s: Transformation) -> str:
    """Canonical linear notation; parse_linear(print_linear(s), s.n) == s."""
    n, img = s.n, s.images

    # points lying on cycles of the functional graph
    on_cycle: set[int] = set()
    visited = [False] * (n + 1)
    for x in range(1, n + 1):
        if visited[x]:
            continue
        path: list[int] = []
        path_pos: dict[int, int] = {}
        y = x
        while y not in path_pos and not visited[y]:
            path_pos[y] = len(path)
            path.append(y)
            y = img[y - 1]
        if y in path_pos:
            on_cycle.update(path[path_pos[y]:])
        for p in path:
            visited[p] = True

    # trees of transient points rooted at cycle points
    preds: dict[int, list[int]] = {}
    for x in range(1, n + 1):
        if x not in on_cycle:
            preds.setdefault(img[x - 1], []).append(x)
    for feeders in preds.values():
        feeders.sort()

    def render(p: int) -> str:
        srcs = preds.get(p)
        if not srcs:
            return str(p)
        return "[" + ",".join(render(q) for q in srcs) + ";" + str(p) + "]"

    def lowest_point(cycle: list[int]) -> int:
        lo = min(cycle)
        stack = list(cycle)
        while stack:
            q = stack.pop()
            lo = min(lo, q)
            stack.extend(preds.get(q, ()))
        return lo

    pieces: list[tuple[int, str]] = []
    done: set[int] = set()
    for x in range(1, n + 1):
        if x not in on_cycle or x in done:
            continue
        cycle = [x]
        y = img[x - 1]
        while y != x:
            cycle.append(y)
            y = img[y - 1]
        done.update(cycle)
        if len(cycle) == 1 and cycle[0] not in preds:
            continue  # plain fixed point, omitted
        start = cycle.index(min(cycle))
        rotated = cycle[start:] + cycle[:start]
        entries = [render(p) for p in rotated]
        text = entries[0] if len(rotated) == 1 else "(" + ",".join(entries) + ")"
        pieces.append((lowest_point(cycle), text))

    if not pieces:
        return "()"
    pieces.sort()
    return "".join(text for _, text in pieces)


def parse_images(text: str) -> Transformation:
    """Parse a whitespace-separated image list; entry i is the image of i."""
    tokens = text.split()
    if not tokens:
        raise NotationError("empty image list")
    images = []
    for tok in tokens:
        if not tok.isdigit():
            raise NotationError(f"bad image entry {tok!r}")
        images.append(int(tok))
    n = len(images)
    for x in images:
        if not 1 <= x <= n:
            raise NotationError(f"image {x} is outside 1..{n}")
    return Transformation(images)
