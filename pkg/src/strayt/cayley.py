"""Breadth-first enumeration of the generated semigroup and its Cayley graph.

The graph is immutable once built; enumeration itself is single-threaded
so that node numbering and first words are reproducible.
"""

from __future__ import annotations

from array import array
from typing import Sequence

from .core import Presentation, StraytError, Transformation, check_word


class NotInSemigroup(StraytError):
    """The transformation is not generated by the presentation."""


class EnumerationLimitExceeded(StraytError):
    """Enumeration found more elements than the configured cap."""


class CayleyGraph:
    """The generated semigroup with the identity adjoined as node 0.

    Node 0 is always the identity map, whether or not a nonempty word
    realizes it; `contains_identity` records whether one does. Nodes 1..
    are the generated elements in breadth-first discovery order, and every
    (node, letter) pair has an outgoing edge node -> node * generator.
    Words over the presentation label paths from node 0.
    """

    def __init__(self, presentation: Presentation, elements: list[bytes],
                 index: dict[bytes, int], edges: array, parent_node: array,
                 parent_letter: array, contains_identity: bool):
        self.presentation = presentation
        self._elements = elements
        self._index = index
        self._edges = edges
        self._parent_node = parent_node
        self._parent_letter = parent_letter
        self._k = len(presentation.generators)
        self.contains_identity = contains_identity

    @property
    def num_letters(self) -> int:
        return self._k

    @property
    def size(self) -> int:
        """Number of nodes: the generated elements plus the identity node."""
        return len(self._elements)

    @property
    def order(self) -> int:
        """Number of elements realized by nonempty words."""
        return len(self._elements) - 1 + (1 if self.contains_identity else 0)

    def element(self, node: int) -> Transformation:
        return Transformation(self._elements[node])

    def element_index(self, s: Transformation) -> int:
        """Node of a transformation, or NotInSemigroup if it was never generated."""
        if s.n != self.presentation.n:
            raise NotInSemigroup(
                f"map on {s.n} states cannot lie in a semigroup on {self.presentation.n} states")
        node = self._index.get(bytes(s.images))
        if node is None:
            raise NotInSemigroup(f"{s!r} is not generated by the presentation")
        return node

    def step(self, node: int, letter: int) -> int:
        return self._edges[node * self._k + letter]

    def walk(self, word: Sequence[int], start: int = 0) -> int:
        """End node of the path labeled by the word."""
        check_word(word, self.num_letters)
        k = self.num_letters
        edges = self._edges
        node = start
        for letter in word:
            node = edges[node * k + letter]
        return node

    def trajectory(self, word: Sequence[int]) -> tuple[int, ...]:
        """Nodes realized by the word's prefixes, starting at node 0."""
        check_word(word, self.num_letters)
        k = self.num_letters
        edges = self._edges
        node = 0
        nodes = [0]
        for letter in word:
            node = edges[node * k + letter]
            nodes.append(node)
        return tuple(nodes)

    def is_straight(self, word: Sequence[int]) -> bool:
        """Trajectory nodes pairwise distinct, allowing one final return to node 0."""
        nodes = self.trajectory(word)
        last = len(nodes) - 1
        seen: set[int] = set()
        for i, v in enumerate(nodes):
            if v in seen:
                return i == last and v == 0
            seen.add(v)
        return True

    def first_word(self, node: int) -> tuple[int, ...]:
        """The first word realizing the node in breadth-first order (node >= 1).

        First words are shortest, with ties broken by generator position,
        and are always straight.
        """
        if not 1 <= node < len(self._elements):
            raise ValueError(f"node {node} has no defining word")
        letters = []
        while node != 0:
            letters.append(self._parent_letter[node])
            node = self._parent_node[node]
        return tuple(reversed(letters))


def enumerate_semigroup(p: Presentation, max_elements: int | None = None) -> CayleyGraph:
    """Generate every product of the generators by breadth-first closure.

    Discovery order is fixed: elements appear in word-length order with
    ties broken by generator position, which pins node numbering and first
    words. `max_elements` caps the number of generated elements, raising
    EnumerationLimitExceeded beyond it. State counts above 255 are not
    supported (images are packed into bytes).
    """
    n = p.n
    if n > 255:
        raise ValueError("enumeration supports at most 255 states")
    base = bytes(range(256))
    tables = []
    for _, t in p.generators:
        tbl = bytearray(base)
        tbl[1:n + 1] = bytes(t.images)
        tables.append(bytes(tbl))

    ident = bytes(range(1, n + 1))
    elements = [ident]
    index = {ident: 0}
    parent_node = array("i", [-1])
    parent_letter = array("i", [-1])
    edges = array("i")
    edges_append = edges.append
    index_get = index.get
    contains_identity = False

    node = 0
    while node < len(elements):
        src = elements[node]
        for letter, tbl in enumerate(tables):
            img = src.translate(tbl)
            nxt = index_get(img)
            if nxt is None:
                nxt = len(elements)
                if max_elements is not None and nxt > max_elements:
                    raise EnumerationLimitExceeded(
                        f"enumeration exceeded the cap of {max_elements} elements")
                index[img] = nxt
                elements.append(img)
                parent_node.append(node)
                parent_letter.append(letter)
            elif nxt == 0:
                contains_identity = True
            edges_append(nxt)
        node += 1

    return CayleyGraph(p, elements, index, edges, parent_node, parent_letter,
                       contains_identity)
