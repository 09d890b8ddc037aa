"""Permutators of a state subset.

An element permutes a subset when it maps the subset onto itself, even if
it is not a permutation of the whole state set. This module collects the
permutator elements, recognizes and enumerates minimal permutator words,
factorizes permutator words uniquely into minimal ones, excises trajectory
loops to reach straight words, and combines the two into a retraction onto
products of straight minimal permutators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import StraytError, check_word, stateset
from .cayley import CayleyGraph
from .straightwords import SearchLimits, Word, _permutes_memo, _search


class NotAPermutatorWord(StraytError):
    """The word does not permute the state set, so the operation does not apply."""


@dataclass(frozen=True)
class PermutatorSemigroup:
    """All generated elements mapping a state set onto itself."""

    states: frozenset[int]
    element_indices: frozenset[int]
    restriction_group_order: int


@dataclass(frozen=True)
class MinimalStraightCode:
    """The finite, prefix-free set of straight minimal permutator words."""

    states: frozenset[int]
    words: tuple[Word, ...]
    truncated: bool = False

    def __iter__(self) -> Iterator[Word]:
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: object) -> bool:
        return tuple(word) in self.words


def perm_semigroup(graph: CayleyGraph, states: Sequence[int]) -> PermutatorSemigroup:
    """Collect every element whose action maps the state set onto itself.

    Node 0 counts only when the identity is itself a generated element.
    The restriction group order is the size of the closure under
    composition of the permutations the members induce on the set; the
    member set is already closed, so this equals the number of distinct
    restrictions.
    """
    members = stateset(states, graph.presentation.n)
    node_permutes = _permutes_memo(graph, members)
    first = 0 if graph.contains_identity else 1
    indices = [node for node in range(first, graph.size) if node_permutes(node)]

    ordered = sorted(members)
    position = {y: i for i, y in enumerate(ordered)}
    elements = graph._elements
    seeds = {tuple(position[elements[node][y - 1]] for y in ordered) for node in indices}
    closed = set(seeds)
    frontier = list(seeds)
    while frontier:
        fresh = []
        for p in frontier:
            for q in seeds:
                r = tuple(q[i] for i in p)  # p first, then q
                if r not in closed:
                    closed.add(r)
                    fresh.append(r)
        frontier = fresh
    return PermutatorSemigroup(members, frozenset(indices), len(closed))


def is_minimal_permutator(graph: CayleyGraph, word: Sequence[int],
                          states: Sequence[int]) -> bool:
    """The word permutes the set and no proper nonempty prefix does.

    This is the same as not being a product of two or more permutator
    words: a permuting proper prefix u splits the word as uv where v also
    permutes (u maps the set onto itself, so the whole word doing the same
    forces v to), and conversely the first factor of any such product is a
    permuting proper prefix.
    """
    members = stateset(states, graph.presentation.n)
    node_permutes = _permutes_memo(graph, members)
    nodes = graph.trajectory(word)
    for node in nodes[1:-1]:
        if node_permutes(node):
            return False
    return node_permutes(nodes[-1])


def minimal_straight_permutators(graph: CayleyGraph, states: Sequence[int],
                                 limits: SearchLimits | None = None) -> MinimalStraightCode:
    """Enumerate the straight words permuting the set with no permuting proper prefix.

    The search never extends a branch past a node that permutes the set,
    which is exactly the minimality cut, so without limits the enumeration
    is complete (and finite, by the straight-word length bound).
    """
    members = stateset(states, graph.presentation.n)
    node_permutes = _permutes_memo(graph, members)
    found = _search(graph, 0, node_permutes, node_permutes, True, limits)
    return MinimalStraightCode(members, found.words, found.truncated)


def _require_permutator(graph: CayleyGraph, word: Sequence[int],
                        members: frozenset[int]) -> None:
    end = graph.walk(word)
    e = graph._elements[end]
    image = {e[y - 1] for y in members}
    if image == members:
        return
    for y in sorted(members):
        if e[y - 1] not in members:
            raise NotAPermutatorWord(
                f"word does not permute {sorted(members)}: state {y} maps to {e[y - 1]}")
    lost = min(members - image)
    raise NotAPermutatorWord(
        f"word does not permute {sorted(members)}: state {lost} is not reached from the set")


def factorize(graph: CayleyGraph, word: Sequence[int],
              states: Sequence[int]) -> list[Word]:
    """Split a permutator word at each first point its running prefix permutes the set.

    Every factor is a minimal permutator, the factors concatenate to the
    input, and no other split into minimal permutators exists. Words that
    do not permute the set raise NotAPermutatorWord.
    """
    members = stateset(states, graph.presentation.n)
    check_word(word, graph.num_letters)
    _require_permutator(graph, word, members)
    node_permutes = _permutes_memo(graph, members)
    factors: list[Word] = []
    begin = 0
    node = 0
    for pos, letter in enumerate(word):
        node = graph.step(node, letter)
        if node_permutes(node):
            factors.append(tuple(word[begin:pos + 1]))
            begin = pos + 1
            node = 0
    # a permutator word always closes its final factor: after each cut the
    # remainder permutes the set again, so at the latest the last letter cuts
    assert begin == len(word)
    return factors


def reduce_word(graph: CayleyGraph, word: Sequence[int]) -> Word:
    """Excise trajectory loops until the word is straight.

    Each pass finds the earliest node that recurs, drops the letters
    strictly after first entering it through the letter of its last
    occurrence, and repeats. The realized transformation never changes and
    the output is a subsequence of the input. A lone final return to node
    0 is the allowed loop and is kept; when a word realizing the identity
    also wanders through node 0 earlier, the cut runs to the last interior
    occurrence so that the word never collapses to nothing.
    """
    check_word(word, graph.num_letters)
    letters = list(word)
    while True:
        nodes = graph.trajectory(letters)
        last = len(nodes) - 1
        occurrences: dict[int, list[int]] = {}
        for i, v in enumerate(nodes):
            occurrences.setdefault(v, []).append(i)
        cut = None
        for i, v in enumerate(nodes):
            occ = occurrences[v]
            if occ[0] != i or len(occ) == 1:
                continue
            if v == 0 and i == 0 and occ[1:] == [last]:
                continue  # allowed loop
            j = occ[-1]
            if v == 0 and i == 0 and j == last:
                j = occ[-2]
            cut = (i, j)
            break
        if cut is None:
            return tuple(letters)
        i, j = cut
        del letters[i:j]


def retract(graph: CayleyGraph, word: Sequence[int],
            states: Sequence[int]) -> Word:
    """Replace each minimal factor of a permutator word by its straight reduction.

    Fixes every straight minimal permutator word, preserves the realized
    transformation, and distributes over concatenation of permutator
    words. The reduced factors stay minimal because excising loops only
    removes trajectory nodes, so no new permuting prefix can appear.
    """
    out: list[int] = []
    for factor in factorize(graph, word, states):
        out.extend(reduce_word(graph, factor))
    return tuple(out)


def subgroup_closure(graph: CayleyGraph, seeds: Sequence[Sequence[int]]) -> frozenset[int]:
    """Close the realizations of the seed words under composition."""
    if not seeds:
        raise ValueError("at least one seed word is required")
    seed_nodes = {graph.walk(w) for w in seeds}
    elements = graph._elements
    index = graph._index
    n = graph.presentation.n
    base = bytes(range(256))

    def table(node: int) -> bytes:
        tbl = bytearray(base)
        tbl[1:n + 1] = elements[node]
        return bytes(tbl)

    seed_tables = [table(node) for node in sorted(seed_nodes)]
    closed = set(seed_nodes)
    frontier = list(seed_nodes)
    while frontier:
        fresh = []
        for node in frontier:
            src = elements[node]
            for tbl in seed_tables:
                product = index[src.translate(tbl)]
                if product not in closed:
                    closed.add(product)
                    fresh.append(product)
        frontier = fresh
    return frozenset(closed)
