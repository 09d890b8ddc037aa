import itertools

import pytest

from strayt import (EnumerationLimitExceeded, NotInSemigroup, Presentation,
                    Transformation, compose, enumerate_semigroup, evaluate,
                    identity)


def oracle_prefix_maps(p, word):
    """Prefix realizations computed directly, identity first."""
    maps = [identity(p.n)]
    for letter in word:
        maps.append(compose(maps[-1], p.generators[letter][1]))
    return maps


def oracle_is_straight(p, word):
    maps = oracle_prefix_maps(p, word)
    e = identity(p.n)
    last = len(maps) - 1
    for i in range(last + 1):
        for j in range(i + 1, last + 1):
            if maps[i] == maps[j] and not (i == 0 and j == last and maps[j] == e):
                return False
    return True


class TestEnumerate:
    def test_monogenic_order(self, ex1):
        assert ex1.order == 3
        assert ex1.size == 4
        assert not ex1.contains_identity

    def test_abc_order(self, ex4):
        assert ex4.order == 21
        assert not ex4.contains_identity

    def test_cycle_order_includes_identity(self, ex2):
        assert ex2.order == 3
        assert ex2.size == 3
        assert ex2.contains_identity

    def test_constants_order(self, ex3):
        assert ex3.order == 2
        assert not ex3.contains_identity

    def test_monogenic_elements(self, ex1):
        images = {ex1.element(i).images for i in range(1, ex1.size)}
        assert images == {(2, 4, 1, 2), (4, 2, 2, 4), (2, 4, 4, 2)}

    def test_deterministic(self):
        p = Presentation(3, [
            ("a", Transformation((2, 2, 3))),
            ("b", Transformation((1, 3, 3))),
            ("c", Transformation((1, 2, 1))),
        ])
        g1 = enumerate_semigroup(p)
        g2 = enumerate_semigroup(p)
        assert g1._elements == g2._elements
        assert g1._edges == g2._edges
        assert all(g1.first_word(i) == g2.first_word(i) for i in range(1, g1.size))

    def test_max_elements_cap(self, ex4):
        with pytest.raises(EnumerationLimitExceeded):
            enumerate_semigroup(ex4.presentation, max_elements=5)
        assert enumerate_semigroup(ex4.presentation, max_elements=21).order == 21

    def test_too_many_states_rejected(self):
        with pytest.raises(ValueError):
            enumerate_semigroup(Presentation(256, [("e", identity(256))]))


class TestElementIndex:
    def test_identity_is_node_zero(self, ex1):
        assert ex1.element_index(identity(4)) == 0

    def test_square_of_generator(self, ex1):
        node = ex1.element_index(Transformation((4, 2, 2, 4)))
        assert ex1.first_word(node) == (0, 0)

    def test_not_in_semigroup(self, ex1):
        with pytest.raises(NotInSemigroup):
            ex1.element_index(Transformation((1, 1, 1, 1)))

    def test_wrong_state_count(self, ex1):
        with pytest.raises(NotInSemigroup):
            ex1.element_index(identity(3))


class TestTrajectory:
    def test_power_trajectory_repeats(self, ex1):
        t2 = ex1.element_index(Transformation((4, 2, 2, 4)))
        nodes = ex1.trajectory((0, 0, 0, 0))
        assert len(nodes) == 5
        assert nodes[0] == 0
        assert nodes[4] == nodes[2] == t2

    def test_cycle_returns_to_identity(self, ex2):
        assert ex2.trajectory((0, 0, 0)) == (0, 1, 2, 0)

    def test_single_letter(self, ex4):
        nodes = ex4.trajectory((2,))
        assert nodes == (0, ex4.walk((2,)))

    def test_bad_letter(self, ex4):
        with pytest.raises(ValueError):
            ex4.trajectory((0, 9))
        with pytest.raises(ValueError):
            ex4.trajectory(())


class TestIsStraight:
    def test_full_cycle_loop_is_straight(self, ex2):
        assert ex2.is_straight((0, 0, 0))

    def test_fourth_power_is_not(self, ex1):
        assert not ex1.is_straight((0, 0, 0, 0))

    def test_powers_up_to_cube_are(self, ex1):
        for k in (1, 2, 3):
            assert ex1.is_straight((0,) * k)

    def test_loop_with_interior_identity_is_not(self, ex2):
        assert not ex2.is_straight((0,) * 6)

    def test_agrees_with_direct_oracle(self, ex4):
        p = ex4.presentation
        for k in range(1, 6):
            for word in itertools.product(range(3), repeat=k):
                assert ex4.is_straight(word) == oracle_is_straight(p, word)


class TestFirstWords:
    def test_first_words_realize_their_node(self, ex4):
        p = ex4.presentation
        for node in range(1, ex4.size):
            w = ex4.first_word(node)
            assert ex4.walk(w) == node
            assert evaluate(p, w) == ex4.element(node)

    def test_first_words_are_straight(self, ex1, ex4):
        for g in (ex1, ex4):
            for node in range(1, g.size):
                assert g.is_straight(g.first_word(node))

    def test_first_words_within_length_bound(self, ex1, ex2, ex3, ex4):
        for g in (ex1, ex2, ex3, ex4):
            for node in range(1, g.size):
                assert len(g.first_word(node)) <= g.order

    def test_minimal_length_words_are_straight(self, ex4):
        # every shortest word for an element is straight, and the first
        # word is the lexicographically least shortest one (checked
        # exhaustively to length 6)
        p = ex4.presentation
        shortest = {}
        for k in range(1, 7):
            for word in itertools.product(range(3), repeat=k):
                node = ex4.walk(word)
                if node not in shortest:
                    shortest[node] = word
                if len(shortest[node]) == k:
                    assert ex4.is_straight(word)
        for node, word in shortest.items():
            assert ex4.first_word(node) == word

    def test_node_zero_has_no_first_word(self, ex2):
        with pytest.raises(ValueError):
            ex2.first_word(0)


class TestSynonymTrajectories:
    def test_equal_generators_share_trajectories(self):
        t = Transformation((2, 4, 1, 2))
        p = Presentation(4, [("s", t), ("t", t)])
        g = enumerate_semigroup(p)
        assert g.trajectory((0, 1)) == g.trajectory((1, 0))
        assert g.trajectory((0,)) == g.trajectory((1,))

    def test_distinct_words_same_element_different_trajectories(self):
        t = Transformation((2, 4, 1, 2))
        r = compose(t, t)
        p = Presentation(4, [("t", t), ("r", r)])
        g = enumerate_semigroup(p)
        assert g.walk((1,)) == g.walk((0, 0))
        assert g.trajectory((1,)) != g.trajectory((0, 0))
