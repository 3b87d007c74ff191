"""Configurations, permutations, and the index/configuration dictionary."""

import itertools
import math

import pytest

from schurbox.combinatorics import (
    Configuration,
    ConfigurationError,
    Params,
    Permutation,
    TooLargeError,
    act_on_configuration,
    act_on_index,
    all_permutations,
    compositions,
    enumerate_configurations,
    enumerate_multi_indices,
    to_configuration,
    to_multi_index,
)


def test_params_validation():
    Params(1, 1)
    Params(3, 7)
    with pytest.raises(ValueError):
        Params(0, 2)
    with pytest.raises(ValueError):
        Params(2, 0)
    with pytest.raises(ValueError):
        Params(2, -1)
    with pytest.raises(ValueError):
        Params("2", 1)


def test_index_count():
    assert Params(2, 3).index_count == 8
    assert Params(3, 4).index_count == 81


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((2, 3))
    with pytest.raises(ValueError):
        Permutation((0, 1))


def test_permutation_call_and_inverse():
    w = Permutation((2, 3, 1))
    assert [w(s) for s in (1, 2, 3)] == [2, 3, 1]
    assert w.inverse().images == (3, 1, 2)
    e = Permutation.identity(3)
    for u in all_permutations(3):
        assert u * u.inverse() == e
        assert u.inverse() * u == e


def test_transposition():
    t = Permutation.transposition(4, 2, 4)
    assert t.images == (1, 4, 3, 2)
    assert t * t == Permutation.identity(4)


def test_composition_matches_action():
    # (w1 * w2) . index == w1 . (w2 . index), exhaustively at d=3
    indices = enumerate_multi_indices(Params(2, 3))
    for w1, w2 in itertools.product(all_permutations(3), repeat=2):
        for index in indices:
            assert act_on_index(w1 * w2, index) == act_on_index(w1, act_on_index(w2, index))


def test_action_is_a_right_inverse_scramble():
    # the action permutes positions: entry s of the result is entry w(s)
    w = Permutation((3, 1, 2))
    assert act_on_index(w, (10, 20, 30)) == (30, 10, 20)


def test_act_on_index_degree_mismatch():
    with pytest.raises(ValueError):
        act_on_index(Permutation((2, 1)), (1, 1, 1))


def test_all_permutations_count():
    assert len(list(all_permutations(4))) == math.factorial(4)


def test_enumerate_multi_indices_lex():
    indices = enumerate_multi_indices(Params(2, 2))
    assert indices == [(1, 1), (1, 2), (2, 1), (2, 2)]
    indices = enumerate_multi_indices(Params(3, 2))
    assert indices == sorted(indices)
    assert len(indices) == 9


def test_enumeration_cap():
    with pytest.raises(TooLargeError):
        enumerate_multi_indices(Params(10, 10), cap=100)
    with pytest.raises(TooLargeError):
        enumerate_configurations(Params(2, 30))


def test_configuration_validation_messages():
    with pytest.raises(ConfigurationError, match="more than once"):
        Configuration(((1, 2), (2,)))
    with pytest.raises(ConfigurationError, match="increasing order"):
        Configuration(((2, 1), ()))
    with pytest.raises(ConfigurationError, match="missing"):
        Configuration(((1, 3), ()))
    with pytest.raises(ConfigurationError, match="positive integers"):
        Configuration(((0, 1), ()))
    with pytest.raises(ConfigurationError, match="positive integers"):
        Configuration((("1",),))
    with pytest.raises(ConfigurationError):
        Configuration(())


def test_empty_boxes_are_fine():
    c = Configuration(((), (1, 2), ()))
    assert c.n == 3
    assert c.d == 2
    assert c.content() == (0, 2, 0)


def test_word_format():
    assert Configuration(((1, 2, 3), (4,))).word() == "|123|4|"
    assert Configuration(((), (1,))).word() == "||1|"
    assert str(Configuration(((1,), (), (2,)))) == "|1||2|"


def test_word_uses_commas_past_nine_balls():
    boxes = (tuple(range(1, 11)), ())
    c = Configuration(boxes)
    assert c.word() == "|1,2,3,4,5,6,7,8,9,10||"
    assert Configuration.from_word(c.word()) == c


def test_from_word_roundtrip_exhaustive():
    for p in (Params(2, 3), Params(3, 2)):
        for c in enumerate_configurations(p):
            word = c.word()
            assert word.count("|") == p.n + 1
            assert Configuration.from_word(word) == c
            assert Configuration.from_word(word, n=p.n, d=p.d) == c


def test_from_word_diagnostics():
    with pytest.raises(ConfigurationError, match="begin and end"):
        Configuration.from_word("12|3|")
    with pytest.raises(ConfigurationError, match="begin and end"):
        Configuration.from_word("|12|3")
    with pytest.raises(ConfigurationError, match="separators"):
        Configuration.from_word("|12|3|", n=3)
    with pytest.raises(ConfigurationError, match="invalid ball label"):
        Configuration.from_word("|1x|2|")
    with pytest.raises(ConfigurationError, match="invalid ball label"):
        Configuration.from_word("|1,x|2|")
    with pytest.raises(ConfigurationError, match="expected 3 balls"):
        Configuration.from_word("|12|", d=3)
    with pytest.raises(ConfigurationError):
        Configuration.from_word("")


def test_from_boxes_sorts():
    assert Configuration.from_boxes([[3, 1], [2]]) == Configuration(((1, 3), (2,)))


def test_index_configuration_roundtrip():
    for p in (Params(2, 3), Params(3, 2)):
        for index in enumerate_multi_indices(p):
            c = to_configuration(index, p.n)
            assert to_multi_index(c) == index
        for c in enumerate_configurations(p):
            assert to_configuration(to_multi_index(c), p.n) == c


def test_to_configuration_rejects_bad_entries():
    with pytest.raises(ValueError):
        to_configuration((1, 3), 2)
    with pytest.raises(ValueError):
        to_configuration((0, 1), 2)


def test_configuration_action_example():
    # swapping balls 3 and 4 turns |123|4| into |124|3|
    w = Permutation.transposition(4, 3, 4)
    c = Configuration.from_word("|123|4|")
    assert act_on_configuration(w, c).word() == "|124|3|"


def test_configuration_action_intertwines():
    p = Params(2, 3)
    for w in all_permutations(p.d):
        for index in enumerate_multi_indices(p):
            lhs = to_configuration(act_on_index(w, index), p.n)
            rhs = act_on_configuration(w, to_configuration(index, p.n))
            assert lhs == rhs


def test_content_is_orbit_invariant():
    p = Params(3, 3)
    for c in enumerate_configurations(p):
        for w in all_permutations(p.d):
            assert act_on_configuration(w, c).content() == c.content()


def test_compositions():
    rows = list(compositions(2, 2))
    assert rows == [(0, 2), (1, 1), (2, 0)]
    rows = list(compositions(4, 3))
    assert rows == sorted(rows)
    assert all(sum(row) == 4 for row in rows)
    assert len(rows) == math.comb(4 + 3 - 1, 3 - 1)
    assert list(compositions(3, 1)) == [(3,)]
    with pytest.raises(ValueError):
        list(compositions(2, 0))
