import io
import random

import numpy as np
import pytest

from rauzy import (
    BaseMismatch,
    Disconnected,
    FreeWord,
    GraphPath,
    NotALoop,
    OrderMismatch,
    RauzyGraph,
    UnknownEdge,
    abelianization_matrix,
    build_rauzy,
    class_of_edge,
    complexity,
    connecting_map,
    expand_loop,
    expand_path,
    iter_paths,
    lift_word_to_path,
    project_path,
    rank_profile,
    spanning_tree,
)
from rauzy.fundamental import write_matrix_csv
from rauzy.verify import random_loop


def levels(lang, ks):
    return {k: spanning_tree(build_rauzy(lang, 2 * k), lang.default_window(k).word) for k in ks}


def test_fibonacci_spanning_tree(fib):
    stb = spanning_tree(build_rauzy(fib, 2), "ab")
    assert stb.tree == {"aba", "baa"}
    assert stb.generators == ("aab", "bab")
    assert stb.rank == 2


def test_periodic_spanning_tree(periodic_ab):
    stb = spanning_tree(build_rauzy(periodic_ab, 1), "a")
    assert stb.tree == {"ab"}
    assert stb.generators == ("ba",)


def test_rose_has_empty_tree():
    g = RauzyGraph(0, [""], ["a", "b"])
    stb = spanning_tree(g, "")
    assert stb.tree == frozenset()
    assert stb.generators == ("a", "b")


def test_in_edges_used_when_out_edges_do_not_reach():
    g = RauzyGraph(1, ["a", "b"], ["ab", "bb"])
    stb = spanning_tree(g, "b")
    assert stb.tree == {"ab"}
    assert stb.delta("a") == (("ab", -1),)


def test_disconnected():
    with pytest.raises(Disconnected):
        spanning_tree(RauzyGraph(1, ["a", "b"], ["aa", "bb"]), "a")


@pytest.mark.parametrize("name", ["fib", "trib", "thue_morse", "paper_example", "periodic_ab"])
def test_tree_invariants(request, name):
    lang = request.getfixturevalue(name)
    for n in range(1, 6):
        g = build_rauzy(lang, 2 * n)
        for base in g.vertices[:3]:
            stb = spanning_tree(g, base)
            assert len(stb.tree) == len(g.vertices) - 1
            assert stb.rank == complexity(lang, 2 * n + 1) - complexity(lang, 2 * n) + 1
            for v in g.vertices:
                delta, gamma = stb.delta(v), stb.gamma(v)
                assert not expand_path(stb, delta) and not expand_path(stb, gamma)
                walk = base
                for e, sign in delta:
                    assert walk == (e[:-1] if sign == 1 else e[1:])
                    walk = e[1:] if sign == 1 else e[:-1]
                assert walk == v
            for s in stb.generators:
                assert expand_path(stb, stb.defining_loop(s)) == FreeWord(((s, 1),))


def test_class_of_edge(fib):
    stb = spanning_tree(build_rauzy(fib, 2), "ab")
    assert class_of_edge(stb, "aba") == FreeWord()
    assert class_of_edge(stb, "bab") == FreeWord((("bab", 1),))
    with pytest.raises(UnknownEdge):
        class_of_edge(stb, "bbb")


def test_expand_loop_example(fib):
    g = build_rauzy(fib, 2)
    stb = spanning_tree(g, "ab")
    loop = lift_word_to_path(g, "ab", "ab")
    assert loop.edges == ("aba", "bab")
    assert expand_loop(stb, loop) == FreeWord((("bab", 1),))
    with pytest.raises(NotALoop):
        expand_loop(stb, lift_word_to_path(g, "ab", "a"))


def test_expand_loop_multiplicative(trib):
    g = build_rauzy(trib, 4)
    base = trib.default_window(2).word
    stb = spanning_tree(g, base)
    rng = random.Random(3)
    for _ in range(50):
        a, b = random_loop(g, base, rng), random_loop(g, base, rng)
        assert expand_loop(stb, a + b) == expand_loop(stb, a) * expand_loop(stb, b)


def test_connecting_map_fibonacci(fib):
    lv = levels(fib, (1, 2))
    q = connecting_map(lv[2], lv[1])
    assert q.as_table() == {"aabaa": "aab aba", "babaa": "aab aba aba"}
    m = abelianization_matrix(q)
    assert m.tolist() == [[1, 1], [1, 2]]
    assert round(abs(np.linalg.det(m))) == 1


def test_connecting_map_same_level_is_identity(trib):
    lv = levels(trib, (2,))
    q = connecting_map(lv[2], lv[2])
    assert all(q.images[s] == FreeWord(((s, 1),)) for s in lv[2].generators)


@pytest.mark.parametrize("name", ["fib", "trib", "thue_morse"])
def test_connecting_maps_compose(request, name):
    lang = request.getfixturevalue(name)
    lv = levels(lang, (1, 2, 4))
    direct = connecting_map(lv[4], lv[1])
    composite = connecting_map(lv[2], lv[1]).compose(connecting_map(lv[4], lv[2]))
    assert composite.images == direct.images


@pytest.mark.parametrize("name", ["fib", "trib", "paper_example"])
def test_diagram_on_loops(request, name):
    # exponent sums of projected loops agree with the abelianized map
    lang = request.getfixturevalue(name)
    lv = levels(lang, (1, 3))
    q = connecting_map(lv[3], lv[1])
    m = abelianization_matrix(q)
    sm, sn = lv[3], lv[1]
    loops = [p for k in range(1, 10) for p in iter_paths(sm.graph, k, sm.base) if p.is_cycle]
    for loop in loops:
        image = expand_loop(sn, project_path(sm.graph, 2, loop))
        assert image == q(expand_loop(sm, loop))
        src = np.array([expand_loop(sm, loop).exponent_sum(s) for s in sm.generators])
        dst = np.array([image.exponent_sum(t) for t in sn.generators])
        assert (m @ src == dst).all()


def test_connecting_map_errors(fib):
    g4, g2 = build_rauzy(fib, 4), build_rauzy(fib, 2)
    s4 = spanning_tree(g4, "abaa")
    with pytest.raises(BaseMismatch):
        connecting_map(s4, spanning_tree(g2, "ab"))
    with pytest.raises(OrderMismatch):
        connecting_map(spanning_tree(g2, "ba"), s4)
    with pytest.raises(OrderMismatch):
        connecting_map(spanning_tree(build_rauzy(fib, 3), "aba"), spanning_tree(g2, "ba"))


def test_rank_profiles(fib, trib, periodic_ab):
    assert [r for _, r in rank_profile(fib, range(1, 5))] == [2, 2, 2, 2]
    assert [r for _, r in rank_profile(trib, range(1, 4))] == [3, 3, 3]
    assert [r for _, r in rank_profile(periodic_ab, range(1, 4))] == [1, 1, 1]


def test_matrix_csv(fib):
    lv = levels(fib, (1, 2))
    q = connecting_map(lv[2], lv[1])
    buf = io.StringIO()
    write_matrix_csv(abelianization_matrix(q), q.target_generators, q.source_generators, buf, ["x"])
    assert buf.getvalue().splitlines() == ["# x", ",aabaa,babaa", "aab,1,1", "aba,1,2"]


def test_graph_path_concatenation(fib):
    g = build_rauzy(fib, 2)
    a = lift_word_to_path(g, "ab", "a")
    b = lift_word_to_path(g, "ba", "b")
    assert (a + b).edges == ("aba", "bab")
    with pytest.raises(ValueError):
        b + b
    assert GraphPath("ab", ()).is_cycle
