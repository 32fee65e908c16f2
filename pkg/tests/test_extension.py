import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rauzy import (
    EmptyGraph,
    ExtensionGraph,
    HorizonExceeded,
    NotAFactor,
    extension_graph,
    is_tree,
    rank_profile,
    scan_tree_condition,
)
from rauzy.verify import dfs_is_tree


def test_fibonacci_empty_word(fib):
    g = extension_graph(fib)
    assert g.left == ("a", "b") and g.right == ("a", "b")
    assert g.edges == (("a", "a"), ("a", "b"), ("b", "a"))
    assert is_tree(g) == (True, None)


def test_fibonacci_bispecial(fib):
    g = extension_graph(fib, "aba")
    assert set(g.edges) == {(a, b) for a, b in itertools.product("ab", repeat=2) if a + "aba" + b in fib}
    assert is_tree(g)[0]


def test_periodic_letter(periodic_ab):
    g = extension_graph(periodic_ab, "a")
    assert (g.left, g.right, g.edges) == (("b",), ("b",), (("b", "b"),))
    assert is_tree(g) == (True, None)


def test_thue_morse_has_cycle(thue_morse):
    g = extension_graph(thue_morse)
    assert len(g.edges) == 4
    assert is_tree(g) == (False, "has-cycle")


def test_paper_example_disconnected(paper_example):
    assert is_tree(extension_graph(paper_example)) == (False, "disconnected")


def test_reasons_and_empty():
    assert is_tree(ExtensionGraph("x", ("a", "b"), ("a", "b"), (("a", "a"), ("b", "b")))) == (
        False,
        "disconnected",
    )
    assert is_tree(ExtensionGraph("x", ("a",), ("b",), (("a", "b"),))) == (True, None)
    with pytest.raises(EmptyGraph):
        is_tree(ExtensionGraph("x", (), (), ()))


def test_extension_graph_errors(fib):
    with pytest.raises(NotAFactor):
        extension_graph(fib, "bb")
    with pytest.raises(HorizonExceeded):
        extension_graph(fib, "a" * 39)


bipartite = st.tuples(st.integers(1, 3), st.integers(1, 3)).flatmap(
    lambda lr: st.tuples(
        st.just(lr),
        st.sets(st.tuples(st.sampled_from("abc"[: lr[0]]), st.sampled_from("abc"[: lr[1]]))),
    )
)


@given(bipartite)
def test_is_tree_matches_dfs(data):
    (nl, nr), edges = data
    g = ExtensionGraph("w", tuple("abc"[:nl]), tuple("abc"[:nr]), tuple(sorted(edges)))
    ok, reason = is_tree(g)
    assert ok == dfs_is_tree(g)
    if ok:
        assert len(edges) == g.num_vertices - 1
    else:
        assert reason in ("disconnected", "has-cycle")


@pytest.mark.parametrize("name", ["fib", "trib", "thue_morse", "paper_example", "periodic_ab"])
def test_library_agrees_with_dfs_on_languages(request, name):
    lang = request.getfixturevalue(name)
    for k in range(0, 7):
        for w in [""] if k == 0 else lang.factors(k):
            g = extension_graph(lang, w)
            assert is_tree(g)[0] == dfs_is_tree(g)


def test_scans(fib, trib, thue_morse, paper_example, periodic_ab):
    for lang in (fib, trib):
        report = scan_tree_condition(lang, 10)
        assert report.passed and report.verdict == "pass-up-to-horizon"
        assert [s["length"] for s in report.stats] == list(range(11))
    tm = scan_tree_condition(thue_morse, 10)
    assert (tm.verdict, tm.witness, tm.reason) == ("fail", "", "has-cycle")
    pe = scan_tree_condition(paper_example, 4)
    assert (pe.verdict, pe.witness, pe.reason) == ("fail", "", "disconnected")
    # a periodic word has two disjoint edges at the empty word
    per = scan_tree_condition(periodic_ab, 10)
    assert (per.verdict, per.witness, per.reason) == ("fail", "", "disconnected")
    assert all(s["failed"] == 0 for s in per.stats[1:])
    with pytest.raises(HorizonExceeded):
        scan_tree_condition(fib, 39)


def test_witness_is_shortest_then_lexicographic(thue_morse):
    report = scan_tree_condition(thue_morse, 6)
    failures = [
        w
        for k in range(1, 7)
        for w in thue_morse.factors(k)
        if not dfs_is_tree(extension_graph(thue_morse, w))
    ]
    assert report.witness == ""
    assert report.stats[1]["failed"] == sum(1 for w in failures if len(w) == 1)


@pytest.mark.parametrize("name", ["fib", "trib"])
def test_tree_condition_gives_constant_rank(request, name):
    lang = request.getfixturevalue(name)
    assert scan_tree_condition(lang, 10).passed
    assert all(r == len(lang.letters) for _, r in rank_profile(lang, range(1, 8)))


def test_serialisation(fib):
    g = extension_graph(fib, "a")
    assert g.as_dict()["word"] == "a"
    dot = g.to_dot(comment="c")
    assert dot.startswith("// c\ngraph extension {")
    assert '"L:b" -- "R:a";' in dot
    assert scan_tree_condition(fib, 2).as_dict()["verdict"] == "pass-up-to-horizon"
