#
# Project subcount - Copyright 2026 The subcount Authors.
# SPDX-License-Identifier: Apache-2.0
#

import random

import pytest

import subcount


def test_graph_basics():
    g = subcount.Graph(3, [(0, 1), (1, 2)])
    assert g.num_nodes == 3
    assert g.num_edges == 2
    assert g.neighbors(1) == [0, 2]
    assert subcount.parse_edgelist(g.to_edgelist()) == g
    with pytest.raises(subcount.ValidationError):
        subcount.Graph(2, [(0, 0)])


def test_count_matches_oracle():
    g = subcount.gen_random(14, 0.35, 3)
    for kind in ["path3", "cycle5", "cycle6", "chordal_cycle"]:
        got = subcount.count(g, kind)
        want = subcount.oracle(g, kind)
        assert got["node"] == want["node"]
        assert got["graph"] == want["graph"]


def test_cycle6_patterns_and_hops():
    r = subcount.count(subcount.gen_cycle(6), "cycle6")
    assert r["node"] == [1] * 6
    assert r["hops"] == 3
    assert r["patterns"]["p0"] == [2] * 6
    assert r["patterns"]["p4"] == [0] * 6
    with pytest.raises(subcount.PreconditionError):
        subcount.count(subcount.gen_cycle(6), "cycle6", hops=2)
    with pytest.raises(subcount.ParseError):
        subcount.count(subcount.gen_cycle(6), "cycle9")


def test_coned_apex_five_cycles():
    joined, split = subcount.gen_coned_cycles(3)
    assert subcount.count(joined, "cycle5")["node"][0] == 6
    assert subcount.count(split, "cycle5")["node"][0] == 0


def test_walks():
    assert subcount.count_walks(subcount.gen_complete(3), 3, 0, 0) == 2
    assert subcount.count(subcount.gen_cycle(4), "walk5")["node"] == [0] * 4


def test_refinement():
    rook, shrik = subcount.gen_rook4x4(), subcount.gen_shrikhande()
    assert subcount.distinguish(rook, shrik, "wl1") == "not_distinguished"
    assert subcount.distinguish(rook, shrik, "subgraph_wl") == "not_distinguished"
    assert subcount.distinguish(rook, shrik, "i2_wl") == "distinguished"
    assert subcount.distinguish(rook, shrik, "i2_wl", exact_compare=True) == "distinguished"


def test_permutation_invariance():
    g = subcount.gen_random(12, 0.4, 9)
    perm = list(range(g.num_nodes))
    random.Random(1).shuffle(perm)
    h = g.permuted(perm)
    for method in ["wl1", "subgraph_wl", "i2_wl"]:
        assert subcount.digest(g, method) == subcount.digest(h, method)
    a = subcount.count(g, "cycle4")["node"]
    b = subcount.count(h, "cycle4")["node"]
    assert [b[perm[v]] for v in range(len(a))] == a
