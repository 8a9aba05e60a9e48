import pytest

import oracles
from nfree import (
    Hypergraph,
    anticlique_algebra,
    cmpn_upper_bound,
    complete_graph,
    disjoint_union_family,
    edgeless,
    is_n_ary,
    is_n_linked,
    limits,
    subbase,
)
from nfree.errors import TooLargeForExhaustive

K3 = complete_graph(3)
P3 = Hypergraph((0, 1, 2), [(0, 1), (1, 2)])
TRI = Hypergraph((0, 1, 2), [(0, 1, 2)])


def point(family, members):
    return 1 << family.ground.index(tuple(members))


def as_sets(family):
    return [frozenset(i for i in range(len(family.ground)) if m >> i & 1) for m in family.sets]


# ---------------------------------------------------------------- subbase


def test_subbase_of_k3():
    s = subbase(K3)
    assert len(s) == 6 and len(s.ground) == 4
    assert s.get((0, "+")) == point(s, (0,))
    assert s.get((0, "-")) == s.top & ~point(s, (0,))


def test_subbase_of_single_vertex():
    s = subbase(edgeless(1))
    assert s.members((0, "+")) == ((0,),)
    assert s.members((0, "-")) == ((),)


def test_subbase_of_path():
    s = subbase(P3)
    assert set(s.members((0, "-"))) == {(), (1,), (2,)}


def test_plus_and_minus_partition_the_ground():
    s = subbase(P3)
    for v in P3.vertices:
        plus, minus = s.get((v, "+")), s.get((v, "-"))
        assert plus & minus == 0 and plus | minus == s.top


def test_subbase_regenerates_anticlique_algebra():
    for g in (K3, P3, TRI, edgeless(2)):
        s = subbase(g)
        B = anticlique_algebra(g)
        plus = [s.get((v, "+")) for v in g.vertices]
        assert plus == [x.mask for x in B.generators]


# ---------------------------------------------------------------- linked and ary


def test_minus_sets_of_k3_are_two_linked():
    s = subbase(K3)
    minus = [s.get((v, "-")) for v in K3.vertices]
    assert is_n_linked(minus, 2, s.top).holds


def test_complementary_pair_is_not_two_linked():
    s = subbase(K3)
    verdict = is_n_linked([s.get((0, "+")), s.get((0, "-"))], 2, s.top)
    assert not verdict.holds
    assert verdict.witness == (0, 1)


def test_single_nonempty_set_is_one_linked():
    assert is_n_linked([0b101], 1).holds


def test_k3_subbase_is_binary():
    assert is_n_ary(subbase(K3), 2).holds


def test_three_edge_subbase_arity():
    s = subbase(TRI)
    verdict = is_n_ary(s, 2)
    assert not verdict.holds
    assert verdict.witness == ((0, "+"), (1, "+"), (2, "+"))
    assert is_n_ary(s, 3).holds


def test_empty_family_is_n_ary():
    assert is_n_ary([], 2).holds


def test_family_cap():
    with limits(max_family=4):
        with pytest.raises(TooLargeForExhaustive):
            is_n_ary(subbase(K3), 2)


def test_linked_and_ary_match_oracle():
    for g in (K3, P3, TRI, edgeless(2), Hypergraph((0, 1, 2), [(0, 1), (0, 1, 2)])):
        s = subbase(g)
        family = as_sets(s)
        ground = range(len(s.ground))
        for n in (1, 2, 3):
            assert is_n_ary(s, n).holds == oracles.n_ary(family, ground, n)
            assert is_n_linked(s, n).holds == oracles.n_linked(family, ground, n)


def test_bad_degree():
    with pytest.raises(ValueError):
        is_n_ary([1], 0)
    with pytest.raises(ValueError):
        is_n_linked([1], 0)


# ---------------------------------------------------------------- compactness bound


@pytest.mark.parametrize("g,n,edge", [(K3, 2, 2), (TRI, 3, 3), (edgeless(3), 2, 0)])
def test_cmpn_examples(g, n, edge):
    bound = cmpn_upper_bound(g)
    assert bound.n == n
    assert bound.max_edge_size == edge


def test_single_point_space_is_not_one_ary():
    assert not cmpn_upper_bound(edgeless(1)).one_ary


def test_empty_graph_is_one_ary():
    bound = cmpn_upper_bound(edgeless(0))
    assert bound.one_ary and bound.n == 2


# ---------------------------------------------------------------- unions


def test_disjoint_union_family_layout():
    p, q = subbase(K3), subbase(TRI)
    u = disjoint_union_family(p, q)
    assert len(u.ground) == 4 + 7
    assert len(u) == 6 + 6 + 2
    assert u.get(("ground", 0)) == p.top
    assert u.get(("ground", 1)) == q.top << 4
    assert u.get((1, (0, "+"))) == q.get((0, "+")) << 4


def test_disjoint_union_keeps_arity():
    graphs = [
        Hypergraph((0, 1, 2), [tuple(sorted(e)) for e in edges])
        for edges in oracles.all_hypergraph_edge_sets(3)
    ]
    families = [subbase(g) for g in graphs]
    for n in (2, 3):
        ary = [f for f in families if is_n_ary(f, n).holds]
        for p in ary:
            for q in ary:
                assert is_n_ary(disjoint_union_family(p, q), n).holds


def test_disjoint_union_arity_matches_oracle():
    u = disjoint_union_family(subbase(P3), subbase(TRI))
    ground = range(len(u.ground))
    for n in (2, 3):
        assert is_n_ary(u, n).holds == oracles.n_ary(as_sets(u), ground, n)


def test_subbase_generates_the_open_lattice():
    """Finite unions of finite meets of subbase sets give every clopen set."""
    for g in (K3, P3, TRI, edgeless(2)):
        s = subbase(g)
        closed = {s.top, 0} | set(s.sets)
        grown = True
        while grown:
            new = {a & b for a in closed for b in closed} | {a | b for a in closed for b in closed}
            grown = not new <= closed
            closed |= new
        assert len(closed) == 2 ** len(s.ground)
