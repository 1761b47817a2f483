import random

import pytest

from turaevgenus.adgraph import AdGraph, turaev_genus_graph, validate_adg
from turaevgenus.errors import BadParametersError, InvalidSiteError
from turaevgenus.families import (
    Classification,
    FamilySpec,
    canonical_contract,
    classify_genus,
    doubled_cycle,
    doubled_path,
    doubled_path_contract,
    doubled_path_extend,
    doubled_pendant,
    doubled_theta,
    genus2_minimal_forms,
    is_reduced,
    isolated_vertices,
    isomorphic,
    k4_doubled_paths,
    k4_tilde_two_sum,
    k4_two_sum,
    make_family,
    one_sum_components,
    random_genus0,
    replay_script,
    two_path_extend,
    wl_hash,
)

C22 = doubled_cycle(2)


# --- constructors -----------------------------------------------------------

def test_doubled_path_zero_is_vertex():
    g = doubled_path(0)
    assert (g.n, g.edge_count) == (1, 0)


def test_doubled_cycle_two():
    assert (C22.n, C22.edge_count) == (2, 4)
    assert turaev_genus_graph(validate_adg(AdGraph(C22.n, C22.edges))) == 1


def test_k4_two_sum_shape():
    g = k4_two_sum(2, 2)
    assert (g.n, g.edge_count) == (8, 16)
    # independent edge list: two K4(2) pieces sharing the hub pair {0, 1}
    # with the hub edge deleted
    hand = []
    for base in (2, 5):  # corner pairs (2,3) and (5,6), midpoints 4 and 7
        c1, c2, mid = base, base + 1, base + 2
        hand += [(0, c1), (0, c2), (1, c1), (1, c2)]
        hand += [(c1, mid)] * 2 + [(c2, mid)] * 2
    expected = AdGraph(8, tuple(hand))
    assert isomorphic(AdGraph(g.n, g.edges), expected)[0]


def test_family_spec_dispatch():
    g = make_family(FamilySpec("DoubledCycle", (2,)))
    assert isomorphic(AdGraph(g.n, g.edges), AdGraph(C22.n, C22.edges))[0]
    union = make_family(FamilySpec("DisjointUnion", (
        FamilySpec("DoubledCycle", (2,)), FamilySpec("DoubledPath", (1,)))))
    assert union.n == 4 and union.edge_count == 6
    with pytest.raises(BadParametersError):
        make_family(FamilySpec("Nonsense", ()))


def test_bad_parameters():
    with pytest.raises(BadParametersError):
        doubled_cycle(1)
    with pytest.raises(BadParametersError):
        doubled_path(-1)
    with pytest.raises(BadParametersError):
        doubled_theta(0, 1, 1)
    with pytest.raises(BadParametersError):
        k4_doubled_paths(0, 1)


def test_constructors_carry_embeddings():
    for g in (C22, doubled_theta(1, 1, 1), k4_two_sum(2, 2),
              k4_tilde_two_sum(1, 0, 2, 1)):
        assert g.rotations is not None


# --- moves --------------------------------------------------------------------

def test_doubled_pendant_on_isolated_vertex():
    g = doubled_pendant(isolated_vertices(1), 0)
    assert (g.n, g.edge_count) == (2, 2)
    assert turaev_genus_graph(validate_adg(g)) == 0


def test_doubled_path_extend_preserves_genus_bipartite():
    # lengthening one pair of C2^2 by two steps lands on C4^2
    g = doubled_path_extend(AdGraph(C22.n, C22.edges), 0, 1)
    g = doubled_path_extend(g, 0, 2)
    c44 = doubled_cycle(4)
    assert isomorphic(g, AdGraph(c44.n, c44.edges))[0]
    assert turaev_genus_graph(validate_adg(g)) == 1


def test_two_path_extend_on_doubled_path_end():
    path = doubled_path(2)
    g = two_path_extend(AdGraph(path.n, path.edges), 0, (0,))
    info = classify_genus(g)
    assert info.genus == 0
    assert info.family == "four-cycle-legs"


def test_two_path_extend_requires_odd_sets():
    with pytest.raises(InvalidSiteError):
        two_path_extend(AdGraph(C22.n, C22.edges), 0, (0, 1))


def test_one_sum_requires_distinct_components():
    union = AdGraph(C22.n, C22.edges).disjoint_union(AdGraph(C22.n, C22.edges))
    merged = one_sum_components(union, 0, 2)
    assert merged.n == 3
    with pytest.raises(InvalidSiteError):
        one_sum_components(AdGraph(C22.n, C22.edges), 0, 1)
    with pytest.raises(InvalidSiteError):
        one_sum_components(merged, 0, 1)


def test_apply_move_dispatch():
    from turaevgenus.families import Move, apply_move, k4_one_path

    g = apply_move(isolated_vertices(1), Move("DoubledPendant", (0,)))
    assert (g.n, g.edge_count) == (2, 2)
    g = apply_move(g, Move("DoubledPathExtend", (0, 1)))
    assert (g.n, g.edge_count) == (3, 4)
    k4 = k4_one_path(1)
    summed = apply_move(
        AdGraph(k4.n, k4.edges),
        Move("TwoSum", (k4.edges.index((2, 3)), AdGraph(k4.n, k4.edges),
                        k4.edges.index((2, 3)))),
    )
    want = k4_two_sum(1, 1)
    assert isomorphic(summed, AdGraph(want.n, want.edges))[0]
    with pytest.raises(InvalidSiteError):
        apply_move(g, Move("Nonsense", ()))


def test_doubled_path_contract_requires_interior():
    with pytest.raises(InvalidSiteError):
        doubled_path_contract(AdGraph(C22.n, C22.edges), 0, 1)
    path = doubled_path(2)
    back = doubled_path_contract(AdGraph(path.n, path.edges), 1, 0)
    p1 = doubled_path(1)
    assert isomorphic(back, AdGraph(p1.n, p1.edges))[0]


# --- canonical contraction ------------------------------------------------------

def test_canonical_contract_c6():
    got = canonical_contract(doubled_cycle(6))
    assert isomorphic(got, AdGraph(C22.n, C22.edges))[0]


def test_canonical_contract_k4():
    got = canonical_contract(k4_doubled_paths(2, 2))
    want = k4_doubled_paths(1, 1)
    assert isomorphic(got, AdGraph(want.n, want.edges))[0]


def test_canonical_contract_fixed_point():
    one_sum = make_family(FamilySpec("OneSum", (
        (FamilySpec("DoubledCycle", (2,)), FamilySpec("DoubledCycle", (2,))),
        ((0, 0),))))
    got = canonical_contract(one_sum)
    assert isomorphic(got, AdGraph(one_sum.n, one_sum.edges))[0]


def test_canonical_contract_idempotent_and_order_free(rng):
    class Chooser:
        def pick(self, options):
            return options[rng.randrange(len(options))]

    for g in (doubled_cycle(8), k4_doubled_paths(3, 4), k4_two_sum(2, 4)):
        base = canonical_contract(g)
        assert isomorphic(base, canonical_contract(base))[0]
        for _ in range(4):
            assert isomorphic(base, canonical_contract(g, Chooser()))[0]


# --- reducedness ----------------------------------------------------------------

def test_is_reduced():
    assert is_reduced(isolated_vertices(1))
    assert is_reduced(AdGraph(C22.n, C22.edges))
    assert not is_reduced(doubled_path(2))
    assert not is_reduced(isolated_vertices(2))
    union = AdGraph(C22.n, C22.edges).disjoint_union(isolated_vertices(1))
    assert not is_reduced(union)
    both = AdGraph(C22.n, C22.edges).disjoint_union(AdGraph(C22.n, C22.edges))
    assert is_reduced(both)


# --- isomorphism ----------------------------------------------------------------

def test_isomorphic_basic():
    c4 = doubled_cycle(4)
    two = AdGraph(C22.n, C22.edges).disjoint_union(AdGraph(C22.n, C22.edges))
    ok, _ = isomorphic(AdGraph(c4.n, c4.edges), two)
    assert not ok  # same counts, different component structure
    ok, witness = isomorphic(AdGraph(c4.n, c4.edges), AdGraph(c4.n, c4.edges))
    assert ok and sorted(witness) == list(range(4))


def test_isomorphic_witness_is_a_real_map(rng):
    g = k4_doubled_paths(2, 3)
    perm = list(range(g.n))
    rng.shuffle(perm)
    relabeled = AdGraph(g.n, g.edges).relabeled(perm)
    ok, witness = isomorphic(AdGraph(g.n, g.edges), relabeled)
    assert ok
    mapped = AdGraph(g.n, g.edges).relabeled(witness)
    assert sorted(mapped.edges) == sorted(relabeled.edges)


def test_non_isomorphic_same_profile():
    k411 = k4_doubled_paths(1, 1)
    # another 4-vertex 8-edge multigraph: a doubled 4-cycle
    c42 = doubled_cycle(4)
    assert not isomorphic(AdGraph(k411.n, k411.edges),
                          AdGraph(c42.n, c42.edges))[0]


def test_wl_hash_bucket_keys():
    assert wl_hash(AdGraph(C22.n, C22.edges)) == wl_hash(
        AdGraph(2, ((0, 1),) * 4)
    )


# --- classification -------------------------------------------------------------

def test_classify_c10():
    info = classify_genus(doubled_cycle(10))
    assert info == Classification(1, True, "doubled-even-cycle", (10,))


def test_classify_theta():
    info = classify_genus(doubled_theta(1, 1, 1))
    assert info.genus == 2 and info.is_reduced
    assert info.family == "doubled-theta"
    assert info.parameters == (1, 1, 1)


def test_classify_two_doubled_paths():
    g = doubled_path(2).disjoint_union(doubled_path(1))
    info = classify_genus(AdGraph(g.n, g.edges))
    assert info.genus == 0
    assert info.family == "two-doubled-paths"
    assert info.parameters == (1, 2)


def test_classify_five_representatives():
    expected = {
        "doubled-cycles-disjoint",
        "doubled-cycles-one-sum",
        "doubled-theta",
        "k4-doubled-paths",
        "k4-two-sum",
    }
    got = set()
    for graph in (
        AdGraph(C22.n, C22.edges).disjoint_union(AdGraph(C22.n, C22.edges)),
        make_family(FamilySpec("OneSum", (
            (FamilySpec("DoubledCycle", (2,)), FamilySpec("DoubledCycle", (2,))),
            ((0, 0),)))),
        doubled_theta(1, 1, 1),
        k4_doubled_paths(2, 2),
        k4_two_sum(2, 2),
    ):
        info = classify_genus(AdGraph(graph.n, graph.edges))
        assert info.genus == 2 and info.is_reduced
        got.add(info.family)
    assert got == expected


def test_classify_parameter_recovery():
    info = classify_genus(doubled_theta(1, 3, 3))
    assert info.family == "doubled-theta" and info.parameters == (1, 3, 3)
    info = classify_genus(k4_doubled_paths(4, 2))
    assert info.family == "k4-doubled-paths" and info.parameters == (2, 4)
    big = make_family(FamilySpec("OneSum", (
        (FamilySpec("DoubledCycle", (4,)), FamilySpec("DoubledCycle", (2,))),
        ((0, 0),))))
    info = classify_genus(AdGraph(big.n, big.edges))
    assert info.family == "doubled-cycles-one-sum"
    assert info.parameters == (2, 4)


def test_minimal_forms_mutually_nonisomorphic():
    forms = genus2_minimal_forms()
    for i in range(len(forms)):
        for j in range(i + 1, len(forms)):
            assert not isomorphic(
                AdGraph(forms[i][1].n, forms[i][1].edges),
                AdGraph(forms[j][1].n, forms[j][1].edges),
            )[0]


def test_classify_disguised_theta():
    # a doubled 4-cycle with an extra doubled edge thickening one side is
    # a doubled theta in disguise
    g = AdGraph(4, tuple(
        list(doubled_cycle(4).edges) + [(0, 1), (0, 1)]
    ))
    info = classify_genus(g)
    assert info.genus == 2
    assert info.family == "doubled-theta"
    assert info.parameters == (1, 1, 3)
    direct = doubled_theta(1, 1, 3)
    assert isomorphic(g, AdGraph(direct.n, direct.edges))[0]


# --- genus-zero generator ----------------------------------------------------------

def test_random_genus0_zero_moves():
    g, script = random_genus0(0, seed=7)
    assert g.edge_count == 0
    assert turaev_genus_graph(validate_adg(g)) == 0
    assert replay_script(script).n == g.n


def test_random_genus0_scripts():
    for seed in range(25):
        g, script = random_genus0(30, seed)
        assert turaev_genus_graph(validate_adg(g)) == 0
        replayed = replay_script(script)
        assert isomorphic(replayed, g)[0]
