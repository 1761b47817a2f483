import pytest

from turaevgenus.adgraph import (
    AdGraph,
    RandomChoice,
    nullity,
    parse_graph_file,
    planar_rotations,
    simplify,
    to_ribbon,
    turaev_genus_graph,
    validate_adg,
    write_graph_file,
)
from turaevgenus.errors import (
    HasLoopError,
    MalformedLineError,
    NotBipartiteError,
    NotPlanarError,
    NotValidatedError,
    OddDegreeError,
)
from turaevgenus.families import doubled_cycle, k4_doubled_paths, k4_two_sum
from turaevgenus.ribbon import ribbon_genus, twist_all


def hub_and_chains_graph() -> AdGraph:
    """Two degree-4 hubs and four chains of two doubled pairs, bridged
    by single edges: 14 vertices, 28 edges, Turaev genus five."""
    chains = [(2, 3, 4), (5, 6, 7), (8, 9, 10), (11, 12, 13)]
    singles = [
        (0, 2), (2, 5), (5, 1), (1, 7), (7, 4), (4, 0),
        (0, 8), (8, 11), (11, 1), (1, 13), (13, 10), (10, 0),
    ]
    doubles = []
    for o, m, i in chains:
        doubles += [(o, m), (o, m), (m, i), (m, i)]
    edges = tuple(sorted(tuple(sorted(e)) for e in singles + doubles))
    return AdGraph(14, edges)


def test_loops_rejected():
    with pytest.raises(HasLoopError):
        AdGraph(2, ((0, 0),))


def test_validate_c22():
    v = validate_adg(doubled_cycle(2))
    assert v.bipartition is not None
    assert sorted(v.bipartition) == [0, 1]


def test_validate_odd_cycle():
    with pytest.raises(NotBipartiteError) as exc:
        validate_adg(doubled_cycle(3))
    assert len(exc.value.cycle) % 2 == 1


def test_validate_odd_degree():
    with pytest.raises(OddDegreeError):
        validate_adg(AdGraph(2, ((0, 1),)))


def test_validate_nonplanar():
    # K33 with every edge doubled: even degrees, bipartite, not planar
    edges = []
    for u in range(3):
        for v in range(3, 6):
            edges += [(u, v), (u, v)]
    with pytest.raises(NotPlanarError):
        validate_adg(AdGraph(6, tuple(edges)))


def test_genus_isolated_vertices():
    v = validate_adg(AdGraph(5, ()))
    assert turaev_genus_graph(v) == 0


def test_genus_needs_validation():
    with pytest.raises(NotValidatedError):
        turaev_genus_graph(doubled_cycle(2))


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5, 6, 7, 8])
def test_doubled_even_cycles_genus_one(k):
    assert turaev_genus_graph(validate_adg(doubled_cycle(2 * k))) == 1


def test_five_genus_two_values():
    reps = [
        doubled_cycle(2).disjoint_union(doubled_cycle(2)),
        k4_doubled_paths(2, 2),
        k4_two_sum(2, 2),
    ]
    for rep in reps:
        assert turaev_genus_graph(validate_adg(AdGraph(rep.n, rep.edges))) == 2


def test_figure_genus_five():
    g = hub_and_chains_graph()
    assert (g.n, g.edge_count) == (14, 28)
    assert turaev_genus_graph(validate_adg(g)) == 5


def test_randomized_choices_agree():
    g = validate_adg(hub_and_chains_graph())
    for seed in range(8):
        assert turaev_genus_graph(g, RandomChoice(seed)) == 5


def test_simplify_and_nullity():
    c22 = doubled_cycle(2)
    s = simplify(c22)
    assert (s.n, s.edge_count) == (2, 1)
    assert nullity(s) == 0

    k4 = k4_doubled_paths(2, 2)
    s = simplify(k4)
    assert (s.n, s.edge_count) == (6, 8)
    assert nullity(s) == 3
    assert 3 * 2 >= nullity(s)

    fig = simplify(hub_and_chains_graph())
    assert (fig.n, fig.edge_count) == (14, 20)
    assert nullity(fig) == 7
    assert nullity(AdGraph(3, ())) == 0


def test_graph_file_round_trip():
    g = k4_doubled_paths(2, 2)
    text = write_graph_file(g)
    back = parse_graph_file(text)
    assert back.edges == g.edges
    assert back.rotations == g.rotations


def test_graph_file_errors():
    with pytest.raises(HasLoopError):
        parse_graph_file("v 2\ne 1 1\n")
    with pytest.raises(MalformedLineError):
        parse_graph_file("e 1 2\n")
    with pytest.raises(MalformedLineError):
        parse_graph_file("v 2\ne 1 5\n")
    with pytest.raises(MalformedLineError):
        parse_graph_file("v 2\nfoo\n")


def test_planar_rotations_pass_euler():
    for g in (doubled_cycle(2), k4_doubled_paths(2, 2), hub_and_chains_graph()):
        rotations = planar_rotations(g)
        assert len(rotations) == g.n


def test_twisted_oracle_matches_recursion():
    for g in (doubled_cycle(2), doubled_cycle(4), k4_doubled_paths(2, 2),
              k4_two_sum(2, 2), hub_and_chains_graph()):
        embedded = AdGraph(g.n, g.edges, rotations=planar_rotations(g))
        validated = validate_adg(AdGraph(g.n, g.edges))
        assert ribbon_genus(twist_all(to_ribbon(embedded))) == \
            turaev_genus_graph(validated)
