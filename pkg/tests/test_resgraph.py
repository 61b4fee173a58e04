import json
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import newton_pairs_lists
from oracles import eigen_multiplicities, graph_series, milnor
from yano.charseq import NewtonPairs
from yano.errors import InconsistentGraphError, InvalidArgument, ParseError
from yano.fracseries import FracSeries
from yano.resgraph import (
    GraphVertex,
    ResGraph,
    eigenvalue_multiplicities,
    extended_yano_series,
    from_newton_pairs,
    graph_from_dict,
    graph_to_dict,
    has_multiple_eigenvalue_excluding_one,
    load_graph,
    milnor_number,
    zeta_exponents,
)

CUSP = ResGraph(((2, 2, 1), (3, 3, 1), (6, 5, 3)))
VAL4 = ResGraph(((4, 2, 1), (6, 3, 1), (12, 5, 4)), 2)
FIG2 = ResGraph(((5, 3, 1), (10, 5, 3), (4, 2, 2), (10, 5, 3), (5, 3, 1)), 2)


def test_from_newton_pairs_cusp():
    g = from_newton_pairs(NewtonPairs(((2, 3),)))
    assert sorted(g.as_tuples()) == sorted([(2, 2, 1), (3, 3, 1), (6, 5, 3)])
    assert g.branches == 1


def test_from_newton_pairs_two_pairs():
    g = from_newton_pairs(NewtonPairs(((2, 3), (2, 1))))
    assert sorted(g.as_tuples()) == sorted([(4, 2, 1), (6, 3, 1), (13, 6, 1), (12, 5, 3), (26, 11, 3)])


@given(newton_pairs_lists())
def test_first_end_vertex(pairs):
    g = from_newton_pairs(NewtonPairs(pairs))
    n = 1
    for p, _ in pairs:
        n *= p
    assert g.vertices[0].as_tuple() == (n, 2, 1)
    assert sum(v.delta == 3 for v in g.vertices) == len(pairs)
    assert sum(v.delta == 1 for v in g.vertices) == len(pairs) + 1


def test_series_examples():
    assert extended_yano_series(CUSP) == FracSeries.parse("t^(5/6) + t^(7/6)")
    assert extended_yano_series(VAL4) == FracSeries.parse(
        "t + t^(4/3) + t^(5/4) + t^(7/6) + 2*t^(13/12) + 2*t^(11/12) + t^(5/6) + t^(3/4)"
        " + t^(2/3) + 2*t^(7/12) + 2*t^(5/12)"
    )
    assert extended_yano_series(FIG2) == FracSeries.parse(
        "t + 2*t^(1/2) + 2*t^(7/10) + 2*t^(9/10) + 2*t^(11/10) + 2*t^(13/10)"
    )


def test_milnor_examples():
    assert milnor_number(CUSP) == 2
    assert milnor_number(VAL4) == 15
    assert milnor_number(FIG2) == 11


def test_zeta_exponents():
    assert zeta_exponents(CUSP) == {2: 1, 3: 1, 6: -1}
    assert zeta_exponents(VAL4) == {4: 1, 6: 1, 12: -2}
    assert zeta_exponents(ResGraph(((3, 2, 2), (5, 3, 2)))) == {}


def test_eigenvalues_cusp():
    assert eigenvalue_multiplicities(CUSP) == {F(1, 6): 1, F(5, 6): 1}
    assert not has_multiple_eigenvalue_excluding_one(CUSP)


def test_eigenvalues_val4():
    m = eigenvalue_multiplicities(VAL4)
    assert all(m[F(j, 12)] == 2 for j in (1, 5, 7, 11))
    assert m[F(0)] == 1
    assert sum(m.values()) == 15
    assert has_multiple_eigenvalue_excluding_one(VAL4)


def test_eigenvalues_fig2_against_cyclotomic_oracle():
    m = eigenvalue_multiplicities(FIG2)
    assert m == eigen_multiplicities(FIG2.as_tuples())
    assert has_multiple_eigenvalue_excluding_one(FIG2)


@st.composite
def graphs(draw, max_n=48, max_g=3):
    pairs = draw(newton_pairs_lists(max_g=max_g, max_n=max_n))
    return from_newton_pairs(NewtonPairs(pairs))


@settings(max_examples=25)
@given(graphs(max_n=12, max_g=2))
def test_eigenvalues_match_cyclotomic_oracle(g):
    m = eigenvalue_multiplicities(g)
    assert m == eigen_multiplicities(g.as_tuples())
    assert sum(m.values()) == milnor_number(g)


@given(graphs(), st.lists(st.tuples(st.integers(1, 30), st.integers(1, 30)), max_size=4))
def test_valency_two_vertices_change_nothing(g, extra):
    padded = ResGraph(g.vertices + tuple(GraphVertex(N, nu, 2) for N, nu in extra), g.branches)
    assert extended_yano_series(padded) == extended_yano_series(g)
    assert milnor_number(padded) == milnor_number(g)
    assert eigenvalue_multiplicities(padded) == eigenvalue_multiplicities(g)
    assert padded.without_valency_two() == g.without_valency_two()


@given(graphs())
def test_series_matches_termwise_oracle(g):
    assert extended_yano_series(g).as_dict() == graph_series(g.as_tuples())
    assert milnor_number(g) == milnor(g.as_tuples())


def test_inconsistent_graph():
    with pytest.raises(InconsistentGraphError):
        milnor_number(ResGraph(((2, 1, 1),)))
    with pytest.raises(InconsistentGraphError):
        eigenvalue_multiplicities(ResGraph(((2, 1, 1), (1, 1, 3))))


@pytest.mark.parametrize("v", [(0, 1, 1), (1, 0, 1), (1, 1, -1), (1.5, 1, 1)])
def test_vertex_validation(v):
    with pytest.raises(InvalidArgument):
        GraphVertex(*v)


def test_branches_validation():
    with pytest.raises(InvalidArgument):
        ResGraph(((2, 2, 1),), 0)


def test_json_round_trip(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(graph_to_dict(VAL4)))
    assert load_graph(p) == VAL4
    assert graph_from_dict(graph_to_dict(FIG2)) == FIG2
    p.write_text("{not json")
    with pytest.raises(ParseError):
        load_graph(p)
    with pytest.raises(ParseError):
        graph_from_dict({"vertices": [{"N": 2}]})
