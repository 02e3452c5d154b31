import pytest

from unitary_hw.errors import LimitExceededError
from unitary_hw.hasse import (
    Edge,
    PEdge,
    QEdge,
    YoungDiagram,
    build_hasse,
    to_dot,
    young_of,
)
from unitary_hw.numeric import SU, SOStar, parse_coords
from unitary_hw.so import is_unitary_so
from unitary_hw.su import TildeRho, is_unitary_su
from unitary_hw.weyl import BarSplit


def split(left, right):
    return BarSplit(parse_coords(left), parse_coords(right))


def by_coords(diagram):
    return {tuple(map(str, nd.coords)): nd for nd in diagram.nodes}


def test_young_diagram_basics():
    y = YoungDiagram((3, 2, 0))
    assert y.rows == (3, 2) and y.size == 5
    assert y.contains(YoungDiagram((2, 2))) and not YoungDiagram((2, 2)).contains(y)
    assert YoungDiagram((2, 2, 2)).rectangle() == (2, 3)
    assert YoungDiagram(()).rectangle() is None
    with pytest.raises(ValueError):
        YoungDiagram((1, 2))


@pytest.mark.parametrize(
    "rows, ok", [((), True), ((1, 1), True), ((2, 2, 2), True), ((3, 2, 2, 1), True), ((2, 2), False), ((1,), False)]
)
def test_hook_built(rows, ok):
    assert YoungDiagram(rows).is_hook_built() is ok


def test_young_of():
    assert young_of(split("2,1", "0,-1,-2"), SU(2, 3)).rows == (3, 3)
    assert young_of(split("-1,-2", "2,1,0"), SU(2, 3)).rows == ()
    assert young_of(parse_coords("2,0,-1,-3"), SOStar(4)).rows == (3, 2, 2, 1)
    with pytest.raises(ValueError):
        young_of(parse_coords("5,0,-1,-3"), SOStar(4))


SU23_COVERS = {
    ((3, 2), (3, 3)), ((3, 1), (3, 2)), ((3,), (3, 1)),
    ((2, 2), (3, 2)), ((2, 1), (3, 1)), ((2,), (3,)),
    ((2, 1), (2, 2)), ((2,), (2, 1)),
    ((1, 1), (2, 1)), ((1,), (2,)),
    ((1,), (1, 1)), ((), (1,)),
}


def test_su23_diagram():
    h = build_hasse(SU(2, 3))
    assert len(h.nodes) == 10 and len(h.covers) == 12
    got = {(h.nodes[a].young.rows, h.nodes[b].young.rows) for a, b in h.covers}
    assert got == SU23_COVERS


def test_su23_marks():
    h = build_hasse(SU(2, 3))
    marks = {nd.young.rows: nd.mark for nd in h.nodes}
    assert marks[()] == TildeRho()
    assert marks[(3, 3)] == Edge(3, 2)
    assert marks[(1,)] == Edge(1, 1) and marks[(1, 1)] == Edge(1, 2)
    assert marks[(2, 1)] is None
    assert sum(nd.unitary for nd in h.nodes) == 7


SO4_COVERS = {
    ((1, 1), ()), ((2, 1, 1), (1, 1)), ((2, 2, 2), (2, 1, 1)), ((3, 1, 1, 1), (2, 1, 1)),
    ((3, 2, 2, 1), (2, 2, 2)), ((3, 2, 2, 1), (3, 1, 1, 1)), ((3, 3, 2, 2), (3, 2, 2, 1)),
    ((3, 3, 3, 3), (3, 3, 2, 2)),
}


def test_so4_diagram():
    h = build_hasse(SOStar(4))
    assert len(h.nodes) == 8
    got = {(h.nodes[a].young.rows, h.nodes[b].young.rows) for a, b in h.covers}
    assert got == SO4_COVERS
    nodes = by_coords(h)
    assert nodes[("3", "0", "-1", "-2")].mark == QEdge(4)
    assert nodes[("2", "1", "0", "-3")].mark == PEdge(3)
    assert nodes[("0", "-1", "-2", "-3")].mark == TildeRho()
    assert nodes[("3", "2", "0", "-1")].mark is None


def test_su11():
    h = build_hasse(SU(1, 1))
    assert len(h.nodes) == 2 and h.covers == ((1, 0),)


@pytest.mark.parametrize("alg", [SU(1, 1), SU(1, 3), SU(2, 3), SU(2, 4), SU(3, 3), SU(3, 4)])
def test_su_invariants(alg):
    h = build_hasse(alg)
    assert len({nd.young for nd in h.nodes}) == len(h.nodes)
    for a, b in h.covers:
        assert h.nodes[b].young.size == h.nodes[a].young.size + 1
    for nd in h.nodes:
        assert nd.unitary == is_unitary_su(nd.arrangement)
        assert nd.unitary == (nd.mark is not None)
        assert len(nd.young.rows) <= alg.p and all(r <= alg.q for r in nd.young.rows)


@pytest.mark.parametrize("n", range(2, 7))
def test_so_invariants(n):
    h = build_hasse(SOStar(n))
    assert len(h.nodes) == 2 ** (n - 1)
    for nd in h.nodes:
        assert nd.young.is_hook_built()
        assert nd.unitary == is_unitary_so(nd.arrangement)
        assert nd.unitary == (nd.mark is not None)


def test_caps():
    with pytest.raises(LimitExceededError):
        build_hasse(SU(6, 7))
    with pytest.raises(LimitExceededError):
        build_hasse(SOStar(9))
    with pytest.raises(LimitExceededError):
        build_hasse(SOStar(4), max_rank=3)


def test_dot_is_deterministic():
    text = to_dot(build_hasse(SU(2, 3)))
    assert text == to_dot(build_hasse(SU(2, 3)))
    assert text.count("->") == 12
    assert text.count("label=") == 10
    small = to_dot(build_hasse(SU(1, 1)))
    assert "1/2 | -1/2" in small and "-1/2 | 1/2" in small
    assert to_dot(build_hasse(SOStar(4))).count("label=") == 8
