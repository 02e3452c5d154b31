"""Hasse diagrams of the k-dominant conjugates of rho, labelled by Young diagrams.

Bruhat order is read off from Young-diagram containment.  For su(p, q) a
larger diagram is a larger element (rho is the full p x q box); for so*(2n) it
is the other way round (rho is the empty diagram).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import LimitExceededError
from .numeric import Algebra, HalfInteger, SOStar, SU, format_coords, rho
from .so import is_unitary_so, unitary_hasse_points_so
from .su import TildeRho, is_unitary_su
from .weyl import BarSplit, SignedArrangement, enumerate_su, enumerate_so

MAX_SU_RANK = 12
MAX_SO_RANK = 8


@dataclass(frozen=True)
class YoungDiagram:
    """Row lengths, weakly decreasing; trailing zeros are dropped."""

    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.rows)
        if any(r < 0 for r in rows) or any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"{rows} is not a Young diagram")
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    @property
    def size(self) -> int:
        return sum(self.rows)

    def row(self, k: int) -> int:
        return self.rows[k] if k < len(self.rows) else 0

    def contains(self, other: YoungDiagram) -> bool:
        return len(other.rows) <= len(self.rows) and all(
            self.rows[k] >= r for k, r in enumerate(other.rows)
        )

    def rectangle(self) -> Optional[tuple[int, int]]:
        """``(i, j)`` if the diagram is j rows of i boxes, else None (also for the empty diagram)."""
        if not self.rows or len(set(self.rows)) != 1:
            return None
        return self.rows[0], len(self.rows)

    def is_hook_built(self) -> bool:
        rows = self.rows
        while rows:
            # outer hook: first row of length k and first column of length k + 1
            if len(rows) != rows[0] + 1:
                return False
            rows = tuple(r - 1 for r in rows[1:] if r > 1)
        return True

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.rows)) + ")" if self.rows else "()"


@dataclass(frozen=True)
class Edge:
    """SU: the diagram is j rows of i boxes."""

    i: int
    j: int

    def __str__(self) -> str:
        return f"edge(i={self.i}, j={self.j})"


@dataclass(frozen=True)
class QEdge:
    q: int

    def __str__(self) -> str:
        return f"q-edge(q={self.q})"


@dataclass(frozen=True)
class PEdge:
    p: int

    def __str__(self) -> str:
        return f"p-edge(p={self.p})"


Mark = Union[TildeRho, Edge, QEdge, PEdge, None]
Arrangement = Union[BarSplit, SignedArrangement]


def mark_str(mark: Mark) -> str:
    if mark is None:
        return ""
    if isinstance(mark, TildeRho):
        return "tilde"
    return str(mark)


@dataclass(frozen=True)
class HasseNode:
    arrangement: Arrangement
    young: YoungDiagram
    unitary: bool
    mark: Mark = None

    @property
    def coords(self) -> tuple[HalfInteger, ...]:
        return self.arrangement.coords


@dataclass(frozen=True)
class HasseDiagram:
    """``covers`` holds index pairs ``(lo, hi)`` with ``hi`` the Bruhat-larger node."""

    algebra: Algebra
    nodes: tuple[HasseNode, ...]
    covers: tuple[tuple[int, int], ...]


def young_of(arrangement, algebra: Algebra) -> YoungDiagram:
    """Young diagram of a k-dominant conjugate of rho."""
    r = rho(algebra).coords
    coords = arrangement.coords if hasattr(arrangement, "coords") else tuple(arrangement)
    if isinstance(algebra, SU):
        if sorted(coords) != sorted(r):
            raise ValueError(f"{format_coords(coords)} is not a conjugate of rho for {algebra}")
        p, q = algebra.p, algebra.q
        tilde_left = r[q:]
        return YoungDiagram(tuple(int(coords[k] - tilde_left[k]) for k in range(p)))
    if sorted(abs(c) for c in coords) != sorted(r):
        raise ValueError(f"{format_coords(coords)} is not a conjugate of rho for {algebra}")
    # Lambda = rho - (y_n, ..., y_1)
    y = [int(a - b) for a, b in zip(r, coords)]
    return YoungDiagram(tuple(reversed(y)))


def _so_marks(n: int) -> dict:
    marks = {}
    for item in unitary_hasse_points_so(n):
        tag = item.tag
        if tag == "tilde":
            mark = TildeRho()
        else:
            val = int(tag.split("=")[1].rstrip(")"))
            mark = QEdge(val) if tag.startswith("q-edge") else PEdge(val)
        marks[item.arrangement.coords] = mark
    return marks


def edge_marks(diagram: HasseDiagram) -> HasseDiagram:
    """Attach TildeRho / Edge / QEdge / PEdge marks to the nodes."""
    alg = diagram.algebra
    nodes = []
    if isinstance(alg, SU):
        for node in diagram.nodes:
            if not node.young.rows:
                mark: Mark = TildeRho()
            else:
                rect = node.young.rectangle()
                mark = Edge(*rect) if rect else None
            nodes.append(HasseNode(node.arrangement, node.young, node.unitary, mark))
    else:
        marks = _so_marks(alg.n)
        for node in diagram.nodes:
            nodes.append(HasseNode(node.arrangement, node.young, node.unitary, marks.get(node.coords)))
    return HasseDiagram(alg, tuple(nodes), diagram.covers)


def build_hasse(algebra: Algebra, max_rank: Optional[int] = None) -> HasseDiagram:
    """Nodes are the k-dominant conjugates of rho; covers are minimal strict containments."""
    if isinstance(algebra, SU):
        cap = MAX_SU_RANK if max_rank is None else max_rank
        if algebra.rank > cap:
            raise LimitExceededError(f"{algebra}: p+q = {algebra.rank} exceeds the cap {cap}")
        arrs = enumerate_su(rho(algebra))
        unit = is_unitary_su
    else:
        cap = MAX_SO_RANK if max_rank is None else max_rank
        if algebra.n > cap:
            raise LimitExceededError(f"{algebra}: n = {algebra.n} exceeds the cap {cap}")
        arrs = enumerate_so(rho(algebra))
        unit = is_unitary_so
    nodes = [HasseNode(a, young_of(a, algebra), unit(a)) for a in arrs]

    # strict "below" relation in Bruhat order
    if isinstance(algebra, SU):
        def below(a, b):
            return a != b and nodes[b].young.contains(nodes[a].young)
    else:
        def below(a, b):
            return a != b and nodes[a].young.contains(nodes[b].young)

    idx = range(len(nodes))
    up = {a: [b for b in idx if below(a, b)] for a in idx}
    covers = []
    for a in idx:
        for b in up[a]:
            if not any(below(c, b) for c in up[a]):
                covers.append((a, b))
    covers.sort()
    return edge_marks(HasseDiagram(algebra, tuple(nodes), tuple(covers)))


def _node_label(node: HasseNode) -> str:
    return f"{node.arrangement}\\nY={node.young}"


def to_dot(diagram: HasseDiagram) -> str:
    """Graphviz text; arrows point toward the Bruhat-larger element."""
    lines = [f'digraph "{diagram.algebra}" {{', "  rankdir=RL;", "  node [shape=box];"]
    for k, node in enumerate(diagram.nodes):
        attrs = [f'label="{_node_label(node)}"']
        if node.unitary:
            attrs.append("style=filled")
            attrs.append('fillcolor="lightblue"')
        if node.mark is not None:
            attrs.append(f'tooltip="{mark_str(node.mark)}"')
        lines.append(f"  n{k} [{', '.join(attrs)}];")
    for a, b in diagram.covers:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
