"""Faces, checkerboard coloring, and Tait graphs of a diagram.

The combinatorial embedding is the rotation system implied by the PD
convention: the four edge-ends at a crossing k occupy slots 0..3 in
counterclockwise order.  A dart is one end of one edge, encoded 4*k + s.
Faces are the orbits of sigma . alpha, where alpha swaps the two darts of
an edge and sigma rotates a dart counterclockwise to the next slot.

Quadrant q at crossing k (the corner between slots q and q+1) belongs to
the face whose orbit contains dart 4*k + (q+1 mod 4): the face walk pivots
through exactly that corner when it turns there.

Face index 0 is always the face to the left of the marked edge, walking
along its orientation, and index 1 the face to its right; these are the
two faces touching the marked point.  Checkerboard coloring paints index 0
black.  Faces model the variables x_1 .. x_F in that order.

At a crossing the two quadrants merged by the 1-smoothing are corners 0
and 2.  A crossing is a co-crossing (mu = -1) when those corners are
black, an ic-crossing (mu = +1) when they are white.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .pdcode import LinkDiagram, NonSpherical

__all__ = [
    "Face",
    "FaceSet",
    "TaitGraph",
    "trace_faces",
    "validate_spherical",
    "checkerboard",
    "tait_graphs",
    "mu_values",
    "BLACK",
    "WHITE",
]

BLACK = 0
WHITE = 1


@dataclass(frozen=True)
class Face:
    """One complementary region: its boundary darts in orbit order."""

    index: int
    darts: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)


class FaceSet:
    """All faces of a diagram, with corner and edge lookups."""

    def __init__(self, d: LinkDiagram):
        self.diagram = d
        n = d.n

        alpha = [0] * (4 * n)
        for e in range(d.n_edges):
            (k1, s1), (k2, s2) = d.occurrences[e]
            alpha[4 * k1 + s1] = 4 * k2 + s2
            alpha[4 * k2 + s2] = 4 * k1 + s1
        self._alpha = alpha

        orbit_of = [-1] * (4 * n)
        orbits: list[tuple[int, ...]] = []
        hk, hs = d.head[d.marked_edge]
        tk, ts = d.tail[d.marked_edge]
        start_order = [4 * hk + hs, 4 * tk + ts] + list(range(4 * n))
        for d0 in start_order:
            if orbit_of[d0] >= 0:
                continue
            orbit = []
            x = d0
            while orbit_of[x] < 0:
                orbit_of[x] = len(orbits)
                orbit.append(x)
                nx = alpha[x]
                x = (nx & ~3) | ((nx + 1) & 3)
            orbits.append(tuple(orbit))
        self.faces: tuple[Face, ...] = tuple(
            Face(i, darts) for i, darts in enumerate(orbits)
        )
        self._face_of_dart = orbit_of
        self.n_faces = len(orbits)

        edge_faces: list[tuple[int, int]] = []
        for e in range(d.n_edges):
            (k1, s1), (k2, s2) = d.occurrences[e]
            edge_faces.append(
                (orbit_of[4 * k1 + s1], orbit_of[4 * k2 + s2])
            )
        self.edge_faces: tuple[tuple[int, int], ...] = tuple(edge_faces)

    def face_of_dart(self, dart: int) -> int:
        return self._face_of_dart[dart]

    def face_of_corner(self, k: int, q: int) -> int:
        """Face filling quadrant q (between slots q and q+1) at crossing k."""
        return self._face_of_dart[4 * k + ((q + 1) & 3)]

    def faces_of_edge(self, e: int) -> tuple[int, int]:
        """The two faces on either side of edge e (distinct for 4-valent)."""
        return self.edge_faces[e]

    @property
    def nvars(self) -> int:
        return self.n_faces

    def root_black(self) -> int:
        return 0

    def root_white(self) -> int:
        return 1


def trace_faces(d: LinkDiagram) -> FaceSet:
    """Trace all complementary regions and validate planarity."""
    fs = FaceSet(d)
    _validate(d, fs)
    return fs


def _validate(d: LinkDiagram, fs: FaceSet) -> None:
    if d.is_connected:
        expected = d.n + 2
        if fs.n_faces != expected:
            raise NonSpherical(
                f"{fs.n_faces} faces for a connected {d.n}-crossing diagram, "
                f"expected {expected}"
            )
        return
    # Disconnected diagrams embed component-wise; each planar piece obeys
    # Euler separately.
    comp_of_crossing = _crossing_components(d)
    per_comp_faces: dict[int, set[int]] = {}
    per_comp_n: dict[int, int] = {}
    for k in range(d.n):
        c = comp_of_crossing[k]
        per_comp_n[c] = per_comp_n.get(c, 0) + 1
        for s in range(4):
            per_comp_faces.setdefault(c, set()).add(fs.face_of_dart(4 * k + s))
    for c, nc in per_comp_n.items():
        if len(per_comp_faces[c]) != nc + 2:
            raise NonSpherical(
                f"component with {nc} crossings traces "
                f"{len(per_comp_faces[c])} faces, expected {nc + 2}"
            )


def _crossing_components(d: LinkDiagram) -> list[int]:
    comp = [-1] * d.n
    next_comp = 0
    for k0 in range(d.n):
        if comp[k0] >= 0:
            continue
        comp[k0] = next_comp
        stack = [k0]
        while stack:
            k = stack.pop()
            for e in d.crossings[k]:
                for (j, _) in d.occurrences[e]:
                    if comp[j] < 0:
                        comp[j] = next_comp
                        stack.append(j)
        next_comp += 1
    return comp


def validate_spherical(d: LinkDiagram) -> None:
    """Raise NonSpherical unless the code embeds in the sphere."""
    _validate(d, FaceSet(d))


def checkerboard(fs: FaceSet) -> tuple[int, ...]:
    """Two-color the faces; the face left of the marked edge is black.

    Faces of a link projection are always two-colorable since every vertex
    is 4-valent; a coloring failure means the face trace is broken, so it
    is asserted rather than handled.
    """
    adj: list[list[int]] = [[] for _ in range(fs.n_faces)]
    for f1, f2 in fs.edge_faces:
        adj[f1].append(f2)
        adj[f2].append(f1)
    colors = [-1] * fs.n_faces
    # Split diagrams get each extra piece rooted arbitrarily; face 0 first
    # so the marked face is always black.
    for f0 in range(fs.n_faces):
        if colors[f0] >= 0:
            continue
        colors[f0] = BLACK
        stack = [f0]
        while stack:
            f = stack.pop()
            want = colors[f] ^ 1
            for other in adj[f]:
                if colors[other] < 0:
                    colors[other] = want
                    stack.append(other)
                elif colors[other] != want:
                    raise AssertionError("checkerboard coloring failed")
    return tuple(colors)


@dataclass
class TaitGraph:
    """One checkerboard graph: a vertex per face of one color, an edge per
    crossing joining its two same-colored opposite quadrants."""

    color: int
    vertices: tuple[int, ...]          # face indices
    edges: tuple[tuple[int, int, int], ...]  # (crossing, face_u, face_v)
    root: int                          # face index of the root vertex

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for _, u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def spanning_tree_count(self) -> int:
        """Matrix-tree count; loops ignored, multi-edges respected."""
        verts = [v for v in self.vertices]
        if len(verts) == 1:
            return 1
        idx = {v: i for i, v in enumerate(verts)}
        m = len(verts)
        lap = [[0] * m for _ in range(m)]
        for _, u, v in self.edges:
            if u == v:
                continue
            iu, iv = idx[u], idx[v]
            lap[iu][iu] += 1
            lap[iv][iv] += 1
            lap[iu][iv] -= 1
            lap[iv][iu] -= 1
        minor = [row[1:] for row in lap[1:]]
        return _int_det(minor)


def _int_det(m: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant over the integers."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def tait_graphs(fs: FaceSet, colors: tuple[int, ...]) -> tuple[TaitGraph, TaitGraph]:
    """(black graph, white graph) of the checkerboard coloring.

    At each crossing the corner pairs {0,2} and {1,3} have constant color,
    one pair of each; the crossing contributes one edge to each graph.
    """
    d = fs.diagram
    by_color: dict[int, list[int]] = {BLACK: [], WHITE: []}
    for f in range(fs.n_faces):
        by_color[colors[f]].append(f)
    edges: dict[int, list[tuple[int, int, int]]] = {BLACK: [], WHITE: []}
    for k in range(d.n):
        c0 = fs.face_of_corner(k, 0)
        c1 = fs.face_of_corner(k, 1)
        c2 = fs.face_of_corner(k, 2)
        c3 = fs.face_of_corner(k, 3)
        if colors[c0] != colors[c2] or colors[c1] != colors[c3]:
            raise AssertionError("opposite quadrants must share a color")
        edges[colors[c0]].append((k, c0, c2))
        edges[colors[c1]].append((k, c1, c3))
    roots = {BLACK: fs.root_black(), WHITE: fs.root_white()}
    out = []
    for col in (BLACK, WHITE):
        out.append(
            TaitGraph(
                color=col,
                vertices=tuple(by_color[col]),
                edges=tuple(edges[col]),
                root=roots[col],
            )
        )
    return out[0], out[1]


def mu_values(fs: FaceSet, colors: tuple[int, ...]) -> tuple[int, ...]:
    """mu(c) per crossing: -1 where the 1-smoothing merges black corners."""
    return tuple(
        -1 if colors[fs.face_of_corner(k, 0)] == BLACK else +1
        for k in range(fs.diagram.n)
    )
