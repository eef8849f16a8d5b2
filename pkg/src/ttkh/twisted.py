"""The full twisted resolution cube and its specializations.

Each subset S of crossings gives a crossingless resolution L_S whose circles
carry labels v+ / v-, except the circle through the marked point, which is
pinned to v0.  The differential has two commuting degree +2 pieces: the
Khovanov edge maps (merge and split, with the v0 absorption rules), and a
Koszul piece that flips one + label to - weighted by the formal area enclosed
by that circle on the side away from the marked point.

Specializing every face variable to zero kills the Koszul piece and leaves
the reduced characteristic-2 Khovanov complex; specializing them to generic
field elements produces a complex whose graded ranks agree with the
spanning-tree homology, which is what the cross-validation tests check.

A state in resolution L_S sits in grading delta = |S| + #minus - #plus - n+,
which restricts to |S| - n+ on single-circle resolutions and matches the
grading of the tree complex.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import xor
from typing import Any

from .gf2algebra import (
    GF2k,
    EvaluationPoint,
    MultiPoly,
    area_sum,
    random_point,
)
from .homology import EvalField, GradedComplex
from .pdcode import LinkDiagram
from .planar import FaceSet, trace_faces

__all__ = [
    "CubeResolution",
    "resolve",
    "build_twisted_complex",
    "twisted_homology",
    "reduced_khovanov_delta",
    "cube_d_squared_violations",
]


@dataclass(frozen=True)
class CubeResolution:
    """Circles of one resolution, with their enclosed areas.

    `circle_of[e]` is the circle through edge e; `rep[c]` is one such edge,
    used to chase circles across a smoothing change.  `areas[c]` lists the
    faces enclosed by circle c away from the marked point, or None for the
    marked circle (whose area the construction never uses) and when areas
    were not requested.
    """

    subset: int
    circle_of: tuple[int, ...]
    n_circles: int
    marked: int
    rep: tuple[int, ...]
    unmarked: tuple[int, ...]
    areas: tuple[frozenset[int] | None, ...]


def _circle_partition(d: LinkDiagram, subset: int) -> tuple[list[int], int]:
    parent = list(range(d.n_edges))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in range(d.n):
        e0, e1, e2, e3 = d.crossings[k]
        pairs = ((e0, e3), (e1, e2)) if subset >> k & 1 else ((e0, e1), (e2, e3))
        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    ids: dict[int, int] = {}
    circle_of = []
    for e in range(d.n_edges):
        r = find(e)
        if r not in ids:
            ids[r] = len(ids)
        circle_of.append(ids[r])
    return circle_of, len(ids)


def _circle_areas(
    d: LinkDiagram,
    fs: FaceSet,
    subset: int,
    circle_of: list[int],
    n_circles: int,
    marked: int,
) -> list[frozenset[int] | None]:
    """Faces enclosed by each circle, by parity walk over the face graph.

    Crossing an edge flips the parity of that edge's circle; slipping through
    the channel of a smoothed crossing flips nothing.  Face 0 touches the
    marked point, so parity relative to face 0 already means "away from p".
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(fs.n_faces)]
    for e in range(d.n_edges):
        f1, f2 = fs.faces_of_edge(e)
        mask = 1 << circle_of[e]
        adj[f1].append((f2, mask))
        adj[f2].append((f1, mask))
    for k in range(d.n):
        qa, qb = (0, 2) if subset >> k & 1 else (1, 3)
        fa = fs.face_of_corner(k, qa)
        fb = fs.face_of_corner(k, qb)
        adj[fa].append((fb, 0))
        adj[fb].append((fa, 0))

    par = [-1] * fs.n_faces
    par[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for g, mask in adj[f]:
            want = par[f] ^ mask
            if par[g] < 0:
                par[g] = want
                stack.append(g)
            elif par[g] != want:
                raise AssertionError("inconsistent circle parities")
    if min(par) < 0:
        raise AssertionError("face graph splits; resolve() needs a connected diagram")

    out: list[frozenset[int] | None] = []
    for c in range(n_circles):
        if c == marked:
            out.append(None)
            continue
        out.append(frozenset(f for f in range(fs.n_faces) if par[f] >> c & 1))
    return out


def resolve(
    d: LinkDiagram,
    fs: FaceSet,
    subset: int,
    with_areas: bool = True,
) -> CubeResolution:
    """Circles of the resolution picked out by `subset`."""
    circle_of, n_circles = _circle_partition(d, subset)
    marked = circle_of[d.marked_edge]
    rep = [-1] * n_circles
    for e in range(d.n_edges):
        if rep[circle_of[e]] < 0:
            rep[circle_of[e]] = e
    if with_areas:
        areas = _circle_areas(d, fs, subset, circle_of, n_circles, marked)
    else:
        areas = [None] * n_circles
    return CubeResolution(
        subset=subset,
        circle_of=tuple(circle_of),
        n_circles=n_circles,
        marked=marked,
        rep=tuple(rep),
        unmarked=tuple(c for c in range(n_circles) if c != marked),
        areas=tuple(areas),
    )


class _PolyRing:
    """Just enough ring structure for d-squared checks on symbolic entries."""

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.zero = MultiPoly.zero(nvars)
        self.one = MultiPoly.one(nvars)

    @staticmethod
    def add(a: MultiPoly, b: MultiPoly) -> MultiPoly:
        return a + b

    @staticmethod
    def mul(a: MultiPoly, b: MultiPoly) -> MultiPoly:
        return a * b

    @staticmethod
    def is_zero(a: MultiPoly) -> bool:
        return a.is_zero()


State = tuple[int, int]  # (crossing subset, minus mask over unmarked circles)


def _transport(
    old: CubeResolution,
    mm: int,
    new_pos: dict[int, int],
    new_of: list[int],
    skip: tuple[int, ...] = (),
) -> int:
    """Carry minus labels across a smoothing change, dropping `skip` circles."""
    out = 0
    for i, c in enumerate(old.unmarked):
        if c in skip or not mm >> i & 1:
            continue
        out |= 1 << new_pos[new_of[c]]
    return out


def build_twisted_complex(
    d: LinkDiagram,
    point: EvaluationPoint | None = None,
) -> GradedComplex:
    """The whole cube, evaluated at `point` or symbolic when point is None.

    Symbolic entries are plain polynomials (areas), so the result supports
    d_squared_violations but not rank computations; pass a point for ranks.
    Size grows as 2^n resolutions times 2^(circles-1) labelings: fine through
    roughly twelve crossings, painful after.
    """
    if not d.is_connected:
        raise ValueError("twisted cube needs a connected diagram; split it first")
    fs = trace_faces(d)
    nvars = fs.n_faces

    if point is None:
        ring: Any = _PolyRing(nvars)

        def area_coeff(faces: frozenset[int]) -> MultiPoly:
            return area_sum(faces, nvars)

        def coeff_is_zero(c: MultiPoly) -> bool:
            return c.is_zero()

        one: Any = ring.one
    else:
        gf = point.field
        ring = EvalField(gf)

        def area_coeff(faces: frozenset[int]) -> int:
            return reduce(xor, (point.values[f] for f in faces), 0)

        def coeff_is_zero(c: int) -> bool:
            return c == 0

        one = 1

    cache = [resolve(d, fs, S) for S in range(1 << d.n)]

    gradings: dict[State, int] = {}
    diff: dict[State, dict[State, Any]] = {}
    n_plus = d.n_plus

    for S in range(1 << d.n):
        res = cache[S]
        m = len(res.unmarked)
        base = bin(S).count("1") - m - n_plus
        for mm in range(1 << m):
            gradings[(S, mm)] = base + 2 * bin(mm).count("1")

    for S in range(1 << d.n):
        res = cache[S]
        m = len(res.unmarked)
        pos = {c: i for i, c in enumerate(res.unmarked)}

        edge_moves = []
        for k in range(d.n):
            if S >> k & 1:
                continue
            S2 = S | 1 << k
            res2 = cache[S2]
            pos2 = {c: i for i, c in enumerate(res2.unmarked)}
            new_of = [res2.circle_of[res.rep[c]] for c in range(res.n_circles)]
            if res2.n_circles == res.n_circles - 1:
                hit: dict[int, list[int]] = {}
                for c, c2 in enumerate(new_of):
                    hit.setdefault(c2, []).append(c)
                (merged, pair) = next(
                    (c2, cs) for c2, cs in hit.items() if len(cs) == 2
                )
                edge_moves.append(("m", S2, pos2, new_of, merged, tuple(pair)))
            else:
                covered = set(new_of)
                born = next(
                    c2 for c2 in range(res2.n_circles) if c2 not in covered
                )
                probe = next(
                    e for e in range(d.n_edges) if res2.circle_of[e] == born
                )
                split_old = res.circle_of[probe]
                edge_moves.append(
                    ("s", S2, pos2, new_of, split_old, (new_of[split_old], born))
                )

        for mm in range(1 << m):
            col: dict[State, Any] = {}

            def put(state: State, coeff: Any) -> None:
                if state in col:
                    col[state] = ring.add(col[state], coeff)
                else:
                    col[state] = coeff

            for i, c in enumerate(res.unmarked):
                if mm >> i & 1:
                    continue
                coeff = area_coeff(res.areas[c])
                if not coeff_is_zero(coeff):
                    put((S, mm | 1 << i), coeff)

            for kind, S2, pos2, new_of, key, aux in edge_moves:
                if kind == "m":
                    a, b = aux
                    marked_in = res.marked in (a, b)
                    if marked_in:
                        other = b if res.marked == a else a
                        # v0 absorbs +; v0 with - is killed
                        if mm >> pos[other] & 1:
                            continue
                        mm2 = _transport(res, mm, pos2, new_of, skip=(other,))
                        put((S2, mm2), one)
                    else:
                        la = mm >> pos[a] & 1
                        lb = mm >> pos[b] & 1
                        if la and lb:
                            continue
                        mm2 = _transport(res, mm, pos2, new_of, skip=(a, b))
                        if la or lb:
                            mm2 |= 1 << pos2[key]
                        put((S2, mm2), one)
                else:
                    c_old = key
                    a2, b2 = aux
                    mm2 = _transport(res, mm, pos2, new_of, skip=(c_old,))
                    if c_old == res.marked:
                        free = b2 if cache[S2].marked == a2 else a2
                        put((S2, mm2 | 1 << pos2[free]), one)
                    elif mm >> pos[c_old] & 1:
                        put((S2, mm2 | 1 << pos2[a2] | 1 << pos2[b2]), one)
                    else:
                        put((S2, mm2 | 1 << pos2[a2]), one)
                        put((S2, mm2 | 1 << pos2[b2]), one)

            col = {t: v for t, v in col.items() if not coeff_is_zero(v)}
            if col:
                diff[(S, mm)] = col

    return GradedComplex(ring, gradings, diff)


def cube_d_squared_violations(
    d: LinkDiagram,
    point: EvaluationPoint | None = None,
    limit: int = 10,
) -> list:
    """Nonzero entries of the squared cube differential (ideally none)."""
    return build_twisted_complex(d, point).d_squared_violations(limit=limit)


def twisted_homology(
    d: LinkDiagram,
    field_bits: int = 16,
    trials: int = 3,
    seed: int = 0,
) -> dict:
    """Graded ranks of the evaluated cube, best-of-`trials` specializations.

    Random specialization can only drop matrix ranks, so per-grading ranks
    are combined by maximum before betti numbers are formed, mirroring the
    spanning-tree routine.  Returns a report dict shaped like its output.
    """
    if not d.is_connected:
        return {
            "betti": {},
            "mode": "split",
            "trials": 0,
            "seed": seed,
            "n_plus": d.n_plus,
            "dim": 0,
        }
    gf = GF2k(field_bits)
    fs = trace_faces(d)
    best: dict[int, int] = {}
    dims: dict[int, int] = {}
    dim_total = 0
    for attempt in range(trials):
        point = random_point(fs.n_faces, gf, seed * 1_000_003 + attempt)
        cx = build_twisted_complex(d, point)
        dims = cx.dims_by_grading()
        dim_total = cx.dim()
        for q, r in cx.rank_by_grading().items():
            if r > best.get(q, 0):
                best[q] = r
    betti: dict[int, int] = {}
    for q, dim in dims.items():
        b = dim - best.get(q, 0) - best.get(q - 2, 0)
        if b < 0:
            raise AssertionError("negative betti number; rank overshoot")
        if b:
            betti[q] = b
    return {
        "betti": betti,
        "mode": "evaluated",
        "trials": trials,
        "seed": seed,
        "n_plus": d.n_plus,
        "dim": dim_total,
    }


def _f2_rank(columns: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        while col:
            low = col & -col
            if low in pivots:
                col ^= pivots[low]
            else:
                pivots[low] = col
                rank += 1
                break
    return rank


def reduced_khovanov_delta(d: LinkDiagram) -> dict[int, int]:
    """Reduced characteristic-2 Khovanov ranks, collapsed to delta.

    This is the cube at x = 0: the Koszul piece vanishes and every edge map
    has coefficient 1, so the complex splits by the quantum weight
    j = |S| + #plus - #minus and ordinary GF(2) elimination per block
    computes the bigraded ranks, reported as delta = 2|S| - j - n+.
    """
    states_by: dict[tuple[int, int], dict[State, int]] = {}
    cache: list[CubeResolution] = []
    fs = trace_faces(d)
    for S in range(1 << d.n):
        res = resolve(d, fs, S, with_areas=False)
        cache.append(res)
        i = bin(S).count("1")
        m = len(res.unmarked)
        for mm in range(1 << m):
            minus = bin(mm).count("1")
            j = i + (m - minus) - minus
            block = states_by.setdefault((j, i), {})
            block[(S, mm)] = len(block)

    ranks: dict[tuple[int, int], int] = {}
    for (j, i), sources in states_by.items():
        targets = states_by.get((j, i + 1))
        if not targets:
            continue
        columns = []
        for (S, mm) in sources:
            res = cache[S]
            pos = {c: k for k, c in enumerate(res.unmarked)}
            colbits = 0
            for k in range(d.n):
                if S >> k & 1:
                    continue
                S2 = S | 1 << k
                res2 = cache[S2]
                pos2 = {c: t for t, c in enumerate(res2.unmarked)}
                new_of = [res2.circle_of[res.rep[c]] for c in range(res.n_circles)]
                outs: list[int] = []
                if res2.n_circles == res.n_circles - 1:
                    hit: dict[int, list[int]] = {}
                    for c, c2 in enumerate(new_of):
                        hit.setdefault(c2, []).append(c)
                    merged, pair = next(
                        (c2, cs) for c2, cs in hit.items() if len(cs) == 2
                    )
                    a, b = pair
                    if res.marked in (a, b):
                        other = b if res.marked == a else a
                        if not mm >> pos[other] & 1:
                            outs.append(
                                _transport(res, mm, pos2, new_of, skip=(other,))
                            )
                    else:
                        la = mm >> pos[a] & 1
                        lb = mm >> pos[b] & 1
                        if not (la and lb):
                            mm2 = _transport(res, mm, pos2, new_of, skip=(a, b))
                            if la or lb:
                                mm2 |= 1 << pos2[merged]
                            outs.append(mm2)
                else:
                    covered = set(new_of)
                    born = next(
                        c2 for c2 in range(res2.n_circles) if c2 not in covered
                    )
                    probe = next(
                        e for e in range(d.n_edges) if res2.circle_of[e] == born
                    )
                    c_old = res.circle_of[probe]
                    a2, b2 = new_of[c_old], born
                    mm2 = _transport(res, mm, pos2, new_of, skip=(c_old,))
                    if c_old == res.marked:
                        free = b2 if res2.marked == a2 else a2
                        outs.append(mm2 | 1 << pos2[free])
                    elif mm >> pos[c_old] & 1:
                        outs.append(mm2 | 1 << pos2[a2] | 1 << pos2[b2])
                    else:
                        outs.append(mm2 | 1 << pos2[a2])
                        outs.append(mm2 | 1 << pos2[b2])
                for mm2 in outs:
                    colbits ^= 1 << targets[(S2, mm2)]
            if colbits:
                columns.append(colbits)
        ranks[(j, i)] = _f2_rank(columns)

    betti: dict[int, int] = {}
    for (j, i), block in states_by.items():
        b = len(block) - ranks.get((j, i), 0) - ranks.get((j, i - 1), 0)
        if b < 0:
            raise AssertionError("negative betti number in reduced block")
        if b:
            delta = 2 * i - j - d.n_plus
            betti[delta] = betti.get(delta, 0) + b
    return betti
