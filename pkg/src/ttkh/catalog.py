"""Diagram constructors and a small fixture library.

Braid closures drive most of it: a positive letter i crosses strand i
under strand i+1 left-to-right, giving tuples whose sign convention
matches the parser's, and the plat of new edge labels is closed up by
renaming the final strand edges back to the initial ones.  Torus links,
twist links, and the move pairs used in the tests all come from words.

Kink insertion splits an edge at a fresh crossing whose loop occupies the
two adjacent slots, one handedness per writhe sign.  Disjoint unions keep
both pieces' crossings with disjoint labels, which is the canonical split
diagram.
"""

from __future__ import annotations

from .pdcode import LinkDiagram, connect_sum, mirror, reverse_component

__all__ = [
    "braid_closure",
    "torus_link",
    "twist_knot",
    "pretzel",
    "add_kink",
    "disjoint_union",
    "unknot_curl",
    "trefoil",
    "figure_eight",
    "hopf",
    "t2",
    "unlink2",
    "standard_catalog",
    "reidemeister_pairs",
    "connect_sum_examples",
    "split_examples",
]


def braid_closure(word: list[int], strands: int, marked: int | None = None) -> LinkDiagram:
    """Closure of a braid word; letter +i or -i crosses positions i, i+1."""
    if strands < 2:
        raise ValueError("need at least two strands")
    cur = {i: i for i in range(1, strands + 1)}
    nxt = strands + 1
    tuples: list[tuple[int, int, int, int]] = []
    for w in word:
        if w == 0 or abs(w) >= strands:
            raise ValueError(f"letter {w} out of range for {strands} strands")
        i = abs(w)
        left, right = cur[i], cur[i + 1]
        nl, nr = nxt, nxt + 1
        nxt += 2
        if w > 0:
            tuples.append((left, nl, nr, right))
        else:
            tuples.append((right, left, nl, nr))
        cur[i], cur[i + 1] = nl, nr
    # Close up: the strand ending the braid at position i rejoins the
    # edge that started there.
    rename = {}
    for i in range(1, strands + 1):
        if cur[i] == i:
            raise ValueError(f"strand {i} meets no crossing; closure is degenerate")
        rename[cur[i]] = i
    closed = [
        tuple(rename.get(e, e) for e in tup) for tup in tuples
    ]
    return LinkDiagram(closed, marked=marked)


def torus_link(p: int, q: int) -> LinkDiagram:
    """Closure of (s1 s2 ... s_{p-1})^q on p strands."""
    if p < 2 or q < 1:
        raise ValueError("need p >= 2, q >= 1")
    word = list(range(1, p)) * q
    return braid_closure(word, p)


def twist_knot(half_twists: int) -> LinkDiagram:
    """Closure of s1^n: the (2, n) torus picture."""
    return braid_closure([1] * half_twists, 2)


def pretzel(*params: int) -> LinkDiagram:
    """Pretzel diagram P(a_1, ..., a_m): vertical twist columns, tops and
    bottoms chained left to right and closed around the outside.

    Column j carries |a_j| crossings, all of the chirality given by the
    sign of a_j.  P(-2, 3, 5) is a 10-crossing picture of the (5, 3)
    torus knot.
    """
    m = len(params)
    if m < 2 or any(a == 0 for a in params):
        raise ValueError("need at least two nonzero twist parameters")
    NW, SW, SE, NE = 0, 1, 2, 3
    ccw = (NW, SW, SE, NE)
    opp = {NW: SE, SE: NW, NE: SW, SW: NE}

    # Half-edges: ('x', col, row, slot) at crossings, ('t'/'b', col, side, s)
    # at the degree-two closure ports along the top and bottom.
    adj: dict[tuple, tuple] = {}

    def join(a: tuple, b: tuple) -> None:
        adj[a] = b
        adj[b] = a

    for j, a in enumerate(params):
        k = abs(a)
        for i in range(k):
            up_l = ('x', j, i - 1, SW) if i > 0 else ('t', j, 0, 0)
            up_r = ('x', j, i - 1, SE) if i > 0 else ('t', j, 1, 0)
            join(('x', j, i, NW), up_l)
            join(('x', j, i, NE), up_r)
        join(('x', j, k - 1, SW), ('b', j, 0, 0))
        join(('x', j, k - 1, SE), ('b', j, 1, 0))
    for j in range(m):
        join(('t', j, 1, 1), ('t', (j + 1) % m, 0, 1))
        join(('b', j, 1, 1), ('b', (j + 1) % m, 0, 1))

    # Trace the strands, labelling each arc, then merge labels across the
    # degree-two ports so every edge keeps a single name.
    edge_at: dict[tuple, tuple[int, str]] = {}
    label = 0
    for start in list(adj):
        if start in edge_at or start[0] != 'x':
            continue
        he = start
        while True:
            edge_at[he] = (label, 'out')
            nxt = adj[he]
            edge_at[nxt] = (label, 'in')
            label += 1
            node = nxt[:3]
            if nxt[0] == 'x':
                he = node + (opp[nxt[3]],)
            else:
                he = node + (1 - nxt[3],)
            if he == start:
                break

    parent = list(range(label))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for he in adj:
        if he[0] in ('t', 'b') and he[3] == 0:
            a0, _ = edge_at[he[:3] + (0,)]
            a1, _ = edge_at[he[:3] + (1,)]
            ra, rb = find(a0), find(a1)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    tuples = []
    for j, a in enumerate(params):
        k = abs(a)
        for i in range(k):
            slots = {s: (find(edge_at[('x', j, i, s)][0]), edge_at[('x', j, i, s)][1])
                     for s in ccw}
            under = (NW, SE) if a > 0 else (NE, SW)
            start_slot = next(s for s in under if slots[s][1] == 'in')
            idx = ccw.index(start_slot)
            tuples.append(tuple(slots[ccw[(idx + t) % 4]][0] for t in range(4)))

    used = sorted({x for tup in tuples for x in tup})
    remap = {x: i for i, x in enumerate(used)}
    return LinkDiagram([tuple(remap[x] for x in tup) for tup in tuples])


def add_kink(d: LinkDiagram, edge: int | None = None, positive: bool = True) -> LinkDiagram:
    """First move: insert a curl on an edge, writhe changing by one."""
    e = d.marked_edge if edge is None else edge
    g = d.n_edges
    h = d.n_edges + 1
    tuples = [list(t) for t in d.crossings]
    hk, hs = d.head[e]
    tuples[hk][hs] = h
    if positive:
        tuples.append([e, h, g, g])
    else:
        tuples.append([e, g, g, h])
    return LinkDiagram([tuple(t) for t in tuples], marked=d.marked_edge)


def disjoint_union(d1: LinkDiagram, d2: LinkDiagram) -> LinkDiagram:
    """Split diagram: both pieces side by side, marked point on the first."""
    off = d1.n_edges
    tuples = list(d1.crossings) + [
        tuple(e + off for e in t) for t in d2.crossings
    ]
    return LinkDiagram(tuples, marked=d1.marked_edge)


def unknot_curl(positive: bool = True) -> LinkDiagram:
    return LinkDiagram([(0, 1, 1, 0)] if not positive else [(0, 0, 1, 1)])


def trefoil(right: bool = True) -> LinkDiagram:
    d = braid_closure([1, 1, 1], 2)
    if right:
        return d
    return braid_closure([-1, -1, -1], 2)


def figure_eight() -> LinkDiagram:
    return braid_closure([1, -2, 1, -2], 3)


def hopf(positive: bool = True) -> LinkDiagram:
    return braid_closure([1, 1] if positive else [-1, -1], 2)


def t2(n: int) -> LinkDiagram:
    return twist_knot(n)


def unlink2() -> LinkDiagram:
    """Two-crossing diagram of the two-component unlink."""
    return LinkDiagram([(1, 4, 2, 3), (2, 4, 1, 3)])


# Diagrams found by searching tangle closures and verified against the
# invariants that identify them: crossing number, component count, spanning
# tree count, determinant, and both reduced homology constructions.  Each is
# stored as a literal planar-diagram code so the fixtures never depend on the
# search machinery.

# 7-crossing 2-component link, 16 trees, det 4, homology 4d^5 vs d^3+5d^5.
_L7N1_PD = [
    (4, 9, 5, 0), (8, 3, 9, 4), (2, 7, 3, 8), (5, 13, 6, 10),
    (12, 6, 13, 7), (11, 1, 12, 2), (0, 10, 1, 11),
]

# 11-crossing knots; stored at the chirality whose tree homology matches
# 3d^2+8d^4 (65 trees, det 5), 8d^-2+5d^0 (75 trees, det 3), and
# 12d^-6+5d^-4 (95 trees, det 7) respectively.
_11N19_PD = [
    (21, 15, 0, 14), (13, 21, 14, 20), (19, 13, 20, 12), (11, 19, 12, 18),
    (17, 11, 18, 10), (15, 4, 16, 5), (3, 16, 4, 17), (2, 9, 3, 10),
    (8, 5, 9, 6), (6, 2, 7, 1), (0, 8, 1, 7),
]
_11N38_PD = [
    (21, 12, 0, 13), (13, 20, 14, 21), (11, 15, 12, 14), (15, 11, 16, 10),
    (9, 17, 10, 16), (17, 9, 18, 8), (19, 3, 20, 2), (3, 19, 4, 18),
    (4, 7, 5, 8), (6, 1, 7, 2), (0, 5, 1, 6),
]
_11N57_PD = [
    (21, 13, 0, 12), (13, 21, 14, 20), (11, 14, 12, 15), (19, 10, 20, 11),
    (9, 18, 10, 19), (17, 8, 18, 9), (15, 2, 16, 3), (3, 16, 4, 17),
    (4, 7, 5, 8), (6, 1, 7, 2), (0, 5, 1, 6),
]


def standard_catalog() -> dict[str, LinkDiagram]:
    """Named diagrams used across the test suite and the CLI demos."""
    cat = {
        "unknot+": unknot_curl(True),
        "unknot-": unknot_curl(False),
        "trefoil": trefoil(True),
        "trefoil_m": trefoil(False),
        "fig8": figure_eight(),
        "hopf+": hopf(True),
        "hopf-": hopf(False),
        "unlink2": unlink2(),
        "t2_4": t2(4),
        "t2_5": t2(5),
        "t2_7": t2(7),
        "t5_3": pretzel(-2, 3, 5),
        "t5_3_braid": torus_link(3, 5),
        "t7_3": torus_link(3, 7),
        "t5_4": torus_link(4, 5),
        "t3_3": torus_link(3, 3),
        "l6n1": mirror(reverse_component(torus_link(3, 3), 0)),
        "l7n1": LinkDiagram(_L7N1_PD),
        "11n19": mirror(LinkDiagram(_11N19_PD)),
        "11n38": mirror(LinkDiagram(_11N38_PD)),
        "11n57": mirror(LinkDiagram(_11N57_PD)),
    }
    return cat


def reidemeister_pairs() -> list[tuple[str, LinkDiagram, LinkDiagram]]:
    """Diagram pairs differing by one move, for invariance checks."""
    pairs: list[tuple[str, LinkDiagram, LinkDiagram]] = []
    pairs.append(("r1+_trefoil", trefoil(), add_kink(trefoil(), positive=True)))
    pairs.append(("r1-_trefoil", trefoil(), add_kink(trefoil(), positive=False)))
    pairs.append(("r1+_fig8", figure_eight(), add_kink(figure_eight(), positive=True)))
    pairs.append(("r1-_hopf", hopf(), add_kink(hopf(), positive=False)))

    def poke(word, strands, i, pos):
        return braid_closure(word[:pos] + [i, -i] + word[pos:], strands)

    pairs.append(("r2_trefoil", trefoil(), poke([1, 1, 1], 2, 1, 1)))
    pairs.append(("r2_trefoil_neg", trefoil(), poke([1, 1, 1], 2, -1, 2)))
    pairs.append(("r2_fig8", figure_eight(), poke([1, -2, 1, -2], 3, 2, 2)))
    pairs.append(("r2_t34", torus_link(3, 4), poke([1, 2] * 4, 3, -2, 3)))

    pairs.append((
        "r3_t33",
        braid_closure([1, 2, 1, 1, 2, 1, 2, 2], 3),
        braid_closure([2, 1, 2, 1, 2, 1, 2, 2], 3),
    ))
    pairs.append((
        "r3_mixed",
        braid_closure([1, 2, 1, -2, 1, 2], 3),
        braid_closure([2, 1, 2, -2, 1, 2], 3),
    ))
    return pairs


def connect_sum_examples() -> list[tuple[str, LinkDiagram]]:
    return [
        ("granny", connect_sum(trefoil(), trefoil())),
        ("square", connect_sum(trefoil(), trefoil(False))),
        ("tref_fig8", connect_sum(trefoil(), figure_eight())),
        ("fig8_fig8", connect_sum(figure_eight(), figure_eight())),
        ("hopf_tref", connect_sum(hopf(), trefoil())),
    ]


def split_examples() -> list[tuple[str, LinkDiagram]]:
    return [
        ("split_tref_tref", disjoint_union(trefoil(), trefoil())),
        ("split_tref_fig8", disjoint_union(trefoil(), figure_eight())),
        ("split_hopf_unknot", disjoint_union(hopf(), unknot_curl())),
    ]
