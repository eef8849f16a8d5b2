"""Planar diagram codes for oriented link diagrams.

A diagram with n crossings is given by n tokens X[a,b,c,d].  The convention
used throughout:

  * a, b, c, d are the four edge labels around the crossing, listed
    counterclockwise starting from the incoming under-strand.  The
    under-strand therefore runs a -> c, and the over-strand occupies the
    b and d positions.
  * Edge labels are arbitrary positive integers; each label must occur
    exactly twice over the whole code.  Labels are normalized on parse to
    0..2n-1 preserving their sorted order, and the original names are kept
    for display.
  * The over-strand direction is recovered by propagating the constraint
    that every edge has exactly one head and one tail.  A component that
    passes over at every one of its crossings is not constrained by this,
    and its direction is then read from the labels: the over-strand runs
    d -> b when b = d + 1, or when the gap |b - d| > 1 indicates the
    wraparound point of that component's label block.
  * A crossing is positive when its over-strand runs d -> b, i.e. crosses
    the under-strand left to right when viewed along the under direction.

With this convention the 0-smoothing of any crossing joins a-b and c-d,
the 1-smoothing joins a-d and b-c, and the 0-smoothing of a positive
crossing is its oriented smoothing.

One edge of the diagram is marked (a basepoint on the link lies on it).
Batch files hold one diagram per line as "name: X[...] X[...] [mark=e]".
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

__all__ = [
    "Crossing",
    "LinkDiagram",
    "MalformedToken",
    "EdgeDegree",
    "NonSpherical",
    "DegenerateCrossing",
    "parse_pd",
    "parse_batch",
    "crossing_signs",
    "mirror",
    "connect_sum",
    "smooth_crossing",
    "reverse_component",
]


class MalformedToken(ValueError):
    """The PD text does not match the X[a,b,c,d] grammar."""


class EdgeDegree(ValueError):
    """An edge label fails the two-occurrence rule or orientations clash."""


class NonSpherical(ValueError):
    """Face count violates Euler's formula; the code is not planar."""


class DegenerateCrossing(ValueError):
    """Smoothing this crossing leaves a circle no PD code can carry."""


Crossing = tuple[int, int, int, int]

_TOKEN_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]")
_MARK_RE = re.compile(r"mark\s*=\s*(\d+)")


class LinkDiagram:
    """An oriented link diagram with a marked edge.

    Attributes of interest:
      crossings      tuple of X-tuples with normalized edge ids 0..2n-1
      edge_names     original label for each normalized edge id
      head, tail     per edge, the (crossing, slot) where it ends / starts
      signs          +1 or -1 per crossing
      components     tuple of edge-id tuples, one per link component
      marked_edge    normalized id of the marked edge
      is_connected   whether the underlying 4-valent graph is connected
    """

    def __init__(
        self,
        crossings: Sequence[Crossing],
        marked: int | None = None,
        names: Sequence[int] | None = None,
    ):
        if not crossings:
            raise MalformedToken(
                "empty diagram: a crossingless circle is not representable; "
                "use a one-crossing curl such as X[1,1,2,2]"
            )
        self.n = len(crossings)
        raw = [tuple(int(x) for x in c) for c in crossings]

        occurrences: dict[int, list[tuple[int, int]]] = {}
        for k, tup in enumerate(raw):
            if len(tup) != 4:
                raise MalformedToken(f"crossing {k} does not have 4 edges")
            for s, e in enumerate(tup):
                occurrences.setdefault(e, []).append((k, s))
        for e, occ in occurrences.items():
            if len(occ) != 2:
                raise EdgeDegree(f"edge {e} occurs {len(occ)} times, expected 2")
        if len(occurrences) != 2 * self.n:
            raise EdgeDegree(
                f"{len(occurrences)} edge labels for {self.n} crossings, "
                f"expected {2 * self.n}"
            )

        order = sorted(occurrences)
        rename = {e: i for i, e in enumerate(order)}
        self.edge_names: tuple[int, ...] = tuple(order)
        if names is not None:
            if len(names) != len(order):
                raise ValueError("names length mismatch")
            self.edge_names = tuple(names)
        self.crossings: tuple[Crossing, ...] = tuple(
            tuple(rename[e] for e in tup) for tup in raw
        )
        self.n_edges = 2 * self.n
        self.occurrences: dict[int, tuple[tuple[int, int], tuple[int, int]]] = {}
        for k, tup in enumerate(self.crossings):
            for s, e in enumerate(tup):
                self.occurrences.setdefault(e, [])
                self.occurrences[e].append((k, s))
        self.occurrences = {e: tuple(v) for e, v in self.occurrences.items()}

        self._orient(raw, rename)
        self._trace_components()
        self._check_connectivity()

        if marked is None:
            self.marked_edge = 0
        else:
            if marked not in rename:
                raise MalformedToken(f"marked edge {marked} not present")
            self.marked_edge = rename[marked]

    # -- orientation ----------------------------------------------------

    def _orient(self, raw: list[Crossing], rename: dict[int, int]) -> None:
        head: dict[int, tuple[int, int]] = {}
        tail: dict[int, tuple[int, int]] = {}

        def set_head(e: int, pos: tuple[int, int]) -> None:
            if e in head and head[e] != pos:
                raise EdgeDegree(f"edge {self.edge_names[e]} has two heads")
            head[e] = pos

        def set_tail(e: int, pos: tuple[int, int]) -> None:
            if e in tail and tail[e] != pos:
                raise EdgeDegree(f"edge {self.edge_names[e]} has two tails")
            tail[e] = pos

        for k, tup in enumerate(self.crossings):
            set_head(tup[0], (k, 0))
            set_tail(tup[2], (k, 2))

        # Propagate through over-strands: a crossing's b and d slots take
        # complementary roles, and every edge needs one head and one tail.
        resolved = [False] * self.n

        def assign_over(k: int, in_slot: int) -> None:
            out_slot = in_slot ^ 2
            resolved[k] = True
            set_head(self.crossings[k][in_slot], (k, in_slot))
            set_tail(self.crossings[k][out_slot], (k, out_slot))

        changed = True
        while changed:
            changed = False
            for k, tup in enumerate(self.crossings):
                if resolved[k]:
                    continue
                b, d = tup[1], tup[3]
                if b in head and head[b] != (k, 1) or d in tail and tail[d] != (k, 3):
                    assign_over(k, 3)
                    changed = True
                elif d in head and head[d] != (k, 3) or b in tail and tail[b] != (k, 1):
                    assign_over(k, 1)
                    changed = True

        # Components passing over at all their crossings: fall back to the
        # label convention, then propagate again.
        for k in range(self.n):
            if resolved[k]:
                continue
            bname = raw[k][1]
            dname = raw[k][3]
            if bname == dname + 1 or dname - bname > 1:
                assign_over(k, 3)
            else:
                assign_over(k, 1)
            changed = True
            while changed:
                changed = False
                for j, tup in enumerate(self.crossings):
                    if resolved[j]:
                        continue
                    b, d = tup[1], tup[3]
                    if b in head and head[b] != (j, 1) or d in tail and tail[d] != (j, 3):
                        assign_over(j, 3)
                        changed = True
                    elif d in head and head[d] != (j, 3) or b in tail and tail[b] != (j, 1):
                        assign_over(j, 1)
                        changed = True

        for e in range(self.n_edges):
            if e not in head or e not in tail:
                raise EdgeDegree(
                    f"edge {self.edge_names[e]} lacks a consistent orientation"
                )
        self.head = head
        self.tail = tail
        self.signs: tuple[int, ...] = tuple(
            +1 if head[self.crossings[k][3]] == (k, 3) else -1 for k in range(self.n)
        )
        self.n_plus = sum(1 for s in self.signs if s > 0)
        self.n_minus = self.n - self.n_plus

    # -- components and connectivity -------------------------------------

    def successor(self, e: int) -> int:
        """The next edge along the strand, following orientation."""
        k, s = self.head[e]
        return self.crossings[k][s ^ 2]

    def _trace_components(self) -> None:
        seen: set[int] = set()
        comps: list[tuple[int, ...]] = []
        for e0 in range(self.n_edges):
            if e0 in seen:
                continue
            cycle = []
            e = e0
            while e not in seen:
                seen.add(e)
                cycle.append(e)
                e = self.successor(e)
            comps.append(tuple(cycle))
        self.components = tuple(comps)
        self.n_components = len(comps)
        self.component_of = {}
        for i, comp in enumerate(comps):
            for e in comp:
                self.component_of[e] = i

    def _check_connectivity(self) -> None:
        adj: dict[int, set[int]] = {k: set() for k in range(self.n)}
        for e in range(self.n_edges):
            (k1, _), (k2, _) = self.occurrences[e]
            adj[k1].add(k2)
            adj[k2].add(k1)
        seen = {0}
        stack = [0]
        while stack:
            k = stack.pop()
            for j in adj[k]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        self.is_connected = len(seen) == self.n

    # -- derived data -----------------------------------------------------

    def with_marked(self, marked_norm: int) -> "LinkDiagram":
        """Same diagram, marked at another (normalized) edge id.

        A field copy, not a reparse: orientations of components that never
        pass under are a convention, and remarking must not disturb them.
        """
        if not 0 <= marked_norm < self.n_edges:
            raise MalformedToken(f"marked edge {marked_norm} out of range")
        d = object.__new__(LinkDiagram)
        d.__dict__.update(self.__dict__)
        d.marked_edge = marked_norm
        return d

    def writhe(self) -> int:
        return self.n_plus - self.n_minus

    def is_alternating(self) -> bool:
        """True when every edge has one over end and one under end."""
        for e in range(self.n_edges):
            slots = {s % 2 for (_, s) in self.occurrences[e]}
            if slots != {0, 1}:
                return False
        return True

    def pd_string(self, with_mark: bool = True) -> str:
        toks = " ".join(
            "X[{},{},{},{}]".format(*(self.edge_names[e] for e in tup))
            for tup in self.crossings
        )
        if with_mark:
            toks += f" mark={self.edge_names[self.marked_edge]}"
        return toks

    def __repr__(self) -> str:
        return f"<LinkDiagram n={self.n} comps={self.n_components}>"


def parse_pd(text: str) -> LinkDiagram:
    """Parse one PD code string, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"."""
    tokens = _TOKEN_RE.findall(text)
    stripped = _TOKEN_RE.sub("", text)
    stripped = _MARK_RE.sub("", stripped)
    leftover = re.sub(r"[\s,;]+", "", stripped)
    leftover = leftover.replace("PD[", "").replace("]", "")
    if leftover:
        raise MalformedToken(f"unrecognized text in PD code: {leftover!r}")
    if not tokens:
        raise MalformedToken("no X[a,b,c,d] tokens found")
    mark_m = _MARK_RE.search(text)
    marked = int(mark_m.group(1)) if mark_m else None
    crossings = [tuple(int(x) for x in tok) for tok in tokens]
    return LinkDiagram(crossings, marked=marked)


def parse_batch(text: str) -> list[tuple[str, LinkDiagram]]:
    """Parse a batch file: one "name: <pd code>" per line.

    Blank lines and lines starting with '#' are skipped.
    """
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, sep, code = line.partition(":")
        if not sep:
            name, code = f"line{lineno}", line
        try:
            out.append((name.strip(), parse_pd(code)))
        except (MalformedToken, EdgeDegree) as exc:
            raise type(exc)(f"line {lineno} ({name.strip()}): {exc}") from exc
    return out


def crossing_signs(d: LinkDiagram) -> tuple[int, int]:
    """(n_plus, n_minus) for the diagram."""
    return d.n_plus, d.n_minus


def mirror(d: LinkDiagram) -> LinkDiagram:
    """Swap over and under strands at every crossing.

    The projection and hence the face structure is unchanged; every
    crossing sign flips.  Tuples are rotated so the first entry is again
    the incoming under-strand.
    """
    new: list[Crossing] = []
    for k, (a, b, c, dd) in enumerate(d.crossings):
        if d.signs[k] > 0:
            new.append((dd, a, b, c))
        else:
            new.append((b, c, dd, a))
    names = d.edge_names
    md = LinkDiagram([tuple(names[e] for e in tup) for tup in new],
                     marked=names[d.marked_edge])
    return md


def connect_sum(d1: LinkDiagram, d2: LinkDiagram, e1: int | None = None,
                e2: int | None = None) -> LinkDiagram:
    """Splice d2 into d1 along the edges e1, e2 (defaults: marked edges).

    Both edges are cut and the four ends rejoined respecting orientation,
    so the result is the connected sum along the marked components.  The
    marked edge of the result is the splice arc leaving d1.
    """
    e1 = d1.marked_edge if e1 is None else e1
    e2 = d2.marked_edge if e2 is None else e2

    off = d1.n_edges + 2  # shift for d2's labels; 2 fresh labels first
    arc_a = d1.n_edges      # tail(e1) -> head(e2)
    arc_b = d1.n_edges + 1  # tail(e2) -> head(e1)

    tuples = [list(tup) for tup in d1.crossings]
    tk, ts = d1.tail[e1]
    hk, hs = d1.head[e1]
    tuples[tk][ts] = arc_a
    tuples[hk][hs] = arc_b

    tuples2 = [[e + off for e in tup] for tup in d2.crossings]
    tk2, ts2 = d2.tail[e2]
    hk2, hs2 = d2.head[e2]
    tuples2[tk2][ts2] = arc_b
    tuples2[hk2][hs2] = arc_a

    all_tuples = [tuple(t) for t in tuples] + [tuple(t) for t in tuples2]
    return LinkDiagram(all_tuples, marked=arc_a)


def reverse_component(d: LinkDiagram, component: int) -> LinkDiagram:
    """Reverse the orientation of one link component.

    Tuples whose under-strand belongs to the component rotate by two
    slots; crossings where it only runs over pick up their new sign from
    the re-derived orientation.
    """
    edges = set(d.components[component])
    tuples = []
    for tup in d.crossings:
        if tup[0] in edges:
            tup = tup[2:] + tup[:2]
        tuples.append(tup)
    return LinkDiagram(tuples, marked=d.marked_edge)


def smooth_crossing(d: LinkDiagram, c: int, which: int) -> LinkDiagram:
    """Replace crossing c by its 0- or 1-smoothing.

    The 0-smoothing joins slots (0,1) and (2,3), the 1-smoothing
    (0,3) and (1,2).  Edges meeting at the erased crossing fuse, and
    under-strand tuples are rotated wherever the re-routed component now
    runs through a crossing backwards, so the result is again a valid
    code.  DegenerateCrossing if a crossingless circle appears: such a
    component has no PD representation.
    """
    if not 0 <= c < d.n:
        raise ValueError(f"no crossing {c}")
    if which not in (0, 1):
        raise ValueError("smoothing must be 0 or 1")
    if d.n == 1:
        raise DegenerateCrossing("smoothing the only crossing leaves no code")
    pairs = ((0, 1), (2, 3)) if which == 0 else ((0, 3), (1, 2))

    parent: dict[int, int] = {e: e for e in range(d.n_edges)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s1, s2 in pairs:
        e1, e2 = d.crossings[c][s1], d.crossings[c][s2]
        r1, r2 = find(e1), find(e2)
        if r1 == r2:
            raise DegenerateCrossing(
                f"smoothing crossing {c} closes a crossingless circle"
            )
        parent[r1] = r2

    # Trace the re-routed strands, recording each edge's travel direction.
    arc_partner = {}
    for s1, s2 in pairs:
        arc_partner[s1] = s2
        arc_partner[s2] = s1
    direction: dict[int, bool] = {}
    seeds = [d.marked_edge] + [e for e in range(d.n_edges) if e != d.marked_edge]
    components: list[list[int]] = []
    for e0 in seeds:
        if e0 in direction:
            continue
        comp = []
        e, fwd = e0, True
        while True:
            direction[e] = fwd
            comp.append(e)
            k, s = d.head[e] if fwd else d.tail[e]
            exit_slot = arc_partner[s] if k == c else s ^ 2
            e_next = d.crossings[k][exit_slot]
            fwd = d.tail[e_next] == (k, exit_slot)
            if e_next == e0:
                break
            if e_next in direction:
                raise AssertionError("strand trace revisited an edge")
            e = e_next
        components.append(comp)

    for comp in components:
        if all(
            d.head[e][0] == c and d.tail[e][0] == c for e in comp
        ):
            raise DegenerateCrossing(
                f"smoothing crossing {c} splits off a crossingless circle"
            )

    new_tuples = []
    for k in range(d.n):
        if k == c:
            continue
        tup = d.crossings[k]
        if not direction[tup[0]]:
            tup = tup[2:] + tup[:2]
        new_tuples.append(tuple(find(e) for e in tup))
    return LinkDiagram(new_tuples, marked=find(d.marked_edge))
