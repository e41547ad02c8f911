"""Oriented link diagrams given by PD codes.

A crossing ``[a, b, c, d]`` lists the four edge ends counterclockwise, starting
from the incoming lower strand; the lower strand runs ``a -> c``.  The crossing
is positive when the upper strand runs ``d -> b``.  Smoothing 0 joins
``(a, b)`` and ``(c, d)``; smoothing 1 joins ``(a, d)`` and ``(b, c)``.

Crossingless unknotted components ("free loops") cannot be written in a PD
code.  They are kept as a separate tuple of edge labels and are always drawn
counterclockwise in the unbounded region.

>>> D = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]")
>>> D.writhe, seifert_data(D)[0]
(-3, 2)
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from importlib import resources

from .errors import (
    EdgeLabelNotTwice,
    InconsistentOrientation,
    MalformedPD,
    MissingMarkedEdge,
    NonplanarPD,
    UnknownKnot,
)

# slot pairs joined by each smoothing
SMOOTHINGS = (((0, 1), (2, 3)), ((0, 3), (1, 2)))

IN, OUT = 0, 1


class Diagram:
    """An oriented link diagram.

    Parameters
    ----------
    crossings : sequence of 4-tuples of positive edge labels
    loops : labels of crossingless unknotted components
    marked_edge : optional base point for the reduced theory
    name : optional label used in reports
    """

    def __init__(self, crossings, loops=(), marked_edge=None, name=None):
        self.crossings = tuple(tuple(int(v) for v in x) for x in crossings)
        self.loops = tuple(int(v) for v in loops)
        self.name = name
        for x in self.crossings:
            if len(x) != 4:
                raise MalformedPD(f"crossing {list(x)} does not have four entries")
            if min(x) < 1:
                raise MalformedPD("edge labels must be positive integers")
        ends: dict[int, list] = {}
        for i, x in enumerate(self.crossings):
            for pos, e in enumerate(x):
                ends.setdefault(e, []).append((i, pos))
        for e, sl in ends.items():
            if len(sl) != 2:
                raise EdgeLabelNotTwice(f"edge {e} appears {len(sl)} times")
        for e in self.loops:
            if e in ends:
                raise MalformedPD(f"free loop label {e} is also used by a crossing")
        if len(set(self.loops)) != len(self.loops):
            raise MalformedPD("repeated free loop label")
        self.ends = ends
        self.edges = tuple(sorted(ends)) + tuple(sorted(self.loops))
        if marked_edge is not None and marked_edge not in ends and marked_edge not in self.loops:
            raise MissingMarkedEdge(f"marked edge {marked_edge} is not an edge of the diagram")
        self.marked_edge = marked_edge
        self._orient()
        self._faces()
        self._components()

    # -- derived data

    def _orient(self):
        roles: dict[tuple, int] = {}
        queue = []

        def assign(slot, role):
            old = roles.get(slot)
            if old is None:
                roles[slot] = role
                queue.append(slot)
            elif old != role:
                raise InconsistentOrientation(
                    f"edge end {slot} would need two directions")

        def propagate():
            while queue:
                x, pos = queue.pop()
                r = roles[(x, pos)]
                e = self.crossings[x][pos]
                for other in self.ends[e]:
                    if other != (x, pos):
                        assign(other, 1 - r)
                if pos % 2 == 1:
                    assign((x, 4 - pos), 1 - r)

        for i in range(len(self.crossings)):
            assign((i, 0), IN)
            assign((i, 2), OUT)
        propagate()
        for i, x in enumerate(self.crossings):
            if (i, 1) in roles:
                continue
            # over-strand never passes under anything: fall back on the
            # increasing-label rule
            b, d = x[1], x[3]
            if d == b + 1 or b > d + 1:
                assign((i, 1), IN)
            else:
                assign((i, 1), OUT)
            propagate()
        self.roles = roles
        self.tail = {}
        self.head = {}
        for slot, r in roles.items():
            e = self.crossings[slot[0]][slot[1]]
            (self.head if r == IN else self.tail)[e] = slot
        self.signs = tuple(1 if roles[(i, 3)] == IN else -1 for i in range(len(self.crossings)))

    def other_end(self, slot):
        x, pos = slot
        a, b = self.ends[self.crossings[x][pos]]
        return b if a == slot else a

    def _faces(self):
        n = len(self.crossings)
        face_of = {}
        faces = []
        for i in range(n):
            for pos in range(4):
                if (i, pos) in face_of:
                    continue
                k = len(faces)
                darts = []
                d = (i, pos)
                while d not in face_of:
                    face_of[d] = k
                    darts.append(d)
                    y, j = self.other_end(d)
                    d = (y, (j - 1) % 4)
                faces.append(tuple(darts))
        self.face_of_dart = face_of
        self.faces = tuple(faces)
        # planarity: V - E + F = 2 on every connected piece
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for sl in self.ends.values():
            a, b = find(sl[0][0]), find(sl[1][0])
            if a != b:
                parent[a] = b
        count_x: dict[int, int] = {}
        count_f: dict[int, int] = {}
        for i in range(n):
            count_x[find(i)] = count_x.get(find(i), 0) + 1
        for darts in faces:
            r = find(darts[0][0])
            count_f[r] = count_f.get(r, 0) + 1
        for r, nx in count_x.items():
            if count_f[r] != nx + 2:
                raise NonplanarPD(
                    f"{count_f[r]} faces for {nx} crossings; the PD code is not planar "
                    "with the counterclockwise convention")
        self.piece_of_crossing = tuple(find(i) for i in range(n))

    def _components(self):
        seen = set()
        comps = []
        for e in sorted(self.ends):
            if e in seen:
                continue
            comp = []
            cur = e
            while cur not in seen:
                seen.add(cur)
                comp.append(cur)
                x, pos = self.head[cur]
                cur = self.crossings[x][(pos + 2) % 4]
            comps.append(tuple(comp))
        for e in self.loops:
            comps.append((e,))
        self.components = tuple(comps)
        self.component_of = {e: k for k, comp in enumerate(comps) for e in comp}

    # -- simple properties

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_pos(self) -> int:
        return sum(1 for s in self.signs if s > 0)

    @property
    def n_neg(self) -> int:
        return sum(1 for s in self.signs if s < 0)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    def seifert_state(self) -> tuple:
        return tuple(0 if s > 0 else 1 for s in self.signs)

    def with_mark(self, edge) -> "Diagram":
        return Diagram(self.crossings, self.loops, edge, self.name)

    def with_name(self, name) -> "Diagram":
        return Diagram(self.crossings, self.loops, self.marked_edge, name)

    def pd(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, x)) + "]" for x in self.crossings) + "]"

    def __repr__(self):
        extra = f", loops={list(self.loops)}" if self.loops else ""
        mark = f", mark={self.marked_edge}" if self.marked_edge is not None else ""
        nm = f"{self.name}: " if self.name else ""
        return f"<Diagram {nm}{self.pd()}{extra}{mark}>"

    def __eq__(self, other):
        return (isinstance(other, Diagram) and self.crossings == other.crossings
                and self.loops == other.loops and self.marked_edge == other.marked_edge)

    def __hash__(self):
        return hash((self.crossings, self.loops, self.marked_edge))


# ---------------------------------------------------------------------------
# parsing


def parse_pd(text: str, name: str | None = None, marked_edge: int | None = None) -> Diagram:
    """Parse ``[[a,b,c,d],...]`` (whitespace-insensitive).  ``[]`` is the unknot."""
    s = re.sub(r"\s+", "", text)
    if s.startswith("PD"):
        s = s[2:]
    s = s.replace("X[", "[")
    try:
        data = json.loads(s)
    except (json.JSONDecodeError, ValueError):
        raise MalformedPD(f"cannot parse PD code {text!r}") from None
    if not isinstance(data, list) or not all(isinstance(x, list) for x in data):
        raise MalformedPD("a PD code is a list of 4-tuples")
    for x in data:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
            raise MalformedPD(f"non-integer entry in {x}")
    if not data:
        return Diagram((), loops=(1,), marked_edge=marked_edge, name=name)
    return Diagram(data, marked_edge=marked_edge, name=name)


def unknot(marked: bool = False) -> Diagram:
    return Diagram((), loops=(1,), marked_edge=1 if marked else None, name="0_1")


# ---------------------------------------------------------------------------
# resolutions


@dataclass(frozen=True)
class Resolution:
    state: tuple
    circles: tuple          # tuples of edge labels, ordered by smallest label
    circle_of_edge: dict

    def __len__(self):
        return len(self.circles)


def resolve(D: Diagram, u) -> Resolution:
    """Circles of the complete smoothing ``D(u)``."""
    u = tuple(u)
    if len(u) != D.n_crossings:
        raise ValueError("state length differs from the number of crossings")
    partner = {}
    for i, s in enumerate(u):
        for p, q in SMOOTHINGS[s]:
            partner[(i, p)] = (i, q)
            partner[(i, q)] = (i, p)
    seen = set()
    circles = []
    for e in sorted(D.ends):
        if e in seen:
            continue
        circ = []
        slot = D.ends[e][0]
        while True:
            e_cur = D.crossings[slot[0]][slot[1]]
            if e_cur in seen:
                break
            seen.add(e_cur)
            circ.append(e_cur)
            far = D.other_end(slot)
            slot = partner[far]
        circles.append(tuple(sorted(circ)))
    circles.extend((e,) for e in D.loops)
    circles.sort()
    circle_of = {e: k for k, c in enumerate(circles) for e in c}
    return Resolution(u, tuple(circles), circle_of)


def seifert_data(D: Diagram):
    """``(r, w, seifert_state)``."""
    s = D.seifert_state()
    return len(resolve(D, s)), D.writhe, s


# ---------------------------------------------------------------------------
# ab-coloring


@dataclass(frozen=True)
class ABColoring:
    resolution: Resolution
    color: dict              # circle index -> "a" | "b"
    outer_faces: tuple

    def of_edge(self, e) -> str:
        return self.color[self.resolution.circle_of_edge[e]]


def outer_face_default(D: Diagram, piece) -> int:
    best = None
    for k, darts in enumerate(D.faces):
        if D.piece_of_crossing[darts[0][0]] != piece:
            continue
        key = (-len(darts), min(D.crossings[x][p] for x, p in darts))
        if best is None or key < best[0]:
            best = (key, k)
    return best[1]


def ab_coloring(D: Diagram, outer=None) -> ABColoring:
    """Color the Seifert circles by the checkerboard rule.

    ``outer`` optionally maps a connected piece (see ``Diagram.piece_of_crossing``)
    to the index of the face taken as unbounded.
    """
    res = resolve(D, D.seifert_state())
    faces = D.faces
    parent = list(range(len(faces)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def corner(x, i):
        # face between slots i and i+1 of crossing x
        arriving = (x, (i + 1) % 4)
        y, j = D.other_end(arriving)
        return D.face_of_dart[(y, j)]

    for x, s in enumerate(D.seifert_state()):
        if s == 0:
            pairs = ((1, 3),)
        else:
            pairs = ((0, 2),)
        for i, j in pairs:
            a, b = find(corner(x, i)), find(corner(x, j))
            if a != b:
                parent[a] = b

    # left/right region of each Seifert circle
    left = {}
    right = {}
    for k, circ in enumerate(res.circles):
        e = circ[0]
        if e in D.loops:
            continue
        t = D.tail[e]
        h = D.head[e]
        left[k] = find(D.face_of_dart[t])
        right[k] = find(D.face_of_dart[h])
        if left[k] == right[k]:
            raise NonplanarPD("a Seifert circle has the same region on both sides")
    adj: dict[int, list] = {}
    for k in left:
        adj.setdefault(left[k], []).append(right[k])
        adj.setdefault(right[k], []).append(left[k])

    pieces = sorted(set(D.piece_of_crossing))
    outer = dict(outer or {})
    shade: dict[int, int] = {}   # region -> 0 white, 1 black
    outer_faces = []
    for piece in pieces:
        f = outer.get(piece)
        if f is None:
            f = outer_face_default(D, piece)
        outer_faces.append(f)
        start = find(f)
        shade[start] = 0
        stack = [start]
        while stack:
            r = stack.pop()
            for t in adj.get(r, ()):
                if t not in shade:
                    shade[t] = 1 - shade[r]
                    stack.append(t)
                elif shade[t] == shade[r]:
                    raise NonplanarPD("checkerboard shading of Seifert regions is inconsistent")
    color = {}
    for k, circ in enumerate(res.circles):
        if circ[0] in D.loops:
            color[k] = "a"
        else:
            color[k] = "a" if shade[left[k]] == 1 else "b"
    for x in range(D.n_crossings):
        cs = {res.circle_of_edge[e] for e in D.crossings[x]}
        if len(cs) != 2 or len({color[k] for k in cs}) != 2:
            raise NonplanarPD(f"crossing {x} does not join differently colored circles")
    return ABColoring(res, color, tuple(outer_faces))


# ---------------------------------------------------------------------------
# constructions


def renumber(D: Diagram, start_edge=None) -> Diagram:
    """Relabel edges consecutively along each component, following the orientation."""
    mapping = {}
    nxt = 1
    comps = list(D.components)
    if start_edge is not None:
        comps.sort(key=lambda c: (start_edge not in c, min(c)))
    for comp in comps:
        if len(comp) == 1 and comp[0] in D.loops:
            continue
        k = comp.index(start_edge) if start_edge in comp else comp.index(min(comp))
        for e in comp[k:] + comp[:k]:
            mapping[e] = nxt
            nxt += 1
    for e in D.loops:
        mapping[e] = nxt
        nxt += 1
    xs = [tuple(mapping[e] for e in x) for x in D.crossings]
    loops = tuple(mapping[e] for e in D.loops)
    mark = mapping.get(D.marked_edge) if D.marked_edge is not None else None
    return Diagram(xs, loops, mark, D.name)


def mirror(D: Diagram) -> Diagram:
    """Switch every crossing."""
    xs = []
    for (a, b, c, d), s in zip(D.crossings, D.signs):
        xs.append((d, a, b, c) if s > 0 else (b, c, d, a))
    name = None if D.name is None else f"m({D.name})"
    return Diagram(xs, D.loops, D.marked_edge, name)


def reverse(D: Diagram) -> Diagram:
    """Reverse the orientation of every component."""
    # relabel so that labels increase along the new direction
    mapping = {}
    for comp in D.components:
        if len(comp) == 1 and comp[0] in D.loops:
            mapping[comp[0]] = comp[0]
            continue
        labels = sorted(comp)
        seq = list(comp)
        rev = [seq[0]] + seq[1:][::-1]
        # edge seq[i] runs from crossing i to crossing i+1; reversed walk uses the
        # same edges in the opposite order
        for old, new in zip(rev, labels):
            mapping[old] = new
    xs = [tuple(mapping[e] for e in (c, d, a, b)) for (a, b, c, d) in D.crossings]
    mark = mapping.get(D.marked_edge) if D.marked_edge is not None else None
    name = None if D.name is None else f"r({D.name})"
    return Diagram(xs, D.loops, mark, name)


def connected_sum(D1: Diagram, D2: Diagram) -> Diagram:
    """Band sum along the two marked edges; the result is marked on the first one."""
    if D1.marked_edge is None or D2.marked_edge is None:
        raise MissingMarkedEdge("connected sum needs a marked edge on both diagrams")
    if not D1.crossings and D1.marked_edge in D1.loops and len(D1.loops) == 1:
        return D2
    if not D2.crossings and D2.marked_edge in D2.loops and len(D2.loops) == 1:
        return D1
    if D1.marked_edge in D1.loops or D2.marked_edge in D2.loops:
        raise MissingMarkedEdge("the marked edge of a summand must pass through a crossing")
    off = max(D1.edges)
    xs1 = [list(x) for x in D1.crossings]
    xs2 = [[e + off for e in x] for x in D2.crossings]
    loops = D1.loops + tuple(e + off for e in D2.loops)
    e1 = D1.marked_edge
    e2 = D2.marked_edge + off
    h1x, h1p = D1.head[e1]
    h2x, h2p = D2.head[D2.marked_edge]
    # swap the incoming ends: e1 now runs into D2 and e2 back into D1
    xs1[h1x][h1p] = e2
    xs2[h2x][h2p] = e1
    name = None
    if D1.name and D2.name:
        name = f"{D1.name}#{D2.name}"
    D = Diagram(xs1 + xs2, loops, e1, name)
    return renumber(D, start_edge=e1)


def add_pointed_unknot(D: Diagram) -> Diagram:
    """Disjoint union with a marked crossingless circle (drawn counterclockwise)."""
    e = max(D.edges) + 1
    name = None if D.name is None else f"{D.name}+"
    return Diagram(D.crossings, D.loops + (e,), e, name)


def disjoint_union(D1: Diagram, D2: Diagram) -> Diagram:
    off = max(D1.edges)
    xs = list(D1.crossings) + [tuple(e + off for e in x) for x in D2.crossings]
    loops = D1.loops + tuple(e + off for e in D2.loops)
    return Diagram(xs, loops, D1.marked_edge, None)


# ---------------------------------------------------------------------------
# built-in knot table


_TABLE: dict[str, str] | None = None


def _table() -> dict[str, str]:
    global _TABLE
    if _TABLE is None:
        text = resources.files("khss").joinpath("data/knots.tsv").read_text()
        t = {}
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            name, pd = line.split("\t")
            t[name.lower()] = (name, pd)
        _TABLE = t
    return _TABLE


def knot_names() -> list[str]:
    return [v[0] for v in _table().values()]


def knot(name: str) -> Diagram:
    """Diagram of a prime knot with at most 8 crossings, by Rolfsen name (``"3_1"``)."""
    key = name.strip().lower()
    if key in ("0_1", "unknot"):
        return unknot()
    try:
        nm, pd = _table()[key]
    except KeyError:
        raise UnknownKnot(f"unknown knot name {name!r}") from None
    return parse_pd(pd, name=nm)


def resolve_target(text: str) -> Diagram:
    """A knot name or a PD code."""
    s = text.strip()
    if s.startswith("[") or s.startswith("PD"):
        return parse_pd(s)
    return knot(s)
