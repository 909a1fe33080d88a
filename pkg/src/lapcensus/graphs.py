"""Simple undirected graphs: validated construction, named families, join and
disjoint union, degree data, connectivity.

Vertices are dense integers 0..n-1.  Every builder documents its labeling so
small examples are reproducible.  All values are immutable after construction
and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: vertex count plus a sorted tuple of edges (u, v), u < v.

    Use make_graph() to build one from raw input; the constructor assumes the
    edge tuple is already normalized (deduplicated, endpoint-sorted, lexicographic).
    """

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbor bitmask per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        degs = [0] * self.n
        for u, v in self.edges:
            degs[u] += 1
            degs[v] += 1
        return tuple(degs)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Apply a vertex relabeling, perm[old] = new."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabeling is not a permutation of 0..n-1")
        edges = sorted(
            (perm[u], perm[v]) if perm[u] < perm[v] else (perm[v], perm[u])
            for u, v in self.edges
        )
        return Graph(self.n, tuple(edges))

    def __str__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def graph_from_adj(n: int, adj: Sequence[int]) -> Graph:
    """Build a Graph from neighbor bitmasks (assumed symmetric, loop-free)."""
    edges = []
    for v in range(n):
        m = adj[v] >> (v + 1)
        base = v + 1
        while m:
            low = m & -m
            edges.append((v, base + low.bit_length() - 1))
            m ^= low
    return Graph(n, tuple(edges))


def make_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate and normalize raw edge input into a Graph.

    Rejects out-of-range endpoints and self-loops, reporting the offending
    pair; duplicate edges (in either orientation) collapse to one.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for pair in edge_list:
        u, v = pair
        if u == v:
            raise ValueError(f"self-loop not allowed: {pair!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range 0..{n - 1}: {pair!r}")
        seen.add((u, v) if u < v else (v, u))
    return Graph(n, tuple(sorted(seen)))


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return make_graph(n, [])


def path_graph(n: int) -> Graph:
    """Path on vertices 0-1-...-(n-1)."""
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """Cycle 0-1-...-(n-1)-0; requires n >= 3."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


_BASIC = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "empty": empty_graph,
}


def build_basic(kind: str, n: int) -> Graph:
    """Build one of the basic families: path | cycle | complete | empty."""
    try:
        builder = _BASIC[kind]
    except KeyError:
        raise ValueError(f"unknown basic kind {kind!r}, expected one of {sorted(_BASIC)}")
    return builder(n)


@dataclass(frozen=True)
class ThetaSpec:
    """Parameters of a theta graph: cycles of lengths r <= s sharing a path on
    t vertices (t >= 1), or two disjoint cycles joined by a path with `bridge`
    internal vertices (t = 0).

    Validity: r, s >= 3; s >= r >= 2t - 2; bridge >= 0 and used only for t = 0.
    """

    r: int
    t: int
    s: int
    bridge: int = 0

    def __post_init__(self) -> None:
        if self.r < 3 or self.s < 3:
            raise ValueError(f"cycle lengths must be >= 3, got r={self.r}, s={self.s}")
        if self.t < 0:
            raise ValueError(f"shared-path size must be >= 0, got t={self.t}")
        if not (self.s >= self.r >= 2 * self.t - 2):
            raise ValueError(
                f"need s >= r >= 2t-2, got r={self.r}, t={self.t}, s={self.s}"
            )
        if self.t == 0:
            if self.bridge < 0:
                raise ValueError(f"bridge must be >= 0, got {self.bridge}")
        elif self.bridge != 0:
            raise ValueError("bridge is only meaningful when t = 0")

    @property
    def vertex_count(self) -> int:
        if self.t >= 1:
            return self.r + self.s - self.t
        return self.r + self.s + self.bridge


def build_theta(spec: ThetaSpec) -> Graph:
    """Construct the theta graph for a ThetaSpec.

    Labeling: for t >= 2 the shared path is 0..t-1, the r-side arc continues
    t..r-1, the s-side arc r..r+s-t-1.  For t = 1 the shared vertex is 0.
    For t = 0 the r-cycle is 0..r-1, the s-cycle r..r+s-1, and the connecting
    path runs from vertex 0 to vertex r through bridge internal vertices.
    """
    r, t, s, bridge = spec.r, spec.t, spec.s, spec.bridge
    edges: list[tuple[int, int]] = []
    if t >= 2:
        shared = list(range(t))
        arc_r = list(range(t, r))
        arc_s = list(range(r, r + s - t))
        edges += [(shared[i], shared[i + 1]) for i in range(t - 1)]
        for arc in (arc_r, arc_s):
            cyc = [shared[-1], *arc, shared[0]]
            edges += [(cyc[i], cyc[i + 1]) for i in range(len(cyc) - 1)]
    elif t == 1:
        hub = 0
        arc_r = list(range(1, r))
        arc_s = list(range(r, r + s - 1))
        for arc in (arc_r, arc_s):
            cyc = [hub, *arc, hub]
            edges += [(cyc[i], cyc[i + 1]) for i in range(len(cyc) - 1)]
    else:
        edges += [(i, (i + 1) % r) for i in range(r)]
        edges += [(r + i, r + (i + 1) % s) for i in range(s)]
        path = [0, *range(r + s, r + s + bridge), r]
        edges += [(path[i], path[i + 1]) for i in range(len(path) - 1)]
    return make_graph(spec.vertex_count, edges)


def lollipop(n: int, k: int) -> Graph:
    """Cycle 0..k-1 with a pendant path k, k+1, ..., n-1 hanging from vertex 0."""
    if k < 3 or n < k:
        raise ValueError(f"need n >= k >= 3, got n={n}, k={k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    tail = [0, *range(k, n)]
    edges += [(tail[i], tail[i + 1]) for i in range(len(tail) - 1)]
    return make_graph(n, edges)


def h_graph(n: int, q: int, n1: int, n2: int) -> Graph:
    """Cycle 0..q-1 with two hanging paths (lengths n1 and n2) attached at vertex 0."""
    if q < 3 or n1 < 1 or n2 < 1:
        raise ValueError(f"need q >= 3 and n1, n2 >= 1, got q={q}, n1={n1}, n2={n2}")
    if n != q + n1 + n2:
        raise ValueError(f"need n = q + n1 + n2, got n={n} != {q + n1 + n2}")
    edges = [(i, (i + 1) % q) for i in range(q)]
    p1 = [0, *range(q, q + n1)]
    p2 = [0, *range(q + n1, q + n1 + n2)]
    for p in (p1, p2):
        edges += [(p[i], p[i + 1]) for i in range(len(p) - 1)]
    return make_graph(n, edges)


def pendant_cycle(n: int, k: int) -> Graph:
    """Cycle 0..k-1 with n-k pendant vertices all attached to vertex 0."""
    if k < 3 or n < k:
        raise ValueError(f"need n >= k >= 3, got n={n}, k={k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(0, v) for v in range(k, n)]
    return make_graph(n, edges)


def h1_graph() -> Graph:
    """The 7-vertex join of 2 isolated vertices with (two disjoint edges + an isolated vertex)."""
    return join(empty_graph(2), disjoint_union(disjoint_union(path_graph(2), path_graph(2)), empty_graph(1)))


def h2_graph() -> Graph:
    """The 7-vertex join of 2 isolated vertices with (a 4-path + an isolated vertex)."""
    return join(empty_graph(2), disjoint_union(path_graph(4), empty_graph(1)))


def build_named(kind: str, *params: int) -> Graph:
    """Dispatch for the parameterized named families.

    kinds: lollipop(n, k) | h(n, q, n1, n2) | pendant_cycle(n, k) | h1 | h2
    """
    kind = kind.lower()
    if kind == "lollipop":
        return lollipop(*params)
    if kind == "h":
        return h_graph(*params)
    if kind == "pendant_cycle":
        return pendant_cycle(*params)
    if kind == "h1":
        return h1_graph()
    if kind == "h2":
        return h2_graph()
    raise ValueError(f"unknown named kind {kind!r}")


# ---------------------------------------------------------------------------
# Graph operations
# ---------------------------------------------------------------------------

def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Side-by-side union; b's vertex labels are shifted up by a.n."""
    shift = a.n
    edges = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
    return Graph(a.n + b.n, tuple(sorted(edges)))


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union plus all a.n * b.n edges between the two vertex sets."""
    shift = a.n
    edges = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
    edges += [(u, v + shift) for u in range(a.n) for v in range(b.n)]
    return Graph(a.n + b.n, tuple(sorted(edges)))


def repeated(g: Graph, copies: int) -> Graph:
    """Disjoint union of `copies` copies of g."""
    if copies < 0:
        raise ValueError(f"copy count must be >= 0, got {copies}")
    out = empty_graph(0)
    for _ in range(copies):
        out = disjoint_union(out, g)
    return out


def connected_components(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Component count and a per-vertex component labeling.

    Components are numbered 0, 1, ... in order of their smallest vertex.
    """
    labels = [-1] * g.n
    adj = g.adj
    count = 0
    for start in range(g.n):
        if labels[start] != -1:
            continue
        stack = [start]
        labels[start] = count
        while stack:
            v = stack.pop()
            m = adj[v]
            while m:
                low = m & -m
                u = low.bit_length() - 1
                m ^= low
                if labels[u] == -1:
                    labels[u] = count
                    stack.append(u)
        count += 1
    return count, tuple(labels)


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or connected_components(g)[0] == 1


@dataclass(frozen=True)
class DegreeProfile:
    """Per-vertex degree data: d(v), and d(v) + m(v) where m(v) is the average
    degree over v's neighbors (exact rational, defined only for d(v) >= 1).

    max_dm is None for edgeless graphs.
    """

    degrees: tuple[int, ...]
    max_degree: int
    dm_values: dict[int, Fraction]
    max_dm: Optional[Fraction]
    max_dm_vertex: Optional[int]


def degree_profile(g: Graph) -> DegreeProfile:
    degs = g.degrees
    dm: dict[int, Fraction] = {}
    for v in range(g.n):
        if degs[v] == 0:
            continue
        nbr_sum = sum(degs[u] for u in g.neighbors(v))
        dm[v] = degs[v] + Fraction(nbr_sum, degs[v])
    if dm:
        best_v = min(dm, key=lambda v: (-dm[v], v))
        best = dm[best_v]
    else:
        best_v = None
        best = None
    return DegreeProfile(
        degrees=degs,
        max_degree=max(degs, default=0),
        dm_values=dm,
        max_dm=best,
        max_dm_vertex=best_v,
    )


# ---------------------------------------------------------------------------
# Graph expressions (CLI / test convenience)
# ---------------------------------------------------------------------------

def parse_graph_expr(text: str) -> Graph:
    """Parse a small graph expression into a Graph.

    Grammar:  sum := prod ('+' prod)* ; prod := item ('*' item)* ;
    item := [INT] atom ; atom := Kn | Pn | Cn | En | H1 | H2 |
    theta(r,t,s[,bridge]) | lollipop(n,k) | hgraph(n,q,n1,n2) |
    pendant_cycle(n,k) | '(' sum ')'.

    '+' is disjoint union, '*' is join, and an integer prefix means that many
    disjoint copies, so "2K1*(2P2+K1)" builds the join of 2 isolated vertices
    with two disjoint edges plus an isolated vertex.
    """
    return _ExprParser(text).parse()


class _ExprParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def parse(self) -> Graph:
        g = self._sum()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ValueError(f"trailing input at offset {self.pos}: {self.text[self.pos:]!r}")
        return g

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _sum(self) -> Graph:
        g = self._prod()
        while self._peek() == "+":
            self.pos += 1
            g = disjoint_union(g, self._prod())
        return g

    def _prod(self) -> Graph:
        g = self._item()
        while self._peek() in "*x":
            self.pos += 1
            g = join(g, self._item())
        return g

    def _int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ValueError(f"expected integer at offset {start} in {self.text!r}")
        return int(self.text[start:self.pos])

    def _args(self) -> list[int]:
        if self._peek() != "(":
            raise ValueError(f"expected '(' at offset {self.pos} in {self.text!r}")
        self.pos += 1
        args = [self._int()]
        while self._peek() == ",":
            self.pos += 1
            self._skip_ws()
            args.append(self._int())
        if self._peek() != ")":
            raise ValueError(f"expected ')' at offset {self.pos} in {self.text!r}")
        self.pos += 1
        return args

    def _item(self) -> Graph:
        ch = self._peek()
        if ch.isdigit():
            copies = self._int()
            return repeated(self._atom(), copies)
        return self._atom()

    def _atom(self) -> Graph:
        self._skip_ws()
        ch = self._peek()
        if ch == "(":
            self.pos += 1
            g = self._sum()
            if self._peek() != ")":
                raise ValueError(f"expected ')' at offset {self.pos} in {self.text!r}")
            self.pos += 1
            return g
        for name, builder in (
            ("theta", lambda a: build_theta(ThetaSpec(*a))),
            ("lollipop", lambda a: lollipop(*a)),
            ("hgraph", lambda a: h_graph(*a)),
            ("pendant_cycle", lambda a: pendant_cycle(*a)),
        ):
            if self.text[self.pos:self.pos + len(name)].lower() == name:
                self.pos += len(name)
                return builder(self._args())
        if self.text[self.pos:self.pos + 2].upper() in ("H1", "H2"):
            tag = self.text[self.pos:self.pos + 2].upper()
            self.pos += 2
            return h1_graph() if tag == "H1" else h2_graph()
        if ch in "KPCE":
            self.pos += 1
            n = self._int()
            kind = {"K": "complete", "P": "path", "C": "cycle", "E": "empty"}[ch]
            return build_basic(kind, n)
        raise ValueError(f"cannot parse graph atom at offset {self.pos} in {self.text!r}")
