"""Forest data model and the counting machinery behind the closed formulas.

A forest is an undirected acyclic simple graph with integer vertex ids.
Edge orientations can be parsed and are stored, but no invariant in this
package depends on them; the polynomial of a quiver depends only on the
underlying graph.

Counters
--------
``independent_set_counts``   a_i = number of independent vertex sets of size i
``matching_counts``          b_i = number of i-edge matchings
``cij_table``                c[i,j] = number of size-i independent sets whose
                             rooted-parent count is i - j

Each counter has a tree dynamic program here and a brute-force subset
oracle in the test suite.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field


class ParseError(ValueError):
    """Malformed quiver specification text."""


class NotAForest(ValueError):
    """The described graph contains a cycle, loop or repeated edge."""


class UnknownVertex(ValueError):
    """An operation referenced a vertex id that is not in the forest."""


class InvalidRootSet(ValueError):
    """A root set must pick exactly one vertex in each component."""


def _norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Forest:
    """Undirected forest with optional stored edge orientations."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    orientations: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise NotAForest("repeated vertex id")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise NotAForest(f"self-loop at {u}")
            if (u, v) != _norm_edge(u, v):
                raise NotAForest("edges must be stored as (min, max) pairs")
            if (u, v) in seen:
                raise NotAForest(f"repeated edge {u}-{v}")
            if u not in vset or v not in vset:
                raise UnknownVertex(f"edge {u}-{v} uses an unregistered vertex")
            seen.add((u, v))
        for t, h in self.orientations:
            if _norm_edge(t, h) not in seen:
                raise NotAForest(f"orientation {t}->{h} without matching edge")
        if len(self.edges) != len(self.vertices) - self._count_components():
            raise NotAForest("graph contains a cycle")
        object.__setattr__(self, "vertices", tuple(sorted(self.vertices)))
        object.__setattr__(self, "edges", tuple(sorted(self.edges)))

    @classmethod
    def build(cls, vertices, edges, orientations=()) -> "Forest":
        return cls(
            tuple(sorted(set(vertices))),
            tuple(sorted({_norm_edge(u, v) for u, v in edges})),
            tuple(orientations),
        )

    # -- basic structure ------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    def adjacency(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for v in adj:
            adj[v].sort()
        return adj

    def _count_components(self) -> int:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen: set[int] = set()
        count = 0
        for v in self.vertices:
            if v in seen:
                continue
            count += 1
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
        return count

    def component_vertex_sets(self) -> list[tuple[int, ...]]:
        adj = self.adjacency()
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            stack, comp = [v], []
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(tuple(sorted(comp)))
        comps.sort(key=lambda c: c[0])
        return comps

    def components(self) -> list["Forest"]:
        """Connected components as forests, ordered by least contained id."""
        out = []
        for comp in self.component_vertex_sets():
            cset = set(comp)
            out.append(
                Forest(
                    comp,
                    tuple(e for e in self.edges if e[0] in cset),
                    tuple(o for o in self.orientations if o[0] in cset or o[1] in cset),
                )
            )
        return out

    def leaves(self) -> list[tuple[int, int]]:
        """Degree-1 vertices with their unique neighbors, ascending by leaf id."""
        adj = self.adjacency()
        return [(v, adj[v][0]) for v in self.vertices if len(adj[v]) == 1]

    def remove_vertices(self, vs) -> "Forest":
        """Induced subgraph on the complement; ids are preserved."""
        vs = set(vs)
        missing = vs - set(self.vertices)
        if missing:
            raise UnknownVertex(f"unknown vertex ids {sorted(missing)}")
        keep = [v for v in self.vertices if v not in vs]
        edges = tuple(e for e in self.edges if e[0] not in vs and e[1] not in vs)
        orient = tuple(o for o in self.orientations if o[0] not in vs and o[1] not in vs)
        return Forest(tuple(keep), edges, orient)

    def line_graph(self) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]]:
        """(vertices, edges) of the line graph; vertices are edge pairs of self."""
        verts = self.edges
        lg_edges = []
        for e1, e2 in itertools.combinations(verts, 2):
            if set(e1) & set(e2):
                lg_edges.append((e1, e2))
        return verts, tuple(lg_edges)

    def canonical_roots(self) -> tuple[int, ...]:
        """Least id in each component; the default root set."""
        return tuple(comp[0] for comp in self.component_vertex_sets())

    # -- counters ---------------------------------------------------------

    def independent_set_counts(self) -> list[int]:
        """a_i = number of independent vertex sets of size i."""
        result = [1]
        adj = self.adjacency()
        for comp in self.component_vertex_sets():
            result = _convolve(result, _indep_counts_tree(comp, adj))
        return result

    def matching_counts(self) -> list[int]:
        """b_i = number of ways to pick i pairwise disjoint edges."""
        result = [1]
        adj = self.adjacency()
        for comp in self.component_vertex_sets():
            result = _convolve(result, _matching_counts_tree(comp, adj))
        return result

    def cij_table(self, roots: tuple[int, ...] | None = None) -> "CoefficientTable":
        """Size/deficiency table of independent sets in the rooted forest.

        For an independent set I, the parent count p(I) is the number of
        vertices that are the parent of at least one member of I when each
        component hangs from its root; the entry c[|I|, |I| - p(I)] counts I.
        The table is root-independent; the default roots are canonical.
        """
        comps = self.component_vertex_sets()
        if roots is None:
            roots = tuple(c[0] for c in comps)
        if len(roots) != len(comps) or len(set(roots)) != len(roots):
            raise InvalidRootSet("need exactly one root per component")
        by_comp = {}
        for r in roots:
            owner = next((c for c in comps if r in c), None)
            if owner is None:
                raise InvalidRootSet(f"root {r} is not a vertex")
            if owner in by_comp:
                raise InvalidRootSet("two roots in one component")
            by_comp[owner] = r
        if len(by_comp) != len(comps):
            raise InvalidRootSet("a component has no root")
        adj = self.adjacency()
        table = {(0, 0): 1}
        for comp in comps:
            table = _bi_convolve(table, _cij_tree(comp, by_comp[comp], adj))
        return CoefficientTable(table, self.n)


@dataclass(frozen=True)
class CoefficientTable:
    """Map (size i, deficiency j) -> count, plus the ambient vertex count."""

    c: dict[tuple[int, int], int]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "c", {k: v for k, v in self.c.items() if v})

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.c.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, CoefficientTable):
            return NotImplemented
        return self.c == other.c and self.n == other.n

    def marginal_sizes(self) -> list[int]:
        """Sum over deficiency; recovers the independent-set counts a_i."""
        imax = max((i for i, _ in self.c), default=0)
        out = [0] * (imax + 1)
        for (i, _), v in self.c.items():
            out[i] += v
        return out

    def deficiency_zero(self) -> list[int]:
        """The c[i,0] column; equals the matching counts b_i."""
        imax = max((i for i, j in self.c if j == 0), default=0)
        return [self.c.get((i, 0), 0) for i in range(imax + 1)]


def _convolve(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _bi_convolve(p: dict, q: dict) -> dict:
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), a in p.items():
        for (i2, j2), b in q.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + a * b
    return out


def _children_order(comp, root, adj):
    """Iterative DFS order (parents before children) and the child lists."""
    parent = {root: None}
    order = [root]
    stack = [root]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in parent:
                parent[y] = x
                order.append(y)
                stack.append(y)
    children: dict[int, list[int]] = {v: [] for v in comp}
    for v in order[1:]:
        children[parent[v]].append(v)
    return order, children


def _indep_counts_tree(comp, adj) -> list[int]:
    root = comp[0]
    order, children = _children_order(comp, root, adj)
    with_v: dict[int, list[int]] = {}
    without_v: dict[int, list[int]] = {}
    for v in reversed(order):
        inc, out = [0, 1], [1]
        for c in children[v]:
            inc = _convolve(inc, without_v[c])
            out = _convolve(out, [a + b for a, b in _pad(with_v[c], without_v[c])])
        with_v[v], without_v[v] = inc, out
    total = [a + b for a, b in _pad(with_v[root], without_v[root])]
    return _trim(total)


def _matching_counts_tree(comp, adj) -> list[int]:
    root = comp[0]
    order, children = _children_order(comp, root, adj)
    free: dict[int, list[int]] = {}   # v not matched to any child
    used: dict[int, list[int]] = {}   # v matched to one child
    for v in reversed(order):
        f = [1]
        for c in children[v]:
            f = _convolve(f, [a + b for a, b in _pad(free[c], used[c])])
        u = [0]
        for c in children[v]:
            rest = [1]
            for c2 in children[v]:
                if c2 is not c:
                    rest = _convolve(rest, [a + b for a, b in _pad(free[c2], used[c2])])
            u = [a + b for a, b in _pad(u, _convolve([0, 1], _convolve(free[c], rest)))]
        free[v], used[v] = f, u
    return _trim([a + b for a, b in _pad(free[root], used[root])])


def _cij_tree(comp, root, adj) -> dict:
    """Bivariate DP over (set size, parent count) for one rooted tree.

    States per vertex: out0 = v not in I and no child of v in I;
    out1 = v not in I and some child in I (v is a parent, weight y);
    inn = v in I (children all out).  Keys are (x_exp, y_exp).
    """
    order, children = _children_order(comp, root, adj)
    out0: dict[int, dict] = {}
    out1: dict[int, dict] = {}
    inn: dict[int, dict] = {}
    for v in reversed(order):
        prod_out = {(0, 0): 1}
        prod_all = {(0, 0): 1}
        for c in children[v]:
            c_out = _bi_add(out0[c], out1[c])
            prod_out = _bi_convolve(prod_out, c_out)
            prod_all = _bi_convolve(prod_all, _bi_add(c_out, inn[c]))
        inn[v] = _bi_convolve({(1, 0): 1}, prod_out)
        out0[v] = prod_out
        out1[v] = _bi_convolve({(0, 1): 1}, _bi_sub(prod_all, prod_out))
    total = _bi_add(_bi_add(out0[root], out1[root]), inn[root])
    # reindex (size i, parents p) -> (i, j = i - p)
    table: dict[tuple[int, int], int] = {}
    for (i, p), v in total.items():
        if v:
            table[(i, i - p)] = table.get((i, i - p), 0) + v
    return table


def _bi_add(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


def _bi_sub(p: dict, q: dict) -> dict:
    out = dict(p)
    for k, v in q.items():
        out[k] = out.get(k, 0) - v
    return {k: v for k, v in out.items() if v}


def _pad(p: list[int], q: list[int]):
    n = max(len(p), len(q))
    return zip(p + [0] * (n - len(p)), q + [0] * (n - len(q)))


def _trim(p: list[int]) -> list[int]:
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


# -- parsing ---------------------------------------------------------------

_PRESET_RE = re.compile(r"^(A|D|S)(\d+)$|^(E)(6|7|8)$|^(T9)$")


def _preset(name: str) -> Forest:
    name = name.strip()
    m = _PRESET_RE.match(name)
    if not m:
        raise ParseError(f"unknown preset {name!r}")
    if m.group(5):  # T9: path 0-1-2-3-4, leaves 5,6 on 2 and 7,8 on 4
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5), (2, 6), (4, 7), (4, 8)]
        return Forest.build(range(9), edges)
    if m.group(3):  # E6/E7/E8: path plus a leaf on the third vertex
        n = int(m.group(4))
        edges = [(i, i + 1) for i in range(n - 2)] + [(2, n - 1)]
        return Forest.build(range(n), edges)
    kind, n = m.group(1), int(m.group(2))
    if kind == "A":
        return Forest.build(range(n), [(i, i + 1) for i in range(n - 1)])
    if kind == "S":
        if n < 1:
            raise ParseError("S presets need n >= 1")
        return Forest.build(range(n), [(0, i) for i in range(1, n)])
    # D_n: path 0..n-2 with an extra leaf on the second path vertex
    if n < 4:
        raise ParseError(f"D{n} is not defined; use A{n} for the path")
    edges = [(i, i + 1) for i in range(n - 2)] + [(1, n - 1)]
    return Forest.build(range(n), edges)


def parse_forest(spec: str) -> Forest:
    """Parse a preset expression or an edge-list description.

    Preset grammar: ``A<n> | D<n> | E6 | E7 | E8 | S<n> | T9`` combined
    with ``+`` (disjoint union with id offsetting).  Everything containing
    a newline, a ``>`` or a bare id pair is treated as an edge list: one
    edge per line as ``u v`` or ``u > v``, a single id on a line declares
    an isolated vertex, and ``#`` starts a comment line.
    """
    text = spec.strip()
    if not text:
        raise ParseError("empty specification")
    looks_like_edges = "\n" in text or ">" in text or re.match(r"^\s*\d", text)
    if not looks_like_edges:
        parts = [p.strip() for p in text.split("+")]
        if any(not p for p in parts):
            raise ParseError("empty operand in preset expression")
        result = Forest.build((), ())
        for p in parts:
            result = disjoint_union(result, _preset(p))
        return result
    vertices: set[int] = set()
    edges: list[tuple[int, int]] = []
    orientations: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = re.match(r"^(\d+)\s*>\s*(\d+)$", line)
        if m:
            u, v = int(m.group(1)), int(m.group(2))
            vertices.update((u, v))
            edges.append(_norm_edge(u, v))
            orientations.append((u, v))
            continue
        fields = line.split()
        if len(fields) == 1 and fields[0].isdigit():
            vertices.add(int(fields[0]))
            continue
        if len(fields) == 2 and all(f.isdigit() for f in fields):
            u, v = int(fields[0]), int(fields[1])
            vertices.update((u, v))
            edges.append(_norm_edge(u, v))
            continue
        raise ParseError(f"line {lineno}: cannot parse {raw!r}")
    if len(edges) != len(set(edges)):
        raise NotAForest("repeated edge in edge list")
    return Forest.build(vertices, edges, orientations)


def disjoint_union(left: Forest, right: Forest) -> Forest:
    """Disjoint union; the right operand's ids are shifted above the left's."""
    offset = (max(left.vertices) + 1) if left.vertices else 0
    verts = list(left.vertices) + [v + offset for v in right.vertices]
    edges = list(left.edges) + [(u + offset, v + offset) for u, v in right.edges]
    orient = list(left.orientations) + [(t + offset, h + offset) for t, h in right.orientations]
    return Forest.build(verts, edges, orient)


# -- canonical forms --------------------------------------------------------

def canonical_form(f: Forest, oriented: bool = False) -> tuple:
    """Isomorphism-invariant encoding of a forest.

    Trees are rooted at their centroid(s) and AHU-encoded; with
    ``oriented=True`` each child edge carries its arrow direction relative
    to the parent, so the encoding distinguishes orientations.
    """
    orient = {(_norm_edge(t, h)): (t, h) for t, h in f.orientations}
    adj = f.adjacency()

    def edge_flag(parent, child):
        if not oriented:
            return ""
        o = orient.get(_norm_edge(parent, child))
        if o is None:
            return "?"
        return ">" if o == (parent, child) else "<"

    def encode(v, parent):
        subs = sorted(edge_flag(v, c) + encode(c, v) for c in adj[v] if c != parent)
        return "(" + "".join(subs) + ")"

    def centroids(comp):
        cset = set(comp)
        size = {}
        order, children = _children_order(comp, comp[0], adj)
        for v in reversed(order):
            size[v] = 1 + sum(size[c] for c in children[v])
        n = len(comp)
        best, arg = None, []
        for v in comp:
            parts = [size[c] for c in children[v]] + ([n - size[v]] if v != comp[0] else [])
            w = max(parts) if parts else 0
            if best is None or w < best:
                best, arg = w, [v]
            elif w == best:
                arg.append(v)
        assert cset >= set(arg)
        return arg

    codes = []
    for comp in f.component_vertex_sets():
        codes.append(min(encode(r, None) for r in centroids(comp)))
    return tuple(sorted(codes))
