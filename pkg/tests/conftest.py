"""Shared generators and brute-force oracles.

The oracles enumerate subsets directly and never touch the tree DPs they
check.  Random graphs come from seeded Prüfer sequences so every run sees
the same sample.
"""

from __future__ import annotations

import itertools
import random

from quiverlink.forest import Forest, canonical_form, disjoint_union


def tree_from_pruefer(seq: list[int], n: int) -> Forest:
    if n == 1:
        return Forest.build([0], [])
    if n == 2:
        return Forest.build([0, 1], [(0, 1)])
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    import heapq

    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return Forest.build(range(n), edges)


def random_tree(rng: random.Random, n: int) -> Forest:
    if n <= 2:
        return tree_from_pruefer([], n)
    return tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)], n)


def random_forest(rng: random.Random, max_n: int, min_n: int = 1) -> Forest:
    total = rng.randint(min_n, max_n)
    out = Forest.build((), ())
    while total > 0:
        size = rng.randint(1, total)
        out = disjoint_union(out, random_tree(rng, size))
        total -= size
    return out


def all_trees_up_to_iso(n: int) -> list[Forest]:
    """Every unlabeled tree on n vertices, by leaf extension plus dedup."""
    if n == 1:
        return [Forest.build([0], [])]
    out: dict[tuple, Forest] = {}
    for t in all_trees_up_to_iso(n - 1):
        for v in t.vertices:
            grown = Forest.build(
                list(t.vertices) + [n - 1], list(t.edges) + [(v, n - 1)]
            )
            out.setdefault(canonical_form(grown), grown)
    return list(out.values())


# -- brute-force oracles ----------------------------------------------------


def _adj_masks(f: Forest) -> dict[int, int]:
    idx = {v: i for i, v in enumerate(f.vertices)}
    masks = {v: 0 for v in f.vertices}
    for u, v in f.edges:
        masks[u] |= 1 << idx[v]
        masks[v] |= 1 << idx[u]
    return {v: masks[v] for v in f.vertices}


def brute_independent_counts(f: Forest) -> list[int]:
    verts = list(f.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    masks = _adj_masks(f)
    counts = [0] * (len(verts) + 1)
    for subset in range(1 << len(verts)):
        ok = True
        for v in verts:
            if subset >> idx[v] & 1 and masks[v] & subset:
                ok = False
                break
        if ok:
            counts[bin(subset).count("1")] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def brute_matching_counts(f: Forest) -> list[int]:
    edges = list(f.edges)
    counts = [0] * (len(edges) + 1)
    for r in range(len(edges) + 1):
        for combo in itertools.combinations(edges, r):
            used = set()
            ok = True
            for u, v in combo:
                if u in used or v in used:
                    ok = False
                    break
                used.update((u, v))
            if ok:
                counts[r] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def parent_map(f: Forest, roots) -> dict[int, int | None]:
    adj = f.adjacency()
    parent: dict[int, int | None] = {}
    for r in roots:
        parent[r] = None
        stack = [r]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
    return parent


def brute_cij(f: Forest, roots=None) -> dict[tuple[int, int], int]:
    if roots is None:
        roots = f.canonical_roots()
    verts = list(f.vertices)
    idx = {v: i for i, v in enumerate(verts)}
    masks = _adj_masks(f)
    parent = parent_map(f, roots)
    table: dict[tuple[int, int], int] = {}
    for subset in range(1 << len(verts)):
        members = [v for v in verts if subset >> idx[v] & 1]
        if any(masks[v] & subset for v in members):
            continue
        parents = {parent[v] for v in members if parent[v] is not None}
        i, p = len(members), len(parents)
        table[(i, i - p)] = table.get((i, i - p), 0) + 1
    return table
