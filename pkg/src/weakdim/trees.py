"""Tree structure analysis: threads, root vertices, and constructive bases.

A thread is a pendant path hanging at a vertex of degree >= 3: its
interior vertices have degree 2 and its tip is a leaf. Vertices with at
least two threads are root vertices. The quantity
``kappa_star = min over roots of 2*(l1 + l2)`` (two shortest thread
lengths) controls the largest feasible threshold on a tree: it equals
min(n, kappa_star) for non-path trees, and the minimum is below n only
for spiders with exactly three threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import KaboveKappa, NotATree, ParameterOutOfRange, SameVertex, WrongTreeClass
from .graph import Graph


@dataclass(frozen=True)
class Thread:
    """Pendant path at a root: vertices ordered from the root outward."""

    root: int
    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def tip(self) -> int:
        return self.vertices[-1]


@dataclass(frozen=True, eq=False)
class TreeShape:
    """Decomposition of a tree into roots and their hanging threads.

    ``threads[v]`` is sorted by (length, tip id), so threads[v][0] is a
    shortest thread at v. ``kappa_star`` is None exactly for paths.
    """

    n: int
    roots: tuple[int, ...]
    threads: dict[int, tuple[Thread, ...]]
    kappa_star: int | None
    is_path: bool
    is_spider3: bool

    def thread_lengths(self, root: int) -> tuple[int, ...]:
        return tuple(t.length for t in self.threads[root])


def decompose_tree(g: Graph) -> TreeShape:
    """Find all root vertices of a tree and their threads."""
    if g.edge_count != g.n - 1:
        raise NotATree(f"m={g.edge_count} but a tree on n={g.n} needs n-1 edges")
    deg = [g.degree(v) for v in range(g.n)]
    threads: dict[int, tuple[Thread, ...]] = {}
    for v in range(g.n):
        if deg[v] < 3:
            continue
        found = []
        for start in g.adjacency[v]:
            seq = [start]
            prev, cur = v, start
            while deg[cur] == 2:
                nxt = next(w for w in g.adjacency[cur] if w != prev)
                seq.append(nxt)
                prev, cur = cur, nxt
            if deg[cur] == 1:
                found.append(Thread(v, tuple(seq)))
        if len(found) >= 2:
            found.sort(key=lambda t: (t.length, t.tip))
            threads[v] = tuple(found)
    roots = tuple(sorted(threads))
    kappa_star = None
    if roots:
        kappa_star = min(
            2 * (threads[v][0].length + threads[v][1].length) for v in roots
        )
    is_path = all(d <= 2 for d in deg)
    is_spider3 = len(roots) == 1 and not is_path and len(threads[roots[0]]) == 3
    return TreeShape(
        n=g.n,
        roots=roots,
        threads=threads,
        kappa_star=kappa_star,
        is_path=is_path,
        is_spider3=is_spider3,
    )


def root_basis_size(ell: int, l1: int, k: int) -> int:
    """Number of basis vertices contributed by a root with ``ell`` threads
    whose shortest has length ``l1``."""
    quarter = -(-k // 4)
    if quarter <= l1:
        if k % 4 in (1, 2):
            return quarter * ell - 1
        return quarter * ell
    half = -(-k // 2)
    return l1 + (ell - 1) * (half - l1)


def _root_slice(threads: tuple[Thread, ...], k: int) -> list[int]:
    """Basis vertices taken from one root's threads.

    Thread depth counts are balanced so every pair of threads at the
    root keeps at least ceil(k/2) selected vertices: ceil(k/4) per
    thread when the shortest thread is deep enough (dropping one vertex
    of the shortest thread when 2*ceil(k/4) overshoots), otherwise the
    whole shortest thread plus ceil(k/2) - l1 from each other thread.
    """
    l1 = threads[0].length
    quarter = -(-k // 4)
    picked: list[int] = []
    if quarter <= l1:
        for t in threads:
            picked.extend(t.vertices[:quarter])
        if k % 4 in (1, 2):
            picked.remove(threads[0].vertices[quarter - 1])
    else:
        half = -(-k // 2)
        picked.extend(threads[0].vertices)
        for t in threads[1:]:
            picked.extend(t.vertices[: half - l1])
    return picked


def tree_basis(g: Graph, shape: TreeShape, k: int) -> tuple[int, ...]:
    """Constructive weak k-metric basis of a tree that is neither a path
    nor a three-thread spider: the union of per-root slices."""
    if shape.is_path or shape.is_spider3:
        raise WrongTreeClass("construction needs a tree with >= 4 thread-pairs structure")
    if not 1 <= k <= shape.kappa_star:
        raise KaboveKappa(k, shape.kappa_star)
    picked: list[int] = []
    for v in shape.roots:
        picked.extend(_root_slice(shape.threads[v], k))
    return tuple(sorted(picked))


def spider3_basis(g: Graph, shape: TreeShape, k: int) -> tuple[int, ...]:
    """Basis of a three-thread spider for 2 <= k <= kappa: the first k
    vertices in round-robin order over the threads (root last)."""
    if not shape.is_spider3:
        raise WrongTreeClass("graph is not a spider with exactly three threads")
    kappa = min(shape.n, shape.kappa_star)
    if k == 1:
        raise ParameterOutOfRange(
            "k=1 needs a classical basis of size 2; use the exact solver"
        )
    if not 2 <= k <= kappa:
        raise KaboveKappa(k, kappa)
    root = shape.roots[0]
    threads = shape.threads[root]
    order: list[int] = []
    for depth in range(max(t.length for t in threads)):
        for t in threads:
            if depth < t.length:
                order.append(t.vertices[depth])
    order.append(root)
    return tuple(sorted(order[:k]))


def _tree_path(g: Graph, x: int, y: int) -> list[int]:
    parent = {x: None}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if u == y:
            break
        for w in g.adjacency[u]:
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = [y]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def delta_tree_pair(g: Graph, x: int, y: int, S) -> int:
    """delta_S(x, y) on a tree via path-component decomposition.

    Removing the edges of the x-y path splits the tree into components
    T_0..T_d anchored at the path vertices; a probe in T_i contributes
    |d - 2i|. Works directly on the adjacency, independent of the
    distance matrix, so it serves as a second method for cross-checks.
    """
    if g.edge_count != g.n - 1:
        raise NotATree(f"m={g.edge_count} but a tree on n={g.n} needs n-1 edges")
    if x == y:
        raise SameVertex(f"x and y must differ, got {x}")
    path = _tree_path(g, x, y)
    d = len(path) - 1
    on_path = {v: i for i, v in enumerate(path)}
    members = set(S)
    total = 0
    for i, anchor in enumerate(path):
        weight = abs(d - 2 * i)
        if weight == 0:
            continue
        count = 1 if anchor in members else 0
        stack = [anchor]
        seen = {anchor}
        while stack:
            u = stack.pop()
            for w in g.adjacency[u]:
                if w in seen:
                    continue
                if u == anchor and w in on_path and abs(on_path[w] - i) == 1:
                    continue  # a path edge, not part of T_i
                seen.add(w)
                stack.append(w)
                if w in members:
                    count += 1
        total += weight * count
    return total
