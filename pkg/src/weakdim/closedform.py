"""Closed-form kappa and weak k-metric dimension values for solved families.

Covered: paths, cycles (n >= 5 for dimension values), stars (n >= 5),
complete and complete-bipartite graphs, arbitrary trees (via thread
decomposition), and grids. Boundary parameters the formulas exclude
(star on 4 vertices, cycles on 3 or 4, one-sided complete bipartite)
raise ``FormulaNotCovered`` and are expected to be solver-routed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FormulaNotCovered, KaboveKappa, NotATree, ParameterOutOfRange
from .families import FamilySpec, star
from .graph import Graph
from .trees import TreeShape, decompose_tree, root_basis_size, spider3_basis, tree_basis


@dataclass(frozen=True)
class KappaFormula:
    value: int
    witness: str


@dataclass(frozen=True)
class GridBorderLabeling:
    """Border vertices of a q x r grid ranked 1..2q+2r-4.

    The long sides come first, row by row as (i,1), (i,r); then the two
    short sides column by column as (1,j), (q,j) for 1 < j < r. The
    basis for threshold k is the first 2*ceil(k/2) vertices.
    """

    q: int
    r: int
    order: tuple[int, ...]


def _shape_for(g: Graph) -> TreeShape:
    try:
        return decompose_tree(g)
    except NotATree as exc:
        raise FormulaNotCovered(
            "no closed form: raw graph inputs must be trees"
        ) from exc


def _tree_kappa(shape: TreeShape) -> KappaFormula:
    if shape.is_path:
        return KappaFormula(shape.n, "any adjacent pair")
    if shape.n < shape.kappa_star:
        return KappaFormula(shape.n, "any adjacent pair")
    v = min(
        shape.roots,
        key=lambda u: 2 * (shape.threads[u][0].length + shape.threads[u][1].length),
    )
    return KappaFormula(
        shape.kappa_star,
        f"neighbors of root {v} on its two shortest threads",
    )


def kappa_formula(obj: FamilySpec | Graph) -> KappaFormula:
    """Largest feasible threshold of a family instance or a tree."""
    if isinstance(obj, Graph):
        if obj.family is not None:
            return kappa_formula(obj.family)
        return _tree_kappa(_shape_for(obj))
    spec = obj
    kind = spec.kind
    if kind == "path":
        return KappaFormula(spec.n, "any adjacent pair")
    if kind == "cycle":
        if spec.n % 2 == 1:
            return KappaFormula(spec.n - 1, "adjacent pair (zero probe at the antipode)")
        return KappaFormula(spec.n, "any adjacent pair")
    if kind == "complete":
        return KappaFormula(2, "any pair (true twins)")
    if kind == "star":
        if spec.n >= 4:
            return KappaFormula(4, "two leaves (false twins)")
        return KappaFormula(spec.n, "any adjacent pair")  # S_2, S_3 are paths
    if kind == "complete_bipartite":
        if min(spec.q, spec.r) >= 2:
            return KappaFormula(4, "two vertices of one part (false twins)")
        return kappa_formula(star(spec.q + spec.r))  # K_{1,r} is a star
    if kind == "spider":
        lengths = spec.lengths
        ks = 2 * (lengths[0] + lengths[1])
        n = spec.vertex_count()
        if len(lengths) == 3 and n < ks:
            return KappaFormula(n, "any adjacent pair")
        return KappaFormula(ks, "neighbors of the root on its two shortest threads")
    # grid
    return KappaFormula(
        2 * spec.q + 2 * spec.r - 4,
        "the two neighbors of a corner",
    )


def wdim_formula(obj: FamilySpec | Graph, k: int) -> int:
    """Exact weak k-metric dimension by closed form; raises
    ``FormulaNotCovered`` for the excluded boundary parameters."""
    if k < 1:
        raise ParameterOutOfRange(f"k must be positive, got {k}")
    kappa = kappa_formula(obj).value
    if k > kappa:
        raise KaboveKappa(k, kappa)

    if isinstance(obj, Graph):
        if obj.family is not None:
            return wdim_formula(obj.family, k)
        return _tree_wdim(_shape_for(obj), k)

    spec = obj
    kind = spec.kind
    if kind == "path":
        return k
    if kind == "cycle":
        if spec.n <= 4:
            raise FormulaNotCovered(f"cycle on {spec.n} vertices is solver-routed")
        if k == 1:
            return 2
        return k + 1 if spec.n % 2 == 1 else k
    if kind == "complete":
        return spec.n - 1 if k == 1 else spec.n
    if kind == "star":
        if spec.n == 4:
            raise FormulaNotCovered("star on 4 vertices is solver-routed")
        if spec.n <= 3:
            return k  # a path
        return spec.n - 2 if k <= 2 else spec.n - 1
    if kind == "complete_bipartite":
        if min(spec.q, spec.r) < 2:
            raise FormulaNotCovered("one-sided complete bipartite is solver-routed")
        return spec.q + spec.r - 2 if k <= 2 else spec.q + spec.r
    if kind == "spider":
        lengths = spec.lengths
        if len(lengths) == 3:
            return 2 if k == 1 else k
        return root_basis_size(len(lengths), lengths[0], k)
    # grid
    return k if k % 2 == 0 else k + 1


def _tree_wdim(shape: TreeShape, k: int) -> int:
    if shape.is_path:
        return k
    if shape.is_spider3:
        return 2 if k == 1 else k
    return sum(
        root_basis_size(len(shape.threads[v]), shape.threads[v][0].length, k)
        for v in shape.roots
    )


def grid_border_labeling(q: int, r: int) -> GridBorderLabeling:
    if q < 2 or r < 2:
        raise ParameterOutOfRange(f"grid needs q, r >= 2, got {q}x{r}")
    positions = []
    for i in range(1, q + 1):
        positions.append((i, 1))
        positions.append((i, r))
    for j in range(2, r):
        positions.append((1, j))
        positions.append((q, j))
    order = tuple((i - 1) * r + (j - 1) for i, j in positions)
    return GridBorderLabeling(q, r, order)


def grid_basis(q: int, r: int, k: int) -> tuple[int, ...]:
    """Weak k-metric basis of the q x r grid: the 2*ceil(k/2) border
    vertices of smallest rank."""
    labeling = grid_border_labeling(q, r)
    kappa = 2 * q + 2 * r - 4
    if k < 1:
        raise ParameterOutOfRange(f"k must be positive, got {k}")
    if k > kappa:
        raise KaboveKappa(k, kappa)
    take = 2 * (-(-k // 2))
    return tuple(sorted(labeling.order[:take]))


def _path_order(g: Graph) -> list[int]:
    """Vertices of a path-shaped tree walked endpoint to endpoint,
    starting at the smaller-id leaf."""
    if g.n == 1:
        return [0]
    start = min(v for v in range(g.n) if g.degree(v) == 1)
    order = [start]
    prev = None
    cur = start
    while len(order) < g.n:
        nxt = next(w for w in g.adjacency[cur] if w != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def formula_basis(g: Graph, k: int) -> tuple[int, ...]:
    """A constructive basis matching ``wdim_formula`` for the same input.

    Used by the formula engine; callers re-verify before reporting.
    Raises ``FormulaNotCovered`` where no construction is given (the
    solver-routed boundary cases, and three-thread spiders at k=1).
    """
    wdim_formula(g, k)  # validates k range, raises FormulaNotCovered
    spec = g.family
    if spec is None or spec.kind == "spider":
        shape = _shape_for(g)
        if shape.is_path:
            return tuple(_path_order(g)[:k])
        if shape.is_spider3:
            if k == 1:
                raise FormulaNotCovered(
                    "three-thread spider at k=1 is solver-routed"
                )
            return spider3_basis(g, shape, k)
        return tree_basis(g, shape, k)
    kind = spec.kind
    if kind == "path":
        return tuple(range(k))
    if kind == "cycle":
        if k == 1:
            return (0, 1)
        return tuple(range(k + 1)) if spec.n % 2 == 1 else tuple(range(k))
    if kind == "complete":
        return tuple(range(spec.n - 1)) if k == 1 else tuple(range(spec.n))
    if kind == "star":
        if spec.n == 2:
            return tuple(range(k))
        if spec.n == 3:
            return tuple([1, 0, 2][:k])  # path order around the center
        return tuple(range(1, spec.n - 1)) if k <= 2 else tuple(range(1, spec.n))
    if kind == "complete_bipartite":
        q, r = spec.q, spec.r
        if k <= 2:
            return tuple(range(q - 1)) + tuple(range(q, q + r - 1))
        return tuple(range(q + r))
    # grid
    return grid_basis(spec.q, spec.r, k)
