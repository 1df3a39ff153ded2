"""Exact solvers for the weak k-metric dimension (vertex, edge, mixed).

The underlying model is a covering problem: pick the fewest vertices so
that for every item pair (items are vertices, edges, or both, depending
on the variant) the per-vertex distance differences summed over the
picked vertices reach k. Distance from a vertex to an edge vw is
min(d(., v), d(., w)).

Two engines certify optima. ``solve_bruteforce`` enumerates subsets in
increasing size and lexicographic order, so it returns the canonical
(lex-smallest) optimal set. ``solve_bnb`` is a depth-first
branch-and-bound over include/exclude decisions with two admissible
lower bounds: the per-pair ratio bound ceil(residual / max entry) and a
mass bound ceil(total residual / best clipped column sum). It returns
its first incumbent at the optimal value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable, Union

import numpy as np

from .errors import KaboveKappa, KaboveKappaPrime, ParameterOutOfRange, TooLarge
from .graph import Graph
from .resolve import VerifyResult, _check_set

Item = Union[int, tuple[int, int]]

DEFAULT_SIZE_CAP = 16


class Variant(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"
    MIXED = "mixed"


@dataclass(frozen=True)
class ItemPair:
    """One unordered item pair with its per-vertex difference profile."""

    a: Item
    b: Item
    delta_profile: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.delta_profile)


@dataclass(frozen=True)
class Certificate:
    """Worst pair over a returned basis; its delta is >= the requested k."""

    a: Item
    b: Item
    delta: int


@dataclass(frozen=True)
class DimensionResult:
    variant: Variant
    k: int
    value: int
    basis: tuple[int, ...]
    certificate: Certificate | None
    stats: dict


def item_label(item: Item) -> str:
    if isinstance(item, tuple):
        return f"e{item[0]}_{item[1]}"
    return f"v{item}"


def _items(g: Graph, variant: Variant) -> list[Item]:
    if variant == Variant.VERTEX:
        return list(range(g.n))
    edges = g.edges()
    if variant == Variant.EDGE:
        return edges
    return list(range(g.n)) + edges


def _pair_matrix(g: Graph, variant: Variant):
    """Items, index pairs (lex order), and the (npairs x n) profile matrix."""
    items = _items(g, variant)
    d = g.distance_matrix
    rows = np.empty((len(items), g.n), dtype=np.int32)
    for idx, it in enumerate(items):
        rows[idx] = np.minimum(d[it[0]], d[it[1]]) if isinstance(it, tuple) else d[it]
    pairs = list(combinations(range(len(items)), 2))
    if pairs:
        ai = [a for a, _ in pairs]
        bi = [b for _, b in pairs]
        profile = np.abs(rows[ai] - rows[bi])
    else:
        profile = np.zeros((0, g.n), dtype=np.int32)
    return items, pairs, profile


def pair_profiles(g: Graph, variant: Variant = Variant.VERTEX) -> list[ItemPair]:
    """All unordered item pairs of the variant with full profiles."""
    items, pairs, profile = _pair_matrix(g, variant)
    return [
        ItemPair(items[a], items[b], tuple(int(x) for x in profile[i]))
        for i, (a, b) in enumerate(pairs)
    ]


def variant_kappa(g: Graph, variant: Variant = Variant.VERTEX):
    """Largest feasible k for the variant: min over item pairs of the
    profile total. Returns (kappa, witness_pair), or (None, None) when
    the variant has no item pairs (every k is then vacuously feasible)."""
    items, pairs, profile = _pair_matrix(g, variant)
    if not pairs:
        return None, None
    totals = profile.sum(axis=1)
    i = int(totals.argmin())
    return int(totals[i]), (items[pairs[i][0]], items[pairs[i][1]])


def verify_set(g: Graph, variant: Variant, S: Iterable[int], k: int) -> VerifyResult:
    """Variant-aware feasibility check of a candidate vertex set."""
    ids = _check_set(g, S)
    items, pairs, profile = _pair_matrix(g, variant)
    if not pairs:
        return VerifyResult(True, None, None)
    sums = profile[:, ids].sum(axis=1)
    i = int(sums.argmin())
    value = int(sums[i])
    witness = (items[pairs[i][0]], items[pairs[i][1]])
    if value >= k:
        return VerifyResult(True, None, value)
    return VerifyResult(False, witness, value)


def certificate_for(g: Graph, variant: Variant, S: Iterable[int]) -> "Certificate | None":
    """Worst item pair of ``S``: the lex-first minimizer of delta_S."""
    ids = _check_set(g, S)
    items, pairs, profile = _pair_matrix(g, variant)
    if not pairs:
        return None
    sums = profile[:, ids].sum(axis=1)
    i = int(sums.argmin())
    a, b = pairs[i]
    return Certificate(items[a], items[b], int(sums[i]))


def _feasibility_precheck(items, pairs, profile, k):
    """Reject k above the variant's kappa, mirroring the full-set bound."""
    totals = profile.sum(axis=1)
    i = int(totals.argmin())
    kv = int(totals[i])
    if k > kv:
        witness = (items[pairs[i][0]], items[pairs[i][1]])
        raise KaboveKappa(k, kv, witness)


def _certificate(items, pairs, profile, basis) -> Certificate:
    sums = profile[:, list(basis)].sum(axis=1)
    i = int(sums.argmin())
    a, b = pairs[i]
    return Certificate(items[a], items[b], int(sums[i]))


def _empty_result(variant: Variant, k: int, oracle: str) -> DimensionResult:
    # No item pairs: the empty set satisfies every threshold vacuously.
    return DimensionResult(variant, k, 0, (), None, {"oracle": oracle})


def solve_bruteforce(
    g: Graph,
    variant: Variant = Variant.VERTEX,
    k: int = 1,
    size_cap: int = DEFAULT_SIZE_CAP,
) -> DimensionResult:
    """Exhaustive minimum search; canonical lex-smallest optimal basis."""
    if k < 1:
        raise ParameterOutOfRange(f"k must be positive, got {k}")
    if g.n > size_cap:
        raise TooLarge(f"n={g.n} exceeds size_cap={size_cap}")
    items, pairs, profile = _pair_matrix(g, variant)
    if not pairs:
        return _empty_result(variant, k, "brute")
    _feasibility_precheck(items, pairs, profile, k)

    totals = profile.sum(axis=1)
    tight = int(totals.argmin())
    # every pair p forces |S| >= k / max_s profile[p, s]
    min_size = int(np.ceil(k / profile.max(axis=1)).max())
    checked = 0
    for size in range(max(min_size, 1), g.n + 1):
        for combo in combinations(range(g.n), size):
            checked += 1
            cols = list(combo)
            if profile[tight, cols].sum() < k:
                continue
            if (profile[:, cols].sum(axis=1) >= k).all():
                return DimensionResult(
                    variant,
                    k,
                    size,
                    tuple(combo),
                    _certificate(items, pairs, profile, combo),
                    {"oracle": "brute", "subsets": checked},
                )
    raise AssertionError("unreachable: full vertex set is feasible for k <= kappa")


def _greedy_cover(profile: np.ndarray, k: int) -> list[int]:
    npairs, n = profile.shape
    residual = np.full(npairs, k, dtype=np.int64)
    avail = np.ones(n, dtype=bool)
    chosen: list[int] = []
    while residual.any():
        gains = np.minimum(profile, residual[:, None]).sum(axis=0)
        gains[~avail] = -1
        v = int(gains.argmax())
        chosen.append(v)
        avail[v] = False
        residual = np.maximum(residual - profile[:, v], 0)
    return chosen


def solve_bnb(g: Graph, variant: Variant = Variant.VERTEX, k: int = 1) -> DimensionResult:
    """Branch-and-bound with admissible bounds; certified optimal value."""
    if k < 1:
        raise ParameterOutOfRange(f"k must be positive, got {k}")
    items, pairs, profile = _pair_matrix(g, variant)
    if not pairs:
        return _empty_result(variant, k, "bnb")
    _feasibility_precheck(items, pairs, profile, k)

    n = g.n
    incumbent = _greedy_cover(profile, k)
    best_val = len(incumbent)
    best_basis = tuple(sorted(incumbent))
    nodes = 0

    def visit(count: int, chosen: list[int], avail: np.ndarray, residual: np.ndarray):
        nonlocal best_val, best_basis, nodes
        nodes += 1
        if not residual.any():
            if count < best_val:
                best_val = count
                best_basis = tuple(sorted(chosen))
            return
        if count + 1 >= best_val:
            return
        avail_ids = np.flatnonzero(avail)
        if avail_ids.size == 0:
            return
        active = residual > 0
        sub = profile[np.ix_(active, avail_ids)]
        res = residual[active]
        max_entry = sub.max(axis=1)
        if (max_entry == 0).any():
            return
        ratio_bound = int(np.ceil(res / max_entry).max())
        caps = np.minimum(sub, res[:, None]).sum(axis=0)
        mass_bound = math.ceil(int(res.sum()) / int(caps.max()))
        if count + max(ratio_bound, mass_bound) >= best_val:
            return
        # branch on the vertex covering the most residual demand (raw sum);
        # argmax takes the first occurrence, i.e. the smallest id on ties
        v = int(avail_ids[int(sub.sum(axis=0).argmax())])
        rest = avail.copy()
        rest[v] = False
        visit(count + 1, chosen + [v], rest, np.maximum(residual - profile[:, v], 0))
        visit(count, chosen, rest, residual)

    visit(0, [], np.ones(n, dtype=bool), np.full(len(pairs), k, dtype=np.int64))
    return DimensionResult(
        variant,
        k,
        best_val,
        best_basis,
        _certificate(items, pairs, profile, best_basis),
        {"oracle": "bnb", "nodes": nodes},
    )


def solve_kmetric_dim(
    g: Graph, k: int, size_cap: int = DEFAULT_SIZE_CAP
) -> DimensionResult:
    """Exhaustive minimum set where every vertex pair has >= k distinct
    distinguishing members (the count-based criterion, not the sum)."""
    if k < 1:
        raise ParameterOutOfRange(f"k must be positive, got {k}")
    if g.n > size_cap:
        raise TooLarge(f"n={g.n} exceeds size_cap={size_cap}")
    items, pairs, profile = _pair_matrix(g, Variant.VERTEX)
    if not pairs:
        return _empty_result(Variant.VERTEX, k, "brute")
    support = (profile > 0).astype(np.int8)
    counts = support.sum(axis=1)
    i = int(counts.argmin())
    kappa_prime = int(counts[i])
    if k > kappa_prime:
        witness = (items[pairs[i][0]], items[pairs[i][1]])
        raise KaboveKappaPrime(k, kappa_prime, witness)
    checked = 0
    for size in range(k, g.n + 1):
        for combo in combinations(range(g.n), size):
            checked += 1
            cols = list(combo)
            if (support[:, cols].sum(axis=1) >= k).all():
                sums = support[:, cols].sum(axis=1)
                j = int(sums.argmin())
                a, b = pairs[j]
                return DimensionResult(
                    Variant.VERTEX,
                    k,
                    size,
                    tuple(combo),
                    Certificate(items[a], items[b], int(sums[j])),
                    {"oracle": "brute", "subsets": checked},
                )
    raise AssertionError("unreachable: full vertex set is feasible for k <= kappa'")


def _wrap_terms(prefix: str, terms: list[str], suffix: str = "",
                per_line: int = 10) -> list[str]:
    lines = []
    for i in range(0, len(terms), per_line):
        chunk = " + ".join(terms[i:i + per_line])
        head = prefix if i == 0 else "   "
        tail = " +" if i + per_line < len(terms) else suffix
        lines.append(f"{head}{chunk}{tail}")
    return lines


def write_lp(g: Graph, variant: Variant = Variant.VERTEX, k: int = 1) -> str:
    """Render the covering model in CPLEX-LP text: one binary per vertex,
    one row per item pair, coefficients equal to the profile entries."""
    items, pairs, profile = _pair_matrix(g, variant)
    out = [
        f"\\ minimum weak {k}-resolving set, variant={variant.value}",
        f"\\ n={g.n} items={len(items)} pairs={len(pairs)}",
        "Minimize",
    ]
    out.extend(_wrap_terms(" obj: ", [f"x{i}" for i in range(g.n)]))
    out.append("Subject To")
    for idx, (a, b) in enumerate(pairs):
        coeffs = profile[idx]
        terms = [f"{int(c)} x{i}" for i, c in enumerate(coeffs) if c != 0]
        out.append(f"\\ pair {item_label(items[a])} -- {item_label(items[b])}")
        out.extend(_wrap_terms(f" p{idx}: ", terms, suffix=f" >= {k}"))
    out.append("Binaries")
    names = [f"x{i}" for i in range(g.n)]
    for i in range(0, len(names), 12):
        out.append(" " + " ".join(names[i:i + 12]))
    out.append("End")
    return "\n".join(out) + "\n"
