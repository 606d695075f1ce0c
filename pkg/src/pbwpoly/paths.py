"""Dyck paths and co-chains of a case diagram.

A Dyck path is the vertex set of any ordered subsequence of a directed path,
so the whole family is the down-closure of the source-to-sink path sets.  A
co-chain meets every Dyck path at most once; it suffices to check the
source-to-sink paths, and two vertices lie on a common path exactly when one
reaches the other in the diagram.  Co-chains are therefore the independent
sets of the reachability-conflict graph, which keeps the large spin cases
cheap.  The classical types also admit closed-form descriptions of the
co-chains, implemented here as independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .hasse import HasseDiagram, build_diagram
from .rootsys import CaseError, CaseId, LieType, Root, named_roots

__all__ = [
    "DyckPath",
    "CoChain",
    "maximal_paths",
    "all_dyck_paths",
    "on_common_path",
    "conflict_matrix",
    "cochains",
    "cochain_formula",
    "supp1",
    "supp1_inverse",
]

DyckPath = tuple[int, ...]  # strictly increasing name indices
CoChain = tuple[int, ...]


@lru_cache(maxsize=None)
def _adjacency(d: HasseDiagram) -> tuple[tuple[int, ...], ...]:
    out: list[list[int]] = [[] for _ in range(d.n_vertices + 1)]
    for i, j, _ in d.edges:
        out[i].append(j)
    return tuple(tuple(sorted(js)) for js in out)


@lru_cache(maxsize=None)
def _reach(d: HasseDiagram) -> tuple[frozenset[int], ...]:
    """reach[i] = vertices reachable from i (excluding i)."""
    adj = _adjacency(d)
    n = d.n_vertices
    # rewritten diagrams need not descend in height, so topo-sort explicitly
    indeg = [0] * (n + 1)
    for i in range(1, n + 1):
        for j in adj[i]:
            indeg[j] += 1
    queue = [v for v in range(1, n + 1) if indeg[v] == 0]
    topo: list[int] = []
    while queue:
        v = queue.pop()
        topo.append(v)
        for w in adj[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    if len(topo) != n:
        raise ValueError(f"diagram for {d.case} is not acyclic")
    reach: list[frozenset[int]] = [frozenset()] * (n + 1)
    for v in reversed(topo):
        acc: set[int] = set()
        for w in adj[v]:
            acc.add(w)
            acc |= reach[w]
        reach[v] = frozenset(acc)
    return tuple(reach)


@lru_cache(maxsize=None)
def maximal_paths(d: HasseDiagram) -> tuple[DyckPath, ...]:
    """Vertex sets of all source-to-sink directed paths, as sorted tuples."""
    adj = _adjacency(d)
    n = d.n_vertices
    has_in = set(j for _, j, _ in d.edges)
    sources = [v for v in range(1, n + 1) if v not in has_in]
    sinks = {v for v in range(1, n + 1) if not adj[v]}
    found: set[DyckPath] = set()
    stack: list[int] = []

    def walk(v: int) -> None:
        stack.append(v)
        if v in sinks:
            found.add(tuple(sorted(stack)))
        for w in adj[v]:
            walk(w)
        stack.pop()

    for s in sources:
        walk(s)
    return tuple(sorted(found))


def all_dyck_paths(d: HasseDiagram) -> set[frozenset[int]]:
    """The full down-closed family: all subsets of maximal path sets.

    Exponential in the path length; intended for small diagrams and oracles.
    """
    family: set[frozenset[int]] = {frozenset()}
    for p in maximal_paths(d):
        for r in range(1, len(p) + 1):
            family.update(frozenset(c) for c in combinations(p, r))
    return family


def on_common_path(d: HasseDiagram, i: int, j: int) -> bool:
    """Whether beta_i and beta_j lie on a common Dyck path."""
    if i == j:
        return True
    reach = _reach(d)
    return j in reach[i] or i in reach[j]


@lru_cache(maxsize=None)
def conflict_matrix(d: HasseDiagram) -> tuple[frozenset[int], ...]:
    """conf[i] = vertices sharing a path with i (excluding i)."""
    reach = _reach(d)
    n = d.n_vertices
    conf: list[set[int]] = [set() for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in reach[i]:
            conf[i].add(j)
            conf[j].add(i)
    return tuple(frozenset(c) for c in conf)


@lru_cache(maxsize=None)
def cochains(d: HasseDiagram) -> tuple[CoChain, ...]:
    """All subsets meeting every maximal path at most once, sorted canonically.

    Canonical order: by cardinality, then lexicographically on the sorted
    index tuples.
    """
    conf = conflict_matrix(d)
    n = d.n_vertices
    out: list[CoChain] = []
    chosen: list[int] = []

    def extend(start: int) -> None:
        out.append(tuple(chosen))
        for v in range(start, n + 1):
            if all(v not in conf[u] for u in chosen):
                chosen.append(v)
                extend(v + 1)
                chosen.pop()

    extend(1)
    out.sort(key=lambda c: (len(c), c))
    return tuple(out)


def supp1(case: CaseId, s: tuple[int, ...]) -> CoChain:
    """Support of a 0/1 lattice point of the unit polytope, as a co-chain."""
    d = build_diagram(case)
    if len(s) != d.n_vertices or any(x not in (0, 1) for x in s):
        raise ValueError(f"{s} is not a 0/1 vector of length {d.n_vertices}")
    supp = tuple(i for i, x in enumerate(s, start=1) if x)
    conf = conflict_matrix(d)
    for i, j in combinations(supp, 2):
        if j in conf[i]:
            raise ValueError(f"support {supp} meets a Dyck path twice (at {i},{j})")
    return supp


def supp1_inverse(case: CaseId, pbar: CoChain) -> tuple[int, ...]:
    """Indicator vector of a co-chain; inverse of supp1."""
    d = build_diagram(case)
    conf = conflict_matrix(d)
    for i, j in combinations(sorted(pbar), 2):
        if j in conf[i]:
            raise ValueError(f"{pbar} is not a co-chain (conflict {i},{j})")
    return tuple(1 if i in pbar else 0 for i in range(1, d.n_vertices + 1))


# ---------------------------------------------------------------------------
# Closed-form co-chain oracles for the classical types


def _an_interval(root: Root) -> tuple[int, int]:
    c = root.coeffs
    i = c.index(1) + 1
    j = len(c) - tuple(reversed(c)).index(1)
    return i, j


def _name_of(case: CaseId, coeffs: tuple[int, ...]) -> int:
    for idx, r in enumerate(named_roots(case), start=1):
        if r.coeffs == coeffs:
            return idx
    raise CaseError(f"coefficients {coeffs} name no support root of {case}")


def _an_coeffs(n: int, i: int, j: int) -> tuple[int, ...]:
    return tuple(1 if i <= l <= j else 0 for l in range(1, n + 1))


def _bn_pair_coeffs(n: int, i: int, j: int) -> tuple[int, ...]:
    # eps_i + eps_j, 1 <= i < j <= n
    return tuple(0 if l < i else (1 if l < j else 2) for l in range(1, n + 1))


def _bn_single_coeffs(n: int, k: int) -> tuple[int, ...]:
    # eps_k
    return tuple(1 if l >= k else 0 for l in range(1, n + 1))


def _dn_pair_coeffs(n: int, i: int, j: int) -> tuple[int, ...]:
    # eps_i + eps_j, 1 <= i < j <= n-1
    out = []
    for l in range(1, n - 1):
        out.append(0 if l < i else (1 if l < j else 2))
    out.extend([1, 1])
    return tuple(out)


def _dn_minus_coeffs(n: int, k: int) -> tuple[int, ...]:
    # eps_k - eps_n
    return tuple(1 if k <= l <= n - 1 else 0 for l in range(1, n + 1))


def _dn_plus_coeffs(n: int, k: int) -> tuple[int, ...]:
    # eps_k + eps_n
    return tuple((1 if k <= l <= n - 2 else 0) for l in range(1, n - 1)) + (0, 1)


def _nested(values: list[int]) -> list[tuple[int, int]]:
    # pair off a sorted list of distinct integers into nested intervals
    return [(values[l], values[len(values) - 1 - l]) for l in range(len(values) // 2)]


@lru_cache(maxsize=None)
def cochain_formula(case: CaseId) -> tuple[CoChain, ...]:
    """Co-chains straight from the closed-form characterisations.

    Supports A_n (any k), (B_n, w_n) and (D_n, w_{n-1}), (D_n, w_n).  Output
    uses the same canonical order as `cochains`.
    """
    t, k = case.lie, case.fund_index
    s, n = t.series, t.rank
    out: list[CoChain] = []
    if s == "A":
        # rows strictly increasing below k, columns strictly increasing above
        smax = min(k, n + 1 - k)
        for size in range(smax + 1):
            for rows in combinations(range(1, k + 1), size):
                for cols in combinations(range(k, n + 1), size):
                    names = tuple(
                        sorted(_name_of(case, _an_coeffs(n, i, j)) for i, j in zip(rows, cols))
                    )
                    out.append(names)
    elif s == "B" and k == n:
        # odd subsets carry a lone eps, even subsets are nested interval families
        for size in range(n + 1):
            for sub in combinations(range(1, n + 1), size):
                vals = list(sub)
                members: list[tuple[int, ...]] = []
                if size % 2 == 1:
                    members.append(_bn_single_coeffs(n, vals[0]))
                    vals = vals[1:]
                members.extend(_bn_pair_coeffs(n, i, j) for i, j in _nested(vals))
                out.append(tuple(sorted(_name_of(case, c) for c in members)))
    elif s == "D" and k in (n - 1, n):
        lone = _dn_minus_coeffs if k == n - 1 else _dn_plus_coeffs
        for size in range(n):
            for sub in combinations(range(1, n), size):
                vals = list(sub)
                members = []
                if size % 2 == 1:
                    members.append(lone(n, vals[0]))
                    vals = vals[1:]
                members.extend(_dn_pair_coeffs(n, i, j) for i, j in _nested(vals))
                out.append(tuple(sorted(_name_of(case, c) for c in members)))
    else:
        raise CaseError(f"no closed-form co-chain description for {case}")
    result = sorted(set(out), key=lambda c: (len(c), c))
    if len(result) != len(out):
        raise CaseError(f"closed form produced duplicates for {case}")
    return tuple(result)
