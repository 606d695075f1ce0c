"""Directed diagrams on the support roots, and k-chain diagnostics.

The standard diagram has an edge beta_i -> beta_j labelled by the simple root
alpha_k exactly when beta_i - beta_j = alpha_k.  The three families whose
standard diagram contains a k-chain (B_n:w1, F4:w4, G2:w1) also carry a
rewritten diagram; those are fixed edge lists, not the output of a general
chain-elimination procedure.  Rewritten-diagram labels record which lowering
operator acts at that stage of the straightening cascade and need not be the
difference of the endpoints; two of the F4 labels are pure tags.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .rootsys import (
    CaseError,
    CaseId,
    NORMALITY,
    Root,
    STANDARD,
    has_modified_variant,
    named_roots,
    order_sequence,
    root_by_coeffs,
    simple_root,
)

__all__ = ["HasseDiagram", "KChain", "build_diagram", "k_chains", "to_dot", "to_json", "label_text"]

Label = Root | str


@dataclass(frozen=True)
class HasseDiagram:
    case: CaseId
    vertices: tuple[Root, ...]  # naming order: vertices[i-1] is beta_i
    edges: tuple[tuple[int, int, Label], ...]  # 1-based endpoints

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class KChain:
    gamma: int
    beta: int
    delta: int
    label: Label


def _simple_index(case: CaseId, label: Label) -> int | None:
    if isinstance(label, Root) and label.height == 1:
        return label.coeffs.index(1) + 1
    return None


def label_text(case: CaseId, label: Label) -> str:
    """Figure-style rendering: simple index, coefficient digits, or tag."""
    if isinstance(label, str):
        return label
    idx = _simple_index(case, label)
    if idx is not None:
        return str(idx)
    return "".join(str(c) for c in label.coeffs)


def _standard_edges(case: CaseId) -> tuple[tuple[int, int, Label], ...]:
    roots = named_roots(case)
    t = case.lie
    edges = []
    for i, hi in enumerate(roots, start=1):
        for j, lo in enumerate(roots, start=1):
            if hi.height != lo.height + 1:
                continue
            diff = hi - lo
            if sum(diff) == 1 and all(d >= 0 for d in diff):
                k = diff.index(1) + 1
                edges.append((i, j, simple_root(t, k)))
    return tuple(edges)


def _eps_root_b(t, i: int, j: int) -> Root:
    """B-series root from orthogonal coordinates: eps_i+eps_j (i<j<=n),
    eps_i-eps_j encoded as j<0, lone eps_i as j=0."""
    n = t.rank
    if j == 0:
        coeffs = tuple(1 if l >= i else 0 for l in range(1, n + 1))
    elif j > 0:
        coeffs = tuple((0 if l < i else 1 if l < j else 2) for l in range(1, n + 1))
    else:
        coeffs = tuple(1 if i <= l < -j else 0 for l in range(1, n + 1))
    r = root_by_coeffs(t, coeffs)
    if r is None:
        raise CaseError(f"no such B-root eps({i},{j}) in {t}")
    return r


def _modified_edges(case: CaseId) -> tuple[tuple[int, int, Label], ...]:
    t = case.lie
    s, n = t.series, t.rank

    def rt(*coeffs: int) -> Root:
        r = root_by_coeffs(t, tuple(coeffs))
        assert r is not None
        return r

    if s == "G":
        return (
            (1, 3, rt(1, 1)),
            (3, 2, rt(0, 1)),
            (3, 4, rt(2, 1)),
            (2, 5, rt(2, 1)),
            (4, 5, rt(0, 1)),
        )
    if s == "F":
        a = {i: simple_root(t, i) for i in range(1, 5)}
        return (
            (1, 2, a[1]),
            (2, 3, a[2]),
            (2, 5, "a"),
            (3, 6, rt(0, 0, 1, 1)),
            (3, 4, a[3]),
            (5, 4, "b"),
            (6, 8, a[3]),
            (4, 8, rt(0, 0, 1, 1)),
            (4, 7, rt(0, 1, 1, 0)),
            (8, 10, a[2]),
            (7, 10, a[4]),
            (7, 9, a[1]),
            (10, 12, a[3]),
            (10, 11, a[1]),
            (9, 11, a[4]),
            (12, 13, a[1]),
            (11, 13, a[3]),
            (13, 14, a[2]),
            (14, 15, a[3]),
        )
    # B_n, omega_1
    if n == 2:
        return ((2, 1, "a"), (2, 3, simple_root(t, 2)))
    N = 2 * n - 1
    r = n
    alpha = {i: simple_root(t, i) for i in range(1, n + 1)}
    a23 = rt(*(1 if l in (2, 3) else 0 for l in range(1, n + 1)))  # alpha_2 + alpha_3
    edges: list[tuple[int, int, Label]] = [(1, 3, a23)]
    for j in range(3, r):
        edges.append((j, j + 1, alpha[j + 1]))
    if r + 1 <= N - 2:
        edges.append((r, r + 1, _eps_root_b(t, 3, n)))
        for k in range(1, N - 2 - (r + 1) + 1):
            edges.append((r + k, r + k + 1, alpha[n - k]))
    edges.append((N - 2, 2, alpha[2]))
    edges.append((N - 2, N - 1, _eps_root_b(t, 2, 3)))
    edges.append((2, N, _eps_root_b(t, 2, 3)))
    edges.append((N - 1, N, alpha[2]))
    return tuple(edges)


@lru_cache(maxsize=None)
def build_diagram(case: CaseId) -> HasseDiagram:
    """Build the diagram for a case; modified variants use the fixed edge lists."""
    roots = named_roots(case)
    if case.variant == STANDARD:
        edges = _standard_edges(case)
    else:
        if not has_modified_variant(case.lie, case.fund_index):
            raise CaseError(f"{case} has no modified diagram")
        edges = _modified_edges(case)
    # every edge must ascend in the path-monotone order: the normality order
    # for rewritten diagrams, the standard one otherwise
    zcase = case if case.variant == STANDARD else CaseId(case.lie, case.fund_index, NORMALITY)
    pos = {name: p for p, name in enumerate(order_sequence(zcase))}
    for i, j, _ in edges:
        if pos[i] >= pos[j]:
            raise CaseError(f"edge {i}->{j} violates the path order of {case}")
    return HasseDiagram(case, roots, edges)


def k_chains(d: HasseDiagram) -> list[KChain]:
    """All length-2 chains gamma -> beta -> delta with equal labels."""
    incoming: dict[int, list[tuple[int, Label]]] = {}
    outgoing: dict[int, list[tuple[int, Label]]] = {}
    for i, j, lab in d.edges:
        outgoing.setdefault(i, []).append((j, lab))
        incoming.setdefault(j, []).append((i, lab))
    found = []
    for beta in range(1, d.n_vertices + 1):
        for gamma, lab_in in incoming.get(beta, ()):
            for delta, lab_out in outgoing.get(beta, ()):
                if lab_in == lab_out:
                    found.append(KChain(gamma, beta, delta, lab_in))
    found.sort(key=lambda c: (c.gamma, c.beta, c.delta))
    return found


def to_dot(d: HasseDiagram) -> str:
    """Deterministic DOT rendering, vertices ranked by height."""
    lines = [f'digraph "{d.case}" {{', "  rankdir=TB;", "  node [shape=box];"]
    for i, r in enumerate(d.vertices, start=1):
        lines.append(f'  b{i} [label="b{i} {r}"];')
    by_height: dict[int, list[int]] = {}
    for i, r in enumerate(d.vertices, start=1):
        by_height.setdefault(r.height, []).append(i)
    for h in sorted(by_height, reverse=True):
        group = "; ".join(f"b{i}" for i in sorted(by_height[h]))
        lines.append(f"  {{ rank=same; {group}; }}")
    for i, j, lab in sorted(d.edges):
        lines.append(f'  b{i} -> b{j} [label="{label_text(d.case, lab)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(d: HasseDiagram) -> str:
    data = {
        "case": str(d.case),
        "vertices": [list(r.coeffs) for r in d.vertices],
        "edges": [[i, j, label_text(d.case, lab)] for i, j, lab in sorted(d.edges)],
    }
    return json.dumps(data, indent=2, sort_keys=True) + "\n"
