"""Shadow straightening calculus: supports and leading terms, no scalars.

The lowering operators act on monomials in the support roots by moving one
factor f_beta to f_{beta-nu} when beta-nu stays a support root.  True
structure constants are replaced by markers: a term is `forced` when it is
produced by a single source monomial (its coefficient is then a nonzero
product times a positive integer and cannot cancel), otherwise its
coefficient is unknown and the term is kept as a possible support member.

A straightening relation for an exponent s supported on a maximal path is
built by applying a fixed schedule of operator powers to f_theta^{deg s};
the schedule routes the mass of every path vertex from theta through valid
operator moves.  For the standard diagrams this is the usual cascade whose
stage exponents are the tail sums; the rewritten diagrams ship bespoke
schedules.  The result must have forced leading term exactly s, which is
asserted, and everything below it forms the tail used by the rewriting loop.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .hasse import build_diagram, k_chains
from .paths import maximal_paths
from .polytope import zorder_sequence
from .rootsys import (
    CaseError,
    CaseId,
    Root,
    STANDARD,
    in_table,
    named_roots,
    order_sequence,
    root_by_coeffs,
    simple_root,
)

__all__ = [
    "ShadowSum",
    "monomial_key",
    "exp_precedes",
    "apply_diff",
    "cascade",
    "leading_term",
    "straighten_relation",
    "rewrite_to_basis",
    "clear_rewrite_cache",
]

Expo = tuple[int, ...]


@dataclass(frozen=True)
class ShadowSum:
    """Formal sum over multi-exponents; value True marks a forced coefficient."""

    terms: tuple[tuple[Expo, bool], ...]

    def as_dict(self) -> dict[Expo, bool]:
        return dict(self.terms)

    def exponents(self) -> tuple[Expo, ...]:
        return tuple(e for e, _ in self.terms)


def _shadow(d: dict[Expo, bool]) -> ShadowSum:
    return ShadowSum(tuple(sorted(d.items())))


@lru_cache(maxsize=None)
def monomial_key(case: CaseId):
    """Sort key realising the homogeneous order: degree, then the entry at the
    largest position of the case's total order decides."""
    seq = order_sequence(case)
    rev = tuple(i - 1 for i in reversed(seq))

    def key(s: Expo):
        return (sum(s), tuple(s[i] for i in rev))

    return key


def exp_precedes(case: CaseId, s: Expo, t: Expo) -> bool:
    """True when s comes strictly before t in the monomial order."""
    k = monomial_key(case)
    return k(s) < k(t)


# ---------------------------------------------------------------------------
# Operator action


@lru_cache(maxsize=None)
def _move_target(case: CaseId, nu: Root) -> tuple[int, ...]:
    """target[i] = name that beta_{i+1} moves to under nu, or 0."""
    roots = named_roots(case)
    index = {r.coeffs: i for i, r in enumerate(roots, start=1)}
    out = []
    for r in roots:
        diff = tuple(a - b for a, b in zip(r.coeffs, nu.coeffs))
        out.append(index.get(diff, 0))
    return tuple(out)


@lru_cache(maxsize=None)
def _nu_chains(case: CaseId, nu: Root) -> tuple[tuple[int, ...], ...]:
    """Maximal nu-ladders gamma -> gamma-nu -> ... within the support roots."""
    target = _move_target(case, nu)
    n = len(target)
    has_source = {t for t in target if t}
    chains = []
    for start in range(1, n + 1):
        if start in has_source or not target[start - 1]:
            continue
        chain = [start]
        while target[chain[-1] - 1]:
            chain.append(target[chain[-1] - 1])
        chains.append(tuple(chain))
    return tuple(chains)


def apply_diff(case: CaseId, nu: Root, x: ShadowSum) -> ShadowSum:
    """One Leibniz step of the lowering operator for nu."""
    if any(c < 0 for c in nu.coeffs) or root_by_coeffs(case.lie, nu.coeffs) is None:
        raise CaseError(f"{nu} is not a positive root of {case.lie}")
    target = _move_target(case, nu)
    acc: dict[Expo, list[bool]] = {}
    for u, forced in x.terms:
        for i, v in enumerate(u):
            if v and target[i]:
                r = list(u)
                r[i] -= 1
                r[target[i] - 1] += 1
                acc.setdefault(tuple(r), []).append(forced)
    return _shadow({e: (len(fs) == 1 and fs[0]) for e, fs in acc.items()})


def _chain_flows(stocks: tuple[int, ...], budget: int):
    """All achievable (moves, per-vertex deltas) on one nu-ladder.

    A flow vector on the ladder edges is achievable iff no vertex goes
    negative; the deltas determine the flows uniquely, so each result below
    corresponds to exactly one way of routing the moves.
    """
    L = len(stocks) - 1
    out: list[tuple[int, tuple[int, ...]]] = []
    delta = [0] * (L + 1)

    def rec(i: int, prev_flow: int, used: int) -> None:
        if i > L:
            delta[L] = prev_flow
            out.append((used, tuple(delta)))
            return
        cap = min(budget - used, stocks[i - 1] + prev_flow)
        for f in range(cap + 1):
            delta[i - 1] = prev_flow - f
            rec(i + 1, f, used + f)
        delta[i - 1] = 0

    rec(1, 0, 0)
    return out


def _apply_block(case: CaseId, nu: Root, e: int, terms: dict[Expo, bool]) -> dict[Expo, bool]:
    """Apply the nu-operator e times, expanding whole ladders combinatorially."""
    if e == 0:
        return terms
    chains = _nu_chains(case, nu)
    acc: dict[Expo, list[bool]] = {}
    for u, forced in terms.items():
        active = [ch for ch in chains if any(u[v - 1] for v in ch[:-1])]
        results: list[tuple[int, dict[int, int]]] = [(0, {})]
        for ch in active:
            stocks = tuple(u[v - 1] for v in ch)
            options = _chain_flows(stocks, e)
            merged = []
            for used, deltas in results:
                for mv, dl in options:
                    if used + mv <= e:
                        nd = dict(deltas)
                        for v, dv in zip(ch, dl):
                            if dv:
                                nd[v] = nd.get(v, 0) + dv
                        merged.append((used + mv, nd))
            results = merged
        for used, deltas in results:
            if used != e:
                continue
            r = list(u)
            for v, dv in deltas.items():
                r[v - 1] += dv
            acc.setdefault(tuple(r), []).append(forced)
    return {x: (len(fs) == 1 and fs[0]) for x, fs in acc.items()}


# ---------------------------------------------------------------------------
# Cascade schedules

Conversion = tuple[Root, tuple[int, ...]]  # operator root, vertices whose mass it carries


def _walk(case: CaseId, path: tuple[int, ...]) -> list[int]:
    zpos = {v: i for i, v in enumerate(zorder_sequence(case))}
    return sorted(path, key=zpos.__getitem__)


def _diff_root(case: CaseId, i: int, j: int) -> Root | None:
    roots = named_roots(case)
    return root_by_coeffs(case.lie, roots[i - 1] - roots[j - 1])


def _chain_schedule(case: CaseId, walk: list[int]) -> tuple[Conversion, ...]:
    convs = []
    for i in range(1, len(walk)):
        op = _diff_root(case, walk[i - 1], walk[i])
        if op is None:
            raise CaseError(
                f"no operator for step {walk[i - 1]}->{walk[i]} on {case}; "
                "path needs a bespoke schedule"
            )
        convs.append((op, tuple(walk[i:])))
    return tuple(convs)


def _eps_root_b(case: CaseId, i: int, j: int) -> Root:
    # eps_i + eps_j for the B series
    n = case.lie.rank
    coeffs = tuple((0 if l < i else 1 if l < j else 2) for l in range(1, n + 1))
    r = root_by_coeffs(case.lie, coeffs)
    assert r is not None
    return r


@lru_cache(maxsize=None)
def _schedule(case: CaseId, path: tuple[int, ...]) -> tuple[Conversion, ...]:
    """Operator schedule delivering each path vertex's mass from theta."""
    walk = _walk(case, path)
    t = case.lie
    s, n = t.series, t.rank
    if case.variant == STANDARD:
        return _chain_schedule(case, walk)
    if s == "G":
        r11 = root_by_coeffs(t, (1, 1))
        r21 = root_by_coeffs(t, (2, 1))
        a2 = simple_root(t, 2)
        if set(path) == {1, 3, 4, 5}:
            return ((r11, (3,)), (r21, (4, 5)), (a2, (5,)))
        if set(path) == {1, 2, 3, 5}:
            return ((r11, (3,)), (a2, (2, 5)), (r21, (5,)))
        raise CaseError(f"unknown G2 path {path}")
    if s == "F":
        if 5 not in path:
            return _chain_schedule(case, walk)
        # walk = (1, 2, 5, 4, rest...): route both beta_5 and beta_4 through
        # beta_3 and let the second alpha_3 hop carry beta_5's mass onward
        assert walk[:4] == [1, 2, 5, 4], walk
        rest = tuple(walk[4:])
        a1, a2, a3 = (simple_root(t, i) for i in (1, 2, 3))
        convs = [
            (a1, tuple(walk[1:])),
            (a2, (5, 4) + rest),
            (a3, (4, 5) + rest),
            (a3, (5,)),
        ]
        convs.extend(_chain_schedule(case, [4, *rest]))
        return tuple(convs)
    # B_n, omega_1
    if n == 2:
        a2 = simple_root(t, 2)
        if set(path) == {1, 2}:
            return ((a2, (2,)),)
        if set(path) == {2, 3}:
            return ((a2, (2, 3)), (a2, (3,)))
        raise CaseError(f"unknown B2 path {path}")
    N, r = 2 * n - 1, n
    a = {i: simple_root(t, i) for i in range(1, n + 1)}
    a23 = root_by_coeffs(t, tuple(1 if l in (2, 3) else 0 for l in range(1, n + 1)))
    spine1 = tuple(range(3, r + 1))
    spine2 = tuple(range(r + 1, N - 1))
    convs = [(a23, spine1)]
    convs += [(a[j + 1], tuple(range(j + 1, r + 1))) for j in range(3, r)]
    if 2 in path:
        convs.append((a[2], (2,) + spine2 + (N,)))
        if spine2:
            convs.append((_eps_root_b(case, 3, n), spine2))
            for k in range(1, len(spine2)):
                convs.append((a[n - k], spine2[k:]))
        convs.append((_eps_root_b(case, 2, 3), (N,)))
    else:
        if spine2:
            convs.append((a[2], spine2))
            convs.append((_eps_root_b(case, 3, n), spine2))
            for k in range(1, len(spine2)):
                convs.append((a[n - k], spine2[k:]))
        convs.append((_eps_root_b(case, 2, 3), (N - 1, N)))
        convs.append((a[2], (N,)))
    return tuple(convs)


# ---------------------------------------------------------------------------
# Relations and rewriting


def _working_diagram(case: CaseId):
    d = build_diagram(case)
    if k_chains(d):
        raise CaseError(f"diagram of {case} has a k-chain; no straightening cascade")
    return d


def cascade(case: CaseId, s: Expo, path: tuple[int, ...]) -> ShadowSum:
    """Run the operator schedule for `path` against f_theta^(deg s)."""
    deg = sum(s)
    # adjacent conversions by the same operator form one power, and must be
    # applied as one block for the single-route bookkeeping to stay sharp
    blocks: list[tuple[Root, int]] = []
    for op, mass in _schedule(case, path):
        e = sum(s[v - 1] for v in mass)
        if blocks and blocks[-1][0] == op:
            blocks[-1] = (op, blocks[-1][1] + e)
        else:
            blocks.append((op, e))
    terms: dict[Expo, bool] = {tuple(deg if i == 0 else 0 for i in range(len(s))): True}
    for op, e in blocks:
        terms = _apply_block(case, op, e, terms)
    return _shadow(terms)


def straighten_relation(
    case: CaseId, m: int, s: Expo, path: tuple[int, ...] | None = None
) -> tuple[Expo, ...]:
    """The tail {t : t strictly below s} of the relation headed by f^s.

    Requires s supported on a maximal Dyck path with total mass above m.  The
    shadow tail is a superset of the true support of the relation; every
    member is strictly smaller than s, which is what the rewriting loop needs.
    """
    if not in_table(case.lie, case.fund_index):
        raise CaseError(f"{case} is outside the solved-case table")
    d = _working_diagram(case)
    if len(s) != d.n_vertices or any(v < 0 for v in s):
        raise ValueError(f"bad multi-exponent {s}")
    supp = {i for i, v in enumerate(s, start=1) if v}
    if path is None:
        path = next((p for p in maximal_paths(d) if supp <= set(p)), None)
        if path is None:
            raise ValueError(f"{s} is not supported on a Dyck path of {case}")
    elif not supp <= set(path):
        raise ValueError(f"{s} is not supported on the given path")
    if sum(s) <= m:
        raise ValueError(f"mass of {s} is within the bound {m}; no relation needed")
    result = cascade(case, s, path)
    key = monomial_key(case)
    terms = result.as_dict()
    top = max(terms, key=key)
    if top != s or not terms[top]:
        raise CaseError(
            f"cascade for {case}, path {path} did not lead with {s} (got {top})"
        )
    return tuple(sorted(t for t in terms if t != s))


_REWRITE_CACHE: dict[tuple[CaseId, int], dict[Expo, frozenset[Expo]]] = {}


def clear_rewrite_cache() -> None:
    _REWRITE_CACHE.clear()


def rewrite_to_basis(case: CaseId, m: int, t: Expo) -> frozenset[Expo]:
    """Support of the normal form of f^t modulo the straightening relations.

    Repeatedly restricts to the smallest violated maximal path, replaces the
    head by its tail, and re-attaches the off-path factors.  Each step is
    strictly decreasing in the monomial order at fixed degree, so the loop
    terminates with a subset of S(m).
    """
    d = _working_diagram(case)
    paths = maximal_paths(d)
    key = monomial_key(case)
    cache = _REWRITE_CACHE.setdefault((case, m), {})

    def violated(x: Expo) -> tuple[int, ...] | None:
        for p in paths:
            if sum(x[i - 1] for i in p) > m:
                return p
        return None

    stack = [tuple(t)]
    while stack:
        cur = stack[-1]
        if cur in cache:
            stack.pop()
            continue
        p = violated(cur)
        if p is None:
            cache[cur] = frozenset({cur})
            stack.pop()
            continue
        pset = set(p)
        head = tuple(v if i + 1 in pset else 0 for i, v in enumerate(cur))
        off = tuple(0 if i + 1 in pset else v for i, v in enumerate(cur))
        tail = straighten_relation(case, m, head, p)
        children = [tuple(u + o for u, o in zip(tl, off)) for tl in tail]
        for ch in children:
            if not key(ch) < key(cur):
                raise CaseError(f"rewriting step did not decrease at {cur} -> {ch}")
        pending = [ch for ch in children if ch not in cache]
        if pending:
            stack.extend(pending)
            continue
        out: set[Expo] = set()
        for ch in children:
            out |= cache[ch]
        cache[cur] = frozenset(out)
        stack.pop()
    return cache[tuple(t)]


# ---------------------------------------------------------------------------
# Leading terms


def leading_term(case: CaseId, nu: Root, l: int, s: Expo) -> Expo:
    """Closed-form maximal monomial of the l-th nu-power applied to f^s.

    s must sit on a Dyck path; the largest movable factor absorbs all l moves.
    Matches the brute-force maximum whenever the support roots carry no
    nu-ladder of length two.
    """
    d = _working_diagram(case)
    supp = {i for i, v in enumerate(s, start=1) if v}
    if not any(supp <= set(p) for p in maximal_paths(d)):
        raise ValueError(f"{s} is not supported on a Dyck path of {case}")
    target = _move_target(case, nu)
    pos = {v: i for i, v in enumerate(order_sequence(case))}
    movable = [i for i in supp if target[i - 1]]
    if not movable:
        raise ValueError(f"no factor of {s} is movable by {nu}")
    k = max(movable, key=pos.__getitem__)
    if l > s[k - 1]:
        raise ValueError(f"cannot move {l} copies of beta_{k}; only {s[k - 1]} present")
    out = list(s)
    out[k - 1] -= l
    out[target[k - 1] - 1] += l
    return tuple(out)
