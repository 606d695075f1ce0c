"""Path polytopes, lattice points, Minkowski sums, and the normality engine.

P(m) lives in R^N_{>=0} and has one inequality sum_{j in P} x_j <= m per
maximal Dyck path P; down-closure makes the shorter paths redundant.  The
normality certificate runs both directions: brute-force set equality of
S(m) against S(m-1)+S(1), and the constructive peeling that subtracts the
order-maximal co-chain indicator below the support of each point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from ._linprog import lp_max
from .hasse import build_diagram
from .paths import cochains, conflict_matrix, maximal_paths
from .rootsys import (
    CaseError,
    CaseId,
    NORMALITY,
    STANDARD,
    has_modified_variant,
    in_table,
    order_sequence,
)

__all__ = [
    "PolytopeH",
    "CertificationError",
    "build_polytope",
    "reduce_nonredundant",
    "nonredundancy_certificates",
    "lattice_points",
    "point_count",
    "minkowski_sum",
    "zorder_sequence",
    "decompose_step",
    "peel",
    "certify_normality",
]


class CertificationError(RuntimeError):
    """A certified property failed; this falsifies the implementation."""


@dataclass(frozen=True)
class PolytopeH:
    """H-representation: 0/1 supports over {1..dim}, shared bound m."""

    case: CaseId
    dim: int
    supports: tuple[tuple[int, ...], ...]
    m: int

    def contains(self, x: tuple[int, ...]) -> bool:
        if len(x) != self.dim or any(v < 0 for v in x):
            return False
        return all(sum(x[i - 1] for i in sup) <= self.m for sup in self.supports)

    def as_text(self) -> str:
        lines = []
        for sup in self.supports:
            lhs = "+".join(f"x{i}" for i in sup)
            lines.append(f"{lhs} <= {self.m}")
        return "\n".join(lines) + "\n"


def build_polytope(case: CaseId, m: int) -> PolytopeH:
    """One inequality per maximal Dyck path of the case diagram."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not in_table(case.lie, case.fund_index):
        raise CaseError(f"{case} is outside the solved-case table")
    if case.variant == STANDARD and has_modified_variant(case.lie, case.fund_index):
        raise CaseError(
            f"{case} has a k-chain; build the polytope from a modified variant"
        )
    d = build_diagram(case)
    return PolytopeH(case, d.n_vertices, maximal_paths(d), m)


def _pair_certificate(
    sup: tuple[int, ...], others: list[tuple[int, ...]]
) -> tuple[int, ...] | None:
    """A 0/1 point violating only `sup` at m=1, if one exists among pairs."""
    other_sets = [set(o) for o in others]
    for a in range(len(sup)):
        for b in range(a + 1, len(sup)):
            u, v = sup[a], sup[b]
            if all(not (u in o and v in o) for o in other_sets):
                return (u, v)
    return None


def _lp_redundant(
    sup: tuple[int, ...], others: list[tuple[int, ...]], dim: int
) -> tuple[bool, list[Fraction]]:
    """Exact test: is max sum_{i in sup} x_i <= 1 subject to the others?"""
    A = [[1 if i + 1 in o else 0 for i in range(dim)] for o in others]
    c = [1 if i + 1 in sup else 0 for i in range(dim)]
    val, x = lp_max(A, [1] * len(others), c)
    return val <= 1, x


def reduce_nonredundant(p: PolytopeH) -> PolytopeH:
    """Drop subset-dominated supports, then LP-certified redundant ones.

    Soundness: with x >= 0 and a shared bound, a support contained in another
    is implied by it; anything else is kept exactly when some point of the
    relaxed polytope exceeds the bound on it (checked exactly at m=1, which
    suffices by homogeneity).
    """
    sups = sorted(set(p.supports), key=lambda s: (len(s), s))
    maximal = [
        s for s in sups
        if not any(set(s) < set(t) for t in sups)
    ]
    kept = list(maximal)
    for sup in list(kept):
        others = [o for o in kept if o != sup]
        if not others:
            continue
        if _pair_certificate(sup, others) is not None:
            continue
        redundant, _ = _lp_redundant(sup, others, p.dim)
        if redundant:
            kept.remove(sup)
    return PolytopeH(p.case, p.dim, tuple(sorted(kept)), p.m)


def nonredundancy_certificates(p: PolytopeH) -> dict[tuple[int, ...], tuple[int, ...]]:
    """For each support, an integer point violating it when relaxed.

    The returned point satisfies every other inequality at some bound m' and
    exceeds m' on the certified one.  Raises if a support is redundant.
    """
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    for sup in p.supports:
        others = [o for o in p.supports if o != sup]
        if not others:
            out[sup] = tuple(1 if i + 1 in sup else 0 for i in range(p.dim))
            continue
        pair = _pair_certificate(sup, others)
        if pair is not None:
            out[sup] = tuple(1 if i + 1 in pair else 0 for i in range(p.dim))
            continue
        redundant, x = _lp_redundant(sup, others, p.dim)
        if redundant:
            raise CertificationError(f"support {sup} of {p.case} is redundant")
        scale = 1
        for v in x:
            scale = scale * v.denominator // gcd(scale, v.denominator)
        out[sup] = tuple(int(v * scale) for v in x)
    return out


def lattice_points(p: PolytopeH) -> tuple[tuple[int, ...], ...]:
    """Exact enumeration of S(m) by depth-first search with residual pruning."""
    n, m = p.dim, p.m
    sups = [tuple(i - 1 for i in s) for s in p.supports]
    in_sup: list[list[int]] = [[] for _ in range(n)]
    for si, s in enumerate(sups):
        for i in s:
            in_sup[i].append(si)
    residual = [m] * len(sups)
    point = [0] * n
    out: list[tuple[int, ...]] = []

    def walk(i: int) -> None:
        if i == n:
            out.append(tuple(point))
            return
        cap = m
        for si in in_sup[i]:
            if residual[si] < cap:
                cap = residual[si]
        for v in range(cap + 1):
            point[i] = v
            for si in in_sup[i]:
                residual[si] -= v
            walk(i + 1)
            for si in in_sup[i]:
                residual[si] += v
        point[i] = 0

    walk(0)
    return tuple(out)


@lru_cache(maxsize=None)
def _points_cached(case: CaseId, m: int) -> frozenset[tuple[int, ...]]:
    return frozenset(lattice_points(build_polytope(case, m)))


def point_count(case: CaseId, m: int) -> int:
    return len(_points_cached(case, m))


def minkowski_sum(
    a: "set[tuple[int, ...]] | frozenset[tuple[int, ...]] | tuple",
    b: "set[tuple[int, ...]] | frozenset[tuple[int, ...]] | tuple",
) -> set[tuple[int, ...]]:
    """{x + y : x in a, y in b}, deduplicated."""
    a, b = list(a), list(b)
    if a and b and len(a[0]) != len(b[0]):
        raise ValueError("Minkowski sum of point sets of different dimensions")
    return {tuple(x + y for x, y in zip(u, v)) for u in a for v in b}


# ---------------------------------------------------------------------------
# Normality


def zorder_sequence(case: CaseId) -> tuple[int, ...]:
    """Name indices in decreasing order for the peeling step (first = maximum).

    This is the normality order where a rewritten diagram is in play and the
    standard order otherwise; every diagram edge descends along it, which is
    what makes path sets concatenate.
    """
    if has_modified_variant(case.lie, case.fund_index):
        return order_sequence(CaseId(case.lie, case.fund_index, NORMALITY))
    return order_sequence(case)


def _max_cochain_below(case: CaseId, supp: set[int]) -> tuple[int, ...]:
    """Greedy maximum of the co-chains inside `supp` for the set order.

    The non-homogeneous lexicographic order on subsets (longer extension of an
    equal prefix wins) is maximised by greedy inclusion along the z-sequence.
    """
    conf = conflict_matrix(build_diagram(case))
    picked: list[int] = []
    for v in zorder_sequence(case):
        if v in supp and all(v not in conf[u] for u in picked):
            picked.append(v)
    return tuple(sorted(picked))


def decompose_step(case: CaseId, s: tuple[int, ...], m: int) -> tuple[int, ...]:
    """One peeling step: the indicator t1 of the maximal co-chain below supp(s).

    Guarantees t1 in S(1)\\{0} and s - t1 in S(m-1); both are checked and a
    failure raises CertificationError, which would falsify the implementation.
    """
    if all(v == 0 for v in s):
        raise ValueError("cannot decompose the zero point")
    if s not in _points_cached(case, m):
        raise ValueError(f"{s} is not a lattice point of P({m}) for {case}")
    supp = {i for i, v in enumerate(s, start=1) if v > 0}
    best = _max_cochain_below(case, supp)
    t1 = tuple(1 if i in best else 0 for i in range(1, len(s) + 1))
    if all(v == 0 for v in t1) or t1 not in _points_cached(case, 1):
        raise CertificationError(f"peeling produced an invalid unit point for {case}")
    rest = tuple(a - b for a, b in zip(s, t1))
    if any(v < 0 for v in rest):
        raise CertificationError(f"peeling went negative at {s} for {case}")
    if rest not in _points_cached(case, m - 1):
        raise CertificationError(f"peeling left S({m-1}) at {s} for {case}")
    return t1


def peel(case: CaseId, s: tuple[int, ...], m: int) -> list[tuple[int, ...]]:
    """Full decomposition of s in S(m) into m unit-polytope points (zeros kept out)."""
    pieces: list[tuple[int, ...]] = []
    cur, k = s, m
    while k > 0 and any(cur):
        t1 = decompose_step(case, cur, k)
        pieces.append(t1)
        cur = tuple(a - b for a, b in zip(cur, t1))
        k -= 1
    if any(cur):
        raise CertificationError(f"point {s} of {case} did not peel to zero")
    return pieces


def certify_normality(case: CaseId, m_max: int) -> list[dict]:
    """Check S(m) = S(m-1) + S(1) for 1 <= m <= m_max, two ways.

    (a) brute-force set equality of both sides, (b) constructive peeling of
    every point of S(m).  Returns one log record per m.
    """
    log: list[dict] = []
    for m in range(1, m_max + 1):
        sm = _points_cached(case, m)
        prev = _points_cached(case, m - 1)
        unit = _points_cached(case, 1)
        brute = minkowski_sum(prev, unit)
        if not brute <= sm:
            raise CertificationError(f"S({m-1})+S(1) escapes S({m}) for {case}")
        brute_ok = brute == sm
        peel_ok = True
        for s in sm:
            pieces = peel(case, s, m)
            if any(p not in unit for p in pieces):
                peel_ok = False
                break
        if not (brute_ok and peel_ok):
            raise CertificationError(
                f"normality failed for {case} at m={m} (brute={brute_ok}, peel={peel_ok})"
            )
        log.append(
            {
                "case": str(case),
                "m": m,
                "points": len(sm),
                "brute_ok": brute_ok,
                "peel_ok": peel_ok,
            }
        )
    return log
