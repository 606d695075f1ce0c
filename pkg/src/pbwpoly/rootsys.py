"""Exact root-system combinatorics for the finite simple Lie algebras.

Roots are stored as integer coefficient vectors over the simple roots in
Bourbaki numbering (for the E series, node 2 is the branch node attached to
node 4).  All arithmetic is exact: squared lengths and pairings go through
`fractions.Fraction` internally so coroot coefficients come out as honest
integers.  Long roots are normalised to squared length 2 per series; only
length ratios matter for any quantity exposed here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "CaseError",
    "LieType",
    "Root",
    "Weight",
    "CaseId",
    "STANDARD",
    "SPANNING",
    "NORMALITY",
    "parse_case",
    "canonical_case",
    "cartan_matrix",
    "simple_root",
    "positive_roots",
    "root_by_coeffs",
    "highest_root",
    "fundamental_weight",
    "pairing",
    "weyl_dim",
    "in_table",
    "table_cases",
    "has_modified_variant",
    "named_roots",
    "order_sequence",
    "support_roots",
    "case_dim",
]


class CaseError(ValueError):
    """Malformed series/rank/weight/variant combination."""


_RANK_OK = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 3,
    "D": lambda n: n >= 4,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

STANDARD = "standard"
SPANNING = "modified-spanning"
NORMALITY = "modified-normality"
_VARIANTS = (STANDARD, SPANNING, NORMALITY)


@dataclass(frozen=True, order=True)
class LieType:
    series: str
    rank: int

    def __post_init__(self) -> None:
        ok = _RANK_OK.get(self.series)
        if ok is None or not ok(self.rank):
            raise CaseError(f"invalid Lie type {self.series}{self.rank}")

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


@dataclass(frozen=True, order=True)
class Root:
    """A positive root: simple-root coefficients plus derived coroot data."""

    coeffs: tuple[int, ...]
    coroot: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __sub__(self, other: "Root") -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coeffs) + ")"


@dataclass(frozen=True)
class Weight:
    """Dominant integral weight in fundamental-weight coordinates."""

    fund_coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.fund_coeffs):
            raise CaseError(f"weight {self.fund_coeffs} is not dominant")


@dataclass(frozen=True, order=True)
class CaseId:
    lie: LieType
    fund_index: int
    variant: str = STANDARD

    def __post_init__(self) -> None:
        if not 1 <= self.fund_index <= self.lie.rank:
            raise CaseError(f"fundamental index {self.fund_index} out of range for {self.lie}")
        if self.variant not in _VARIANTS:
            raise CaseError(f"unknown order variant {self.variant!r}")
        if self.variant != STANDARD and not has_modified_variant(self.lie, self.fund_index):
            raise CaseError(f"{self.lie}:w{self.fund_index} has no modified variant")

    def __str__(self) -> str:
        base = f"{self.lie}:w{self.fund_index}"
        if self.variant == SPANNING:
            return base + ":modified"
        if self.variant == NORMALITY:
            return base + ":normality"
        return base


_VARIANT_TOKENS = {
    "standard": STANDARD,
    "modified": SPANNING,
    "spanning": SPANNING,
    "modified-spanning": SPANNING,
    "normality": NORMALITY,
    "normality-order": NORMALITY,
    "modified-normality": NORMALITY,
}


def parse_case(text: str) -> CaseId:
    """Parse a case string such as ``E7:w7`` or ``B5:w1:modified``."""
    parts = text.strip().split(":")
    if len(parts) not in (2, 3):
        raise CaseError(f"cannot parse case string {text!r}")
    head, windex = parts[0], parts[1]
    if not head or head[0].upper() not in _RANK_OK or not head[1:].isdigit():
        raise CaseError(f"cannot parse Lie type in {text!r}")
    lie = LieType(head[0].upper(), int(head[1:]))
    if not windex.lower().startswith("w") or not windex[1:].isdigit():
        raise CaseError(f"cannot parse weight index in {text!r}")
    variant = STANDARD
    if len(parts) == 3:
        try:
            variant = _VARIANT_TOKENS[parts[2].lower()]
        except KeyError:
            raise CaseError(f"unknown variant token {parts[2]!r}") from None
    return CaseId(lie, int(windex[1:]), variant)


def has_modified_variant(lie: LieType, fund_index: int) -> bool:
    """True for the three families whose standard diagram has a k-chain."""
    return (
        (lie.series == "B" and fund_index == 1)
        or (lie.series == "F" and fund_index == 4)
        or (lie.series == "G" and fund_index == 1)
    )


def in_table(lie: LieType, fund_index: int) -> bool:
    """Membership of (type, weight) in the solved-case table."""
    s, n, k = lie.series, lie.rank, fund_index
    if s == "A":
        return 1 <= k <= n
    if s == "B":
        return k in (1, n)
    if s == "C":
        return k == 1
    if s == "D":
        return k in (1, n - 1, n)
    if s == "E":
        return (n == 6 and k in (1, 6)) or (n == 7 and k == 7)
    if s == "F":
        return k == 4
    return k == 1  # G2


def canonical_case(lie: LieType, fund_index: int) -> CaseId:
    """The working variant for a solved case: modified-spanning where one exists."""
    if not in_table(lie, fund_index):
        raise CaseError(f"{lie}:w{fund_index} is not a solved case")
    variant = SPANNING if has_modified_variant(lie, fund_index) else STANDARD
    return CaseId(lie, fund_index, variant)


def table_cases(max_rank: int = 8) -> list[CaseId]:
    """All solved cases up to the given rank, in canonical variants."""
    out: list[CaseId] = []
    for series, ranks in (
        ("A", range(1, max_rank + 1)),
        ("B", range(2, max_rank + 1)),
        ("C", range(3, max_rank + 1)),
        ("D", range(4, max_rank + 1)),
        ("E", [n for n in (6, 7, 8) if n <= max_rank]),
        ("F", [4] if max_rank >= 4 else []),
        ("G", [2] if max_rank >= 2 else []),
    ):
        for n in ranks:
            lie = LieType(series, n)
            for k in range(1, n + 1):
                if in_table(lie, k):
                    out.append(canonical_case(lie, k))
    return out


# ---------------------------------------------------------------------------
# Cartan data


def _simple_lengths(t: LieType) -> tuple[Fraction, ...]:
    # squared lengths up to a global scale; ratios are what matter
    n = t.rank
    if t.series == "B":
        return tuple([Fraction(2)] * (n - 1) + [Fraction(1)])
    if t.series == "C":
        return tuple([Fraction(1)] * (n - 1) + [Fraction(2)])
    if t.series == "F":
        return (Fraction(2), Fraction(2), Fraction(1), Fraction(1))
    if t.series == "G":
        return (Fraction(1), Fraction(3))
    return tuple([Fraction(2)] * n)


def _dynkin_edges(t: LieType) -> list[tuple[int, int]]:
    # 1-based undirected bonds of the Dynkin diagram
    n = t.rank
    if t.series in ("A", "B", "C", "F", "G"):
        return [(i, i + 1) for i in range(1, n)]
    if t.series == "D":
        return [(i, i + 1) for i in range(1, n - 1)] + [(n - 2, n)]
    # E series: chain 1-3-4-5-...-n, branch node 2 attached to 4
    edges = [(1, 3)] + [(i, i + 1) for i in range(3, n)]
    edges.append((2, 4))
    return edges


@lru_cache(maxsize=None)
def _inner_products(t: LieType) -> tuple[tuple[Fraction, ...], ...]:
    """Symmetric matrix of (alpha_i, alpha_j)."""
    n = t.rank
    lens = _simple_lengths(t)
    G = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        G[i][i] = lens[i]
    for i, j in _dynkin_edges(t):
        # single bond between equal lengths gives -1 * ... ; in general the
        # off-diagonal inner product of joined nodes is -max(len_i, len_j)/2
        v = -max(lens[i - 1], lens[j - 1]) / 2
        G[i - 1][j - 1] = v
        G[j - 1][i - 1] = v
    return tuple(tuple(row) for row in G)


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix a[i][j] = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), 0-based."""
    n = t.rank
    G = _inner_products(t)
    A = []
    for i in range(n):
        row = []
        for j in range(n):
            v = 2 * G[i][j] / G[i][i]
            if v.denominator != 1:
                raise CaseError(f"non-integral Cartan entry for {t}")
            row.append(int(v))
        A.append(tuple(row))
    return tuple(A)


def _norm_sq(t: LieType, coeffs: tuple[int, ...]) -> Fraction:
    G = _inner_products(t)
    n = t.rank
    total = Fraction(0)
    for i in range(n):
        if coeffs[i]:
            for j in range(n):
                if coeffs[j]:
                    total += coeffs[i] * coeffs[j] * G[i][j]
    return total


def _make_root(t: LieType, coeffs: tuple[int, ...]) -> Root:
    lens = _simple_lengths(t)
    nsq = _norm_sq(t, coeffs)
    coroot = []
    for i, c in enumerate(coeffs):
        v = c * lens[i] / nsq
        if v.denominator != 1:
            raise CaseError(f"non-integral coroot coefficient for {coeffs} in {t}")
        coroot.append(int(v))
    return Root(coeffs, tuple(coroot))


def simple_root(t: LieType, i: int) -> Root:
    """The i-th simple root (1-based)."""
    if not 1 <= i <= t.rank:
        raise CaseError(f"simple-root index {i} out of range for {t}")
    coeffs = tuple(1 if j == i - 1 else 0 for j in range(t.rank))
    return _make_root(t, coeffs)


@lru_cache(maxsize=None)
def positive_roots(t: LieType) -> tuple[Root, ...]:
    """All positive roots, sorted by height then by coefficient vector.

    Built by the usual root-string closure from the Cartan matrix: beta+alpha_i
    is a root iff the alpha_i-string through beta descends far enough, i.e.
    p - <beta, alpha_i^vee> >= 1 with p the depth of the string below beta.
    """
    n = t.rank
    A = cartan_matrix(t)
    found: set[tuple[int, ...]] = set()
    layer = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    found.update(layer)
    while layer:
        nxt: list[tuple[int, ...]] = []
        for beta in layer:
            for i in range(n):
                up = tuple(c + (1 if j == i else 0) for j, c in enumerate(beta))
                if up in found:
                    continue
                p = 0
                cur = list(beta)
                while True:
                    cur[i] -= 1
                    if cur[i] < 0 or tuple(cur) not in found:
                        break
                    p += 1
                pair = sum(A[i][j] * beta[j] for j in range(n))
                if p - pair >= 1:
                    found.add(up)
                    nxt.append(up)
        layer = nxt
    roots = sorted(found, key=lambda c: (sum(c), c))
    return tuple(_make_root(t, c) for c in roots)


@lru_cache(maxsize=None)
def _root_index(t: LieType) -> dict[tuple[int, ...], Root]:
    return {r.coeffs: r for r in positive_roots(t)}


def root_by_coeffs(t: LieType, coeffs: tuple[int, ...]) -> Root | None:
    """Look up a positive root by coefficient vector, or None."""
    return _root_index(t).get(tuple(coeffs))


def highest_root(t: LieType) -> Root:
    return positive_roots(t)[-1]


def fundamental_weight(t: LieType, i: int) -> Weight:
    if not 1 <= i <= t.rank:
        raise CaseError(f"fundamental index {i} out of range for {t}")
    return Weight(tuple(1 if j == i - 1 else 0 for j in range(t.rank)))


def pairing(weight: Weight, beta: Root) -> int:
    """<lambda, beta^vee> for a dominant weight in fundamental coordinates."""
    if any(c < 0 for c in beta.coeffs):
        raise CaseError(f"{beta} is not a positive root")
    return sum(l * c for l, c in zip(weight.fund_coeffs, beta.coroot))


def weyl_dim(t: LieType, weight: Weight) -> int:
    """dim V(lambda) by the Weyl dimension formula, in exact arithmetic."""
    if len(weight.fund_coeffs) != t.rank:
        raise CaseError("weight has wrong rank")
    total = Fraction(1)
    for beta in positive_roots(t):
        num = sum((l + 1) * c for l, c in zip(weight.fund_coeffs, beta.coroot))
        den = sum(beta.coroot)
        total *= Fraction(num, den)
    if total.denominator != 1:
        raise CaseError("Weyl dimension did not come out integral")
    return int(total)


# ---------------------------------------------------------------------------
# Case-level data: the support roots and their total orders


@lru_cache(maxsize=None)
def named_roots(case: CaseId) -> tuple[Root, ...]:
    """The roots pairing >= 1 with omega_i, in naming order.

    Naming order: strictly decreasing height, ties broken by ascending
    lexicographic comparison of the coefficient vectors.  Variable indices,
    co-chain index sets and polytope supports all refer to this order;
    beta_1 is the highest root and beta_N the simple root alpha_i.
    """
    k = case.fund_index
    sel = [r for r in positive_roots(case.lie) if r.coroot[k - 1] >= 1]
    sel.sort(key=lambda r: (-r.height, r.coeffs))
    return tuple(sel)


@lru_cache(maxsize=None)
def order_sequence(case: CaseId) -> tuple[int, ...]:
    """1-based name indices in increasing PBW order (first entry is beta_1).

    For the standard variant this is the identity.  The modified variants
    permute the names: the spanning orders feed the straightening calculus,
    the normality orders make every rewritten-diagram path order-monotone.
    """
    N = len(named_roots(case))
    if case.variant == STANDARD:
        return tuple(range(1, N + 1))
    s, n = case.lie.series, case.lie.rank
    if s == "G":
        return (1, 2, 4, 5, 3) if case.variant == SPANNING else (1, 3, 4, 2, 5)
    if s == "F":
        # one order serves both roles: every rewritten-diagram path ascends in it
        return (1, 2, 3, 5, 4) + tuple(range(6, 16))
    # B_n, omega_1
    if n == 2:
        return (2, 1, 3)
    r = n
    if case.variant == SPANNING:
        return (
            tuple(range(1, r))
            + tuple(range(r + 2, N))
            + (r + 1, N, r)
        )
    return (1,) + tuple(range(3, N - 1)) + (2, N - 1, N)


def support_roots(case: CaseId) -> tuple[Root, ...]:
    """The roots of the case in its total order (variant applied)."""
    roots = named_roots(case)
    return tuple(roots[i - 1] for i in order_sequence(case))


def case_dim(case: CaseId, m: int = 1) -> int:
    """dim V(m*omega_i) via the Weyl formula."""
    w = Weight(
        tuple(m if j == case.fund_index - 1 else 0 for j in range(case.lie.rank))
    )
    return weyl_dim(case.lie, w)
