"""Concrete minuscule models giving independent counting checks.

For A_n the co-chains act on the highest wedge e_1 ^ ... ^ e_k by swapping
row indices for shifted column indices; distinctness of the resulting
k-subsets proves the count.  For the B/D spin cases each co-chain member
flips signs in an orthogonal-coordinate weight vector, landing in the
appropriate parity class.  Signs of the model vectors themselves are
dropped: label distinctness is all the counting argument needs.
"""

from __future__ import annotations

from functools import lru_cache

from .rootsys import CaseError, CaseId, Root, in_table, named_roots

__all__ = ["wedge_image", "spin_image", "known_dim", "epsilon_coords"]


def epsilon_coords(case: CaseId, root: Root) -> tuple[int, ...]:
    """Orthogonal-coordinate view of a B- or D-series root."""
    t = case.lie
    n = t.rank
    c = root.coeffs
    if t.series == "B":
        prev = (0,) + c[:-1]
        return tuple(a - b for a, b in zip(c, prev))
    if t.series == "D":
        out = list(c[: n - 2]) + [0, 0]
        prev = (0,) + tuple(c[: n - 3])
        out[: n - 2] = [a - b for a, b in zip(c[: n - 2], prev)]
        out[n - 2] = c[n - 2] + c[n - 1] - (c[n - 3] if n >= 3 else 0)
        out[n - 1] = c[n - 1] - c[n - 2]
        return tuple(out)
    raise CaseError(f"epsilon coordinates are only defined for B/D, not {t}")


def _an_interval(root: Root) -> tuple[int, int]:
    c = root.coeffs
    i = c.index(1) + 1
    j = len(c) - tuple(reversed(c)).index(1)
    return i, j


def wedge_image(case: CaseId, pbar: tuple[int, ...]) -> tuple[int, ...]:
    """Image of a co-chain in the k-th wedge of the vector representation.

    Each member alpha_{i,j} replaces basis index i by j+1 in {1..k}; the
    result is the sorted k-subset labelling the model vector.
    """
    if case.lie.series != "A":
        raise CaseError(f"wedge model applies to type A only, not {case.lie}")
    k = case.fund_index
    roots = named_roots(case)
    label = set(range(1, k + 1))
    for name in pbar:
        i, j = _an_interval(roots[name - 1])
        if i not in label:
            raise ValueError(f"{pbar} is not a co-chain: row {i} reused")
        label.remove(i)
        if j + 1 in label:
            raise ValueError(f"{pbar} is not a co-chain: column {j + 1} reused")
        label.add(j + 1)
    return tuple(sorted(label))


def spin_image(case: CaseId, pbar: tuple[int, ...]) -> tuple[int, ...]:
    """Sign vector of a co-chain in the spin model.

    Starts from the highest weight (all +1; for D_n omega_{n-1} the last slot
    starts at -1) and flips the orthogonal coordinates carried by each member.
    """
    t = case.lie
    n, k = t.rank, case.fund_index
    spin_b = t.series == "B" and k == n
    spin_d = t.series == "D" and k in (n - 1, n)
    if not (spin_b or spin_d):
        raise CaseError(f"{case} is not a spin case")
    signs = [1] * n
    if t.series == "D" and k == n - 1:
        signs[n - 1] = -1
    roots = named_roots(case)
    for name in pbar:
        eps = epsilon_coords(case, roots[name - 1])
        for i, e in enumerate(eps):
            if e:
                signs[i] = -signs[i]
    flips = sum(1 for s in signs if s == -1)
    if t.series == "D" and flips % 2 != (1 if k == n - 1 else 0):
        raise ValueError(f"{pbar} broke the parity invariant of {case}")
    return tuple(signs)


@lru_cache(maxsize=None)
def known_dim(case: CaseId) -> int:
    """The classical dimension of V(omega_i) for a solved case."""
    t, k = case.lie, case.fund_index
    s, n = t.series, t.rank
    if not in_table(t, k):
        raise CaseError(f"{case} is outside the solved-case table")
    if s == "A":
        from math import comb

        return comb(n + 1, k)
    if s == "B":
        return 2 * n + 1 if k == 1 else 2**n
    if s == "C":
        return 2 * n
    if s == "D":
        return 2 * n if k == 1 else 2 ** (n - 1)
    if s == "E":
        return 27 if n == 6 else 56
    if s == "F":
        return 26
    return 7  # G2
