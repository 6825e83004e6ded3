"""Fermionic (Gordon-type) sum for the bigraded dimension polynomial.

The value d_N(k, l, r; q, z) is a finite sum over integer vectors
v in Z_+^k of

    q^(v^t Q v + L.v) z^(sum_i i v_i) *
        prod_i qbinom((N+1) i - (2 Q v + L + R - v)_i, v_i)

with Q_{ij} = min(i, j), L_i = max(i - l, 0) and R_i = max(i - r, 0).
The q-binomial vanishes outside 0 <= m <= n, which makes the sum finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import LaurentPoly, Params, ParameterError


@dataclass(frozen=True)
class GordonData:
    """The coupling matrix and boundary vectors entering the sum."""

    k: int
    Q: tuple[tuple[int, ...], ...]
    L: tuple[int, ...]
    R: tuple[int, ...]


def gordon_data(k: int, l: int, r: int) -> GordonData:
    """Q_{ij} = min(i,j) together with L_i = max(i-l, 0), R_i = max(i-r, 0)."""
    if k < 0 or l < 0 or r < 0:
        raise ParameterError("gordon_data requires k, l, r >= 0")
    Q = tuple(tuple(min(i, j) for j in range(1, k + 1)) for i in range(1, k + 1))
    L = tuple(max(i - l, 0) for i in range(1, k + 1))
    R = tuple(max(i - r, 0) for i in range(1, k + 1))
    return GordonData(k, Q, L, R)


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, m: int) -> LaurentPoly:
    """Gaussian binomial coefficient as a polynomial in q.

    Computed by the q-Pascal recurrence
    [n, m] = [n-1, m-1] + q^m [n-1, m]; zero for m < 0, n < 0 or m > n.
    For 0 <= m <= n the result has nonnegative coefficients and degree
    m(n - m).
    """
    if m < 0 or n < 0 or m > n:
        return LaurentPoly.zero()
    if m == 0 or m == n:
        return LaurentPoly.one()
    return gaussian_binomial(n - 1, m - 1) + LaurentPoly.monomial(m, 0) * gaussian_binomial(n - 1, m)


def binomial_tops(N: int, data: GordonData, v: Sequence[int]) -> list[int]:
    """Upper binomial arguments (N+1)i - (2Qv + L + R - v)_i, one per row.

    Monotone decreasing in every component of v, which the summation loop
    exploits for pruning.
    """
    k = data.k
    tops = []
    for i in range(1, k + 1):
        qv = sum(data.Q[i - 1][j - 1] * v[j - 1] for j in range(1, k + 1))
        tops.append((N + 1) * i - (2 * qv + data.L[i - 1] + data.R[i - 1] - v[i - 1]))
    return tops


def fermionic_term(params: Params, v: Sequence[int]) -> LaurentPoly:
    """The single summand attached to the vector v (zero when any binomial
    is out of range)."""
    data = gordon_data(params.k, params.l, params.r)
    return _term(params.N, data, tuple(v))


def _term(N: int, data: GordonData, v: tuple[int, ...]) -> LaurentPoly:
    k = data.k
    prod = LaurentPoly.one()
    for i, top in enumerate(binomial_tops(N, data, v)):
        prod = prod * gaussian_binomial(top, v[i])
        if prod.is_zero:
            return prod
    vqv = sum(v[i - 1] * v[j - 1] * data.Q[i - 1][j - 1]
              for i in range(1, k + 1) for j in range(1, k + 1))
    lv = sum(data.L[i - 1] * v[i - 1] for i in range(1, k + 1))
    zexp = sum(i * v[i - 1] for i in range(1, k + 1))
    return LaurentPoly.monomial(vqv + lv, zexp) * prod


def identity_lhs_term(N: int, k: int, v: Sequence[int]) -> LaurentPoly:
    """Summand of the generalized Andrews-Gordon identity's fermionic side:

        q^(sum_{i,j} v_i v_j min(i,j)) z^(sum_i i v_i) *
            prod_i qbinom((N+1)i - 2 sum_j v_j min(i,j) + v_i, v_i)

    Implemented separately so the l = r = k specialization of the general
    sum can be checked against it term by term.
    """
    v = tuple(v)
    prod = LaurentPoly.one()
    for i in range(1, k + 1):
        top = (N + 1) * i - 2 * sum(v[j - 1] * min(i, j) for j in range(1, k + 1)) + v[i - 1]
        prod = prod * gaussian_binomial(top, v[i - 1])
        if prod.is_zero:
            return prod
    qexp = sum(v[i - 1] * v[j - 1] * min(i, j) for i in range(1, k + 1) for j in range(1, k + 1))
    zexp = sum(i * v[i - 1] for i in range(1, k + 1))
    return LaurentPoly.monomial(qexp, zexp) * prod


def component_bound(N: int, i: int) -> int:
    """Absolute bound (N+1)i on v_i beyond which every summand vanishes."""
    return (N + 1) * i


def fermionic_sum(params: Params) -> LaurentPoly:
    """Evaluate the full sum over v in Z_+^k.

    Vectors are enumerated depth first with component bound (N+1)i and an
    early cut: tops only decrease as later components grow, so a branch dies
    as soon as some already-set component exceeds its optimistic top.
    """
    params.require_standard("fermionic_sum")
    N, k = params.N, params.k
    if k == 0:
        return LaurentPoly.one()
    data = gordon_data(params.k, params.l, params.r)
    total: dict[tuple[int, int], int] = {}
    v = [0] * k

    def accumulate(term: LaurentPoly) -> None:
        for key, c in term.items():
            s = total.get(key, 0) + c
            if s:
                total[key] = s
            elif key in total:
                del total[key]

    def search(d: int) -> None:
        for val in range(component_bound(N, d + 1) + 1):
            v[d] = val
            tops = binomial_tops(N, data, v)
            if any(tops[i] < v[i] for i in range(d + 1)):
                break
            if d + 1 == k:
                accumulate(_term(N, data, tuple(v)))
            else:
                search(d + 1)
        v[d] = 0

    search(0)
    return LaurentPoly(total)
