"""Theorem-free graded dimensions of the quotient ring, by linear algebra.

The quotient of C[e_1, ..., e_N] by the ideal generated by e_1^(l+1),
e_N^(r+1) and the t-coefficients of e(t)^(k+1), e(t) = sum_s e_s t^s, is
bigraded by deg_q e_s = s, deg_z e_s = 1. Each bigraded piece is finite
dimensional, and its dimension is

    #(monomials of that bidegree) - rank(ideal elements landing there),

where the ideal elements are monomial multiples of the generators. Ranks
are computed over a large prime field (with an exact-rational variant for
auditing). This module deliberately imports nothing from the other
evaluators: it is the independent check on all of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial

from .algebra import LaurentPoly, Params

# Word-sized prime, far above any multinomial coefficient or matrix entry
# produced at desk scale; invertibility needs p > k+1.
PRIME = 2**31 - 1

Monomial = tuple[int, ...]  # exponent vector over e_1 .. e_N


@dataclass(frozen=True)
class Generator:
    name: str
    terms: tuple[tuple[Monomial, int], ...]
    bidegree: tuple[int, int]


@dataclass(frozen=True)
class IdealGeneratorSet:
    generators: tuple[Generator, ...]


def ideal_generators(params: Params) -> IdealGeneratorSet:
    """e_1^(l+1), e_N^(r+1), and the coefficient of t^i in e(t)^(k+1) for
    each k+1 <= i <= N(k+1), with true multinomial coefficients."""
    params.require_standard("ideal_generators")
    N, k, l, r = params.N, params.k, params.l, params.r
    gens: list[Generator] = []

    def power_monomial(var: int, exp: int) -> Monomial:
        m = [0] * N
        m[var - 1] = exp
        return tuple(m)

    gens.append(Generator(f"e1^{l + 1}", ((power_monomial(1, l + 1), 1),), (l + 1, l + 1)))
    gens.append(Generator(f"e{N}^{r + 1}", ((power_monomial(N, r + 1), 1),), (N * (r + 1), r + 1)))

    by_weight: dict[int, dict[Monomial, int]] = {}
    for combo in combinations_with_replacement(range(1, N + 1), k + 1):
        weight = sum(combo)
        exps = [0] * N
        for s in combo:
            exps[s - 1] += 1
        coeff = factorial(k + 1)
        for e in exps:
            coeff //= factorial(e)
        by_weight.setdefault(weight, {})[tuple(exps)] = coeff
    for i in range(k + 1, N * (k + 1) + 1):
        terms = tuple(sorted(by_weight.get(i, {}).items()))
        gens.append(Generator(f"e(t)^{k + 1}[t^{i}]", terms, (i, k + 1)))
    return IdealGeneratorSet(tuple(gens))


def monomials_of_bidegree(N: int, i: int, j: int) -> list[Monomial]:
    """Exponent vectors a >= 0 of length N with sum a_s = j, sum s a_s = i."""
    out: list[Monomial] = []
    vec = [0] * N

    def fill(pos: int, deg_left: int, weight_left: int) -> None:
        if pos == N:
            if deg_left == 0 and weight_left == 0:
                out.append(tuple(vec))
            return
        s = pos + 1
        # remaining positions have weight at least s each
        hi = min(deg_left, weight_left // s)
        for a in range(hi + 1):
            vec[pos] = a
            fill(pos + 1, deg_left - a, weight_left - s * a)
        vec[pos] = 0

    if i >= 0 and j >= 0:
        fill(0, j, i)
    return out


def _rank_mod_p(rows: list[list[int]], p: int) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    rows = [[x % p for x in row] for row in rows]
    for col in range(ncols):
        pivot = next((rr for rr in range(rank, len(rows)) if rows[rr][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for rr in range(len(rows)):
            if rr != rank and rows[rr][col]:
                f = rows[rr][col]
                rows[rr] = [(x - f * y) % p for x, y in zip(rows[rr], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rank_exact(rows: list[list[int]]) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    work = [[Fraction(x) for x in row] for row in rows]
    for col in range(ncols):
        pivot = next((rr for rr in range(rank, len(work)) if work[rr][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for rr in range(len(work)):
            if rr != rank and work[rr][col]:
                f = work[rr][col]
                work[rr] = [x - f * y for x, y in zip(work[rr], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def _ideal_rows(params: Params, i: int, j: int) -> tuple[list[Monomial], list[list[int]]]:
    basis = monomials_of_bidegree(params.N, i, j)
    index = {mono: c for c, mono in enumerate(basis)}
    rows: set[tuple[int, ...]] = set()
    for gen in ideal_generators(params).generators:
        gq, gz = gen.bidegree
        if gq > i or gz > j:
            continue
        for mu in monomials_of_bidegree(params.N, i - gq, j - gz):
            row = [0] * len(basis)
            for exps, c in gen.terms:
                prod = tuple(x + y for x, y in zip(mu, exps))
                row[index[prod]] += c
            rows.add(tuple(row))
    return basis, [list(row) for row in sorted(rows)]


def graded_dimension(params: Params, i: int, j: int, exact: bool = False) -> int:
    """dim of the quotient's (i, j) piece via exact rank computation."""
    params.require_standard("graded_dimension")
    if i < 0 or j < 0:
        return 0
    basis, rows = _ideal_rows(params, i, j)
    if not rows:
        return len(basis)
    rank = _rank_exact(rows) if exact else _rank_mod_p(rows, PRIME)
    return len(basis) - rank


def hilbert_by_quotient(params: Params, qbound: int) -> LaurentPoly:
    """Sum of graded dimensions q^i z^j for i <= qbound.

    Only j <= i can be nonzero since deg_q >= deg_z for every variable; when
    qbound is at least the maximal q-degree this is the full dimension
    polynomial.
    """
    params.require_standard("hilbert_by_quotient")
    terms: dict[tuple[int, int], int] = {}
    for i in range(qbound + 1):
        for j in range(i + 1):
            d = graded_dimension(params, i, j)
            if d:
                terms[(i, j)] = d
    return LaurentPoly(terms)
