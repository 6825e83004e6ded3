"""Monomial-basis and lattice-point computations of the dimension polynomial.

A monomial e_1^{a_1} ... e_N^{a_N} is admissible when

    a_1 <= l,   a_N <= r,   a_i + a_{i+1} <= k  (1 <= i < N),   a_i >= 0,

and carries bidegree (sum_i i a_i, sum_i a_i). Admissible exponent vectors
are exactly the lattice points of the polytope cut out by those
inequalities (nonnegativity is forced by the exponent interpretation and by
finiteness), so summing q^phi_q z^phi_z over them gives the dimension
polynomial. Two evaluators are provided: direct enumeration, and a
transfer-matrix sweep whose state is the last exponent.
"""

from __future__ import annotations

from functools import lru_cache

from .algebra import LaurentPoly, Params, ParameterError


def enumerate_basis(params: Params) -> list[tuple[int, ...]]:
    """All admissible exponent vectors in lexicographic order."""
    params.require_standard("enumerate_basis")
    N, k, l, r = params.N, params.k, params.l, params.r
    out: list[tuple[int, ...]] = []
    vec = [0] * N

    def fill(pos: int) -> None:
        if pos == N:
            out.append(tuple(vec))
            return
        hi = min(l, k) if pos == 0 else k - vec[pos - 1]
        if pos == N - 1:
            hi = min(hi, r)
        for a in range(hi + 1):
            vec[pos] = a
            fill(pos + 1)
        vec[pos] = 0

    fill(0)
    return out


def bidegree(vec: tuple[int, ...]) -> tuple[int, int]:
    """(phi_q, phi_z) = (sum_i i a_i, sum_i a_i), positions 1-based."""
    return sum((i + 1) * a for i, a in enumerate(vec)), sum(vec)


def hilbert_by_enumeration(params: Params) -> LaurentPoly:
    """Sum q^phi_q z^phi_z over the enumerated basis."""
    total: dict[tuple[int, int], int] = {}
    for vec in enumerate_basis(params):
        key = bidegree(vec)
        total[key] = total.get(key, 0) + 1
    return LaurentPoly(total)


@lru_cache(maxsize=None)
def hilbert_by_transfer(params: Params) -> LaurentPoly:
    """Transfer-matrix evaluation: a left-to-right sweep carrying, for each
    value of the current exponent in 0..k, the generating function of the
    admissible prefixes. Output is identical to enumeration."""
    params.require_standard("hilbert_by_transfer")
    N, k, l, r = params.N, params.k, params.l, params.r
    state = [LaurentPoly.monomial(a, a) if a <= min(l, k) else LaurentPoly.zero()
             for a in range(k + 1)]
    for pos in range(2, N + 1):
        prefix = [LaurentPoly.zero()] * (k + 2)
        for a in range(k + 1):
            prefix[a + 1] = prefix[a] + state[a]
        state = [prefix[k - b + 1] * LaurentPoly.monomial(pos * b, b) for b in range(k + 1)]
    result = LaurentPoly.zero()
    for a in range(min(r, k) + 1):
        result = result + state[a]
    return result


def recursion_rhs(params: Params) -> LaurentPoly:
    """Right side of the boundary recursion

        d_N(k, l, r) = d_N(k, l, r-1) + (q^N z)^r d_{N-1}(k, l, k-r),

    both summands computed by the transfer sweep. Requires r >= 1 and
    N >= 3 so the shorter chain stays in the N >= 2 regime. When r > k the
    second summand has a negative right bound, i.e. an empty basis, and is
    zero.
    """
    params.require_standard("recursion_rhs")
    N, k, l, r = params.N, params.k, params.l, params.r
    if r < 1:
        raise ParameterError("recursion_rhs requires r >= 1")
    if N < 3:
        raise ParameterError("recursion_rhs requires N >= 3")
    left = hilbert_by_transfer(Params(N, k, l, r - 1))
    if k - r < 0:
        return left
    right = hilbert_by_transfer(Params(N - 1, k, l, k - r))
    return left + LaurentPoly.monomial(N * r, r) * right


def reflect_transform(poly: LaurentPoly, N: int) -> LaurentPoly:
    """Exponent transform induced by reversing the variables e_i -> e_{N-i+1}:
    q^i z^j maps to q^{(N+1)j - i} z^j."""
    return LaurentPoly({((N + 1) * j - i, j): c for (i, j), c in poly.items()})


def reflect_check(params: Params) -> bool:
    """True iff d_N(k, l, r) equals the reflection transform of d_N(k, r, l)."""
    params.require_standard("reflect_check")
    direct = hilbert_by_transfer(params)
    swapped = hilbert_by_transfer(Params(params.N, params.k, params.r, params.l))
    return direct == reflect_transform(swapped, params.N)


def degree_bounds(params: Params) -> tuple[int, int]:
    """Maxima of phi_q and phi_z over the admissible vectors, by the same
    sweep with max in place of sum."""
    params.require_standard("degree_bounds")
    N, k, l, r = params.N, params.k, params.l, params.r
    # state[a] = (max phi_q, max phi_z) over admissible prefixes ending in a
    state: dict[int, tuple[int, int]] = {a: (a, a) for a in range(min(l, k) + 1)}
    for pos in range(2, N + 1):
        nxt: dict[int, tuple[int, int]] = {}
        for b in range(k + 1):
            feed = [state[a] for a in state if a + b <= k]
            if not feed:
                continue
            nxt[b] = (max(mq for mq, _ in feed) + pos * b,
                      max(mz for _, mz in feed) + b)
        state = nxt
    finals = [state[a] for a in state if a <= r]
    return max(mq for mq, _ in finals), max(mz for _, mz in finals)


def default_cutoff(params: Params) -> int:
    """Series comparison depth maxdeg_q + 2(N+1): past the polynomial's
    support with margin to witness cancellation of the infinite tails."""
    maxq, _ = degree_bounds(params)
    return maxq + 2 * (params.N + 1)
