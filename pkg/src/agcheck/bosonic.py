"""Vertex-cone (bosonic) expansion of the dimension polynomial.

Each pair (m, n) with m + n <= N labels a vertex

    M_{m,n} = (l, k-l, l, ... [m entries], 0, ..., 0, ..., r, k-r, r [n entries])

of the admissibility polytope. Its tangent cone is simplicial with
generators v^1, ..., v^N, and contributes the fraction

    q^phi_q(M) z^phi_z(M) / prod_i (1 - q^phi_q(v^i) z^phi_z(v^i)),

whose factor exponents come in five blocks indexed by floor brackets of m
and n. Expanded as series in nonnegative powers of q and z, the
contributions add up, over the even- or odd-boundary selection d^e / d^o,
to the dimension polynomial; at l = r = k groups of four vertices merge and
produce the product side of the generalized Andrews-Gordon identity, and
for odd N the corner vertices merge into a single singular contribution
whose polynomiality after clearing prod_{i=1..N} (1 - q^-i z^-1) is an open
experiment rather than a theorem.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .algebra import (BinomialFactor, LaurentPoly, ParameterError, Params,
                      RationalFn, Series, expand_rational, divide_exact,
                      rational_add)
from .fermionic import fermionic_sum

PARITIES = ("even", "odd")


@dataclass(frozen=True)
class VertexContribution:
    """A vertex, its cone data, and the attached fraction."""

    m: int
    n: int
    coordinates: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    rational: RationalFn
    phi_q: int
    phi_z: int


def _require_vertex(N: int, m: int, n: int) -> None:
    if m < 0 or n < 0:
        raise ParameterError("vertex indices m, n must be >= 0")
    if m + n > N:
        raise ParameterError(f"vertex index (m, n) = ({m}, {n}) needs m + n <= N = {N}")


def vertex_coordinates(params: Params, m: int, n: int) -> tuple[int, ...]:
    """The alternating coordinate pattern of M_{m,n}: l, k-l, ... from the
    left for m entries, ..., r, k-r, r read backwards from position N for n
    entries, zeros between."""
    N, k, l, r = params.N, params.k, params.l, params.r
    _require_vertex(N, m, n)
    coords = [0] * N
    for idx in range(m):
        coords[idx] = l if idx % 2 == 0 else k - l
    for idx in range(n):
        coords[N - 1 - idx] = r if idx % 2 == 0 else k - r
    return tuple(coords)


def cone_generators(N: int, m: int, n: int) -> list[tuple[int, ...]]:
    """Generators v^1 .. v^N of the tangent cone at M_{m,n}: alternating
    +-1 blocks ending at position m for i <= m, unit vectors in the middle,
    and reversed alternating blocks starting at position N-n+1 for i > N-n."""
    _require_vertex(N, m, n)
    gens = []
    for i in range(1, N + 1):
        v = [0] * N
        if i <= m:
            for jj in range(1, i + 1):
                v[m - i + jj - 1] = (-1) ** jj
        elif i <= N - n:
            v[i - 1] = 1
        else:
            length = N - i + 1
            for jj in range(1, length + 1):
                v[N - n + jj - 1] = (-1) ** (N - i + 2 - jj)
        gens.append(tuple(v))
    return gens


def generator_phi(vec: tuple[int, ...]) -> tuple[int, int]:
    """(phi_q, phi_z) of an integer vector."""
    return sum((i + 1) * x for i, x in enumerate(vec)), sum(vec)


def generator_phi_table(N: int, m: int, n: int, i: int) -> tuple[int, int]:
    """The tabulated (phi_q(v^i), phi_z(v^i)), independent of k, l, r.

    Five cases: i <= m splits on the parity of i, the middle block is the
    plain (i, 1), and i > N-n splits on the parity of N - i.
    """
    if i <= m:
        if i % 2 == 0:
            return (i // 2, 0)
        return ((i - 1) // 2 - m, -1)
    if i <= N - n:
        return (i, 1)
    if (N - i) % 2 == 0:
        return (n - 1 - (3 * N - i) // 2, -1)
    return (-(N - i + 1) // 2, 0)


def _oriented_factors(N: int, m: int, n: int) -> list[tuple[int, int]]:
    """Denominator factor exponents in their original orientation, as the
    five blocks indexed by floor(m/2) and floor(n/2)."""
    fs: list[tuple[int, int]] = []
    fs += [(i, 0) for i in range(1, m // 2 + 1)]
    fs += [(-i, -1) for i in range(m // 2 + 1, m + 1)]
    fs += [(i, 1) for i in range(m + 1, N - n + 1)]
    fs += [(-i, 0) for i in range(1, n // 2 + 1)]
    fs += [(i - N - 1, -1) for i in range(n // 2 + 1, n + 1)]
    return fs


def vertex_contribution(params: Params, m: int, n: int) -> VertexContribution:
    """The fraction attached to M_{m,n}, valid for any integer k, l, r.

    The factor-exponent multiset is cross-checked against the phi values of
    the cone generators, which the tabulated five-case formula must also
    reproduce.
    """
    N = params.N
    coords = vertex_coordinates(params, m, n)
    phi_q, phi_z = generator_phi(coords)
    gens = cone_generators(N, m, n)
    oriented = _oriented_factors(N, m, n)
    phis = [generator_phi(v) for v in gens]
    assert sorted(oriented) == sorted(phis), \
        f"factor blocks disagree with cone generators at N={N}, (m,n)=({m},{n})"
    assert all(generator_phi_table(N, m, n, i + 1) == phis[i] for i in range(N)), \
        f"tabulated phi values disagree with cone generators at N={N}, (m,n)=({m},{n})"
    rational = RationalFn.over_oriented_factors(1, phi_q, phi_z, LaurentPoly.one(), oriented)
    return VertexContribution(m, n, coords, tuple(gens), rational, phi_q, phi_z)


@lru_cache(maxsize=None)
def vertex_series(params: Params, m: int, n: int, cutoff: int) -> Series:
    """Series expansion of the vertex contribution through the cutoff."""
    return expand_rational(vertex_contribution(params, m, n).rational, cutoff)


def vertex_pairs(N: int, parity: str) -> list[tuple[int, int]]:
    """All (m, n) with m + n < N, plus the boundary m + n = N restricted to
    the given parity of m."""
    if parity not in PARITIES:
        raise ParameterError(f"parity must be one of {PARITIES}")
    want_even = parity == "even"
    pairs = []
    for m in range(N + 1):
        for n in range(N - m + 1):
            if m + n == N and (m % 2 == 0) != want_even:
                continue
            pairs.append((m, n))
    return pairs


def bosonic_sum(params: Params, parity: str, cutoff: int) -> Series:
    """d^e or d^o: the sum of all vertex series with the chosen boundary
    parity, exact through the cutoff."""
    total: dict[tuple[int, int], int] = {}
    for m, n in vertex_pairs(params.N, parity):
        for key, c in vertex_series(params, m, n, cutoff).poly.items():
            s = total.get(key, 0) + c
            if s:
                total[key] = s
            elif key in total:
                del total[key]
    return Series(LaurentPoly(total), cutoff)


def select_case(params: Params) -> frozenset[str]:
    """Which of d^e / d^o equals the dimension polynomial: for odd N the
    even sum needs l >= r and the odd sum l <= r; for even N the odd sum
    needs l + r <= k and the even sum l + r >= k. Both apply on the
    boundary of the inequality."""
    if params.l < 0 or params.r < 0:
        raise ParameterError("select_case requires l >= 0 and r >= 0")
    cases = set()
    if params.N % 2 == 1:
        if params.l <= params.r:
            cases.add("odd")
        if params.l >= params.r:
            cases.add("even")
    else:
        if params.l + params.r <= params.k:
            cases.add("odd")
        if params.l + params.r >= params.k:
            cases.add("even")
    return frozenset(cases)


def grouped_closed_form(N: int, k: int, m: int, n: int) -> RationalFn:
    """Closed form of the merged contribution at l = r = k:

        z^(k(m+n)) q^(k(m^2 + (N+1)n - n^2)) /
            [ prod_{i=1..m} (1-q^i)(1-q^(-i-m+1) z^-1)
              prod_{i=2m+1..N-2n} (1-q^i z)
              prod_{i=1..n} (1-q^-i)(1-q^(-N+i+n-2) z^-1) ].
    """
    if m < 0 or n < 0:
        raise ParameterError("grouped indices m, n must be >= 0")
    if 2 * m + 2 * n > N:
        raise ParameterError(f"grouped vertex (m, n) = ({m}, {n}) needs 2m + 2n <= N = {N}")
    oriented: list[tuple[int, int]] = []
    oriented += [(i, 0) for i in range(1, m + 1)]
    oriented += [(-i - m + 1, -1) for i in range(1, m + 1)]
    oriented += [(i, 1) for i in range(2 * m + 1, N - 2 * n + 1)]
    oriented += [(-i, 0) for i in range(1, n + 1)]
    oriented += [(-N + i + n - 2, -1) for i in range(1, n + 1)]
    phi_q = k * (m * m + (N + 1) * n - n * n)
    phi_z = k * (m + n)
    return RationalFn.over_oriented_factors(1, phi_q, phi_z, LaurentPoly.one(), oriented)


def grouped_contribution(N: int, k: int, m: int, n: int) -> tuple[RationalFn, RationalFn]:
    """(closed form, four-term sum) for the merged vertex at l = r = k.

    The four-term sum is over the contributions with indices (2m - i, 2n - j),
    i, j in {0, 1}, terms with a negative index being zero. The two must be
    equal as rational functions; callers assert it, the verification suite
    checks it across grids.
    """
    closed = grouped_closed_form(N, k, m, n)
    params = Params(N, k, k, k)
    sum4 = RationalFn.zero()
    for di in (0, 1):
        for dj in (0, 1):
            a, b = 2 * m - di, 2 * n - dj
            if a < 0 or b < 0:
                continue
            sum4 = rational_add(sum4, vertex_contribution(params, a, b).rational)
    return closed, sum4


def andrews_gordon_check(N: int, k: int, cutoff: int) -> bool:
    """Generalized Andrews-Gordon identity at even N: the fermionic sum at
    l = r = k equals the sum over m + n <= N/2 of the merged closed forms,
    compared as series through the cutoff."""
    if N % 2 != 0 or N < 2:
        raise ParameterError("andrews_gordon_check requires even N >= 2")
    if k < 0:
        raise ParameterError("andrews_gordon_check requires k >= 0")
    lhs = fermionic_sum(Params(N, k, k, k))
    total: dict[tuple[int, int], int] = {}
    for m in range(N // 2 + 1):
        for n in range(N // 2 - m + 1):
            rhs_term = expand_rational(grouped_closed_form(N, k, m, n), cutoff)
            for key, c in rhs_term.poly.items():
                s = total.get(key, 0) + c
                if s:
                    total[key] = s
                elif key in total:
                    del total[key]
    return Series(LaurentPoly(total), cutoff).matches_poly(lhs)


def singular_vertex_indices(N: int) -> list[tuple[int, int]]:
    """The corner indices (i, j), i + j = N with i even, merging into the
    singular point for odd N."""
    return [(i, N - i) for i in range(0, N + 1, 2)]


def singular_contribution(N: int, k: int) -> tuple[RationalFn, Optional[LaurentPoly]]:
    """Sum d_M' of the corner contributions at l = r = k for odd N, and the
    candidate P with d_M' = P / prod_{i=1..N} (1 - q^-i z^-1).

    P is obtained by clearing the target denominator exactly; None when some
    division fails, which is a reported outcome, not an error.
    """
    if N % 2 == 0 or N < 3:
        raise ParameterError("singular_contribution requires odd N >= 3")
    params = Params(N, k, k, k)
    dM = RationalFn.zero()
    for i, j in singular_vertex_indices(N):
        dM = rational_add(dM, vertex_contribution(params, i, j).rational)
    # prod_{i=1..N} (1 - q^-i z^-1) = (-1)^N q^(-N(N+1)/2) z^-N prod (1 - q^i z)
    target_counter = Counter({BinomialFactor(i, 1): 1 for i in range(1, N + 1)})
    den = dM.denominator_counter()
    common = den & target_counter
    extra_target = target_counter - common
    extra_den = den - common
    num = dM.scaled_numerator()
    num = num * LaurentPoly.monomial(-N * (N + 1) // 2, -N, (-1) ** N)
    for f, mult in sorted(extra_target.items()):
        num = num * (f.as_poly() ** mult)
    for f, mult in sorted(extra_den.items()):
        for _ in range(mult):
            quotient = divide_exact(num, f)
            if quotient is None:
                return dM, None
            num = quotient
    return dM, num
