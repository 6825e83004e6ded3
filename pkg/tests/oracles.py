"""Independent brute-force oracles.

Everything here is deliberately dumb and self-contained: plain dict
arithmetic, exhaustive filters, and rational-point evaluation. The oracles
never call the code paths they are used to check.
"""

import itertools
from fractions import Fraction


def admissible_vectors(N, k, l, r):
    """Exhaustive filter of {0..k}^N against the three defining inequalities."""
    out = []
    for a in itertools.product(range(k + 1), repeat=N):
        if a[0] <= l and a[-1] <= r and all(a[i] + a[i + 1] <= k for i in range(N - 1)):
            out.append(a)
    return out


def hilbert_oracle(N, k, l, r):
    """{(sum i*a_i, sum a_i): multiplicity} over the admissible vectors."""
    terms = {}
    for a in admissible_vectors(N, k, l, r):
        key = (sum((i + 1) * x for i, x in enumerate(a)), sum(a))
        terms[key] = terms.get(key, 0) + 1
    return terms


def _u_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _u_divide_exact(num, den):
    """Exact long division of univariate integer coefficient lists."""
    num = list(num)
    quot = [0] * (len(num) - len(den) + 1)
    for shift in range(len(quot) - 1, -1, -1):
        c = num[shift + len(den) - 1]
        assert c % den[-1] == 0
        q = c // den[-1]
        quot[shift] = q
        for i, d in enumerate(den):
            num[shift + i] -= q * d
    assert all(x == 0 for x in num)
    return quot


def qbinomial_by_product(n, m):
    """Coefficient list of the Gaussian binomial from its product formula
    prod_{i<=n}(1-q^i) / (prod_{i<=m} prod_{i<=n-m}), by exact division."""
    if m < 0 or n < 0 or m > n:
        return [0]

    def poch(t):
        out = [1]
        for i in range(1, t + 1):
            factor = [1] + [0] * (i - 1) + [-1]
            out = _u_mul(out, factor)
        return out

    num = poch(n)
    num = _u_divide_exact(num, poch(m))
    num = _u_divide_exact(num, poch(n - m))
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def convolve(p, q, cutoff=None):
    """Plain dict convolution over (q_exp, z_exp) keys, optionally dropping
    q-degrees above the cutoff."""
    out = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            i = i1 + i2
            if cutoff is not None and i > cutoff:
                continue
            key = (i, j1 + j2)
            out[key] = out.get(key, 0) + c1 * c2
            if out[key] == 0:
                del out[key]
    return out


def geometric_terms(alpha, beta, cutoff):
    """The two stated expansion conventions for 1/(1 - q^alpha z^beta),
    written out directly."""
    if alpha >= 0 and beta >= 0:
        return {(c * alpha, c * beta): 1 for c in range(cutoff // alpha + 1)}
    return {(-c * alpha, -c * beta): -1 for c in range(1, cutoff // (-alpha) + 1)}


def eval_terms(terms, q, z):
    return sum(c * Fraction(q) ** i * Fraction(z) ** j for (i, j), c in terms.items())


def eval_rational_fn(fn, q, z):
    """Evaluate a RationalFn at an exact rational point (away from poles)."""
    val = eval_terms(dict(fn.scaled_numerator().items()), q, z)
    for f in fn.denominator:
        val /= (1 - Fraction(q) ** f.a * Fraction(z) ** f.b)
    return val
