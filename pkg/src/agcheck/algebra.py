"""Exact sparse arithmetic in the two variables q and z.

Everything in this package reduces to computations with four kinds of
values:

* :class:`LaurentPoly` -- a sparse Laurent polynomial with integer
  coefficients, the universal result carrier;
* :class:`Series` -- a polynomial together with a q-degree cutoff,
  representing a power series known exactly through that cutoff;
* :class:`BinomialFactor` -- a factor ``1 - q^a z^b`` in canonical
  orientation;
* :class:`RationalFn` -- a signed monomial times a numerator over a
  multiset of binomial factors, compared by cross multiplication.

Coefficients are plain Python ints, so every operation is exact; nothing
here ever rounds.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Union


class ParameterError(ValueError):
    """A precondition on (N, k, l, r) or on operation arguments is violated."""


class ExpansionRegionError(ValueError):
    """Raised for factors q^a z^b with a, b of mixed sign: neither of the two
    supported geometric expansion conventions applies."""


TermMap = Mapping[tuple[int, int], int]


class LaurentPoly:
    """Sparse Laurent polynomial in q and z over the integers.

    Terms are stored as a dict mapping ``(q_exponent, z_exponent)`` to a
    nonzero int. Instances are treated as immutable: all operations return
    new objects, and callers must not mutate the mapping handed back by
    :meth:`items`.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[TermMap, Iterable[tuple[tuple[int, int], int]], None] = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for (i, j), c in items:
                if c:
                    key = (i, j)
                    s = clean.get(key, 0) + c
                    if s:
                        clean[key] = s
                    elif key in clean:
                        del clean[key]
        self._terms = clean

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "LaurentPoly":
        return cls({(i, j): coeff})

    # -- basic queries --------------------------------------------------

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        return iter(self._terms.items())

    def sorted_items(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self._terms.items())

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def max_qdeg(self) -> Optional[int]:
        return max((i for i, _ in self._terms), default=None)

    def min_qdeg(self) -> Optional[int]:
        return min((i for i, _ in self._terms), default=None)

    def support_box(self) -> Optional[tuple[tuple[int, int], tuple[int, int]]]:
        """((qmin, qmax), (zmin, zmax)) over the support, or None if zero."""
        if not self._terms:
            return None
        qs = [i for i, _ in self._terms]
        zs = [j for _, j in self._terms]
        return (min(qs), max(qs)), (min(zs), max(zs))

    def at_ones(self) -> int:
        """Value at q = z = 1, i.e. the coefficient sum."""
        return sum(self._terms.values())

    # -- arithmetic ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        big, small = self._terms, other._terms
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for key, c in small.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            elif key in out:
                del out[key]
        p = LaurentPoly.__new__(LaurentPoly)
        p._terms = out
        return p

    def __neg__(self) -> "LaurentPoly":
        p = LaurentPoly.__new__(LaurentPoly)
        p._terms = {key: -c for key, c in self._terms.items()}
        return p

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: Union["LaurentPoly", int]) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly.zero()
            p = LaurentPoly.__new__(LaurentPoly)
            p._terms = {key: c * other for key, c in self._terms.items()}
            return p
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                elif key in out:
                    del out[key]
        p = LaurentPoly.__new__(LaurentPoly)
        p._terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def truncate_q(self, cutoff: int) -> "LaurentPoly":
        """Drop all terms of q-degree above ``cutoff``."""
        p = LaurentPoly.__new__(LaurentPoly)
        p._terms = {key: c for key, c in self._terms.items() if key[0] <= cutoff}
        return p

    # -- rendering -------------------------------------------------------

    def text(self) -> str:
        """Canonical text form: terms sorted by (q_exp, z_exp) ascending."""
        if not self._terms:
            return "0"
        parts = []
        for (i, j) in sorted(self._terms):
            c = self._terms[(i, j)]
            vars_ = []
            if i == 1:
                vars_.append("q")
            elif i != 0:
                vars_.append(f"q^{i}")
            if j == 1:
                vars_.append("z")
            elif j != 0:
                vars_.append(f"z^{j}")
            if not vars_:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(vars_))
            elif c == -1:
                parts.append("-" + "*".join(vars_))
            else:
                parts.append(f"{c}*" + "*".join(vars_))
        return " + ".join(parts)

    def machine_terms(self) -> list[list]:
        """Canonical machine form: [q_exp, z_exp, coefficient-as-string]."""
        return [[i, j, str(self._terms[(i, j)])] for (i, j) in sorted(self._terms)]

    @classmethod
    def from_machine_terms(cls, terms: Iterable) -> "LaurentPoly":
        return cls({(int(i), int(j)): int(c) for i, j, c in terms})

    def __repr__(self) -> str:
        return f"LaurentPoly({self.text()})"


@dataclass(frozen=True, order=True)
class Params:
    """The parameter quadruple (N, k, l, r).

    Construction only checks N >= 1 so that the formal vertex series, which
    make sense for any integer k, l, r and descend to chain length N - 1 = 1
    in recursions, stay expressible. Methods that enumerate monomials call
    :meth:`require_standard`, which enforces the full quotient-ring regime.
    """

    N: int
    k: int
    l: int
    r: int

    def __post_init__(self):
        for name in ("N", "k", "l", "r"):
            if not isinstance(getattr(self, name), int):
                raise ParameterError(f"{name} must be an integer")
        if self.N < 1:
            raise ParameterError("N >= 1 required")

    def require_standard(self, context: str = "this method") -> "Params":
        if self.N < 2:
            raise ParameterError(f"{context} requires N >= 2")
        if self.k < 0:
            raise ParameterError(f"{context} requires k >= 0")
        if self.l < 0 or self.r < 0:
            raise ParameterError(f"{context} requires l >= 0 and r >= 0")
        return self

    def __str__(self) -> str:
        return f"N={self.N} k={self.k} l={self.l} r={self.r}"


@dataclass(frozen=True, order=True)
class BinomialFactor:
    """The factor ``1 - q^a z^b`` in canonical orientation.

    Canonical means a > 0, or a = 0 and b > 0. A factor in the opposite
    orientation is rewritten through ``(1 - q^-a z^-b) = (-q^-a z^-b)(1 - q^a z^b)``,
    with the leftover monomial tracked by the enclosing :class:`RationalFn`.
    """

    a: int
    b: int

    def __post_init__(self):
        if (self.a, self.b) == (0, 0):
            raise ValueError("the factor (1 - q^0 z^0) is zero")
        if not (self.a > 0 or (self.a == 0 and self.b > 0)):
            raise ValueError(f"factor exponents ({self.a}, {self.b}) are not canonical")

    def as_poly(self) -> LaurentPoly:
        return LaurentPoly({(0, 0): 1, (self.a, self.b): -1})

    @staticmethod
    def canonical(alpha: int, beta: int) -> tuple["BinomialFactor", int, int, int]:
        """Canonicalize the denominator factor 1 - q^alpha z^beta.

        Returns (factor, sign, dq, dz) with
        1/(1 - q^alpha z^beta) = sign * q^dq z^dz / (1 - q^a z^b).
        """
        if alpha > 0 or (alpha == 0 and beta > 0):
            return BinomialFactor(alpha, beta), 1, 0, 0
        return BinomialFactor(-alpha, -beta), -1, -alpha, -beta

    def __str__(self) -> str:
        return f"(1 - {LaurentPoly.monomial(self.a, self.b).text()})"


def _prod_factor_poly(factors: Counter) -> LaurentPoly:
    out = LaurentPoly.one()
    for f, mult in sorted(factors.items()):
        out = out * (f.as_poly() ** mult)
    return out


@dataclass(frozen=True, eq=False)
class RationalFn:
    """sign * q^unit_q z^unit_z * numerator / product of binomial factors.

    The denominator is a multiset; no cancellation is performed. Equality is
    denominator-insensitive: two values compare equal when their
    cross-multiplied numerators agree as Laurent polynomials.
    """

    sign: int
    unit_q: int
    unit_z: int
    numerator: LaurentPoly
    denominator: tuple[BinomialFactor, ...]

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @classmethod
    def from_parts(cls, sign: int, unit_q: int, unit_z: int,
                   numerator: LaurentPoly, factors: Iterable[BinomialFactor] = ()) -> "RationalFn":
        return cls(sign, unit_q, unit_z, numerator, tuple(sorted(factors)))

    @classmethod
    def zero(cls) -> "RationalFn":
        return cls(1, 0, 0, LaurentPoly.zero(), ())

    @classmethod
    def one(cls) -> "RationalFn":
        return cls(1, 0, 0, LaurentPoly.one(), ())

    @classmethod
    def over_oriented_factors(cls, sign: int, unit_q: int, unit_z: int,
                              numerator: LaurentPoly,
                              oriented: Iterable[tuple[int, int]]) -> "RationalFn":
        """Build a fraction whose denominator factors are given in the
        orientation 1 - q^alpha z^beta; each is canonicalized on the way in."""
        factors = []
        for alpha, beta in oriented:
            f, s, dq, dz = BinomialFactor.canonical(alpha, beta)
            factors.append(f)
            sign *= s
            unit_q += dq
            unit_z += dz
        return cls.from_parts(sign, unit_q, unit_z, numerator, factors)

    # -- queries ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def denominator_counter(self) -> Counter:
        return Counter(self.denominator)

    def scaled_numerator(self) -> LaurentPoly:
        """The numerator with the unit monomial folded in."""
        return self.numerator * LaurentPoly.monomial(self.unit_q, self.unit_z, self.sign)

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFn):
            return NotImplemented
        cx, cy = self.denominator_counter(), other.denominator_counter()
        common = cx & cy
        left = self.scaled_numerator() * _prod_factor_poly(cy - common)
        right = other.scaled_numerator() * _prod_factor_poly(cx - common)
        return left == right

    def __add__(self, other: "RationalFn") -> "RationalFn":
        return rational_add(self, other)

    def __neg__(self) -> "RationalFn":
        return RationalFn(-self.sign, self.unit_q, self.unit_z, self.numerator, self.denominator)

    def times_monomial(self, dq: int, dz: int, coeff_sign: int = 1) -> "RationalFn":
        return RationalFn(self.sign * coeff_sign, self.unit_q + dq, self.unit_z + dz,
                          self.numerator, self.denominator)

    # -- rendering ----------------------------------------------------------

    def text(self) -> str:
        unit = LaurentPoly.monomial(self.unit_q, self.unit_z, self.sign).text()
        num = self.numerator.text()
        den = " ".join(str(f) for f in self.denominator) if self.denominator else "1"
        return f"{unit} * ({num}) / [{den}]"

    def machine(self) -> dict:
        counts = sorted(self.denominator_counter().items())
        return {
            "sign": self.sign,
            "unit": [self.unit_q, self.unit_z],
            "numerator": self.numerator.machine_terms(),
            "denominator": [[f.a, f.b, mult] for f, mult in counts],
        }

    def __repr__(self) -> str:
        return f"RationalFn({self.text()})"


def rational_add(x: RationalFn, y: RationalFn) -> RationalFn:
    """Exact sum over the multiset-union denominator; no cancellation."""
    if x.is_zero:
        return y
    if y.is_zero:
        return x
    cx, cy = x.denominator_counter(), y.denominator_counter()
    union = cx | cy
    num = (x.scaled_numerator() * _prod_factor_poly(union - cx)
           + y.scaled_numerator() * _prod_factor_poly(union - cy))
    return RationalFn.from_parts(1, 0, 0, num, union.elements())


class Series:
    """A Laurent polynomial exact for every q-degree <= cutoff.

    The support must lie in the first quadrant (q and z exponents >= 0);
    terms of q-degree above the cutoff are discarded at construction.
    Multiplying two series whose factors only involve monomials with
    q-exponent >= z-exponent >= 0 keeps the product exact through the
    smaller cutoff.
    """

    __slots__ = ("poly", "cutoff")

    def __init__(self, poly: LaurentPoly, cutoff: int):
        if cutoff < 0:
            raise ValueError("series cutoff must be >= 0")
        poly = poly.truncate_q(cutoff)
        for (i, j) in poly._terms:
            if i < 0 or j < 0:
                raise ValueError(f"series support must lie in the first quadrant, got q^{i} z^{j}")
        self.poly = poly
        self.cutoff = cutoff

    @classmethod
    def zero(cls, cutoff: int) -> "Series":
        return cls(LaurentPoly.zero(), cutoff)

    @classmethod
    def of_one(cls, cutoff: int) -> "Series":
        return cls(LaurentPoly.one(), cutoff)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.cutoff == other.cutoff and self.poly == other.poly

    def __add__(self, other: "Series") -> "Series":
        cutoff = min(self.cutoff, other.cutoff)
        return Series(self.poly + other.poly, cutoff)

    def __neg__(self) -> "Series":
        return Series(-self.poly, self.cutoff)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other: "Series") -> "Series":
        return series_mul(self, other)

    def shifted(self, dq: int, dz: int) -> "Series":
        """Multiply by the monomial q^dq z^dz (dq, dz >= 0), keeping the cutoff."""
        if dq < 0 or dz < 0:
            raise ValueError("series shifts must have nonnegative exponents")
        return Series(self.poly * LaurentPoly.monomial(dq, dz), self.cutoff)

    def matches_poly(self, poly: LaurentPoly) -> bool:
        """True when the series agrees with ``poly`` through the cutoff,
        including vanishing of every coefficient the polynomial lacks."""
        return self.poly == poly.truncate_q(self.cutoff)

    def __repr__(self) -> str:
        return f"Series({self.poly.text()}; exact through q^{self.cutoff})"


def series_mul(x: Series, y: Series) -> Series:
    """Truncated product; exact through min(x.cutoff, y.cutoff) for operands
    supported in the first quadrant."""
    cutoff = min(x.cutoff, y.cutoff)
    out: dict[tuple[int, int], int] = {}
    for (i1, j1), c1 in x.poly.items():
        if i1 > cutoff:
            continue
        for (i2, j2), c2 in y.poly.items():
            i = i1 + i2
            if i > cutoff:
                continue
            key = (i, j1 + j2)
            s = out.get(key, 0) + c1 * c2
            if s:
                out[key] = s
            elif key in out:
                del out[key]
    return Series(LaurentPoly(out), cutoff)


def expand_factor(alpha: int, beta: int, cutoff: int) -> Series:
    """Geometric expansion of 1/(1 - q^alpha z^beta), truncated at q-degree cutoff.

    For alpha, beta >= 0 this is sum_{i>=0} q^{i alpha} z^{i beta}; for
    alpha, beta <= 0 it is -sum_{i<0} q^{i alpha} z^{i beta}, which again has
    only nonnegative exponents. Mixed signs have no convention and raise
    :class:`ExpansionRegionError`. A factor with alpha = 0 cannot be
    truncated by q-degree and is rejected.
    """
    if (alpha, beta) == (0, 0):
        raise ValueError("the factor (1 - q^0 z^0) is zero")
    if alpha >= 0 and beta >= 0:
        if alpha == 0:
            raise ValueError("factor with zero q-exponent has no finite q-truncation")
        terms = {(c * alpha, c * beta): 1 for c in range(cutoff // alpha + 1)}
    elif alpha <= 0 and beta <= 0:
        if alpha == 0:
            raise ValueError("factor with zero q-exponent has no finite q-truncation")
        terms = {(-c * alpha, -c * beta): -1 for c in range(1, cutoff // (-alpha) + 1)}
    else:
        raise ExpansionRegionError("unsupported expansion region")
    return Series(LaurentPoly(terms), cutoff)


def _geometric_chain_sum(terms: dict, a: int, b: int, cutoff: int) -> dict:
    """Multiply a term dict by sum_{c>=0} q^{ca} z^{cb} (a >= 1), truncating at
    q-degree cutoff, by cumulative sums along chains in direction (a, b)."""
    groups: dict[tuple[int, int], dict] = {}
    for (i, j), c in terms.items():
        if i > cutoff:
            continue
        key = (i % a, a * j - b * i)
        groups.setdefault(key, {})[(i, j)] = c
    out: dict[tuple[int, int], int] = {}
    for chain in groups.values():
        i, j = min(chain)
        run = 0
        while i <= cutoff:
            run += chain.get((i, j), 0)
            if run:
                out[(i, j)] = run
            i += a
            j += b
    return out


def expand_rational(x: RationalFn, cutoff: int) -> Series:
    """Expand a factored fraction as a series in nonnegative powers of q and z.

    Every canonical denominator factor must have nonnegative z-exponent
    (equivalently, its original orientation lay in one of the two supported
    sign regions); the result is the truncated product of the factor
    expansions with the unit monomial and numerator.
    """
    for f in x.denominator:
        if f.b < 0:
            raise ExpansionRegionError("unsupported expansion region")
        if f.a == 0:
            raise ValueError("factor with zero q-exponent has no finite q-truncation")
    if x.is_zero:
        return Series.zero(cutoff)
    work = dict(x.scaled_numerator()._terms)
    # Factor steps never lower the q-degree, so truncation at the target
    # cutoff is sound from the start even when the unit has negative exponents.
    for f in sorted(x.denominator):
        work = _geometric_chain_sum(work, f.a, f.b, cutoff)
    return Series(LaurentPoly(work), cutoff)


def divide_exact(num: LaurentPoly, factor: BinomialFactor) -> Optional[LaurentPoly]:
    """Exact division of a Laurent polynomial by 1 - q^a z^b.

    Returns g with g * (1 - q^a z^b) = num, or None when no Laurent
    polynomial quotient exists. Along each lattice chain in direction
    (a, b), the quotient coefficients are the prefix sums of num's
    coefficients; divisibility means every chain sums to zero.
    """
    if num.is_zero:
        return LaurentPoly.zero()
    a, b = factor.a, factor.b
    groups: dict[tuple[int, int], dict] = {}
    for (i, j), c in num.items():
        key = (i % a, a * j - b * i) if a else (j % b, i)
        groups.setdefault(key, {})[(i, j)] = c
    out: dict[tuple[int, int], int] = {}
    for chain in groups.values():
        first, last = min(chain), max(chain)
        i, j = first
        run = 0
        while True:
            run += chain.get((i, j), 0)
            if run:
                out[(i, j)] = run
            if (i, j) == last:
                break
            i += a
            j += b
        if run != 0:
            return None
    return LaurentPoly(out)


def first_difference(p: LaurentPoly, q: LaurentPoly) -> Optional[tuple[int, int, int, int]]:
    """Smallest (q_exp, z_exp) where two polynomials differ, with both
    coefficients; None when equal."""
    keys = sorted(set(p._terms) | set(q._terms))
    for key in keys:
        cp, cq = p.coeff(*key), q.coeff(*key)
        if cp != cq:
            return (key[0], key[1], cp, cq)
    return None
