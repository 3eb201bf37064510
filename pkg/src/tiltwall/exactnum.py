"""Exact scalar arithmetic: rationals, quadratic surds, and certified polynomial signs.

Everything downstream (wall centers, radii, slope comparisons, inequality
certificates) reduces to arithmetic in this module.  There is no floating
point anywhere; rationals are ``fractions.Fraction``, irrationalities are
confined to quadratic surds ``a + b*sqrt(c)``, and sign claims about
polynomials on intervals are certified with Sturm sequences.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

# All H-normalized quantities are plain rationals.
Rat = Fraction

RatLike = Union[Rat, int]


def rat(x: RatLike, y: int | None = None) -> Rat:
    """Build a Fraction; accepts ints, Fractions, or numerator/denominator."""
    if y is None:
        return Fraction(x)
    return Fraction(x, y)


def rat_str(x: Rat) -> str:
    """Format a rational as ``p`` or ``p/q`` (the wire format for all JSON)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(s: str) -> Rat:
    """Parse ``p`` or ``p/q``.  Raises ValueError on malformed input."""
    return Fraction(s.strip())


def _square_free_split(n: int) -> tuple[int, int]:
    """Write n = s**2 * m with m square-free.  Returns (s, m).  Requires n >= 0."""
    if n < 0:
        raise ValueError("negative radicand")
    if n in (0, 1):
        return 1, n
    s, m = 1, n
    # trial division is plenty: radicands here come from small lattice data
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            while m % (p * p) == 0:
                m //= p * p
                s *= p
        if m % p == 0:
            # single factor of p stays in the square-free part
            pass
        p += 1 if p == 2 else 2
    return s, m


@dataclass(frozen=True)
class Surd:
    """The real number a + b*sqrt(c), held in canonical form.

    Canonical form: c is a square-free integer > 1, or b == 0 and c == 0.
    Construction accepts any rational radicand >= 0 and normalizes, so
    equality of canonical forms is equality of real numbers.
    """

    a: Rat
    b: Rat
    c: int

    def __init__(self, a: RatLike, b: RatLike = 0, c: RatLike = 0):
        a, b, c = Fraction(a), Fraction(b), Fraction(c)
        if c < 0:
            raise ValueError("negative radicand")
        # sqrt(p/q) = sqrt(p*q)/q
        if b != 0 and c != 0:
            n = c.numerator * c.denominator
            b = b / c.denominator
            s, m = _square_free_split(n)
            b *= s
            if m <= 1:
                a += b * m  # m == 1 folds in; m == 0 kills the radical
                b, m = Fraction(0), 0
            c = Fraction(m)
        else:
            b, c = Fraction(0), Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", int(c))

    @staticmethod
    def sqrt(x: RatLike) -> "Surd":
        return Surd(0, 1, x)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def rational_value(self) -> Rat:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.a

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, self.c)

    def __add__(self, other: "Surd | RatLike") -> "Surd":
        if isinstance(other, Surd):
            if self.b == 0:
                return Surd(self.a + other.a, other.b, other.c)
            if other.b == 0:
                return Surd(self.a + other.a, self.b, self.c)
            if self.c != other.c:
                raise ValueError("cannot add surds with distinct radicands")
            return Surd(self.a + other.a, self.b + other.b, self.c)
        return Surd(self.a + Fraction(other), self.b, self.c)

    __radd__ = __add__

    def __sub__(self, other: "Surd | RatLike") -> "Surd":
        return self + (-other if isinstance(other, Surd) else -Fraction(other))

    def __rsub__(self, other: RatLike) -> "Surd":
        return (-self) + Fraction(other)

    def __mul__(self, other: RatLike) -> "Surd":
        q = Fraction(other)
        return Surd(self.a * q, self.b * q, self.c)

    __rmul__ = __mul__

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(c), by squaring; never floating point."""
        a, b, c = self.a, self.b, self.c
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        sa, sb = (1 if a > 0 else -1), (1 if b > 0 else -1)
        if sa == sb:
            return sa
        # opposite signs: compare a^2 with b^2 c
        lhs, rhs = a * a, b * b * c
        if lhs == rhs:
            return 0
        return sa if lhs > rhs else sb

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.c)

    def __repr__(self) -> str:
        if self.b == 0:
            return f"Surd({rat_str(self.a)})"
        return f"Surd({rat_str(self.a)} + {rat_str(self.b)}*sqrt({self.c}))"

    def __lt__(self, other):  # total order via surd_cmp
        return surd_cmp(self, _as_surd(other)) < 0

    def __le__(self, other):
        return surd_cmp(self, _as_surd(other)) <= 0

    def __gt__(self, other):
        return surd_cmp(self, _as_surd(other)) > 0

    def __ge__(self, other):
        return surd_cmp(self, _as_surd(other)) >= 0


def _as_surd(x: "Surd | RatLike") -> Surd:
    return x if isinstance(x, Surd) else Surd(Fraction(x))


def surd_cmp(x: Surd, y: Surd) -> int:
    """Exact ordering of two surds: -1, 0, or +1.

    Reduces to a single-radical sign computation.  Two distinct square-free
    radicands are handled by comparing (A + B*sqrt(m)) against C*sqrt(n)
    through one more squaring.
    """
    A = x.a - y.a
    if x.c == y.c or x.b == 0 or y.b == 0:
        if x.b == 0 and y.b == 0:
            return (A > 0) - (A < 0)
        if x.b == 0:
            return Surd(A, -y.b, y.c).sign()
        if y.b == 0:
            return Surd(A, x.b, x.c).sign()
        return Surd(A, x.b - y.b, x.c).sign()
    # t = A + B*sqrt(m) versus u = C*sqrt(n), distinct radicands m != n
    t = Surd(A, x.b, x.c)
    u = Surd(0, y.b, y.c)
    st, su = t.sign(), u.sign()
    if st != su:
        return (st > su) - (st < su)
    if st == 0:
        return 0
    # same nonzero sign: compare |t|^2 with |u|^2; t^2 = (A^2+B^2 m) + 2AB sqrt(m)
    t_sq = Surd(A * A + t.b * t.b * t.c, 2 * A * t.b, t.c)
    u_sq = u.b * u.b * u.c
    s = Surd(t_sq.a - u_sq, t_sq.b, t_sq.c).sign()
    return st * s


def surd_floor(x: Surd) -> int:
    """Largest integer <= x, decided exactly."""
    if x.is_rational:
        return math.floor(x.a)
    lo = math.floor(float(x)) - 2
    while surd_cmp(_as_surd(lo + 1), x) <= 0:
        lo += 1
    return lo


def surd_ceil(x: Surd) -> int:
    return -surd_floor(-x)


# ---------------------------------------------------------------------------
# Intervals


_NEG_INF = object()
_POS_INF = object()


@dataclass(frozen=True)
class Interval:
    """A rational interval, possibly unbounded; endpoints may be open or closed.

    ``lo is None`` means -infinity, ``hi is None`` means +infinity.
    """

    lo: Rat | None
    hi: Rat | None
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        if self.lo is not None and self.hi is not None and self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @staticmethod
    def closed(lo: RatLike, hi: RatLike) -> "Interval":
        return Interval(Fraction(lo), Fraction(hi), True, True)

    @staticmethod
    def at_least(lo: RatLike, closed: bool = True) -> "Interval":
        return Interval(Fraction(lo), None, closed, True)

    @staticmethod
    def at_most(hi: RatLike, closed: bool = True) -> "Interval":
        return Interval(None, Fraction(hi), True, closed)

    @staticmethod
    def whole_line() -> "Interval":
        return Interval(None, None)

    def __repr__(self) -> str:
        lb = "[" if (self.lo_closed and self.lo is not None) else "("
        rb = "]" if (self.hi_closed and self.hi is not None) else ")"
        lo = "-inf" if self.lo is None else rat_str(self.lo)
        hi = "+inf" if self.hi is None else rat_str(self.hi)
        return f"{lb}{lo}, {hi}{rb}"


# ---------------------------------------------------------------------------
# Dense univariate polynomials over Q


class Poly:
    """Dense univariate polynomial with Fraction coefficients, ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RatLike]):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Rat, ...] = tuple(cs)

    @staticmethod
    def from_roots(roots: Sequence[RatLike], lead: RatLike = 1) -> "Poly":
        p = Poly([lead])
        for r in roots:
            p = p * Poly([-Fraction(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Rat:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: RatLike) -> Rat:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | RatLike") -> "Poly":
        if not isinstance(other, Poly):
            q = Fraction(other)
            return Poly([c * q for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return Poly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = [Fraction(0)] * max(0, len(self.coeffs) - len(other.coeffs) + 1)
        r = list(self.coeffs)
        d, lc = other.degree, other.lead
        while len(r) - 1 >= d and any(c != 0 for c in r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < d:
                break
            k = len(r) - 1 - d
            f = r[-1] / lc
            q[k] = f
            for i, c in enumerate(other.coeffs):
                r[k + i] -= f * c
        return Poly(q), Poly(r)

    def rem(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero:
            a, b = b, a.rem(b)
        if a.is_zero:
            return a
        return a * (1 / a.lead)

    def square_free_part(self) -> "Poly":
        if self.is_zero or self.degree == 0:
            return Poly([1]) if not self.is_zero else self
        g = self.gcd(self.derivative())
        if g.degree == 0:
            return self
        return self.divmod(g)[0]

    def cauchy_root_bound(self) -> Rat:
        """All real roots lie strictly inside (-M, M)."""
        if self.is_zero or self.degree == 0:
            return Fraction(1)
        lc = abs(self.lead)
        return 1 + max(abs(c) for c in self.coeffs[:-1]) / lc

    def sign_at_inf(self, positive: bool) -> int:
        if self.is_zero:
            return 0
        s = 1 if self.lead > 0 else -1
        if not positive and self.degree % 2 == 1:
            s = -s
        return s

    def __repr__(self) -> str:
        if self.is_zero:
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(rat_str(c))
            elif i == 1:
                terms.append(f"{rat_str(c)}*x")
            else:
                terms.append(f"{rat_str(c)}*x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def sturm_chain(p: Poly) -> list[Poly]:
    """Canonical Sturm sequence p, p', -rem(...), ... (square-free part taken)."""
    p = p.square_free_part()
    chain = [p, p.derivative()]
    while not chain[-1].is_zero:
        chain.append(-chain[-2].rem(chain[-1]))
    chain.pop()
    return chain


def _variations(chain: Sequence[Poly], x: Rat) -> int:
    signs = []
    for q in chain:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_roots_halfopen(chain: Sequence[Poly], a: Rat, b: Rat) -> int:
    """Number of distinct real roots in (a, b]."""
    return _variations(chain, a) - _variations(chain, b)


class SignClass(enum.Enum):
    STRICTLY_POSITIVE = "strictly_positive"
    NON_NEGATIVE_WITH_ROOTS = "non_negative_with_roots"
    MIXED = "mixed"
    STRICTLY_NEGATIVE = "strictly_negative"
    NON_POSITIVE_WITH_ROOTS = "non_positive_with_roots"
    IDENTICALLY_ZERO = "identically_zero"


@dataclass(frozen=True)
class SignReport:
    """Result of certifying the sign of a polynomial on an interval."""

    classification: SignClass
    roots: tuple[tuple[Rat, Rat], ...] = ()

    @property
    def nonnegative(self) -> bool:
        return self.classification in (
            SignClass.STRICTLY_POSITIVE,
            SignClass.NON_NEGATIVE_WITH_ROOTS,
            SignClass.IDENTICALLY_ZERO,
        )

    @property
    def nonpositive(self) -> bool:
        return self.classification in (
            SignClass.STRICTLY_NEGATIVE,
            SignClass.NON_POSITIVE_WITH_ROOTS,
            SignClass.IDENTICALLY_ZERO,
        )

    @property
    def strictly_positive(self) -> bool:
        return self.classification is SignClass.STRICTLY_POSITIVE

    @property
    def strictly_negative(self) -> bool:
        return self.classification is SignClass.STRICTLY_NEGATIVE


def _isolate_roots(chain: Sequence[Poly], q: Poly, a: Rat, b: Rat) -> list[tuple[Rat, Rat]]:
    """Isolating intervals for the distinct roots of q in (a, b].

    Each returned pair is either an exact rational root (r, r), or an open
    box (lo, hi) with exactly one root strictly inside and q nonzero at both
    box ends.  Boxes and points are pairwise disjoint and sorted.
    """
    out: list[tuple[Rat, Rat]] = []
    stack = [(a, b)]
    while stack:
        lo, hi = stack.pop()
        n = _count_roots_halfopen(chain, lo, hi)
        if n == 0:
            continue
        if n == 1:
            if q(hi) == 0:
                out.append((hi, hi))
                continue
            # shrink until the left box end is not a root (it can be an
            # exact root found earlier, or a root sitting at the scan edge)
            # and the box is reasonably tight
            exact = None
            while q(lo) == 0 or hi - lo > 1:
                m = (lo + hi) / 2
                if q(m) == 0:
                    exact = m
                    break
                if _count_roots_halfopen(chain, lo, m) == 1:
                    hi = m
                else:
                    lo = m
            out.append((exact, exact) if exact is not None else (lo, hi))
            continue
        mid = (lo + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda t: t[0])
    return out


def sturm_sign(p: Poly, I: Interval) -> SignReport:
    """Exact sign classification of p on the interval I, via Sturm sequences.

    Unbounded ends are handled through the Cauchy root bound and the
    asymptotic sign of the leading term.  Roots are reported as isolating
    intervals (exact rational roots degenerate to a point).
    """
    if p.is_zero:
        return SignReport(SignClass.IDENTICALLY_ZERO)
    if p.degree == 0:
        v = p.coeffs[0]
        cls = SignClass.STRICTLY_POSITIVE if v > 0 else SignClass.STRICTLY_NEGATIVE
        return SignReport(cls)

    # Degenerate single-point interval.
    if I.lo is not None and I.hi is not None and I.lo == I.hi:
        v = p(I.lo)
        if v > 0:
            return SignReport(SignClass.STRICTLY_POSITIVE)
        if v < 0:
            return SignReport(SignClass.STRICTLY_NEGATIVE)
        return SignReport(SignClass.NON_NEGATIVE_WITH_ROOTS, ((I.lo, I.lo),))

    M = p.cauchy_root_bound()
    scan_lo = I.lo if I.lo is not None else -(M + 1)
    scan_hi = I.hi if I.hi is not None else (M + 1)
    if scan_lo > scan_hi:
        # one infinite end pointing away from the root zone
        if I.lo is None:
            scan_lo = scan_hi
        else:
            scan_hi = scan_lo

    q = p.square_free_part()
    chain = sturm_chain(p)

    roots: list[tuple[Rat, Rat]] = []
    # the half-open count misses a root at the scan start; admit it if closed
    if I.lo is not None and I.lo_closed and p(I.lo) == 0 and I.lo == scan_lo:
        roots.append((scan_lo, scan_lo))
    for lo, hi in _isolate_roots(chain, q, scan_lo, scan_hi):
        if lo == hi:
            if I.lo is not None and lo == I.lo and not I.lo_closed:
                continue
            if I.hi is not None and lo == I.hi and not I.hi_closed:
                continue
        roots.append((lo, hi))
    roots.sort(key=lambda t: t[0])

    # sample p on every root-free region
    samples: list[int] = []
    if I.lo is None:
        samples.append(p.sign_at_inf(positive=False))
    if I.hi is None:
        samples.append(p.sign_at_inf(positive=True))

    pts: list[Rat] = []
    if p(scan_lo) != 0:
        pts.append(scan_lo)
    if p(scan_hi) != 0:
        pts.append(scan_hi)
    for lo, hi in roots:
        if lo != hi:
            pts.extend((lo, hi))  # box ends are non-roots by construction
    for (lo1, hi1), (lo2, hi2) in zip(roots, roots[1:]):
        if hi1 == hi2 and lo1 == lo2:
            continue
        t = (hi1 + lo2) / 2 if hi1 < lo2 else hi1
        if p(t) != 0:
            pts.append(t)
    # regions between a root at the scan edge and its neighbour
    if roots and p(scan_lo) == 0 and roots[0][0] > scan_lo:
        t = (scan_lo + roots[0][0]) / 2
        if p(t) != 0:
            pts.append(t)
    if roots and p(scan_hi) == 0 and roots[-1][1] < scan_hi:
        t = (roots[-1][1] + scan_hi) / 2
        if p(t) != 0:
            pts.append(t)
    if not roots and not pts and scan_lo < scan_hi:
        t = (scan_lo + scan_hi) / 2
        if p(t) != 0:
            pts.append(t)

    for t in pts:
        v = p(t)
        samples.append(1 if v > 0 else -1)

    has_pos = any(s > 0 for s in samples)
    has_neg = any(s < 0 for s in samples)

    if not roots:
        if has_pos and not has_neg:
            return SignReport(SignClass.STRICTLY_POSITIVE)
        if has_neg and not has_pos:
            return SignReport(SignClass.STRICTLY_NEGATIVE)
        if has_pos and has_neg:
            raise AssertionError("sign change without a root")
        # no samples at all: interval reduced to excluded points
        return SignReport(SignClass.NON_NEGATIVE_WITH_ROOTS, ())
    if has_pos and has_neg:
        return SignReport(SignClass.MIXED, tuple(roots))
    if has_neg:
        return SignReport(SignClass.NON_POSITIVE_WITH_ROOTS, tuple(roots))
    return SignReport(SignClass.NON_NEGATIVE_WITH_ROOTS, tuple(roots))


def count_roots(p: Poly, I: Interval) -> int:
    """Distinct real roots of p in I (endpoint membership per the interval flags)."""
    rep = sturm_sign(p, I)
    if rep.classification is SignClass.IDENTICALLY_ZERO:
        raise ValueError("zero polynomial")
    return len(rep.roots)
