"""Exact dense polynomial arithmetic, cyclotomic polynomials, and the
symbolic singularity criteria for circulant graphs.

Coefficients are normally Python ints, lowest degree first, with trailing
zeros trimmed (the zero polynomial has an empty coefficient tuple).
Coefficients may themselves be IntPoly values; that is how the resultant
handles polynomials like g(x - y), whose coefficients in y live in Z[x].
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Union

from .graphs import CirculantSpec

Coeff = Union[int, "IntPoly"]


class IntPoly:
    """Dense polynomial over the integers (or over Z[x], for nested use)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Coeff, ...] = tuple(cs)

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    @staticmethod
    def monomial(c: Coeff, k: int) -> "IntPoly":
        return IntPoly((0,) * k + (c,))

    # -- structure -----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Coeff:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            if other == 0:
                return not self.coeffs
            return len(self.coeffs) == 1 and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other) -> "IntPoly":
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "IntPoly":
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "IntPoly":
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "IntPoly":
        o = _as_poly(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return IntPoly()
        out: list[Coeff] = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def evaluate(self, point):
        """Horner evaluation; works for any ring element (ints, Fractions,
        other IntPoly values)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    __call__ = evaluate

    def __repr__(self):
        if not self.coeffs:
            return "IntPoly('0')"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if isinstance(c, IntPoly):
                body = f"({c!r})"
                sign = " + " if parts else ""
            else:
                sign = (" + " if c > 0 else " - ") if parts else ("" if c > 0 else "-")
                body = "" if (abs(c) == 1 and i > 0) else str(abs(c))
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i == 0 and not body:
                body = "1"
            parts.append(sign + body + term)
        return f"IntPoly('{''.join(parts)}')"


def _as_poly(v) -> IntPoly | None:
    if isinstance(v, IntPoly):
        return v
    if isinstance(v, int):
        return IntPoly((v,))
    return None


def _coeff_quotient(a: Coeff, b: Coeff) -> Coeff:
    """Exact division in the coefficient domain; raises ValueError when the
    division does not come out exact."""
    if isinstance(a, IntPoly) or isinstance(b, IntPoly):
        pa = _as_poly(a)
        pb = _as_poly(b)
        if pb.degree == 0 and isinstance(pb.coeffs[0], int) and pb.coeffs[0] in (1, -1):
            return pa if pb.coeffs[0] == 1 else -pa
        return exact_divide(pa, pb)
    if b == 1:
        return a
    q, r = divmod(a, b)
    if r:
        raise ValueError(f"inexact coefficient division {a} / {b}")
    return q


def polydivmod(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division f = q*g + r with deg r < deg g, performed over the
    coefficient ring.  Each leading-coefficient division must be exact (always
    true for monic g); otherwise ValueError is raised.
    """
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    q: list[Coeff] = [0] * max(0, f.degree - g.degree + 1)
    r = f
    glead = g.leading
    while not r.is_zero and r.degree >= g.degree:
        t = _coeff_quotient(r.leading, glead)
        shift = r.degree - g.degree
        q[shift] = t
        r = r - IntPoly.monomial(t, shift) * g
    return IntPoly(q), r


def exact_divide(f: IntPoly, g: IntPoly) -> IntPoly:
    """Quotient f / g; raises ValueError naming the remainder when g does not
    divide f exactly."""
    q, r = polydivmod(f, g)
    if not r.is_zero:
        raise ValueError(f"{f!r} is not divisible by {g!r}: remainder {r!r}")
    return q


def remainder_mod(f: IntPoly, g: IntPoly) -> IntPoly:
    """Remainder of f modulo g (g must have an invertible leading
    coefficient, e.g. be monic)."""
    return polydivmod(f, g)[1]


def divides(g: IntPoly, f: IntPoly) -> bool:
    """Whether g | f over the integers (g monic in all our uses)."""
    return remainder_mod(f, g).is_zero


def resultant(f: IntPoly, g: IntPoly) -> Coeff:
    """Resultant via the Sylvester matrix with fraction-free (Bareiss)
    elimination.  Exact for integer coefficients and for coefficients that
    are themselves IntPoly values (integral-domain entries)."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return 0
    if m == 0 and n == 0:
        return 1
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    size = m + n
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    rows = [[0] * i + fc + [0] * (size - m - 1 - i) for i in range(n)]
    rows += [[0] * i + gc + [0] * (size - n - 1 - i) for i in range(m)]
    return _bareiss_determinant(rows)


def _bareiss_determinant(rows: list[list[Coeff]]) -> Coeff:
    """Fraction-free determinant; mutates ``rows``.  Entries may be ints or
    IntPoly values; all intermediate divisions are exact by Sylvester's
    identity."""
    size = len(rows)
    sign = 1
    prev: Coeff = 1
    for c in range(size):
        p = next((r for r in range(c, size) if rows[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        pivot = rows[c][c]
        prow = rows[c]
        for r in range(c + 1, size):
            row = rows[r]
            fac = row[c]
            if fac == 0:
                row[c + 1:] = [_coeff_quotient(pivot * x, prev) for x in row[c + 1:]]
            else:
                row[c + 1:] = [_coeff_quotient(pivot * x - fac * y, prev)
                               for x, y in zip(row[c + 1:], prow[c + 1:])]
            row[c] = 0
        prev = pivot
    det = rows[-1][-1]
    return det if sign == 1 else -det


# ---------------------------------------------------------------------------
# Cyclotomic polynomials and circulant symbols
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, computed exactly by dividing x^n - 1
    by the cyclotomic polynomials of the proper divisors of n.  Memoized per
    process."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be positive, got {n}")
    poly = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    for d in range(1, n):
        if n % d == 0:
            poly = exact_divide(poly, cyclotomic(d))
    return poly


def circulant_symbol(n: int, offsets: Iterable[int]) -> IntPoly:
    """The symbol polynomial of Circ(n, S): its values at the n-th roots of
    unity are exactly the circulant's eigenvalues.  The coefficient sequence
    is the adjacency row of vertex 0."""
    spec = CirculantSpec(n, offsets)
    coeffs = [0] * n
    for s in spec.offsets:
        coeffs[s] += 1
        if 2 * s != n:
            coeffs[n - s] += 1
    return IntPoly(coeffs)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


class VanishingReport:
    """Which root-of-unity orders d | n make the circulant symbol vanish.

    Membership is decided exactly: d is included iff the d-th cyclotomic
    polynomial divides the symbol reduced modulo x^n - 1.
    """

    __slots__ = ("n", "divisors_vanishing")

    def __init__(self, n: int, divisors_vanishing: Iterable[int]):
        self.n = n
        self.divisors_vanishing = frozenset(divisors_vanishing)
        if any(n % d for d in self.divisors_vanishing):
            raise ValueError("vanishing orders must divide the circulant order")

    def __eq__(self, other):
        return (isinstance(other, VanishingReport)
                and (self.n, self.divisors_vanishing)
                == (other.n, other.divisors_vanishing))

    def __repr__(self):
        return f"VanishingReport(n={self.n}, divisors_vanishing={sorted(self.divisors_vanishing)})"

    @property
    def nullity(self) -> int:
        """Number of vanishing eigenvalues: each vanishing order d
        contributes phi(d) roots of unity."""
        return sum(_euler_phi(d) for d in self.divisors_vanishing)


def _euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def vanishing_orders(n: int, offsets: Iterable[int]) -> VanishingReport:
    """Exactly which orders of n-th roots of unity are zeros of the symbol
    polynomial of Circ(n, S)."""
    symbol = circulant_symbol(n, offsets)
    modulus = IntPoly((-1,) + (0,) * (n - 1) + (1,))
    reduced = remainder_mod(symbol, modulus)
    vanishing = [d for d in _divisors(n) if divides(cyclotomic(d), reduced)]
    return VanishingReport(n, vanishing)


def circulant_is_nut_symbolic(n: int, offsets: Iterable[int]) -> bool:
    """Symbolic nut test for Circ(n, S), with no linear algebra.

    The adjacency kernel is one-dimensional with a full vector exactly when
    the only vanishing root order is 2 (the alternating vector): order 1
    cannot vanish because the symbol at 1 equals the degree, and any other
    order d contributes phi(d) >= 2 zero eigenvalues.
    """
    if n % 2:
        return False
    return vanishing_orders(n, offsets).divisors_vanishing == frozenset({2})


def gcd_criterion(n: int, k: int) -> bool:
    """Arithmetic nut criterion for consecutive-offset circulants
    Circ(n, {1..k}): both n and k even, n >= 2k + 2, and
    gcd(n/2, k/2) = gcd(n/2, k + 1) = 1.  Returns False whenever the
    hypotheses fail."""
    if k < 2 or n % 2 or k % 2 or n < 2 * k + 2:
        return False
    return gcd(n // 2, k // 2) == 1 and gcd(n // 2, k + 1) == 1
