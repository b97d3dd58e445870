"""Exact rational linear algebra on integer matrices.

Kernel computation runs fraction-free (Bareiss-style) over the integers and
back-substitutes to reduced rationals, so every certificate is an exact
identity: A v = 0 with zero residual, no tolerances anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import ResourceCapError
from .graphs import Graph, cartesian_product
from .polynomials import IntPoly, resultant

IntMatrix = Sequence[Sequence[int]]
RationalVector = tuple[Fraction, ...]

PRODUCT_SPECTRUM_SIZE_CAP = 64


@dataclass(frozen=True)
class NutVerdict:
    """Outcome of a nut-graph check: the adjacency kernel together with the
    fullness flag.  ``is_full`` is meaningful when the nullity is 1."""

    nullity: int
    kernel_basis: tuple[RationalVector, ...]
    is_full: bool
    is_nut: bool


def _check_square(a: IntMatrix) -> int:
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    return n


def matvec(a: IntMatrix, v: Sequence) -> list:
    return [sum(row[j] * v[j] for j in range(len(row)) if row[j]) for row in a]


def _bareiss_echelon(rows: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.  Mutates and returns the pivot rows
    plus their pivot column indices.  Pivoting is deterministic: first
    nonzero entry in column order."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    piv_cols: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        prow = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            fac = row[c]
            if fac:
                row[c + 1:] = [(piv * x - fac * y) // prev
                               for x, y in zip(row[c + 1:], prow[c + 1:])]
            elif prev != 1 or piv != 1:
                row[c + 1:] = [piv * x // prev for x in row[c + 1:]]
            row[c] = 0
        prev = piv
        piv_cols.append(c)
        r += 1
        if r == nrows:
            break
    return rows[:r], piv_cols


def _rref(vectors: list[list[Fraction]]) -> tuple[RationalVector, ...]:
    """Reduced row echelon form over the rationals; rows ordered by pivot
    position, each leading entry 1.  This makes kernel bases canonical."""
    rows = [list(v) for v in vectors]
    if not rows:
        return ()
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return tuple(tuple(row) for row in rows[:r])


def kernel_basis(a: IntMatrix) -> list[RationalVector]:
    """Basis of the right kernel of an integer matrix, in reduced echelon
    form with first nonzero entry 1.  Every returned vector satisfies
    A v = 0 exactly (verified before returning)."""
    n = _check_square(a)
    echelon, piv_cols = _bareiss_echelon([list(row) for row in a])
    piv_set = set(piv_cols)
    free_cols = [c for c in range(n) if c not in piv_set]
    basis = []
    for fc in free_cols:
        x = [Fraction(0)] * n
        x[fc] = Fraction(1)
        for i in range(len(echelon) - 1, -1, -1):
            pc = piv_cols[i]
            row = echelon[i]
            s = sum((row[j] * x[j] for j in range(pc + 1, n) if row[j]), Fraction(0))
            x[pc] = -s / row[pc]
        basis.append(x)
    canonical = list(_rref(basis))
    for v in canonical:
        residual = matvec(a, v)
        if any(residual):
            raise AssertionError(
                f"internal error: kernel vector has nonzero residual {residual}")
    return canonical


def is_nut(g: Graph) -> NutVerdict:
    """Certify the nut property of a graph: adjacency nullity 1 with a full
    kernel vector, on at least two vertices."""
    basis = kernel_basis(g.adjacency_matrix())
    nullity = len(basis)
    is_full = nullity == 1 and all(e != 0 for e in basis[0])
    return NutVerdict(
        nullity=nullity,
        kernel_basis=tuple(basis),
        is_full=is_full,
        is_nut=is_full and g.n >= 2,
    )


def integer_scaled(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to the primitive integer vector with the same
    direction (positive multiple)."""
    denom = lcm(*(e.denominator for e in v)) if v else 1
    ints = [int(e * denom) for e in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(x // g for x in ints) if g > 1 else tuple(ints)


def char_poly(a: IntMatrix) -> IntPoly:
    """Characteristic polynomial det(xI - A), monic of degree n, via the
    fraction-free Faddeev-LeVerrier recurrence."""
    n = _check_square(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * m[t][j] for t in range(n) if a[i][t]) for j in range(n)]
              for i in range(n)]
        trace = sum(am[i][i] for i in range(n))
        q, rem = divmod(-trace, k)
        if rem:
            raise AssertionError("internal error: Faddeev-LeVerrier division inexact")
        coeffs[n - k] = q
        for i in range(n):
            am[i][i] += q
        m = am
    return IntPoly(coeffs)


def product_spectrum_check(g: Graph, h: Graph) -> bool:
    """Verify the cartesian-product spectrum identity as an exact polynomial
    equation: char(G box H)(x) = +-Res_y(char(G)(y), char(H)(x - y)),
    equivalent to the product spectrum being all sums lambda + mu."""
    n = g.n * h.n
    if n > PRODUCT_SPECTRUM_SIZE_CAP:
        raise ResourceCapError(
            f"product order {n} exceeds the spectrum-check cap "
            f"{PRODUCT_SPECTRUM_SIZE_CAP}")
    f = char_poly(g.adjacency_matrix())
    q = char_poly(h.adjacency_matrix())
    direct = char_poly(cartesian_product(g, h).adjacency_matrix())
    x_minus_y = IntPoly((IntPoly((0, 1)), -1))  # x - y, as a polynomial in y
    shifted = q.evaluate(x_minus_y)
    if isinstance(shifted, int):
        shifted = IntPoly((shifted,))
    res = resultant(f, shifted)
    if isinstance(res, int):
        res = IntPoly((res,))
    return res == direct or res == -direct


class EigenvectorMismatch(ValueError):
    """A supplied vector is not an eigenvector; ``row`` is the first row of
    A v that disagrees with lambda v."""

    def __init__(self, name: str, row: int):
        super().__init__(f"{name} is not an eigenvector: mismatch at row {row}")
        self.row = row


def _eigenvalue_of(a: IntMatrix, v: Sequence[Fraction], name: str) -> Fraction:
    n = len(a)
    if len(v) != n:
        raise ValueError(f"{name} has length {len(v)}, expected {n}")
    pivot = next((i for i, e in enumerate(v) if e != 0), None)
    if pivot is None:
        raise ValueError(f"{name} must be nonzero")
    av = matvec(a, v)
    lam = Fraction(av[pivot], 1) / v[pivot]
    for i in range(n):
        if av[i] != lam * v[i]:
            raise EigenvectorMismatch(name, i)
    return lam


def kernel_vector_from_factors(u: Sequence, v: Sequence,
                               g: Graph, h: Graph) -> RationalVector:
    """Combine factor eigenvectors with cancelling eigenvalues into a kernel
    vector of the cartesian product: w_(a,b) = u_a v_b under the row-major
    product labeling.  The result is verified to satisfy A w = 0 exactly and
    is full iff both inputs are full."""
    uf = tuple(Fraction(e) for e in u)
    vf = tuple(Fraction(e) for e in v)
    lam = _eigenvalue_of(g.adjacency_matrix(), uf, "first factor vector")
    mu = _eigenvalue_of(h.adjacency_matrix(), vf, "second factor vector")
    if lam + mu != 0:
        raise ValueError(
            f"factor eigenvalues must cancel, got {lam} + {mu} != 0")
    w = tuple(uf[a] * vf[b] for a in range(g.n) for b in range(h.n))
    residual = matvec(cartesian_product(g, h).adjacency_matrix(), w)
    if any(residual):
        raise AssertionError("internal error: product kernel vector residual nonzero")
    return w
