"""Shared test utilities: deterministic random objects and small oracles."""

from __future__ import annotations

import random
from fractions import Fraction

from matcanon import Matrix, Polynomial


def iter_partitions(n: int, cap: int | None = None):
    """All weakly decreasing partitions of n, largest part first."""
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def rand_scalar_raw(field, rng: random.Random):
    if field.characteristic:
        return rng.randrange(field.characteristic)
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def rand_matrix(field, n: int, rng: random.Random, ncols: int | None = None) -> Matrix:
    ncols = n if ncols is None else ncols
    return Matrix(field, [[rand_scalar_raw(field, rng) for _ in range(ncols)] for _ in range(n)])


def rand_invertible(field, n: int, rng: random.Random) -> Matrix:
    while True:
        m = rand_matrix(field, n, rng)
        if m.is_invertible():
            return m


def rand_monic(field, degree: int, rng: random.Random) -> Polynomial:
    coeffs = [rand_scalar_raw(field, rng) for _ in range(degree)] + [1]
    return Polynomial(field, coeffs)


def poly_eval_matrix(p: Polynomial, a: Matrix) -> Matrix:
    """Horner evaluation of a polynomial at a square matrix."""
    acc = Matrix.zeros(a.field, a.nrows, a.ncols)
    ident = Matrix.identity(a.field, a.nrows)
    for c in reversed(p.coeffs):
        acc = acc * a + ident.scale(c)
    return acc


def charpoly_oracle(a: Matrix) -> Polynomial:
    """Characteristic polynomial det(X*I - A) by cofactor expansion over
    polynomial entries; independent of the elimination-based machinery."""
    field = a.field
    x = Polynomial.x(field)
    entries = [
        [
            (x - Polynomial.constant(field, a[i, j]))
            if i == j
            else -Polynomial.constant(field, a[i, j])
            for j in range(a.ncols)
        ]
        for i in range(a.nrows)
    ]

    def det(rows, cols):
        if len(cols) == 1:
            return rows[0][cols[0]]
        total = Polynomial(field)
        for k, c in enumerate(cols):
            minor = det(rows[1:], cols[:k] + cols[k + 1:])
            term = rows[0][c] * minor
            total = total + term if k % 2 == 0 else total - term
        return total

    return det(entries, list(range(a.ncols)))


def minimal_polynomial_oracle(a: Matrix) -> Polynomial:
    """Lowest-degree monic annihilator of A, found as the first linear
    dependence among the flattened powers I, A, A^2, ..."""
    field = a.field
    n = a.nrows
    power = Matrix.identity(field, n)
    cols = [[power[i, j].value for i in range(n) for j in range(n)]]
    for d in range(1, n + 1):
        power = power * a
        cols.append([power[i, j].value for i in range(n) for j in range(n)])
        _, kernel = Matrix.from_columns(field, cols).rank_and_kernel()
        if kernel:
            v = kernel[0]
            lead = v[d, 0]
            assert not lead.is_zero(), "dependence among lower powers was missed"
            return Polynomial(field, [(v[k, 0] / lead).value for k in range(d)] + [1])
    raise AssertionError("no annihilator up to degree n; impossible")
