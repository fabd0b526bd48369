"""Built-in golden checks runnable from the CLI.

Covers the two fixed display patterns of the family machinery, bijection
round trips on fixed partitions, and the GF(7) fibre census point.
"""

from __future__ import annotations

from .affine import AffineRepresentative, affine_point, generalized_companion, to_affine, to_rnf
from .fields import GF, QQ
from .matrix import Matrix
from .pairs import InvariantTriple, QForm, invariants, q_points
from .poly import Polynomial
from .rnf import Partition, invariant_factors


def _display_qs(field):
    return (
        Polynomial(field, [-5, -4, 1]),
        Polynomial(field, [-3, 1]),
        Polynomial(field, [-2, -1, 1]),
    )


def _check_block_pattern() -> bool:
    got = generalized_companion(_display_qs(QQ))
    want = Matrix(QQ, [
        [0, 5, 0, 0, 0],
        [1, 4, 0, 0, 0],
        [0, 1, 3, 0, 0],
        [0, 0, 1, 0, 2],
        [0, 0, 0, 1, 1],
    ])
    return got == want


def _check_family_pattern() -> bool:
    p = Partition((5, 3, 2, 2))
    got = affine_point(p, _display_qs(QQ))
    five = [
        [0, 5, 0, 0, 0],
        [1, 4, 0, 0, 0],
        [0, 1, 3, 0, 0],
        [0, 0, 1, 0, 2],
        [0, 0, 0, 1, 1],
    ]
    three = [[3, 0, 0], [1, 0, 2], [0, 1, 1]]
    two = [[0, 2], [1, 1]]
    want = [[0] * 12 for _ in range(12)]
    for block, offset in ((five, 0), (three, 5), (two, 8), (two, 10)):
        for i, row in enumerate(block):
            for j, entry in enumerate(row):
                want[offset + i][offset + j] = entry
    return got == Matrix(QQ, want)


def _check_round_trips() -> bool:
    field = GF(5)
    cases = [
        (Partition((5, 3, 2, 2)), _display_qs(field)),
        (Partition((2, 2, 1)), (Polynomial(field, [1, 1]), Polynomial(field, [2, 1]))),
        (Partition((3,)), (Polynomial(field, [1, 0, 2, 1]),)),
    ]
    for p, qs in cases:
        rep = AffineRepresentative(p, qs)
        chain = to_rnf(rep)
        if to_affine(chain) != rep:
            return False
        if invariant_factors(affine_point(p, qs)) != chain:
            return False
    return True


def _check_fiber_census() -> bool:
    field = GF(7)
    y = InvariantTriple(field(6), field(1), field(3))
    expected = [
        QForm(field(1), field(2), field(4)),
        QForm(field(1), field(5), field(5)),
        QForm(field(6), field(2), field(5)),
        QForm(field(6), field(5), field(4)),
    ]
    points = q_points(y)
    if points != expected:
        return False
    return all(invariants(q.realize()) == y for q in points)


def run_selftest() -> list[tuple[str, bool]]:
    """Run every golden check; returns (name, passed) in a fixed order."""
    return [
        ("generalized-companion-5x5", _check_block_pattern()),
        ("affine-family-12x12", _check_family_pattern()),
        ("bijection-round-trip", _check_round_trips()),
        ("fiber-census-gf7", _check_fiber_census()),
    ]
