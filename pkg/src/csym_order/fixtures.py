"""Named built-in inputs: worked-example posets and matrices."""
from __future__ import annotations

from .lattice import IntMatrix
from .poset import Poset, antichain, chain, from_cover_relations

# 1<3, 2<3, 2<4, 4<5
EXAMPLE_POSET_COVERS = [(1, 3), (2, 3), (2, 4), (4, 5)]

# printed order matrix of the five-element example poset
EXAMPLE_POSET_MATRIX = (
    (1, 0, 1, 0, 1, 1, 0, 1, 1, 1),
    (0, 1, 1, 1, 1, 1, 1, 1, 1, 1),
    (0, 0, 0, 0, 1, 0, 0, 1, 0, 1),
    (0, 0, 0, 1, 0, 1, 1, 1, 1, 1),
    (0, 0, 0, 0, 0, 0, 1, 0, 1, 1),
)

# 6x10 matrix whose configuration is the non-normal negative example
NEGATIVE_A_PRIME = (
    (1, 0, 0, 0, 0, 1, 1, 0, 0, 0),
    (1, 1, 0, 0, 0, 0, 0, 1, 0, 1),
    (0, 1, 1, 0, 0, 0, 1, 0, 1, 0),
    (0, 0, 1, 1, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 1, 1, 0, 0, 0, 1, 0),
    (1, 1, 1, 1, 1, 1, 1, 1, 1, 1),
)

# order matrix of the 3-element antichain, as printed
ANTICHAIN3_MATRIX = (
    (1, 0, 0, 1, 1, 0, 1),
    (0, 1, 0, 1, 0, 1, 1),
    (0, 0, 1, 0, 1, 1, 1),
)


def example_poset() -> Poset:
    return from_cover_relations(5, EXAMPLE_POSET_COVERS)


def negative_a_prime() -> IntMatrix:
    return IntMatrix.from_rows(NEGATIVE_A_PRIME)


def negative_configuration() -> IntMatrix:
    """The 7x11 configuration: a zero column and ``A'`` over a row of ones."""
    a = negative_a_prime()
    cols = [(0,) * a.rows + (1,)] + [c + (1,) for c in a.columns()]
    return IntMatrix.from_columns(cols)


def antichain3_matrix() -> IntMatrix:
    return IntMatrix.from_rows(ANTICHAIN3_MATRIX)


POSET_FIXTURES = {"example-2.1": example_poset}
MATRIX_FIXTURES = {
    "example-1.4": negative_configuration,
    "example-1.4-prime": negative_a_prime,
    "antichain-3": antichain3_matrix,
}


def named_poset(name: str) -> Poset:
    """Resolve ``example-2.1``, ``antichain:<d>`` or ``chain:<d>``."""
    if name in POSET_FIXTURES:
        return POSET_FIXTURES[name]()
    kind, _, size = name.partition(":")
    if kind in ("antichain", "chain") and size.isdigit():
        return (antichain if kind == "antichain" else chain)(int(size))
    raise KeyError(f"unknown poset fixture {name!r}")


def named_matrix(name: str) -> IntMatrix:
    if name in MATRIX_FIXTURES:
        return MATRIX_FIXTURES[name]()
    raise KeyError(f"unknown matrix fixture {name!r}")
