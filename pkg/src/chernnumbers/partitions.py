"""Integer partitions used as Chern monomial keys and vector coordinates.

A partition is a plain tuple of positive integers in weakly decreasing order.
``(3, 1)`` stands for the monomial ``c3*c1``; the empty tuple is the constant
monomial. Coordinates of every vector in this package follow the order of
:func:`partitions_of`, which is reverse-lexicographic on the part tuples::

    >>> partitions_of(4)
    ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))
"""
from functools import lru_cache
from typing import Iterable, Tuple

Partition = Tuple[int, ...]


def as_partition(parts: Iterable[int]) -> Partition:
    """Return `parts` as a validated partition, sorting into decreasing order."""
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if out and out[-1] < 1:
        raise ValueError(f"partition parts must be positive, got {out}")
    return out


def weight(p: Partition) -> int:
    return sum(p)


def _generate(n, largest):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _generate(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def partitions_of(n: int) -> Tuple[Partition, ...]:
    """All partitions of `n`, largest first part first.

    The generator already emits them in reverse-lexicographic order; the
    final sort only pins that order down explicitly.
    """
    if n < 0:
        raise ValueError(f"cannot partition a negative integer: {n}")
    return tuple(sorted(_generate(n, n), reverse=True))


@lru_cache(maxsize=None)
def _index_table(n):
    return {p: i for i, p in enumerate(partitions_of(n))}


def index_of(p: Partition, n: int) -> int:
    """Position of `p` in ``partitions_of(n)``."""
    p = as_partition(p)
    if weight(p) != n:
        raise ValueError(f"partition {p} has weight {weight(p)}, expected {n}")
    return _index_table(n)[p]


def monomial_name(p: Partition) -> str:
    """Render a partition as a Chern monomial, e.g. ``(2, 1, 1) -> 'c1^2c2'``.

    Factors are written with the smallest index first, matching the usual
    way Chern numbers are printed (``c1c3``, ``c1^2c2``).
    """
    if not p:
        return "1"
    pieces = []
    for idx in sorted(set(p)):
        mult = p.count(idx)
        pieces.append(f"c{idx}" if mult == 1 else f"c{idx}^{mult}")
    return "".join(pieces)
