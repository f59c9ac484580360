"""Chern data of abstract manifolds and the operations that build new ones."""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from math import comb
from typing import Dict, Tuple

from .chern_algebra import ChernVector
from .partitions import as_partition, partitions_of


@dataclass(frozen=True)
class SurfaceData:
    """Chern numbers ``c1^2`` and ``c2 = e`` of a compact complex surface."""

    c1_sq: int
    c2: int

    def __post_init__(self):
        for name in ("c1_sq", "c2"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, int):
                raise TypeError(f"{name} must be an integer, got {val!r}")
        if (self.c1_sq - 2 * self.c2) % 3:
            raise ValueError(
                f"c1^2 - 2*c2 = {self.c1_sq - 2 * self.c2} is not divisible by 3, "
                "so (c1^2, c2) cannot come from a complex surface")

    @property
    def vector(self) -> ChernVector:
        return ChernVector(2, (self.c2, self.c1_sq))

    @classmethod
    def from_vector(cls, v: ChernVector) -> "SurfaceData":
        if v.dim != 2 or not v.is_integral():
            raise ValueError("surface data needs an integral 2-dimensional Chern vector")
        return cls(int(v[(1, 1)]), int(v[(2,)]))

    def to_json(self) -> dict:
        return {"c1_sq": self.c1_sq, "c2": self.c2}


def signature(x: SurfaceData) -> int:
    """Signature from the Chern numbers: ``(c1^2 - 2 c2) / 3``."""
    return (x.c1_sq - 2 * x.c2) // 3


def fake_partner(x: SurfaceData) -> SurfaceData:
    """Surface with the same Euler number and opposite signature.

    Keeping ``e`` and flipping the sign of ``p1 = c1^2 - 2e`` gives
    ``c1^2 -> 4e - c1^2``.
    """
    return SurfaceData(4 * x.c2 - x.c1_sq, x.c2)


def point() -> ChernVector:
    """The 0-dimensional manifold; unit for :func:`product`."""
    return ChernVector(0, (1,))


def cp(n: int) -> ChernVector:
    """Chern numbers of ``CP^n``: ``c(T) = (1 + h)^(n+1)`` and ``h^n = 1``."""
    if n < 1:
        raise ValueError(f"CP^n needs n >= 1, got {n}")
    values = []
    for p in partitions_of(n):
        val = 1
        for i in p:
            val *= comb(n + 1, i)
        values.append(val)
    return ChernVector(n, tuple(values))


def _as_vector(x) -> ChernVector:
    return x.vector if isinstance(x, SurfaceData) else x


def product(a: ChernVector, b: ChernVector) -> ChernVector:
    """Chern numbers of ``A x B`` from the Whitney formula.

    Every ``c_k(A x B) = sum_{i+j=k} c_i(A) c_j(B)``; for each monomial we
    enumerate the ways to split each factor between the two sides and keep
    the splits landing in the top degree of both.
    """
    a, b = _as_vector(a), _as_vector(b)
    da, db = a.dim, b.dim
    n = da + db
    values = []
    for part in partitions_of(n):
        choices = [range(max(0, r - db), min(r, da) + 1) for r in part]
        total = Fraction(0)
        for split in _cartesian(*choices):
            if sum(split) != da:
                continue
            left = as_partition(i for i in split if i)
            right = as_partition(r - i for r, i in zip(part, split) if r - i)
            total += a[left] * b[right]
        values.append(total)
    return ChernVector(n, tuple(values))


def times_cp1(a: ChernVector) -> ChernVector:
    """Chern numbers of ``A x CP^1`` by index lowering.

    ``c_{r_1}...c_{r_k}(A x CP^1) = 2 sum_j c_{r_1}...c_{r_j - 1}...c_{r_k}(A)``,
    where a lowered index 0 drops the factor.
    """
    a = _as_vector(a)
    n = a.dim + 1
    values = []
    for part in partitions_of(n):
        total = Fraction(0)
        for j in range(len(part)):
            lowered = list(part)
            lowered[j] -= 1
            lowered = as_partition(r for r in lowered if r)
            if lowered and lowered[0] > a.dim:
                continue
            total += a[lowered]
        values.append(2 * total)
    return ChernVector(n, tuple(values))


def stabilize(a: ChernVector, k: int) -> ChernVector:
    """Multiply by ``k`` copies of ``CP^1``."""
    if k < 0:
        raise ValueError("number of CP^1 factors must be non-negative")
    a = _as_vector(a)
    for _ in range(k):
        a = times_cp1(a)
    return a


@dataclass(frozen=True)
class HodgeDiamond:
    """Hodge numbers ``h[p][q]`` of a compact Kaehler `n`-fold."""

    n: int
    h: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = self.n
        grid = tuple(tuple(int(x) for x in row) for row in self.h)
        if len(grid) != n + 1 or any(len(row) != n + 1 for row in grid):
            raise ValueError(f"a Hodge diamond of dimension {n} is a {n + 1}x{n + 1} grid")
        for p in range(n + 1):
            for q in range(n + 1):
                if grid[p][q] < 0:
                    raise ValueError(f"h^{p},{q} is negative")
                if grid[p][q] != grid[q][p]:
                    raise ValueError(f"h^{p},{q} != h^{q},{p}")
                if grid[p][q] != grid[n - p][n - q]:
                    raise ValueError(f"h^{p},{q} != h^{n - p},{n - q}")
        if grid[0][0] != 1:
            raise ValueError("h^0,0 must be 1")
        object.__setattr__(self, "h", grid)

    @classmethod
    def projective_space(cls, n: int) -> "HodgeDiamond":
        return cls(n, tuple(tuple(int(p == q) for q in range(n + 1)) for p in range(n + 1)))

    def to_json(self) -> dict:
        return {"n": self.n, "h": [list(row) for row in self.h]}


def chi_p_from_hodge(d: HodgeDiamond, p: int) -> int:
    """``chi_p = sum_q (-1)^q h^{p,q}``."""
    if not 0 <= p <= d.n:
        raise ValueError(f"p must lie in 0..{d.n}, got {p}")
    return sum((-1) ** q * d.h[p][q] for q in range(d.n + 1))


def yau_validate(v: ChernVector) -> Dict[str, bool]:
    """Check the ample-canonical geography inequalities in dimensions 3 and 4.

    Only a predicate: which of the inequalities the numbers satisfy.
    """
    if v.dim == 3:
        c1c2, c1_3 = v[(2, 1)], v[(1, 1, 1)]
        checks = {
            "c1^3 < 0": c1_3 < 0,
            "c1^3 >= 8/3*c1c2": c1_3 >= Fraction(8, 3) * c1c2,
        }
    elif v.dim == 4:
        c1_2c2, c1_4 = v[(2, 1, 1)], v[(1, 1, 1, 1)]
        checks = {
            "c1^4 > 0": c1_4 > 0,
            "c1^4 <= 5/2*c1^2c2": c1_4 <= Fraction(5, 2) * c1_2c2,
            "c1^4 <= 5/3*(4*c1^2c2 - c1^4)": c1_4 <= Fraction(5, 3) * (4 * c1_2c2 - c1_4),
        }
    else:
        raise ValueError(f"Yau inequalities are only implemented in dimensions 3 and 4, got {v.dim}")
    checks["all"] = all(checks.values())
    return checks
