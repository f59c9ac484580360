"""Chern numbers of CP^1-bundles ``P(E)`` over a complex surface.

The cohomology of ``X = P(E)`` is a free module over the base with basis
``{1, y}``, subject to ``y^2 + c1(E) y + c2(E) = 0``. Base classes are kept as
polynomials in four symbols: ``b = c1(B)`` and ``f = c1(E)`` in degree 2,
``eB = c2(B)`` and ``eE = c2(E)`` in degree 4. The surface has nothing above
degree 4, and a degree-4 class is read off through five intersection numbers.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from .chern_algebra import ChernVector
from .manifolds import SurfaceData

# exponents of (b, f, eB, eE)
_Mono = Tuple[int, int, int, int]
_DEGREES = (2, 2, 4, 4)


def _degree(m: _Mono) -> int:
    return sum(e * d for e, d in zip(m, _DEGREES))


class _BaseClass:
    """Element of the truncated cohomology ring of the base surface."""

    __slots__ = ("terms",)

    def __init__(self, terms: Dict[_Mono, Fraction] = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c and _degree(m) <= 4}

    @classmethod
    def symbol(cls, name: str) -> "_BaseClass":
        idx = ("b", "f", "eB", "eE").index(name)
        mono = tuple(int(i == idx) for i in range(4))
        return cls({mono: Fraction(1)})

    @classmethod
    def scalar(cls, value) -> "_BaseClass":
        return cls({(0, 0, 0, 0): Fraction(value)})

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return _BaseClass(out)

    def __neg__(self):
        return _BaseClass({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, _BaseClass):
            return _BaseClass({m: c * other for m, c in self.terms.items()})
        out: Dict[_Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                if _degree(m) <= 4:
                    out[m] = out.get(m, 0) + c1 * c2
        return _BaseClass(out)

    __rmul__ = __mul__

    def integrate(self, d: "ProjBundleData") -> Fraction:
        """Evaluate the degree-4 part on the fundamental class of the base."""
        values = {
            (2, 0, 0, 0): d.b_sq,
            (1, 1, 0, 0): d.b_f,
            (0, 2, 0, 0): d.f_sq,
            (0, 0, 1, 0): d.c2B,
            (0, 0, 0, 1): d.c2E,
        }
        return sum((c * values[m] for m, c in self.terms.items() if _degree(m) == 4), Fraction(0))


class _BundleClass:
    """Cohomology class ``lower + upper * y`` on ``P(E)``."""

    __slots__ = ("lower", "upper")

    def __init__(self, lower: _BaseClass, upper: _BaseClass):
        self.lower = lower
        self.upper = upper

    def __add__(self, other):
        return _BundleClass(self.lower + other.lower, self.upper + other.upper)

    def __mul__(self, other):
        # y^2 = -f y - eE
        f, eE = _BaseClass.symbol("f"), _BaseClass.symbol("eE")
        yy = self.upper * other.upper
        lower = self.lower * other.lower - yy * eE
        upper = self.lower * other.upper + self.upper * other.lower - yy * f
        return _BundleClass(lower, upper)

    def integrate(self, d: "ProjBundleData") -> Fraction:
        # y restricts to the generator on each fiber
        return self.upper.integrate(d)


@dataclass(frozen=True)
class ProjBundleData:
    """Intersection numbers on the base surface ``B`` of a rank-2 bundle ``E``.

    ``b_sq = c1(B)^2``, ``b_f = c1(B).c1(E)``, ``f_sq = c1(E)^2``,
    ``c2B = c2(B)``, ``c2E = c2(E)``.
    """

    b_sq: int
    b_f: int
    f_sq: int
    c2B: int
    c2E: int

    def __post_init__(self):
        for name in ("b_sq", "b_f", "f_sq", "c2B", "c2E"):
            val = getattr(self, name)
            if isinstance(val, bool) or not isinstance(val, int):
                raise TypeError(f"{name} must be an integer, got {val!r}")

    def to_json(self) -> dict:
        return {"b_sq": self.b_sq, "b_f": self.b_f, "f_sq": self.f_sq,
                "c2B": self.c2B, "c2E": self.c2E}

    @classmethod
    def from_json(cls, data) -> "ProjBundleData":
        return cls(*(int(data[k]) for k in ("b_sq", "b_f", "f_sq", "c2B", "c2E")))


def _chern_classes_of_total_space():
    b, f = _BaseClass.symbol("b"), _BaseClass.symbol("f")
    eB = _BaseClass.symbol("eB")
    zero = _BaseClass()
    # vertical tangent line bundle has c1 = f + 2y
    vert = _BundleClass(f, _BaseClass.scalar(2))
    base_c1 = _BundleClass(b, zero)
    base_c2 = _BundleClass(eB, zero)
    c1 = base_c1 + vert
    c2 = base_c2 + base_c1 * vert
    c3 = base_c2 * vert
    return c1, c2, c3


def projectivize(d: ProjBundleData) -> ChernVector:
    """Chern numbers ``(c3, c1c2, c1^3)`` of ``P(E)`` by Leray-Hirsch expansion."""
    c1, c2, c3 = _chern_classes_of_total_space()
    return ChernVector(3, (
        c3.integrate(d),
        (c1 * c2).integrate(d),
        (c1 * c1 * c1).integrate(d),
    ))


def projectivize_closed_form(d: ProjBundleData) -> ChernVector:
    """Same numbers from the closed formulas, used as an oracle."""
    return ChernVector(3, (
        2 * d.c2B,
        2 * (d.b_sq + d.c2B),
        6 * d.b_sq + 2 * p1_sphere_bundle(d),
    ))


def p1_sphere_bundle(d: ProjBundleData) -> int:
    """First Pontryagin number of the associated SO(3)-bundle: ``c1(E)^2 - 4 c2(E)``."""
    return d.f_sq - 4 * d.c2E


def trivial_bundle(x: SurfaceData) -> ProjBundleData:
    return ProjBundleData(x.c1_sq, 0, 0, x.c2, 0)


def tangent_bundle(y: SurfaceData) -> ProjBundleData:
    return ProjBundleData(y.c1_sq, y.c1_sq, y.c1_sq, y.c2, y.c2)


def canonical_plus_trivial(x: SurfaceData) -> ProjBundleData:
    """``O(K) + O``: ``c1(E) = K = -c1(X)`` and ``c2(E) = 0``."""
    return ProjBundleData(x.c1_sq, -x.c1_sq, x.c1_sq, x.c2, 0)


def ruled_tangent(y: SurfaceData) -> ChernVector:
    """``M = P(TY)``."""
    return projectivize(tangent_bundle(y))


def ruled_canonical(x: SurfaceData) -> ChernVector:
    """``N = P(O(K) + O)``."""
    return projectivize(canonical_plus_trivial(x))
