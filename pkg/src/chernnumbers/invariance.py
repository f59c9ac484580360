"""Exact linear algebra on Chern-number coordinates.

A pair of manifolds with the same underlying oriented smooth manifold gives a
difference vector; any topologically invariant combination of Chern numbers
must vanish on it. The annihilator of all known difference vectors therefore
bounds the space of invariant combinations from above.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, List, Sequence, Tuple

from .chern_algebra import ChernPolynomial, ChernVector, format_rational, pontryagin_number_functional
from .manifolds import SurfaceData, fake_partner, signature, stabilize, times_cp1
from .partitions import Partition, index_of, monomial_name, partitions_of, weight
from .projbundle import ruled_canonical, ruled_tangent

Vector = Tuple[Fraction, ...]


@dataclass(frozen=True)
class Functional:
    """Linear combination of the Chern numbers of `dim`-folds."""

    dim: int
    coefficients: Vector

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if len(coeffs) != len(partitions_of(self.dim)):
            raise ValueError(f"functional on {self.dim}-folds needs {len(partitions_of(self.dim))} coefficients")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def coordinate(cls, p: Partition) -> "Functional":
        n = weight(p)
        i = index_of(p, n)
        return cls(n, tuple(int(j == i) for j in range(len(partitions_of(n)))))

    @classmethod
    def from_polynomial(cls, poly: ChernPolynomial, n: int) -> "Functional":
        """Weight-`n` part of a polynomial; other weights are ignored."""
        return cls(n, tuple(poly.coefficient(p) for p in partitions_of(n)))

    def __call__(self, v) -> Fraction:
        values = v.values if isinstance(v, ChernVector) else v
        return sum((a * b for a, b in zip(self.coefficients, values)), Fraction(0))

    def to_polynomial(self) -> ChernPolynomial:
        return ChernPolynomial(self.dim, dict(zip(partitions_of(self.dim), self.coefficients)))

    def __str__(self):
        return str(self.to_polynomial())


@dataclass(frozen=True)
class ExamplePair:
    """Two complex structures on one smooth manifold (assumed, not checked)."""

    label: str
    left: ChernVector
    right: ChernVector
    provenance: str = ""

    def __post_init__(self):
        if self.left.dim != self.right.dim:
            raise ValueError(f"pair {self.label!r} mixes dimensions {self.left.dim} and {self.right.dim}")

    @property
    def dim(self) -> int:
        return self.left.dim

    def lifted(self) -> "ExamplePair":
        """The same pair multiplied by CP^1."""
        return ExamplePair(self.label + " x CP1", times_cp1(self.left), times_cp1(self.right),
                           self.provenance)


def difference(pair: ExamplePair) -> Vector:
    """``right - left`` in canonical coordinates."""
    return (pair.right - pair.left).values


def _clear_denominators(row: Sequence[Fraction]) -> List[int]:
    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    return [int(x * den) for x in row]


def _primitive(row: List[int]) -> List[int]:
    g = 0
    for x in row:
        g = gcd(g, x)
    return [x // g for x in row] if g > 1 else row


def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[List[Vector], List[int]]:
    """Reduced row echelon form, computed over the integers.

    Rows are scaled to integers and eliminated fraction-free (cross
    multiplication, then division by the row content); only the final
    normalization of pivots to 1 introduces fractions.
    """
    mat = [_clear_denominators([Fraction(x) for x in row]) for row in rows]
    mat = [r for r in mat if any(r)]
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        p = mat[r][col]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                q = mat[i][col]
                mat[i] = _primitive([p * a - q * b for a, b in zip(mat[i], mat[r])])
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    out = []
    for i, col in enumerate(pivots):
        lead = mat[i][col]
        out.append(tuple(Fraction(x, lead) for x in mat[i]))
    return out, pivots


def rank(vectors: Sequence[Sequence], ncols: int) -> int:
    return len(rref(vectors, ncols)[1])


def nullspace(vectors: Sequence[Sequence], ncols: int) -> List[Vector]:
    """Basis of ``{f : f . v = 0 for all v}``, one vector per free column."""
    reduced, pivots = rref(vectors, ncols)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        f = [Fraction(0)] * ncols
        f[free] = Fraction(1)
        for row, col in zip(reduced, pivots):
            f[col] = -row[free]
        basis.append(tuple(f))
    return basis


def annihilator(vectors: Sequence[Sequence], n: int) -> List[Functional]:
    """Canonical (RREF) basis of the functionals vanishing on every vector."""
    m = len(partitions_of(n))
    for v in vectors:
        if len(v) != m:
            raise ValueError(f"vector of length {len(v)} does not live on {n}-folds")
    basis, _ = rref(nullspace(vectors, m), m)
    return [Functional(n, row) for row in basis]


def _coeffs(f) -> Vector:
    return f.coefficients if isinstance(f, Functional) else tuple(Fraction(x) for x in f)


def span_contains(basis: Sequence[Functional], f) -> bool:
    """Exact membership of `f` in the span of `basis`."""
    target = _coeffs(f)
    m = len(target)
    rows = [_coeffs(b) for b in basis]
    if any(len(r) != m for r in rows):
        raise ValueError("dimension mismatch between basis and candidate")
    return rank(rows + [target], m) == rank(rows, m)


def span_equals(a: Sequence[Functional], b: Sequence[Functional]) -> bool:
    return all(span_contains(a, f) for f in b) and all(span_contains(b, f) for f in a)


def euler_functional(n: int) -> Functional:
    return Functional.coordinate((n,))


def pontryagin_functionals(n: int) -> Dict[str, Functional]:
    """All Pontryagin numbers ``p_J`` of complex `n`-folds (`n` even)."""
    out = {}
    for J in partitions_of(n // 2):
        name = "p" + "".join(f"_{j}" for j in J) if len(J) > 1 else f"p_{J[0]}"
        out[name] = Functional.from_polynomial(pontryagin_number_functional(J, n), n)
    return out


def _vec_json(v) -> List[str]:
    return [format_rational(x) for x in _coeffs(v)]


@dataclass
class Report:
    """Outcome of one theorem verification; serializes to a flat JSON record."""

    theorem: str
    inputs: Dict
    difference_vectors: List[Vector] = field(default_factory=list)
    annihilator_basis: List[Functional] = field(default_factory=list)
    expected_basis: List[Functional] = field(default_factory=list)
    passed: bool = False
    details: Dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "inputs": self.inputs,
            "difference_vectors": [_vec_json(v) for v in self.difference_vectors],
            "annihilator_basis": [_vec_json(f) for f in self.annihilator_basis],
            "expected_basis": [_vec_json(f) for f in self.expected_basis],
            "pass": self.passed,
            "details": self.details,
        }


_REALIZABILITY = ("seed surface pair assumed realizable by simply connected projective "
                  "surfaces that are orientation-reversing homeomorphic; not checked")


def _require_signature(x: SurfaceData):
    if signature(x) == 0:
        raise ValueError(f"seed {x.c1_sq},{x.c2} has signature 0; its partner is itself")


def threefold_pairs(x: SurfaceData) -> Tuple[ExamplePair, ExamplePair]:
    """The product pair ``(X x CP1, Y x CP1)`` and the ruled pair ``(N, M)``."""
    _require_signature(x)
    y = fake_partner(x)
    products = ExamplePair("Z/T", times_cp1(x.vector), times_cp1(y.vector),
                           "X x CP1 and Y x CP1, Y the orientation-reversed partner of X")
    ruled = ExamplePair("N/M", ruled_canonical(x), ruled_tangent(y),
                        "N = P(O(K)+O) over X, M = P(TY) over Y")
    return products, ruled


def verify_3fold_theorem(x: SurfaceData) -> Report:
    products, ruled = threefold_pairs(x)
    d1, d2 = difference(products), difference(ruled)
    basis = annihilator([d1, d2], 3)
    expected = [euler_functional(3)]
    # the product pair alone leaves c3 and 3c1c2 - c1^3
    partial = annihilator([d1], 3)
    partial_expected = [euler_functional(3), Functional(3, (0, 3, -1))]
    ok_full = span_equals(basis, expected) and len(basis) == 1
    ok_partial = span_equals(partial, partial_expected) and len(partial) == 2
    return Report(
        theorem="3-folds: only multiples of c3 are invariant",
        inputs={"seed": x.to_json(), "assumption": _REALIZABILITY},
        difference_vectors=[d1, d2],
        annihilator_basis=basis,
        expected_basis=expected,
        passed=ok_full and ok_partial,
        details={
            "product_pair_annihilator": [_vec_json(f) for f in partial],
            "product_pair_leaves_c3_and_3c1c2-c1^3": ok_partial,
        },
    )


def matches_lift_pattern(diff3: Sequence, diff4: Sequence) -> bool:
    """Lifted difference of a 3-fold difference ``(0, a, b)`` is ``(0, 2a, 4a, 4a+2b, 8b)``."""
    zero, a, b = (Fraction(t) for t in diff3)
    return zero == 0 and tuple(Fraction(t) for t in diff4) == (0, 2 * a, 4 * a, 4 * a + 2 * b, 8 * b)


def verify_4fold_theorem(x: SurfaceData) -> Report:
    pairs3 = threefold_pairs(x)
    diffs3 = [difference(p) for p in pairs3]
    diffs4 = [difference(p.lifted()) for p in pairs3]
    patterns = [matches_lift_pattern(d3, d4) for d3, d4 in zip(diffs3, diffs4)]
    basis = annihilator(diffs4, 4)
    pont = pontryagin_functionals(4)
    expected = [euler_functional(4), pont["p_1_1"], pont["p_2"]]
    ok = all(patterns) and len(basis) == 3 and span_equals(basis, expected)
    return Report(
        theorem="4-folds: invariant combinations are spanned by c4, p1^2, p2",
        inputs={"seed": x.to_json(), "assumption": _REALIZABILITY},
        difference_vectors=diffs4,
        annihilator_basis=basis,
        expected_basis=expected,
        passed=ok,
        details={
            "threefold_differences": [_vec_json(d) for d in diffs3],
            "lift_pattern_holds": patterns,
            "annihilator_dimension": len(basis),
        },
    )


def universal_coefficients(n: int) -> Dict[Partition, Tuple[Fraction, Fraction]]:
    """``(alpha_I, beta_I)`` with ``c_I(X x (CP1)^(n-2)) = alpha_I c1^2(X) + beta_I c2(X)``.

    Found by pushing the two formal basis surfaces through :func:`stabilize`;
    bilinearity of the product does the rest.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    c1_sq_basis = stabilize(ChernVector(2, (0, 1)), n - 2)
    c2_basis = stabilize(ChernVector(2, (1, 0)), n - 2)
    return {p: (c1_sq_basis[p], c2_basis[p]) for p in partitions_of(n)}


def verify_higher(n: int) -> Report:
    """Only ``c_n`` survives among individual Chern numbers for ``n >= 3``.

    Coefficients of ``c_n`` are ``(0, 2^(n-2))``, those of ``c1^n`` are
    ``(alpha > 0, 0)``, and every other ``c_I`` has both coefficients
    positive. So every ``c_I != c_n`` separates ``X x (CP1)^(n-2)`` from the
    partner product once the signature is nonzero.
    """
    if n < 3:
        raise ValueError("the higher-dimensional statement needs n >= 3")
    coeffs = universal_coefficients(n)
    top, c1_power = (n,), (1,) * n
    failures = []
    for p, (alpha, beta) in coeffs.items():
        if p == top:
            ok = alpha == 0 and beta == 2 ** (n - 2)
        elif p == c1_power:
            ok = alpha > 0 and beta == 0
        else:
            ok = alpha > 0 and beta > 0
        if not ok:
            failures.append(monomial_name(p))
    return Report(
        theorem=f"dimension {n}: c_{n} is the only invariant Chern number",
        inputs={"n": n},
        passed=not failures,
        details={
            "coefficients": {monomial_name(p): [format_rational(a), format_rational(b)]
                             for p, (a, b) in coeffs.items()},
            "failures": failures,
        },
    )
