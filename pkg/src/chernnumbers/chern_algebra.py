"""Truncated graded algebra in abstract Chern classes c1, c2, ... .

Everything here is exact. Coefficients are :class:`fractions.Fraction` by
default, but the polynomial type only needs a commutative ring, so genus
computations reuse it with coefficients that are polynomials in ``y``.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, Iterable, Mapping, Tuple

from .partitions import Partition, as_partition, index_of, monomial_name, partitions_of, weight


def _merge(p: Partition, q: Partition) -> Partition:
    return tuple(sorted(p + q, reverse=True))


def parse_rational(value) -> Fraction:
    """Parse ``"p/q"`` strings, bare ints and Fractions; floats are rejected."""
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact value {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as a rational")


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


class ChernPolynomial:
    """Linear combination of Chern monomials of weight at most `truncation`.

    Instances are immutable. Zero coefficients are never stored and any
    monomial of weight above the truncation is dropped on construction, so
    products are automatically truncated.
    """

    __slots__ = ("_truncation", "_terms")

    def __init__(self, truncation: int, terms: Mapping[Iterable[int], object] = ()):
        if truncation < 0:
            raise ValueError("truncation weight must be non-negative")
        clean: Dict[Partition, object] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            key = as_partition(key)
            if weight(key) > truncation:
                continue
            if isinstance(coeff, int):
                coeff = Fraction(coeff)
            total = clean.get(key, 0) + coeff
            if total:
                clean[key] = total
            else:
                clean.pop(key, None)
        object.__setattr__(self, "_truncation", truncation)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ChernPolynomial is immutable")

    @property
    def truncation(self) -> int:
        return self._truncation

    @property
    def terms(self) -> Dict[Partition, object]:
        return dict(self._terms)

    def coefficient(self, p: Iterable[int]):
        return self._terms.get(as_partition(p), Fraction(0))

    def support(self) -> Tuple[Partition, ...]:
        return tuple(sorted(self._terms, key=lambda k: (weight(k), index_of(k, weight(k)))))

    def is_zero(self) -> bool:
        return not self._terms

    def homogeneous_part(self, n: int) -> "ChernPolynomial":
        return ChernPolynomial(self._truncation, {k: v for k, v in self._terms.items() if weight(k) == n})

    def is_homogeneous(self, n: int) -> bool:
        return all(weight(k) == n for k in self._terms)

    def map_coefficients(self, func) -> "ChernPolynomial":
        return ChernPolynomial(self._truncation, {k: func(v) for k, v in self._terms.items()})

    def with_truncation(self, truncation: int) -> "ChernPolynomial":
        return ChernPolynomial(truncation, self._terms)

    def _check(self, other):
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        if other._truncation != self._truncation:
            raise ValueError(
                f"truncation mismatch: {self._truncation} vs {other._truncation}")
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        merged = dict(self._terms)
        for k, v in other._terms.items():
            merged[k] = merged.get(k, 0) + v
        return ChernPolynomial(self._truncation, merged)

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, ChernPolynomial):
            # scalar (Fraction, int, or a coefficient-ring element)
            return self.map_coefficients(lambda c: c * other)
        self._check(other)
        out: Dict[Partition, object] = {}
        n = self._truncation
        for k1, v1 in self._terms.items():
            w1 = weight(k1)
            for k2, v2 in other._terms.items():
                if w1 + weight(k2) > n:
                    continue
                key = _merge(k1, k2)
                out[key] = out.get(key, 0) + v1 * v2
        return ChernPolynomial(n, out)

    def __rmul__(self, other):
        return self.map_coefficients(lambda c: other * c)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = constant(1, self._truncation)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, ChernPolynomial):
            return NotImplemented
        return self._truncation == other._truncation and self._terms == other._terms

    def __hash__(self):
        return hash((self._truncation, frozenset(self._terms.items())))

    def __repr__(self):
        return f"ChernPolynomial({self._truncation}, {self})"

    def __str__(self):
        return render(self)

    def to_records(self):
        """Serialize as ``[{"partition": [...], "coeff": "p/q"}, ...]``."""
        return [{"partition": list(k), "coeff": format_rational(self._terms[k])}
                for k in self.support()]

    @classmethod
    def from_records(cls, truncation: int, records) -> "ChernPolynomial":
        return cls(truncation, [(rec["partition"], parse_rational(rec["coeff"])) for rec in records])


def _term_string(key: Partition) -> str:
    if not key:
        return ""
    parts = []
    for idx in sorted(set(key)):
        mult = key.count(idx)
        parts.append(f"c{idx}" if mult == 1 else f"c{idx}^{mult}")
    return "*".join(parts)


def render(poly: ChernPolynomial) -> str:
    """Human-readable form, e.g. ``"1/24*c1*c2"`` or ``"c1^2 - 2*c2"``.

    Monomials are listed by weight, and within a weight starting from the
    power of ``c1`` (the reverse of the coordinate order).
    """
    if poly.is_zero():
        return "0"
    keys = sorted(poly._terms, key=lambda k: (weight(k), -index_of(k, weight(k))))
    chunks = []
    for key in keys:
        coeff = poly._terms[key]
        mono = _term_string(key)
        if isinstance(coeff, Fraction):
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if mono and mag == 1:
                body = mono
            elif mono:
                body = f"{mag}*{mono}"
            else:
                body = str(mag)
        else:
            sign = "+"
            body = f"({coeff})*{mono}" if mono else f"({coeff})"
        chunks.append((sign, body))
    first_sign, first_body = chunks[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


def constant(value, truncation: int) -> ChernPolynomial:
    return ChernPolynomial(truncation, {(): value})


def chern_class(i: int, truncation: int) -> ChernPolynomial:
    """The generator ``c_i`` (``c_0 = 1``)."""
    if i < 0:
        raise ValueError("Chern class index must be non-negative")
    if i == 0:
        return constant(1, truncation)
    return ChernPolynomial(truncation, {(i,): 1})


def monomial(p: Iterable[int], truncation: int, coeff=1) -> ChernPolynomial:
    return ChernPolynomial(truncation, {as_partition(p): coeff})


def poly_add(a: ChernPolynomial, b: ChernPolynomial) -> ChernPolynomial:
    return a + b


def poly_mul(a: ChernPolynomial, b: ChernPolynomial) -> ChernPolynomial:
    return a * b


@lru_cache(maxsize=None)
def power_sum(m: int, truncation: int) -> ChernPolynomial:
    """Power sum of the Chern roots, via Newton's identities.

    ``s_m = sum_{i<m} (-1)^(i-1) c_i s_{m-i} + (-1)^(m-1) m c_m``
    """
    if m < 1 or m > truncation:
        raise ValueError(f"power sum index must satisfy 1 <= m <= {truncation}, got {m}")
    N = truncation
    total = chern_class(m, N) * Fraction((-1) ** (m - 1) * m)
    for i in range(1, m):
        total = total + chern_class(i, N) * power_sum(m - i, N) * Fraction((-1) ** (i - 1))
    return total


def elementary_from_power_sums(power_sums, truncation: int):
    """Invert Newton's identities: recover ``c_1..c_M`` from ``s_1..s_M``.

    ``m c_m = sum_{i=1}^m (-1)^(i-1) c_{m-i} s_i``. Used as an
    independent check on :func:`power_sum`.
    """
    cs = [constant(1, truncation)]
    for m in range(1, len(power_sums) + 1):
        acc = ChernPolynomial(truncation)
        for i in range(1, m + 1):
            acc = acc + cs[m - i] * power_sums[i - 1] * Fraction((-1) ** (i - 1))
        cs.append(acc * Fraction(1, m))
    return cs[1:]


def pontryagin_class(k: int, truncation: int) -> ChernPolynomial:
    """``p_k = (-1)^k sum_{i+j=2k} (-1)^i c_i c_j`` with ``c_0 = 1``."""
    if k < 1 or 2 * k > truncation:
        raise ValueError(f"p_{k} needs truncation >= {2 * k}, got {truncation}")
    N = truncation
    total = ChernPolynomial(N)
    for i in range(0, 2 * k + 1):
        total = total + chern_class(i, N) * chern_class(2 * k - i, N) * Fraction((-1) ** i)
    return total * Fraction((-1) ** k)


def pontryagin_number_functional(J: Iterable[int], n: int) -> ChernPolynomial:
    """The Pontryagin number ``p_J`` of a complex `n`-fold as a Chern polynomial."""
    J = as_partition(J)
    if n % 2 or n <= 0:
        raise ValueError(f"Pontryagin numbers need a positive even dimension, got {n}")
    if 2 * weight(J) != n:
        raise ValueError(f"partition {J} has weight {weight(J)}, expected {n // 2}")
    result = constant(1, n)
    for j in J:
        result = result * pontryagin_class(j, n)
    return result


def poly_exp(poly: ChernPolynomial) -> ChernPolynomial:
    """Truncated exponential of a polynomial without constant term."""
    if poly.coefficient(()):
        raise ValueError("exp is only taken of polynomials with zero constant term")
    N = poly.truncation
    result = constant(1, N)
    term = constant(1, N)
    for k in range(1, N + 1):
        term = term * poly
        if term.is_zero():
            break
        result = result + term * Fraction(1, factorial(k))
    return result


@dataclass(frozen=True)
class ChernVector:
    """The Chern numbers of an abstract `dim`-fold, one per partition of `dim`.

    `values` is ordered like ``partitions_of(dim)``. Entries are rationals so
    formal (non-realizable) data can be pushed through the same machinery.
    """

    dim: int
    values: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("dimension must be non-negative")
        vals = tuple(parse_rational(v) for v in self.values)
        expected = len(partitions_of(self.dim))
        if len(vals) != expected:
            raise ValueError(
                f"a {self.dim}-fold has {expected} Chern numbers, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_mapping(cls, dim: int, mapping: Mapping) -> "ChernVector":
        """Build from ``{partition: value}``; missing partitions default to 0."""
        lookup = {as_partition(k): v for k, v in mapping.items()}
        for key in lookup:
            if weight(key) != dim:
                raise ValueError(f"partition {key} does not have weight {dim}")
        return cls(dim, tuple(lookup.get(p, 0) for p in partitions_of(dim)))

    @classmethod
    def zero(cls, dim: int) -> "ChernVector":
        return cls(dim, (0,) * len(partitions_of(dim)))

    def __getitem__(self, p) -> Fraction:
        return self.values[index_of(p, self.dim)]

    def get(self, p) -> Fraction:
        """Like indexing, but partitions of the wrong weight read as 0."""
        p = as_partition(p)
        if weight(p) != self.dim:
            return Fraction(0)
        return self[p]

    def items(self):
        return zip(partitions_of(self.dim), self.values)

    def as_dict(self) -> Dict[Partition, Fraction]:
        return dict(self.items())

    @property
    def euler(self) -> Fraction:
        """The top Chern number ``c_n`` (the value itself for a point)."""
        return self.values[0]

    def _same_dim(self, other):
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "ChernVector") -> "ChernVector":
        self._same_dim(other)
        return ChernVector(self.dim, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ChernVector") -> "ChernVector":
        self._same_dim(other)
        return ChernVector(self.dim, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, factor) -> "ChernVector":
        factor = parse_rational(factor)
        return ChernVector(self.dim, tuple(factor * v for v in self.values))

    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self.values)

    def to_json(self) -> dict:
        return {"dim": self.dim, "values": [format_rational(v) for v in self.values]}

    @classmethod
    def from_json(cls, data: Mapping) -> "ChernVector":
        return cls(int(data["dim"]), tuple(parse_rational(v) for v in data["values"]))

    def table(self) -> str:
        rows = [(monomial_name(p), format_rational(v)) for p, v in self.items()]
        width = max(len(name) for name, _ in rows)
        return "\n".join(f"{name.ljust(width)}  {val}" for name, val in rows)


def evaluate(f: ChernPolynomial, v: ChernVector):
    """Pair a polynomial with Chern data; only weight ``v.dim`` monomials count."""
    if f.truncation < v.dim:
        raise ValueError(
            f"polynomial truncated at weight {f.truncation} cannot be evaluated on a {v.dim}-fold")
    total = Fraction(0)
    for key, coeff in f._terms.items():
        if weight(key) == v.dim:
            total = coeff * v[key] + total
    return total
