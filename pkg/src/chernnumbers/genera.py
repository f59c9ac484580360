"""Multiplicative sequences: Todd genus, chi_y genus and the chi_p functionals.

A genus is given by a characteristic power series ``Q(x)`` with ``Q(0) = 1``.
Its degree-`n` polynomial ``K_n`` is the weight-`n` part of ``prod_i Q(x_i)``
over the Chern roots ``x_i``. Writing ``log Q = sum_m b_m x^m`` this is

    K = exp( sum_m b_m * s_m )

with ``s_m`` the power sums of the roots, so the whole computation stays
inside :class:`~chernnumbers.chern_algebra.ChernPolynomial`.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .chern_algebra import (ChernPolynomial, ChernVector, evaluate, format_rational,
                            poly_exp, power_sum)
from .manifolds import HodgeDiamond, chi_p_from_hodge
from .partitions import Partition, as_partition


class YPolynomial:
    """Polynomial in one auxiliary variable ``y`` with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = (0,)):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs) or (Fraction(0),)

    @classmethod
    def y(cls) -> "YPolynomial":
        return cls((0, 1))

    @staticmethod
    def _lift(other) -> Optional["YPolynomial"]:
        if isinstance(other, YPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return YPolynomial((other,))
        return None

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, y) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * y + c
        return total

    def __bool__(self):
        return any(self.coeffs)

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return YPolynomial([self.coefficient(i) + other.coefficient(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return YPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return YPolynomial([c * other for c in self.coeffs])
        if not isinstance(other, YPolynomial):
            return NotImplemented
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return YPolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs[0]) if self.degree == 0 else hash(self.coeffs)

    def __repr__(self):
        return f"YPolynomial({self})"

    def __str__(self):
        pieces = []
        for k, c in enumerate(self.coeffs):
            if not c and self.degree:
                continue
            mono = "" if k == 0 else ("y" if k == 1 else f"y^{k}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def _y_part(c, k: int) -> Fraction:
    return c.coefficient(k) if isinstance(c, YPolynomial) else (Fraction(c) if k == 0 else Fraction(0))


def _at_y(c, y) -> Fraction:
    return c(y) if isinstance(c, YPolynomial) else Fraction(c)


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series ``a_0 + a_1 x + ... + a_N x^N``, higher terms discarded."""

    coeffs: Tuple

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else Fraction(0)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        N = min(self.order, other.order)
        return TruncatedSeries(tuple(
            sum((self[i] * other[k - i] for i in range(k + 1)), Fraction(0)) for k in range(N + 1)))

    def __truediv__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Exact long division; needs a leading coefficient of 1 (or a nonzero rational)."""
        lead = other[0]
        if isinstance(lead, YPolynomial):
            if lead.degree:
                raise ValueError("series division needs a constant leading coefficient")
            lead = lead.coeffs[0]
        if lead == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv = Fraction(1) / lead
        N = min(self.order, other.order)
        q: List = []
        for k in range(N + 1):
            acc = self[k]
            for i in range(k):
                acc = acc - q[i] * other[k - i]
            q.append(acc * inv)
        return TruncatedSeries(tuple(q))

    def derivative(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(self[k] * k for k in range(1, self.order + 1)) or (Fraction(0),))

    def log(self) -> "TruncatedSeries":
        """``log Q`` via ``(log Q)' = Q'/Q``; requires ``Q(0) = 1``."""
        if self[0] != 1:
            raise ValueError("log needs constant term 1")
        ratio = self.derivative() / TruncatedSeries(self.coeffs[:-1])
        return TruncatedSeries((Fraction(0),) + tuple(ratio[k] * Fraction(1, k + 1) for k in range(self.order)))


def todd_series(order: int) -> TruncatedSeries:
    """``x / (1 - e^{-x})``, computed by dividing 1 by ``(1 - e^{-x})/x``."""
    denom = TruncatedSeries(tuple(Fraction((-1) ** k, factorial(k + 1)) for k in range(order + 1)))
    one = TruncatedSeries((Fraction(1),) + (Fraction(0),) * order)
    return one / denom


def chi_y_series(order: int) -> TruncatedSeries:
    """``x(1+y) / (1 - e^{-x(1+y)}) - x y`` with coefficients polynomial in y."""
    one_plus_y = YPolynomial((1, 1))
    power = YPolynomial((1,))
    denom = []
    for k in range(order + 1):
        denom.append(power * Fraction((-1) ** k, factorial(k + 1)))
        power = power * one_plus_y
    one = TruncatedSeries((YPolynomial((1,)),) + (YPolynomial((0,)),) * order)
    q = one / TruncatedSeries(tuple(denom))
    coeffs = list(q.coeffs)
    if order >= 1:
        coeffs[1] = coeffs[1] - YPolynomial.y()
    return TruncatedSeries(tuple(coeffs))


@dataclass(frozen=True)
class GenusFunctional:
    """Homogeneous weight-`n` Chern polynomial; coefficients may depend on y."""

    n: int
    poly: ChernPolynomial

    def __post_init__(self):
        if not self.poly.is_homogeneous(self.n):
            raise ValueError(f"genus functional must be homogeneous of weight {self.n}")

    def coefficient(self, p):
        return self.poly.coefficient(p)

    def support(self) -> Tuple[Partition, ...]:
        return self.poly.support()

    def evaluate(self, v: ChernVector):
        if v.dim != self.n:
            raise ValueError(f"weight-{self.n} functional evaluated on a {v.dim}-fold")
        return evaluate(self.poly, v)

    @property
    def y_degree(self) -> int:
        return max((c.degree for c in self.poly.terms.values() if isinstance(c, YPolynomial)), default=0)

    def specialize(self, y) -> "GenusFunctional":
        """Substitute a rational value for y."""
        y = Fraction(y)
        return GenusFunctional(self.n, self.poly.map_coefficients(lambda c: _at_y(c, y)))

    def y_coefficient(self, k: int) -> "GenusFunctional":
        return GenusFunctional(self.n, self.poly.map_coefficients(lambda c: _y_part(c, k)))

    def __add__(self, other: "GenusFunctional") -> "GenusFunctional":
        return GenusFunctional(self.n, self.poly + other.poly)

    def __sub__(self, other: "GenusFunctional") -> "GenusFunctional":
        return GenusFunctional(self.n, self.poly - other.poly)

    def __mul__(self, scalar) -> "GenusFunctional":
        return GenusFunctional(self.n, self.poly * Fraction(scalar))

    __rmul__ = __mul__

    def __str__(self):
        return str(self.poly)

    def to_records(self) -> List[Dict]:
        """Same shape as a Chern polynomial, one record per power of y."""
        records = []
        for key in self.poly.support():
            c = self.poly.coefficient(key)
            if isinstance(c, YPolynomial):
                for k, val in enumerate(c.coeffs):
                    if val:
                        records.append({"partition": list(key), "coeff": format_rational(val), "y_degree": k})
            else:
                records.append({"partition": list(key), "coeff": format_rational(c), "y_degree": 0})
        return records


def multiplicative_sequence(Q: TruncatedSeries, n: int) -> GenusFunctional:
    """Weight-`n` polynomial of the multiplicative sequence with characteristic series Q."""
    if Q[0] != 1:
        raise ValueError("characteristic series must have constant term 1")
    if Q.order < n:
        raise ValueError(f"series known to order {Q.order}, need {n}")
    logq = TruncatedSeries(Q.coeffs[: n + 1]).log()
    exponent = ChernPolynomial(n)
    for m in range(1, n + 1):
        if logq[m]:
            exponent = exponent + power_sum(m, n) * logq[m]
    return GenusFunctional(n, poly_exp(exponent).homogeneous_part(n))


@lru_cache(maxsize=None)
def todd(n: int) -> GenusFunctional:
    if n < 1:
        raise ValueError("Todd polynomial needs n >= 1")
    return multiplicative_sequence(todd_series(n), n)


@lru_cache(maxsize=None)
def chi_y(n: int) -> GenusFunctional:
    """The chi_y genus: coefficient of ``y^p`` is chi_p."""
    if n < 1:
        raise ValueError("chi_y genus needs n >= 1")
    return multiplicative_sequence(chi_y_series(n), n)


def chi_p_functional(n: int, p: int) -> GenusFunctional:
    if not 0 <= p <= n:
        raise ValueError(f"p must lie in 0..{n}, got {p}")
    return chi_y(n).y_coefficient(p)


def salamon_combination(n: int, k: int) -> GenusFunctional:
    """``sum_{p=k}^n (-1)^p binom(p, k) chi_p``."""
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    total = GenusFunctional(n, ChernPolynomial(n))
    for p in range(k, n + 1):
        total = total + chi_p_functional(n, p) * ((-1) ** p * comb(p, k))
    return total


def _poly_of(f):
    return f.poly if isinstance(f, GenusFunctional) else f


def support_check(f, threshold: int) -> bool:
    """True iff every monomial with nonzero coefficient has a part above `threshold`."""
    return all(key and key[0] > threshold for key in _poly_of(f).support())


def salamon_threshold(n: int, k: int) -> int:
    return n - 2 * (k // 2)


def verify_prop_tS(n: int) -> bool:
    """No chi_p in dimension `n` involves ``c1^n``.

    Holds for odd ``n > 1``; for even `n` this returns False, the Todd genus
    being the obvious counterexample.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    top = (1,) * n
    return all(chi_p_functional(n, p).coefficient(top) == 0 for p in range(n + 1))


def todd_remark_check(n: int) -> Dict[str, Optional[bool]]:
    """Coefficient of c_n equals that of c1^n; for odd n every term contains c1.

    The second entry is None for even `n`.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    td = todd(n)
    same = td.coefficient((n,)) == td.coefficient((1,) * n)
    divisible = None
    if n % 2:
        divisible = all(1 in key for key in td.support())
    return {"top_coefficients_agree": same, "divisible_by_c1": divisible}


def lw_functional(n: int, power: int = 1) -> GenusFunctional:
    """``sum_p (-1)^p p^power chi_p``.

    With ``power=1`` this is ``(n/2) c_n``; the second moment is where
    ``c1 c_{n-1}`` enters.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    total = GenusFunctional(n, ChernPolynomial(n))
    for p in range(n + 1):
        total = total + chi_p_functional(n, p) * ((-1) ** p * p ** power)
    return total


def lw_support_violations(n: int, power: int = 1) -> List[Partition]:
    """Monomials of :func:`lw_functional` outside ``{c_n, c1 c_{n-1}}``."""
    allowed = {(n,), as_partition((n - 1, 1))}
    return [key for key in lw_functional(n, power).support() if key not in allowed]


def rr_3fold_check(v: ChernVector, d: HodgeDiamond) -> bool:
    """Riemann-Roch for the structure sheaf of a 3-fold: ``c1c2/24 = chi_0``."""
    if v.dim != 3 or d.n != 3:
        raise ValueError(f"expected 3-dimensional data, got dims {v.dim} and {d.n}")
    return todd(3).evaluate(v) == chi_p_from_hodge(d, 0)
