"""The full battery of checks behind ``chernnumbers verify-paper``.

Each check returns a :class:`Check`; :func:`run_all` runs them in a fixed
order so that the JSON report is byte-identical for fixed seeds.
"""
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List

from . import genera
from .chern_algebra import ChernVector, chern_class, evaluate, format_rational, pontryagin_class
from .genera import chi_p_functional, chi_y, todd
from .invariance import (threefold_pairs, verify_3fold_theorem, verify_4fold_theorem,
                         verify_higher)
from .manifolds import (HodgeDiamond, SurfaceData, chi_p_from_hodge, cp, fake_partner, product,
                        signature, times_cp1, yau_validate)
from .partitions import monomial_name, partitions_of
from .projbundle import (ProjBundleData, canonical_plus_trivial, p1_sphere_bundle, projectivize,
                         projectivize_closed_form, ruled_canonical, ruled_tangent, trivial_bundle)


@dataclass
class Check:
    name: str
    passed: bool
    details: Dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_json(self) -> dict:
        return {"check": self.name, "status": self.status, "details": self.details}


def _s(x) -> str:
    return format_rational(x)


def _vec(v: ChernVector) -> Dict[str, str]:
    return {monomial_name(p): _s(x) for p, x in v.items()}


def random_vector(rng: random.Random, dim: int, bound: int = 50) -> ChernVector:
    return ChernVector(dim, tuple(rng.randint(-bound, bound) for _ in partitions_of(dim)))


def random_bundle(rng: random.Random, bound: int = 50) -> ProjBundleData:
    return ProjBundleData(*(rng.randint(-bound, bound) for _ in range(5)))


def check_wu(seed: SurfaceData, rng: random.Random) -> Check:
    wu_poly = chern_class(1, 2) ** 2 == chern_class(2, 2) * 2 + pontryagin_class(1, 2)
    partner = fake_partner(seed)
    p1 = evaluate(pontryagin_class(1, 2), seed.vector)
    ok = (wu_poly
          and p1 == 3 * signature(seed)
          and partner.c1_sq == 4 * seed.c2 - seed.c1_sq
          and signature(partner) == -signature(seed)
          and fake_partner(partner) == seed)
    return Check("wu_and_partner", ok, {
        "c1^2 = 2c2 + p1 as polynomials": wu_poly,
        "seed": seed.to_json(), "partner": partner.to_json(),
        "p1(seed)": _s(p1), "signature(seed)": signature(seed),
    })


def check_product_oracle(seed: SurfaceData, rng: random.Random, cases: int = 200) -> Check:
    bad = []
    for i in range(cases):
        v = random_vector(rng, rng.randint(1, 4))
        if times_cp1(v) != product(v, cp(1)):
            bad.append(v.to_json())
    return Check("product_formula_oracle", not bad, {"cases": cases, "mismatches": bad})


def check_projbundle_oracle(seed: SurfaceData, rng: random.Random, cases: int = 200) -> Check:
    bad = []
    for _ in range(cases):
        d = random_bundle(rng)
        shifted = ProjBundleData(d.b_sq, d.b_f + rng.randint(-50, 50), d.f_sq, d.c2B, d.c2E)
        result = projectivize(d)
        if result != projectivize_closed_form(d) or result != projectivize(shifted):
            bad.append(d.to_json())
    trivial = projectivize(trivial_bundle(seed)) == times_cp1(seed.vector)
    return Check("projective_bundle_oracle", not bad and trivial,
                 {"cases": cases, "mismatches": bad, "trivial_bundle_is_product": trivial})


def check_3fold_pair(seed: SurfaceData, rng: random.Random) -> Check:
    products, _ = threefold_pairs(seed)
    z, t = products.left, products.right
    combo = lambda v: 3 * v[(2, 1)] - v[(1, 1, 1)]
    ok = (z[(3,)] == t[(3,)] and z[(2, 1)] != t[(2, 1)] and z[(1, 1, 1)] != t[(1, 1, 1)]
          and combo(z) == combo(t)
          and z[(1, 1, 1)] == 6 * seed.c1_sq and z[(2, 1)] == 2 * (seed.c1_sq + seed.c2))
    return Check("threefold_product_pair", ok, {
        "Z": _vec(z), "T": _vec(t), "3c1c2-c1^3": [_s(combo(z)), _s(combo(t))],
    })


def check_3fold_theorem(seed: SurfaceData, rng: random.Random) -> Check:
    report = verify_3fold_theorem(seed)
    return Check("threefold_annihilator", report.passed, report.to_json())


def check_ruled_pair(seed: SurfaceData, rng: random.Random) -> Check:
    y = fake_partner(seed)
    m, n = ruled_tangent(y), ruled_canonical(seed)
    a, e = seed.c1_sq, seed.c2
    combo = lambda v: 3 * v[(2, 1)] - v[(1, 1, 1)]
    ok = (m[(3,)] == n[(3,)] == 2 * e
          and m[(2, 1)] == 2 * (-a + 5 * e)
          and m[(1, 1, 1)] == 8 * (-a + 3 * e)
          and n[(1, 1, 1)] == 8 * a
          and p1_sphere_bundle(canonical_plus_trivial(seed)) == a
          and combo(m) != combo(n))
    return Check("ruled_pair_separation", ok, {
        "M": _vec(m), "N": _vec(n), "3c1c2-c1^3": [_s(combo(n)), _s(combo(m))],
    })


def check_higher(seed: SurfaceData, rng: random.Random) -> Check:
    reports = [verify_higher(n) for n in range(3, 7)]
    return Check("higher_dimensions_positivity", all(r.passed for r in reports),
                 {str(r.inputs["n"]): r.details for r in reports})


def check_4fold_theorem(seed: SurfaceData, rng: random.Random) -> Check:
    report = verify_4fold_theorem(seed)
    return Check("fourfold_annihilator", report.passed, report.to_json())


def check_todd_table(seed: SurfaceData, rng: random.Random) -> Check:
    td2, td3, td4 = todd(2), todd(3), todd(4)
    ok2 = td2.poly == (chern_class(1, 2) ** 2 + chern_class(2, 2)) * Fraction(1, 12)
    ok3 = td3.poly == chern_class(1, 3) * chern_class(2, 3) * Fraction(1, 24)
    ok4 = td4.coefficient((1, 1, 1, 1)) == td4.coefficient((4,)) == Fraction(-1, 720)
    on_cp = {n: _s(todd(n).evaluate(cp(n))) for n in range(1, 7)}
    ok_cp = all(v == "1" for v in on_cp.values())
    return Check("todd_table", ok2 and ok3 and ok4 and ok_cp, {
        "todd": {str(n): str(todd(n)) for n in range(1, 5)}, "todd(CP^n)": on_cp,
    })


def check_chi_y(seed: SurfaceData, rng: random.Random) -> Check:
    failures = []
    for n in range(1, 7):
        g = chi_y(n)
        if g.specialize(0).poly != todd(n).poly:
            failures.append(f"y=0, n={n}")
        if g.specialize(-1).poly != chern_class(n, n):
            failures.append(f"y=-1, n={n}")
        for p in range(n + 1):
            if chi_p_functional(n, p).poly != chi_p_functional(n, n - p).poly * (-1) ** n:
                failures.append(f"duality n={n}, p={p}")
    if chi_y(2).specialize(1).poly != pontryagin_class(1, 2) * Fraction(1, 3):
        failures.append("y=1, n=2")
    return Check("chi_y_specializations", not failures, {"failures": failures})


def check_prop_ts(seed: SurfaceData, rng: random.Random) -> Check:
    odd = {n: genera.verify_prop_tS(n) for n in (3, 5, 7)}
    control = genera.verify_prop_tS(2)
    return Check("odd_dimension_chi_p_avoid_c1^n", all(odd.values()) and not control,
                 {"odd": {str(k): v for k, v in odd.items()}, "n=2 control (expected false)": control})


def check_salamon(seed: SurfaceData, rng: random.Random) -> Check:
    failures = []
    for n in range(2, 7):
        for k in range(2, n + 1):
            if not genera.support_check(genera.salamon_combination(n, k), genera.salamon_threshold(n, k)):
                failures.append([n, k])
    return Check("salamon_support", not failures, {"failures": failures})


def check_todd_remark(seed: SurfaceData, rng: random.Random) -> Check:
    results = {str(n): genera.todd_remark_check(n) for n in range(2, 9)}
    ok = all(r["top_coefficients_agree"] and r["divisible_by_c1"] is not False for r in results.values())
    return Check("todd_top_coefficients_and_c1_divisibility", ok, results)


def check_lw(seed: SurfaceData, rng: random.Random) -> Check:
    details = {}
    ok = True
    for n in range(2, 7):
        first = genera.lw_support_violations(n, 1)
        second = genera.lw_support_violations(n, 2)
        c1_coeff = genera.lw_functional(n, 2).coefficient((n - 1, 1))
        ok = ok and not first and not second and c1_coeff != 0
        details[str(n)] = {"first_moment": str(genera.lw_functional(n, 1)),
                           "second_moment": str(genera.lw_functional(n, 2)),
                           "violations": [monomial_name(p) for p in first + second]}
    return Check("libgober_wood_support", ok, details)


def check_rr_3fold(seed: SurfaceData, rng: random.Random) -> Check:
    v, d = cp(3), HodgeDiamond.projective_space(3)
    return Check("riemann_roch_cp3", genera.rr_3fold_check(v, d),
                 {"todd3(CP^3)": _s(todd(3).evaluate(v)), "chi_0(hodge)": chi_p_from_hodge(d, 0)})


def check_yau(seed: SurfaceData, rng: random.Random) -> Check:
    inside3 = yau_validate(ChernVector(3, (0, -24, -24)))
    cp3 = yau_validate(cp(3))
    inside4 = yau_validate(ChernVector.from_mapping(4, {(2, 1, 1): 40, (1, 1, 1, 1): 30}))
    boundary4 = yau_validate(ChernVector.zero(4))
    ok = inside3["all"] and not cp3["c1^3 < 0"] and inside4["all"] and not boundary4["c1^4 > 0"]
    return Check("yau_windows", ok, {"sample 3-fold": inside3, "CP^3": cp3,
                                     "sample 4-fold": inside4, "zero 4-fold": boundary4})


CHECKS: List[Callable[[SurfaceData, random.Random], Check]] = [
    check_wu,
    check_product_oracle,
    check_projbundle_oracle,
    check_3fold_pair,
    check_3fold_theorem,
    check_ruled_pair,
    check_higher,
    check_4fold_theorem,
    check_todd_table,
    check_chi_y,
    check_prop_ts,
    check_salamon,
    check_todd_remark,
    check_lw,
    check_rr_3fold,
    check_yau,
]


def run_all(seed: SurfaceData, rng_seed: int = 0) -> List[Check]:
    if signature(seed) == 0:
        raise ValueError("seed surface must have nonzero signature")
    rng = random.Random(rng_seed)
    return [check(seed, rng) for check in CHECKS]
