"""Command-line interface: ``chernnumbers {compute,genus,invariants,catalog,verify-paper}``.

Exit codes: 0 success, 2 unknown name, 3 malformed input, 4 precondition
violated (e.g. a signature-zero seed).
"""
import argparse
import json
import os
import sys

from . import genera
from .catalog import (Catalog, CatalogError, NameResolutionError, PreconditionError, builtin_vector,
                      desk_catalog)
from .chern_algebra import ChernVector, format_rational
from .invariance import (annihilator, difference, euler_functional, pontryagin_functionals,
                         span_contains)
from .manifolds import SurfaceData, cp, fake_partner, product, signature, stabilize, times_cp1
from .projbundle import ProjBundleData, projectivize, ruled_canonical, ruled_tangent
from .verification import run_all


def parse_surface(text: str) -> SurfaceData:
    try:
        c1_sq, c2 = (int(t) for t in text.split(","))
    except ValueError as exc:
        raise CatalogError(f"expected C1SQ,C2 (two integers), got {text!r}") from exc
    try:
        return SurfaceData(c1_sq, c2)
    except ValueError as exc:
        raise CatalogError(str(exc)) from exc


def _load_catalog(args):
    return Catalog.load(args.catalog) if args.catalog else None


def _resolve_vector(name, catalog) -> ChernVector:
    if catalog is not None and name in catalog.entries:
        return catalog.vector(name)
    return builtin_vector(name)


def _resolve_surface(args, name, catalog) -> SurfaceData:
    if args.surface:
        return parse_surface(args.surface)
    if name is None:
        raise CatalogError("a surface is required: pass --surface C1SQ,C2 or a catalog name")
    if catalog is not None and catalog.entries.get(name, (None,))[0] == "surface":
        return catalog.get(name)
    if catalog is not None and name in catalog.entries:
        try:
            return SurfaceData.from_vector(catalog.vector(name))
        except ValueError as exc:
            raise CatalogError(f"{name!r} is not surface data: {exc}") from exc
    raise NameResolutionError(f"unknown surface {name!r}")


def _operand_vector(args, name, catalog) -> ChernVector:
    if name is None or args.surface:
        return _resolve_surface(args, name, catalog).vector
    return _resolve_vector(name, catalog)


def _emit_vector(v: ChernVector, fmt: str):
    if fmt == "json":
        print(json.dumps(v.to_json()))
    else:
        print(v.table())


def cmd_compute(args) -> int:
    catalog = _load_catalog(args)
    op, operands = args.construction, args.operands
    first = operands[0] if operands else None
    if op == "cp":
        if not operands or not operands[0].isdigit() or int(operands[0]) < 1:
            raise CatalogError("usage: compute cp N with N >= 1")
        result = cp(int(operands[0]))
    elif op == "product":
        if len(operands) != 2:
            raise CatalogError("usage: compute product A B")
        result = product(_resolve_vector(operands[0], catalog), _resolve_vector(operands[1], catalog))
    elif op == "times-cp1":
        result = times_cp1(_operand_vector(args, first, catalog))
    elif op == "stabilize":
        count = operands[-1] if operands else None
        if count is None or not count.isdigit():
            raise CatalogError("usage: compute stabilize A K (or --surface C1SQ,C2 K)")
        base = None if args.surface else (operands[0] if len(operands) == 2 else None)
        result = stabilize(_operand_vector(args, base, catalog), int(count))
    elif op == "projectivize":
        if first is None:
            raise CatalogError("usage: compute projectivize FILE|NAME")
        if catalog is not None and first in catalog.entries:
            data = catalog.get(first)
            if not isinstance(data, ProjBundleData):
                raise CatalogError(f"{first!r} is not a proj_bundle entry")
        elif os.path.exists(first):
            try:
                with open(first) as fh:
                    data = ProjBundleData.from_json(json.load(fh))
            except (ValueError, KeyError, TypeError) as exc:
                raise CatalogError(f"{first}: malformed bundle data ({exc})") from exc
        else:
            raise NameResolutionError(f"no bundle file or catalog entry {first!r}")
        result = projectivize(data)
    elif op in ("ruled-tangent", "ruled-canonical", "fake-partner"):
        surface = _resolve_surface(args, first, catalog)
        if op == "fake-partner":
            partner = fake_partner(surface)
            if args.format == "json":
                print(json.dumps(partner.to_json()))
            else:
                print(f"c1^2  {partner.c1_sq}\nc2    {partner.c2}")
            return 0
        result = ruled_tangent(surface) if op == "ruled-tangent" else ruled_canonical(surface)
    else:  # argparse restricts the choices
        raise CatalogError(f"unknown construction {op!r}")
    _emit_vector(result, args.format)
    return 0


def _genus_functional(args):
    kind, nums = args.genus, args.numbers
    need = {"todd": 1, "chi-y": 1, "lw": 1, "chi-p": 2, "salamon": 2}[kind]
    if len(nums) != need:
        raise CatalogError(f"genus {kind} takes {need} integer argument(s)")
    try:
        if kind == "todd":
            return genera.todd(nums[0]), None
        if kind == "chi-y":
            return genera.chi_y(nums[0]), None
        if kind == "lw":
            return genera.lw_functional(nums[0], args.moment), None
        if kind == "chi-p":
            return genera.chi_p_functional(*nums), None
        n, k = nums
        f = genera.salamon_combination(n, k)
        return f, genera.support_check(f, genera.salamon_threshold(n, k))
    except ValueError as exc:
        raise PreconditionError(str(exc)) from exc


def cmd_genus(args) -> int:
    catalog = _load_catalog(args)
    functional, support_ok = _genus_functional(args)
    if args.eval:
        v = _resolve_vector(args.eval, catalog)
        try:
            value = functional.evaluate(v)
        except ValueError as exc:
            raise PreconditionError(str(exc)) from exc
        if args.format == "json":
            print(json.dumps({"functional": str(functional), "vector": args.eval, "value": str(value)}))
        else:
            print(value)
        return 0
    if args.format == "json":
        out = {"n": functional.n, "polynomial": functional.to_records(), "text": str(functional)}
        if support_ok is not None:
            out["support_ok"] = support_ok
        print(json.dumps(out))
    else:
        print(functional)
        if support_ok is not None:
            print("support OK" if support_ok else "support VIOLATED")
    return 0


def cmd_invariants(args) -> int:
    if args.catalog:
        catalog = Catalog.load(args.catalog)
    else:
        catalog = desk_catalog(_checked_seed(args.seed))
    if args.strict and catalog.non_integral():
        raise CatalogError(f"non-integral Chern vectors: {', '.join(catalog.non_integral())}")
    n = args.dim
    pairs = catalog.pairs(n)
    diffs = [difference(p) for p in pairs]
    basis = annihilator(diffs, n)
    candidates = {f"c{n}": euler_functional(n)}
    if n % 2 == 0:
        candidates.update(pontryagin_functionals(n))
    verdicts = {name: span_contains(basis, f) for name, f in candidates.items()}
    if args.format == "json":
        print(json.dumps({
            "dim": n,
            "pairs": [p.label for p in pairs],
            "difference_vectors": [[format_rational(x) for x in d] for d in diffs],
            "annihilator_basis": [[format_rational(x) for x in f.coefficients] for f in basis],
            "contains": verdicts,
        }))
        return 0
    for pair, d in zip(pairs, diffs):
        print(f"difference {pair.label}: ({', '.join(format_rational(x) for x in d)})")
    print(f"annihilator (dimension {len(basis)}):")
    for f in basis:
        print(f"  ({', '.join(format_rational(x) for x in f.coefficients)})   {f}")
    for name, ok in verdicts.items():
        print(f"{name} invariant: {'yes' if ok else 'no'}")
    return 0


def cmd_catalog(args) -> int:
    print(json.dumps(desk_catalog(_checked_seed(args.seed)).to_json(), indent=2))
    return 0


def _checked_seed(text) -> SurfaceData:
    seed = parse_surface(text)
    if signature(seed) == 0:
        raise PreconditionError(f"seed {text} has signature 0; the theorems need a nonzero signature")
    return seed


def cmd_verify_paper(args) -> int:
    seed = _checked_seed(args.seed)
    checks = run_all(seed, args.rng_seed)
    all_ok = all(c.passed for c in checks)
    if args.format == "json":
        print(json.dumps({
            "seed": seed.to_json(),
            "rng_seed": args.rng_seed,
            "checks": [c.to_json() for c in checks],
            "pass": all_ok,
        }, indent=2))
    else:
        width = max(len(c.name) for c in checks)
        for c in checks:
            print(f"{c.name.ljust(width)}  {c.status}")
        print(f"{'overall'.ljust(width)}  {'PASS' if all_ok else 'FAIL'}")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chernnumbers", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--catalog", metavar="PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="build Chern data")
    p.add_argument("construction", choices=("cp", "product", "times-cp1", "stabilize", "projectivize",
                                            "ruled-tangent", "ruled-canonical", "fake-partner"))
    p.add_argument("operands", nargs="*")
    p.add_argument("--surface", metavar="C1SQ,C2")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("genus", parents=[common], help="genus functionals")
    p.add_argument("genus", choices=("todd", "chi-y", "chi-p", "salamon", "lw"))
    p.add_argument("numbers", nargs="+", type=int)
    p.add_argument("--eval", metavar="VECTOR", help="catalog name, cpN or point")
    p.add_argument("--moment", type=int, default=1, help="power of p in the lw sum")
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("invariants", parents=[common], help="annihilator of pair differences")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", default="9,3", metavar="C1SQ,C2",
                   help="seed for the built-in pairs when no catalog is given")
    p.add_argument("--strict", action="store_true", help="reject non-integral Chern vectors")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("catalog", help="print the built-in desk catalog")
    p.add_argument("--seed", default="9,3", metavar="C1SQ,C2")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("verify-paper", help="run every check")
    p.add_argument("--seed", default="9,3", metavar="C1SQ,C2")
    p.add_argument("--rng-seed", type=int, default=0)
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra:
        # positionals may follow options, e.g. `compute stabilize --surface 9,3 2`
        if args.command == "compute":
            args.operands = list(args.operands) + extra
        else:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    try:
        return args.func(args)
    except (NameResolutionError, CatalogError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
