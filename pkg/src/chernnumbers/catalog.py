"""JSON catalog of named Chern data, and the built-in desk example."""
import json
from typing import Dict, List, Tuple

from .chern_algebra import ChernVector
from .invariance import ExamplePair, threefold_pairs
from .manifolds import HodgeDiamond, SurfaceData, cp, fake_partner, point
from .projbundle import ProjBundleData, tangent_bundle

KINDS = ("surface", "chern_vector", "proj_bundle", "hodge_diamond", "pair")

EXIT_NAME = 2
EXIT_INVALID = 3
EXIT_PRECONDITION = 4


class NameResolutionError(LookupError):
    exit_code = EXIT_NAME


class CatalogError(ValueError):
    exit_code = EXIT_INVALID


class PreconditionError(ValueError):
    exit_code = EXIT_PRECONDITION


def _parse_entry(raw: dict):
    kind = raw["kind"]
    if kind == "surface":
        return SurfaceData(int(raw["c1_sq"]), int(raw["c2"]))
    if kind == "chern_vector":
        return ChernVector.from_json(raw)
    if kind == "proj_bundle":
        return ProjBundleData.from_json(raw)
    if kind == "hodge_diamond":
        return HodgeDiamond(int(raw["n"]), tuple(tuple(row) for row in raw["h"]))
    raise CatalogError(f"unknown entry kind {kind!r}")


class Catalog:
    """Named entries; pairs refer to vector or surface entries by name."""

    def __init__(self):
        self.entries: Dict[str, Tuple[str, object]] = {}
        self.provenance: Dict[str, str] = {}
        self._pair_refs: Dict[str, Tuple[str, str]] = {}

    def add(self, name: str, kind: str, obj, provenance: str = ""):
        if name in self.entries:
            raise CatalogError(f"duplicate entry name {name!r}")
        if kind not in KINDS:
            raise CatalogError(f"unknown entry kind {kind!r}")
        self.entries[name] = (kind, obj)
        self.provenance[name] = provenance

    def add_pair(self, name: str, left: str, right: str, provenance: str = ""):
        pair = ExamplePair(name, self.vector(left), self.vector(right), provenance)
        self.add(name, "pair", pair, provenance)
        self._pair_refs[name] = (left, right)

    def kind(self, name: str) -> str:
        if name not in self.entries:
            raise NameResolutionError(f"no catalog entry named {name!r}")
        return self.entries[name][0]

    def get(self, name: str):
        self.kind(name)
        return self.entries[name][1]

    def vector(self, name: str) -> ChernVector:
        kind, obj = self.entries.get(name, (None, None))
        if kind == "surface":
            return obj.vector
        if kind == "chern_vector":
            return obj
        if kind is None:
            raise NameResolutionError(f"no catalog entry named {name!r}")
        raise CatalogError(f"entry {name!r} is a {kind}, not Chern data")

    def pairs(self, dim: int = None) -> List[ExamplePair]:
        return [obj for kind, obj in self.entries.values()
                if kind == "pair" and (dim is None or obj.dim == dim)]

    def non_integral(self) -> List[str]:
        """Names of Chern vectors with non-integer entries."""
        return [name for name, (kind, obj) in self.entries.items()
                if kind == "chern_vector" and not obj.is_integral()]

    @classmethod
    def from_json(cls, data: dict) -> "Catalog":
        cat = cls()
        try:
            raw_entries = data["entries"]
            pending = []
            for raw in raw_entries:
                name, kind = raw["name"], raw["kind"]
                if kind == "pair":
                    # forward references are resolved once every entry is known
                    if raw["left"] in cat.entries and raw["right"] in cat.entries:
                        cat.add_pair(name, raw["left"], raw["right"], raw.get("provenance", ""))
                    else:
                        pending.append(raw)
                    continue
                cat.add(name, kind, _parse_entry(raw), raw.get("provenance", ""))
            for raw in pending:
                cat.add_pair(raw["name"], raw["left"], raw["right"], raw.get("provenance", ""))
        except NameResolutionError as exc:
            raise CatalogError(f"pair refers to a missing entry: {exc}") from exc
        except CatalogError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise CatalogError(f"malformed catalog: {exc}") from exc
        return cat

    @classmethod
    def load(cls, path) -> "Catalog":
        try:
            with open(path) as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise CatalogError(f"{path}: not valid JSON ({exc})") from exc
        except OSError as exc:
            raise CatalogError(f"{path}: {exc.strerror}") from exc
        return cls.from_json(data)

    def to_json(self) -> dict:
        out = []
        for name, (kind, obj) in self.entries.items():
            rec = {"name": name, "kind": kind}
            if kind == "pair":
                left, right = self._pair_refs[name]
                rec.update(left=left, right=right)
            else:
                rec.update(obj.to_json())
            if self.provenance.get(name):
                rec["provenance"] = self.provenance[name]
            out.append(rec)
        return {"entries": out}


def builtin_vector(name: str) -> ChernVector:
    """``cpN`` and ``point`` are always available."""
    if name == "point":
        return point()
    if name.startswith("cp") and name[2:].isdigit() and int(name[2:]) >= 1:
        return cp(int(name[2:]))
    raise NameResolutionError(f"unknown manifold {name!r}")


def desk_catalog(seed: SurfaceData) -> Catalog:
    """The stand-in surfaces, their 3-fold pairs and the lifted 4-fold pairs."""
    stand_in = "parametric stand-in for a surface pair X_i, Y_i; realizability assumed"
    y = fake_partner(seed)
    cat = Catalog()
    cat.add("X", "surface", seed, stand_in)
    cat.add("Y", "surface", y, "orientation-reversed partner of X: c1^2 = 4e - c1^2(X)")
    products, ruled = threefold_pairs(seed)
    cat.add("Z", "chern_vector", products.left, "X x CP1")
    cat.add("T", "chern_vector", products.right, "Y x CP1")
    cat.add("N", "chern_vector", ruled.left, "P(O(K)+O) over X")
    cat.add("M", "chern_vector", ruled.right, "P(TY)")
    cat.add("TY", "proj_bundle", tangent_bundle(y), "tangent bundle of Y")
    cat.add("cp3", "chern_vector", cp(3))
    cat.add("cp3_hodge", "hodge_diamond", HodgeDiamond.projective_space(3))
    cat.add_pair("Z/T", "Z", "T", products.provenance)
    cat.add_pair("N/M", "N", "M", ruled.provenance)
    for pair_name, (left, right) in (("Z/T", ("Z", "T")), ("N/M", ("N", "M"))):
        lifted = cat.get(pair_name).lifted()
        cat.add(left + "1", "chern_vector", lifted.left, f"{left} x CP1")
        cat.add(right + "1", "chern_vector", lifted.right, f"{right} x CP1")
        cat.add_pair(pair_name + " x CP1", left + "1", right + "1", lifted.provenance)
    return cat
