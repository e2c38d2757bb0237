"""Catalog container and its byte-deterministic JSON serialization.

Export writes records with a fixed key order and no timestamps, so the
same catalog always serializes to the same bytes.  Import reconstructs
the geometric objects through their validating constructors; stored
invariants and check outcomes are parsed verbatim rather than recomputed,
so a value edited by hand survives the round trip and is caught by the
verification layer, while a structurally impossible object fails to
reconstruct at all.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .bundle import BundleVariety, Positivity
from .errors import DomainError, ParseError, UnsupportedRequest
from .families import (
    cone_table_record,
    mixed_record,
    rc_flat_record,
    rc_genus_record,
    wps1_record,
    wps2_record,
    wps3_record,
    wps4_record,
)
from .foliation import (
    ConeInduced,
    CoordinateProjection,
    FibrationInduced,
    FoliationDescriptor,
    LeafStatus,
    PnCatalogCase1,
    PnCatalogCase2,
    PullbackOverBundle,
    TranscendentalRankOne,
)
from .lattice import Class2, parse_rational, render_rational
from .rankone import (
    GeneralizedCone,
    PolarizedBase,
    RankOneClass,
    SingularityClass,
    WeightedProjectiveSpace,
)
from .report import CheckOutcome, CheckStatus, InvariantReport
from .synthesis import (
    ExampleRecord,
    SynthesisRequest,
    SynthKind,
    synthesize,
)

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class Catalog:
    metadata: dict = field(default_factory=dict)
    records: tuple[ExampleRecord, ...] = ()

    def __post_init__(self) -> None:
        seen = set()
        for record in self.records:
            if record.id in seen:
                raise DomainError(f"duplicate record id {record.id!r}")
            seen.add(record.id)


# ---------------------------------------------------------------------------
# Serialization.


def _base_fields(base: PolarizedBase) -> dict:
    return {
        "dim": base.dim,
        "is_projective_space": base.is_projective_space,
        "singularity_class": base.singularity_class.value,
        "label": base.label,
    }


def _variety_to_json(variety) -> dict:
    if isinstance(variety, BundleVariety):
        return {
            "family": "bundle",
            "base_dim": variety.base_dim,
            "m": variety.m,
            "b": list(variety.b),
        }
    if isinstance(variety, WeightedProjectiveSpace):
        return {"family": "wps", "weights": list(variety.weights)}
    if isinstance(variety, GeneralizedCone):
        return {
            "family": "cone",
            "base": _base_fields(variety.base),
            "m": variety.m,
            "vertex_rank": variety.vertex_rank,
        }
    if isinstance(variety, PolarizedBase):
        return {"family": "polarized-base", **_base_fields(variety)}
    raise TypeError(f"cannot serialize ambient {variety!r}")


def _base_from_json(obj: dict) -> PolarizedBase:
    return PolarizedBase(
        dim=obj["dim"],
        is_projective_space=obj["is_projective_space"],
        singularity_class=SingularityClass(obj["singularity_class"]),
        label=obj["label"],
    )


def _variety_from_json(obj: dict):
    family = obj["family"]
    if family == "bundle":
        return BundleVariety(base_dim=obj["base_dim"], m=obj["m"], b=tuple(obj["b"]))
    if family == "wps":
        return WeightedProjectiveSpace(tuple(obj["weights"]))
    if family == "cone":
        return GeneralizedCone(
            base=_base_from_json(obj["base"]),
            m=obj["m"],
            vertex_rank=obj["vertex_rank"],
        )
    if family == "polarized-base":
        return _base_from_json(obj)
    raise DomainError(f"unknown variety family {family!r}")


def _fol_to_json(fol: FoliationDescriptor, include_ambient: bool) -> dict:
    obj: dict = {}
    if include_ambient:
        obj["ambient"] = _variety_to_json(fol.ambient)
    recipe = fol.recipe
    obj["recipe"] = recipe.kind
    if isinstance(recipe, (PullbackOverBundle, ConeInduced)):
        params: dict = {"base": _fol_to_json(recipe.base, include_ambient=True)}
    elif isinstance(recipe, CoordinateProjection):
        params = {"j": recipe.j}
    elif isinstance(recipe, PnCatalogCase1):
        params = {"d": recipe.d}
    elif isinstance(recipe, PnCatalogCase2):
        params = {"d_f": recipe.d_f, "d_g": recipe.d_g}
    elif isinstance(recipe, TranscendentalRankOne):
        params = {"p": recipe.p}
    else:
        params = {}
    obj["recipe_params"] = params
    obj["rank"] = fol.rank
    obj["algebraic_rank"] = fol.algebraic_rank
    if isinstance(fol.canonical, Class2):
        obj["canonical"] = {
            "beta": render_rational(fol.canonical.beta),
            "gamma": render_rational(fol.canonical.gamma),
        }
    else:
        obj["canonical"] = {"s": render_rational(fol.canonical.s)}
    obj["leaf_rc"] = fol.leaf_rc.value
    obj["provenance"] = fol.provenance
    return obj


def _fol_from_json(obj: dict, ambient=None) -> FoliationDescriptor:
    if ambient is None:
        ambient = _variety_from_json(obj["ambient"])
    kind = obj["recipe"]
    params = obj["recipe_params"]
    if kind == "fibration":
        recipe = FibrationInduced()
    elif kind == "pullback":
        recipe = PullbackOverBundle(base=_fol_from_json(params["base"]))
    elif kind == "cone":
        recipe = ConeInduced(base=_fol_from_json(params["base"]))
    elif kind == "coordinate":
        recipe = CoordinateProjection(j=params["j"])
    elif kind == "pn1":
        recipe = PnCatalogCase1(d=params["d"])
    elif kind == "pn2":
        recipe = PnCatalogCase2(d_f=params["d_f"], d_g=params["d_g"])
    elif kind == "transcendental":
        recipe = TranscendentalRankOne(p=params["p"])
    else:
        raise DomainError(f"unknown recipe {kind!r}")
    canonical_obj = obj["canonical"]
    if "s" in canonical_obj:
        canonical = RankOneClass(parse_rational(canonical_obj["s"]))
    else:
        canonical = Class2(
            parse_rational(canonical_obj["beta"]),
            parse_rational(canonical_obj["gamma"]),
        )
    return FoliationDescriptor(
        ambient=ambient,
        rank=obj["rank"],
        algebraic_rank=obj["algebraic_rank"],
        canonical=canonical,
        recipe=recipe,
        leaf_rc=LeafStatus(obj["leaf_rc"]),
        provenance=obj["provenance"],
    )


def _optional_rational_to_json(value: Optional[Fraction]) -> Optional[str]:
    return None if value is None else render_rational(value)


def _optional_rational_from_json(text: Optional[str]) -> Optional[Fraction]:
    return None if text is None else parse_rational(text)


def _invariants_to_json(inv: InvariantReport) -> dict:
    return {
        "gen_index": _optional_rational_to_json(inv.gen_index),
        "fano_index": _optional_rational_to_json(inv.fano_index),
        "seshadri_antican": _optional_rational_to_json(inv.seshadri_antican),
        "positivity": {
            "pseff": inv.positivity.pseff,
            "big": inv.positivity.big,
            "nef": inv.positivity.nef,
            "ample": inv.positivity.ample,
        },
    }


def _invariants_from_json(obj: dict) -> InvariantReport:
    flags = obj["positivity"]
    return InvariantReport(
        gen_index=_optional_rational_from_json(obj["gen_index"]),
        fano_index=_optional_rational_from_json(obj["fano_index"]),
        seshadri_antican=_optional_rational_from_json(obj["seshadri_antican"]),
        positivity=Positivity(
            pseff=flags["pseff"],
            big=flags["big"],
            nef=flags["nef"],
            ample=flags["ample"],
        ),
    )


def _request_to_json(request: Optional[SynthesisRequest]) -> Optional[dict]:
    if request is None:
        return None
    return {
        "kind": request.kind.value,
        "n": request.n,
        "r": request.r,
        "c": render_rational(request.c),
    }


def _request_from_json(obj: Optional[dict]) -> Optional[SynthesisRequest]:
    if obj is None:
        return None
    return SynthesisRequest(
        kind=SynthKind(obj["kind"]),
        n=obj["n"],
        r=obj["r"],
        c=parse_rational(obj["c"]),
    )


def _record_to_json(record: ExampleRecord) -> dict:
    return {
        "id": record.id,
        "request": _request_to_json(record.request),
        "branch": record.branch,
        "variety": _variety_to_json(record.variety),
        "foliation": _fol_to_json(record.foliation, include_ambient=False),
        "invariants": _invariants_to_json(record.invariants),
        "checks": [
            {"name": c.name, "status": c.status.value, "detail": c.detail}
            for c in record.checks
        ],
    }


def _record_from_json(obj: dict) -> ExampleRecord:
    variety = _variety_from_json(obj["variety"])
    return ExampleRecord(
        id=obj["id"],
        request=_request_from_json(obj["request"]),
        branch=obj["branch"],
        variety=variety,
        foliation=_fol_from_json(obj["foliation"], ambient=variety),
        invariants=_invariants_from_json(obj["invariants"]),
        checks=tuple(
            CheckOutcome(
                name=c["name"], status=CheckStatus(c["status"]), detail=c["detail"]
            )
            for c in obj["checks"]
        ),
    )


def record_to_json(record: ExampleRecord) -> dict:
    """JSON object for one record, exactly as it appears in an export."""
    return _record_to_json(record)


def export_catalog(catalog: Catalog) -> str:
    obj = {
        "schema_version": SCHEMA_VERSION,
        "metadata": catalog.metadata,
        "records": [_record_to_json(r) for r in catalog.records],
    }
    return json.dumps(obj, indent=2) + "\n"


def import_catalog(text: str) -> Catalog:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"catalog is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise ParseError("catalog must be a JSON object")
    version = obj.get("schema_version")
    if version != SCHEMA_VERSION:
        raise DomainError(
            f"unsupported schema version {version!r}, expected {SCHEMA_VERSION!r}"
        )
    records = []
    for i, record_obj in enumerate(obj.get("records", [])):
        try:
            records.append(_record_from_json(record_obj))
        except (KeyError, TypeError, IndexError) as exc:
            raise ParseError(f"malformed record at position {i}: {exc!r}") from exc
    return Catalog(metadata=obj.get("metadata", {}), records=tuple(records))


# ---------------------------------------------------------------------------
# The standard catalog.


def _reduced_targets(limit: Fraction, q_max: int, exclusive: bool = False) -> list[Fraction]:
    """All reduced p/q with q <= q_max and 0 < p/q <= limit (or < with exclusive)."""
    found = set()
    for q in range(1, q_max + 1):
        p = 1
        while True:
            c = Fraction(p, q)
            if c > limit or (exclusive and c == limit):
                break
            if c.denominator == q:
                found.add(c)
            p += 1
    return sorted(found)


def _try_synth(records: list[ExampleRecord], kind: SynthKind, n: int, r: int, c) -> None:
    try:
        records.append(synthesize(SynthesisRequest(kind, n, r, Fraction(c))))
    except UnsupportedRequest:
        pass


def standard_catalog() -> Catalog:
    records: list[ExampleRecord] = []

    # Generalized-index targets over representative (rank, dimension) pairs.
    for r, n in ((1, 3), (2, 3), (2, 4), (3, 4), (3, 5)):
        for c in _reduced_targets(Fraction(r), q_max=8):
            _try_synth(records, SynthKind.GENERALIZED_INDEX, n, r, c)
    _try_synth(records, SynthKind.GENERALIZED_INDEX, 2, 1, 1)
    for a in range(2, 11):
        _try_synth(records, SynthKind.GENERALIZED_INDEX, 2, 1, Fraction(a - 1, a))

    # Fano-index targets: the cone range, then the accumulation targets
    # n-2 + 1/a for rank n-1, then the surface family.
    for n in range(3, 7):
        for r in range(1, n):
            bound = Fraction(min(r, n - 2))
            for c in _reduced_targets(bound, q_max=8):
                if c.denominator > 1:
                    _try_synth(records, SynthKind.FANO_INDEX, n, r, c)
        for a in range(2, 9):
            _try_synth(
                records, SynthKind.FANO_INDEX, n, n - 1, n - 2 + Fraction(1, a)
            )
    for a in range(2, 9):
        _try_synth(records, SynthKind.FANO_INDEX, 2, 1, Fraction(1, a))

    # Seshadri targets: same cone range, the band (n-2, n-1) for rank n-1,
    # and the surface family.
    for n in range(3, 7):
        for r in range(1, n):
            bound = Fraction(min(r, n - 2))
            for c in _reduced_targets(bound, q_max=8):
                if c.denominator > 1:
                    _try_synth(records, SynthKind.SESHADRI, n, r, c)
        for c in _reduced_targets(Fraction(n - 1), q_max=8, exclusive=True):
            if n - 2 < c:
                _try_synth(records, SynthKind.SESHADRI, n, n - 1, c)
    for c in _reduced_targets(Fraction(1), q_max=8, exclusive=True):
        _try_synth(records, SynthKind.SESHADRI, 2, 1, c)

    # Weighted family sweeps.
    for n in range(3, 7):
        for m in range(1, 8):
            records.append(wps1_record(n, m))
    coprime_pairs = [
        (a, b)
        for a in range(1, 8)
        for b in range(a, 8)
        if math.gcd(a, b) == 1
    ]
    for n in range(3, 7):
        for mprime, m in coprime_pairs:
            records.append(wps2_record(n, mprime, m))
    for a1, a2 in coprime_pairs:
        records.append(wps3_record(a1, a2))
        records.append(wps4_record(a1, a2))

    # Cone rows over the plane.
    for rprime, m in itertools.product(range(1, 4), range(1, 4)):
        for d in range(0, m * rprime):
            records.append(cone_table_record(2, rprime, m, d))

    # Index-gap and boundary families.
    for r in (2, 3, 4):
        records.append(mixed_record(r))
    for r, m in ((2, 3), (3, 2), (4, 2)):
        records.append(rc_genus_record(r, m))
    for n, r, m in ((4, 2, 2), (5, 3, 2), (6, 4, 3)):
        records.append(rc_flat_record(n, r, m))

    unique: dict[str, ExampleRecord] = {}
    for record in records:
        unique.setdefault(record.id, record)
    final = tuple(unique.values())
    metadata = {
        "generator": "foliadex",
        "description": "standard example catalog",
        "record_count": len(final),
    }
    return Catalog(metadata=metadata, records=final)
