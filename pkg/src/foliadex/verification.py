"""Machine verification: per-record audits and parameter sweeps.

A record is audited on four layers: its stored invariants are recomputed
from the geometry, the general inequalities between the invariants are
checked, the closed-form generalized index is compared against the
enumeration oracle where a rank-two model exists, and the stored
construction checks are replayed for failures.  Sweeps aggregate these
audits over parameter grids into a SweepReport.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .bundle import BundleVariety, generalized_index
from .errors import UnsupportedRequest
from .foliation import (
    CoordinateProjection,
    FoliationDescriptor,
    LeafStatus,
    PnCatalogCase1,
    PnCatalogCase2,
)
from .invariants import ambient_is_smooth, compute_invariants
from .lattice import Class2, render_rational
from .oracle import kernel_backend, oracle_generalized_index
from .rankone import WeightedProjectiveSpace
from .report import CheckOutcome, CheckReport, CheckStatus, SweepReport
from .synthesis import (
    ExampleRecord,
    SynthesisRequest,
    SynthKind,
    passfail,
    skip,
    synthesize,
)

__all__ = [
    "check_record",
    "verify_record",
    "verify_catalog",
    "run_sweep",
    "OracleGrid",
    "SynthGrid",
    "StandardGrid",
    "EmptyGrid",
    "oracle_generalized_index",
    "kernel_backend",
]


def _is_linear_pullback_shape(fol: FoliationDescriptor) -> bool:
    """Shapes allowed at the Seshadri maximum eps = r^a.

    Linear-projection pullbacks, pencils of two hyperplanes, and the
    hyperplane pencils cut by a coordinate on an honest projective space
    all have linear algebraic leaves; nothing else qualifies.
    """
    recipe = fol.recipe
    if isinstance(recipe, PnCatalogCase1):
        return True
    if isinstance(recipe, PnCatalogCase2):
        return recipe.d_f == 1 and recipe.d_g == 1
    if isinstance(recipe, CoordinateProjection):
        ambient = fol.ambient
        return isinstance(ambient, WeightedProjectiveSpace) and ambient.is_smooth
    return False


def check_record(record: ExampleRecord) -> CheckReport:
    """The six inequality and classification checks, always in this order."""
    inv = record.invariants
    fol = record.foliation
    ra = fol.algebraic_rank
    outcomes = []

    if inv.gen_index is None:
        outcomes.append(
            skip("kobayashi-ochiai-generalized", "no generalized index on record")
        )
    else:
        outcomes.append(
            passfail(
                "kobayashi-ochiai-generalized",
                ra >= inv.gen_index,
                f"r^a = {ra} >= iota-hat = {render_rational(inv.gen_index)}",
            )
        )

    if inv.fano_index is None:
        outcomes.append(skip("kobayashi-ochiai-fano", "no Fano index on record"))
    else:
        outcomes.append(
            passfail(
                "kobayashi-ochiai-fano",
                ra >= inv.fano_index,
                f"r^a = {ra} >= iota = {render_rational(inv.fano_index)}",
            )
        )

    if inv.fano_index is None or inv.gen_index is None:
        outcomes.append(skip("fano-le-generalized", "one of the indices is absent"))
    else:
        outcomes.append(
            passfail(
                "fano-le-generalized",
                inv.fano_index <= inv.gen_index,
                f"iota = {render_rational(inv.fano_index)} <= iota-hat = "
                f"{render_rational(inv.gen_index)}",
            )
        )

    eps = inv.seshadri_antican
    if eps is None:
        outcomes.append(skip("seshadri-bound", "no Seshadri value on record"))
    elif not inv.positivity.nef:
        outcomes.append(skip("seshadri-bound", "anticanonical class not nef"))
    else:
        outcomes.append(
            passfail(
                "seshadri-bound",
                ra >= eps,
                f"r^a = {ra} >= eps = {render_rational(eps)}",
            )
        )

    if eps is None or not (inv.positivity.nef and inv.positivity.big):
        outcomes.append(
            skip("rc-consistency", "needs a Seshadri value and a nef and big class")
        )
    else:
        triggered = eps > ra - 1
        ok = (not triggered) or fol.leaf_rc is not LeafStatus.FALSE
        detail = (
            f"eps = {render_rational(eps)} vs r^a - 1 = {ra - 1}; "
            f"leaf_rc = {fol.leaf_rc.value}"
        )
        outcomes.append(passfail("rc-consistency", ok, detail))

    if eps is None:
        outcomes.append(
            skip("maximal-seshadri-classification", "no Seshadri value on record")
        )
    elif not ambient_is_smooth(fol.ambient):
        outcomes.append(
            skip("maximal-seshadri-classification", "ambient space is singular")
        )
    else:
        at_max = eps == ra
        ok = (not at_max) or _is_linear_pullback_shape(fol)
        detail = (
            f"eps = {render_rational(eps)}, r^a = {ra}, recipe = {fol.recipe.kind}"
        )
        outcomes.append(passfail("maximal-seshadri-classification", ok, detail))

    return CheckReport(record_id=record.id, outcomes=tuple(outcomes))


def _recomputation_outcome(record: ExampleRecord) -> CheckOutcome:
    recomputed = compute_invariants(record.foliation)
    ok = recomputed == record.invariants
    detail = "recomputed invariants equal the stored ones" if ok else (
        f"stored {record.invariants} != recomputed {recomputed}"
    )
    return passfail("stored-invariants-match-recomputation", ok, detail)


def _oracle_outcome(record: ExampleRecord) -> CheckOutcome:
    name = "closed-form-vs-oracle"
    variety = record.variety
    if not isinstance(variety, BundleVariety):
        return skip(name, "enumeration oracle needs a rank-two lattice model")
    if record.invariants.gen_index is None:
        return skip(name, "anticanonical class not big")
    antican = -record.foliation.canonical
    value, _ = generalized_index(variety, antican)
    d_max = 3
    c_max = 3 * variety.b1 + 6
    enumerated = oracle_generalized_index(variety, antican, d_max, c_max)
    ok = value == enumerated == record.invariants.gen_index
    detail = (
        f"closed form {render_rational(value)}, enumeration "
        f"(d <= {d_max}, c <= {c_max}) {render_rational(enumerated)}, stored "
        f"{render_rational(record.invariants.gen_index)}"
    )
    return passfail(name, ok, detail)


def _stored_checks_outcome(record: ExampleRecord) -> CheckOutcome:
    failed = [c.name for c in record.checks if c.status is CheckStatus.FAIL]
    if failed:
        return passfail(
            "stored-construction-checks", False, "failed: " + ", ".join(failed)
        )
    return passfail(
        "stored-construction-checks",
        True,
        f"{len(record.checks)} stored checks, none failed",
    )


def verify_record(record: ExampleRecord) -> CheckReport:
    outcomes = [_recomputation_outcome(record)]
    outcomes.extend(check_record(record).outcomes)
    outcomes.append(_oracle_outcome(record))
    outcomes.append(_stored_checks_outcome(record))
    return CheckReport(record_id=record.id, outcomes=tuple(outcomes))


def verify_catalog(records) -> SweepReport:
    report = SweepReport()
    for record in records:
        for outcome in verify_record(record).outcomes:
            report.add(record.id, outcome)
    return report


# ---------------------------------------------------------------------------
# Sweeps.


@dataclass(frozen=True)
class OracleGrid:
    """Every integral big-not-ample class on every small bundle."""

    m_max: int = 4
    b1_max: int = 3
    rprime_max: int = 3
    k_max: int = 3
    coeff_max: int = 6
    d_max: int = 6
    c_max: int = 40


@dataclass(frozen=True)
class SynthGrid:
    """Every reduced target c = p/q with q <= q_max, 0 < c <= r, r < n <= n_max."""

    kind: SynthKind
    n_max: int
    q_max: int


@dataclass(frozen=True)
class StandardGrid:
    """The packaged standard catalog."""


@dataclass(frozen=True)
class EmptyGrid:
    """No checks at all; the zero of SweepReport.merge."""


def _oracle_sweep(grid: OracleGrid) -> SweepReport:
    report = SweepReport()
    for rprime in range(1, grid.rprime_max + 1):
        for b_ascending in itertools.combinations_with_replacement(
            range(grid.b1_max + 1), rprime
        ):
            b = tuple(reversed(b_ascending))
            for m in range(1, grid.m_max + 1):
                for k in range(1, grid.k_max + 1):
                    variety = BundleVariety(base_dim=k, m=m, b=b)
                    _sweep_one_bundle(grid, report, variety)
    return report


def _sweep_one_bundle(
    grid: OracleGrid, report: SweepReport, variety: BundleVariety
) -> None:
    m, b1 = variety.m, variety.b1
    denom = m + b1 + 1
    for beta in range(1, grid.coeff_max + 1):
        for gamma in range(-grid.coeff_max, grid.coeff_max + 1):
            big = gamma > -m * beta
            ample = gamma > b1 * beta
            if not big or ample:
                continue
            cls = Class2(beta, gamma)
            value, _ = generalized_index(variety, cls)
            formula = Fraction(m * beta + gamma, denom)
            enumerated = oracle_generalized_index(variety, cls, grid.d_max, grid.c_max)
            ok = value == formula == enumerated
            record_id = (
                f"oracle:k={variety.base_dim}:m={m}:"
                f"b={','.join(str(e) for e in variety.b)}:beta={beta}:gamma={gamma}"
            )
            detail = (
                f"closed form {render_rational(value)}, direct formula "
                f"{render_rational(formula)}, enumeration {render_rational(enumerated)}"
            )
            report.add(record_id, passfail("closed-form-vs-oracle", ok, detail))


def _synth_targets(r: int, q_max: int) -> list[Fraction]:
    seen = set()
    for q in range(1, q_max + 1):
        for p in range(1, r * q + 1):
            c = Fraction(p, q)
            if c.denominator == q:
                seen.add(c)
    return sorted(seen)


def _synth_sweep(grid: SynthGrid) -> SweepReport:
    report = SweepReport()
    for n in range(2, grid.n_max + 1):
        for r in range(1, n):
            for c in _synth_targets(r, grid.q_max):
                request = SynthesisRequest(grid.kind, n, r, c)
                try:
                    record = synthesize(request)
                except UnsupportedRequest as exc:
                    record_id = (
                        f"{grid.kind.value}:unsupported:n={n}:r={r}"
                        f":c={render_rational(c)}"
                    )
                    report.add(record_id, skip("synthesis-supported", str(exc)))
                    continue
                for outcome in verify_record(record).outcomes:
                    report.add(record.id, outcome)
    return report


def run_sweep(grid) -> SweepReport:
    if isinstance(grid, OracleGrid):
        return _oracle_sweep(grid)
    if isinstance(grid, SynthGrid):
        return _synth_sweep(grid)
    if isinstance(grid, StandardGrid):
        from .catalog import standard_catalog

        return verify_catalog(standard_catalog().records)
    if isinstance(grid, EmptyGrid):
        return SweepReport()
    raise TypeError(f"unknown grid {grid!r}")
