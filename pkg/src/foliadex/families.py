"""Parametric example families beyond the synthesis dispatcher.

Each builder returns an ExampleRecord for one row of a family table:
the weighted-hypersurface pencils in their four weight patterns, cone
rows over the plane, the index-gap bundles, and the two boundary
families whose leaves are not rationally connected.  Rows carry a
family-formula check comparing all three recomputed invariants against
the closed forms the family realizes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from .bundle import BundleVariety
from .errors import DomainError
from .foliation import (
    FibrationInduced,
    FoliationDescriptor,
    LeafStatus,
    PnCatalogCase2,
    cone_foliation,
    pn_foliation,
    pullback_over_bundle,
    wps_coordinate_foliation,
)
from .invariants import compute_invariants
from .lattice import render_rational
from .rankone import (
    GeneralizedCone,
    PolarizedBase,
    RankOneClass,
    SingularityClass,
    WeightedProjectiveSpace,
    projective_space,
    projective_space_base,
)
from .report import CheckOutcome, InvariantReport
from .synthesis import (
    ExampleRecord,
    boundary_sharpness_check,
    cone_resolution_check,
    mixed_gap_check,
    oracle_agreement_check,
    passfail,
    positivity_check,
    witness_check,
)


def _render_opt(value: Optional[Fraction]) -> str:
    return "absent" if value is None else render_rational(value)


def family_formula_check(
    inv: InvariantReport,
    expected: tuple[Optional[Fraction], Optional[Fraction], Optional[Fraction]],
) -> CheckOutcome:
    actual = (inv.gen_index, inv.fano_index, inv.seshadri_antican)

    def render(triple: tuple[Optional[Fraction], ...]) -> str:
        return "(" + ", ".join(_render_opt(v) for v in triple) + ")"

    detail = (
        f"(iota-hat, iota, eps) = {render(actual)}, closed form {render(expected)}"
    )
    return passfail("family-formula", actual == expected, detail)


def _family_record(
    record_id: str,
    branch: str,
    variety,
    fol: FoliationDescriptor,
    expected: tuple[Optional[Fraction], Optional[Fraction], Optional[Fraction]],
    extra: tuple[CheckOutcome, ...] = (),
) -> ExampleRecord:
    inv = compute_invariants(fol)
    checks = (
        family_formula_check(inv, expected),
        positivity_check(inv, "ample"),
    ) + extra
    return ExampleRecord(
        id=record_id,
        request=None,
        branch=branch,
        variety=variety,
        foliation=fol,
        invariants=inv,
        checks=checks,
    )


def wps1_record(n: int, m: int) -> ExampleRecord:
    """Weights (1, 1, 1, m, ..., m), pencil on the first coordinate."""
    if n < 3 or m < 1:
        raise DomainError(f"need n >= 3 and m >= 1, got n={n}, m={m}")
    variety = WeightedProjectiveSpace((1, 1, 1) + (m,) * (n - 2))
    fol = wps_coordinate_foliation(variety, 1)
    value = Fraction(m * (n - 2) + 1, m)
    return _family_record(
        f"table:wps1:n={n}:m={m}", "wps1", variety, fol, (value, value, value)
    )


def wps2_record(n: int, mprime: int, m: int) -> ExampleRecord:
    """Weights (1, m', ..., m', m), pencil on the first coordinate."""
    if n < 3 or mprime < 1 or m < mprime:
        raise DomainError(
            f"need n >= 3 and 1 <= mprime <= m, got n={n}, mprime={mprime}, m={m}"
        )
    if math.gcd(mprime, m) != 1:
        raise DomainError(f"mprime and m must be coprime, got {mprime}, {m}")
    variety = WeightedProjectiveSpace((1,) + (mprime,) * (n - 1) + (m,))
    fol = wps_coordinate_foliation(variety, 1)
    index = Fraction((n - 2) * mprime + m, mprime * m)
    eps = 1 + Fraction((n - 2) * mprime, m)
    return _family_record(
        f"table:wps2:n={n}:mprime={mprime}:m={m}",
        "wps2",
        variety,
        fol,
        (index, index, eps),
    )


def _surface_weights(a1: int, a2: int) -> WeightedProjectiveSpace:
    if not (1 <= a1 <= a2):
        raise DomainError(f"need 1 <= a1 <= a2, got a1={a1}, a2={a2}")
    if math.gcd(a1, a2) != 1:
        raise DomainError(f"a1 and a2 must be coprime, got {a1}, {a2}")
    return WeightedProjectiveSpace((1, a1, a2))


def wps3_record(a1: int, a2: int) -> ExampleRecord:
    """Weights (1, a1, a2), pencil on the first coordinate."""
    variety = _surface_weights(a1, a2)
    fol = wps_coordinate_foliation(variety, 1)
    index = Fraction(1, a1)
    return _family_record(
        f"table:wps3:a1={a1}:a2={a2}", "wps3", variety, fol,
        (index, index, Fraction(1)),
    )


def wps4_record(a1: int, a2: int) -> ExampleRecord:
    """Weights (1, a1, a2), pencil on the second coordinate."""
    variety = _surface_weights(a1, a2)
    fol = wps_coordinate_foliation(variety, 2)
    index = Fraction(1, a2)
    return _family_record(
        f"table:wps4:a1={a1}:a2={a2}", "wps4", variety, fol,
        (index, index, Fraction(a1, a2)),
    )


def cone_table_record(base_dim: int, rprime: int, m: int, d: int) -> ExampleRecord:
    """Cone over the rank-one pencil foliation on P^k with K = d*H."""
    if base_dim < 2 or rprime < 1 or m < 1:
        raise DomainError(
            f"need base_dim >= 2, rprime >= 1, m >= 1, got "
            f"({base_dim}, {rprime}, {m})"
        )
    if not (0 <= d < m * rprime):
        raise DomainError(
            f"need 0 <= d < m*rprime = {m * rprime} for an ample record, got d={d}"
        )
    cone = GeneralizedCone(
        base=projective_space_base(base_dim), m=m, vertex_rank=rprime
    )
    fol = cone_foliation(cone, pn_foliation(base_dim, 1, d))
    value = rprime - Fraction(d, m)
    extra = (cone_resolution_check(cone, fol),)
    return _family_record(
        f"table:cone:k={base_dim}:rprime={rprime}:m={m}:d={d}",
        "cone",
        cone,
        fol,
        (value, value, value),
        extra=extra,
    )


def mixed_record(r: int) -> ExampleRecord:
    """Integer gap between the two indices: iota = 1 < iota-hat = r.

    The pullback of the rank-r catalog foliation with K = -r*H along a
    projectivized sum of line bundles tuned so the anticanonical class
    is ample and primitive while the generalized index stays at r.
    """
    if r < 2:
        raise DomainError(f"need r >= 2 for an index gap, got {r}")
    variety = BundleVariety(base_dim=r + 2, m=1, b=(r - 2,) * r)
    fol = pullback_over_bundle(variety, pn_foliation(r + 2, r, -r))
    inv = compute_invariants(fol)
    checks = (
        family_formula_check(inv, (Fraction(r), Fraction(1), None)),
        positivity_check(inv, "ample"),
        witness_check(variety, fol),
        oracle_agreement_check(variety, fol, inv),
        mixed_gap_check(inv, r),
    )
    return ExampleRecord(
        id=f"table:mixed:r={r}",
        request=None,
        branch="mixed",
        variety=variety,
        foliation=fol,
        invariants=inv,
        checks=checks,
    )


def rc_genus_record(r: int, m: int) -> ExampleRecord:
    """Cone over a plane pencil of quartics whose general member has genus 3.

    The base foliation is the pencil spanned by a smooth quartic and four
    times a line, so its leaf closures are not rationally connected and
    the record sits strictly below the eps <= r^a - 1 boundary.
    """
    if r < 2 or m < 1:
        raise DomainError(f"need r >= 2 and m >= 1, got r={r}, m={m}")
    if not 2 < m * (r - 1):
        raise DomainError(
            f"need 2 < m*(r-1) for an ample record, got m={m}, r={r}"
        )
    base_fol = FoliationDescriptor(
        ambient=projective_space(2),
        rank=1,
        algebraic_rank=1,
        canonical=RankOneClass(Fraction(2)),
        recipe=PnCatalogCase2(d_f=4, d_g=1),
        leaf_rc=LeafStatus.FALSE,
        provenance=(
            "asserted-existence: pencil spanned by a smooth quartic and four "
            "times a line; the general member is a smooth plane quartic of "
            "genus 3, hence not rationally connected"
        ),
    )
    cone = GeneralizedCone(base=projective_space_base(2), m=m, vertex_rank=r - 1)
    fol = cone_foliation(cone, base_fol)
    inv = compute_invariants(fol)
    value = (r - 1) - Fraction(2, m)
    checks = (
        family_formula_check(inv, (value, value, value)),
        positivity_check(inv, "ample"),
        cone_resolution_check(cone, fol),
        boundary_sharpness_check(inv, fol, at_equality=False),
    )
    return ExampleRecord(
        id=f"table:rc-genus:r={r}:m={m}",
        request=None,
        branch="rc-genus",
        variety=cone,
        foliation=fol,
        invariants=inv,
        checks=checks,
    )


def rc_flat_record(n: int, r: int, m: int) -> ExampleRecord:
    """Cone over an elliptic fibration: eps equals r^a - 1 exactly.

    The base is a product of an elliptic curve with a factor of trivial
    canonical class, fibered over that factor; K of the base foliation
    vanishes, the leaves are elliptic curves, and the cone realizes the
    equality case of the Seshadri boundary with leaf_rc false.
    """
    if r < 2 or m < 1 or n <= r:
        raise DomainError(f"need n > r >= 2 and m >= 1, got n={n}, r={r}, m={m}")
    base = PolarizedBase(
        dim=n - r + 1,
        is_projective_space=False,
        singularity_class=SingularityClass.CALABI_YAU_LC,
        label=(
            "product of an elliptic curve with a smooth factor of trivial "
            "canonical class"
        ),
    )
    base_fol = FoliationDescriptor(
        ambient=base,
        rank=1,
        algebraic_rank=1,
        canonical=RankOneClass(Fraction(0)),
        recipe=FibrationInduced(),
        leaf_rc=LeafStatus.FALSE,
        provenance=(
            "asserted-existence: fibration of the product over its "
            "trivial-canonical factor with elliptic fibers"
        ),
    )
    cone = GeneralizedCone(base=base, m=m, vertex_rank=r - 1)
    fol = cone_foliation(cone, base_fol)
    inv = compute_invariants(fol)
    value = Fraction(r - 1)
    checks = (
        family_formula_check(inv, (value, value, value)),
        positivity_check(inv, "ample"),
        cone_resolution_check(cone, fol),
        boundary_sharpness_check(inv, fol, at_equality=True),
    )
    return ExampleRecord(
        id=f"table:rc-flat:n={n}:r={r}:m={m}",
        request=None,
        branch="rc-flat",
        variety=cone,
        foliation=fol,
        invariants=inv,
        checks=checks,
    )
