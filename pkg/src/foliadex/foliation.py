"""Foliation descriptors and the constructions that produce them.

A descriptor records the data the invariant machinery consumes: the
ambient variety, the rank, the algebraic rank (dimension of the maximal
algebraic subvariety through a general point tangent to the foliation),
the canonical class in the ambient's class notation, a recipe saying how
the foliation arises, a rational-connectedness status for general leaf
closures of the algebraic part, and a provenance note distinguishing
constructions carried out here from families whose existence is asserted.

Constructors cover: the fibration foliation of a projective bundle,
pullbacks of a base foliation to a bundle, the two-case catalog of
foliations on P^n realizing every admissible canonical degree, purely
transcendental rank-one foliations on P^k, coordinate-projection
foliations on weighted projective space, and foliations induced on a
generalized cone by a foliation on its base.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import ClassVar, Union

from .bundle import BundleVariety, relative_anticanonical
from .errors import DomainError
from .lattice import Class2
from .rankone import (
    GeneralizedCone,
    PolarizedBase,
    RankOneClass,
    WeightedProjectiveSpace,
    projective_space,
)

Ambient = Union[BundleVariety, WeightedProjectiveSpace, GeneralizedCone, PolarizedBase]


def ambient_dim(ambient: Ambient) -> int:
    return ambient.dim


class LeafStatus(enum.Enum):
    """Is the closure of a general leaf of the algebraic part rationally connected?"""

    TRUE = "true"
    FALSE = "false"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class FibrationInduced:
    """Foliation by fibers of the bundle projection."""

    kind: ClassVar[str] = "fibration"


@dataclass(frozen=True)
class PullbackOverBundle:
    """Preimage of a base foliation under the bundle projection."""

    base: "FoliationDescriptor"

    kind: ClassVar[str] = "pullback"


@dataclass(frozen=True)
class ConeInduced:
    """Preimage of a base foliation under the cone's ruling projection."""

    base: "FoliationDescriptor"

    kind: ClassVar[str] = "cone"


@dataclass(frozen=True)
class CoordinateProjection:
    """Fibers of [x_0 ^ a_j : x_j] on a weighted projective space."""

    j: int

    kind: ClassVar[str] = "coordinate"


@dataclass(frozen=True)
class PnCatalogCase1:
    """Linear-projection pullback of a transcendental rank-one foliation."""

    d: int

    kind: ClassVar[str] = "pn1"


@dataclass(frozen=True)
class PnCatalogCase2:
    """Fibers of a pencil [f : g] of hypersurfaces of degrees (d_f, d_g)."""

    d_f: int
    d_g: int

    kind: ClassVar[str] = "pn2"


@dataclass(frozen=True)
class TranscendentalRankOne:
    """Rank-one foliation with no algebraic leaf through a general point."""

    p: int

    kind: ClassVar[str] = "transcendental"


Recipe = Union[
    FibrationInduced,
    PullbackOverBundle,
    ConeInduced,
    CoordinateProjection,
    PnCatalogCase1,
    PnCatalogCase2,
    TranscendentalRankOne,
]


@dataclass(frozen=True)
class FoliationDescriptor:
    ambient: Ambient
    rank: int
    algebraic_rank: int
    canonical: Class2 | RankOneClass
    recipe: Recipe
    leaf_rc: LeafStatus
    provenance: str

    def __post_init__(self) -> None:
        n = ambient_dim(self.ambient)
        if not (1 <= self.rank < n):
            raise DomainError(f"rank must satisfy 1 <= rank < dim = {n}, got {self.rank}")
        if not (0 <= self.algebraic_rank <= self.rank):
            raise DomainError(
                f"algebraic rank must lie in [0, rank], got {self.algebraic_rank}"
            )
        if isinstance(self.ambient, BundleVariety):
            if not isinstance(self.canonical, Class2):
                raise DomainError("bundle ambient needs a rank-2 canonical class")
        else:
            if not isinstance(self.canonical, RankOneClass):
                raise DomainError("rank-one ambient needs a rank-one canonical class")
            s = self.canonical.s
            if isinstance(self.ambient, WeightedProjectiveSpace) and s.denominator != 1:
                raise DomainError(f"canonical degree on weighted projective space must be integral, got {s}")
            if isinstance(self.ambient, GeneralizedCone) and (s * self.ambient.m).denominator != 1:
                raise DomainError(f"canonical class {s}H is not integral in the cone's class group")
        if isinstance(self.recipe, (FibrationInduced, CoordinateProjection)):
            if self.algebraic_rank != self.rank:
                raise DomainError("fibration-type recipes are algebraically integrable")

    @property
    def purely_transcendental(self) -> bool:
        return self.algebraic_rank == 0

    @property
    def algebraically_integrable(self) -> bool:
        return self.algebraic_rank == self.rank


def _inherited_leaf_status(base: FoliationDescriptor) -> LeafStatus:
    # When the base foliation is purely transcendental, the algebraic part
    # upstairs is the fiber/ruling foliation, whose leaf closures are
    # projective spaces.  Otherwise leaf closures fiber over the base leaf
    # closures with rationally connected fibers, so the status transfers.
    if base.purely_transcendental:
        return LeafStatus.TRUE
    return base.leaf_rc


def fibration_foliation(variety: BundleVariety) -> FoliationDescriptor:
    """The relative tangent foliation of the bundle projection.

    K is minus the relative anticanonical class; the leaves are the
    fibers, so rank and algebraic rank both equal the fiber dimension.
    """
    return FoliationDescriptor(
        ambient=variety,
        rank=variety.fiber_rank,
        algebraic_rank=variety.fiber_rank,
        canonical=-relative_anticanonical(variety),
        recipe=FibrationInduced(),
        leaf_rc=LeafStatus.TRUE,
        provenance="constructed: relative tangent sheaf of the bundle projection",
    )


def pullback_over_bundle(
    variety: BundleVariety, base_foliation: FoliationDescriptor
) -> FoliationDescriptor:
    """Preimage of a foliation on the base P^k under the projection.

    Canonical classes add along the exact sequence relating the pullback
    to the relative tangent sheaf: K = K_{X/Z} + (deg K_base) F.
    """
    base = base_foliation.ambient
    if not isinstance(base, WeightedProjectiveSpace) or not base.is_smooth:
        raise DomainError("base foliation must live on a projective space")
    if base.dim != variety.base_dim:
        raise DomainError(
            f"base dimension mismatch: bundle over P^{variety.base_dim}, foliation on P^{base.dim}"
        )
    if base_foliation.rank >= variety.base_dim:
        raise DomainError("base foliation rank must be smaller than the base dimension")
    deg = base_foliation.canonical.s
    canonical = -relative_anticanonical(variety) + Class2(0, deg)
    return FoliationDescriptor(
        ambient=variety,
        rank=variety.fiber_rank + base_foliation.rank,
        algebraic_rank=variety.fiber_rank + base_foliation.algebraic_rank,
        canonical=canonical,
        recipe=PullbackOverBundle(base=base_foliation),
        leaf_rc=_inherited_leaf_status(base_foliation),
        provenance="constructed: projection preimage of the base foliation",
    )


def pn_foliation(n: int, r: int, d: int) -> FoliationDescriptor:
    """A rank-(r or r+1) foliation on P^n with algebraic rank r and K = d*H.

    Requires 0 < r < n and d >= -r.  For r <= n-2 the foliation is the
    pullback, under the linear projection P^n -> P^{n-r}, of a purely
    transcendental rank-one foliation with canonical degree d + r >= 0;
    the algebraic part is the projection's fiber foliation.  For r = n-1
    it is the fibers of a pencil of hypersurfaces of degrees (d_f, d_g)
    with d_f + d_g = d + n + 1; the degrees are balanced deterministically
    and must both be positive, which d >= -r guarantees.
    """
    if not (0 < r < n):
        raise DomainError(f"need 0 < r < n, got r={r}, n={n}")
    if d < -r:
        raise DomainError(f"canonical degree must satisfy d >= -r, got d={d}, r={r}")
    ambient = projective_space(n)
    if r <= n - 2:
        return FoliationDescriptor(
            ambient=ambient,
            rank=r + 1,
            algebraic_rank=r,
            canonical=RankOneClass(Fraction(d)),
            recipe=PnCatalogCase1(d=d),
            leaf_rc=LeafStatus.TRUE,
            provenance=(
                "constructed: linear-projection pullback; asserted-existence for the "
                f"transcendental rank-one factor of canonical degree {d + r}"
            ),
        )
    total = d + n + 1
    d_f = (total + 1) // 2
    d_g = total - d_f
    leaf_rc = LeafStatus.TRUE if d_f == d_g == 1 else LeafStatus.UNKNOWN
    return FoliationDescriptor(
        ambient=ambient,
        rank=n - 1,
        algebraic_rank=n - 1,
        canonical=RankOneClass(Fraction(d)),
        recipe=PnCatalogCase2(d_f=d_f, d_g=d_g),
        leaf_rc=leaf_rc,
        provenance="constructed: pencil of hypersurfaces of degrees "
        f"({d_f}, {d_g})",
    )


def transcendental_rank1(k: int, p: int) -> FoliationDescriptor:
    """A rank-one foliation on P^k, K = p*H, with no algebraic leaves.

    Requires k >= 2 and p >= 1: degree p+1 >= 2 vector fields on P^k with
    purely transcendental leaves exist in every such degree.
    """
    if k < 2:
        raise DomainError(f"need k >= 2 for a transcendental rank-one foliation, got {k}")
    if p < 1:
        raise DomainError(f"need canonical degree p >= 1, got {p}")
    return FoliationDescriptor(
        ambient=projective_space(k),
        rank=1,
        algebraic_rank=0,
        canonical=RankOneClass(Fraction(p)),
        recipe=TranscendentalRankOne(p=p),
        leaf_rc=LeafStatus.UNKNOWN,
        provenance=(
            f"asserted-existence: purely transcendental rank-one foliation of degree {p + 1}"
        ),
    )


def wps_coordinate_foliation(
    variety: WeightedProjectiveSpace, j: int
) -> FoliationDescriptor:
    """Fibers of the pencil spanned by x_0^{a_j} and x_j.

    The canonical class is -(sum of the other nonzero-index weights) * H.
    Leaf closures are weighted hypersurfaces {x_j = c * x_0^{a_j}}; their
    rational connectedness is left unknown rather than guessed, since the
    invariant formulas never depend on it.
    """
    n = variety.dim
    if not (1 <= j <= n):
        raise DomainError(f"coordinate index must satisfy 1 <= j <= {n}, got {j}")
    weights = variety.weights
    degree = sum(weights[i] for i in range(1, n + 1) if i != j)
    return FoliationDescriptor(
        ambient=variety,
        rank=n - 1,
        algebraic_rank=n - 1,
        canonical=RankOneClass(Fraction(-degree)),
        recipe=CoordinateProjection(j=j),
        leaf_rc=LeafStatus.UNKNOWN,
        provenance=f"constructed: fibers of the pencil spanned by x_0^{weights[j]} and x_{j}",
    )


def cone_foliation(
    cone: GeneralizedCone, base_foliation: FoliationDescriptor
) -> FoliationDescriptor:
    """Preimage of a base foliation under the cone's projection off the vertex.

    With d the canonical degree of the base foliation against the
    polarization, the induced foliation has K = (d/m - r') H: each ruling
    subspace contributes the vertex rank to the anticanonical degree and
    the base contributes d/m through the degree-m polarization.
    """
    base_ambient = base_foliation.ambient
    if isinstance(base_ambient, WeightedProjectiveSpace):
        if not (base_ambient.is_smooth and cone.base.is_projective_space):
            raise DomainError("base foliation ambient does not match the cone base")
        if base_ambient.dim != cone.base.dim:
            raise DomainError(
                f"cone base is {cone.base.label}, foliation lives on {base_ambient.label()}"
            )
    elif isinstance(base_ambient, PolarizedBase):
        if base_ambient != cone.base:
            raise DomainError("base foliation must live on the cone's own base")
    else:
        raise DomainError("cone base foliations live on the base, not on a bundle")
    d = base_foliation.canonical.s
    canonical = RankOneClass(d / Fraction(cone.m) - cone.vertex_rank)
    return FoliationDescriptor(
        ambient=cone,
        rank=cone.vertex_rank + base_foliation.rank,
        algebraic_rank=cone.vertex_rank + base_foliation.algebraic_rank,
        canonical=canonical,
        recipe=ConeInduced(base=base_foliation),
        leaf_rc=_inherited_leaf_status(base_foliation),
        provenance="constructed: ruling-projection preimage of the base foliation",
    )
