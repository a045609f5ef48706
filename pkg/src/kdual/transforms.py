"""Maps between the built-in rings and the graded-group calculus.

This module holds the wrong-way and right-way maps along circle factors
(pull-backs, push-forwards, the suspension section), the degree-shifting
duality transform on the flip circle and its powers, the split Künneth
tables for products with the flip circle, the group cohomology of the
two-element group computed from its 2-periodic free resolution, and the
assembly of total-space cohomology from multiplication by an Euler class
(the two-step kernel/cokernel data of the circle-bundle exact sequence).

Push-forwards along a torus factor are not postulated: they are read off
from the free decomposition of the torus ring over the pulled-back circle
ring, with basis {1, chi_fiber}.  That decomposition is checked, not
assumed.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .exact_abelian import (
    FGAbelianGroup,
    GroupHom,
    IntegerMatrix,
    QuotientPresentation,
    RModule,
    preimage_lattice,
    rmodule_classify,
    subquotient_group,
)
from .graded_algebra import EQ, PM, Degree, RingElement, Slice, degree_component
from .paper_rings import build_ring


# ---------------------------------------------------------------------------
# pull-backs and push-forwards between the flip circle and the 2-torus


def pullback_circle_to_torus(axis: int, element: RingElement) -> RingElement:
    """Pull back along projection to the given torus factor (chi -> chi_axis)."""
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    circle = build_ring("kk_circle_flip")
    torus = build_ring("kk_torus2")
    if element.ring != circle:
        raise ValueError("element must live in the flip-circle ring")
    rename = {"t": "t", "sigma": "sigma", "chi": f"chi{axis}"}
    terms = []
    for exps, coeff in element.terms:
        mono = {g.name: e for g, e in zip(circle.generators, exps) if e}
        terms.append(({rename[k]: v for k, v in mono.items()}, coeff))
    return torus.from_named_terms(terms)


def pushforward_torus2(axis: int, element: RingElement) -> RingElement:
    """Push forward along projection to the given torus factor.

    Writes the element as a + chi_fiber * b with a, b pulled back along
    the projection (fiber = the other factor) and returns b; this kills
    pulled-back classes, sends chi_fiber to 1, and shifts the degree by
    (-1, variant flip).  Normalized inputs always decompose this way; a
    leftover term is a hard error.
    """
    if axis not in (1, 2):
        raise ValueError("axis must be 1 or 2")
    circle = build_ring("kk_circle_flip")
    torus = build_ring("kk_torus2")
    if element.ring != torus:
        raise ValueError("element must live in the 2-torus ring")
    fiber = f"chi{3 - axis}"
    keep = f"chi{axis}"
    fiber_idx = torus._index[fiber]
    terms = []
    for exps, coeff in element.terms:
        if exps[fiber_idx] == 0:
            continue
        if exps[fiber_idx] != 1:
            raise AssertionError("normalized monomial has a square of a circle class")
        mono = {g.name: e for g, e in zip(torus.generators, exps) if e}
        mono.pop(fiber)
        renamed = {}
        for name, e in mono.items():
            renamed["chi" if name == keep else name] = e
        terms.append((renamed, coeff))
    return circle.from_named_terms(terms)


def suspension_section(element: RingElement) -> RingElement:
    """Section of the push-forward (pi_1)_*: multiply the pull-back of the
    flip-circle class by chi2.  Splits degree-wise: (pi_1)_* after this map
    is the identity."""
    torus = build_ring("kk_torus2")
    return pullback_circle_to_torus(1, element) * torus.gen("chi2")


# ---------------------------------------------------------------------------
# the duality transform on the flip circle


T_BASIS_LABELS = ("1", "t", "sigma*chi", "chi", "t*chi", "sigma")


def t_transform(element: RingElement) -> RingElement:
    """a -> (pi_2)_* ((1 + t*chi1*chi2) * pi_1^* a) on the flip circle.

    Additive and linear over Z[t]/(t^2 - 1); exchanges the two variant
    summands with a level shift of -1.
    """
    torus = build_ring("kk_torus2")
    kernel = torus.one() + torus.gen("t") * torus.gen("chi1") * torus.gen("chi2")
    return pushforward_torus2(2, kernel * pullback_circle_to_torus(1, element))


def t_basis():
    ring = build_ring("kk_circle_flip")
    from .expressions import parse_expression
    return {label: parse_expression(ring, label) for label in T_BASIS_LABELS}


def t_power_table(k: int) -> dict:
    """Iterated transform on the six-element module basis of the flip circle."""
    if not 1 <= k <= 16:
        raise ValueError("power must be between 1 and 16")
    table = {}
    for label, elem in t_basis().items():
        value = elem
        for _ in range(k):
            value = t_transform(value)
        table[label] = value
    return table


# ---------------------------------------------------------------------------
# graded group tables and the Künneth splitting


@dataclass(frozen=True)
class TableEntry:
    group: FGAbelianGroup
    modules: tuple | None = None  # sorted (name, multiplicity) pairs
    ambiguous: bool = False

    @classmethod
    def from_counter(cls, counter: Counter, ambiguous=False):
        from .exact_abelian import rmodule_from_multiset
        group = rmodule_from_multiset(counter).underlying_group()
        return cls(group, tuple(sorted(Counter(counter).items())), ambiguous)

    def module_multiset(self) -> Counter:
        return Counter(dict(self.modules)) if self.modules is not None else None

    def to_json(self):
        data = {"group": self.group.to_json()}
        if self.modules is not None:
            data["modules"] = [[name, mult] for name, mult in self.modules]
        if self.ambiguous:
            data["extension_ambiguous"] = True
        return data


class GradedGroupTable:
    """Map from (level, variant) to a group, with optional module refinement."""

    def __init__(self, theory: str, entries: dict):
        if theory not in ("K", "H"):
            raise ValueError("theory must be 'K' or 'H'")
        self.theory = theory
        self.entries = dict(entries)

    def entry(self, level, variant) -> TableEntry:
        if self.theory == "K":
            level %= 2
        return self.entries.get((level, variant),
                                TableEntry(FGAbelianGroup(), None, False))

    def to_json(self):
        return {
            "theory": self.theory,
            "entries": [
                {"level": lvl, "variant": var, **entry.to_json()}
                for (lvl, var), entry in sorted(self.entries.items())
            ],
        }


def _slice_rmodule(ring, slice_: Slice) -> RModule:
    """Module structure of a ring slice under multiplication by t."""
    t_elem = ring.gen("t")
    columns = [slice_.coords(t_elem * slice_.element(
        tuple(1 if i == j else 0 for i in range(slice_.dim))))
        for j in range(slice_.dim)]
    action = IntegerMatrix.from_columns(columns, rows=slice_.dim)
    return RModule.from_group(slice_.group, action)


def k_table_of_ring(name: str) -> GradedGroupTable:
    """Module-refined table of a K-type built-in ring, from its slices."""
    ring = build_ring(name)
    entries = {}
    for level in (0, 1):
        for variant in (EQ, PM):
            slice_ = degree_component(ring, Degree(level, variant))
            if slice_.dim:
                modules = rmodule_classify(_slice_rmodule(ring, slice_))
                entries[(level, variant)] = TableEntry.from_counter(modules)
            else:
                entries[(level, variant)] = TableEntry(FGAbelianGroup(), ())
    return GradedGroupTable("K", entries)


def h_table_of_ring(name: str, window: int = 6) -> GradedGroupTable:
    ring = build_ring(name)
    entries = {}
    for level in range(window + 1):
        for variant in (EQ, PM):
            slice_ = degree_component(ring, Degree(level, variant))
            entries[(level, variant)] = TableEntry(slice_.group)
    return GradedGroupTable("H", entries)


_BASE_RINGS = {"point": ("kk_point", "hh_point"),
               "circle_flip": ("kk_circle_flip", "hh_circle_flip")}


def base_table(base: str, theory: str, window: int = 6) -> GradedGroupTable:
    if base not in _BASE_RINGS:
        raise ValueError("base must be 'point' or 'circle_flip'")
    k_name, h_name = _BASE_RINGS[base]
    if theory == "K":
        return k_table_of_ring(k_name)
    return h_table_of_ring(h_name, window)


def split_table(table: GradedGroupTable) -> GradedGroupTable:
    """Table of the product with the flip circle: each degree is the sum of
    the same degree and the variant-flipped degree one level down."""
    entries = {}
    levels = (0, 1) if table.theory == "K" else sorted({lvl for lvl, _ in table.entries})
    for level in levels:
        for variant in (EQ, PM):
            flipped = PM if variant == EQ else EQ
            here = table.entry(level, variant)
            below = table.entry(level - 1, flipped)
            group = here.group.direct_sum(below.group)
            if here.modules is None:
                modules = None
            else:
                merged = Counter(dict(here.modules)) + Counter(dict(below.modules or ()))
                modules = tuple(sorted(merged.items()))
            entries[(level, variant)] = TableEntry(group, modules)
    return GradedGroupTable(table.theory, entries)


def kunneth_split(base: str, theory: str, window: int = 6) -> GradedGroupTable:
    """Graded groups of base x (flip circle), split off the base table."""
    return split_table(base_table(base, theory, window))


# ---------------------------------------------------------------------------
# group cohomology of the two-element group


def group_cohomology_z2(m: int, n: int) -> FGAbelianGroup:
    """H^n of the two-element group with coefficients Z(m) (the involution
    acts by (-1)^m), computed from the 2-periodic free resolution.

    The cochain complex has one copy of Z in each degree; the
    differentials alternate between multiplication by (-1)^m - 1 and
    (-1)^m + 1.
    """
    if m not in (0, 1):
        raise ValueError("the coefficient twist must be 0 or 1")
    if n < 0:
        return FGAbelianGroup()
    sign = (-1) ** m

    def differential(i):
        return sign - 1 if i % 2 == 0 else sign + 1

    z = FGAbelianGroup.free(1)
    d_out = GroupHom(z, z, IntegerMatrix.from_rows([[differential(n)]]))
    if n == 0:
        return d_out.kernel_group()
    d_in = GroupHom(z, z, IntegerMatrix.from_rows([[differential(n - 1)]]))
    kernel = preimage_lattice(d_out.matrix, IntegerMatrix.zeros(1, 0))
    image = d_in.matrix
    return subquotient_group(kernel, image)


# ---------------------------------------------------------------------------
# total-space cohomology from multiplication by an Euler class


@dataclass(frozen=True)
class GysinDegreeData:
    """Degree-n data of the circle-bundle exact sequence over a base ring.

    The total-space group is an extension of `kernel_group` (classes with
    nonzero push-forward, living in the base slice one level down with
    flipped variant) by `pushout` (the image of the pull-back, a quotient
    presentation of the degree-n base slice).
    """

    base_slice: Slice          # degree (n, v) of the base
    pushout: QuotientPresentation
    kernel_slice: Slice        # degree (n-1, flip v) of the base
    kernel_vectors: IntegerMatrix  # columns: representatives of ker(euler)
    kernel_relations: IntegerMatrix
    split_certified: bool

    def cokernel_group(self) -> FGAbelianGroup:
        return self.pushout.group()

    def kernel_group(self) -> FGAbelianGroup:
        return subquotient_group(self.kernel_vectors, self._kernel_lattice())

    def _kernel_lattice(self):
        return self.kernel_relations

    def total_group(self) -> FGAbelianGroup:
        return self.cokernel_group().direct_sum(self.kernel_group())

    def ambiguous(self) -> bool:
        if self.split_certified:
            return False
        ker = self.kernel_group()
        cok = self.cokernel_group()
        if ker.is_trivial() or cok.is_trivial():
            return False
        return bool(ker.torsion_orders)


def _euler_matrix(ring, euler, src: Slice, dst: Slice) -> IntegerMatrix:
    columns = []
    for j in range(src.dim):
        image = euler * src.element(tuple(1 if i == j else 0 for i in range(src.dim)))
        columns.append(dst.coords(image))
    return IntegerMatrix.from_columns(columns, rows=dst.dim)


def _orders_matrix(slice_: Slice) -> IntegerMatrix:
    cols = []
    for i, order in enumerate(slice_.orders):
        if order:
            cols.append(tuple(order if i == j else 0 for j in range(slice_.dim)))
    return IntegerMatrix.from_columns(cols, rows=slice_.dim)


def gysin_degree_data(base_ring, euler: RingElement, level: int, variant: str,
                      bound=None) -> GysinDegreeData:
    flipped = PM if variant == EQ else EQ
    here = degree_component(base_ring, Degree(level, variant), bound)
    below = degree_component(base_ring, Degree(level - 1, flipped), bound)
    two_below = degree_component(base_ring, Degree(level - 2, flipped), bound)
    above = degree_component(base_ring, Degree(level + 1, variant), bound)

    into = _euler_matrix(base_ring, euler, two_below, here)
    out = _euler_matrix(base_ring, euler, below, above)

    pushout = QuotientPresentation(here.dim, _orders_matrix(here).hstack(into))
    kernel_vectors = preimage_lattice(out, _orders_matrix(above))
    return GysinDegreeData(
        base_slice=here,
        pushout=pushout,
        kernel_slice=below,
        kernel_vectors=kernel_vectors,
        kernel_relations=_orders_matrix(below),
        split_certified=euler.is_zero(),
    )


def gysin_cohomology(base_ring, euler: RingElement, window: int = 4,
                     bound=None) -> GradedGroupTable:
    """Total-space cohomology table of the circle bundle with the given
    Euler class, assembled degree by degree from the kernel and cokernel
    of cup product with the Euler class.

    Extensions are never resolved silently: an entry whose kernel part
    has torsion while both parts are nonzero is flagged ambiguous (the
    direct sum is still reported), except for the zero Euler class where
    the section splits the sequence.
    """
    if euler.ring != base_ring:
        raise ValueError("Euler class must live in the base ring")
    if not euler.is_zero() and not euler.is_homogeneous(Degree(2, PM)):
        raise ValueError("Euler class must be homogeneous of degree (2, pm)")
    entries = {}
    for level in range(window + 1):
        for variant in (EQ, PM):
            data = gysin_degree_data(base_ring, euler, level, variant, bound)
            entries[(level, variant)] = TableEntry(
                data.total_group(), None, data.ambiguous())
    return GradedGroupTable("H", entries)


# ---------------------------------------------------------------------------
# named degree-shifting module maps


@dataclass(frozen=True, eq=False)
class ModuleMap:
    """A degree-shifting additive map with an explicit basis window."""

    name: str
    source_ring: object
    target_ring: object
    level_shift: int
    variant_flip: bool
    images: tuple  # ((basis label, image element), ...)

    def image_table(self):
        return dict(self.images)

    def apply(self, element: RingElement) -> RingElement:
        table = dict(self.images)
        out = self.target_ring.zero()
        for exps, coeff in element.terms:
            label = self.source_ring.monomial_str(exps)
            if label not in table:
                raise ValueError(f"{self.name}: no image for basis monomial {label}")
            out = out + coeff * table[label]
        return out


def delta_map(family: str, bound: int = 6) -> ModuleMap:
    """The connecting map of the forgetful exact sequence: cup product with
    the degree-(1, pm) class (sigma for K-type, t12 for H-type)."""
    from .graded_algebra import normal_monomials
    if family == "K":
        ring = build_ring("kk_circle_flip")
        unit = ring.gen("sigma")
    elif family == "H":
        ring = build_ring("hh_circle_flip")
        unit = ring.gen("t12")
    else:
        raise ValueError("family must be 'K' or 'H'")
    images = tuple(
        (ring.monomial_str(mono), ring.element({mono: 1}) * unit)
        for mono in normal_monomials(ring, bound))
    return ModuleMap(f"delta[{family}]", ring, ring, 1, True, images)
