"""Bigraded commutative rings presented by generators and rewrite rules.

A ring here is a commutative polynomial ring on finitely many generators,
each carrying a degree (an integer level plus a two-valued variant flag)
and an additive order (0 for a free coefficient, 2 for a two-torsion one),
modulo a finite list of oriented rewrite rules.  Elements are kept in a
canonical normal form: every stored monomial is irreducible under the
rules and every coefficient is reduced modulo the additive order of its
monomial.

Rewriting terminates because every rule strictly decreases the
(total exponent, reverse-lexicographic) monomial order; this is checked
at construction time.  Confluence is not assumed: the ring constructors
in `paper_rings` certify it empirically and refuse to hand out a ring
that fails certification.

Degrees add componentwise; the variant flag adds modulo two (two "pm"
factors multiply into "eq").  Rings of K-type carry `period = 2` and
reduce levels modulo the period; rings of H-type keep integer levels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact_abelian import FGAbelianGroup

EQ = "eq"
PM = "pm"

# Fixed ranking used for the monomial order and for printing.
GENERATOR_ORDER = ("t", "t12", "sigma", "chi", "chi1", "chi2",
                   "e", "c", "chat", "L", "H", "ell")


class UnknownGeneratorError(KeyError):
    """An expression mentions a generator the ring does not have."""


class InstabilityError(ValueError):
    """A degree slice changed when the exponent bound was raised."""


@dataclass(frozen=True)
class Degree:
    level: int
    variant: str = EQ

    def __post_init__(self):
        if self.variant not in (EQ, PM):
            raise ValueError(f"variant must be {EQ!r} or {PM!r}")

    def __add__(self, other):
        variant = EQ if self.variant == other.variant else PM
        return Degree(self.level + other.level, variant)

    def flip(self):
        return Degree(self.level, PM if self.variant == EQ else EQ)

    def __str__(self):
        return f"({self.level}, {self.variant})"


@dataclass(frozen=True)
class GeneratorSpec:
    name: str
    degree: Degree
    additive_order: int = 0

    def __post_init__(self):
        if self.additive_order not in (0, 2):
            raise ValueError("additive orders other than 0 and 2 are not supported")


def _generator_rank(name):
    try:
        return (0, GENERATOR_ORDER.index(name))
    except ValueError:
        return (1, name)


class PresentedRing:
    """Commutative ring with generators, coefficient orders and rewrites.

    Use :meth:`define` to build one; it sorts the generators into the
    global order, validates that every rewrite is degree-homogeneous and
    strictly decreasing, and freezes the result.
    """

    def __init__(self, name, generators, rules, period):
        self.name = name
        self.generators = tuple(generators)
        self.period = period
        self._index = {g.name: i for i, g in enumerate(self.generators)}
        self.rules = tuple(rules)  # (lhs exponent tuple, ((exps, coeff), ...))
        self._validate_rules()

    # -- construction --------------------------------------------------------

    @classmethod
    def define(cls, name, generators, rules=(), period=None):
        """Build a ring from readable data.

        generators: iterable of (name, level, variant, additive_order)
        rules: iterable of (lhs_monomial_dict, [(rhs_monomial_dict, coeff), ...])
        """
        specs = sorted(
            (GeneratorSpec(n, Degree(lvl, var), order) for n, lvl, var, order in generators),
            key=lambda g: _generator_rank(g.name))
        ring = cls.__new__(cls)
        ring.name = name
        ring.generators = tuple(specs)
        ring.period = period
        ring._index = {g.name: i for i, g in enumerate(ring.generators)}
        packed = []
        for lhs, rhs in rules:
            packed.append((ring._exps_from_dict(lhs),
                           tuple((ring._exps_from_dict(m), int(c)) for m, c in rhs)))
        ring.rules = tuple(packed)
        ring._validate_rules()
        return ring

    def _exps_from_dict(self, monomial):
        exps = [0] * len(self.generators)
        for name, e in monomial.items():
            if name not in self._index:
                raise UnknownGeneratorError(f"{self.name} has no generator {name!r}")
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            exps[self._index[name]] = int(e)
        return tuple(exps)

    def _validate_rules(self):
        for lhs, rhs in self.rules:
            lhs_key = self.monomial_key(lhs)
            lhs_deg = self.monomial_degree(lhs)
            for mono, _ in rhs:
                if self.monomial_key(mono) >= lhs_key:
                    raise ValueError(
                        f"rule for {self.monomial_str(lhs)} does not decrease the order")
                if self.monomial_degree(mono) != lhs_deg:
                    raise ValueError(
                        f"rule for {self.monomial_str(lhs)} is not degree-homogeneous")

    def readable_rules(self):
        """Rules as (lhs monomial dict, [(rhs monomial dict, coeff), ...])."""
        def as_dict(exps):
            return {g.name: e for g, e in zip(self.generators, exps) if e}
        return [(as_dict(lhs), [(as_dict(m), c) for m, c in rhs])
                for lhs, rhs in self.rules]

    def generator_data(self):
        """Generators as (name, level, variant, additive_order) tuples."""
        return [(g.name, g.degree.level, g.degree.variant, g.additive_order)
                for g in self.generators]

    # -- identity ------------------------------------------------------------

    def __repr__(self):
        return f"<PresentedRing {self.name}>"

    def __eq__(self, other):
        return isinstance(other, PresentedRing) and other.name == self.name

    def __hash__(self):
        return hash(("PresentedRing", self.name))

    # -- degrees and monomials ------------------------------------------------

    def reduce_degree(self, degree: Degree) -> Degree:
        if self.period:
            return Degree(degree.level % self.period, degree.variant)
        return degree

    def monomial_degree(self, exps) -> Degree:
        level = 0
        flips = 0
        for e, g in zip(exps, self.generators):
            level += e * g.degree.level
            if g.degree.variant == PM:
                flips += e
        return self.reduce_degree(Degree(level, PM if flips % 2 else EQ))

    def monomial_key(self, exps):
        return (sum(exps), tuple(reversed(exps)))

    def monomial_additive_order(self, exps) -> int:
        for e, g in zip(exps, self.generators):
            if e and g.additive_order == 2:
                return 2
        return 0

    def monomial_str(self, exps) -> str:
        parts = []
        for e, g in zip(exps, self.generators):
            if e == 1:
                parts.append(g.name)
            elif e > 1:
                parts.append(f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    def monomial_is_normal(self, exps) -> bool:
        return not any(self._divides(lhs, exps) for lhs, _ in self.rules)

    @staticmethod
    def _divides(lhs, exps):
        return all(a <= b for a, b in zip(lhs, exps))

    # -- normalization ---------------------------------------------------------

    def _reduce_coeff(self, exps, coeff):
        order = self.monomial_additive_order(exps)
        return coeff % order if order else coeff

    def _normalize_terms(self, terms: dict) -> dict:
        work = {}
        for exps, coeff in terms.items():
            coeff = self._reduce_coeff(exps, coeff)
            if coeff:
                work[exps] = work.get(exps, 0) + coeff
        while True:
            target = None
            for exps in sorted(work, key=self.monomial_key, reverse=True):
                for lhs, rhs in self.rules:
                    if self._divides(lhs, exps):
                        target = (exps, lhs, rhs)
                        break
                if target:
                    break
            if target is None:
                break
            exps, lhs, rhs = target
            coeff = work.pop(exps)
            quotient = tuple(a - b for a, b in zip(exps, lhs))
            for mono, c in rhs:
                new = tuple(a + b for a, b in zip(quotient, mono))
                val = work.get(new, 0) + coeff * c
                val = self._reduce_coeff(new, val)
                if val:
                    work[new] = val
                else:
                    work.pop(new, None)
        cleaned = {}
        for exps, coeff in work.items():
            coeff = self._reduce_coeff(exps, coeff)
            if coeff:
                cleaned[exps] = coeff
        return cleaned

    # -- element constructors ---------------------------------------------------

    def element(self, terms: dict) -> "RingElement":
        normalized = self._normalize_terms(terms)
        ordered = tuple(sorted(normalized.items(), key=lambda kv: self.monomial_key(kv[0])))
        return RingElement(self, ordered)

    def zero(self) -> "RingElement":
        return self.element({})

    def one(self) -> "RingElement":
        return self.element({(0,) * len(self.generators): 1})

    def gen(self, name) -> "RingElement":
        if name not in self._index:
            raise UnknownGeneratorError(f"{self.name} has no generator {name!r}")
        exps = tuple(1 if i == self._index[name] else 0 for i in range(len(self.generators)))
        return self.element({exps: 1})

    def from_named_terms(self, terms) -> "RingElement":
        """terms: iterable of (monomial dict keyed by generator name, coeff)."""
        raw = {}
        for mono, coeff in terms:
            exps = self._exps_from_dict(dict(mono))
            raw[exps] = raw.get(exps, 0) + int(coeff)
        return self.element(raw)


class RingElement:
    """Normalized element; build through the ring, not directly."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # tuple of (exps, coeff), sorted, normalized

    # -- algebra ---------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError("elements of different rings")
            return other
        if isinstance(other, int):
            return self.ring.element({(0,) * len(self.ring.generators): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        raw = dict(self.terms)
        for exps, coeff in other.terms:
            raw[exps] = raw.get(exps, 0) + coeff
        return self.ring.element(raw)

    __radd__ = __add__

    def __neg__(self):
        return self.ring.element({exps: -c for exps, c in self.terms})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        raw = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                exps = tuple(a + b for a, b in zip(e1, e2))
                raw[exps] = raw.get(exps, 0) + c1 * c2
        return self.ring.element(raw)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponents must be nonnegative integers")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._coerce(other)
        return (isinstance(other, RingElement) and other.ring == self.ring
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.ring.name, self.terms))

    def is_zero(self):
        return not self.terms

    # -- degree ------------------------------------------------------------------

    def degree(self):
        """Common degree of all terms, or None for 0 and mixed elements."""
        degrees = {self.ring.monomial_degree(exps) for exps, _ in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous(self, degree=None):
        if self.is_zero():
            return True
        d = self.degree()
        if d is None:
            return False
        return degree is None or d == self.ring.reduce_degree(degree)

    # -- display and serialization --------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, coeff in reversed(self.terms):
            mono = self.ring.monomial_str(exps)
            if mono == "1":
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        head_sign, head = parts[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    __repr__ = __str__

    def to_json(self):
        return {
            "ring": self.ring.name,
            "terms": [
                {"mono": {g.name: e for g, e in zip(self.ring.generators, exps) if e},
                 "coeff": coeff}
                for exps, coeff in self.terms
            ],
        }


def element_from_json(ring: PresentedRing, data) -> RingElement:
    if data.get("ring") != ring.name:
        raise ValueError(f"element belongs to ring {data.get('ring')!r}, not {ring.name!r}")
    return ring.from_named_terms((t["mono"], t["coeff"]) for t in data["terms"])


# ---------------------------------------------------------------------------
# operations


def normalize(ring: PresentedRing, raw) -> RingElement:
    """Normal form of raw data: a RingElement, or (monomial dict, coeff) pairs."""
    if isinstance(raw, RingElement):
        if raw.ring != ring:
            raise UnknownGeneratorError("element belongs to a different ring")
        return ring.element(dict(raw.terms))
    return ring.from_named_terms(raw)


def mul(ring: PresentedRing, a: RingElement, b: RingElement) -> RingElement:
    if a.ring != ring or b.ring != ring:
        raise ValueError("elements do not belong to the given ring")
    return a * b


@dataclass(frozen=True)
class Slice:
    """Monomial basis of one homogeneous degree of a ring."""

    ring: PresentedRing
    degree: Degree
    monomials: tuple  # exponent tuples in monomial order
    orders: tuple     # additive order per basis monomial (0 = free)

    @property
    def labels(self):
        return tuple(self.ring.monomial_str(m) for m in self.monomials)

    @property
    def group(self) -> FGAbelianGroup:
        return FGAbelianGroup.from_orders(self.orders)

    @property
    def dim(self):
        return len(self.monomials)

    def coords(self, element: RingElement):
        if element.ring != self.ring:
            raise ValueError("element of a different ring")
        index = {m: i for i, m in enumerate(self.monomials)}
        vec = [0] * len(self.monomials)
        for exps, coeff in element.terms:
            if exps not in index:
                raise ValueError(
                    f"{element} has a term {self.ring.monomial_str(exps)} outside the slice")
            vec[index[exps]] = coeff
        return tuple(vec)

    def element(self, coords) -> RingElement:
        return self.ring.element({m: c for m, c in zip(self.monomials, coords)})

    def reduce_coords(self, coords):
        return tuple(c % o if o else c for c, o in zip(coords, self.orders))

    def elements(self):
        """All elements of a finite slice, as ring elements."""
        from itertools import product as iproduct
        if any(o == 0 for o in self.orders):
            raise ValueError("slice is infinite")
        out = []
        for coords in iproduct(*(range(o) for o in self.orders)):
            out.append(self.element(coords))
        return out


def normal_monomials(ring: PresentedRing, bound: int):
    """All irreducible monomials of total exponent at most bound."""
    from itertools import product as iproduct
    n = len(ring.generators)
    out = []
    for exps in iproduct(range(bound + 1), repeat=n):
        if sum(exps) <= bound and ring.monomial_is_normal(exps):
            out.append(exps)
    return sorted(out, key=ring.monomial_key)


def _enumerate_normal_monomials(ring: PresentedRing, degree: Degree, bound: int):
    target = ring.reduce_degree(degree)
    n = len(ring.generators)
    found = []

    def rec(idx, exps, total, level):
        if idx == n:
            mono = tuple(exps)
            if (ring.monomial_degree(mono) == target and ring.monomial_is_normal(mono)):
                found.append(mono)
            return
        gen_level = ring.generators[idx].degree.level
        e = 0
        while total + e <= bound:
            if ring.period is None and level + e * gen_level > degree.level:
                break  # levels only grow; prune
            exps.append(e)
            rec(idx + 1, exps, total + e, level + e * gen_level)
            exps.pop()
            e += 1

    rec(0, [], 0, 0)
    return sorted(found, key=ring.monomial_key)


def default_bound(ring: PresentedRing, degree: Degree) -> int:
    if ring.period is None:
        return max(degree.level, 0)
    return len(ring.generators) + 2


def degree_component(ring: PresentedRing, degree: Degree, exponent_bound=None) -> Slice:
    """Monomial basis of the homogeneous slice in the given degree.

    The bound must be stable: enumerating with bound + 1 must give the
    same slice, otherwise InstabilityError is raised.
    """
    bound = default_bound(ring, degree) if exponent_bound is None else exponent_bound
    here = _enumerate_normal_monomials(ring, degree, bound)
    more = _enumerate_normal_monomials(ring, degree, bound + 1)
    if here != more:
        raise InstabilityError(
            f"slice of {ring.name} at {degree} still grows past exponent bound {bound}")
    return Slice(ring, ring.reduce_degree(degree), tuple(here),
                 tuple(ring.monomial_additive_order(m) for m in here))


def apply_ring_hom(source: PresentedRing, target: PresentedRing, images: dict,
                   element: RingElement) -> RingElement:
    """Extend generator images to the whole ring and apply to element."""
    for g in source.generators:
        if g.name not in images:
            raise UnknownGeneratorError(f"no image given for generator {g.name!r}")
    out = target.zero()
    for exps, coeff in element.terms:
        term = coeff * target.one()
        for e, g in zip(exps, source.generators):
            for _ in range(e):
                term = term * images[g.name]
        out = out + term
    return out


def verify_ring_hom(source: PresentedRing, target: PresentedRing, images: dict,
                    degree_map=None) -> bool:
    """Check that generator images define a ring homomorphism.

    Verifies degree compatibility (through degree_map when the target
    grades differently, e.g. forgetting the variant), coefficient orders,
    and that every rewrite rule of the source maps to zero.  Returns False
    on any failure; raises only for missing generators.
    """
    if degree_map is None:
        degree_map = lambda d: d
    for g in source.generators:
        if g.name not in images:
            raise UnknownGeneratorError(f"no image given for generator {g.name!r}")
        img = images[g.name]
        if img.ring != target:
            return False
        if not img.is_homogeneous(degree_map(g.degree)):
            return False
        if g.additive_order and not (g.additive_order * img).is_zero():
            return False
    for lhs, rhs in source.rules:
        lhs_elem = source.element({lhs: 1})
        rhs_elem = source.element({mono: c for mono, c in rhs})
        image = (apply_ring_hom(source, target, images, lhs_elem)
                 - apply_ring_hom(source, target, images, rhs_elem))
        if not image.is_zero():
            return False
    return True
