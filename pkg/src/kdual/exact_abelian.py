"""Exact linear algebra over the integers.

The Smith normal form is the one primitive everything else here is built
on: finitely generated abelian groups in invariant-factor form,
homomorphisms with their kernels and cokernels, exactness of two-term
sequences, and the classification of modules over R = Z[t]/(t^2 - 1) into
direct sums of the four indecomposables

    R,  R/I,  R/J,  I/2I        (I = (1 - t), J = (1 + t))

which is how every structural answer in this package is reported.

All arithmetic uses Python's arbitrary-precision integers; there is no
floating point anywhere.  Values are immutable and operations are pure
functions, so everything is safe to evaluate in parallel.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product


class DimensionMismatchError(ValueError):
    """Shapes of composed maps do not line up."""


class ClassificationError(ValueError):
    """Module invariants match no direct sum of R, R/I, R/J, I/2I."""


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        for e in self.entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ValueError("entries must be plain ints")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0 if cols is None else cols
        if cols is not None and rows and width != cols:
            raise ValueError("explicit cols disagrees with row width")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(c) for c in columns]
        if columns:
            height = len(columns[0])
            if any(len(c) != height for c in columns):
                raise ValueError("ragged columns")
        else:
            height = 0 if rows is None else rows
        return cls(height, len(columns),
                   tuple(columns[j][i] for i in range(height) for j in range(len(columns))))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, diag, rows=None, cols=None):
        diag = list(diag)
        rows = len(diag) if rows is None else rows
        cols = len(diag) if cols is None else cols
        return cls(rows, cols, tuple(
            diag[i] if i == j and i < len(diag) else 0
            for i in range(rows) for j in range(cols)))

    # -- access --------------------------------------------------------------

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def is_zero(self):
        return all(e == 0 for e in self.entries)

    # -- algebra -------------------------------------------------------------

    def mul(self, other):
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            for j in range(other.cols):
                out.append(sum(ri[k] * other.entry(k, j) for k in range(self.cols)))
        return IntegerMatrix(self.rows, other.cols, tuple(out))

    __matmul__ = mul

    def apply(self, vector):
        """Matrix times column vector, returned as a tuple."""
        vector = tuple(vector)
        if len(vector) != self.cols:
            raise DimensionMismatchError("vector length does not match columns")
        return tuple(sum(self.row(i)[k] * vector[k] for k in range(self.cols))
                     for i in range(self.rows))

    def transpose(self):
        return IntegerMatrix(self.cols, self.rows, tuple(
            self.entry(i, j) for j in range(self.cols) for i in range(self.rows)))

    def hstack(self, other):
        if self.rows != other.rows:
            raise DimensionMismatchError("hstack needs equal row counts")
        out = []
        for i in range(self.rows):
            out.extend(self.row(i))
            out.extend(other.row(i))
        return IntegerMatrix(self.rows, self.cols + other.cols, tuple(out))

    def vstack(self, other):
        if self.cols != other.cols:
            raise DimensionMismatchError("vstack needs equal column counts")
        return IntegerMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def neg(self):
        return IntegerMatrix(self.rows, self.cols, tuple(-e for e in self.entries))

    # -- serialization -------------------------------------------------------

    def to_json(self):
        return {"rows": self.rows, "cols": self.cols, "entries": list(self.entries)}

    @classmethod
    def from_json(cls, data):
        return cls(int(data["rows"]), int(data["cols"]),
                   tuple(int(e) for e in data["entries"]))


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ M @ V = D with U, V unimodular and D diagonal, d_i | d_{i+1}."""

    u: IntegerMatrix
    d: IntegerMatrix
    v: IntegerMatrix

    def diagonal(self):
        n = min(self.d.rows, self.d.cols)
        return [self.d.entry(i, i) for i in range(n)]

    def rank(self):
        return sum(1 for x in self.diagonal() if x != 0)


def smith_normal_form(m: IntegerMatrix) -> SmithDecomposition:
    """Diagonalize by unimodular row and column operations.

    Deterministic: the pivot is the entry of smallest nonzero absolute
    value in the remaining block, ties broken by lowest (row, col).
    Diagonal entries come out nonnegative with each dividing the next.
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = IntegerMatrix.identity(rows).to_rows()
    v = IntegerMatrix.identity(cols).to_rows()

    def swap_rows(i, j):
        if i != j:
            a[i], a[j] = a[j], a[i]
            u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        if i != j:
            for r in a:
                r[i], r[j] = r[j], r[i]
            for r in v:
                r[i], r[j] = r[j], r[i]

    def add_row(dst, src, q):  # row dst += q * row src
        if q:
            a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col dst += q * col src
        if q:
            for r in a:
                r[dst] += q * r[src]
            for r in v:
                r[dst] += q * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def pick_pivot(k):
        best = None
        for i in range(k, rows):
            for j in range(k, cols):
                val = abs(a[i][j])
                if val and (best is None or val < best[0]):
                    best = (val, i, j)
        return best

    k = 0
    limit = min(rows, cols)
    while k < limit:
        best = pick_pivot(k)
        if best is None:
            break
        swap_rows(k, best[1])
        swap_cols(k, best[2])
        if a[k][k] < 0:
            negate_row(k)
        while True:
            p = a[k][k]
            for i in range(rows):
                if i != k and a[i][k]:
                    add_row(i, k, -(a[i][k] // p))
            cand = None
            for i in range(rows):
                if i != k and a[i][k] and (cand is None or abs(a[i][k]) < abs(a[cand][k])):
                    cand = i
            if cand is not None:
                swap_rows(k, cand)
                if a[k][k] < 0:
                    negate_row(k)
                continue
            for j in range(cols):
                if j != k and a[k][j]:
                    add_col(j, k, -(a[k][j] // p))
            cand = None
            for j in range(cols):
                if j != k and a[k][j] and (cand is None or abs(a[k][j]) < abs(a[k][cand])):
                    cand = j
            if cand is not None:
                swap_cols(k, cand)
                if a[k][k] < 0:
                    negate_row(k)
                continue
            # pivot must divide the remaining block for the divisor chain
            p = a[k][k]
            bad = None
            for i in range(k + 1, rows):
                for j in range(k + 1, cols):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(k, bad, 1)
        k += 1

    return SmithDecomposition(
        IntegerMatrix.from_rows(u, cols=rows),
        IntegerMatrix.from_rows(a, cols=cols),
        IntegerMatrix.from_rows(v, cols=cols),
    )


def inverse_unimodular(m: IntegerMatrix) -> IntegerMatrix:
    """Inverse of a square matrix with determinant +1 or -1."""
    if m.rows != m.cols:
        raise ValueError("only square matrices can be unimodular")
    s = smith_normal_form(m)
    if s.diagonal() != [1] * m.rows:
        raise ValueError("matrix is not unimodular")
    # u m v = 1  =>  m^{-1} = v u
    return s.v @ s.u


# ---------------------------------------------------------------------------
# lattices (subgroups of Z^n, given by spanning columns)


def solve(m: IntegerMatrix, b) -> tuple | None:
    """One integer solution x of m @ x = b, or None."""
    b = tuple(b)
    if len(b) != m.rows:
        raise DimensionMismatchError("vector length does not match rows")
    s = smith_normal_form(m)
    ub = s.u.apply(b)
    diag = s.diagonal()
    y = [0] * m.cols
    for i in range(m.rows):
        t = ub[i]
        d = diag[i] if i < len(diag) else 0
        if d:
            if t % d:
                return None
            if i < m.cols:
                y[i] = t // d
        elif t:
            return None
    return s.v.apply(y)


def kernel_basis(m: IntegerMatrix) -> IntegerMatrix:
    """Columns spanning {x : m @ x = 0}."""
    s = smith_normal_form(m)
    diag = s.diagonal()
    free = [j for j in range(m.cols) if j >= len(diag) or diag[j] == 0]
    return IntegerMatrix.from_columns([s.v.column(j) for j in free], rows=m.cols)


def column_span_basis(m: IntegerMatrix) -> IntegerMatrix:
    """An independent set of columns spanning the same subgroup of Z^rows."""
    s = smith_normal_form(m)
    u_inv = inverse_unimodular(s.u)
    cols = []
    for i, d in enumerate(s.diagonal()):
        if d:
            cols.append(tuple(d * x for x in u_inv.column(i)))
    return IntegerMatrix.from_columns(cols, rows=m.rows)


def lattice_contains(lattice: IntegerMatrix, vector) -> bool:
    return solve(lattice, vector) is not None


def lattice_subset(inner: IntegerMatrix, outer: IntegerMatrix) -> bool:
    return all(lattice_contains(outer, inner.column(j)) for j in range(inner.cols))


def lattices_equal(a: IntegerMatrix, b: IntegerMatrix) -> bool:
    return lattice_subset(a, b) and lattice_subset(b, a)


def preimage_lattice(m: IntegerMatrix, lattice: IntegerMatrix) -> IntegerMatrix:
    """Columns spanning {x : m @ x lies in the span of lattice}."""
    if m.rows != lattice.rows:
        raise DimensionMismatchError("lattice lives in the wrong ambient group")
    stacked = m.hstack(lattice.neg())
    ker = kernel_basis(stacked)
    cols = [ker.column(j)[:m.cols] for j in range(ker.cols)]
    return IntegerMatrix.from_columns(cols, rows=m.cols)


def subquotient_group(big: IntegerMatrix, small: IntegerMatrix) -> "FGAbelianGroup":
    """Isomorphism class of (span big) / (span small); small must lie in big."""
    basis = column_span_basis(big)
    coords = []
    for j in range(small.cols):
        x = solve(basis, small.column(j))
        if x is None:
            raise ValueError("small lattice is not contained in the big one")
        coords.append(x)
    rel = IntegerMatrix.from_columns(coords, rows=basis.cols)
    return cokernel(rel)


# ---------------------------------------------------------------------------
# finitely generated abelian groups


@dataclass(frozen=True)
class FGAbelianGroup:
    """Invariant factors: torsion orders (each > 1, each dividing the next)
    followed by one 0 per free summand."""

    invariant_factors: tuple = ()

    def __post_init__(self):
        tors = [f for f in self.invariant_factors if f != 0]
        zeros = [f for f in self.invariant_factors if f == 0]
        if list(self.invariant_factors) != tors + zeros:
            raise ValueError("torsion factors must come before free factors")
        for f in tors:
            if f <= 1:
                raise ValueError("torsion orders must be > 1")
        for prev, nxt in zip(tors, tors[1:]):
            if nxt % prev:
                raise ValueError("each torsion order must divide the next")

    @classmethod
    def from_orders(cls, orders):
        """Canonicalize an arbitrary list of cyclic orders (0 meaning Z)."""
        orders = [int(x) for x in orders]
        if not orders:
            return cls(())
        return cokernel(IntegerMatrix.diagonal(orders))

    @classmethod
    def free(cls, rank):
        return cls((0,) * rank)

    @property
    def free_rank(self):
        return sum(1 for f in self.invariant_factors if f == 0)

    @property
    def torsion_orders(self):
        return tuple(f for f in self.invariant_factors if f != 0)

    def is_trivial(self):
        return not self.invariant_factors

    def direct_sum(self, *others):
        orders = list(self.invariant_factors)
        for g in others:
            orders.extend(g.invariant_factors)
        return FGAbelianGroup.from_orders(orders)

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " x ".join("Z" if f == 0 else f"Z/{f}" for f in self.invariant_factors)

    def to_json(self):
        return {"invariant_factors": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(int(f) for f in data["invariant_factors"]))


def cokernel(m: IntegerMatrix) -> FGAbelianGroup:
    """Z^rows modulo the column span of m, in canonical invariant-factor form."""
    s = smith_normal_form(m)
    diag = s.diagonal()
    torsion = [d for d in diag if d not in (0, 1)]
    free = m.rows - sum(1 for d in diag if d != 0)
    return FGAbelianGroup(tuple(torsion) + (0,) * free)


def _orders_lattice(group: FGAbelianGroup) -> IntegerMatrix:
    """Relation lattice of the canonical presentation (one column per torsion
    generator)."""
    n = len(group.invariant_factors)
    cols = []
    for i, f in enumerate(group.invariant_factors):
        if f:
            cols.append(tuple(f if i == j else 0 for j in range(n)))
    return IntegerMatrix.from_columns(cols, rows=n)


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism between groups in canonical presentation.

    The matrix acts on generator coordinates: one column per source
    generator, one row per target generator.  Construction checks
    well-definedness: each source relation must land in a target relation.
    """

    source: FGAbelianGroup
    target: FGAbelianGroup
    matrix: IntegerMatrix

    def __post_init__(self):
        ns = len(self.source.invariant_factors)
        nt = len(self.target.invariant_factors)
        if (self.matrix.rows, self.matrix.cols) != (nt, ns):
            raise DimensionMismatchError(
                f"matrix is {self.matrix.rows}x{self.matrix.cols}, expected {nt}x{ns}")
        for i, f in enumerate(self.source.invariant_factors):
            if not f:
                continue
            for j, ft in enumerate(self.target.invariant_factors):
                val = f * self.matrix.entry(j, i)
                if (ft and val % ft) or (not ft and val):
                    raise ValueError("matrix does not respect the relations")

    def compose(self, inner: "GroupHom") -> "GroupHom":
        if inner.target != self.source:
            raise DimensionMismatchError("composition shapes do not match")
        return GroupHom(inner.source, self.target, self.matrix @ inner.matrix)

    def kernel_group(self) -> FGAbelianGroup:
        pre = preimage_lattice(self.matrix, _orders_lattice(self.target))
        return subquotient_group(pre, _orders_lattice(self.source))

    def cokernel_group(self) -> FGAbelianGroup:
        return cokernel(_orders_lattice(self.target).hstack(self.matrix))


def exactness_check(f: GroupHom, g: GroupHom) -> bool:
    """True iff image(f) = kernel(g) inside the middle group."""
    if f.target != g.source:
        raise DimensionMismatchError("maps are not composable")
    mid = _orders_lattice(f.target)
    image = f.matrix.hstack(mid)
    kernel = preimage_lattice(g.matrix, _orders_lattice(g.target))
    return lattices_equal(image, kernel)


# ---------------------------------------------------------------------------
# modules over Z[t]/(t^2 - 1)


R_NAME = "R"
RI_NAME = "R/I"
RJ_NAME = "R/J"
I2I_NAME = "I/2I"
INDECOMPOSABLES = (R_NAME, RI_NAME, RJ_NAME, I2I_NAME)


@dataclass(frozen=True)
class RModule:
    """Z^rank modulo the column span of `relations`, with an involution.

    The action matrix must preserve the relation lattice and square to the
    identity modulo it.
    """

    rank: int
    relations: IntegerMatrix
    action: IntegerMatrix

    def __post_init__(self):
        if self.relations.rows != self.rank:
            raise DimensionMismatchError("relations live in the wrong rank")
        if (self.action.rows, self.action.cols) != (self.rank, self.rank):
            raise DimensionMismatchError("action matrix must be square of the rank")
        for j in range(self.relations.cols):
            if not lattice_contains(self.relations, self.action.apply(self.relations.column(j))):
                raise ValueError("action does not preserve the relations")
        square = self.action @ self.action
        ident = IntegerMatrix.identity(self.rank)
        for j in range(self.rank):
            diff = tuple(a - b for a, b in zip(square.column(j), ident.column(j)))
            if not lattice_contains(self.relations, diff):
                raise ValueError("action is not an involution modulo the relations")

    @classmethod
    def from_group(cls, group: FGAbelianGroup, action: IntegerMatrix) -> "RModule":
        return cls(len(group.invariant_factors), _orders_lattice(group), action)

    def underlying_group(self) -> FGAbelianGroup:
        return cokernel(self.relations)

    def quotient_by(self, op: IntegerMatrix) -> FGAbelianGroup:
        """M / op(M) for an operator op on the ambient Z^rank."""
        return cokernel(self.relations.hstack(op))

    def kernel_of(self, op: IntegerMatrix) -> FGAbelianGroup:
        pre = preimage_lattice(op, self.relations)
        return subquotient_group(pre, self.relations)

    def direct_sum(self, other: "RModule") -> "RModule":
        n, m = self.rank, other.rank

        def block(a, b):
            rows = []
            for i in range(n):
                rows.append(list(a.row(i)) + [0] * b.cols)
            for i in range(m):
                rows.append([0] * a.cols + list(b.row(i)))
            return IntegerMatrix.from_rows(rows, cols=a.cols + b.cols)

        return RModule(n + m, block(self.relations, other.relations),
                       block(self.action, other.action))


def indecomposable(name: str) -> RModule:
    """The four building blocks, presented on their minimal generators."""
    if name == R_NAME:
        return RModule(2, IntegerMatrix.zeros(2, 0),
                       IntegerMatrix.from_rows([[0, 1], [1, 0]]))
    if name == RI_NAME:
        return RModule(1, IntegerMatrix.zeros(1, 0), IntegerMatrix.from_rows([[1]]))
    if name == RJ_NAME:
        return RModule(1, IntegerMatrix.zeros(1, 0), IntegerMatrix.from_rows([[-1]]))
    if name == I2I_NAME:
        return RModule(1, IntegerMatrix.from_rows([[2]]), IntegerMatrix.from_rows([[-1]]))
    raise ValueError(f"unknown indecomposable {name!r}")


def rmodule_from_multiset(multiset) -> RModule:
    mods = []
    for name in INDECOMPOSABLES:
        mods.extend([indecomposable(name)] * Counter(multiset)[name])
    if not mods:
        return RModule(0, IntegerMatrix.zeros(0, 0), IntegerMatrix.zeros(0, 0))
    out = mods[0]
    for m in mods[1:]:
        out = out.direct_sum(m)
    return out


def _two_torsion_count(group: FGAbelianGroup):
    """Number of Z/2 factors, or None if other torsion is present."""
    count = 0
    for f in group.torsion_orders:
        if f != 2:
            return None
        count += 1
    return count


def rmodule_classify(module: RModule) -> Counter:
    """Multiplicities of R, R/I, R/J and I/2I in a decomposable module.

    The fingerprint used is: the underlying group, the quotients by the
    images of (1 - t) and (1 + t), and the kernels of both operators.
    These separate all sums of the four indecomposables; a mismatch on any
    of them raises ClassificationError.
    """
    ident = IntegerMatrix.identity(module.rank)
    one_minus = IntegerMatrix(module.rank, module.rank, tuple(
        a - b for a, b in zip(ident.entries, module.action.entries)))
    one_plus = IntegerMatrix(module.rank, module.rank, tuple(
        a + b for a, b in zip(ident.entries, module.action.entries)))

    under = module.underlying_group()
    q_minus = module.quotient_by(one_minus)
    q_plus = module.quotient_by(one_plus)
    k_minus = module.kernel_of(one_minus)
    k_plus = module.kernel_of(one_plus)

    d = _two_torsion_count(under)
    t_minus = _two_torsion_count(q_minus)
    t_plus = _two_torsion_count(q_plus)
    if d is None or t_minus is None or t_plus is None:
        raise ClassificationError("torsion is not elementary 2-torsion")
    # M/(1-t)M carries one Z/2 per R/J or I/2I summand, M/(1+t)M one per
    # R/I or I/2I; what remains of the free rank is paired into copies of R.
    b = t_plus - d
    c = t_minus - d
    twice_a = under.free_rank - b - c
    if b < 0 or c < 0 or twice_a < 0 or twice_a % 2:
        raise ClassificationError("invariants match no sum of the four indecomposables")
    a = twice_a // 2

    expected = {
        "under": (2 * a + b + c, d),
        "q_minus": (a + b, c + d),
        "q_plus": (a + c, b + d),
        "k_minus": (a + b, d),
        "k_plus": (a + c, d),
    }
    actual = {}
    for key, grp in (("under", under), ("q_minus", q_minus), ("q_plus", q_plus),
                     ("k_minus", k_minus), ("k_plus", k_plus)):
        two = _two_torsion_count(grp)
        if two is None:
            raise ClassificationError(f"{key} has torsion other than Z/2: {grp}")
        actual[key] = (grp.free_rank, two)
    if expected != actual:
        raise ClassificationError(
            f"fingerprint mismatch: expected {expected}, computed {actual}")

    out = Counter()
    for name, mult in zip(INDECOMPOSABLES, (a, b, c, d)):
        if mult:
            out[name] = mult
    return out


def format_multiset(multiset: Counter) -> str:
    if not +Counter(multiset):
        return "0"
    parts = []
    for name in INDECOMPOSABLES:
        mult = Counter(multiset)[name]
        if mult == 1:
            parts.append(name)
        elif mult > 1:
            parts.append(f"({name})^{mult}")
    return " + ".join(parts)


# ---------------------------------------------------------------------------
# canonical coordinates on a quotient Z^n / lattice


class QuotientPresentation:
    """Computable coordinates on Z^n modulo a relation lattice.

    Elements are stored as canonical tuples: the Smith change of basis
    turns the quotient into a product of cyclic groups, so each coordinate
    is reduced modulo its order (free coordinates are kept as they are).
    """

    def __init__(self, n: int, relations: IntegerMatrix):
        if relations.rows != n:
            raise DimensionMismatchError("relations live in the wrong rank")
        self.n = n
        s = smith_normal_form(relations)
        self._u = s.u
        self._u_inv = inverse_unimodular(s.u)
        diag = s.diagonal()
        self.orders = tuple(diag[i] if i < len(diag) else 0 for i in range(n))

    def reduce(self, vector) -> tuple:
        y = self._u.apply(vector)
        return tuple(yi % d if d else yi for yi, d in zip(y, self.orders))

    def lift(self, coords) -> tuple:
        return self._u_inv.apply(coords)

    def add(self, c1, c2) -> tuple:
        return tuple((x + y) % d if d else x + y
                     for x, y, d in zip(c1, c2, self.orders))

    def zero(self) -> tuple:
        return (0,) * self.n

    def is_finite(self):
        return all(d != 0 for d in self.orders)

    def elements(self):
        if not self.is_finite():
            raise ValueError("quotient is infinite")
        return [tuple(c) for c in product(*(range(d) for d in self.orders))]

    def group(self) -> FGAbelianGroup:
        return FGAbelianGroup.from_orders(self.orders)
