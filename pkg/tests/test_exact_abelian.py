import random
from collections import Counter
from itertools import combinations, combinations_with_replacement
from math import gcd

import pytest

from kdual.exact_abelian import (
    ClassificationError,
    DimensionMismatchError,
    FGAbelianGroup,
    GroupHom,
    IntegerMatrix,
    INDECOMPOSABLES,
    QuotientPresentation,
    RModule,
    cokernel,
    exactness_check,
    indecomposable,
    inverse_unimodular,
    kernel_basis,
    lattice_contains,
    preimage_lattice,
    rmodule_classify,
    rmodule_from_multiset,
    smith_normal_form,
    solve,
    subquotient_group,
)


# --- independent oracle: invariant factors via gcds of minors --------------


def minor_gcd_invariant_factors(matrix: IntegerMatrix):
    """Invariant factors computed from determinantal divisors only."""

    def minor_det(rows, cols):
        sub = [[matrix.entry(i, j) for j in cols] for i in rows]
        n = len(sub)
        if n == 0:
            return 1
        if n == 1:
            return sub[0][0]
        total = 0
        for j in range(n):
            sign = (-1) ** j
            rest = [row[:j] + row[j + 1:] for row in sub[1:]]
            total += sign * sub[0][j] * _det(rest)
        return total

    def _det(rows):
        n = len(rows)
        if n == 1:
            return rows[0][0]
        total = 0
        for j in range(n):
            rest = [row[:j] + row[j + 1:] for row in rows[1:]]
            total += (-1) ** j * rows[0][j] * _det(rest)
        return total

    divisors = [1]
    for k in range(1, min(matrix.rows, matrix.cols) + 1):
        g = 0
        for rows in combinations(range(matrix.rows), k):
            for cols in combinations(range(matrix.cols), k):
                g = gcd(g, minor_det(rows, cols))
        if g == 0:
            break
        divisors.append(abs(g))
    factors = [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]
    rank = len(factors)
    free = matrix.rows - rank
    torsion = sorted(f for f in factors if f > 1)
    return tuple(torsion) + (0,) * free


def random_matrix(rng, rows, cols, bound=9):
    return IntegerMatrix(rows, cols,
                         tuple(rng.randint(-bound, bound) for _ in range(rows * cols)))


def random_unimodular(rng, n, steps=12):
    rows = IntegerMatrix.identity(n).to_rows()
    for _ in range(steps):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.randint(-2, 2)
        rows[i] = [a + q * b for a, b in zip(rows[i], rows[j])]
    return IntegerMatrix.from_rows(rows)


# --- Smith normal form -------------------------------------------------------


def test_snf_identity():
    m = IntegerMatrix.identity(3)
    s = smith_normal_form(m)
    assert s.d == m
    assert s.u @ m @ s.v == s.d


def test_snf_reorders_divisibility():
    m = IntegerMatrix.diagonal([4, 2])
    s = smith_normal_form(m)
    assert s.diagonal() == [2, 4]
    assert s.u @ m @ s.v == s.d


def test_snf_worked_example():
    m = IntegerMatrix.from_rows([[2, 4], [6, 8]])
    # independent determinantal check: gcd of entries 2, determinant -8
    assert minor_gcd_invariant_factors(m) == (2, 4)
    s = smith_normal_form(m)
    assert s.diagonal() == [2, 4]
    assert s.u @ m @ s.v == s.d


def test_snf_round_trip_random():
    rng = random.Random(20260808)
    for _ in range(1000):
        rows = rng.randint(0, 4)
        cols = rng.randint(0, 4)
        m = random_matrix(rng, rows, cols)
        s = smith_normal_form(m)
        assert s.u @ m @ s.v == s.d
        diag = s.diagonal()
        assert all(d >= 0 for d in diag)
        for a, b in zip(diag, diag[1:]):
            if a:
                assert b % a == 0
            else:
                assert b == 0
        # unimodularity via the decomposition of the transforms themselves
        assert smith_normal_form(s.u).diagonal() == [1] * rows
        assert smith_normal_form(s.v).diagonal() == [1] * cols


def test_snf_matches_minor_oracle():
    rng = random.Random(11)
    for _ in range(120):
        m = random_matrix(rng, rng.randint(1, 3), rng.randint(1, 3), bound=6)
        diag = smith_normal_form(m).diagonal()
        factors = tuple(sorted(d for d in diag if d > 1)) + \
            (0,) * (m.rows - sum(1 for d in diag if d))
        assert factors == minor_gcd_invariant_factors(m)


def test_snf_deterministic():
    rng = random.Random(7)
    m = random_matrix(rng, 4, 4)
    first = smith_normal_form(m)
    second = smith_normal_form(m)
    assert first == second


def test_snf_large_entries():
    rng = random.Random(271828)
    for _ in range(50):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6), bound=10 ** 6)
        s = smith_normal_form(m)
        assert s.u @ m @ s.v == s.d
        diag = [d for d in s.diagonal() if d]
        for a, b in zip(diag, diag[1:]):
            assert b % a == 0
        assert smith_normal_form(s.u).diagonal() == [1] * m.rows


# --- cokernels ---------------------------------------------------------------


def test_cokernel_zero_matrix_is_free():
    assert cokernel(IntegerMatrix.zeros(1, 1)) == FGAbelianGroup((0,))


def test_cokernel_single_relation():
    group = cokernel(IntegerMatrix.from_rows([[2]]))
    assert group == FGAbelianGroup((2,))
    # coset enumeration oracle: representatives 0 and 1 are distinct, 2 ~ 0
    lattice = IntegerMatrix.from_rows([[2]])
    assert not lattice_contains(lattice, (1,))
    assert lattice_contains(lattice, (2,))


def test_cokernel_of_sign_representation_quotient():
    # generators 1, t with the relations of Z[t]/(t^2 - 1, 1 + t)
    m = IntegerMatrix.from_rows([[1, 1], [1, 1]])
    assert cokernel(m) == FGAbelianGroup((0,))
    # coset enumeration: (x, y) ~ (x - y, 0), difference is a bijection to Z
    lattice = m
    rng = random.Random(5)
    for _ in range(50):
        x, y = rng.randint(-8, 8), rng.randint(-8, 8)
        rep = (x - y, 0)
        diff = (x - rep[0], y - rep[1])
        assert lattice_contains(lattice, diff)
    assert minor_gcd_invariant_factors(m) == (0,)


def test_cokernel_invariant_under_unimodular_changes():
    rng = random.Random(99)
    for _ in range(60):
        m = random_matrix(rng, 3, 3, bound=5)
        u = random_unimodular(rng, 3)
        v = random_unimodular(rng, 3)
        assert cokernel(m) == cokernel(u @ m @ v)


def test_group_canonicalization():
    assert FGAbelianGroup.from_orders([4, 2, 0]) == FGAbelianGroup((2, 4, 0))
    assert FGAbelianGroup.from_orders([2, 3]) == FGAbelianGroup((6,))
    assert FGAbelianGroup.from_orders([1, 1]) == FGAbelianGroup(())
    with pytest.raises(ValueError):
        FGAbelianGroup((4, 2))
    with pytest.raises(ValueError):
        FGAbelianGroup((0, 2))


def test_solver_and_kernels():
    m = IntegerMatrix.from_rows([[2, 0], [0, 3]])
    assert solve(m, (4, 9)) == (2, 3)
    assert solve(m, (1, 0)) is None
    k = kernel_basis(IntegerMatrix.from_rows([[1, 1]]))
    assert k.cols == 1
    x = k.column(0)
    assert x[0] + x[1] == 0 and x != (0, 0)


def test_inverse_unimodular():
    rng = random.Random(3)
    for _ in range(25):
        u = random_unimodular(rng, 3)
        assert u @ inverse_unimodular(u) == IntegerMatrix.identity(3)


def test_quotient_presentation_coordinates():
    pres = QuotientPresentation(2, IntegerMatrix.from_rows([[1], [1]]))
    assert pres.group() == FGAbelianGroup((0,))
    a = pres.reduce((3, 1))
    b = pres.reduce((5, 3))
    assert a == b  # differ by (2, 2), twice the relation
    finite = QuotientPresentation(1, IntegerMatrix.from_rows([[4]]))
    assert sorted(finite.elements()) == [(0,), (1,), (2,), (3,)]


# --- homomorphisms and exactness ---------------------------------------------


def test_hom_well_definedness():
    z2 = FGAbelianGroup((2,))
    z = FGAbelianGroup((0,))
    GroupHom(z2, z2, IntegerMatrix.from_rows([[1]]))
    with pytest.raises(ValueError):
        GroupHom(z2, z, IntegerMatrix.from_rows([[1]]))  # 2 * 1 != 0 in Z


def test_exactness_multiplication_sequence():
    z = FGAbelianGroup((0,))
    z2 = FGAbelianGroup((2,))
    times2 = GroupHom(z, z, IntegerMatrix.from_rows([[2]]))
    to_quotient = GroupHom(z, z2, IntegerMatrix.from_rows([[1]]))
    assert exactness_check(times2, to_quotient)
    identity = GroupHom(z, z, IntegerMatrix.from_rows([[1]]))
    assert not exactness_check(times2, identity)


def test_exactness_split_point_sequence():
    # Z -> Z -> 0 with the first map an isomorphism
    z = FGAbelianGroup((0,))
    zero = FGAbelianGroup(())
    f = GroupHom(z, z, IntegerMatrix.from_rows([[1]]))
    g = GroupHom(z, zero, IntegerMatrix.zeros(0, 1))
    assert exactness_check(f, g)


def test_exactness_with_torsion_middle():
    z4 = FGAbelianGroup((4,))
    times2 = GroupHom(z4, z4, IntegerMatrix.from_rows([[2]]))
    assert exactness_check(times2, times2)  # im(2) = ker(2) = 2Z/4
    times1 = GroupHom(z4, z4, IntegerMatrix.from_rows([[1]]))
    assert not exactness_check(times2, times1)


def test_exactness_requires_composability():
    z = FGAbelianGroup((0,))
    z2 = FGAbelianGroup((2,))
    f = GroupHom(z, z, IntegerMatrix.from_rows([[2]]))
    g = GroupHom(z2, z2, IntegerMatrix.from_rows([[1]]))
    with pytest.raises(DimensionMismatchError):
        exactness_check(f, g)


def test_kernel_and_cokernel_groups():
    z = FGAbelianGroup((0,))
    times6 = GroupHom(z, z, IntegerMatrix.from_rows([[6]]))
    assert times6.kernel_group() == FGAbelianGroup(())
    assert times6.cokernel_group() == FGAbelianGroup((6,))


# --- module classification ----------------------------------------------------


def test_classify_the_four_indecomposables():
    for name in INDECOMPOSABLES:
        assert rmodule_classify(indecomposable(name)) == Counter({name: 1})


def test_classify_swap_is_regular():
    module = RModule.from_group(FGAbelianGroup((0, 0)),
                                IntegerMatrix.from_rows([[0, 1], [1, 0]]))
    assert rmodule_classify(module) == Counter({"R": 1})


def test_classify_sign_action():
    module = RModule.from_group(FGAbelianGroup((0,)), IntegerMatrix.from_rows([[-1]]))
    assert rmodule_classify(module) == Counter({"R/J": 1})


def test_action_must_be_involution():
    with pytest.raises(ValueError):
        RModule.from_group(FGAbelianGroup((0,)), IntegerMatrix.from_rows([[2]]))


def test_classification_failure_detected():
    # Z/4 is not a sum of the four indecomposables
    module = RModule.from_group(FGAbelianGroup((4,)), IntegerMatrix.from_rows([[1]]))
    with pytest.raises(ClassificationError):
        rmodule_classify(module)


def test_classify_exhaustive_up_to_eight_summands():
    for size in range(0, 9):
        for combo in combinations_with_replacement(INDECOMPOSABLES, size):
            multiset = Counter(combo)
            module = rmodule_from_multiset(multiset)
            assert rmodule_classify(module) == +multiset, multiset


def test_classify_direct_sum_is_multiset_union():
    rng = random.Random(42)
    for _ in range(60):
        left = Counter({name: rng.randint(0, 2) for name in INDECOMPOSABLES})
        right = Counter({name: rng.randint(0, 2) for name in INDECOMPOSABLES})
        total = rmodule_from_multiset(left).direct_sum(rmodule_from_multiset(right))
        assert rmodule_classify(total) == +(left + right)


def test_classify_invariant_under_base_change():
    rng = random.Random(17)
    for _ in range(40):
        multiset = Counter({name: rng.randint(0, 2) for name in INDECOMPOSABLES})
        module = rmodule_from_multiset(multiset)
        if module.rank == 0:
            continue
        u = random_unimodular(rng, module.rank)
        u_inv = inverse_unimodular(u)
        changed = RModule(module.rank, u @ module.relations,
                          u @ module.action @ u_inv)
        assert rmodule_classify(changed) == +multiset


def test_subquotient_and_preimage():
    # kernel of multiplication by 2 on Z/4: the subgroup 2Z/4 = Z/2
    op = IntegerMatrix.from_rows([[2]])
    lattice = IntegerMatrix.from_rows([[4]])
    pre = preimage_lattice(op, lattice)
    assert subquotient_group(pre, lattice) == FGAbelianGroup((2,))


def test_matrix_serialization_round_trip():
    m = IntegerMatrix.from_rows([[1, -2], [3, 4]])
    assert IntegerMatrix.from_json(m.to_json()) == m
    g = FGAbelianGroup((2, 4, 0))
    assert FGAbelianGroup.from_json(g.to_json()) == g
