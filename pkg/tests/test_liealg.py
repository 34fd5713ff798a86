"""Lie algebra pairs, the derived Leibniz bracket, and graded truncations.

Frozen dimensions come from independent counts: plain-convention slices of
the free Lie algebra follow the Witt formula (2, 1, 2 for two generators in
degrees 1..3), and signed-convention slices follow the super analogue
computed through the Poincare series of the free associative algebra
(1 generator: 1, 1, 0; 2 generators: 2, 3, 2 in degrees 1..3).
"""

import dataclasses
from fractions import Fraction

import pytest

from rackgraph.liealg import (
    KOSZUL,
    PLAIN,
    LeibnizAlgebra,
    LMLieAlgebra,
    apply_differential,
    e_functor,
    free_generators,
    induced_degree_maps,
    leibniz_bracket,
    nilpotent_pair,
    one_generator,
    sl2_adjoint,
    table_bracket,
    validate_lm_lie,
    verify_e_truncation,
    verify_leibniz,
)


def test_sl2_validates():
    report = validate_lm_lie(sl2_adjoint())
    assert report.ok, report.violations


def test_sl2_leibniz_equals_lie_bracket():
    l = sl2_adjoint()
    b = leibniz_bracket(l)
    for i in range(3):
        for j in range(3):
            assert b.bracket[i][j] == l.c[i][j]


def test_corrupt_structure_constants_detected():
    l = sl2_adjoint()
    c = [[list(v) for v in plane] for plane in l.c]
    c[0][1] = [0, 3, 0]
    c[1][0] = [0, -3, 0]
    bad = LMLieAlgebra.make(c, l.rho, l.f)
    report = validate_lm_lie(bad)
    assert not report.ok
    assert any("Jacobi" in v for v in report.violations)


def test_corrupt_action_detected():
    l = sl2_adjoint()
    rho = [[list(r) for r in mat] for mat in l.rho]
    rho[0][0][0] += 1
    bad = LMLieAlgebra.make(l.c, rho, l.f)
    report = validate_lm_lie(bad)
    assert not report.ok
    assert any("module axiom" in v or "equivariance" in v for v in report.violations)


def test_nilpotent_pair_valid_but_not_lie():
    l = nilpotent_pair()
    assert validate_lm_lie(l).ok
    b = leibniz_bracket(l)
    assert b.bracket[1][1] == (Fraction(1), Fraction(0))
    assert b.bracket[0][1] == (Fraction(0), Fraction(0))
    assert b.bracket[1][0] == (Fraction(0), Fraction(0))
    # the square of m2 is nonzero, so the bracket is not antisymmetric
    assert any(b.bracket[1][1])


def test_non_leibniz_table_detected():
    one = Fraction(1)
    zero = Fraction(0)
    table = tuple(tuple((one, zero) for _ in range(2)) for _ in range(2))
    report = verify_leibniz(LeibnizAlgebra(2, table))
    assert not report.ok
    assert "Leibniz" in report.violations[0]


def test_one_generator_dims_koszul():
    t = e_functor(one_generator(), 3, KOSZUL)
    assert t.dims == (0, 1, 1, 0)


def test_one_generator_dims_plain():
    t = e_functor(one_generator(), 3, PLAIN)
    assert t.dims == (0, 1, 0, 0)


def test_two_generator_witt_dims_plain():
    t = e_functor(free_generators(2), 3, PLAIN)
    assert t.dims == (0, 2, 1, 2)


def test_two_generator_koszul_symmetric_square():
    t = e_functor(free_generators(2), 2, KOSZUL)
    assert t.dims == (0, 2, 3)


def test_nilpotent_truncation_dims_both_conventions():
    assert e_functor(nilpotent_pair(), 3, KOSZUL).dims == (1, 2, 3, 2)
    assert e_functor(nilpotent_pair(), 3, PLAIN).dims == (1, 2, 1, 2)


@pytest.mark.parametrize(
    "l, degree, convention",
    [
        (sl2_adjoint(), 2, KOSZUL),
        (nilpotent_pair(), 3, KOSZUL),
        (nilpotent_pair(), 3, PLAIN),
        (one_generator(), 3, KOSZUL),
        (free_generators(2), 3, PLAIN),
    ],
)
def test_truncation_identities(l, degree, convention):
    t = e_functor(l, degree, convention)
    report = verify_e_truncation(t, l)
    assert report.ok, report.violations[:3]


def test_plain_convention_reports_dd_failure_for_nonabelian_image():
    # with ordinary signs, d.d on a pair u, v picks up 2 [f(u), f(v)]; the
    # adjoint module with f = id makes that nonzero, and the check says so
    l = sl2_adjoint()
    t = e_functor(l, 2, PLAIN)
    report = verify_e_truncation(t, l)
    assert not report.ok
    assert any("d.d" in v for v in report.violations)
    assert all("derivation" not in v for v in report.violations)


def test_nilpotent_differential_values():
    l = nilpotent_pair()
    t = e_functor(l, 3, KOSZUL)
    assert t.differential[1] == l.f
    assert t.basis_words[2] == ((0, 0), (1, 0), (1, 1))
    # d[m2, m2] = [f(m2), m2] - [m2, f(m2)] = -2 (m2 acted by a) = -2 m1,
    # while the other squares die because f(m1) = 0 and the action kills m1
    zero = (Fraction(0), Fraction(0))
    assert t.differential[2] == (zero, zero, (Fraction(-2), Fraction(0)))


def test_empty_module_collapses_to_degree_zero():
    zero3 = [[0, 0], [0, 0]]
    l = LMLieAlgebra.make([zero3, zero3], [[], []], [], dim_g=2, dim_m=0)
    assert validate_lm_lie(l).ok
    t = e_functor(l, 3, KOSZUL)
    assert t.dims == (2, 0, 0, 0)
    assert verify_e_truncation(t, l).ok


def test_bad_arguments():
    with pytest.raises(ValueError):
        e_functor(one_generator(), 3, "twisted")
    with pytest.raises(ValueError):
        e_functor(one_generator(), 0, KOSZUL)
    with pytest.raises(ValueError, match="budget"):
        e_functor(free_generators(12), 5, PLAIN)


def test_tampered_table_detected():
    l = nilpotent_pair()
    t = e_functor(l, 2, KOSZUL)
    tables = dict(t.bracket)
    broken = [list(map(list, row)) for row in tables[(1, 1)]]
    # leak the square of m2 into [m1, m1]; its differential is nonzero,
    # so the derivation rule must notice
    broken[0][0][2] += 1
    tables[(1, 1)] = tuple(tuple(tuple(v) for v in row) for row in broken)
    bad = dataclasses.replace(t, bracket=tables)
    report = verify_e_truncation(bad, l)
    assert not report.ok
    assert any("derivation" in v or "antisymmetry" in v for v in report.violations)


def _apply(rows, vec):
    n = len(rows[0]) if rows else 0
    out = [Fraction(0)] * n
    for j, c in enumerate(vec):
        if c:
            for k in range(n):
                out[k] += Fraction(c) * rows[j][k]
    return out


def test_induced_maps_commute_with_structure():
    l = nilpotent_pair()
    t = e_functor(l, 3, KOSZUL)
    h0 = [[2]]
    h1 = [[4, 0], [0, 2]]
    maps = induced_degree_maps(t, h0, h1)
    assert maps[1] == ((Fraction(4), Fraction(0)), (Fraction(0), Fraction(2)))
    for (p, q), tab in t.bracket.items():
        if p + q > t.max_degree:
            continue
        for i in range(t.dims[p]):
            for j in range(t.dims[q]):
                xi = [Fraction(int(a == i)) for a in range(t.dims[p])]
                yj = [Fraction(int(a == j)) for a in range(t.dims[q])]
                lhs = _apply(maps[p + q], tab[i][j]) if t.dims[p + q] else []
                rhs = table_bracket(t, p, _apply(maps[p], xi), q, _apply(maps[q], yj))
                assert lhs == rhs, (p, q, i, j)
    for n in range(1, t.max_degree + 1):
        for j in range(t.dims[n]):
            basis = [Fraction(int(a == j)) for a in range(t.dims[n])]
            lhs = _apply(maps[n - 1], apply_differential(t, n, basis))
            rhs = apply_differential(t, n, _apply(maps[n], basis))
            assert lhs == rhs, (n, j)
