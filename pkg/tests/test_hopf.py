"""Arrow bialgebra, filtration, coinvariants, truncations."""

import dataclasses
from fractions import Fraction

import pytest

from rackgraph.graphs import rack_to_graph
from rackgraph.hopf import (
    augmentation_filtration,
    build_lm_hopf,
    coinvariant_module,
    graded_primitive_subspace,
    group_ideal_levels,
    relative_ideal_levels,
    truncated_hopf,
    truncation_surjection,
    verify_connected_lemma,
    verify_edge_like,
    verify_graded_structure,
    verify_hopf,
)
from rackgraph.hopf import _tensor_subspace
from rackgraph.linalg import ExactMatrix, FieldSpec, Subspace
from rackgraph.racks import (
    conjugacy_class_rack,
    conjugation_rack,
    cyclic_group,
    dihedral_group_4,
    dihedral_quandle,
    inner_group,
    symmetric_group_3,
    toy_rack_c2,
    trivial_augmented_rack,
)

Q = FieldSpec.rationals()
F2 = FieldSpec.prime(2)
F3 = FieldSpec.prime(3)


def sample_racks():
    s3 = symmetric_group_3()
    transposition = next(x for x in range(6) if len(s3.conjugacy_class(x)) == 3)
    return {
        "toy_c2": toy_rack_c2(),
        "conj_c2": conjugation_rack(cyclic_group(2)),
        "conj_c3": conjugation_rack(cyclic_group(3)),
        "s3_transpositions": conjugacy_class_rack(s3, [transposition]),
        "c4_u2": conjugacy_class_rack(cyclic_group(4), [2]),
        "trivial_2": trivial_augmented_rack(2),
        "dihedral_3": inner_group(dihedral_quandle(3))[1],
    }


def hopf_of(rack, field):
    return build_lm_hopf(rack_to_graph(rack), field)


def test_structure_maps_on_the_two_element_example():
    # X = {x}, pi(x) = u over the order-two group; arrows indexed g|X|+x
    b = hopf_of(toy_rack_c2(), Q)
    assert (b.h_dim, b.a_dim) == (2, 2)
    # phi(1,x) = u - 1
    assert b.phi.column(0) == (Fraction(-1), Fraction(1))
    # coproduct of the arrow (1,x): (1,x)(x)u + 1(x)(1,x)
    col = {i: v for i, v in enumerate(b.delta1.column(0)) if v}
    off = b.a_dim * b.h_dim
    assert col == {0 * 2 + 1: Fraction(1), off + 0 * 2 + 0: Fraction(1)}
    # antipode of (1,x) is -(1,x) conjugated: s=1, t=u
    s1_col = {i: v for i, v in enumerate(b.s1.column(0)) if v}
    assert list(s1_col.values()) == [Fraction(-1)]


def test_hopf_identities_hold_for_samples_over_three_fields():
    for name, rack in sample_racks().items():
        for field in (Q, F2, F3):
            report = verify_hopf(hopf_of(rack, field))
            assert report.ok, (name, field.label(), report.violations[:3])
            assert report.checked > 0


def test_corrupted_antipode_is_detected():
    b = hopf_of(toy_rack_c2(), Q)
    rows = [list(r) for r in b.s1.entries]
    rows[0][0] += 1
    bad = dataclasses.replace(b, s1=ExactMatrix.from_rows(Q, rows))
    report = verify_hopf(bad)
    assert not report.ok
    assert any("antipode" in v for v in report.violations)


def test_corrupted_coproduct_is_detected():
    b = hopf_of(toy_rack_c2(), F3)
    rows = [list(r) for r in b.delta1.entries]
    rows[1][0] = (rows[1][0] + 1) % 3
    bad = dataclasses.replace(b, delta1=ExactMatrix.from_rows(F3, rows))
    assert not verify_hopf(bad).ok


def test_filtration_dims_two_element_example_mod_two():
    # (u+1)^2 = 0, so both chains die: dims 2,1,0 on A and on H
    f = augmentation_filtration(hopf_of(toy_rack_c2(), F2))
    assert [s.dim for s in f.levels_a] == [2, 1, 0, 0]
    assert [s.dim for s in f.levels_g[:3]] == [2, 1, 0]
    assert f.stab_a == 2 and f.stab_g == 2


def test_filtration_dims_two_element_example_rational():
    # over the rationals the ideal square equals the ideal
    f = augmentation_filtration(hopf_of(toy_rack_c2(), Q))
    assert [s.dim for s in f.levels_a] == [2, 1, 1]
    assert f.levels_a[1] == f.levels_a[2]
    assert f.stab_a == 1 and f.stab_g == 1


def test_rational_ideal_square_equals_ideal_for_finite_groups():
    for group in (cyclic_group(2), cyclic_group(3), symmetric_group_3(), dihedral_group_4()):
        levels, stab = group_ideal_levels(group, Q)
        assert levels[1] == levels[2]
        assert stab == 1


def test_explicit_depth_and_too_shallow_depth():
    b = hopf_of(toy_rack_c2(), F2)
    f = augmentation_filtration(b, depth=4)
    assert len(f.levels_a) == 5
    assert f.stab_a == 2
    with pytest.raises(RuntimeError):
        augmentation_filtration(b, depth=2)


def test_connected_lemma_for_connected_samples():
    for name in ("toy_c2", "s3_transpositions", "dihedral_3", "conj_c3"):
        rack = sample_racks()[name]
        for field in (Q, F2, F3):
            b = hopf_of(rack, field)
            f = augmentation_filtration(b)
            report = verify_connected_lemma(b, f)
            assert report.ok, (name, field.label(), report.violations[:3])


def test_connected_lemma_disconnected_sample():
    # X = {u^2} inside the cyclic group of order four: the unit component is
    # {1, u^2} and the image of phi at level 0 is the coset-collapse kernel
    rack = sample_racks()["c4_u2"]
    for field in (Q, F2, F3):
        b = hopf_of(rack, field)
        f = augmentation_filtration(b)
        report = verify_connected_lemma(b, f)
        assert report.ok, (field.label(), report.violations[:3])
        rel = relative_ideal_levels(b, (0, 2), len(f.levels_a))
        assert rel[1].dim == 2


def test_coinvariant_levels_s3_transpositions_mod_two():
    rack = sample_racks()["s3_transpositions"]
    c = coinvariant_module(rack, F2)
    # span{x0+x1, x1+x2} in canonical echelon form, stable from level one
    assert c.levels_x[1].basis == ((1, 0, 1), (0, 1, 1))
    assert c.levels_x[2] == c.levels_x[1]
    assert c.p_dims == (1, 0)
    assert c.stab_x == 1


def test_coinvariant_levels_trivial_actions():
    c = coinvariant_module(trivial_augmented_rack(3), Q)
    assert c.p_dims == (3, 0)
    c = coinvariant_module(sample_racks()["conj_c2"], F3)
    assert c.p_dims == (2, 0)


def test_pi_star_two_element_example_mod_two():
    c = coinvariant_module(toy_rack_c2(), F2)
    assert c.p_dims[0] == 1
    assert c.pi_star[0].entries == ((1,),)


def test_graded_dimension_identity_and_raising():
    for name in ("toy_c2", "s3_transpositions", "c4_u2", "trivial_2", "conj_c2"):
        rack = sample_racks()[name]
        b = hopf_of(rack, F2)
        f = augmentation_filtration(b)
        c = coinvariant_module(rack, F2)
        report = verify_graded_structure(b, f, c)
        assert report.ok, (name, report.violations[:3])


def test_graded_dims_two_element_example():
    f = augmentation_filtration(hopf_of(toy_rack_c2(), F2))
    dims = [s.dim for s in f.levels_a]
    gr = [dims[i] - dims[i + 1] for i in range(len(dims) - 1)]
    assert gr == [1, 1, 0]


def test_module_levels_split_as_tensor_sums():
    # under (g, x) -> g (x) x the n-th level of A is the sum of
    # (ideal power p) (x) (label level q) over p + q = n
    for name in ("toy_c2", "s3_transpositions", "c4_u2"):
        rack = sample_racks()[name]
        b = hopf_of(rack, F2)
        f = augmentation_filtration(b)
        c = coinvariant_module(rack, F2)
        for n in range(len(f.levels_a)):
            expected = Subspace.zero(F2, b.a_dim)
            for p in range(n + 1):
                q = min(n - p, len(c.levels_x) - 1)
                gp = f.levels_g[min(p, len(f.levels_g) - 1)]
                expected = expected.add(_tensor_subspace(gp, c.levels_x[q]))
            assert f.levels_a[n] == expected, (name, n)


def test_truncation_dims_two_element_example():
    rack = toy_rack_c2()
    b2 = hopf_of(rack, F2)
    f2 = augmentation_filtration(b2)
    t = truncated_hopf(b2, f2, 1)
    assert (t.qa.dim, t.qh.dim) == (1, 2)
    bq = hopf_of(rack, Q)
    fq = augmentation_filtration(bq)
    tq = truncated_hopf(bq, fq, 1)
    assert (tq.qa.dim, tq.qh.dim) == (1, 1)


def test_truncation_edge_like_and_corruption():
    rack = sample_racks()["s3_transpositions"]
    b = hopf_of(rack, F2)
    f = augmentation_filtration(b)
    t = truncated_hopf(b, f, 1)
    report = verify_edge_like(t, b)
    assert report.ok, report.violations[:3]
    if t.delta1_n.nrows and t.delta1_n.ncols:
        rows = [list(r) for r in t.delta1_n.entries]
        rows[0][0] = (rows[0][0] + 1) % 2
        bad = dataclasses.replace(t, delta1_n=ExactMatrix.from_rows(F2, rows))
        assert not verify_edge_like(bad, b).ok


def test_truncation_tower_composes():
    b = hopf_of(toy_rack_c2(), F2)
    f = augmentation_filtration(b)
    t0, t1, t2 = (truncated_hopf(b, f, n) for n in range(3))
    a21, h21 = truncation_surjection(t2, t1)
    a10, h10 = truncation_surjection(t1, t0)
    a20, h20 = truncation_surjection(t2, t0)
    assert a10.mul(a21).entries == a20.entries
    assert h10.mul(h21).entries == h20.entries
    with pytest.raises(ValueError):
        truncation_surjection(t0, t2)


def test_pi_star_lands_in_graded_primitives():
    for name in ("toy_c2", "s3_transpositions"):
        rack = sample_racks()[name]
        b = hopf_of(rack, F2)
        f = augmentation_filtration(b)
        c = coinvariant_module(rack, F2)
        for n, mat in enumerate(c.pi_star):
            if n + 2 >= len(f.levels_g) or mat.ncols == 0 or mat.nrows == 0:
                continue
            prim = graded_primitive_subspace(b, f, n + 1)
            for j in range(mat.ncols):
                assert prim.contains(list(mat.column(j))), (name, n)
