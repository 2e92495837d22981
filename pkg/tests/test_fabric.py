import pytest

from qfab import modules as md, homology as hm, fabric as fb
from qfab.algebra import build_algebra, corner, quotient_by_idempotent_ideal, quiver_of
from qfab.errors import ConditionFailed, ProjDimTooBig, NoCompanionFound
from qfab.fixtures import fixture


def test_double_triangle_both_checks_agree(double_triangle):
    A = double_triangle
    ec, tr = fb.check_fabric_combinatorial(A, ["2", "3", "5"])
    ed, _ = fb.check_fabric_definitional(A, ["2", "3", "5"])
    assert sorted(ec) == ["1", "3", "4"]
    assert sorted(ed) == ["1", "3", "4"]
    assert tr["iprime"] == {"1": "2", "4": "5"}


def test_empty_f_is_trivially_fabric(double_triangle):
    A = double_triangle
    ec, _ = fb.check_fabric_combinatorial(A, [])
    assert sorted(ec) == sorted(A.vertices)
    ed, _ = fb.check_fabric_definitional(A, [])
    assert sorted(ed) == sorted(A.vertices)


def test_full_f_is_vacuously_fabric(double_triangle):
    A = double_triangle
    ed, _ = fb.check_fabric_definitional(A, list(A.vertices))
    assert sorted(ed) == sorted(A.vertices)


def test_two_ag_fabric(two_ag):
    ec, _ = fb.check_fabric_combinatorial(two_ag, ["2", "3", "4"])
    ed, _ = fb.check_fabric_definitional(two_ag, ["2", "3", "4"])
    assert sorted(ec) == sorted(ed) == ["1", "2", "3"]


def test_proj_dim_precondition_rejects(double_triangle):
    # killing only vertex 3 leaves a quotient of projective dimension > 1
    with pytest.raises(ProjDimTooBig):
        fb.check_fabric_combinatorial(double_triangle, ["3"])


def test_fabric_dimension_double_triangle(double_triangle):
    per, sup = fb.fabric_dimension(double_triangle, ["2", "3", "5"])
    assert {v: d.value for v, d in per.items()} == {"1": 1, "4": 1}
    assert sup == 1


def test_fabric_dimension_stable_under_seed(double_triangle):
    per1, sup1 = fb.fabric_dimension(double_triangle, ["2", "3", "5"], seed=1)
    per2, sup2 = fb.fabric_dimension(double_triangle, ["2", "3", "5"], seed=99)
    assert {v: repr(d) for v, d in per1.items()} == \
        {v: repr(d) for v, d in per2.items()}
    assert repr(sup1) == repr(sup2)


def test_exact_sequence_reconstruction(double_triangle):
    A = double_triangle
    _, tr = fb.check_fabric_combinatorial(A, ["2", "3", "5"])
    Abar = quotient_by_idempotent_ideal(A, ["2", "3", "5"])
    for i, ip in tr["iprime"].items():
        P = md.inflate_from_quotient(md.projective_module(Abar, i), A)
        K = hm.syzygy(P, 1)
        assert bool(md.is_isomorphic(K, md.projective_module(A, ip), seed=1))


def test_special_tilting_double_triangle(double_triangle):
    T, tr = fb.special_tilting_module(double_triangle, ["2", "3", "5"],
                                      ["1", "3", "4"])
    assert tr["proj_dim"].le(1)
    assert tr["ext1"] == 0
    assert tr["T0_in_add_Ae"] is True


def test_special_tilting_trivial_f(double_triangle):
    A = double_triangle
    T, tr = fb.special_tilting_module(A, [], list(A.vertices))
    assert tr["proj_dim"] == 0
    assert tr["ext1"] == 0


def test_special_tilting_two_ag(two_ag):
    T, tr = fb.special_tilting_module(two_ag, ["2", "3", "4"], ["1", "2", "3"])
    assert tr["proj_dim"].le(1) and tr["ext1"] == 0


def test_singular_reduction_double_triangle(double_triangle):
    C, cert = fb.singular_reduction(double_triangle, ["2", "3", "5"])
    assert C.dim == 10
    assert cert["quotient_gl_dim"].is_finite
    assert cert["corner_proj_dim_fA"].is_finite
    assert cert["singular_equivalence"] is True


def test_cofabric_is_fabric_on_the_opposite(double_triangle, two_ag):
    A = double_triangle
    # internal consistency: the cofabric test is the fabric test on A^op
    for F in ([], ["2", "3", "5"], list(A.vertices)):
        try:
            e1, _ = fb.cofabric_check(A, F)
        except (ProjDimTooBig, NoCompanionFound) as exc1:
            with pytest.raises(type(exc1)):
                fb.check_fabric_definitional(A.opposite(), F)
            continue
        e2, _ = fb.check_fabric_definitional(A.opposite(), F)
        assert sorted(e1) == sorted(e2)
    # derived by enumeration: neither example algebra admits a nontrivial
    # cofabric idempotent (their zero-circuit relations sit at the vertices
    # the reversal would need to contract)
    from itertools import combinations
    for B in (A, two_ag):
        found = []
        for r in range(B.n_vertices + 1):
            for F in combinations(B.vertices, r):
                try:
                    fb.cofabric_check(B, list(F))
                    found.append(F)
                except (ProjDimTooBig, NoCompanionFound):
                    pass
        assert found == [(), tuple(B.vertices)]


def test_cofabric_dimension_runs_on_opposite(double_triangle):
    per, sup = fb.cofabric_dimension(double_triangle, ["2", "3", "5"])
    # syzygy chains over the opposite algebra close, so values are certified
    assert all(d.kind in ("finite", "infinite") for d in per.values())


def test_generator_switching_double_triangle(double_triangle):
    rep = fb.verify_generator_switching(double_triangle, ["2", "3", "5"],
                                        ["1", "3", "4"], sample_budget=12,
                                        seed=0)
    assert rep["violations"] == []
    assert rep["gor_dim"] == 2
    assert rep["h_level"] == 1


def test_minimal_gen_level(double_triangle):
    assert fb.minimal_gen_level(double_triangle, ["1", "3", "4"]) == 1
    assert fb.minimal_gen_level(double_triangle,
                                list(double_triangle.vertices)) == "inf"


def test_analyze_fabric_report(double_triangle):
    rep = fb.analyze_fabric(double_triangle, ["2", "3", "5"],
                            h=["1", "3", "4"])
    assert rep.combinatorial["verdict"] and rep.definitional["verdict"]
    assert rep.e == ("1", "3", "4")
    assert rep.fab_dim == 1
    assert rep.h_level == 1


def test_canonical_221_observed_behavior():
    """The straight resolution of the duplicated-label figure: the corner
    chain works and a definitional companion exists, while the printed
    quiver violates combinatorial condition (2)."""
    A = build_algebra(fixture("canonical-2-221"))
    F = ["1", "2", "4", "6", "8"]
    with pytest.raises(ConditionFailed):
        fb.check_fabric_combinatorial(A, F)
    e, _ = fb.check_fabric_definitional(A, F, seed=0)
    assert sorted(e) == ["3", "5", "7"]
    C, cert = fb.singular_reduction(A, F)
    assert C.dim == build_algebra(fixture("canonical-2-211")).dim == 30


def test_canonical_chain_to_beilinson():
    from qfab.algebra import find_isomorphism_with_signs
    A221 = build_algebra(fixture("canonical-2-221"))
    C1 = corner(A221, ["1", "2", "4", "6", "8"])
    p211 = fixture("canonical-2-211")
    # the corner has two-dimensional arrow blocks along the collapsed arms,
    # so alignment needs explicit images: compare dimensions and quivers
    ext = quiver_of(C1)
    got = sorted((a.source, a.target) for a in ext.presentation.quiver.arrows)
    want = sorted((a.source, a.target) for a in p211.quiver.arrows)
    assert got == want
    A211 = build_algebra(p211)
    assert C1.dim == A211.dim
    # second contraction: F' = {1,4,8}
    F2 = ["1", "4", "8"]
    e2, _ = fb.check_fabric_definitional(A211, F2, seed=0)
    assert e2 is not None
    C2 = corner(A211, F2)
    B2 = build_algebra(fixture("beilinson-2"))
    assert C2.dim == B2.dim == 15
    ext2 = quiver_of(C2)
    got2 = sorted((a.source, a.target) for a in ext2.presentation.quiver.arrows)
    want2 = sorted((a.source, a.target) for a in fixture("beilinson-2").quiver.arrows)
    assert got2 == want2
