import pytest

from cocover import GF, QQ
from cocover.coalgebra import (group_like_coalgebra, matrix_coalgebra, path_coalgebra,
                               truncated_divided_power)
from cocover.props import (FLAGS, coalgebra_report, verify_cocommutative_theorem,
                           verify_coprime_dichotomy, verify_cosemisimple_flat,
                           verify_nonsingular_equivalences)

from corpus import AB, MORE_QUIVERS, SOCLE_QUIVERS, corpus_coalgebras, triangular_coalgebra

CORPUS = corpus_coalgebras()


def test_report_matrix_coalgebra():
    r = coalgebra_report(matrix_coalgebra(QQ, 2))
    for flag in FLAGS:
        assert r.values[flag] is True, flag
    assert r.cover_summary["d_dim"] == 4 and r.cover_summary["kernel_dim"] == 0


def test_report_path_ab():
    r = coalgebra_report(path_coalgebra(AB))
    assert r.non_singular and r.hereditary and not r.cosemisimple
    assert r.radical_dim == 1 and r.coradical_dim == 2
    assert r.cover_summary["d_dim"] == 4
    assert r.certificates["non_singular"] == {"singular_submodule": []}
    assert r.errors == {} and r.internal_failures == []


def test_report_divided_power():
    r = coalgebra_report(truncated_divided_power(QQ, 3))
    assert not r.non_singular and not r.cosemisimple
    assert len(r.certificates["non_singular"]["singular_submodule"]) == 2


def test_report_triangular_dual():
    r = coalgebra_report(triangular_coalgebra())
    assert r.non_singular is True and r.hereditary is False
    assert r.copolyform_right is True and r.copolyform_left is False


def test_report_is_per_flag_isolated():
    from cocover.algebra import algebra_from_matrices, dual_coalgebra_of_algebra
    from cocover.linalg import Mat
    f4 = algebra_from_matrices(GF(2), [Mat.identity(GF(2), 2), Mat(GF(2), [[0, 1], [1, 1]])])
    r = coalgebra_report(dual_coalgebra_of_algebra(f4))
    assert r.cosemisimple is True and r.radical_dim == 0
    assert r.hereditary is True
    for flag in ("coprime_simple", "copolyform_left", "self_injective_dual", "cover_summary"):
        assert r.values[flag] is None and r.errors[flag].startswith("NonSplit")
    assert r.internal_failures == []


@pytest.mark.parametrize("name", list(CORPUS))
def test_certificates_recompute(name):
    from cocover.algebra import jacobson_radical
    from cocover.coalgebra import coradical, dual_algebra
    c = CORPUS[name]
    r = coalgebra_report(c, with_cover=False)
    assert len(r.certificates["radical_dim"]["radical"]) == jacobson_radical(dual_algebra(c)).dim
    assert len(r.certificates["coradical_dim"]["coradical"]) == coradical(c).dim
    assert r.radical_dim + r.coradical_dim == c.dim
    assert r.cosemisimple == (r.coradical_dim == c.dim)


@pytest.mark.parametrize("name", [k for k in {**SOCLE_QUIVERS, **MORE_QUIVERS}
                                  if k not in ("bipartite6", "long")])
def test_path_coalgebras_hereditary_nonsingular(name):
    r = coalgebra_report(path_coalgebra({**SOCLE_QUIVERS, **MORE_QUIVERS}[name]), with_cover=False)
    assert r.hereditary and r.non_singular


@pytest.mark.parametrize("name", list(CORPUS))
def test_coprime_iff_identity_cover(name):
    c = CORPUS[name]
    r = coalgebra_report(c)
    from cocover.algebra import wedderburn_blocks
    from cocover.coalgebra import dual_algebra
    identity = r.cover_summary["d_dim"] == c.dim
    w = wedderburn_blocks(dual_algebra(c))
    assert r.coprime_simple == (identity and w.block_count == 1 and r.radical_dim == 0)


def test_nonsingular_equivalence_examples():
    v = verify_nonsingular_equivalences(matrix_coalgebra(QQ, 3))
    assert v.status == "ok" and all(v.details[k] for k in ("copolyform_left", "copolyform_right"))
    v = verify_nonsingular_equivalences(truncated_divided_power(QQ, 4))
    assert v.status == "ok" and not v.details["copolyform_left"] and not v.details["dual_left_nonsingular"]


@pytest.mark.parametrize("name", [k for k in CORPUS if k != "triangular"])
def test_nonsingular_equivalences_on_corpus(name):
    v = verify_nonsingular_equivalences(CORPUS[name])
    assert v.status == "ok" and v.details["one_sided"]


@pytest.mark.parametrize("field", [QQ, GF(2), GF(3)])
def test_triangular_dual_is_one_sided(field):
    v = verify_nonsingular_equivalences(triangular_coalgebra(field))
    assert v.status == "counterexample"
    assert v.details["one_sided"] is True
    assert v.details["copolyform_right"] and v.details["dual_left_nonsingular"]
    assert not v.details["copolyform_left"] and not v.details["dual_right_nonsingular"]
    assert v.details["witness"]["left_singular_of_dual"] == []
    assert len(v.details["witness"]["right_singular_of_dual"]) == 2


def test_cosemisimple_flat_examples():
    v = verify_cosemisimple_flat(matrix_coalgebra(QQ, 2))
    assert v.ok and v.details == {"cosemisimple": True, "non_singular": True, "self_injective_dual": True}
    v = verify_cosemisimple_flat(path_coalgebra(AB))
    assert v.ok and not v.details["cosemisimple"] and not v.details["self_injective_dual"]
    v = verify_cosemisimple_flat(truncated_divided_power(QQ, 3))
    assert v.ok and v.details["self_injective_dual"] and not v.details["non_singular"]


def test_coprime_examples():
    assert verify_coprime_dichotomy(matrix_coalgebra(QQ, 2)).status == "ok"
    assert verify_coprime_dichotomy(matrix_coalgebra(QQ, 1)).status == "ok"
    v = verify_coprime_dichotomy(path_coalgebra(AB))
    assert v.status == "skipped" and "reason" in v.details


def test_cocommutative_examples():
    assert verify_cocommutative_theorem(truncated_divided_power(QQ, 3)).status == "not_applicable"
    assert verify_cocommutative_theorem(group_like_coalgebra(QQ, 3)).status == "ok"
    v = verify_cocommutative_theorem(path_coalgebra(AB))
    assert v.status == "not_applicable" and v.details["reason"] == "not cocommutative"


@pytest.mark.parametrize("name", list(CORPUS))
def test_theorem_checks_on_corpus(name):
    c = CORPUS[name]
    for check in (verify_cosemisimple_flat, verify_coprime_dichotomy, verify_cocommutative_theorem):
        assert check(c).ok, check.__name__
