"""Acceptance criteria, one test each.  Every test prints a single PASS/FAIL line."""

import time

import pytest

from cocover import GF, QQ
from cocover.algebra import (direct_product_algebra, is_simple, jacobson_radical, matrix_algebra,
                             opposite_algebra, path_algebra, triangular_example_algebra,
                             truncated_polynomial_algebra, validate_algebra, wedderburn_blocks,
                             dual_coalgebra_of_algebra)
from cocover.coalgebra import (coalgebra_equal_entrywise, direct_sum_coalgebra, dual_algebra,
                               group_like_coalgebra, matrix_coalgebra, path_coalgebra,
                               truncated_divided_power, validate_coalgebra)
from cocover.linalg import Mat, Subspace
from cocover.modules import (LEFT, RIGHT, coalgebra_module, hom_singular_submodule,
                             injective_hull, is_codense_cover, is_copolyform, is_essential,
                             is_small, maximal_codense_cover, nabla_space, projective_cover,
                             regular_module, singular_submodule)
from cocover.oracles import (brute_force_submodules, definitional_is_codense,
                             definitional_is_copolyform, definitional_is_essential,
                             definitional_is_small)
from cocover.props import coalgebra_report, verify_cosemisimple_flat
from cocover.quiver import sinks_and_path_counts
from cocover.quotient import covering_coalgebra, qmax, qmax_socle_fastpath

from corpus import AB, MORE_QUIVERS, SOCLE_QUIVERS, corpus_coalgebras, small_algebras, small_modules


@pytest.fixture
def report(capsys):
    def emit(number, ok, detail, elapsed):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail} ({elapsed:.2f} s)")
    return emit


class Clock:
    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start


def test_criterion_1_cover_of_a_to_b(report):
    with Clock() as clock:
        c = path_coalgebra(AB, field=QQ)
        res = covering_coalgebra(c)
        w = wedderburn_blocks(dual_algebra(res.d))
        cover, _ = maximal_codense_cover(coalgebra_module(c, LEFT))
        checks = {
            "dim D = 4": res.d.dim == 4,
            "D* simple": is_simple(dual_algebra(res.d)),
            "one block of dim 4": w.block_dims == [4],
            "kernel dim 1": res.kernel.dim == 1,
            "kernel small": res.flags["kernel_small"],
            "codense": res.flags["codense"],
            "maximal cover dim": cover.dim == res.d.dim,
        }
    ok = all(checks.values()) and clock.elapsed < 1.0
    report(1, ok, "D = M2^c, kernel dim 1, small, codense, maximal", clock.elapsed)
    assert all(checks.values()), checks
    assert clock.elapsed < 1.0


def test_criterion_2_socle_formula(report):
    rows = {}
    with Clock() as clock:
        for name, quiver in SOCLE_QUIVERS.items():
            assert len(quiver.vertices) <= 6 and len(quiver.arrows) <= 8
            a = path_algebra(quiver)
            sizes = list(sinks_and_path_counts(quiver).values())
            predicted = sorted((n * n for n in sizes), reverse=True)
            fp = qmax_socle_fastpath(a, quiver)
            full = qmax(a)
            rows[name] = (fp.block_dims == predicted == fp.predicted_block_dims
                          and full.q.dim == sum(predicted) == fp.algebra.dim
                          and wedderburn_blocks(full.q).block_dims == predicted)
    ok = all(rows.values()) and len(rows) == 10 and clock.elapsed < 30
    report(2, ok, f"socle formula on {len(rows)} quivers", clock.elapsed)
    assert all(rows.values()), rows
    assert clock.elapsed < 30


CORPUS = corpus_coalgebras()


def test_criterion_3_hierarchy(report):
    violations = []
    with Clock() as clock:
        for name, c in CORPUS.items():
            r = coalgebra_report(c, with_cover=False)
            if r.hereditary and not r.non_singular:
                violations.append(f"{name}: hereditary but singular")
            if r.cosemisimple and not r.hereditary:
                violations.append(f"{name}: cosemisimple but not hereditary")
        tri = coalgebra_report(CORPUS["triangular"], with_cover=False)
        tri_ok = tri.non_singular is True and tri.hereditary is False
    ok = not violations and tri_ok
    report(3, ok, f"hierarchy on {len(CORPUS)} coalgebras, triangular dual non-singular "
                  f"and not hereditary", clock.elapsed)
    assert not violations, violations
    assert tri_ok


def test_criterion_4_cosemisimple_theorem(report):
    with Clock() as clock:
        verdicts = {name: verify_cosemisimple_flat(c) for name, c in CORPUS.items()}
    bad = [n for n, v in verdicts.items() if v.status != "ok"]
    report(4, not bad, f"cosemisimple iff non-singular and self-injective dual on "
                       f"{len(verdicts)} coalgebras", clock.elapsed)
    assert not bad, bad


def test_criterion_5_divided_power_is_its_own_cover(report):
    results = {}
    with Clock() as clock:
        for n in range(2, 6):
            c = truncated_divided_power(QQ, n)
            res = covering_coalgebra(c)
            results[n] = (coalgebra_equal_entrywise(res.d, c)
                          and res.pi == Mat.identity(QQ, n) and res.kernel.dim == 0)
    ok = all(results.values())
    report(5, ok, "D = C for dividedpower:2..5", clock.elapsed)
    assert ok, results


def test_criterion_6_oracle_equivalences(report):
    mismatches = []
    counts = {"modules": 0, "submodules": 0, "maps": 0, "lemma": 0}
    with Clock() as clock:
        for name, m in small_modules(max_dim=3, field=GF(2)):
            assert m.dim <= 3 and m.algebra.dim <= 4
            counts["modules"] += 1
            subs = brute_force_submodules(m)
            for n in subs:
                counts["submodules"] += 1
                if is_small(n) != definitional_is_small(n, subs):
                    mismatches.append(f"small {name}")
                if is_essential(n) != definitional_is_essential(n, subs):
                    mismatches.append(f"essential {name}")
            if is_copolyform(m) != definitional_is_copolyform(m):
                mismatches.append(f"copolyform {name}")
            maps = [n.quotient()[1] for n in subs if n.dim < m.dim]
            maps.append(projective_cover(m)[1])
            for pi in maps:
                counts["maps"] += 1
                if is_codense_cover(pi) != definitional_is_codense(pi):
                    mismatches.append(f"codense {name}")
        f2 = GF(2)
        from corpus import triangular_coalgebra
        for c in (path_coalgebra(AB, field=f2), truncated_divided_power(f2, 3),
                  matrix_coalgebra(f2, 2), triangular_coalgebra(f2)):
            for side in (LEFT, RIGHT):
                m = coalgebra_module(c, side)
                lhs, rhs = nabla_space(m, m), hom_singular_submodule(m, m)
                counts["lemma"] += 1
                if lhs.dim != rhs.dim or lhs != rhs:
                    mismatches.append(f"lemma {c} {side}")
    ok = not mismatches and clock.elapsed < 120 and counts["lemma"] >= 3
    report(6, ok, "oracle agreement on {modules} modules, {submodules} submodules, {maps} maps; "
                  "nabla = Z(Hom) on {lemma} cases".format(**counts), clock.elapsed)
    assert not mismatches, mismatches
    assert clock.elapsed < 120


def _constructor_outputs():
    coalgebras = dict(CORPUS)
    for f in (GF(2), GF(3)):
        coalgebras.update({f"{k} / {f}": c for k, c in corpus_coalgebras(f).items()})
    coalgebras["grouplike:3"] = group_like_coalgebra(QQ, 3)
    coalgebras["sum"] = direct_sum_coalgebra([matrix_coalgebra(QQ, 2), path_coalgebra(AB)])
    for name, quiver in {**SOCLE_QUIVERS, **MORE_QUIVERS}.items():
        coalgebras[f"path:{name}"] = path_coalgebra(quiver)
    algebras = {f"{k} / {f}": a for f in (GF(2), GF(3)) for k, a in small_algebras(f).items()}
    algebras.update({
        "triangular": triangular_example_algebra(),
        "triangular op": opposite_algebra(triangular_example_algebra()),
        "M3": matrix_algebra(QQ, 3),
        "k[z]/z^5": truncated_polynomial_algebra(QQ, 5),
        "product": direct_product_algebra([matrix_algebra(QQ, 2), truncated_polynomial_algebra(QQ, 2)]),
    })
    for name, quiver in SOCLE_QUIVERS.items():
        algebras[f"path {name}"] = path_algebra(quiver)
    return coalgebras, algebras


def test_criterion_7_axiom_suites(report):
    failures = []
    n_modules = 0
    with Clock() as clock:
        coalgebras, algebras = _constructor_outputs()
        for name, c in coalgebras.items():
            if validate_coalgebra(c) is not None:
                failures.append(f"coalgebra axioms {name}")
            if not coalgebra_equal_entrywise(dual_coalgebra_of_algebra(dual_algebra(c)), c):
                failures.append(f"round trip {name}")
        for name, a in algebras.items():
            if validate_algebra(a) is not None:
                failures.append(f"algebra axioms {name}")
            if dual_algebra(dual_coalgebra_of_algebra(a)) != a:
                failures.append(f"round trip {name}")
        modules = list(small_modules())
        for name, c in CORPUS.items():
            for side in (LEFT, RIGHT):
                modules.append((f"C={name} {side}", coalgebra_module(c, side)))
        for name, m in modules:
            n_modules += 1
            _, pi = projective_cover(m)
            if not (pi.is_surjective() and is_small(pi.kernel())):
                failures.append(f"cover {name}")
            _, iota = injective_hull(m)
            if not (iota.is_injective() and is_essential(iota.image())):
                failures.append(f"hull {name}")
    report(7, not failures, f"{len(coalgebras)} coalgebras, {len(algebras)} algebras, "
                            f"{n_modules} modules", clock.elapsed)
    assert not failures, failures


def test_criterion_8_johnson_property(report):
    failures = []
    checked = 0
    with Clock() as clock:
        algebras = {name: dual_algebra(c) for name, c in CORPUS.items()}
        algebras.update({f"{k} / GF(2)": a for k, a in small_algebras().items()})
        algebras["triangular"] = triangular_example_algebra()
        for name, a in algebras.items():
            if singular_submodule(regular_module(a, RIGHT)).dim:
                continue
            checked += 1
            if jacobson_radical(qmax(a).q).dim:
                failures.append(name)
        for n in range(1, 6):
            a = truncated_polynomial_algebra(QQ, n)
            if qmax(a).q is not a:
                failures.append(f"k[Z]/Z^{n}")
    report(8, not failures, f"Qmax semisimple on {checked} non-singular algebras, "
                            f"Qmax(k[Z]/Z^n) = A", clock.elapsed)
    assert not failures, failures
