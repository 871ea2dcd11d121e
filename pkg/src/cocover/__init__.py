"""Finite-dimensional coalgebras, maximal rings of quotients and covering coalgebras.

Everything is exact: scalars are rationals or residues modulo a prime.
"""

from .field import QQ, FieldSpec, GF
from .quiver import Path, Quiver, enumerate_paths, parse_quiver, serialize_quiver, sinks_and_path_counts
from .algebra import (Algebra, dual_coalgebra_of_algebra, is_simple, jacobson_radical,
                      make_algebra, matrix_algebra, opposite_algebra, path_algebra,
                      primitive_idempotents, triangular_example_algebra, validate_algebra,
                      wedderburn_blocks)
from .coalgebra import (Coalgebra, coradical, direct_sum_coalgebra, dual_algebra,
                        make_coalgebra, matrix_coalgebra, path_coalgebra,
                        truncated_divided_power, validate_coalgebra)
from .modules import (LEFT, RIGHT, FDModule, ModuleMap, Submodule, coalgebra_module,
                      hom_space, injective_hull, is_codense_cover, is_copolyform, is_essential,
                      is_small, maximal_codense_cover, nabla, projective_cover, regular_module,
                      singular_submodule)
from .quotient import covering_coalgebra, qmax, qmax_socle_fastpath
from .props import (coalgebra_report, verify_cocommutative_theorem, verify_coprime_dichotomy,
                    verify_cosemisimple_flat, verify_nonsingular_equivalences)

__version__ = "0.1.0"
