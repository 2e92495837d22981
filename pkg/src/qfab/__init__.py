"""qfab: exact computations with finite-dimensional bound quiver algebras.

Highlights: exact linear algebra over Q and prime fields, admissible-ideal
closure, modules with full homological machinery (covers, syzygies, Ext, AR
translation), fabric idempotent detection with resolution-generator
switching, and the higher Nakayama contraction pipeline.
"""

from .field import QQ, PrimeField, field_by_name
from .quiver import Quiver, Arrow, PathWord, Relation, Presentation, path, relation
from .algebra import (FDAlgebra, build_algebra, build_algebra_blunt, corner,
                      quotient_by_idempotent_ideal, quiver_of)
from .modules import (Representation, ModuleMap, simple_module,
                      projective_module, injective_module, regular_module,
                      dual_module, direct_sum, hom_space, hom_dim,
                      is_isomorphic, is_indecomposable, standard_module)
from .homology import (minimal_resolution, projective_cover, syzygy, cosyzygy,
                       ext_dim, proj_dim, inj_dim, global_dimension,
                       gorenstein_dimension, dominant_dimension,
                       is_self_injective, ar_translate, ar_translate_inverse,
                       nakayama_functor, transpose, gen_membership,
                       cogen_membership, DimValue)
from .fabric import (check_fabric_combinatorial, check_fabric_definitional,
                     fabric_dimension, analyze_fabric, special_tilting_module,
                     singular_reduction, verify_generator_switching,
                     cofabric_check, cofabric_dimension, FabricReport)
from .nakayama import (KupischSeries, validate_kupisch, higher_nakayama,
                       kupisch_reduce, contraction_pass, reduce_to_selfinjective)
from .endo import endomorphism_algebra
from .fixtures import fixture, fixture_names

__version__ = "0.1.0"
