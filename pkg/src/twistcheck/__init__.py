"""twistcheck: exact verification of torus-twisted algebra identities.

The package builds finitely presented graded *-algebras with phase
commutation, deforms them by a skew bi-character, equips them with Hopf
structure, coactions and translation maps, and machine-checks the
resulting Hopf-Galois and Ehresmann-Schauenburg bialgebroid identities
with coefficients in an exact phase ring.
"""

from .phases import (GaussianRational, PhaseScalar, ThetaMatrix,
                     cocycle_lambda, phase_eval, phase_mul)
from .algebra import (Generator, InhomogeneousInput, NCPoly, Presentation,
                      check_overlaps, degree_of, equals, install_relations,
                      normal_form, star)
from .deform import (DeformationContext, check_same_degree_product,
                     deform_product, deformed_presentation)
from .tensors import TensorExpr
from .hopf import (StructureTable, check_bigrading, check_hopf_axioms)
from .galois import (ComoduleAlgebra, TranslationTable, canonical_map,
                     check_degree_lemmas, check_translation_properties,
                     is_coinvariant, resolve_balanced, translation)
from .bialgebroid import (BialgebroidElement, bialgebroid_product,
                          check_antipode_conditions, check_bialgebroid_axioms,
                          check_coring_axioms, coring_coproduct,
                          coring_counit, diagonal_coaction, flip_antipode,
                          source, target)
from .catalog import CatalogEntry, build_su2_bundle, build_so_theta, list_suites
from .report import (CheckItem, CheckReport, EQUAL, INDETERMINATE,
                     UNEQUAL_NUMERIC)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
