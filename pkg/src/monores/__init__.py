"""Free resolutions, Hilbert series and irreducible decompositions of
monomial ideals through Scarf complexes and generic deformations."""

from .complexes import (FreeChainComplex, HomologyProfile, LabeledComplex, SimplicialComplex,
                        betti_oracle, chain_complex, is_exact, oracle_totals, reduced_homology,
                        restrict, taylor_complex)
from .decomposition import (Decomposition, IrreducibleComponent, depth, dimension,
                            irreducible_decomposition, is_cohen_macaulay)
from .errors import CapExceeded, MonomialError, NotGenericError, ParseError
from .monomial import (DeformationMap, MonomialIdeal, artinianize, contains, deform, divides,
                       is_generic, lcm_of, minimalize, standard_monomials, validate_deformation)
from .resolution import (HilbertNumerator, Resolution, betti_numbers, check_dg_axioms,
                         check_upper_bound, cyclic_face_numbers, dg_multiply, hilbert_numerator,
                         minimal_resolution, resolve_by_deformation, taylor_resolution)
from .scarf import (ScarfComplex, enumerate_labelings, facet_labeling, scarf_brute_force,
                    scarf_complex)

__all__ = [name for name in dir() if not name.startswith("_")]
