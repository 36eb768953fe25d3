"""charp: exact commutative algebra in characteristic p.

Groebner bases over prime fields, Frobenius powers/preimages/closures,
F-purity via the colon criterion, f-sequences, associated primes of
monomial ideals, Koszul depth, stabilizing depth, and finite truncations of
the perfect closure.
"""

from .budget import (Budget, BudgetExceeded, InternalInvariantError,
                     Unresolved, DEFAULT_REDUCTION_BUDGET)
from .ring import (Block, ExponentOverflow, GRevLex, Lex, Polynomial, Ring,
                   order_from_name)
from .parse import ParseError, parse_poly, parse_poly_list, parse_ring
from .groebner import (Ideal, buchberger, colon_ideal, eliminate,
                       groebner_basis, ideal_equal, intersect, normal_form,
                       radical_membership)
from .modules import (FreeComplex, ModulePresentation, annihilator,
                      free_resolution, is_graded, module_groebner,
                      module_normal_form, projective_dimension,
                      syzygy_module)
from .frobenius import (ClosureResult, FPurityReport, FSequence,
                        fedder_f_pure, frobenius_closure, frobenius_power,
                        frobenius_preimage, fseq_radical_stabilize,
                        fseq_verify, is_frobenius_closed)
from .assoc import (PrimeIdealRecord, ass_monomial, maximal_in_ass,
                    minimal_primes_monomial, union_ass_fseq)
from .depth import (DepthSearchReport, KdepthReport, KoszulProfile,
                    SdepthReport, cdepth_lower_bound, classical_depth_search,
                    depth_at_origin, frobenius_functor, kdepth_truncation_profile,
                    kgrade, koszul_complex, koszul_homology_nonzero,
                    regular_sequence_check, sdepth)
from .perfclosure import (GammaReport, PerfectClosureIdeal, PrimeCheckReport,
                          RootElement, extended_ideal_membership,
                          fseq_to_perfect_ideal, gamma_fseq, parse_root,
                          prime_extension_check,
                          principal_variable_obstruction, root_equal,
                          zero_closure_cyclic)

__version__ = "0.1.0"
