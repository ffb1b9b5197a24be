"""Exact algorithms and kernels for biclique-free and bounded-degree vertex deletion."""
from .errors import (BfvdError, BudgetExhausted, ContractError, IntegrityError, ParseError,
                     UnsupportedParameterError)
from .graph import Graph, degeneracy, degree_two_runs, fen_value, feedback_edge_data, minimum_fvs
from .instance import BddInstance, BfvdInstance, WbddInstance, parse_instance, write_instance
from .biclique import (contains_biclique, enumerate_smaller_sides, find_biclique,
                       reduce_biclique_membership)
from .solvers import (Verdict, solve, solve_branching, solve_degenerate, solve_fvn,
                      solve_oracle, solve_vc)
from .wbdd import (build_replacement_table, characteristic_matrix, kernelize_bdd, opt_path,
                   WeightedPath)
from .bfvd_kernel import kernelize_bfvd
from .reductions import bdd_as_bfvd, hardness_gadget

__version__ = "0.1.0"
