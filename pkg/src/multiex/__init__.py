"""Extremal numbers of disjoint cliques in complete multipartite graphs."""

from .brute_oracle import Budget, OracleResult, brute_force_ex, verify_instance
from .errors import BudgetExceeded, InvalidArity, InvalidSize, NotAnEdge, OutOfRange
from .extremal_construct import build_erdos_graph, build_lower_bound_graph, certify
from .graph_core import (
    MultipartiteGraph,
    PackingWitness,
    complete_multipartite,
    enumerate_cliques,
    find_disjoint_cliques,
    max_packing_size,
)
from .partition_opt import f3_fast, f_closed_equal_r, f_general, f_t
from .turan_formulas import (
    conjecture15_value,
    conjecture_value,
    ex_clique,
    ex_kclique_full_r,
    ex_kK3_complete,
    ex_kK3_fourpartite,
    ex_kK3_main,
    ex_kmatching,
)

__version__ = "0.1.0"
