"""Mixed cluster editing: edit a graph into a disjoint union of cliques
and connected complete at-most-ell-partite graphs.

Library surface: graph and edit-set values, modular decomposition and
typed quotients, target-family recognition with forbidden-subgraph
witnesses, a bounded-size kernelization, exact solvers, and reproducible
instance generators.
"""

from .graph import (
    Edit,
    EditSet,
    Graph,
    InvalidEditError,
    ParseError,
    apply_edits,
    connected_components,
    induced_subgraph,
    is_module,
    negate,
    parse_edit_set,
    parse_graph,
    serialize_graph,
)
from .decomposition import (
    MDNode,
    MDTree,
    QuotientGraph,
    QVertex,
    count_kinds,
    decompose,
    q_partition,
    quotient_graph,
    quotient_of,
    tree_to_dot,
    tree_to_text,
)
from .recognition import (
    ComponentClass,
    Witness,
    classify_component,
    find_forbidden,
    is_l_cluster_graph,
)
from .kernel import (
    KernelResult,
    WeightedQuotientInstance,
    build_weighted_p_quotient,
    build_weighted_s_quotient,
    kernelize,
    quotient_size_filter,
    remove_trivial_components,
    truncate_modules,
)
from .solver import (
    NotMinimalSolutionError,
    ResourceLimitError,
    SolveResult,
    brute_force_oracle,
    order_edits_lemma2,
    solve_bounded,
    solve_optimal,
    verify_solution,
)
from .gadgets import (
    GadgetMap,
    build_kl_gadget,
    check_gadget_optimum,
    gen_planted,
    gen_random,
)
from .oracles import InstanceTooLargeError

__version__ = "0.1.0"
