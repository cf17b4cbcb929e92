from ._core import (
    Error,
    Graph,
    canonical_form,
    cevs_optimum,
    cover_cost,
    cover_to_modifications,
    enumerate_covers,
    enumerate_graphs,
    hunt_graph,
    kernelize,
    max_p3_packing,
    modifications_to_cover,
    reduce,
    respects_critical_cliques,
    scc_optimum,
    solve_cevs,
    solve_cvs,
    solve_ncc,
    solve_scc,
    verify_cover,
    verify_node_cover,
    verify_packing,
    verify_sequence,
    verify_sigma_cover,
)

__all__ = [name for name in dir() if not name.startswith("_")]
