from selfdual.constructions.algorithm_one import (
    AlgorithmOneRun,
    RadialGrower,
    RelabelMode,
    algorithm_one,
    construct_P_prime,
    relabel_after_z,
    run_algorithm_one,
    z_transform,
)
from selfdual.constructions.algorithm_two import (
    LabeledPolyhedron,
    algorithm_two_step,
    construct_G,
    construct_G_labelled,
    labelled_g6,
)
from selfdual.constructions.direct import construct_Q, construct_S
from selfdual.constructions.seeds import seed_cube, seed_green
from selfdual.constructions.tuples import DegreeTuple, high_degree_indices

__all__ = [
    "AlgorithmOneRun",
    "DegreeTuple",
    "LabeledPolyhedron",
    "RadialGrower",
    "RelabelMode",
    "algorithm_one",
    "algorithm_two_step",
    "construct_G",
    "construct_G_labelled",
    "construct_P_prime",
    "construct_Q",
    "construct_S",
    "high_degree_indices",
    "labelled_g6",
    "relabel_after_z",
    "run_algorithm_one",
    "seed_cube",
    "seed_green",
    "z_transform",
]
