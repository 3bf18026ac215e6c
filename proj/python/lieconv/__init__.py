"""Weight multiplicities, tensor product decompositions, LR and Kostka numbers,
and lattice-convexity scans for the root systems A_r and B_r.

Weights are sequences of integers in fundamental-weight coordinates.
Partitions are sequences of weakly decreasing non-negative integers.
"""

from ._core import (
    ResourceError,
    RootSystem,
    branch,
    character_product_oracle,
    dual_weight,
    in_root_lattice,
    invariant_dimension,
    is_dominant,
    kostka,
    lr_coefficient,
    lr_product,
    partition_to_weight,
    prv_components,
    saturation_probe,
    scan_family,
    scan_instance,
    tensor_decompose,
    to_dominant,
    weight_multiplicities,
    weyl_dim,
)

__all__ = [
    "ResourceError",
    "RootSystem",
    "branch",
    "character_product_oracle",
    "dual_weight",
    "in_root_lattice",
    "invariant_dimension",
    "is_dominant",
    "kostka",
    "lr_coefficient",
    "lr_product",
    "partition_to_weight",
    "prv_components",
    "saturation_probe",
    "scan_family",
    "scan_instance",
    "tensor_decompose",
    "to_dominant",
    "weight_multiplicities",
    "weyl_dim",
]
