"""Group cohomology backend: nonabelian H¹ and abelian H²"""

from .abelian import CyclicDecomposition, cyclic_decomposition
from .h1 import CocycleClass, OneCocycle, enumerate_cocycles, h1_classes
from .h2 import (
    CoboundaryChain,
    CochainComplex,
    ObstructionReport,
    TwoCohomologyGroup,
    h2_abelian,
    h2_order_by_enumeration,
    is_two_cocycle,
    obstruction_report,
)
from .smith import SmithForm, integer_kernel, invariant_factors_reference, smith_normal_form

__all__ = [
    "CyclicDecomposition",
    "cyclic_decomposition",
    "OneCocycle",
    "CocycleClass",
    "enumerate_cocycles",
    "h1_classes",
    "CoboundaryChain",
    "CochainComplex",
    "TwoCohomologyGroup",
    "ObstructionReport",
    "h2_abelian",
    "h2_order_by_enumeration",
    "is_two_cocycle",
    "obstruction_report",
    "SmithForm",
    "smith_normal_form",
    "integer_kernel",
    "invariant_factors_reference",
]
