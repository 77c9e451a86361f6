"""Exact p-cone calculus for Ekedahl-Oort strata of A1-type Shimura varieties."""

from .cyclic import IndexSet, chain_diagram, phi, reduce, sigma_shift
from .pcone import PCone, PExpression, StratumContext, cone_crs, cone_pha
from .polycone import PolyCone

__all__ = [
    "IndexSet", "PCone", "PExpression", "PolyCone", "StratumContext",
    "chain_diagram", "cone_crs", "cone_pha", "phi", "reduce", "sigma_shift",
]
__version__ = "0.1.0"
