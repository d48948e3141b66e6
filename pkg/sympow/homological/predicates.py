# sympow/homological/predicates.py
"""Perfection, Cohen-Macaulayness and intersection-type predicates of R/I."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, Field

from ..ideal import Ideal, krull_dimension
from ..utils.logger import logger
from .resolution import Resolution, resolve


class StrongCM(str, Enum):
    """Sufficient certificates for strong Cohen-Macaulayness; never a 'no'."""

    CRITERION_I = "yes-by-criterion-i"  # perfect of height two
    CRITERION_II = "yes-by-criterion-ii"  # Cohen-Macaulay with mu <= height + 2
    UNKNOWN = "unknown"

    def __str__(self):
        return self.value


class PredicateSet(BaseModel):
    """Homological flags of R/I, all read off one minimal resolution."""

    perfect: bool = Field(description="pd(R/I) = height(I)")
    cohen_macaulay: bool = Field(description="depth(R/I) = dim(R/I)")
    complete_intersection: bool = Field(description="mu(I) = height(I)")
    almost_complete_intersection: bool = Field(description="mu(I) = height(I) + 1")
    strongly_cm_certified: StrongCM
    depth: int
    dim: int
    height: int
    mu: int
    pd: int
    gorenstein_type: int = Field(description="Last Betti number; the Cohen-Macaulay type when R/I is CM")


def predicates(I: Ideal, resolution: Optional[Resolution] = None) -> PredicateSet:
    """
    Fill every flag of R/I.

    μ(I) is the rank of F_1 in the minimal resolution, so no separate
    Nakayama pruning is needed.

    Raises:
        PreconditionError: I not homogeneous, or the unit ideal
    """
    resolution = resolution or resolve(I)
    d = I.ring.ngens
    dim = krull_dimension(I)
    height = d - dim
    pd = resolution.pd
    depth = d - pd
    mu = resolution.ranks[1] if pd >= 1 else 0

    perfect = pd == height
    cohen_macaulay = depth == dim
    if perfect and height == 2:
        certified = StrongCM.CRITERION_I
    elif cohen_macaulay and mu <= height + 2:
        certified = StrongCM.CRITERION_II
    else:
        certified = StrongCM.UNKNOWN

    result = PredicateSet(
        perfect=perfect,
        cohen_macaulay=cohen_macaulay,
        complete_intersection=mu == height,
        almost_complete_intersection=mu == height + 1,
        strongly_cm_certified=certified,
        depth=depth,
        dim=dim,
        height=height,
        mu=mu,
        pd=pd,
        gorenstein_type=resolution.ranks[pd],
    )
    logger.debug(f"📐 [Resolve] predicates: pd={pd} depth={depth} dim={dim} ht={height} mu={mu} sCM={certified}")
    return result


__all__ = ["StrongCM", "PredicateSet", "predicates"]
