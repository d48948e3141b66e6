# sympow/fixtures.py
"""
Named ideals and Cremona maps used by the reproduction suite, the scenario
reader and the tests.

Scenario files may name any of these instead of spelling out generators.
"""

from typing import Callable, Dict, List, Tuple

from .cremona import CremonaMap
from .exceptions import ScenarioError
from .ideal import Ideal
from .polyring import parse_ring

XYZ = "QQ[x,y,z]"
XYZW = "QQ[x,y,z,w]"


def tetrahedron() -> Ideal:
    """Stanley-Reisner ideal of the edges of a tetrahedron: all triple products."""
    return Ideal.parse(parse_ring(XYZW), ["yzw", "xzw", "xyw", "xyz"])


def pentagon() -> Ideal:
    """Stanley-Reisner ideal of the pentagon: products of non-adjacent vertices."""
    ring = parse_ring("QQ[x1,x2,x3,x4,x5]")
    return Ideal.parse(ring, ["x1*x3", "x1*x4", "x2*x4", "x2*x5", "x3*x5"])


def hankel() -> Ideal:
    """2x2 minors of the 2x3 Hankel matrix: the twisted cubic."""
    ring = parse_ring("QQ[x0,x1,x2,x3]")
    return Ideal.parse(ring, ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"])


def macaulay_curve() -> Ideal:
    """Kernel of x, y, z, w -> s^4, s^3 t, s t^3, t^4."""
    return Ideal.parse(parse_ring(XYZW), ["yz - xw", "z^3 - yw^2", "xz^2 - y^2w", "y^3 - x^2z"])


def three_edges() -> Ideal:
    """(xy, xz, yz): the three coordinate points of the projective plane."""
    return Ideal.parse(parse_ring(XYZ), ["xy", "xz", "yz"])


def five_variable_base() -> Ideal:
    """A base ideal in five variables whose last variable is regular on R/I."""
    ring = parse_ring("QQ[x,y,z,w,u]")
    return Ideal.parse(ring, ["x^2", "xy", "wx + y^2", "zx + w^2", "ux + z^2"])


def monomial_map(d: int) -> Tuple[CremonaMap, CremonaMap]:
    """
    (x^d, x^(d-1)y, y^(d-1)z) and its inverse (x y^(d-1), y^d, x^(d-1)z).

    Both have degree d; the source inversion is x^(d^2-d) y^(d-1).
    """
    if d < 2:
        raise ValueError(f"monomial_map needs d >= 2, got {d}")
    ring = parse_ring(XYZ)
    F = CremonaMap.parse(ring, [f"x^{d}", f"x^{d - 1}*y", f"y^{d - 1}*z"])
    G = CremonaMap.parse(ring, [f"x*y^{d - 1}", f"y^{d}", f"x^{d - 1}*z"])
    return F, G


def tetrahedron_map() -> Tuple[CremonaMap, CremonaMap]:
    """The cubic involution of P^3 by the triple products; self-inverse."""
    ring = parse_ring(XYZW)
    F = CremonaMap.parse(ring, ["yzw", "xzw", "xyw", "xyz"])
    return F, F


def quadratic_involution() -> Tuple[CremonaMap, CremonaMap]:
    """The standard plane quadratic involution (yz, xz, xy)."""
    F = CremonaMap.parse(parse_ring(XYZ), ["yz", "xz", "xy"])
    return F, F


def polar_map() -> Tuple[CremonaMap, CremonaMap]:
    """Polar map of a conic-line configuration; base ideal (2xz + y^2, xy, x^2)."""
    ring = parse_ring(XYZ)
    F = CremonaMap.parse(ring, ["2xz + y^2", "xy", "x^2"])
    G = CremonaMap.parse(ring, ["2z^2", "2yz", "xz - y^2"])
    return F, G


# The polar map's base ideal is sometimes quoted as codimension one; its
# computed height is two.
POLAR_MAP_QUOTED_HEIGHT = 1

IDEALS: Dict[str, Callable[[], Ideal]] = {
    "tetrahedron": tetrahedron,
    "pentagon": pentagon,
    "hankel": hankel,
    "macaulay-curve": macaulay_curve,
    "three-edges": three_edges,
    "five-variable-base": five_variable_base,
    "polar-map": lambda: polar_map()[0].base_ideal,
    "monomial-map-2": lambda: monomial_map(2)[0].base_ideal,
    "monomial-map-3": lambda: monomial_map(3)[0].base_ideal,
}

MAPS: Dict[str, Callable[[], Tuple[CremonaMap, CremonaMap]]] = {
    "tetrahedron-map": tetrahedron_map,
    "quadratic-involution": quadratic_involution,
    "polar-map": polar_map,
    "monomial-map-2": lambda: monomial_map(2),
    "monomial-map-3": lambda: monomial_map(3),
}


def named_ideal(name: str) -> Ideal:
    """
    Raises:
        ScenarioError: Unknown name
    """
    if name not in IDEALS:
        raise ScenarioError(f"unknown named ideal '{name}'. Available ideals: {sorted(IDEALS)}")
    return IDEALS[name]()


def named_map(name: str) -> Tuple[CremonaMap, CremonaMap]:
    """
    Raises:
        ScenarioError: Unknown name
    """
    if name not in MAPS:
        raise ScenarioError(f"unknown named map '{name}'. Available maps: {sorted(MAPS)}")
    return MAPS[name]()


def get_available_fixtures() -> List[str]:
    return sorted(set(IDEALS) | set(MAPS))


__all__ = [
    "tetrahedron",
    "pentagon",
    "hankel",
    "macaulay_curve",
    "three_edges",
    "five_variable_base",
    "monomial_map",
    "tetrahedron_map",
    "quadratic_involution",
    "polar_map",
    "POLAR_MAP_QUOTED_HEIGHT",
    "IDEALS",
    "MAPS",
    "named_ideal",
    "named_map",
    "get_available_fixtures",
]
