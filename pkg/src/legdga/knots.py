"""The Legendrian 6_2 knot shipped with the package, and its projection."""

from importlib import resources

from .dga import ChekanovDGA, mirror
from .io import parse_dga, parse_projection, parse_rules
from .obstruction import ProjectionSpec
from .rewrite import RewriteSystem

SHIPPED_FILES = ("k6_2.dga", "k6_2.map", "k6_2.rules", "unknot.rules")

# degree table of the crossings a1..a11
K6_2_DEGREES = {
    "a1": 1, "a2": 1, "a3": 0, "a4": 0, "a5": -1, "a6": -1,
    "a7": 1, "a8": -1, "a9": 1, "a10": 1, "a11": -1,
}

K6_2_SUBSTITUTIONS = ("a3 -> a3 + 1", "a11 -> a11 + a5")


def shipped_text(name: str) -> str:
    return resources.files("legdga").joinpath("data", name).read_text()


def k6_2() -> ChekanovDGA:
    return parse_dga(shipped_text("k6_2.dga"))


def k6_2_mirror() -> ChekanovDGA:
    return mirror(k6_2())


def k6_2_projection() -> ProjectionSpec:
    return parse_projection(shipped_text("k6_2.map"))


def k6_2_rules() -> RewriteSystem:
    return parse_rules(shipped_text("k6_2.rules"))
