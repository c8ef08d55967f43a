"""Finite lattices, their congruences, and the lattice of Boolean triples."""

from .congruence import Congruence, all_congruences, principal_congruence, restrict
from .corpus import enumerate_lattices, named, random_lattice
from .embedding import Embedding
from .extensions import ExtensionReport, glue, ideal_extension, verify_extension
from .lattice import FiniteLattice, poset_is_lattice
from .schmidt import build_m3d, build_s_poset
from .triples import build_m3hat, classify, closure, is_boolean

__all__ = [
    "Congruence", "Embedding", "ExtensionReport", "FiniteLattice", "all_congruences",
    "build_m3d", "build_m3hat", "build_s_poset", "classify", "closure", "enumerate_lattices",
    "glue", "ideal_extension", "is_boolean", "named", "poset_is_lattice",
    "principal_congruence", "random_lattice", "restrict", "verify_extension",
]
