"""Bruhat cells, B-orbits and spherical conjugacy classes over small finite fields.

The toolkit builds irreducible root systems and their Weyl groups, realizes
the classical Chevalley groups (and G_2) as matrix groups over F_q with full
Borel data, locates Bruhat cells, enumerates conjugacy classes, and decides
the sphericity of a class both through the cells it meets and through the
dimension formula l(z) + rk(1 - z).
"""

from .gfq import Field, is_good_odd, make_field
from .rootsys import RootSystem, build_root_system
from .weyl import WeylGroup
from .chevalley import StructureConstants, build_structure_constants
from .matgroup import MatrixGroup, build_group
from .bruhat import bruhat_cell, bruhat_factor, cell_census
from .conjclass import ConjClass, conjugacy_classes
from .sphericity import census, is_quasi_spherical, is_spherical_by_dim, theorem_check

__all__ = [
    "Field",
    "is_good_odd",
    "make_field",
    "RootSystem",
    "build_root_system",
    "WeylGroup",
    "StructureConstants",
    "build_structure_constants",
    "MatrixGroup",
    "build_group",
    "bruhat_cell",
    "bruhat_factor",
    "cell_census",
    "ConjClass",
    "conjugacy_classes",
    "census",
    "is_quasi_spherical",
    "is_spherical_by_dim",
    "theorem_check",
]

__version__ = "0.1.0"
