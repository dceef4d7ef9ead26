"""Exact parameterized cup products on polyhedral complexes.

Rationals go in as ``str``, ``int`` or ``fractions.Fraction`` and come back as
``Fraction``. Complexes and cochains use the same JSON layout as the command
line tool. Library errors raise ``PcupError`` with a ``kind`` attribute.
"""

from ._pcup import (
    Cochain,
    Complex,
    PcupError,
    ascending_order,
    cech_cup,
    classify_point,
    coboundary,
    cup,
    discriminant,
    in_R,
    is_coboundary,
    is_cocycle,
    is_convenient,
    mixed_volume,
    restrict,
    same_component,
    sample_convenient,
    subdivision_defect,
    unit_cochain,
    vol_cocycle,
    volume,
    wall_crossing_delta,
)

__all__ = [
    "Cochain",
    "Complex",
    "PcupError",
    "ascending_order",
    "cech_cup",
    "classify_point",
    "coboundary",
    "cup",
    "discriminant",
    "in_R",
    "is_coboundary",
    "is_cocycle",
    "is_convenient",
    "mixed_volume",
    "restrict",
    "same_component",
    "sample_convenient",
    "subdivision_defect",
    "unit_cochain",
    "vol_cocycle",
    "volume",
    "wall_crossing_delta",
]
