"""
创建日期：2026年02月11日
介绍：李超代数、表示与球性判定
"""

from .superalgebras import build_algebra
from .borels import enumerate_borel_classes, standard_borel
from .modules import verify_representation
from .sphericity import is_numerically_spherical, is_spherical, spherical_borels, stabilizer

__all__ = ['build_algebra', 'enumerate_borel_classes', 'standard_borel', 'verify_representation',
           'is_numerically_spherical', 'is_spherical', 'spherical_borels', 'stabilizer']
