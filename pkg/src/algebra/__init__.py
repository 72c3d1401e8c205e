"""
Exact Laurent polynomial arithmetic and the reduced Burau representations.
"""

from .laurent import (INTEGERS, NEG_INFINITY, CoeffRing, Degree, LaurentPoly,
                      lp_add, lp_degree, lp_mul, lp_normalize,
                      minus_t_power)
from .burau import (BurauMatrix, RowVector, act_row, burau_image,
                    check_det_identity, generator, is_identity)

__all__ = [
    'INTEGERS', 'NEG_INFINITY', 'CoeffRing', 'Degree', 'LaurentPoly',
    'lp_add', 'lp_degree', 'lp_mul', 'lp_normalize', 'minus_t_power',
    'BurauMatrix', 'RowVector', 'act_row', 'burau_image',
    'check_det_identity', 'generator', 'is_identity',
]
