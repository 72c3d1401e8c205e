"""
Braid words, the word problem, and the <x, y> subgroup of B_4.
"""

from .braid import (BraidWord, concat, conjugate, exponent_sum, forget_strand,
                    forget_strand_tracked, forget_strands, format_word_lines,
                    invert, parse_braid, parse_word_lines, read_word_file)
from .handles import handle_reduce, is_trivial_word
from .b2 import (B2Normal, B2Word, Move, MoveSequence, b2_conjugate_to_yx,
                 b2_expand, b2_normalize, b2_rotate_to_yx, b2_segment,
                 central_word)

__all__ = [
    'BraidWord', 'concat', 'conjugate', 'exponent_sum', 'forget_strand',
    'forget_strand_tracked', 'forget_strands', 'format_word_lines', 'invert',
    'parse_braid', 'parse_word_lines', 'read_word_file',
    'handle_reduce', 'is_trivial_word',
    'B2Normal', 'B2Word', 'Move', 'MoveSequence', 'b2_conjugate_to_yx',
    'b2_expand', 'b2_normalize', 'b2_rotate_to_yx', 'b2_segment', 'central_word',
]
