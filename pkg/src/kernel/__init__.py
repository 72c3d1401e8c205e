"""
Kernel elements, Brunnian analysis and kernel search.
"""

from .examples import (KernelExample, alpha_k, alpha_prime_closed_form,
                       cooper_long_alpha, cooper_long_alpha_prime, named_example,
                       named_word)
from .brunnian import BrunnianReport, StrandDeletion, brunnian_report, verify_kernel
from .search import SearchConfig, SearchHit, SearchResult, kernel_search, parse_pattern

__all__ = [
    'KernelExample', 'alpha_k', 'alpha_prime_closed_form',
    'cooper_long_alpha', 'cooper_long_alpha_prime', 'named_example', 'named_word',
    'BrunnianReport', 'StrandDeletion', 'brunnian_report', 'verify_kernel',
    'SearchConfig', 'SearchHit', 'SearchResult', 'kernel_search', 'parse_pattern',
]
