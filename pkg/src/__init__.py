"""
Burau Kernel Toolkit
Exact Burau representations of B_3 and B_4 over Z/pZ[t, t^-1], ping-pong
certificates and explicit kernel elements.
"""

__version__ = "1.0.0"
