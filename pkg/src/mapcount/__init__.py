"""mapcount: exact enumeration of even-valent maps on Riemann surfaces.

Counts connected labeled 2v-valent maps (and their two-legged variants) of
fixed genus, three independent ways: a symbolic lattice recursion over Q(nu),
terminating-hypergeometric closed forms, and brute-force matching enumeration.
"""

__version__ = "0.1.0"
