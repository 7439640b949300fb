"""Topological zeta functions of plane curve germs.

Exact computation of the local topological zeta function of a nondegenerate
plane curve from its Newton polygon, with poles, orders and residues, and a
check of the B1-facet criterion for which candidate poles survive.
"""

__version__ = "0.1.0"
