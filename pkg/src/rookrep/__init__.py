"""Exact representation theory of generalized rook monoids C_r wr R_n.

Seminormal irreducible representations, Jucys-Murphy spectra, branching
graphs, Gelfand models, and the Grothendieck-group module structure over
the affine Lie algebra tensored with the bicyclic monoid.
"""

__version__ = "0.1.0"
