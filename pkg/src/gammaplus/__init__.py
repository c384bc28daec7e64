"""Congruence subgroups of the special automorphism group of F2.

Computes orbits and stabilizers of the action on epimorphisms onto
finite groups, the resulting subgroup indices, abelianization images
in SL2(Z), Wohlfahrt levels and congruence-subgroup decisions.
"""

__version__ = "0.1.0"
