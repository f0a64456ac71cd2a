"""Exact character-table toolkit for finite groups.

Builds finite groups (permutation, polycyclic, twisted tuple families),
computes their character tables over cyclotomic integers with no floating
point anywhere in a decision path, and checks whether a table admits a
transpose dual: another character table obtained by normalizing rows,
transposing, and rescaling columns by the square roots of the class sizes.

Submodules
----------
cyclotomic   exact arithmetic in Q(zeta_n)
finitefield  GF(p^m) arithmetic and polynomial factorization mod p
groups       group construction, enumeration, conjugacy machinery
families     the group families under study plus standard controls
chartab      character tables (Dixon's method) and structure constants
transpose    the transposability pipeline and table equivalence search
structure    normal subgroup lattices, central series, dual correspondences
blocks       p-blocks via reduction of central characters mod a prime ideal
catalog      descriptor grammar and the built-in group catalog
cli          command-line front end
"""

__version__ = "0.1.0"
