"""Decompositions of positive root systems into permutation inversion sets.

The package covers type A (ordinary permutations) and types B/C (signed
permutations): classifying and verifying decompositions, enumerating and
counting them exactly, generating-series identities, and the ray matrices of
regular faces of the Littlewood-Richardson cone.

Modules
-------
permcore
    Permutations, positive roots, inversion sets, closure calculus.
inflation
    Blocks, simple permutations, inflation, canonical simple form.
decompose
    Verification, enumeration, and exact counting of decompositions.
bcgroups
    Signed permutations, symmetric embeddings, type B/C decompositions.
genseries
    Exact integer formal power series and the counting identities.
lrcone
    Special roots, face equations, and ray matrices of regular faces.
cli
    The ``rootdec`` command-line interface.
"""

__version__ = "0.1.0"
