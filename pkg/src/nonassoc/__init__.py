"""
Identity calculus for degree-3 nonassociative relations

Exact rational linear algebra, the Σ₃ group algebra, the polarization
transform, depolarization pipelines, operads in arity 3, and checks on
structure-constant algebras, superalgebras and Hom-Lie brackets.
"""
