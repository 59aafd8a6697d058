"""parhopf: exact computer algebra for partial (co)representations of
finite-dimensional Hopf algebras."""

__version__ = "0.1.0"

from .scalars import (
    Field, field_make, Cyc, SparseVector, SparseMatrix,
    rref, kernel, membership, cyclotomic_polynomial,
)
from .hopf import (
    FiniteGroup, HopfAlgebra, named_group, group_algebra, dual_hopf,
    sweedler4, taft, verify_hopf, iterated_coproduct, is_hopf_morphism,
)
