"""Exact computations around the double Cayley Grassmannian DG in S14.

Submodules:

- ``clifford``: exterior algebra of a 7-space, Clifford action, pairing, purity
- ``dg``: the canonical spinor, membership in DG, orbit types, torus fixed points
- ``lie``: D7 and G2 weight computations, Hilbert function, Betti numbers
- ``schubert``: Chow ring of S14, Pieri rules, degrees on DG
- ``schurq``: Schur Q/P functions in odd power sums (multiplication oracle)
- ``parsing``, ``report``, ``suites``, ``cli``: text syntax and verification front end
"""

from .clifford import ExteriorElement, Vector14, annihilator, clifford_mul, is_pure, pairing
from .errors import (
    CheckFailure,
    DomainError,
    DoubleCayleyError,
    GradeError,
    NotInDGError,
    NotPureError,
    OracleIntegrityError,
    ParityError,
    ParseError,
    ZeroSpinorError,
)
from .parsing import parse_chow, parse_spinor
from .schubert import ChowClass

__version__ = "0.1.0"
