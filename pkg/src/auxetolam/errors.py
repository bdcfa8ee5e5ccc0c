"""Exception hierarchy.

Every error carries an ``exit_code`` used by the command-line front end:
2 for input/validation problems, 3 for domain errors (physically
inadmissible or out of the elastic bounds), 4 for infeasible requests.
"""


class AuxetolamError(Exception):
    """Base class for all library errors."""

    exit_code = 3


class ParseError(AuxetolamError):
    """Malformed material file or command argument."""

    exit_code = 2


class NotPositiveDefinite(AuxetolamError):
    """The Kelvin stiffness matrix is not positive definite."""


class NotInOrthotropyFrame(AuxetolamError):
    """Shear-coupling components q16/q26 are not zero within tolerance."""


class ReciprocityViolation(AuxetolamError):
    """Technical moduli violate 1 - nu12*nu21 > 0."""


class SingularTensor(AuxetolamError):
    """Stiffness tensor with non-positive invariant Delta."""


class OutOfElasticDomain(AuxetolamError):
    """Dimensionless parameters outside the admissible elastic bounds."""


class NotInBorC(AuxetolamError):
    """Zone optimization requested for a ply outside sets B and C."""


class OutOfRegion(AuxetolamError):
    """Operation requires membership in a specific auxeticity region."""


class NotR0Compliant(AuxetolamError):
    """Tensor does not satisfy the compliance-isotropy identities."""


class NotAuxeticPly(AuxetolamError):
    """Laminate design requested from a non-auxetic ply."""


class InfeasibleLaminationPoint(AuxetolamError):
    """Lamination point outside the feasible (Miki) domain."""

    exit_code = 4


class EmptyGrid(AuxetolamError):
    """Existence scan invoked with an empty parameter grid."""

    exit_code = 2
