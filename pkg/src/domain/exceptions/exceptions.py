"""Domain exceptions."""
from typing import Any, Optional


class DomainException(Exception):
    """Base exception for domain layer."""
    pass


# ----------------------------------------------------------------------------
# lattice
# ----------------------------------------------------------------------------

class InvalidGridError(DomainException):
    """Torus grid parameters are not admissible."""

    def __init__(self, reason: str, **params: Any):
        super().__init__(f"Invalid torus grid: {reason} ({_fmt(params)})")
        self.reason = reason
        self.params = params


class ShapeMismatchError(DomainException):
    """Array shape or grid does not match the expected lattice."""

    def __init__(self, expected: Any, received: Any):
        super().__init__(f"Shape mismatch: expected {expected}, received {received}")
        self.expected = expected
        self.received = received


class NonFiniteValuesError(DomainException):
    """Samples contain NaN or Inf."""

    def __init__(self, what: str):
        super().__init__(f"Non-finite samples in {what}")
        self.what = what


class InvalidExponentError(DomainException):
    """Exponent p outside (0, inf)."""

    def __init__(self, p: float):
        super().__init__(f"Exponent must satisfy p > 0, received: {p}")
        self.p = p


# ----------------------------------------------------------------------------
# elliptic
# ----------------------------------------------------------------------------

class OperatorTooLargeError(DomainException):
    """Grid exceeds the dense assembly cap."""

    def __init__(self, total_points: int, cap: int):
        super().__init__(
            f"Dense assembly needs total_points <= {cap}, received: {total_points}"
        )
        self.total_points = total_points
        self.cap = cap


class EllipticityError(DomainException):
    """Coefficient field fails an ellipticity requirement."""

    def __init__(self, condition: str, value: float, site: Optional[tuple] = None):
        where = f" at site {site}" if site is not None else ""
        super().__init__(f"Ellipticity condition {condition} fails{where}: value={value:.3e}")
        self.condition = condition
        self.value = value
        self.site = site


# ----------------------------------------------------------------------------
# funcalc
# ----------------------------------------------------------------------------

class FactorizationError(DomainException):
    """Schur-type factorization is not accurate enough."""

    def __init__(self, residual: float, tolerance: float):
        super().__init__(
            f"Factorization residual {residual:.3e} exceeds tolerance {tolerance:.1e}"
        )
        self.residual = residual
        self.tolerance = tolerance


class KernelObstructionError(DomainException):
    """Input has a component in the kernel of L (constants on the torus)."""

    def __init__(self, operation: str, mean: complex):
        super().__init__(
            f"{operation} requires a mean-zero input: the constants span the kernel of L "
            f"(input mean = {mean:.3e})"
        )
        self.operation = operation
        self.mean = mean


class SectorMismatchError(DomainException):
    """Psi sector half-angle does not exceed the operator type angle."""

    def __init__(self, mu: float, omega: float):
        super().__init__(f"Psi sector angle mu={mu:.4f} must exceed operator angle omega={omega:.4f}")
        self.mu = mu
        self.omega = omega


class InvalidSpectralArgumentError(DomainException):
    """Time or resolvent parameter outside its admissible range."""

    def __init__(self, name: str, value: Any, rule: str):
        super().__init__(f"Invalid {name}={value}: {rule}")
        self.name = name
        self.value = value


# ----------------------------------------------------------------------------
# conegeo / functionals
# ----------------------------------------------------------------------------

class InvalidTimeGridError(DomainException):
    """Time grid bounds or level count not admissible."""

    def __init__(self, reason: str, **params: Any):
        super().__init__(f"Invalid time grid: {reason} ({_fmt(params)})")
        self.reason = reason
        self.params = params


class InvalidFunctionalError(DomainException):
    """Unknown functional or undefined parameter combination."""

    def __init__(self, reason: str):
        super().__init__(f"Invalid functional request: {reason}")
        self.reason = reason


# ----------------------------------------------------------------------------
# hardy
# ----------------------------------------------------------------------------

class MoleculePreconditionError(DomainException):
    """Molecule parameters violate the construction preconditions."""

    def __init__(self, reason: str):
        super().__init__(f"Molecule precondition violated: {reason}")
        self.reason = reason


class MoleculeConstructionError(DomainException):
    """Annuli wrap the torus before the required decay can be certified."""

    def __init__(self, max_usable_ring: int, required: int):
        super().__init__(
            f"Annuli wrap the torus: max usable ring index {max_usable_ring}, "
            f"at least {required} required"
        )
        self.max_usable_ring = max_usable_ring
        self.required = required


# ----------------------------------------------------------------------------
# experiments / cli
# ----------------------------------------------------------------------------

class StudyPreconditionError(DomainException):
    """Study inputs violate a precondition."""

    def __init__(self, study: str, reason: str):
        super().__init__(f"{study}: {reason}")
        self.study = study
        self.reason = reason


class ConfigurationError(DomainException):
    """Experiment configuration fails schema validation."""

    def __init__(self, field_path: str, message: str):
        super().__init__(f"Invalid configuration at '{field_path}': {message}")
        self.field_path = field_path
        self.message = message


def _fmt(params: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in params.items())
