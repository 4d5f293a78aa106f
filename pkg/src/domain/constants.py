"""Domain-level constants for the lattice laboratory.

These are numerical rules of the computational model (tolerances, caps,
default study sizes). They do NOT change between environments; process
settings live in ``src.infrastructure.config.settings``.
"""

# ============================================================================
# LATTICE
# ============================================================================

# Supported spatial dimensions. n >= 3 makes the dense N^n x N^n matrices
# unaffordable.
SUPPORTED_DIMENSIONS = (1, 2)

# Smallest admissible number of points per axis (must also be even so the
# integer frequency set [-N/2, N/2) is symmetric up to the Nyquist mode).
MIN_POINTS_PER_AXIS = 4

# Injectivity radius of the unit torus: balls of radius >= 1/2 wrap around.
INJECTIVITY_RADIUS = 0.5


# ============================================================================
# OPERATOR ASSEMBLY
# ============================================================================

# Dense storage cap (total lattice points). Keeps the Schur factorization
# exact and desk runs under a minute.
DENSE_POINT_CAP = 4096

# Randomized form-ellipticity probing defaults.
DEFAULT_FORM_TRIALS = 200
DEFAULT_FORM_SEED = 0

# Relative tolerance for the accretivity check: min eig of Re L >= -tol * ||L||.
ACCRETIVITY_TOLERANCE = 1e-10

# Low Fourier band (per axis) of random coefficient fields. Fixed so the same
# field is sampled at N and 2N.
COEFFICIENT_BANDWIDTH = 3


# ============================================================================
# FUNCTIONAL CALCULUS
# ============================================================================

# Maximum admissible relative reconstruction residual of L = Z T Z*.
FACTORIZATION_RESIDUAL_TOLERANCE = 1e-10

# Diagonal entries of T with |lambda| <= KERNEL_TOLERANCE * ||L|| are kernel.
KERNEL_TOLERANCE = 1e-10

# Eigenvalues closer than CLUSTER_TOLERANCE * max(|a|, |b|) share a block.
CLUSTER_TOLERANCE = 1e-3

# Truncation of the in-block Taylor expansion.
MAX_TAYLOR_TERMS = 80

# Sampled certificate for Psi-class membership.
PSI_RAY_COUNT = 9
PSI_MAGNITUDE_SAMPLES = 256
PSI_MAGNITUDE_RANGE = (1e-6, 1e6)

# Mean-zero detection threshold (relative to the sup of |f|).
MEAN_ZERO_TOLERANCE = 1e-10


# ============================================================================
# CONES, TENTS, FUNCTIONALS
# ============================================================================

MIN_TIME_LEVELS = 8
DEFAULT_APERTURE = 1.0
DEFAULT_TIME_LEVELS = 32

# Upper truncation default: a quarter period (half the injectivity radius).
DEFAULT_T_MAX = 0.25

# Cutoff bump profile: == 1 on [0, 1], == 0 on [2, inf).
CUTOFF_INNER_RADIUS = 1.0
CUTOFF_OUTER_RADIUS = 2.0


# ============================================================================
# HARDY SPACES
# ============================================================================

# Molecule ball radius must cover at least this many lattice spacings.
MIN_MOLECULE_RADIUS_IN_SPACINGS = 4

# Numerical slack when verifying normalized molecule bounds (entries <= 1).
MOLECULE_BOUND_TOLERANCE = 1e-9

# Relative accuracy of the scalar Calderon normalization quadrature.
CALDERON_QUADRATURE_TOLERANCE = 1e-10


# ============================================================================
# STUDIES
# ============================================================================

MIN_FAMILY_SIZE = 12
DEFAULT_SPREAD_THRESHOLD = 10.0
DEFAULT_DRIFT_THRESHOLD = 2.0
DEFAULT_EXPONENTS = (0.8, 1.0, 2.0)
GRADIENT_DOMINATION_APERTURE = 8.0
GRADIENT_DOMINATION_APERTURE_SWEEP = (2.0, 4.0, 8.0, 16.0)
MIN_PQ_PROBES = 50
MIN_CACCIOPPOLI_TIME_SAMPLES = 32

# Largest tent field (levels x sites) dumped by the "tent" output format.
TENT_DUMP_MAX_VALUES = 2 ** 21

# Report schema version written into every JSON report.
REPORT_SCHEMA_VERSION = 1
