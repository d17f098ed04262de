"""Exception types shared across the toolkit.

Everything derives from NoiseMapError so the CLI can catch one base class
and emit a machine-readable error document.
"""


class NoiseMapError(Exception):
    """Base class for all toolkit errors."""


class SampleRateError(NoiseMapError):
    """Audio sample rate does not match what a component requires."""


class CalibrationError(NoiseMapError):
    """Calibration run rejected (empty alignment, divergent levels, ...)."""


class UntrainableError(NoiseMapError):
    """Training data does not admit a usable decision threshold."""


class MgrsError(NoiseMapError):
    """Malformed grid reference or coordinates outside the supported range."""


class LatticeError(NoiseMapError):
    """Lattice/profile shape or content violates its contract."""


class ReconstructionError(NoiseMapError):
    """A reconstruction method cannot run on the given sample set."""


class ProfileSpecError(NoiseMapError):
    """Synthetic profile specification is infeasible."""
