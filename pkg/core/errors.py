"""Exception hierarchy for the witness toolkit.

Every error carries an integer ``code`` that the command line maps to its
process exit status. Validation errors also carry the name of the violated
invariant and the measured residual.

These classes deliberately do not derive from ``ValueError``: pydantic only
wraps ``ValueError``/``AssertionError`` raised inside validators, so anything
else reaches the caller with its code intact.
"""

from typing import Optional


class WitnessToolkitError(Exception):
    """Base class for all toolkit errors."""

    code = 1


class MalformedDocumentError(WitnessToolkitError):
    """A state document could not be parsed."""

    code = 3


class StateValidationError(WitnessToolkitError):
    """A matrix or vector violates one of its type invariants."""

    code = 2
    invariant = "state"

    def __init__(
        self,
        subject: str,
        residual: float,
        tolerance: float,
        measured: Optional[float] = None,
    ):
        self.subject = subject
        self.residual = float(residual)
        self.tolerance = float(tolerance)
        self.measured = None if measured is None else float(measured)
        detail = f"residual {self.residual:.3e} exceeds {self.tolerance:.0e}"
        if self.measured is not None:
            detail = f"measured {self.measured:.12g}, {detail}"
        super().__init__(f"{subject}: {self.invariant} invariant violated ({detail})")


class HermiticityError(StateValidationError):
    code = 4
    invariant = "hermiticity"


class TraceError(StateValidationError):
    code = 5
    invariant = "trace"


class PositivityError(StateValidationError):
    code = 6
    invariant = "positivity"


class NormalizationError(StateValidationError):
    code = 7
    invariant = "normalization"


class UnitarityError(StateValidationError):
    code = 8
    invariant = "unitarity"


class MixtureError(WitnessToolkitError):
    """Mixture weights are negative, missing or do not sum to one."""

    code = 9


class PartitionError(WitnessToolkitError):
    """Sector fractions of the patchwork source are inconsistent."""

    code = 10


class RecordError(WitnessToolkitError):
    """Coincidence records cannot feed the witness estimator."""

    code = 11


class SweepPointError(WitnessToolkitError):
    """Failure while evaluating one point of a sweep."""

    code = 12

    def __init__(self, p: float, cause: Exception):
        self.p = p
        self.cause = cause
        # keep the exit code of the underlying failure when it has one
        self.code = getattr(cause, "code", SweepPointError.code)
        super().__init__(f"sweep point p={p:.12g} failed: {cause}")
