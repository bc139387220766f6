"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: ValidationError -> 2,
InfeasibleError -> 3, anything else -> 1.
"""


class QFourierError(Exception):
    """Base class for package errors."""


class ValidationError(QFourierError, ValueError):
    """Malformed input: bad series, weights, indices or options."""


class CapacityError(ValidationError):
    """Register or slot does not fit the requested size."""


class StructureError(ValidationError):
    """A gate whose controls and targets overlap or repeat."""


class InfeasibleError(QFourierError):
    """Requested scaling constant cannot be realized with weights <= 1."""

    def __init__(self, message, binding_slot=None):
        super().__init__(message)
        self.binding_slot = binding_slot


class DecompositionError(QFourierError):
    """A gate cannot be lowered with the available qubits."""
