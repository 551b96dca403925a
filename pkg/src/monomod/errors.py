"""Exception types shared across the package."""


class MonomodError(Exception):
    pass


class DimensionMismatch(MonomodError):
    """Operands have incompatible shapes/sides/algebras."""


class InconsistentSystem(MonomodError):
    """A linear system with a right-hand side has no solution."""


class DimensionCapExceeded(MonomodError):
    """A matrix dimension exceeded the configured cap."""


class ValidationError(MonomodError):
    """An algebraic invariant failed; carries a witness when available."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
