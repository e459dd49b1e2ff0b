"""Exception and warning types shared across the package."""


class NotHermitian(ValueError):
    """Matrix fails the Hermiticity check; message carries max |M - M^dag|."""


class NotUnitTrace(ValueError):
    """Density matrix trace differs from 1 beyond tolerance."""


class NotPSD(ValueError):
    """Matrix has an eigenvalue below the negative tolerance."""


class NoConvergence(RuntimeError):
    """Eigensolver failed to converge."""


class BlochNormExceeded(ValueError):
    """Single-qubit Bloch vector longer than 1."""


class InvalidSpunState(ValueError):
    """Rotation-averaged state parameters violate a population or coherence constraint."""


class Unphysical(ValueError):
    """Observable pair violates probability normalisation (p_s <= 1 - |m|)."""


class OutOfDomain(ValueError):
    """Argument outside the formula's validity region."""


class InsufficientSamples(UserWarning):
    """A contour bin holds too few qualifying samples for a reliable minimum."""
