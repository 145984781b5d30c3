"""Exception hierarchy.

Input validation problems raise plain :class:`ValueError`; everything below
describes a state or numerical situation the pipeline cannot handle.
"""


class HarmonetError(Exception):
    """Base class for all library errors."""


class AsymmetricPair(HarmonetError):
    """The two selected modes are not exchanged by a symmetry of the state."""


class NotEntangledAtZero(HarmonetError):
    """The pair is already separable in the ground state, so no threshold exists."""


class NumericalError(HarmonetError):
    """Base class for failures of the numerical machinery."""


class NegativeDiscriminant(NumericalError):
    """(n_x - m_x)(n_p + m_p) came out negative, i.e. the reduced state is unphysical."""


class InfiniteEntanglement(NumericalError):
    """delta = 0, for which the entanglement of formation diverges."""


class ToleranceNotReached(NumericalError):
    """Adaptive quadrature hit its recursion cap before meeting the tolerance."""
