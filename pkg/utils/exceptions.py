# SPDX-FileCopyrightText: 2025-present OpenRefactory, Inc.
#
# SPDX-License-Identifier: Apache-2.0

class CFLatticeError(Exception):
    """
    Base class for every error raised by the lattice library and the simulation harness.
    """


class EmptyConstraint(CFLatticeError):
    """The coefficient box (or admissible set) contains no integer vector."""


class RankDeficient(CFLatticeError):
    """A generator matrix is singular or malformed."""


class NotPositiveDefinite(CFLatticeError):
    """A Gram matrix is not symmetric positive definite."""


class NotNested(CFLatticeError):
    """The coarse lattice is not a sublattice of the fine lattice."""


class TooLarge(CFLatticeError):
    """An enumeration would exceed the configured size cap."""


class EmptyCodebook(CFLatticeError):
    """A statistic was requested over an empty codebook."""


class PowerExceeded(CFLatticeError):
    """The codebook violates the symmetric power constraint."""


class BothZero(CFLatticeError):
    """Both integers handed to the extended Euclidean algorithm are zero."""


class NoSolution(CFLatticeError):
    """The linear diophantine equation has no integer solution."""


class NotInLattice(CFLatticeError):
    """The target vector is not a point of the fine lattice."""


class NotIntegral(CFLatticeError):
    """An integer matrix was expected."""


class ShapeMismatch(CFLatticeError):
    """Array dimensions disagree with each other."""


class DegenerateGeometry(CFLatticeError):
    """The likelihood geometry cannot be reduced to a diophantine approximation."""


class ZeroProbability(CFLatticeError):
    """A sum codeword with zero prior probability was supplied."""


class InvalidParameter(CFLatticeError):
    """A numeric argument lies outside its domain."""


class InvalidChannel(CFLatticeError):
    """A channel realization violates its invariants."""


class InvalidCodeVector(CFLatticeError):
    """A network code vector violates its invariants."""


class ConfigError(CFLatticeError):
    """
    A configuration document is unreadable or invalid.

    Attributes
    ----------
    key: str | None
        Dotted path of the offending configuration key, when known.
    """

    def __init__(self, message: str, key: str | None = None):
        super().__init__(message if key is None else f"{key}: {message}")
        self.key = key
