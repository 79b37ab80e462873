"""Exception types shared across the package.

All of these subclass ValueError or RuntimeError so callers that do not
care about the distinction can catch the usual built-ins.  The CLI maps
them onto exit codes: bad input -> 2, violated precondition -> 3,
verification failure -> 4.
"""


class BadInputError(ValueError):
    """Malformed or out-of-range input (CLI exit code 2)."""


class ModulusMismatchError(BadInputError):
    """Two residues from different moduli were combined."""


class NotAGroupElementError(BadInputError):
    """A residue of 0 was passed where an element of F_p* is required."""


class SieveBudgetError(BadInputError):
    """An enumeration range exceeds the configured sieve budget."""


class TableBudgetError(BadInputError):
    """A baby-step table would exceed the configured memory budget."""


class NotPrimeError(ValueError):
    """The modulus is not prime (CLI exit code 3)."""


class NotPrimitiveError(ValueError):
    """2 is not a primitive root of the given prime (CLI exit code 3)."""


class IterationGuardError(RuntimeError):
    """The solver loop guard tripped; the modulus was not honestly certified."""


class VerificationError(RuntimeError):
    """A cross-validation sweep found a mismatch (CLI exit code 4)."""
