"""Exception taxonomy shared across the package.

The CLI maps these onto exit codes: InputError -> 3 (data/validation),
NumericalError -> 4 (internal numerical failure). Usage errors (bad flags,
missing mode inputs) are raised as click.UsageError and exit with 2.
"""


class InputError(ValueError):
    """A rejected input: bad shapes, broken invariants, invalid values."""


class NumericalError(RuntimeError):
    """A numerical failure: non-finite results, failed sanity gates."""
