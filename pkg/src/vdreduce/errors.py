"""Exception hierarchy shared by the pipeline stages and the CLI."""


class InputError(ValueError):
    """Malformed or inconsistent user input (CLI exit status 2)."""


class InternalError(RuntimeError):
    """A construction invariant failed (CLI exit status 3)."""
