"""Error types shared across the library and mapped to CLI exit codes."""


class InvalidArgumentError(ValueError):
    """An input lies outside an operation's domain (CLI exit code 2)."""


class ResourceLimitError(RuntimeError):
    """A configured enumeration or search budget was exceeded (CLI exit code 3)."""
