"""Exception types shared across the package."""


class IntegrityError(RuntimeError):
    """An internal consistency guarantee failed; indicates a bug, not bad input."""


class SchemaError(ValueError):
    """A document does not match the expected JSON schema."""
