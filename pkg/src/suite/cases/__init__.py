"""
Built-in theorem cases; importing this package registers them.
"""
from . import constructions, core, duo, families  # noqa: F401
