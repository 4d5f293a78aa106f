"""Domain layer."""
from . import entities
from . import value_objects
from . import exceptions

__all__ = ["entities", "value_objects", "exceptions"]
