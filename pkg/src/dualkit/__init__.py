"""dualkit: a workbench for string-diagram rewriting, exact model
categories, idempotent splittings, and equivariant collapse certificates."""

__version__ = "0.1.0"
