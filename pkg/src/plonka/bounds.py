"""Shared search and enumeration bounds.

Every potentially explosive engine takes a :class:`Bounds` value and refuses
to exceed it by raising :class:`BoundExceeded` (never by silently truncating),
so an over-budget computation is always distinguishable from a negative
answer.  The defaults are the desk-scale values used throughout the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Bounds:
    max_carrier: int = 6          # congruence enumeration oracle; Bell(6) = 203 partitions
    max_subsets: int = 4096       # filter enumeration; 2^12 subsets at carrier 12
    product_guard: int = 100_000  # canonical product construction, generated elements
    scheme_depth: int = 2         # context instantiation depth in proof search
    proof_steps: int = 2000       # bounded_prove fact budget
    substitution_depth: int = 2   # substitution pool depth in proof search
    seed: int = 0
    jobs: int = 1

    def with_(self, **kwargs) -> "Bounds":
        return replace(self, **kwargs)


DEFAULT = Bounds()


class BoundExceeded(RuntimeError):
    """An enumeration refused to run past its configured bound."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = details
