"""Shared lazily-built fixtures; heavy objects are cached per (m, n)."""

import functools

from cyclohecke.algebra import Algebra
from cyclohecke.scalars import Field
from cyclohecke.verify import GlobalRep, default_spec


@functools.lru_cache(maxsize=None)
def field(m: int) -> Field:
    return Field(m)


@functools.lru_cache(maxsize=None)
def algebra(m: int, n: int) -> Algebra:
    return Algebra(m, n, field(m))


@functools.lru_cache(maxsize=None)
def oracle(m: int, n: int) -> GlobalRep:
    return GlobalRep(m, n, default_spec(m, n), field(m))


@functools.lru_cache(maxsize=None)
def symbolic_oracle(m: int, n: int) -> GlobalRep:
    return GlobalRep(m, n, field=field(m))
