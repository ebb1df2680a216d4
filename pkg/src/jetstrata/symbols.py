"""Boardman symbol arithmetic: validation, codimension bounds, jet dimensions.

A Boardman symbol is a nonincreasing sequence of nonnegative integers
indexing a stratum of the k-jet space of map germs (R^n, 0) -> (R^p, 0).
Only the codimension *lower bound* is computed here; whether a given stratum
is nonempty beyond the basic rank checks is the caller's responsibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


class SymbolError(ValueError):
    """Base class for symbol and jet-context failures."""


class NotMonotone(SymbolError):
    pass


class ExceedsSource(SymbolError):
    pass


class EmptyStratum(SymbolError):
    pass


class HypothesisViolated(SymbolError):
    pass


class KTooSmall(SymbolError):
    pass


class NonzeroTail(SymbolError):
    pass


class _InfiniteOrder:
    """Marker for infinite jet order; finite-order arithmetic rejects it."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __ge__(self, other):
        return isinstance(other, (int, _InfiniteOrder))

    def __gt__(self, other):
        return isinstance(other, int)

    def __le__(self, other):
        return isinstance(other, _InfiniteOrder)

    def __lt__(self, other):
        return False


INFINITE_ORDER = _InfiniteOrder()


def is_finite_order(k) -> bool:
    return not isinstance(k, _InfiniteOrder)


def parse_order(value) -> int | _InfiniteOrder:
    """Jet order from user input: a positive integer or the string ``inf``."""
    if isinstance(value, _InfiniteOrder):
        return value
    if isinstance(value, str):
        if value == "inf":
            return INFINITE_ORDER
        value = int(value)
    if not isinstance(value, int) or value < 1:
        raise SymbolError(f"jet order must be a positive integer or inf, got {value!r}")
    return value


@dataclass(frozen=True, slots=True)
class JetContext:
    """Source dimension, target dimension and jet order.

    Positive dimensions suffice for the counting and bound arithmetic here;
    the statements about deforming maps additionally presuppose n >= p >= 2
    or n < p, which is the caller's hypothesis, not a constructor constraint.
    """

    n: int
    p: int
    k: int | _InfiniteOrder = INFINITE_ORDER

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise SymbolError(f"source dimension must be a positive integer, got {self.n!r}")
        if not isinstance(self.p, int) or self.p < 1:
            raise SymbolError(f"target dimension must be a positive integer, got {self.p!r}")
        if is_finite_order(self.k):
            if not isinstance(self.k, int) or self.k < 1:
                raise SymbolError(f"jet order must be a positive integer or inf, got {self.k!r}")


@dataclass(frozen=True, slots=True)
class BoardmanSymbol:
    """Nonincreasing tuple of nonnegative integers, length at least 1."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise SymbolError("symbol must be nonempty")
        for e in entries:
            if not isinstance(e, int) or e < 0:
                raise SymbolError(f"symbol entries must be nonnegative integers, got {e!r}")
        for a, b in zip(entries, entries[1:]):
            if a < b:
                raise NotMonotone(f"symbol entries increase: {a} < {b} in {entries}")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, index):
        return self.entries[index]


def validate_symbol(entries, ctx: JetContext) -> BoardmanSymbol:
    """Symbol validated against a jet context; no normalization is applied."""
    symbol = entries if isinstance(entries, BoardmanSymbol) else BoardmanSymbol(tuple(entries))
    if symbol.entries[0] > ctx.n:
        raise ExceedsSource(
            f"leading entry {symbol.entries[0]} exceeds source dimension {ctx.n}"
        )
    return symbol


def first_order_codim(i: int, ctx: JetContext) -> int:
    """Codimension of the first-order stratum of kernel rank i: (p-n+i)*i."""
    if not isinstance(i, int) or i < 1:
        raise SymbolError(f"kernel rank must be a positive integer, got {i!r}")
    if i > ctx.n:
        raise ExceedsSource(f"kernel rank {i} exceeds source dimension {ctx.n}")
    if ctx.p - ctx.n + i < 0:
        raise EmptyStratum(
            f"kernel rank below {ctx.n - ctx.p}: every jet (R^{ctx.n} -> R^{ctx.p}) "
            f"drops rank by at least n-p"
        )
    return (ctx.p - ctx.n + i) * i


def codim_lower_bound(sym: BoardmanSymbol, ctx: JetContext) -> int:
    """Lower bound for the stratum codimension of a symbol:
    (p-n+i1)*i1 + (1/2) * sum of i_j*(i_j+1) over the tail entries.

    Requires i1 >= max(n-p+1, 1); the sum is exactly divisible by 2 because
    consecutive integers pair up, so the result is an exact integer.
    """
    first = sym.entries[0]
    if first > ctx.n:
        raise ExceedsSource(f"leading entry {first} exceeds source dimension {ctx.n}")
    floor = max(ctx.n - ctx.p + 1, 1)
    if first < floor:
        raise HypothesisViolated(
            f"leading entry {first} below max(n-p+1, 1) = {floor}"
        )
    tail = sum(e * (e + 1) for e in sym.entries[1:])
    return (ctx.p - ctx.n + first) * first + tail // 2


def tail_vanishing(sym: BoardmanSymbol, ctx: JetContext) -> bool:
    """Whether the next-to-last entry forces the stratum codimension above n.

    For symbols of length k >= n - |n-p| + 2, a positive next-to-last entry
    pushes the codimension to at least |n-p| + k - 1 > n, so any symbol whose
    stratum could meet a source of dimension n must end in two zeros.
    """
    k = len(sym.entries)
    threshold = max(ctx.n - abs(ctx.n - ctx.p) + 2, 2)
    if k < threshold:
        raise KTooSmall(f"symbol length {k} below the forcing threshold {threshold}")
    return sym.entries[-2] > 0


def truncate_symbol(sym: BoardmanSymbol) -> BoardmanSymbol:
    """Drop the final zero of a symbol that ends in 0."""
    if len(sym.entries) < 2:
        raise SymbolError("cannot truncate a length-1 symbol")
    if sym.entries[-1] != 0:
        raise NonzeroTail(f"symbol {sym.entries} does not end in 0")
    return BoardmanSymbol(sym.entries[:-1])


def jet_fiber_dim(ctx: JetContext) -> int:
    """Dimension of the space of k-jets of germs (R^n, 0) -> (R^p, 0):
    p * (C(n+k, n) - 1), the number of target coordinates times the number
    of monomials of degree 1..k in n variables.
    """
    if not is_finite_order(ctx.k):
        raise SymbolError("jet dimension requires a finite jet order")
    return ctx.p * (math.comb(ctx.n + ctx.k, ctx.n) - 1)
