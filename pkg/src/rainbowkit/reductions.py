"""Reductions onto the rainbow-matching engine: row-distinct matrix
transversals and zero-sum sub-multisets of residues."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Union

from .errors import GuaranteeViolation, PreconditionError, RowDuplicateError, TheoremViolation
from .graph_core import MatchingFamily, edge, validate_matching
from .rainbow_solver import find_rainbow_matching


@dataclass(frozen=True, slots=True)
class SymbolMatrix:
    """A rectangular matrix of integer symbols, distinct within each row."""

    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        if not cells or not cells[0]:
            raise PreconditionError("matrix must have at least one row and column")
        width = len(cells[0])
        for r, row in enumerate(cells):
            if len(row) != width:
                raise PreconditionError(f"row {r} has {len(row)} cells, expected {width}")
            seen: set[int] = set()
            for symbol in row:
                if symbol in seen:
                    raise RowDuplicateError(r, symbol)
                seen.add(symbol)

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])


@dataclass(frozen=True, slots=True)
class Transversal:
    """Matrix positions, no two sharing a row, a column, or a symbol."""

    entries: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.entries)


def transversal_is_valid(matrix: SymbolMatrix, transversal: Transversal,
                         full: bool = True) -> bool:
    """Check the three distinctness constraints (and fullness) from scratch."""
    entries = sorted(transversal.entries)
    if not all(0 <= r < matrix.rows and 0 <= c < matrix.cols for r, c in entries):
        return False
    rows = [r for r, _ in entries]
    cols = [c for _, c in entries]
    symbols = [matrix.cells[r][c] for r, c in entries]
    distinct = (len(set(rows)) == len(rows) and len(set(cols)) == len(cols)
                and len(set(symbols)) == len(symbols))
    if full:
        return distinct and len(entries) == min(matrix.rows, matrix.cols)
    return distinct


def matrix_to_family(matrix: SymbolMatrix) -> MatchingFamily:
    """One matching per row, joining each column to the symbol it holds there.

    Symbols index the right side through their sorted order over the whole
    matrix, so equal symbols in different rows meet the same right vertex.
    """
    rank = {s: i for i, s in enumerate(sorted({s for row in matrix.cells for s in row}))}
    members = tuple(
        validate_matching(edge(col, rank[s]) for col, s in enumerate(row))
        for row in matrix.cells)
    return MatchingFamily(members)


def find_transversal(matrix: SymbolMatrix) -> Optional[Transversal]:
    """A full transversal via the rainbow solver, or None.

    Each rainbow edge, column j matched to a symbol and colored by row i,
    pulls back to the entry (i, j). Success is guaranteed once the row count
    reaches twice the column count minus one; a miss there raises
    GuaranteeViolation. The pulled-back entries are revalidated from scratch.
    """
    target = min(matrix.rows, matrix.cols)
    rainbow = find_rainbow_matching(matrix_to_family(matrix), target)
    if rainbow is None:
        if matrix.rows >= 2 * matrix.cols - 1:
            raise GuaranteeViolation(
                "row count reaches the transversal guarantee but none was found")
        return None
    result = Transversal(frozenset((row, e.left.index) for row, e in rainbow.entries))
    if not transversal_is_valid(matrix, result):
        raise GuaranteeViolation("pulled-back transversal failed revalidation")
    return result


@dataclass(frozen=True, slots=True)
class ResidueMultiset:
    """A multiset of residues modulo a positive modulus, stored sorted."""

    modulus: int
    elements: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise PreconditionError(f"modulus must be positive, got {self.modulus}")
        ordered = tuple(sorted(self.elements))
        object.__setattr__(self, "elements", ordered)
        if any(not 0 <= e < self.modulus for e in ordered):
            raise PreconditionError(
                f"every element must lie in [0, {self.modulus}), got {ordered}")

    def __len__(self) -> int:
        return len(self.elements)


def egz_family(multiset: ResidueMultiset) -> MatchingFamily:
    """One shift matching per element, sorted and with multiplicity.

    Element a becomes the perfect matching joining each left residue i to the
    right residue i + a mod n; color k corresponds to ``elements[k]``.
    """
    n = multiset.modulus
    members = tuple(
        validate_matching(edge(i, (i + a) % n) for i in range(n))
        for a in multiset.elements)
    return MatchingFamily(members)


def find_zero_sum_subset(multiset: ResidueMultiset) -> Optional[tuple[int, ...]]:
    """A size-n sub-multiset summing to zero mod n, or None.

    Solved as a full rainbow matching on the shift family: such a matching
    covers every left and every right residue exactly once, so the chosen
    shifts telescope to zero mod n. Guaranteed to exist from 2n-1 elements
    up; a miss there raises GuaranteeViolation. The witness is re-verified
    (size, sum, sub-multiset) before it is returned.
    """
    n = multiset.modulus
    rainbow = find_rainbow_matching(egz_family(multiset), n)
    if rainbow is None:
        if len(multiset) >= 2 * n - 1:
            raise GuaranteeViolation(
                "enough residues for the zero-sum guarantee but none was found")
        return None
    witness = tuple(sorted(multiset.elements[c] for c in rainbow.colors))
    if (len(witness) != n or sum(witness) % n != 0
            or Counter(witness) - Counter(multiset.elements)):
        raise GuaranteeViolation("zero-sum witness failed revalidation")
    return witness


@dataclass(frozen=True, slots=True)
class HasZeroSum:
    witness: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class ExtremalPair:
    low: int
    high: int


MultisetClassification = Union[HasZeroSum, ExtremalPair]


def classify_multiset(multiset: ResidueMultiset) -> MultisetClassification:
    """Find a zero-sum sub-multiset or certify the unique blocking shape.

    A multiset of 2n-2 residues with no zero-sum sub-multiset of size n must
    be n-1 copies each of two residues whose difference is coprime to n.
    Anything else failing the solver raises TheoremViolation (a bug flag).
    """
    n = multiset.modulus
    if n < 2:
        raise PreconditionError("classification needs modulus at least 2")
    if len(multiset) != 2 * n - 2:
        raise PreconditionError(
            f"need exactly {2 * n - 2} elements, got {len(multiset)}")
    witness = find_zero_sum_subset(multiset)
    if witness is not None:
        return HasZeroSum(witness)
    counts = Counter(multiset.elements)
    if len(counts) == 2:
        (low, c_low), (high, c_high) = sorted(counts.items())
        if c_low == c_high == n - 1 and math.gcd(high - low, n) == 1:
            return ExtremalPair(low, high)
    raise TheoremViolation("no zero-sum sub-multiset and no blocking pair shape")
