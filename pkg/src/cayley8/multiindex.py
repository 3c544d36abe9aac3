"""Multi-index bookkeeping for the exterior algebra over R^8.

Basis k-forms and k-multivectors are keyed by strictly increasing tuples
drawn from {0, ..., 7}.  Every sign-sensitive operation in the package
funnels through the helpers here, so permutation parity is computed in
exactly one place.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable

DIM = 8

MultiIndex = tuple[int, ...]

FULL: MultiIndex = tuple(range(DIM))


def canonicalize(indices: Iterable[int]) -> tuple[MultiIndex, int]:
    """Sort an index sequence into a strictly increasing tuple.

    Returns ``(sorted_tuple, sign)`` where ``sign`` is the parity of the
    sorting permutation, or ``0`` when an index repeats (the alternating
    tensor with a repeated index vanishes).
    """
    idx = list(indices)
    for i in idx:
        if not isinstance(i, int) or not 0 <= i < DIM:
            raise ValueError(f"index {i!r} outside 0..{DIM - 1}")
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j] < idx[j - 1]:
            idx[j], idx[j - 1] = idx[j - 1], idx[j]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


def merge_sign(a: MultiIndex, b: MultiIndex) -> tuple[MultiIndex, int]:
    """Merge two sorted disjoint multi-indices.

    Returns the sorted union and the parity of reordering the concatenation
    ``a + b`` into it; sign 0 when the indices overlap.
    """
    out: list[int] = []
    inv = 0
    i = j = 0
    while i < len(a) and j < len(b):
        if a[i] == b[j]:
            return tuple(sorted(a + b)), 0
        if a[i] < b[j]:
            out.append(a[i])
            i += 1
        else:
            # b[j] jumps over the len(a) - i remaining entries of a
            inv += len(a) - i
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out), (-1) ** (inv % 2)


def complement(idx: MultiIndex) -> MultiIndex:
    present = set(idx)
    return tuple(i for i in range(DIM) if i not in present)


@lru_cache(maxsize=None)
def star_sign(idx: MultiIndex) -> int:
    """Parity of the permutation (idx, complement(idx)) of (0, ..., 7)."""
    _, sign = merge_sign(idx, complement(idx))
    return sign


def contraction(key_mv: MultiIndex, key_form: MultiIndex) -> tuple[MultiIndex, int] | None:
    """Contract the basis multivector ``key_mv`` into the basis form ``key_form``.

    Returns ``(remaining_index, sign)`` or ``None`` when ``key_mv`` is not a
    subset of ``key_form``.  The sign matches iterated single-vector
    contraction applied smallest factor first (see ``tensor.contract``).
    """
    remaining = list(key_form)
    exponent = 0
    for removed, j in enumerate(key_mv):
        try:
            pos = key_form.index(j)
        except ValueError:
            return None
        # earlier removals all sit left of j, shifting its slot down
        exponent += pos - removed
        remaining.remove(j)
    return tuple(remaining), (-1) ** (exponent % 2)


@lru_cache(maxsize=None)
def basis(k: int) -> tuple[MultiIndex, ...]:
    """All strictly increasing k-tuples in lexicographic order."""
    if not 0 <= k <= DIM:
        return ()
    return tuple(combinations(range(DIM), k))


@lru_cache(maxsize=None)
def _basis_positions(k: int) -> dict[MultiIndex, int]:
    return {idx: n for n, idx in enumerate(basis(k))}


def basis_position(idx: MultiIndex) -> int:
    """Position of a sorted multi-index within ``basis(len(idx))``."""
    return _basis_positions(len(idx))[idx]
