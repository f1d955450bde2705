"""Brute-force cross-checks for the per-cell and whole-tree enumerators.

Everything here recomputes results from first principles: cell
configurations by trying all 2**n colorings of the inner loops and
classifying the resulting corners, and flow classes by decorating every
plane tree with every coloring and every prime placement, keeping what
the authoritative validator accepts.  Plane trees are regenerated here
too, by recursive composition rather than by sequence search.  The only
shared ingredients are the boundary/corner primitives and the validator
itself; in particular nothing here calls the fast per-cell enumerator.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from .codec import Code, cached_token, check_realizable, serialize_code
from .enumeration import count_flows
from .model import (
    COHERENT,
    CellBoundary,
    CellDecoration,
    CornerType,
    CyclicCell,
    PolarCell,
    classify_corners,
)

DEFAULT_BOUND = 5


def oracle_cell_configs(n: int, lower_direction: int) -> list[CellDecoration]:
    """All configurations of one cell, found by exhausting colorings.

    Same ordering contract as the fast enumerator: sorted by the
    (colors, primes) pair.
    """
    if n < 0:
        raise ValueError("inner loop count is non-negative")
    if lower_direction not in (1, -1):
        raise ValueError("lower direction must be +1 or -1")
    out: list[CellDecoration] = []
    for colors in itertools.product((1, -1), repeat=n):
        boundary = CellBoundary((lower_direction,) + tuple(-c for c in colors))
        corners = classify_corners(boundary)
        if corners is COHERENT:
            for entry in range(n + 1):
                primes = tuple(i == entry - 1 for i in range(n))
                out.append(CellDecoration(CyclicCell(entry), colors, primes))
            continue
        sources = [i for i, c in enumerate(corners) if c is CornerType.SOURCE]
        if len(sources) != 1:
            continue
        sink = next(i for i, c in enumerate(corners) if c is CornerType.SINK)
        out.append(
            CellDecoration(PolarCell(sources[0], sink), colors, (False,) * n)
        )
    out.sort(key=lambda dec: (dec.child_colors, dec.child_primes))
    return out


def _nested_trees(n: int):
    """Plane trees with n edges as nested child tuples, by the standard
    first-subtree decomposition."""
    if n == 0:
        yield ()
        return
    for k in range(1, n + 1):
        for first in _nested_trees(k - 1):
            for rest in _nested_trees(n - k):
                yield (first,) + rest


def _nested_up_degrees(nested) -> tuple[int, ...]:
    seq = []
    queue = deque([nested])
    while queue:
        node = queue.popleft()
        seq.append(len(node))
        queue.extend(node)
    return tuple(seq)


@dataclass(frozen=True)
class DiscrepancyReport:
    n: int
    fast_count: int
    oracle_count: int
    admissible_only_count: int
    witnesses: tuple[Code, ...]

    @property
    def agrees(self) -> bool:
        return self.fast_count == self.oracle_count

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "fast_count": self.fast_count,
            "oracle_count": self.oracle_count,
            "admissible_only_count": self.admissible_only_count,
            "witnesses": [serialize_code(w) for w in self.witnesses],
        }

    def to_text(self) -> str:
        lines = [
            f"n: {self.n}",
            f"fast count: {self.fast_count}",
            f"oracle count: {self.oracle_count}",
            f"agreement: {'yes' if self.agrees else 'NO'}",
            f"admissible but unrealizable: {self.admissible_only_count}",
        ]
        if self.witnesses:
            lines.append("witnesses:")
            lines.extend(f"  {serialize_code(w)}" for w in self.witnesses)
        return "\n".join(lines) + "\n"


def oracle_enumerate(n: int, *, bound: int = DEFAULT_BOUND) -> tuple[set[Code], DiscrepancyReport]:
    """Realizable codes with n separatrices, found by filtering every
    decoration of every tree through the validator.

    Runtime grows as 4**n per tree, hence the bound (raise it to 6 if
    you can wait).  Also tallies the codes that pass the four necessary
    properties yet fail realizability, returning them as witnesses.
    """
    if n < 0:
        raise ValueError("separatrix count is non-negative")
    if n > bound:
        raise ValueError(f"oracle bound exceeded: n={n} > {bound}")
    realizable: set[Code] = set()
    witnesses: list[Code] = []
    admissible_total = 0
    for nested in _nested_trees(n):
        values = _nested_up_degrees(nested)
        root = cached_token(values[0], False, False)
        for colors in itertools.product((False, True), repeat=n):
            for primes in itertools.product((False, True), repeat=n):
                tokens = (root,) + tuple(
                    cached_token(values[v], colors[v - 1], primes[v - 1])
                    for v in range(1, n + 1)
                )
                code = Code(tokens)
                report = check_realizable(code)
                if not report.admissible.passed:
                    continue
                admissible_total += 1
                if report.realizable:
                    realizable.add(code)
                else:
                    witnesses.append(code)
    witnesses.sort()
    report = DiscrepancyReport(
        n=n,
        fast_count=count_flows(n),
        oracle_count=len(realizable),
        admissible_only_count=admissible_total - len(realizable),
        witnesses=tuple(witnesses),
    )
    return realizable, report
