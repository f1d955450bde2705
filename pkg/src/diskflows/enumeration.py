"""Exhaustive generation of flow classes and their counting table.

A level-order up-degree sequence describes a plane rooted tree exactly
when its values sum to one less than its length and every prefix of k
values sums to at least k.  Trees are generated directly in that form.
Decorating a tree is independent cell by cell: each vertex with k
children contributes a factor (k+1)(k+2)/2, so class counts come from a
product formula while the codes themselves come from composing the
per-cell configurations down the tree.

Setting the environment variable DISKFLOWS_WORKERS (or the ``workers``
argument) spreads code generation over processes; results are sorted
afterwards, so the output never depends on it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from multiprocessing import get_context

from .codec import Code, cached_token, serialize_code
from .model import PlaneRootedTree, RED, cell_config_count, enumerate_cell_configs

WORKERS_ENV = "DISKFLOWS_WORKERS"


# ======================================================================
# plane trees and their isomorphism classes
# ======================================================================

def _up_degree_sequences(n: int):
    """Level-order up-degree sequences of length n+1, descending lex."""
    seq: list[int] = []

    def rec(placed: int, k: int):
        if k == n + 1:
            if placed == n:
                yield tuple(seq)
            return
        for d in range(n - placed, -1, -1):
            new_sum = placed + d
            if k + 1 <= n and new_sum < k + 1:
                continue
            seq.append(d)
            yield from rec(new_sum, k + 1)
            seq.pop()

    yield from rec(0, 0)


def plane_trees(n: int) -> list[PlaneRootedTree]:
    """All plane rooted trees with n edges, descending lex by up-degrees."""
    if n < 0:
        raise ValueError("edge count is non-negative")
    return [PlaneRootedTree.from_up_degrees(s) for s in _up_degree_sequences(n)]


def _abstract_key(tree: PlaneRootedTree, v: int = 0):
    return tuple(sorted(_abstract_key(tree, c) for c in tree.children[v]))


def abstract_classes(n: int) -> list[tuple[PlaneRootedTree, int]]:
    """Isomorphism classes of rooted trees with n edges.

    Returns (representative, embedding count) pairs, the representative
    being the member with the smallest up-degree sequence, sorted by
    that sequence.
    """
    groups: dict[tuple, list[PlaneRootedTree]] = {}
    for tree in plane_trees(n):
        groups.setdefault(_abstract_key(tree), []).append(tree)
    out = [
        (min(members, key=lambda t: t.up_degrees), len(members))
        for members in groups.values()
    ]
    out.sort(key=lambda pair: pair[0].up_degrees)
    return out


# ======================================================================
# flow classes
# ======================================================================

def flows_per_tree(tree: PlaneRootedTree) -> int:
    """Number of flow classes over one plane tree: the product of the
    per-cell configuration counts."""
    total = 1
    for kids in tree.children:
        total *= cell_config_count(len(kids))
    return total


def _codes_for_tree(up_degrees: tuple[int, ...]) -> list[Code]:
    """All codes over one plane tree, by depth-first composition of the
    per-cell configurations in level order."""
    tree = PlaneRootedTree.from_up_degrees(up_degrees)
    v_count = tree.vertex_count
    colors = [1] * v_count
    primes = [False] * v_count
    out: list[Code] = []

    def rec(v: int) -> None:
        if v == v_count:
            out.append(
                Code(
                    tuple(
                        cached_token(up_degrees[i], colors[i] == RED, primes[i])
                        for i in range(v_count)
                    )
                )
            )
            return
        kids = tree.children[v]
        for dec in enumerate_cell_configs(len(kids), colors[v]):
            for j, c in enumerate(kids):
                colors[c] = dec.child_colors[j]
                primes[c] = dec.child_primes[j]
            rec(v + 1)

    rec(0)
    return out


def _resolve_workers(workers: int | None) -> int:
    if workers is None:
        raw = os.environ.get(WORKERS_ENV, "")
        try:
            workers = int(raw) if raw else 1
        except ValueError:
            workers = 1
    return max(1, workers)


def enumerate_flows(n: int, workers: int | None = None) -> list[Code]:
    """All realizable codes with n separatrices, sorted token-wise."""
    if n < 0:
        raise ValueError("separatrix count is non-negative")
    seqs = list(_up_degree_sequences(n))
    workers = _resolve_workers(workers)
    if workers > 1 and len(seqs) > 1:
        with get_context().Pool(processes=min(workers, len(seqs))) as pool:
            chunks = pool.map(_codes_for_tree, seqs)
    else:
        chunks = [_codes_for_tree(s) for s in seqs]
    codes = [code for chunk in chunks for code in chunk]
    codes.sort()
    return codes


def count_flows(n: int, workers: int | None = None) -> int:
    """Number of flow classes with n separatrices, without materializing
    the codes."""
    del workers  # counting is a cheap product formula either way
    if n < 0:
        raise ValueError("separatrix count is non-negative")
    return sum(flows_per_tree(t) for t in plane_trees(n))


# ======================================================================
# counting table
# ======================================================================

@dataclass(frozen=True)
class TableRow:
    n: int
    abstract_tree: str
    flows_per_embedding: int
    embeddings: int
    total: int


def _tree_code_text(tree: PlaneRootedTree) -> str:
    return serialize_code(Code(tuple(cached_token(d) for d in tree.up_degrees)))


def table_rows(max_n: int) -> list[TableRow]:
    """One row per isomorphism class of rooted trees, for n = 0..max_n."""
    if max_n < 0:
        raise ValueError("edge count is non-negative")
    rows = []
    for n in range(max_n + 1):
        for rep, embeddings in abstract_classes(n):
            flows = flows_per_tree(rep)
            rows.append(
                TableRow(n, _tree_code_text(rep), flows, embeddings, flows * embeddings)
            )
    return rows


CSV_HEADER = "n,abstract_tree,flows_per_embedding,embeddings,total"


def table_to_csv(rows: list[TableRow]) -> str:
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.n},{r.abstract_tree},{r.flows_per_embedding},{r.embeddings},{r.total}"
        )
    return "\n".join(lines) + "\n"


def codes_to_text(codes: list[Code]) -> str:
    return "\n".join(serialize_code(c) for c in codes) + "\n"
