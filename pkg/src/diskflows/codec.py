"""Linear codes for decorated plane rooted trees.

The code of a tree is its level-order sequence of up-degrees, one token
per vertex.  A token carries an overline when the edge below its vertex
has color -1 and a prime when that edge is labelled as entering the
elliptic corner of the cell above it.  In text form an overline is ``~``
and a prime is ``'``, in that order, e.g. ``20~0~'``.

Two text layouts exist.  The compact form concatenates the tokens and is
only possible when every value is a single digit; the spaced form
separates tokens with single spaces.  Presence of whitespace in the
input decides which grammar applies.

A code is *admissible* when it satisfies the four necessary conditions
checked by :func:`check_admissible`:

1. the token count is one more than the sum of the values;
2. the first token carries no marks;
3. for every k up to the sum n, the first k values sum to at least k;
4. around any primed token, the siblings carry no other prime and share
   one overline state, opposite to the parent token's state.

Conditions 1 and 3 make the value sequence decodable into a tree.
Admissibility is necessary but not sufficient: a code is *realizable*
(comes from an actual flow) exactly when, in addition, no cell of the
decoded tree has a boundary with two or more source corners.  See
:func:`check_realizable`, which is the authoritative test.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .model import (
    BLACK,
    RED,
    ROOT_LOWER_DIRECTION,
    CellKind,
    DistinguishedGraph,
    PlaneRootedTree,
    boundary_directions,
    classify_cell,
    source_corner_count,
)

MAX_TOKEN_VALUE = 2**32 - 1

PROPERTY_NAMES = ("length", "first token marks", "prefix sums", "prime groups")


class CodeSyntaxError(ValueError):
    """Raised when code text does not match the grammar."""


@dataclass(frozen=True, order=True, slots=True)
class CodeToken:
    value: int
    overline: bool = False
    prime: bool = False

    def __post_init__(self) -> None:
        if not 0 <= self.value <= MAX_TOKEN_VALUE:
            raise ValueError(
                f"token value must lie in [0, {MAX_TOKEN_VALUE}], got {self.value}"
            )

    def text(self) -> str:
        return f"{self.value}{'~' if self.overline else ''}{chr(39) if self.prime else ''}"


@dataclass(frozen=True, order=True, slots=True)
class Code:
    tokens: tuple[CodeToken, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", tuple(self.tokens))
        if not self.tokens:
            raise ValueError("a code has at least one token")

    @property
    def n(self) -> int:
        """Separatrix count claimed by the code: the sum of the values."""
        return sum(t.value for t in self.tokens)

    def __str__(self) -> str:
        return serialize_code(self)


cached_token = lru_cache(maxsize=None)(CodeToken)


# ======================================================================
# text grammar
# ======================================================================

_SPACED_TOKEN = re.compile(r"(\d+)(~?)('?)\Z", re.ASCII)


def _parse_spaced(text: str) -> list[CodeToken]:
    out = []
    for part in text.split(" "):
        m = _SPACED_TOKEN.match(part)
        if m is None:
            raise CodeSyntaxError(f"malformed token {part!r}")
        value = int(m.group(1))
        if value > MAX_TOKEN_VALUE:
            raise CodeSyntaxError(f"token value {value} out of range")
        out.append(CodeToken(value, m.group(2) == "~", m.group(3) == "'"))
    return out


def _parse_compact(text: str) -> list[CodeToken]:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if not "0" <= ch <= "9":
            raise CodeSyntaxError(f"unexpected character {ch!r} at position {i}")
        i += 1
        overline = i < len(text) and text[i] == "~"
        if overline:
            i += 1
        prime = i < len(text) and text[i] == "'"
        if prime:
            i += 1
        out.append(CodeToken(int(ch), overline, prime))
    return out


def parse_code(text: str) -> Code:
    """Parse code text, spaced or compact."""
    s = text.strip()
    if not s:
        raise CodeSyntaxError("empty code text")
    if any(ch.isspace() for ch in s):
        tokens = _parse_spaced(s)
    else:
        tokens = _parse_compact(s)
    if tokens[0].overline or tokens[0].prime:
        raise CodeSyntaxError("the first token of a code carries no marks")
    return Code(tuple(tokens))


def serialize_code(code: Code) -> str:
    """Canonical text: compact when every value fits in one digit."""
    parts = [t.text() for t in code.tokens]
    if all(t.value <= 9 for t in code.tokens):
        return "".join(parts)
    return " ".join(parts)


# ======================================================================
# validation
# ======================================================================

@dataclass(frozen=True)
class PropertyCheck:
    passed: bool
    token_index: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class AdmissibilityReport:
    checks: tuple[PropertyCheck, PropertyCheck, PropertyCheck, PropertyCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failing(self) -> tuple[int, ...]:
        """1-based numbers of the failed properties."""
        return tuple(i + 1 for i, c in enumerate(self.checks) if not c.passed)


@dataclass(frozen=True)
class ValidationReport:
    admissible: AdmissibilityReport
    realizable: bool
    offending_vertex: int | None = None
    offending_boundary: tuple[int, ...] | None = None
    detail: str = ""


def _check_length(code: Code) -> PropertyCheck:
    n = code.n
    count = len(code.tokens)
    if count == n + 1:
        return PropertyCheck(True)
    if count > n + 1:
        return PropertyCheck(
            False, n + 1, f"{count} tokens but the values sum to {n}, expected {n + 1}"
        )
    return PropertyCheck(
        False, None, f"{count} tokens but the values sum to {n}, expected {n + 1}"
    )


def _check_first_marks(code: Code) -> PropertyCheck:
    t = code.tokens[0]
    if t.overline or t.prime:
        return PropertyCheck(False, 0, "the first token carries a mark")
    return PropertyCheck(True)


def _check_prefix_sums(code: Code) -> PropertyCheck:
    values = [t.value for t in code.tokens]
    n = sum(values)
    prefix = 0
    for k in range(1, n + 1):
        prefix += values[k - 1] if k - 1 < len(values) else 0
        if prefix < k:
            idx = min(k, len(values) - 1)
            return PropertyCheck(
                False, idx, f"sum of the first {k} values is {prefix}, needs >= {k}"
            )
    return PropertyCheck(True)


def _decodable(code: Code) -> bool:
    return _check_length(code).passed and _check_prefix_sums(code).passed


def _check_prime_groups(code: Code) -> PropertyCheck:
    if not _decodable(code):
        return PropertyCheck(True, None, "not evaluated: values do not form a tree")
    tree = PlaneRootedTree.from_up_degrees([t.value for t in code.tokens])
    toks = code.tokens
    for v, kids in enumerate(tree.children):
        primed = [c for c in kids if toks[c].prime]
        if not primed:
            continue
        if len(primed) > 1:
            return PropertyCheck(
                False, primed[1], f"tokens {primed[0]} and {primed[1]} are both primed"
            )
        shared = toks[primed[0]].overline
        for c in kids:
            if toks[c].overline != shared:
                return PropertyCheck(
                    False,
                    c,
                    f"token {c} differs in overline from its primed sibling {primed[0]}",
                )
        if toks[v].overline == shared:
            return PropertyCheck(
                False,
                primed[0],
                f"token {v} must carry the opposite overline state of its children",
            )
    return PropertyCheck(True)


def check_admissible(code: Code) -> AdmissibilityReport:
    """Check the four necessary code properties."""
    return AdmissibilityReport(
        (
            _check_length(code),
            _check_first_marks(code),
            _check_prefix_sums(code),
            _check_prime_groups(code),
        )
    )


def check_realizable(code: Code) -> ValidationReport:
    """Authoritative validity test: admissible and every cell of the
    decoded tree is cyclic or polar, with primes only in cyclic cells."""
    adm = check_admissible(code)
    if not adm.passed:
        return ValidationReport(
            adm, False, detail="fails necessary code properties " + str(adm.failing)
        )
    graph = code_to_graph(code)
    parents = graph.tree.parents()
    for v in range(graph.tree.vertex_count):
        b = boundary_directions(graph, v)
        if classify_cell(b) is CellKind.INVALID:
            return ValidationReport(
                adm,
                False,
                offending_vertex=v,
                offending_boundary=b.sides,
                detail=f"cell at vertex {v} has {source_corner_count(b)} source corners",
            )
    for v in range(1, graph.tree.vertex_count):
        if graph.primes[v]:
            p = parents[v]
            b = boundary_directions(graph, p)
            if classify_cell(b) is not CellKind.CYCLIC:
                return ValidationReport(
                    adm,
                    False,
                    offending_vertex=p,
                    offending_boundary=b.sides,
                    detail=f"prime on vertex {v} but the cell at vertex {p} is not cyclic",
                )
    return ValidationReport(adm, True)


# ======================================================================
# code <-> decorated tree
# ======================================================================

def code_to_graph(code: Code) -> DistinguishedGraph:
    """Decode a code into a decorated tree (needs properties 1 and 3)."""
    try:
        tree = PlaneRootedTree.from_up_degrees([t.value for t in code.tokens])
    except ValueError as exc:
        raise ValueError(f"code {serialize_code(code)!r} is not a tree sequence: {exc}")
    colors = (ROOT_LOWER_DIRECTION,) + tuple(
        RED if t.overline else BLACK for t in code.tokens[1:]
    )
    primes = (False,) + tuple(t.prime for t in code.tokens[1:])
    return DistinguishedGraph(tree, colors, primes)


def graph_to_code(graph: DistinguishedGraph) -> Code:
    """Encode a decorated tree; inverse of :func:`code_to_graph`."""
    tree = graph.tree
    tokens = [cached_token(len(tree.children[0]), False, False)]
    for v in range(1, tree.vertex_count):
        tokens.append(
            cached_token(
                len(tree.children[v]), graph.colors[v] == RED, graph.primes[v]
            )
        )
    return Code(tuple(tokens))


def are_equivalent(a: Code, b: Code) -> bool:
    """Whether two realizable codes denote the same flow class.

    Codes classify flows exactly, so this is token equality; passing an
    unrealizable code is an error.
    """
    for c in (a, b):
        if not check_realizable(c).realizable:
            raise ValueError(f"code {serialize_code(c)!r} is not realizable")
    return a.tokens == b.tokens


# ======================================================================
# JSON interchange for decorated trees
# ======================================================================

def graph_to_json(graph: DistinguishedGraph) -> dict:
    """Plain-dict form of a decorated tree, vertices in level order."""
    tree = graph.tree
    parents = tree.parents()
    vertices = []
    for v in range(tree.vertex_count):
        vertices.append(
            {
                "id": v,
                "parent": parents[v],
                "children": list(tree.children[v]),
                "color": None if v == 0 else graph.colors[v],
                "prime": graph.primes[v],
            }
        )
    return {"separatrices": tree.separatrix_count, "vertices": vertices}


def graph_from_json(doc: dict) -> DistinguishedGraph:
    """Rebuild a decorated tree from its plain-dict form."""
    if not isinstance(doc, dict):
        raise ValueError("graph document must be an object")
    try:
        declared_n = doc["separatrices"]
        vertices = doc["vertices"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"graph document lacks required key: {exc}")
    if not isinstance(vertices, list) or not vertices:
        raise ValueError("graph document needs a non-empty vertex list")

    children = []
    colors = [ROOT_LOWER_DIRECTION]
    primes = [False]
    declared_parents = []
    for i, entry in enumerate(vertices):
        if not isinstance(entry, dict):
            raise ValueError(f"vertex {i} is not an object")
        for key in ("id", "parent", "children", "color", "prime"):
            if key not in entry:
                raise ValueError(f"vertex {i} lacks key {key!r}")
        if entry["id"] != i:
            raise ValueError(f"vertex ids must run 0..{len(vertices) - 1} in order")
        kids = entry["children"]
        if not isinstance(kids, list) or not all(isinstance(c, int) for c in kids):
            raise ValueError(f"children of vertex {i} must be a list of ids")
        children.append(tuple(kids))
        declared_parents.append(entry["parent"])
        if i == 0:
            if entry["color"] is not None:
                raise ValueError("the root has no color")
            if entry["prime"]:
                raise ValueError("the root carries no prime")
        else:
            if entry["color"] not in (BLACK, RED):
                raise ValueError(f"vertex {i} needs color 1 or -1")
            colors.append(entry["color"])
            primes.append(bool(entry["prime"]))

    tree = PlaneRootedTree(tuple(children))
    if declared_parents != list(tree.parents()):
        raise ValueError("declared parents disagree with the child lists")
    if declared_n != tree.separatrix_count:
        raise ValueError(
            f"separatrices is {declared_n}, child lists give {tree.separatrix_count}"
        )
    return DistinguishedGraph(tree, tuple(colors), tuple(primes))
