"""m-partitions, standard m-tableaux, node contents and content strings.

An m-partition is an m-tuple of Young diagrams (weakly decreasing tuples of
positive row lengths); its length is the total number of nodes.  A standard
m-tableau fills the nodes with 1..n increasing along rows and columns of
every component.  The content of the node in row r, column s of component k
is v_k q^(2(s-r)); contents are handled structurally as integer pairs
(k, z) and only materialized as Scalars on demand, so the combinatorial
checks are pure integer work.

Everything here is a pure function over immutable values.
"""

from __future__ import annotations

import itertools

from .scalars import Field, Scalar

__all__ = [
    "MPartition",
    "StandardMTableau",
    "ContentString",
    "InvalidContentStringError",
    "as_mpartition",
    "mpartition_length",
    "partitions",
    "enumerate_mpartitions",
    "enumerate_standard_tableaux",
    "count_standard_tableaux",
    "is_content_pairs",
    "is_content_string",
    "content_string",
    "tableau_from_content_pairs",
    "tableau_from_content_string",
    "apply_transposition",
    "all_content_pair_strings",
]

# An MPartition is a plain tuple of m component tuples, e.g. ((2, 1), (), (1,)).
MPartition = tuple


class InvalidContentStringError(ValueError):
    """Raised when a string fails the content-string conditions."""


def as_mpartition(components, m: int | None = None) -> MPartition:
    """Normalize and validate an m-partition given as nested sequences."""
    shape = tuple(tuple(int(x) for x in comp) for comp in components)
    if m is not None and len(shape) != m:
        raise ValueError(f"expected {m} components, got {len(shape)}")
    for comp in shape:
        if any(x <= 0 for x in comp):
            raise ValueError("row lengths must be positive")
        if any(comp[i] < comp[i + 1] for i in range(len(comp) - 1)):
            raise ValueError(f"component {comp} is not weakly decreasing")
    return shape


def mpartition_length(shape: MPartition) -> int:
    return sum(sum(comp) for comp in shape)


def partitions(n: int):
    """All partitions of n, first part descending (so (3,), (2,1), (1,1,1))."""
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _bounded_partitions(n - first, first):
            yield (first,) + rest


def _bounded_partitions(n, bound):
    if n == 0:
        yield ()
        return
    for first in range(min(n, bound), 0, -1):
        for rest in _bounded_partitions(n - first, first):
            yield (first,) + rest


def enumerate_mpartitions(m: int, n: int) -> list[MPartition]:
    """All m-partitions of length n, in a fixed deterministic order.

    The size of the first component descends, then its partition, then the
    remaining components recursively; for m=2, n=2 this gives
    ((2),()), ((1,1),()), ((1),(1)), ((),(2)), ((),(1,1)).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return [(p,) for p in partitions(n)]
    out = []
    for n1 in range(n, -1, -1):
        for p in partitions(n1):
            for rest in enumerate_mpartitions(m - 1, n - n1):
                out.append((p,) + rest)
    return out


def _corners(shape):
    """Removable nodes as 0-based (component, row, col), ascending."""
    out = []
    for ci, comp in enumerate(shape):
        for r, length in enumerate(comp):
            if r == len(comp) - 1 or comp[r + 1] < length:
                out.append((ci, r, length - 1))
    return out


def _remove_node(shape, ci, r):
    comp = shape[ci]
    if comp[r] == 1:
        new = comp[:r] + comp[r + 1:]
    else:
        new = comp[:r] + (comp[r] - 1,) + comp[r + 1:]
    return shape[:ci] + (new,) + shape[ci + 1:]


class StandardMTableau:
    """A standard m-tableau: shape plus the node of each label 1..n.

    `entries[i-1]` is the 0-based (component, row, col) triple of the node
    labeled i.  Instances are immutable and hashable; the enumeration order
    of `enumerate_standard_tableaux` fixes basis indices everywhere else.
    """

    __slots__ = ("shape", "entries", "_hash")

    def __init__(self, shape: MPartition, entries):
        self.shape = shape
        self.entries = tuple(entries)
        self._hash = None

    @property
    def n(self) -> int:
        return len(self.entries)

    @property
    def m(self) -> int:
        return len(self.shape)

    def __eq__(self, other):
        return (
            isinstance(other, StandardMTableau)
            and self.shape == other.shape
            and self.entries == other.entries
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.entries))
        return self._hash

    def to_rows(self) -> list:
        """Per-component matrices of labels (the JSON wire format)."""
        rows = [[[0] * length for length in comp] for comp in self.shape]
        for label, (ci, r, c) in enumerate(self.entries, start=1):
            rows[ci][r][c] = label
        return rows

    @classmethod
    def from_rows(cls, rows) -> "StandardMTableau":
        shape = as_mpartition([[len(row) for row in comp] for comp in rows])
        n = mpartition_length(shape)
        entries = [None] * n
        for ci, comp in enumerate(rows):
            for r, row in enumerate(comp):
                for c, label in enumerate(row):
                    if not 1 <= label <= n or entries[label - 1] is not None:
                        raise ValueError("labels must be a permutation of 1..n")
                    entries[label - 1] = (ci, r, c)
        t = cls(shape, entries)
        if not t.is_standard():
            raise ValueError("filling is not standard")
        return t

    def is_standard(self) -> bool:
        grid = {}
        for label, (ci, r, c) in enumerate(self.entries, start=1):
            if not (0 <= ci < len(self.shape)) or not (0 <= r < len(self.shape[ci])):
                return False
            if not 0 <= c < self.shape[ci][r]:
                return False
            if (ci, r, c) in grid:
                return False
            grid[(ci, r, c)] = label
        for ci, comp in enumerate(self.shape):
            for r, length in enumerate(comp):
                for c in range(length):
                    if (ci, r, c) not in grid:
                        return False
                    if c + 1 < length and grid[(ci, r, c)] > grid[(ci, r, c + 1)]:
                        return False
                    if r + 1 < len(comp) and c < comp[r + 1] and grid[(ci, r, c)] > grid[(ci, r + 1, c)]:
                        return False
        return True

    def content_pair(self, i: int) -> tuple:
        """(k, z) with content v_k q^(2z) of the node labeled i; k is 1-based."""
        if not 1 <= i <= self.n:
            raise IndexError(f"label {i} out of range 1..{self.n}")
        ci, r, c = self.entries[i - 1]
        return (ci + 1, c - r)

    def content_pairs(self) -> tuple:
        return tuple(self.content_pair(i) for i in range(1, self.n + 1))

    def content(self, i: int, field: Field) -> Scalar:
        k, z = self.content_pair(i)
        return field.monomial(1, q=2 * z, **{f"v{k}": 1})

    def swap_adjacent(self, i: int):
        """Exchange labels i and i+1; None if the result is not standard."""
        if not 1 <= i <= self.n - 1:
            raise IndexError(f"transposition index {i} out of range")
        entries = list(self.entries)
        entries[i - 1], entries[i] = entries[i], entries[i - 1]
        t = StandardMTableau(self.shape, entries)
        return t if t.is_standard() else None

    def remove_top(self) -> "StandardMTableau":
        """Drop the node labeled n (always a removable corner)."""
        ci, r, _ = self.entries[-1]
        return StandardMTableau(_remove_node(self.shape, ci, r), self.entries[:-1])

    def __repr__(self):
        comps = []
        for comp in self.to_rows():
            comps.append("[" + ",".join("".join(f"{x}." for x in row) for row in comp) + "]")
        return "MTab(" + "|".join(comps) + ")"


def enumerate_standard_tableaux(shape) -> list[StandardMTableau]:
    """All standard m-tableaux of the given shape, deterministic order.

    Labels are placed n first, then n-1, ..., visiting removable corners in
    descending (component, row) order; the resulting index order is what the
    representation matrices use.
    """
    shape = as_mpartition(shape)
    n = mpartition_length(shape)
    entries = [None] * n
    out = []

    def place(cur, k):
        if k == 0:
            out.append(StandardMTableau(shape, tuple(entries)))
            return
        for ci, r, c in reversed(_corners(cur)):
            entries[k - 1] = (ci, r, c)
            place(_remove_node(cur, ci, r), k - 1)

    place(shape, n)
    return out


def count_standard_tableaux(shape) -> int:
    return len(enumerate_standard_tableaux(shape))


# ---------------------------------------------------------------------------
# content strings
# ---------------------------------------------------------------------------

class ContentString:
    """A content string, stored structurally as (k, z) pairs."""

    __slots__ = ("m", "pairs")

    def __init__(self, m: int, pairs):
        pairs = tuple((int(k), int(z)) for k, z in pairs)
        if not is_content_pairs(pairs, m):
            raise InvalidContentStringError(f"{pairs} violates (c1)-(c3)")
        self.m = m
        self.pairs = pairs

    def scalars(self, field: Field) -> list[Scalar]:
        if field.m != self.m:
            raise ValueError("field has wrong m")
        return [field.monomial(1, q=2 * z, **{f"v{k}": 1}) for k, z in self.pairs]

    def __eq__(self, other):
        return isinstance(other, ContentString) and (self.m, self.pairs) == (other.m, other.pairs)

    def __hash__(self):
        return hash((self.m, self.pairs))

    def __repr__(self):
        body = ", ".join(f"v{k}" + (f"*q^{2 * z}" if z else "") for k, z in self.pairs)
        return f"({body})"


def is_content_pairs(pairs, m: int) -> bool:
    """Conditions (c1)-(c3) on a string of structural contents (k, z)."""
    pairs = list(pairs)
    for k, z in pairs:
        if not 1 <= k <= m:
            return False
    if pairs and pairs[0][1] != 0:
        return False
    for j in range(1, len(pairs)):
        k, z = pairs[j]
        if z != 0:
            prefix = pairs[:j]
            if (k, z - 1) not in prefix and (k, z + 1) not in prefix:
                return False
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            if pairs[i] == pairs[j]:
                k, z = pairs[i]
                between = pairs[i + 1:j]
                if (k, z - 1) not in between or (k, z + 1) not in between:
                    return False
    return True


def _scalar_to_pair(a: Scalar):
    """Decompose a monomial v_k q^(2z) into (k, z); None if not of that form."""
    field = a.field
    if len(a._d) != 1 or any(next(iter(a._d))):
        return None
    if len(a._n) != 1:
        return None
    e, c = next(iter(a._n.items()))
    if c != 1 or next(iter(a._d.values())) != 1:
        return None
    if e[0] % 2 != 0:
        return None
    vexps = e[1:1 + field.m]
    if any(e[1 + field.m:]):
        return None
    if sum(vexps) != 1 or any(x not in (0, 1) for x in vexps):
        return None
    k = vexps.index(1) + 1
    return (k, e[0] // 2)


def is_content_string(values, m: int) -> bool:
    """True iff a list of Scalars is a content string (monomials + (c1)-(c3))."""
    pairs = []
    for a in values:
        p = _scalar_to_pair(a)
        if p is None:
            return False
        pairs.append(p)
    return is_content_pairs(pairs, m)


def content_string(t: StandardMTableau) -> ContentString:
    return ContentString(t.m, t.content_pairs())


def tableau_from_content_pairs(pairs, m: int) -> StandardMTableau:
    """The unique standard m-tableau with the given content string.

    Inverse of `content_string`; raises InvalidContentStringError when the
    pairs fail (c1)-(c3) or do not assemble into a tableau.
    """
    pairs = tuple((int(k), int(z)) for k, z in pairs)
    if not is_content_pairs(pairs, m):
        raise InvalidContentStringError(f"{pairs} violates (c1)-(c3)")
    rows = [[] for _ in range(m)]  # row lengths, grown as nodes arrive
    entries = []
    for k, z in pairs:
        comp = rows[k - 1]
        # cells on diagonal z sit at (r, r+z); the next one extends it
        r = 0
        while r < len(comp) and comp[r] > r + z:
            r += 1
        c = r + z
        ok = c >= 0 and (r == len(comp) and c == 0 or r < len(comp) and comp[r] == c)
        if ok and r > 0 and comp[r - 1] < c + 1:
            ok = False
        if not ok:
            raise InvalidContentStringError(f"{pairs}: node ({k},{z}) is not addable")
        if r == len(comp):
            comp.append(1)
        else:
            comp[r] += 1
        entries.append((k - 1, r, c))
    shape = tuple(tuple(comp) for comp in rows)
    t = StandardMTableau(shape, entries)
    if not t.is_standard():
        raise InvalidContentStringError(f"{pairs} does not assemble standardly")
    return t


def tableau_from_content_string(s) -> StandardMTableau:
    """Inverse bijection on a ContentString or a list of monomial Scalars."""
    if isinstance(s, ContentString):
        return tableau_from_content_pairs(s.pairs, s.m)
    pairs = []
    m = None
    for a in s:
        m = a.field.m
        p = _scalar_to_pair(a)
        if p is None:
            raise InvalidContentStringError(f"{a} is not a monomial v_k*q^(2z)")
        pairs.append(p)
    if m is None:
        raise InvalidContentStringError("empty content string has no field")
    return tableau_from_content_pairs(pairs, m)


def apply_transposition(t: StandardMTableau, i: int):
    """Exchange labels i, i+1; None when the swapped filling is not standard."""
    return t.swap_adjacent(i)


def all_content_pair_strings(m: int, n: int):
    """Brute-force domain for the bijection test: all (k, z) strings, |z| < n."""
    alphabet = [(k, z) for k in range(1, m + 1) for z in range(-(n - 1), n)]
    return itertools.product(alphabet, repeat=n)
