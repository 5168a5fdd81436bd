"""Exact integer certificates for the triangle-augmentation bound.

``X`` stacks the ``m x m`` identity on top of the vertex-edge incidence matrix
``B``. The Gram matrix ``X X^T`` has rank ``m`` and its off-diagonal nonzero
pattern is ``G`` with one extra vertex per edge, so the minimum semidefinite
rank of that graph is at most ``m``.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from .errors import GraphParseError, PreconditionError
from .graph import Graph, triangle_augment
from .structure import independence_number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise PreconditionError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise PreconditionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = 0) -> "IntegerMatrix":
        width = len(rows[0]) if rows else cols
        if any(len(r) != width for r in rows):
            raise PreconditionError("rows have different lengths")
        return cls(len(rows), width, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, size: int) -> "IntegerMatrix":
        return cls.from_rows([[int(i == j) for j in range(size)] for i in range(size)], size)

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> List[List[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols,
            self.rows,
            tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows)),
        )

    def matmul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise PreconditionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [
            [other.at(k, j) for k in range(other.rows)] for j in range(other.cols)
        ]
        entries = []
        for i in range(self.rows):
            row = self.row(i)
            entries.extend(sum(a * b for a, b in zip(row, col)) for col in columns)
        return IntegerMatrix(self.rows, other.cols, tuple(entries))

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.at(i, j) == self.at(j, i) for i in range(self.rows) for j in range(i)
        )

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines.extend(" ".join(str(x) for x in self.row(i)) for i in range(self.rows))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "IntegerMatrix":
        lines = text.strip("\n").split("\n")
        header = lines[0].split()
        try:
            rows, cols = (int(tok) for tok in header)
        except ValueError:
            raise GraphParseError("matrix header must be 'rows cols'", line=1) from None
        entries: List[int] = []
        for lineno, raw in enumerate(lines[1:], start=2):
            tokens = raw.split()
            if len(tokens) != cols:
                raise GraphParseError(f"expected {cols} entries", line=lineno)
            try:
                entries.extend(int(tok) for tok in tokens)
            except ValueError:
                raise GraphParseError("non-integer matrix entry", line=lineno) from None
        if len(entries) != rows * cols:
            raise GraphParseError(f"expected {rows} rows of entries", line=len(lines))
        return cls(rows, cols, tuple(entries))


def integer_rank(matrix: IntegerMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination; every division is exact."""
    a = matrix.to_rows()
    rank, previous = 0, 1
    for col in range(matrix.cols):
        pivot = next((r for r in range(rank, matrix.rows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        head = a[rank]
        for r in range(rank + 1, matrix.rows):
            row = a[r]
            for c in range(col + 1, matrix.cols):
                row[c] = (row[c] * head[col] - row[col] * head[c]) // previous
            row[col] = 0
        previous = head[col]
        rank += 1
        if rank == matrix.rows:
            break
    return rank


def incidence_matrix(g: Graph) -> IntegerMatrix:
    """``n x m`` 0/1 matrix; column ``i`` is the i-th edge in lexicographic order."""
    edges = g.edges()
    return IntegerMatrix(
        g.n,
        len(edges),
        tuple(int(v in e) for v in range(g.n) for e in edges),
    )


@dataclass(frozen=True)
class GramChecks:
    n: int
    m: int
    rank: int
    alpha: int
    pattern_matches: bool
    symmetric: bool

    @property
    def rank_equals_m(self) -> bool:
        return self.rank == self.m

    @property
    def alpha_at_least_m(self) -> bool:
        return self.alpha >= self.m

    @property
    def passed(self) -> bool:
        return self.pattern_matches and self.symmetric and self.rank_equals_m and self.alpha_at_least_m

    @property
    def nullity_lower_bound(self) -> int:
        """``(m + n) - rank``, a lower bound on the maximum semidefinite nullity."""
        return self.m + self.n - self.rank

    def to_dict(self) -> Dict[str, object]:
        return {
            "n": self.n,
            "m": self.m,
            "rank": self.rank,
            "alpha": self.alpha,
            "pattern_matches": self.pattern_matches,
            "symmetric": self.symmetric,
            "passed": self.passed,
        }


def gram_index_to_augmented(g: Graph) -> List[int]:
    """Gram row ``i`` (edges first, then vertices) as a vertex of ``triangle_augment(g)``."""
    return [g.n + i for i in range(g.m)] + list(range(g.n))


def incidence_gram(g: Graph) -> Tuple[IntegerMatrix, GramChecks]:
    """``X X^T`` with ``X = [I_m; B]`` and the checks that make it a certificate."""
    if g.n == 0 or not g.is_connected():
        raise PreconditionError("incidence_gram needs a nonempty connected graph")
    b = incidence_matrix(g)
    x = IntegerMatrix(
        g.m + g.n, g.m, IntegerMatrix.identity(g.m).entries + b.entries
    )
    gram = x.matmul(x.transpose())

    augmented, _ = triangle_augment(g)
    index = gram_index_to_augmented(g)
    size = gram.rows
    pattern_matches = all(
        (gram.at(i, j) != 0) == augmented.has_edge(index[i], index[j])
        for i in range(size)
        for j in range(size)
        if i != j
    )
    alpha, _ = independence_number(augmented)
    checks = GramChecks(
        n=g.n,
        m=g.m,
        rank=integer_rank(gram),
        alpha=alpha,
        pattern_matches=pattern_matches,
        symmetric=gram.is_symmetric(),
    )
    logger.debug("incidence gram for n=%d m=%d: %s", g.n, g.m, checks.to_dict())
    return gram, checks
