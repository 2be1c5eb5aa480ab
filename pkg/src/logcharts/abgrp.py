"""Exact integer linear algebra and finitely generated abelian groups.

Everything here runs on Python integers, which are arbitrary precision, so
Smith pivots can grow without corrupting invariants.  No floating point is
permitted in this module.

The presentation convention, shared by every caller: an ``IntMatrix`` with
``rows`` rows and ``cols`` columns presents a map ``Z^cols -> Z^rows``
(columns are relators, rows are generators), and ``cokernel`` computes
``Z^rows / image``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidMonoidSpec


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix.

    ``rows`` and ``cols`` are stored explicitly so that empty matrices keep
    their shape: a 0 x 3 matrix and a 3 x 0 matrix present different groups.
    """

    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows:
            raise ValueError("row count does not match entries")
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"matrix entries must be exact integers, got {x!r}")

    @staticmethod
    def from_rows(rows_data, cols: int | None = None) -> IntMatrix:
        rows_data = [tuple(int(x) for x in row) for row in rows_data]
        if rows_data:
            width = len(rows_data[0])
        elif cols is not None:
            width = cols
        else:
            width = 0
        return IntMatrix(len(rows_data), width, tuple(rows_data))

    @staticmethod
    def identity(n: int) -> IntMatrix:
        return IntMatrix(n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> IntMatrix:
        return IntMatrix(rows, cols, tuple(tuple(0 for _ in range(cols)) for _ in range(rows)))

    @staticmethod
    def diagonal(diag, rows: int | None = None, cols: int | None = None) -> IntMatrix:
        diag = [int(d) for d in diag]
        n = len(diag)
        rows = n if rows is None else rows
        cols = n if cols is None else cols
        if rows < n or cols < n:
            raise ValueError("diagonal longer than matrix shape")
        return IntMatrix(
            rows, cols,
            tuple(tuple(diag[i] if i == j and i < n else 0 for j in range(cols)) for i in range(rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            out.append(tuple(
                sum(row[k] * other.entries[k][j] for k in range(self.cols))
                for j in range(other.cols)
            ))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vector) -> tuple[int, ...]:
        """Matrix times column vector."""
        vector = tuple(int(x) for x in vector)
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(self.entries[i][k] * vector[k] for k in range(self.cols))
                     for i in range(self.rows))

    def transpose(self) -> IntMatrix:
        return IntMatrix(self.cols, self.rows,
                         tuple(tuple(self.entries[i][j] for i in range(self.rows))
                               for j in range(self.cols)))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def diagonal_entries(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(min(self.rows, self.cols)))

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def is_unimodular(self) -> bool:
        return self.rows == self.cols and abs(self.det()) == 1

    def __str__(self):
        if self.rows == 0 or self.cols == 0:
            return f"<empty {self.rows}x{self.cols}>"
        return "\n".join(" ".join(f"{x:4d}" for x in row) for row in self.entries)


def _swap_rows(a, u, i, j):
    a[i], a[j] = a[j], a[i]
    u[i], u[j] = u[j], u[i]


def _swap_cols(a, v, i, j):
    for row in a:
        row[i], row[j] = row[j], row[i]
    for row in v:
        row[i], row[j] = row[j], row[i]


def _row_sub(a, u, i, j, q):
    """Row i -= q * row j."""
    if q == 0:
        return
    ai, aj = a[i], a[j]
    for k in range(len(ai)):
        ai[k] -= q * aj[k]
    ui, uj = u[i], u[j]
    for k in range(len(ui)):
        ui[k] -= q * uj[k]


def _col_sub(a, v, i, j, q):
    """Column i -= q * column j."""
    if q == 0:
        return
    for row in a:
        row[i] -= q * row[j]
    for row in v:
        row[i] -= q * row[j]


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form: returns (U, D, V) with U * m * V == D exactly.

    U and V are unimodular; D is diagonal with nonnegative entries forming a
    divisibility chain d_1 | d_2 | ... (zeros, which everything divides, come
    last).  Total on exact integers; no preconditions.
    """
    rows, cols = m.rows, m.cols
    a = [list(row) for row in m.entries]
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]
    v = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]

    t = 0
    limit = min(rows, cols)
    while t < limit:
        # Bring the smallest-magnitude nonzero entry of the trailing block
        # to the pivot slot; if the block is zero we are done.
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                x = a[i][j]
                if x != 0 and (pivot is None or abs(x) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != t:
            _swap_rows(a, u, t, pivot[0])
        if pivot[1] != t:
            _swap_cols(a, v, t, pivot[1])

        while True:
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t] != 0:
                    _row_sub(a, u, i, t, a[i][t] // a[t][t])
                    if a[i][t] != 0:
                        # Remainder has smaller magnitude than the pivot.
                        _swap_rows(a, u, t, i)
                        dirty = True
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j] != 0:
                    _col_sub(a, v, j, t, a[t][j] // a[t][t])
                    if a[t][j] != 0:
                        _swap_cols(a, v, t, j)
                        dirty = True
            if dirty:
                continue
            break

        # Divisibility: the pivot must divide every entry of the trailing
        # block; if not, fold the offending row into row t and re-clear.
        d = a[t][t]
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if a[i][j] % d != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _row_sub(a, u, t, offender, -1)
            continue
        t += 1

    for i in range(limit):
        if a[i][i] < 0:
            for k in range(cols):
                a[i][k] = -a[i][k]
            for k in range(rows):
                u[i][k] = -u[i][k]

    return (
        IntMatrix(rows, rows, tuple(tuple(r) for r in u)),
        IntMatrix(rows, cols, tuple(tuple(r) for r in a)),
        IntMatrix(cols, cols, tuple(tuple(r) for r in v)),
    )


def rank(m: IntMatrix) -> int:
    """Rank over Z (equivalently over Q)."""
    _, d, _ = smith_normal_form(m)
    return sum(1 for x in d.diagonal_entries() if x != 0)


def kernel_basis(m: IntMatrix) -> list[tuple[int, ...]]:
    """A basis of the full integer kernel { z : m @ z == 0 } <= Z^cols.

    Smith-form kernels are saturated: the returned vectors span the entire
    kernel lattice, not a finite-index sublattice.
    """
    u, d, v = smith_normal_form(m)
    diag = d.diagonal_entries()
    r = sum(1 for x in diag if x != 0)
    return [v.column(j) for j in range(r, m.cols)]


def solve_integer(m: IntMatrix, target) -> tuple[int, ...] | None:
    """One integer solution z of m @ z == target, or None if there is none."""
    target = tuple(int(x) for x in target)
    if len(target) != m.rows:
        raise ValueError("target length does not match row count")
    u, d, v = smith_normal_form(m)
    y = u.apply(target)
    diag = d.diagonal_entries()
    r = sum(1 for x in diag if x != 0)
    w = [0] * m.cols
    for i in range(r):
        if y[i] % diag[i] != 0:
            return None
        w[i] = y[i] // diag[i]
    for i in range(r, m.rows):
        if y[i] != 0:
            return None
    return v.apply(w)


@dataclass(frozen=True)
class FgAbelianGroup:
    """Finitely generated abelian group in normal form.

    ``free_rank`` copies of Z plus cyclic factors Z/d_1 x ... x Z/d_t with
    d_1 | d_2 | ... | d_t and every d_i >= 2.  Trivial invariants are
    dropped, so equality of normal forms is isomorphism.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"torsion invariant {d} < 2 (drop trivial factors first)")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"torsion invariants {self.torsion} violate the divisibility chain")

    @staticmethod
    def trivial() -> FgAbelianGroup:
        return FgAbelianGroup(0, ())

    @staticmethod
    def free(r: int) -> FgAbelianGroup:
        return FgAbelianGroup(r, ())

    @staticmethod
    def cyclic(n: int) -> FgAbelianGroup:
        """Z/n, with Z/0 = Z and Z/1 trivial."""
        n = abs(int(n))
        if n == 0:
            return FgAbelianGroup(1, ())
        if n == 1:
            return FgAbelianGroup(0, ())
        return FgAbelianGroup(0, (n,))

    @staticmethod
    def from_cyclic_orders(orders) -> FgAbelianGroup:
        """Normal form of a direct sum of cyclic groups Z/n (n = 0 means Z).

        The invariant-factor chain is read off the Smith form of the
        diagonal matrix of the finite orders.
        """
        orders = [abs(int(n)) for n in orders]
        free = sum(1 for n in orders if n == 0)
        finite = [n for n in orders if n >= 2]
        if not finite:
            return FgAbelianGroup(free, ())
        _, d, _ = smith_normal_form(IntMatrix.diagonal(finite))
        torsion = tuple(x for x in d.diagonal_entries() if x > 1)
        return FgAbelianGroup(free, torsion)

    def direct_sum(self, *others: FgAbelianGroup) -> FgAbelianGroup:
        orders = [0] * self.free_rank + list(self.torsion)
        for g in others:
            orders.extend([0] * g.free_rank)
            orders.extend(g.torsion)
        return FgAbelianGroup.from_cyclic_orders(orders)

    def invariant_factors(self) -> list[int]:
        """The chain with zeros for the free part, largest-last torsion."""
        return [0] * self.free_rank + list(self.torsion)

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank > 0:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def exponent(self) -> int | None:
        """Smallest m >= 1 with m * g == 0 for all g; None when infinite."""
        if self.free_rank > 0:
            return None
        return self.torsion[-1] if self.torsion else 1

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"


def cokernel(m: IntMatrix) -> FgAbelianGroup:
    """Cokernel Z^rows / image(m) in normal form."""
    _, d, _ = smith_normal_form(m)
    diag = d.diagonal_entries()
    nonzero = sum(1 for x in diag if x != 0)
    torsion = tuple(x for x in diag if x > 1)
    return FgAbelianGroup(m.rows - nonzero, torsion)


def tensor_mod(g: FgAbelianGroup, m: int) -> FgAbelianGroup:
    """The level-m truncation G/mG.

    Each Z factor contributes Z/m; each Z/d contributes Z/gcd(d, m).  The
    gcds of a divisor chain form a divisor chain, so no renormalization is
    needed.
    """
    m = int(m)
    if m < 1:
        raise ValueError("level must be a positive integer")
    if m == 1:
        return FgAbelianGroup.trivial()
    torsion = [gcd(d, m) for d in g.torsion]
    torsion = [d for d in torsion if d > 1]
    torsion.extend([m] * g.free_rank)
    return FgAbelianGroup(0, tuple(torsion))


def is_isomorphic(a: FgAbelianGroup, b: FgAbelianGroup) -> bool:
    """Normal forms are canonical, so isomorphism is field equality."""
    return a.free_rank == b.free_rank and a.torsion == b.torsion


def generator_matrix(vectors, ambient_rank: int) -> IntMatrix:
    """Matrix whose columns are the given vectors in Z^ambient_rank."""
    vectors = [tuple(int(x) for x in vec) for vec in vectors]
    for vec in vectors:
        if len(vec) != ambient_rank:
            raise InvalidMonoidSpec(f"vector {vec} does not live in Z^{ambient_rank}")
    return IntMatrix(ambient_rank, len(vectors),
                     tuple(tuple(vec[i] for vec in vectors) for i in range(ambient_rank)))
