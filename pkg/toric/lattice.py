r"""*Exact integer linear algebra for* ``toric``.

``toric`` Toric Objects: Rings, Ideals and Cones.

Hermite and Smith normal forms, kernels and cokernels of lattice maps,
and saturation of sublattices. All arithmetic is exact on Python integers;
:mod:`sympy` is used only for ranks, determinants and rational solves.

**Author**
    toric contributors

**File Created**
    18 Oct 2026

**Copyright**
    \(c) toric contributors 2026

**License**
    The MIT License; see |license_txt|_ for full license terms

**Members**

"""

from fractions import Fraction
import logging

import attr
import sympy

from .utils import matrix_from_json, matrix_to_json


logger = logging.getLogger(__name__)


def _to_rows(entries):
    return tuple(tuple(int(x) for x in row) for row in entries)


def to_sympy(x):
    """Convert an integer or |Fraction| to an exact :mod:`sympy` rational."""
    x = Fraction(x)
    return sympy.Rational(x.numerator, x.denominator)


def to_fraction(x):
    """Convert a :mod:`sympy` rational (or any number) to a |Fraction|."""
    if isinstance(x, sympy.Basic):
        x = sympy.Rational(x)
        return Fraction(int(x.p), int(x.q))
    return Fraction(x)


@attr.s(slots=True, frozen=True)
class IntMatrix:
    """Exact integer matrix, stored row-major as a tuple of row tuples."""

    #: Matrix rows
    entries = attr.ib(converter=_to_rows)

    #: Column count; inferred from the rows unless the matrix has none
    ncols = attr.ib(default=None)

    def __attrs_post_init__(self):
        """Infer and validate the column count."""
        if self.ncols is None:
            ncols = len(self.entries[0]) if self.entries else 0
            object.__setattr__(self, "ncols", ncols)

        if any(len(row) != self.ncols for row in self.entries):
            raise ValueError("Ragged rows in integer matrix")

    @property
    def nrows(self):
        """Return the number of rows."""
        return len(self.entries)

    @classmethod
    def identity(cls, n):
        """Create the n×n identity matrix."""
        return cls(
            [[int(i == j) for j in range(n)] for i in range(n)], ncols=n
        )

    @classmethod
    def from_json(cls, data, ncols=None):
        """Create a matrix from arrays of numbers or decimal strings."""
        return cls(matrix_from_json(data), ncols=ncols)

    def to_json(self):
        """Encode as arrays of decimal strings."""
        return matrix_to_json(self.entries)

    def transpose(self):
        """Return the transposed matrix."""
        return IntMatrix(
            [[row[j] for row in self.entries] for j in range(self.ncols)],
            ncols=self.nrows,
        )

    def __matmul__(self, other):
        """Multiply two conformable integer matrices."""
        if self.ncols != other.nrows:
            raise ValueError("Matrix shapes do not conform")
        cols = other.transpose().entries
        return IntMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self.entries
            ],
            ncols=other.ncols,
        )

    def apply(self, v):
        """Return the matrix-vector product as a tuple."""
        return tuple(
            sum(a * b for a, b in zip(row, v)) for row in self.entries
        )

    def to_sympy(self):
        """Return the equivalent :class:`sympy.Matrix`."""
        if self.nrows == 0 or self.ncols == 0:
            return sympy.zeros(self.nrows, self.ncols)
        return sympy.Matrix(self.entries)

    def rank(self):
        """Return the rank over the rationals."""
        if self.nrows == 0 or self.ncols == 0:
            return 0
        return int(self.to_sympy().rank())

    def determinant(self):
        """Return the exact determinant of a square matrix."""
        if self.nrows != self.ncols:
            raise ValueError("Determinant of a non-square matrix")
        if self.nrows == 0:
            return 1
        return int(self.to_sympy().det())


@attr.s(slots=True, frozen=True)
class LatticeBasis:
    """Linearly independent integer vectors spanning a sublattice."""

    #: Rank of the ambient lattice ℤ^n
    ambient_rank = attr.ib(converter=int)

    #: Basis vectors
    vectors = attr.ib(converter=_to_rows)

    def __attrs_post_init__(self):
        """Check lengths and linear independence."""
        if any(len(v) != self.ambient_rank for v in self.vectors):
            raise ValueError("Basis vector length differs from ambient rank")
        if self.as_matrix().rank() != len(self.vectors):
            raise ValueError("Basis vectors are linearly dependent")

    @property
    def rank(self):
        """Return the rank of the sublattice."""
        return len(self.vectors)

    def as_matrix(self):
        """Return the basis as the rows of an :class:`IntMatrix`."""
        return IntMatrix(self.vectors, ncols=self.ambient_rank)

    def canonical(self):
        """Return the Hermite-canonical basis of the same lattice."""
        return span_basis(self.vectors, self.ambient_rank)

    def same_lattice(self, other):
        """Report whether two bases span the same lattice."""
        return (
            self.ambient_rank == other.ambient_rank
            and self.canonical().vectors == other.canonical().vectors
        )

    def coordinates(self, v):
        """Return the integer coordinates of `v`, or |None| if not inside."""
        c = integer_combination(self.vectors, v)
        return None if c is None else tuple(c)

    def contains(self, v):
        """Report whether `v` lies in the lattice."""
        return self.coordinates(v) is not None


@attr.s(slots=True, frozen=True)
class AbelianGroupStructure:
    """Finitely generated abelian group ℤ^r ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k."""

    #: Rank of the free part
    free_rank = attr.ib(converter=int)

    #: Invariant factors, each at least 2 and dividing the next
    torsion = attr.ib(converter=lambda t: tuple(int(d) for d in t))

    def __attrs_post_init__(self):
        """Validate the invariant factors."""
        if any(d < 2 for d in self.torsion):
            raise ValueError("Invariant factors must be at least 2")
        if any(b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError("Invariant factors must divide one another")

    def to_json(self):
        """Return the JSON form ``{"free_rank": r, "torsion": [...]}``."""
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        """Render as a direct sum such as ``Z^2 + Z/2``."""
        parts = []
        if self.free_rank:
            parts.append(
                "Z" if self.free_rank == 1 else "Z^{}".format(self.free_rank)
            )
        parts.extend("Z/{}".format(d) for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def _as_matrix(A):
    return A if isinstance(A, IntMatrix) else IntMatrix(A)


def _identity_rows(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _row_sub(rows, i, k, q):
    """rows[i] -= q * rows[k]."""
    rows[i] = [a - q * b for a, b in zip(rows[i], rows[k])]


def hermite_normal_form(A):
    """Compute the row-style Hermite normal form of `A`.

    Returns ``(H, U)`` with `U` unimodular and ``U @ A == H``. Pivots of
    `H` are positive, entries above each pivot lie in ``[0, pivot)``, and
    zero rows sit at the bottom.

    """
    A = _as_matrix(A)
    m, n = A.nrows, A.ncols
    H = [list(row) for row in A.entries]
    U = _identity_rows(m)

    row = 0
    for col in range(n):
        if row == m:
            break

        # Euclid down the column on the smallest nonzero entry
        while True:
            nz = [i for i in range(row, m) if H[i][col] != 0]
            if not nz:
                break

            piv = min(nz, key=lambda i: abs(H[i][col]))
            H[row], H[piv] = H[piv], H[row]
            U[row], U[piv] = U[piv], U[row]

            clear = True
            for i in range(row + 1, m):
                q = H[i][col] // H[row][col]
                if q:
                    _row_sub(H, i, row, q)
                    _row_sub(U, i, row, q)
                if H[i][col] != 0:
                    clear = False

            if clear:
                break

        if H[row][col] == 0:
            continue

        if H[row][col] < 0:
            H[row] = [-a for a in H[row]]
            U[row] = [-a for a in U[row]]

        for i in range(row):
            q = H[i][col] // H[row][col]
            if q:
                _row_sub(H, i, row, q)
                _row_sub(U, i, row, q)

        row += 1

    return IntMatrix(H, ncols=n), IntMatrix(U, ncols=m)


def smith_normal_form(A):
    """Compute the Smith normal form of `A`.

    Returns ``(S, U, V)`` with `U` and `V` unimodular, ``U @ A @ V == S``,
    and `S` diagonal with nonnegative entries d₁ | d₂ | ….

    """
    A = _as_matrix(A)
    m, n = A.nrows, A.ncols
    S = [list(row) for row in A.entries]
    U = _identity_rows(m)
    V = _identity_rows(n)

    def swap_rows(i, k):
        S[i], S[k] = S[k], S[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for M in (S, V):
            for r in M:
                r[j], r[k] = r[k], r[j]

    def col_sub(j, k, q):
        for M in (S, V):
            for r in M:
                r[j] -= q * r[k]

    t = 0
    while t < min(m, n):
        cand = [
            (abs(S[i][j]), i, j)
            for i in range(t, m)
            for j in range(t, n)
            if S[i][j] != 0
        ]
        if not cand:
            break

        _, i, j = min(cand)
        swap_rows(t, i)
        swap_cols(t, j)

        while True:
            p = S[t][t]
            for i in range(t + 1, m):
                q = S[i][t] // p
                if q:
                    _row_sub(S, i, t, q)
                    _row_sub(U, i, t, q)
            for j in range(t + 1, n):
                q = S[t][j] // p
                if q:
                    col_sub(j, t, q)

            rest = [(abs(S[i][t]), i, t) for i in range(t + 1, m) if S[i][t]]
            rest += [(abs(S[t][j]), t, j) for j in range(t + 1, n) if S[t][j]]
            if rest:
                _, i, j = min(rest)
                if j == t:
                    swap_rows(t, i)
                else:
                    swap_cols(t, j)
                continue

            bad = next(
                (
                    i
                    for i in range(t + 1, m)
                    for j in range(t + 1, n)
                    if S[i][j] % p
                ),
                None,
            )
            if bad is None:
                break

            # Pull the offending row up; the next pass shrinks the pivot
            _row_sub(S, t, bad, -1)
            _row_sub(U, t, bad, -1)

        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]

        t += 1

    return IntMatrix(S, ncols=n), IntMatrix(U, ncols=m), IntMatrix(V, ncols=n)


def _nonzero_rows(M):
    return [row for row in M.entries if any(row)]


def span_basis(vectors, ambient_rank):
    """Return the Hermite-canonical basis of the lattice spanned by `vectors`.

    The vectors may be dependent; zero vectors are ignored.

    """
    H, _ = hermite_normal_form(IntMatrix(vectors, ncols=ambient_rank))
    return LatticeBasis(ambient_rank, _nonzero_rows(H))


def kernel_lattice(A):
    """Return a saturated basis of ``{v : A v = 0}``.

    The basis is Hermite-canonical; full column rank gives the empty basis.

    """
    A = _as_matrix(A)
    H, U = hermite_normal_form(A.transpose())
    r = len(_nonzero_rows(H))
    kernel = U.entries[r:]
    logger.debug(
        "kernel of %dx%d matrix has rank %d", A.nrows, A.ncols, len(kernel)
    )
    return span_basis(kernel, A.ncols)


def cokernel(A):
    """Return ℤ^rows modulo the column span of `A` as an abelian group."""
    A = _as_matrix(A)
    S, _, _ = smith_normal_form(A)
    diag = [S.entries[i][i] for i in range(min(A.nrows, A.ncols))]
    nonzero = [d for d in diag if d != 0]
    return AbelianGroupStructure(
        A.nrows - len(nonzero), [d for d in nonzero if d >= 2]
    )


def saturate_sublattice(B):
    """Return a basis of the saturation of the lattice spanned by `B`."""
    perp = kernel_lattice(B.as_matrix())
    return kernel_lattice(perp.as_matrix())


def is_saturated(B):
    """Report whether the lattice spanned by `B` is saturated."""
    return saturate_sublattice(B).same_lattice(B)


def integer_combination(vectors, target):
    """Express `target` as an integer combination of `vectors`.

    Returns a |list| of integer coefficients, or |None| when `target` is
    not in the lattice the vectors span.

    """
    vectors = [tuple(int(x) for x in v) for v in vectors]
    target = [int(x) for x in target]
    if not vectors:
        return [] if not any(target) else None

    H, U = hermite_normal_form(IntMatrix(vectors, ncols=len(target)))

    resid = list(target)
    y = [0] * H.nrows
    for j, row in enumerate(H.entries):
        if not any(row):
            break
        col = next(c for c, a in enumerate(row) if a != 0)
        if resid[col] % row[col]:
            return None
        y[j] = resid[col] // row[col]
        resid = [a - y[j] * b for a, b in zip(resid, row)]

    if any(resid):
        return None

    return [
        sum(y[j] * U.entries[j][i] for j in range(H.nrows))
        for i in range(len(vectors))
    ]


def lattice_coordinates(basis, v):
    """Return the coordinates of `v` in `basis`, or |None| if outside."""
    return basis.coordinates(v)


def rank(vectors, ambient_rank):
    """Return the rational rank of a list of vectors."""
    return IntMatrix(vectors, ncols=ambient_rank).rank()


def determinant(rows):
    """Return the exact determinant of a square integer matrix."""
    return IntMatrix(rows).determinant()


def solve_rational(rows, rhs):
    """Solve ``rows · x = rhs`` over ℚ.

    Returns a |tuple| of |Fraction| (free parameters set to zero), or
    |None| when the system is inconsistent.

    """
    A = sympy.Matrix(rows)
    b = sympy.Matrix([to_sympy(x) for x in rhs])
    try:
        sol, params = A.gauss_jordan_solve(b)
    except ValueError:
        return None

    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})

    return tuple(to_fraction(x) for x in sol)
