"""
Exact linear algebra over the rationals.

Everything downstream is a sparse matrix with exact entries. Entries are
stored as ``int`` when integral and as ``fractions.Fraction`` otherwise;
floats are rejected. Subspaces carry a canonical basis (reduced echelon
form, smallest-index pivots) so two equal subspaces always have equal
inclusion matrices.

Tensor products use lexicographic basis order with the left factor most
significant: ``e_i (x) f_j`` has index ``i * dim(F) + j``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence

from .errors import NotWellDefined, SingularMatrix

# Above this density decompose/invert switch to dense row reduction.
DENSE_THRESHOLD = 0.25


# ---------------------------------------------------------------------------
# scalars

def q(x):
    """Coerce to an exact scalar (int when integral, else Fraction)."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, _RationalABC):
        return q(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not an exact rational: {x!r}")


def inv(x):
    if isinstance(x, int):
        if x == 1 or x == -1:
            return x
        return Fraction(1, x)
    r = 1 / x
    return r.numerator if r.denominator == 1 else r


def parse_rational(s: str):
    s = s.strip()
    if "/" in s:
        a, b = s.split("/", 1)
        num, den = int(a), int(b)
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {s!r}")
        return q(Fraction(num, den))
    return int(s)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# matrices

class Mat:
    """Sparse exact matrix, stored column-major.

    ``Mat(rows, cols, columns)`` where ``columns[j]`` maps row index to a
    nonzero entry. Treat instances as immutable.
    """

    __slots__ = ("rows", "cols", "_cols", "dom_labels", "cod_labels")

    def __init__(self, rows: int, cols: int, columns=None, *, dom_labels=None,
                 cod_labels=None, _trusted=False):
        self.rows = rows
        self.cols = cols
        if columns is None:
            columns = {}
        if not _trusted:
            clean = {}
            for j, col in columns.items():
                if not 0 <= j < cols:
                    raise IndexError(f"column {j} out of range for {rows}x{cols}")
                c = {}
                for i, v in col.items():
                    if not 0 <= i < rows:
                        raise IndexError(f"row {i} out of range for {rows}x{cols}")
                    v = q(v)
                    if v:
                        c[i] = v
                if c:
                    clean[j] = c
            columns = clean
        self._cols = columns
        if dom_labels is not None and len(dom_labels) != cols:
            raise ValueError("domain label count must equal cols")
        if cod_labels is not None and len(cod_labels) != rows:
            raise ValueError("codomain label count must equal rows")
        self.dom_labels = tuple(dom_labels) if dom_labels is not None else None
        self.cod_labels = tuple(cod_labels) if cod_labels is not None else None

    # -- constructors
    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, {}, _trusted=True)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {j: {j: 1} for j in range(n)}, _trusted=True)

    @classmethod
    def from_entries(cls, rows, cols, entries):
        columns: dict = {}
        for (i, j), v in entries.items():
            columns.setdefault(j, {})[i] = v
        return cls(rows, cols, columns)

    @classmethod
    def from_rows(cls, data: Sequence[Sequence], cols=None):
        rows = len(data)
        if cols is None:
            cols = len(data[0]) if rows else 0
        entries = {(i, j): v for i, row in enumerate(data) for j, v in enumerate(row) if v}
        return cls.from_entries(rows, cols, entries)

    @classmethod
    def from_function(cls, rows, cols, fn):
        """Build column by column; ``fn(j)`` returns ``{row: value}``."""
        columns = {}
        for j in range(cols):
            col = {i: q(v) for i, v in fn(j).items() if v}
            if col:
                columns[j] = col
        return cls(rows, cols, columns, _trusted=True)

    @classmethod
    def column_vector(cls, values: Sequence):
        return cls.from_rows([[v] for v in values], cols=1)

    @classmethod
    def row_vector(cls, values: Sequence):
        return cls.from_rows([list(values)], cols=len(values))

    # -- access
    @property
    def shape(self):
        return (self.rows, self.cols)

    def col(self, j) -> dict:
        return self._cols.get(j, {})

    def __getitem__(self, ij):
        i, j = ij
        return self._cols.get(j, {}).get(i, 0)

    @property
    def entries(self) -> dict:
        return {(i, j): v for j, c in self._cols.items() for i, v in c.items()}

    @property
    def nnz(self):
        return sum(len(c) for c in self._cols.values())

    @property
    def density(self):
        if not self.rows or not self.cols:
            return 0.0
        return self.nnz / (self.rows * self.cols)

    def row_dicts(self) -> list:
        out = [dict() for _ in range(self.rows)]
        for j, c in self._cols.items():
            for i, v in c.items():
                out[i][j] = v
        return out

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, c in self._cols.items():
            for i, v in c.items():
                out[i][j] = v
        return out

    def to_triples(self) -> list:
        return [[i, j, format_rational(v)] for (i, j), v in sorted(self.entries.items())]

    @classmethod
    def from_triples(cls, rows, cols, triples):
        return cls.from_entries(rows, cols, {(int(i), int(j)): parse_rational(str(v))
                                             for i, j, v in triples})

    # -- algebra
    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        mine = self._cols
        out = {}
        for j, bc in other._cols.items():
            acc: dict = {}
            for k, b in bc.items():
                ac = mine.get(k)
                if not ac:
                    continue
                for i, a in ac.items():
                    acc[i] = acc.get(i, 0) + a * b
            acc = {i: _n(v) for i, v in acc.items() if v}
            if acc:
                out[j] = acc
        return Mat(self.rows, other.cols, out, _trusted=True)

    def _combine(self, other, sign):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        out = {j: dict(c) for j, c in self._cols.items()}
        for j, c in other._cols.items():
            dst = out.setdefault(j, {})
            for i, v in c.items():
                w = dst.get(i, 0) + sign * v
                if w:
                    dst[i] = _n(w)
                else:
                    dst.pop(i, None)
            if not dst:
                del out[j]
        return Mat(self.rows, self.cols, out, _trusted=True)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s):
        s = q(s)
        if not s:
            return Mat.zero(self.rows, self.cols)
        return Mat(self.rows, self.cols,
                   {j: {i: _n(v * s) for i, v in c.items()} for j, c in self._cols.items()},
                   _trusted=True)

    def __mul__(self, s):
        return self.scale(s)

    __rmul__ = __mul__

    @property
    def T(self) -> "Mat":
        out: dict = {}
        for j, c in self._cols.items():
            for i, v in c.items():
                out.setdefault(i, {})[j] = v
        return Mat(self.cols, self.rows, out, _trusted=True)

    def __pow__(self, k: int) -> "Mat":
        if self.rows != self.cols or k < 0:
            raise ValueError("power needs a square matrix and k >= 0")
        result, base = Mat.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def select_columns(self, idx: Sequence[int]) -> "Mat":
        return Mat(self.rows, len(idx),
                   {n: self._cols[j] for n, j in enumerate(idx) if j in self._cols},
                   _trusted=True)

    # -- comparisons
    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.shape == other.shape and self._cols == other._cols

    __hash__ = None

    def is_zero(self):
        return not self._cols

    def is_identity(self):
        return self.rows == self.cols and self == Mat.identity(self.rows)

    def first_difference(self, other: "Mat"):
        """Smallest column index where the two matrices differ, else None."""
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        for j in sorted(set(self._cols) | set(other._cols)):
            if self._cols.get(j, {}) != other._cols.get(j, {}):
                return j
        return None

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, nnz={self.nnz})"


def _n(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return v.numerator
    return v


def sparse_vector(col: dict) -> list:
    return [[i, format_rational(v)] for i, v in sorted(col.items())]


def hstack(mats: Sequence[Mat]) -> Mat:
    rows = mats[0].rows
    out, off = {}, 0
    for m in mats:
        if m.rows != rows:
            raise ValueError("hstack needs equal row counts")
        for j, c in m._cols.items():
            out[off + j] = c
        off += m.cols
    return Mat(rows, off, out, _trusted=True)


def vstack(mats: Sequence[Mat]) -> Mat:
    cols = mats[0].cols
    out: dict = {}
    off = 0
    for m in mats:
        if m.cols != cols:
            raise ValueError("vstack needs equal column counts")
        for j, c in m._cols.items():
            dst = out.setdefault(j, {})
            for i, v in c.items():
                dst[off + i] = v
        off += m.rows
    return Mat(off, cols, out, _trusted=True)


def kron(*mats: Mat) -> Mat:
    """Tensor product of linear maps, left factor most significant."""
    if not mats:
        return Mat.identity(1)
    result = mats[0]
    for b in mats[1:]:
        result = _kron2(result, b)
    return result


def _kron2(a: Mat, b: Mat) -> Mat:
    out = {}
    br, bc = b.rows, b.cols
    for ja, ca in a._cols.items():
        for jb, cb in b._cols.items():
            col = {}
            for ia, va in ca.items():
                base = ia * br
                for ib, vb in cb.items():
                    col[base + ib] = _n(va * vb)
            out[ja * bc + jb] = col
    return Mat(a.rows * br, a.cols * bc, out, _trusted=True)


# ---------------------------------------------------------------------------
# row reduction

def _rref_sparse(rows: Iterable[dict]) -> dict:
    """Fully reduced row echelon form of the span of ``rows``.

    Returns ``{pivot_col: row}``; each row has a 1 at its pivot (its
    leftmost entry) and zeros at every other pivot column.
    """
    piv: dict = {}
    for r in rows:
        v = {k: x for k, x in r.items() if x}
        if not v:
            continue
        heap = [c for c in v if c in piv]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            a = v.get(c)
            if not a:
                continue
            for k, w in piv[c].items():
                nv = v.get(k, 0) - a * w
                if nv:
                    if k not in v and k in piv:
                        heapq.heappush(heap, k)
                    v[k] = nv
                else:
                    v.pop(k, None)
        if v:
            p = min(v)
            s = inv(v[p])
            piv[p] = {k: _n(x * s) for k, x in v.items()}
    # back substitution, largest pivot first
    for p in sorted(piv, reverse=True):
        row = piv[p]
        hits = sorted((c for c in row if c != p and c in piv), reverse=True)
        for c in hits:
            a = row.get(c)
            if not a:
                continue
            for k, w in piv[c].items():
                nv = row.get(k, 0) - a * w
                if nv:
                    row[k] = _n(nv)
                else:
                    row.pop(k, None)
    return piv


def _rref_dense(rows: list, ncols: int) -> dict:
    m = [list(r) for r in rows]
    piv = {}
    r = 0
    nrows = len(m)
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        s = inv(m[r][c])
        m[r] = [_n(x * s) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                a = m[i][c]
                m[i] = [_n(x - a * y) for x, y in zip(m[i], m[r])]
        piv[c] = r
        r += 1
        if r == nrows:
            break
    return {c: {k: x for k, x in enumerate(m[i]) if x} for c, i in piv.items()}


def rref_rows(rows: list, ncols: int, dense=None) -> dict:
    """RREF of a list of row dicts; chooses dense elimination when the
    input is dense enough (or when ``dense`` forces it)."""
    if dense is None:
        nnz = sum(len(r) for r in rows)
        dense = bool(rows) and ncols > 0 and nnz > DENSE_THRESHOLD * len(rows) * ncols
    if dense:
        full = [[r.get(j, 0) for j in range(ncols)] for r in rows]
        return _rref_dense(full, ncols)
    return _rref_sparse(rows)


# ---------------------------------------------------------------------------
# subspaces and quotients

@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of k^ambient_dim with canonical basis.

    ``inclusion`` is ambient_dim x dim; its columns are in reduced
    column-echelon form with pivots ``pivots``.
    """

    ambient_dim: int
    inclusion: Mat
    pivots: tuple = ()

    @property
    def dim(self):
        return self.inclusion.cols

    @classmethod
    def span(cls, ambient_dim: int, vectors) -> "Subspace":
        """Canonical subspace spanned by the columns of a Mat (or by an
        iterable of ``{index: value}`` dicts)."""
        if isinstance(vectors, Mat):
            if vectors.rows != ambient_dim:
                raise ValueError("vector length differs from ambient dimension")
            vectors = list(vectors._cols.values())
        piv = rref_rows(list(vectors), ambient_dim)
        return cls._from_pivots(ambient_dim, piv)

    @classmethod
    def _from_pivots(cls, ambient_dim, piv):
        order = sorted(piv)
        inc = Mat(ambient_dim, len(order), {n: piv[p] for n, p in enumerate(order)},
                  _trusted=True)
        return cls(ambient_dim, inc, tuple(order))

    @classmethod
    def zero(cls, ambient_dim):
        return cls(ambient_dim, Mat.zero(ambient_dim, 0), ())

    @classmethod
    def full(cls, ambient_dim):
        return cls(ambient_dim, Mat.identity(ambient_dim), tuple(range(ambient_dim)))

    def coordinates(self, m: Mat, what="map") -> Mat:
        """Solve ``inclusion @ X = m``; raise NotWellDefined if some column of
        ``m`` leaves the subspace."""
        if m.rows != self.ambient_dim:
            raise ValueError("row count differs from ambient dimension")
        pos = {p: n for n, p in enumerate(self.pivots)}
        out = {}
        for j, c in m._cols.items():
            col = {pos[i]: v for i, v in c.items() if i in pos}
            if col:
                out[j] = col
        x = Mat(self.dim, m.cols, out, _trusted=True)
        back = self.inclusion @ x
        j = back.first_difference(m)
        if j is not None:
            raise NotWellDefined(
                f"{what}: column {j} does not lie in the subspace",
                witness={"column": j, "vector": sparse_vector(m.col(j))})
        return x

    def contains(self, m: Mat) -> bool:
        try:
            self.coordinates(m)
        except NotWellDefined:
            return False
        return True

    def tensor(self, other: "Subspace") -> "Subspace":
        """U (x) V inside the tensor product of the ambients (already canonical)."""
        pivots = tuple(p * other.ambient_dim + r for p in self.pivots for r in other.pivots)
        return Subspace(self.ambient_dim * other.ambient_dim,
                        kron(self.inclusion, other.inclusion), pivots)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.inclusion == other.inclusion

    __hash__ = None

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient_dim})"


def intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient mismatch")
    # x = A u = B v  <=>  [A | -B] (u, v) = 0
    dec = decompose(hstack([a.inclusion, -b.inclusion]))
    top = dec.kernel.inclusion
    sel = Mat(a.dim, top.cols, {j: {i: v for i, v in c.items() if i < a.dim}
                                for j, c in top._cols.items()})
    return Subspace.span(a.ambient_dim, a.inclusion @ sel)


def subspace_sum(*subs: Subspace) -> Subspace:
    return Subspace.span(subs[0].ambient_dim, hstack([s.inclusion for s in subs]))


class QuotientData:
    """k^ambient_dim / kernel with projection and a deterministic section.

    The kernel may be supplied up front (``quotient``) or derived lazily from
    a surjective projection (``quotient_by_projection``).
    """

    def __init__(self, ambient_dim, projection: Mat, section: Mat, kernel: Subspace | None = None):
        self.ambient_dim = ambient_dim
        self.projection = projection
        self.section = section
        self._kernel = kernel

    @property
    def dim(self):
        return self.projection.rows

    @property
    def kernel(self) -> Subspace:
        if self._kernel is None:
            self._kernel = decompose(self.projection).kernel
        return self._kernel

    def __repr__(self):
        return f"QuotientData(dim={self.dim} of {self.ambient_dim})"


def quotient(ambient_dim: int, w: Subspace) -> QuotientData:
    if w.ambient_dim != ambient_dim:
        raise ValueError("subspace ambient dimension mismatch")
    pivots = set(w.pivots)
    free = [j for j in range(ambient_dim) if j not in pivots]
    pos = {j: n for n, j in enumerate(free)}
    proj = {}
    for j in free:
        proj[j] = {pos[j]: 1}
    for n, p in enumerate(w.pivots):
        col = {pos[k]: -v for k, v in w.inclusion.col(n).items() if k != p}
        if col:
            proj[p] = col
    projection = Mat(len(free), ambient_dim, proj, _trusted=True)
    section = Mat(ambient_dim, len(free), {n: {j: 1} for n, j in enumerate(free)}, _trusted=True)
    return QuotientData(ambient_dim, projection, section, w)


def quotient_by_projection(projection: Mat, section: Mat) -> QuotientData:
    """Quotient given by an explicit surjection with right inverse."""
    if not (projection @ section).is_identity():
        raise ValueError("projection @ section must be the identity")
    return QuotientData(projection.cols, projection, section)


# ---------------------------------------------------------------------------
# decompositions

@dataclass(frozen=True, eq=False)
class Decomposition:
    rref: Mat
    pivots: tuple
    kernel: Subspace
    image: Subspace
    rank: int


def decompose(m: Mat) -> Decomposition:
    piv = rref_rows(m.row_dicts(), m.cols)
    order = sorted(piv)
    rref = Mat(len(order), m.cols, {}, _trusted=True)
    rcols: dict = {}
    for n, p in enumerate(order):
        for j, v in piv[p].items():
            rcols.setdefault(j, {})[n] = v
    rref = Mat(len(order), m.cols, rcols, _trusted=True)
    pset = set(order)
    kern = []
    for f in range(m.cols):
        if f in pset:
            continue
        v = {f: 1}
        for p in order:
            a = piv[p].get(f)
            if a:
                v[p] = -a
        kern.append(v)
    kernel = Subspace.span(m.cols, kern)
    image = Subspace.span(m.rows, m)
    return Decomposition(rref, tuple(order), kernel, image, len(order))


def rank(m: Mat) -> int:
    if m.rows < m.cols:
        return len(rref_rows(m.T.row_dicts(), m.rows))
    return len(rref_rows(m.row_dicts(), m.cols))


def kernel(m: Mat) -> Subspace:
    return decompose(m).kernel


def image(m: Mat) -> Subspace:
    return Subspace.span(m.rows, m)


def invert(m: Mat) -> Mat:
    if m.rows != m.cols:
        raise SingularMatrix(f"cannot invert non-square {m.shape} matrix", shape=m.shape)
    n = m.rows
    rows = m.row_dicts()
    for i, r in enumerate(rows):
        r[n + i] = 1
    piv = rref_rows(rows, 2 * n)
    if sorted(piv)[:n] != list(range(n)) or len(piv) < n or any(p >= n for p in piv):
        r = sum(1 for p in piv if p < n)
        raise SingularMatrix(f"matrix of shape {m.shape} has rank {r}", rank=r, shape=m.shape)
    out: dict = {}
    for i in range(n):
        for k, v in piv[i].items():
            if k >= n:
                out.setdefault(k - n, {})[i] = v
    return Mat(n, n, out, _trusted=True)


# ---------------------------------------------------------------------------
# induced maps

def restrict_corestrict(m: Mat, dom=None, cod=None, what="map") -> Mat:
    """Matrix of the map induced by ``m`` between sub/quotient spaces.

    ``dom``: None, a Subspace of the source, or a QuotientData of the source
    (the map must vanish on its kernel once pushed into the codomain).
    ``cod``: None, a Subspace or a QuotientData of the target, or a sequence
    applied left to right (e.g. ``(Q, S)`` for a subspace S of the quotient Q).
    """
    chain = () if cod is None else (tuple(cod) if isinstance(cod, (list, tuple)) else (cod,))
    # leading quotients commute with restriction, so apply them first
    while chain and isinstance(chain[0], QuotientData):
        m = chain[0].projection @ m
        chain = chain[1:]
    if dom is not None:
        if isinstance(dom, Subspace):
            m = m @ dom.inclusion
        elif isinstance(dom, QuotientData):
            lifted = m @ dom.section
            again = lifted @ dom.projection
            j = again.first_difference(m)
            if j is not None:
                resid = (m - again).col(j)
                raise NotWellDefined(
                    f"{what}: does not descend to the quotient (input column {j})",
                    witness={"column": j, "vector": sparse_vector(resid)})
            m = lifted
        else:
            raise TypeError(f"bad domain {dom!r}")
    for c in chain:
        if isinstance(c, QuotientData):
            m = c.projection @ m
        elif isinstance(c, Subspace):
            m = c.coordinates(m, what=what)
        else:
            raise TypeError(f"bad codomain {c!r}")
    return m
    chain = cod if isinstance(cod, (list, tuple)) else (cod,)
    for c in chain:
        if isinstance(c, QuotientData):
            m = c.projection @ m
        elif isinstance(c, Subspace):
            m = c.coordinates(m, what=what)
        else:
            raise TypeError(f"bad codomain {c!r}")
    return m
