"""Cyclic and cocyclic modules as families of exact matrices.

* :class:`CocyclicData` holds spaces C^0..C^N, cofaces delta_i: C^n -> C^{n+1}
  (0 <= i <= n+1, for n < N), codegeneracies sigma_i: C^n -> C^{n-1}
  (0 <= i <= n-1) and cyclic maps tau_n.
* :class:`CyclicData` mirrors it with faces C_n -> C_{n-1} (0 <= i <= n),
  degeneracies C_n -> C_{n+1} (0 <= i <= n, for n < N) and tau_n.

Cyclic (co)homology is computed from the cyclic bicomplex. Sign table
(lambda = (-1)^n tau_n, N = 1 + lambda + ... + lambda^n):

    ============  ======================  ==========================
    column p      vertical map            horizontal map out of p
    ============  ======================  ==========================
    even          b                       cohomology: 1 - lambda
                                          homology:   N  (to p - 1)
    odd           -b'                     cohomology: N
                                          homology:   1 - lambda (to p - 1)
    ============  ======================  ==========================

with b = sum (-1)^i delta_i over all (co)faces and b' omitting the last one.
Only ranks are exposed, which do not depend on these sign choices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact_linalg import Mat, invert, rank
from .hopf_core import HopfData
from .multilinear import add_to, build_map
from .rep_structures import RIGHT_LEFT, SaydData
from .report import Check, Report, compare_maps


@dataclass(frozen=True, eq=False)
class CocyclicData:
    max_degree: int
    dims: tuple
    cofaces: tuple
    codegeneracies: tuple
    tau: tuple
    name: str = "cocyclic"

    def __post_init__(self):
        N = self.max_degree
        if len(self.dims) != N + 1 or len(self.tau) != N + 1 or len(self.codegeneracies) != N + 1:
            raise ValueError("need spaces, codegeneracies and tau for degrees 0..N")
        if len(self.cofaces) != N:
            raise ValueError("need cofaces for degrees 0..N-1")
        for n in range(N + 1):
            if self.tau[n].shape != (self.dims[n], self.dims[n]):
                raise ValueError(f"tau_{n} has shape {self.tau[n].shape}")
            if len(self.codegeneracies[n]) != n:
                raise ValueError(f"degree {n} needs {n} codegeneracies")
            for s in self.codegeneracies[n]:
                if s.shape != (self.dims[n - 1], self.dims[n]):
                    raise ValueError(f"codegeneracy from degree {n} has shape {s.shape}")
        for n in range(N):
            if len(self.cofaces[n]) != n + 2:
                raise ValueError(f"degree {n} needs {n + 2} cofaces")
            for d in self.cofaces[n]:
                if d.shape != (self.dims[n + 1], self.dims[n]):
                    raise ValueError(f"coface from degree {n} has shape {d.shape}")

    def truncate(self, N: int) -> "CocyclicData":
        return CocyclicData(N, self.dims[:N + 1], self.cofaces[:N], self.codegeneracies[:N + 1],
                            self.tau[:N + 1], self.name)


@dataclass(frozen=True, eq=False)
class CyclicData:
    max_degree: int
    dims: tuple
    faces: tuple
    degeneracies: tuple
    tau: tuple
    name: str = "cyclic"

    def __post_init__(self):
        N = self.max_degree
        if len(self.dims) != N + 1 or len(self.tau) != N + 1 or len(self.faces) != N + 1:
            raise ValueError("need spaces, faces and tau for degrees 0..N")
        if len(self.degeneracies) != N:
            raise ValueError("need degeneracies for degrees 0..N-1")
        for n in range(N + 1):
            if self.tau[n].shape != (self.dims[n], self.dims[n]):
                raise ValueError(f"tau_{n} has shape {self.tau[n].shape}")
            if len(self.faces[n]) != (n + 1 if n else 0):
                raise ValueError(f"degree {n} has the wrong number of faces")
            for d in self.faces[n]:
                if d.shape != (self.dims[n - 1], self.dims[n]):
                    raise ValueError(f"face from degree {n} has shape {d.shape}")
        for n in range(N):
            if len(self.degeneracies[n]) != n + 1:
                raise ValueError(f"degree {n} needs {n + 1} degeneracies")
            for s in self.degeneracies[n]:
                if s.shape != (self.dims[n + 1], self.dims[n]):
                    raise ValueError(f"degeneracy from degree {n} has shape {s.shape}")

    def truncate(self, N: int) -> "CyclicData":
        return CyclicData(N, self.dims[:N + 1], self.faces[:N + 1], self.degeneracies[:N],
                          self.tau[:N + 1], self.name)


def point_cocyclic(N: int) -> CocyclicData:
    one = Mat.identity(1)
    return CocyclicData(N, (1,) * (N + 1), tuple((one,) * (n + 2) for n in range(N)),
                        tuple((one,) * n for n in range(N + 1)), (one,) * (N + 1), "point")


def point_cyclic(N: int) -> CyclicData:
    one = Mat.identity(1)
    return CyclicData(N, (1,) * (N + 1), tuple((one,) * (n + 1 if n else 0) for n in range(N + 1)),
                      tuple((one,) * (n + 1) for n in range(N)), (one,) * (N + 1), "point")


# ---------------------------------------------------------------------------
# axiom checks

def _cmp(r: Report, name, lhs, rhs, n, mapname, index=None, dims=None):
    r.add(compare_maps(name, lhs, rhs, dims, degree=n, map=mapname, index=index))


def check_cocyclic(c: CocyclicData) -> Report:
    r = Report(f"cocyclic relations ({c.name})")
    N, d, s, t = c.max_degree, c.cofaces, c.codegeneracies, c.tau
    for n in range(N + 1):
        dims = (c.dims[n],)
        if n + 2 <= N:
            for j in range(n + 3):
                for i in range(j):
                    _cmp(r, f"cosimplicial: d{j} d{i} = d{i} d{j - 1} on C^{n}",
                         d[n + 1][j] @ d[n][i], d[n + 1][i] @ d[n][j - 1], n, "coface", i, dims)
        if n >= 2:
            for j in range(n - 1):
                for i in range(j + 1):
                    _cmp(r, f"cosimplicial: s{j} s{i} = s{i} s{j + 1} on C^{n}",
                         s[n - 1][j] @ s[n][i], s[n - 1][i] @ s[n][j + 1], n, "codegeneracy", i, dims)
        if n + 1 <= N:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = s[n + 1][j] @ d[n][i]
                    if i < j:
                        rhs = d[n - 1][i] @ s[n][j - 1]
                    elif i in (j, j + 1):
                        rhs = Mat.identity(c.dims[n])
                    else:
                        rhs = d[n - 1][i - 1] @ s[n][j]
                    _cmp(r, f"cosimplicial: s{j} d{i} on C^{n}", lhs, rhs, n, "mixed", i, dims)
            for i in range(1, n + 2):
                _cmp(r, f"cyclic: t d{i} = d{i - 1} t on C^{n}",
                     t[n + 1] @ d[n][i], d[n][i - 1] @ t[n], n, "coface", i, dims)
            _cmp(r, f"cyclic: t d0 = d{n + 1} on C^{n}", t[n + 1] @ d[n][0], d[n][n + 1],
                 n, "coface", 0, dims)
        if n >= 1:
            for i in range(1, n):
                _cmp(r, f"cyclic: t s{i} = s{i - 1} t on C^{n}",
                     t[n - 1] @ s[n][i], s[n][i - 1] @ t[n], n, "codegeneracy", i, dims)
            _cmp(r, f"cyclic: t s0 = s{n - 1} t^2 on C^{n}",
                 t[n - 1] @ s[n][0], s[n][n - 1] @ t[n] @ t[n], n, "codegeneracy", 0, dims)
        _cmp(r, f"cyclic: t^{n + 1} = id on C^{n}", t[n] ** (n + 1), Mat.identity(c.dims[n]),
             n, "tau", None, dims)
    return r


def check_cyclic(c: CyclicData) -> Report:
    r = Report(f"cyclic relations ({c.name})")
    N, d, s, t = c.max_degree, c.faces, c.degeneracies, c.tau
    for n in range(N + 1):
        dims = (c.dims[n],)
        if n >= 2:
            for j in range(n + 1):
                for i in range(j):
                    _cmp(r, f"simplicial: d{i} d{j} = d{j - 1} d{i} on C_{n}",
                         d[n - 1][i] @ d[n][j], d[n - 1][j - 1] @ d[n][i], n, "face", i, dims)
        if n + 2 <= N:
            for j in range(n + 1):
                for i in range(j + 1):
                    _cmp(r, f"simplicial: s{i} s{j} = s{j + 1} s{i} on C_{n}",
                         s[n + 1][i] @ s[n][j], s[n + 1][j + 1] @ s[n][i], n, "degeneracy", i, dims)
        if n + 1 <= N:
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = d[n + 1][i] @ s[n][j]
                    if i < j:
                        rhs = s[n - 1][j - 1] @ d[n][i]
                    elif i in (j, j + 1):
                        rhs = Mat.identity(c.dims[n])
                    else:
                        rhs = s[n - 1][j] @ d[n][i - 1]
                    _cmp(r, f"simplicial: d{i} s{j} on C_{n}", lhs, rhs, n, "mixed", i, dims)
            for i in range(1, n + 1):
                _cmp(r, f"cyclic: s{i} t = t s{i - 1} on C_{n}",
                     s[n][i] @ t[n], t[n + 1] @ s[n][i - 1], n, "degeneracy", i, dims)
            _cmp(r, f"cyclic: s0 t = t^2 s{n} on C_{n}",
                 s[n][0] @ t[n], t[n + 1] @ t[n + 1] @ s[n][n], n, "degeneracy", 0, dims)
        if n >= 1:
            for i in range(1, n + 1):
                _cmp(r, f"cyclic: d{i} t = t d{i - 1} on C_{n}",
                     d[n][i] @ t[n], t[n - 1] @ d[n][i - 1], n, "face", i, dims)
            _cmp(r, f"cyclic: d0 t = d{n} on C_{n}", d[n][0] @ t[n], d[n][n], n, "face", 0, dims)
        _cmp(r, f"cyclic: t^{n + 1} = id on C_{n}", t[n] ** (n + 1), Mat.identity(c.dims[n]),
             n, "tau", None, dims)
    return r


# ---------------------------------------------------------------------------
# cyclic duality

def dualize_cyclic(c: CyclicData) -> CocyclicData:
    """Cyclic module -> cocyclic module; the result stops at degree N-1."""
    N = c.max_degree - 1
    tinv = [invert(c.tau[n]) for n in range(N + 1)]
    cofaces = []
    for n in range(N):
        row = [c.tau[n + 1] @ c.degeneracies[n][n]]
        row += [c.degeneracies[n][i - 1] for i in range(1, n + 2)]
        cofaces.append(tuple(row))
    codeg = tuple(tuple(c.faces[n][i] for i in range(n)) for n in range(N + 1))
    return CocyclicData(N, c.dims[:N + 1], tuple(cofaces), codeg, tuple(tinv), f"dual({c.name})")


def dualize_cocyclic(c: CocyclicData) -> CyclicData:
    """Cocyclic module -> cyclic module; the result stops at degree N-1."""
    N = c.max_degree - 1
    tau = [invert(c.tau[n]) for n in range(N + 1)]
    faces = []
    for n in range(N + 1):
        if n == 0:
            faces.append(())
            continue
        row = [c.codegeneracies[n][i] for i in range(n)]
        row.append(c.codegeneracies[n][0] @ tau[n])
        faces.append(tuple(row))
    degen = tuple(tuple(c.cofaces[n][i + 1] for i in range(n + 1)) for n in range(N))
    return CyclicData(N, c.dims[:N + 1], tuple(faces), degen, tuple(tau), f"dual({c.name})")


def compare_cyclic(a: CyclicData, b: CyclicData, upto: int) -> Report:
    """Matrix equality of two cyclic modules in degrees <= upto."""
    r = Report("cyclic module equality")
    for n in range(upto + 1):
        r.require(f"dim C_{n}", a.dims[n] == b.dims[n], degree=n)
        r.add(compare_maps(f"tau on C_{n}", a.tau[n], b.tau[n], degree=n, map="tau"))
        for i, (x, y) in enumerate(zip(a.faces[n], b.faces[n])):
            r.add(compare_maps(f"face {i} on C_{n}", x, y, degree=n, map="face", index=i))
        if n < min(a.max_degree, b.max_degree):
            for i, (x, y) in enumerate(zip(a.degeneracies[n], b.degeneracies[n])):
                r.add(compare_maps(f"degeneracy {i} on C_{n}", x, y, degree=n,
                                   map="degeneracy", index=i))
    return r


def compare_cocyclic(a: CocyclicData, b: CocyclicData, upto: int) -> Report:
    r = Report("cocyclic module equality")
    for n in range(upto + 1):
        r.require(f"dim C^{n}", a.dims[n] == b.dims[n], degree=n)
        r.add(compare_maps(f"tau on C^{n}", a.tau[n], b.tau[n], degree=n, map="tau"))
        for i, (x, y) in enumerate(zip(a.codegeneracies[n], b.codegeneracies[n])):
            r.add(compare_maps(f"codegeneracy {i} on C^{n}", x, y, degree=n,
                               map="codegeneracy", index=i))
        if n < min(a.max_degree, b.max_degree):
            for i, (x, y) in enumerate(zip(a.cofaces[n], b.cofaces[n])):
                r.add(compare_maps(f"coface {i} on C^{n}", x, y, degree=n, map="coface", index=i))
    return r


# ---------------------------------------------------------------------------
# the Hopf cocyclic module with coefficients in a right-left SAYD module

def hopf_cocyclic_110(h: HopfData, m: SaydData, N: int, name: str | None = None) -> CocyclicData:
    """Spaces H^{(x)n} (x) M with legs ordered (h_1, ..., h_n, m)."""
    if m.chirality != RIGHT_LEFT:
        raise ValueError("needs a right-left SAYD module")
    dh, dm = h.dim, m.space_dim
    act, co = m.action, m.coaction
    one = h.one

    def dims(n):
        return (dh,) * n + (dm,)

    def split_all(hs):
        """Expand Delta on every h_i: yields (firsts, seconds, coeff)."""
        terms = [((), (), 1)]
        for x in hs:
            nxt = []
            for f, s, c in terms:
                for (a, b), v in h.cop(x).items():
                    nxt.append((f + (a,), s + (b,), c * v))
            terms = nxt
        return terms

    def insert_unit(i):
        def fn(t):
            return {t[:i] + (k,) + t[i:]: c for k, c in one.items()}
        return fn

    def last_coface(t):
        hs, mm = t[:-1], t[-1]
        acc: dict = {}
        for f, s, c in split_all(hs):
            sp = h.S_el(h.product_all([{b: 1} for b in s]))
            for (hm, m0), v in co.coact(mm).items():
                for k, w in h.product(sp, {hm: 1}).items():
                    add_to(acc, f + (k, m0), c * v * w)
        return acc

    def multiply(i):
        def fn(t):
            return {t[:i] + (k,) + t[i + 2:]: c for k, c in h.mul(t[i], t[i + 1]).items()}
        return fn

    def drop_last_h(t):
        e = h.eps(t[-2])
        return {t[:-2] + (t[-1],): e} if e else {}

    def cyclic(t):
        hs, mm = t[:-1], t[-1]
        acc: dict = {}
        for f, s, c in split_all(hs):
            sp = h.S_el(h.product_all([{b: 1} for b in s]))
            for (hm, m0), v in co.coact(mm).items():
                left = h.product(sp, {hm: 1})
                right = act.act(m0, f[0])
                for k, w in left.items():
                    for k2, w2 in right.items():
                        add_to(acc, f[1:] + (k, k2), c * v * w * w2)
        return acc

    cofaces, codeg, tau = [], [], []
    for n in range(N + 1):
        if n < N:
            row = [build_map(dims(n), dims(n + 1), insert_unit(i)) for i in range(n + 1)]
            row.append(build_map(dims(n), dims(n + 1), last_coface))
            cofaces.append(tuple(row))
        if n == 0:
            codeg.append(())
            tau.append(Mat.identity(dm))
            continue
        row = [build_map(dims(n), dims(n - 1), multiply(i)) for i in range(n - 1)]
        row.append(build_map(dims(n), dims(n - 1), drop_last_h))
        codeg.append(tuple(row))
        tau.append(build_map(dims(n), dims(n), cyclic))
    return CocyclicData(N, tuple(dh ** n * dm for n in range(N + 1)), tuple(cofaces),
                        tuple(codeg), tuple(tau), name or f"C^*({h.name}, M)")


# ---------------------------------------------------------------------------
# ranks

@dataclass
class RankTable:
    hochschild: dict = field(default_factory=dict)
    cyclic: dict = field(default_factory=dict)
    b_squared_zero: bool = True
    total_squared_zero: bool = True

    def to_dict(self) -> dict:
        return {str(n): {"hochschild": self.hochschild[n], "cyclic": self.cyclic[n]}
                for n in sorted(self.cyclic)}

    def vector(self) -> list:
        return [self.cyclic[n] for n in sorted(self.cyclic)]


def _alt_sum(maps, count, rows, cols):
    acc = Mat.zero(rows, cols)
    for i in range(count):
        acc = acc + maps[i] if i % 2 == 0 else acc - maps[i]
    return acc


def _lambda(tau: Mat, n: int) -> Mat:
    return tau if n % 2 == 0 else -tau


def _norm(lam: Mat, n: int) -> Mat:
    acc, p = Mat.identity(lam.rows), Mat.identity(lam.rows)
    for _ in range(n):
        p = p @ lam
        acc = acc + p
    return acc


def _blocks(row_dims, col_dims, blocks: dict) -> Mat:
    roff = [sum(row_dims[:i]) for i in range(len(row_dims))]
    coff = [sum(col_dims[:i]) for i in range(len(col_dims))]
    cols: dict = {}
    for (bi, bj), m in blocks.items():
        for j, col in m._cols.items():
            dst = cols.setdefault(coff[bj] + j, {})
            for i, v in col.items():
                w = dst.get(roff[bi] + i, 0) + v
                if w:
                    dst[roff[bi] + i] = w
                else:
                    dst.pop(roff[bi] + i, None)
    return Mat(sum(row_dims), sum(col_dims), {j: c for j, c in cols.items() if c})


def cocyclic_differentials(c: CocyclicData):
    N = c.max_degree
    b = [_alt_sum(c.cofaces[n], n + 2, c.dims[n + 1], c.dims[n]) for n in range(N)]
    bp = [_alt_sum(c.cofaces[n], n + 1, c.dims[n + 1], c.dims[n]) for n in range(N)]
    lam = [_lambda(c.tau[n], n) for n in range(N + 1)]
    return b, bp, lam


def cocyclic_total_differential(c: CocyclicData, n: int, parts=None) -> Mat:
    """D^n : Tot^n -> Tot^{n+1}, Tot^n = sum_{p=0..n} C^{n-p} (column p)."""
    b, bp, lam = parts or cocyclic_differentials(c)
    src = [c.dims[n - p] for p in range(n + 1)]
    dst = [c.dims[n + 1 - p] for p in range(n + 2)]
    blocks = {}
    for p in range(n + 1):
        q = n - p
        blocks[(p, p)] = b[q] if p % 2 == 0 else -bp[q]
        I = Mat.identity(c.dims[q])
        blocks[(p + 1, p)] = (I - lam[q]) if p % 2 == 0 else _norm(lam[q], q)
    return _blocks(dst, src, blocks)


def cyclic_cohomology_ranks(c: CocyclicData) -> RankTable:
    N = c.max_degree
    parts = cocyclic_differentials(c)
    b = parts[0]
    t = RankTable()
    for n in range(N - 1):
        if not (b[n + 1] @ b[n]).is_zero():
            t.b_squared_zero = False
    D = [cocyclic_total_differential(c, n, parts) for n in range(N)]
    for n in range(N - 1):
        if not (D[n + 1] @ D[n]).is_zero():
            t.total_squared_zero = False
    rb = [rank(m) for m in b]
    rD = [rank(m) for m in D]
    for n in range(N):
        t.hochschild[n] = c.dims[n] - rb[n] - (rb[n - 1] if n else 0)
        tot = sum(c.dims[n - p] for p in range(n + 1))
        t.cyclic[n] = tot - rD[n] - (rD[n - 1] if n else 0)
    return t


def cyclic_differentials(c: CyclicData):
    N = c.max_degree
    b = [None] + [_alt_sum(c.faces[n], n + 1, c.dims[n - 1], c.dims[n]) for n in range(1, N + 1)]
    bp = [None] + [_alt_sum(c.faces[n], n, c.dims[n - 1], c.dims[n]) for n in range(1, N + 1)]
    lam = [_lambda(c.tau[n], n) for n in range(N + 1)]
    return b, bp, lam


def cyclic_total_differential(c: CyclicData, n: int, parts=None) -> Mat:
    """D_n : Tot_n -> Tot_{n-1}, Tot_n = sum_{p=0..n} C_{n-p} (column p)."""
    b, bp, lam = parts or cyclic_differentials(c)
    src = [c.dims[n - p] for p in range(n + 1)]
    dst = [c.dims[n - 1 - p] for p in range(n)]
    blocks = {}
    for p in range(n + 1):
        q = n - p
        if q >= 1:
            blocks[(p, p)] = b[q] if p % 2 == 0 else -bp[q]
        if p >= 1:
            I = Mat.identity(c.dims[q])
            blocks[(p - 1, p)] = (I - lam[q]) if p % 2 == 1 else _norm(lam[q], q)
    return _blocks(dst, src, blocks)


def cyclic_homology_ranks(c: CyclicData) -> RankTable:
    N = c.max_degree
    parts = cyclic_differentials(c)
    b = parts[0]
    t = RankTable()
    for n in range(2, N + 1):
        if not (b[n - 1] @ b[n]).is_zero():
            t.b_squared_zero = False
    D = [None] + [cyclic_total_differential(c, n, parts) for n in range(1, N + 1)]
    for n in range(2, N + 1):
        if not (D[n - 1] @ D[n]).is_zero():
            t.total_squared_zero = False
    rb = [0] + [rank(b[n]) for n in range(1, N + 1)]
    rD = [0] + [rank(D[n]) for n in range(1, N + 1)]
    for n in range(N):
        t.hochschild[n] = c.dims[n] - rb[n] - rb[n + 1]
        tot = sum(c.dims[n - p] for p in range(n + 1))
        t.cyclic[n] = tot - rD[n] - rD[n + 1]
    return t
