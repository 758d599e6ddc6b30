"""Independent reference computations used by the tests.

Everything here works on dense lists of Fractions and shares no code with the
sparse elimination in the package. Cyclic (co)homology is computed through
Connes' complex (cyclic invariants / coinvariants with b), not through the
bicomplex that the package uses, so agreement is a genuine cross-check.
"""

from fractions import Fraction


def dense(m):
    """Mat -> list of rows of Fractions (rows x cols)."""
    out = [[Fraction(0)] * m.cols for _ in range(m.rows)]
    for (i, j), v in m.entries.items():
        out[i][j] = Fraction(v)
    return out


def rank(rows, ncols=None):
    """Rank by plain Gaussian elimination."""
    a = [list(map(Fraction, r)) for r in rows]
    if not a:
        return 0
    ncols = len(a[0]) if ncols is None else ncols
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def null_space(rows, ncols):
    """Basis (list of column vectors) of {x : rows x = 0}."""
    a = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -a[i][f]
        basis.append(v)
    return basis


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def add(a, b, s=1):
    return [[x + s * y for x, y in zip(r1, r2)] for r1, r2 in zip(a, b)]


def scale(a, s):
    return [[s * x for x in r] for r in a]


def hstack(a, b):
    return [r1 + r2 for r1, r2 in zip(a, b)]


def _alternating(maps, rows, cols):
    out = [[Fraction(0)] * cols for _ in range(rows)]
    for i, m in enumerate(maps):
        out = add(out, dense(m), (-1) ** i)
    return out


def _lam(tau, n):
    return scale(dense(tau), (-1) ** n)


def connes_cohomology(c):
    """(HH ranks, HC ranks) for n < N from a CocyclicData."""
    N = c.max_degree
    b = [_alternating(c.cofaces[n], c.dims[n + 1], c.dims[n]) for n in range(N)]
    hh, hc = [], []
    inv = []
    for n in range(N + 1):
        one_minus = add(identity(c.dims[n]), _lam(c.tau[n], n), -1)
        inv.append(null_space(one_minus, c.dims[n]))
    for n in range(N):
        rk_b = rank(b[n], c.dims[n])
        rk_prev = rank(b[n - 1], c.dims[n - 1]) if n else 0
        hh.append(c.dims[n] - rk_b - rk_prev)
        # b restricted to the invariant cochains
        def restricted(k):
            basis = inv[k]
            if not basis:
                return 0
            cols = [list(x) for x in zip(*basis)]  # dims[k] x len(basis)
            return rank(matmul(b[k], cols), len(basis))
        rk_here = restricted(n)
        rk_in = restricted(n - 1) if n else 0
        hc.append(len(inv[n]) - rk_here - rk_in)
    return hh, hc


def connes_homology(c):
    """(HH ranks, HC ranks) for n < N from a CyclicData, using coinvariants."""
    N = c.max_degree
    b = [None] + [_alternating(c.faces[n], c.dims[n - 1], c.dims[n]) for n in range(1, N + 1)]
    img = [add(identity(c.dims[n]), _lam(c.tau[n], n), -1) for n in range(N + 1)]
    img_rank = [rank(m, c.dims[n]) for n, m in enumerate(img)]

    def bar_rank(n):
        # rank of b_n : C_n/im(1-l) -> C_{n-1}/im(1-l)
        if n == 0:
            return 0
        return rank(hstack(b[n], img[n - 1]), c.dims[n] + c.dims[n - 1]) - img_rank[n - 1]

    hh, hc = [], []
    for n in range(N):
        rk_out = rank(b[n], c.dims[n]) if n else 0
        rk_in = rank(b[n + 1], c.dims[n + 1])
        hh.append(c.dims[n] - rk_out - rk_in)
        coinv = c.dims[n] - img_rank[n]
        hc.append(coinv - bar_rank(n) - bar_rank(n + 1))
    return hh, hc
