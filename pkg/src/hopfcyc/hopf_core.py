"""Finite-dimensional algebras, coalgebras and Hopf algebras as structure
constants, with axiom validation and the convolution product.

Matrices follow the global tensor convention of :mod:`exact_linalg`:
``mult`` is dim x dim**2, ``comult`` is dim**2 x dim, ``unit`` is a dim x 1
column and ``counit`` a 1 x dim row.

Besides the matrices each object exposes cached basis-level tables
(``mul``, ``cop``, ``S``, ``eps``) used by the multilinear builders.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import SingularMatrix
from .exact_linalg import Mat, invert, kron
from .multilinear import add_to, permutation_map
from .report import Report


@dataclass(frozen=True, eq=False)
class AlgebraData:
    dim: int
    basis: tuple
    mult: Mat
    unit: Mat

    @cached_property
    def mul_table(self) -> dict:
        """(i, j) -> {k: c} with e_i e_j = sum c e_k."""
        d = self.dim
        out = {(i, j): {} for i in range(d) for j in range(d)}
        for col, c in self.mult._cols.items():
            out[divmod(col, d)] = dict(c)
        return out

    def mul(self, i, j) -> dict:
        return self.mul_table[(i, j)]

    @cached_property
    def one(self) -> dict:
        return dict(self.unit.col(0))

    def product(self, x: dict, y: dict) -> dict:
        acc: dict = {}
        tab = self.mul_table
        for i, a in x.items():
            for j, b in y.items():
                for k, c in tab[(i, j)].items():
                    add_to(acc, k, a * b * c)
        return acc

    def product_all(self, elems) -> dict:
        acc = self.one
        for e in elems:
            acc = self.product(acc, e)
        return acc


@dataclass(frozen=True, eq=False)
class CoalgebraData:
    dim: int
    basis: tuple
    comult: Mat
    counit: Mat

    @cached_property
    def cop_table(self) -> list:
        d = self.dim
        return [{divmod(r, d): v for r, v in self.comult.col(i).items()} for i in range(d)]

    def cop(self, i) -> dict:
        return self.cop_table[i]

    @cached_property
    def eps_table(self) -> list:
        return [self.counit[0, i] for i in range(self.dim)]

    def eps(self, i):
        return self.eps_table[i]

    def eps_el(self, x: dict):
        return sum(c * self.eps_table[i] for i, c in x.items())

    def iter_cop(self, i, n) -> dict:
        """Basis-level n-fold coproduct: {(i_1, ..., i_{n+1}): c}."""
        return _iter_cop(self, i, n)

    def iter_cop_el(self, x: dict, n) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for k, c in self.iter_cop(i, n).items():
                add_to(acc, k, a * c)
        return acc


@lru_cache(maxsize=None)
def _iter_cop(c: CoalgebraData, i, n) -> dict:
    if n == 0:
        return {(i,): 1}
    acc: dict = {}
    # expand the leftmost leg each step
    for k, v in _iter_cop(c, i, n - 1).items():
        for (a, b), w in c.cop(k[0]).items():
            add_to(acc, (a, b) + k[1:], v * w)
    return acc


@dataclass(frozen=True, eq=False)
class HopfData:
    algebra: AlgebraData
    coalgebra: CoalgebraData
    antipode: Mat
    name: str = "H"

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def basis(self):
        return self.algebra.basis

    # basis-level shortcuts
    def mul(self, i, j):
        return self.algebra.mul(i, j)

    def product(self, x, y):
        return self.algebra.product(x, y)

    def product_all(self, elems):
        return self.algebra.product_all(elems)

    @property
    def one(self):
        return self.algebra.one

    def cop(self, i):
        return self.coalgebra.cop(i)

    def iter_cop(self, i, n):
        return self.coalgebra.iter_cop(i, n)

    def eps(self, i):
        return self.coalgebra.eps(i)

    def eps_el(self, x):
        return self.coalgebra.eps_el(x)

    @cached_property
    def S_table(self) -> list:
        return [dict(self.antipode.col(i)) for i in range(self.dim)]

    def S(self, i) -> dict:
        return self.S_table[i]

    def S_el(self, x: dict) -> dict:
        acc: dict = {}
        for i, a in x.items():
            for k, c in self.S_table[i].items():
                add_to(acc, k, a * c)
        return acc

    @cached_property
    def S_inv(self) -> Mat:
        return invert(self.antipode)

    def index(self, label) -> int:
        return self.basis.index(label)


# ---------------------------------------------------------------------------
# constructors from basis-level tables

def algebra_from_table(basis, table: dict, unit: dict) -> AlgebraData:
    """``table[(i, j)] = {k: c}``."""
    d = len(basis)
    cols = {}
    for (i, j), val in table.items():
        col = {k: c for k, c in val.items() if c}
        if col:
            cols[i * d + j] = col
    return AlgebraData(d, tuple(basis), Mat(d, d * d, cols), Mat(d, 1, {0: unit}))


def coalgebra_from_table(basis, cop: dict, counit: dict) -> CoalgebraData:
    """``cop[i] = {(j, k): c}``, ``counit[i] = c``."""
    d = len(basis)
    cols = {i: {j * d + k: c for (j, k), c in val.items() if c} for i, val in cop.items()}
    return CoalgebraData(d, tuple(basis), Mat(d * d, d, cols),
                         Mat(1, d, {i: {0: c} for i, c in counit.items() if c}))


def hopf_from_tables(name, basis, mul, unit, cop, counit, antipode: dict) -> HopfData:
    d = len(basis)
    return HopfData(algebra_from_table(basis, mul, unit),
                    coalgebra_from_table(basis, cop, counit),
                    Mat(d, d, {i: v for i, v in antipode.items()}), name)


# ---------------------------------------------------------------------------
# derived maps

def iterated_coproduct(c: CoalgebraData, n: int) -> Mat:
    if n < 0:
        raise ValueError("n must be >= 0")
    m = Mat.identity(c.dim)
    for k in range(1, n + 1):
        m = kron(c.comult, Mat.identity(c.dim ** (k - 1))) @ m
    return m


def iterated_product(a: AlgebraData, n: int) -> Mat:
    if n < 1:
        raise ValueError("n must be >= 1")
    m = Mat.identity(a.dim)
    for k in range(2, n + 1):
        m = a.mult @ kron(m, Mat.identity(a.dim))
    return m


def convolution(f: Mat, g: Mat, src: CoalgebraData, dst: AlgebraData) -> Mat:
    return dst.mult @ kron(f, g) @ src.comult


def convolution_unit(src: CoalgebraData, dst: AlgebraData) -> Mat:
    return dst.unit @ src.counit


def antipode_inverse(h: HopfData) -> Mat:
    return invert(h.antipode)


def flip(d1: int, d2: int) -> Mat:
    return permutation_map((d1, d2), (1, 0))


# ---------------------------------------------------------------------------
# validation

def validate_algebra(a: AlgebraData, report: Report | None = None) -> Report:
    r = report if report is not None else Report("algebra axioms")
    d = a.dim
    I = Mat.identity(d)
    r.compare("associativity", a.mult @ kron(a.mult, I), a.mult @ kron(I, a.mult), (d, d, d))
    r.compare("left unit", a.mult @ kron(a.unit, I), I, (d,))
    r.compare("right unit", a.mult @ kron(I, a.unit), I, (d,))
    return r


def validate_coalgebra(c: CoalgebraData, report: Report | None = None) -> Report:
    r = report if report is not None else Report("coalgebra axioms")
    d = c.dim
    I = Mat.identity(d)
    r.compare("coassociativity", kron(c.comult, I) @ c.comult, kron(I, c.comult) @ c.comult, (d,))
    r.compare("left counit", kron(c.counit, I) @ c.comult, I, (d,))
    r.compare("right counit", kron(I, c.counit) @ c.comult, I, (d,))
    return r


def validate_hopf(h: HopfData) -> Report:
    r = Report(f"Hopf axioms for {h.name}")
    a, c, S = h.algebra, h.coalgebra, h.antipode
    d = h.dim
    r.require("dimensions agree", a.dim == c.dim == S.rows == S.cols,
              detail=f"algebra {a.dim}, coalgebra {c.dim}, antipode {S.shape}")
    if not r.passed:
        return r
    validate_algebra(a, r)
    validate_coalgebra(c, r)
    I = Mat.identity(d)
    mid = kron(I, flip(d, d), I)
    r.compare("comultiplication is multiplicative",
              c.comult @ a.mult, kron(a.mult, a.mult) @ mid @ kron(c.comult, c.comult), (d, d))
    r.compare("comultiplication is unital", c.comult @ a.unit, kron(a.unit, a.unit))
    r.compare("counit is multiplicative", c.counit @ a.mult, kron(c.counit, c.counit), (d, d))
    r.compare("counit is unital", c.counit @ a.unit, Mat.identity(1))
    ue = a.unit @ c.counit
    r.compare("left antipode", a.mult @ kron(S, I) @ c.comult, ue, (d,))
    r.compare("right antipode", a.mult @ kron(I, S) @ c.comult, ue, (d,))
    try:
        invert(S)
        r.require("antipode invertible", True)
    except SingularMatrix as e:
        r.require("antipode invertible", False, detail=str(e), witness={"rank": e.rank})
    return r


def antipode_anti_properties(h: HopfData) -> Report:
    """S is an algebra and coalgebra anti-homomorphism."""
    r = Report(f"antipode anti-homomorphism for {h.name}")
    d = h.dim
    S, a, c = h.antipode, h.algebra, h.coalgebra
    tw = flip(d, d)
    r.compare("S is an algebra anti-map", S @ a.mult, a.mult @ tw @ kron(S, S), (d, d))
    r.compare("S is a coalgebra anti-map", c.comult @ S, kron(S, S) @ tw @ c.comult, (d,))
    r.compare("S preserves unit", S @ a.unit, a.unit)
    r.compare("S preserves counit", c.counit @ S, c.counit, (d,))
    return r


def is_commutative(a: AlgebraData) -> bool:
    return a.mult == a.mult @ flip(a.dim, a.dim)


def is_cocommutative(c: CoalgebraData) -> bool:
    return c.comult == flip(c.dim, c.dim) @ c.comult
