"""Actions, coactions, module coalgebras, comodule algebras and the
(stable) anti-Yetter-Drinfeld conditions.

Conventions: a right action is a map M (x) H -> M, a left action H (x) M -> M;
a left coaction is M -> H (x) M, a right coaction M -> M (x) H.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exact_linalg import Mat, kron
from .hopf_core import AlgebraData, CoalgebraData, HopfData, flip
from .multilinear import add_to, build_map
from .report import Report

LEFT, RIGHT = "left", "right"
LEFT_RIGHT, RIGHT_LEFT = "left-right", "right-left"


@dataclass(frozen=True, eq=False)
class ActionData:
    hopf: HopfData
    space_dim: int
    side: str
    map: Mat

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be left or right, got {self.side!r}")
        want = (self.space_dim, self.space_dim * self.hopf.dim)
        if self.map.shape != want:
            raise ValueError(f"action matrix has shape {self.map.shape}, expected {want}")

    @cached_property
    def table(self) -> dict:
        """(m, h) -> {m': c}, whatever the side."""
        dh, dm = self.hopf.dim, self.space_dim
        out = {}
        for m in range(dm):
            for h in range(dh):
                col = m * dh + h if self.side == RIGHT else h * dm + m
                out[(m, h)] = dict(self.map.col(col))
        return out

    def act(self, m, h) -> dict:
        return self.table[(m, h)]

    def act_el(self, x: dict, y: dict) -> dict:
        """Action of the H-element ``y`` on the M-element ``x``."""
        acc: dict = {}
        tab = self.table
        for m, a in x.items():
            for h, b in y.items():
                for k, c in tab[(m, h)].items():
                    add_to(acc, k, a * b * c)
        return acc


@dataclass(frozen=True, eq=False)
class CoactionData:
    coalg: CoalgebraData
    space_dim: int
    side: str
    map: Mat
    # set when the coacting coalgebra is that of a Hopf algebra
    hopf: HopfData | None = None

    def __post_init__(self):
        if self.side not in (LEFT, RIGHT):
            raise ValueError(f"side must be left or right, got {self.side!r}")
        want = (self.space_dim * self.coalg.dim, self.space_dim)
        if self.map.shape != want:
            raise ValueError(f"coaction matrix has shape {self.map.shape}, expected {want}")

    @cached_property
    def table(self) -> list:
        """m -> {(x, y): c}, keys in the map's own leg order."""
        if self.side == LEFT:
            d = self.space_dim
        else:
            d = self.coalg.dim
        return [{divmod(r, d): v for r, v in self.map.col(m).items()}
                for m in range(self.space_dim)]

    def coact(self, m) -> dict:
        return self.table[m]

    def coact_el(self, x: dict) -> dict:
        acc: dict = {}
        for m, a in x.items():
            for k, c in self.table[m].items():
                add_to(acc, k, a * c)
        return acc


@dataclass(frozen=True, eq=False)
class SaydData:
    hopf: HopfData
    space_dim: int
    action: ActionData
    coaction: CoactionData
    chirality: str

    def __post_init__(self):
        if self.chirality == LEFT_RIGHT:
            ok = self.action.side == LEFT and self.coaction.side == RIGHT
        elif self.chirality == RIGHT_LEFT:
            ok = self.action.side == RIGHT and self.coaction.side == LEFT
        else:
            raise ValueError(f"unknown chirality {self.chirality!r}")
        if not ok:
            raise ValueError(f"{self.chirality} needs matching action/coaction sides")


# ---------------------------------------------------------------------------
# common constructors

def trivial_action(h: HopfData, dim: int, side: str = RIGHT) -> ActionData:
    """Action through the counit: m . h = eps(h) m."""
    I = Mat.identity(dim)
    m = kron(I, h.coalgebra.counit) if side == RIGHT else kron(h.coalgebra.counit, I)
    return ActionData(h, dim, side, m)


def regular_action(h: HopfData, side: str = RIGHT) -> ActionData:
    """H acting on itself by multiplication."""
    if side == RIGHT:
        return ActionData(h, h.dim, RIGHT, h.algebra.mult)
    return ActionData(h, h.dim, LEFT, h.algebra.mult)


def trivial_coaction(h: HopfData, dim: int, side: str = RIGHT) -> CoactionData:
    """m -> m (x) 1 (or 1 (x) m)."""
    I = Mat.identity(dim)
    u = h.algebra.unit
    m = kron(I, u) if side == RIGHT else kron(u, I)
    return CoactionData(h.coalgebra, dim, side, m, h)


def regular_coaction(h: HopfData, side: str = RIGHT) -> CoactionData:
    return CoactionData(h.coalgebra, h.dim, side, h.coalgebra.comult, h)


# ---------------------------------------------------------------------------
# validators

def validate_action(a: ActionData) -> Report:
    r = Report(f"{a.side} action axioms")
    h, d = a.hopf, a.space_dim
    I, Ih = Mat.identity(d), Mat.identity(h.dim)
    if a.side == RIGHT:
        r.compare("action associativity", a.map @ kron(a.map, Ih),
                  a.map @ kron(I, h.algebra.mult), (d, h.dim, h.dim))
        r.compare("unit acts trivially", a.map @ kron(I, h.algebra.unit), I, (d,))
    else:
        r.compare("action associativity", a.map @ kron(Ih, a.map),
                  a.map @ kron(h.algebra.mult, I), (h.dim, h.dim, d))
        r.compare("unit acts trivially", a.map @ kron(h.algebra.unit, I), I, (d,))
    return r


def validate_coaction(c: CoactionData) -> Report:
    r = Report(f"{c.side} coaction axioms")
    d, k = c.space_dim, c.coalg
    I, Ik = Mat.identity(d), Mat.identity(k.dim)
    if c.side == LEFT:
        r.compare("coaction coassociativity", kron(k.comult, I) @ c.map,
                  kron(Ik, c.map) @ c.map, (d,))
        r.compare("coaction counitality", kron(k.counit, I) @ c.map, I, (d,))
    else:
        r.compare("coaction coassociativity", kron(c.map, Ik) @ c.map,
                  kron(I, k.comult) @ c.map, (d,))
        r.compare("coaction counitality", kron(I, k.counit) @ c.map, I, (d,))
    return r


def validate_module_coalgebra(c: CoalgebraData, a: ActionData) -> Report:
    if a.side != RIGHT:
        raise ValueError("module coalgebra checks expect a right action")
    r = Report("right module coalgebra")
    h = a.hopf
    dc, dh = c.dim, h.dim
    Ic, Ih = Mat.identity(dc), Mat.identity(dh)
    mid = kron(Ic, flip(dc, dh), Ih)
    r.compare("comultiplication is H-linear", c.comult @ a.map,
              kron(a.map, a.map) @ mid @ kron(c.comult, h.coalgebra.comult), (dc, dh))
    r.compare("counit is H-linear", c.counit @ a.map, kron(c.counit, h.coalgebra.counit), (dc, dh))
    return r


def validate_comodule_algebra(a: AlgebraData, rho: CoactionData) -> Report:
    if rho.side != RIGHT:
        raise ValueError("comodule algebra checks expect a right coaction")
    r = validate_coaction(rho)
    r.title = "right comodule algebra"
    k = rho.coalg
    da = a.dim
    if rho.hopf is None:
        raise ValueError("comodule algebra checks need the coacting Hopf algebra")
    hm = rho.hopf.algebra
    mid = kron(Mat.identity(da), flip(k.dim, da), Mat.identity(k.dim))
    r.compare("coaction is multiplicative", rho.map @ a.mult,
              kron(a.mult, hm.mult) @ mid @ kron(rho.map, rho.map), (da, da))
    r.compare("coaction is unital", rho.map @ a.unit, kron(a.unit, hm.unit))
    return r


def check_sayd(s: SaydData) -> Report:
    """AYD compatibility and stability as exact matrix identities."""
    h = s.hopf
    d, dh = s.space_dim, h.dim
    act, co = s.action, s.coaction
    r = Report(f"{s.chirality} SAYD")
    if s.chirality == RIGHT_LEFT:
        # (m < h)_{-1} (x) (m < h)_0  vs  S(h3) m_{-1} h1 (x) m_0 < h2
        def lhs(t):
            m, x = t
            return co.coact_el(act.act(m, x))

        def rhs(t):
            m, x = t
            acc: dict = {}
            for (h1, h2, h3), c1 in h.iter_cop(x, 2).items():
                s3 = h.S(h3)
                for (hm, m0), c2 in co.coact(m).items():
                    left = h.product(h.product(s3, {hm: 1}), {h1: 1})
                    right = act.act(m0, h2)
                    for a, u in left.items():
                        for b, v in right.items():
                            add_to(acc, (a, b), c1 * c2 * u * v)
            return acc

        r.compare("AYD condition", build_map((d, dh), (dh, d), lhs),
                  build_map((d, dh), (dh, d), rhs), (d, dh))

        def stab(t):
            acc: dict = {}
            for (hm, m0), c in co.coact(t[0]).items():
                for k, v in act.act(m0, hm).items():
                    add_to(acc, (k,), c * v)
            return acc
    else:
        # (h > m)_0 (x) (h > m)_1  vs  h2 > m_0 (x) h3 m_1 S(h1)
        def lhs(t):
            x, m = t
            return co.coact_el(act.act(m, x))

        def rhs(t):
            x, m = t
            acc: dict = {}
            for (h1, h2, h3), c1 in h.iter_cop(x, 2).items():
                s1 = h.S(h1)
                for (m0, hm), c2 in co.coact(m).items():
                    left = act.act(m0, h2)
                    right = h.product(h.product({h3: 1}, {hm: 1}), s1)
                    for a, u in left.items():
                        for b, v in right.items():
                            add_to(acc, (a, b), c1 * c2 * u * v)
            return acc

        r.compare("AYD condition", build_map((dh, d), (d, dh), lhs),
                  build_map((dh, d), (d, dh), rhs), (dh, d))

        def stab(t):
            acc: dict = {}
            for (m0, hm), c in co.coact(t[0]).items():
                for k, v in act.act(m0, hm).items():
                    add_to(acc, (k,), c * v)
            return acc

    r.compare("stability", build_map((d,), (d,), stab), Mat.identity(d), (d,))
    return r
