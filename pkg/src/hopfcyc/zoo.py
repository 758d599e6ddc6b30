"""Bundled example Hopf algebras and (co)extension inputs.

Hopf algebras: the trivial algebra k, cyclic group algebras kC_n, group
algebras from multiplication tables (kS3), and Sweedler's 4-dimensional
algebra H4. Every entry has exact integer structure constants.

Coextension inputs (a coalgebra C with a right H-action) and extension
inputs (an algebra A with a right H-coaction) are built on top of these.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import NotAGroup
from .exact_linalg import Mat
from .hopf_core import AlgebraData, CoalgebraData, HopfData, hopf_from_tables
from .rep_structures import (RIGHT, ActionData, CoactionData, regular_action,
                             regular_coaction, trivial_action, trivial_coaction)


# ---------------------------------------------------------------------------
# Hopf algebras

def group_algebra_from_table(table, labels=None, name="kG") -> HopfData:
    """Group algebra with grouplike basis; ``table[a][b]`` is the index of ab."""
    n = len(table)
    labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(n))
    for a in range(n):
        if len(table[a]) != n or any(not 0 <= x < n for x in table[a]):
            raise NotAGroup("table is not a square table of element indices", {"row": a})
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise NotAGroup("multiplication is not associative",
                                    {"triple": [a, b, c]})
    ids = [e for e in range(n) if all(table[e][a] == a == table[a][e] for a in range(n))]
    if not ids:
        raise NotAGroup("no identity element", {})
    e = ids[0]
    inv = {}
    for a in range(n):
        bs = [b for b in range(n) if table[a][b] == e and table[b][a] == e]
        if not bs:
            raise NotAGroup("element without inverse", {"element": a})
        inv[a] = bs[0]
    mul = {(a, b): {table[a][b]: 1} for a in range(n) for b in range(n)}
    cop = {a: {(a, a): 1} for a in range(n)}
    return hopf_from_tables(name, labels, mul, {e: 1}, cop, {a: 1 for a in range(n)},
                            {a: {inv[a]: 1} for a in range(n)})


def cyclic_group_algebra(n: int) -> HopfData:
    if n < 1:
        raise ValueError("n must be >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = ["1"] + ["g" if a == 1 else f"g^{a}" for a in range(1, n)]
    return group_algebra_from_table(table, labels, "k" if n == 1 else f"kC{n}")


def trivial_hopf() -> HopfData:
    return cyclic_group_algebra(1)


S3_ELEMENTS = tuple(permutations(range(3)))


def s3_table() -> list:
    idx = {p: i for i, p in enumerate(S3_ELEMENTS)}
    return [[idx[tuple(p[q[i]] for i in range(3))] for q in S3_ELEMENTS] for p in S3_ELEMENTS]


def symmetric_group_s3() -> HopfData:
    labels = ["".join(map(str, p)) for p in S3_ELEMENTS]
    return group_algebra_from_table(s3_table(), labels, "kS3")


def permutation_sign(p) -> int:
    s = 1
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                s = -s
    return s


def sweedler_h4() -> HopfData:
    # basis 1, g, x, gx
    one, g, x, gx = range(4)
    word = {one: (0, 0), g: (1, 0), x: (0, 1), gx: (1, 1)}
    back = {v: k for k, v in word.items()}

    def mult(a, b):
        (ga, xa), (gb, xb) = word[a], word[b]
        if xa and xb:
            return {}
        # move x of a past g^gb: x g = -g x
        sign = -1 if (xa and gb) else 1
        return {back[((ga + gb) % 2, xa + xb)]: sign}

    mul = {(a, b): mult(a, b) for a in range(4) for b in range(4)}
    cop = {one: {(one, one): 1},
           g: {(g, g): 1},
           x: {(x, one): 1, (g, x): 1},
           gx: {(gx, g): 1, (one, gx): 1}}
    counit = {one: 1, g: 1}
    antipode = {one: {one: 1}, g: {g: 1}, x: {gx: -1}, gx: {x: 1}}
    return hopf_from_tables("H4", ("1", "g", "x", "gx"), mul, {one: 1}, cop, counit, antipode)


HOPF_ZOO = {
    "k": trivial_hopf,
    "kC2": lambda: cyclic_group_algebra(2),
    "kC4": lambda: cyclic_group_algebra(4),
    "kS3": symmetric_group_s3,
    "H4": sweedler_h4,
}


def hopf_zoo() -> dict:
    return {name: make() for name, make in HOPF_ZOO.items()}


# ---------------------------------------------------------------------------
# coextension and extension inputs

@dataclass(frozen=True, eq=False)
class CoextensionInput:
    name: str
    hopf: HopfData
    coalg: CoalgebraData
    action: ActionData


@dataclass(frozen=True, eq=False)
class ExtensionInput:
    name: str
    hopf: HopfData
    algebra: AlgebraData
    rho: CoactionData


def regular_coextension(h: HopfData) -> CoextensionInput:
    """C = H acted on by right multiplication; the quotient D is k."""
    return CoextensionInput(f"{h.name}-coext", h, h.coalgebra, regular_action(h, RIGHT))


def regular_extension(h: HopfData) -> ExtensionInput:
    """A = H coacted on by the comultiplication; the coinvariants are k."""
    return ExtensionInput(f"{h.name}-ext", h, h.algebra, regular_coaction(h, RIGHT))


def _subgroup_action(big: HopfData, small: HopfData, embed: dict) -> ActionData:
    """Right multiplication of ``big`` by the image of ``small`` under ``embed``
    (basis index of small -> basis index of big)."""
    cols = {}
    ds = small.dim
    for c in range(big.dim):
        for h in range(ds):
            v = big.mul(c, embed[h])
            if v:
                cols[c * ds + h] = dict(v)
    return ActionData(small, big.dim, RIGHT, Mat(big.dim, big.dim * ds, cols))


def h4_over_kc2_coextension() -> CoextensionInput:
    """C = H4 with kC2 = span{1, g} acting by right multiplication; D has dim 2."""
    h4, kc2 = sweedler_h4(), cyclic_group_algebra(2)
    return CoextensionInput("H4/kC2-coext", kc2, h4.coalgebra, _subgroup_action(h4, kc2, {0: 0, 1: 1}))


def s3_over_c2_coextension() -> CoextensionInput:
    """C = kS3 with the subgroup generated by the transposition 021 acting on the right."""
    s3, kc2 = symmetric_group_s3(), cyclic_group_algebra(2)
    t = S3_ELEMENTS.index((0, 2, 1))
    return CoextensionInput("kS3/C2-coext", kc2, s3.coalgebra, _subgroup_action(s3, kc2, {0: 0, 1: t}))


def trivial_action_coextension(h: HopfData | None = None) -> CoextensionInput:
    """kC2 acting trivially on C = kC2: not Galois (I = 0, so D = C)."""
    h = h or cyclic_group_algebra(2)
    return CoextensionInput(f"{h.name}-trivial-coext", h, h.coalgebra, trivial_action(h, h.dim))


def h4_over_kc2_extension() -> ExtensionInput:
    """A = H4 coacted on by kC2 through the Hopf projection x -> 0; B = span{1, x}."""
    h4, kc2 = sweedler_h4(), cyclic_group_algebra(2)
    proj = {0: 0, 1: 1}  # 1 -> 1, g -> g, x and gx -> 0
    cols = {}
    for a in range(4):
        col = {}
        for (b, c), v in h4.cop(a).items():
            if c in proj:
                col[b * 2 + proj[c]] = col.get(b * 2 + proj[c], 0) + v
        cols[a] = {k: v for k, v in col.items() if v}
    rho = CoactionData(kc2.coalgebra, 4, RIGHT, Mat(8, 4, cols), kc2)
    return ExtensionInput("H4/kC2-ext", kc2, h4.algebra, rho)


def s3_sign_extension() -> ExtensionInput:
    """A = kS3 graded by the sign character; B = kA3."""
    s3, kc2 = symmetric_group_s3(), cyclic_group_algebra(2)
    cols = {a: {a * 2 + (0 if permutation_sign(p) == 1 else 1): 1}
            for a, p in enumerate(S3_ELEMENTS)}
    rho = CoactionData(kc2.coalgebra, 6, RIGHT, Mat(12, 6, cols), kc2)
    return ExtensionInput("kS3-sign-ext", kc2, s3.algebra, rho)


def trivial_coaction_extension(h: HopfData | None = None) -> ExtensionInput:
    """A = kC2 with a -> a (x) 1: coinvariants are all of A, not Galois."""
    h = h or cyclic_group_algebra(2)
    return ExtensionInput(f"{h.name}-trivial-ext", h, h.algebra, trivial_coaction(h, h.dim))


COEXT_FIXTURES = {
    "k-coext": lambda: regular_coextension(trivial_hopf()),
    "kC2-coext": lambda: regular_coextension(cyclic_group_algebra(2)),
    "kC4-coext": lambda: regular_coextension(cyclic_group_algebra(4)),
    "kS3-coext": lambda: regular_coextension(symmetric_group_s3()),
    "H4-coext": lambda: regular_coextension(sweedler_h4()),
    "H4/kC2-coext": h4_over_kc2_coextension,
    "kS3/C2-coext": s3_over_c2_coextension,
    "kC2-trivial-coext": trivial_action_coextension,
}

EXT_FIXTURES = {
    "k-ext": lambda: regular_extension(trivial_hopf()),
    "kC2-ext": lambda: regular_extension(cyclic_group_algebra(2)),
    "kC4-ext": lambda: regular_extension(cyclic_group_algebra(4)),
    "kS3-ext": lambda: regular_extension(symmetric_group_s3()),
    "H4-ext": lambda: regular_extension(sweedler_h4()),
    "H4/kC2-ext": h4_over_kc2_extension,
    "kS3-sign-ext": s3_sign_extension,
    "kC2-trivial-ext": trivial_coaction_extension,
}
