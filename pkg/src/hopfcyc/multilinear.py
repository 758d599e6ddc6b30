"""Basis-level evaluation of multilinear maps.

Elements of a tensor power are dicts ``{(i0, i1, ...): coeff}``; elements of
a single space are ``{i: coeff}``. Structure maps are written as Python
functions on basis tuples and turned into matrices with :func:`build_map`,
which is much cheaper than composing large Kronecker products.
"""

from __future__ import annotations

from itertools import product
from math import prod
from typing import Callable, Iterable, Sequence

from .exact_linalg import Mat, _n


def flat(idx: Sequence[int], dims: Sequence[int]) -> int:
    j = 0
    for i, d in zip(idx, dims):
        j = j * d + i
    return j


def unflat(j: int, dims: Sequence[int]) -> tuple:
    out = []
    for d in reversed(dims):
        j, r = divmod(j, d)
        out.append(r)
    return tuple(reversed(out))


def basis_tuples(dims: Sequence[int]) -> Iterable[tuple]:
    return product(*(range(d) for d in dims))


def build_map(dom_dims: Sequence[int], cod_dims: Sequence[int],
              fn: Callable[[tuple], dict], columns: Iterable[int] | None = None) -> Mat:
    """Matrix of the linear map with ``fn(basis_tuple) -> {tuple: coeff}``.

    If ``columns`` is given only those domain basis vectors are evaluated and
    the others are left zero (useful before restricting to a subspace).
    """
    dom_dims, cod_dims = tuple(dom_dims), tuple(cod_dims)
    rows, cols = prod(cod_dims), prod(dom_dims)
    idxs = range(cols) if columns is None else sorted(set(columns))
    out = {}
    for j in idxs:
        val = fn(unflat(j, dom_dims))
        col = {}
        for key, v in val.items():
            if v:
                i = flat(key, cod_dims)
                col[i] = col.get(i, 0) + v
        col = {i: _n(v) for i, v in col.items() if v}
        if col:
            out[j] = col
    return Mat(rows, cols, out, _trusted=True)


def support_columns(m: Mat) -> set:
    """Row indices touched by the columns of ``m`` (e.g. an inclusion)."""
    s = set()
    for c in m._cols.values():
        s.update(c)
    return s


def add_to(acc: dict, key, v) -> None:
    if not v:
        return
    w = acc.get(key, 0) + v
    if w:
        acc[key] = w
    else:
        del acc[key]


def scaled(elem: dict, s) -> dict:
    if not s:
        return {}
    return {k: v * s for k, v in elem.items()}


def lin(elem: dict, fn: Callable) -> dict:
    """Linear extension: sum of coeff * fn(key)."""
    acc: dict = {}
    for k, c in elem.items():
        for k2, v in fn(k).items():
            add_to(acc, k2, c * v)
    return acc


def as_tuple(k) -> tuple:
    return k if isinstance(k, tuple) else (k,)


def tensor(*elems: dict) -> dict:
    """Tensor product of elements; keys are concatenated into one tuple."""
    acc: dict = {(): 1}
    for e in elems:
        nxt: dict = {}
        for k1, c1 in acc.items():
            for k2, c2 in e.items():
                add_to(nxt, k1 + as_tuple(k2), c1 * c2)
        acc = nxt
    return acc


def unit_vec(i) -> dict:
    return {i: 1}


def permutation_map(dims: Sequence[int], perm: Sequence[int]) -> Mat:
    """Leg permutation: output leg k is input leg ``perm[k]``."""
    dims = tuple(dims)
    return build_map(dims, [dims[p] for p in perm],
                     lambda t: {tuple(t[p] for p in perm): 1})


def readout(sub_pivots: Sequence[int], ambient: int) -> Mat:
    """Left inverse of a canonical inclusion: reads coordinates at pivots."""
    return Mat(len(sub_pivots), ambient, {p: {n: 1} for n, p in enumerate(sub_pivots)},
               _trusted=True)
