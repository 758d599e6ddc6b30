"""Structure-constant bundles: a JSON document describing a Hopf algebra plus
either a coextension (coalgebra C with a right H-action) or an extension
(algebra A with a right H-coaction).

Layout (format_version 1)::

    {"format_version": 1, "name": ..., "max_degree": 4,
     "hopf": {"name", "basis", "mult", "unit", "comult", "counit", "antipode"},
     "coextension": {"coalgebra": {"basis", "comult", "counit"}, "action": [...]}
     | "extension": {"algebra": {"basis", "mult", "unit"}, "coaction": [...]}}

Sparse entries are lists whose last element is a rational (int or "p/q"):

* mult ``[i, j, k, c]``: e_i e_j contains c e_k
* comult ``[i, j, k, c]``: Delta(e_i) contains c e_j (x) e_k
* antipode ``[i, j, c]``: S(e_i) contains c e_j
* action ``[m, h, m2, c]``: e_m < h contains c e_m2
* coaction ``[a, b, h, c]``: rho(e_a) contains c e_b (x) h
* unit and counit are dense lists of rationals.
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass

from .errors import ParseError, ValidationError
from .exact_linalg import Mat, format_rational, parse_rational
from .hopf_core import (AlgebraData, CoalgebraData, HopfData, validate_algebra, validate_coalgebra,
                        validate_hopf)
from .rep_structures import (RIGHT, ActionData, CoactionData, validate_action, validate_coaction,
                             validate_comodule_algebra, validate_module_coalgebra)
from .zoo import COEXT_FIXTURES, EXT_FIXTURES, CoextensionInput, ExtensionInput

FORMAT_VERSION = 1
COEXTENSION, EXTENSION = "coextension", "extension"


@dataclass(frozen=True, eq=False)
class InputBundle:
    name: str
    hopf: HopfData
    mode: str
    coextension: CoextensionInput | None = None
    extension: ExtensionInput | None = None
    max_degree: int = 4

    @property
    def payload(self):
        return self.coextension if self.mode == COEXTENSION else self.extension

    def digest(self) -> str:
        return hashlib.sha256(emit_bundle(self).encode()).hexdigest()


# ---------------------------------------------------------------------------
# parsing

def _scalar(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"expected an integer or a 'p/q' string, got {x!r}", where)
    if isinstance(x, int):
        return x
    try:
        return parse_rational(x)
    except (ValueError, ZeroDivisionError) as e:
        raise ParseError(f"bad rational {x!r} ({e})", where) from None


def _field(obj, key, where, kind=None):
    if not isinstance(obj, dict):
        raise ParseError("expected an object", where)
    if key not in obj:
        raise ParseError(f"missing field {key!r}", where)
    v = obj[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"field {key!r} has the wrong type", f"{where}.{key}")
    return v


def _basis(obj, where) -> tuple:
    basis = _field(obj, "basis", where, list)
    if not basis or not all(isinstance(b, str) for b in basis):
        raise ParseError("basis must be a non-empty list of strings", f"{where}.basis")
    if "dim" in obj and obj["dim"] != len(basis):
        raise ParseError(f"dim {obj['dim']} does not match basis length {len(basis)}", f"{where}.dim")
    return tuple(basis)


def _entries(obj, key, where, bounds):
    """Sparse entries as (index tuple, value) with each index checked against ``bounds``."""
    raw = _field(obj, key, where, list)
    out = []
    for n, e in enumerate(raw):
        at = f"{where}.{key}[{n}]"
        if not isinstance(e, list) or len(e) != len(bounds) + 1:
            raise ParseError(f"expected {len(bounds)} indices and a value", at)
        idx = e[:-1]
        for i, b in zip(idx, bounds):
            if isinstance(i, bool) or not isinstance(i, int) or not 0 <= i < b:
                raise ParseError(f"index {i!r} out of range 0..{b - 1}", at)
        out.append((tuple(idx), _scalar(e[-1], at)))
    return out


def _dense(obj, key, where, dim):
    raw = _field(obj, key, where, list)
    if len(raw) != dim:
        raise ParseError(f"expected {dim} entries, got {len(raw)}", f"{where}.{key}")
    return [_scalar(x, f"{where}.{key}[{n}]") for n, x in enumerate(raw)]


def _accumulate(rows, cols, items, place) -> Mat:
    acc: dict = {}
    for idx, v in items:
        r, c = place(idx)
        col = acc.setdefault(c, {})
        col[r] = col.get(r, 0) + v
    return Mat(rows, cols, {c: {r: v for r, v in col.items() if v} for c, col in acc.items()})


def _algebra(obj, where) -> AlgebraData:
    basis = _basis(obj, where)
    d = len(basis)
    mult = _accumulate(d, d * d, _entries(obj, "mult", where, (d, d, d)),
                       lambda t: (t[2], t[0] * d + t[1]))
    unit = _dense(obj, "unit", where, d)
    return AlgebraData(d, basis, mult, Mat.column_vector(unit))


def _coalgebra(obj, where) -> CoalgebraData:
    basis = _basis(obj, where)
    d = len(basis)
    comult = _accumulate(d * d, d, _entries(obj, "comult", where, (d, d, d)),
                         lambda t: (t[1] * d + t[2], t[0]))
    counit = _dense(obj, "counit", where, d)
    return CoalgebraData(d, basis, comult, Mat.row_vector(counit))


def _hopf(obj, where) -> HopfData:
    a = _algebra(obj, where)
    c = _coalgebra(obj, where)
    d = a.dim
    S = _accumulate(d, d, _entries(obj, "antipode", where, (d, d)), lambda t: (t[1], t[0]))
    name = obj.get("name", "H")
    if not isinstance(name, str):
        raise ParseError("name must be a string", f"{where}.name")
    return HopfData(a, c, S, name)


def _raise_on_failure(report, what):
    if not report.passed:
        bad = report.failures[0]
        raise ValidationError(f"{what}: {bad.name} fails", bad)


def parse_bundle(text: str) -> InputBundle:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, f"line {e.lineno} column {e.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", "$")
    version = _field(doc, "format_version", "$")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported format_version {version!r}", "$.format_version")
    name = doc.get("name", "bundle")
    max_degree = doc.get("max_degree", 4)
    if isinstance(max_degree, bool) or not isinstance(max_degree, int) or max_degree < 1:
        raise ParseError("max_degree must be a positive integer", "$.max_degree")
    modes = [m for m in (COEXTENSION, EXTENSION) if m in doc]
    if len(modes) != 1:
        raise ParseError("exactly one of 'coextension' or 'extension' is required", "$")
    mode = modes[0]

    h = _hopf(_field(doc, "hopf", "$", dict), "$.hopf")
    _raise_on_failure(validate_hopf(h), "Hopf algebra")
    dh = h.dim
    body = _field(doc, mode, "$", dict)
    where = f"$.{mode}"
    if mode == COEXTENSION:
        c = _coalgebra(_field(body, "coalgebra", where, dict), f"{where}.coalgebra")
        _raise_on_failure(validate_coalgebra(c), "coalgebra")
        dc = c.dim
        amap = _accumulate(dc, dc * dh, _entries(body, "action", where, (dc, dh, dc)),
                           lambda t: (t[2], t[0] * dh + t[1]))
        act = ActionData(h, dc, RIGHT, amap)
        _raise_on_failure(validate_action(act), "action")
        _raise_on_failure(validate_module_coalgebra(c, act), "module coalgebra")
        inp = CoextensionInput(name, h, c, act)
        return InputBundle(name, h, mode, coextension=inp, max_degree=max_degree)
    a = _algebra(_field(body, "algebra", where, dict), f"{where}.algebra")
    _raise_on_failure(validate_algebra(a), "algebra")
    da = a.dim
    cmap = _accumulate(da * dh, da, _entries(body, "coaction", where, (da, da, dh)),
                       lambda t: (t[1] * dh + t[2], t[0]))
    rho = CoactionData(h.coalgebra, da, RIGHT, cmap, h)
    _raise_on_failure(validate_coaction(rho), "coaction")
    _raise_on_failure(validate_comodule_algebra(a, rho), "comodule algebra")
    inp = ExtensionInput(name, h, a, rho)
    return InputBundle(name, h, mode, extension=inp, max_degree=max_degree)


# ---------------------------------------------------------------------------
# emitting

def _val(v):
    return v if isinstance(v, int) else format_rational(v)


def _triples(m: Mat, index):
    """Entries of ``m`` as index lists (via ``index(row, col)``) plus the value, sorted."""
    return sorted([*index(r, c), _val(v)] for (r, c), v in m.entries.items())


def _algebra_doc(a: AlgebraData) -> dict:
    d = a.dim
    return {"basis": list(a.basis),
            "mult": _triples(a.mult, lambda r, c: (*divmod(c, d), r)),
            "unit": [_val(a.unit.col(0).get(i, 0)) for i in range(d)]}


def _coalgebra_doc(c: CoalgebraData) -> dict:
    d = c.dim
    counit = c.counit.to_dense()[0]
    return {"basis": list(c.basis),
            "comult": _triples(c.comult, lambda r, col: (col, *divmod(r, d))),
            "counit": [_val(x) for x in counit]}


def bundle_document(b: InputBundle) -> dict:
    h = b.hopf
    dh = h.dim
    hopf = {"name": h.name, **_algebra_doc(h.algebra), **_coalgebra_doc(h.coalgebra),
            "antipode": _triples(h.antipode, lambda r, c: (c, r))}
    doc = {"format_version": FORMAT_VERSION, "name": b.name, "max_degree": b.max_degree,
           "hopf": hopf}
    if b.mode == COEXTENSION:
        inp = b.coextension
        doc[COEXTENSION] = {"coalgebra": _coalgebra_doc(inp.coalg),
                            "action": _triples(inp.action.map, lambda r, c: (*divmod(c, dh), r))}
    else:
        inp = b.extension
        doc[EXTENSION] = {"algebra": _algebra_doc(inp.algebra),
                          "coaction": _triples(inp.rho.map, lambda r, c: (c, *divmod(r, dh)))}
    return doc


_FLAT_LIST = re.compile(r"\[\n\s*([^\[\]{}]*?)\n\s*\]")


def emit_bundle(b: InputBundle) -> str:
    """Canonical text: sorted keys, one sparse entry per line."""
    text = json.dumps(bundle_document(b), sort_keys=True, indent=1)
    text = _FLAT_LIST.sub(lambda m: "[" + re.sub(r",\n\s*", ", ", m.group(1)) + "]", text)
    return text + "\n"


def fixture_bundle(name: str, max_degree: int = 4) -> InputBundle:
    """A zoo fixture as a bundle; ``name`` is a key of the coextension or extension fixtures,
    or a bare Hopf algebra name meaning its regular coextension."""
    if name in COEXT_FIXTURES:
        inp = COEXT_FIXTURES[name]()
        return InputBundle(name, inp.hopf, COEXTENSION, coextension=inp, max_degree=max_degree)
    if name in EXT_FIXTURES:
        inp = EXT_FIXTURES[name]()
        return InputBundle(name, inp.hopf, EXTENSION, extension=inp, max_degree=max_degree)
    if f"{name}-coext" in COEXT_FIXTURES:
        return fixture_bundle(f"{name}-coext", max_degree)
    known = sorted(COEXT_FIXTURES) + sorted(EXT_FIXTURES)
    raise KeyError(f"unknown fixture {name!r}; known: {', '.join(known)}")
