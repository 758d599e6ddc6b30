"""Command line front end.

    hopfcyc COMMAND [BUNDLE] [--fixture NAME] [--max-degree N] [--format human|machine]

Exit status is 0 when every check passes, 1 when some check fails and 2 on
unusable input (parse or validation errors, unknown fixture or command).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import __version__
from .bundle import COEXTENSION, EXTENSION, InputBundle, fixture_bundle, parse_bundle
from .complexes_iso import relative_cocyclic_module, verify_theorem_3_12
from .cyclic_core import (check_cocyclic, check_cyclic, compare_cocyclic, compare_cyclic,
                          cyclic_cohomology_ranks, cyclic_homology_ranks, dualize_cocyclic,
                          dualize_cyclic, hopf_cocyclic_110)
from .errors import HopfCycError, NotGalois, NotWellDefined, UnsupportedCommand
from .exact_linalg import format_rational
from .galois_coext import build_coextension, kappa_coext, sayd_CD, verify_coextension
from .galois_ext import (build_extension, compare_homology_ext, hopf_cyclic_module_19,
                         relative_cyclic_module_ext, sayd_A_B, verify_extension)
from .hopf_core import antipode_anti_properties, validate_hopf
from .report import Report
from .rep_structures import (check_sayd, validate_action, validate_coaction,
                             validate_comodule_algebra, validate_module_coalgebra)

REPORT_FORMAT_VERSION = 1
COMMANDS = ("check", "coext-verify", "ext-verify", "cohomology", "verify-thm312",
            "dualize-roundtrip")


@dataclass
class RunReport:
    command: str
    bundle_name: str
    digest: str
    max_degree: int
    report: Report
    timings: dict = field(default_factory=dict)
    tool_version: str = __version__

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> dict:
        """Machine document; timings are left out so that reruns are byte-identical."""
        return {"format_version": REPORT_FORMAT_VERSION, "tool": "hopfcyc",
                "tool_version": self.tool_version, "command": self.command,
                "input": {"name": self.bundle_name, "sha256": self.digest},
                "max_degree": self.max_degree, "title": self.report.title,
                "passed": self.passed, "checks": [c.to_dict() for c in self.report.checks],
                "ranks": self.report.ranks, "notes": list(self.report.notes)}


# ---------------------------------------------------------------------------
# pipelines

def _need(b: InputBundle, mode: str, command: str):
    if b.mode != mode:
        raise UnsupportedCommand(f"{command} needs {mode} input, got {b.mode} input")
    return b.payload


def _coextension_or_row(b: InputBundle, r: Report):
    inp = b.coextension
    try:
        return build_coextension(inp.hopf, inp.coalg, inp.action, b.name)
    except NotGalois as e:
        r.require("canonical map is bijective", False, str(e),
                  {"source_dim": e.source_dim, "target_dim": e.target_dim, "rank": e.rank})
    except HopfCycError as e:
        r.require("coextension data is well formed", False, str(e), getattr(e, "witness", None))
    return None


def _extension_or_row(b: InputBundle, r: Report):
    inp = b.extension
    try:
        return build_extension(inp.hopf, inp.algebra, inp.rho, b.name)
    except NotGalois as e:
        r.require("canonical map is bijective", False, str(e),
                  {"source_dim": e.source_dim, "target_dim": e.target_dim, "rank": e.rank})
    except HopfCycError as e:
        r.require("extension data is well formed", False, str(e), getattr(e, "witness", None))
    return None


def run_check(b: InputBundle, N: int) -> Report:
    r = Report(f"structure axioms ({b.name})")
    r.extend(validate_hopf(b.hopf), "Hopf: ")
    r.extend(antipode_anti_properties(b.hopf), "antipode: ")
    if b.mode == COEXTENSION:
        inp = b.coextension
        r.extend(validate_action(inp.action), "action: ")
        r.extend(validate_module_coalgebra(inp.coalg, inp.action), "module coalgebra: ")
    else:
        inp = b.extension
        r.extend(validate_coaction(inp.rho), "coaction: ")
        r.extend(validate_comodule_algebra(inp.algebra, inp.rho), "comodule algebra: ")
    return r


def run_coext_verify(b: InputBundle, N: int) -> Report:
    _need(b, COEXTENSION, "coext-verify")
    r = Report(f"Galois coextension ({b.name})")
    cx = _coextension_or_row(b, r)
    if cx is not None:
        r.extend(verify_coextension(cx))
    return r


def run_ext_verify(b: InputBundle, N: int) -> Report:
    _need(b, EXTENSION, "ext-verify")
    r = Report(f"Galois extension ({b.name}, N={N})")
    ext = _extension_or_row(b, r)
    if ext is not None:
        r.extend(verify_extension(ext))
        r.extend(compare_homology_ext(ext, N))
    return r


def run_cohomology(b: InputBundle, N: int) -> Report:
    if b.mode == COEXTENSION:
        r = Report(f"Hopf cyclic cohomology ({b.name}, N={N})")
        cx = _coextension_or_row(b, r)
        if cx is None:
            return r
        s = sayd_CD(cx, kappa_coext(cx))
        r.extend(check_sayd(s), "C^D SAYD: ")
        c = hopf_cocyclic_110(cx.hopf, s, N)
        r.extend(check_cocyclic(c), "cocyclic module: ")
        rt = cyclic_cohomology_ranks(c)
    else:
        r = Report(f"Hopf cyclic homology ({b.name}, N={N})")
        ext = _extension_or_row(b, r)
        if ext is None:
            return r
        s = sayd_A_B(ext)
        r.extend(check_sayd(s), "A_B SAYD: ")
        c = hopf_cyclic_module_19(ext.hopf, s, N)
        r.extend(check_cyclic(c), "cyclic module: ")
        rt = cyclic_homology_ranks(c)
    r.require("differentials square to zero", rt.b_squared_zero and rt.total_squared_zero)
    r.ranks["hopf"] = rt.to_dict()
    return r


def run_verify_thm312(b: InputBundle, N: int) -> Report:
    _need(b, COEXTENSION, "verify-thm312")
    r = Report(f"relative versus Hopf cyclic cohomology ({b.name}, N={N})")
    cx = _coextension_or_row(b, r)
    if cx is not None:
        r.extend(verify_theorem_3_12(cx, N))
    return r


def run_dualize_roundtrip(b: InputBundle, N: int) -> Report:
    if N < 2:
        raise UnsupportedCommand("dualize-roundtrip needs --max-degree >= 2")
    r = Report(f"cyclic duality round trip ({b.name}, N={N})")
    if b.mode == COEXTENSION:
        cx = _coextension_or_row(b, r)
        if cx is None:
            return r
        c = relative_cocyclic_module(cx, N).cocyclic
        mid = dualize_cocyclic(c)
        r.extend(check_cyclic(mid), "dual cyclic module: ")
        back = dualize_cyclic(mid)
        r.extend(check_cocyclic(back), "double dual: ")
        r.extend(compare_cocyclic(c, back, N - 2), "restored: ")
    else:
        ext = _extension_or_row(b, r)
        if ext is None:
            return r
        c, _ = relative_cyclic_module_ext(ext, N)
        mid = dualize_cyclic(c)
        r.extend(check_cocyclic(mid), "dual cocyclic module: ")
        back = dualize_cocyclic(mid)
        r.extend(check_cyclic(back), "double dual: ")
        r.extend(compare_cyclic(c, back, N - 2), "restored: ")
    return r


PIPELINES = {
    "check": run_check,
    "coext-verify": run_coext_verify,
    "ext-verify": run_ext_verify,
    "cohomology": run_cohomology,
    "verify-thm312": run_verify_thm312,
    "dualize-roundtrip": run_dualize_roundtrip,
}


def run(command: str, bundle: InputBundle, max_degree: int | None = None) -> RunReport:
    if command not in PIPELINES:
        raise UnsupportedCommand(f"unknown command {command!r}")
    N = max_degree if max_degree is not None else bundle.max_degree
    t0 = time.perf_counter()
    try:
        report = PIPELINES[command](bundle, N)
    except NotWellDefined as e:
        report = Report(f"{command} ({bundle.name})")
        report.require("constructions are well defined", False, str(e), e.witness)
    return RunReport(command, bundle.name, bundle.digest(), N, report,
                     {"total_seconds": time.perf_counter() - t0})


# ---------------------------------------------------------------------------
# output

def _json_default(x):
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def emit_report(rr: RunReport, fmt: str = "human") -> str:
    if fmt == "machine":
        return json.dumps(rr.to_dict(), sort_keys=True, indent=1, default=_json_default) + "\n"
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}")
    rep = rr.report
    lines = [f"{rep.title}", f"command {rr.command}, input {rr.bundle_name} "
             f"(sha256 {rr.digest[:12]}), max degree {rr.max_degree}", ""]
    width = max((len(c.name) for c in rep.checks), default=0)
    for c in rep.checks:
        tag = "PASS" if c.passed else "FAIL"
        extra = c.detail
        if not c.passed and c.witness is not None:
            w = json.dumps(c.witness, sort_keys=True, default=_json_default)
            extra = f"{extra} witness={w}".strip()
        lines.append(f"  {tag}  {c.name.ljust(width)}  {extra}".rstrip())
    for key in sorted(rep.ranks):
        val = rep.ranks[key]
        if isinstance(val, dict) and all(isinstance(v, dict) for v in val.values()):
            lines.append(f"ranks [{key}]")
            lines.append("  degree  HH  HC")
            for n in sorted(val, key=int):
                lines.append(f"  {n:>6}  {val[n]['hochschild']:>2}  {val[n]['cyclic']:>2}")
        else:
            lines.append(f"{key}: {val}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    failed = len(rep.failures)
    lines.append("")
    lines.append(f"{len(rep.checks) - failed}/{len(rep.checks)} checks passed"
                 f" in {rr.timings.get('total_seconds', 0):.2f}s")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfcyc",
                                description="Exact verification of Hopf Galois (co)extension "
                                            "constructions and their cyclic (co)homology.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("bundle", nargs="?", help="path to a structure-constants bundle (JSON)")
    p.add_argument("--fixture", help="use a built-in fixture instead of a bundle file")
    p.add_argument("--max-degree", type=int, default=None,
                   help="degree bound N (default: the bundle's max_degree, else 4)")
    p.add_argument("--format", choices=("human", "machine"), default="human")
    p.add_argument("--output", "-o", help="write the report here instead of stdout")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if (args.bundle is None) == (args.fixture is None):
        print("error: give exactly one of a bundle path or --fixture", file=sys.stderr)
        return 2
    if args.max_degree is not None and args.max_degree < 1:
        print("error: --max-degree must be positive", file=sys.stderr)
        return 2
    try:
        if args.fixture:
            bundle = fixture_bundle(args.fixture)
        else:
            with open(args.bundle, encoding="utf-8") as fh:
                bundle = parse_bundle(fh.read())
        rr = run(args.command, bundle, args.max_degree)
    except (HopfCycError, KeyError, OSError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    text = emit_report(rr, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if rr.passed else 1


if __name__ == "__main__":
    sys.exit(main())
