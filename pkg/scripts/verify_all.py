"""Run every CLI command on every fixture it applies to and write machine reports.

    python scripts/verify_all.py [OUT_DIR] [N]

Prints one line per run; exits non-zero if any run has a failing check, which
is expected for the deliberately non-Galois fixtures and for H4/kC2-coext.
"""

import pathlib
import sys

from hopfcyc.bundle import COEXTENSION, fixture_bundle
from hopfcyc.cli import emit_report, run
from hopfcyc.zoo import COEXT_FIXTURES, EXT_FIXTURES

COEXT_ONLY = {"coext-verify", "verify-thm312"}
EXT_ONLY = {"ext-verify"}
COMMANDS = ["check", "coext-verify", "ext-verify", "cohomology", "verify-thm312", "dualize-roundtrip"]
LARGE = {"kS3-coext", "kS3-ext", "kC4-ext", "kS3-sign-ext", "H4-ext"}


def main(out_dir="reports", N=3):
    out = pathlib.Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    failures = 0
    for name in list(COEXT_FIXTURES) + list(EXT_FIXTURES):
        b = fixture_bundle(name)
        for cmd in COMMANDS:
            if (cmd in COEXT_ONLY and b.mode != COEXTENSION) or (cmd in EXT_ONLY and b.mode == COEXTENSION):
                continue
            degree = min(N, 2) if name in LARGE else N
            rr = run(cmd, b, degree)
            failed = len(rr.report.failures)
            failures += bool(failed)
            stem = f"{name.replace('/', '_over_')}.{cmd}"
            (out / f"{stem}.json").write_text(emit_report(rr, "machine"))
            print(f"{'PASS' if not failed else 'FAIL'}  {name:<18} {cmd:<18} N={degree} "
                  f"{len(rr.report.checks) - failed}/{len(rr.report.checks)}")
    return 1 if failures else 0


if __name__ == "__main__":
    args = sys.argv[1:]
    sys.exit(main(args[0] if args else "reports", int(args[1]) if len(args) > 1 else 3))
