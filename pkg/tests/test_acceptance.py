"""Acceptance criteria, one test each. Every check is exact (zero tolerance).

Each test records a one-line verdict; the lines are printed at the end of the
pytest run (see conftest.py) and also when this file is executed directly.
"""

import dataclasses
import json
import os
import subprocess
import sys
import time
from pathlib import Path

import pytest

import oracles
from hopfcyc.cli import emit_report, run
from hopfcyc.bundle import fixture_bundle
from hopfcyc.complexes_iso import coefficient_cocyclic_332, relative_cocyclic_module
from hopfcyc.cyclic_core import (check_cocyclic, check_cyclic, compare_cyclic, dualize_cocyclic,
                                 dualize_cyclic)
from hopfcyc.exact_linalg import Mat, invert
from hopfcyc.galois_coext import (from_input as coext, kappa_coext, perturb, sayd_CD,
                                  verify_lemma_3_1, verify_lemma_3_5)
from hopfcyc.galois_ext import (compare_homology_ext, from_input as ext, hopf_cyclic_module_19,
                                regular_inverse_formula, relative_cyclic_module_ext, sayd_A_B)
from hopfcyc.hopf_core import validate_hopf
from hopfcyc.rep_structures import CoactionData, SaydData, check_sayd
from hopfcyc.zoo import COEXT_FIXTURES, EXT_FIXTURES, hopf_zoo

ROOT = Path(__file__).resolve().parents[1]
VERDICTS: dict = {}


def record(n: int, title: str, ok: bool, seconds: float, limit: float, detail: str = ""):
    within = seconds < limit
    status = "PASS" if ok and within else "FAIL"
    line = f"criterion {n} {status}: {title} ({seconds:.2f}s, limit {limit:g}s)"
    if detail:
        line += f" {detail}"
    VERDICTS[n] = line
    assert ok, line
    assert within, line


def _flip_first(m: Mat) -> Mat:
    j = min(m._cols)
    i = min(m._cols[j])
    return m + Mat(m.rows, m.cols, {j: {i: -2 * m._cols[j][i]}})


def test_criterion_1_hopf_axioms():
    t = time.perf_counter()
    zoo = hopf_zoo()
    bad = [name for name, h in zoo.items() if not validate_hopf(h).passed]
    record(1, "Hopf axioms on every zoo entry", not bad, time.perf_counter() - t, 1,
           f"[{len(zoo)} algebras, failing: {bad or 'none'}]")


def test_criterion_2_galois_certification():
    t = time.perf_counter()
    problems = []
    for name in ["k-coext", "kC2-coext", "kC4-coext", "kS3-coext", "H4-coext"]:
        cx = coext(COEXT_FIXTURES[name]())
        if not (cx.beta_inv @ cx.beta).is_identity():
            problems.append(name)
    for name in ["kC2-ext", "H4-ext"]:
        e = ext(EXT_FIXTURES[name]())
        if regular_inverse_formula(e) != invert(e.beta):
            problems.append(name)
    record(2, "regular coextensions are Galois; closed-form inverse equals beta^-1",
           not problems, time.perf_counter() - t, 1, f"[failing: {problems or 'none'}]")


def test_criterion_3_identity_suites():
    t = time.perf_counter()
    problems = []
    for name in ["kC2-coext", "H4-coext"]:
        cx = coext(COEXT_FIXTURES[name]())
        kd = kappa_coext(cx)
        if not verify_lemma_3_1(cx).passed or not verify_lemma_3_5(cx, kd).passed:
            problems.append(f"{name} genuine")
        m1 = verify_lemma_3_1(cx, beta_inv=_flip_first(cx.beta_inv))
        m5 = verify_lemma_3_5(cx, dataclasses.replace(kd, kappa_tilde=_flip_first(kd.kappa_tilde)))
        for label, r in (("3.1", m1), ("3.5", m5)):
            f = r.failures
            if not f or not f[0].witness or "column" not in f[0].witness:
                problems.append(f"{name} mutant {label} not localized")
    record(3, "beta^-1 identities (i)-(vii) and kappa identities (i)-(iv); mutants caught with witness",
           not problems, time.perf_counter() - t, 5, f"[{problems or 'ok'}]")


def test_criterion_4_sayd():
    t = time.perf_counter()
    problems = []
    names = [n for n in COEXT_FIXTURES if n != "kC2-trivial-coext"]
    for name in names:
        s = sayd_CD(coext(COEXT_FIXTURES[name]()))
        if not check_sayd(s).passed:
            problems.append(name)
        co = s.coaction
        broken = CoactionData(co.coalg, co.space_dim, co.side, perturb(co.map, 0, 0), co.hopf)
        if check_sayd(SaydData(s.hopf, s.space_dim, s.action, broken, s.chirality)).passed:
            problems.append(f"{name} mutant undetected")
    record(4, "C^D is a stable anti-Yetter-Drinfeld module; broken coaction detected",
           not problems, time.perf_counter() - t, 5,
           f"[{len(names)} fixtures, failing: {problems or 'none'}]")


def test_criterion_5_cyclic_axiom_suites():
    t = time.perf_counter()
    results = {}
    for h, N in (("kC2", 4), ("H4", 3)):
        cx = coext(COEXT_FIXTURES[f"{h}-coext"]())
        e = ext(EXT_FIXTURES[f"{h}-ext"]())
        results[f"{h} Hopf cyclic"] = check_cyclic(hopf_cyclic_module_19(e.hopf, sayd_A_B(e), N))
        results[f"{h} Hopf cocyclic"] = check_cocyclic(coefficient_cocyclic_332(cx, N))
        results[f"{h} relative cyclic"] = check_cyclic(relative_cyclic_module_ext(e, N)[0])
        results[f"{h} relative cocyclic"] = check_cocyclic(relative_cocyclic_module(cx, N).cocyclic)
    bad = [k for k, r in results.items() if not r.passed]
    total = sum(len(r.checks) for r in results.values())
    record(5, "all four (co)cyclic modules satisfy every relation (kC2 N=4, H4 N=3)",
           not bad, time.perf_counter() - t, 60, f"[{total} relations, failing: {bad or 'none'}]")


def test_criterion_6_duality_round_trip():
    t = time.perf_counter()
    c, _ = relative_cyclic_module_ext(ext(EXT_FIXTURES["kC2-ext"]()), 4)
    dual = dualize_cyclic(c)
    back = dualize_cocyclic(dual)
    r = compare_cyclic(c, back, c.max_degree - 2)
    ok = r.passed and check_cocyclic(dual).passed and check_cyclic(back).passed
    record(6, "cyclic duality round trip on the kC2 relative cyclic module (degrees <= N-2)",
           ok, time.perf_counter() - t, 10, f"[{len(r.checks)} matrix comparisons]")


def _thm312(fixture, N):
    return run("verify-thm312", fixture_bundle(fixture), N)


def test_criterion_7_cohomology_comparison():
    t = time.perf_counter()
    problems = []
    summary = []
    for fixture, N in (("kC2-coext", 4), ("H4-coext", 3)):
        rep = _thm312(fixture, N).report
        if not rep.passed:
            problems.append(f"{fixture}: {[c.name for c in rep.failures][:3]}")
        hopf, rel = rep.ranks["hopf"], rep.ranks["relative"]
        if hopf != rel or sorted(hopf, key=int) != [str(n) for n in range(N)]:
            problems.append(f"{fixture}: rank tables differ or wrong degrees")
        summary.append(f"{fixture} HC={[hopf[str(n)]['cyclic'] for n in range(N)]}")
    # oracle cross-checks on the relative side
    triv = relative_cocyclic_module(coext(COEXT_FIXTURES["k-coext"]()), 3).cocyclic
    if oracles.connes_cohomology(triv)[1] != [1, 0, 1]:
        problems.append("trivial bundle oracle")
    c2 = relative_cocyclic_module(coext(COEXT_FIXTURES["kC2-coext"]()), 2).cocyclic
    if oracles.connes_cohomology(c2)[1][0] != 2:
        problems.append("kC2 HC^0 oracle")
    record(7, "relative and Hopf cyclic cohomology agree end to end (kC2 N=4, H4 N=3) with oracle rank cross-checks",
           not problems, time.perf_counter() - t, 120, f"[{'; '.join(summary)}; {problems or 'ok'}]")


def test_criterion_8_extension_side_homology():
    t = time.perf_counter()
    problems, modes = [], []
    for fixture, N in (("kC2-ext", 3), ("H4-ext", 2)):
        r = compare_homology_ext(ext(EXT_FIXTURES[fixture]()), N)
        mode = r.ranks["transfer"]
        modes.append(f"{fixture}: {mode}")
        if mode == "rank-only" and not r.notes:
            problems.append(f"{fixture}: silent downgrade")
        if r.ranks["hopf"] != r.ranks["relative"] or not r.passed:
            problems.append(fixture)
    record(8, "HC_*(H, A_B) and relative cyclic homology agree (kC2 N=3, H4 N=2)",
           not problems, time.perf_counter() - t, 60, f"[{'; '.join(modes)}; {problems or 'ok'}]")


def test_criterion_9_determinism():
    t = time.perf_counter()
    cmd = [sys.executable, "-m", "hopfcyc", "verify-thm312", "--fixture", "kC2-coext",
           "--max-degree", "4", "--format", "machine"]
    env = dict(os.environ, PYTHONPATH=str(ROOT / "src") + os.pathsep + os.environ.get("PYTHONPATH", ""))
    outs = [subprocess.run(cmd, capture_output=True, env=env, check=False).stdout for _ in range(2)]
    inproc = emit_report(_thm312("kC2-coext", 4), "machine").encode()
    ok = outs[0] == outs[1] == inproc and json.loads(outs[0])["passed"]
    record(9, "machine reports byte-identical across runs", ok, time.perf_counter() - t, 60,
           f"[{len(outs[0])} bytes]")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
