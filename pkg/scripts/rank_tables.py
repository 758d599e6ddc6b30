"""Cyclic (co)homology ranks of every Galois fixture, Hopf side next to relative side.

    python scripts/rank_tables.py [N]
"""

import sys
import time

from hopfcyc.complexes_iso import verify_theorem_3_12
from hopfcyc.errors import NotGalois
from hopfcyc.galois_coext import from_input as coext
from hopfcyc.galois_ext import compare_homology_ext, from_input as ext
from hopfcyc.zoo import COEXT_FIXTURES, EXT_FIXTURES

# top degree per fixture keeps the largest spaces around a thousand dimensions
CAPS = {"kS3-coext": 2, "kS3-ext": 2, "kC4-coext": 3, "kC4-ext": 2, "H4-ext": 2,
        "kS3/C2-coext": 3, "kS3-sign-ext": 2}


def row(name, kind, rep, seconds):
    hc = lambda side: " ".join(str(rep.ranks[side][k]["cyclic"]) for k in sorted(rep.ranks[side], key=int))
    status = "ok" if rep.passed else f"{len(rep.failures)} failing"
    print(f"{name:<16} {kind:<11} {hc('hopf'):<12} {hc('relative'):<12} {status:<10} {seconds:6.2f}s")


def main(N=4):
    print(f"{'fixture':<16} {'kind':<11} {'Hopf HC':<12} {'relative HC':<12} {'checks':<10} time")
    for name, make in COEXT_FIXTURES.items():
        try:
            cx = coext(make())
        except NotGalois as e:
            print(f"{name:<16} cohomology  not Galois: {e}")
            continue
        t = time.perf_counter()
        rep = verify_theorem_3_12(cx, min(N, CAPS.get(name, N)))
        row(name, "cohomology", rep, time.perf_counter() - t)
    for name, make in EXT_FIXTURES.items():
        try:
            e = ext(make())
        except NotGalois as err:
            print(f"{name:<16} homology    not Galois: {err}")
            continue
        t = time.perf_counter()
        rep = compare_homology_ext(e, min(N - 1, CAPS.get(name, N)))
        row(name, "homology", rep, time.perf_counter() - t)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 4)
