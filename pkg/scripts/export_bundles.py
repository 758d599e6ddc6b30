"""Write every zoo fixture as a structure-constants bundle into src/hopfcyc/data."""

import pathlib
import sys

from hopfcyc.bundle import emit_bundle, fixture_bundle, parse_bundle
from hopfcyc.zoo import COEXT_FIXTURES, EXT_FIXTURES


def file_name(fixture: str) -> str:
    return fixture.replace("/", "_over_") + ".json"


def main(out_dir=None):
    out = pathlib.Path(out_dir or pathlib.Path(__file__).resolve().parents[1] / "src" / "hopfcyc" / "data")
    out.mkdir(parents=True, exist_ok=True)
    for name in list(COEXT_FIXTURES) + list(EXT_FIXTURES):
        text = emit_bundle(fixture_bundle(name))
        # refuse to write anything that does not round-trip
        if emit_bundle(parse_bundle(text)) != text:
            raise SystemExit(f"{name}: bundle does not round-trip")
        (out / file_name(name)).write_text(text)
        print(f"wrote {file_name(name)}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else None)
