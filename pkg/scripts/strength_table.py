"""Strength, Jacobian lower bound and singular codimension for the corpus files."""

import argparse
from pathlib import Path

from strengthlab.differential import nonsingular_codim
from strengthlab.errors import StrengthLabError
from strengthlab.io import parse_ideal_file
from strengthlab.strength import strength, strength_lower_bound_jacobian

ROOT = Path(__file__).resolve().parent.parent


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("files", nargs="*", type=Path)
    ap.add_argument("--kmax", type=int, default=2)
    args = ap.parse_args()
    files = args.files or sorted((ROOT / "corpus").glob("*.ideal"))
    for path in files:
        I = parse_ideal_file(path)
        try:
            sc = nonsingular_codim(I)
        except StrengthLabError as e:
            sc = type(e).__name__
        print(f"{path.name}  [{I.ring.field.spec()}, n={I.ring.nvars}]  sing_codim={sc}")
        for g in I.generators:
            if g.degree() < 2:
                print(f"    {g}: degree {g.degree()}, skipped")
                continue
            try:
                cert = strength(g, args.kmax)
                bracket = f"{cert.lower}..{cert.upper}" if not cert.exact else str(cert.value)
            except StrengthLabError as e:
                bracket = type(e).__name__
            jb = strength_lower_bound_jacobian(g)
            print(f"    {g}: strength {bracket}, jacobian bound {jb}")


if __name__ == "__main__":
    main()
