#!/usr/bin/env python3
"""Regenerate det3x3.txt, the seeded 3x3 determinant stress fixture.

Each matrix entry is a dense degree-5 polynomial in x whose coefficients
are small random polynomials in six parameters; the fixture text is the
cofactor expansion of the determinant, so collecting it in x yields a
polynomial of degree 15 with parameter-only coefficients.
"""

from pathlib import Path
from random import Random

SEED = 74207
PARAMS = ("p1", "p2", "p3", "p4", "p5", "p6")
X_DEGREE = 5


def coeff_poly(rng: Random) -> str:
    terms = []
    for _ in range(rng.randint(1, 3)):
        c = rng.choice([n for n in range(-9, 10) if n])
        parts = [str(abs(c))]
        for name in rng.sample(PARAMS, rng.randint(0, 2)):
            e = rng.randint(1, 2)
            parts.append(name if e == 1 else f"{name}^{e}")
        magnitude = "*".join(parts)
        terms.append(("-" if c < 0 else ("+" if terms else "")) + magnitude)
    return "".join(terms)


def entry(rng: Random) -> str:
    pieces = []
    for k in range(X_DEGREE, -1, -1):
        coeff = f"({coeff_poly(rng)})"
        if k == 0:
            pieces.append(f"+{coeff}")
        elif k == 1:
            pieces.append(("+" if pieces else "") + f"{coeff}*x")
        else:
            pieces.append(("+" if pieces else "") + f"{coeff}*x^{k}")
    return "".join(pieces)


def main() -> None:
    rng = Random(SEED)
    m = [[f"({entry(rng)})" for _ in range(3)] for _ in range(3)]
    det = (
        f"{m[0][0]}*({m[1][1]}*{m[2][2]}-{m[1][2]}*{m[2][1]})"
        f"-{m[0][1]}*({m[1][0]}*{m[2][2]}-{m[1][2]}*{m[2][0]})"
        f"+{m[0][2]}*({m[1][0]}*{m[2][1]}-{m[1][1]}*{m[2][0]})"
    )
    out = Path(__file__).with_name("det3x3.txt")
    out.write_text(det + "\n", encoding="utf-8")
    print(f"wrote {out} ({len(det)} bytes)")


if __name__ == "__main__":
    main()
