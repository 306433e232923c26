"""Generate the Riemann-Siegel remainder polynomials C_0..C_{J-1}.

Each C_j(p) is a combination of derivatives of
Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), taken from

    C_j = sum_k d[j][k] * Psi^(3j - 4k)(p) / pi^(2j - 2k)

with d[0][0] = 1 and

    d[j+1][k] = -d[j][k] / (32 r) - (r + 1) / 2 * d[j][k-1],   r = 3(j+1) - 4k.

For j <= 4 this reproduces the tabulated coefficients in Edwards,
"Riemann's Zeta Function", section 7.6 (and Gabcke's thesis). The output is a
Taylor expansion in z = p - 1/2, written to src/zetamoments/_rs_coeffs.py.

Run:  python tools/gen_rs_coeffs.py
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import mpmath as mp

NTERMS = 10
DEGREE = 80
DROP_BELOW = 1e-19  # |c_i| * 0.5**i below this is dropped (|z| <= 1/2)


def recurrence(nterms: int) -> list[dict[int, Fraction]]:
    d = [{0: Fraction(1)}]
    for j in range(nterms - 1):
        row = {}
        for k in range((3 * (j + 1)) // 4 + 1):
            r = 3 * (j + 1) - 4 * k
            v = Fraction(0)
            if k in d[j]:
                v -= d[j][k] / (32 * r)
            if k - 1 in d[j]:
                v -= Fraction(r + 1, 2) * d[j][k - 1]
            row[k] = v
        d.append(row)
    return d


def main() -> None:
    mp.mp.dps = 60
    psi = lambda z: mp.cos(2 * mp.pi * (z**2 - mp.mpf(5) / 16)) / (-mp.cos(2 * mp.pi * z))
    taylor = mp.taylor(psi, 0, DEGREE + 3 * NTERMS)

    def derivative(order: int) -> list:
        return [taylor[i + order] * mp.factorial(i + order) / mp.factorial(i)
                for i in range(DEGREE + 1)]

    polys = []
    for j, row in enumerate(recurrence(NTERMS)):
        acc = [mp.mpf(0)] * (DEGREE + 1)
        for k, w in row.items():
            scale = mp.mpf(w.numerator) / w.denominator / mp.pi ** (2 * j - 2 * k)
            for i, v in enumerate(derivative(3 * j - 4 * k)):
                acc[i] += scale * v
        coeffs = [float(v) for v in acc]
        while coeffs and abs(coeffs[-1]) * 0.5 ** (len(coeffs) - 1) < DROP_BELOW:
            coeffs.pop()
        polys.append(coeffs)

    out = Path(__file__).resolve().parents[1] / "src" / "zetamoments" / "_rs_coeffs.py"
    lines = [
        "# Generated by tools/gen_rs_coeffs.py; do not edit.",
        "# RS_COEFFS[j][i] is the coefficient of z**i in C_j, z = p - 1/2.",
        "",
        "RS_COEFFS = (",
    ]
    for coeffs in polys:
        lines.append("    (")
        lines.extend(f"        {c!r}," for c in coeffs)
        lines.append("    ),")
    lines.append(")")
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} ({NTERMS} terms, degrees {[len(p) - 1 for p in polys]})")


if __name__ == "__main__":
    main()
