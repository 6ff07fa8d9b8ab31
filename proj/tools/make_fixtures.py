#!/usr/bin/env python3
"""Write offline class records for the given labels (or the built-in list)."""
import json
import pathlib
import sys

LABELS = """1.19.i 1.2.ab 1.2.ac 1.4.ae 2.2.a_a 2.2.a_ae 2.2.a_d 2.2.ab_a 2.2.ac_c 2.2.ac_d
2.2.ac_e 2.2.ad_f 2.2.ad_g 2.3.ad_f 2.3.ad_i 2.4.a_ai 2.4.ac_e 2.4.ag_q 2.4.ah_u 3.19.a_j_acm
3.2.a_a_ac 3.2.a_a_ad 3.2.ab_a_a 3.2.ab_ab_c 3.2.ac_a_d 3.2.ac_b_a 3.2.ac_c_ac 3.2.ad_f_ah
3.2.ad_g_aj 3.2.ae_j_ap 3.3.a_a_aj 3.3.ad_j_ap 3.4.ab_a_ae 3.4.ab_c_a 3.4.ac_ab_g 3.7.a_a_abj
3.7.ak_bw_afv""".split()


def decode(code):
    neg = len(code) > 1 and code[0] == "a"
    v = 0
    for ch in code[1:] if neg else code:
        v = 26 * v + ord(ch) - ord("a")
    return -v if neg else v


def coefficients(label):
    g, q, codes = label.split(".")
    g, q = int(g), int(q)
    a = [1] + [decode(c) for c in codes.split("_")]
    full = a[:] + [q ** (j - g) * a[2 * g - j] for j in range(g + 1, 2 * g + 1)]
    return g, q, [str(c) for c in reversed(full)]


def main():
    root = pathlib.Path(__file__).resolve().parent.parent / "fixtures"
    for label in sys.argv[1:] or LABELS:
        g, q, coeffs = coefficients(label)
        rec = {"coefficients": coeffs, "label": label, "metadata": {}, "source": "fixture"}
        path = root / f"{g}.{q}" / f"{label}.txt"
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(rec, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
