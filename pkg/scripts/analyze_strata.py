"""Sweep a catalog of cyclic modules: strata table, CRT dimensions and the Weyl chain.

Writes outputs/strata_profile.csv and results/strata_report.md.
"""
import os
import sys

import pandas as pd
from tqdm import tqdm

from errors import AlgebraError
from harish_chandra import assassin_bound, equiv_reachable, equiv_u, weyl_datum
from ideal_engine import Ideal
from poly_core import poly_ring
from run_session import format_chain, format_ideal, format_prime
from spectrum import make_prime
from torsion import PrimaryComponent, crt_decompose, make_module, strata_profile

OUTPUT_DIR = "outputs"
RESULTS_DIR = "results"


def linear_factor_module(roots, multiplicities=None):
    """K[t]/∏(t - c)^m with its declared decomposition into (t - c)^m."""
    ring = poly_ring(("t",))
    t = ring.gen("t")
    multiplicities = multiplicities or [1] * len(roots)
    product, parts = ring.one, []
    for c, m in zip(roots, multiplicities):
        product *= (t - c) ** m
        prime = make_prime(Ideal(ring, [t - c]), "linear-maximal")
        parts.append(PrimaryComponent(Ideal(ring, [(t - c) ** m]), prime))
    return make_module(Ideal(ring, [product]), parts)


def build_catalog():
    """(label, module) pairs covering the pure, mixed and split cases."""
    xy = poly_ring(("x", "y"))
    xyz = poly_ring(("x", "y", "z"))
    catalog = [
        ("x^2, x*y", make_module(Ideal(xy, ["x^2", "x*y"]))),
        ("x", make_module(Ideal(xy, ["x"]))),
        ("x*y", make_module(Ideal(xy, ["x*y"]))),
        ("x^2, y^3", make_module(Ideal(xy, ["x^2", "y^3"]))),
        ("x*y, x*z", make_module(Ideal(xyz, ["x*y", "x*z"]))),
        ("x^2, x*y, y*z^2", make_module(Ideal(xyz, ["x^2", "x*y", "y*z^2"]))),
        ("(t-1)(t-2)", linear_factor_module([1, 2])),
        ("(t-1)^2(t-2)", linear_factor_module([1, 2], [2, 1])),
        ("(t-1)(t-2)(t-3)", linear_factor_module([1, 2, 3])),
    ]
    return catalog


def profile_table(catalog):
    """One row per module: ring, stratum, t_i flags and CRT dimensions."""
    rows = []
    largest = max(module.ring.dimension for _, module in catalog)
    columns = (["module", "ring", "stratum"] + [f"t_{i}" for i in range(largest + 1)]
               + ["crt_dims"])
    for label, module in tqdm(catalog, desc="strata", file=sys.stderr):
        profile = strata_profile(module)
        row = {
            "module": label,
            "ring": str(module.ring),
            "stratum": "mixed" if profile.is_mixed else profile.pure_stratum,
        }
        for stratum in profile.rows:
            row[f"t_{stratum.index}"] = ("M" if stratum.whole else
                                         "nonzero" if stratum.nonzero else "0")
        try:
            split = crt_decompose(module)
            row["crt_dims"] = ("" if split.dimensions is None else
                               " ".join(str(d) for d in split.dimensions))
        except AlgebraError as e:
            row["crt_dims"] = f"n/a ({e.__class__.__name__})"
        rows.append(row)
    return pd.DataFrame(rows, columns=columns)


def weyl_chain_lines():
    """The two-step chain from <1 + (t1 - 2)^2> to <t1 - 1> in the second Weyl algebra."""
    datum = weyl_datum(2)
    ring = datum.ring
    f = make_prime(Ideal(ring, ["1 + (t1 - 2)^2"]), "principal-irreducible")
    t2 = make_prime(Ideal(ring, ["t2"]), "principal-irreducible")
    p = make_prime(Ideal(ring, ["t1 - 1"]), "principal-irreducible")

    lines = []
    for u in datum.generators:
        lines.append(f"- single step {format_prime(f)} to {format_prime(p)} via {u.name}: "
                     f"{str(equiv_u(f, p, u)).lower()}")
    for q, witness in equiv_reachable(f, [t2, p], datum):
        lines.append(f"- chain to {format_prime(q)}: {format_chain(witness, datum)}")
    admitted = assassin_bound(p, [t2, f, p], datum)
    lines.append("- admitted toward " + format_prime(p) + ": "
                 + ", ".join(format_prime(q) for q in admitted))
    return lines


def write_report(table, chain_lines, path):
    """Write the markdown report with the strata table and the chain lines."""
    with open(path, "w") as f:
        f.write("# Coheight Strata Report\n\n")
        f.write("## Strata profiles\n\n")
        f.write(f"Modules analyzed: {len(table)}\n")
        pure = table[table["stratum"] != "mixed"]
        f.write(f"Pure strata: {len(pure)}, mixed: {len(table) - len(pure)}\n\n")
        columns = list(table.columns)
        f.write("| " + " | ".join(columns) + " |\n")
        f.write("|" + "---|" * len(columns) + "\n")
        for _, row in table.iterrows():
            f.write("| " + " | ".join("" if pd.isna(row[c]) else str(row[c]) for c in columns) + " |\n")
        f.write("\n## Weyl chain (n = 2)\n\n")
        for line in chain_lines:
            f.write(line + "\n")
        f.write("\nSee outputs/strata_profile.csv for the table in CSV form.\n")


def main():
    """Build the catalog, save the CSV table and the markdown report."""
    try:
        os.makedirs(OUTPUT_DIR, exist_ok=True)
        os.makedirs(RESULTS_DIR, exist_ok=True)
        table = profile_table(build_catalog())
        csv_path = os.path.join(OUTPUT_DIR, "strata_profile.csv")
        table.to_csv(csv_path, index=False)
        report_path = os.path.join(RESULTS_DIR, "strata_report.md")
        write_report(table, weyl_chain_lines(), report_path)
        print("Analysis complete! Generated files:")
        print(f"- {csv_path}")
        print(f"- {report_path}")
    except AlgebraError as e:
        print(f"Error during analysis: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
