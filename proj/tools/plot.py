#!/usr/bin/env python3
# Copyright 2026 The dyncool Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Quick-look plots for dyncool output directories.

    python3 tools/plot.py out/temperature out/work ...  # writes <dir>/plot.png
"""

import argparse
import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd


def by_group(ax, df, x, y, group, **kw):
    for key, part in df.groupby(group):
        ax.plot(part[x], part[y], label=f"{group}={key}", **kw)


def population(df, ax):
    by_group(ax, df, "x", "p1_prime", "N")
    ax.set(xlabel="initial excited population x", ylabel="final target population")


def temperature(df, ax):
    by_group(ax, df, "T_mK", "Tprime_mK", "N")
    ax.plot(df["T_mK"], df["T_mK"], "k:", lw=0.8)
    ax.set(xscale="log", yscale="log", xlabel="T [mK]", ylabel="T' [mK]")


def work(df, ax):
    by_group(ax, df, "x", "W_per_qubit_hw", "N")
    limit = df.drop_duplicates("x")
    ax.plot(limit["x"], limit["w_limit_hw"], "k--", label="large-N limit")
    ax.set(xlabel="x", ylabel="work per qubit [hbar omega]")


def work_temperature(df, ax):
    ax.plot(df["kT_over_hw"], df["w_limit_hw"], label="large-N limit")
    marks = df[df["marker"].astype(str).str.lower() == "true"]
    ax.plot(marks["kT_over_hw"], marks["w_limit_hw"], "o", label="marker")
    ax.set(xscale="log", xlabel="kT / hbar omega", ylabel="work per qubit [hbar omega]")


def noise(df, ax):
    for n, part in df.groupby("N"):
        # population, not temperature: T diverges as p1 -> 1/2
        ax.errorbar(part["p"], part["p1_final"], yerr=part["std_error"], label=f"N={n}", capsize=2)
    ax.set_xscale("symlog", linthresh=1e-3)
    ax.set( xlabel="gate error p", ylabel="final target population")


def gatecount(df, ax):
    ax.plot(df["N"], df["mcx_count"], "o-", label="MCX")
    ax.plot(df["N"], df["cnot_linear"], "s-", label="CNOT (linear model)")
    ax.set(yscale="log", xlabel="N", ylabel="gates")


PLOTTERS = {
    "population_curves": population,
    "temperature_curves": temperature,
    "work_curves": work,
    "work_temperature": work_temperature,
    "noise_sweep": noise,
    "suboptimal_sim": noise,
    "gatecount_scaling": gatecount,
}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("dirs", nargs="+", type=pathlib.Path)
    args = parser.parse_args()
    for d in args.dirs:
        tables = [p for p in sorted(d.glob("*.csv")) if p.stem in PLOTTERS]
        if not tables:
            print(f"{d}: nothing to plot")
            continue
        fig, axes = plt.subplots(1, len(tables), figsize=(5 * len(tables), 4), squeeze=False)
        for ax, path in zip(axes[0], tables):
            PLOTTERS[path.stem](pd.read_csv(path), ax)
            ax.set_title(path.stem)
            ax.legend(fontsize="small")
        fig.tight_layout()
        fig.savefig(d / "plot.png", dpi=120)
        print(f"{d}: wrote plot.png")


if __name__ == "__main__":
    main()
