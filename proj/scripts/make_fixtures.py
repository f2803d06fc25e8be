#!/usr/bin/env python3
"""Regenerate the fixture datasets under data/.

Each fixture is a PROMISE-style class-metric CSV whose per-metric mean and
population standard deviation are tuned to the project's reference baseline
statistics (the values frozen in the golden tests), with the two worked-example
classes embedded verbatim:

  ant17.csv    745 rows, 166 buggy; contains org.apache.tools.ant.dispatch.DispatchTask
               with CBO=3, RFC=5, LCOM=4, WMC=4, bug=0
  camel16.csv  965 rows, 188 buggy; contains org.apache.camel.Exchange with
               CBO=448, RFC=26, LCOM=325, WMC=26 and the highest bug count

Values are non-negative integers. Generation is deterministic (fixed seeds);
rerunning the script reproduces the checked-in files byte for byte.
"""

from __future__ import annotations

import csv
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

OUT_DIR = Path(__file__).resolve().parent.parent / "data"

# metric -> (mean, population std dev)
ANT_TARGETS = {
    "cbo": (11.04, 26.34),
    "rfc": (34.36, 36.02),
    "lcom": (89.14, 349.93),
    "wmc": (11.07, 11.97),
}
CAMEL_TARGETS = {
    "cbo": (11.10, 22.52),
    "rfc": (21.20, 25.00),
    "lcom": (79.33, 523.75),
    "wmc": (8.57, 11.20),
}

REL_TOL = 1e-3  # achieved-vs-target tolerance enforced before writing

FIRST_WORDS = [
    "Archive", "Build", "Class", "Command", "Copy", "Depend", "Echo", "Endpoint",
    "Exec", "File", "Filter", "Input", "Jar", "Java", "Manifest", "Message",
    "Path", "Project", "Property", "Resource", "Route", "Scanner", "Source",
    "Target", "Token", "Type", "War", "Xml", "Xslt", "Zip",
]
SECOND_WORDS = [
    "Adapter", "Analyzer", "Builder", "Checker", "Collector", "Definition",
    "Element", "Emitter", "Factory", "Formatter", "Handler", "Helper", "Impl",
    "Iterator", "Listener", "Loader", "Manager", "Parser", "Processor",
    "Reader", "Registry", "Resolver", "Selector", "Store", "Stream", "Support",
    "Utils", "Validator", "Walker", "Writer", "Worker", "Wrapper", "Monitor",
]

ANT_PACKAGES = [
    "org.apache.tools.ant.taskdefs", "org.apache.tools.ant.types",
    "org.apache.tools.ant.util", "org.apache.tools.ant.filters",
    "org.apache.tools.ant.input", "org.apache.tools.ant.listener",
    "org.apache.tools.ant.loader", "org.apache.tools.ant.helper",
    "org.apache.tools.ant.taskdefs.compilers",
    "org.apache.tools.ant.taskdefs.condition",
    "org.apache.tools.ant.types.resources", "org.apache.tools.ant.util.regexp",
]
CAMEL_PACKAGES = [
    "org.apache.camel.component", "org.apache.camel.processor",
    "org.apache.camel.model", "org.apache.camel.builder",
    "org.apache.camel.impl", "org.apache.camel.spi",
    "org.apache.camel.converter", "org.apache.camel.language",
    "org.apache.camel.dataformat", "org.apache.camel.management",
    "org.apache.camel.util", "org.apache.camel.component.file",
    "org.apache.camel.component.bean", "org.apache.camel.processor.aggregate",
]


@dataclass
class SpecialRow:
    name: str
    metrics: dict[str, int]
    bug: int


def class_names(packages: list[str], count: int, rng: np.random.Generator) -> list[str]:
    combos = [f"{a}{b}" for a in FIRST_WORDS for b in SECOND_WORDS]
    rng.shuffle(combos)
    if count > len(combos):
        raise SystemExit("name pool exhausted")
    names = []
    for i, cls in enumerate(combos[:count]):
        pkg = packages[i % len(packages)]
        names.append(f"{pkg}.{cls}")
    return sorted(names)


def initial_draw(n: int, mean: float, std: float, rng: np.random.Generator) -> np.ndarray:
    """Skewed non-negative integer draw roughly shaped like a CK metric column."""
    ratio = std / mean
    if ratio > 3.0:
        # heavy-tailed column: mostly small values plus a sparse large tail
        body = rng.lognormal(mean=math.log(max(mean * 0.3, 1.0)), sigma=1.0, size=n)
        tail_count = max(3, int(n * 0.01))
        tail_value = std * math.sqrt(n / tail_count) * 0.9
        idx = rng.choice(n, size=tail_count, replace=False)
        body[idx] = rng.normal(tail_value, tail_value * 0.1, size=tail_count)
    else:
        body = rng.lognormal(mean=math.log(max(mean * 0.55, 0.5)), sigma=1.1, size=n)
    return np.maximum(np.round(body), 0).astype(np.int64)


def pin_sum(values: np.ndarray, target_sum: int, mutable: np.ndarray, rng: np.random.Generator) -> None:
    delta = target_sum - int(values.sum())
    idx = np.flatnonzero(mutable)
    while delta != 0:
        i = int(rng.choice(idx))
        if delta > 0:
            values[i] += 1
            delta -= 1
        elif values[i] >= 1:
            values[i] -= 1
            delta += 1


def pin_spread(values: np.ndarray, target_ss: float, mutable: np.ndarray) -> None:
    """Sum-preserving unit transfers until the sum of squares is within 1 of target.

    Moving one unit from element s to element b changes SS by 2*(b - s) + 2,
    so picking the pair whose difference is nearest (gap - 2) / 2 converges
    geometrically; equal-value pairs close the final +/-2.
    """
    idx = np.flatnonzero(mutable)
    for _ in range(200000):
        ss = float(np.dot(values, values))
        gap = target_ss - ss
        if abs(gap) <= 1.0:
            return
        order = idx[np.argsort(values[idx])]
        sorted_vals = values[order]
        if gap > 0:
            # widen: take from a small element, give to a large one
            want = (gap - 2.0) / 2.0
            donors = order[sorted_vals >= 1]
            if donors.size == 0:
                raise SystemExit("cannot widen: no donor")
            s = int(donors[0])
            diffs = values[order] - values[s]
            j = int(np.argmin(np.abs(diffs - want)))
            b = int(order[j])
            if b == s:
                b = int(order[-1])
            values[b] += 1
            values[s] -= 1
        else:
            # narrow: take from a large element, give to a small one
            want = (-gap - 2.0) / 2.0
            b = int(order[-1])
            diffs = values[b] - values[order]
            j = int(np.argmin(np.abs(diffs - want)))
            s = int(order[j])
            if s == b or values[b] - values[s] < 2:
                # fall back to the closest pair with difference >= 2
                cand = np.flatnonzero(sorted_vals[-1] - sorted_vals >= 2)
                if cand.size == 0:
                    return
                s = int(order[cand[-1]])
            values[b] -= 1
            values[s] += 1
    raise SystemExit("spread tuning did not converge")


def build_column(n: int, mean: float, std: float, fixed: dict[int, int],
                 rng: np.random.Generator) -> np.ndarray:
    values = initial_draw(n, mean, std, rng)
    mutable = np.ones(n, dtype=bool)
    for i, v in fixed.items():
        values[i] = v
        mutable[i] = False
    target_sum = round(n * mean)
    pin_sum(values, target_sum, mutable, rng)
    # population variance = SS/n - (sum/n)^2  =>  SS target
    target_ss = n * std * std + (target_sum * target_sum) / n
    pin_spread(values, target_ss, mutable)
    if values.min() < 0:
        raise SystemExit("negative metric value")
    achieved_mean = values.mean()
    achieved_std = values.std()  # population
    if abs(achieved_mean - mean) / mean > REL_TOL:
        raise SystemExit(f"mean off target: {achieved_mean} vs {mean}")
    if abs(achieved_std - std) / std > REL_TOL:
        raise SystemExit(f"std off target: {achieved_std} vs {std}")
    return values


def assign_bugs(n: int, buggy: int, special: dict[int, int],
                rng: np.random.Generator) -> np.ndarray:
    bugs = np.zeros(n, dtype=np.int64)
    forced_buggy = [i for i, b in special.items() if b > 0]
    forced_clean = [i for i, b in special.items() if b == 0]
    pool = np.setdiff1d(np.arange(n), np.array(list(special.keys()), dtype=np.int64))
    extra = buggy - len(forced_buggy)
    chosen = rng.choice(pool, size=extra, replace=False)
    counts = rng.choice([1, 2, 3, 4, 5, 6, 7, 8, 9],
                        p=[0.58, 0.17, 0.09, 0.05, 0.04, 0.03, 0.02, 0.01, 0.01],
                        size=extra)
    bugs[chosen] = counts
    for i, b in special.items():
        bugs[i] = b
    del forced_clean
    assert int((bugs > 0).sum()) == buggy
    return bugs


def write_fixture(path: Path, version: str, names: list[str],
                  columns: dict[str, np.ndarray], dit: np.ndarray,
                  loc: np.ndarray, bugs: np.ndarray) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "version", "wmc", "dit", "cbo", "rfc", "lcom", "loc", "bug"])
        for i, name in enumerate(names):
            w.writerow([name, version, int(columns["wmc"][i]), int(dit[i]),
                        int(columns["cbo"][i]), int(columns["rfc"][i]),
                        int(columns["lcom"][i]), int(loc[i]), int(bugs[i])])


def make_project(out: Path, seed: int, n: int, buggy: int, version: str,
                 packages: list[str], targets: dict[str, tuple[float, float]],
                 special: SpecialRow) -> None:
    rng = np.random.default_rng(seed)
    names = class_names(packages, n - 1, rng)
    names.append(special.name)
    names.sort()
    special_idx = names.index(special.name)

    columns = {}
    for metric, (mean, std) in targets.items():
        columns[metric] = build_column(
            n, mean, std, {special_idx: special.metrics[metric]}, rng)

    dit = rng.integers(0, 7, size=n)
    loc = np.maximum(np.round(rng.lognormal(math.log(120), 1.0, size=n)), 1).astype(np.int64)
    bugs = assign_bugs(n, buggy, {special_idx: special.bug}, rng)
    if special.bug > 0:
        assert bugs.max() == special.bug, "special row must carry the top bug count"

    write_fixture(out, version, names, columns, dit, loc, bugs)

    print(f"{out.name}: {n} rows, {int((bugs > 0).sum())} buggy "
          f"({(bugs > 0).mean() * 100:.1f}%)")
    for metric, (mean, std) in targets.items():
        v = columns[metric]
        print(f"  {metric:5s} mean {v.mean():.4f} (target {mean})  "
              f"std {v.std():.4f} (target {std})")


def main() -> int:
    OUT_DIR.mkdir(parents=True, exist_ok=True)
    make_project(
        OUT_DIR / "ant17.csv", seed=20170701, n=745, buggy=166, version="1.7",
        packages=ANT_PACKAGES, targets=ANT_TARGETS,
        special=SpecialRow(
            name="org.apache.tools.ant.dispatch.DispatchTask",
            metrics={"cbo": 3, "rfc": 5, "lcom": 4, "wmc": 4}, bug=0))
    make_project(
        OUT_DIR / "camel16.csv", seed=20160601, n=965, buggy=188, version="1.6",
        packages=CAMEL_PACKAGES, targets=CAMEL_TARGETS,
        special=SpecialRow(
            name="org.apache.camel.Exchange",
            metrics={"cbo": 448, "rfc": 26, "lcom": 325, "wmc": 26}, bug=17))
    return 0


if __name__ == "__main__":
    sys.exit(main())
