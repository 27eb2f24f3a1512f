"""Command-line front end: ``invmodel {verify,dims,orbits,decompose,character}``."""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional

from .characters import (
    character_table,
    count_partitions_with_odd_parts,
    degree,
    format_partition,
    model_character,
    model_multiplicities,
    partitions_of,
)
from .intertwiners import end_dimension, end_dimension_sliced, enumerate_signed_orbits
from .perm import involution_count
from .report import Check
from .verify import FULL_ORBITS_CAP, run_all

SCHEMA_VERSION = 1
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
SOFT_CAP = 10


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int
    j: Optional[int] = None
    k: Optional[int] = None
    format: str = "text"
    seed: int = 0
    timings: bool = False

    def validate(self) -> None:
        if self.n < 1:
            raise UsageError(f"--n must be at least 1, got {self.n}")
        for name in ("j", "k"):
            v = getattr(self, name)
            if v is not None and not 0 <= v <= self.n // 2:
                raise UsageError(f"--{name} must be in 0..{self.n // 2} for n={self.n}, got {v}")
        if self.seed < 0:
            raise UsageError("--seed must be non-negative")

    def echo(self) -> dict:
        d = {"command": self.command, "n": self.n, "seed": self.seed}
        if self.j is not None:
            d["j"] = self.j
        if self.k is not None:
            d["k"] = self.k
        return d


@dataclass
class Report:
    config: RunConfig
    checks: list[Check]
    data: dict
    text: str = ""
    skipped: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        doc = {
            "schema_version": SCHEMA_VERSION,
            "command": self.config.echo(),
            "passed": self.passed,
            "checks": [c.to_json(self.config.timings) for c in self.checks],
            "skipped": list(self.skipped),
            "data": self.data,
        }
        return json.dumps(doc, indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = []
        if self.text:
            lines.append(self.text)
            lines.append("")
        for c in self.checks:
            lines.append(
                f"[{c.status.upper()}] {c.name}: observed {c.observed}, expected {c.expected}"
                f" ({c.elapsed_ms:.0f} ms)"
            )
        for s in self.skipped:
            lines.append(f"[SKIP] {s}")
        if self.checks:
            lines.append("ALL CHECKS PASSED" if self.passed else "SOME CHECKS FAILED")
        return "\n".join(lines)


def _timed_check(name: str, observed, expected, t0: float) -> Check:
    return Check(name, observed == expected, observed, expected, (time.perf_counter() - t0) * 1000)


def cmd_verify(cfg: RunConfig) -> Report:
    checks, skipped, theorem = run_all(cfg.n, cfg.seed)
    data = {
        "p_n": len(partitions_of(cfg.n)),
        "sum_degrees": sum(degree(lam) for lam in partitions_of(cfg.n)),
        "end_dimensions": [theorem.end_dimensions[j] for j in sorted(theorem.end_dimensions)],
        "multiplicities": theorem.table.to_json(),
    }
    text = f"n={cfg.n}: p(n)={data['p_n']}, sum of degrees={data['sum_degrees']}"
    return Report(cfg, checks, data, text, tuple(skipped))


def cmd_dims(cfg: RunConfig) -> Report:
    n = cfg.n
    t0 = time.perf_counter()
    dim = end_dimension if n <= FULL_ORBITS_CAP else end_dimension_sliced
    rows = []
    for j in range(n // 2 + 1):
        rows.append(
            {
                "j": j,
                "dim_V": involution_count(n, j),
                "dim_End": dim(n, j),
                "partition_count": count_partitions_with_odd_parts(n, n - 2 * j),
            }
        )
    sum_v = sum(r["dim_V"] for r in rows)
    sum_end = sum(r["dim_End"] for r in rows)
    sum_deg = sum(degree(lam) for lam in partitions_of(n))
    p_n = len(partitions_of(n))
    checks = [
        _timed_check("dim End_G(V_j) = partition count, every j",
                     [r["dim_End"] for r in rows], [r["partition_count"] for r in rows], t0),
        _timed_check("sum dim V_j = sum of degrees", sum_v, sum_deg, t0),
        _timed_check("sum dim End_G(V_j) = p(n)", sum_end, p_n, t0),
    ]
    header = f"{'j':>3} {'dim V_j':>10} {'dim End':>8} {'#parts':>7}"
    lines = [header, "-" * len(header)]
    for r in rows:
        lines.append(f"{r['j']:>3} {r['dim_V']:>10} {r['dim_End']:>8} {r['partition_count']:>7}")
    lines.append(f"{'sum':>3} {sum_v:>10} {sum_end:>8}   (sum f^lambda = {sum_deg}, p(n) = {p_n})")
    data = {"rows": rows, "totals": {"dim_V": sum_v, "dim_End": sum_end, "sum_degrees": sum_deg, "p_n": p_n}}
    return Report(cfg, checks, data, "\n".join(lines))


def cmd_orbits(cfg: RunConfig) -> Report:
    if cfg.j is None or cfg.k is None:
        raise UsageError("orbits needs both --j and --k")
    orbits = enumerate_signed_orbits(cfg.n, cfg.j, cfg.k)
    atlas = [o.to_json() for o in orbits]
    lines = [f"X_{cfg.j} x X_{cfg.k} for n={cfg.n}: {len(atlas)} orbits, "
             f"{sum(a['consistent'] for a in atlas)} consistent"]
    for a in atlas:
        rep = ", ".join(a["representative"])
        part = "+".join(map(str, a["numerical_partition"]))
        flag = "consistent" if a["consistent"] else "inconsistent"
        lines.append(f"  ({rep})  size {a['size']:>6}  {part:<12} {flag}")
    return Report(cfg, [], {"orbits": atlas}, "\n".join(lines))


def cmd_decompose(cfg: RunConfig) -> Report:
    t0 = time.perf_counter()
    table = model_multiplicities(cfg.n)
    sums = [table.row_sum(lam) for lam in table.rows]
    entries = sorted({m for row in table.rows.values() for m in row.values()})
    checks = [
        Check("multiplicities in {0,1}", set(entries) <= {0, 1}, entries, [0, 1],
              (time.perf_counter() - t0) * 1000),
        _timed_check("every row sums to 1", sorted(set(sums)), [1], t0),
    ]
    return Report(cfg, checks, table.to_json(), table.to_text())


def cmd_character(cfg: RunConfig) -> Report:
    n = cfg.n
    ps = partitions_of(n)
    js = [cfg.j] if cfg.j is not None else list(range(n // 2 + 1))
    model = {j: model_character(n, j) for j in js}
    table = character_table(n)
    cols = [format_partition(mu) for mu in ps]
    data = {
        "classes": cols,
        "model": [{"j": j, "values": [model[j][mu] for mu in ps]} for j in js],
        "irreducible": [{"partition": format_partition(lam), "values": [table[lam][mu] for mu in ps]} for lam in ps],
    }
    w = max(len(c) for c in cols + ["chi"])
    lines = ["classes: " + "  ".join(cols), ""]
    for j in js:
        lines.append(f"{'V_' + str(j):<{w}} " + " ".join(f"{model[j][mu]:>6}" for mu in ps))
    lines.append("")
    for lam in ps:
        lines.append(f"{format_partition(lam):<{w}} " + " ".join(f"{table[lam][mu]:>6}" for mu in ps))
    return Report(cfg, [], data, "\n".join(lines))


COMMANDS = {
    "verify": (cmd_verify, "run every verification suite at degree n"),
    "dims": (cmd_dims, "dim V_j and dim End_G(V_j) against partition counts"),
    "orbits": (cmd_orbits, "orbit atlas of X_j x X_k under simultaneous conjugation"),
    "decompose": (cmd_decompose, "multiplicity of each irreducible in each V_j"),
    "character": (cmd_character, "characters of V_j and the irreducible character table"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="degree of the symmetric group")
    common.add_argument("--j", type=int, help="length of the source involutions")
    common.add_argument("--k", type=int, help="length of the target involutions")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default 0)")
    common.add_argument("--timings", action="store_true", help="include elapsed_ms in JSON output")
    parser = argparse.ArgumentParser(
        prog="invmodel", description="The involution model of the symmetric group, checked exactly."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # argparse exits with EXIT_USAGE on bad flags
    cfg = RunConfig(args.command, args.n, args.j, args.k, args.format, args.seed, args.timings)
    try:
        cfg.validate()
        if cfg.n > SOFT_CAP:
            print(f"warning: n={cfg.n} exceeds {SOFT_CAP}; this may take a long time", file=sys.stderr)
        report = COMMANDS[cfg.command][0](cfg)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"invmodel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.to_json() if cfg.format == "json" else report.to_text())
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
