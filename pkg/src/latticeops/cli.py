"""Command-line front end.

Parses a job from flags or a JSON/TOML config file, runs one of the
diagnostic tasks, and emits a JSON report (the contract) or an aligned
table (lossy rendering).  All numbers cross this boundary as exact
rational strings.

Exit codes: 0 success, 1 config/contract error, 2 regularity or
admissibility failure detected (still with a full report).
"""

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .classical import (
    PearsonPair,
    regularity,
    rodrigues_check,
    ttrr_coeffs,
)
from .errors import (
    AdmissibilityError,
    LatticeOpsError,
    RegularityBreakError,
    RegularityError,
)
from .families import AWParams, RacahParams, aw_bundle, racah_bundle
from .lattice import LatticeSpec, lattice_from_config, lattice_to_config
from .momentfun import pearson_moments, ttrr_oracle
from .rationals import format_rational, parse_rational

SCHEMA = "lattice-opq/1"
TASKS = ("analyze", "moments", "ttrr", "rodrigues", "family-check")


@dataclass
class JobConfig:
    task: str
    lattice: Optional[LatticeSpec]
    pair: Optional[PearsonPair]
    family: Optional[str]
    params: Optional[dict]
    max_n: int
    output: str = "json"
    oracle: bool = False
    moment_degree: int = 12


class ConfigError(Exception):
    pass


def _parse_pair_flag(text: str) -> PearsonPair:
    parts = [t.strip() for t in text.split(",")]
    if len(parts) != 5:
        raise ConfigError("--pair needs exactly five rationals a,b,c,d,e")
    return PearsonPair(*(parse_rational(t) for t in parts))


def _parse_params_flag(text: str) -> dict:
    out = {}
    for item in text.split(","):
        if "=" not in item:
            raise ConfigError(f"bad --params entry: {item!r}")
        key, _, value = item.partition("=")
        out[key.strip()] = parse_rational(value.strip())
    return out


def _load_config_file(path: str) -> dict:
    with open(path, "rb") as fh:
        raw = fh.read()
    if path.endswith(".toml"):
        try:
            import tomllib
        except ImportError:
            import tomli as tomllib
        return tomllib.loads(raw.decode())
    return json.loads(raw.decode())


def resolve_family(name: str, params: dict):
    if name == "racah":
        wanted = ("a", "b", "c", "d")
        missing = [k for k in wanted if k not in params]
        if missing:
            raise ConfigError(f"racah params missing: {missing}")
        return racah_bundle(RacahParams(*(params[k] for k in wanted)))
    if name in ("askey-wilson", "aw"):
        wanted = ("a", "b", "c", "d", "p", "r", "c3")
        missing = [k for k in wanted if k not in params]
        if missing:
            raise ConfigError(f"askey-wilson params missing: {missing}")
        return aw_bundle(AWParams(*(params[k] for k in wanted)))
    raise ConfigError(f"unknown family preset: {name!r}")


def build_config(args) -> JobConfig:
    file_cfg = {}
    if args.config:
        file_cfg = _load_config_file(args.config)

    task = args.task or file_cfg.get("task")
    if task not in TASKS:
        raise ConfigError(f"task must be one of {TASKS}, got {task!r}")

    lattice = None
    if args.lattice_file:
        lattice = lattice_from_config(_load_config_file(args.lattice_file))
    elif "lattice" in file_cfg:
        lattice = lattice_from_config(file_cfg["lattice"])

    pair = None
    if args.pair:
        pair = _parse_pair_flag(args.pair)
    elif "pair" in file_cfg:
        pair = PearsonPair.from_config(file_cfg["pair"])

    family = args.family or file_cfg.get("family")
    params = None
    if args.params:
        params = _parse_params_flag(args.params)
    elif "params" in file_cfg:
        params = {
            k: parse_rational(v) for k, v in file_cfg["params"].items()
        }

    if family is not None and pair is not None:
        raise ConfigError("give either a pair or a family preset, not both")
    if family is None and pair is None:
        raise ConfigError("a pair (with lattice) or a family preset is required")
    if family is None and lattice is None:
        raise ConfigError("a lattice is required alongside --pair")

    max_n = args.max_n if args.max_n is not None else file_cfg.get("max_n")
    if max_n is None or int(max_n) < 1:
        raise ConfigError("--max-n must be given and >= 1")

    output = args.format or file_cfg.get("output", "json")
    if output not in ("json", "table"):
        raise ConfigError(f"unknown output format: {output!r}")

    return JobConfig(
        task=task,
        lattice=lattice,
        pair=pair,
        family=family,
        params=params,
        max_n=int(max_n),
        output=output,
        oracle=bool(args.oracle or file_cfg.get("oracle", False)),
        moment_degree=int(
            args.moment_degree
            if args.moment_degree is not None
            else file_cfg.get("moment_degree", 12)
        ),
    )


def _resolve(config: JobConfig):
    """Return (lattice, pair, bundle-or-None)."""
    if config.family is not None:
        bundle = resolve_family(config.family, config.params or {})
        return bundle.lattice, bundle.pair, bundle
    return config.lattice, config.pair, None


def _failure_dict(n: int, kind: str) -> dict:
    return {"n": n, "kind": kind}


def _report_header(config: JobConfig, lattice, pair) -> dict:
    out = {"schema": SCHEMA, "task": config.task}
    out["lattice"] = lattice_to_config(lattice)
    out["pair"] = pair.to_config()
    if config.family is not None:
        out["family"] = config.family
    return out


def run(config: JobConfig):
    """Execute the job; returns (exit_code, report dict)."""
    lattice, pair, bundle = _resolve(config)
    report = _report_header(config, lattice, pair)
    code = 0

    if config.task == "analyze":
        reg = regularity(lattice, pair, config.max_n)
        report["N"] = reg.N
        report["d_seq"] = [format_rational(x) for x in reg.d_seq]
        report["e_seq"] = [format_rational(x) for x in reg.e_seq]
        report["admissible_up_to"] = reg.admissible_up_to
        report["regular_up_to"] = reg.regular_up_to
        if reg.first_failure is not None:
            report["first_failure"] = _failure_dict(
                reg.first_failure.n, reg.first_failure.kind
            )
            code = 2

    elif config.task == "moments":
        try:
            u = pearson_moments(lattice, pair, config.max_n)
            report["moments"] = [format_rational(m) for m in u.moments]
        except AdmissibilityError as exc:
            report["first_failure"] = _failure_dict(exc.n, "d_n_zero")
            code = 2

    elif config.task == "ttrr":
        try:
            coeffs = ttrr_coeffs(lattice, pair, config.max_n)
        except RegularityError as exc:
            report["first_failure"] = _failure_dict(exc.n, exc.kind)
            return 2, report
        report["B"] = [format_rational(x) for x in coeffs.B]
        report["C"] = [format_rational(x) for x in coeffs.C]
        if config.oracle:
            diff = []
            try:
                u = pearson_moments(lattice, pair, 2 * config.max_n - 1)
                oracle = ttrr_oracle(u)
            except (AdmissibilityError, RegularityBreakError) as exc:
                report["oracle_error"] = {
                    "n": exc.n, "kind": type(exc).__name__,
                }
                return 2, report
            report["oracle"] = {
                "B": [format_rational(x) for x in oracle.B],
                "C": [format_rational(x) for x in oracle.C],
            }
            for i in range(min(len(coeffs.B), len(oracle.B))):
                if coeffs.B[i] != oracle.B[i]:
                    diff.append({"coefficient": f"B_{i}"})
            for i in range(min(len(coeffs.C), len(oracle.C))):
                if coeffs.C[i] != oracle.C[i]:
                    diff.append({"coefficient": f"C_{i + 1}"})
            report["diff"] = diff

    elif config.task == "rodrigues":
        verdicts = []
        try:
            for n in range(config.max_n + 1):
                v = rodrigues_check(lattice, pair, n, config.moment_degree)
                verdicts.append(
                    {
                        "n": v.n,
                        "equal": v.equal,
                        "first_difference": v.first_difference,
                    }
                )
        except AdmissibilityError as exc:
            report["first_failure"] = _failure_dict(exc.n, "d_n_zero")
            code = 2
        report["verdicts"] = verdicts
        if any(not v["equal"] for v in verdicts):
            code = 2

    elif config.task == "family-check":
        if bundle is None:
            raise ConfigError("family-check requires --family")
        try:
            coeffs = ttrr_coeffs(lattice, pair, config.max_n)
        except RegularityError as exc:
            report["first_failure"] = _failure_dict(exc.n, exc.kind)
            return 2, report
        diff = []
        closed_B = [bundle.closed_B(n) for n in range(len(coeffs.B))]
        closed_C = [bundle.closed_C(n) for n in range(1, len(coeffs.C) + 1)]
        for i, (lhs, rhs) in enumerate(zip(coeffs.B, closed_B)):
            if lhs != rhs:
                diff.append({"coefficient": f"B_{i}"})
        for i, (lhs, rhs) in enumerate(zip(coeffs.C, closed_C)):
            if lhs != rhs:
                diff.append({"coefficient": f"C_{i + 1}"})
        report["B_theorem"] = [format_rational(x) for x in coeffs.B]
        report["B_closed"] = [format_rational(x) for x in closed_B]
        report["C_theorem"] = [format_rational(x) for x in coeffs.C]
        report["C_closed"] = [format_rational(x) for x in closed_C]
        report["diff"] = diff

    return code, report


def render_table(report: dict) -> str:
    """Aligned-table rendering; lossy, for humans."""
    lines = []
    for key, value in report.items():
        if isinstance(value, list) and value and not isinstance(value[0], dict):
            lines.append(f"{key}:")
            width = max(len(str(v)) for v in value)
            for i, v in enumerate(value):
                lines.append(f"  {i:>4}  {str(v):>{width}}")
        elif isinstance(value, list):
            lines.append(f"{key}: {json.dumps(value)}")
        elif isinstance(value, dict):
            lines.append(f"{key}: {json.dumps(value)}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticeops",
        description="Exact diagnostics for Pearson pairs on lattices",
    )
    parser.add_argument("task", nargs="?", choices=TASKS)
    parser.add_argument("--config", help="JSON or TOML job config file")
    parser.add_argument("--lattice-file", help="lattice config file")
    parser.add_argument("--pair", help="five rationals a,b,c,d,e")
    parser.add_argument("--family", help="preset name (racah, askey-wilson)")
    parser.add_argument("--params", help="family parameters k=v,...")
    parser.add_argument("--max-n", type=int, dest="max_n")
    parser.add_argument("--format", choices=("json", "table"))
    parser.add_argument("--oracle", action="store_true", default=None)
    parser.add_argument(
        "--moment-degree", type=int, dest="moment_degree"
    )
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        config = build_config(args)
        code, report = run(config)
    except (ConfigError, ValueError, OSError, LatticeOpsError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if config.output == "table":
        print(render_table(report))
    else:
        print(json.dumps(report, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
