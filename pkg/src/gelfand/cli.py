"""Command-line front end.

Runs the kernel pipeline for one configuration and prints a report, either
human-readable (``--format text``) or as a stable JSON document
(``--format json``).  Exit status: 0 on success, 1 when a requested family
verification fails (eq is false), 2 on configuration errors.

JSON is byte-stable for a fixed configuration: rationals are serialized as
lowest-term strings ("3", "-1/2"), operators are named r0..r{n-1}, the
plain product is ``*``, and no timing information is included.  Text mode
uses the written symbols and may move negative terms to the right-hand
side of an identity; that is presentation only.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .catalog import Family, KernelReport, compute_kernel, verify
from .diffalg import ModelConfig
from .exprspace import ExprVec, POST, PRE, term_str
from .selftest import run_all

__all__ = ["main", "build_config", "report_json", "report_text", "ConfigError"]

_FAMILY_NAMES = [f.value for f in Family]
_CONFIG_KEYS = ("model", "ops", "mode", "verify", "format", "seed")
_DEFAULTS = {
    "model": "commuting",
    "ops": 1,
    "mode": PRE,
    "verify": None,
    "format": "text",
    "seed": 0,
}


class ConfigError(ValueError):
    """Invalid run configuration; the message names the offending field."""


def _parse_config_file(path: str) -> dict:
    values: dict = {}
    try:
        with open(path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise ConfigError(f"config: cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"config: line {lineno} is not 'key = value'")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"config: unknown key {key!r} on line {lineno}")
        values[key] = value
    return values


def build_config(args: argparse.Namespace) -> dict:
    """Merge defaults, config file and explicit flags; validate everything."""
    merged = dict(_DEFAULTS)
    if args.config:
        merged.update(_parse_config_file(args.config))
    for key in _CONFIG_KEYS:
        value = getattr(args, key)
        if value is not None:
            merged[key] = value

    if merged["model"] not in ("commuting", "noncommuting"):
        raise ConfigError("model must be 'commuting' or 'noncommuting'")
    try:
        merged["ops"] = int(merged["ops"])
    except (TypeError, ValueError):
        raise ConfigError("ops must be an integer")
    if merged["ops"] < 1:
        raise ConfigError("ops must be >= 1")
    if merged["mode"] not in (PRE, POST):
        raise ConfigError("mode must be 'pre' or 'post'")
    if merged["verify"] is not None:
        if merged["verify"] not in _FAMILY_NAMES:
            raise ConfigError(
                f"verify must be one of {', '.join(_FAMILY_NAMES)}"
            )
        family = Family(merged["verify"])
        if family in (Family.NOVIKOV, Family.PRELIE) and merged["ops"] != 1:
            raise ConfigError(f"verify family '{family.value}' requires ops == 1")
    if merged["format"] not in ("text", "json"):
        raise ConfigError("format must be 'text' or 'json'")
    try:
        merged["seed"] = int(merged["seed"])
    except (TypeError, ValueError):
        raise ConfigError("seed must be an integer")
    return merged


def _vector_json(vec: ExprVec) -> list[dict]:
    return [
        {"term": term_str(elem, style="ascii"), "coeff": str(coeff)}
        for elem, coeff in vec.terms()
    ]


def report_json(report: KernelReport) -> str:
    doc = {
        "model": "commuting" if report.model.commuting else "noncommuting",
        "ops": report.model.num_operators,
        "mode": report.mode,
        "basis_size": report.basis_size,
        "rank": report.rank,
        "kernel_dim": report.kernel_dim,
        "kernel_basis": [_vector_json(v) for v in report.kernel_vectors],
        "verdicts": None
        if report.verdicts is None
        else {
            "family": report.verdicts.family.value,
            "contains_all": report.verdicts.contains_all,
            "leq": report.verdicts.leq,
            "geq": report.verdicts.geq,
            "eq": report.verdicts.eq,
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def identity_str(vec: ExprVec, style: str = "text") -> str:
    """Render a kernel vector as 'LHS = RHS', moving negative terms right."""

    def side(terms):
        parts = []
        for elem, coeff in terms:
            body = term_str(elem, style)
            parts.append(body if coeff == 1 else f"{coeff} {body}")
        return " + ".join(parts) if parts else "0"

    pos = [(e, c) for e, c in vec.terms() if c > 0]
    neg = [(e, -c) for e, c in vec.terms() if c < 0]
    return f"{side(pos)} = {side(neg)}"


def report_text(report: KernelReport) -> str:
    lines = [
        f"model: {'commuting' if report.model.commuting else 'noncommuting'}"
        f"  operators: {report.model.num_operators}  mode: {report.mode}",
        f"basis size: {report.basis_size}  monomial columns: {report.monomial_count}"
        f"  rank: {report.rank}  kernel dimension: {report.kernel_dim}",
    ]
    if report.mode == POST:
        lines.append("post-mode kernel dimensions are exploratory (see README)")
    lines.append("degenerate identifications (collapsed before arity 3):")
    for note in report.degenerate_identifications:
        lines.append(f"  - {note}")
    lines.append("kernel basis identities:")
    for i, vec in enumerate(report.kernel_vectors, start=1):
        lines.append(f"  {i:3d}. {identity_str(vec)}")
    if report.verdicts is not None:
        v = report.verdicts
        lines.append(
            f"verdict[{v.family.value}]: contains_all={v.contains_all}"
            f" leq={v.leq} geq={v.geq} eq={v.eq}"
        )
    lines.append(f"elapsed: {report.elapsed:.3f}s")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gelfand",
        description="Compute the identities induced by derivations on free "
        "multi-differential commutative algebras.",
    )
    parser.add_argument("--model", choices=["commuting", "noncommuting"], default=None)
    parser.add_argument("--ops", type=int, default=None, metavar="N",
                        help="number of derivation operators (>= 1)")
    parser.add_argument("--mode", choices=[PRE, POST], default=None)
    parser.add_argument("--verify", choices=_FAMILY_NAMES, default=None,
                        help="compare the kernel against an identity family")
    parser.add_argument("--format", choices=["text", "json"], default=None)
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for --selftest")
    parser.add_argument("--config", default=None, metavar="PATH",
                        help="flat key = value file with the same fields")
    parser.add_argument("--selftest", action="store_true",
                        help="run the randomized property suites and exit")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = build_config(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.selftest:
        ok = run_all(config["seed"])
        return 0 if ok else 1

    model = ModelConfig(
        commuting=config["model"] == "commuting", num_operators=config["ops"]
    )
    if config["verify"] is not None:
        report = verify(Family(config["verify"]), model, config["mode"])
    else:
        report = compute_kernel(model, config["mode"])

    if config["format"] == "json":
        sys.stdout.write(report_json(report))
    else:
        sys.stdout.write(report_text(report))

    if report.verdicts is not None and not report.verdicts.eq:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
