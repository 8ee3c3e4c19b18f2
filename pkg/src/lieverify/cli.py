"""Command-line front end.

    lieverify verify all|eupo|basis|homosl|sll|smash-kl|sigma2l|sigma-f2|filtration|jacobi
    lieverify series omega2|f2k|omegaj|chi-w|closed-form|tensor|symmetric
    lieverify oracle free-lie|commutator

Exit codes: 0 all checks pass, 1 some check failed, 2 usage or parameter
error, 3 the oracle word-count guard was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import checks, gradedlie
from .errors import CapTooLarge, InvalidParameters
from .series import DEFAULT_CAP

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

VERIFY_TARGETS = ("all",) + checks.CHECK_NAMES
SERIES_TARGETS = ("omega2", "f2k", "omegaj", "chi-w", "closed-form", "tensor", "symmetric")
ORACLE_TARGETS = ("free-lie", "commutator")


@dataclass
class RunConfig:
    command: str
    target: str
    n: int | None
    p: int | None
    k: int
    cap: int
    oracle_cap: int | None
    json: bool
    out: str | None

    def validate(self) -> None:
        if self.n is not None and self.n < 1:
            raise InvalidParameters(f"n must be ≥ 1, got {self.n}")
        if self.p is not None:
            gradedlie.validate_p(self.p)
        if self.cap < 1:
            raise InvalidParameters(f"cap must be ≥ 1, got {self.cap}")
        if self.oracle_cap is not None and self.oracle_cap < 1:
            raise InvalidParameters(f"oracle cap must be ≥ 1, got {self.oracle_cap}")
        if self.k < 0:
            raise InvalidParameters(f"k must be ≥ 0, got {self.k}")

    @property
    def np_or_default(self) -> tuple[int, int]:
        return (1 if self.n is None else self.n, 5 if self.p is None else self.p)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=None)
    common.add_argument("--p", type=int, default=None)
    common.add_argument("--k", type=int, default=1)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common.add_argument("--oracle-cap", type=int, default=None)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", default=None, help="write to this file instead of stdout")

    parser = _Parser(prog="lieverify", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, targets in (("verify", VERIFY_TARGETS), ("series", SERIES_TARGETS),
                          ("oracle", ORACLE_TARGETS)):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("target", choices=targets)
    return parser


def parse_config(argv) -> RunConfig:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(ns.command, ns.target, ns.n, ns.p, ns.k, ns.cap, ns.oracle_cap,
                    ns.json, ns.out)
    cfg.validate()
    return cfg


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"), ensure_ascii=False)


def _series(cfg: RunConfig):
    n, p = cfg.np_or_default
    gens = gradedlie.GeneratorSet.paper(n, p)
    return {
        "omega2": lambda: checks.hilbert_omega2(n, p, cfg.cap),
        "f2k": lambda: checks.hilbert_F2k(n, p, cfg.k, cfg.cap),
        "omegaj": lambda: checks.hilbert_omegaJ(n, p, cfg.k, cfg.cap),
        "chi-w": lambda: gradedlie.chi_W(gens, cfg.cap),
        "closed-form": lambda: checks.closed_form_euPO(n, p, cfg.cap),
        "tensor": lambda: gradedlie.chi_tensor(gens, cfg.cap),
        "symmetric": lambda: gradedlie.chi_symmetric(gens, cfg.cap),
    }[cfg.target]()


def _run_verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.target == "all":
        if cfg.n is None and cfg.p is None:
            grid = checks.GRID
        else:
            grid = (cfg.np_or_default,)
        reports = []
        for n, p in grid:
            reports.extend(checks.run_all(n, p, cfg.cap, cfg.oracle_cap))
        reports.sort(key=checks.report_sort_key)
        ok = all(r.passed for r in reports)
        if cfg.json:
            text = dumps({
                "check": "all",
                "params": {"grid": [list(g) for g in grid], "cap": cfg.cap},
                "status": "pass" if ok else "fail",
                "detail": {
                    "reports": [r.to_dict() for r in reports],
                    "not_verifiable": list(checks.NOT_VERIFIABLE),
                },
            })
        else:
            lines = [r.summary_line() for r in reports]
            passed = sum(r.passed for r in reports)
            lines.append(f"{passed}/{len(reports)} checks passed")
            lines.append("not verifiable by this artifact: " + "; ".join(checks.NOT_VERIFIABLE))
            text = "\n".join(lines)
        return text, EXIT_OK if ok else EXIT_FAIL

    n, p = cfg.np_or_default
    report = checks.run_check(cfg.target, n, p, cfg.cap, cfg.oracle_cap)
    text = dumps(report.to_dict()) if cfg.json else report.summary_line()
    return text, EXIT_OK if report.passed else EXIT_FAIL


def _run_oracle(cfg: RunConfig) -> tuple[str, int]:
    n, p = cfg.np_or_default
    gens = gradedlie.GeneratorSet.paper(n, p)
    cap = cfg.oracle_cap if cfg.oracle_cap is not None else checks.default_oracle_cap(n, p)
    fn = (gradedlie.free_lie_dims_oracle if cfg.target == "free-lie"
          else gradedlie.commutator_dims_oracle)
    dims = fn(gens, cap)
    if cfg.json:
        return dumps(dims.to_pairs()), EXIT_OK
    return "\n".join(f"{d}: {m}" for d, m in dims.nonzero().items()) or "(all zero)", EXIT_OK


def run(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
    except _UsageError as exc:
        print(f"lieverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidParameters as exc:
        print(f"lieverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if cfg.command == "verify":
            text, code = _run_verify(cfg)
        elif cfg.command == "series":
            s = _series(cfg)
            text, code = (dumps(s.to_pairs()) if cfg.json else s.to_text()), EXIT_OK
        else:
            text, code = _run_oracle(cfg)
    except CapTooLarge as exc:
        print(f"lieverify: guard exceeded: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvalidParameters as exc:
        print(f"lieverify: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())
