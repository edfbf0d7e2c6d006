"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 numerical breakdown or a
verification residual above tolerance, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import bench
from .errors import ClusteredSpectrum, InputError, NumericalBreakdown
from .householder import diag2trid
from .schmeisser import naive_solve
from .tridiagonal import eigen_decomposition
from .validation import check_strictly_increasing
from .verify import (
    dptz_identity_residual,
    equal_up_to_offdiag_sign,
    first_row_uniform_residual,
    theorem_polynomial_identity_residual,
)

EXIT_OK, EXIT_INPUT, EXIT_NUMERICAL, EXIT_IO = 0, 2, 3, 4

log = logging.getLogger("tridiag_iep")


def parse_lambdas(spec: str) -> np.ndarray:
    """Eigenvalues from a file (one per line) or an inline comma list."""
    if os.path.isfile(spec):
        text = Path(spec).read_text(encoding="utf-8")
        tokens = text.split()
    else:
        tokens = spec.replace(",", " ").split()
    values = []
    for i, tok in enumerate(tokens):
        try:
            values.append(float(tok))
        except ValueError:
            raise InputError(f"eigenvalue {i} ({tok!r}) is not a number") from None
    return check_strictly_increasing(values)


def lambdas_hash(lam: np.ndarray) -> str:
    return hashlib.sha256(np.asarray(lam, dtype="<f8").tobytes()).hexdigest()


def _construct(algo: str, lam: np.ndarray):
    if algo == "naive":
        return naive_solve(lam)
    return diag2trid(lam)[0]


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_construct(args) -> int:
    lam = parse_lambdas(args.lambdas)
    T = _construct(args.algo, lam)
    if args.format == "json":
        payload = {
            "n": T.n,
            "diag": T.diag.tolist(),
            "offdiag": T.offdiag.tolist(),
            "algo": args.algo,
            "lambdas_hash": lambdas_hash(lam),
        }
        text = json.dumps(payload) + "\n"
    else:
        rows = ["i,diag,offdiag"]
        for i, a in enumerate(T.diag):
            b = repr(float(T.offdiag[i])) if i < T.n - 1 else ""
            rows.append(f"{i},{float(a)!r},{b}")
        text = "\n".join(rows) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    lam = parse_lambdas(args.lambdas)
    tol = args.tol
    checks: list[tuple[str, float]] = []
    breakdown = None

    T_hat, W = diag2trid(lam)
    checks.append(("first_row_uniform_residual[diag2trid]", first_row_uniform_residual(W)))
    checks.append(
        ("theorem_polynomial_identity_residual[diag2trid]",
         theorem_polynomial_identity_residual(T_hat))
    )
    try:
        checks.append(("dptz_identity_residual_max[diag2trid]",
                       float(np.max(dptz_identity_residual(T_hat)))))
    except ClusteredSpectrum as exc:
        breakdown = f"diag2trid eigenvectors: {exc}"

    try:
        T = naive_solve(lam)
    except NumericalBreakdown as exc:
        breakdown = f"naive route broke down at step {exc.step}: {exc}"
        T = None
    if T is not None:
        cmp = equal_up_to_offdiag_sign(T, T_hat, tol)
        print(f"equal_up_to_offdiag_sign: {cmp.summary()}")
        checks.append(("equal_up_to_offdiag_sign_max_deviation",
                       max(cmp.max_diag_deviation, cmp.max_offdiag_deviation)))
        checks.append(("theorem_polynomial_identity_residual[naive]",
                       theorem_polynomial_identity_residual(T)))
        try:
            checks.append(("first_row_uniform_residual[naive]",
                           first_row_uniform_residual(eigen_decomposition(T).vectors)))
        except ClusteredSpectrum as exc:
            breakdown = f"naive eigenvectors: {exc}"

    ok = True
    for name, value in checks:
        passed = bool(value <= tol)
        ok &= passed
        print(f"{name}: {value:.3e} [{'ok' if passed else 'FAIL'}]")
    if breakdown:
        print(f"breakdown: {breakdown}")
        return EXIT_NUMERICAL
    return EXIT_OK if ok else EXIT_NUMERICAL


def cmd_bench(args) -> int:
    if args.step < 1 or args.n_max < args.n_min:
        raise InputError("need step >= 1 and n-max >= n-min")
    cfg = bench.ExperimentConfig(
        n_values=tuple(range(args.n_min, args.n_max + 1, args.step)),
        realizations=args.realizations,
        interval=(args.lo, args.hi),
        min_gap=args.min_gap,
        seed=args.seed,
        algorithms=tuple(a.strip() for a in args.algorithms.split(",") if a.strip()),
    )
    records = bench.run_experiment(cfg)
    bench.write_csv(records, args.out)
    if args.config_out:
        Path(args.config_out).write_text(cfg.to_json(), encoding="utf-8")
    print(bench.summary_table(records))
    print(f"wrote {args.out}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tridiag-iep",
        description="Build unreduced symmetric tridiagonal matrices with a prescribed spectrum.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build T from eigenvalues")
    p.add_argument("--algo", choices=("naive", "diag2trid"), required=True)
    p.add_argument("--lambdas", required=True,
                   help="comma-separated values or a file with one value per line")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check both routes agree and the identities hold")
    p.add_argument("--lambdas", required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="worst eigenvalue error versus n, as CSV")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--step", type=int, default=2)
    p.add_argument("--realizations", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--lo", type=float, default=-10.0)
    p.add_argument("--hi", type=float, default=10.0)
    p.add_argument("--min-gap", type=float, default=0.0)
    p.add_argument("--algorithms", default="naive,diag2trid")
    p.add_argument("--out", default="fig1.csv")
    p.add_argument("--config-out", help="also write the resolved config as JSON")
    p.set_defaults(func=cmd_bench)
    return parser


def _join_value_flags(argv: list[str]) -> list[str]:
    # "--lambdas -1,0,1" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--lambdas", "--lo", "--hi"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _join_value_flags(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2),
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NumericalBreakdown as exc:
        print(f"numerical breakdown at step {exc.step}: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except ClusteredSpectrum as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
