"""schurkit command line: machine-readable access to every operation.

Exit codes: 0 success, 2 argument error, 3 resource bound exceeded,
4 verification failure. All floats are serialized with 17 significant
digits so identical flags (and seed) give byte-identical JSON.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .bases import (
    enumerate_gz,
    enumerate_paths,
    format_path,
    format_ssyt,
    gz_to_ssyt,
    rank_path,
)
from .circuit import gate_count_report, two_level_decompose
from .clebsch_gordan import cg_block
from .oracle import verify_report
from .partitions import (
    dim_P,
    dim_Q,
    enumerate_partitions,
    format_partition,
    parse_partition,
)
from .schur import ResourceLimitError, schur_unitary
from .wigner import reduced_wigner_matrix


def _fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _to_json_text(obj) -> str:
    """Deterministic JSON with 17-significant-digit floats."""
    if isinstance(obj, dict):
        return "{" + ",".join(f'"{k}":{_to_json_text(v)}' for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_to_json_text(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    raise TypeError(f"cannot serialize {type(obj)}")


def _write_json(path: str, obj) -> None:
    with open(path, "w") as fh:
        fh.write(_to_json_text(obj))
        fh.write("\n")


def _cmd_dims(args) -> int:
    print(f"{'lambda':<16}{'dim_Q':>8}{'dim_P':>8}")
    for lam in enumerate_partitions(args.d, args.n):
        print(f"{format_partition(lam):<16}{dim_Q(lam, args.d):>8}{dim_P(lam):>8}")
    if args.json:
        _write_json(
            args.json,
            {
                "d": args.d,
                "n": args.n,
                "rows": [
                    {
                        "lambda": format_partition(lam),
                        "dim_Q": dim_Q(lam, args.d),
                        "dim_P": dim_P(lam),
                    }
                    for lam in enumerate_partitions(args.d, args.n)
                ],
            },
        )
    return 0


def _cmd_partitions(args) -> int:
    parts = enumerate_partitions(args.d, args.n)
    for lam in parts:
        print(format_partition(lam))
    if args.json:
        _write_json(args.json, [format_partition(lam) for lam in parts])
    return 0


def _cmd_gz(args) -> int:
    lam = parse_partition(args.lam)
    patterns = enumerate_gz(lam, args.d)
    for q in patterns:
        print(format_ssyt(gz_to_ssyt(q)))
    if args.json:
        _write_json(args.json, [format_ssyt(gz_to_ssyt(q)) for q in patterns])
    return 0


def _cmd_paths(args) -> int:
    lam = parse_partition(args.lam)
    paths = enumerate_paths(lam)
    for p in paths:
        print(f"{rank_path(p)}\t{format_path(p)}")
    if args.json:
        _write_json(
            args.json,
            [{"rank": rank_path(p), "path": format_path(p)} for p in paths],
        )
    return 0


def _cmd_wigner(args) -> int:
    mu = parse_partition(args.mu)
    mupp = parse_partition(args.mu_dprime)
    mat = reduced_wigner_matrix(mu, mupp, args.d)
    for row in mat:
        print(" ".join(_fmt_float(v) for v in row))
    if args.json:
        _write_json(
            args.json,
            {
                "mu": format_partition(mu),
                "mu_dprime": format_partition(mupp),
                "d": args.d,
                "matrix": [[float(v) for v in row] for row in mat],
            },
        )
    return 0


def _cmd_cg(args) -> int:
    lam = parse_partition(args.lam)
    block = cg_block(lam, args.d)
    print(
        f"cg_block lambda={format_partition(lam) or '0'} d={args.d}: "
        f"{block.matrix.shape[0]} x {block.matrix.shape[1]}"
    )
    if args.json:
        _write_json(args.json, block.to_json())
    return 0


def _cmd_schur(args) -> int:
    su = schur_unitary(args.n, args.d, max_dim=args.max_dim)
    print(f"schur n={args.n} d={args.d}: {su.matrix.shape[0]} x {su.matrix.shape[1]}")
    for (lam, q, p), _ in zip(su.row_labels, range(args.show_rows)):
        print(
            f"  lambda={format_partition(lam)} gz={format_ssyt(gz_to_ssyt(q))}"
            f" path={format_path(p) or '-'}"
        )
    if args.json:
        _write_json(args.json, su.to_json())
    return 0


def _cmd_verify(args) -> int:
    report = verify_report(args.n, args.d, args.trials, args.seed)
    for key in (
        "unitarity",
        "max_off_mass",
        "max_factor_residual",
        "max_q_constancy",
        "max_char_residual",
    ):
        print(f"{key:<22}{_fmt_float(report[key])}")
    print(f"{'ok':<22}{report['ok']}")
    if args.json:
        _write_json(args.json, report)
    return 0 if report["ok"] else 4


def _cmd_circuit(args) -> int:
    report = gate_count_report(args.n, args.d)
    print(f"{'step':>6}{'dim':>6}{'control_pairs':>16}{'rotation_classes':>18}")
    for st in report.steps:
        print(
            f"{st.step:>6}{st.wigner_dim:>6}{st.control_pairs:>16}"
            f"{st.rotation_classes:>18}"
        )
    print(
        f"totals: control_pairs={report.total_control_pairs} "
        f"rotation_classes={report.total_rotation_classes}"
    )
    payload = {
        "n": args.n,
        "d": args.d,
        "steps": [
            {
                "step": st.step,
                "wigner_dim": st.wigner_dim,
                "control_pairs": st.control_pairs,
                "rotation_classes": st.rotation_classes,
            }
            for st in report.steps
        ],
        "total_control_pairs": report.total_control_pairs,
        "total_rotation_classes": report.total_rotation_classes,
    }
    if args.decompose:
        su = schur_unitary(args.n, args.d, max_dim=args.max_dim)
        gl = two_level_decompose(su.matrix.astype(complex), tol=1e-10)
        print(
            f"two-level synthesis of U_Sch: {gl.rotation_count} rotations, "
            f"{len(gl.gates) - gl.rotation_count} phases"
        )
        payload["gate_list"] = gl.to_json()
    if args.json:
        _write_json(args.json, payload)
    return 0


def _cap_threads(k: int) -> None:
    """Cap matrix-construction parallelism to k threads.

    CPU affinity is the reliable lever here (BLAS pools size themselves at
    load time); the env vars cover any libraries loaded afterwards.
    """
    import os

    if k < 1:
        raise ValueError("--threads must be >= 1")
    os.environ["OMP_NUM_THREADS"] = str(k)
    os.environ["OPENBLAS_NUM_THREADS"] = str(k)
    if hasattr(os, "sched_setaffinity"):
        cpus = sorted(os.sched_getaffinity(0))
        os.sched_setaffinity(0, set(cpus[: min(k, len(cpus))]))


def _add_json(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", metavar="FILE", help="write machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurkit",
        description="Schur and Clebsch-Gordan transforms on n qudits.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        metavar="K",
        help="cap BLAS threads for matrix construction",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="table of lambda, dim_Q, dim_P over I_{d,n}")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_dims)

    p = sub.add_parser("partitions", help="list I_{d,n} in canonical order")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("gz", help="GZ patterns of Q_lambda^d as tableaux")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p.add_argument("--d", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_gz)

    p = sub.add_parser("paths", help="Young-Yamanouchi paths of P_lambda")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    _add_json(p)
    p.set_defaults(func=_cmd_paths)

    p = sub.add_parser("wigner", help="d x d reduced Wigner matrix for (mu, mu'')")
    p.add_argument("--mu", required=True, metavar="PARTS")
    p.add_argument("--mu-dprime", dest="mu_dprime", required=True, metavar="PARTS")
    p.add_argument("--d", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_wigner)

    p = sub.add_parser("cg", help="dense CG block for lambda at dimension d")
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTS")
    p.add_argument("--d", type=int, required=True)
    _add_json(p)
    p.set_defaults(func=_cmd_cg)

    p = sub.add_parser("schur", help="dense Schur transform with labeled rows")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-dim", type=int, default=4096)
    p.add_argument("--show-rows", type=int, default=0, metavar="K")
    _add_json(p)
    p.set_defaults(func=_cmd_schur)

    p = sub.add_parser("verify", help="residual report; exits 4 on breach")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    _add_json(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("circuit", help="cascade rotation census / synthesis")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--decompose", action="store_true")
    p.add_argument("--max-dim", type=int, default=4096)
    _add_json(p)
    p.set_defaults(func=_cmd_circuit)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads is not None:
        _cap_threads(args.threads)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
