"""Command-line frontend.

State files are JSON objects {"matrix": [[[re, im] x4] x4]}, row-major;
counterpart output files carry a second "unitary" key in the same
encoding. Floats are written with full round-trip precision. Diagram
files are CSV with 12 significant digits and LF line endings.

Exit codes: 0 ok, 1 usage, 2 parse, 3 invalid state, 4 check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import ensemble, minimal_set, universality
from .matrix_core import (
    NonHermitianError,
    as_matrix,
    conjugate,
    hermitian_eig,
    is_density_matrix,
    partial_transpose,
)
from .measures import (
    concurrence_general,
    concurrence_x,
    eof,
    negativity_general,
    negativity_x,
    purity_general,
)
from .xstate import (
    NotXFormError,
    UnphysicalError,
    XParams,
    classify_rank,
    coeffs,
    from_density,
    is_separable,
    is_x_form,
    numerical_rank,
    to_density,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_CHECK = 4

PPT_TOL = 1e-10

SWEEP_CHECKS = ("measures", "classify", "conservation", "disentangle", "counterpart")

RANK_KIND_TARGETS = (
    "rank_1_kind_1", "rank_1_kind_2", "rank_2_kind_1", "rank_2_kind_2",
    "rank_2_kind_3", "rank_3_kind_1", "rank_3_kind_2", "rank_4_kind_1",
)


class UsageError(Exception):
    pass


class ParseError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _matrix_to_obj(m: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def _matrix_from_obj(obj) -> np.ndarray:
    if (not isinstance(obj, list) or len(obj) != 4
            or any(not isinstance(r, list) or len(r) != 4 for r in obj)):
        raise ParseError("matrix must be a 4x4 array of [re, im] pairs")
    m = np.empty((4, 4), dtype=complex)
    for i, row in enumerate(obj):
        for j, cell in enumerate(row):
            if (not isinstance(cell, list) or len(cell) != 2
                    or not all(isinstance(v, (int, float)) for v in cell)):
                raise ParseError(f"entry ({i},{j}) is not an [re, im] pair")
            m[i, j] = complex(cell[0], cell[1])
    return m


def read_state(path: str) -> np.ndarray:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise ParseError(f"{path}: missing 'matrix' key")
    return _matrix_from_obj(doc["matrix"])


def write_state(path: str, matrix: np.ndarray, unitary: np.ndarray | None = None) -> None:
    doc = {"matrix": _matrix_to_obj(matrix)}
    if unitary is not None:
        doc["unitary"] = _matrix_to_obj(unitary)
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def _require_density(m: np.ndarray) -> np.ndarray:
    ok, why = is_density_matrix(m)
    if not ok:
        raise UnphysicalError(f"not a density matrix: {why}")
    return m


def _fmt(value) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def _report(pairs) -> None:
    for key, value in pairs:
        print(f"{key}: {_fmt(value)}")


def cmd_measure(args) -> int:
    rho = _require_density(read_state(args.in_path))
    pt_floor = float(np.linalg.eigvalsh(partial_transpose(rho)).min())
    _report([
        ("purity", purity_general(rho)),
        ("concurrence", concurrence_general(rho)),
        ("entanglement_of_formation", eof(rho)),
        ("negativity", negativity_general(rho)),
        ("x_form", is_x_form(rho, tol=args.tol)),
        ("rank", numerical_rank(rho)),
        ("separable", pt_floor >= -PPT_TOL),
    ])
    return EXIT_OK


def cmd_counterpart(args) -> int:
    rho = _require_density(read_state(args.in_path))
    res = universality.counterpart_details(rho, measure=args.preserve)
    spec_in = hermitian_eig(rho).values
    spec_out = hermitian_eig(res.state).values
    write_state(args.out_path, res.state, unitary=res.unitary)
    _report([
        ("measure", res.measure),
        ("branch", res.branch),
        ("tau", res.tau),
        ("target", res.target),
        ("achieved", res.achieved),
        ("measure_delta", abs(res.achieved - res.target)),
        ("spectrum_delta", float(np.abs(spec_in - spec_out).max())),
        ("clip", res.clip),
        ("out", args.out_path),
    ])
    return EXIT_OK


def cmd_minset(args) -> int:
    rho = minimal_set.minset_state(args.purity, args.concurrence)
    if args.out_path:
        write_state(args.out_path, rho)
        print(f"out: {args.out_path}")
    else:
        json.dump({"matrix": _matrix_to_obj(rho)}, sys.stdout)
        print()
    return EXIT_OK


def cmd_classify(args) -> int:
    rho = _require_density(read_state(args.in_path))
    p = from_density(rho, tol=args.tol)
    rk = classify_rank(p, tol=args.tol)
    cf = coeffs(p)
    _report([
        ("rank", rk.rank),
        ("kind", rk.kind),
        ("separable", is_separable(p)),
        ("x", p.x),
        ("y", p.y),
        ("g_cal", cf.g_cal),
        ("h_cal", cf.h_cal),
    ])
    return EXIT_OK


def cmd_diagram(args) -> int:
    text = minimal_set.diagram_csv(args.kind, args.grid)
    if args.out_path:
        with open(args.out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(f"out: {args.out_path}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _check_measures(seed: int, tol: float) -> bool:
    p = ensemble.random_xparams(seed, "any")
    rho = to_density(p)
    return (abs(concurrence_x(rho) - concurrence_general(rho)) <= tol
            and abs(negativity_x(rho) - negativity_general(rho)) <= tol)


def _check_classify(seed: int, tol: float) -> bool:
    # rank/kind targets keep the chart tolerance and the eigenvalue
    # threshold commensurate; unconstrained corner draws do not
    p = ensemble.random_xparams(seed, RANK_KIND_TARGETS[seed % 8])
    rho = to_density(p)
    rk = classify_rank(p)
    if rk.rank != numerical_rank(rho):
        return False
    ppt = float(np.linalg.eigvalsh(partial_transpose(rho)).min()) >= -PPT_TOL
    return is_separable(p) == ppt


def _check_conservation(seed: int, tol: float) -> bool:
    rng = ensemble.SplitMix64(seed)
    p = ensemble.random_xparams(rng.next_u64(), "any")
    angles = [rng.uniform(0.0, 2.0 * np.pi) for _ in range(4)]
    q = universality.conjugate_x(p, *angles)
    a, b = coeffs(p), coeffs(q)
    direct = from_density(
        conjugate(to_density(p), universality.x_unitary(*angles)))
    return (abs(a.b_cal - b.b_cal) <= tol
            and abs(a.c_cal - b.c_cal) <= tol
            and abs((a.g_cal - p.y) - (b.g_cal - q.y)) <= tol
            and abs((a.h_cal - p.x) - (b.h_cal - q.x)) <= tol
            and abs(direct.x - q.x) <= tol and abs(direct.y - q.y) <= tol)


def _check_disentangle(seed: int, tol: float) -> bool:
    p = ensemble.random_xparams(seed, "entangled")
    sol = universality.disentangle_params(p)
    q = universality.evolve(p, sol, 1.0).params
    rho = to_density(q)
    ppt = float(np.linalg.eigvalsh(partial_transpose(rho)).min()) >= -PPT_TOL
    return is_separable(q) and ppt


def _check_counterpart(seed: int, tol: float) -> bool:
    rho = ensemble.random_density(seed)
    spec_in = hermitian_eig(rho).values
    for measure in ("concurrence", "negativity"):
        out, _ = universality.x_counterpart(rho, measure)
        if not is_x_form(out, tol=1e-9):
            return False
        if float(np.abs(hermitian_eig(out).values - spec_in).max()) > 1e-9:
            return False
        if measure == "concurrence":
            delta = abs(concurrence_general(out) - concurrence_general(rho))
        else:
            delta = abs(negativity_general(out) - negativity_general(rho))
        if delta > 1e-9:
            return False
    return True


_CHECK_FNS = {
    "measures": _check_measures,
    "classify": _check_classify,
    "conservation": _check_conservation,
    "disentangle": _check_disentangle,
    "counterpart": _check_counterpart,
}


def cmd_sweep(args) -> int:
    unknown = [c for c in args.checks if c != "all" and c not in SWEEP_CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s) {unknown}; pick from {SWEEP_CHECKS}")
    names = list(SWEEP_CHECKS) if "all" in args.checks else list(args.checks)
    failures = 0
    for name in names:
        fn = _CHECK_FNS[name]
        for i in range(args.count):
            child = ensemble.child_seed(args.seed, i)
            try:
                ok = fn(child, args.tol)
            except Exception as exc:
                print(f"FAIL {name} seed={child}: {exc!r}")
                failures += 1
                continue
            if not ok:
                print(f"FAIL {name} seed={child}")
                failures += 1
        if failures == 0:
            print(f"ok {name} (count={args.count})")
    if failures:
        print(f"{failures} failure(s)")
        return EXIT_CHECK
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="xtangle",
                     description="Two-qubit X-state measures and conversions")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_in(p):
        p.add_argument("--in", dest="in_path", required=True, metavar="FILE")

    def add_tol(p):
        p.add_argument("--tol", type=float, default=1e-9)

    p = sub.add_parser("measure", help="entanglement report for a state file")
    add_in(p)
    add_tol(p)
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("counterpart", help="X-counterpart of a state")
    add_in(p)
    p.add_argument("--preserve", choices=("concurrence", "negativity"),
                   default="concurrence")
    p.add_argument("--out", dest="out_path", required=True, metavar="FILE")
    add_tol(p)
    p.set_defaults(fn=cmd_counterpart)

    p = sub.add_parser("minset", help="minimal-set member for (purity, concurrence)")
    p.add_argument("--purity", type=float, required=True)
    p.add_argument("--concurrence", type=float, required=True)
    p.add_argument("--out", dest="out_path", metavar="FILE")
    p.set_defaults(fn=cmd_minset)

    p = sub.add_parser("classify", help="rank/kind classification of an X-state")
    add_in(p)
    add_tol(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("diagram", help="emit diagram CSV data")
    p.add_argument("--kind", choices=("cp", "negativity_purity"), default="cp")
    p.add_argument("--grid", type=int, default=40)
    p.add_argument("--out", dest="out_path", metavar="FILE")
    p.set_defaults(fn=cmd_diagram)

    p = sub.add_parser("sweep", help="randomized invariant checks")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    add_tol(p)
    p.add_argument("checks", nargs="*", default=["all"], metavar="CHECK")
    p.set_defaults(fn=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (UnphysicalError, NotXFormError, NonHermitianError,
            minimal_set.DomainError, minimal_set.OutOfDiagramError,
            universality.TargetOutOfRangeError) as exc:
        print(f"invalid state: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"invalid state: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
