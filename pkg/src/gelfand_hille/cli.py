"""Command-line front end.

Exit status: 0 success / conclusion verified, 1 counterexample or failed
self-test, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .errors import GelfandHilleError
from .gelfand import local_nilpotency_index, verify_corollary, verify_theorem
from .growth import MODES, coordinate_polynomials, orbit_norms
from .jordan import JordanSpec, assemble
from .matrix import Matrix, Vector, is_nilpotent, is_unipotent, unit_vector
from .selftest import run_selftest

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class InputError(GelfandHilleError, ValueError):
    pass


def _load_json(text_or_path: str, inline: bool):
    try:
        if inline:
            return json.loads(text_or_path)
        if text_or_path == "-":
            return json.load(sys.stdin)
        return json.loads(Path(text_or_path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read JSON from {'--spec' if inline else text_or_path}: {e}") from None


def _write(text: str, output: str | None):
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _load_instance(args) -> tuple[Matrix, Vector]:
    """Matrix from --spec or --input; vector from --vector / --e, else the last basis vector."""
    if (args.spec is None) == (args.input is None):
        raise InputError("give exactly one of --spec or --input")
    obj = _load_json(args.spec if args.spec is not None else args.input, args.spec is not None)
    vector = None
    if isinstance(obj, dict) and "blocks" in obj:
        A, _ = assemble(JordanSpec.from_json(obj))
    elif isinstance(obj, dict) and "matrix" in obj:
        A = Matrix.from_json(obj["matrix"])
        if obj.get("vector") is not None:
            vector = Vector.from_json(obj["vector"])
    elif isinstance(obj, dict) and "entries" in obj:
        A = Matrix.from_json(obj)
    else:
        raise InputError("input must be a JordanSpec, a Matrix JSON, or an object with a 'matrix' field")
    if args.vector is not None and args.e is not None:
        raise InputError("give at most one of --vector or --e")
    if args.vector is not None:
        vector = Vector.from_json(_load_json(args.vector, True))
    elif args.e is not None:
        vector = unit_vector(A.rows, args.e)
    elif vector is None:
        vector = unit_vector(A.rows, A.rows)
    if not A.is_square or vector.dim != A.rows:
        raise InputError(f"matrix {A.shape} and vector of dim {vector.dim} do not fit")
    return A, vector


def cmd_gen(args) -> int:
    if (args.spec is None) == (args.input is None):
        raise InputError("give exactly one of --spec or --input")
    obj = _load_json(args.spec if args.spec is not None else args.input, args.spec is not None)
    spec = JordanSpec.from_json(obj)
    A, S = assemble(spec)
    _write(_json_text({"spec": spec.to_json(), "matrix": A.to_json(), "conjugator": S.to_json()}), args.output)
    return EXIT_OK


def cmd_orbit(args) -> int:
    A, x = _load_instance(args)
    k_max = args.kmax if args.kmax is not None else 2 * A.rows + 5
    if k_max < 0:
        raise InputError("--kmax must be nonnegative")
    norms = orbit_norms(A, x, k_max, args.mode)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "norm_num", "norm_den", "mode"])
    for k, q in enumerate(norms):
        w.writerow([k, q.numerator, q.denominator, args.mode])
    _write(buf.getvalue(), args.output)
    return EXIT_OK


def cmd_degree(args) -> int:
    A, x = _load_instance(args)
    if args.mode:
        modes = [args.mode]
    elif is_unipotent(A):
        modes = ["forward", "inverse", "symmetric"]
    elif is_nilpotent(A):
        modes = ["cosine"]
    else:
        raise InputError("matrix is neither unipotent nor nilpotent; orbit degrees are not polynomial")
    out = {"dim": A.rows, "profiles": [coordinate_polynomials(A, x, m).to_json() for m in modes]}
    if is_unipotent(A):
        out["local_index"] = local_nilpotency_index(A, x)
    out["degrees"] = {p["mode"]: p["degree"] for p in out["profiles"]}
    _write(_json_text(out), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    A, x = _load_instance(args)
    if args.N < 1:
        raise InputError("--N must be a positive integer")
    fn = verify_theorem if args.mode == "theorem" else verify_corollary
    report = fn(A, x, args.N, args.variant)
    _write(_json_text(report.to_json()), args.output)
    return report.exit_status


def cmd_selftest(args) -> int:
    results = run_selftest(args.dmax, args.seeds, args.seed)
    lines = [r.line() for r in results]
    ok = all(r.passed for r in results)
    lines.append(
        f"selftest dmax={args.dmax} seeds={args.seeds} seed={args.seed}: "
        f"{sum(r.passed for r in results)}/{len(results)} checks passed -> {'PASS' if ok else 'FAIL'}"
    )
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


def _add_instance_args(p: argparse.ArgumentParser):
    p.add_argument("--spec", help="inline JordanSpec JSON, e.g. '{\"eigenvalue\": 1, \"blocks\": [4]}'")
    p.add_argument("--input", help="JSON file: JordanSpec, Matrix, gen output, or {matrix, vector}; '-' for stdin")
    p.add_argument("--vector", help="inline vector JSON (list of scalars or Vector JSON)")
    p.add_argument("--e", type=int, help="use the unit vector e_J (1-based); default is the last one")
    p.add_argument("--output", "-o", help="output file (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gelfand-hille",
        description="Exact growth degrees of unipotent orbits and Gelfand-Hille type checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="assemble a (conjugated) Jordan matrix from a JordanSpec")
    p.add_argument("--spec", help="inline JordanSpec JSON")
    p.add_argument("--input", help="JordanSpec JSON file ('-' for stdin)")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("orbit", help="exact orbit norms as CSV")
    _add_instance_args(p)
    p.add_argument("--mode", choices=MODES, default="symmetric")
    p.add_argument("--kmax", type=int, help="largest k (default 2*dim+5)")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("degree", help="coordinate polynomials and growth degrees")
    _add_instance_args(p)
    p.add_argument("--mode", choices=MODES)
    p.set_defaults(func=cmd_degree)

    p = sub.add_parser("verify", help="check the theorem or corollary conclusion on one instance")
    _add_instance_args(p)
    p.add_argument("--N", type=int, required=True, help="growth exponent N >= 1")
    p.add_argument("--variant", choices=("printed", "derived"), default="derived")
    p.add_argument("--mode", choices=("theorem", "corollary"), default="theorem")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="regenerate the dichotomy table and run seeded identity checks")
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--seeds", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GelfandHilleError, ValueError, KeyError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
