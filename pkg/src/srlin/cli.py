"""Command line interface.

    srlin {betti|linpart|lindef|cwl|oracle|polarize|random} --input FILE
          [--char P] [--dot] [--format json|csv] [--jobs N] [--seed S]

Exit codes: 0 success, 2 bad input, 3 internal check failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time

import numpy as np

from . import linalg
from .corpus import random_complex
from .defect import froberg_lindef, is_componentwise_linear, linearity_defect_ideal
from .linear_part import betti_table, build_linear_part
from .oracle import ResolutionError, check_nonsquarefree_degrees, cross_validate, minimal_free_resolution, nu_report
from .simplicial import (
    MonomialIdeal,
    SimplicialComplex,
    complex_from_facets,
    complex_from_ideal,
    ideal_from_complex,
    label,
    members,
    monomial_ideal,
    polarize,
    sort_key,
)

EXIT_OK, EXIT_SCHEMA, EXIT_INTERNAL = 0, 2, 3

COMMANDS = ("betti", "linpart", "lindef", "cwl", "oracle", "polarize", "random")


class SchemaError(ValueError):
    pass


class Instance:
    """A parsed input document."""

    def __init__(self, complex: SimplicialComplex, ideal: MonomialIdeal | None, polarization, p: int | None):
        self.complex = complex
        self.ideal = ideal
        self.polarization = polarization
        self.p = p


def parse_document(doc) -> Instance:
    if not isinstance(doc, dict):
        raise SchemaError("input must be a JSON object")
    unknown = set(doc) - {"n", "facets", "generators", "p"}
    if unknown:
        raise SchemaError(f"unknown keys {sorted(unknown)}")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise SchemaError("'n' must be a non-negative integer")
    if ("facets" in doc) == ("generators" in doc):
        raise SchemaError("exactly one of 'facets' and 'generators' is required")
    p = doc.get("p")
    if p is not None:
        if not isinstance(p, int) or not linalg.is_prime(p) or p >= 2**31:
            raise SchemaError(f"'p' must be a prime below 2^31, got {p!r}")
    try:
        if "facets" in doc:
            facets = doc["facets"]
            if not isinstance(facets, list) or not all(
                isinstance(f, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in f) for f in facets
            ):
                raise SchemaError("'facets' must be a list of vertex lists")
            if any(v < 1 or v > n for f in facets for v in f):
                raise SchemaError(f"facet vertices must lie in 1..{n}")
            D = complex_from_facets(n, facets)
            if D.is_void:
                raise SchemaError("the void complex (no faces) has no Stanley-Reisner ideal")
            return Instance(D, None, None, p)
        gens = doc["generators"]
        if not isinstance(gens, list) or not all(
            isinstance(g, list) and len(g) == n and all(isinstance(e, int) and not isinstance(e, bool) and e >= 0 for e in g)
            for g in gens
        ):
            raise SchemaError(f"'generators' must be a list of length-{n} exponent vectors")
        I = monomial_ideal(n, gens)
        if any(sum(g) == 0 for g in I.generators):
            raise SchemaError("the unit ideal has no Stanley-Reisner complex")
        pol = None
        J = I
        if not I.squarefree:
            J, pol = polarize(I)
        return Instance(complex_from_ideal(J), I, pol, p)
    except SchemaError:
        raise
    except ValueError as e:
        raise SchemaError(str(e)) from e


def load_input(path: str) -> Instance:
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise SchemaError(f"cannot read input: {e}") from e
    return parse_document(doc)


def complex_document(D: SimplicialComplex) -> dict:
    return {"n": D.n, "facets": [list(members(f)) for f in D.facets]}


def _default(o):
    if isinstance(o, np.integer):
        return int(o)
    if isinstance(o, np.ndarray):
        return o.tolist()
    raise TypeError(f"cannot serialize {type(o).__name__}")


def _format(obj, depth: int) -> str:
    # lists of scalars stay on one line
    pad = "  " * (depth + 1)
    if isinstance(obj, dict) and obj:
        body = ",\n".join(f"{pad}{json.dumps(k)}: {_format(v, depth + 1)}" for k, v in obj.items())
        return "{\n" + body + "\n" + "  " * depth + "}"
    if isinstance(obj, (list, tuple)) and any(isinstance(x, (dict, list, tuple)) for x in obj):
        body = ",\n".join(pad + _format(x, depth + 1) for x in obj)
        return "[\n" + body + "\n" + "  " * depth + "]"
    return json.dumps(obj, default=_default)


def dumps(obj) -> str:
    return _format(obj, 0) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands; each returns the text written to stdout


def cmd_betti(inst: Instance, p: int, args) -> tuple[dict, str | None]:
    T = betti_table(inst.complex, p, args.jobs)
    if args.format == "csv":
        rows = [
            (i, label(U), b)
            for (i, U), b in sorted(T.entries.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1])))
        ]
        return {}, _csv(("i", "U", "beta"), rows)
    return T.to_json(), None


def cmd_linpart(inst: Instance, p: int, args) -> tuple[dict, str | None]:
    LP = build_linear_part(inst.complex, p, args.jobs)
    if args.dot:
        return {}, LP.to_dot()
    return LP.to_json(), None


def cmd_lindef(inst: Instance, p: int, args) -> tuple[dict, str | None]:
    D = inst.complex
    rep = linearity_defect_ideal(D, p, args.jobs)
    if args.format == "csv":
        rows = [
            (i, label(U), k)
            for (i, U), k in sorted(rep.per_position.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1])))
        ]
        return {}, _csv(("i", "U", "kernel_dim"), rows)
    out = {"ld_ideal": rep.ld_ideal, **rep.to_json(), "zero_ideal": rep.zero_ideal}
    if D.dim <= 1 and D.vertex_mask == (1 << D.n) - 1:
        value, agrees = froberg_lindef(D, p)
        out["froberg"] = value
        out["froberg_agrees"] = agrees
        if not agrees:
            raise AssertionError(f"induced-cycle formula gives {value}, cohomology gives {rep.ld_ideal}")
    return out, None


def cmd_cwl(inst: Instance, p: int, args) -> tuple[dict, str | None]:
    return is_componentwise_linear(inst.complex, p, args.jobs).to_json(), None


def cmd_oracle(inst: Instance, p: int, args) -> tuple[dict, str | None]:
    D = inst.complex
    R = minimal_free_resolution(D, p, args.max_step)
    out = {"resolution": R.to_json(), "nu": nu_report(R).to_json()}
    if args.verify:
        checks = cross_validate(D, p, R)
        checks["nonsquarefree_degrees"] = [] if check_nonsquarefree_degrees(D, R) else ["missed syzygy"]
        out["verify"] = {name: len(bad) == 0 for name, bad in checks.items()}
        if not all(out["verify"].values()):
            raise AssertionError(f"cross-validation failed: {checks}")
    return out, None


def cmd_polarize(inst: Instance, p: int, args) -> tuple[dict, str | None]:
    I = inst.ideal if inst.ideal is not None else ideal_from_complex(inst.complex)
    J, names = polarize(I)
    return {
        "n": J.n,
        "generators": [list(g) for g in J.generators],
        "map": [{"variable": k + 1, "original": v, "slot": s} for k, (v, s) in enumerate(names)],
    }, None


HANDLERS = {
    "betti": cmd_betti,
    "linpart": cmd_linpart,
    "lindef": cmd_lindef,
    "cwl": cmd_cwl,
    "oracle": cmd_oracle,
    "polarize": cmd_polarize,
}


def cmd_random(args) -> str:
    if args.n is None or args.seed is None:
        raise SchemaError("random needs --n and --seed")
    if not 0 <= args.face_prob <= 1:
        raise SchemaError("--face-prob must lie in [0, 1]")
    rng = random.Random(args.seed)
    lines = []
    for _ in range(args.count):
        D = random_complex(args.n, args.face_prob, rng)
        lines.append(json.dumps(complex_document(D)))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="srlin", description="Linear parts, Betti numbers and linearity defects of Stanley-Reisner ideals.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--input", "-i", help="JSON input document ('-' for stdin)")
    ap.add_argument("--char", type=int, default=None, help=f"field characteristic (default {linalg.DEFAULT_PRIME})")
    ap.add_argument("--dot", action="store_true", help="linpart: emit Graphviz DOT")
    ap.add_argument("--format", choices=("json", "csv"), default="json")
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--seed", type=int)
    ap.add_argument("--n", type=int, help="random: number of vertices")
    ap.add_argument("--face-prob", type=float, default=0.5)
    ap.add_argument("--count", type=int, default=1)
    ap.add_argument("--max-step", type=int, default=None)
    ap.add_argument("--verify", action="store_true", help="oracle: run all cross-checks")
    ap.add_argument("--timing", action="store_true", help="include wall time (output is then not reproducible)")
    return ap


def run(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "random":
            stdout.write(cmd_random(args))
            return EXIT_OK
        if args.input is None:
            raise SchemaError(f"{args.command} needs --input")
        if args.format == "csv" and args.command not in ("betti", "lindef"):
            raise SchemaError("--format csv is only available for betti and lindef")
        if args.jobs < 1:
            raise SchemaError("--jobs must be positive")
        inst = load_input(args.input)
        p = args.char if args.char is not None else (inst.p or linalg.DEFAULT_PRIME)
        try:
            linalg.GF(p)
        except ValueError as e:
            raise SchemaError(str(e)) from e
        t0 = time.perf_counter()
        result, text = HANDLERS[args.command](inst, p, args)
        elapsed = time.perf_counter() - t0
    except SchemaError as e:
        print(f"srlin: {e}", file=sys.stderr)
        return EXIT_SCHEMA
    except (AssertionError, ResolutionError) as e:
        print(f"srlin: internal check failed: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    if text is not None:
        stdout.write(text)
        return EXIT_OK
    report = {"command": args.command, "p": p, "input": complex_document(inst.complex)}
    if inst.polarization is not None:
        report["polarization"] = [{"variable": k + 1, "original": v, "slot": s} for k, (v, s) in enumerate(inst.polarization)]
    if args.timing:
        report["seconds"] = round(elapsed, 6)
    report["result"] = result
    stdout.write(dumps(report))
    return EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
