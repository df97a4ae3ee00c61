"""Command-line front end.

Every command reads one JSON document (``--input PATH``, ``--input -`` for
stdin, or the document itself inline) and prints one report.  Exit codes:
0 when the question was decided, 2 when a resource cap left it undecided,
1 for malformed input or a violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import pit as pitmod
from . import serialize as ser
from . import sg
from .errors import PreconditionError, ResourceLimitExceeded
from .polyring.groebner import DEFAULT_MAX_PAIRS, DEFAULT_MAX_TERMS, Budget
from .polyring.radical import radical_query
from .qcore import joint_minimal_space, span_dimension
from .structure import Instance, PlaneWitness, ReducibleWitness, classify, make_instance

EXIT_DECIDED = 0
EXIT_INPUT_ERROR = 1
EXIT_UNDECIDED = 2


class InputError(PreconditionError):
    """Malformed command-line input."""


@dataclass
class JobSpec:
    command: str
    input: str | None = None
    seed: int = 0
    max_terms: int = DEFAULT_MAX_TERMS
    max_pairs: int = DEFAULT_MAX_PAIRS
    format: str = "json"
    oracle: bool = True
    options: dict = field(default_factory=dict)

    def budget(self) -> Budget:
        return Budget(max_pairs=self.max_pairs, max_terms=self.max_terms)


# --------------------------------------------------------------------------
# documents


def load_document(source: str | None, stdin=None) -> dict:
    if source is None:
        raise InputError("this command needs --input")
    try:
        if source == "-":
            text = (stdin or sys.stdin).read()
        elif source.lstrip().startswith("{"):
            text = source
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read input: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("the input must be a JSON object")
    return doc


def _names(doc: dict):
    names = doc.get("variables")
    if names is not None and not (isinstance(names, list) and all(isinstance(x, str) for x in names)):
        raise InputError("'variables' must be a list of names")
    return names


def _field(doc: dict, key: str):
    if key not in doc:
        raise InputError(f"missing field {key!r}")
    return doc[key]


def _quadratics(doc: dict, key: str) -> list:
    names = _names(doc)
    values = _field(doc, key)
    if not isinstance(values, list):
        raise InputError(f"{key!r} must be a list")
    return [ser.decode_quadratic(v, names) for v in values]


def instance_document(inst: Instance) -> dict:
    """JSON document for a generated structure instance; ``classify`` accepts it as is."""
    return {
        "kind": "structure-instance",
        "case": inst.case,
        "seed": inst.seed,
        "n": inst.n,
        "A": ser.encode(inst.a),
        "B": ser.encode(inst.b),
        "Q": ser.encode(list(inst.qs)),
        "expected": ser.encode(inst.expected),
        "forms": ser.encode(inst.forms),
    }


def parse_instance(doc: dict) -> Instance:
    """Inverse of :func:`instance_document`."""
    a = ser.decode_quadratic(_field(doc, "A"))
    b = ser.decode_quadratic(_field(doc, "B"))
    qs = tuple(_quadratics(doc, "Q"))
    case = _field(doc, "case")
    exp = _field(doc, "expected")
    if case == "ii":
        factors = exp.get("factors")
        expected: Any = ReducibleWitness(
            ser.decode_scalar(exp["alpha"]),
            ser.decode_scalar(exp["beta"]),
            tuple(ser.decode_linear(f) for f in factors) if factors else None,
            tuple(ser.decode_scalar(c) for c in exp["certificate"]) if exp.get("certificate") else None,
        )
    elif case == "iii":
        expected = PlaneWitness(ser.decode_linear(exp["a"]), ser.decode_linear(exp["b"]), None)
    else:
        raise InputError(f"unknown case {case!r}")
    forms = {k: ser.decode_linear(v) for k, v in doc.get("forms", {}).items()}
    return Instance(case, a, b, qs, expected, int(doc["seed"]), int(doc["n"]), forms)


def circuit_document(c: pitmod.Circuit, seed: int | None = None, zero: bool | None = None) -> dict:
    doc: dict = {"kind": "circuit", "n": c.n, "gates": [ser.encode(list(g)) for g in c.gates]}
    if seed is not None:
        doc["seed"] = seed
    if zero is not None:
        doc["zero"] = zero
    return doc


def parse_circuit(doc: dict) -> pitmod.Circuit:
    names = _names(doc)
    gates = _field(doc, "gates")
    if not isinstance(gates, list):
        raise InputError("'gates' must be a list of lists")
    parsed = tuple(tuple(ser.decode_quadratic(q, names) for q in g) for g in gates)
    n = doc.get("n")
    if n is None:
        if not parsed or not parsed[0]:
            raise InputError("cannot infer n from an empty circuit")
        n = parsed[0][0].n
    return pitmod.Circuit(int(n), parsed)


# --------------------------------------------------------------------------
# commands


def cmd_classify(job: JobSpec, doc: dict) -> tuple[int, dict]:
    names = _names(doc)
    a = ser.decode_quadratic(_field(doc, "A"), names)
    b = ser.decode_quadratic(_field(doc, "B"), names)
    qs = _quadratics(doc, "Q")
    rep = classify(a, b, qs, check_oracle=job.oracle, budget=job.budget(), check_vanishing=job.oracle)
    out = ser.encode(rep)
    out["cases"] = rep.cases()
    return EXIT_DECIDED, out


def cmd_radical(job: JobSpec, doc: dict) -> tuple[int, dict]:
    names = _names(doc)
    f = ser.decode_poly(_field(doc, "f"), names)
    gens = [ser.decode_poly(g, names) for g in _field(doc, "gens")]
    ans = radical_query(f, gens, job.budget())
    return EXIT_DECIDED, {"member": ans.member, "method": ans.method, "pairs_processed": ans.pairs_processed}


def cmd_sg_verify(job: JobSpec, doc: dict) -> tuple[int, dict]:
    if "forms" in doc:
        qs = _quadratics(doc, "forms")
        rep = sg.check_main_condition(qs, use_gupta=bool(doc.get("gupta", False)), budget=job.budget())
        code = EXIT_UNDECIDED if rep.condition_holds is None else EXIT_DECIDED
        return code, ser.encode(rep)
    if "sets" in doc:
        sets = doc["sets"]
        if not isinstance(sets, list) or len(sets) != 3:
            raise InputError("'sets' must hold three point lists")
        parsed = [[[ser.decode_scalar(x) for x in p] for p in s] for s in sets]
        dim = sg.config_dimension([p for s in parsed for p in s])
        return EXIT_DECIDED, {"ek": sg.check_ek(*parsed), "dimension": dim}
    if "points" in doc:
        pts = [[ser.decode_scalar(x) for x in p] for p in doc["points"]]
        out: dict = {"dimension": sg.config_dimension(pts)}
        out["sg"] = sg.check_sg_linear(pts) if len(pts) >= 3 else None
        out["delta"] = ser.encode(sg.check_delta_sg(pts, "all"))
        out["delta_others"] = ser.encode(sg.check_delta_sg(pts, "others"))
        return EXIT_DECIDED, out
    raise InputError("sg-verify needs 'forms', 'sets' or 'points'")


def cmd_dim(job: JobSpec, doc: dict) -> tuple[int, dict]:
    qs = _quadratics(doc, "forms")
    if not qs:
        raise InputError("'forms' is empty")
    ms = joint_minimal_space(qs)
    return EXIT_DECIDED, {
        "span_dimension": span_dimension(qs),
        "minimal_space_dimension": ms.dim,
        "minimal_space": ser.encode(ms),
        "rank_s": [q.rank_s() for q in qs],
    }


def cmd_pit(job: JobSpec, doc: dict) -> tuple[int, dict]:
    c = parse_circuit(doc)
    trials = int(job.options.get("trials", 10))
    out: dict = {"seed": job.seed}
    sz = pitmod.schwartz_zippel_test(c, trials, job.seed)
    out["schwartz_zippel"] = ser.encode(sz)
    red = pitmod.variable_reduction(c)
    out["delta"] = red.delta
    out["transform"] = ser.encode(red.transform)
    zero = pitmod.expand_zero_test(red.circuit, job.max_terms)
    out["zero"] = zero
    if zero and len(c.gates) == 3 and job.oracle:
        rep = pitmod.gate_radical_report(c, job.budget())
        out["gate_radical_report"] = ser.encode(rep)
    return EXIT_DECIDED, out


def cmd_generate(job: JobSpec, doc: dict | None) -> tuple[int, dict]:
    opts = job.options
    case = opts.get("case")
    n = opts.get("n")
    if case in ("ii", "iii"):
        inst = make_instance(case, int(n or 6), job.seed)
        return EXIT_DECIDED, instance_document(inst)
    if case in ("circuit", "zero-circuit"):
        d = int(opts.get("d") or 2)
        zero = case == "zero-circuit"
        c = pitmod.random_circuit(int(n or 4), d, job.seed, zero=zero)
        return EXIT_DECIDED, circuit_document(c, job.seed, zero)
    if case == "qo":
        from .qcore import QuadraticForm

        nn = int(n or 6)
        if nn < 2:
            raise InputError("qo families need n >= 2")
        names = [f"x{i + 1}" for i in range(nn)]
        q_o = QuadraticForm.parse(" + ".join(f"{names[i]}*{names[i + 1]}" for i in range(0, nn - 1, 2)), names)
        fam = sg.make_qo_dominated(q_o, int(opts.get("m1") or 8), int(opts.get("m2") or 1), job.seed)
        return EXIT_DECIDED, {
            "kind": "qo-family",
            "seed": job.seed,
            "q_o": ser.encode(q_o),
            "forms": ser.encode(list(fam.forms)),
            "clauses": ser.encode(fam.clauses),
        }
    raise InputError("generate needs --case ii, iii, circuit, zero-circuit or qo")


HANDLERS = {
    "classify": cmd_classify,
    "radical": cmd_radical,
    "sg-verify": cmd_sg_verify,
    "dim": cmd_dim,
    "pit": cmd_pit,
}


def run(job: JobSpec, stdin=None) -> tuple[int, dict]:
    """Execute one job; returns the exit code and the report."""
    try:
        if job.command == "generate":
            code, report = cmd_generate(job, None)
        elif job.command in HANDLERS:
            doc = load_document(job.input, stdin)
            code, report = HANDLERS[job.command](job, doc)
        else:
            raise InputError(f"unknown command {job.command!r}")
    except ResourceLimitExceeded as exc:
        return EXIT_UNDECIDED, {"command": job.command, "status": "undecided", "reason": str(exc)}
    except (PreconditionError, KeyError, TypeError, ValueError) as exc:
        return EXIT_INPUT_ERROR, {"command": job.command, "status": "error", "reason": str(exc)}
    report.setdefault("command", job.command)
    report.setdefault("status", "decided" if code == EXIT_DECIDED else "undecided")
    return code, report


def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)
    lines = []
    for key in sorted(report):
        value = report[key]
        text = value if isinstance(value, str) else json.dumps(value, sort_keys=True, ensure_ascii=False)
        lines.append(f"{key}: {text}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="JSON file, '-' for stdin, or an inline JSON object")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-terms", type=int, default=DEFAULT_MAX_TERMS)
    common.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
    common.add_argument("--format", choices=("json", "human"), default="json")
    common.add_argument("--oracle", choices=("on", "off"), default="on")

    parser = argparse.ArgumentParser(prog="quadsg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common], help="structural cases for (A, B, Q_1..Q_m)")
    sub.add_parser("radical", parents=[common], help="radical membership f in sqrt(<gens>)")
    sub.add_parser("sg-verify", parents=[common], help="Sylvester-Gallai style conditions")
    sub.add_parser("dim", parents=[common], help="span and minimal-space dimensions")
    p = sub.add_parser("pit", parents=[common], help="zero testing for circuits")
    p.add_argument("--trials", type=int, default=10)
    g = sub.add_parser("generate", parents=[common], help="seeded instances")
    g.add_argument("--case", required=True, choices=("ii", "iii", "circuit", "zero-circuit", "qo"))
    g.add_argument("--n", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--m1", type=int)
    g.add_argument("--m2", type=int)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    options = {k: getattr(args, k) for k in ("trials", "case", "n", "d", "m1", "m2") if hasattr(args, k)}
    job = JobSpec(
        command=args.command,
        input=args.input,
        seed=args.seed,
        max_terms=args.max_terms,
        max_pairs=args.max_pairs,
        format=args.format,
        oracle=args.oracle == "on",
        options=options,
    )
    code, report = run(job)
    if code == EXIT_INPUT_ERROR:
        print(f"quadsg: {report['reason']}", file=sys.stderr)
    sys.stdout.write(render(report, job.format) + "\n")
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
