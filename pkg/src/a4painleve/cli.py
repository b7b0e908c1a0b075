"""Command-line front end.

Every invocation prints one document. With --format structured (the default)
that is a JSON object {status, payload, diagnostics}; --format text prints a
human summary instead. Exit codes: 0 ok, 1 no solution or failed
verification, 2 parse or contract error, 3 inconclusive (a cap was hit).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .backlund import (
    apply_word_params,
    check_weyl_relations,
    format_word,
    parse_word,
    random_params,
    transport,
)
from .classifier import ReductionError, WordCapExceeded, classify, necessary_condition, reduce_to_canonical
from .constructor import Inconclusive, audit_solution, construct_with_word
from .exact import DegreeCapExceeded, ParseError
from .hamiltonian import (
    emit_tables,
    format_table,
    h_inf_minus1,
    hamiltonian_expansion,
    hhat,
    residue_balance,
)
from .laurent import InfinityType, TaxonomyError, classify_infinity, recurrence_expand
from .system import N, ConstraintError, ParamVec, SolutionTuple, verify_solution

EXIT = {"ok": 0, "no_solution": 1, "failed": 1, "error": 2, "inconclusive": 3}


class Outcome:
    def __init__(self, status: str, payload: dict | None = None, text: str = "",
                 diagnostics: list[str] | None = None):
        self.status = status
        self.payload = payload or {}
        self.text = text
        self.diagnostics = diagnostics or []

    def envelope(self) -> dict:
        # verification failures are reported as errors in the envelope, exit 1
        status = "error" if self.status == "failed" else self.status
        return {"status": status, "payload": self.payload, "diagnostics": self.diagnostics}


def _q(x: Fraction) -> str:
    return str(Fraction(x))


def _vec(xs) -> list[str]:
    return [_q(x) for x in xs]


def _params(args) -> ParamVec:
    if args.alpha is None:
        raise ConstraintError("--alpha is required")
    return ParamVec.parse(args.alpha)


# -- subcommands ---------------------------------------------------------------------

def cmd_classify(args) -> Outcome:
    params = _params(args)
    res = classify(params)
    pattern = necessary_condition(params)
    payload = {
        "alpha": _vec(params),
        "label": res.label,
        "necessary_pattern": None if pattern is None else
        {"type": pattern.kind, "index": pattern.index, "n": list(pattern.ns)},
        "witness": None,
        "canonical": None if res.canonical is None else _vec(res.canonical),
        "word": None if res.word_from_canonical is None else format_word(res.word_from_canonical),
    }
    if res.witness is not None:
        w = res.witness
        payload["witness"] = {"index": w.index, "sign": w.sign, "j": w.j, "vector": _vec(w.vector)}
    if res.label is None:
        return Outcome("no_solution", payload, f"{params}: no rational solution")
    text = f"{params}: {res.label}"
    if res.witness is not None:
        text += f" (i={res.witness.index}, " + (
            f"sign={'+' if res.witness.sign > 0 else '-'}" if res.witness.sign else f"j={res.witness.j}"
        ) + f", vector {tuple(_vec(res.witness.vector))})"
    text += f"\ncanonical {res.canonical}\nword: {format_word(res.word_from_canonical) or '(empty)'}"
    return Outcome("ok", payload, text)


def cmd_reduce(args) -> Outcome:
    params = _params(args)
    word, canonical = reduce_to_canonical(params)
    payload = {"alpha": _vec(params), "canonical": _vec(canonical), "word": format_word(word)}
    return Outcome("ok", payload, f"canonical {canonical}\nword: {format_word(word) or '(empty)'}")


def cmd_construct(args) -> Outcome:
    params = _params(args)
    built = construct_with_word(params)
    if built is None:
        return Outcome("no_solution", {"alpha": _vec(params)}, f"{params}: no rational solution")
    sol = built.solution
    payload = {
        "alpha": _vec(params),
        "label": built.label,
        "word": format_word(built.word),
        "route": built.route,
        "f": [str(c) for c in sol],
    }
    return Outcome("ok", payload, str(sol))


def _solution_args(args) -> tuple[ParamVec, SolutionTuple]:
    if args.from_json is not None:
        raw = sys.stdin.read() if args.from_json == "-" else open(args.from_json).read()
        doc = json.loads(raw)
        doc = doc.get("payload", doc)
        alpha = args.alpha if args.alpha is not None else ",".join(doc["alpha"])
        return ParamVec.parse(alpha), SolutionTuple(doc["f"])
    comps = [getattr(args, f"f{i}") for i in range(N)]
    if any(c is None for c in comps):
        raise ConstraintError("give all of --f0 .. --f4, or --from-json")
    return _params(args), SolutionTuple(comps)


def cmd_verify(args) -> Outcome:
    params, sol = _solution_args(args)
    report = verify_solution(sol, params)
    payload = {
        "alpha": _vec(params),
        "f": [str(c) for c in sol],
        "residuals": [str(r) for r in report.residuals],
        "ok": report.ok,
    }
    lines = [f"equation {i}: residual {r}" for i, r in enumerate(report.residuals)]
    lines.append("all residuals vanish" if report.ok else "verification FAILED")
    return Outcome("ok" if report.ok else "failed", payload, "\n".join(lines), report.failures)


def cmd_expand(args) -> Outcome:
    params = _params(args)
    if args.type:
        kind = InfinityType.parse(args.type)
    else:
        built = construct_with_word(params)
        if built is None:
            return Outcome("no_solution", {"alpha": _vec(params)},
                           f"{params}: no rational solution; pass --type to expand formally")
        kind = classify_infinity(built.solution)
    series = recurrence_expand(kind, params, args.floor)
    comps = []
    lines = [f"type {kind}, exponents 1 down to {args.floor}"]
    for j, s in enumerate(series):
        coeffs = {str(k): _q(s[k]) for k in range(1, args.floor - 1, -1)}
        comps.append(coeffs)
        terms = [f"{v}*t^{k}" for k, v in coeffs.items() if v != "0"]
        lines.append(f"f{j} ~ " + (" + ".join(terms) if terms else "0"))
    payload = {"alpha": _vec(params), "type": str(kind), "floor": args.floor, "coefficients": comps}
    return Outcome("ok", payload, "\n".join(lines))


def cmd_hamiltonian(args) -> Outcome:
    params = _params(args)
    built = construct_with_word(params)
    if built is None:
        return Outcome("no_solution", {"alpha": _vec(params)}, f"{params}: no rational solution")
    sol = built.solution
    kind = classify_infinity(sol)
    exp = hamiltonian_expansion(sol)
    balance = residue_balance(sol)
    closed = h_inf_minus1(kind, params)
    payload = {
        "alpha": _vec(params),
        "hhat": str(hhat(sol)),
        "type_at_infinity": str(kind),
        "h3": _q(exp.h3), "h1": _q(exp.h1), "h_minus1": _q(exp.hm1),
        "h_minus1_closed_form": _q(closed),
        "odd": exp.odd,
        "finite_residue_sum": _q(balance.finite_sum),
        "balance_ok": balance.ok,
        "contributions": [{"factor": p, "multiplicity": m, "residue_sum": _q(s)}
                          for p, m, s in balance.contributions],
    }
    text = (f"Hhat = {payload['hhat']}\ntype at infinity {kind}\n"
            f"h3 = {exp.h3}, h1 = {exp.h1}, h_-1 = {exp.hm1} (closed form {closed})\n"
            f"finite residues sum to {balance.finite_sum}: balance {'ok' if balance.ok else 'FAILED'}")
    status = "ok" if balance.ok and closed == exp.hm1 else "failed"
    return Outcome(status, payload, text)


def cmd_tables(args) -> Outcome:
    t1, t2 = emit_tables()

    def grid(rows):
        return [{"pattern": label, "values": _vec(vals)} for label, vals in rows]

    payload = {"table1": {"alpha": ["1/3", "1/3", "1/3", "0", "0"], "rows": grid(t1)},
               "table2": {"alpha": ["1", "0", "0", "0", "0"], "rows": grid(t2)}}
    text = (format_table(t1, "alpha = (1/3, 1/3, 1/3, 0, 0)") + "\n\n"
            + format_table(t2, "alpha = (1, 0, 0, 0, 0)"))
    return Outcome("ok", payload, text)


def cmd_relations(args) -> Outcome:
    rng = random.Random(args.seed)
    samples = [random_params(rng) for _ in range(args.samples)]
    report = check_weyl_relations(samples)
    payload = {"samples": args.samples, "checked": report.checked,
               "violations": report.violations, "ok": report.ok}
    text = f"{report.checked} relation checks over {args.samples} samples: " + (
        "all hold" if report.ok else f"{len(report.violations)} violations")
    return Outcome("ok" if report.ok else "failed", payload, text, report.violations[:20])


def cmd_apply(args) -> Outcome:
    word = parse_word(args.word)
    params = _params(args)
    comps = [getattr(args, f"f{i}") for i in range(N)]
    if all(c is None for c in comps):
        out = apply_word_params(word, params)
        payload = {"alpha": _vec(out), "word": format_word(word)}
        return Outcome("ok", payload, str(out))
    if any(c is None for c in comps):
        raise ConstraintError("give all of --f0 .. --f4 or none")
    moved = transport(word, params, SolutionTuple(comps))
    payload = {"alpha": _vec(moved.params), "f": [str(c) for c in moved.sol],
               "word": format_word(word), "degenerate_steps": moved.degenerate_steps}
    diags = [f"s_i at position {k} met f_i = 0 and acted as the identity"
             for k in moved.degenerate_steps]
    return Outcome("ok", payload, f"{moved.params}\n{moved.sol}", diags)


def cmd_audit(args) -> Outcome:
    params = _params(args)
    built = construct_with_word(params)
    if built is None:
        return Outcome("no_solution", {"alpha": _vec(params)}, f"{params}: no rational solution")
    report = audit_solution(built.solution, params, args.floor)
    payload = {"alpha": _vec(params), "f": [str(c) for c in built.solution],
               "checks": report.checks, "details": report.details}
    lines = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in report.checks.items()]
    diags = [f"{k}: {m}" for k, ms in report.details.items() for m in ms]
    return Outcome("ok" if report.ok else "failed", payload, "\n".join(lines), diags)


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="a4painleve", description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("structured", "text"), default="structured")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, alpha=True):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("structured", "text"), default=argparse.SUPPRESS)
        if alpha:
            p.add_argument("--alpha", help='five rationals "a0,a1,a2,a3,a4" summing to 1')
        return p

    add("classify", cmd_classify, "decide existence and name the class")
    add("reduce", cmd_reduce, "word from a box point to the parameters")
    add("construct", cmd_construct, "build the rational solution")
    p = add("verify", cmd_verify, "substitute a tuple into the system")
    for i in range(N):
        p.add_argument(f"--f{i}")
    p.add_argument("--from-json", metavar="PATH", help="construct output (or '-' for stdin)")
    p = add("expand", cmd_expand, "formal expansion at infinity")
    p.add_argument("--type", help="A1:i, A2:i, B:i or C; default: type of the constructed solution")
    p.add_argument("--floor", type=int, default=-12)
    add("hamiltonian", cmd_hamiltonian, "Hhat, its 1/t coefficient and the residue balance")
    add("tables", cmd_tables, "finite residue tables at the two sample points", alpha=False)
    p = add("relations", cmd_relations, "check group relations on random parameters", alpha=False)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p = add("apply", cmd_apply, "apply a word to parameters, or to a solution with --f0..--f4")
    p.add_argument("--word", required=True, help='e.g. "s0 pi s2 pi^-1"')
    for i in range(N):
        p.add_argument(f"--f{i}")
    p = add("audit", cmd_audit, "construct and run every structural check")
    p.add_argument("--floor", type=int, default=-12)
    return parser


_VALUE_FLAGS = {"--alpha", *(f"--f{i}" for i in range(N))}


def _attach_negative_values(argv: list[str]) -> list[str]:
    """Rewrite "--alpha -1,..." as "--alpha=-1,..." so argparse does not read the value as a flag."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
            else:
                out.extend((tok, nxt))
        else:
            out.append(tok)
    return out


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Parse argv and execute; returns (exit code, rendered output)."""
    parser = build_parser()
    args = parser.parse_args(_attach_negative_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        outcome = args.func(args)
    except WordCapExceeded as exc:
        outcome = Outcome("inconclusive", {}, f"inconclusive: {exc}", [str(exc)])
    except (ParseError, ConstraintError, ReductionError, TaxonomyError, ValueError, KeyError, OSError) as exc:
        outcome = Outcome("error", {}, f"error: {exc}", [str(exc)])
    except (Inconclusive, DegreeCapExceeded) as exc:
        outcome = Outcome("inconclusive", {}, f"inconclusive: {exc}", [str(exc)])
    if args.format == "text":
        rendered = outcome.text
        if outcome.diagnostics and outcome.status != "error":
            rendered += "\n" + "\n".join(f"note: {d}" for d in outcome.diagnostics)
    else:
        rendered = json.dumps(outcome.envelope(), indent=2)
    return EXIT[outcome.status], rendered


def main(argv: list[str] | None = None) -> int:
    code, rendered = run(argv)
    print(rendered)
    return code


if __name__ == "__main__":
    sys.exit(main())
