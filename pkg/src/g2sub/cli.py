"""Batch command line: ``g2sub <verb> [args] [--json] [--seed N] [--lambda Q]``.

Exit status is 0 when every check passes, 1 when some check fails and 2 on
unparsable input or bad usage.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import re
import sys
from fractions import Fraction

from . import catalog
from .algebra import ad_rank, bracket, exp_ad
from .expr import ExprError, format_element, format_elements, parse_element, parse_elements, parse_scalar
from .nilpotent import classify_nilpotent, fuzz_subalgebras, lemma5_branch, match_table10_schema, ShapeFinding
from .reps import Sl2Triple, decompose_under_sl2, dynkin_index
from .regular import classify_regular_types
from .subspace import (
    centralizer,
    derived_series,
    is_regular_form,
    is_subalgebra,
    normalizer,
    span,
)

VERIFY_TARGETS = ("all", "tables", "witnesses") + catalog.TABLE_IDS


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # options are all --long apart from -h, so any other "-..." token is a
        # signed scalar or element such as -2/3 or -X[1,0]
        self._negative_number_matcher = re.compile(r"^-(?!-|h$).+")

    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON document")
    common.add_argument("--seed", type=int, default=0, help="seed for fuzz sweeps")
    common.add_argument("--lambda", dest="lam", type=Fraction, default=None, help="value for {lambda}")

    p = _Parser(prog="g2sub", description="Exact computations in the Lie algebra G2.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    v = verb("bracket", "[x, y]")
    v.add_argument("x")
    v.add_argument("y")
    verb("ad-rank", "rank of ad x").add_argument("x")
    verb("classify-nilpotent", "orbit of a nilpotent element").add_argument("x")
    verb("match-schema", "shape of a subalgebra of n").add_argument("gens")
    verb("normalizer", "normalizer of a span").add_argument("gens")
    verb("centralizer", "centralizer of a span").add_argument("gens")
    v = verb("enumerate", "list regular types or fuzzed subalgebras of n")
    v.add_argument("what", choices=("regular", "fuzz"))
    v.add_argument("--count", type=int, default=10)
    v = verb("verify", "run catalog checks")
    v.add_argument("target", nargs="?", default="all", choices=VERIFY_TARGETS)
    v.add_argument("--subalgebra", help="check a single span instead of the catalog")
    v = verb("dynkin-index", "index of an sl2-triple")
    v.add_argument("--triple", required=True, help='"f; e_plus; e_minus"')
    v = verb("exp-ad", "exp(c ad x) applied to y")
    v.add_argument("c")
    v.add_argument("x")
    v.add_argument("y")
    verb("counts", "regular, nonregular semisimple and nonregular solvable type counts")
    return p


def _emit(args, text: str, doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n" if args.json else text + "\n"


def _basis_doc(s) -> dict:
    return {"dim": s.dim, "basis": [format_element(v) for v in s.basis]}


def _space_text(s) -> str:
    return f"dim {s.dim}\n" + "\n".join(format_element(v) for v in s.basis)


def _cmd_bracket(a):
    z = bracket(parse_element(a.x, a.lam), parse_element(a.y, a.lam))
    return 0, _emit(a, format_element(z), {"result": format_element(z)})


def _cmd_ad_rank(a):
    r = ad_rank(parse_element(a.x, a.lam))
    return 0, _emit(a, str(r), {"rank": r})


def _cmd_classify(a):
    label = classify_nilpotent(parse_element(a.x, a.lam))
    return 0, _emit(a, label.name, {"orbit": label.name, "orbit_dim": label.orbit_dim})


def _cmd_match(a):
    sig = match_table10_schema(span(parse_elements(a.gens, a.lam)))
    roots = [f"X[{r[0]},{r[1]}]" for r in sig.leading_roots]
    text = f"row {sig.row}  leading {' '.join(roots) or '-'}"
    return 0, _emit(a, text, {"row": sig.row, "leading": roots})


def _cmd_space(fn):
    def run(a):
        s = fn(span(parse_elements(a.gens, a.lam)))
        return 0, _emit(a, _space_text(s), _basis_doc(s))

    return run


def _cmd_enumerate(a):
    if a.what == "regular":
        rows = []
        for c in classify_regular_types():
            spec = c.canonical_spec
            roots = format_elements(parse_elements(_roots_text(spec.roots))) if spec.roots else "-"
            rows.append({"dim": c.dimension, "l": spec.l_type.value, "roots": roots})
        text = "\n".join(f"{r['dim']:2} {r['l']:5} {r['roots']}" for r in rows)
        return 0, _emit(a, text, {"regular": rows, "count": len(rows)})
    subs = fuzz_subalgebras(a.seed, a.count)
    rows = []
    for s in subs:
        rows.append({"basis": [format_element(v) for v in s.basis], "row": match_table10_schema(s).row})
    text = "\n".join(f"row {r['row']:2}  {'; '.join(r['basis']) or '0'}" for r in rows)
    return 0, _emit(a, text, {"seed": a.seed, "subalgebras": rows})


def _roots_text(roots) -> str:
    return "; ".join(f"X[{a},{b}]" for a, b in roots)


def _verify_subalgebra(a):
    """Closure is the only pass/fail check; the rest is reported as detail."""
    s = span(parse_elements(a.subalgebra, a.lam))
    report = catalog.VerificationReport()
    closed = is_subalgebra(s)
    report.add("INPUT", "0", "subalgebra", closed, f"dim {s.dim}")
    if not closed:
        return report
    facts = [
        "solvable" if derived_series(s)[-1].dim == 0 else "not solvable",
        "regular form" if is_regular_form(s) else "not in regular form",
        f"normalizer dim {normalizer(s).dim}",
    ]
    try:
        facts.append(f"borel shape {lemma5_branch(s).value}")
    except ShapeFinding as err:
        facts.append(f"borel shape uncovered ({err})")
    except ValueError:
        facts.append("not inside the Borel subalgebra")
    report.add("INPUT", "0", "properties", catalog.Status.PASS, ", ".join(facts))
    return report


def _cmd_verify(a):
    if a.subalgebra is not None:
        report = _verify_subalgebra(a)
    elif a.target == "all":
        report = catalog.verify_all()
    elif a.target == "tables":
        report = catalog.VerificationReport()
        for tid in catalog.TABLE_IDS:
            report.extend(catalog.verify_table(tid))
    elif a.target == "witnesses":
        report = catalog.conjugation_witnesses()
    else:
        report = catalog.verify_table(a.target)
    out = report.to_json() if a.json else report.to_text()
    return (0 if report.ok else 1), out


def _cmd_dynkin(a):
    parts = parse_elements(a.triple, a.lam)
    if len(parts) != 3:
        raise UsageError(f"--triple needs three elements, got {len(parts)}")
    t = Sl2Triple(*parts)
    idx = dynkin_index(t)
    spins = decompose_under_sl2(t)
    doc = {"index": str(idx), "spins": {str(k): v for k, v in sorted(spins.multiplicities.items())}}
    return 0, _emit(a, f"{idx}\n{spins.as_text()}", doc)


def _cmd_exp_ad(a):
    c = parse_scalar(a.c)
    z = exp_ad(c, parse_element(a.x, a.lam))(parse_element(a.y, a.lam))
    return 0, _emit(a, format_element(z), {"result": format_element(z)})


def _cmd_counts(a):
    reg, ss, solv = catalog.theorem1_counts()
    text = f"regular={reg} semisimple_nonregular={ss} solvable_nonregular={solv}"
    return 0, _emit(a, text, {"regular": reg, "semisimple_nonregular": ss, "solvable_nonregular": solv})


COMMANDS = {
    "bracket": _cmd_bracket,
    "ad-rank": _cmd_ad_rank,
    "classify-nilpotent": _cmd_classify,
    "match-schema": _cmd_match,
    "normalizer": _cmd_space(normalizer),
    "centralizer": _cmd_space(centralizer),
    "enumerate": _cmd_enumerate,
    "verify": _cmd_verify,
    "dynkin-index": _cmd_dynkin,
    "exp-ad": _cmd_exp_ad,
    "counts": _cmd_counts,
}


def run(argv) -> tuple[int, str]:
    """Parse and dispatch; returns (exit code, output text)."""
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(io.StringIO()) as help_out:
            args = parser.parse_args(list(argv))
    except UsageError as err:
        return 2, f"{err}\n"
    except SystemExit as stop:  # --help
        return int(stop.code or 0), help_out.getvalue()
    try:
        return COMMANDS[args.verb](args)
    except ExprError as err:
        return 2, f"parse error {err}\n"
    except UsageError as err:
        return 2, f"{err}\n"
    except ValueError as err:
        return 1, f"error: {err}\n"


def main(argv=None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if code != 2 else sys.stderr
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
