"""Command-line front end: run scripts of let-bindings and commands.

Exit status: 0 success, 1 usage or parse error, 2 library error, 3 refutation.
"""

from __future__ import annotations

import argparse
import json
import os
import signal
import sys
from contextlib import contextmanager
from dataclasses import dataclass, field

from .brauer import (
    BrauerClass,
    QuaternionSymbol,
    class_equal,
    e2,
    frobenius_map,
    local_invariant,
    split_test,
    support,
)
from .fields import (
    ARTIN_SCHREIER,
    INSEPARABLE,
    Field,
    FieldElement,
    FiniteField,
    QuadraticExtension,
    RationalFunctionField,
    infinity,
)
from .forms import BilinearForm, QuadraticForm, arf, equivalent, is_hyperbolic, is_isotropic, orth_sum, pfister, scale
from .script import (
    BilinearExpr,
    BinOp,
    BlockForm,
    ClassExpr,
    Command,
    FieldExpr,
    Let,
    Name,
    Neg,
    Num,
    Perp,
    PfisterExpr,
    Scale,
    Script,
    ScriptError,
    SymbolExpr,
    parse,
    print_node,
)
from .suites import SUITES, report_json, run_suite, summarize
from .transfer import TransferFunctional, descend_form_search, transfer_bilinear, transfer_quadratic

BUDGET_ENV = "QUADCHAR2_BUDGET"
EXIT_OK, EXIT_USAGE, EXIT_LIBRARY, EXIT_REFUTED = 0, 1, 2, 3


class CommandTimeout(Exception):
    pass


@contextmanager
def time_limit(millis: int | None):
    if not millis or not hasattr(signal, "setitimer"):
        yield
        return

    def handler(signum, frame):
        raise CommandTimeout(f"timed out after {millis} ms")

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, millis / 1000)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


@dataclass
class Options:
    json: bool = False
    seed: int = 0
    trials: int = 10
    budget: int | None = None
    timeout_ms: int | None = None
    timings: bool = False


@dataclass
class Result:
    index: int
    command: str
    verdict: str
    output: str
    detail: dict = field(default_factory=dict)
    report: dict | None = None

    def to_json(self) -> dict:
        doc = {"index": self.index, "command": self.command, "verdict": self.verdict, "output": self.output}
        if self.detail:
            doc["detail"] = self.detail
        if self.report is not None:
            doc["report"] = self.report
        return doc


class Evaluator:
    def __init__(self, opts: Options):
        self.opts = opts
        self.env: dict[str, object] = {}
        self.field: Field = RationalFunctionField(FiniteField(1))

    # values -------------------------------------------------------------

    def build_field(self, node: FieldExpr) -> Field:
        k = node.order.bit_length() - 1
        K: Field = FiniteField(k)
        if node.rational:
            K = RationalFunctionField(K)
        for kind, e in node.steps:
            x = self.elem(e, K)
            K = QuadraticExtension(K, INSEPARABLE if kind == "sqrt" else ARTIN_SCHREIER, x)
        return K

    def generator(self, name: str, K: Field) -> FieldElement:
        if name == "t":
            R = K.rational_base()
            if R is None:
                raise ValueError(f"{K} has no variable t")
            return K(R.gen)
        if name == "w":
            return K(K.base_finite().generator)
        kind, idx = name.split("#")
        steps = [f for f in K.chain() if isinstance(f, QuadraticExtension)]
        i = int(idx)
        if not 1 <= i <= len(steps) or steps[i - 1].kind != kind:
            raise ValueError(f"{name} is not a generator of {K}")
        return K(steps[i - 1].gen)

    def elem(self, node, K: Field | None = None) -> FieldElement:
        K = K or self.field
        if isinstance(node, Num):
            return K.from_int(node.value)
        if isinstance(node, Name):
            if node.id in self.env:
                v = self.env[node.id]
                if not isinstance(v, FieldElement):
                    raise TypeError(f"{node.id} is not a field element")
                return K(v)
            return self.generator(node.id, K)
        if isinstance(node, Neg):
            return self.elem(node.operand, K)
        if isinstance(node, BinOp):
            left = self.elem(node.left, K)
            if node.op == "^":
                return left ** node.right.value
            right = self.elem(node.right, K)
            return {"+": lambda: left + right, "*": lambda: left * right, "/": lambda: left / right}[node.op]()
        raise TypeError(f"expected a field element, got {print_node(node)}")

    def form(self, node) -> QuadraticForm:
        if isinstance(node, Name):
            v = self.env[node.id]
            if not isinstance(v, QuadraticForm):
                raise TypeError(f"{node.id} is not a quadratic form")
            return v
        if isinstance(node, BlockForm):
            return QuadraticForm(self.field, ((self.elem(node.a), self.elem(node.b)),))
        if isinstance(node, Perp):
            return orth_sum(*(self.form(p) for p in node.parts))
        if isinstance(node, Scale):
            return scale(self.elem(node.factor), self.form(node.form))
        if isinstance(node, PfisterExpr):
            return pfister([self.elem(e) for e in node.slots], self.elem(node.last))
        raise TypeError(f"expected a quadratic form, got {print_node(node)}")

    def bilinear(self, node) -> BilinearForm:
        if isinstance(node, Name):
            v = self.env[node.id]
            if not isinstance(v, BilinearForm):
                raise TypeError(f"{node.id} is not a bilinear form")
            return v
        return BilinearForm(self.field, tuple(self.elem(e) for e in node.entries))

    def brauer(self, node) -> BrauerClass:
        if isinstance(node, Name):
            v = self.env[node.id]
            if isinstance(v, QuaternionSymbol):
                return BrauerClass.of(v)
            if isinstance(v, BrauerClass):
                return v
            raise TypeError(f"{node.id} is not a Brauer class")
        if isinstance(node, SymbolExpr):
            return BrauerClass.of(QuaternionSymbol(self.elem(node.a), self.elem(node.b)))
        if isinstance(node, ClassExpr):
            syms = []
            for s in node.symbols:
                syms.extend(self.brauer(s).symbols)
            return BrauerClass(self.field, tuple(syms))
        raise TypeError(f"expected a Brauer class, got {print_node(node)}")

    def value(self, node):
        if isinstance(node, FieldExpr):
            return self.build_field(node)
        if isinstance(node, (BlockForm, Perp, Scale, PfisterExpr)):
            return self.form(node)
        if isinstance(node, BilinearExpr):
            return self.bilinear(node)
        if isinstance(node, SymbolExpr):
            return QuaternionSymbol(self.elem(node.a), self.elem(node.b))
        if isinstance(node, ClassExpr):
            return self.brauer(node)
        if isinstance(node, Name) and node.id in self.env:
            return self.env[node.id]
        return self.elem(node)

    # commands -----------------------------------------------------------

    def run(self, index: int, stmt) -> Result | None:
        if isinstance(stmt, Let):
            v = self.value(stmt.expr)
            self.env[stmt.name] = v
            if isinstance(v, Field):
                self.field = v
            return None
        handler = getattr(self, "cmd_" + stmt.verb)
        text = print_node(stmt)
        with time_limit(self.opts.timeout_ms):
            return handler(index, text, stmt)

    def _decision(self, index, text, d, yes, no):
        words = {"yes": yes, "no": no, "unknown": "unknown"}
        return Result(index, text, d.verdict.value, f"{words[d.verdict.value]} ({d.reason})")

    def cmd_arf(self, index, text, stmt):
        phi = self.form(stmt.args[0])
        rep = arf(phi)
        if phi.field.in_wp(rep):
            return Result(index, text, "trivial", "trivial", {"representative": str(rep)})
        return Result(index, text, "nontrivial", f"nontrivial (rep {rep})", {"representative": str(rep)})

    def cmd_e2(self, index, text, stmt):
        c = e2(self.form(stmt.args[0]))
        return Result(index, text, "ok", repr(c), {"symbols": [repr(s) for s in c.symbols]})

    def cmd_split(self, index, text, stmt):
        d = split_test(self.brauer(stmt.args[0]))
        return self._decision(index, text, d, "split", "nonsplit")

    def cmd_inv(self, index, text, stmt):
        c = self.brauer(stmt.args[0])
        K = c.field
        if not isinstance(K, RationalFunctionField):
            raise ValueError("local invariants are computed over GF(2^k)(t)")
        places = support(c)
        if infinity(K) not in places:
            places.append(infinity(K))
        table = {}
        for v in places:
            s = 0
            for sym in c.symbols:
                s ^= local_invariant(sym, v)
            table[repr(v)] = s
        out = "{" + ", ".join(f"{k}: {v}" for k, v in table.items()) + "}"
        return Result(index, text, "ok", out, {"invariants": table})

    def cmd_eq(self, index, text, stmt):
        a, b = stmt.args
        if isinstance(self.value(a), QuadraticForm):
            d = equivalent(self.form(a), self.form(b), self.opts.budget)
            return self._decision(index, text, d, "equivalent", "not equivalent")
        d = class_equal(self.brauer(a), self.brauer(b))
        return self._decision(index, text, d, "equal", "not equal")

    def cmd_hyp(self, index, text, stmt):
        d = is_hyperbolic(self.form(stmt.args[0]), self.opts.budget)
        return self._decision(index, text, d, "hyperbolic", "not hyperbolic")

    def cmd_iso(self, index, text, stmt):
        d = is_isotropic(self.form(stmt.args[0]), self.opts.budget)
        r = self._decision(index, text, d, "isotropic", "anisotropic")
        if d.yes:
            r.detail["vector"] = [str(x) for x in d.certificate]
        return r

    def _step(self) -> QuadraticExtension:
        K = self.field
        if not isinstance(K, QuadraticExtension):
            raise ValueError(f"{K} is not a quadratic extension")
        return K

    def cmd_transfer(self, index, text, stmt):
        s = TransferFunctional(self._step())
        v = self.value(stmt.args[0])
        if isinstance(v, BilinearForm):
            out = transfer_bilinear(s, v)
        else:
            out = transfer_quadratic(s, self.form(stmt.args[0]))
        return Result(index, text, "ok", format_value(out), {"field": repr(s.base)})

    def cmd_frob(self, index, text, stmt):
        c = frobenius_map(self.brauer(stmt.args[0]))
        return Result(index, text, "ok", repr(c), {"field": repr(c.field)})

    def cmd_descend(self, index, text, stmt):
        res = descend_form_search(self.form(stmt.args[0]), self.opts.budget)
        if res.found:
            return Result(index, text, "found", f"found {format_value(res.form)}", {"candidates": res.candidates_tried})
        return Result(index, text, "not-found", "not found (the search is incomplete)", {"notes": res.notes})

    def cmd_verify(self, index, text, stmt):
        p = argparse.ArgumentParser(prog="verify", add_help=False, exit_on_error=False)
        p.add_argument("statement")
        p.add_argument("--trials", type=int, default=self.opts.trials)
        p.add_argument("--seed", type=int, default=self.opts.seed)
        try:
            a = p.parse_args(list(stmt.options))
        except (argparse.ArgumentError, SystemExit) as e:
            raise ScriptError(f"verify: {e}")
        if a.statement not in SUITES:
            raise ScriptError(f"unknown statement {a.statement!r}; known: {', '.join(sorted(SUITES))}")
        reports = run_suite(a.statement, a.trials, a.seed)
        summary = summarize(reports)
        verdict = "refuted" if summary["refuted"] else "verified" if not summary["inconclusive"] else "inconclusive"
        out = (
            f"{summary['verified']} verified, {summary['refuted']} refuted, "
            f"{summary['inconclusive']} inconclusive of {len(reports)} (seed {a.seed})"
        )
        report = json.loads(report_json(a.statement, a.seed, reports, self.opts.timings))
        return Result(index, text, verdict, out, report=report)


def format_value(x) -> str:
    """Values in script syntax where possible."""
    if isinstance(x, QuadraticForm):
        parts = [f"Q[{a}, {b}]" for a, b in x.blocks]
        return parts[0] if len(parts) == 1 else "perp(" + ", ".join(parts) + ")"
    if isinstance(x, BilinearForm):
        return "bil<" + ", ".join(map(str, x.diagonal)) + ">"
    return repr(x)


def execute(script: Script, opts: Options, out=None) -> int:
    out = out or sys.stdout
    ev = Evaluator(opts)
    results, status = [], EXIT_OK
    n = 0
    for stmt in script.statements:
        try:
            r = ev.run(n, stmt)
        except ScriptError as e:
            r = Result(n, print_node(stmt), "error", str(e))
            status = max(status, EXIT_USAGE) if status != EXIT_LIBRARY else status
        except CommandTimeout as e:
            r = Result(n, print_node(stmt), "unknown", str(e))
        except Exception as e:  # library errors are reported per command
            r = Result(n, print_node(stmt), "error", f"{type(e).__name__}: {e}")
            status = EXIT_LIBRARY if status != EXIT_REFUTED else status
        if isinstance(stmt, Command):
            n += 1
        if r is None:
            continue
        if r.verdict == "refuted":
            status = EXIT_REFUTED
        results.append(r)
        if not opts.json:
            print(f"{r.command}: {r.output}", file=out)
    if opts.json:
        if len(results) == 1 and results[0].report is not None:
            doc = results[0].report
        else:
            doc = {"results": [r.to_json() for r in results]}
        print(json.dumps(doc, indent=2, sort_keys=True), file=out)
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quadchar2",
        description="Quadratic forms and quaternion algebras in characteristic 2.",
        epilog="Commands may also be given inline, e.g.  quadchar2 split '[1/t, 1+t)'",
    )
    p.add_argument("words", nargs="*", help="script file, '-' for stdin, or an inline command")
    p.add_argument("--json", action="store_true", help="print results as JSON")
    p.add_argument("--seed", type=int, default=0, help="seed for verify (default 0)")
    p.add_argument("--trials", type=int, default=10, help="trials for verify (default 10)")
    p.add_argument("--budget", type=int, default=None, help=f"search degree budget (env {BUDGET_ENV})")
    p.add_argument("--timeout-ms", type=int, default=None, help="per-command time limit")
    p.add_argument("--timings", action="store_true", help="include wall-clock millis in JSON reports")
    return p


def _read_script(words: list[str]) -> str:
    if not words or words == ["-"]:
        return sys.stdin.read()
    if len(words) == 1 and os.path.isfile(words[0]):
        with open(words[0], encoding="utf-8") as f:
            return f.read()
    return " ".join(words)


def main(argv=None) -> int:
    p = build_parser()
    args, rest = p.parse_known_args(argv)
    words = list(args.words)
    # `verify <id> --trials N` passes its flags through to the statement
    if words and words[0] == "verify":
        words = words + [w for w in rest]
    elif rest:
        p.error(f"unrecognized arguments: {' '.join(rest)}")
    budget = args.budget
    if budget is None and os.environ.get(BUDGET_ENV):
        try:
            budget = int(os.environ[BUDGET_ENV])
        except ValueError:
            print(f"{BUDGET_ENV} must be an integer", file=sys.stderr)
            return EXIT_USAGE
    opts = Options(args.json, args.seed, args.trials, budget, args.timeout_ms, args.timings)
    try:
        script = parse(_read_script(words))
    except ScriptError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"cannot read script: {e}", file=sys.stderr)
        return EXIT_USAGE
    return execute(script, opts)


if __name__ == "__main__":
    sys.exit(main())
