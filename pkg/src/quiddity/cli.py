"""Command-line entry point.

Exit codes: 0 success, 1 a mathematical check failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import sys

from . import chebyshev as cheb
from . import jsonio
from .errors import MathFailure, ValidationError
from .frieze import build_matrix_frieze, build_scalar_frieze, render_ascii
from .matrix_quiddity import (
    BiSequence,
    bi_bullet,
    bi_circ,
    bi_insert,
    block_monodromy,
    gauss_orbit,
    insert_ear,
)
from .polygon import enumerate_dissections, quiddity_of
from .sampling import rand_commuting_pair, rand_matrix, rng_from
from .sequences import bullet, boxplus, check_exclusion, check_operad_axioms, circ, id_circ, monodromy

EXIT_OK, EXIT_MATH, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _globals(defaults: bool) -> argparse.ArgumentParser:
    # shared so --seed/--format work before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    p.add_argument("--seed", type=int, **({"default": 0} if defaults else kw))
    p.add_argument("--format", choices=["json", "text"], **({"default": "json"} if defaults else kw))
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quiddity", description="Exact quiddity-sequence calculus.", parents=[_globals(True)])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    g = [_globals(False)]

    p = sub.add_parser("verify", parents=g, help="monodromy of a scalar sequence")
    p.add_argument("seq")
    p.add_argument("--expect", choices=["MinusId", "PlusId"])

    p = sub.add_parser("mverify", parents=g, help="block monodromy of a matrix (bi-)sequence")
    p.add_argument("seq")
    p.add_argument("--side", choices=["left", "right", "bi"], default="left")
    p.add_argument("--expect", choices=["MinusId", "PlusId"])

    p = sub.add_parser("compose", parents=g, help="product of two scalar sequences")
    p.add_argument("--op", choices=["circ", "bullet", "boxplus", "idcirc"], required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("left")
    p.add_argument("right")

    for name in ("boxplus", "idcirc"):
        p = sub.add_parser(name, parents=g, help=f"shorthand for compose --op {name}")
        p.add_argument("--index", type=int, required=True)
        p.add_argument("left")
        p.add_argument("right")

    p = sub.add_parser("mcompose", parents=g, help="products of matrix sequences and bi-sequences")
    p.add_argument("--op", choices=["circ", "bullet", "insert"], required=True)
    p.add_argument("--index", type=int, required=True)
    p.add_argument("left")
    p.add_argument("right", nargs="?")

    p = sub.add_parser("enumerate", parents=g, help="triangulations or 3d-dissections, one JSON per line")
    p.add_argument("--kind", choices=["tri", "3d"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--quiddity-only", action="store_true")
    p.add_argument("--bound", type=int, default=14)

    p = sub.add_parser("frieze", parents=g, help="frieze patterns")
    p.add_argument("action", choices=["build"])
    p.add_argument("seq")
    p.add_argument("--matrix", action="store_true")
    p.add_argument("--side", choices=["left", "right", "two-sided"], default="left")
    p.add_argument("--render", choices=["ascii", "json"], default="json")

    p = sub.add_parser("cheb", parents=g, help="signed Chebyshev polynomials and their identities")
    p.add_argument("--coeffs", help="sequence or matrix-sequence JSON; random when omitted")
    p.add_argument("--pair", help="s-coefficients for a Chebyshev pair")
    p.add_argument("--check", choices=["block", "det", "corner", "all"], default="all")
    p.add_argument("--l", type=int, default=2, help="order for random coefficients")
    p.add_argument("--m", type=int, default=4, help="length for random coefficients")

    p = sub.add_parser("gauss", parents=g, help="iterate the Gauss map")
    p.add_argument("--A")
    p.add_argument("--B")
    p.add_argument("--iterate", type=int, default=5)
    p.add_argument("--l", type=int, default=2, help="order for a random commuting pair")

    p = sub.add_parser("axioms", parents=g, help="operad axioms and the j = m exclusion")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--product", choices=["circ", "bullet"], default="circ")
    return parser


# ---------------------------------------------------------------------------


def _seq_out(q):
    return q.to_json()


def cmd_verify(a):
    q = jsonio.read_sequence(jsonio.load_arg(a.seq))
    mono = monodromy(q)
    out = {"class": mono.kind.value, "matrix": mono.matrix.to_json()["entries"]}
    text = mono.kind.value
    code = EXIT_MATH if a.expect and a.expect != mono.kind.value else EXIT_OK
    return out, text, code


def cmd_mverify(a):
    obj = jsonio.load_arg(a.seq)
    s = jsonio.read_bisequence(obj) if a.side == "bi" else jsonio.read_matrix_seq(obj, a.side)
    mono = block_monodromy(s)
    out = {"class": mono.kind.value, "monodromy": mono.block.to_json()}
    code = EXIT_MATH if a.expect and a.expect != mono.kind.value else EXIT_OK
    return out, mono.kind.value, code


_SCALAR_OPS = {"circ": circ, "bullet": bullet, "boxplus": boxplus, "idcirc": id_circ}


def cmd_compose(a, op=None):
    op = op or a.op
    T = jsonio.read_sequence(jsonio.load_arg(a.left))
    S = jsonio.read_sequence(jsonio.load_arg(a.right))
    r = _SCALAR_OPS[op](T, a.index, S)
    return _seq_out(r), " ".join(str(x) for x in r), EXIT_OK


def _as_bi(s):
    if isinstance(s, BiSequence):
        return s
    return s.as_bisequence()


def cmd_mcompose(a):
    L = jsonio.read_any_matrix_seq(jsonio.load_arg(a.left))
    if a.op == "insert":
        if a.right is not None:
            raise ValidationError("insert takes a single operand")
        r = bi_insert(L, a.index) if isinstance(L, BiSequence) else insert_ear(L, a.index)
    else:
        if a.right is None:
            raise ValidationError(f"{a.op} needs two operands")
        R = jsonio.read_any_matrix_seq(jsonio.load_arg(a.right))
        fn = bi_circ if a.op == "circ" else bi_bullet
        r = fn(_as_bi(L), a.index, _as_bi(R))
    out = r.to_json()
    out["class"] = block_monodromy(r).kind.value
    return out, out["class"], EXIT_OK


def cmd_enumerate(a):
    items = enumerate_dissections(a.kind, a.n, bound=a.bound)
    objs = [quiddity_of(d).to_json() if a.quiddity_only else d.to_json() for d in items]
    text = "\n".join(" ".join(o["entries"]) if a.quiddity_only else jsonio.dumps(o) for o in objs)
    return objs, text, EXIT_OK


def cmd_frieze(a):
    obj = jsonio.load_arg(a.seq)
    if a.matrix:
        f = build_matrix_frieze(jsonio.read_matrix_seq(obj, "left"), a.side)
    else:
        f = build_scalar_frieze(jsonio.read_sequence(obj))
    text = render_ascii(f).rstrip("\n")
    if a.render == "ascii":
        return {"ascii": text}, text, EXIT_OK
    return f.to_json(), text, EXIT_OK


def _coeff_list(obj):
    """Scalars become 1x1 matrices; anything else is read as a matrix sequence."""
    entries = obj.get("entries") if isinstance(obj, dict) else obj
    if isinstance(entries, list) and entries and not isinstance(entries[0], (dict, list)):
        return [jsonio.matrix_from([[x]]) for x in jsonio.read_sequence(obj)]
    return list(jsonio.read_matrix_seq(obj).entries)


def cmd_cheb(a):
    rng = rng_from(a.seed)
    if a.coeffs:
        coeffs = _coeff_list(jsonio.load_arg(a.coeffs))
    else:
        coeffs = [rand_matrix(rng, a.l) for _ in range(a.m)]
    out = {"coeffs": [m.to_json() for m in coeffs]}
    checks = {}
    code = EXIT_OK
    wanted = ("block", "det", "corner") if a.check == "all" else (a.check,)
    res = cheb.cheb_left(coeffs)
    out["p"] = [m.to_json() for m in res.p[1:]]
    for name in wanted:
        try:
            if name == "block":
                cheb.continuant_block(coeffs)
            elif name == "det":
                cheb.det_identity(coeffs)
            else:
                cheb.corner_inverse(coeffs)
            checks[name] = "pass"
        except AssertionError:
            checks[name] = "fail"
            code = EXIT_MATH
        except MathFailure as exc:
            checks[name] = f"skipped: {exc}"
    if a.pair:
        s = _coeff_list(jsonio.load_arg(a.pair))
        try:
            pair = cheb.cheb_pair(coeffs, s)
            out["pair"] = {"p": [m.to_json() for m in pair.p[1:]], "q": [m.to_json() for m in pair.q[1:]]}
            checks["pair"] = "pass"
        except AssertionError:
            checks["pair"] = "fail"
            code = EXIT_MATH
    out["checks"] = checks
    text = "\n".join(f"{k}: {v}" for k, v in checks.items())
    return out, text, code


def cmd_gauss(a):
    if (a.A is None) != (a.B is None):
        raise ValidationError("give both --A and --B, or neither for a random pair")
    if a.A is None:
        A, B = rand_commuting_pair(rng_from(a.seed), a.l)
    else:
        A = jsonio.matrix_from(jsonio.load_arg(a.A))
        B = jsonio.matrix_from(jsonio.load_arg(a.B))
    orbit = gauss_orbit(A, B, a.iterate)
    returned = orbit[-1] == orbit[0]
    out = {"orbit": [[x.to_json(), y.to_json()] for x, y in orbit], "returns": returned}
    code = EXIT_MATH if a.iterate % 5 == 0 and not returned else EXIT_OK
    return out, f"returns: {returned}", code


def cmd_axioms(a):
    from .polygon import enumerate_dissections as enum

    by_len = {n: [quiddity_of(d) for d in enum("tri", n)] for n in range(3, a.max_n + 1)}
    universe = [(0,), (0, 0)] + [q for n in by_len for q in by_len[n]]
    product = circ if a.product == "circ" else bullet
    if a.product == "bullet":
        universe = [q for q in universe if len(q) >= 3]
    rep = check_operad_axioms(universe, product=product)
    checked, equal = check_exclusion(by_len, product=product)
    out = rep.to_json()
    out["exclusion"] = {"checked": checked, "equalities": len(equal)}
    ok = rep.ok and not equal
    text = f"axioms {'hold' if rep.ok else 'FAIL'}; exclusion equalities: {len(equal)} of {checked}"
    return out, text, EXIT_OK if ok or a.product == "bullet" else EXIT_MATH


COMMANDS = {
    "verify": cmd_verify,
    "mverify": cmd_mverify,
    "compose": cmd_compose,
    "boxplus": lambda a: cmd_compose(a, "boxplus"),
    "idcirc": lambda a: cmd_compose(a, "idcirc"),
    "mcompose": cmd_mcompose,
    "enumerate": cmd_enumerate,
    "frieze": cmd_frieze,
    "cheb": cmd_cheb,
    "gauss": cmd_gauss,
    "axioms": cmd_axioms,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out, text, code = COMMANDS[args.command](args)
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except (MathFailure, ZeroDivisionError) as exc:
        print(f"failure: {exc}", file=stderr)
        return EXIT_MATH
    if args.format == "text":
        print(text, file=stdout)
    elif args.command == "enumerate":
        for o in out:
            print(jsonio.dumps(o), file=stdout)
    else:
        print(jsonio.dumps(out), file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
