"""Command-line front end.

Every subcommand reads a job from flags and/or a JSON document (``--input``)
and prints a JSON document with sorted keys, or an aligned table with
``--format table``.  Exit codes: 0 success, 1 verification failure,
2 usage or schema error, 3 invalid word, 4 solver error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import braid, suites
from .baxter import (
    baxter_poly,
    extremal_factors,
    fundamental_poles,
    pole_set,
    qcartan_inverse,
    verify_factorization,
)
from .cartan import cartan_data, kappa, longest_words
from .cyclicity import verdict
from .errors import (
    IllegalType,
    InternalInconsistency,
    NonzeroChainSum,
    NonzeroDegree,
    NotLongestElement,
    NotPolynomial,
    NotReduced,
    SingularMatrix,
    TruncationTooSmall,
)
from .exact import GlobalParams, rat_str
from .qloop import (
    LoopEmbedding,
    expansions_agree,
    intertwine_check,
    lweight_from_drinfeld,
    q_act_word,
    q_hecke_model,
    q_verify,
)
from .serialize import (
    SchemaError,
    dumps,
    lweight_to_json,
    multiset_to_json,
    parse_lweight,
    parse_qtuple,
    parse_rat,
    parse_tuple,
    poly_to_json,
    qfrac_to_json,
    tuple_to_json,
)

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_WORD, EXIT_SOLVER = range(5)


class UsageError(Exception):
    pass


class WordError(Exception):
    pass


class VerificationFailed(Exception):
    """Carries a complete result document whose status is a failure."""

    def __init__(self, doc):
        super().__init__("verification failed")
        self.doc = doc


# -- job assembly --------------------------------------------------------------


def _load_document(path):
    if path is None:
        return {}
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        doc = json.loads(text)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise SchemaError("input document must be a JSON object")
    return doc


def _inline_json(text, flag):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{flag}: invalid JSON ({exc})") from exc


def _parse_word(obj):
    if isinstance(obj, str):
        parts = [p for p in obj.replace(" ", ",").split(",") if p]
        try:
            return tuple(int(p) for p in parts)
        except ValueError as exc:
            raise WordError(f"bad word {obj!r}") from exc
    if isinstance(obj, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in obj):
        return tuple(obj)
    raise SchemaError(f"word must be a list of node indices, got {obj!r}")


class Job:
    """Merged view of flags and the input document; flags win."""

    def __init__(self, args):
        self.args = args
        self.doc = _load_document(getattr(args, "input", None))
        type_text = args.type or self.doc.get("type")
        if type_text is None:
            raise UsageError("a Lie type is required (--type or \"type\" in the input)")
        if not isinstance(type_text, str):
            raise SchemaError("type must be a string such as \"B3\"")
        self.cd = cartan_data(type_text)
        hbar = args.hbar if args.hbar is not None else self.doc.get("hbar", "1")
        h = parse_rat(hbar)
        if not h:
            raise SchemaError("hbar must be nonzero")
        self.gp = GlobalParams(h)

    def field(self, name):
        flag = getattr(self.args, name, None)
        if flag is not None:
            return _inline_json(flag, f"--{name}")
        return self.doc.get(name)

    def tuple(self, name, *, positive):
        obj = self.field(name)
        if obj is None:
            raise SchemaError(f"field {name!r} is required for this subcommand")
        return parse_tuple(obj, self.cd.n, positive=positive)

    def word(self, *, required=True):
        obj = self.args.word if getattr(self.args, "word", None) is not None else self.doc.get("word")
        if obj is None:
            if required:
                raise SchemaError("field 'word' is required for this subcommand")
            return None
        word = _parse_word(obj)
        bad = [j for j in word if not 1 <= j <= self.cd.n]
        if bad:
            raise WordError(f"word {list(word)} uses nodes outside 1..{self.cd.n}")
        return word

    def node(self):
        node = self.args.node if self.args.node is not None else self.doc.get("node")
        if node is None:
            return None
        if not isinstance(node, int) or not 1 <= node <= self.cd.n:
            raise UsageError(f"node {node!r} outside 1..{self.cd.n}")
        return node

    def echo(self, **extra):
        out = {"type": str(self.cd.type), "hbar": rat_str(self.gp.hbar)}
        out.update(extra)
        return out


def _roots(s):
    return sorted((a for a in s), key=Fraction)


def _rat_list(s):
    return [rat_str(a) for a in _roots(s)]


# -- subcommands ---------------------------------------------------------------


def cmd_info(args):
    job = Job(args)
    cd = job.cd
    k = kappa(cd)
    qci = qcartan_inverse(cd, k)
    sep = "" if cd.n < 10 else "_"
    v_table = {
        f"v_{i}{sep}{j}": [rat_str(qci.coeff(i, j, r)) for r in range(k.two_kappa)]
        for i in cd.nodes
        for j in cd.nodes
    }
    return {
        "input": {"type": str(cd.type)},
        "result": {
            "cartan_matrix": [list(row) for row in cd.a],
            "symmetrizers": list(cd.d),
            "coxeter_matrix": [list(row) for row in cd.m],
            "two_kappa": k.two_kappa,
            "kappa": rat_str(k.kappa),
            "positive_roots": len(cd.positive_roots),
            "highest_root": list(cd.highest_root),
            "longest_words": [list(w) for w in dict.fromkeys(longest_words(cd))],
            "v_table": v_table,
        },
    }


def cmd_orbit(args):
    job = Job(args)
    hw = args.action == "hw"
    word = job.word()
    x = job.tuple("P", positive=False)
    if hw and any(f.degree for f in x):
        raise SchemaError("highest-weight tuples must have degree 0 in every component")
    image = braid.act_word(job.cd, job.gp, word, x, hw=hw)
    result = {"image": tuple_to_json(image), "degree": list(braid.degree(image))}
    if hw:
        # the monic tuple whose highest-weight ratio is the image
        result["monic"] = tuple_to_json(
            tuple(braid.solve_difference(job.gp, f, d) for f, d in zip(image, job.cd.d))
        )
    return {
        "input": job.echo(P=tuple_to_json(x), word=list(word), action=args.action),
        "result": result,
    }


def cmd_poles(args):
    job = Job(args)
    P = job.tuple("P", positive=True)
    qci = qcartan_inverse(job.cd)
    node = job.node()
    nodes = [node] if node else list(job.cd.nodes)
    return {
        "input": job.echo(P=tuple_to_json(P)),
        "result": {
            "poles": {str(i): _rat_list(pole_set(qci, job.gp, P, i)) for i in nodes},
            "fundamental_poles": {
                f"{i},{j}": _rat_list(fundamental_poles(qci, job.gp, i, j))
                for i in nodes
                for j in job.cd.nodes
            },
        },
    }


def cmd_baxter(args):
    job = Job(args)
    P = job.tuple("P", positive=True)
    qci = qcartan_inverse(job.cd)
    report = verify_factorization(job.cd, job.gp, qci, P)
    out = {}
    for i in job.cd.nodes:
        Q = baxter_poly(qci, job.gp, P, i)
        out[str(i)] = {"roots": multiset_to_json(Q), "coefficients": poly_to_json(Q.expand())}
    doc = {
        "input": job.echo(P=tuple_to_json(P)),
        "result": {
            "baxter": out,
            "factorization": {
                "ok": report.ok,
                "words": [list(w) for w in dict.fromkeys(longest_words(job.cd))],
                "mismatches": [
                    {"word": list(w), "node": i, "extremal": multiset_to_json(e), "direct": multiset_to_json(d)}
                    for w, i, e, d in report.mismatches
                ],
            },
        },
    }
    if not report.ok:
        raise VerificationFailed(doc)
    return doc


def cmd_extremal(args):
    job = Job(args)
    cd, gp = job.cd, job.gp
    P = job.tuple("P", positive=True)
    word = job.word()
    xi = braid.extremal_xi(cd, gp, P, word)
    polys = {str(i): poly_to_json(braid.extremal_poly(cd, gp, P, word, i)) for i in cd.nodes}
    factors = [
        {"position": r + 1, "node": j, "roots": multiset_to_json(f)}
        for r, (j, f) in enumerate(extremal_factors(cd, gp, P, word))
    ]
    return {
        "input": job.echo(P=tuple_to_json(P), word=list(word)),
        "result": {
            "image": tuple_to_json(braid.act_word(cd, gp, word, P)),
            "xi": tuple_to_json(xi),
            "polynomials": polys,
            "factors": factors,
        },
    }


def _witness_json(w):
    out = dict(w)
    out["roots"] = [rat_str(a) for a in w["roots"]]
    return out


def cmd_cyclicity(args):
    job = Job(args)
    P = job.tuple("P", positive=True)
    Q = job.tuple("Q", positive=True)
    word = job.word(required=False)
    qci = qcartan_inverse(job.cd)
    v = verdict(job.cd, job.gp, qci, P, Q, word)
    return {
        "input": job.echo(P=tuple_to_json(P), Q=tuple_to_json(Q)),
        "result": {
            "condition_poles": v.condition_poles,
            "condition_braid": v.condition_braid,
            "cyclic_sufficient": v.cyclic_sufficient,
            "irreducible_sufficient": v.irreducible_sufficient,
            "witnesses": {k: [_witness_json(w) for w in ws] for k, ws in v.witnesses.items()},
        },
    }


def cmd_verify(args):
    results = suites.run(args.suite, seed=args.seed, count=args.count)
    doc = {
        "input": {"suite": args.suite, "seed": args.seed, "count": args.count},
        "result": {"suites": [r.as_dict() for r in results]},
    }
    if not all(r.passed for r in results):
        raise VerificationFailed(doc)
    return doc


def cmd_qloop_orbit(args):
    job = Job(args)
    cd = job.cd
    word = job.word()
    if job.field("lweight") is not None:
        psi = parse_lweight(job.field("lweight"), cd.n)
        source = {"lweight": lweight_to_json(psi)}
    else:
        obj = job.field("P")
        if obj is None:
            raise SchemaError("either 'P' (q-Drinfeld data) or 'lweight' is required")
        P = parse_qtuple(obj, cd.n)
        psi = lweight_from_drinfeld(cd, P)
        source = {"P": {str(i + 1): [[rat_str(a), m, k] for (a, m), k in f.items()] for i, f in enumerate(P)}}
    image = q_act_word(cd, word, psi)
    return {
        "input": {"type": str(cd.type), "word": list(word), **source},
        "result": {
            "lweight": lweight_to_json(psi),
            "image": lweight_to_json(image),
            "expansions_agree": expansions_agree(cd, image),
        },
    }


def cmd_qloop_hecke(args):
    job = Job(args)
    if args.r == 0:
        raise UsageError("--r must be nonzero")
    model = q_hecke_model(job.cd, args.r)
    report = q_verify(model)
    result = {
        "braid_ok": report.braid_ok,
        "quadratic_ok": report.quadratic_ok,
        "failures": [list(f) for f in report.failures],
    }
    if args.dump:
        result["matrices"] = {
            str(j + 1): [[qfrac_to_json(x) for x in row] for row in t] for j, t in enumerate(model.T)
        }
    doc = {"input": {"type": str(job.cd.type), "r": args.r}, "result": result}
    if not report.ok:
        raise VerificationFailed(doc)
    return doc


def cmd_intertwine_check(args):
    job = Job(args)
    order = 7 if args.order is None else args.order
    ctx = LoopEmbedding(job.cd, job.gp, order)
    node = job.node()
    pairs = [(i, j) for i in ([node] if node else job.cd.nodes) for j in job.cd.nodes]
    checks = []
    for i, j in pairs:
        out = intertwine_check(ctx, i, j, args.r)
        checks.append({"node": i, "generator": j, "ok": out.ok, "first_bad_order": out.first_bad_order})
    doc = {
        "input": job.echo(order=order, r=args.r),
        "result": {"ok": all(c["ok"] for c in checks), "checks": checks},
    }
    if not doc["result"]["ok"]:
        raise VerificationFailed(doc)
    return doc


COMMANDS = {
    "info": cmd_info,
    "orbit": cmd_orbit,
    "poles": cmd_poles,
    "baxter": cmd_baxter,
    "extremal": cmd_extremal,
    "cyclicity": cmd_cyclicity,
    "verify": cmd_verify,
    "qloop-orbit": cmd_qloop_orbit,
    "qloop-hecke": cmd_qloop_hecke,
    "gtl-check": cmd_intertwine_check,
}


# -- output --------------------------------------------------------------------


def _flatten(obj, prefix=""):
    if isinstance(obj, dict) and obj:
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}.{k}" if prefix else str(k))
    else:
        yield prefix, json.dumps(obj, sort_keys=True, separators=(",", ":"))


def render_table(doc) -> str:
    if "suites" in doc.get("result", {}):
        rows = [("suite", "cases", "failed", "status")]
        rows += [
            (s["suite"], str(s["cases"]), str(s["failed"]), "pass" if s["passed"] else "FAIL")
            for s in doc["result"]["suites"]
        ]
        widths = [max(len(r[c]) for r in rows) for c in range(4)]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
        for s in doc["result"]["suites"]:
            lines += [f"{s['suite']}: {f}" for f in s["failures"]]
        return "\n".join(lines)
    rows = list(_flatten(doc))
    width = max(len(k) for k, _ in rows)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def emit(doc, fmt, stream=None):
    stream = stream or sys.stdout
    stream.write((dumps(doc) if fmt == "machine" else render_table(doc)) + "\n")


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", help="Lie type such as A2 or G2")
    common.add_argument("--hbar", help="rational hbar, e.g. 1 or -1/2 (default 1)")
    common.add_argument("--input", metavar="FILE", help="JSON job document ('-' for stdin)")
    common.add_argument("--format", choices=("machine", "table"), default="machine")

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("--P", dest="P", metavar="JSON", help="node-indexed root lists")
    data.add_argument("--Q", dest="Q", metavar="JSON", help="second tuple (cyclicity)")
    data.add_argument("--word", help="comma-separated node indices, applied right to left")
    data.add_argument("--node", type=int)

    parser = argparse.ArgumentParser(prog="yangbraid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="Cartan data, kappa and the v table")
    p = sub.add_parser("orbit", parents=[common, data], help="apply a braid word to a tuple")
    p.add_argument("--action", choices=("monic", "hw"), default="monic")
    sub.add_parser("poles", parents=[common, data], help="pole sets per node")
    sub.add_parser("baxter", parents=[common, data], help="Baxter polynomials and factorization check")
    sub.add_parser("extremal", parents=[common, data], help="extremal eigenvalues along a word")
    sub.add_parser("cyclicity", parents=[common, data], help="tensor-product cyclicity conditions")
    p = sub.add_parser("verify", parents=[common], help="run a seeded verification suite")
    p.add_argument("suite", choices=[*suites.SUITES, "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int)
    p = sub.add_parser("qloop-orbit", parents=[common, data], help="braid action on l-weights")
    p.add_argument("--lweight", metavar="JSON", help="l-weight instead of q-Drinfeld data")
    p = sub.add_parser("qloop-hecke", parents=[common], help="q-Hecke relations over Q(q)")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--dump", action="store_true", help="include the generator matrices")
    p = sub.add_parser("gtl-check", parents=[common, data], help="truncated loop-embedding intertwining")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--order", type=int, help="truncation order N (default 7)")
    return parser


def _attach_negative_values(argv):
    """``--hbar -1/2`` would read ``-1/2`` as an option; glue it to its flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--hbar":
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_attach_negative_values(argv))
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    fmt = args.format

    def fail(code, kind, exc):
        emit({"status": "error", "error": kind, "message": str(exc)}, fmt, stderr)
        return code

    try:
        doc = COMMANDS[args.command](args)
    except VerificationFailed as exc:
        exc.doc["status"] = "fail"
        emit(exc.doc, fmt, stdout)
        return EXIT_VERIFY
    except InternalInconsistency as exc:
        return fail(EXIT_VERIFY, type(exc).__name__, exc)
    except (UsageError, SchemaError, IllegalType, TruncationTooSmall) as exc:
        return fail(EXIT_USAGE, type(exc).__name__, exc)
    except (WordError, NotReduced, NotLongestElement) as exc:
        return fail(EXIT_WORD, type(exc).__name__, exc)
    except (NonzeroChainSum, NonzeroDegree, NotPolynomial, SingularMatrix) as exc:
        return fail(EXIT_SOLVER, type(exc).__name__, exc)
    doc["status"] = "ok"
    emit(doc, fmt, stdout)
    return EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
