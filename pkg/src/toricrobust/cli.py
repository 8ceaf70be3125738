"""Command line front end.

    toricrobust COMMAND MATRIX [options]

MATRIX is a file in the 4ti2 layout ("rows cols" header, then one line per
row) or "-" for standard input.  Column indices on the command line and in
reports are 1-based.  Exit codes: 0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

from . import bases, codim2, oracles
from .bouquet import bouquet_decomposition
from .errors import MatrixFormatError, ToricError
from .groebner import WeightOrder, reduced_groebner
from .intlin import IntMatrix, gale_transform, require_grading
from .robustness import (
    GLMSpec,
    delta_complex,
    generalized_lawrence,
    glm_postconditions,
    lambda_omega,
    s_omega,
)

COMMANDS = ("gale", "bouquets", "graver", "markov", "umarkov", "indisp", "circuits",
            "gb", "somega", "lambda", "delta", "glm", "check-robust")
FAST = ("graver", "indisp", "circuits", "delta", "check-robust")
INT64 = 2 ** 63 - 1


class UsageError(Exception):
    pass


# ------------------------------------------------------------- input

def parse_matrix(text: str) -> IntMatrix:
    """Parse the "rows cols" + rows layout; each defect has its own message."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MatrixFormatError("empty matrix file")
    head = lines[0]
    if len(head) != 2 or not all(_is_int(t) for t in head):
        raise MatrixFormatError(f"malformed header {' '.join(head)!r}: expected 'rows cols'")
    m, n = int(head[0]), int(head[1])
    if m < 1 or n < 1:
        raise MatrixFormatError(f"header declares a {m}x{n} matrix; both counts must be positive")
    body = lines[1:]
    if len(body) != m:
        raise MatrixFormatError(f"header declares {m} rows, found {len(body)}")
    rows = []
    for i, toks in enumerate(body, 1):
        bad = [t for t in toks if not _is_int(t)]
        if bad:
            raise MatrixFormatError(f"row {i}: non-integer token {bad[0]!r}")
        if len(toks) != n:
            raise MatrixFormatError(f"row {i} has {len(toks)} of {n} entries")
        rows.append(tuple(int(t) for t in toks))
    return IntMatrix(tuple(rows))


def _is_int(tok: str) -> bool:
    t = tok[1:] if tok[:1] in "+-" else tok
    return t.isdigit() and t.isascii()


def load_matrix(path: str) -> tuple:
    """(matrix, raw bytes) from a path or '-'."""
    if path == "-":
        raw = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        raise MatrixFormatError("matrix file is not UTF-8 text") from None
    return parse_matrix(text), raw


def format_matrix(A: IntMatrix) -> list:
    return [f"{A.nrows} {A.ncols}"] + [" ".join(map(str, r)) for r in A.rows]


def _int_list(text: str, what: str) -> list:
    if not text.strip():
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"{what}: expected comma separated integers, got {text!r}") from None


def parse_omega(text: str | None, s: int) -> frozenset:
    if text is None:
        return frozenset()
    idx = _int_list(text, "--omega")
    bad = [i for i in idx if not 1 <= i <= s]
    if bad:
        raise ToricError(f"omega index out of range 1..{s}: {bad}")
    return frozenset(i - 1 for i in idx)


def parse_order(text: str | None, n: int) -> WeightOrder:
    if text is None:
        return WeightOrder((1,) * n)
    try:
        w = tuple(Fraction(t) for t in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--order: expected comma separated rationals, got {text!r}") from None
    if len(w) != n:
        raise UsageError(f"--order has {len(w)} weights for {n} columns")
    try:
        return WeightOrder(w)
    except ValueError as exc:
        raise UsageError(f"--order: {exc}") from None


def parse_vectors(text: str, what: str) -> list:
    return [tuple(_int_list(part, what)) for part in text.split(";")]


# -------------------------------------------------------------- output

def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x) if abs(x) > INT64 else x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    return [_jsonable(v) for v in x]


def _vec(v) -> str:
    return " ".join(str(x) for x in v)


def _face(f) -> str:
    return "{" + ",".join(str(i + 1) for i in sorted(f)) + "}"


class Report:
    def __init__(self, echo: str, digest: str):
        self.echo = echo
        self.digest = digest
        self.lines: list = []
        self.data: dict = {}

    def put(self, key, value, text_lines):
        self.data[key] = value
        self.lines.extend(text_lines)

    def vectors(self, key, vs, label=None):
        vs = sorted(tuple(v) for v in vs)
        self.put(key, vs, [f"{label or key} {len(vs)}"] + [_vec(v) for v in vs])

    def render(self, as_json: bool) -> str:
        if as_json:
            doc = {"command": self.echo, "input_sha256": self.digest, "result": _jsonable(self.data)}
            return json.dumps(doc, sort_keys=True, indent=1) + "\n"
        head = [f"# {self.echo}", f"# input sha256 {self.digest}"]
        return "\n".join(head + self.lines) + "\n"


# ------------------------------------------------------------ commands

def _check(ok: bool, what: str):
    if not ok:
        raise ArithmeticError(f"oracle mismatch: {what}")


def _graver_oracle(A, G):
    n = A.ncols
    K = oracles.graver_box_bound(A)
    if oracles.box_size(A, [-K] * n, [K] * n) > 2_000_000:
        raise UsageError("--oracle: Graver box too large for brute force")
    _check(oracles.graver_box(A, K) == G.as_set(), "graver vs box enumeration")


def run(args, A: IntMatrix, rep: Report):
    cmd = args.command
    fast = args.codim2_fast
    if fast and cmd not in FAST:
        raise UsageError(f"--codim2-fast applies only to: {', '.join(FAST)}")
    if cmd not in ("gale", "lambda", "glm"):
        require_grading(A)

    if cmd == "gale":
        G = gale_transform(A)
        rep.put("gale", [list(r) for r in G.rows],
                [f"gale {A.ncols} {G.k}"] + [_vec(r) for r in G.rows])

    elif cmd == "bouquets":
        dec = bouquet_decomposition(A)
        out, lines = [], [f"bouquets {dec.s}"]
        for b in dec.bouquets:
            members = [j + 1 for j in b.members]
            out.append({"members": members, "kind": b.kind.value, "cvec": list(b.coefficients)})
            lines.append(f"{b.kind.value}: members {_vec(members)} cvec {_vec(b.coefficients)}")
        rep.put("bouquets", out, lines)
        omega = sorted(i + 1 for i in dec.signature)
        rep.put("omega", omega, [f"omega {_face(dec.signature)}"])

    elif cmd == "graver":
        if fast:
            G = codim2.graver_and_indispensable_codim2(A)[0]
            if args.oracle:
                _check(G == bases.graver(A), "codim2 graver vs completion")
        else:
            G = bases.graver(A)
        if args.oracle:
            _graver_oracle(A, G)
        rep.vectors("graver", G)

    elif cmd == "markov":
        M = bases.minimal_markov(A)
        if args.oracle:
            _check(oracles.is_markov_brute(A, M, bases.graver(A)), "minimal Markov basis does not connect")
        rep.vectors("markov", M)

    elif cmd == "umarkov":
        U = bases.universal_markov(A)
        if args.oracle:
            ms = oracles.all_minimal_markov(A, bases.graver(A))
            _check(frozenset().union(*ms) == U.as_set(), "universal Markov vs subset search")
        rep.vectors("umarkov", U)

    elif cmd == "indisp":
        if fast:
            S = codim2.graver_and_indispensable_codim2(A)[1]
            if args.oracle:
                _check(S == bases.indispensable_set(A), "codim2 indispensables vs generic")
        else:
            S = bases.indispensable_set(A)
        if args.oracle:
            _check(S == bases.indispensable_by_fibers(A), "indispensables vs fiber graphs")
        rep.vectors("indisp", S)

    elif cmd == "circuits":
        C = codim2.circuits_codim2(A) if fast else bases.circuits(A)
        if args.oracle:
            _check(C.as_set() == oracles.brute_circuits(A), "circuits vs column subsets")
        rep.vectors("circuits", C)

    elif cmd == "gb":
        order = parse_order(args.order, A.ncols)
        gb = reduced_groebner(A, order)
        if args.oracle:
            ref = oracles.groebner_by_fibers(A, order.weights, bases.graver(A))
            _check(ref == {m.vector for m in gb}, "Groebner basis vs standard monomials")
        rep.put("order", [str(w) for w in order.weights],
                ["order " + " ".join(str(w) for w in order.weights)])
        rep.vectors("gb", (m.vector for m in gb), "gb (leading exponent = positive part)")

    elif cmd == "somega":
        omega = parse_omega(args.omega, A.ncols)
        S = s_omega(A, omega)
        if args.oracle:
            _check(S.as_set() == oracles.s_omega_direct(A, omega, bases.graver(A)), "S_omega vs direct criterion")
        rep.put("omega", sorted(i + 1 for i in omega), [f"omega {_face(omega)}"])
        rep.vectors("somega", S)

    elif cmd == "lambda":
        omega = parse_omega(args.omega, A.ncols)
        L = lambda_omega(A, omega)
        rep.put("matrix", [list(r) for r in L.rows], format_matrix(L))

    elif cmd == "delta":
        cx = delta_complex(A, "codim2" if fast else "lawrence")
        if args.oracle and fast:
            _check(cx == delta_complex(A), "codim2 complex vs Lawrence path")
        faces = cx.sorted_faces()
        rep.put("faces", [[i + 1 for i in f] for f in faces],
                [f"faces {len(faces)}"] + [_face(f) for f in faces])
        facets = [tuple(sorted(f)) for f in cx.facets]
        rep.put("facets", [[i + 1 for i in f] for f in facets], ["facets " + " ".join(_face(f) for f in facets)])

    elif cmd == "glm":
        if not args.cvecs:
            raise UsageError("glm needs --cvecs")
        cvecs = parse_vectors(args.cvecs, "--cvecs")
        if args.lambdas:
            spec = GLMSpec(A, tuple(cvecs), tuple(parse_vectors(args.lambdas, "--lambdas")))
        else:
            spec = GLMSpec.from_cvecs(A, cvecs)
        D = generalized_lawrence(spec)
        rep.put("matrix", [list(r) for r in D.rows], format_matrix(D))
        problems = glm_postconditions(spec, D)
        rep.put("postconditions", problems or "ok",
                ["postconditions " + ("ok" if not problems else "; ".join(problems))])
        if problems:
            raise ToricError("generalized Lawrence matrix fails its postconditions")

    elif cmd == "check-robust":
        if fast:
            robust = codim2.is_strongly_robust_codim2(A)
            if args.oracle:
                _check(robust == bases.is_strongly_robust(A), "codim2 robustness vs generic")
        else:
            robust = bases.is_strongly_robust(A)
        rep.put("strongly_robust", robust, [f"strongly robust {str(robust).lower()}"])


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricrobust", description="Toric bases and strong robustness.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("matrix", help="matrix file ('rows cols' header) or - for stdin")
    p.add_argument("--omega", help="comma separated 1-based column indices of T")
    p.add_argument("--order", help="comma separated non-negative weights (rationals allowed)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--codim2-fast", action="store_true", help="use Hilbert bases of the Gale diagram")
    p.add_argument("--oracle", action="store_true", help="cross-check against brute force")
    p.add_argument("--cvecs", help="glm: c-vectors, e.g. '1,-1;5,6,7,8'")
    p.add_argument("--lambdas", help="glm: λ-vectors in the same layout (default: computed)")
    return p


def _echo(args) -> str:
    parts = ["toricrobust", args.command]
    for flag in ("omega", "order", "cvecs", "lambdas"):
        val = getattr(args, flag)
        if val is not None:
            parts.append(f"--{flag}={val}")
    for flag in ("codim2_fast", "oracle", "json"):
        if getattr(args, flag):
            parts.append("--" + flag.replace("_", "-"))
    return " ".join(parts)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        A, raw = load_matrix(args.matrix)
        rep = Report(_echo(args), hashlib.sha256(raw).hexdigest())
        run(args, A, rep)
    except (UsageError, MatrixFormatError) as exc:
        print(f"toricrobust: usage error: {exc}", file=sys.stderr)
        return 2
    except (ToricError, ArithmeticError) as exc:
        print(f"toricrobust: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(rep.render(args.json))
    print(f"# time {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
