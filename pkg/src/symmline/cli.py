"""Command-line interface.

Every verb prints human-readable text by default, or one JSON object
with stable field names {verb, inputs, result, oracle, elapsed_ms}
under --json.  Exit status: 0 success, 1 domain error (the library
error class name is printed), 2 parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import ParseError, SymmlineError
from .quotients import (
    MultSet,
    addition_map,
    count_points,
    free_quotient_oracle,
    is_free_quotient,
    recover_monic,
    section_map,
)
from .homs import RingHom
from .matrices import SquareMatrix, char_poly, mult_matrix
from .multipoly import MultiPoly
from .norms import (
    mult_char_poly,
    norm,
    norm_symmetric,
    push_norm,
    resultant_symmetry_check,
)
from .oracles import charpoly_cofactor, sylvester_resultant
from .errors import InvariantViolationError, UnsupportedRingError
from .parsing import (
    parse_multipoly,
    parse_poly,
    parse_ring,
    parse_scalar,
    parse_symelem,
    parse_sympoly1,
)
from .poly import MonicPoly, PolyRing
from .rings import PrimeField, ZmodRing
from .selftest import DEFAULT_SEED, run_selftest
from .symmetric import decompose, sym_ops_of


def _monic(text: str, ring) -> MonicPoly:
    p = parse_poly(text, ring)
    try:
        return MonicPoly(p)
    except ValueError as exc:
        raise SymmlineError(str(exc)) from exc


def parse_multset(text: str, ring) -> MultSet:
    t = text.strip()
    if t == "trivial":
        return MultSet.trivial(ring)
    if t == "all-nonzero":
        return MultSet.all_nonzero(ring)
    if t.startswith("gens:"):
        parts = [p for p in t[5:].split(",") if p.strip()]
        if not parts:
            raise ParseError("gens: needs at least one polynomial")
        return MultSet.generated(*(parse_poly(p, ring) for p in parts))
    if t.startswith("local-at:"):
        return MultSet.local_at(parse_scalar(t[9:], ring))
    raise ParseError(f"unknown multiplicative set {text!r}")


def _parse_matrix(text: str, ring) -> SquareMatrix:
    rows = []
    for row_text in text.split(";"):
        entries = [e for e in row_text.split(",") if e.strip()]
        if not entries:
            raise ParseError("empty matrix row")
        rows.append([parse_scalar(e, ring) for e in entries])
    return SquareMatrix(ring, rows)


def _cmd_norm(args):
    ring = parse_ring(args.ring)
    modulus = _monic(args.F, ring)
    f = parse_poly(args.f, ring)
    matrix_route = norm(f, modulus)
    symmetric_route = norm_symmetric(f, modulus)
    if matrix_route != symmetric_route:
        raise InvariantViolationError(
            f"norm routes disagree: {matrix_route} vs {symmetric_route}"
        )
    return (
        str(matrix_route),
        {"matrix": str(matrix_route), "symmetric": str(symmetric_route)},
        [f"norm = {matrix_route}", "matrix and symmetric routes agree"],
    )


def _cmd_charpoly(args):
    ring = parse_ring(args.ring)
    modulus = _monic(args.F, ring)
    f = parse_poly(args.f, ring)
    symbolic = mult_char_poly(f, modulus)
    via_matrix = char_poly(mult_matrix(f, modulus))
    if symbolic != via_matrix:
        raise InvariantViolationError(
            f"characteristic polynomial routes disagree:"
            f" {symbolic} vs {via_matrix}"
        )
    return (
        str(symbolic),
        {"matrix": str(via_matrix)},
        [f"charpoly = {symbolic}", "matrix route agrees"],
    )


def _cmd_sym_ops(args):
    ring = parse_ring(args.ring)
    f = parse_poly(args.f, ring)
    ops = sym_ops_of(f, args.n)
    result = [str(s) for s in ops]
    lines = [f"s_{i} = {s}" for i, s in enumerate(result, start=1)]
    return result, None, lines


def _cmd_decompose(args):
    ring = parse_ring(args.ring)
    m = parse_multipoly(args.expr, ring, args.n)
    s = decompose(m)
    expanded_back = s.expand() == m
    if not expanded_back:
        raise InvariantViolationError("expansion of the result differs")
    return (
        str(s),
        {"expand_back_equal": True},
        [f"decomposition = {s}", "expands back to the input"],
    )


def _cmd_resultant_check(args):
    ring = parse_ring(args.ring)
    first = _monic(args.P, ring)
    second = _monic(args.Q, ring)
    holds = resultant_symmetry_check(first, second)
    lhs = norm(second.poly, first)
    rhs = norm(first.poly, second)
    oracle = {
        "N_P(Q)": str(lhs),
        "N_Q(P)": str(rhs),
        "sylvester_N_P(Q)": str(sylvester_resultant(first, second.poly)),
    }
    lines = [
        f"symmetry holds: {_bool(holds)}",
        f"N_P(Q) = {lhs}, N_Q(P) = {rhs},"
        f" sign (-1)^(pq) = {'-1' if (first.degree * second.degree) % 2 else '1'}",
    ]
    return holds, oracle, lines


def _make_hom(args, ring) -> RingHom:
    if args.eval is not None:
        if not isinstance(ring, PolyRing):
            raise UnsupportedRingError(
                f"--eval needs a polynomial coefficient ring, got {ring.name}"
            )
        return RingHom.eval_tower(ring, parse_scalar(args.eval, ring.base))
    if args.to is None:
        raise SymmlineError("push-norm needs --to RING or --eval POINT")
    target = parse_ring(args.to)
    if target == ring:
        return RingHom.identity(ring)
    from .rings import ZZ

    if ring == ZZ and isinstance(target, ZmodRing):
        return RingHom.int_reduce(target)
    if isinstance(ring, ZmodRing) and isinstance(target, ZmodRing):
        return RingHom.mod_reduce(ring, target)
    raise UnsupportedRingError(
        f"no reduction rule from {ring.name} to {target.name}"
    )


def _cmd_push_norm(args):
    ring = parse_ring(args.ring)
    hom = _make_hom(args, ring)
    modulus = _monic(args.F, ring)
    f = parse_poly(args.f, ring)
    pushed, recomputed = push_norm(hom, f, modulus)
    equal = pushed == recomputed
    if not equal:
        raise InvariantViolationError(
            f"push_norm components differ: {pushed} vs {recomputed}"
        )
    return (
        {"pushed": str(pushed), "recomputed": str(recomputed)},
        {"equal": True},
        [
            f"hom: {hom.describe()}",
            f"pushed norm = {pushed}, norm after base change = {recomputed}",
        ],
    )


def _cmd_membership(args):
    ring = parse_ring(args.ring)
    modulus = _monic(args.F, ring)
    mult_set = parse_multset(args.multset, ring)
    member = is_free_quotient(modulus, mult_set)
    oracle = None
    if isinstance(ring, ZmodRing) and mult_set.kind == "generated":
        if ring.modulus ** modulus.degree <= 4096:
            agreed = free_quotient_oracle(modulus, mult_set)
            if agreed != member:
                raise InvariantViolationError(
                    "membership criterion and exhaustive oracle disagree"
                )
            oracle = {"exhaustive_search": agreed}
    lines = [f"free quotient: {_bool(member)}"]
    if oracle is not None:
        lines.append("exhaustive-search oracle agrees")
    return member, oracle, lines


def _cmd_recover(args):
    ring = parse_ring(args.ring)
    theta = _parse_matrix(args.matrix, ring)
    result = recover_monic(theta)
    oracle = None
    if theta.n <= 4:
        cross = charpoly_cofactor(theta)
        if cross != result:
            raise InvariantViolationError(
                "cofactor characteristic polynomial differs"
            )
        oracle = {"cofactor": str(cross)}
    lines = [f"monic generator = {result}"]
    return str(result), oracle, lines


def _cmd_addition(args):
    ring = parse_ring(args.ring)
    s = parse_symelem(args.expr, ring, args.n)
    image = addition_map(s)
    return str(image), None, [f"image = {image}"]


def _cmd_section(args):
    ring = parse_ring(args.ring)
    t = parse_sympoly1(args.expr, ring, args.n)
    image = section_map(t)
    return str(image), None, [f"image = {image}"]


def _cmd_count(args):
    ring = parse_ring(args.ring)
    if not isinstance(ring, PrimeField):
        raise UnsupportedRingError(
            f"count needs a prime field GF:q, got {ring.name}"
        )
    mult_set = parse_multset(args.multset, ring)
    workers = int(os.environ.get("SYMMLINE_THREADS", "1"))
    started = time.perf_counter()
    value = count_points(ring.modulus, args.n, mult_set, workers=workers)
    elapsed = (time.perf_counter() - started) * 1000.0
    record = {
        "q": ring.modulus,
        "n": args.n,
        "multset": mult_set.describe(),
        "count": value,
        "elapsed_ms": round(elapsed, 3),
    }
    lines = [
        f"count = {value} (q={ring.modulus}, n={args.n},"
        f" multset={mult_set.describe()})"
    ]
    return record, None, lines


def _cmd_selftest(args):
    results = run_selftest(args.seed)
    failures = [name for name, ok, _ in results if not ok]
    lines = [
        f"{'ok  ' if ok else 'FAIL'} {name} -- {detail}"
        for name, ok, detail in results
    ]
    lines.append(
        f"{len(results) - len(failures)}/{len(results)} checks passed"
        + (f"; FAILED: {', '.join(failures)}" if failures else "")
    )
    payload = [
        {"name": name, "ok": ok, "detail": detail}
        for name, ok, detail in results
    ]
    return payload, None, lines, bool(failures)


def _bool(b: bool) -> str:
    return "true" if b else "false"


_INPUT_FLAGS = ("ring", "F", "f", "P", "Q", "n", "expr", "multset", "matrix",
                "to", "eval", "seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symmline",
        description="Exact symmetric-tensor algebra on the line: norms,"
        " resultants, and point counts of free quotients.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, summary, **flags):
        p = sub.add_parser(name, help=summary, description=summary)
        for flag, (kind, required, help_text) in flags.items():
            p.add_argument(
                f"--{flag}", type=kind, required=required, help=help_text
            )
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.set_defaults(handler=fn)
        return p

    ring_flag = (str, True, "ring spec, e.g. ZZ, QQ, Zmod:12, GF:5, Poly:ZZ:T")
    add("norm", _cmd_norm,
        "norm of f on the quotient by F, both routes compared",
        ring=ring_flag,
        F=(str, True, "monic modulus"), f=(str, True, "argument polynomial"))
    add("charpoly", _cmd_charpoly,
        "characteristic polynomial of multiplication-by-f modulo F",
        ring=ring_flag,
        F=(str, True, "monic modulus"), f=(str, True, "argument polynomial"))
    add("sym-ops", _cmd_sym_ops,
        "symmetric operators s_1..s_n of f in the elementary basis",
        ring=ring_flag,
        f=(str, True, "polynomial"), n=(int, True, "arity"))
    add("decompose", _cmd_decompose,
        "write a symmetric polynomial in the elementary basis",
        ring=ring_flag,
        n=(int, True, "number of variables"),
        expr=(str, True, "symmetric polynomial in X1..Xn"))
    add("resultant-check", _cmd_resultant_check,
        "verify the sign law relating the two norms of a monic pair",
        ring=ring_flag,
        P=(str, True, "monic polynomial"), Q=(str, True, "monic polynomial"))
    add("push-norm", _cmd_push_norm,
        "compare the norm pushed through a homomorphism with the norm "
        "after base change",
        ring=ring_flag,
        F=(str, True, "monic modulus"), f=(str, True, "argument polynomial"),
        to=(str, False, "target ring for a reduction rule"),
        eval=(str, False, "evaluation point for a tower variable"))
    add("membership", _cmd_membership,
        "decide whether F generates a free quotient of the localization",
        ring=ring_flag,
        F=(str, True, "monic modulus"),
        multset=(str, True, "trivial | gens:p[,p..] | local-at:a | all-nonzero"))
    add("recover", _cmd_recover,
        "recover the monic generator from the matrix of the X-action",
        ring=ring_flag,
        matrix=(str, True, "rows 'a,b;c,d' acting as X"))
    add("addition", _cmd_addition,
        "apply the addition map, lowering the symmetric arity by one",
        ring=ring_flag,
        n=(int, True, "source arity"),
        expr=(str, True, "element in e1..en"))
    add("section", _cmd_section,
        "apply the section of the addition map, raising the arity",
        ring=ring_flag,
        n=(int, True, "source arity"),
        expr=(str, True, "polynomial in e1..en and X"))
    add("count", _cmd_count,
        "count monic degree-n polynomials generating free quotients",
        ring=ring_flag,
        n=(int, True, "number of points"),
        multset=(str, True, "trivial | gens:p[,p..] | local-at:a | all-nonzero"))
    add("selftest", _cmd_selftest,
        "run every named invariant check with a fixed seed",
        seed=(int, False, f"RNG seed (default {DEFAULT_SEED})"))
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.verb == "selftest" and args.seed is None:
        args.seed = DEFAULT_SEED
    started = time.perf_counter()
    try:
        outcome = args.handler(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (SymmlineError, ValueError) as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    elapsed = (time.perf_counter() - started) * 1000.0
    result, oracle, lines = outcome[0], outcome[1], outcome[2]
    failed = outcome[3] if len(outcome) > 3 else False
    if args.json:
        inputs = {
            flag: getattr(args, flag)
            for flag in _INPUT_FLAGS
            if getattr(args, flag, None) is not None
        }
        print(
            json.dumps(
                {
                    "verb": args.verb,
                    "inputs": inputs,
                    "result": result,
                    "oracle": oracle,
                    "elapsed_ms": round(elapsed, 3),
                }
            )
        )
    else:
        for line in lines:
            print(line)
    return 1 if failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
