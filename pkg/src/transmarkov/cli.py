"""
Command-line front end.

Exit codes: 0 success or true, 1 false or not found, 2 error.  Braid
arguments are file paths, ``-`` for stdin, or inline ``n=4:-1 2 -3``.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from dataclasses import fields

from . import contact, geometry
from .alexander import alexander_poly, format_poly
from .braid import (
    BraidWord,
    closure_permutation,
    component_tb_decomposition,
    degree,
    format_braid,
    linking_matrix,
    parse_braid,
    parse_inline,
    self_linking,
)
from .garside import ConjugacyBudgetExceeded, conj_key, equal, normal_form
from .moves import (
    MODES,
    TRANSVERSAL,
    MoveError,
    apply_move,
    format_certificate,
    parse_certificate,
    parse_move,
    verify_certificate,
)
from .search import FOUND, PRUNED, SearchBudget, reduce_to_standard_unknot, search

OK, FALSE, ERROR = 0, 1, 2


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def load_braid(arg: str) -> BraidWord:
    if arg != "-" and not os.path.exists(arg) and ":" in arg:
        return parse_inline(arg)
    return parse_braid(_read(arg))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _budget(args) -> SearchBudget:
    data = {}
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError("config file must hold a JSON object")
    for f in fields(SearchBudget):
        v = getattr(args, "budget_" + f.name)
        if v is not None:
            data[f.name] = v
    if data.get("max_seconds") == 0:
        data["max_seconds"] = None
    return SearchBudget.from_mapping(data)


# ---------------------------------------------------------------------------
# commands


def cmd_normalize(args) -> int:
    nf = normal_form(load_braid(args.braid))
    print(nf)
    _emit(format_braid(nf.to_word()), args.out)
    return OK


def cmd_invariants(args) -> int:
    b = load_braid(args.braid)
    cp = closure_permutation(b)
    print(f"n={b.strands} deg={degree(b)} sl={self_linking(b)} components={cp.components}")
    print(f"alexander={format_poly(alexander_poly(b))}")
    print("component_sl=" + " ".join(map(str, component_tb_decomposition(b))))
    lk = linking_matrix(b)
    if len(lk) > 1:
        print("linking=" + ";".join(" ".join(map(str, row)) for row in lk))
    return OK


def cmd_equal(args) -> int:
    same = equal(load_braid(args.a), load_braid(args.b))
    print("equal" if same else "different")
    return OK if same else FALSE


def cmd_conjkey(args) -> int:
    try:
        key = conj_key(load_braid(args.braid), args.cap)
    except ConjugacyBudgetExceeded as exc:
        print(f"budget: {exc}")
        return FALSE
    print(key)
    return OK


def cmd_moves_apply(args) -> int:
    b = load_braid(args.braid)
    mode = args.mode
    for text in args.move:
        b = apply_move(b, parse_move(text), mode)
    _emit(format_braid(b), args.out)
    return OK


def cmd_cert_verify(args) -> int:
    cert = parse_certificate(_read(args.cert))
    result = verify_certificate(cert)
    if result:
        print(f"valid ({len(cert.steps)} steps, {cert.markov_moves} Markov moves)")
        return OK
    where = "end" if result.failed_step is None else f"step {result.failed_step}"
    print(f"invalid at {where}: {result.reason}")
    return FALSE


def _report(outcome, out) -> int:
    print(f"status {outcome.status}")
    if outcome.status == FOUND:
        _emit(format_certificate(outcome.certificate), out)
        return OK
    if outcome.status == PRUNED:
        print(f"reason {outcome.reason}")
    else:
        print(f"nodes tried {outcome.nodes_tried}")
        if outcome.reason:
            print(f"reason {outcome.reason}")
    return FALSE


def cmd_search(args) -> int:
    outcome = search(load_braid(args.a), load_braid(args.b), _budget(args), args.mode)
    return _report(outcome, args.out)


def cmd_reduce_unknot(args) -> int:
    outcome = reduce_to_standard_unknot(load_braid(args.braid), _budget(args))
    return _report(outcome, args.out)


def cmd_lpq(args) -> int:
    s = contact.l_pq(args.p, args.q)
    print(f"mu={s.mu} tb={s.tb} components={s.components}")
    print(f"sl+={contact.transversalize(s, '+')} sl-={contact.transversalize(s, '-')}")
    return OK


def cmd_closure_indices(args) -> int:
    b = load_braid(args.braid)
    cmp = contact.compare_closure_braid(args.p, args.q, b)
    s = cmp.indices
    print(f"mu={s.mu} tb={s.tb} components={s.components}")
    print(f"braid sl={cmp.braid_self_linking} components={cmp.braid_components} "
          f"push-offs={cmp.positive_push},{cmp.negative_push}")
    return OK


def cmd_front(args) -> int:
    f = contact.parse_front(_read(args.front))
    tb = contact.front_tb(f)
    if f.components == 1:
        print(f"tb={tb} mu={contact.front_mu(f)}")
    else:
        print(f"tb={tb}")
    return OK


def cmd_geom_check(args) -> int:
    c = geometry.parse_curve(_read(args.curve))
    tr = geometry.check_transversal(c, args.tol)
    bad = [int(i) for k in range(len(c.components)) for i in tr.failing(k)]
    print(f"transversal={'yes' if tr.ok else 'no'}"
          + ("" if tr.ok else f" failing_samples={len(bad)}"))
    try:
        ok, deg = geometry.check_geometric_braid(c, args.tol)
    except ValueError as exc:
        print(f"braid=error ({exc})")
        ok, deg = False, None
    print(f"braid={'yes' if ok else 'no'}" + (f" degree={deg}" if ok else ""))
    zones = geometry.bad_zones(c, args.tol)
    for k, comp in enumerate(zones.zones):
        for z in comp:
            print(f"zone component={k} start={z.start} stop={z.stop} "
                  f"dtheta={z.theta_increment:.6f} {'simple' if z.simple else 'non-simple'}")
    return OK if tr.ok and ok else FALSE


def cmd_geom_model(args) -> int:
    import numpy as np

    c = geometry.local_model(args.tau, args.z0, args.samples)
    grid = np.linspace(-2, 2, 101)
    err = geometry.verify_model_identity(grid, grid)
    tr = geometry.check_transversal(c, args.tol)
    text = (f"# identity_error={err:.3e} transversal={'yes' if tr.ok else 'no'} "
            f"self_crossings={geometry.planar_self_crossings(c)}\n"
            + geometry.format_curve(c))
    _emit(text, args.out)
    return OK if err < 1e-9 else FALSE


# ---------------------------------------------------------------------------


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON file with SearchBudget keys")
    for f in fields(SearchBudget):
        kind = float if f.name == "max_seconds" else int
        p.add_argument("--budget-" + f.name.replace("_", "-"), dest="budget_" + f.name,
                       type=kind, default=None,
                       help=f"override {f.name} (default {f.default})")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="transmarkov", description=__doc__.strip().splitlines()[0])
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized behaviour")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="left normal form of a braid")
    p.add_argument("braid")
    p.add_argument("--out")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("invariants", help="degree, self-linking, components, Alexander")
    p.add_argument("braid")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("equal", help="decide equality in B_n")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("conjkey", help="canonical conjugacy key")
    p.add_argument("braid")
    p.add_argument("--cap", type=int, default=None)
    p.set_defaults(func=cmd_conjkey)

    p = sub.add_parser("moves-apply", help="apply certificate steps to a braid")
    p.add_argument("braid")
    p.add_argument("move", nargs="+", help="step in certificate syntax, e.g. 'conj +2'")
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_moves_apply)

    p = sub.add_parser("cert-verify", help="verify a move certificate")
    p.add_argument("cert")
    p.set_defaults(func=cmd_cert_verify)

    p = sub.add_parser("search", help="search for a certificate between two braids")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--mode", choices=MODES, default=TRANSVERSAL)
    p.add_argument("--out")
    _add_budget(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reduce-unknot", help="reduce an unknot braid to the standard form")
    p.add_argument("braid")
    p.add_argument("--out")
    _add_budget(p)
    p.set_defaults(func=cmd_reduce_unknot)

    p = sub.add_parser("lpq", help="indices of the Legendrian unknot L_{p,q}")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(func=cmd_lpq)

    p = sub.add_parser("closure-indices", help="indices of the closure of b around L_{p,q}")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("braid")
    p.set_defaults(func=cmd_closure_indices)

    p = sub.add_parser("front", help="tb and mu of a front diagram")
    p.add_argument("front")
    p.set_defaults(func=cmd_front)

    p = sub.add_parser("geom-check", help="transversality and braid checks on a sampled curve")
    p.add_argument("curve")
    p.add_argument("--tol", type=float, default=1e-6)
    p.set_defaults(func=cmd_geom_check)

    p = sub.add_parser("geom-model", help="sample the local model near an axis crossing")
    p.add_argument("--tau", type=float, default=0.5)
    p.add_argument("--z0", type=float, default=0.0)
    p.add_argument("--samples", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_geom_model)
    return ap


def run(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return ERROR if exc.code else OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    random.seed(args.seed)
    try:
        return args.func(args)
    except (ValueError, MoveError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
