"""Command-line surface: one verb per invocation, exit 0 only when the
verb's mathematical claim verifies.

Verbs: emit, pure-ne, solve, verify, certify, sturm, groebner, gn,
sample.  `--format json` mirrors every text report as structured data.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from gmpy2 import mpq

from .rat import format_rational, is_prime, rational
from .upoly import (
    AlgebraicNumber,
    UPoly,
    count_real_roots,
    format_upoly,
    isolate_roots,
    murty_certificate,
    parse_upoly,
    sign_changes_at,
    sturm_chain,
)
from .mpoly import buchberger, format_mpoly, lex_order, parse_mpoly
from .galois import irradicality_verdict, sn_certificate
from .games import (
    Game,
    advantage_polys,
    approx_profile,
    format_game,
    game_from_json,
    game_to_json,
    parse_game,
    pure_ne,
    solve_all_ne,
    verify_ne,
)
from .construct import composed_report, make_gn, make_named
from .sampler import BitSource, bernoulli

_NAMED = ("G3", "G4", "G5", "H3")


def _load_game(token: str) -> Game:
    if token in _NAMED:
        return make_named(token)
    if token.isdigit():
        return make_gn(int(token))[0]
    path = Path(token)
    if not path.exists():
        raise SystemExit(f"error: no such game or file: {token}")
    text = path.read_text()
    if text.lstrip().startswith("{"):
        return game_from_json(text)
    return parse_game(text, path.stem)


def _load_poly(token: str) -> UPoly:
    path = Path(token)
    text = path.read_text().strip() if path.exists() else token
    for var in ("x", "y"):
        try:
            f = parse_upoly(text, var)
            if not f.is_zero() or text.strip() == "0":
                return f
        except Exception:
            continue
    raise SystemExit(f"error: cannot parse polynomial: {token}")


def _emit(args) -> int:
    if args.recipe:
        game, recipe = make_gn(int(args.game))
        if args.format == "json":
            print(json.dumps({"n": recipe.n, "q": recipe.q, "r": recipe.r,
                              "factors": list(recipe.factors)}, ensure_ascii=False))
        else:
            print(f"n = {recipe.n} = 4*{recipe.q} + {recipe.r}")
            print("factors: " + " x ".join(recipe.factors))
        return 0
    g = _load_game(args.game)
    print(game_to_json(g) if args.format == "json" else format_game(g), end="")
    return 0


def _pure_ne(args) -> int:
    g = _load_game(args.game)
    nes, table = pure_ne(g)
    if args.format == "json":
        print(json.dumps({
            "pure_nes": [list(p) for p in nes],
            "deviations": {"".join(map(str, p)): sorted(s) for p, s in table.entries},
        }))
        return 0
    print(f"pure NEs: {len(nes)}")
    for p in nes:
        print("  " + "".join(map(str, p)))
    print("deviation table (profile -> strictly improving players):")
    for p, s in table.entries:
        print("  " + "".join(map(str, p)) + " -> " + (",".join(map(str, sorted(s))) or "-"))
    return 0


def _solve(args) -> int:
    g = _load_game(args.game)
    rep = solve_all_ne(g)
    payload = {
        "pure_nes": [list(p) for p in rep.pure_nes],
        "mixed_nes": [],
        "uniqueness": rep.uniqueness,
        "unresolved_faces": ["".join(sup) for sup, _ in rep.positive_dimensional_faces],
    }
    for eq in rep.mixed_nes:
        payload["mixed_nes"].append({
            "support": list(eq.support),
            "defining": [format_upoly(d, "y") for d in eq.defining],
        })
    if rep.total_nes == 1:
        payload["decimals"] = approx_profile(rep, args.digits)
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(f"pure NEs: {len(rep.pure_nes)}; mixed NEs: {len(rep.mixed_nes)}; "
              f"uniqueness: {rep.uniqueness}")
        for eq in rep.mixed_nes:
            print("support: " + " ".join(eq.support))
            for j, d in enumerate(eq.defining):
                print(f"  P_{j+1}(y) = {format_upoly(d, 'y')}")
        if "decimals" in payload:
            for j, s in enumerate(payload["decimals"]):
                print(f"  x_{j+1} ~ {s}")
    return 0 if rep.uniqueness != "unresolved" else 1


def _verify(args) -> int:
    g = _load_game(args.game)
    probs = [rational(t) for t in args.profile.split(",")]
    verdict, why = verify_ne(g, probs, refine_budget=args.refine_budget)
    if args.format == "json":
        print(json.dumps({"verdict": verdict if isinstance(verdict, str) else bool(verdict),
                          "explanation": why}))
    else:
        print(f"verdict: {verdict}")
        print(f"reason: {why}")
    return 0 if verdict is True else 1


def _certify(args) -> int:
    f = _load_poly(args.poly)
    lines = [("polynomial", format_upoly(f, "y")), ("degree", str(f.degree))]
    ok = True
    m = murty_certificate(f)
    if m is not None:
        lines += [("murty-witness", str(m.witness)), ("murty-value", str(m.value)),
                  ("murty-H", format_rational(m.H)),
                  ("murty-prime", str(is_prime(m.value)))]
    else:
        lines.append(("murty", "not-found"))
    sn = sn_certificate(f, args.prime_bound)
    if sn is not None:
        lines.append(("galois-group", f"S_{sn.degree}"))
        lines.append(("sn-template", sn.template))
        if sn.template == "transposition":
            lines.append(("prime-ncycle-minus1", str(sn.prime_ncycle_minus1)))
            lines.append(("prime-transposition", str(sn.prime_transposition)))
        else:
            lines.append(("prime-irreducible", str(sn.prime_irreducible)))
            lines.append(("prime-qcycle", f"{sn.prime_qcycle} (q={sn.qcycle_length})"))
            lines.append(("prime-odd", f"{sn.prime_odd} {sn.odd_pattern}"))
    else:
        lines.append(("sn-certificate", "inconclusive"))
        ok = False
    roots = isolate_roots(f)
    if roots:
        a = AlgebraicNumber(f.primitive(), roots[0], m if m is not None else None)
        try:
            v = irradicality_verdict(a, args.prime_bound)
            lines.append(("verdict", v.verdict))
            lines.append(("verdict-note", v.note))
            ok = ok and v.verdict != "unknown"
        except ValueError as e:
            lines.append(("verdict", f"error: {e}"))
            ok = False
    if args.format == "json":
        print(json.dumps(dict(lines)))
    else:
        for k, v in lines:
            print(f"{k}: {v}")
    return 0 if ok else 1


def _sturm(args) -> int:
    f = _load_poly(args.poly)
    chain = sturm_chain(f)
    payload = {"chain": [format_upoly(g, "y") for g in chain.polys]}
    if args.at:
        pts = [rational(t) for t in args.at]
        payload["V"] = {format_rational(q): sign_changes_at(chain, q) for q in pts}
        payload["counts"] = {
            f"({format_rational(a)},{format_rational(b)}]": count_real_roots(f, a, b)
            for a, b in zip(pts, pts[1:])
        }
    payload["real-roots"] = count_real_roots(f)
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for i, s in enumerate(payload["chain"]):
            print(f"p_{i}: {s}")
        for key in ("V", "counts"):
            for k, v in payload.get(key, {}).items():
                print(f"{key} {k}: {v}")
        print(f"real roots: {payload['real-roots']}")
    return 0


def _groebner(args) -> int:
    text = Path(args.system).read_text() if Path(args.system).exists() else args.system
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    names = lines[0].split()
    polys = [parse_mpoly(ln, names) for ln in lines[1:]]
    gb = buchberger(polys, lex_order(len(names)))
    out = [format_mpoly(g, names) for g in gb.integer_cleared()]
    if args.format == "json":
        print(json.dumps({"variables": names, "basis": out}))
    else:
        for s in out:
            print(s)
    return 0


def _gn(args) -> int:
    n = int(args.n)
    rep = composed_report(n)
    payload = {
        "n": n,
        "factors": list(rep.recipe.factors),
        "lemma_based": rep.lemma_based,
        "uniqueness": rep.uniqueness,
        "coordinates": [
            {"player": c.player, "factor": c.factor,
             "defining": format_upoly(c.defining, "y"),
             "mirrors": c.mirrored_from}
            for c in rep.coordinates
        ],
    }
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False))
    else:
        print(f"G_{n}: factors " + " x ".join(rep.recipe.factors)
              + ("  [composed via product/H3 lemmas]" if rep.lemma_based else ""))
        for c in rep.coordinates:
            tail = f" (mirrors x_{c.mirrored_from})" if c.mirrored_from else ""
            print(f"  x_{c.player}: deg-{c.defining.degree} defining poly from {c.factor}{tail}")
    return 0 if rep.uniqueness is True else 1


def _sample(args) -> int:
    g = _load_game(args.game)
    rep = solve_all_ne(g)
    profile = rep.unique_equilibrium()
    src = BitSource(args.seed)
    counts = [0] * g.n
    for _ in range(args.draws):
        for i, p in enumerate(profile):
            action, _trace = bernoulli(p, src)
            if action == 0:
                counts[i] += 1
    freqs = [c / args.draws for c in counts]
    if args.format == "json":
        print(json.dumps({"draws": args.draws, "seed": args.seed,
                          "frequencies": freqs, "bits": src.bits_consumed}))
    else:
        for i, fr in enumerate(freqs):
            print(f"x_{i+1}: {fr:.6f}")
        print(f"draws: {args.draws}  bits consumed: {src.bits_consumed}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="irradical")
    sub = ap.add_subparsers(dest="verb", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("emit", help="write a game file (named or G_n)")
    p.add_argument("game")
    p.add_argument("--recipe", action="store_true")
    common(p)
    p.set_defaults(func=_emit)

    p = sub.add_parser("pure-ne", help="pure equilibria and deviation table")
    p.add_argument("game")
    common(p)
    p.set_defaults(func=_pure_ne)

    p = sub.add_parser("solve", help="full exact NE enumeration")
    p.add_argument("game")
    p.add_argument("--digits", type=int, default=12)
    common(p)
    p.set_defaults(func=_solve)

    p = sub.add_parser("verify", help="check a profile against Lemma 2.1")
    p.add_argument("game")
    p.add_argument("profile", help="comma-separated rationals, e.g. 1/2,1/2,1/2")
    p.add_argument("--refine-budget", type=int, default=256)
    common(p)
    p.set_defaults(func=_verify)

    p = sub.add_parser("certify", help="Murty + S_n + irradicality certificates")
    p.add_argument("poly")
    p.add_argument("--prime-bound", type=int, default=100_000)
    common(p)
    p.set_defaults(func=_certify)

    p = sub.add_parser("sturm", help="Sturm chain, V values, root counts")
    p.add_argument("poly")
    p.add_argument("--at", nargs="*", default=[])
    common(p)
    p.set_defaults(func=_sturm)

    p = sub.add_parser("groebner", help="reduced lex basis of a system")
    p.add_argument("system", help="file: first line variables, then one poly per line")
    common(p)
    p.set_defaults(func=_groebner)

    p = sub.add_parser("gn", help="G_n recipe and composed equilibrium report")
    p.add_argument("n")
    common(p)
    p.set_defaults(func=_gn)

    p = sub.add_parser("sample", help="draw equilibrium play exactly")
    p.add_argument("game")
    p.add_argument("--draws", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=_sample)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
