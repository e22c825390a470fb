"""Command-line front end.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 bad input,
3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import random
import sys
import time

from . import published
from .enumeration import (CLASSES, DEFAULT_BUDGET, BudgetExceeded, count_by_genus,
                          kreweras_count, orbit_census, scan)
from .gf import (CumulantSpec, genus2_parts_gf, genus3_doublet_series, genus_series,
                 oracle_polynomial, y_coefficient)
from .partition import (PartitionError, PartitionType, face_permutation, genus, genus_max,
                        parse_partition, tau_of)
from .poly import KappaPolynomial, kappa_var
from .reduction import census_genus2, reduce

log = logging.getLogger("partgenus")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


# -- genus ---------------------------------------------------------------------

def cmd_genus(args) -> int:
    p = parse_partition(args.partition)
    phi = face_permutation(p)
    g = genus(p)
    payload = {"partition": p.to_json(), "n": p.n, "type": str(p.type),
               "tau": [list(c) for c in tau_of(p).cycles()],
               "faces": [list(c) for c in phi.cycles()], "f": phi.num_cycles(),
               "genus": g, "genus_max": genus_max(p.n, p.type)}
    text = "\n".join([
        f"partition  {p}",
        f"n          {p.n}",
        f"type       {p.type}",
        f"tau        {tau_of(p)}",
        f"faces      {phi}",
        f"f          {payload['f']}",
        f"genus      {g}",
        f"g_max      {payload['genus_max']}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


# -- enumerate -----------------------------------------------------------------

def cmd_enumerate(args) -> int:
    t = PartitionType.parse(args.type) if args.type else None
    if t is not None and t.n != args.n:
        raise PartitionError(f"type {t} is a type of {t.n}, not {args.n}")
    restricted = args.cls != "all"
    if args.orbits or args.list:
        if t is None or args.genus is None:
            raise PartitionError("--list and --orbits need --type and --genus")
        if args.orbits:
            recs = orbit_census(args.n, t, args.genus, args.cls, budget=args.budget,
                                threads=args.threads)
            payload = {"n": args.n, "type": str(t), "genus": args.genus, "class": args.cls,
                       "orbits": [r.to_json() for r in recs],
                       "weight": sum(r.orbit_length for r in recs)}
            lines = [f"{r.representative}   s={r.stabilizer_order}   weight={r.orbit_length}"
                     for r in recs]
            lines.append(f"{len(recs)} orbit(s), total weight {payload['weight']}")
            _emit(args, payload, "\n".join(lines))
            return EXIT_OK
        res = scan(args.n, t, singleton_free=args.singleton_free or restricted,
                   forbid_adjacent=restricted, collect=True, collect_genus=args.genus,
                   collect_class=args.cls, budget=args.budget, threads=args.threads)
        _emit(args, {"partitions": [p.to_json() for p in res.matches]},
              "\n".join(str(p) for p in res.matches))
        return EXIT_OK

    res = scan(args.n, t, singleton_free=args.singleton_free or restricted,
               forbid_adjacent=restricted, budget=args.budget, threads=args.threads)
    cls_index = {"all": None, "primitive": 1, "semiprimitive": 2}[args.cls]
    rows = []
    for i, tt in enumerate(res.types):
        for g in range(res.counts.shape[1]):
            c = int(res.counts[i, g].sum() if cls_index is None else res.counts[i, g, cls_index])
            if c and (args.genus is None or g == args.genus):
                rows.append({"type": str(tt), "genus": g, "count": c})
    total = sum(r["count"] for r in rows)
    if args.count:
        _emit(args, {"n": args.n, "type": str(t) if t else None, "genus": args.genus,
                     "class": args.cls, "count": total}, str(total))
        return EXIT_OK
    text = "\n".join(f"{r['type']:<24} g={r['genus']}  {r['count']}" for r in rows)
    _emit(args, {"n": args.n, "counts": rows}, text + f"\ntotal {total}")
    return EXIT_OK


# -- reduce ----------------------------------------------------------------------

def cmd_reduce(args) -> int:
    p = parse_partition(args.partition)
    tr = reduce(p, check_genus=True)
    payload = tr.to_json()
    lines = [f"input           {p}   (n={p.n}, genus {genus(p)})"]
    if args.trace:
        for s in tr.steps:
            lines.append(f"{s.kind:<22} delete {list(s.detail)}  n {s.before_n} -> {s.after_n}: {s.after}")
    lines.append(f"result          {tr.result if tr.result.n else '(empty)'}  (n={tr.result.n})")
    lines.append(f"classification  {tr.classification}")
    if not args.trace:
        payload.pop("steps")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# -- gf ------------------------------------------------------------------------------

def cmd_gf(args) -> int:
    spec = CumulantSpec.parse(args.kappa)
    z = genus_series(args.genus, spec, args.order)
    payload = {"genus": args.genus, "kappa": str(spec), "order": z.order, "series": z.to_json()}
    if args.format == "json":
        _emit(args, payload, "")
    else:
        lines = [f"Z^({args.genus}) for {spec}, through x^{z.order}:"]
        for k in range(z.order + 1):
            if z[k]:
                lines.append(f"  x^{k}: {z[k]}")
        _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# -- verify -------------------------------------------------------------------------

def _specialize(poly: KappaPolynomial, spec: CumulantSpec, n: int):
    if spec.mode == "symbolic":
        return poly.scalar_if_constant()
    out = poly.subs({kappa_var(k): spec.kappa(k) for k in range(1, n + 1)})
    return out.scalar_if_constant() if isinstance(out, KappaPolynomial) else out


def _first_mismatch(n, g, coeff, table, spec):
    """``None`` or ``(n, type, g, gf value, enumerated value)``."""
    oracle = oracle_polynomial(n, g, table)
    if spec.mode == "symbolic":
        got = coeff.by_type() if isinstance(coeff, KappaPolynomial) else ({(None, 0): coeff} if coeff else {})
        want = {(t, 0): c for t, c in table.by_genus(g).items()}
        for key in sorted(set(got) | set(want), key=str):
            if got.get(key, 0) != want.get(key, 0):
                return n, key[0], g, got.get(key, 0), want.get(key, 0)
        return None
    value = _specialize(oracle, spec, n)
    if coeff != value:
        return n, None, g, coeff, value
    return None


def _fixture_checks() -> dict[str, bool]:
    from .gf import Z0 as z0, Z1 as z1, Z2 as z2
    N = 30
    d, tr = CumulantSpec("doublets"), CumulantSpec("triplets")
    ones, sf = CumulantSpec("all_ones"), CumulantSpec("singleton_free_ones")
    yy, sfy = CumulantSpec("all_y"), CumulantSpec("singleton_free_y")
    t1, t2 = z1(tr, N), z2(tr, N)
    M = 16
    g2 = genus2_parts_gf(M, singleton_free=True)
    return {
        "doublets Z1": z1(d, N) == published.doublets_Z1(N),
        "doublets Z2": z2(d, N) == published.doublets_Z2(N),
        "triplets Z1": all(t1[k] == published.TRIPLETS_Z1.get(k, 0) for k in range(N + 1)),
        "triplets Z2": all(t2[k] == published.TRIPLETS_Z2.get(k, 0) for k in range(22)),
        "ones Z0": z0(ones, N) == published.ones_Z0(N),
        "ones Z1": z1(ones, N) == published.ones_Z1(N),
        "ones Z2": z2(ones, N) == published.ones_Z2(N),
        "singleton-free ones Z0": z0(sf, N) == published.sf_ones_Z0(N),
        "singleton-free ones Z1": z1(sf, N) == published.sf_ones_Z1(N),
        "singleton-free ones Z2": z2(sf, N) == published.sf_ones_Z2(N),
        "y Z0": z0(yy, M) == published.y_Z0(M),
        "y Z1": z1(yy, M) == published.y_Z1(M),
        "y Z2": z2(yy, M) == published.y_Z2(M),
        "singleton-free y Z0": z0(sfy, M) == published.sf_y_Z0(M),
        "singleton-free y Z1": z1(sfy, M) == published.sf_y_Z1(M),
        "genus 2, two parts": y_coefficient(g2, 2) == published.genus2_two_parts(M),
        "genus 2, three parts": y_coefficient(g2, 3) == published.genus2_three_parts(M),
        "genus 3 doublets": all(
            genus3_doublet_series(16)[2 * p] ==
            count_by_genus(2 * p, PartitionType.parse(f"2^{p}")).count(PartitionType.parse(f"2^{p}"), 3)
            for p in (6, 7, 8)),
    }


def cmd_verify(args) -> int:
    spec = CumulantSpec.parse(args.kappa)
    genera = [args.genus] if args.genus is not None else [0, 1, 2]
    report = {"kappa": str(spec), "checks": [], "mismatch": None}
    lines = []
    failed = False
    t0 = time.time()

    if args.types:
        # type-restricted spot checks: one coefficient of the symbolic series each
        cache = {}
        for text in args.types:
            t = PartitionType.parse(text)
            table = count_by_genus(t.n, t, budget=args.budget, threads=args.threads)
            for g in genera:
                if (g, t.n) not in cache:
                    cache[(g, t.n)] = genus_series(g, CumulantSpec("symbolic"), t.n)
                z = cache[(g, t.n)]
                got = z[t.n].coefficient({kappa_var(s): m for s, m in t.multiplicities}) \
                    if isinstance(z[t.n], KappaPolynomial) else 0
                want = table.count(t, g)
                ok = got == want
                report["checks"].append({"n": t.n, "type": str(t), "genus": g, "gf": got,
                                         "enumerated": want, "ok": ok})
                lines.append(f"{'PASS' if ok else 'FAIL'}  n={t.n} {t} g={g}: gf {got}, enumerated {want}")
                if not ok and report["mismatch"] is None:
                    report["mismatch"] = [t.n, str(t), g, str(got), str(want)]
                    failed = True
    else:
        series = {g: genus_series(g, spec, args.n_max) for g in genera}
        for n in range(1, args.n_max + 1):
            table = count_by_genus(n, budget=args.budget, threads=args.threads)
            for g in genera:
                bad = _first_mismatch(n, g, series[g][n], table, spec)
                if bad is None and g == 0 and spec.mode == "symbolic":
                    for t, c in table.by_genus(0).items():
                        if kreweras_count(n, t) != c:
                            bad = (n, t, 0, kreweras_count(n, t), c)
                            break
                ok = bad is None
                report["checks"].append({"n": n, "genus": g, "ok": ok})
                lines.append(f"{'PASS' if ok else 'FAIL'}  n={n} g={g}")
                if bad and report["mismatch"] is None:
                    n_, t_, g_, got, want = bad
                    report["mismatch"] = [n_, str(t_), g_, str(got), str(want)]
                    lines.append(f"first mismatch: n={n_} type={t_} g={g_}: gf {got} != enumerated {want}")
                    failed = True
            if failed:
                break

    if args.fixtures:
        for name, ok in _fixture_checks().items():
            report["checks"].append({"fixture": name, "ok": ok})
            lines.append(f"{'PASS' if ok else 'FAIL'}  fixture {name}")
            failed |= not ok

    report["ok"] = not failed
    report["seconds"] = round(time.time() - t0, 3)
    lines.append("verify: " + ("pass" if not failed else "FAIL") + f" ({report['seconds']} s)")
    _emit(args, report, "\n".join(lines))
    return EXIT_FAIL if failed else EXIT_OK


# -- census --------------------------------------------------------------------------

def cmd_census(args) -> int:
    if args.genus != 2:
        raise PartitionError("the census is implemented for genus 2")
    budget = max(args.budget, 10**10) if args.budget == DEFAULT_BUDGET else args.budget
    table = census_genus2(budget=budget, threads=args.threads)
    _emit(args, table.to_json(), table.to_text())
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------

def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="partgenus",
                                 description="Set partitions by genus: counts, reductions, generating functions.")
    ap.add_argument("--format", choices=("text", "json"), default="text")
    ap.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET,
                    help="maximum number of candidate partitions to enumerate (default %(default)s)")
    ap.add_argument("--threads", type=_positive, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genus", help="genus and permutations of one partition")
    p.add_argument("partition", help='e.g. "1,3,4,6,7|2,5,9|8|10"')
    p.set_defaults(func=cmd_genus)

    p = sub.add_parser("enumerate", help="count, list or orbit-group partitions of [n]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--type", help='partition type, e.g. "2^4" or "1^2 3 5"')
    p.add_argument("--genus", type=int)
    p.add_argument("--singleton-free", action="store_true")
    p.add_argument("--class", dest="cls", choices=CLASSES, default="all")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--orbits", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("reduce", help="reduce a partition to its (semi-)primitive diagram")
    p.add_argument("partition")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gf", help="expand a generating function")
    p.add_argument("--genus", type=int, choices=(0, 1, 2), required=True)
    p.add_argument("--order", type=_positive)
    p.add_argument("--kappa", default="symbolic",
                   help="symbolic, ones, y, doublets, triplets, sf-ones, sf-y or custom=k1,k2,...")
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="check generating functions against enumeration")
    p.add_argument("--n-max", type=_positive, default=10)
    p.add_argument("--genus", type=int, choices=(0, 1, 2))
    p.add_argument("--kappa", default="symbolic")
    p.add_argument("--type", dest="types", action="append",
                   help="spot-check one type (repeatable) instead of all types up to --n-max")
    p.add_argument("--fixtures", action="store_true", help="also compare published expansions")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="(semi-)primitive diagrams per type")
    p.add_argument("--genus", type=int, default=2)
    p.set_defaults(func=cmd_census)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    random.seed(args.seed)
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (PartitionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
