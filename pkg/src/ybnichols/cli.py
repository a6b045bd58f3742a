"""Command-line front end.

Commands: verify | orbits | dims | relations | phi | catalog.
Inputs are catalog names or JSON files (a bare solution table, or a
coefficient file with "solution", "cyclotomic_order" and "R" keys).
Exit codes: 0 all checks pass, 1 mathematical mismatch, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import catalog as cat
from .nichols import (
    CapExceeded,
    CoefficientSystem,
    HexagonViolation,
    HypothesesNotMet,
    canonical_coefficients,
    graded_dims,
    orbit_count_oracle,
    relation_image,
    theorem_hypotheses,
)
from .orbits import orbit_census
from .ybe import (
    NotInvolutive,
    SetSolution,
    TooLarge,
    decompose,
    diagonal,
    phi_invariant,
    verify_solution,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _emit(data, as_json: bool) -> None:
    if as_json:
        print(json.dumps(data, indent=2))


def _load_json_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON: {exc}") from exc
    except OSError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _resolve_solution(target: str) -> tuple[SetSolution, cat.CatalogEntry | None]:
    """A catalog name or a JSON file path -> (solution, entry-or-None)."""
    if target in cat.catalog_names() or target in ("w1-grana", "w6-grana"):
        entry = cat.build_entry(target)
        return entry.solution, entry
    if Path(target).exists():
        data = _load_json_file(target)
        if "solution" in data:
            data = data["solution"]
        try:
            return SetSolution.from_json(data), None
        except (ValueError, KeyError, TypeError, IndexError) as exc:
            raise InputError(f"{target}: not a solution file: {exc}") from exc
    raise InputError(f"{target!r} is neither a catalog name nor an existing file")


def _parse_overrides(args) -> dict:
    overrides = {}
    for item in args.param or []:
        if "=" not in item:
            raise InputError(f"--param expects name=value, got {item!r}")
        key, _, value = item.partition("=")
        try:
            overrides[key.strip()] = cat.parse_scalar(value.strip())
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    if getattr(args, "q", None):
        try:
            overrides["q"] = cat.parse_scalar(args.q)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    return overrides


def _resolve_system(target: str, args) -> tuple[CoefficientSystem, cat.CatalogEntry | None]:
    """Resolve to a validated coefficient system.

    Catalog names honor --q / --param overrides.  A coefficient JSON file is
    taken verbatim; a bare solution file needs --q and gets the canonical
    assignment (q on fixed pairs, 1 elsewhere).
    """
    overrides = _parse_overrides(args)
    if target in cat.catalog_names() or target in ("w1-grana", "w6-grana"):
        try:
            entry = cat.build_entry(target, overrides or None)
        except (cat.ConstraintViolation, HexagonViolation) as exc:
            raise InputError(str(exc)) from exc
        return entry.system, entry
    if Path(target).exists():
        data = _load_json_file(target)
        if "R" in data:
            try:
                return CoefficientSystem.from_json(data), None
            except (HexagonViolation, ValueError, KeyError) as exc:
                raise InputError(f"{target}: {exc}") from exc
        solution = SetSolution.from_json(data)
        if not getattr(args, "q", None):
            raise InputError("a bare solution file needs --q for the canonical braiding")
        q = cat.parse_scalar(args.q)
        try:
            return canonical_coefficients(solution, q), None
        except (HexagonViolation, NotInvolutive) as exc:
            raise InputError(f"canonical coefficients rejected: {exc}") from exc
    raise InputError(f"{target!r} is neither a catalog name nor an existing file")


# ---------------------------------------------------------------------------
# commands


def cmd_verify(args) -> int:
    solution, entry = _resolve_solution(args.target)
    report = verify_solution(solution, threads=args.threads)
    payload = {
        "name": entry.name if entry else args.target,
        "size": solution.size,
        "is_ybe": report.is_ybe,
        "is_nondegenerate": report.is_nondegenerate,
        "is_involutive": report.is_involutive,
    }
    if not report.is_ybe:
        payload["ybe_failures"] = [
            {"triple": list(t), "lhs": list(lhs), "rhs": list(rhs)}
            for t, lhs, rhs in report.ybe_failures[:10]
        ]
    if not report.is_nondegenerate:
        payload["nondegeneracy_failures"] = [list(f) for f in report.nondegeneracy_failures]
    if report.is_involutive and report.is_nondegenerate:
        D = diagonal(solution)
        payload["diagonal"] = list(D.forward)
        try:
            parts = decompose(solution)
        except TooLarge:
            parts = None
            payload["decomposition"] = "skipped (size above search bound)"
        if parts is None:
            payload.setdefault("decomposition", None)
        else:
            payload["decomposition"] = [list(parts[0]), list(parts[1])]
    payload["phi"] = phi_invariant(solution).to_json()
    if args.json:
        _emit(payload, True)
    else:
        print(f"solution {payload['name']} (size {solution.size})")
        print(f"  Yang-Baxter identity : {'ok' if report.is_ybe else 'FAIL'}")
        if not report.is_ybe:
            t, lhs, rhs = report.ybe_failures[0]
            print(f"    first failing triple {t}: {lhs} != {rhs}")
        print(f"  non-degenerate       : {'ok' if report.is_nondegenerate else 'FAIL'}")
        print(f"  involutive           : {'yes' if report.is_involutive else 'no'}")
        if "diagonal" in payload:
            print(f"  diagonal D           : {payload['diagonal']}")
            dec = payload.get("decomposition")
            print(f"  decomposition        : {dec if dec else 'indecomposable'}")
        print(f"  phi invariant        : l = {payload['phi']['l']}")
    return EXIT_OK if (report.is_ybe and report.is_nondegenerate) else EXIT_MISMATCH


def cmd_orbits(args) -> int:
    if args.n < 1:
        raise InputError("degree n must be >= 1")
    solution, entry = _resolve_solution(args.target)
    try:
        census = orbit_census(args.n, solution, cap=args.cap, witnesses=args.witness)
    except NotInvolutive as exc:
        raise InputError(f"orbit census needs an involutive solution: {exc}") from exc
    except TooLarge as exc:
        raise InputError(str(exc)) from exc
    payload = census.to_json()
    if args.witness:
        payload["orbit_list"] = [
            {
                "representative": "".join(map(str, o.representative)),
                "lambda": list(o.partition.parts),
                "size": o.size,
                "witness": "".join(map(str, o.witness)),
            }
            for o in census.orbits
        ]
    if args.csv:
        print("lambda,count,size")
        for row in payload["orbits"]:
            print(f"\"{' '.join(map(str, row['lambda']))}\",{row['count']},{row['size']}")
    elif args.json:
        _emit(payload, True)
    else:
        print(f"degree {args.n} census on {entry.name if entry else args.target}: "
              f"{census.orbit_count} orbits")
        for row in payload["orbits"]:
            print(f"  lambda={tuple(row['lambda'])}  count={row['count']}  size={row['size']}")
        if args.witness:
            for o in payload["orbit_list"]:
                print(f"  orbit {o['representative']}  lambda={tuple(o['lambda'])}"
                      f"  witness {o['witness']}")
    return EXIT_OK


def cmd_dims(args) -> int:
    system, entry = _resolve_system(args.target, args)
    mode = "auto"
    if args.exact:
        mode = "exact"
    elif args.mod:
        mode = "modular"
    primes = args.mod_primes
    oracle = None
    try:
        hyp = theorem_hypotheses(system)
        if hyp.finite_type:
            oracle = lambda k: orbit_count_oracle(system, k)
    except NotInvolutive:
        pass
    try:
        graded = graded_dims(
            system,
            cap=args.cap,
            mode=mode,
            exact_cap=args.exact_cap,
            primes=primes,
            oracle=oracle,
        )
    except CapExceeded as exc:
        raise InputError(str(exc)) from exc
    payload = graded.to_json()
    if entry is not None:
        payload["name"] = entry.name
        payload["expected_total"] = entry.expected_total
    if args.json:
        _emit(payload, True)
    else:
        name = entry.name if entry else args.target
        print(f"graded dimensions for {name}: {list(graded.dims)}")
        if graded.total is not None:
            print(f"  total: {graded.total}")
        else:
            print(f"  truncated at cap (no vanishing degree witnessed)")
        for rec in graded.provenance:
            extra = ""
            if rec.primes:
                extra = f"  primes={list(rec.primes)} agreed={rec.agreed}"
            if rec.escalated:
                extra += "  escalated-to-exact"
            print(f"  degree {rec.degree}: dim {rec.dim} [{rec.mode}]{extra}")
    if args.expect:
        if entry is None:
            raise InputError("--expect needs a catalog entry")
        if not entry.point_ok or entry.expected_total is None:
            print(f"no expectation at this parameter point ({entry.expected_note})")
            return EXIT_MISMATCH
        if graded.total != entry.expected_total:
            print(f"MISMATCH: computed total {graded.total}, expected {entry.expected_total}")
            return EXIT_MISMATCH
        print(f"expected total {entry.expected_total}: ok")
    return EXIT_OK


def cmd_relations(args) -> int:
    system, entry = _resolve_system(args.target, args)
    if entry is None:
        raise InputError("relations are catalog data; give a catalog name")
    if not entry.relations:
        raise InputError(
            f"{entry.name} has no relation list at this parameter point"
            f" ({entry.expected_note})"
        )
    failures = 0
    results = []
    for label, terms in entry.relations:
        image = relation_image(system, terms)
        nonzero = sum(1 for x in image if x)
        ok = nonzero == 0
        failures += 0 if ok else 1
        results.append({"relation": label, "ok": ok, "image_nonzero_coords": nonzero})
        if not args.json:
            status = "ok" if ok else f"FAIL ({nonzero} nonzero image coordinates)"
            print(f"  {label}: {status}")
    if args.json:
        _emit({"name": entry.name, "relations": results}, True)
    else:
        print(f"{len(entry.relations) - failures}/{len(entry.relations)} relations pass")
    return EXIT_OK if failures == 0 else EXIT_MISMATCH


def cmd_phi(args) -> int:
    solution, entry = _resolve_solution(args.target)
    phi = phi_invariant(solution)
    if args.json:
        _emit({"name": entry.name if entry else args.target, **phi.to_json()}, True)
    else:
        print(f"phi invariant of {entry.name if entry else args.target}: l = {list(phi.l_vector)}"
              f"  (orbit sizes {list(phi.sizes)})")
    return EXIT_OK


def cmd_catalog(args) -> int:
    rows = []
    for name in cat.catalog_names():
        entry = cat.build_entry(name)
        rows.append(
            {
                "name": name,
                "size": entry.solution.size,
                "involutive": entry.involutive,
                "cyclotomic_order": entry.system.order,
                "expected_total": entry.expected_total,
                "params": {k: repr(v) for k, v in sorted(entry.params.items())},
                "notes": entry.notes,
            }
        )
    if args.json:
        _emit(rows, True)
    else:
        for row in rows:
            print(f"{row['name']:10s} m={row['size']}  involutive={str(row['involutive']):5s}"
                  f"  expected_total={row['expected_total']}  {row['notes']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument plumbing


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="machine-readable output")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker cap for data-parallel verification")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for any randomized checks (reproducibility)")
    parser.add_argument("--mod-primes", type=_parse_primes, default=None,
                        help="comma-separated primes for modular arithmetic")
    parser.add_argument("--exact-cap", type=int, default=4096,
                        help="largest tensor dimension handled exactly by default")


def _parse_primes(text: str):
    try:
        primes = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from exc
    if len(primes) < 1:
        raise argparse.ArgumentTypeError("need at least one prime")
    return primes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ybnichols",
        description="Set-theoretic Yang-Baxter solutions and the graded "
        "dimensions and relations of their Nichols algebras, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a solution table and report its invariants")
    p.add_argument("target", help="catalog name or solution JSON file")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orbits", help="orbit census of the word action at one degree")
    p.add_argument("target")
    p.add_argument("-n", type=int, required=True, help="word length")
    p.add_argument("--witness", action="store_true",
                   help="list one canonical block word per orbit")
    p.add_argument("--csv", action="store_true", help="CSV census table")
    p.add_argument("--cap", type=int, default=10 ** 7,
                   help="largest m^n enumerated exhaustively")
    _add_common(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("dims", help="graded dimensions of the Nichols algebra")
    p.add_argument("target")
    p.add_argument("--q", default=None, help='braiding parameter, e.g. "-1", "zeta3", "2"')
    p.add_argument("--param", action="append", metavar="NAME=VALUE",
                   help="override one catalog parameter (repeatable)")
    p.add_argument("--cap", type=int, default=16, help="degree cap")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", help="force exact arithmetic")
    group.add_argument("--mod", action="store_true", help="force modular arithmetic")
    p.add_argument("--expect", action="store_true",
                   help="compare against the catalog expectation (exit 1 on mismatch)")
    _add_common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("relations", help="check the published defining relations")
    p.add_argument("target")
    p.add_argument("--q", default=None)
    p.add_argument("--param", action="append", metavar="NAME=VALUE")
    _add_common(p)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("phi", help="cyclic-orbit invariant of r on X x X")
    p.add_argument("target")
    _add_common(p)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("catalog", help="list built-in examples")
    _add_common(p)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (cat.UnknownName, cat.ConstraintViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesesNotMet as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
