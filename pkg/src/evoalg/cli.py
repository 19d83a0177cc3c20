"""Command-line front-end.

Machine-readable JSON goes to standard output (and to --out when given);
human summaries go to standard error, so stdout stays parseable. Reports are
byte-identical for identical inputs, seeds, and flags other than --threads.

Exit codes: 0 success, 1 parse error, 2 singular input, 3 indeterminate,
4 negative decision (non-isomorphic or failed verification), 5 cap exceeded.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import random
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from .algebra import EvolutionAlgebra
from .digraph import graph_automorphisms
from .errors import (
    CapExceededError,
    DimensionCapError,
    EvoAlgError,
    ParseError,
    SingularMatrixError,
)
from .families import build_family
from .fields import Field, PrimeField, parse_field
from .groups import (
    Cyclic,
    Dihedral,
    MonomialGroup,
    SemidirectCyclic,
    Symmetric,
    Trivial,
    close_generators,
    recognize,
)
from .solver import (
    IsoStatus,
    automorphism_group,
    diagonal_subgroup,
    isomorphism,
)
from .suites import SUITES, run_suite

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_SINGULAR = 2
EXIT_INDETERMINATE = 3
EXIT_NEGATIVE = 4
EXIT_CAP = 5

CENSUS_EXHAUSTIVE_CAP = 10**8
CENSUS_CHUNK = 64
DIAG_ELEMENT_REPORT_CAP = 128


def _emit(report: dict, args) -> None:
    text = json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"
    sys.stdout.write(text)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _load_algebra(path: str, field_text: str | None) -> EvolutionAlgebra:
    field = parse_field(field_text) if field_text else None
    return EvolutionAlgebra.load(path, field)


def _group_generators(group: MonomialGroup) -> list[dict]:
    """A small generating set found greedily; fine at these orders."""
    from .groups import MonomialMap

    gens: list = []
    have = {MonomialMap.identity(group.field, group.n)}
    for element in group.elements:
        if element not in have:
            gens.append(element)
            have = set(close_generators(gens).elements)
            if len(have) == group.order:
                break
    return [g.to_json() for g in gens]


def _recognized_names(group: MonomialGroup) -> list[str]:
    if not group.closed:
        return []
    names = []
    order = group.order
    targets = [Trivial(), Cyclic(order)]
    k = 2
    while math.factorial(k) < order:
        k += 1
    if math.factorial(k) == order:
        targets.append(Symmetric(k))
    if order % 2 == 0 and order >= 6:
        targets.append(Dihedral(order // 2))
    diagonal = len(group.diagonal_part())
    if diagonal > 1 and order % diagonal == 0 and order > diagonal:
        targets.append(SemidirectCyclic(diagonal, order // diagonal))
    for target in targets:
        if recognize(group, target).matched:
            names.append(target.name())
    return names


# ---------------------------------------------------------------------------
# subcommands


def cmd_aut(args) -> int:
    alg = _load_algebra(args.infile, args.field).require_idempotent()
    t0 = time.monotonic()
    group = automorphism_group(alg, threads=args.threads)
    lattice = diagonal_subgroup(alg)
    graph_count = len(graph_automorphisms(alg.digraph))
    report = {
        "command": "aut",
        "status": "ok" if group.complete else "indeterminate",
        "field": alg.field.descriptor(),
        "n": alg.n,
        "order": group.order,
        "complete": group.complete,
        "recognized": _recognized_names(group),
        "generators": _group_generators(group) if group.complete else [],
        "diagonal_order": lattice.order,
        "t_A": alg.min_transversal_order,
        "graph_automorphism_count": graph_count,
        "conductor_sufficient": lattice.conductor_sufficient,
    }
    _emit(report, args)
    _say(
        f"|Aut| = {group.order}{'' if group.complete else ' (partial)'}, "
        f"|D| = {lattice.order}, t_A = {alg.min_transversal_order}, "
        f"|Aut(pattern)| = {graph_count}, names: {report['recognized'] or '-'} "
        f"[{time.monotonic() - t0:.2f}s]"
    )
    return EXIT_OK if group.complete else EXIT_INDETERMINATE


def cmd_diag(args) -> int:
    alg = _load_algebra(args.infile, args.field).require_idempotent()
    lattice = diagonal_subgroup(alg)
    report = {
        "command": "diag",
        "status": "ok",
        "field": alg.field.descriptor(),
        "n": alg.n,
        "order": lattice.order,
        "modulus": lattice.modulus,
        "generator": str(lattice.generator),
        "exponent_generators": [
            {"exponents": list(vec), "order": order}
            for vec, order in zip(lattice.exponent_generators, lattice.generator_orders)
        ],
        "t_A": alg.min_transversal_order,
        "conductor_sufficient": lattice.conductor_sufficient,
    }
    if lattice.order <= DIAG_ELEMENT_REPORT_CAP:
        report["elements"] = [m.to_json() for m in lattice.maps()]
    _emit(report, args)
    _say(f"|D| = {lattice.order} over {alg.field.descriptor()}")
    return EXIT_OK


def cmd_graph_aut(args) -> int:
    alg = _load_algebra(args.infile, args.field)
    auts = graph_automorphisms(alg.digraph)
    report = {
        "command": "graph-aut",
        "status": "ok",
        "n": alg.n,
        "count": len(auts),
        "automorphisms": [a.to_json() for a in auts],
    }
    _emit(report, args)
    _say(f"|Aut(pattern)| = {len(auts)}")
    return EXIT_OK


def cmd_iso(args) -> int:
    field = parse_field(args.field) if args.field else None
    a = EvolutionAlgebra.load(args.infile, field).require_idempotent()
    b = EvolutionAlgebra.load(args.bfile, field).require_idempotent()
    result = isomorphism(a, b)
    report = {
        "command": "iso",
        "status": result.status.value,
        "field": a.field.descriptor(),
        "n": a.n,
        "sigma_candidates_exhausted": result.candidates_exhausted,
    }
    if result.found:
        report["certificate"] = result.certificate
    if result.unsolved:
        report["unsolved"] = list(result.unsolved)
    _emit(report, args)
    _say(f"{result.status.value} after {result.candidates_exhausted} pattern maps")
    if result.found:
        return EXIT_OK
    if result.status is IsoStatus.INDETERMINATE:
        return EXIT_INDETERMINATE
    return EXIT_NEGATIVE


def cmd_make(args) -> int:
    field = parse_field(args.field)
    alg, info = build_family(args.family, field)
    alg.dump(args.out)
    report = {
        "command": "make",
        "status": "ok",
        "written": args.out,
        "field": field.descriptor(),
        "n": alg.n,
        "determinant": str(alg.det),
    }
    report.update(info)
    # --out is the matrix destination here; the report goes to stdout only
    _emit(report, argparse.Namespace(out=None))
    _say(f"wrote {args.out} ({info['family']}, n = {alg.n})")
    return EXIT_OK


def cmd_verify(args) -> int:
    result = run_suite(args.suite)
    for assertion in result.assertions:
        status = "ok" if assertion.ok else "FAIL"
        detail = f" ({assertion.detail})" if assertion.detail and not assertion.ok else ""
        _say(f"  [{status}] {assertion.name}{detail}")
    report = {
        "command": "verify",
        "suite": result.suite,
        "status": "ok" if result.ok else "failed",
        "passed": result.passed,
        "failed": result.failed,
        "assertions": [
            {"name": a.name, "ok": a.ok, "detail": a.detail}
            for a in result.assertions
        ],
    }
    _emit(report, args)
    _say(f"suite {result.suite}: {result.passed} passed, {result.failed} failed")
    if result.ok:
        return EXIT_OK
    return EXIT_INDETERMINATE if result.any_indeterminate else EXIT_NEGATIVE


def _census_entry(field: Field, n: int, flat: tuple[int, ...]):
    alg = EvolutionAlgebra(
        field, [[flat[i * n + j] for j in range(n)] for i in range(n)]
    )
    if not alg.is_idempotent:
        return None
    group = automorphism_group(alg)
    lattice = diagonal_subgroup(alg)
    return group.order, lattice.order


def cmd_census(args) -> int:
    field = parse_field(args.field)
    if not isinstance(field, PrimeField):
        raise ParseError("census runs over prime fields GF(p)")
    n = args.n
    if n is None or n < 1:
        raise ParseError("census needs --n >= 1")
    p = field.p
    mode = args.mode
    t0 = time.monotonic()
    if mode == "exhaustive":
        total = p ** (n * n)
        if total > CENSUS_EXHAUSTIVE_CAP:
            raise CapExceededError(
                f"exhaustive census of {total} matrices exceeds the cap"
            )
        source = itertools.product(range(p), repeat=n * n)
        samples = None
    else:
        if not mode.startswith("random:"):
            raise ParseError("census --mode must be exhaustive or random:<k>")
        try:
            samples = int(mode.split(":", 1)[1])
        except ValueError as exc:
            raise ParseError(f"bad sample count in {mode!r}") from exc
        rng = random.Random(args.seed)

        def random_nonsingular():
            # rejection sampling keeps exactly `samples` nonsingular matrices
            while True:
                flat = tuple(rng.randrange(p) for _ in range(n * n))
                alg = EvolutionAlgebra(
                    field, [[flat[i * n + j] for j in range(n)] for i in range(n)]
                )
                if alg.is_idempotent:
                    return flat

        source = (random_nonsingular() for _ in range(samples))

    flats = [tuple(flat) for flat in source]
    chunks = [flats[i : i + CENSUS_CHUNK] for i in range(0, len(flats), CENSUS_CHUNK)]

    def work(chunk):
        return [_census_entry(field, n, flat) for flat in chunk]

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            chunk_results = list(pool.map(work, chunks))
    else:
        chunk_results = [work(chunk) for chunk in chunks]

    aut_hist: dict[int, int] = {}
    diag_hist: dict[int, int] = {}
    nonsingular = 0
    for chunk in chunk_results:
        for entry in chunk:
            if entry is None:
                continue
            nonsingular += 1
            aut_order, diag_order = entry
            aut_hist[aut_order] = aut_hist.get(aut_order, 0) + 1
            diag_hist[diag_order] = diag_hist.get(diag_order, 0) + 1

    report = {
        "command": "census",
        "status": "ok",
        "field": field.descriptor(),
        "n": n,
        "mode": "exhaustive" if mode == "exhaustive" else "random",
        "scanned": len(flats),
        "nonsingular": nonsingular,
        "aut_histogram": {str(k): v for k, v in sorted(aut_hist.items())},
        "diag_histogram": {str(k): v for k, v in sorted(diag_hist.items())},
    }
    if samples is not None:
        report["samples"] = samples
        report["seed"] = args.seed
    _emit(report, args)
    _say(
        f"census: {nonsingular} algebras over {field.descriptor()}, n = {n} "
        f"[{time.monotonic() - t0:.2f}s, {args.threads} threads]"
    )
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="evoalg",
        description=(
            "Exact automorphism groups, diagonal subgroups, and isomorphism "
            "certificates for idempotent evolution algebras."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, infile=True):
        if infile:
            p.add_argument("--in", dest="infile", required=True, help="matrix JSON file")
        p.add_argument("--field", help="field descriptor: Q, GF(p), Q(zeta_m)")
        p.add_argument("--out", help="also write the JSON report to this file")

    p_aut = sub.add_parser("aut", help="automorphism group of an algebra")
    add_common(p_aut)
    p_aut.add_argument("--threads", type=int, default=1)
    p_aut.set_defaults(func=cmd_aut)

    p_diag = sub.add_parser("diag", help="diagonal automorphism subgroup")
    add_common(p_diag)
    p_diag.set_defaults(func=cmd_diag)

    p_gaut = sub.add_parser("graph-aut", help="pattern automorphisms of the digraph")
    add_common(p_gaut)
    p_gaut.set_defaults(func=cmd_graph_aut)

    p_iso = sub.add_parser("iso", help="isomorphism test with certificate")
    add_common(p_iso)
    p_iso.add_argument("--b", dest="bfile", required=True, help="second matrix JSON file")
    p_iso.set_defaults(func=cmd_iso)

    p_make = sub.add_parser("make", help="construct a family member")
    p_make.add_argument("--family", required=True, help=(
        "complete:n=4 | twoparam:n=4,a=1,b=2 | cycle:n=3,b=128;1;1 "
        "| frucht:<graph.json>"
    ))
    p_make.add_argument("--field", default="Q")
    p_make.add_argument("--out", required=True)
    p_make.set_defaults(func=cmd_make)

    p_verify = sub.add_parser("verify", help="run a named verification suite")
    p_verify.add_argument("--suite", required=True, choices=sorted(SUITES))
    p_verify.add_argument("--out", help="also write the JSON report to this file")
    p_verify.set_defaults(func=cmd_verify)

    p_census = sub.add_parser("census", help="classify matrices over GF(p)")
    p_census.add_argument("--field", required=True)
    p_census.add_argument("--n", type=int, required=True)
    p_census.add_argument("--mode", default="exhaustive", help="exhaustive | random:<k>")
    p_census.add_argument("--seed", type=int, default=0)
    p_census.add_argument("--threads", type=int, default=1)
    p_census.add_argument("--out", help="also write the JSON report to this file")
    p_census.set_defaults(func=cmd_census)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        _say(f"error: {exc}")
        return EXIT_PARSE
    except SingularMatrixError as exc:
        _say(f"error: {exc}")
        return EXIT_SINGULAR
    except (DimensionCapError, CapExceededError) as exc:
        _say(f"error: {exc}")
        return EXIT_CAP
    except EvoAlgError as exc:
        _say(f"error: {exc}")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
